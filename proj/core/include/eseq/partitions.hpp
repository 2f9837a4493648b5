#pragma once

// Enumeration of integer partitions and compositions.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>

#include "eseq/exact.hpp"

namespace eseq {

using PartsVisitor = std::function<void(std::span<const unsigned>)>;

/// Visits every partition of n as a non-increasing list of parts. n = 0
/// yields the single empty partition.
void for_each_partition(unsigned n, const PartsVisitor& visit);

/// Visits every composition (ordered tuple of positive parts) of n. There
/// are 2^(n-1) of them for n >= 1.
void for_each_composition(unsigned n, const PartsVisitor& visit);

/// Number of distinct orderings of a multiset of parts, j!/(m_1! m_2! ...),
/// where j is the number of parts and m_t the multiplicities. Equal parts
/// must be adjacent, as they are in a partition.
Integer orderings(std::span<const unsigned> parts);

/// p(n), by the standard pentagonal recurrence.
Integer partition_count(unsigned n);

}  // namespace eseq
