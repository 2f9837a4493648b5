#include "eseq/partitions.hpp"

#include <vector>

namespace eseq {

namespace {

void partitions_rec(unsigned remaining, unsigned max_part, std::vector<unsigned>& parts, const PartsVisitor& visit) {
  if (remaining == 0) {
    visit(parts);
    return;
  }
  for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
    parts.push_back(part);
    partitions_rec(remaining - part, part, parts, visit);
    parts.pop_back();
  }
}

void compositions_rec(unsigned remaining, std::vector<unsigned>& parts, const PartsVisitor& visit) {
  if (remaining == 0) {
    visit(parts);
    return;
  }
  for (unsigned part = 1; part <= remaining; ++part) {
    parts.push_back(part);
    compositions_rec(remaining - part, parts, visit);
    parts.pop_back();
  }
}

}  // namespace

void for_each_partition(unsigned n, const PartsVisitor& visit) {
  std::vector<unsigned> parts;
  parts.reserve(n);
  partitions_rec(n, n, parts, visit);
}

void for_each_composition(unsigned n, const PartsVisitor& visit) {
  std::vector<unsigned> parts;
  parts.reserve(n);
  compositions_rec(n, parts, visit);
}

Integer orderings(std::span<const unsigned> parts) {
  Integer result = factorial(parts.size());
  std::size_t i = 0;
  while (i < parts.size()) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    result /= factorial(j - i);
    i = j;
  }
  return result;
}

Integer partition_count(unsigned n) {
  std::vector<Integer> p(n + 1);
  p[0] = 1;
  for (unsigned m = 1; m <= n; ++m) {
    Integer acc = 0;
    for (long k = 1;; ++k) {
      const long g1 = k * (3 * k - 1) / 2;
      const long g2 = k * (3 * k + 1) / 2;
      if (g1 > static_cast<long>(m)) break;
      const bool plus = (k % 2 == 1);
      if (plus) acc += p[m - g1]; else acc -= p[m - g1];
      if (g2 <= static_cast<long>(m)) {
        if (plus) acc += p[m - g2]; else acc -= p[m - g2];
      }
    }
    p[m] = acc;
  }
  return p[n];
}

}  // namespace eseq
