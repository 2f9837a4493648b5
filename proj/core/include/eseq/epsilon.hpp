#pragma once

// The rational sequence eps_0, eps_1, ... defined by
//
//   sum_{l>=0} x^l/(2l+1)!  =  sum_{i>=0} eps_i h(x)^i,   h(x) = 2cosh(sqrt x) - 2,
//
// computed three independent ways:
//   * Recursion:        solve the defining identity order by order;
//   * SeriesInversion:  Taylor coefficients of 1/f'(x), f the inverse of h;
//   * CompositionSum:   the explicit sum over compositions of l of
//                       (-1)^(j+l) prod (i_t!)^2 / (2 i_t + 1)!.
// SeriesInversion is the production path; the other two are oracles.

#include <cstddef>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string_view>
#include <vector>

#include "eseq/exact.hpp"

namespace eseq {

enum class Method { Recursion, SeriesInversion, CompositionSum };

std::string_view method_name(Method m);
/// Accepts "recur", "series", "compsum" (the CLI spellings) and the long
/// names returned by method_name().
std::optional<Method> parse_method(std::string_view name);

enum class CompositionStrategy { Partitions, NaiveCompositions };

/// Naive enumeration visits 2^(l-1) compositions; refuse beyond this.
inline constexpr unsigned kNaiveCompositionLimit = 25;

struct EpsilonTable {
  std::size_t max_order = 0;
  std::vector<Rational> values;  // values[0] == 1
  Method method = Method::SeriesInversion;

  const Rational& operator[](std::size_t l) const { return values.at(l); }
};

EpsilonTable epsilon_recursion(std::size_t max_order);
EpsilonTable epsilon_series(std::size_t max_order);
EpsilonTable epsilon_composition_table(std::size_t max_order,
                                       CompositionStrategy strategy = CompositionStrategy::Partitions);

/// eps_l for l >= 1 via the composition sum. Throws std::invalid_argument
/// for l == 0 and for the naive strategy above kNaiveCompositionLimit.
Rational epsilon_composition_sum(unsigned l, CompositionStrategy strategy = CompositionStrategy::Partitions);

EpsilonTable compute_epsilon_table(std::size_t max_order, Method method);

/// Residual of the defining identity at order l for the table's values:
/// 1/(2l+1)! - sum_{i=1..l} eps_i [x^l] h^i. Zero for a correct table.
/// The h-power coefficients come from an independent enumeration over
/// partitions of l, so the cost grows with p(l).
Rational defining_identity_residual(const EpsilonTable& table, unsigned l);

/// Lazily extended cache over epsilon_series. Reads of an already computed
/// range run concurrently; extension takes an exclusive lock and rebuilds
/// the table from scratch.
class EpsilonCache {
 public:
  Rational get(std::size_t l);
  /// Copy of eps_0..eps_n, extending the cache if needed.
  std::vector<Rational> prefix(std::size_t n);
  std::size_t max_order() const;

 private:
  void ensure(std::size_t n);

  mutable std::shared_mutex mutex_;
  std::vector<Rational> values_{Rational(1)};
};

/// Process-wide cache used by the accessor below and by module gauge.
EpsilonCache& default_epsilon_cache();

/// Cached eps_l.
Rational epsilon(std::size_t l);

}  // namespace eseq
