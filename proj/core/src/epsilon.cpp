#include "eseq/epsilon.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "eseq/partitions.hpp"
#include "eseq/series.hpp"

namespace eseq {

std::string_view method_name(Method m) {
  switch (m) {
    case Method::Recursion: return "recursion";
    case Method::SeriesInversion: return "series-inversion";
    case Method::CompositionSum: return "composition-sum";
  }
  return "?";
}

std::optional<Method> parse_method(std::string_view name) {
  if (name == "recur" || name == "recursion") return Method::Recursion;
  if (name == "series" || name == "series-inversion") return Method::SeriesInversion;
  if (name == "compsum" || name == "composition-sum") return Method::CompositionSum;
  return std::nullopt;
}

EpsilonTable epsilon_recursion(std::size_t max_order) {
  const std::size_t n = max_order;
  EpsilonTable table{n, std::vector<Rational>(n + 1), Method::Recursion};
  table.values[0] = 1;
  if (n == 0) return table;

  // Work with T(i, l) = (2l)! [x^l] h(x)^i, which is an integer:
  //   T(i, l) = sum_j 2 C(2l, 2j) T(i-1, l-j),   T(0, 0) = 1.
  // [x^i] h^i = 1, so eps_l is pinned by the residual of the lower terms.
  std::vector<std::vector<Integer>> two_binom(n + 1);
  for (std::size_t l = 1; l <= n; ++l) {
    two_binom[l].resize(l + 1);
    for (std::size_t j = 1; j <= l; ++j) two_binom[l][j] = 2 * binomial(2 * l, 2 * j);
  }

  std::vector<Integer> prev(n + 1, Integer(0));
  std::vector<Integer> cur(n + 1, Integer(0));
  prev[0] = 1;
  std::vector<Rational> lower_terms(n + 1);  // sum_{i<l} eps_i T(i, l)

  for (std::size_t i = 1; i <= n; ++i) {
    const Rational eps = Rational(Integer(1), factorial(2 * i + 1)) - lower_terms[i] / Rational(factorial(2 * i));
    table.values[i] = eps;

    std::fill(cur.begin(), cur.end(), Integer(0));
    for (std::size_t l = i; l <= n; ++l) {
      Integer& acc = cur[l];
      for (std::size_t j = 1; j + (i - 1) <= l; ++j) {
        mpz_addmul(acc.get_mpz_t(), two_binom[l][j].get_mpz_t(), prev[l - j].get_mpz_t());
      }
    }
    for (std::size_t l = i + 1; l <= n; ++l) lower_terms[l].add_product(eps, Rational(cur[l]));
    std::swap(prev, cur);
  }
  return table;
}

EpsilonTable epsilon_series(std::size_t max_order) {
  const PowerSeries g = ps_inverse(series_f_prime(max_order));
  const auto c = g.coefficients();
  return EpsilonTable{max_order, std::vector<Rational>(c.begin(), c.end()), Method::SeriesInversion};
}

namespace {

// c_i = (-1)^i (i!)^2 / (2i+1)!, the coefficients of f'(x) - 1.
std::vector<Rational> signed_central_ratios(unsigned l) {
  std::vector<Rational> c(l + 1);
  for (unsigned i = 1; i <= l; ++i) {
    const Integer& f = factorial(i);
    Rational r(Integer(f * f), factorial(2 * i + 1));
    c[i] = (i % 2 == 0) ? r : -r;
  }
  return c;
}

void naive_rec(unsigned remaining, unsigned parts, const Rational& prod, const std::vector<Rational>& c, Rational& sum) {
  if (remaining == 0) {
    if (parts % 2 == 0) sum += prod; else sum -= prod;
    return;
  }
  for (unsigned part = 1; part <= remaining; ++part) {
    naive_rec(remaining - part, parts + 1, prod * c[part], c, sum);
  }
}

}  // namespace

Rational epsilon_composition_sum(unsigned l, CompositionStrategy strategy) {
  if (l == 0) throw std::invalid_argument("composition sum is defined for l >= 1");
  const std::vector<Rational> c = signed_central_ratios(l);
  Rational sum;
  switch (strategy) {
    case CompositionStrategy::NaiveCompositions:
      if (l > kNaiveCompositionLimit) {
        throw std::invalid_argument("naive composition enumeration refused for l = " + std::to_string(l) +
                                    " (limit " + std::to_string(kNaiveCompositionLimit) + ")");
      }
      naive_rec(l, 0, Rational(1), c, sum);
      break;
    case CompositionStrategy::Partitions:
      // Each partition stands for orderings(parts) compositions with the
      // same product; (-1)^(j+l) prod |c| == (-1)^j prod c.
      for_each_partition(l, [&](std::span<const unsigned> parts) {
        Rational term(orderings(parts));
        std::size_t i = 0;
        while (i < parts.size()) {
          std::size_t j = i;
          while (j < parts.size() && parts[j] == parts[i]) ++j;
          term *= c[parts[i]].pow(static_cast<long>(j - i));
          i = j;
        }
        if (parts.size() % 2 == 0) sum += term; else sum -= term;
      });
      break;
  }
  return sum;
}

EpsilonTable epsilon_composition_table(std::size_t max_order, CompositionStrategy strategy) {
  EpsilonTable table{max_order, std::vector<Rational>(max_order + 1), Method::CompositionSum};
  table.values[0] = 1;
  for (std::size_t l = 1; l <= max_order; ++l) {
    table.values[l] = epsilon_composition_sum(static_cast<unsigned>(l), strategy);
  }
  return table;
}

EpsilonTable compute_epsilon_table(std::size_t max_order, Method method) {
  switch (method) {
    case Method::Recursion: return epsilon_recursion(max_order);
    case Method::SeriesInversion: return epsilon_series(max_order);
    case Method::CompositionSum: return epsilon_composition_table(max_order);
  }
  throw std::invalid_argument("unknown method");
}

Rational defining_identity_residual(const EpsilonTable& table, unsigned l) {
  if (l > table.max_order) throw std::out_of_range("order beyond table");
  if (l == 0) return Rational(1) - table[0];
  // [x^l] h^i = 2^i sum over compositions (j_1..j_i) of l of prod 1/(2 j_t)!,
  // grouped by partition.
  std::vector<Rational> power_coeff(l + 1);
  for_each_partition(l, [&](std::span<const unsigned> parts) {
    Rational term(orderings(parts));
    for (unsigned part : parts) term /= Rational(factorial(2 * part));
    power_coeff[parts.size()] += term;
  });
  Rational rhs;
  for (unsigned i = 1; i <= l; ++i) rhs.add_product(table[i], power_coeff[i] * Rational(Integer(Integer(1) << i)));
  return Rational(Integer(1), factorial(2 * l + 1)) - rhs;
}

Rational EpsilonCache::get(std::size_t l) {
  ensure(l);
  std::shared_lock lock(mutex_);
  return values_[l];
}

std::vector<Rational> EpsilonCache::prefix(std::size_t n) {
  ensure(n);
  std::shared_lock lock(mutex_);
  return std::vector<Rational>(values_.begin(), values_.begin() + static_cast<std::ptrdiff_t>(n) + 1);
}

std::size_t EpsilonCache::max_order() const {
  std::shared_lock lock(mutex_);
  return values_.size() - 1;
}

void EpsilonCache::ensure(std::size_t n) {
  {
    std::shared_lock lock(mutex_);
    if (n < values_.size()) return;
  }
  std::unique_lock lock(mutex_);
  if (n < values_.size()) return;
  const std::size_t target = std::max({n, 2 * (values_.size() - 1), std::size_t{32}});
  values_ = epsilon_series(target).values;
}

EpsilonCache& default_epsilon_cache() {
  static EpsilonCache cache;
  return cache;
}

Rational epsilon(std::size_t l) {
  return default_epsilon_cache().get(l);
}

}  // namespace eseq
