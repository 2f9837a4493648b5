#include "eseq/gauge.hpp"

#include <cmath>
#include <stdexcept>

#include "eseq/epsilon.hpp"
#include "eseq/padic.hpp"
#include "eseq/primes.hpp"

namespace eseq {

namespace {

long finite_vp(unsigned long p, const Integer& k) {
  if (k == 0) throw std::invalid_argument("k = 0 has d_p(0) = infinity");
  return vp_int(p, k).value();
}

}  // namespace

long d_prime(unsigned long p, const Integer& k) {
  const long v = finite_vp(p, k);
  const long cutoff = p == 2 ? v + 1 : (v + 1) * static_cast<long>(p - 1) / 2;
  const std::vector<Rational> eps = default_epsilon_cache().prefix(static_cast<std::size_t>(cutoff));
  for (long i = 1; i <= cutoff; ++i) {
    if (vp_rational(p, eps[static_cast<std::size_t>(i)]) + Valuation(v) < Valuation(0)) return i - 1;
  }
  throw std::logic_error("d' scan for p=" + std::to_string(p) + ", k=" + k.get_str() +
                         " found no failure by index " + std::to_string(cutoff));
}

BoundReport dp_bounds(unsigned long p, const Integer& k) {
  BoundReport r;
  r.prime = p;
  r.k = k;
  r.vpk = finite_vp(p, k);
  r.d_prime_scanned = d_prime(p, k);
  if (p == 2) {
    r.d_prime_closed_form = r.vpk;
    r.lower_bound_dp = r.vpk / 2;
    r.upper_bound_dp = r.vpk;
  } else {
    r.d_prime_closed_form = static_cast<long>(p - 1) * r.vpk / 2;
    r.lower_bound_dp = r.vpk;
    r.upper_bound_dp = r.d_prime_closed_form;
  }
  return r;
}

Integer an_type_lower_bound(unsigned long n) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  Integer bound = n / 2 + 1;
  for (unsigned long p : sieve(2 * n + 1)) {
    if (p == 2) continue;
    bound *= 2 * n / (p - 1) + 1;
  }
  return bound;
}

Rational an_type_bound_by_counts(unsigned long n) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  Rational product(static_cast<long>(n / 2 + 1));
  for (unsigned long r = 2; r <= n + 1; ++r) {
    const unsigned long c = count_primes_factor_at_least(n, r).formula;
    product *= Rational(Integer(r), Integer(r - 1)).pow(static_cast<long>(c));
  }
  return product;
}

PrimeCountReport count_primes_factor_at_least(unsigned long n, unsigned long r) {
  if (r < 2 || r > n + 1) throw std::invalid_argument("r must lie in [2, n+1]");
  PrimeCountReport report{n, r, 0, 0};
  // floor(2n/(p-1) + 1) >= r forces p <= 2n + 1.
  for (unsigned long p : sieve(2 * n + 1)) {
    if (p == 2) continue;
    if (2 * n / (p - 1) + 1 >= r) ++report.direct;
  }
  report.formula = prime_pi(Rational(Integer(2 * n), Integer(r - 1)) + Rational(1)) - 1;
  return report;
}

double log_integer(const Integer& m) {
  if (m <= 0) throw std::domain_error("log of a non-positive integer");
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, m.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exponent) * std::log(2.0);
}

LogIdentityReport log_identity_check(unsigned long n, double tolerance) {
  LogIdentityReport report;
  report.n = n;
  report.tolerance = tolerance;
  report.lhs = log_integer(an_type_lower_bound(n));

  long double rhs = std::log(static_cast<long double>(n / 2 + 1));
  for (unsigned long r = 1; r <= n; ++r) {
    const unsigned long pi = prime_pi(2 * n / r + 1);
    rhs += static_cast<long double>(pi) * std::log1p(1.0L / static_cast<long double>(r));
  }
  rhs -= std::log(static_cast<long double>(n + 1));
  report.rhs = static_cast<double>(rhs);
  report.difference = std::fabs(report.lhs - report.rhs);
  return report;
}

}  // namespace eseq
