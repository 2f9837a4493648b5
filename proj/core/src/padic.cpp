#include "eseq/padic.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "eseq/primes.hpp"

namespace eseq {

namespace {

void require_prime(unsigned long p) {
  if (!is_prime(Integer(p))) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

void require_odd_prime(unsigned long p) {
  require_prime(p);
  if (p == 2) throw std::invalid_argument("an odd prime is required");
}

// Exact valuation of a nonzero integer given as |n|.
long vp_nonzero(unsigned long p, const Integer& n) {
  Integer rest = n;
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), Integer(p).get_mpz_t()));
}

}  // namespace

unsigned long DigitExpansion::digit_sum() const {
  return std::accumulate(digits.begin(), digits.end(), 0UL);
}

Integer DigitExpansion::value() const {
  Integer v = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) v = v * base + *it;
  return v;
}

DigitExpansion digit_expansion(unsigned long p, unsigned long n) {
  if (p < 2) throw std::invalid_argument("digit expansion base must be >= 2");
  DigitExpansion e{p, {}};
  while (n > 0) {
    e.digits.push_back(n % p);
    n /= p;
  }
  return e;
}

Valuation vp_int(unsigned long p, const Integer& n) {
  require_prime(p);
  if (n == 0) return Valuation::infinity();
  return vp_nonzero(p, n);
}

Valuation vp_rational(unsigned long p, const Rational& q) {
  require_prime(p);
  if (q.is_zero()) return Valuation::infinity();
  return vp_nonzero(p, q.numerator()) - vp_nonzero(p, q.denominator());
}

long vp_factorial(unsigned long p, unsigned long n) {
  require_prime(p);
  const DigitExpansion e = digit_expansion(p, n);
  return static_cast<long>((n - e.digit_sum()) / (p - 1));
}

long vp_factorial_count(unsigned long p, unsigned long n) {
  require_prime(p);
  long count = 0;
  for (unsigned long m = n / p; m > 0; m /= p) count += static_cast<long>(m);
  return count;
}

long vp_central_ratio(unsigned long p, unsigned long n) {
  return 2 * vp_factorial(p, n) - vp_factorial(p, 2 * n + 1);
}

FactorialBoundReport bound_factorial_odd(unsigned long p, unsigned long n) {
  require_odd_prime(p);
  const DigitExpansion e = digit_expansion(p, n);
  FactorialBoundReport r;
  r.p = p;
  r.n = n;
  r.lhs = vp_factorial(p, 2 * n + 1);
  r.rhs = Rational(Integer(2 * (n - e.digit_sum())), Integer(p - 1)) + Rational(e.top_index() + 1);
  r.pass = Rational(r.lhs) <= r.rhs;
  return r;
}

CentralRatioReport check_central_ratio(unsigned long p, unsigned long n) {
  require_odd_prime(p);
  CentralRatioReport r;
  r.p = p;
  r.n = n;
  r.valuation = vp_central_ratio(p, n);
  r.bound = Rational(Integer(-2 * static_cast<long>(n)), Integer(p - 1));
  const Rational v(r.valuation);
  r.equality = v == r.bound;
  r.pass = v >= r.bound && (r.equality == (n == (p - 1) / 2));
  return r;
}

MultiIndexReport check_multi_index_bound(unsigned long p, std::span<const unsigned long> parts) {
  require_odd_prime(p);
  if (parts.empty()) throw std::invalid_argument("part list must be nonempty");
  MultiIndexReport r;
  r.p = p;
  r.parts.assign(parts.begin(), parts.end());
  const unsigned long half = (p - 1) / 2;
  r.all_parts_half = true;
  for (unsigned long n : parts) {
    if (n == 0) throw std::invalid_argument("parts must be positive");
    r.l += n;
    r.valuation += vp_central_ratio(p, n);
    r.all_parts_half = r.all_parts_half && n == half;
  }
  r.bound = Rational(Integer(-2 * static_cast<long>(r.l)), Integer(p - 1));
  const Rational v(r.valuation);
  r.equality = v == r.bound;
  r.pass = v >= r.bound && r.equality == r.all_parts_half;
  return r;
}

TwoAdicProductReport check_two_adic_product(std::span<const unsigned long> parts) {
  if (parts.empty()) throw std::invalid_argument("part list must be nonempty");
  TwoAdicProductReport r;
  r.parts.assign(parts.begin(), parts.end());
  long v = 0;
  for (unsigned long n : parts) {
    if (n == 0) throw std::invalid_argument("parts must be positive");
    r.l += n;
    v += vp_central_ratio(2, n);
    r.applicable = r.applicable || n >= 2;
  }
  r.valuation = v + static_cast<long>(r.l) - 1;
  r.pass = !r.applicable || r.valuation >= 0;
  return r;
}

std::string format_parts(std::span<const unsigned long> parts) {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts[i]);
  }
  return s + ")";
}

}  // namespace eseq
