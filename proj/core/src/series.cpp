#include "eseq/series.hpp"

#include <algorithm>
#include <span>
#include <stdexcept>

namespace eseq {

PowerSeries::PowerSeries(std::size_t order) : coeffs_(order + 1) {}

PowerSeries::PowerSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("power series needs at least one coefficient");
}

PowerSeries PowerSeries::constant(const Rational& c, std::size_t order) {
  PowerSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

PowerSeries PowerSeries::identity(std::size_t order) {
  if (order < 1) throw std::invalid_argument("the series x needs order >= 1");
  PowerSeries s(order);
  s.coeffs_[1] = 1;
  return s;
}

PowerSeries PowerSeries::truncated(std::size_t new_order) const {
  if (new_order > order()) throw std::invalid_argument("cannot extend a truncated series");
  return PowerSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(new_order) + 1));
}

bool PowerSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
}

PowerSeries ps_add(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<Rational> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) c[i] = a[i] + b[i];
  return PowerSeries(std::move(c));
}

PowerSeries ps_sub(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<Rational> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) c[i] = a[i] - b[i];
  return PowerSeries(std::move(c));
}

namespace {

// Coefficients lo..n rewritten as integers over one common denominator, so
// a product becomes an integer convolution with one reduction per term.
struct CommonDenominator {
  std::vector<Integer> num;
  Integer den = 1;
};

CommonDenominator to_common(std::span<const Rational> c, std::size_t lo, std::size_t n) {
  CommonDenominator out;
  for (std::size_t i = lo; i <= n; ++i) {
    mpz_lcm(out.den.get_mpz_t(), out.den.get_mpz_t(), c[i].denominator().get_mpz_t());
  }
  out.num.resize(n + 1);
  for (std::size_t i = lo; i <= n; ++i) {
    mpz_divexact(out.num[i].get_mpz_t(), out.den.get_mpz_t(), c[i].denominator().get_mpz_t());
    out.num[i] *= c[i].numerator();
  }
  return out;
}

}  // namespace

PowerSeries ps_mul(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  const auto ac = a.coefficients();
  const auto bc = b.coefficients();
  // Skip leading zeros; composition inputs always start at x^1.
  std::size_t a_lo = 0;
  while (a_lo <= n && ac[a_lo].is_zero()) ++a_lo;
  std::size_t b_lo = 0;
  while (b_lo <= n && bc[b_lo].is_zero()) ++b_lo;

  std::vector<Rational> c(n + 1);
  if (a_lo + b_lo > n) return PowerSeries(std::move(c));
  const CommonDenominator an = to_common(ac, a_lo, n - b_lo);
  const CommonDenominator bn = to_common(bc, b_lo, n - a_lo);
  const Integer den = an.den * bn.den;
  Integer acc;
  for (std::size_t k = a_lo + b_lo; k <= n; ++k) {
    acc = 0;
    for (std::size_t i = a_lo; i + b_lo <= k; ++i) {
      mpz_addmul(acc.get_mpz_t(), an.num[i].get_mpz_t(), bn.num[k - i].get_mpz_t());
    }
    c[k] = Rational(acc, den);
  }
  return PowerSeries(std::move(c));
}

PowerSeries ps_scale(const PowerSeries& a, const Rational& c) {
  std::vector<Rational> out(a.order() + 1);
  for (std::size_t i = 0; i <= a.order(); ++i) out[i] = a[i] * c;
  return PowerSeries(std::move(out));
}

PowerSeries ps_shift(const PowerSeries& a, std::size_t k) {
  std::vector<Rational> out(a.order() + k + 1);
  for (std::size_t i = 0; i <= a.order(); ++i) out[i + k] = a[i];
  return PowerSeries(std::move(out));
}

PowerSeries ps_inverse(const PowerSeries& a) {
  if (a[0].is_zero()) throw std::domain_error("power series with zero constant term is not invertible");
  const std::size_t n = a.order();
  const Rational inv0 = a[0].inverse();
  const Rational neg_inv0 = -inv0;
  std::vector<Rational> b(n + 1);
  b[0] = inv0;
  for (std::size_t m = 1; m <= n; ++m) {
    Rational acc;
    for (std::size_t k = 1; k <= m; ++k) acc.add_product(a[k], b[m - k]);
    b[m] = acc * neg_inv0;
  }
  return PowerSeries(std::move(b));
}

PowerSeries ps_compose(const PowerSeries& outer, const PowerSeries& inner) {
  if (!inner[0].is_zero()) throw std::domain_error("composition needs an inner series with zero constant term");
  const std::size_t n = std::min(outer.order(), inner.order());
  const PowerSeries in = inner.truncated(n);
  PowerSeries acc = PowerSeries::constant(outer[n], n);
  for (std::size_t k = n; k-- > 0;) {
    acc = ps_mul(acc, in);
    acc = ps_add(acc, PowerSeries::constant(outer[k], n));
  }
  return acc;
}

PowerSeries ps_derivative(const PowerSeries& a) {
  if (a.order() == 0) return PowerSeries(0);
  std::vector<Rational> out(a.order());
  for (std::size_t i = 1; i <= a.order(); ++i) out[i - 1] = a[i] * Rational(static_cast<long>(i));
  return PowerSeries(std::move(out));
}

bool agree_through(const PowerSeries& a, const PowerSeries& b, std::size_t order) {
  if (order > a.order() || order > b.order()) return false;
  for (std::size_t i = 0; i <= order; ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

PowerSeries series_h(std::size_t order) {
  std::vector<Rational> c(order + 1);
  for (std::size_t i = 1; i <= order; ++i) c[i] = Rational(Integer(2), factorial(2 * i));
  return PowerSeries(std::move(c));
}

PowerSeries series_f(std::size_t order, FMethod method) {
  if (order < 1) throw std::invalid_argument("series_f needs order >= 1");
  std::vector<Rational> c(order + 1);
  switch (method) {
    case FMethod::ClosedForm:
      for (std::size_t i = 1; i <= order; ++i) {
        const Integer& f = factorial(i - 1);
        Rational a(Integer(2 * f * f), factorial(2 * i));
        c[i] = (i % 2 == 1) ? a : -a;
      }
      break;
    case FMethod::OdeRecursion:
      c[1] = 1;
      for (std::size_t i = 1; i < order; ++i) {
        const long ii = static_cast<long>(i);
        c[i + 1] = c[i] * rat(-ii * ii, (2 * ii + 2) * (2 * ii + 1));
      }
      break;
  }
  return PowerSeries(std::move(c));
}

PowerSeries series_f_prime(std::size_t order) {
  std::vector<Rational> c(order + 1);
  for (std::size_t i = 0; i <= order; ++i) {
    const Integer& f = factorial(i);
    Rational a(Integer(f * f), factorial(2 * i + 1));
    c[i] = (i % 2 == 0) ? a : -a;
  }
  return PowerSeries(std::move(c));
}

PowerSeries series_sinhc(std::size_t order) {
  std::vector<Rational> c(order + 1);
  for (std::size_t l = 0; l <= order; ++l) c[l] = Rational(Integer(1), factorial(2 * l + 1));
  return PowerSeries(std::move(c));
}

PowerSeries ode_residual(const PowerSeries& f) {
  if (f.order() < 2) throw std::invalid_argument("ode_residual needs order >= 2");
  const PowerSeries f1 = ps_derivative(f);   // order N-1
  const PowerSeries f2 = ps_derivative(f1);  // order N-2
  // x^2 f'' + 4x f'' + x f' + 2 f' - 2, each term exact through N-1.
  PowerSeries r = ps_shift(f2, 2) + ps_scale(ps_shift(f2, 1), 4) + ps_shift(f1, 1) + ps_scale(f1, 2);
  return r - PowerSeries::constant(2, r.order());
}

}  // namespace eseq
