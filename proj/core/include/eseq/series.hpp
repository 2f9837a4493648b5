#pragma once

// Truncated formal power series over exact rationals.
//
// A PowerSeries of order N is known through x^N and nothing beyond. Binary
// operations on series of different orders truncate to the smaller order;
// coefficients are never invented by padding.

#include <cstddef>
#include <span>
#include <vector>

#include "eseq/exact.hpp"

namespace eseq {

class PowerSeries {
 public:
  /// Zero series of the given order.
  explicit PowerSeries(std::size_t order);
  /// Takes coefficients c[0..N]; throws std::invalid_argument if empty.
  explicit PowerSeries(std::vector<Rational> coeffs);

  static PowerSeries constant(const Rational& c, std::size_t order);
  /// The series x truncated at `order` (order >= 1).
  static PowerSeries identity(std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }
  std::span<const Rational> coefficients() const { return coeffs_; }

  /// Same series known to a lower order; throws if new_order > order().
  PowerSeries truncated(std::size_t new_order) const;
  bool is_zero() const;

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

PowerSeries ps_add(const PowerSeries& a, const PowerSeries& b);
PowerSeries ps_sub(const PowerSeries& a, const PowerSeries& b);
PowerSeries ps_mul(const PowerSeries& a, const PowerSeries& b);
PowerSeries ps_scale(const PowerSeries& a, const Rational& c);
/// Multiplication by x^k; exact, so the order grows by k.
PowerSeries ps_shift(const PowerSeries& a, std::size_t k);

/// Multiplicative inverse by the triangular recurrence
/// b0 = 1/a0, bn = -(1/a0) * sum_{k=1..n} a_k b_{n-k}.
/// Throws std::domain_error when the constant term is zero.
PowerSeries ps_inverse(const PowerSeries& a);

/// outer(inner(x)) by Horner accumulation; inner must have zero constant
/// term (std::domain_error otherwise). Result order is min of the orders.
PowerSeries ps_compose(const PowerSeries& outer, const PowerSeries& inner);

/// Termwise derivative; order drops by one (an order-0 input yields the
/// order-0 zero series).
PowerSeries ps_derivative(const PowerSeries& a);

/// True when both series are known through `order` and agree there.
bool agree_through(const PowerSeries& a, const PowerSeries& b, std::size_t order);

inline PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) { return ps_add(a, b); }
inline PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) { return ps_sub(a, b); }
inline PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) { return ps_mul(a, b); }
inline PowerSeries operator*(const PowerSeries& a, const Rational& c) { return ps_scale(a, c); }

// Named series. All are exact through the requested order.

/// h(x) = 2 cosh(sqrt x) - 2 = sum_{i>=1} 2 x^i / (2i)!.
PowerSeries series_h(std::size_t order);

enum class FMethod { ClosedForm, OdeRecursion };

/// f = h^{-1} (compositional inverse), f(x) = (arccosh(1 + x/2))^2.
/// ClosedForm:   a_i = (-1)^{i-1} 2 ((i-1)!)^2 / (2i)!.
/// OdeRecursion: a_1 = 1, a_{i+1} = -i^2 / ((2i+2)(2i+1)) a_i, the power
/// series solution of x(x+4) f'' + (x+2) f' - 2 = 0.
/// Requires order >= 1.
PowerSeries series_f(std::size_t order, FMethod method = FMethod::ClosedForm);

/// f'(x) = sum_{i>=0} (-1)^i (i!)^2 / (2i+1)! x^i.
PowerSeries series_f_prime(std::size_t order);

/// sum_{l>=0} x^l / (2l+1)!, i.e. sinh(sqrt x)/sqrt x.
PowerSeries series_sinhc(std::size_t order);

/// x(x+4) f'' + (x+2) f' - 2 for a series f of order N >= 2; the result is
/// exact through order N-1.
PowerSeries ode_residual(const PowerSeries& f);

}  // namespace eseq
