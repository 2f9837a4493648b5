#pragma once

// Exact arithmetic substrate: arbitrary-precision integers, always-normalized
// rationals, memoized factorials and the p-adic Valuation value type.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace eseq {

using Integer = mpz_class;

/// Normalized rational number. The denominator is always positive, the
/// fraction is always reduced, and zero is stored as 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(long n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  /// Throws std::domain_error when d == 0.
  Rational(const Integer& n, const Integer& d);

  /// Parses the canonical form "[-]digits[/digits]". The minus sign may be
  /// ASCII '-' or U+2212. Non-reduced input is accepted and normalized.
  static Rational parse(std::string_view text);

  const Integer& numerator() const { return value_.get_num(); }
  const Integer& denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return denominator() == 1; }

  Rational abs() const;
  Rational inverse() const;
  /// Integer power; negative exponents invert first (zero base rejected).
  Rational pow(long exponent) const;
  /// Largest integer not exceeding the value.
  Integer floor() const;
  double to_double() const { return value_.get_d(); }

  /// Canonical string: "-23/226800", integers without "/1".
  std::string str() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& rhs);

  /// Fused this += a * b, avoiding a temporary on hot paths.
  Rational& add_product(const Rational& a, const Rational& b);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  friend Rational operator-(const Rational& q);

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

  const mpq_class& raw() const { return value_; }

 private:
  explicit Rational(mpq_class v) : value_(std::move(v)) {}
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

/// Convenience constructor from machine integers; rejects d == 0.
Rational rat(long n, long d);
Rational rat(const Integer& n, const Integer& d);

/// Exact n!, memoized. The returned reference stays valid for the lifetime
/// of the process; concurrent callers are safe.
const Integer& factorial(unsigned long n);

/// Binomial coefficient C(n, k).
Integer binomial(unsigned long n, unsigned long k);

/// Parses a decimal integer with optional sign; throws std::invalid_argument.
Integer parse_integer(std::string_view text);

/// p-adic valuation value: a finite (possibly negative) integer or +infinity,
/// which is reserved for the valuation of zero and orders above every integer.
class Valuation {
 public:
  constexpr Valuation(long v) : value_(v), infinite_(false) {}  // NOLINT(google-explicit-constructor)
  static constexpr Valuation infinity() { return Valuation(); }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_finite() const { return !infinite_; }
  /// Throws std::logic_error for +infinity.
  long value() const;

  std::string str() const;

  friend constexpr bool operator==(const Valuation& a, const Valuation& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }
  friend constexpr Valuation operator+(const Valuation& a, const Valuation& b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return Valuation(a.value_ + b.value_);
  }

 private:
  constexpr Valuation() : value_(0), infinite_(true) {}
  long value_;
  bool infinite_;
};

std::ostream& operator<<(std::ostream& os, const Valuation& v);

}  // namespace eseq
