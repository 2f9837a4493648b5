#include "eseq/exact.hpp"

#include <cctype>
#include <deque>
#include <mutex>
#include <ostream>
#include <shared_mutex>
#include <stdexcept>

namespace eseq {

namespace {

constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Strips a leading ASCII or U+2212 minus, returning whether one was present.
bool strip_sign(std::string_view& s) {
  if (s.starts_with('-')) {
    s.remove_prefix(1);
    return true;
  }
  if (s.starts_with(kUnicodeMinus)) {
    s.remove_prefix(kUnicodeMinus.size());
    return true;
  }
  return false;
}

class FactorialTable {
 public:
  const Integer& get(unsigned long n) {
    {
      std::shared_lock lock(mutex_);
      if (n < values_.size()) return values_[n];
    }
    std::unique_lock lock(mutex_);
    while (values_.size() <= n) {
      Integer next = values_.back() * static_cast<unsigned long>(values_.size());
      values_.push_back(std::move(next));
    }
    return values_[n];
  }

 private:
  std::shared_mutex mutex_;
  // deque keeps references to existing elements stable across push_back.
  std::deque<Integer> values_{Integer(1)};
};

}  // namespace

Rational::Rational(const Integer& n, const Integer& d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  value_.get_num() = n;
  value_.get_den() = d;
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  const bool negative = strip_sign(s);
  const auto slash = s.find('/');
  const std::string_view num = s.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (negative) n = -n;
  return Rational(n, d);
}

Rational Rational::abs() const {
  return Rational(mpq_class(::abs(value_)));
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  mpq_class r;
  mpq_inv(r.get_mpq_t(), value_.get_mpq_t());
  return Rational(std::move(r));
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  mpq_class r;
  mpz_pow_ui(r.get_num_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(r.get_den_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  // Powers of a reduced fraction stay reduced.
  return Rational(std::move(r));
}

Integer Rational::floor() const {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

std::string Rational::str() const {
  std::string s = numerator().get_str();
  if (!is_integer()) {
    s += '/';
    s += denominator().get_str();
  }
  return s;
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational& Rational::add_product(const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) return *this;
  thread_local mpq_class scratch;
  mpq_mul(scratch.get_mpq_t(), a.value_.get_mpq_t(), b.value_.get_mpq_t());
  mpq_add(value_.get_mpq_t(), value_.get_mpq_t(), scratch.get_mpq_t());
  return *this;
}

Rational operator-(const Rational& q) {
  return Rational(mpq_class(-q.value_));
}

std::ostream& operator<<(std::ostream& os, const Rational& q) {
  return os << q.str();
}

Rational rat(long n, long d) {
  return Rational(Integer(n), Integer(d));
}

Rational rat(const Integer& n, const Integer& d) {
  return Rational(n, d);
}

const Integer& factorial(unsigned long n) {
  static FactorialTable table;
  return table.get(n);
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer parse_integer(std::string_view text) {
  std::string_view s = text;
  const bool negative = strip_sign(s);
  if (!all_digits(s)) throw std::invalid_argument("malformed integer: '" + std::string(text) + "'");
  Integer n(std::string(s), 10);
  return negative ? Integer(-n) : n;
}

long Valuation::value() const {
  if (infinite_) throw std::logic_error("value() of an infinite valuation");
  return value_;
}

std::string Valuation::str() const {
  return infinite_ ? std::string("inf") : std::to_string(value_);
}

std::ostream& operator<<(std::ostream& os, const Valuation& v) {
  return os << v.str();
}

}  // namespace eseq
