#pragma once

// p-adic valuations of integers, rationals and factorials, and the
// factorial-ratio estimates they feed.
//
// Lemma-style checks return a report carrying both sides of the relation so
// that a failing instance can be printed as-is.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "eseq/exact.hpp"

namespace eseq {

/// n = sum_i digits[i] p^i with 0 <= digits[i] < p and a nonzero top digit;
/// empty for n == 0.
struct DigitExpansion {
  unsigned long base = 2;
  std::vector<unsigned long> digits;

  unsigned long digit_sum() const;
  Integer value() const;
  /// Index r of the top digit; -1 for n == 0.
  long top_index() const { return static_cast<long>(digits.size()) - 1; }
};

DigitExpansion digit_expansion(unsigned long p, unsigned long n);

/// The functions below throw std::invalid_argument when p is not prime.
Valuation vp_int(unsigned long p, const Integer& n);
Valuation vp_rational(unsigned long p, const Rational& q);

/// v_p(n!) by the digit-sum formula (n - s_p(n)) / (p - 1).
long vp_factorial(unsigned long p, unsigned long n);
/// v_p(n!) by counting multiples: sum_{i>=1} floor(n / p^i).
long vp_factorial_count(unsigned long p, unsigned long n);

/// v_p((n!)^2 / (2n+1)!).
long vp_central_ratio(unsigned long p, unsigned long n);

/// Upper estimate v_p((2n+1)!) <= 2(n - s_p(n))/(p-1) + r + 1 for odd p,
/// where r is the top digit index of n.
struct FactorialBoundReport {
  unsigned long p = 0;
  unsigned long n = 0;
  long lhs = 0;       // v_p((2n+1)!)
  Rational rhs;       // integral, since p-1 divides n - s_p(n)
  bool pass = false;  // lhs <= rhs
};
FactorialBoundReport bound_factorial_odd(unsigned long p, unsigned long n);

/// v_p((n!)^2/(2n+1)!) >= -2n/(p-1) for odd p, with equality exactly when
/// n == (p-1)/2.
struct CentralRatioReport {
  unsigned long p = 0;
  unsigned long n = 0;
  long valuation = 0;
  Rational bound;
  bool equality = false;
  bool pass = false;  // bound holds and equality <=> n == (p-1)/2
};
CentralRatioReport check_central_ratio(unsigned long p, unsigned long n);

/// For l = sum(parts): v_p(prod (n_t!)^2/(2n_t+1)!) >= -2l/(p-1), with
/// equality exactly when every part equals (p-1)/2.
struct MultiIndexReport {
  unsigned long p = 0;
  std::vector<unsigned long> parts;
  unsigned long l = 0;
  long valuation = 0;
  Rational bound;
  bool equality = false;
  bool all_parts_half = false;
  bool pass = false;
};
MultiIndexReport check_multi_index_bound(unsigned long p, std::span<const unsigned long> parts);

/// For parts with some n_j >= 2 and l = sum(parts):
/// v_2(2^(l-1) prod (n_t!)^2/(2n_t+1)!) >= 0. Lists with every part equal
/// to 1 are outside the hypothesis and reported with applicable == false.
struct TwoAdicProductReport {
  std::vector<unsigned long> parts;
  unsigned long l = 0;
  long valuation = 0;  // of the scaled product
  bool applicable = false;
  bool pass = false;
};
TwoAdicProductReport check_two_adic_product(std::span<const unsigned long> parts);

std::string format_parts(std::span<const unsigned long> parts);

}  // namespace eseq
