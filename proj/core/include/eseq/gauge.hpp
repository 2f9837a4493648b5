#pragma once

// Arithmetic around the divisibility index d'_p(k) and the lower bound on
// the number of A_n-types of SU(2) gauge groups over S^4.
//
// d'_p(k) is read with a prefix quantifier: the largest n such that
// eps_i * k is p-integral for every i <= n.

#include <string>

#include "eseq/exact.hpp"

namespace eseq {

/// d'_p(k) by scanning eps valuations up to a cutoff where failure is
/// guaranteed: v_p(k)+1 for p = 2, (v_p(k)+1)(p-1)/2 for odd p.
/// Throws std::invalid_argument for k == 0 (d_p(0) is infinite) or
/// non-prime p, and std::logic_error if the scan passes its cutoff.
long d_prime(unsigned long p, const Integer& k);

struct BoundReport {
  unsigned long prime = 0;
  Integer k;
  long vpk = 0;
  long d_prime_scanned = 0;
  /// v_2(k) for p = 2 and (p-1) v_p(k) / 2 for odd p.
  long d_prime_closed_form = 0;
  long lower_bound_dp = 0;
  long upper_bound_dp = 0;

  bool closed_form_agrees() const { return d_prime_scanned == d_prime_closed_form; }
};

/// v_p(k) <= d_p(k) <= (p-1) v_p(k)/2 for odd p, and
/// floor(v_2(k)/2) <= d_2(k) <= v_2(k).
BoundReport dp_bounds(unsigned long p, const Integer& k);

/// floor(n/2 + 1) * prod over odd primes p of floor(2n/(p-1) + 1).
/// Throws std::invalid_argument for n == 0.
Integer an_type_lower_bound(unsigned long n);

/// The same bound rebuilt from prime counts: with
/// c_r = #{odd p : floor(2n/(p-1)+1) >= r}, the odd-prime product equals
/// prod_{r=2}^{n+1} (r/(r-1))^{c_r}. Returned as a Rational so that a
/// miscount would show up as a non-integer or a different value.
Rational an_type_bound_by_counts(unsigned long n);

struct PrimeCountReport {
  unsigned long n = 0;
  unsigned long r = 0;
  unsigned long direct = 0;   // enumeration of odd primes
  unsigned long formula = 0;  // pi(2n/(r-1) + 1) - 1
  bool pass() const { return direct == formula; }
};

/// #{odd p : floor(2n/(p-1)+1) >= r} both ways. Requires 2 <= r <= n+1.
PrimeCountReport count_primes_factor_at_least(unsigned long n, unsigned long r);

struct LogIdentityReport {
  unsigned long n = 0;
  double lhs = 0;  // log of the exact bound
  double rhs = 0;  // log floor(n/2+1) + sum_r pi(2n/r+1) log(1+1/r) - log(n+1)
  double difference = 0;
  double tolerance = 0;
  bool pass() const { return difference < tolerance; }
};

LogIdentityReport log_identity_check(unsigned long n, double tolerance = 1e-9);

/// Natural log of a positive integer of any size.
double log_integer(const Integer& m);

}  // namespace eseq
