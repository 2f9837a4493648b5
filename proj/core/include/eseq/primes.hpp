#pragma once

// Prime generation, prime counting, primality and factorization of large
// rationals.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eseq/exact.hpp"

namespace eseq {

/// All primes <= limit in ascending order (empty for limit < 2).
std::vector<unsigned long> sieve(unsigned long limit);

/// pi(x): the number of primes <= x. Backed by a process-wide sieve that
/// grows on demand; safe for concurrent callers.
unsigned long prime_pi(unsigned long x);
/// pi(floor(x)) for a non-negative rational x; throws on negative x.
unsigned long prime_pi(const Rational& x);

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

enum class Primality { Composite, Prime, ProbablePrime };

/// Deterministic below 2^64; above that, a strong probable-prime test with
/// `rounds` random bases drawn from `seed`.
Primality primality(const Integer& n, unsigned rounds = 40, std::uint64_t seed = 0x5eed);
/// primality(n) != Composite.
bool is_prime(const Integer& n);

/// One nontrivial factor of a composite n > 3 by Pollard rho with Brent's
/// cycle detection, or nullopt when the attempt budget runs out.
std::optional<Integer> pollard_brent(const Integer& n, std::uint64_t seed, unsigned attempts = 3,
                                     std::uint64_t max_iterations = 1ULL << 23);

struct PrimePower {
  Integer prime;
  long exponent = 0;    // negative for denominator primes
  bool proven = true;   // false when only a probable prime
};

/// Composite cofactor that Pollard rho failed to split.
struct Residue {
  Integer value;
  long exponent = 1;  // +1 numerator, -1 denominator
};

struct FactorizationReport {
  int sign = 1;
  std::vector<PrimePower> factors;  // ascending primes
  std::vector<Residue> residue;     // empty when fully factored

  bool complete() const { return residue.empty(); }
  /// sign * prod p^e * prod residue^e.
  Rational reconstruct() const;
  /// "-1 · 2^-4 · 3^-4 · 5^-2 · 7^-1 · 23"; the sign term appears only for
  /// negative inputs and an unsplit residue prints as "[c:N]" (with "^-1"
  /// in the denominator). The value 1 prints as the empty string.
  std::string str() const;
};

struct FactorOptions {
  unsigned long trial_bound = 1'000'000;
  std::uint64_t seed = 0x5eed;
  unsigned rho_attempts = 3;
  std::uint64_t rho_iterations = 1ULL << 23;
};

/// Trial division by primes <= trial_bound, then Pollard-Brent with
/// primality checks on the remaining cofactors. Throws std::domain_error
/// for q == 0.
FactorizationReport factor_rational(const Rational& q, const FactorOptions& options = {});

}  // namespace eseq
