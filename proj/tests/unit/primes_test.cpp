#include <map>
#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "../reference_table.hpp"
#include "eseq/epsilon.hpp"
#include "eseq/primes.hpp"

namespace eseq {
namespace {

// Oracle: trial division up to sqrt(n).
bool naive_is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::map<Integer, long> as_map(const FactorizationReport& r) {
  std::map<Integer, long> m;
  for (const auto& f : r.factors) m[f.prime] = f.exponent;
  return m;
}

TEST(Sieve, Basics) {
  EXPECT_EQ(sieve(10), (std::vector<unsigned long>{2, 3, 5, 7}));
  EXPECT_EQ(sieve(2), (std::vector<unsigned long>{2}));
  EXPECT_TRUE(sieve(1).empty());
  unsigned long brute = 0;
  for (unsigned long n = 0; n <= 100; ++n) brute += naive_is_prime(n);
  EXPECT_EQ(sieve(100).size(), brute);
  EXPECT_EQ(brute, 25u);
  EXPECT_EQ(sieve(1'000'000).size(), 78498u);
}

TEST(PrimePi, SmallValues) {
  EXPECT_EQ(prime_pi(5UL), 3u);
  EXPECT_EQ(prime_pi(1UL), 0u);
  EXPECT_EQ(prime_pi(rat(9, 2)), 2u);
  EXPECT_EQ(prime_pi(Rational(0)), 0u);
  EXPECT_THROW(prime_pi(rat(-1, 2)), std::invalid_argument);
}

TEST(PrimePi, ConsistentWithSieve) {
  const std::vector<unsigned long> primes = sieve(1'000'000);
  std::size_t idx = 0;
  for (unsigned long x = 0; x <= 1'000'000; ++x) {
    while (idx < primes.size() && primes[idx] <= x) ++idx;
    if (x % 997 == 0 || x < 5000) ASSERT_EQ(prime_pi(x), idx) << x;
  }
  EXPECT_EQ(prime_pi(1'000'000UL), primes.size());
}

TEST(IsPrime, AgreesWithTrialDivision) {
  for (unsigned long n = 0; n < 20000; ++n) EXPECT_EQ(is_prime(Integer(n)), naive_is_prime(n)) << n;
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<unsigned long> big(1UL << 32, 1UL << 40);
  for (int i = 0; i < 300; ++i) {
    const unsigned long n = big(rng);
    EXPECT_EQ(is_prime(Integer(n)), naive_is_prime(n)) << n;
  }
}

TEST(IsPrime, KnownValues) {
  EXPECT_TRUE(is_prime(Integer(397849)));
  EXPECT_FALSE(is_prime(Integer(1)));
  EXPECT_TRUE(is_prime(Integer("2689453969")));
  EXPECT_EQ(primality(Integer("959905866507242503")), Primality::Prime);
  // Strong pseudoprime to every prime base up to 23.
  EXPECT_FALSE(is_prime(Integer("3825123056546413051")));
  // Above 2^64: probable primes and products of two primes.
  EXPECT_EQ(primality(Integer("319473088311274492668499")), Primality::ProbablePrime);
  EXPECT_EQ(primality(Integer("11874127314767975461")), Primality::Prime);
  EXPECT_EQ(primality(Integer("236696258753425486925956793")), Primality::ProbablePrime);
  EXPECT_EQ(primality(Integer(Integer("13677071637569") * Integer("225347651134721497"))), Primality::Composite);
  // 2^89 - 1 is a Mersenne prime; 2^67 - 1 is not.
  EXPECT_EQ(primality(Integer((Integer(1) << 89) - 1)), Primality::ProbablePrime);
  EXPECT_EQ(primality(Integer((Integer(1) << 67) - 1)), Primality::Composite);
}

TEST(PollardBrent, SplitsSemiprimes) {
  const Integer a("1000003");
  const Integer b("998244353");
  const auto d = pollard_brent(Integer(a * b), 42);
  ASSERT_TRUE(d.has_value());
  EXPECT_TRUE(*d == a || *d == b);
  const Integer m = Integer("276162497983") * Integer("959905866507242503");
  const auto e = pollard_brent(m, 42);
  ASSERT_TRUE(e.has_value());
  EXPECT_EQ(m % *e, 0);
  EXPECT_FALSE(pollard_brent(Integer(3), 1).has_value());
}

TEST(FactorRational, Examples) {
  const auto r4 = factor_rational(rat(-23, 226800));
  EXPECT_EQ(r4.sign, -1);
  EXPECT_EQ(as_map(r4), (std::map<Integer, long>{{2, -4}, {3, -4}, {5, -2}, {7, -1}, {23, 1}}));
  EXPECT_EQ(r4.str(), "-1 \xC2\xB7 2^-4 \xC2\xB7 3^-4 \xC2\xB7 5^-2 \xC2\xB7 7^-1 \xC2\xB7 23");

  const auto r1 = factor_rational(rat(1, 6));
  EXPECT_EQ(r1.sign, 1);
  EXPECT_EQ(as_map(r1), (std::map<Integer, long>{{2, -1}, {3, -1}}));

  const auto r = factor_rational(rat(-8, 27));
  EXPECT_EQ(r.sign, -1);
  EXPECT_EQ(as_map(r), (std::map<Integer, long>{{2, 3}, {3, -3}}));
  EXPECT_EQ(factor_rational(Rational(1)).str(), "");
  EXPECT_THROW(factor_rational(Rational(0)), std::domain_error);
}

TEST(FactorRational, ReconstructsRandomInputs) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> num(-(1L << 50), 1L << 50);
  std::uniform_int_distribution<long> den(1, 1L << 50);
  for (int i = 0; i < 60; ++i) {
    Rational q = rat(num(rng), den(rng));
    if (q.is_zero()) continue;
    const auto report = factor_rational(q, {.trial_bound = 1000});
    EXPECT_EQ(report.reconstruct(), q);
    EXPECT_TRUE(report.complete());
    for (const auto& f : report.factors) EXPECT_TRUE(is_prime(f.prime));
  }
}

TEST(FactorRational, UnsplitCompositeBecomesResidue) {
  const Integer n = Integer("1000003") * Integer("998244353");
  const auto report = factor_rational(Rational(Integer(1), n), {.trial_bound = 100, .rho_attempts = 0});
  ASSERT_EQ(report.residue.size(), 1u);
  EXPECT_EQ(report.residue[0].value, n);
  EXPECT_EQ(report.residue[0].exponent, -1);
  EXPECT_EQ(report.reconstruct(), Rational(Integer(1), n));
  EXPECT_EQ(report.str(), "[c:" + n.get_str() + "]^-1");
}

TEST(FactorRational, EpsilonRowsAgainstPrintedTable) {
  const EpsilonTable eps = epsilon_series(20);
  for (const auto& row : testing::printed_table()) {
    const auto report = factor_rational(eps[static_cast<std::size_t>(row.l)]);
    EXPECT_TRUE(report.complete()) << row.l;
    EXPECT_EQ(report.reconstruct(), eps[static_cast<std::size_t>(row.l)]);
    for (const auto& f : report.factors) EXPECT_TRUE(is_prime(f.prime)) << f.prime.get_str();

    std::map<Integer, long> printed;
    for (const auto& [p, e] : row.factors) {
      if (e != 0) printed[Integer(p)] = e;
    }
    EXPECT_EQ(report.sign, row.sign) << row.l;
    if (row.l != 17) {
      EXPECT_EQ(as_map(report), printed) << row.l;
      EXPECT_EQ(row.value(), eps[static_cast<std::size_t>(row.l)]) << row.l;
    }
  }
}

TEST(FactorRational, PrintedEps17HasATransposedDigit) {
  // The printed last factor of eps_17, 229156549, is composite and the
  // printed product differs from eps_17. Swapping its 6 and 9 gives the
  // prime that the computation finds; every other factor matches.
  EXPECT_FALSE(is_prime(Integer(229156549)));
  EXPECT_EQ(Integer(229156549), Integer(17 * 19 * 67 * 10589));
  const Rational eps17 = epsilon(17);
  const auto report = factor_rational(eps17);
  auto computed = as_map(report);
  EXPECT_EQ(computed.count(Integer(229159549)), 1u);
  EXPECT_TRUE(is_prime(Integer(229159549)));
  const auto& row = testing::printed_table()[16];
  ASSERT_EQ(row.l, 17);
  EXPECT_NE(row.value(), eps17);
  std::map<Integer, long> printed;
  for (const auto& [p, e] : row.factors) printed[Integer(p)] = e;
  printed.erase(Integer(229156549));
  printed[Integer(229159549)] = 1;
  EXPECT_EQ(computed, printed);
}

}  // namespace
}  // namespace eseq
