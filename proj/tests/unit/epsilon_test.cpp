#include <stdexcept>
#include <thread>
#include <vector>

#include <gtest/gtest.h>

#include "eseq/epsilon.hpp"

namespace eseq {
namespace {

// eps_0..eps_10, computed independently with Python's fractions module by
// inverting f'(x) term by term.
const std::vector<Rational>& frozen_eps() {
  static const std::vector<Rational> values = {
      Rational(1),
      Rational::parse("1/6"),
      Rational::parse("-1/180"),
      Rational::parse("1/1512"),
      Rational::parse("-23/226800"),
      Rational::parse("263/14968800"),
      Rational::parse("-133787/40864824000"),
      Rational::parse("157009/245188944000"),
      Rational::parse("-16215071/125046361440000"),
      Rational::parse("2689453969/99786996429120000"),
      Rational::parse("-26893118531/4704244117372800000"),
  };
  return values;
}

const Rational kEps25 = Rational::parse(
    "620253492859212266605928412371090658661462379/"
    "475952586050238846456670942830084140929797949710336000000000000");
const Rational kEps40 = Rational::parse(
    "-3366875704265276585399963859854464105029893715329504163131786560699434479785314929155661/"
    "5659348178732952736648793806572312634277765045544613414311822113690667621158199704354286364262400000000000000000000");

TEST(Epsilon, SmallValuesEveryMethod) {
  for (Method m : {Method::Recursion, Method::SeriesInversion, Method::CompositionSum}) {
    const EpsilonTable t = compute_epsilon_table(10, m);
    EXPECT_EQ(t.method, m);
    EXPECT_EQ(t.values, frozen_eps()) << method_name(m);
  }
}

TEST(Epsilon, FrozenLargerValues) {
  const EpsilonTable t = epsilon_series(40);
  EXPECT_EQ(t[25], kEps25);
  EXPECT_EQ(t[40], kEps40);
  EXPECT_EQ(epsilon_recursion(40)[40], kEps40);
  EXPECT_EQ(epsilon_composition_sum(25), kEps25);
}

TEST(Epsilon, LowOrderValues) {
  EXPECT_EQ(epsilon_recursion(3)[1], rat(1, 6));
  EXPECT_EQ(epsilon_recursion(3)[2], rat(-1, 180));
  EXPECT_EQ(epsilon_recursion(3)[3], rat(1, 1512));
  EXPECT_EQ(epsilon_series(5)[4], rat(-23, 226800));
  EXPECT_EQ(epsilon_series(5)[5], Rational(Integer(263), Integer(32L * 243 * 25 * 7 * 11)));
}

TEST(Epsilon, CompositionSumByHand) {
  // Compositions of 2: (2) gives -(2!)^2/5! = -1/30, (1,1) gives (1/6)^2.
  EXPECT_EQ(rat(-1, 30) + rat(1, 36), rat(-1, 180));
  EXPECT_EQ(epsilon_composition_sum(2, CompositionStrategy::NaiveCompositions), rat(-1, 180));
  EXPECT_EQ(epsilon_composition_sum(1), rat(1, 6));
  EXPECT_EQ(epsilon_composition_sum(3), rat(1, 1512));
}

TEST(Epsilon, StrategiesAgree) {
  for (unsigned l = 1; l <= 14; ++l) {
    EXPECT_EQ(epsilon_composition_sum(l, CompositionStrategy::NaiveCompositions),
              epsilon_composition_sum(l, CompositionStrategy::Partitions))
        << l;
  }
}

TEST(Epsilon, RejectsOutOfRangeCompositionSums) {
  EXPECT_THROW(epsilon_composition_sum(0), std::invalid_argument);
  EXPECT_THROW(epsilon_composition_sum(kNaiveCompositionLimit + 1, CompositionStrategy::NaiveCompositions),
               std::invalid_argument);
}

TEST(Epsilon, RecursionMatchesSeriesToOrder120) {
  EXPECT_EQ(epsilon_recursion(120).values, epsilon_series(120).values);
}

TEST(Epsilon, DefiningIdentityResidualIsZero) {
  const EpsilonTable t = epsilon_series(26);
  for (unsigned l = 0; l <= 26; ++l) EXPECT_TRUE(defining_identity_residual(t, l).is_zero()) << l;
  EpsilonTable bad = t;
  bad.values[7] += rat(1, 1000);
  EXPECT_FALSE(defining_identity_residual(bad, 7).is_zero());
  EXPECT_TRUE(defining_identity_residual(bad, 6).is_zero());
}

TEST(Epsilon, SignsAlternate) {
  const EpsilonTable t = epsilon_series(20);
  for (std::size_t l = 1; l <= 20; ++l) EXPECT_EQ(t[l].sign(), l % 2 == 1 ? 1 : -1) << l;
}

TEST(EpsilonCache, AccessorExtendsOnDemand) {
  EpsilonCache cache;
  EXPECT_EQ(cache.get(0), Rational(1));
  EXPECT_EQ(cache.get(13).numerator(), Integer(71L * 1531 * 20479) * 397849);
  EXPECT_LT(cache.get(20).sign(), 0);
  EXPECT_GE(cache.max_order(), 20u);
  EXPECT_EQ(cache.get(100), epsilon_series(100)[100]);
  EXPECT_EQ(epsilon(4), rat(-23, 226800));
}

TEST(EpsilonCache, ConcurrentReaders) {
  EpsilonCache cache;
  const std::vector<Rational> reference = epsilon_series(64).values;
  std::vector<std::thread> threads;
  std::vector<int> mismatches(8, 0);
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([&, t] {
      for (std::size_t l = 0; l <= 64; ++l) {
        const std::size_t idx = (l * 7 + static_cast<std::size_t>(t) * 13) % 65;
        if (cache.get(idx) != reference[idx]) ++mismatches[static_cast<std::size_t>(t)];
      }
    });
  }
  for (auto& th : threads) th.join();
  for (int m : mismatches) EXPECT_EQ(m, 0);
}

TEST(Method, Names) {
  EXPECT_EQ(parse_method("recur"), Method::Recursion);
  EXPECT_EQ(parse_method("series"), Method::SeriesInversion);
  EXPECT_EQ(parse_method("compsum"), Method::CompositionSum);
  EXPECT_FALSE(parse_method("bogus").has_value());
}

}  // namespace
}  // namespace eseq
