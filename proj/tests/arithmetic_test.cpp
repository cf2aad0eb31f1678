#include "cyclicity/arithmetic.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

namespace cyclicity {
namespace {

TEST(Factorize, Examples) {
  EXPECT_TRUE(factorize(1).factors.empty());
  EXPECT_EQ(factorize(1365).factors,
            (std::vector<PrimePower>{{3, 1}, {5, 1}, {7, 1}, {13, 1}}));
  EXPECT_EQ(factorize(12).factors, (std::vector<PrimePower>{{2, 2}, {3, 1}}));
  EXPECT_THROW(factorize(0), std::invalid_argument);
}

TEST(Factorize, LargePrimesAndProducts) {
  EXPECT_EQ(factorize(1000000007ULL).factors, (std::vector<PrimePower>{{1000000007ULL, 1}}));
  const std::uint64_t n = 4294967291ULL * 4294967279ULL;  // two primes near 2^32
  EXPECT_EQ(factorize(n).factors,
            (std::vector<PrimePower>{{4294967279ULL, 1}, {4294967291ULL, 1}}));
  EXPECT_EQ(factorize(std::uint64_t{1} << 63).factors, (std::vector<PrimePower>{{2, 63}}));
}

TEST(Factorize, InvariantsHoldUpTo5000) {
  for (std::uint64_t n = 1; n <= 5000; ++n) {
    const Factorization f = factorize(n);
    EXPECT_EQ(f.value(), n);
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
      EXPECT_TRUE(oracle::is_prime_naive(f.factors[i].prime));
      EXPECT_GE(f.factors[i].exponent, 1u);
      if (i > 0) EXPECT_LT(f.factors[i - 1].prime, f.factors[i].prime);
    }
  }
}

TEST(EulerPhi, Examples) {
  EXPECT_EQ(euler_phi(1), 1u);
  EXPECT_EQ(euler_phi(12), oracle::phi_by_counting(12));
  EXPECT_EQ(euler_phi(12), 4u);
  EXPECT_EQ(oracle::phi_by_counting(1365), 576u);
  EXPECT_EQ(euler_phi(1365), 576u);
  EXPECT_THROW(euler_phi(0), std::invalid_argument);
}

TEST(EulerPhi, MatchesCoprimeCountUpTo2000) {
  for (std::uint64_t n = 1; n <= 2000; ++n) ASSERT_EQ(euler_phi(n), oracle::phi_by_counting(n)) << n;
}

TEST(EulerPhi, MultiplicativeOnRandomCoprimePairs) {
  std::mt19937_64 rng(20261015);
  std::uniform_int_distribution<std::uint64_t> pick(1, 1000);
  int checked = 0;
  while (checked < 2000) {
    const std::uint64_t a = pick(rng), b = pick(rng);
    if (std::gcd(a, b) != 1) continue;
    ASSERT_EQ(euler_phi(a * b), euler_phi(a) * euler_phi(b)) << a << " " << b;
    ++checked;
  }
}

TEST(Squarefree, Examples) {
  EXPECT_TRUE(is_squarefree(1));
  EXPECT_TRUE(is_squarefree(1365));
  EXPECT_FALSE(is_squarefree(12));
  for (std::uint64_t n = 1; n <= 3000; ++n)
    ASSERT_EQ(is_squarefree(n), oracle::squarefree_by_division(n)) << n;
}

TEST(CyclicNumber, Examples) {
  EXPECT_TRUE(is_cyclic_number(1));
  EXPECT_TRUE(is_cyclic_number(15));
  EXPECT_FALSE(is_cyclic_number(1365));
  EXPECT_FALSE(is_cyclic_number(4));
  EXPECT_EQ(std::gcd<std::uint64_t>(1365, 576), 3u);
}

TEST(Obstruction, Examples) {
  EXPECT_EQ(obstruction(15), Obstruction{NoObstruction{}});
  EXPECT_EQ(obstruction(12), Obstruction{SquareFactor{2}});
  EXPECT_EQ(obstruction(6), Obstruction{(DividingPair{2, 3})});
  EXPECT_EQ(obstruction(1365), Obstruction{(DividingPair{3, 7})});
  // Both kinds present: the square factor wins, smallest prime first.
  EXPECT_EQ(obstruction(2 * 2 * 3), Obstruction{SquareFactor{2}});
  EXPECT_EQ(obstruction(3 * 3 * 7 * 7), Obstruction{SquareFactor{3}});
  EXPECT_EQ(obstruction(1), Obstruction{NoObstruction{}});
}

TEST(Obstruction, PayloadsSatisfyTheirDivisibility) {
  for (std::uint64_t n = 1; n <= 10000; ++n) {
    const Obstruction o = obstruction(n);
    ASSERT_EQ(std::holds_alternative<NoObstruction>(o), is_cyclic_number(n)) << n;
    if (const auto* sq = std::get_if<SquareFactor>(&o)) {
      ASSERT_TRUE(oracle::is_prime_naive(sq->p));
      ASSERT_EQ(n % (sq->p * sq->p), 0u) << n;
    } else if (const auto* dp = std::get_if<DividingPair>(&o)) {
      ASSERT_TRUE(is_squarefree(n)) << n;
      ASSERT_NE(dp->p, dp->q);
      ASSERT_EQ(n % dp->p, 0u);
      ASSERT_EQ(n % dp->q, 0u);
      ASSERT_EQ((dp->q - 1) % dp->p, 0u) << n;
    }
  }
}

TEST(Obstruction, DividingPairIsLexicographicallySmallest) {
  for (std::uint64_t n = 2; n <= 3000; ++n) {
    const Obstruction o = obstruction(n);
    const auto* dp = std::get_if<DividingPair>(&o);
    if (!dp) continue;
    for (std::uint64_t p : oracle::primes_dividing(n))
      for (std::uint64_t q : oracle::primes_dividing(n)) {
        if (p == q || (q - 1) % p != 0) continue;
        ASSERT_TRUE(std::pair(dp->p, dp->q) <= std::pair(p, q)) << n;
      }
  }
}

TEST(CyclicNumberSieve, Examples) {
  EXPECT_EQ(cyclic_number_sieve(1), (std::vector<std::uint64_t>{1}));
  std::vector<std::uint64_t> expected20;
  for (std::uint64_t n = 1; n <= 20; ++n)
    if (std::gcd(n, oracle::phi_by_counting(n)) == 1) expected20.push_back(n);
  EXPECT_EQ(expected20, (std::vector<std::uint64_t>{1, 2, 3, 5, 7, 11, 13, 15, 17, 19}));
  EXPECT_EQ(cyclic_number_sieve(20), expected20);
  const auto to35 = cyclic_number_sieve(35);
  ASSERT_GE(to35.size(), 4u);
  EXPECT_EQ(std::vector<std::uint64_t>(to35.end() - 4, to35.end()),
            (std::vector<std::uint64_t>{29, 31, 33, 35}));
  EXPECT_THROW(cyclic_number_sieve(0), std::invalid_argument);
}

TEST(CyclicNumber, ImpliesSquarefreeUpTo100000) {
  for (std::uint64_t n : cyclic_number_sieve(100000)) ASSERT_TRUE(is_squarefree(n)) << n;
}

TEST(PartitionCount, MatchesEnumeration) {
  EXPECT_EQ(partition_count(0), 1u);
  EXPECT_EQ(partition_count(2), 2u);
  EXPECT_EQ(partition_count(5), 7u);
  for (unsigned k = 0; k <= 40; ++k) ASSERT_EQ(partition_count(k), oracle::partitions_by_enumeration(k)) << k;
}

TEST(PartitionCount, ExactAtTheTopOfTheRange) {
  EXPECT_EQ(partition_count(100), 190569292u);
  EXPECT_EQ(partition_count(416), 17873792969689876004ULL);
  EXPECT_THROW(partition_count(417), std::overflow_error);
}

TEST(AbelianGroupCount, Examples) {
  EXPECT_EQ(abelian_group_count(8), oracle::partitions_by_enumeration(3));
  EXPECT_EQ(abelian_group_count(8), 3u);
  EXPECT_EQ(abelian_group_count(36), 4u);
  for (std::uint64_t n : {1u, 2u, 6u, 30u, 1365u}) EXPECT_EQ(abelian_group_count(n), 1u);
}

TEST(AbelianGroupCount, OneExactlyWhenSquarefree) {
  for (std::uint64_t n = 1; n <= 10000; ++n)
    ASSERT_EQ(abelian_group_count(n) == 1, is_squarefree(n)) << n;
}

TEST(Divisors, Basic) {
  EXPECT_EQ(divisors(1), (std::vector<std::uint64_t>{1}));
  EXPECT_EQ(divisors(36), (std::vector<std::uint64_t>{1, 2, 3, 4, 6, 9, 12, 18, 36}));
  EXPECT_EQ(pow_mod(3, 3, 13), 1u);
}

}  // namespace
}  // namespace cyclicity
