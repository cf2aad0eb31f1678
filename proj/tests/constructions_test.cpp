#include "cyclicity/constructions.hpp"

#include <gtest/gtest.h>

#include <set>

#include "cyclicity/arithmetic.hpp"
#include "cyclicity/group_ops.hpp"
#include "cyclicity/isomorphism.hpp"
#include "oracles.hpp"

namespace cyclicity {
namespace {

Permutation negation(std::size_t n) {
  Permutation p(n);
  for (std::size_t x = 0; x < n; ++x) p[x] = static_cast<Element>((n - x) % n);
  return p;
}

TEST(CyclicGroup, Examples) {
  const FiniteGroup z1 = cyclic_group(1);
  EXPECT_EQ(z1.order(), 1u);
  EXPECT_EQ(z1.table(), (std::vector<Element>{0}));
  const FiniteGroup z6 = cyclic_group(6);
  EXPECT_TRUE(is_cyclic(z6));
  EXPECT_EQ(order_census(z6), (OrderCensus{{1, 1}, {2, 1}, {3, 2}, {6, 2}}));
  EXPECT_EQ(element_order(cyclic_group(15), 1), 15u);
  EXPECT_THROW(cyclic_group(0), InvalidGroup);
}

TEST(DirectProduct, Examples) {
  const FiniteGroup z15 = direct_product(cyclic_group(3), cyclic_group(5));
  EXPECT_EQ(z15.order(), 15u);
  EXPECT_TRUE(is_cyclic(z15));
  EXPECT_FALSE(is_cyclic(direct_product(cyclic_group(2), cyclic_group(2))));
  const FiniteGroup s3 = build_nonabelian_pq(2, 3);
  EXPECT_TRUE(direct_product(s3, cyclic_group(1)) == s3);
  EXPECT_THROW(direct_product(cyclic_group(30), cyclic_group(30)), CapExceeded);
}

TEST(AutomorphismsCyclic, Examples) {
  EXPECT_EQ(automorphisms_cyclic(1).group_order, 1u);
  const auto a15 = automorphisms_cyclic(15);
  EXPECT_EQ(a15.units, (std::vector<std::uint64_t>{1, 2, 4, 7, 8, 11, 13, 14}));
  EXPECT_EQ(automorphisms_cyclic(105).group_order, 2u * 4u * 6u);
}

TEST(AutomorphismsCyclic, EachMapIsAnAutomorphism) {
  for (std::uint64_t n = 1; n <= 40; ++n) {
    const FiniteGroup z = cyclic_group(n);
    const auto aut = automorphisms_cyclic(n);
    EXPECT_EQ(aut.group_order, oracle::phi_by_counting(n));
    for (const Permutation& f : aut.maps) {
      EXPECT_EQ(std::set<Element>(f.begin(), f.end()).size(), n);
      for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) ASSERT_EQ(f[z(a, b)], z(f[a], f[b]));
    }
  }
}

TEST(UnitOfOrder, Examples) {
  EXPECT_EQ(unit_of_order(3, 2), 2u);
  EXPECT_EQ(unit_of_order(7, 3), 2u);
  EXPECT_EQ(unit_of_order(13, 3), 3u);
  EXPECT_THROW(unit_of_order(7, 5), InvalidGroup);
  EXPECT_THROW(unit_of_order(9, 2), InvalidGroup);
}

TEST(UnitOfOrder, SmallestAgainstBruteForce) {
  for (std::uint64_t q = 3; q < 400; ++q) {
    if (!oracle::is_prime_naive(q)) continue;
    for (std::uint64_t p : oracle::primes_dividing(q - 1))
      ASSERT_EQ(unit_of_order(q, p), oracle::smallest_unit_of_order(q, p)) << q << " " << p;
  }
}

TEST(Semidirect, TrivialActionIsDirectProduct) {
  const FiniteGroup h = cyclic_group(4), k = cyclic_group(3);
  EXPECT_TRUE(semidirect(h, k, Action::trivial(h, k)) == direct_product(h, k));
}

TEST(Semidirect, DihedralOfOrderSix) {
  const FiniteGroup z3 = cyclic_group(3);
  const Action act = Action::from_cyclic_generator(z3, 2, negation(3));
  const FiniteGroup g = semidirect(z3, act.source, act);
  EXPECT_EQ(g.order(), 6u);
  EXPECT_FALSE(is_abelian(g));
  EXPECT_EQ(order_census(g), oracle::census_by_powers(g.table(), 6, 0));
  EXPECT_EQ(order_census(g), (OrderCensus{{1, 1}, {2, 3}, {3, 2}}));
  const oracle::S3 s3;
  EXPECT_TRUE(are_isomorphic(g, FiniteGroup(6, s3.table, 0)));
}

TEST(Semidirect, OrderTwentyOne) {
  const FiniteGroup z7 = cyclic_group(7);
  const std::uint64_t u = unit_of_order(7, 3);
  Permutation scale(7);
  for (Element x = 0; x < 7; ++x) scale[x] = static_cast<Element>(u * x % 7);
  const Action act = Action::from_cyclic_generator(z7, 3, scale);
  const FiniteGroup g = semidirect(z7, act.source, act);
  EXPECT_EQ(g.order(), 21u);
  EXPECT_FALSE(is_abelian(g));
  EXPECT_EQ(oracle::census_by_powers(g.table(), 21, 0).count(21), 0u);
}

TEST(Semidirect, PairEncodingAndInverseFormula) {
  const FiniteGroup z5 = cyclic_group(5);
  Permutation times2(5);
  for (Element x = 0; x < 5; ++x) times2[x] = (2 * x) % 5;
  const Action act = Action::from_cyclic_generator(z5, 4, times2);
  const FiniteGroup g = semidirect(z5, act.source, act);
  EXPECT_EQ(g.identity(), 0u);
  for (Element h1 = 0; h1 < 5; ++h1)
    for (Element k1 = 0; k1 < 4; ++k1)
      for (Element h2 = 0; h2 < 5; ++h2)
        for (Element k2 = 0; k2 < 4; ++k2) {
          const Element twisted = (h1 + act.images[k1][h2]) % 5;
          ASSERT_EQ(g(h1 * 4 + k1, h2 * 4 + k2), twisted * 4 + (k1 + k2) % 4);
        }
}

TEST(Action, RejectsInvalidImages) {
  const FiniteGroup z3 = cyclic_group(3), z2 = cyclic_group(2);
  Action not_bijective = Action::trivial(z3, z2);
  not_bijective.images[1] = {0, 0, 0};
  EXPECT_THROW(not_bijective.validate(), InvalidGroup);
  EXPECT_THROW(semidirect(z3, z2, not_bijective), InvalidGroup);

  Action not_auto = Action::trivial(z3, z2);
  not_auto.images[1] = {1, 0, 2};  // moves the identity
  EXPECT_THROW(not_auto.validate(), InvalidGroup);

  // x -> 2x on Z_5 has order 4, so it does not give a homomorphism from Z_2.
  const FiniteGroup z5 = cyclic_group(5);
  Action not_hom = Action::trivial(z5, z2);
  not_hom.images[1] = {0, 2, 4, 1, 3};
  EXPECT_THROW(not_hom.validate(), InvalidGroup);
  EXPECT_THROW(Action::from_cyclic_generator(z5, 2, {0, 2, 4, 1, 3}), InvalidGroup);

  Action wrong_count = Action::trivial(z3, z2);
  wrong_count.images.pop_back();
  EXPECT_THROW(wrong_count.validate(), InvalidGroup);

  const Action for_other = Action::trivial(z5, z2);
  EXPECT_THROW(semidirect(z3, z2, for_other), InvalidGroup);
}

// Every action of Z_k on Z_m sends the generator to some x -> u x; sweep all
// units u and check accepted/rejected against u^k = 1 mod m.
TEST(Action, AcceptanceMatchesHomomorphismCondition) {
  for (std::size_t m = 2; m <= 12; ++m)
    for (std::size_t k = 1; k <= 6; ++k) {
      if (m * k > 64) continue;
      const FiniteGroup h = cyclic_group(m);
      for (const auto& [u, map] : [&] {
             const auto aut = automorphisms_cyclic(m);
             std::vector<std::pair<std::uint64_t, Permutation>> v;
             for (std::size_t i = 0; i < aut.units.size(); ++i) v.emplace_back(aut.units[i], aut.maps[i]);
             return v;
           }()) {
        auto build = [&] {
          const Action act = Action::from_cyclic_generator(h, k, map);
          act.validate();
          return semidirect(h, act.source, act);
        };
        if (pow_mod(u, k, m) == 1) {
          EXPECT_NO_THROW(build()) << m << " " << k << " " << u;
        } else {
          EXPECT_THROW(build(), InvalidGroup) << m << " " << k << " " << u;
        }
      }
    }
}

TEST(BuildNonabelianPq, Examples) {
  const FiniteGroup g6 = build_nonabelian_pq(2, 3);
  EXPECT_EQ(g6.order(), 6u);
  EXPECT_FALSE(is_abelian(g6));
  const FiniteGroup g21 = build_nonabelian_pq(3, 7);
  EXPECT_EQ(g21.order(), 21u);
  EXPECT_FALSE(is_abelian(g21));
  EXPECT_TRUE(is_solvable(g21));
  EXPECT_EQ(order_census(build_nonabelian_pq(2, 5)), (OrderCensus{{1, 1}, {2, 5}, {5, 4}}));
  EXPECT_THROW(build_nonabelian_pq(3, 5), InvalidGroup);
  EXPECT_THROW(build_nonabelian_pq(3, 3), InvalidGroup);
}

TEST(BuildNonabelianPq, NonabelianForAllPairsUpTo200) {
  for (std::uint64_t q = 3; q <= 100; ++q) {
    if (!oracle::is_prime_naive(q)) continue;
    for (std::uint64_t p : oracle::primes_dividing(q - 1)) {
      if (p * q > 200) continue;
      const FiniteGroup g = build_nonabelian_pq(p, q);
      EXPECT_EQ(g.order(), p * q);
      EXPECT_FALSE(is_abelian(g)) << p << " " << q;
    }
  }
}

TEST(BuildWitness, Examples) {
  const FiniteGroup w4 = build_witness(4);
  EXPECT_EQ(order_census(w4), (OrderCensus{{1, 1}, {2, 3}}));
  EXPECT_FALSE(is_cyclic(w4));
  EXPECT_FALSE(is_abelian(build_witness(6)));
  EXPECT_THROW(build_witness(7), InvalidGroup);
  EXPECT_THROW(build_witness(15), InvalidGroup);
  EXPECT_THROW(build_witness(1), InvalidGroup);
  EXPECT_THROW(build_witness(1365), CapExceeded);
}

TEST(BuildWitness, OrderOf1365WithRaisedCap) {
  const FiniteGroup w = build_witness(1365, 1365);
  EXPECT_EQ(w.order(), 1365u);
  EXPECT_FALSE(is_abelian(w));
  EXPECT_FALSE(is_cyclic(w));
  EXPECT_EQ(w.label(), "Z_7 x| Z_3 x Z_65");
}

TEST(BuildWitness, NonCyclicForEveryEligibleOrderUpTo200) {
  for (std::uint64_t n = 1; n <= 200; ++n) {
    if (std::gcd(n, oracle::phi_by_counting(n)) == 1) continue;
    const FiniteGroup w = build_witness(n);
    EXPECT_EQ(w.order(), n);
    EXPECT_EQ(oracle::census_by_powers(w.table(), n, w.identity()).count(n), 0u) << n;
  }
}

}  // namespace
}  // namespace cyclicity
