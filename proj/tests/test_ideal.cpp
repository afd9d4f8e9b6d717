#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "closure/errors.hpp"
#include "closure/ideal.hpp"
#include "closure/survey.hpp"  // is_subset

using namespace closure;

namespace {

SemigroupIdeal ideal(const SemigroupPtr& s, std::vector<Elt> gens) {
  return SemigroupIdeal::from_generators(s, gens);
}

std::vector<Elt> min_gens(const SemigroupIdeal& i) { return i.minimal_generators(); }

// Random nonzero proper ideal with 1..3 generators drawn from S inside [1, 35].
SemigroupIdeal random_ideal(const SemigroupPtr& s, std::mt19937_64& rng) {
  std::vector<Elt> gens;
  std::size_t k = 1 + rng() % 3;
  while (gens.size() < k) {
    Elt b = 1 + static_cast<Elt>(rng() % 35);
    if (s->contains(b)) gens.push_back(b);
  }
  return SemigroupIdeal::from_generators(s, gens);
}

const std::vector<std::vector<Elt>> kRings = {{2, 3}, {2, 5}, {3, 4}, {3, 7}, {4, 5}};

}  // namespace

TEST_CASE("maximal ideal and test ideal of small rings") {
  auto s25 = make_semigroup({2, 5});
  CHECK(min_gens(maximal_ideal(s25)) == std::vector<Elt>{2, 5});
  CHECK(min_gens(test_ideal(s25)) == std::vector<Elt>{4, 5});

  auto s23 = make_semigroup({2, 3});
  CHECK(test_ideal(s23) == maximal_ideal(s23));
  auto s345 = make_semigroup({3, 4, 5});
  CHECK(test_ideal(s345) == maximal_ideal(s345));
  CHECK(min_gens(test_ideal(s345)) == std::vector<Elt>{3, 4, 5});

  // DVR: the test ideal is the whole ring.
  auto dvr = make_semigroup({1});
  CHECK(test_ideal(dvr).is_unit());
}

TEST_CASE("closures and colon families in the ring of 2 and 5") {
  auto s = make_semigroup({2, 5});
  CHECK(min_gens(tight_closure(ideal(s, {4}))) == std::vector<Elt>{4, 5});
  CHECK(min_gens(t_basically_full_closure(ideal(s, {4}), maximal_ideal(s))) ==
        std::vector<Elt>{4, 7});
  // For every principal (t^n) with n at least the conductor exponent:
  // closure adjoins n+1, the basically-full closure adjoins n+3.
  for (Elt n = 4; n <= 20; ++n) {
    CAPTURE(n);
    auto i = ideal(s, {n});
    CHECK(min_gens(tight_closure(i)) == std::vector<Elt>{n, n + 1});
    CHECK(min_gens(t_basically_full_closure(i, maximal_ideal(s))) ==
          std::vector<Elt>{n, n + 3});
  }
  CHECK(tight_closure(ideal(s, {4})) == integral_closure(ideal(s, {4})));
}

TEST_CASE("basic operations") {
  auto s = make_semigroup({2, 5});
  auto a = ideal(s, {4}), b = ideal(s, {5});
  CHECK(min_gens(sum(a, b)) == std::vector<Elt>{4, 5});
  CHECK(min_gens(product(a, b)) == std::vector<Elt>{9});
  CHECK(min_gens(intersect(a, b)) == std::vector<Elt>{9, 10});
  CHECK(colon(a, SemigroupIdeal::unit(s)) == a);
  // Bracket powers of (4,5): generated by {8,10} and {16,20}; the second
  // generator is redundant since 10-8 and 20-16 lie in S.
  CHECK(min_gens(frobenius_power(ideal(s, {4, 5}), 2)) == std::vector<Elt>{8});
  CHECK(min_gens(frobenius_power(ideal(s, {4, 5}), 4)) == std::vector<Elt>{16});
  CHECK(frobenius_power(ideal(s, {4, 5}), 2).contains(10));
}

TEST_CASE("colon worked examples") {
  auto s = make_semigroup({2, 5});
  // (4) = {4,6,8,9,10,...}.  Any x >= 4 in S has x+5 >= 9 in (4); x = 2 fails
  // since 7 is not in (4).  So ((4) : (5)) is the full cut at 4.
  CHECK(min_gens(colon(ideal(s, {4}), ideal(s, {5}))) == std::vector<Elt>{4, 5});
  // ((4) : (2)): x+2 in (4) admits x = 2,4,6,7,8,... but not 5 (7 not in (4)),
  // which is exactly the principal ideal (2).
  CHECK(min_gens(colon(ideal(s, {4}), ideal(s, {2}))) == std::vector<Elt>{2});
}

TEST_CASE("zero and unit ideals") {
  auto s = make_semigroup({2, 5});
  auto z = SemigroupIdeal::zero(s);
  auto u = SemigroupIdeal::unit(s);
  CHECK(z.is_zero());
  CHECK(u.is_unit());
  CHECK_FALSE(u.is_m_primary());
  CHECK(SemigroupIdeal::from_generators(s, {}).is_zero());
  CHECK(SemigroupIdeal::from_generators(s, {0, 4}).is_unit());

  auto i = ideal(s, {4});
  CHECK(sum(z, i) == i);
  CHECK(product(z, i).is_zero());
  CHECK(intersect(z, i).is_zero());
  CHECK(colon(z, i).is_zero());
  CHECK(product(u, i) == i);
  CHECK(t_basically_full_closure(z, i).is_zero());
  CHECK(tight_closure(u).is_unit());

  CHECK_THROWS_AS(z.min_element(), ZeroIdeal);
  CHECK_THROWS_AS(z.minimal_generators(), ZeroIdeal);
  CHECK_THROWS_AS(colon(i, z), ColonByZero);
  CHECK_THROWS_AS(tight_closure(z), ZeroIdeal);
  CHECK_THROWS_AS(frobenius_power(z, 2), ZeroIdeal);
  CHECK_THROWS_AS(t_basically_full_closure(i, z), ColonByZero);
  CHECK_THROWS_AS(is_basically_full(z), NotMPrimary);
  CHECK_THROWS_AS(is_basically_full(u), NotMPrimary);
}

TEST_CASE("input validation") {
  auto s = make_semigroup({2, 5});
  CHECK_THROWS_AS(ideal(s, {3}), GeneratorNotInRing);
  CHECK_THROWS_AS(ideal(s, {-2}), GeneratorNotInRing);
  auto s2 = make_semigroup({2, 3});
  CHECK_THROWS_AS(sum(ideal(s, {4}), ideal(s2, {4})), RingMismatch);
  CHECK_THROWS_AS(frobenius_power(ideal(s, {4}), 0), Error);
}

TEST_CASE("a non-basically-full ideal in the ring of 2 and 3") {
  auto s = make_semigroup({2, 3});
  auto i = ideal(s, {2});
  CHECK(min_gens(t_basically_full_closure(i, maximal_ideal(s))) ==
        std::vector<Elt>{2, 3});
  CHECK_FALSE(is_basically_full(i));
  CHECK(is_star_basically_full(i));  // (mI : m) = (2,3) = I^*
  CHECK(is_basically_full(maximal_ideal(s)));
}

TEST_CASE("colon is adjoint to the product") {
  std::mt19937_64 rng(20240814);
  for (const auto& g : kRings) {
    auto s = make_semigroup(g);
    for (int trial = 0; trial < 60; ++trial) {
      auto i = random_ideal(s, rng);
      auto j = random_ideal(s, rng);
      auto k = random_ideal(s, rng);
      CAPTURE(g[0]);
      // K subset (I : J)  iff  JK subset I.
      CHECK(is_subset(k, colon(i, j)) == is_subset(product(j, k), i));
      // J * (I : J) subset I.
      CHECK(is_subset(product(j, colon(i, j)), i));
    }
  }
}

TEST_CASE("closure laws for the tight closure") {
  std::mt19937_64 rng(7);
  for (const auto& g : kRings) {
    auto s = make_semigroup(g);
    for (int trial = 0; trial < 60; ++trial) {
      auto i = random_ideal(s, rng);
      auto j = random_ideal(s, rng);
      auto istar = tight_closure(i);
      CHECK(is_subset(i, istar));                       // extensive
      CHECK(tight_closure(istar) == istar);             // idempotent
      CHECK(is_subset(istar, tight_closure(sum(i, j))));  // monotone (I sub I+J)
      // submultiplicative: (IJ)^* subset (I^* J^*)^*.
      CHECK(is_subset(tight_closure(product(i, j)),
                      tight_closure(product(istar, tight_closure(j)))));
    }
  }
}

TEST_CASE("the test ideal multiplies closures back into the ideal") {
  std::mt19937_64 rng(99);
  for (const auto& g : kRings) {
    auto s = make_semigroup(g);
    auto tau = test_ideal(s);
    for (int trial = 0; trial < 60; ++trial) {
      auto i = random_ideal(s, rng);
      auto istar = tight_closure(i);
      CHECK(product(tau, i) == product(tau, istar));  // strong test ideal
      CHECK(is_subset(product(tau, istar), i));
      // The closure (tau I : tau) recovers exactly the tight closure.
      CHECK(t_basically_full_closure(i, tau) == istar);
    }
  }
}

TEST_CASE("bracket powers respect containment and membership") {
  std::mt19937_64 rng(5);
  auto s = make_semigroup({2, 5});
  for (int trial = 0; trial < 40; ++trial) {
    auto i = random_ideal(s, rng);
    for (Elt q : {2, 4, 8}) {
      auto iq = frobenius_power(i, q);
      CAPTURE(q);
      for (Elt g : i.minimal_generators()) CHECK(iq.contains(q * g));
      CHECK(is_subset(iq, i));  // q*g = g + (q-1)*g and (q-1)*g in S
    }
  }
}

TEST_CASE("threshold promise is sound") {
  std::mt19937_64 rng(31);
  for (const auto& g : kRings) {
    auto s = make_semigroup(g);
    for (int trial = 0; trial < 30; ++trial) {
      auto i = random_ideal(s, rng);
      for (Elt b = i.threshold(); b < i.threshold() + 50; ++b) CHECK(i.contains(b));
      auto q = colon(i, random_ideal(s, rng));
      for (Elt b = q.threshold(); b < q.threshold() + 50; ++b) CHECK(q.contains(b));
    }
  }
}

TEST_CASE("minimal generators regenerate the ideal") {
  std::mt19937_64 rng(123);
  for (const auto& g : kRings) {
    auto s = make_semigroup(g);
    for (int trial = 0; trial < 40; ++trial) {
      auto i = random_ideal(s, rng);
      auto back = SemigroupIdeal::from_generators(s, i.minimal_generators());
      CHECK(back == i);
      // Antichain: no generator divides another.
      auto mg = i.minimal_generators();
      for (Elt a : mg)
        for (Elt b : mg)
          if (a != b) CHECK_FALSE(s->contains(b - a));
    }
  }
}
