#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nsg/relative_ideal.hpp>

#include <random>

#include "support/oracles.hpp"

using namespace nsg;

namespace {

RelativeIdeal random_fractional(const NumericalSemigroup& h, std::mt19937& rng) {
  std::vector<long long> gens;
  int n = 1 + static_cast<int>(rng() % 3);
  for (int i = 0; i < n; ++i)
    gens.push_back(static_cast<long long>(rng() % (2 * h.conductor() + 3)) - h.conductor() / 2);
  return RelativeIdeal(h, gens);
}

}  // namespace

TEST_CASE("canonical ideals of the worked rings") {
  CHECK(canonical_ideal(NumericalSemigroup({5, 7, 9, 13})).gens() ==
        std::vector<long long>{0, 3});
  CHECK(canonical_ideal(NumericalSemigroup({4, 9, 11, 14})).gens() ==
        std::vector<long long>{0, 3, 5});
  CHECK(canonical_ideal(NumericalSemigroup({3, 7, 8})).gens() == std::vector<long long>{0, 1});
  CHECK(canonical_ideal(NumericalSemigroup({2, 5})).gens() == std::vector<long long>{0});
  CHECK(canonical_ideal(NumericalSemigroup::naturals()).gens() == std::vector<long long>{0});
}

TEST_CASE("products") {
  NumericalSemigroup h({5, 7, 9, 13});
  RelativeIdeal k = canonical_ideal(h);
  CHECK(product(k, RelativeIdeal::unit(h)) == k);
  CHECK(product(k, k).gens() == std::vector<long long>{0, 3, 6});
  RelativeIdeal i(h, {7, 10});
  CHECK(product(i, i).gens() == std::vector<long long>{14, 17, 20});

  // members of a product match the Minkowski oracle
  std::mt19937 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    auto e = random_fractional(h, rng);
    auto f = random_fractional(h, rng);
    auto p = product(e, f);
    const long long off = e.min_val() + f.min_val();
    const long long hi = p.stable_from() + 5 - off;
    auto base = oracle::monoid_members(h.generators(), hi + h.conductor());
    std::vector<long long> eg, fg;
    for (long long g : e.gens()) eg.push_back(g - e.min_val());
    for (long long g : f.gens()) fg.push_back(g - f.min_val());
    auto em = oracle::ideal_members(base, eg, hi);
    auto fm = oracle::ideal_members(base, fg, hi);
    auto pm = oracle::minkowski(em, fm, hi);
    for (long long z = 0; z < hi; ++z)
      CHECK(p.contains(z + off) == (pm[static_cast<std::size_t>(z)] != 0));
  }
}

TEST_CASE("colons") {
  NumericalSemigroup h({5, 7, 9, 13});
  RelativeIdeal r = RelativeIdeal::unit(h);
  BlowupResult bl = blowup(h);
  RelativeIdeal s = semigroup_ideal(h, bl.ring);
  CHECK(colon(r, s).gens() == std::vector<long long>{7, 9, 10, 13});
  CHECK(colon(r, r) == r);

  NumericalSemigroup h2({3, 7, 8});
  RelativeIdeal v = semigroup_ideal(h2, NumericalSemigroup::naturals());
  CHECK(colon(RelativeIdeal::unit(h2), v).gens() == std::vector<long long>{6, 7, 8});
}

TEST_CASE("lengths") {
  NumericalSemigroup h({5, 7, 9, 13});
  RelativeIdeal k = canonical_ideal(h);
  BlowupResult bl = blowup(h);
  RelativeIdeal s = semigroup_ideal(h, bl.ring);
  CHECK(length_between(s, k) == 2);
  // the two missing members are exactly t^6 and t^11
  CHECK((s.contains(6) && !k.contains(6)));
  CHECK((s.contains(11) && !k.contains(11)));
  CHECK(length_between(RelativeIdeal::unit(h), bl.conductor_ideal) == 2);
  CHECK(length_between(k, k) == 0);
  CHECK_THROWS_AS(length_between(k, s), NotContained);
}

TEST_CASE("principal colengths and additivity") {
  NumericalSemigroup h({4, 7, 9});
  for (long long a : {4LL, 7LL, 9LL, 11LL, 16LL})
    if (h.contains(a)) CHECK(colength(RelativeIdeal::principal(h, a)) == a);

  std::mt19937 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    auto e = random_fractional(h, rng);
    RelativeIdeal f = product(e, RelativeIdeal::maximal_ideal(h));
    RelativeIdeal g = product(f, RelativeIdeal::maximal_ideal(h));
    CHECK(length_between(e, g) == length_between(e, f) + length_between(f, g));
  }
}

TEST_CASE("canonical duality") {
  std::mt19937 rng(41);
  for (auto gens : std::vector<std::vector<long long>>{{5, 7, 9, 13}, {4, 7, 9}, {6, 8, 10, 11},
                                                       {3, 7, 8}, {2, 5}}) {
    NumericalSemigroup h(gens);
    RelativeIdeal k = canonical_ideal(h);
    CHECK(colon(k, k) == RelativeIdeal::unit(h));
    for (int trial = 0; trial < 12; ++trial) {
      auto e = random_fractional(h, rng);
      CHECK(colon(k, colon(k, e)) == e);
    }
  }
}

TEST_CASE("blowups of the worked rings") {
  {
    auto bl = blowup(NumericalSemigroup({5, 7, 9, 13}));
    CHECK(bl.ring.generators() == std::vector<long long>{3, 5, 7});
    CHECK(bl.stabilization_exponent == 2);
  }
  CHECK(blowup(NumericalSemigroup({6, 8, 10, 11})).ring.generators() ==
        std::vector<long long>{2, 11});
  CHECK(blowup(NumericalSemigroup({4, 9, 11, 14})).ring.generators() ==
        std::vector<long long>{3, 4, 5});
  CHECK(blowup(NumericalSemigroup({3, 7, 8})).ring.is_naturals());
  CHECK(blowup(NumericalSemigroup({2, 5})).ring.generators() == std::vector<long long>{2, 5});

  // K^n stabilizes to the member set of S, and c is an ideal of S
  for (auto gens : std::vector<std::vector<long long>>{{5, 7, 9, 13}, {6, 8, 10, 11}, {4, 7, 9}}) {
    NumericalSemigroup h(gens);
    auto bl = blowup(h);
    RelativeIdeal k = canonical_ideal(h);
    RelativeIdeal power = k;
    for (int i = 1; i < bl.stabilization_exponent; ++i) power = product(power, k);
    for (long long z = 0; z < power.stable_from() + 3; ++z)
      CHECK(power.contains(z) == bl.ring.contains(z));
    for (long long g : bl.conductor_ideal.gens())
      for (long long s : bl.ring.members_upto(bl.ring.conductor() + 2))
        CHECK(bl.conductor_ideal.contains(g + s));
  }
}

TEST_CASE("minimal generator counts") {
  NumericalSemigroup h({5, 7, 9, 13});
  auto bl = blowup(h);
  CHECK(minimal_generators_over(h, semigroup_ideal(h, bl.ring)) == 3);  // r + 1
  CHECK(minimal_generators_over(h, RelativeIdeal::unit(h)) == 1);
  NumericalSemigroup h2({4, 7, 9});
  CHECK(minimal_generators_over(h2, semigroup_ideal(h2, NumericalSemigroup({4, 5, 6, 7}))) == 3);

  std::mt19937 rng(53);
  for (int trial = 0; trial < 20; ++trial) {
    auto e = random_fractional(h, rng);
    CHECK(minimal_generators_over(h, e) == e.mu());
  }
}

TEST_CASE("colon identities on the 2-AGL worked rings") {
  for (auto gens :
       std::vector<std::vector<long long>>{{5, 7, 9, 13}, {4, 9, 11, 14}, {6, 8, 10, 11}, {3, 7, 8}}) {
    NumericalSemigroup h(gens);
    RelativeIdeal r = RelativeIdeal::unit(h);
    RelativeIdeal k = canonical_ideal(h);
    auto bl = blowup(h);
    RelativeIdeal s = semigroup_ideal(h, bl.ring);
    RelativeIdeal c = bl.conductor_ideal;
    CHECK(colon(k, s) == c);
    CHECK(colon(r, k) == c);
    CHECK(length_between(s, r) == length_between(k, r) + length_between(r, c));
  }
}

TEST_CASE("base mismatch is rejected") {
  NumericalSemigroup h1({2, 5});
  NumericalSemigroup h2({3, 4});
  CHECK_THROWS_AS(product(RelativeIdeal::unit(h1), RelativeIdeal::unit(h2)), BaseMismatch);
}
