#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nsg/semigroup.hpp>

#include <random>
#include <set>

#include "support/enumerate.hpp"
#include "support/oracles.hpp"

using namespace nsg;

TEST_CASE("construction and basic invariants") {
  NumericalSemigroup h({5, 7, 9, 13});
  CHECK(h.frobenius() == 11);
  CHECK(h.generators() == std::vector<long long>{5, 7, 9, 13});
  CHECK(h.genus() == 7);

  NumericalSemigroup n({1});
  CHECK(n.frobenius() == -1);
  CHECK(n.gaps().empty());
  CHECK(n.is_naturals());

  CHECK(NumericalSemigroup({4, 9, 11, 14}).frobenius() == 10);

  // redundant generators are dropped
  CHECK(NumericalSemigroup({5, 7, 9, 12, 13}).generators() ==
        std::vector<long long>{5, 7, 9, 13});

  CHECK_THROWS_AS(NumericalSemigroup(std::vector<long long>{}), EmptyInput);
  CHECK_THROWS_AS(NumericalSemigroup({0, 3}), EmptyInput);
  CHECK_THROWS_AS(NumericalSemigroup({4, 6}), GcdNotOne);
}

TEST_CASE("membership matches the brute-force expansion") {
  NumericalSemigroup h({5, 7, 9, 13});
  CHECK(h.contains(12));
  CHECK(!h.contains(11));
  CHECK(h.contains(0));
  CHECK(!h.contains(-3));
  CHECK(h.contains(h.conductor() + 100));

  std::mt19937 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<long long> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(2 + static_cast<long long>(rng() % 12));
    gens.push_back(gens[0] + 1);  // force gcd 1
    NumericalSemigroup rh(gens);
    auto oracle = oracle::monoid_members(rh.generators(), rh.conductor() + 20);
    for (long long z = 0; z < rh.conductor() + 20; ++z)
      CHECK(rh.contains(z) == (oracle[static_cast<std::size_t>(z)] != 0));
  }
}

TEST_CASE("pseudo-Frobenius and type") {
  CHECK(pseudo_frobenius(NumericalSemigroup({5, 7, 9, 13})) == std::vector<long long>{8, 11});
  CHECK(pseudo_frobenius(NumericalSemigroup({4, 9, 11, 14})) == std::vector<long long>{5, 7, 10});
  CHECK(pseudo_frobenius(NumericalSemigroup({6, 8, 10, 11})) == std::vector<long long>{13, 15});
  CHECK(NumericalSemigroup({6, 8, 10, 11}).frobenius() == 15);

  auto inv = invariants(NumericalSemigroup({4, 9, 11, 14}));
  CHECK(inv.type == 3);
  CHECK(inv.embedding_dim == 4);
  CHECK(inv.multiplicity == 4);
  CHECK(inv.embedding_dim <= inv.multiplicity);

  auto nat = invariants(NumericalSemigroup::naturals());
  CHECK(nat.type == 1);
  CHECK(nat.pseudo_frobenius.empty());
  CHECK(nat.symmetric);
}

TEST_CASE("PF elements are incomparable under the semigroup order") {
  for (const auto& h : testsupport::all_semigroups_up_to_genus(8)) {
    auto pf = pseudo_frobenius(h);
    for (std::size_t i = 0; i < pf.size(); ++i)
      for (std::size_t j = 0; j < pf.size(); ++j)
        if (i != j) CHECK(!h.contains(pf[j] - pf[i]));
  }
}

TEST_CASE("apery sets") {
  CHECK(NumericalSemigroup({2, 5}).apery_set(2) == std::vector<long long>{0, 5});
  CHECK(NumericalSemigroup::naturals().apery_set(1) == std::vector<long long>{0});
  CHECK(NumericalSemigroup({3, 7, 8}).apery_set(3) == std::vector<long long>{0, 7, 8});
  CHECK_THROWS_AS(NumericalSemigroup({2, 5}).apery_set(3), NotAMember);

  // z ∈ H ⟺ the apery element of its class is ≤ z
  std::mt19937 rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<long long> gens{2 + static_cast<long long>(rng() % 9)};
    gens.push_back(gens[0] + 1 + static_cast<long long>(rng() % 7));
    gens.push_back(gens[0] + 1);  // keep the gcd at one
    NumericalSemigroup h(gens);
    const long long m = h.multiplicity();
    auto ap = h.apery_set(m);
    for (long long z = 0; z < h.conductor() + 2 * m; ++z)
      CHECK(h.contains(z) == (ap[static_cast<std::size_t>(z % m)] <= z));
  }
}

TEST_CASE("symmetry characterizations agree") {
  for (const auto& h : testsupport::all_semigroups_up_to_genus(9)) {
    const bool by_genus = is_symmetric(h);
    const bool by_type = invariants(h).type == 1;
    CHECK(by_genus == by_type);
    if (!h.is_naturals()) {
      bool by_pairing = true;
      for (long long z = -2; z <= h.frobenius() + 2; ++z)
        if (h.contains(z) == h.contains(h.frobenius() - z)) by_pairing = false;
      CHECK(by_genus == by_pairing);
    }
  }
}

TEST_CASE("oversemigroups against the exhaustive subset oracle") {
  {
    auto over = oversemigroups(NumericalSemigroup({2, 3}));
    CHECK(over.size() == 2);
  }
  {
    CHECK(oversemigroups(NumericalSemigroup({3, 5})).size() == 5);
    CHECK(oracle::oversemigroup_gap_fillings({3, 5}, 7).size() == 5);
  }
  {
    auto over = oversemigroups(NumericalSemigroup({3, 4, 5}));
    REQUIRE(over.size() == 3);
    CHECK(over[0].generators() == std::vector<long long>{3, 4, 5});
    CHECK(over[1].generators() == std::vector<long long>{2, 3});
    CHECK(over[2].generators() == std::vector<long long>{1});
  }
  // full agreement with the 2^gaps oracle on every semigroup of genus <= 6
  for (const auto& h : testsupport::all_semigroups_up_to_genus(6)) {
    if (h.is_naturals()) continue;
    auto over = oversemigroups(h);
    auto fillings = oracle::oversemigroup_gap_fillings(h.generators(), h.frobenius());
    REQUIRE(over.size() == fillings.size());
    std::set<std::set<long long>> got;
    for (const auto& t : over) {
      std::set<long long> filled;
      for (long long z : h.gaps())
        if (t.contains(z)) filled.insert(z);
      got.insert(filled);
    }
    CHECK(got == fillings);
  }
}

TEST_CASE("every oversemigroup contains H and is closed under addition") {
  for (auto gens : std::vector<std::vector<long long>>{{4, 7, 9}, {5, 7, 9, 13}, {6, 8, 10, 11}}) {
    NumericalSemigroup h(gens);
    for (const auto& t : oversemigroups(h)) {
      for (long long z = 0; z <= h.conductor(); ++z)
        if (h.contains(z)) CHECK(t.contains(z));
      for (long long x = 0; x <= t.conductor(); ++x)
        for (long long y = x; y <= t.conductor(); ++y)
          if (t.contains(x) && t.contains(y)) CHECK(t.contains(x + y));
    }
  }
}

TEST_CASE("oversemigroups enumeration limit") {
  // genus 4 with limit 3
  CHECK_THROWS_AS(oversemigroups(NumericalSemigroup({5, 6, 7, 8, 9}), 3), TooManyGaps);
}

TEST_CASE("gluings") {
  CHECK(glue(NumericalSemigroup({4, 7, 9}), 15).generators() ==
        std::vector<long long>{8, 14, 15, 18});
  CHECK(glue(NumericalSemigroup({3, 4, 5}), 9).generators() ==
        std::vector<long long>{6, 8, 9, 10});
  CHECK_THROWS_AS(glue(NumericalSemigroup({4, 7, 9}), 8), AlphaEven);
  CHECK_THROWS_AS(glue(NumericalSemigroup({4, 7, 9}), 5), AlphaNotInH1);
  CHECK_THROWS_AS(glue(NumericalSemigroup({4, 7, 9}), 9), AlphaIsGenerator);

  for (auto [gens, alpha] : std::vector<std::pair<std::vector<long long>, long long>>{
           {{4, 7, 9}, 11}, {{4, 7, 9}, 15}, {{3, 4, 5}, 7}, {{3, 4, 5}, 11}, {{2, 5}, 9}}) {
    NumericalSemigroup h1(gens);
    NumericalSemigroup glued = glue(h1, alpha);
    CHECK(glued.multiplicity() == std::min(2 * h1.multiplicity(), alpha));
    CHECK(glued.embedding_dim() == h1.embedding_dim() + 1);
  }
}

TEST_CASE("genus tree enumeration counts match the known sequence") {
  auto all = testsupport::all_semigroups_up_to_genus(12);
  std::vector<int> per_genus(13, 0);
  for (const auto& h : all) per_genus[static_cast<std::size_t>(h.genus())]++;
  CHECK(per_genus == std::vector<int>{1, 1, 2, 4, 7, 12, 23, 39, 67, 118, 204, 343, 592});
}
