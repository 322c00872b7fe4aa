// Acceptance suite: one pass/fail line per criterion, exit code = number of
#include <numeric>
// failing criteria. Every tolerance is exact (integer equality throughout).

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nsg/classify.hpp>
#include <nsg/extensions.hpp>
#include <nsg/presentation.hpp>
#include <nsg/trunc_algebra.hpp>
#include <nsg/ulrich.hpp>

#include "support/enumerate.hpp"

using namespace nsg;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& title, const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  auto start = std::chrono::steady_clock::now();
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  std::printf("criterion %2d [%s]: %s (%lldms)%s%s\n", number, title.c_str(),
              ok ? "PASS" : "FAIL", static_cast<long long>(ms), detail.empty() ? "" : " — ",
              detail.c_str());
  if (!ok) ++g_failures;
}

std::set<std::vector<long long>> ulrich_sets(const NumericalSemigroup& h, long long bound = -1) {
  std::set<std::vector<long long>> out;
  for (const auto& v : enumerate_monomial_ulrich(h, bound).found) out.insert(v.gens);
  return out;
}

}  // namespace

int main() {
  criterion(1, "classification golden set", [](std::string& detail) {
    for (auto gens : std::vector<std::vector<long long>>{
             {5, 7, 9, 13}, {4, 9, 11, 14}, {6, 8, 10, 11}, {3, 7, 8}}) {
      auto rep = classify(NumericalSemigroup(gens));
      if (!rep.two_agl || rep.len_R_over_c != 2 || rep.len_S_over_K != 2) {
        detail = "2-AGL case failed";
        return false;
      }
    }
    if (classify(NumericalSemigroup({4, 7, 9})).sally_rank != 1) {
      detail = "<4,7,9> must have rank 1";
      return false;
    }
    for (auto gens : std::vector<std::vector<long long>>{{2, 5}, {3, 4}, {3, 5}}) {
      auto rep = classify(NumericalSemigroup(gens));
      if (!rep.gorenstein || rep.sally_rank != 0) {
        detail = "Gorenstein case failed";
        return false;
      }
    }
    return true;
  });

  criterion(2, "equivalent-conditions consistency, genus <= 12", [](std::string& detail) {
    auto all = testsupport::all_semigroups_up_to_genus(12);
    long long rank2 = 0;
    for (const auto& h : all) {
      // classify throws InconsistentClassification when any of the five
      // equivalent condition flags disagrees with the Sally rank
      auto rep = classify(h);
      const bool two = rep.sally_rank == 2;
      if (rep.canonical_square_stable != two || rep.ideal_power_stable != two || rep.blowup_socle_length_one != two || rep.blowup_colength_two != two ||
          rep.conductor_colength_two != two) {
        detail = "flag disagreement";
        return false;
      }
      if (two) ++rank2;
    }
    std::ostringstream os;
    os << all.size() << " semigroups, " << rank2 << " of rank two";
    detail = os.str();
    return true;
  });

  criterion(3, "Hilbert tail on the 2-AGL golden cases", [](std::string&) {
    for (auto gens : std::vector<std::vector<long long>>{
             {5, 7, 9, 13}, {4, 9, 11, 14}, {6, 8, 10, 11}, {3, 7, 8}}) {
      NumericalSemigroup h(gens);
      RelativeIdeal k = canonical_ideal(h);
      const long long a = canonical_shift(h);
      std::vector<long long> igens;
      for (long long g : k.gens()) igens.push_back(g + a);
      auto d = hilbert_samuel(h, RelativeIdeal(h, igens), 10);
      for (int n = 1; n <= 10; ++n) {
        const long long expect = d.e0 * (n + 1) - (d.e0 - d.values[0] + 2);
        if (d.values[static_cast<std::size_t>(n)] != expect) return false;
      }
    }
    return true;
  });

  criterion(4, "K/R structure", [](std::string& detail) {
    {
      auto rep = classify(NumericalSemigroup({4, 9, 11, 14}));
      if (rep.kr_ell != 1 || rep.kr_m != 1 || rep.kr_free) {
        detail = "<4,9,11,14> must decompose as (1,1)";
        return false;
      }
    }
    for (auto gens : std::vector<std::vector<long long>>{{5, 7, 9, 13}, {3, 7, 8}}) {
      auto rep = classify(NumericalSemigroup(gens));
      if (rep.kr_m != 0 || !rep.kr_free) {
        detail = "free case failed";
        return false;
      }
    }
    long long checked = 0;
    for (const auto& h : testsupport::all_semigroups_up_to_genus(12)) {
      if (h.is_naturals()) continue;
      auto rep = classify(h);
      if (!rep.two_agl) continue;
      ++checked;
      if (rep.kr_ell + rep.kr_m != rep.type - 1) {
        detail = "l + m != type - 1";
        return false;
      }
    }
    std::ostringstream os;
    os << checked << " rank-two instances";
    detail = os.str();
    return true;
  });

  criterion(5, "Ulrich golden set", [](std::string& detail) {
    using Set = std::set<std::vector<long long>>;
    if (ulrich_sets(NumericalSemigroup({6, 8, 10, 11}), 24) !=
        Set{{6, 11}, {8, 11}, {6, 8, 10}}) {
      detail = "<6,8,10,11>";
      return false;
    }
    if (ulrich_sets(NumericalSemigroup({3, 7, 8})) != Set{{6, 7, 8}, {3, 7, 8}}) {
      detail = "<3,7,8>";
      return false;
    }
    if (ulrich_sets(NumericalSemigroup({4, 9, 11, 14})) != Set{{4, 9, 11, 14}}) {
      detail = "<4,9,11,14>";
      return false;
    }
    if (ulrich_sets(NumericalSemigroup({3, 4})) != Set{{4, 6}}) {
      detail = "<3,4>";
      return false;
    }
    if (!ulrich_sets(NumericalSemigroup({3, 5}), 16).empty()) {
      detail = "<3,5>";
      return false;
    }
    for (long long l = 1; l <= 4; ++l) {
      Set expect;
      for (long long q = 1; q <= l; ++q) expect.insert({2 * q, 2 * l + 1});
      if (ulrich_sets(NumericalSemigroup({2, 2 * l + 1})) != expect) {
        detail = "<2," + std::to_string(2 * l + 1) + ">";
        return false;
      }
    }
    return true;
  });

  criterion(6, "characteristic-dependent families", [](std::string& detail) {
    NumericalSemigroup h({6, 8, 10, 11});
    const std::vector<std::string> fam_a{"t^8+c1*t^10+c2*t^12", "t^11+d*t^12"};
    const std::vector<std::string> fam_b{"t^6+c1*t^8+c2*t^11", "t^10+d*t^11"};
    auto d_index = [](const FamilyScanReport& rep) {
      for (std::size_t i = 0; i < rep.param_names.size(); ++i)
        if (rep.param_names[i] == "d") return i;
      return rep.param_names.size();
    };
    {
      auto rep = family_scan(h, FieldSpec::prime(2), fam_a, 0);
      if (!rep.all_ulrich || rep.entries.size() != 8) {
        detail = "family a over F2";
        return false;
      }
    }
    for (auto field : {FieldSpec::rationals(), FieldSpec::prime(3)}) {
      auto rep = family_scan(h, field, fam_a, 20);
      const std::size_t di = d_index(rep);
      for (const auto& e : rep.entries) {
        const bool zero = sgn(e.params[di]) == 0;
        if (zero != (e.outcome == ScanOutcome::ulrich)) {
          detail = "family a over " + field.str() + " is not d=0-exact";
          return false;
        }
      }
    }
    {
      auto rep = family_scan(h, FieldSpec::prime(2), fam_b, 0);
      const std::size_t di = d_index(rep);
      for (const auto& e : rep.entries) {
        const bool nonzero = sgn(e.params[di]) != 0;
        if (nonzero != (e.outcome == ScanOutcome::ulrich)) {
          detail = "family b over F2 is not d!=0-exact";
          return false;
        }
      }
    }
    for (auto field : {FieldSpec::rationals(), FieldSpec::prime(3)}) {
      auto rep = family_scan(h, field, fam_b, 20);
      for (const auto& e : rep.entries)
        if (e.outcome == ScanOutcome::ulrich) {
          detail = "family b must fail over " + field.str();
          return false;
        }
    }
    return true;
  });

  criterion(7, "extension suite", [](std::string& detail) {
    NumericalSemigroup h({4, 7, 9});
    NumericalSemigroup t({4, 5, 6, 7});
    auto rep = duplication_report(h, t);
    if (rep.len_RI != 2 || rep.len_TK != 2 || !rep.is_2agl || rep.r_A != 5) {
      detail = "duplication report";
      return false;
    }
    for (const std::string alpha : {"0", "1", "t^4"}) {
      auto cert = verify_extension_canonical(h, t, alpha, 40);
      if (!cert.ok || cert.len_AL_over_L != 2) {
        detail = "direct linear algebra for alpha = " + alpha;
        return false;
      }
    }
    long long checked = 0;
    for (const auto& g : testsupport::all_semigroups_up_to_genus(10)) {
      if (g.is_naturals()) continue;
      auto crep = classify(g);
      if (crep.gorenstein) continue;
      auto bl = blowup(g);
      if (bl.ring == g) continue;
      auto dup = duplication_report(g, bl.ring);
      if (dup.is_2agl != crep.two_agl) {
        detail = "round trip failed";
        return false;
      }
      if (crep.two_agl) ++checked;
    }
    std::ostringstream os;
    os << checked << " rank-two round trips";
    detail = os.str();
    return true;
  });

  criterion(8, "gluing suite", [](std::string& detail) {
    NumericalSemigroup h1({4, 7, 9});
    for (long long alpha : {11LL, 13LL}) {
      auto s = gluing_ulrich_set(h1, alpha);
      if (!s.pairs.empty() || !s.matches_enumeration) {
        detail = "alpha = " + std::to_string(alpha);
        return false;
      }
    }
    for (long long alpha : {15LL, 17LL, 19LL}) {
      auto s = gluing_ulrich_set(h1, alpha);
      bool has = false;
      for (auto& [p, q] : s.pairs)
        if (p == 8 && q == alpha) has = true;
      if (!has || !s.matches_enumeration) {
        detail = "alpha = " + std::to_string(alpha);
        return false;
      }
    }
    for (long long alpha : {11LL, 13LL, 15LL, 17LL, 19LL}) {
      NumericalSemigroup h = glue(h1, alpha);
      auto rep = classify(h);
      std::vector<long long> doubled;
      for (long long a : h1.generators()) doubled.push_back(2 * a);
      if (!rep.two_agl || rep.multiplicity_minimal ||
          rep.conductor_gens.size() != 3 ||
          !(RelativeIdeal(h, rep.conductor_gens) == RelativeIdeal(h, doubled))) {
        detail = "structure at alpha = " + std::to_string(alpha);
        return false;
      }
    }
    return true;
  });

  criterion(9, "presentation suite", [](std::string& detail) {
    const std::vector<std::string> vars{"X", "Y", "Z", "W"};
    auto p = [&](const std::string& s) { return SparsePoly::parse(vars, s); };
    {
      std::vector<std::vector<SparsePoly>> m{{p("W"), p("X^2"), p("X*Y"), p("Y*Z")},
                                             {p("X^2"), p("Y"), p("Z"), p("W")}};
      auto gens = minors2(m);
      gens.push_back(p("Y^2-X*Z"));
      gens.push_back(p("Z^2-X*W"));
      for (const auto& g : gens)
        if (!phi_eval(g, {5, 7, 9, 13}).vanishes) {
          detail = "a generator of the first defining ideal does not vanish";
          return false;
        }
      std::vector<std::vector<SparsePoly>> pres{
          {p("W"), p("X^2"), p("X*Y"), p("Y*Z"), p("Y^2-X*Z"), p("Z^2-X*W")},
          {p("X^2"), p("Y"), p("Z"), p("W"), p("0"), p("0")}};
      if (!presentation_staircase_hypothesis(pres, 4)) {
        detail = "hypothesis (first matrix)";
        return false;
      }
      if (!kernel_evidence(gens, NumericalSemigroup({5, 7, 9, 13}), 10).ok) {
        detail = "kernel evidence (first)";
        return false;
      }
    }
    {
      std::vector<std::vector<SparsePoly>> m1{{p("-Z"), p("-X^3"), p("-W"), p("-X^2*Y")},
                                              {p("X^2"), p("Y"), p("Z"), p("W")}};
      std::vector<std::vector<SparsePoly>> m2{{p("Y"), p("W"), p("X^4"), p("X^2*Z")},
                                              {p("X"), p("Y"), p("Z"), p("W")}};
      auto gens = minors2(m1);
      for (auto& q : minors2(m2)) gens.push_back(q);
      for (const auto& g : gens)
        if (!phi_eval(g, {4, 9, 11, 14}).vanishes) {
          detail = "a generator of the second defining ideal does not vanish";
          return false;
        }
      std::vector<std::vector<SparsePoly>> pres{
          {p("-Z"), p("-X^3"), p("-W"), p("-X^2*Y"), p("Y"), p("W"), p("X^4"), p("X^2*Z")},
          {p("X^2"), p("Y"), p("Z"), p("W"), p("0"), p("0"), p("0"), p("0")},
          {p("0"), p("0"), p("0"), p("0"), p("X"), p("Y"), p("Z"), p("W")}};
      if (!presentation_staircase_hypothesis(pres, 4)) {
        detail = "hypothesis (second matrix)";
        return false;
      }
      if (!kernel_evidence(gens, NumericalSemigroup({4, 9, 11, 14}), 10).ok) {
        detail = "kernel evidence (second)";
        return false;
      }
    }
    return true;
  });

  criterion(10, "oracle equivalence on random monomial ideals", [](std::string& detail) {
    std::mt19937 rng(2026);
    int done = 0;
    while (done < 200) {
      std::vector<long long> gens{2 + static_cast<long long>(rng() % 9)};
      gens.push_back(gens[0] + 1 + static_cast<long long>(rng() % 6));
      gens.push_back(gens[0] + 1 + static_cast<long long>(rng() % 9));
      long long g = std::gcd(std::gcd(gens[0], gens[1]), gens[2]);
      if (g != 1) continue;
      NumericalSemigroup h(gens);
      if (h.is_naturals() || h.conductor() > 24) continue;

      std::vector<long long> vals;
      for (long long v = h.multiplicity(); v < 2 * h.conductor() + 2 && vals.size() < 3; ++v)
        if (h.contains(v) && rng() % 3 == 0) vals.push_back(v);
      if (vals.size() < 2) continue;
      RelativeIdeal ideal(h, vals);
      vals = ideal.gens();
      if (vals.size() < 2) continue;
      ++done;

      auto monomial = is_ulrich_monomial(h, vals);
      RelativeIdeal i2 = product(ideal, ideal);
      const long long want_colen = colength(ideal);

      std::vector<std::string> series;
      for (long long v : vals) series.push_back("t^" + std::to_string(v));
      const std::string red = "t^" + std::to_string(vals.front());
      const long long n = default_truncation(h, 2 * vals.back());

      for (auto field : {FieldSpec::rationals(), FieldSpec::prime(2)}) {
        auto v = verify_ideal(h, field, series, red, n);
        if (v.is_ulrich != monomial.is_ulrich || v.len_R_mod_I != want_colen ||
            v.mu != monomial.mu || v.square_stable != monomial.square_stable ||
            v.len_I_mod_I2 != length_between(ideal, i2)) {
          detail = "mismatch over " + field.str();
          return false;
        }
      }
      // product route: the trunc product of I with itself matches I² labelwise
      {
        auto alg = TruncAlgebra<FieldFp>::semigroup_ring(h, FieldFp(2), n);
        std::vector<TruncAlgebra<FieldFp>::Vec> gv;
        for (long long v : vals) gv.push_back(alg.basis_vec(alg.index_of(0, v)));
        auto space = ideal_closure(alg, gv);
        auto prod = ideal_product(alg, space, space);
        for (int idx = 0; idx < alg.dim(); ++idx) {
          const auto& label = alg.labels()[static_cast<std::size_t>(idx)];
          if (prod.space.contains(alg.basis_vec(idx)) != i2.contains(label.deg)) {
            detail = "product labels diverge";
            return false;
          }
        }
      }
    }
    detail = "200 pairs";
    return true;
  });

  if (g_failures == 0)
    std::printf("all acceptance criteria passed\n");
  else
    std::printf("%d criterion(s) FAILED\n", g_failures);
  return g_failures;
}
