#include "nsg/ulrich.hpp"

#include <algorithm>
#include <set>

#include "nsg/classify.hpp"

namespace nsg {

UlrichVerdict is_ulrich_monomial(const NumericalSemigroup& h, std::vector<long long> vals) {
  for (long long v : vals)
    if (v <= 0 || !h.contains(v))
      throw NotIntegral("generator valuation " + std::to_string(v) + " is not in H⁺");
  RelativeIdeal i(h, std::move(vals));
  UlrichVerdict out;
  out.gens = i.gens();
  out.reduction_valuation = i.min_val();
  out.mu = i.mu();
  out.len_R_mod_I = colength(i);

  const RelativeIdeal i2 = product(i, i);
  const RelativeIdeal ai = product(RelativeIdeal::principal(h, out.reduction_valuation), i);
  out.square_stable = i2 == ai;
  out.i_equals_reduction = out.mu == 1;
  out.len_I_mod_I2 = length_between(i, i2);
  out.free_check = out.len_I_mod_I2 == out.mu * out.len_R_mod_I;
  out.is_ulrich = !out.i_equals_reduction && out.square_stable && out.free_check;

  if (out.is_ulrich && out.mu == 2) {
    // b² = ac: for monomials c has valuation 2b - a; it lies in I because
    // I² = aI.
    const long long b = out.gens[1];
    const long long c = 2 * b - out.reduction_valuation;
    if (i.contains(c)) out.witness_c = c;
  }
  return out;
}

UlrichEnumeration enumerate_monomial_ulrich(const NumericalSemigroup& h, long long bound) {
  UlrichEnumeration out;
  if (bound < 0) bound = 2 * h.conductor() + 2 * h.multiplicity();
  out.bound = bound;
  out.bound_warning = bound < 2 * h.conductor();

  std::vector<long long> candidates;
  for (long long v = 1; v <= bound; ++v)
    if (h.contains(v)) candidates.push_back(v);

  // DFS over antichains of (H⁺, ≤_H); an antichain has at most one element
  // per residue class mod the multiplicity, so the tree stays small.
  std::vector<long long> chain;
  auto incomparable = [&](long long v) {
    for (long long u : chain)
      if (h.contains(v - u)) return false;
    return true;
  };
  std::vector<UlrichVerdict> found;
  auto dfs = [&](auto&& self, std::size_t start) -> void {
    if (chain.size() >= 2) {
      UlrichVerdict v = is_ulrich_monomial(h, chain);
      if (v.is_ulrich) found.push_back(std::move(v));
    }
    if (static_cast<long long>(chain.size()) >= h.multiplicity()) return;
    for (std::size_t i = start; i < candidates.size(); ++i) {
      if (!incomparable(candidates[i])) continue;
      chain.push_back(candidates[i]);
      self(self, i + 1);
      chain.pop_back();
    }
  };
  dfs(dfs, 0);

  std::sort(found.begin(), found.end(),
            [](const UlrichVerdict& a, const UlrichVerdict& b) { return a.gens < b.gens; });
  out.found = std::move(found);
  return out;
}

GorensteinCorrespondence gorenstein_overring_ulrich(const NumericalSemigroup& h) {
  if (!is_symmetric(h)) throw NotGorenstein("the overring correspondence needs a symmetric H");
  GorensteinCorrespondence out;
  const RelativeIdeal r = RelativeIdeal::unit(h);
  for (const auto& t : oversemigroups(h)) {
    if (t == h) continue;
    if (!is_symmetric(t)) continue;
    const RelativeIdeal t_ideal = semigroup_ideal(h, t);
    if (minimal_generators_over(h, t_ideal) != 2) continue;
    RelativeIdeal i = colon(r, t_ideal);
    UlrichVerdict v = is_ulrich_monomial(h, i.gens());
    out.pairs.emplace_back(t, std::move(v));
  }

  // both directions: the image must be the monomial Ulrich list, and
  // I : I must recover the overring.
  std::set<std::vector<long long>> image;
  bool all_ulrich = true;
  out.colon_recovers_overring = true;
  for (const auto& [t, v] : out.pairs) {
    if (!v.is_ulrich) all_ulrich = false;
    image.insert(v.gens);
    RelativeIdeal i(h, v.gens);
    RelativeIdeal back = colon(i, i);
    if (back != semigroup_ideal(h, t)) out.colon_recovers_overring = false;
  }
  std::set<std::vector<long long>> enumerated;
  for (const auto& v : enumerate_monomial_ulrich(h).found) enumerated.insert(v.gens);
  out.matches_enumeration = all_ulrich && image == enumerated;
  return out;
}

GluingUlrichSet gluing_ulrich_set(const NumericalSemigroup& h1, long long alpha) {
  {
    const int rank = h1.is_naturals() ? 0 : sally_rank(h1);
    if (rank != 1)
      throw HypothesisFailed("H1 must be almost Gorenstein and not Gorenstein (rank 1), got rank " +
                             std::to_string(rank));
  }
  GluingUlrichSet out{glue(h1, alpha), {}, false};
  const NumericalSemigroup& h = out.glued;
  for (long long m = 1; m <= alpha; ++m) {
    if (!h1.contains(m)) continue;
    if (!h1.contains(alpha - m)) continue;
    if (2 * (alpha - 2 * m) < 0 || !h.contains(2 * (alpha - 2 * m))) continue;
    out.pairs.emplace_back(2 * m, alpha);
  }
  std::sort(out.pairs.begin(), out.pairs.end());

  // cross-check against the exhaustive route, restricted to two-generated
  // monomial ideals; the bound covers every pair the formula can produce.
  long long bound = std::max(2 * h.conductor() + 2 * h.multiplicity(), 2 * alpha);
  std::set<std::pair<long long, long long>> enumerated;
  for (const auto& v : enumerate_monomial_ulrich(h, bound).found)
    if (v.mu == 2) enumerated.insert({v.gens[0], v.gens[1]});
  std::set<std::pair<long long, long long>> formula(out.pairs.begin(), out.pairs.end());
  out.matches_enumeration = formula == enumerated;
  return out;
}

TwoAglConsequences two_agl_ulrich_consequences(const NumericalSemigroup& h,
                                               const UlrichVerdict& v) {
  ClassificationReport rep = classify(h);
  if (!rep.two_agl) throw PreconditionFailed("the ring is not 2-AGL");
  if (!v.is_ulrich) throw PreconditionFailed("the ideal is not Ulrich");

  TwoAglConsequences out;
  const RelativeIdeal i(h, v.gens);
  const BlowupResult bl = blowup(h);
  const RelativeIdeal& c = bl.conductor_ideal;

  // socle count r(R/I) = |{h ∈ H∖I with h + a_j ∈ I for every generator}|
  long long socle = 0;
  for (long long z = 0; z < i.stable_from(); ++z) {
    if (!h.contains(z) || i.contains(z)) continue;
    bool in_socle = true;
    for (long long a : h.generators())
      if (!i.contains(z + a)) {
        in_socle = false;
        break;
      }
    if (in_socle) ++socle;
  }
  out.socle_type_R_mod_I = socle;
  out.type_identity = (v.mu - 1) * socle == rep.type;
  out.kr_free = rep.kr_free;

  if (v.mu == 2) {
    const RelativeIdeal m = RelativeIdeal::maximal_ideal(h);
    out.i_plus_c_is_m = sum(i, c) == m;
    out.c_mu_is_edim_minus_1 = static_cast<long long>(c.gens().size()) == h.embedding_dim() - 1;
  }
  if (v.mu >= 3 && rep.kr_free) out.c_inside_i = contains_ideal(i, c);
  return out;
}

MinMultXr min_multiplicity_xr(const NumericalSemigroup& h) {
  ClassificationReport rep = classify(h);
  if (!rep.two_agl || !rep.multiplicity_minimal)
    throw PreconditionFailed("needs a 2-AGL ring with minimal multiplicity");
  MinMultXr out;
  out.kr_free = rep.kr_free;
  if (out.kr_free) out.predicted.push_back(rep.conductor_gens);
  out.predicted.push_back(h.generators());
  std::sort(out.predicted.begin(), out.predicted.end());

  std::set<std::vector<long long>> enumerated;
  for (const auto& v : enumerate_monomial_ulrich(h).found) enumerated.insert(v.gens);
  std::set<std::vector<long long>> predicted(out.predicted.begin(), out.predicted.end());
  out.matches_enumeration = predicted == enumerated;
  return out;
}

}  // namespace nsg
