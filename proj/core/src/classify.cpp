#include "nsg/classify.hpp"

#include <algorithm>
#include <string>

namespace nsg {

HilbertData hilbert_samuel(const NumericalSemigroup& h, const RelativeIdeal& i, int n_max) {
  if (!i.is_integral()) throw NotIntegral("hilbert_samuel needs an integral ideal");
  if (i.contains(0)) throw NotPrimary("hilbert_samuel needs a proper m-primary ideal");
  HilbertData data;
  data.reduction_element = i.min_val();
  data.e0 = i.min_val();

  RelativeIdeal power = i;
  data.values.push_back(colength(i));
  int reduction = -1;
  for (int n = 1; n <= n_max; ++n) {
    RelativeIdeal next = product(power, i);
    data.values.push_back(colength(next));
    if (reduction < 0) {
      RelativeIdeal shifted = product(RelativeIdeal::principal(h, data.e0), power);
      if (next == shifted) reduction = n;
    }
    power = next;
  }
  if (reduction < 0)
    throw Error("n_max = " + std::to_string(n_max) + " is below the reduction number");
  data.reduction_number = reduction;
  data.e1 = data.e0 * (reduction + 1) - data.values[static_cast<std::size_t>(reduction)];
  for (int n = reduction; n <= n_max; ++n) {
    if (data.values[static_cast<std::size_t>(n)] != data.e0 * (n + 1) - data.e1)
      throw Error("Hilbert function is not linear past the reduction number");
  }
  return data;
}

HilbertData hilbert_samuel(const NumericalSemigroup& h, const RelativeIdeal& i) {
  // Find the reduction number first, then extend by 8.
  RelativeIdeal power = i;
  int reduction = -1;
  for (int n = 1; reduction < 0; ++n) {
    RelativeIdeal next = product(power, i);
    RelativeIdeal shifted = product(RelativeIdeal::principal(i.base(), i.min_val()), power);
    if (next == shifted) reduction = n;
    power = next;
    if (n > 4096) throw Error("reduction number did not stabilize");
  }
  return hilbert_samuel(h, i, reduction + 8);
}

long long canonical_shift(const NumericalSemigroup& h) {
  RelativeIdeal k = canonical_ideal(h);
  for (long long a = 1;; ++a) {
    if (!h.contains(a)) continue;
    bool ok = true;
    for (long long g : k.gens())
      if (!h.contains(a + g)) {
        ok = false;
        break;
      }
    if (ok) return a;
  }
}

int sally_rank(const NumericalSemigroup& h) {
  if (h.is_naturals()) throw PreconditionFailed("sally_rank is undefined for the full monoid");
  RelativeIdeal k = canonical_ideal(h);
  long long a = canonical_shift(h);
  std::vector<long long> gens;
  for (long long g : k.gens()) gens.push_back(g + a);
  RelativeIdeal i(h, std::move(gens));
  HilbertData data = hilbert_samuel(h, i);
  return static_cast<int>(data.e1 - (data.e0 - data.values[0]));
}

KRStructure structure_of_KR(const NumericalSemigroup& h, bool require_two_agl) {
  KRStructure st;
  if (h.is_naturals()) {
    if (require_two_agl) throw NotTwoAGL("the full monoid is Gorenstein");
    return st;
  }
  int rank = sally_rank(h);
  st.direct_sum_asserted = rank == 2;
  if (require_two_agl && rank != 2)
    throw NotTwoAGL("sally rank is " + std::to_string(rank));
  const long long f = h.frobenius();
  for (long long c : pseudo_frobenius(h)) {
    if (c == f) continue;
    // ℓ((R + R t^{f-c})/R) = |(f-c+H) \ H|
    const long long g = f - c;
    long long len = 0;
    for (long long z = g; z < g + h.conductor(); ++z)
      if (h.contains(z - g) && !h.contains(z)) ++len;
    st.pf_without_f.push_back(c);
    st.tags.push_back(len);
    if (len == 2)
      ++st.ell;
    else if (len == 1)
      ++st.m;
  }
  return st;
}

PfSymmetryReport pf_symmetry(const NumericalSemigroup& h) {
  KRStructure st = structure_of_KR(h, /*require_two_agl=*/true);
  PfSymmetryReport rep;
  for (std::size_t i = 0; i < st.tags.size(); ++i) {
    (st.tags[i] == 2 ? rep.free_part : rep.nonfree_part).push_back(st.pf_without_f[i]);
  }

  // Socle of R/c: the unique member of m \ c (m² ⊆ c since ℓ(R/c) = 2).
  RelativeIdeal m = RelativeIdeal::maximal_ideal(h);
  BlowupResult bl = blowup(h);
  const RelativeIdeal& c = bl.conductor_ideal;
  long long b = -1;
  for (long long z = h.multiplicity(); z < c.stable_from(); ++z) {
    if (m.contains(z) && !c.contains(z)) {
      if (b != -1) throw Error("socle of R/c is not one-dimensional");
      b = z;
    }
  }
  if (b < 0) throw Error("socle generator of R/c not found");
  if (std::find(h.generators().begin(), h.generators().end(), b) == h.generators().end())
    throw Error("socle valuation is not a minimal generator");
  rep.b = b;

  const long long f = h.frobenius();
  rep.free_symmetry = true;
  const auto& cs = rep.free_part;
  for (std::size_t i = 0; i < cs.size(); ++i)
    if (f + b != cs[i] + cs[cs.size() - 1 - i]) rep.free_symmetry = false;
  rep.nonfree_symmetry = true;
  const auto& ds = rep.nonfree_part;
  for (std::size_t j = 0; j < ds.size(); ++j)
    if (f != ds[j] + ds[ds.size() - 1 - j]) rep.nonfree_symmetry = false;

  // K/R free of rank r-1  ⟺  some generator a_j has f + a_j = c_i + c_{r-i}
  // over the first r-1 entries of PF sorted increasingly (the last is f).
  std::vector<long long> pf = pseudo_frobenius(h);
  bool exists_aj = false;
  for (long long aj : h.generators()) {
    bool all = true;
    for (std::size_t i = 0; i + 1 < pf.size() && all; ++i)
      if (f + aj != pf[i] + pf[pf.size() - 2 - i]) all = false;
    if (all) {
      exists_aj = true;
      break;
    }
  }
  bool j_empty = rep.nonfree_part.empty();
  rep.freeness_matches_pairing = (j_empty == exists_aj);
  return rep;
}

ClassificationReport classify(const NumericalSemigroup& h) {
  ClassificationReport rep;
  rep.inv = invariants(h);
  rep.type = rep.inv.type;
  rep.multiplicity_minimal = rep.inv.multiplicity == rep.inv.embedding_dim;
  if (h.is_naturals()) {
    rep.gorenstein = true;
    rep.s_gorenstein = true;
    rep.canonical_gens = {0};
    rep.blowup_gens = {1};
    rep.conductor_gens = {0};
    return rep;
  }

  const RelativeIdeal r = RelativeIdeal::unit(h);
  const RelativeIdeal k = canonical_ideal(h);
  const BlowupResult bl = blowup(h);
  const RelativeIdeal s_ideal = semigroup_ideal(h, bl.ring);
  const RelativeIdeal& c = bl.conductor_ideal;
  const bool gorenstein = rep.type == 1;

  // rank via the Hilbert coefficients of I = t^a K
  const long long a = canonical_shift(h);
  std::vector<long long> igens;
  for (long long g : k.gens()) igens.push_back(g + a);
  const RelativeIdeal i(h, igens);
  rep.hilbert = hilbert_samuel(h, i);
  rep.sally_rank = static_cast<int>(rep.hilbert.e1 - (rep.hilbert.e0 - rep.hilbert.values[0]));
  rep.gorenstein = gorenstein;
  rep.agl = rep.sally_rank == 1;
  rep.two_agl = rep.sally_rank == 2;
  if (gorenstein != (rep.sally_rank == 0))
    throw InconsistentClassification("type-1 and rank-0 disagree");

  // K² = K³ and ℓ(K²/K) = 2
  const RelativeIdeal k2 = product(k, k);
  const RelativeIdeal k3 = product(k2, k);
  if (k2 == k3) rep.len_K2_over_K = length_between(k2, k);
  rep.canonical_square_stable = (k2 == k3) && rep.len_K2_over_K && *rep.len_K2_over_K == 2;

  // I³ = QI² and ℓ(I²/QI) = 2
  const RelativeIdeal q = RelativeIdeal::principal(h, rep.hilbert.reduction_element);
  const RelativeIdeal i2 = product(i, i);
  const RelativeIdeal i3 = product(i2, i);
  const RelativeIdeal qi = product(q, i);
  const RelativeIdeal qi2 = product(q, i2);
  rep.ideal_power_stable = (i3 == qi2) && length_between(i2, qi) == 2;

  // non-Gorenstein and ℓ(S/(K:m)) = 1
  const RelativeIdeal k_colon_m = colon(k, RelativeIdeal::maximal_ideal(h));
  rep.blowup_socle_length_one = !gorenstein && contains_ideal(s_ideal, k_colon_m) &&
                                length_between(s_ideal, k_colon_m) == 1;

  // ℓ(S/K) = 2 and ℓ(R/c) = 2
  rep.len_S_over_K = length_between(s_ideal, k);
  rep.blowup_colength_two = rep.len_S_over_K == 2;
  rep.len_R_over_c = length_between(r, c);
  rep.conductor_colength_two = rep.len_R_over_c == 2;

  rep.len_K_over_R = length_between(k, r);

  const bool two = rep.two_agl;
  if (rep.canonical_square_stable != two || rep.ideal_power_stable != two ||
      rep.blowup_socle_length_one != two || rep.blowup_colength_two != two ||
      rep.conductor_colength_two != two)
    throw InconsistentClassification("equivalent conditions disagree with the Sally rank");

  KRStructure st = structure_of_KR(h);
  rep.kr_ell = st.ell;
  rep.kr_m = st.m;
  rep.kr_free = st.m == 0;
  if (two && rep.kr_free != (rep.len_K_over_R == 2 * (rep.type - 1)))
    throw InconsistentClassification("K/R freeness criteria disagree");

  rep.s_gorenstein = is_symmetric(bl.ring);
  rep.blowup_gens = bl.ring.generators();
  rep.conductor_gens = c.gens();
  rep.canonical_gens = k.gens();
  return rep;
}

}  // namespace nsg
