#ifndef NSG_CLASSIFY_HPP
#define NSG_CLASSIFY_HPP

#include <optional>
#include <vector>

#include "nsg/relative_ideal.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

struct HilbertData {
  long long e0 = 0;
  long long e1 = 0;
  std::vector<long long> values;   // values[n] = ℓ(R/I^{n+1}), n = 0..n_max
  int reduction_number = 0;        // least n with I^{n+1} = a·I^n
  long long reduction_element = 0; // valuation a of the monomial reduction
};

/// Exact Hilbert function of an m-primary integral monomial ideal. The
/// reduction element is the minimal valuation in I; e1 is read off the
/// stabilized line and linearity is verified on the whole computed tail.
/// Throws NotIntegral / NotPrimary, or Error when n_max is below the
/// reduction number.
HilbertData hilbert_samuel(const NumericalSemigroup& h, const RelativeIdeal& i, int n_max);

/// Variant choosing n_max = reduction number + 8.
HilbertData hilbert_samuel(const NumericalSemigroup& h, const RelativeIdeal& i);

/// The minimal positive a in H with a + gens(K) ⊆ H; t^a K is then an
/// integral canonical ideal.
long long canonical_shift(const NumericalSemigroup& h);

/// rank S_Q(I) = e1 - (e0 - ℓ(R/I)) for I = t^a K. 0 for Gorenstein,
/// 1 for almost Gorenstein (non-Gorenstein), 2 for 2-almost Gorenstein.
/// Throws PreconditionFailed for the full monoid.
int sally_rank(const NumericalSemigroup& h);

struct KRStructure {
  // one tag per element of PF(H) \ {f}, in increasing PF order:
  // ℓ((R + R t^{f-c})/R), which is 2 for an R/c summand and 1 for an R/m
  // summand in the rank-2 case.
  std::vector<long long> tags;
  std::vector<long long> pf_without_f;
  long long ell = 0;  // number of R/c summands (tag 2)
  long long m = 0;    // number of R/m summands (tag 1)
  bool direct_sum_asserted = false;  // true when sally rank is 2
};

/// Per-generator structure of K/R. The direct-sum interpretation is only
/// asserted at rank 2; `require_two_agl` makes other ranks throw NotTwoAGL.
KRStructure structure_of_KR(const NumericalSemigroup& h, bool require_two_agl = false);

struct PfSymmetryReport {
  long long b = 0;                       // socle valuation, a minimal generator
  std::vector<long long> free_part;      // PF values with tag 2, increasing
  std::vector<long long> nonfree_part;   // PF values with tag 1, increasing
  bool free_symmetry = false;            // f + b = c_i + c_{p+1-i}
  bool nonfree_symmetry = false;         // f = d_j + d_{q+1-j} (vacuous if empty)
  bool freeness_matches_pairing = false;    // (J = ∅) ⟺ (∃ a_j. f + a_j = c_i + c_{r-i})
};

/// The symmetry of PF(H) in the rank-2 case. Throws NotTwoAGL otherwise.
PfSymmetryReport pf_symmetry(const NumericalSemigroup& h);

struct ClassificationReport {
  int sally_rank = 0;
  bool gorenstein = false;
  bool agl = false;       // rank exactly 1
  bool two_agl = false;   // rank exactly 2
  // the five equivalent characterizations of rank two, each computed on its
  // own code path and required to agree
  bool canonical_square_stable = false;  // K² = K³ and ℓ(K²/K) = 2
  bool ideal_power_stable = false;       // I³ = QI² and ℓ(I²/QI) = 2
  bool blowup_socle_length_one = false;  // non-Gorenstein and ℓ(S/(K:m)) = 1
  bool blowup_colength_two = false;      // ℓ(S/K) = 2
  bool conductor_colength_two = false;   // ℓ(R/c) = 2
  long long kr_ell = 0;
  long long kr_m = 0;
  bool kr_free = false;
  long long type = 1;
  bool multiplicity_minimal = false;
  bool s_gorenstein = false;
  // raw data
  long long len_S_over_K = 0;
  long long len_R_over_c = 0;
  long long len_K_over_R = 0;
  std::optional<long long> len_K2_over_K;  // only when K² = K³
  HilbertData hilbert;
  std::vector<long long> blowup_gens;
  std::vector<long long> conductor_gens;
  std::vector<long long> canonical_gens;
  SemigroupInvariants inv;
};

/// Evaluates every equivalent rank-two condition independently and hard-fails with
/// InconsistentClassification if the equivalent flags ever disagree.
ClassificationReport classify(const NumericalSemigroup& h);

}  // namespace nsg

#endif
