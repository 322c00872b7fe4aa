#ifndef NSG_ULRICH_HPP
#define NSG_ULRICH_HPP

#include <optional>
#include <utility>
#include <vector>

#include "nsg/relative_ideal.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

struct UlrichVerdict {
  std::vector<long long> gens;           // minimal generator valuations
  bool is_ulrich = false;
  long long reduction_valuation = 0;     // a = min(gens)
  long long mu = 0;
  long long len_R_mod_I = 0;
  long long len_I_mod_I2 = 0;
  bool i_equals_reduction = false;       // I = (a)
  bool square_stable = false;            // I² = aI
  bool free_check = false;               // ℓ(I/I²) = μ·ℓ(R/I)
  std::optional<long long> witness_c;    // μ = 2: the c with b² = ac
};

/// Definition-level Ulrich test for the monomial ideal generated by `vals`.
UlrichVerdict is_ulrich_monomial(const NumericalSemigroup& h, std::vector<long long> vals);

struct UlrichEnumeration {
  std::vector<UlrichVerdict> found;  // Ulrich verdicts only, ordered by gens
  long long bound = 0;
  bool bound_warning = false;        // bound < 2·conductor
};

/// All monomial Ulrich ideals whose minimal generators are at most `bound`,
/// by exhaustion over antichains of (H⁺, ≤_H). Within-bound completeness is
/// guaranteed; nothing is claimed beyond the bound. bound < 0 selects the
/// default 2 c(H) + 2 multiplicity.
UlrichEnumeration enumerate_monomial_ulrich(const NumericalSemigroup& h, long long bound = -1);

/// The correspondence between Ulrich ideals of a Gorenstein ring and its
/// Gorenstein overrings generated by two elements: enumerates the monomial
/// side and checks both directions. Throws NotGorenstein.
struct GorensteinCorrespondence {
  std::vector<std::pair<NumericalSemigroup, UlrichVerdict>> pairs;  // (A, R:A)
  bool matches_enumeration = false;
  bool colon_recovers_overring = false;  // I : I = A for every pair
};
GorensteinCorrespondence gorenstein_overring_ulrich(const NumericalSemigroup& h);

/// Two-generated monomial Ulrich ideals of the gluing <2a_i, alpha>, from
/// the closed-form description {(2m, alpha) : m ∈ H1, alpha-m ∈ H1,
/// 2(alpha-2m) ∈ H}; cross-checked against enumeration on the gluing.
/// Requires H1 to be almost Gorenstein and not Gorenstein (HypothesisFailed).
struct GluingUlrichSet {
  NumericalSemigroup glued;
  std::vector<std::pair<long long, long long>> pairs;  // (2m, alpha)
  bool matches_enumeration = false;
};
GluingUlrichSet gluing_ulrich_set(const NumericalSemigroup& h1, long long alpha);

struct TwoAglConsequences {
  long long socle_type_R_mod_I = 0;  // r(R/I) by the socle count
  bool type_identity = false;        // (μ-1)·r(R/I) = r(R)
  bool kr_free = false;              // μ = 2 forces K/R free
  bool i_plus_c_is_m = false;        // μ = 2: I + c = m
  bool c_mu_is_edim_minus_1 = false; // μ = 2: μ(c) = embdim - 1
  bool c_inside_i = false;           // μ ≥ 3 with K/R free: c ⊆ I
};

/// Structural consequences of an Ulrich ideal inside a 2-AGL ring.
/// Throws PreconditionFailed unless classify(h).two_agl and v.is_ulrich.
TwoAglConsequences two_agl_ulrich_consequences(const NumericalSemigroup& h,
                                               const UlrichVerdict& v);

struct MinMultXr {
  bool kr_free = false;
  std::vector<std::vector<long long>> predicted;  // {c, m} or {m}, generator lists
  bool matches_enumeration = false;
};

/// The complete Ulrich-ideal set of a 2-AGL ring with minimal multiplicity,
/// from the closed-form dichotomy; asserts agreement with the enumeration.
/// Throws PreconditionFailed unless 2-AGL with minimal multiplicity.
MinMultXr min_multiplicity_xr(const NumericalSemigroup& h);

}  // namespace nsg

#endif
