#ifndef NSG_EXTENSIONS_HPP
#define NSG_EXTENSIONS_HPP

#include <string>
#include <vector>

#include "nsg/classify.hpp"
#include "nsg/relative_ideal.hpp"
#include "nsg/semigroup.hpp"
#include "nsg/trunc_algebra.hpp"

namespace nsg {

/// Oversemigroups T of H with K ⊆ T and T ≠ H: the targets of the
/// quasi-trivial extension theory.
std::vector<NumericalSemigroup> admissible_overrings(const NumericalSemigroup& h);

struct ExtensionReport {
  NumericalSemigroup t;
  RelativeIdeal i;          // R : T
  long long len_RI = 0;     // ℓ(R/I)
  long long len_TK = 0;     // ℓ(T/K); always equals len_RI
  bool is_2agl = false;     // A(α) is 2-AGL for every α  ⟺  len_RI = 2
  long long r_A = 0;        // type of A(α) = μ_R(T) + r(R)
  bool t_equals_S = false;
  bool i_equals_c = false;
};

/// Combinatorial verdict on the quasi-trivial extensions R ⋉^α (R:T);
/// both length routes are computed independently and must agree.
ExtensionReport duplication_report(const NumericalSemigroup& h, const NumericalSemigroup& t);

/// Builds A(α) = R_N ⋉^α I over a truncated semigroup ring, asserting the
/// ring axioms on basis triples and locality on a sample of units.
/// Throws NotLocal when I = R and α is a unit.
template <class F>
TruncAlgebra<F> quasi_trivial_algebra(const NumericalSemigroup& h, const RelativeIdeal& ideal,
                                      const SeriesQ& alpha, F field, long long n);

struct ExtensionCanonicalCertificate {
  long long n = 0;             // truncation used
  long long dim_B = 0;
  long long dim_L = 0;
  int power_stabilized_at = 0; // least n with L^{n+1} = L^n
  bool al_equals_b = false;    // A[L] spans all of B
  long long len_AL_over_L = 0; // dim A[L] - dim L
  long long len_T_over_K = 0;  // combinatorial route
  bool lengths_agree = false;
  bool ok = false;
};

/// Direct finite-dimensional verification that L = T × K is a canonical
/// ideal of A = R ⋉^α I and A[L] = T ⋉^α T: iterates L^n inside the
/// truncated extension and compares ℓ_A(A[L]/L) with ℓ_R(T/K).
/// Throws TruncationTooSmall when the stabilization certificate fails.
ExtensionCanonicalCertificate verify_extension_canonical(const NumericalSemigroup& h, const NumericalSemigroup& t,
                                const std::string& alpha, long long n = -1);

}  // namespace nsg

#endif
