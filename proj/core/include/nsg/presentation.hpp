#ifndef NSG_PRESENTATION_HPP
#define NSG_PRESENTATION_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nsg/field.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

/**
 * A sparse multivariate polynomial over the rationals, with a fixed named
 * variable list. Exponent vectors map to non-zero coefficients.
 */
class SparsePoly {
 public:
  SparsePoly(std::vector<std::string> vars, std::map<std::vector<int>, Rational> terms = {});

  /// Parses "Y^2 - X*Z" against the given variables.
  static SparsePoly parse(const std::vector<std::string>& vars, const std::string& text);

  const std::vector<std::string>& vars() const { return vars_; }
  const std::map<std::vector<int>, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// True when the polynomial is a plain monomial with coefficient one.
  bool is_monomial(const std::vector<int>& exponents) const;
  long long min_total_degree() const;

  SparsePoly operator*(const SparsePoly& other) const;
  SparsePoly operator-(const SparsePoly& other) const;
  SparsePoly shifted(const std::vector<int>& monomial) const;  // multiply by a monomial

  std::string str() const;

 private:
  std::vector<std::string> vars_;
  std::map<std::vector<int>, Rational> terms_;
};

struct PhiImage {
  std::vector<std::pair<long long, Rational>> series;  // exact sparse image in t
  bool vanishes = false;
};

/// Substitutes X_i -> t^{w_i}; exact, no truncation.
PhiImage phi_eval(const SparsePoly& p, const std::vector<long long>& weights);

/// All 2x2 minors of a 2xN matrix, column pairs in lexicographic order.
std::vector<SparsePoly> minors2(const std::vector<std::vector<SparsePoly>>& m);

/**
 * Checks the staircase presentation shape: first row free; below it blocks
 * of (X1², X2, ..., Xn) rows followed by blocks of (X1, X2, ..., Xn) rows,
 * zeros outside each block, optional free trailing columns; and the
 * membership of every constrained first-row entry in (X1²) + (X2, ..., Xn).
 * Throws ShapeMismatch when the staircase itself is malformed.
 */
bool presentation_staircase_hypothesis(const std::vector<std::vector<SparsePoly>>& m, int n);

struct KernelEvidence {
  bool ok = false;
  int first_mismatch_degree = -1;
  std::vector<long long> quotient_dims;   // dim T/((G)+𝔫^d) for d = 1..bound
  std::vector<long long> valuation_dims;  // dim R/m^d
};

/// Degree-by-degree comparison of dim T/((G)+𝔫^d) with dim R/m^d: equality
/// through the bound is evidence that G generates the kernel of the
/// monomial parametrization. Every g must vanish under the weights, which
/// default to the minimal generators of H in sorted order; pass them
/// explicitly when the variable order differs. Ranks are taken mod a large
/// prime first; the sandwich dim R/m^d ≤ codim_Q ≤ codim_p makes an equal
/// mod-p answer exact, and disagreements are re-run over Q.
/// Throws DegreeTooLarge over budget.
KernelEvidence kernel_evidence(const std::vector<SparsePoly>& gens, const NumericalSemigroup& h,
                               int degree_bound, std::vector<long long> weights = {});

/// Integer weights making all 2x2 minors of the matrix vanish under
/// X_i -> t^{w_i}, when a positive solution exists.
std::optional<std::vector<long long>> solve_binomial_weights(
    const std::vector<std::vector<SparsePoly>>& m);

}  // namespace nsg

#endif
