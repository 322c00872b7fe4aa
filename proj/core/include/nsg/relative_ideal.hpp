#ifndef NSG_RELATIVE_IDEAL_HPP
#define NSG_RELATIVE_IDEAL_HPP

#include <vector>

#include "nsg/semigroup.hpp"

namespace nsg {

/**
 * A fractional monomial ideal of k[[H]]: a finite union of shifted copies
 * g + H of the value semigroup. Stored through its unique minimal generator
 * set (integers, possibly negative). Immutable.
 */
class RelativeIdeal {
 public:
  RelativeIdeal(NumericalSemigroup base, std::vector<long long> gens);

  static RelativeIdeal unit(const NumericalSemigroup& h) { return RelativeIdeal(h, {0}); }
  static RelativeIdeal principal(const NumericalSemigroup& h, long long a) {
    return RelativeIdeal(h, {a});
  }
  static RelativeIdeal maximal_ideal(const NumericalSemigroup& h) {
    return RelativeIdeal(h, h.generators());
  }

  const NumericalSemigroup& base() const { return base_; }
  const std::vector<long long>& gens() const { return gens_; }
  long long min_val() const { return gens_.front(); }
  long long mu() const { return static_cast<long long>(gens_.size()); }

  bool contains(long long z) const {
    for (long long g : gens_)
      if (base_.contains(z - g)) return true;
    return false;
  }

  /// Everything from this value on is a member.
  long long stable_from() const { return min_val() + base_.conductor(); }

  /// Member indicator on [lo, hi).
  std::vector<char> members_window(long long lo, long long hi) const;

  bool is_integral() const;

  bool operator==(const RelativeIdeal& other) const {
    return base_ == other.base_ && gens_ == other.gens_;
  }
  bool operator!=(const RelativeIdeal& other) const { return !(*this == other); }

 private:
  NumericalSemigroup base_;
  std::vector<long long> gens_;  // minimal, sorted
};

/// The canonical fractional ideal K = sum of R t^{f-c} over c in PF(H),
/// cross-checked against { z : f - z not in H }. Returns R for the full monoid.
RelativeIdeal canonical_ideal(const NumericalSemigroup& h);

/// Ideal product; generators are the Minkowski sum, re-minimalized.
RelativeIdeal product(const RelativeIdeal& e, const RelativeIdeal& f);

/// E : F = { z : z + F ⊆ E }.
RelativeIdeal colon(const RelativeIdeal& e, const RelativeIdeal& f);

/// E + F (union of member sets).
RelativeIdeal sum(const RelativeIdeal& e, const RelativeIdeal& f);

/// True when every member of F is a member of E.
bool contains_ideal(const RelativeIdeal& e, const RelativeIdeal& f);

/// ℓ(E/F) = |members(E) \ members(F)|. Throws NotContained unless F ⊆ E.
long long length_between(const RelativeIdeal& e, const RelativeIdeal& f);

/// ℓ(R/E) for an integral ideal E.
long long colength(const RelativeIdeal& e);

/// Number of minimal generators of E as an R-module,
/// |members(E) \ (H⁺ + members(E))|.
long long minimal_generators_over(const NumericalSemigroup& h, const RelativeIdeal& e);

/// An oversemigroup T of H viewed as a relative ideal of k[[H]].
RelativeIdeal semigroup_ideal(const NumericalSemigroup& h, const NumericalSemigroup& t);

struct BlowupResult {
  NumericalSemigroup ring;       // value semigroup of S = R[K]
  int stabilization_exponent;    // least n with K^{n+1} = K^n
  RelativeIdeal conductor_ideal; // c = R : S
};

/// S = R[K] via power iteration K, K², ... until stabilization.
BlowupResult blowup(const NumericalSemigroup& h);

}  // namespace nsg

#endif
