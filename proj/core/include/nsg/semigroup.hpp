#ifndef NSG_SEMIGROUP_HPP
#define NSG_SEMIGROUP_HPP

#include <cstdint>
#include <vector>

#include "nsg/errors.hpp"

namespace nsg {

/**
 * A numerical semigroup: a co-finite additive submonoid of the non-negative
 * integers, stored through its minimal generators.
 *
 * Membership below the conductor is answered by a precomputed bitset, and by
 * the conductor itself above it. All values are immutable after construction,
 * so instances can be shared freely between threads.
 *
 * The full monoid (generated by 1) is admitted with frobenius() == -1 and an
 * empty gap set; its pseudo-Frobenius set is empty and its type is 1 by
 * convention.
 */
class NumericalSemigroup {
 public:
  /// Builds the semigroup generated by `gens`, minimalizing the list.
  /// Throws EmptyInput if the list is empty or contains non-positive
  /// entries, GcdNotOne if the generators are not coprime.
  explicit NumericalSemigroup(std::vector<long long> gens);

  static NumericalSemigroup naturals() { return NumericalSemigroup({1}); }

  /// Reconstructs a semigroup from an indicator of its members on [0, hi).
  /// `hi` must be past the conductor; the tail is assumed complete.
  static NumericalSemigroup from_members(const std::vector<char>& member);

  const std::vector<long long>& generators() const { return gens_; }
  long long frobenius() const { return frobenius_; }
  long long conductor() const { return frobenius_ + 1; }
  const std::vector<long long>& gaps() const { return gaps_; }
  long long genus() const { return static_cast<long long>(gaps_.size()); }
  long long multiplicity() const { return gens_.front(); }
  long long embedding_dim() const { return static_cast<long long>(gens_.size()); }
  bool is_naturals() const { return frobenius_ == -1; }

  bool contains(long long z) const {
    if (z < 0) return false;
    if (z >= conductor()) return true;
    return member_[static_cast<std::size_t>(z)] != 0;
  }

  /// Smallest member in each residue class mod m, listed by residue 0..m-1.
  /// Throws NotAMember unless m is a positive member.
  std::vector<long long> apery_set(long long m) const;

  /// Members in [0, hi) as a sorted list.
  std::vector<long long> members_upto(long long hi) const;

  bool operator==(const NumericalSemigroup& other) const { return gens_ == other.gens_; }
  bool operator!=(const NumericalSemigroup& other) const { return !(*this == other); }

 private:
  NumericalSemigroup() = default;

  std::vector<long long> gens_;   // minimal, sorted
  long long frobenius_ = -1;
  std::vector<long long> gaps_;   // sorted
  std::vector<char> member_;      // indicator on [0, conductor)
};

struct SemigroupInvariants {
  long long frobenius;
  long long conductor;
  long long genus;
  long long multiplicity;
  long long embedding_dim;
  std::vector<long long> pseudo_frobenius;
  long long type;
  bool symmetric;
};

/// PF(H): gaps g with g + a ∈ H for every minimal generator a. Empty for the
/// full monoid.
std::vector<long long> pseudo_frobenius(const NumericalSemigroup& h);

SemigroupInvariants invariants(const NumericalSemigroup& h);

bool is_symmetric(const NumericalSemigroup& h);

/// All numerical semigroups H' with H ⊆ H' ⊆ ℕ, including both endpoints,
/// ordered by genus descending (H first, ℕ last) then by generators.
/// Throws TooManyGaps when genus(h) exceeds `genus_limit`.
std::vector<NumericalSemigroup> oversemigroups(const NumericalSemigroup& h,
                                               int genus_limit = 24);

/// The gluing <2a_1, ..., 2a_l, alpha> of h1 with ℕ. alpha must be an odd
/// member of h1 that is not one of its minimal generators.
NumericalSemigroup glue(const NumericalSemigroup& h1, long long alpha);

/// Minimal generators of a member indicator: members that are not sums of two
/// non-zero members. `member` must describe the set completely on [0, size)
/// with the tail from `conductor` onwards full.
std::vector<long long> minimal_generators_of_members(const std::vector<char>& member,
                                                     long long conductor);

}  // namespace nsg

#endif
