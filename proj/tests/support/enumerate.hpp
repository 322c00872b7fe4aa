// Exhaustive enumeration of numerical semigroups by genus, for the sweep
// tests. Children of H in the tree remove one minimal generator larger than
// the Frobenius number, so each semigroup appears exactly once.
#ifndef NSG_TESTS_ENUMERATE_HPP
#define NSG_TESTS_ENUMERATE_HPP

#include <vector>

#include <nsg/semigroup.hpp>

namespace nsg::testsupport {

inline void genus_tree(const NumericalSemigroup& h, int max_genus,
                       std::vector<NumericalSemigroup>& out) {
  out.push_back(h);
  if (h.genus() >= max_genus) return;
  for (long long g : h.generators()) {
    if (g <= h.frobenius()) continue;
    const long long hi = std::max(h.conductor(), g + 1) + 2 * h.generators().back() + 2;
    std::vector<char> member(static_cast<std::size_t>(hi), 0);
    for (long long z = 0; z < hi; ++z)
      member[static_cast<std::size_t>(z)] = h.contains(z) && z != g;
    genus_tree(NumericalSemigroup::from_members(member), max_genus, out);
  }
}

inline std::vector<NumericalSemigroup> all_semigroups_up_to_genus(int max_genus) {
  std::vector<NumericalSemigroup> out;
  genus_tree(NumericalSemigroup::naturals(), max_genus, out);
  return out;
}

}  // namespace nsg::testsupport

#endif
