// Brute-force oracles used to freeze expected values independently of the
// library's own code paths. Everything here works on explicit member lists.
#ifndef NSG_TESTS_ORACLES_HPP
#define NSG_TESTS_ORACLES_HPP

#include <algorithm>
#include <set>
#include <vector>

namespace nsg::oracle {

/// Members of the monoid generated by gens, on [0, hi).
inline std::vector<char> monoid_members(const std::vector<long long>& gens, long long hi) {
  std::vector<char> ok(static_cast<std::size_t>(hi), 0);
  ok[0] = 1;
  for (long long z = 1; z < hi; ++z)
    for (long long g : gens)
      if (z >= g && ok[static_cast<std::size_t>(z - g)]) {
        ok[static_cast<std::size_t>(z)] = 1;
        break;
      }
  return ok;
}

/// Members of the ideal generated by ivals inside the monoid, on [0, hi).
inline std::vector<char> ideal_members(const std::vector<char>& monoid,
                                       const std::vector<long long>& ivals, long long hi) {
  std::vector<char> ok(static_cast<std::size_t>(hi), 0);
  for (long long g : ivals)
    for (long long z = g; z < hi; ++z)
      if (monoid[static_cast<std::size_t>(z - g)]) ok[static_cast<std::size_t>(z)] = 1;
  return ok;
}

/// Minkowski sum of two member sets on [0, hi).
inline std::vector<char> minkowski(const std::vector<char>& a, const std::vector<char>& b,
                                   long long hi) {
  std::vector<char> ok(static_cast<std::size_t>(hi), 0);
  for (long long x = 0; x < hi; ++x) {
    if (!a[static_cast<std::size_t>(x)]) continue;
    for (long long y = 0; x + y < hi; ++y)
      if (b[static_cast<std::size_t>(y)]) ok[static_cast<std::size_t>(x + y)] = 1;
  }
  return ok;
}

inline long long count_diff(const std::vector<char>& big, const std::vector<char>& small) {
  long long n = 0;
  for (std::size_t i = 0; i < big.size(); ++i)
    if (big[i] && !small[i]) ++n;
  return n;
}

/// All subsets of the gaps whose union with the monoid is closed under
/// addition: the exhaustive oversemigroup oracle (only for small genus).
inline std::set<std::set<long long>> oversemigroup_gap_fillings(const std::vector<long long>& gens,
                                                                long long frobenius) {
  const long long hi = 2 * frobenius + 4;
  auto base = monoid_members(gens, hi);
  std::vector<long long> gaps;
  for (long long z = 0; z <= frobenius; ++z)
    if (!base[static_cast<std::size_t>(z)]) gaps.push_back(z);
  std::set<std::set<long long>> result;
  const std::size_t g = gaps.size();
  for (std::size_t mask = 0; mask < (1ull << g); ++mask) {
    auto mem = base;
    for (std::size_t i = 0; i < g; ++i)
      if (mask >> i & 1) mem[static_cast<std::size_t>(gaps[i])] = 1;
    bool closed = true;
    for (long long x = 1; x < hi && closed; ++x) {
      if (!mem[static_cast<std::size_t>(x)]) continue;
      for (long long y = x; x + y < hi; ++y)
        if (mem[static_cast<std::size_t>(y)] && !mem[static_cast<std::size_t>(x + y)]) {
          closed = false;
          break;
        }
    }
    if (!closed) continue;
    std::set<long long> filled;
    for (std::size_t i = 0; i < g; ++i)
      if (mask >> i & 1) filled.insert(gaps[i]);
    result.insert(std::move(filled));
  }
  return result;
}

}  // namespace nsg::oracle

#endif
