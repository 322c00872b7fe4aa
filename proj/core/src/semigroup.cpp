#include "nsg/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <unordered_set>

namespace nsg {

namespace {

std::string join(const std::vector<long long>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

// Member indicator of the monoid generated by `gens` on [0, hi].
std::vector<char> closure_upto(const std::vector<long long>& gens, long long hi) {
  std::vector<char> ok(static_cast<std::size_t>(hi) + 1, 0);
  ok[0] = 1;
  for (long long z = 1; z <= hi; ++z) {
    for (long long g : gens) {
      if (z >= g && ok[static_cast<std::size_t>(z - g)]) {
        ok[static_cast<std::size_t>(z)] = 1;
        break;
      }
    }
  }
  return ok;
}

}  // namespace

NumericalSemigroup::NumericalSemigroup(std::vector<long long> gens) {
  if (gens.empty()) throw EmptyInput("generator list is empty");
  for (long long g : gens)
    if (g <= 0) throw EmptyInput("generators must be positive, got " + std::to_string(g));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  long long d = 0;
  for (long long g : gens) d = std::gcd(d, g);
  if (d != 1) throw GcdNotOne("gcd(" + join(gens) + ") = " + std::to_string(d));

  // Grow the closure window until a run of `multiplicity` consecutive members
  // appears; from there on everything is a member.
  long long m = gens.front();
  long long hi = std::max<long long>(gens.back() * m + gens.back() + 1, 2 * m + 2);
  std::vector<char> ok;
  long long run_start = -1;
  for (;;) {
    ok = closure_upto(gens, hi);
    long long run = 0;
    run_start = -1;
    for (long long z = 0; z <= hi; ++z) {
      run = ok[static_cast<std::size_t>(z)] ? run + 1 : 0;
      if (run >= m) {
        run_start = z - m + 1;
        break;
      }
    }
    if (run_start >= 0) break;
    hi *= 2;
  }

  frobenius_ = -1;
  for (long long z = run_start - 1; z >= 0; --z) {
    if (!ok[static_cast<std::size_t>(z)]) {
      frobenius_ = z;
      break;
    }
  }
  member_.assign(ok.begin(), ok.begin() + conductor());
  for (long long z = 0; z <= frobenius_; ++z)
    if (!member_[static_cast<std::size_t>(z)]) gaps_.push_back(z);

  // Minimal generators: members in [m, conductor + m) that are not a sum of
  // two non-zero members.
  std::vector<long long> minimal;
  for (long long h = m; h < conductor() + m; ++h) {
    if (!(h < conductor() ? member_[static_cast<std::size_t>(h)] != 0 : true)) continue;
    bool decomposable = false;
    for (long long a = m; a + m <= h; ++a) {
      bool a_in = a < conductor() ? member_[static_cast<std::size_t>(a)] != 0 : true;
      long long b = h - a;
      bool b_in = b < conductor() ? member_[static_cast<std::size_t>(b)] != 0 : true;
      if (a_in && b_in) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) minimal.push_back(h);
  }
  if (minimal.empty()) minimal.push_back(1);  // the full monoid
  gens_ = std::move(minimal);
}

NumericalSemigroup NumericalSemigroup::from_members(const std::vector<char>& member) {
  if (member.empty() || !member[0]) throw EmptyInput("member set must contain 0");
  long long f = -1;
  for (long long z = static_cast<long long>(member.size()) - 1; z >= 0; --z) {
    if (!member[static_cast<std::size_t>(z)]) {
      f = z;
      break;
    }
  }
  std::vector<long long> gens = minimal_generators_of_members(member, f + 1);
  return NumericalSemigroup(gens);
}

std::vector<long long> minimal_generators_of_members(const std::vector<char>& member,
                                                     long long conductor) {
  auto in = [&](long long z) {
    if (z < 0) return false;
    if (z >= conductor) return true;
    return z < static_cast<long long>(member.size()) && member[static_cast<std::size_t>(z)] != 0;
  };
  long long m = 1;
  while (m < conductor && !in(m)) ++m;  // multiplicity
  std::vector<long long> gens;
  for (long long h = m; h < conductor + m; ++h) {
    if (!in(h)) continue;
    bool decomposable = false;
    for (long long a = m; a + m <= h; ++a)
      if (in(a) && in(h - a)) {
        decomposable = true;
        break;
      }
    if (!decomposable) gens.push_back(h);
  }
  if (gens.empty()) gens.push_back(1);  // the full monoid
  return gens;
}

std::vector<long long> NumericalSemigroup::apery_set(long long m) const {
  if (m <= 0 || !contains(m)) throw NotAMember("apery base " + std::to_string(m) + " is not a member");
  std::vector<long long> ap(static_cast<std::size_t>(m), -1);
  long long found = 0;
  for (long long z = 0; found < m; ++z) {
    if (!contains(z)) continue;
    auto& slot = ap[static_cast<std::size_t>(z % m)];
    if (slot == -1) {
      slot = z;
      ++found;
    }
  }
  return ap;
}

std::vector<long long> NumericalSemigroup::members_upto(long long hi) const {
  std::vector<long long> out;
  for (long long z = 0; z < hi; ++z)
    if (contains(z)) out.push_back(z);
  return out;
}

std::vector<long long> pseudo_frobenius(const NumericalSemigroup& h) {
  std::vector<long long> pf;
  for (long long g : h.gaps()) {
    bool ok = true;
    for (long long a : h.generators())
      if (!h.contains(g + a)) {
        ok = false;
        break;
      }
    if (ok) pf.push_back(g);
  }
  return pf;
}

SemigroupInvariants invariants(const NumericalSemigroup& h) {
  SemigroupInvariants inv;
  inv.frobenius = h.frobenius();
  inv.conductor = h.conductor();
  inv.genus = h.genus();
  inv.multiplicity = h.multiplicity();
  inv.embedding_dim = h.embedding_dim();
  inv.pseudo_frobenius = pseudo_frobenius(h);
  inv.type = h.is_naturals() ? 1 : static_cast<long long>(inv.pseudo_frobenius.size());
  inv.symmetric = inv.type == 1;
  return inv;
}

bool is_symmetric(const NumericalSemigroup& h) {
  if (h.is_naturals()) return true;
  return 2 * h.genus() == h.frobenius() + 1;
}

std::vector<NumericalSemigroup> oversemigroups(const NumericalSemigroup& h, int genus_limit) {
  if (h.genus() > genus_limit)
    throw TooManyGaps("genus " + std::to_string(h.genus()) + " exceeds enumeration limit " +
                      std::to_string(genus_limit));
  const auto& gaps = h.gaps();
  const int g = static_cast<int>(gaps.size());
  const long long f = h.frobenius();

  // Each oversemigroup is recorded by the subset of gaps(h) it fills in.
  // Starting from h, repeatedly fill one "special" gap x: one with
  // x + (members \ {0}) ⊆ members and 2x a member.
  auto in_with = [&](std::uint32_t mask, long long z) {
    if (z < 0) return false;
    if (h.contains(z)) return true;
    if (z > f) return true;
    for (int i = 0; i < g; ++i)
      if (gaps[static_cast<std::size_t>(i)] == z) return (mask >> i & 1u) != 0;
    return false;
  };

  std::unordered_set<std::uint32_t> seen;
  std::vector<std::uint32_t> stack{0u};
  std::vector<std::uint32_t> all;
  seen.insert(0u);
  while (!stack.empty()) {
    std::uint32_t mask = stack.back();
    stack.pop_back();
    all.push_back(mask);
    for (int i = 0; i < g; ++i) {
      if (mask >> i & 1u) continue;
      long long x = gaps[static_cast<std::size_t>(i)];
      std::uint32_t next = mask | (1u << i);
      bool closed = in_with(next, 2 * x);
      if (closed) {
        for (long long z = 1; z <= f - x && closed; ++z)
          if (in_with(next, z) && !in_with(next, x + z)) closed = false;
      }
      if (closed && seen.insert(next).second) stack.push_back(next);
    }
  }

  std::vector<NumericalSemigroup> out;
  out.reserve(all.size());
  for (std::uint32_t mask : all) {
    std::vector<char> member(static_cast<std::size_t>(f + 2), 0);
    for (long long z = 0; z <= f + 1; ++z)
      member[static_cast<std::size_t>(z)] = in_with(mask, z) ? 1 : 0;
    out.push_back(NumericalSemigroup::from_members(member));
  }
  std::sort(out.begin(), out.end(), [](const NumericalSemigroup& a, const NumericalSemigroup& b) {
    if (a.genus() != b.genus()) return a.genus() > b.genus();
    return a.generators() < b.generators();
  });
  return out;
}

NumericalSemigroup glue(const NumericalSemigroup& h1, long long alpha) {
  if (alpha % 2 == 0) throw AlphaEven("alpha = " + std::to_string(alpha) + " must be odd");
  if (!h1.contains(alpha)) throw AlphaNotInH1("alpha = " + std::to_string(alpha) + " is not in H1");
  for (long long a : h1.generators())
    if (a == alpha)
      throw AlphaIsGenerator("alpha = " + std::to_string(alpha) + " is a minimal generator of H1");
  std::vector<long long> gens;
  gens.reserve(h1.generators().size() + 1);
  for (long long a : h1.generators()) gens.push_back(2 * a);
  gens.push_back(alpha);
  return NumericalSemigroup(std::move(gens));
}

}  // namespace nsg
