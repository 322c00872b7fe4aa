#include "nsg/relative_ideal.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace nsg {

namespace {

std::vector<long long> minimalize(const NumericalSemigroup& h, std::vector<long long> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<long long> out;
  for (long long g : gens) {
    bool redundant = false;
    for (long long g2 : out) {
      if (g2 < g && h.contains(g - g2)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(g);
  }
  return out;
}

void require_same_base(const RelativeIdeal& e, const RelativeIdeal& f) {
  if (e.base() != f.base()) throw BaseMismatch("ideals live over different semigroups");
}

}  // namespace

RelativeIdeal::RelativeIdeal(NumericalSemigroup base, std::vector<long long> gens)
    : base_(std::move(base)) {
  if (gens.empty()) throw EmptyInput("relative ideal needs at least one generator");
  gens_ = minimalize(base_, std::move(gens));
}

std::vector<char> RelativeIdeal::members_window(long long lo, long long hi) const {
  std::vector<char> out(static_cast<std::size_t>(std::max<long long>(hi - lo, 0)), 0);
  for (long long g : gens_) {
    for (long long z = std::max(lo, g); z < hi; ++z) {
      if (base_.contains(z - g)) out[static_cast<std::size_t>(z - lo)] = 1;
    }
  }
  return out;
}

bool RelativeIdeal::is_integral() const {
  for (long long g : gens_)
    if (!base_.contains(g)) return false;
  return true;
}

RelativeIdeal canonical_ideal(const NumericalSemigroup& h) {
  if (h.is_naturals()) return RelativeIdeal::unit(h);
  const long long f = h.frobenius();
  std::vector<long long> gens;
  for (long long c : pseudo_frobenius(h)) gens.push_back(f - c);
  RelativeIdeal k(h, gens);
  // Cross-check against the gap characterization; beyond f both sides agree
  // automatically, so the window [0, f] is exact.
  for (long long z = 0; z <= f; ++z) {
    bool via_pf = k.contains(z);
    bool via_gap = !h.contains(f - z);
    if (via_pf != via_gap)
      throw Error("canonical ideal characterizations disagree at " + std::to_string(z));
  }
  return k;
}

RelativeIdeal product(const RelativeIdeal& e, const RelativeIdeal& f) {
  require_same_base(e, f);
  std::vector<long long> gens;
  gens.reserve(e.gens().size() * f.gens().size());
  for (long long a : e.gens())
    for (long long b : f.gens()) gens.push_back(a + b);
  return RelativeIdeal(e.base(), std::move(gens));
}

RelativeIdeal colon(const RelativeIdeal& e, const RelativeIdeal& f) {
  require_same_base(e, f);
  const NumericalSemigroup& h = e.base();
  const long long lo = e.min_val() - f.min_val();
  const long long hi = e.stable_from() - f.min_val();  // all z >= hi qualify
  std::vector<long long> found;
  for (long long z = lo; z < hi + h.multiplicity(); ++z) {
    bool ok = true;
    for (long long g : f.gens()) {
      if (!e.contains(z + g)) {
        ok = false;
        break;
      }
    }
    if (ok) found.push_back(z);
  }
  return RelativeIdeal(h, std::move(found));
}

RelativeIdeal sum(const RelativeIdeal& e, const RelativeIdeal& f) {
  require_same_base(e, f);
  std::vector<long long> gens = e.gens();
  gens.insert(gens.end(), f.gens().begin(), f.gens().end());
  return RelativeIdeal(e.base(), std::move(gens));
}

bool contains_ideal(const RelativeIdeal& e, const RelativeIdeal& f) {
  if (e.base() != f.base()) throw BaseMismatch("ideals live over different semigroups");
  for (long long g : f.gens())
    if (!e.contains(g)) return false;
  return true;
}

long long length_between(const RelativeIdeal& e, const RelativeIdeal& f) {
  require_same_base(e, f);
  if (!contains_ideal(e, f)) throw NotContained("length_between requires F ⊆ E");
  // beyond both stabilization points the difference is empty
  const long long lo = e.min_val();
  const long long hi = std::max(e.stable_from(), f.stable_from());
  const auto em = e.members_window(lo, hi);
  const auto fm = f.members_window(lo, hi);
  long long count = 0;
  for (std::size_t i = 0; i < em.size(); ++i)
    if (em[i] && !fm[i]) ++count;
  return count;
}

long long colength(const RelativeIdeal& e) {
  if (!e.is_integral()) throw NotIntegral("colength needs an integral ideal");
  return length_between(RelativeIdeal::unit(e.base()), e);
}

long long minimal_generators_over(const NumericalSemigroup& h, const RelativeIdeal& e) {
  // members(E) \ (H+ + members(E)); candidates sit below stable_from + mult.
  const long long lo = e.min_val();
  const long long hi = e.stable_from() + h.multiplicity();
  long long count = 0;
  for (long long z = lo; z < hi; ++z) {
    if (!e.contains(z)) continue;
    bool in_shift = false;
    for (long long y = lo; y < z && !in_shift; ++y)
      if (e.contains(y) && h.contains(z - y) && z != y) in_shift = true;
    if (!in_shift) ++count;
  }
  return count;
}

RelativeIdeal semigroup_ideal(const NumericalSemigroup& h, const NumericalSemigroup& t) {
  const long long hi = t.conductor() + h.multiplicity() + 1;
  std::vector<long long> gens = t.members_upto(std::max<long long>(hi, 1));
  return RelativeIdeal(h, std::move(gens));
}

BlowupResult blowup(const NumericalSemigroup& h) {
  RelativeIdeal k = canonical_ideal(h);
  RelativeIdeal power = k;
  int n = 1;
  for (;; ++n) {
    RelativeIdeal next = product(power, k);
    if (next == power) break;
    power = next;
  }
  // The stable power is a semigroup: it contains 0 and is closed under
  // addition since K^n · K^n = K^{2n} = K^n.
  const long long hi = power.stable_from() + 1;
  std::vector<char> member(static_cast<std::size_t>(hi), 0);
  for (long long z = 0; z < hi; ++z)
    if (power.contains(z)) member[static_cast<std::size_t>(z)] = 1;
  NumericalSemigroup s = NumericalSemigroup::from_members(member);
  RelativeIdeal cond = colon(RelativeIdeal::unit(h), semigroup_ideal(h, s));
  return BlowupResult{std::move(s), n, std::move(cond)};
}

}  // namespace nsg
