#include "nsg/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "nsg/relative_ideal.hpp"

namespace nsg {

SparsePoly::SparsePoly(std::vector<std::string> vars, std::map<std::vector<int>, Rational> terms)
    : vars_(std::move(vars)) {
  for (auto& [e, q] : terms) {
    if (e.size() != vars_.size()) throw Error("exponent vector arity mismatch");
    if (sgn(q) != 0) terms_.emplace(e, q);
  }
}

namespace {

struct PCursor {
  const std::string& s;
  std::size_t i = 0;
  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip();
    return i >= s.size();
  }
  char peek() {
    skip();
    return i < s.size() ? s[i] : '\0';
  }
  char take() {
    skip();
    return s[i++];
  }
  long long integer() {
    skip();
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) throw ParseError("expected integer in '" + s + "'");
    return std::stoll(s.substr(start, i - start));
  }
  std::string ident() {
    skip();
    std::size_t start = i;
    while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
    return s.substr(start, i - start);
  }
};

}  // namespace

SparsePoly SparsePoly::parse(const std::vector<std::string>& vars, const std::string& text) {
  std::map<std::vector<int>, Rational> acc;
  PCursor c{text};
  bool first = true;
  if (c.done()) return SparsePoly(vars);
  while (!c.done()) {
    Rational coeff = 1;
    if (c.peek() == '+') {
      c.take();
    } else if (c.peek() == '-') {
      c.take();
      coeff = -1;
    } else if (!first) {
      throw ParseError("expected + or - in '" + text + "'");
    }
    first = false;
    std::vector<int> exp(vars.size(), 0);
    bool expect_atom = true;
    while (expect_atom) {
      c.skip();
      if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
        long num = static_cast<long>(c.integer());
        if (c.peek() == '/') {
          c.take();
          long den = static_cast<long>(c.integer());
          if (den == 0) throw ParseError("zero denominator in '" + text + "'");
          coeff *= Rational(num, den);
        } else {
          coeff *= num;
        }
      } else if (std::isalpha(static_cast<unsigned char>(c.peek()))) {
        std::string id = c.ident();
        auto it = std::find(vars.begin(), vars.end(), id);
        if (it == vars.end()) throw ParseError("unknown variable '" + id + "' in '" + text + "'");
        long long e = 1;
        if (c.peek() == '^') {
          c.take();
          e = c.integer();
        }
        exp[static_cast<std::size_t>(it - vars.begin())] += static_cast<int>(e);
      } else {
        throw ParseError("unexpected character in '" + text + "'");
      }
      if (c.peek() == '*') {
        c.take();
      } else {
        expect_atom = false;
      }
    }
    acc[exp] += coeff;
  }
  std::map<std::vector<int>, Rational> clean;
  for (auto& [e, q] : acc)
    if (sgn(q) != 0) clean.emplace(e, q);
  return SparsePoly(vars, std::move(clean));
}

bool SparsePoly::is_monomial(const std::vector<int>& exponents) const {
  return terms_.size() == 1 && terms_.begin()->first == exponents &&
         terms_.begin()->second == 1;
}

long long SparsePoly::min_total_degree() const {
  long long best = -1;
  for (const auto& [e, q] : terms_) {
    long long d = std::accumulate(e.begin(), e.end(), 0LL);
    if (best < 0 || d < best) best = d;
  }
  return best;
}

SparsePoly SparsePoly::operator*(const SparsePoly& other) const {
  std::map<std::vector<int>, Rational> acc;
  for (const auto& [e1, q1] : terms_)
    for (const auto& [e2, q2] : other.terms_) {
      std::vector<int> e = e1;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
      acc[e] += q1 * q2;
    }
  std::map<std::vector<int>, Rational> clean;
  for (auto& [e, q] : acc)
    if (sgn(q) != 0) clean.emplace(e, q);
  return SparsePoly(vars_, std::move(clean));
}

SparsePoly SparsePoly::operator-(const SparsePoly& other) const {
  std::map<std::vector<int>, Rational> acc = terms_;
  for (const auto& [e, q] : other.terms_) acc[e] -= q;
  std::map<std::vector<int>, Rational> clean;
  for (auto& [e, q] : acc)
    if (sgn(q) != 0) clean.emplace(e, q);
  return SparsePoly(vars_, std::move(clean));
}

SparsePoly SparsePoly::shifted(const std::vector<int>& monomial) const {
  std::map<std::vector<int>, Rational> acc;
  for (const auto& [e, q] : terms_) {
    std::vector<int> e2 = e;
    for (std::size_t i = 0; i < e2.size(); ++i) e2[i] += monomial[i];
    acc.emplace(std::move(e2), q);
  }
  return SparsePoly(vars_, std::move(acc));
}

std::string SparsePoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, q] : terms_) {
    std::string term;
    Rational a = abs(q);
    if (a != 1) term = a.get_str();
    bool any_var = false;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!term.empty()) term += "*";
      term += vars_[i];
      if (e[i] > 1) term += "^" + std::to_string(e[i]);
      any_var = true;
    }
    if (!any_var && term.empty()) term = "1";
    if (out.empty())
      out = (sgn(q) < 0 ? "-" : "") + term;
    else
      out += (sgn(q) < 0 ? " - " : " + ") + term;
  }
  return out;
}

PhiImage phi_eval(const SparsePoly& p, const std::vector<long long>& weights) {
  if (weights.size() != p.vars().size()) throw Error("weight count must match variable count");
  for (long long w : weights)
    if (w <= 0) throw Error("weights must be positive");
  std::map<long long, Rational> acc;
  for (const auto& [e, q] : p.terms()) {
    long long deg = 0;
    for (std::size_t i = 0; i < e.size(); ++i) deg += static_cast<long long>(e[i]) * weights[i];
    acc[deg] += q;
  }
  PhiImage out;
  for (auto& [d, q] : acc)
    if (sgn(q) != 0) out.series.emplace_back(d, q);
  out.vanishes = out.series.empty();
  return out;
}

std::vector<SparsePoly> minors2(const std::vector<std::vector<SparsePoly>>& m) {
  if (m.size() != 2) throw Error("minors2 expects a 2-row matrix");
  const std::size_t n = m[0].size();
  if (m[1].size() != n || n < 2) throw Error("minors2 expects a 2 x n matrix with n >= 2");
  std::vector<SparsePoly> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      out.push_back(m[0][i] * m[1][j] - m[0][j] * m[1][i]);
  return out;
}

namespace {

// membership in the monomial ideal (X1^2, X2, ..., Xn)
bool in_j(const SparsePoly& p) {
  for (const auto& [e, q] : p.terms()) {
    bool ok = e[0] >= 2;
    for (std::size_t k = 1; k < e.size() && !ok; ++k) ok = e[k] >= 1;
    if (!ok) return false;
  }
  return true;
}

std::vector<int> unit_exp(std::size_t n, std::size_t k, int power) {
  std::vector<int> e(n, 0);
  e[k] = power;
  return e;
}

}  // namespace

bool presentation_staircase_hypothesis(const std::vector<std::vector<SparsePoly>>& m, int n) {
  if (m.size() < 2) throw ShapeMismatch("need the first row plus at least one staircase row");
  const std::size_t cols = m[0].size();
  const std::size_t blocks = m.size() - 1;
  if (cols < blocks * static_cast<std::size_t>(n))
    throw ShapeMismatch("not enough columns for the staircase blocks");
  const std::size_t nn = static_cast<std::size_t>(n);

  // classify each staircase row as an X1²-block or an X1-block
  std::vector<int> kind(blocks, 0);  // 2 or 1 = power of X1 in the leading entry
  for (std::size_t r = 1; r < m.size(); ++r) {
    if (m[r].size() != cols) throw ShapeMismatch("ragged matrix");
    const std::size_t base = (r - 1) * nn;
    const SparsePoly& lead = m[r][base];
    int power;
    if (lead.is_monomial(unit_exp(nn, 0, 2)))
      power = 2;
    else if (lead.is_monomial(unit_exp(nn, 0, 1)))
      power = 1;
    else
      throw ShapeMismatch("block leading entry must be X1² or X1");
    kind[r - 1] = power;
    for (std::size_t k = 1; k < nn; ++k)
      if (!m[r][base + k].is_monomial(unit_exp(nn, k, 1)))
        throw ShapeMismatch("block entries must be X2, ..., Xn");
    for (std::size_t cidx = 0; cidx < cols; ++cidx) {
      if (cidx >= base && cidx < base + nn) continue;
      if (!m[r][cidx].is_zero()) throw ShapeMismatch("staircase rows must vanish off their block");
    }
  }
  // all X1² blocks precede the X1 blocks
  bool seen_x1 = false;
  for (std::size_t b = 0; b < blocks; ++b) {
    if (kind[b] == 1) seen_x1 = true;
    if (kind[b] == 2 && seen_x1) throw ShapeMismatch("X1² blocks must precede X1 blocks");
  }

  // membership: a-entries over X1² blocks (all n columns), b-entries over
  // X1 blocks except the first column of each block
  for (std::size_t b = 0; b < blocks; ++b) {
    const std::size_t base = b * nn;
    for (std::size_t k = 0; k < nn; ++k) {
      if (kind[b] == 1 && k == 0) continue;
      if (!in_j(m[0][base + k])) return false;
    }
  }
  return true;
}

// ---- kernel evidence ----------------------------------------------------------

namespace {

void enumerate_monomials(std::size_t nvars, int max_deg, std::vector<int>& cur, std::size_t pos,
                         int used, std::vector<std::vector<int>>& out) {
  if (pos == nvars) {
    out.push_back(cur);
    return;
  }
  for (int e = 0; e + used <= max_deg; ++e) {
    cur[pos] = e;
    enumerate_monomials(nvars, max_deg, cur, pos + 1, used + e, out);
  }
  cur[pos] = 0;
}

// rank of the Macaulay rows, with early exit once the codimension target
// is reached; F is FieldQ or FieldFp
template <class F>
long long macaulay_codim(const F& field, const std::vector<SparsePoly>& gens, int d,
                         const std::map<std::vector<int>, int>& col_of,
                         const std::vector<std::vector<int>>& monomials, long long target) {
  using Elem = typename F::Elem;
  const std::size_t cols = col_of.size();
  std::vector<std::vector<Elem>> pivot_rows;
  std::vector<std::size_t> pivot_cols;
  long long rank = 0;
  for (const auto& g : gens) {
    const int room = d - 1 - static_cast<int>(g.min_total_degree());
    if (room < 0) continue;
    for (const auto& mono : monomials) {
      int mdeg = std::accumulate(mono.begin(), mono.end(), 0);
      if (mdeg > room) continue;
      // row = mono * g truncated below total degree d
      std::vector<Elem> row(cols, field.zero());
      bool nonzero = false;
      for (const auto& [e, q] : g.terms()) {
        std::vector<int> e2 = e;
        for (std::size_t i = 0; i < e2.size(); ++i) e2[i] += mono[i];
        int deg = std::accumulate(e2.begin(), e2.end(), 0);
        if (deg >= d) continue;
        auto it = col_of.find(e2);
        row[static_cast<std::size_t>(it->second)] =
            field.add(row[static_cast<std::size_t>(it->second)], field.from_rational(q));
        nonzero = true;
      }
      if (!nonzero) continue;
      // reduce against the pivots
      for (std::size_t pr = 0; pr < pivot_rows.size(); ++pr) {
        const std::size_t pc = pivot_cols[pr];
        if (field.is_zero(row[pc])) continue;
        Elem factor = row[pc];
        const auto& prow = pivot_rows[pr];
        for (std::size_t c = 0; c < cols; ++c) {
          if (field.is_zero(prow[c])) continue;
          row[c] = field.sub(row[c], field.mul(factor, prow[c]));
        }
      }
      std::size_t lead = cols;
      for (std::size_t c = 0; c < cols; ++c)
        if (!field.is_zero(row[c])) {
          lead = c;
          break;
        }
      if (lead == cols) continue;
      Elem inv = field.div(field.one(), row[lead]);
      for (auto& x : row)
        if (!field.is_zero(x)) x = field.mul(x, inv);
      pivot_rows.push_back(std::move(row));
      pivot_cols.push_back(lead);
      ++rank;
      if (static_cast<long long>(cols) - rank == target) return target;
    }
  }
  return static_cast<long long>(cols) - rank;
}

}  // namespace

KernelEvidence kernel_evidence(const std::vector<SparsePoly>& gens, const NumericalSemigroup& h,
                               int degree_bound, std::vector<long long> weights) {
  if (weights.empty()) weights = h.generators();
  for (const auto& g : gens)
    if (!phi_eval(g, weights).vanishes)
      throw Error("kernel_evidence requires every generator to vanish under the weights");
  const std::size_t nvars = weights.size();

  KernelEvidence out;
  out.ok = true;

  // valuation side: dim R/m^d by exact gap counts
  RelativeIdeal mpow = RelativeIdeal::maximal_ideal(h);
  for (int d = 1; d <= degree_bound; ++d) {
    out.valuation_dims.push_back(colength(mpow));
    mpow = product(mpow, RelativeIdeal::maximal_ideal(h));
  }

  const FieldFp fp(1000003);
  for (int d = 1; d <= degree_bound; ++d) {
    std::vector<std::vector<int>> monomials;
    std::vector<int> cur(nvars, 0);
    enumerate_monomials(nvars, d - 1, cur, 0, 0, monomials);
    if (monomials.size() > 20000) throw DegreeTooLarge("Macaulay matrix over budget");
    std::map<std::vector<int>, int> col_of;
    for (const auto& e : monomials) col_of.emplace(e, static_cast<int>(col_of.size()));

    const long long target = out.valuation_dims[static_cast<std::size_t>(d - 1)];
    long long codim = macaulay_codim(fp, gens, d, col_of, monomials, target);
    if (codim != target) {
      // exact re-run over the rationals
      codim = macaulay_codim(FieldQ{}, gens, d, col_of, monomials, target);
    }
    out.quotient_dims.push_back(codim);
    if (codim != target && out.first_mismatch_degree < 0) {
      out.ok = false;
      out.first_mismatch_degree = d;
    }
  }
  return out;
}

std::optional<std::vector<long long>> solve_binomial_weights(
    const std::vector<std::vector<SparsePoly>>& m) {
  if (m.size() != 2 || m[0].size() != m[1].size() || m[0].empty()) return std::nullopt;
  const std::size_t n = m[0][0].vars().size();
  const std::size_t cols = m[0].size();
  // entries must be single monomials
  auto exponent_of = [&](const SparsePoly& p) -> std::optional<std::vector<int>> {
    if (p.terms().size() != 1) return std::nullopt;
    return p.terms().begin()->first;
  };

  // equations: deg(top_i) - deg(bot_i) equal across i
  std::vector<std::vector<Rational>> rows;
  std::optional<std::vector<int>> first_diff;
  std::vector<std::vector<int>> diffs;
  for (std::size_t i = 0; i < cols; ++i) {
    auto top = exponent_of(m[0][i]);
    auto bot = exponent_of(m[1][i]);
    if (!top || !bot) return std::nullopt;
    std::vector<int> diff(n);
    for (std::size_t k = 0; k < n; ++k) diff[k] = (*top)[k] - (*bot)[k];
    diffs.push_back(std::move(diff));
  }
  for (std::size_t i = 1; i < cols; ++i) {
    std::vector<Rational> eq(n, 0);
    for (std::size_t k = 0; k < n; ++k) eq[k] = Rational(diffs[i][k] - diffs[0][k]);
    rows.push_back(std::move(eq));
  }

  // nullspace over Q
  std::vector<std::vector<Rational>> rref = rows;
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rref.size(); ++c) {
    std::size_t sel = rref.size();
    for (std::size_t rr = r; rr < rref.size(); ++rr)
      if (sgn(rref[rr][c]) != 0) {
        sel = rr;
        break;
      }
    if (sel == rref.size()) continue;
    std::swap(rref[sel], rref[r]);
    Rational inv = 1 / rref[r][c];
    for (auto& x : rref[r]) x *= inv;
    for (std::size_t rr = 0; rr < rref.size(); ++rr) {
      if (rr == r) continue;
      Rational f = rref[rr][c];
      if (sgn(f) == 0) continue;
      for (std::size_t cc = 0; cc < n; ++cc) rref[rr][cc] -= f * rref[r][cc];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  std::vector<char> is_pivot(n, 0);
  for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = 1;
  std::vector<std::vector<Rational>> null_basis;
  for (std::size_t c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    std::vector<Rational> v(n, 0);
    v[c] = 1;
    for (std::size_t pr = 0; pr < pivot_col.size(); ++pr)
      v[static_cast<std::size_t>(pivot_col[pr])] = -rref[pr][c];
    null_basis.push_back(std::move(v));
  }
  if (null_basis.empty()) return std::nullopt;

  auto to_positive_integers = [&](const std::vector<Rational>& v)
      -> std::optional<std::vector<long long>> {
    mpz_class lcm_den = 1;
    for (const auto& q : v) {
      mpz_class den = q.get_den();
      lcm_den = lcm_den / gcd(lcm_den, den) * den;
    }
    std::vector<long long> w(n);
    bool all_pos = true, all_neg = true;
    for (std::size_t k = 0; k < n; ++k) {
      mpq_class scaled = v[k] * Rational(lcm_den);
      mpz_class z = scaled.get_num();
      w[k] = static_cast<long long>(z.get_si());
      if (w[k] <= 0) all_pos = false;
      if (w[k] >= 0) all_neg = false;
    }
    if (all_neg)
      for (auto& x : w) x = -x;
    else if (!all_pos)
      return std::nullopt;
    long long g = 0;
    for (long long x : w) g = std::gcd(g, x);
    if (g > 1)
      for (auto& x : w) x /= g;
    return w;
  };

  for (const auto& v : null_basis) {
    if (auto w = to_positive_integers(v)) return w;
  }
  // small combinations of two basis vectors
  for (std::size_t a = 0; a < null_basis.size(); ++a)
    for (std::size_t b = a + 1; b < null_basis.size(); ++b)
      for (long s = 1; s <= 4; ++s) {
        std::vector<Rational> v(n);
        for (std::size_t k = 0; k < n; ++k) v[k] = null_basis[a][k] * s + null_basis[b][k];
        if (auto w = to_positive_integers(v)) return w;
      }
  return std::nullopt;
}

}  // namespace nsg
