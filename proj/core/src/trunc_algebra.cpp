#include "nsg/trunc_algebra.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <set>

namespace nsg {

// ---- series parsing ---------------------------------------------------------

namespace {

struct Cursor {
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
};

long long parse_int(Cursor& c) {
  c.skip();
  std::size_t start = c.i;
  while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
  if (c.i == start) throw ParseError("expected an integer in '" + c.s + "'");
  return std::stoll(c.s.substr(start, c.i - start));
}

std::string parse_ident(Cursor& c) {
  c.skip();
  std::size_t start = c.i;
  while (c.i < c.s.size() &&
         (std::isalnum(static_cast<unsigned char>(c.s[c.i])) || c.s[c.i] == '_'))
    ++c.i;
  return c.s.substr(start, c.i - start);
}

}  // namespace

SeriesQ parse_series(const std::string& text, const std::map<std::string, Rational>& params) {
  std::map<long long, Rational> acc;
  Cursor c{text};
  bool first = true;
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
    long long exp = 0;
    bool expect_atom = true;
    while (expect_atom) {
      c.skip();
      if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
        long num = static_cast<long>(parse_int(c));
        if (c.peek() == '/') {
          c.take();
          long den = static_cast<long>(parse_int(c));
          if (den == 0) throw ParseError("zero denominator in '" + text + "'");
          coeff *= Rational(num, den);
        } else {
          coeff *= num;
        }
      } else if (std::isalpha(static_cast<unsigned char>(c.peek()))) {
        std::string id = parse_ident(c);
        if (id == "t") {
          long long e = 1;
          if (c.peek() == '^') {
            c.take();
            e = parse_int(c);
          }
          exp += e;
        } else {
          auto it = params.find(id);
          if (it == params.end())
            throw ParseError("unknown symbol '" + id + "' in '" + text + "'");
          Rational val = it->second;
          if (c.peek() == '^') {
            c.take();
            long long e = parse_int(c);
            Rational pw = 1;
            for (long long j = 0; j < e; ++j) pw *= val;
            val = pw;
          }
          coeff *= val;
        }
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
  SeriesQ out;
  for (auto& [e, q] : acc)
    if (sgn(q) != 0) out.emplace_back(e, q);
  return out;
}

std::vector<std::string> series_params(const std::vector<std::string>& templates) {
  std::set<std::string> names;
  for (const auto& t : templates) {
    Cursor c{t};
    while (!c.done()) {
      if (std::isalpha(static_cast<unsigned char>(c.peek()))) {
        std::string id = parse_ident(c);
        if (id != "t") names.insert(id);
      } else {
        c.take();
      }
    }
  }
  return {names.begin(), names.end()};
}

std::string series_to_string(const SeriesQ& s) {
  if (s.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    Rational q = s[i].second;
    bool neg = sgn(q) < 0;
    if (i == 0) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    Rational a = abs(q);
    std::string coeff = a.get_str();
    long long e = s[i].first;
    if (e == 0) {
      out += coeff;
    } else {
      if (coeff != "1") out += coeff + "*";
      out += e == 1 ? "t" : "t^" + std::to_string(e);
    }
  }
  return out;
}

long long default_truncation(const NumericalSemigroup& h, long long max_input_exponent) {
  long long maxg = std::max(h.generators().back(), max_input_exponent);
  return 3 * h.conductor() + 2 * maxg + 4;
}

// ---- algebra ----------------------------------------------------------------

template <class F>
int TruncAlgebra<F>::index_of(int comp, long long deg) const {
  if (deg < 0 || deg >= n_) return -1;
  const auto& idx = comp == 0 ? index0_ : index1_;
  if (idx.empty()) return -1;
  return idx[static_cast<std::size_t>(deg)];
}

template <class F>
void TruncAlgebra<F>::finish_setup() {
  gens_.clear();
  for (long long a : ring_.generators()) {
    int i = index_of(0, a);
    if (i >= 0) gens_.push_back(basis_vec(i));
  }
  if (quasi_) {
    for (long long g : ideal_gens_) {
      int i = index_of(1, g);
      if (i >= 0) gens_.push_back(basis_vec(i));
    }
  }
}

template <class F>
TruncAlgebra<F> TruncAlgebra<F>::semigroup_ring(const NumericalSemigroup& h, F field,
                                                long long n) {
  if (n < h.conductor() + 1) throw TruncationTooSmall("truncation order below conductor + 1");
  TruncAlgebra a(std::move(field), n, h);
  a.index0_.assign(static_cast<std::size_t>(n), -1);
  for (long long d = 0; d < n; ++d) {
    if (h.contains(d)) {
      a.index0_[static_cast<std::size_t>(d)] = static_cast<int>(a.labels_.size());
      a.labels_.push_back({0, d});
    }
  }
  a.finish_setup();
  return a;
}

template <class F>
TruncAlgebra<F> TruncAlgebra<F>::quasi_trivial(const NumericalSemigroup& ring,
                                               const RelativeIdeal& ideal, const SeriesQ& alpha,
                                               F field, long long n) {
  if (ideal.base() != ring) throw BaseMismatch("ideal must live over the extension's ring");
  if (!ideal.is_integral()) throw NotIntegral("quasi-trivial extension needs an integral ideal");
  if (n < ring.conductor() + 1) throw TruncationTooSmall("truncation order below conductor + 1");

  TruncAlgebra a(std::move(field), n, ring);
  a.quasi_ = true;
  a.index0_.assign(static_cast<std::size_t>(n), -1);
  a.index1_.assign(static_cast<std::size_t>(n), -1);
  for (long long d = 0; d < n; ++d) {
    if (ring.contains(d)) {
      a.index0_[static_cast<std::size_t>(d)] = static_cast<int>(a.labels_.size());
      a.labels_.push_back({0, d});
    }
  }
  for (long long d = 0; d < n; ++d) {
    if (ideal.contains(d)) {
      a.index1_[static_cast<std::size_t>(d)] = static_cast<int>(a.labels_.size());
      a.labels_.push_back({1, d});
    }
  }
  for (const auto& [e, q] : alpha) {
    if (!ring.contains(e))
      throw Error("alpha term t^" + std::to_string(e) + " is not in the base ring");
    a.alpha_.emplace_back(e, a.field_.from_rational(q));
  }
  a.ideal_gens_ = ideal.gens();
  a.finish_setup();
  return a;
}

template <class F>
typename TruncAlgebra<F>::Vec TruncAlgebra<F>::zero_vec() const {
  return Vec(static_cast<std::size_t>(dim()), field_.zero());
}

template <class F>
typename TruncAlgebra<F>::Vec TruncAlgebra<F>::basis_vec(int idx) const {
  Vec v = zero_vec();
  v[static_cast<std::size_t>(idx)] = field_.one();
  return v;
}

template <class F>
typename TruncAlgebra<F>::Vec TruncAlgebra<F>::from_series(const SeriesQ& s, int comp) const {
  Vec v = zero_vec();
  for (const auto& [e, q] : s) {
    int idx = index_of(comp, e);
    if (idx < 0)
      throw Error("series term t^" + std::to_string(e) + " is not a basis label of component " +
                  std::to_string(comp));
    v[static_cast<std::size_t>(idx)] =
        field_.add(v[static_cast<std::size_t>(idx)], field_.from_rational(q));
  }
  return v;
}

template <class F>
void TruncAlgebra<F>::mul_basis_acc(int i, int j, const Elem& coeff, Vec& acc) const {
  const Label& a = labels_[static_cast<std::size_t>(i)];
  const Label& b = labels_[static_cast<std::size_t>(j)];
  if (a.comp == 0 && b.comp == 0) {
    int k = index_of(0, a.deg + b.deg);
    if (k >= 0)
      acc[static_cast<std::size_t>(k)] = field_.add(acc[static_cast<std::size_t>(k)], coeff);
  } else if (a.comp != b.comp) {
    int k = index_of(1, a.deg + b.deg);
    if (k >= 0)
      acc[static_cast<std::size_t>(k)] = field_.add(acc[static_cast<std::size_t>(k)], coeff);
  } else {
    // two ideal-component elements: (0,x)(0,y) = (0, alpha·xy)
    for (const auto& [e, ae] : alpha_) {
      int k = index_of(1, a.deg + b.deg + e);
      if (k >= 0)
        acc[static_cast<std::size_t>(k)] =
            field_.add(acc[static_cast<std::size_t>(k)], field_.mul(coeff, ae));
    }
  }
}

template <class F>
typename TruncAlgebra<F>::Vec TruncAlgebra<F>::mul(const Vec& a, const Vec& b) const {
  Vec acc = zero_vec();
  const std::size_t d = a.size();
  for (std::size_t i = 0; i < d; ++i) {
    if (field_.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (field_.is_zero(b[j])) continue;
      mul_basis_acc(static_cast<int>(i), static_cast<int>(j), field_.mul(a[i], b[j]), acc);
    }
  }
  return acc;
}

template <class F>
long long TruncAlgebra<F>::stabilization_slack() const {
  return ring_.conductor() + ring_.generators().back() + 2;
}

template <class F>
std::string TruncAlgebra<F>::show(const Vec& v) const {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (field_.is_zero(v[i])) continue;
    const Label& l = labels_[i];
    if (!out.empty()) out += " + ";
    std::string mono = l.deg == 0 ? "1" : (l.deg == 1 ? "t" : "t^" + std::to_string(l.deg));
    std::string coeff = field_.str(v[i]);
    std::string term = coeff == "1" && l.deg != 0 ? mono : coeff + (l.deg == 0 ? "" : "*" + mono);
    if (quasi_)
      out += l.comp == 0 ? "(" + term + ",0)" : "(0," + term + ")";
    else
      out += term;
  }
  return out.empty() ? "0" : out;
}

template <class F>
void TruncAlgebra<F>::check_axioms(std::uint32_t seed) const {
  const long long d = dim();
  auto check_triple = [&](int i, int j, int k) {
    Vec ab = mul(basis_vec(i), basis_vec(j));
    Vec ba = mul(basis_vec(j), basis_vec(i));
    if (ab != ba) throw Error("multiplication is not commutative");
    Vec l = mul(ab, basis_vec(k));
    Vec r = mul(basis_vec(i), mul(basis_vec(j), basis_vec(k)));
    if (l != r) throw Error("multiplication is not associative");
  };
  if (d <= 24) {
    for (int i = 0; i < d; ++i)
      for (int j = i; j < d; ++j)
        for (int k = j; k < d; ++k) check_triple(i, j, k);
  } else {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(d) - 1);
    for (int s = 0; s < 300; ++s) check_triple(pick(rng), pick(rng), pick(rng));
  }
  Vec e = one();
  for (const Vec& g : gens_)
    if (mul(e, g) != g) throw Error("identity element failed");
}

namespace {

/// Solves sum_j x_j cols[j] = rhs exactly; empty when inconsistent.
template <class F>
std::optional<std::vector<typename F::Elem>> solve_columns(
    const F& k, const std::vector<std::vector<typename F::Elem>>& cols,
    std::vector<typename F::Elem> rhs) {
  const std::size_t ncols = cols.size();
  const std::size_t nrows = rhs.size();
  std::vector<std::vector<typename F::Elem>> m(nrows,
                                               std::vector<typename F::Elem>(ncols, k.zero()));
  for (std::size_t j = 0; j < ncols; ++j)
    for (std::size_t r = 0; r < nrows; ++r) m[r][j] = cols[j][r];
  std::vector<int> where(ncols, -1);
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < nrows; ++col) {
    std::size_t sel = nrows;
    for (std::size_t r = row; r < nrows; ++r)
      if (!k.is_zero(m[r][col])) {
        sel = r;
        break;
      }
    if (sel == nrows) continue;
    std::swap(m[sel], m[row]);
    std::swap(rhs[sel], rhs[row]);
    auto inv = k.div(k.one(), m[row][col]);
    for (auto& x : m[row]) x = k.mul(x, inv);
    rhs[row] = k.mul(rhs[row], inv);
    for (std::size_t r = 0; r < nrows; ++r) {
      if (r == row) continue;
      auto factor = m[r][col];
      if (k.is_zero(factor)) continue;
      for (std::size_t c = col; c < ncols; ++c) m[r][c] = k.sub(m[r][c], k.mul(factor, m[row][c]));
      rhs[r] = k.sub(rhs[r], k.mul(factor, rhs[row]));
    }
    where[col] = static_cast<int>(row);
    ++row;
  }
  // consistency: remaining rhs rows must be zero
  for (std::size_t r = row; r < nrows; ++r)
    if (!k.is_zero(rhs[r])) return std::nullopt;
  std::vector<typename F::Elem> sol(ncols, k.zero());
  for (std::size_t col = 0; col < ncols; ++col)
    if (where[col] >= 0) sol[col] = rhs[static_cast<std::size_t>(where[col])];
  return sol;
}

}  // namespace

template <class F>
std::optional<typename TruncAlgebra<F>::Vec> TruncAlgebra<F>::try_invert(const Vec& x) const {
  const long long d = dim();
  std::vector<Vec> cols;
  cols.reserve(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) cols.push_back(mul(x, basis_vec(j)));
  auto sol = solve_columns(field_, cols, one());
  if (!sol) return std::nullopt;
  Vec y(static_cast<std::size_t>(d), field_.zero());
  for (std::size_t j = 0; j < sol->size(); ++j) y[j] = (*sol)[j];
  if (mul(x, y) != one()) return std::nullopt;
  return y;
}

// ---- subspaces --------------------------------------------------------------

template <class F>
typename TruncAlgebra<F>::Vec Subspace<F>::reduce(typename TruncAlgebra<F>::Vec v) const {
  const F& k = alg_->field();
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t p = static_cast<std::size_t>(pivots_[r]);
    if (k.is_zero(v[p])) continue;
    const typename F::Elem factor = v[p];
    const auto& row = rows_[r];
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (k.is_zero(row[j])) continue;
      v[j] = k.sub(v[j], k.mul(factor, row[j]));
    }
  }
  return v;
}

template <class F>
bool Subspace<F>::insert(typename TruncAlgebra<F>::Vec v) {
  const F& k = alg_->field();
  v = reduce(std::move(v));
  std::size_t pivot = v.size();
  for (std::size_t j = 0; j < v.size(); ++j)
    if (!k.is_zero(v[j])) {
      pivot = j;
      break;
    }
  if (pivot == v.size()) return false;
  const typename F::Elem inv = k.div(k.one(), v[pivot]);
  for (auto& x : v)
    if (!k.is_zero(x)) x = k.mul(x, inv);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    typename F::Elem factor = rows_[r][pivot];
    if (k.is_zero(factor)) continue;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (k.is_zero(v[j])) continue;
      rows_[r][j] = k.sub(rows_[r][j], k.mul(factor, v[j]));
    }
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(static_cast<int>(pivot));
  for (std::size_t r = rows_.size(); r-- > 1;) {
    if (pivots_[r] < pivots_[r - 1]) {
      std::swap(pivots_[r], pivots_[r - 1]);
      std::swap(rows_[r], rows_[r - 1]);
    } else {
      break;
    }
  }
  return true;
}

template <class F>
bool Subspace<F>::contains(const typename TruncAlgebra<F>::Vec& v) const {
  const F& k = alg_->field();
  auto rem = reduce(v);
  for (const auto& x : rem)
    if (!k.is_zero(x)) return false;
  return true;
}

template <class F>
bool Subspace<F>::same_space(const Subspace& other) const {
  if (dim() != other.dim()) return false;
  for (const auto& row : other.rows_)
    if (!contains(row)) return false;
  return true;
}

// ---- ideal operations -------------------------------------------------------

namespace {

template <class F>
void certify(const TruncAlgebra<F>& a, IdealSubspace<F>& ideal) {
  // longest run of degrees at the top of the window all of whose pure basis
  // vectors lie in the subspace
  const long long d = a.dim();
  std::vector<int> order(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) order[static_cast<std::size_t>(i)] = i;
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return a.labels()[static_cast<std::size_t>(x)].deg > a.labels()[static_cast<std::size_t>(y)].deg;
  });
  long long stable = a.truncation();
  std::size_t pos = 0;
  while (pos < order.size()) {
    const long long deg = a.labels()[static_cast<std::size_t>(order[pos])].deg;
    bool all = true;
    std::size_t q = pos;
    while (q < order.size() && a.labels()[static_cast<std::size_t>(order[q])].deg == deg) {
      if (!ideal.space.contains(a.basis_vec(order[q]))) all = false;
      ++q;
    }
    if (!all) break;
    stable = deg;
    pos = q;
  }
  ideal.stable_from = stable;
  ideal.stabilized = a.truncation() - stable >= a.stabilization_slack();
}

}  // namespace

template <class F>
IdealSubspace<F> ideal_closure(const TruncAlgebra<F>& a,
                               const std::vector<typename TruncAlgebra<F>::Vec>& gens,
                               bool require_certificate) {
  IdealSubspace<F> ideal{Subspace<F>(&a), gens, false, 0};
  std::vector<typename TruncAlgebra<F>::Vec> pending;
  for (const auto& g : gens) {
    auto copy = g;
    if (ideal.space.insert(std::move(copy))) pending.push_back(g);
  }
  std::size_t processed = 0;
  while (processed < pending.size()) {
    auto v = pending[processed++];
    for (const auto& g : a.algebra_generators()) {
      auto w = a.mul(g, v);
      auto w_copy = w;
      if (ideal.space.insert(std::move(w))) pending.push_back(std::move(w_copy));
    }
  }
  certify(a, ideal);
  if (require_certificate && ideal.space.dim() > 0 && !ideal.stabilized)
    throw StabilizationFailed("truncation too small for a sound length; raise N");
  return ideal;
}

template <class F>
long long colength(const TruncAlgebra<F>& a, const IdealSubspace<F>& i) {
  if (!i.stabilized) throw StabilizationFailed("colength without stabilization certificate");
  return a.dim() - i.space.dim();
}

template <class F>
IdealSubspace<F> ideal_product(const TruncAlgebra<F>& a, const IdealSubspace<F>& i,
                               const IdealSubspace<F>& j) {
  std::vector<typename TruncAlgebra<F>::Vec> gens;
  gens.reserve(i.generators.size() * j.generators.size());
  for (const auto& x : i.generators)
    for (const auto& y : j.generators) gens.push_back(a.mul(x, y));
  return ideal_closure(a, gens);
}

template <class F>
bool ideal_equal(const IdealSubspace<F>& i, const IdealSubspace<F>& j) {
  return i.space.same_space(j.space);
}

template <class F>
long long socle_type(const TruncAlgebra<F>& a, const IdealSubspace<F>& i) {
  if (!i.stabilized) throw StabilizationFailed("socle_type without stabilization certificate");
  const F& k = a.field();
  std::vector<char> is_pivot(static_cast<std::size_t>(a.dim()), 0);
  for (const auto& row : i.space.rows()) {
    for (std::size_t c = 0; c < row.size(); ++c)
      if (!k.is_zero(row[c])) {
        is_pivot[c] = 1;
        break;
      }
  }
  std::vector<int> quot;
  for (int c = 0; c < a.dim(); ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) quot.push_back(c);
  const std::size_t q = quot.size();
  std::vector<int> quot_pos(static_cast<std::size_t>(a.dim()), -1);
  for (std::size_t t = 0; t < q; ++t) quot_pos[static_cast<std::size_t>(quot[t])] = static_cast<int>(t);

  // columns of the map (R/I) -> (R/I)^{gens}, v -> (g·v mod I)
  std::vector<std::vector<typename F::Elem>> cols(q);
  for (std::size_t t = 0; t < q; ++t) {
    std::vector<typename F::Elem> col;
    for (const auto& g : a.algebra_generators()) {
      auto w = i.space.reduce(a.mul(g, a.basis_vec(quot[t])));
      for (std::size_t c = 0; c < w.size(); ++c)
        if (quot_pos[c] >= 0) col.push_back(w[c]);
    }
    cols[t] = std::move(col);
  }
  const std::size_t rows_n = cols.empty() ? 0 : cols[0].size();
  std::vector<std::vector<typename F::Elem>> basis;
  std::vector<std::size_t> pivot_rows;
  long long rank = 0;
  for (std::size_t t = 0; t < q; ++t) {
    auto v = cols[t];
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const std::size_t p = pivot_rows[b];
      if (k.is_zero(v[p])) continue;
      auto factor = v[p];
      for (std::size_t r2 = 0; r2 < rows_n; ++r2) {
        if (k.is_zero(basis[b][r2])) continue;
        v[r2] = k.sub(v[r2], k.mul(factor, basis[b][r2]));
      }
    }
    std::size_t p = rows_n;
    for (std::size_t r2 = 0; r2 < rows_n; ++r2)
      if (!k.is_zero(v[r2])) {
        p = r2;
        break;
      }
    if (p == rows_n) continue;
    auto inv = k.div(k.one(), v[p]);
    for (auto& x : v)
      if (!k.is_zero(x)) x = k.mul(x, inv);
    basis.push_back(std::move(v));
    pivot_rows.push_back(p);
    ++rank;
  }
  return static_cast<long long>(q) - rank;
}

// ---- Ulrich verdicts --------------------------------------------------------

namespace {

template <class F>
long long min_degree(const TruncAlgebra<F>& a, const typename TruncAlgebra<F>::Vec& v) {
  long long best = -1;
  for (std::size_t j = 0; j < v.size(); ++j)
    if (!a.field().is_zero(v[j])) {
      long long d = a.labels()[j].deg;
      if (best < 0 || d < best) best = d;
    }
  return best;
}

// span of x·I for an already closed subspace I: multiplication by ring
// elements stays inside, so no worklist is needed
template <class F>
Subspace<F> scaled_span(const TruncAlgebra<F>& a, const typename TruncAlgebra<F>::Vec& x,
                        const Subspace<F>& ideal) {
  Subspace<F> out(&a);
  for (const auto& row : ideal.rows()) out.insert(a.mul(x, row));
  return out;
}

}  // namespace

template <class F>
GeneralUlrichVerdict is_ulrich_general(const TruncAlgebra<F>& a, const std::vector<SeriesQ>& gens,
                                       const std::optional<SeriesQ>& reduction,
                                       std::uint32_t seed) {
  std::vector<typename TruncAlgebra<F>::Vec> gvecs;
  gvecs.reserve(gens.size());
  for (const auto& s : gens) gvecs.push_back(a.from_series(s));
  std::optional<typename TruncAlgebra<F>::Vec> red;
  if (reduction) red = a.from_series(*reduction);
  return is_ulrich_general_vectors(a, gvecs, red, seed);
}

template <class F>
GeneralUlrichVerdict is_ulrich_general_vectors(
    const TruncAlgebra<F>& a, const std::vector<typename TruncAlgebra<F>::Vec>& gvecs,
    const std::optional<typename TruncAlgebra<F>::Vec>& reduction, std::uint32_t seed) {
  if (gvecs.empty()) throw EmptyInput("ideal needs generators");

  IdealSubspace<F> ideal = ideal_closure(a, gvecs);

  std::vector<typename TruncAlgebra<F>::Vec> sq;
  for (std::size_t x = 0; x < gvecs.size(); ++x)
    for (std::size_t y = x; y < gvecs.size(); ++y) sq.push_back(a.mul(gvecs[x], gvecs[y]));
  IdealSubspace<F> ideal2 = ideal_closure(a, sq);

  std::vector<typename TruncAlgebra<F>::Vec> candidates;
  std::vector<std::string> names;
  if (reduction) {
    candidates.push_back(*reduction);
    names.push_back(a.show(*reduction));
  } else {
    std::vector<std::size_t> order(gvecs.size());
    for (std::size_t x = 0; x < order.size(); ++x) order[x] = x;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      return min_degree(a, gvecs[x]) < min_degree(a, gvecs[y]);
    });
    for (std::size_t x : order) {
      candidates.push_back(gvecs[x]);
      names.push_back(a.show(gvecs[x]));
    }
    std::mt19937 rng(seed);
    for (int s = 0; s < 32; ++s) {
      typename TruncAlgebra<F>::Vec combo = a.zero_vec();
      for (std::size_t x = 0; x < gvecs.size(); ++x) {
        long coeff = (x == order.front()) ? 1 + static_cast<long>(rng() % 3)
                                          : static_cast<long>(rng() % 4) - 1;
        if (coeff == 0) continue;
        auto ce = a.field().from_rational(Rational(coeff));
        for (std::size_t j = 0; j < combo.size(); ++j)
          if (!a.field().is_zero(gvecs[x][j]))
            combo[j] = a.field().add(combo[j], a.field().mul(ce, gvecs[x][j]));
      }
      candidates.push_back(std::move(combo));
      names.push_back("random#" + std::to_string(s));
    }
  }

  long long ideal_minval = -1;
  for (const auto& row : ideal.space.rows()) {
    long long d = min_degree(a, row);
    if (ideal_minval < 0 || d < ideal_minval) ideal_minval = d;
  }

  GeneralUlrichVerdict v;
  typename TruncAlgebra<F>::Vec a_vec;
  bool found = false;
  for (std::size_t ci = 0; ci < candidates.size(); ++ci) {
    const auto& cand = candidates[ci];
    bool zero = true;
    for (const auto& e : cand)
      if (!a.field().is_zero(e)) {
        zero = false;
        break;
      }
    if (zero) continue;
    // in the domain case the valuation is additive, so a reduction must
    // attain the minimal valuation of I
    if (!a.is_quasi_trivial() && min_degree(a, cand) != ideal_minval) continue;
    Subspace<F> ai = scaled_span(a, cand, ideal.space);
    if (ideal2.space.same_space(ai)) {
      a_vec = cand;
      v.reduction = names[ci];
      found = true;
      break;
    }
  }
  if (!found) {
    if (!reduction) throw NoReductionFound("no sampled reduction satisfies I² = aI");
    // the verdict is definitive against the given Q
    a_vec = candidates.front();
    v.reduction = names.front();
  }
  v.square_stable = found;

  IdealSubspace<F> principal = ideal_closure(a, {a_vec});
  v.i_equals_reduction = ideal.space.same_space(principal.space);

  // mI = span of g·I over the algebra generators
  Subspace<F> mi(&a);
  for (const auto& g : a.algebra_generators())
    for (const auto& row : ideal.space.rows()) mi.insert(a.mul(g, row));
  v.mu = ideal.space.dim() - mi.dim();
  v.len_R_mod_I = colength(a, ideal);
  v.len_I_mod_I2 = ideal.space.dim() - ideal2.space.dim();
  v.free_check = v.len_I_mod_I2 == v.mu * v.len_R_mod_I;
  v.is_ulrich = v.square_stable && !v.i_equals_reduction && v.free_check;

  if (v.mu == 2 && v.is_ulrich) {
    Subspace<F> span(&a);
    for (const auto& r : principal.space.rows()) span.insert(r);
    for (const auto& r : mi.rows()) span.insert(r);
    typename TruncAlgebra<F>::Vec b_vec;
    bool has_b = false;
    for (const auto& g : gvecs) {
      if (!span.contains(g)) {
        b_vec = g;
        has_b = true;
        break;
      }
    }
    if (has_b) {
      // b² = a·c with c = Σ λ_r row_r over the rows of I
      const F& k = a.field();
      auto b2 = a.mul(b_vec, b_vec);
      const auto& rows = ideal.space.rows();
      std::vector<std::vector<typename F::Elem>> cols;
      cols.reserve(rows.size());
      for (const auto& r : rows) cols.push_back(a.mul(a_vec, r));
      auto sol = solve_columns(k, cols, b2);
      if (sol) {
        typename TruncAlgebra<F>::Vec c_vec = a.zero_vec();
        for (std::size_t c2 = 0; c2 < rows.size(); ++c2) {
          if (k.is_zero((*sol)[c2])) continue;
          for (std::size_t j = 0; j < c_vec.size(); ++j)
            c_vec[j] = k.add(c_vec[j], k.mul((*sol)[c2], rows[c2][j]));
        }
        if (a.mul(a_vec, c_vec) == b2) {
          v.witness_c = a.show(c_vec);
          v.square_zero = true;  // b² - ac = 0 verified above the truncation window
        }
      }
    }
  }
  return v;
}

// ---- field dispatch ---------------------------------------------------------

namespace {

long long max_exponent(const std::vector<std::string>& templates) {
  long long m = 0;
  for (const auto& t : templates) {
    std::map<std::string, Rational> dummy;
    for (const auto& name : series_params({t})) dummy[name] = 1;
    for (const auto& [e, q] : parse_series(t, dummy)) m = std::max(m, e);
  }
  return m;
}

template <class F>
FamilyScanReport scan_impl(const NumericalSemigroup& h, F field,
                           const std::vector<std::string>& templates, bool check_distinct,
                           long long n, std::uint32_t seed,
                           const std::vector<std::vector<Rational>>& tuples,
                           const std::vector<std::string>& names) {
  FamilyScanReport rep;
  rep.param_names = names;
  TruncAlgebra<F> alg = TruncAlgebra<F>::semigroup_ring(h, field, n);
  std::vector<IdealSubspace<F>> spaces;
  for (const auto& tuple : tuples) {
    std::map<std::string, Rational> params;
    for (std::size_t i = 0; i < names.size(); ++i) params[names[i]] = tuple[i];
    std::vector<SeriesQ> gens;
    for (const auto& t : templates) gens.push_back(parse_series(t, params));
    FamilyScanEntry entry;
    entry.params = tuple;
    try {
      entry.verdict = is_ulrich_general(alg, gens, std::nullopt, seed);
      entry.outcome = entry.verdict.is_ulrich ? ScanOutcome::ulrich : ScanOutcome::not_ulrich;
    } catch (const NoReductionFound&) {
      entry.outcome = ScanOutcome::no_reduction;
    }
    if (check_distinct && entry.outcome == ScanOutcome::ulrich) {
      std::vector<typename TruncAlgebra<F>::Vec> gv;
      for (const auto& s : gens) gv.push_back(alg.from_series(s));
      spaces.push_back(ideal_closure(alg, gv));
    }
    rep.entries.push_back(std::move(entry));
  }
  rep.all_ulrich = !rep.entries.empty();
  for (const auto& e : rep.entries)
    if (e.outcome != ScanOutcome::ulrich) rep.all_ulrich = false;
  if (check_distinct) {
    rep.distinct_checked = true;
    rep.distinct_ok = true;
    for (std::size_t x = 0; x < spaces.size(); ++x)
      for (std::size_t y = x + 1; y < spaces.size(); ++y)
        if (ideal_equal(spaces[x], spaces[y])) rep.distinct_ok = false;
  }
  return rep;
}

}  // namespace

FamilyScanReport family_scan(const NumericalSemigroup& h, const FieldSpec& field,
                             const std::vector<std::string>& templates, int samples,
                             bool check_distinct, long long n, std::uint32_t seed) {
  std::vector<std::string> names = series_params(templates);
  if (names.size() > 3) throw Error("family templates support at most 3 parameters");
  if (n < 0) n = default_truncation(h, max_exponent(templates));

  std::vector<std::vector<Rational>> tuples;
  if (names.empty()) {
    tuples.push_back({});
  } else if (field.kind == FieldSpec::Kind::prime) {
    double total = 1;
    for (std::size_t i = 0; i < names.size(); ++i) total *= static_cast<double>(field.p);
    if (total <= 256.0) {
      std::vector<unsigned long> digits(names.size(), 0);
      for (;;) {
        std::vector<Rational> cur;
        for (unsigned long d : digits) cur.push_back(Rational(static_cast<long>(d)));
        tuples.push_back(std::move(cur));
        std::size_t pos = 0;
        while (pos < names.size() && ++digits[pos] == field.p) digits[pos++] = 0;
        if (pos == names.size()) break;
      }
    } else {
      std::mt19937 rng(seed);
      for (int s = 0; s < std::max(samples, 16); ++s) {
        std::vector<Rational> cur;
        for (std::size_t i = 0; i < names.size(); ++i)
          cur.push_back(Rational(static_cast<long>(rng() % field.p)));
        tuples.push_back(std::move(cur));
      }
    }
  } else {
    std::vector<long> structured{0, 1, -1, 2};
    std::vector<std::vector<Rational>> base{{}};
    for (std::size_t i = 0; i < names.size() && base.size() <= 64; ++i) {
      std::vector<std::vector<Rational>> next;
      for (const auto& t : base)
        for (long s : structured) {
          auto copy = t;
          copy.push_back(Rational(s));
          next.push_back(std::move(copy));
        }
      base = std::move(next);
    }
    tuples = std::move(base);
    std::mt19937 rng(seed);
    for (int s = 0; s < samples; ++s) {
      std::vector<Rational> cur;
      for (std::size_t i = 0; i < names.size(); ++i) {
        long num = static_cast<long>(rng() % 13) - 6;
        long den = 1 + static_cast<long>(rng() % 3);
        cur.push_back(Rational(num, den));
      }
      tuples.push_back(std::move(cur));
    }
  }

  if (field.kind == FieldSpec::Kind::prime)
    return scan_impl(h, FieldFp(field.p), templates, check_distinct, n, seed, tuples, names);
  return scan_impl(h, FieldQ{}, templates, check_distinct, n, seed, tuples, names);
}

GeneralUlrichVerdict verify_ideal(const NumericalSemigroup& h, const FieldSpec& field,
                                  const std::vector<std::string>& gens,
                                  const std::string& reduction, long long n) {
  std::vector<SeriesQ> parsed;
  long long maxe = 0;
  for (const auto& g : gens) {
    parsed.push_back(parse_series(g));
    for (const auto& [e, q] : parsed.back()) maxe = std::max(maxe, e);
  }
  if (n < 0) n = default_truncation(h, maxe);
  std::optional<SeriesQ> red;
  if (!reduction.empty() && reduction != "auto") red = parse_series(reduction);
  if (field.kind == FieldSpec::Kind::prime) {
    auto alg = TruncAlgebra<FieldFp>::semigroup_ring(h, FieldFp(field.p), n);
    return is_ulrich_general(alg, parsed, red);
  }
  auto alg = TruncAlgebra<FieldQ>::semigroup_ring(h, FieldQ{}, n);
  return is_ulrich_general(alg, parsed, red);
}

// ---- explicit instantiations ------------------------------------------------

template class TruncAlgebra<FieldQ>;
template class TruncAlgebra<FieldFp>;
template class Subspace<FieldQ>;
template class Subspace<FieldFp>;

template IdealSubspace<FieldQ> ideal_closure<FieldQ>(const TruncAlgebra<FieldQ>&,
                                                     const std::vector<TruncAlgebra<FieldQ>::Vec>&,
                                                     bool);
template IdealSubspace<FieldFp> ideal_closure<FieldFp>(
    const TruncAlgebra<FieldFp>&, const std::vector<TruncAlgebra<FieldFp>::Vec>&, bool);
template long long colength<FieldQ>(const TruncAlgebra<FieldQ>&, const IdealSubspace<FieldQ>&);
template long long colength<FieldFp>(const TruncAlgebra<FieldFp>&, const IdealSubspace<FieldFp>&);
template IdealSubspace<FieldQ> ideal_product<FieldQ>(const TruncAlgebra<FieldQ>&,
                                                     const IdealSubspace<FieldQ>&,
                                                     const IdealSubspace<FieldQ>&);
template IdealSubspace<FieldFp> ideal_product<FieldFp>(const TruncAlgebra<FieldFp>&,
                                                       const IdealSubspace<FieldFp>&,
                                                       const IdealSubspace<FieldFp>&);
template bool ideal_equal<FieldQ>(const IdealSubspace<FieldQ>&, const IdealSubspace<FieldQ>&);
template bool ideal_equal<FieldFp>(const IdealSubspace<FieldFp>&, const IdealSubspace<FieldFp>&);
template long long socle_type<FieldQ>(const TruncAlgebra<FieldQ>&, const IdealSubspace<FieldQ>&);
template long long socle_type<FieldFp>(const TruncAlgebra<FieldFp>&, const IdealSubspace<FieldFp>&);
template GeneralUlrichVerdict is_ulrich_general<FieldQ>(const TruncAlgebra<FieldQ>&,
                                                        const std::vector<SeriesQ>&,
                                                        const std::optional<SeriesQ>&,
                                                        std::uint32_t);
template GeneralUlrichVerdict is_ulrich_general<FieldFp>(const TruncAlgebra<FieldFp>&,
                                                         const std::vector<SeriesQ>&,
                                                         const std::optional<SeriesQ>&,
                                                         std::uint32_t);
template GeneralUlrichVerdict is_ulrich_general_vectors<FieldQ>(
    const TruncAlgebra<FieldQ>&, const std::vector<TruncAlgebra<FieldQ>::Vec>&,
    const std::optional<TruncAlgebra<FieldQ>::Vec>&, std::uint32_t);
template GeneralUlrichVerdict is_ulrich_general_vectors<FieldFp>(
    const TruncAlgebra<FieldFp>&, const std::vector<TruncAlgebra<FieldFp>::Vec>&,
    const std::optional<TruncAlgebra<FieldFp>::Vec>&, std::uint32_t);

}  // namespace nsg
