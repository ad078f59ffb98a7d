// Test-only oracles: textbook implementations that share no code path with
// the library under test (coefficients reuse solvkit::Rational, which is a
// thin GMP wrapper; everything algorithmic here is independent).

#ifndef SOLVKIT_TESTS_ORACLES_HPP
#define SOLVKIT_TESTS_ORACLES_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "solvkit/fields.hpp"

namespace oracle {

using solvkit::Rational;

/* ---------------------------------------------------------------- */
/* Commutative multivariate polynomials                              */
/* ---------------------------------------------------------------- */

using Mono = std::vector<long long>;
using CPoly = std::map<Mono, Rational>;

// Compare by optional weighted degree, then lex along `prio` (first entry
// is the most significant variable).
struct COrder {
  std::vector<long long> weights;  // empty: no degree part
  std::vector<int> prio;
};

inline COrder c_lex(int n) {
  COrder o;
  for (int i = 0; i < n; ++i) o.prio.push_back(i);
  return o;
}
inline COrder c_deglex(int n) {
  COrder o = c_lex(n);
  o.weights.assign(n, 1);
  return o;
}
// Lex with the complement of `keep` most significant: an elimination order
// whose small monomials are exactly those supported on keep.
inline COrder c_elim(int n, const std::vector<int>& keep) {
  COrder o;
  std::vector<bool> kept(n, false);
  for (int i : keep) kept[i] = true;
  for (int i = 0; i < n; ++i)
    if (!kept[i]) o.prio.push_back(i);
  for (int i = 0; i < n; ++i)
    if (kept[i]) o.prio.push_back(i);
  return o;
}

inline int c_cmp(const COrder& o, const Mono& a, const Mono& b) {
  if (!o.weights.empty()) {
    long long da = 0, db = 0;
    for (std::size_t i = 0; i < a.size(); ++i) da += o.weights[i] * a[i];
    for (std::size_t i = 0; i < b.size(); ++i) db += o.weights[i] * b[i];
    if (da != db) return da < db ? -1 : 1;
  }
  for (int p : o.prio) {
    if (a[p] != b[p]) return a[p] < b[p] ? -1 : 1;
  }
  return 0;
}

inline void c_addto(CPoly& f, const Mono& m, const Rational& c) {
  auto it = f.find(m);
  if (it == f.end()) {
    if (!c.is_zero()) f[m] = c;
    return;
  }
  it->second += c;
  if (it->second.is_zero()) f.erase(it);
}
inline CPoly c_add(CPoly f, const CPoly& g) {
  for (const auto& [m, c] : g) c_addto(f, m, c);
  return f;
}
inline CPoly c_scale(const CPoly& f, const Rational& c) {
  CPoly r;
  if (c.is_zero()) return r;
  for (const auto& [m, cf] : f) r[m] = cf * c;
  return r;
}
inline CPoly c_sub(CPoly f, const CPoly& g) {
  return c_add(std::move(f), c_scale(g, Rational(-1)));
}
inline CPoly c_mul(const CPoly& f, const CPoly& g) {
  CPoly r;
  for (const auto& [mf, cf] : f)
    for (const auto& [mg, cg] : g) {
      Mono m(mf);
      for (std::size_t i = 0; i < m.size(); ++i) m[i] += mg[i];
      c_addto(r, m, cf * cg);
    }
  return r;
}
inline Mono c_lm(const CPoly& f, const COrder& o) {
  auto it = f.begin();
  Mono best = it->first;
  for (++it; it != f.end(); ++it)
    if (c_cmp(o, it->first, best) > 0) best = it->first;
  return best;
}
inline bool c_divides(const Mono& a, const Mono& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

// Multivariate division: remainder of f by the list gens (first divisor in
// list order wins).
inline CPoly c_nf(CPoly f, const std::vector<CPoly>& gens, const COrder& o) {
  CPoly r;
  while (!f.empty()) {
    Mono lm = c_lm(f, o);
    Rational lc = f.at(lm);
    bool divided = false;
    for (const auto& g : gens) {
      if (g.empty()) continue;
      Mono glm = c_lm(g, o);
      if (!c_divides(glm, lm)) continue;
      Mono q(lm);
      for (std::size_t i = 0; i < q.size(); ++i) q[i] -= glm[i];
      CPoly qt;
      qt[q] = lc / g.at(glm);
      f = c_sub(std::move(f), c_mul(qt, g));
      divided = true;
      break;
    }
    if (!divided) {
      c_addto(r, lm, lc);
      CPoly lt;
      lt[lm] = lc;
      f = c_sub(std::move(f), lt);
    }
  }
  return r;
}

inline std::vector<CPoly> c_buchberger(std::vector<CPoly> gens, const COrder& o) {
  std::vector<CPoly> basis;
  for (auto& g : gens)
    if (!g.empty()) basis.push_back(std::move(g));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.push_back({i, j});
  while (!pairs.empty()) {
    auto [i, j] = pairs.back();
    pairs.pop_back();
    Mono mi = c_lm(basis[i], o), mj = c_lm(basis[j], o);
    Mono l(mi);
    for (std::size_t k = 0; k < l.size(); ++k) l[k] = std::max(mi[k], mj[k]);
    CPoly qi, qj;
    Mono di(l), dj(l);
    for (std::size_t k = 0; k < l.size(); ++k) di[k] -= mi[k], dj[k] -= mj[k];
    qi[di] = Rational(1) / basis[i].at(mi);
    qj[dj] = Rational(1) / basis[j].at(mj);
    CPoly s = c_sub(c_mul(qi, basis[i]), c_mul(qj, basis[j]));
    CPoly r = c_nf(std::move(s), basis, o);
    if (!r.empty()) {
      basis.push_back(std::move(r));
      for (std::size_t k = 0; k + 1 < basis.size(); ++k)
        pairs.push_back({k, basis.size() - 1});
    }
  }
  return basis;
}

// Reduced basis: minimal leading monomials, each element tail-reduced
// against the others and made monic. Unique for the ordering.
inline std::vector<CPoly> c_reduce(std::vector<CPoly> basis, const COrder& o) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < basis.size() && !changed; ++i) {
      std::vector<CPoly> others;
      for (std::size_t k = 0; k < basis.size(); ++k)
        if (k != i) others.push_back(basis[k]);
      CPoly r = c_nf(basis[i], others, o);
      if (r != basis[i]) {
        changed = true;
        if (r.empty())
          basis.erase(basis.begin() + i);
        else
          basis[i] = std::move(r);
      }
    }
  }
  for (auto& g : basis) g = c_scale(g, Rational(1) / g.at(c_lm(g, o)));
  std::sort(basis.begin(), basis.end(), [&](const CPoly& a, const CPoly& b) {
    return c_cmp(o, c_lm(a, o), c_lm(b, o)) > 0;
  });
  return basis;
}

// Elimination closure: reduced GB of <gens> cap K[keep variables], computed
// under the lex order with eliminated variables most significant.
inline std::vector<CPoly> c_eliminate(const std::vector<CPoly>& gens, int n,
                                      const std::vector<int>& keep) {
  COrder o = c_elim(n, keep);
  std::vector<CPoly> gb = c_reduce(c_buchberger(gens, o), o);
  std::vector<bool> kept(n, false);
  for (int i : keep) kept[i] = true;
  std::vector<CPoly> out;
  for (const auto& g : gb) {
    bool inside = true;
    for (const auto& [m, c] : g)
      for (int v = 0; v < n; ++v)
        if (m[v] != 0 && !kept[v]) inside = false;
    if (inside) out.push_back(g);
  }
  return out;
}

/* ---------------------------------------------------------------- */
/* Univariate polynomials over Q (dense)                             */
/* ---------------------------------------------------------------- */

using UPoly = std::vector<Rational>;  // index = degree, no trailing zeros

inline UPoly u_trim(UPoly p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}
inline UPoly u_add(const UPoly& f, const UPoly& g) {
  UPoly r(std::max(f.size(), g.size()));
  for (std::size_t i = 0; i < f.size(); ++i) r[i] += f[i];
  for (std::size_t i = 0; i < g.size(); ++i) r[i] += g[i];
  return u_trim(std::move(r));
}
inline UPoly u_scale(const UPoly& f, const Rational& c) {
  UPoly r;
  if (c.is_zero()) return r;
  for (const auto& x : f) r.push_back(x * c);
  return r;
}
inline UPoly u_mul(const UPoly& f, const UPoly& g) {
  if (f.empty() || g.empty()) return {};
  UPoly r(f.size() + g.size() - 1);
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) r[i + j] += f[i] * g[j];
  return u_trim(std::move(r));
}
// Remainder of f mod g, g nonzero.
inline UPoly u_rem(UPoly f, const UPoly& g) {
  while (f.size() >= g.size() && !f.empty()) {
    Rational q = f.back() / g.back();
    std::size_t shift = f.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i) f[shift + i] -= g[i] * q;
    f = u_trim(std::move(f));
  }
  return f;
}
inline UPoly u_monic(UPoly f) {
  if (f.empty()) return f;
  return u_scale(f, f.back().inverse());
}
inline UPoly u_gcd(UPoly a, UPoly b) {
  while (!b.empty()) {
    UPoly r = u_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return u_monic(std::move(a));
}
inline UPoly u_lcm(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly g = u_gcd(a, b);
  UPoly prod = u_mul(a, b);
  // exact division by the gcd
  UPoly q;
  UPoly rem = prod;
  q.assign(prod.size() - g.size() + 1, Rational(0));
  while (rem.size() >= g.size() && !rem.empty()) {
    Rational c = rem.back() / g.back();
    std::size_t shift = rem.size() - g.size();
    q[shift] = c;
    for (std::size_t i = 0; i < g.size(); ++i) rem[shift + i] -= g[i] * c;
    rem = u_trim(std::move(rem));
  }
  return u_monic(u_trim(std::move(q)));
}
// k-th derivative.
inline UPoly u_diff(const UPoly& f) {
  UPoly r;
  for (std::size_t i = 1; i < f.size(); ++i)
    r.push_back(f[i] * Rational(static_cast<long>(i)));
  return u_trim(std::move(r));
}

/* ---------------------------------------------------------------- */
/* Dense linear algebra over Q                                       */
/* ---------------------------------------------------------------- */

using Row = std::vector<Rational>;

// Reduced row echelon form; zero rows dropped. Deterministic.
inline std::vector<Row> rref(std::vector<Row> rows) {
  if (rows.empty()) return rows;
  std::size_t cols = rows[0].size(), lead = 0;
  std::vector<Row> out;
  for (std::size_t c = 0; c < cols && lead < rows.size(); ++c) {
    std::size_t pivot = lead;
    while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[lead], rows[pivot]);
    Rational inv = rows[lead][c].inverse();
    for (auto& x : rows[lead]) x *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == lead || rows[r][c].is_zero()) continue;
      Rational f = rows[r][c];
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] -= rows[lead][k] * f;
    }
    ++lead;
  }
  for (auto& r : rows) {
    bool zero = true;
    for (const auto& x : r)
      if (!x.is_zero()) zero = false;
    if (!zero) out.push_back(std::move(r));
  }
  return out;
}

inline bool in_span(const Row& v, const std::vector<Row>& basis) {
  std::vector<Row> with(basis);
  with.push_back(v);
  return rref(std::move(with)).size() == rref(basis).size();
}
inline bool same_span(const std::vector<Row>& a, const std::vector<Row>& b) {
  std::vector<Row> ra = rref(a), rb = rref(b);
  return ra == rb;
}

// Zassenhaus: basis of span(a) cap span(b). Rows of [[a|a],[b|0]] whose
// left block reduces to zero carry an intersection vector in the right block.
inline std::vector<Row> span_intersection(const std::vector<Row>& a,
                                          const std::vector<Row>& b) {
  if (a.empty() || b.empty()) return {};
  std::size_t cols = a[0].size();
  std::vector<Row> block;
  for (const auto& r : a) {
    Row w(r);
    w.insert(w.end(), r.begin(), r.end());
    block.push_back(std::move(w));
  }
  for (const auto& r : b) {
    Row w(r);
    w.resize(2 * cols, Rational(0));
    block.push_back(std::move(w));
  }
  std::vector<Row> red = rref(std::move(block));
  std::vector<Row> out;
  for (const auto& r : red) {
    bool left_zero = true;
    for (std::size_t i = 0; i < cols; ++i)
      if (!r[i].is_zero()) left_zero = false;
    if (left_zero) out.push_back(Row(r.begin() + cols, r.end()));
  }
  return rref(std::move(out));
}

}  // namespace oracle

#endif  // SOLVKIT_TESTS_ORACLES_HPP
