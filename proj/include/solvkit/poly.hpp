// solvkit: exact computer algebra for solvable polynomial algebras.
// Distributed under the Apache License, Version 2.0; see LICENSE.

#ifndef SOLVKIT_POLY_HPP
#define SOLVKIT_POLY_HPP

#include <algorithm>
#include <functional>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "exponent.hpp"
#include "fields.hpp"
#include "module_order.hpp"
#include "order.hpp"

namespace solvkit {

template <Field K>
struct Term {
  K c;
  Exponent m;
};

// Sparse polynomial in PBW coordinates. Terms are strictly descending under
// the ordering the object was last canonicalized with; operations that
// switch orderings must resort first.
template <Field K>
class Poly {
 public:
  Poly() = default;

  static Poly monomial(K c, Exponent m) {
    Poly p;
    if (!c.is_zero()) p.t_.push_back({std::move(c), std::move(m)});
    return p;
  }
  static Poly from_terms(std::vector<Term<K>> ts, const MonomialOrder& ord) {
    Poly p;
    p.t_ = canonicalize(std::move(ts), ord);
    return p;
  }

  const std::vector<Term<K>>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }

  const Term<K>& lt() const {
    if (t_.empty()) throw DomainError("leading term of zero");
    return t_.front();
  }
  const Exponent& lm() const { return lt().m; }
  const K& lc() const { return lt().c; }

  Poly scaled(const K& c) const {
    Poly p;
    if (c.is_zero()) return p;
    p.t_.reserve(t_.size());
    for (const auto& t : t_) p.t_.push_back({t.c * c, t.m});
    return p;
  }
  Poly negated() const {
    Poly p;
    p.t_.reserve(t_.size());
    for (const auto& t : t_) p.t_.push_back({-t.c, t.m});
    return p;
  }
  // Drop the leading term (the reductum).
  Poly tail() const {
    Poly p;
    p.t_.assign(t_.begin() + 1, t_.end());
    return p;
  }

  // Merge of two polynomials canonical under the same ordering.
  static Poly add(const Poly& f, const Poly& g, const MonomialOrder& ord) {
    Poly r;
    r.t_.reserve(f.t_.size() + g.t_.size());
    std::size_t i = 0, j = 0;
    while (i < f.t_.size() && j < g.t_.size()) {
      Cmp c = ord.compare(f.t_[i].m, g.t_[j].m);
      if (c == Cmp::greater) {
        r.t_.push_back(f.t_[i++]);
      } else if (c == Cmp::less) {
        r.t_.push_back(g.t_[j++]);
      } else {
        K s = f.t_[i].c + g.t_[j].c;
        if (!s.is_zero()) r.t_.push_back({std::move(s), f.t_[i].m});
        ++i, ++j;
      }
    }
    for (; i < f.t_.size(); ++i) r.t_.push_back(f.t_[i]);
    for (; j < g.t_.size(); ++j) r.t_.push_back(g.t_[j]);
    return r;
  }
  static Poly sub(const Poly& f, const Poly& g, const MonomialOrder& ord) {
    return add(f, g.negated(), ord);
  }

  Poly resorted(const MonomialOrder& ord) const {
    Poly p;
    p.t_ = canonicalize(t_, ord);
    return p;
  }

  long long max_total_degree() const {
    long long d = 0;
    for (const auto& t : t_) d = std::max(d, t.m.total_degree());
    return d;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.t_.size() != b.t_.size()) return false;
    for (std::size_t i = 0; i < a.t_.size(); ++i)
      if (!(a.t_[i].c == b.t_[i].c) || a.t_[i].m != b.t_[i].m) return false;
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  static std::vector<Term<K>> canonicalize(std::vector<Term<K>> ts,
                                           const MonomialOrder& ord) {
    std::sort(ts.begin(), ts.end(), [&](const Term<K>& x, const Term<K>& y) {
      return ord.compare(x.m, y.m) == Cmp::greater;
    });
    std::vector<Term<K>> out;
    out.reserve(ts.size());
    for (auto& t : ts) {
      if (!out.empty() && out.back().m == t.m) {
        out.back().c += t.c;
        if (out.back().c.is_zero()) out.pop_back();
      } else if (!t.c.is_zero()) {
        out.push_back(std::move(t));
      }
    }
    return out;
  }

  std::vector<Term<K>> t_;
};

template <Field K>
struct VTerm {
  K c;
  Exponent m;
  int comp;  // 0-based free-module component
};

// Element of a free module L = A^s in PBW coordinates, terms strictly
// descending under the active module ordering.
template <Field K>
class VecElem {
 public:
  VecElem() = default;

  static VecElem monomial(K c, Exponent m, int comp) {
    if (comp < 0) throw RankMismatch("negative component");
    VecElem v;
    if (!c.is_zero()) v.t_.push_back({std::move(c), std::move(m), comp});
    return v;
  }
  static VecElem from_terms(std::vector<VTerm<K>> ts, const ModuleOrder& ord) {
    VecElem v;
    v.t_ = canonicalize(std::move(ts), ord);
    return v;
  }
  static VecElem from_poly(const Poly<K>& p, int comp, const ModuleOrder& ord) {
    std::vector<VTerm<K>> ts;
    ts.reserve(p.terms().size());
    for (const auto& t : p.terms()) ts.push_back({t.c, t.m, comp});
    return from_terms(std::move(ts), ord);
  }

  const std::vector<VTerm<K>>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }

  const VTerm<K>& lt() const {
    if (t_.empty()) throw DomainError("leading term of zero");
    return t_.front();
  }
  const Exponent& lm_exp() const { return lt().m; }
  int lm_comp() const { return lt().comp; }
  const K& lc() const { return lt().c; }

  VecElem scaled(const K& c) const {
    VecElem v;
    if (c.is_zero()) return v;
    v.t_.reserve(t_.size());
    for (const auto& t : t_) v.t_.push_back({t.c * c, t.m, t.comp});
    return v;
  }
  VecElem negated() const {
    VecElem v;
    v.t_.reserve(t_.size());
    for (const auto& t : t_) v.t_.push_back({-t.c, t.m, t.comp});
    return v;
  }
  VecElem tail() const {
    VecElem v;
    if (t_.empty()) throw DomainError("tail of zero");
    v.t_.assign(t_.begin() + 1, t_.end());
    return v;
  }

  static VecElem add(const VecElem& f, const VecElem& g, const ModuleOrder& ord) {
    VecElem r;
    r.t_.reserve(f.t_.size() + g.t_.size());
    std::size_t i = 0, j = 0;
    while (i < f.t_.size() && j < g.t_.size()) {
      const auto& a = f.t_[i];
      const auto& b = g.t_[j];
      if (a.m == b.m && a.comp == b.comp) {
        K s = a.c + b.c;
        if (!s.is_zero()) r.t_.push_back({std::move(s), a.m, a.comp});
        ++i, ++j;
        continue;
      }
      Cmp c = ord.compare(a.m, a.comp, b.m, b.comp);
      if (c == Cmp::greater)
        r.t_.push_back(f.t_[i++]);
      else
        r.t_.push_back(g.t_[j++]);
    }
    for (; i < f.t_.size(); ++i) r.t_.push_back(f.t_[i]);
    for (; j < g.t_.size(); ++j) r.t_.push_back(g.t_[j]);
    return r;
  }
  static VecElem sub(const VecElem& f, const VecElem& g, const ModuleOrder& ord) {
    return add(f, g.negated(), ord);
  }

  VecElem resorted(const ModuleOrder& ord) const {
    VecElem v;
    v.t_ = canonicalize(t_, ord);
    return v;
  }

  // The polynomial sitting on one component, canonical under `scalar`.
  Poly<K> component(int comp, const MonomialOrder& scalar) const {
    std::vector<Term<K>> ts;
    for (const auto& t : t_)
      if (t.comp == comp) ts.push_back({t.c, t.m});
    return Poly<K>::from_terms(std::move(ts), scalar);
  }
  std::vector<int> components_present() const {
    std::vector<int> cs;
    for (const auto& t : t_) cs.push_back(t.comp);
    std::sort(cs.begin(), cs.end());
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
    return cs;
  }
  int max_component() const {
    int m = -1;
    for (const auto& t : t_) m = std::max(m, t.comp);
    return m;
  }

  // Rebuild with transformed terms (component shifts, exponent embeddings).
  VecElem mapped(const std::function<VTerm<K>(const VTerm<K>&)>& fn,
                 const ModuleOrder& ord) const {
    std::vector<VTerm<K>> ts;
    ts.reserve(t_.size());
    for (const auto& t : t_) ts.push_back(fn(t));
    return from_terms(std::move(ts), ord);
  }

  friend bool operator==(const VecElem& a, const VecElem& b) {
    if (a.t_.size() != b.t_.size()) return false;
    for (std::size_t i = 0; i < a.t_.size(); ++i)
      if (!(a.t_[i].c == b.t_[i].c) || a.t_[i].m != b.t_[i].m ||
          a.t_[i].comp != b.t_[i].comp)
        return false;
    return true;
  }
  friend bool operator!=(const VecElem& a, const VecElem& b) { return !(a == b); }

 private:
  static std::vector<VTerm<K>> canonicalize(std::vector<VTerm<K>> ts,
                                            const ModuleOrder& ord) {
    std::sort(ts.begin(), ts.end(), [&](const VTerm<K>& x, const VTerm<K>& y) {
      if (x.m == y.m && x.comp == y.comp) return false;
      return ord.compare(x.m, x.comp, y.m, y.comp) == Cmp::greater;
    });
    std::vector<VTerm<K>> out;
    out.reserve(ts.size());
    for (auto& t : ts) {
      if (!out.empty() && out.back().m == t.m && out.back().comp == t.comp) {
        out.back().c += t.c;
        if (out.back().c.is_zero()) out.pop_back();
      } else if (!t.c.is_zero()) {
        out.push_back(std::move(t));
      }
    }
    return out;
  }

  std::vector<VTerm<K>> t_;
};

}  // namespace solvkit

#endif  // SOLVKIT_POLY_HPP
