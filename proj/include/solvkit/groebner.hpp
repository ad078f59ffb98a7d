// solvkit: exact computer algebra for solvable polynomial algebras.
// Distributed under the Apache License, Version 2.0; see LICENSE.

#ifndef SOLVKIT_GROEBNER_HPP
#define SOLVKIT_GROEBNER_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "errors.hpp"
#include "module_order.hpp"
#include "poly.hpp"

namespace solvkit {

// One division step: xi := xi - coeff * a^cofactor * G[divisor], cancelling
// the monomial (target, component).
template <Field K>
struct ReductionStep {
  Exponent target;
  int component;
  int divisor;
  K coeff;
  Exponent cofactor;
};

template <Field K>
using TraceSink = std::function<void(const ReductionStep<K>&)>;

template <Field K>
struct DivisionResult {
  VecElem<K> remainder;
  // Cofactor polynomials paired with basis indices: input = sum + remainder.
  std::vector<std::pair<Poly<K>, int>> quotients;
};

// Left division with full tail reduction. Divisor tie-break: the smallest
// index whose LM left-divides. Every quotient term a^gamma keeps
// LM(a^gamma G_k) at or below LM(input); the remainder has no monomial
// left-divisible by any LM(G_k).
template <Field K>
DivisionResult<K> normal_form(const ValidatedAlgebra<K>& A, VecElem<K> xi,
                              const std::vector<VecElem<K>>& G,
                              const ModuleOrder& ord,
                              const TraceSink<K>* trace = nullptr) {
  std::map<int, std::vector<Term<K>>> quot;
  std::vector<VTerm<K>> rem;
  VecElem<K> rest = xi.resorted(ord);
  while (!rest.is_zero()) {
    const VTerm<K>& lt = rest.lt();
    int pick = -1;
    for (std::size_t k = 0; k < G.size(); ++k) {
      if (G[k].is_zero()) continue;
      if (G[k].lm_comp() == lt.comp && G[k].lm_exp().divides(lt.m)) {
        pick = static_cast<int>(k);
        break;
      }
    }
    if (pick < 0) {
      rem.push_back(lt);
      rest = rest.tail();
      continue;
    }
    Exponent gamma = lt.m - G[pick].lm_exp();
    VecElem<K> prod =
        A.mul(Poly<K>::monomial(A.one(), gamma), G[pick], ord);
    // LM(a^gamma g) = gamma + LM(g) with a nonzero coefficient (Prop 1.3).
    K c = lt.c * prod.lc().inverse();
    if (trace) (*trace)({lt.m, lt.comp, pick, c, gamma});
    rest = VecElem<K>::sub(rest, prod.scaled(c), ord);
    quot[pick].push_back({std::move(c), std::move(gamma)});
  }
  DivisionResult<K> out;
  out.remainder = VecElem<K>::from_terms(std::move(rem), ord);
  for (auto& [k, ts] : quot)
    out.quotients.emplace_back(Poly<K>::from_terms(std::move(ts), A.order()), k);
  return out;
}

// None when the leading components differ; otherwise the classic S-vector
// with both leading terms scaled to 1 so they cancel.
template <Field K>
std::optional<VecElem<K>> spair(const ValidatedAlgebra<K>& A,
                                const VecElem<K>& f, const VecElem<K>& g,
                                const ModuleOrder& ord) {
  if (f.is_zero() || g.is_zero()) throw DomainError("s-vector of zero");
  if (f.lm_comp() != g.lm_comp()) return std::nullopt;
  Exponent gamma = f.lm_exp().join(g.lm_exp());
  VecElem<K> pf =
      A.mul(Poly<K>::monomial(A.one(), gamma - f.lm_exp()), f, ord);
  VecElem<K> pg =
      A.mul(Poly<K>::monomial(A.one(), gamma - g.lm_exp()), g, ord);
  return VecElem<K>::sub(pf.scaled(pf.lc().inverse()),
                         pg.scaled(pg.lc().inverse()), ord);
}

template <Field K>
struct GroebnerBasis {
  ValidatedAlgebra<K> algebra;
  ModuleOrder order;
  int rank = 1;
  std::vector<VecElem<K>> elems;
  bool reduced = false;
};

namespace detail {

template <Field K>
void require_rank(const std::vector<VecElem<K>>& gens, int rank) {
  for (const auto& g : gens)
    if (g.max_component() >= rank)
      throw RankMismatch("component index exceeds the free module rank");
}

}  // namespace detail

// Noncommutative Buchberger, normal selection strategy: the open pair with
// the smallest (lcm exponent, component) under the active ordering runs
// first, ties broken by (i, j). Pairs whose leading components differ are
// skipped outright; no other criterion is applied. Elements are made monic
// only at the end.
template <Field K>
GroebnerBasis<K> buchberger(const ValidatedAlgebra<K>& A,
                            const std::vector<VecElem<K>>& gens,
                            const ModuleOrder& ord, int rank) {
  detail::require_rank(gens, rank);
  std::vector<VecElem<K>> basis;
  for (const auto& g : gens) {
    VecElem<K> s = g.resorted(ord);
    if (!s.is_zero()) basis.push_back(std::move(s));
  }

  struct Pair {
    int i, j;
    Exponent gamma;
    int comp;
  };
  std::vector<Pair> open;
  auto push_pairs = [&](int j) {
    for (int i = 0; i < j; ++i) {
      if (basis[i].lm_comp() != basis[j].lm_comp()) continue;
      open.push_back({i, j, basis[i].lm_exp().join(basis[j].lm_exp()),
                      basis[j].lm_comp()});
    }
  };
  for (std::size_t j = 1; j < basis.size(); ++j) push_pairs(static_cast<int>(j));

  while (!open.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < open.size(); ++k) {
      Cmp c = ord.compare(open[k].gamma, open[k].comp, open[best].gamma,
                          open[best].comp);
      if (c == Cmp::less || (c == Cmp::equal &&
                             std::pair(open[k].i, open[k].j) <
                                 std::pair(open[best].i, open[best].j)))
        best = k;
    }
    Pair p = open[best];
    open.erase(open.begin() + best);

    auto s = spair(A, basis[p.i], basis[p.j], ord);
    if (!s || s->is_zero()) continue;
    VecElem<K> r = normal_form(A, *s, basis, ord).remainder;
    if (r.is_zero()) continue;
    basis.push_back(std::move(r));
    push_pairs(static_cast<int>(basis.size()) - 1);
  }

  for (auto& g : basis) g = g.scaled(g.lc().inverse());
  return GroebnerBasis<K>{A, ord, rank, std::move(basis), false};
}

// Inter-reduction to the unique reduced basis: monic, no monomial of any
// element left-divisible by another element's LM, sorted LM-descending.
template <Field K>
GroebnerBasis<K> reduce_basis(const GroebnerBasis<K>& G) {
  const ValidatedAlgebra<K>& A = G.algebra;
  const ModuleOrder& ord = G.order;
  std::vector<VecElem<K>> cur;
  for (const auto& g : G.elems)
    if (!g.is_zero()) cur.push_back(g.scaled(g.lc().inverse()));

  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t k = 0; k < cur.size(); ++k) {
      std::vector<VecElem<K>> others;
      others.reserve(cur.size() - 1);
      for (std::size_t m = 0; m < cur.size(); ++m)
        if (m != k) others.push_back(cur[m]);
      VecElem<K> r = normal_form(A, cur[k], others, ord).remainder;
      if (r == cur[k]) continue;
      changed = true;
      if (r.is_zero()) {
        cur.erase(cur.begin() + k);
        --k;
      } else {
        cur[k] = r.scaled(r.lc().inverse());
      }
    }
  }
  std::sort(cur.begin(), cur.end(), [&](const VecElem<K>& a, const VecElem<K>& b) {
    return ord.compare(a.lm_exp(), a.lm_comp(), b.lm_exp(), b.lm_comp()) ==
           Cmp::greater;
  });
  return GroebnerBasis<K>{A, ord, G.rank, std::move(cur), true};
}

// Left Groebner representation of xi, or nullopt when xi is not a member.
template <Field K>
std::optional<std::vector<std::pair<Poly<K>, int>>> member(
    const VecElem<K>& xi, const GroebnerBasis<K>& G,
    const TraceSink<K>* trace = nullptr) {
  if (xi.max_component() >= G.rank)
    throw RankMismatch("element component exceeds the basis rank");
  DivisionResult<K> d = normal_form(G.algebra, xi, G.elems, G.order, trace);
  if (!d.remainder.is_zero()) return std::nullopt;
  return std::move(d.quotients);
}

// GB certificate: every pairwise S-vector reduces to zero.
template <Field K>
bool verify_spairs(const GroebnerBasis<K>& G) {
  for (std::size_t j = 1; j < G.elems.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) {
      auto s = spair(G.algebra, G.elems[i], G.elems[j], G.order);
      if (!s || s->is_zero()) continue;
      if (!normal_form(G.algebra, *s, G.elems, G.order).remainder.is_zero())
        return false;
    }
  return true;
}

/* ------------------------------------------------------ rank-1 wrappers -- */

template <Field K>
GroebnerBasis<K> buchberger_ideal(const ValidatedAlgebra<K>& A,
                                  const std::vector<Poly<K>>& gens,
                                  const MonomialOrder& ord) {
  ModuleOrder mo = ModuleOrder::top(ord);
  std::vector<VecElem<K>> v;
  v.reserve(gens.size());
  for (const auto& p : gens) v.push_back(VecElem<K>::from_poly(p, 0, mo));
  return buchberger(A, v, mo, 1);
}

template <Field K>
std::vector<Poly<K>> scalar_elems(const GroebnerBasis<K>& G,
                                  const MonomialOrder& ord) {
  std::vector<Poly<K>> out;
  out.reserve(G.elems.size());
  for (const auto& e : G.elems) out.push_back(e.component(0, ord));
  return out;
}

}  // namespace solvkit

#endif  // SOLVKIT_GROEBNER_HPP
