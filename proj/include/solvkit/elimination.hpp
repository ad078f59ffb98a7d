// solvkit: exact computer algebra for solvable polynomial algebras.
// Distributed under the Apache License, Version 2.0; see LICENSE.
//
// Elimination toolkit: truncation of a Groebner basis along a distinguished
// sub-basis, contraction of ideals to solvable subalgebras, intersection of
// ideals and submodules through a central tag variable, and the dimension
// search driven by weak independence of generator subsets.

#ifndef SOLVKIT_ELIMINATION_HPP
#define SOLVKIT_ELIMINATION_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "solvkit/algebra.hpp"
#include "solvkit/errors.hpp"
#include "solvkit/exponent.hpp"
#include "solvkit/groebner.hpp"
#include "solvkit/module_order.hpp"
#include "solvkit/order.hpp"
#include "solvkit/poly.hpp"

namespace solvkit {

// Names the sub-basis S the caller wants to slice along: monomials supported
// on a generator subset U, components drawn from a subset U, or the slice of
// t-degree zero in a one-variable central extension.
class SubBasis {
 public:
  enum class Kind { generator_subset, component_subset, t_slice };

  static SubBasis generators(std::vector<int> u) {
    return SubBasis(Kind::generator_subset, normalize(std::move(u)));
  }
  static SubBasis components(std::vector<int> u) {
    return SubBasis(Kind::component_subset, normalize(std::move(u)));
  }
  static SubBasis t_slice() { return SubBasis(Kind::t_slice, {}); }

  Kind kind() const { return kind_; }
  // Sorted ascending, duplicate-free. Empty only for t_slice.
  const std::vector<int>& keep() const { return keep_; }

  bool contains(const Exponent& m, int comp) const {
    switch (kind_) {
      case Kind::generator_subset:
        return m.supported_on(keep_);
      case Kind::component_subset:
        return std::binary_search(keep_.begin(), keep_.end(), comp);
      case Kind::t_slice:
        return m[m.arity() - 1] == 0;
    }
    return false;  // unreachable
  }

 private:
  SubBasis(Kind k, std::vector<int> keep) : kind_(k), keep_(std::move(keep)) {}

  static std::vector<int> normalize(std::vector<int> u) {
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    if (u.empty()) throw DomainError("empty sub-basis subset");
    if (u.front() < 0) throw DomainError("sub-basis subset out of range");
    return u;
  }

  Kind kind_;
  std::vector<int> keep_;
};

namespace detail {

// Structural test: does `mo` make every monomial outside S larger than every
// monomial inside S? Recognized shapes only; anything else is rejected even
// if it happens to eliminate.
inline bool eliminates_for(const ModuleOrder& mo, const SubBasis& s, int rank) {
  using MK = ModuleOrder::Kind;
  using SK = MonomialOrder::Kind;
  switch (s.kind()) {
    case SubBasis::Kind::generator_subset: {
      if (mo.kind() != MK::top && mo.kind() != MK::pot) return false;
      const MonomialOrder& base = mo.scalar_base();
      return base.kind() == SK::elim_block && base.block_keep() == s.keep();
    }
    case SubBasis::Kind::component_subset: {
      if (mo.kind() == MK::pot_prefix) {
        std::vector<int> kept = mo.kept_components();
        std::sort(kept.begin(), kept.end());
        return kept == s.keep();
      }
      if (mo.kind() == MK::pot) {
        // Plain POT keeps any prefix of components below the rest.
        for (std::size_t i = 0; i < s.keep().size(); ++i)
          if (s.keep()[i] != static_cast<int>(i)) return false;
        return true;
      }
      if (mo.kind() == MK::direct_sum_elim) {
        // The eps block (components >= split) sits below the e block.
        const int split = mo.split();
        if (static_cast<int>(s.keep().size()) != rank - split) return false;
        for (std::size_t i = 0; i < s.keep().size(); ++i)
          if (s.keep()[i] != split + static_cast<int>(i)) return false;
        return true;
      }
      return false;
    }
    case SubBasis::Kind::t_slice: {
      if (mo.kind() == MK::t_elim) return true;
      if (mo.kind() == MK::top || mo.kind() == MK::pot)
        return mo.scalar_base().kind() == SK::t_extension;
      return false;
    }
  }
  return false;  // unreachable
}

inline std::vector<int> checked_subset(std::vector<int> u, int bound,
                                       bool proper) {
  std::sort(u.begin(), u.end());
  u.erase(std::unique(u.begin(), u.end()), u.end());
  if (u.empty()) throw DomainError("empty subset");
  if (u.front() < 0 || u.back() >= bound)
    throw DomainError("subset out of range");
  if (proper && static_cast<int>(u.size()) == bound)
    throw DomainError("subset must be proper");
  return u;
}

}  // namespace detail

// Keeps exactly the basis elements all of whose monomials lie in S. Under an
// ordering that eliminates for S this set is a Groebner basis of N cap V(S);
// the structural precondition is enforced, not assumed.
template <Field K>
std::vector<VecElem<K>> truncate_to_VS(const GroebnerBasis<K>& G,
                                       const SubBasis& S) {
  if (!detail::eliminates_for(G.order, S, G.rank))
    throw StructuralMismatch(
        "ordering is not an elimination ordering for the requested sub-basis");
  std::vector<VecElem<K>> out;
  for (const VecElem<K>& g : G.elems) {
    bool inside = !g.is_zero();
    for (const VTerm<K>& t : g.terms()) {
      if (!S.contains(t.m, t.comp)) {
        inside = false;
        break;
      }
    }
    if (inside) out.push_back(g);
  }
  return out;
}

// Witness that the kept generators do not span a solvable subalgebra: the
// product a_j a_i (both kept) has a term at `monomial` outside the span of
// kept-supported monomials.
struct ClosureFailure {
  int j = 0;
  int i = 0;
  Exponent monomial;
};

// Scans kept pairs (j, i), j > i, in ascending (j, i) order; within a
// relation, terms are scanned in descending monomial order and the first
// unsupported one is reported. Deterministic by construction.
template <Field K>
std::optional<ClosureFailure> subalgebra_closure_check(
    const ValidatedAlgebra<K>& A, const std::vector<int>& keep) {
  std::vector<int> u = detail::checked_subset(keep, A.ngens(), /*proper=*/true);
  for (std::size_t b = 1; b < u.size(); ++b) {
    for (std::size_t a = 0; a < b; ++a) {
      const Relation<K>& r = A.relations().at(u[b], u[a]);
      for (const Term<K>& t : r.f.terms())
        if (!t.m.supported_on(u))
          return ClosureFailure{u[b], u[a], t.m};
    }
  }
  return std::nullopt;
}

// A Groebner basis re-expressed over the solvable subalgebra generated by
// the kept ambient generators, carried together with that subalgebra.
template <Field K>
struct SubalgebraGB {
  ValidatedAlgebra<K> subalgebra;  // gens renamed after the kept ambient gens
  std::vector<int> keep;           // ambient indices, ascending
  GroebnerBasis<K> basis;          // rank-1, reduced, over `subalgebra`
};

template <Field K>
using EliminationResult = std::variant<SubalgebraGB<K>, ClosureFailure>;

namespace detail {

// Builds K<U> with the ambient ordering restricted to its monomials. Closure
// of the kept relation tails is a precondition; validation then cannot fail.
template <Field K>
ValidatedAlgebra<K> contract_algebra(const ValidatedAlgebra<K>& A,
                                     const std::vector<int>& u) {
  const int k = static_cast<int>(u.size());
  std::vector<std::string> names;
  names.reserve(u.size());
  for (int g : u) names.push_back(A.name(g));
  MonomialOrder sub_ord = MonomialOrder::restriction(A.order(), u);
  RelationTable<K> rels(k);
  for (int b = 1; b < k; ++b) {
    for (int a = 0; a < b; ++a) {
      const Relation<K>& r = A.relations().at(u[b], u[a]);
      std::vector<Term<K>> ts;
      for (const Term<K>& t : r.f.terms()) ts.push_back({t.c, t.m.restrict(u)});
      rels.set(b, a, r.lambda, Poly<K>::from_terms(std::move(ts), sub_ord));
    }
  }
  AlgebraDef<K> def{std::move(names), A.one(), std::move(sub_ord),
                    std::move(rels)};
  auto res = validate_algebra(std::move(def));
  if (auto* ok = std::get_if<ValidatedAlgebra<K>>(&res)) return std::move(*ok);
  throw InternalError("subalgebra failed validation after a closure pass");
}

}  // namespace detail

// Contracts the ideal generated by `gens` to the subalgebra on the kept
// generators. Fails with a ClosureFailure value when the kept generators do
// not span a solvable subalgebra; otherwise returns the reduced Groebner
// basis of the contraction, re-expressed over that subalgebra.
template <Field K>
EliminationResult<K> eliminate_ideal(const ValidatedAlgebra<K>& A,
                                     const std::vector<Poly<K>>& gens,
                                     const std::vector<int>& keep) {
  std::vector<int> u = detail::checked_subset(keep, A.ngens(), /*proper=*/true);
  if (auto fail = subalgebra_closure_check(A, u)) return *fail;

  MonomialOrder eo = elim_order(A.order(), u);
  GroebnerBasis<K> G = reduce_basis(buchberger_ideal(A, gens, eo));
  std::vector<VecElem<K>> cut = truncate_to_VS(G, SubBasis::generators(u));

  ValidatedAlgebra<K> sub = detail::contract_algebra(A, u);
  // Restriction preserves the comparisons the cut terms were sorted under,
  // so re-expression is a slot-wise relabeling.
  std::vector<VecElem<K>> elems;
  elems.reserve(cut.size());
  ModuleOrder sub_mo = ModuleOrder::top(sub.order());
  for (const VecElem<K>& g : cut) {
    std::vector<VTerm<K>> ts;
    for (const VTerm<K>& t : g.terms()) ts.push_back({t.c, t.m.restrict(u), 0});
    elems.push_back(VecElem<K>::from_terms(std::move(ts), sub_mo));
  }
  GroebnerBasis<K> basis{sub, sub_mo, 1, std::move(elems), true};
  return SubalgebraGB<K>{std::move(sub), std::move(u), std::move(basis)};
}

// Contracts a submodule to the free summand on the kept components. No
// closure condition arises: the kept components always span a free module
// over the full algebra. Components are re-indexed to 0..|U|-1 in ascending
// ambient order and the result is a reduced basis under POT.
template <Field K>
GroebnerBasis<K> eliminate_module(const ValidatedAlgebra<K>& A,
                                  const std::vector<VecElem<K>>& gens,
                                  const std::vector<int>& keep_components,
                                  int rank) {
  std::vector<int> u =
      detail::checked_subset(keep_components, rank, /*proper=*/false);
  ModuleOrder mo = ModuleOrder::pot_prefix(A.order(), u);
  GroebnerBasis<K> G = reduce_basis(buchberger(A, gens, mo, rank));
  std::vector<VecElem<K>> cut = truncate_to_VS(G, SubBasis::components(u));

  std::map<int, int> re;
  for (std::size_t i = 0; i < u.size(); ++i) re[u[i]] = static_cast<int>(i);
  ModuleOrder out_mo = ModuleOrder::pot(A.order());
  std::vector<VecElem<K>> elems;
  elems.reserve(cut.size());
  for (const VecElem<K>& g : cut) {
    std::vector<VTerm<K>> ts;
    for (const VTerm<K>& t : g.terms()) ts.push_back({t.c, t.m, re.at(t.comp)});
    elems.push_back(VecElem<K>::from_terms(std::move(ts), out_mo));
  }
  return GroebnerBasis<K>{A, std::move(out_mo), static_cast<int>(u.size()),
                          std::move(elems), true};
}

namespace detail {

template <Field K>
Poly<K> lift_poly(const Poly<K>& p, const MonomialOrder& ord) {
  std::vector<Term<K>> ts;
  ts.reserve(p.size());
  for (const Term<K>& t : p.terms()) ts.push_back({t.c, t.m.append(0)});
  return Poly<K>::from_terms(std::move(ts), ord);
}

template <Field K>
VecElem<K> lift_elem(const VecElem<K>& v, const ModuleOrder& ord) {
  std::vector<VTerm<K>> ts;
  ts.reserve(v.size());
  for (const VTerm<K>& t : v.terms()) ts.push_back({t.c, t.m.append(0), t.comp});
  return VecElem<K>::from_terms(std::move(ts), ord);
}

template <Field K>
VecElem<K> drop_t(const VecElem<K>& v, const ModuleOrder& ord) {
  std::vector<VTerm<K>> ts;
  ts.reserve(v.size());
  for (const VTerm<K>& t : v.terms())
    ts.push_back({t.c, t.m.drop_last(), t.comp});
  return VecElem<K>::from_terms(std::move(ts), ord);
}

}  // namespace detail

// N1 cap N2 as ideals: tag N1 by t and N2 by 1-t in the central extension
// A[t], compute a reduced basis under the t-dominant ordering, and keep the
// t-degree-zero slice. The result is a reduced basis under the base ordering.
template <Field K>
GroebnerBasis<K> intersect_ideals(const ValidatedAlgebra<K>& A,
                                  const std::vector<Poly<K>>& n1,
                                  const std::vector<Poly<K>>& n2) {
  ValidatedAlgebra<K> At = extend_with_t(A);
  const int n = A.ngens();
  Poly<K> t = At.gen(n);
  Poly<K> one_minus_t = Poly<K>::sub(At.unit_poly(), t, At.order());

  std::vector<Poly<K>> gens;
  gens.reserve(n1.size() + n2.size());
  for (const Poly<K>& p : n1)
    gens.push_back(At.mul(t, detail::lift_poly(p, At.order())));
  for (const Poly<K>& p : n2)
    gens.push_back(At.mul(one_minus_t, detail::lift_poly(p, At.order())));

  GroebnerBasis<K> G = reduce_basis(buchberger_ideal(At, gens, At.order()));
  std::vector<VecElem<K>> cut = truncate_to_VS(G, SubBasis::t_slice());

  ModuleOrder out_mo = ModuleOrder::top(A.order());
  std::vector<VecElem<K>> elems;
  elems.reserve(cut.size());
  for (const VecElem<K>& g : cut) elems.push_back(detail::drop_t(g, out_mo));
  return GroebnerBasis<K>{A, std::move(out_mo), 1, std::move(elems), true};
}

// Same tag-variable construction one rank up: elements of A^rank are lifted
// to A[t]^rank and compared t-degree first, then under `ord`.
template <Field K>
GroebnerBasis<K> intersect_submodules(const ValidatedAlgebra<K>& A,
                                      const std::vector<VecElem<K>>& n1,
                                      const std::vector<VecElem<K>>& n2,
                                      const ModuleOrder& ord, int rank) {
  detail::require_rank(n1, rank);
  detail::require_rank(n2, rank);
  ValidatedAlgebra<K> At = extend_with_t(A);
  const int n = A.ngens();
  ModuleOrder mo = ModuleOrder::t_elim(ord);
  Poly<K> t = At.gen(n);
  Poly<K> one_minus_t = Poly<K>::sub(At.unit_poly(), t, At.order());

  std::vector<VecElem<K>> gens;
  gens.reserve(n1.size() + n2.size());
  for (const VecElem<K>& v : n1)
    gens.push_back(At.mul(t, detail::lift_elem(v, mo), mo));
  for (const VecElem<K>& v : n2)
    gens.push_back(At.mul(one_minus_t, detail::lift_elem(v, mo), mo));

  GroebnerBasis<K> G = reduce_basis(buchberger(At, gens, mo, rank));
  std::vector<VecElem<K>> cut = truncate_to_VS(G, SubBasis::t_slice());

  std::vector<VecElem<K>> elems;
  elems.reserve(cut.size());
  for (const VecElem<K>& g : cut) elems.push_back(detail::drop_t(g, ord));
  return GroebnerBasis<K>{A, ord, rank, std::move(elems), true};
}

// True iff the ideal meets the span of kept-supported monomials only in 0,
// i.e. the kept generators stay independent modulo N. Works at the level of
// the monomial span; no subalgebra closure is required.
template <Field K>
bool weakly_independent(const ValidatedAlgebra<K>& A,
                        const std::vector<Poly<K>>& gens,
                        const std::vector<int>& keep) {
  std::vector<int> u = detail::checked_subset(keep, A.ngens(), /*proper=*/true);
  MonomialOrder eo = elim_order(A.order(), u);
  GroebnerBasis<K> G = buchberger_ideal(A, gens, eo);
  return truncate_to_VS(G, SubBasis::generators(u)).empty();
}

// GK-dimension search over the zero ideal is undefined (the quotient is the
// whole algebra and no proper subset can witness its dimension).
struct ZeroIdeal : DomainError {
  explicit ZeroIdeal(const std::string& what) : DomainError(what) {}
};

struct DimSearchResult {
  int dim = 0;
  std::vector<int> witness;  // a maximal weakly independent subset, ascending
  bool exact = false;        // dimension attained, not only bounded below
};

namespace detail {

// First subset of {0..n-1} with `size` elements, then lexicographic
// successors; returns false when exhausted.
inline bool next_combination(std::vector<int>& c, int n) {
  const int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace detail

// Searches subsets by descending size, lexicographically within a size, and
// returns the first weakly independent one. The dimension of A/N is bounded
// below by the result; the bound is exact when the presentation is quadric
// and the ordering grades by total degree.
template <Field K>
DimSearchResult gk_dim_search(const ValidatedAlgebra<K>& A,
                              const std::vector<Poly<K>>& gens) {
  GroebnerBasis<K> base = buchberger_ideal(A, gens, A.order());
  if (base.elems.empty())
    throw ZeroIdeal("dimension search needs a nonzero ideal");
  const int n = A.ngens();
  const bool exact = A.quadric() && A.graded_unit_order();
  for (int size = n - 1; size >= 1; --size) {
    std::vector<int> u(size);
    for (int i = 0; i < size; ++i) u[i] = i;
    do {
      if (weakly_independent(A, gens, u)) return DimSearchResult{size, u, exact};
    } while (detail::next_combination(u, n));
  }
  return DimSearchResult{0, {}, exact};
}

}  // namespace solvkit

#endif  // SOLVKIT_ELIMINATION_HPP
