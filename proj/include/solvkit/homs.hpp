// solvkit: exact computer algebra for solvable polynomial algebras.
// Distributed under the Apache License, Version 2.0; see LICENSE.
//
// Module homomorphisms between free modules and between quotients of free
// modules: kernels, image membership, and surjectivity, all through the
// graph submodule in L1 (+) L2 under a POT ordering with the source block
// lowest. Every positive answer is re-verified by direct evaluation before
// it is returned; a verification failure raises InternalError, never a
// silently wrong result.

#ifndef SOLVKIT_HOMS_HPP
#define SOLVKIT_HOMS_HPP

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "solvkit/algebra.hpp"
#include "solvkit/elimination.hpp"
#include "solvkit/errors.hpp"
#include "solvkit/groebner.hpp"
#include "solvkit/module_order.hpp"
#include "solvkit/poly.hpp"

namespace solvkit {

// A quotient map failed the well-definedness gate; `q` is the first source
// relation whose image misses the target submodule.
struct HomNotWellDefined : DomainError {
  HomNotWellDefined(int q_, const std::string& what)
      : DomainError(what), q(q_) {}
  int q;
};

namespace detail {

// Components 0..s-1 carry the source block e, components s..s+m-1 the
// target block eps. POT with the source block lowest is exactly the
// elimination ordering the truncation step needs.
template <Field K>
VecElem<K> shift_to_target(const VecElem<K>& v, int s, const ModuleOrder& L) {
  return v.mapped(
      [&](const VTerm<K>& t) {
        return VTerm<K>{t.c, t.m, t.comp + s};
      },
      L);
}

template <Field K>
VecElem<K> eval_images(const ValidatedAlgebra<K>& A,
                       const std::vector<VecElem<K>>& images,
                       const VecElem<K>& xi, const ModuleOrder& target) {
  VecElem<K> out;
  for (const VTerm<K>& t : xi.terms()) {
    if (t.comp >= static_cast<int>(images.size()))
      throw RankMismatch("evaluation argument exceeds the source rank");
    out = VecElem<K>::add(
        out, A.mul(Poly<K>::monomial(t.c, t.m), images[t.comp], target),
        target);
  }
  return out;
}

inline std::vector<int> source_block(int s) {
  std::vector<int> u(s);
  for (int i = 0; i < s; ++i) u[i] = i;
  return u;
}

template <Field K>
std::vector<VecElem<K>> checked_images(std::vector<VecElem<K>> images, int s,
                                       int m, const ModuleOrder& L) {
  if (s <= 0 || m <= 0) throw DomainError("ranks must be positive");
  if (static_cast<int>(images.size()) != s)
    throw DomainError("need one image per source component");
  require_rank(images, m);
  for (auto& e : images) e = e.resorted(L);
  return images;
}

template <Field K>
std::vector<VecElem<K>> graph_generators(const ValidatedAlgebra<K>& A, int s,
                                         const std::vector<VecElem<K>>& images,
                                         const ModuleOrder& L) {
  std::vector<VecElem<K>> gens;
  gens.reserve(images.size());
  for (int i = 0; i < s; ++i) {
    VecElem<K> ei = VecElem<K>::monomial(A.one(), Exponent(A.ngens()), i);
    gens.push_back(
        VecElem<K>::sub(ei, shift_to_target(images[i], s, L), L));
  }
  return gens;
}

}  // namespace detail

// phi: L1 -> L2 between free modules over a shared algebra, phi(e_i) =
// images[i]. The reduced basis of the graph kernel is computed once at
// construction and shared immutably afterwards.
template <Field K>
class FreeHom {
 public:
  FreeHom(ValidatedAlgebra<K> algebra, int source_rank, int target_rank,
          std::vector<VecElem<K>> images)
      : a_(std::move(algebra)),
        s_(source_rank),
        m_(target_rank),
        order_(ModuleOrder::pot(a_.order())),
        eta_(detail::checked_images(std::move(images), s_, m_, order_)),
        graph_(reduce_basis(buchberger(
            a_, detail::graph_generators(a_, s_, eta_, order_), order_,
            s_ + m_))) {}

  const ValidatedAlgebra<K>& algebra() const { return a_; }
  int source_rank() const { return s_; }
  int target_rank() const { return m_; }
  const std::vector<VecElem<K>>& images() const { return eta_; }
  // POT over the base order; serves L1, L2 and the combined module alike.
  const ModuleOrder& order() const { return order_; }
  // Reduced basis of Ker Phi = sum A(e_i - eta_i) inside L1 (+) L2.
  const GroebnerBasis<K>& graph() const { return graph_; }

  VecElem<K> eval(const VecElem<K>& xi) const {
    return detail::eval_images(a_, eta_, xi, order_);
  }

 private:
  ValidatedAlgebra<K> a_;
  int s_;
  int m_;
  ModuleOrder order_;
  std::vector<VecElem<K>> eta_;
  GroebnerBasis<K> graph_;
};

template <Field K>
const GroebnerBasis<K>& graph_kernel_basis(const FreeHom<K>& phi) {
  return phi.graph();
}

// Ker phi as a reduced basis inside L1. Injectivity is emptiness.
template <Field K>
GroebnerBasis<K> kernel_free(const FreeHom<K>& phi) {
  std::vector<VecElem<K>> cut = truncate_to_VS(
      phi.graph(),
      SubBasis::components(detail::source_block(phi.source_rank())));
  return GroebnerBasis<K>{phi.algebra(), phi.order(), phi.source_rank(),
                          std::move(cut), true};
}

// Preimage of eta when it exists: the normal form of eta against the graph
// basis lands in the source block exactly when eta is in the image, and is
// itself the canonical preimage. Positive answers are re-evaluated.
template <Field K>
std::optional<VecElem<K>> image_membership(const FreeHom<K>& phi,
                                           const VecElem<K>& eta) {
  if (eta.max_component() >= phi.target_rank())
    throw RankMismatch("element mentions a component outside the target");
  VecElem<K> canon = eta.resorted(phi.order());
  VecElem<K> lifted =
      detail::shift_to_target(canon, phi.source_rank(), phi.order());
  VecElem<K> r =
      normal_form(phi.algebra(), lifted, phi.graph().elems, phi.order())
          .remainder;
  if (r.max_component() >= phi.source_rank()) return std::nullopt;
  if (!(phi.eval(r) == canon))
    throw InternalError("image preimage failed evaluation");
  return r;
}

namespace detail {

// Shared LM = eps_j scan for the two surjectivity tests. Returns the
// sections xi_j with Phi(xi_j) = eps_j, or nullopt when some target
// component has no reduced-basis element with that leading monomial.
template <Field K>
std::optional<std::vector<VecElem<K>>> surjectivity_sections(
    const GroebnerBasis<K>& G, const ValidatedAlgebra<K>& A, int s, int m,
    const ModuleOrder& L) {
  std::vector<VecElem<K>> sections;
  for (int j = 0; j < m; ++j) {
    const VecElem<K>* hit = nullptr;
    for (const VecElem<K>& g : G.elems) {
      if (g.lm_comp() == s + j && g.lm_exp().total_degree() == 0) {
        hit = &g;
        break;  // reduced basis: leading monomials are distinct
      }
    }
    if (hit == nullptr) return std::nullopt;
    VecElem<K> eps =
        VecElem<K>::monomial(A.one(), Exponent(A.ngens()), s + j);
    VecElem<K> xi = VecElem<K>::sub(eps, *hit, L);
    if (xi.max_component() >= s)
      throw InternalError("surjectivity section leaks target components");
    sections.push_back(std::move(xi));
  }
  return sections;
}

}  // namespace detail

// Sections xi_j with phi(xi_j) = eps_j for every target component, or
// nullopt. Existence of all of them is equivalent to surjectivity.
template <Field K>
std::optional<std::vector<VecElem<K>>> is_surjective_free(
    const FreeHom<K>& phi) {
  auto sections = detail::surjectivity_sections(
      phi.graph(), phi.algebra(), phi.source_rank(), phi.target_rank(),
      phi.order());
  if (!sections) return std::nullopt;
  for (int j = 0; j < phi.target_rank(); ++j) {
    VecElem<K> eps = VecElem<K>::monomial(phi.algebra().one(),
                                          Exponent(phi.algebra().ngens()), j);
    if (!(phi.eval((*sections)[j]) == eps))
      throw InternalError("surjectivity section failed evaluation");
  }
  return sections;
}

// Well-definedness gate for maps between quotients: every source relation
// must evaluate into the target submodule. Returns the first failing
// relation index, or nullopt when the map is well defined.
template <Field K>
std::optional<int> hom_obstruction(const ValidatedAlgebra<K>& A,
                                   int source_rank,
                                   const std::vector<VecElem<K>>& n1gens,
                                   int target_rank,
                                   const std::vector<VecElem<K>>& n2gens,
                                   const std::vector<VecElem<K>>& images) {
  ModuleOrder L = ModuleOrder::pot(A.order());
  detail::require_rank(n1gens, source_rank);
  detail::require_rank(n2gens, target_rank);
  detail::require_rank(images, target_rank);
  if (static_cast<int>(images.size()) != source_rank)
    throw DomainError("need one image per source component");
  GroebnerBasis<K> G2 = reduce_basis(buchberger(A, n2gens, L, target_rank));
  for (std::size_t q = 0; q < n1gens.size(); ++q) {
    VecElem<K> v = detail::eval_images(A, images, n1gens[q].resorted(L), L);
    if (!member(v, G2).has_value()) return static_cast<int>(q);
  }
  return std::nullopt;
}

// phi-bar: M1 = L1/N1 -> M2 = L2/N2 given by lifted images. Construction is
// gated on well-definedness; the graph basis (of N2 + sum A(e_i - eta_i))
// and the target basis (of N2) are cached immutably.
template <Field K>
class QuotientHom {
 public:
  static std::variant<QuotientHom<K>, HomNotWellDefined> make(
      ValidatedAlgebra<K> algebra, int source_rank,
      std::vector<VecElem<K>> n1gens, int target_rank,
      std::vector<VecElem<K>> n2gens, std::vector<VecElem<K>> images) {
    if (auto q = hom_obstruction(algebra, source_rank, n1gens, target_rank,
                                 n2gens, images))
      return HomNotWellDefined(
          *q, "source relation " + std::to_string(*q) +
                  " does not map into the target submodule");
    return QuotientHom<K>(std::move(algebra), source_rank, std::move(n1gens),
                          target_rank, std::move(n2gens), std::move(images));
  }

  const ValidatedAlgebra<K>& algebra() const { return a_; }
  int source_rank() const { return s_; }
  int target_rank() const { return m_; }
  const std::vector<VecElem<K>>& source_relations() const { return n1_; }
  const std::vector<VecElem<K>>& target_relations() const { return n2_; }
  const std::vector<VecElem<K>>& images() const { return eta_; }
  const ModuleOrder& order() const { return order_; }
  // Reduced basis of Ker Phi = N2 + sum A(e_i - eta_i) in L1 (+) L2.
  const GroebnerBasis<K>& graph() const { return graph_; }
  // Reduced basis of N2 inside L2.
  const GroebnerBasis<K>& target_basis() const { return n2basis_; }

  VecElem<K> eval(const VecElem<K>& xi) const {
    return detail::eval_images(a_, eta_, xi, order_);
  }

 private:
  static std::vector<VecElem<K>> resorted_all(std::vector<VecElem<K>> vs,
                                              const ModuleOrder& L) {
    for (auto& v : vs) v = v.resorted(L);
    return vs;
  }
  std::vector<VecElem<K>> combined_generators() const {
    std::vector<VecElem<K>> gens =
        detail::graph_generators(a_, s_, eta_, order_);
    for (const VecElem<K>& v : n2_)
      gens.push_back(detail::shift_to_target(v, s_, order_));
    return gens;
  }

  QuotientHom(ValidatedAlgebra<K> algebra, int s, std::vector<VecElem<K>> n1,
              int m, std::vector<VecElem<K>> n2, std::vector<VecElem<K>> eta)
      : a_(std::move(algebra)),
        s_(s),
        m_(m),
        order_(ModuleOrder::pot(a_.order())),
        n1_(resorted_all(std::move(n1), order_)),
        n2_(resorted_all(std::move(n2), order_)),
        eta_(detail::checked_images(std::move(eta), s_, m_, order_)),
        n2basis_(reduce_basis(buchberger(a_, n2_, order_, m_))),
        graph_(reduce_basis(
            buchberger(a_, combined_generators(), order_, s_ + m_))) {}

  ValidatedAlgebra<K> a_;
  int s_;
  int m_;
  ModuleOrder order_;
  std::vector<VecElem<K>> n1_;
  std::vector<VecElem<K>> n2_;
  std::vector<VecElem<K>> eta_;
  GroebnerBasis<K> n2basis_;
  GroebnerBasis<K> graph_;
};

// Unwraps the gated construction, throwing on an ill-defined map.
template <Field K>
QuotientHom<K> must_hom(std::variant<QuotientHom<K>, HomNotWellDefined> r) {
  if (auto* err = std::get_if<HomNotWellDefined>(&r)) throw *err;
  return std::move(std::get<QuotientHom<K>>(r));
}

// Coset representatives generating Ker phi-bar inside M1: the source-block
// truncation of the graph basis (a reduced basis of Ker Phi cap L1).
template <Field K>
GroebnerBasis<K> kernel_quotient(const QuotientHom<K>& phi) {
  std::vector<VecElem<K>> cut = truncate_to_VS(
      phi.graph(),
      SubBasis::components(detail::source_block(phi.source_rank())));
  return GroebnerBasis<K>{phi.algebra(), phi.order(), phi.source_rank(),
                          std::move(cut), true};
}

// Image membership for coset representatives: preimage rep when it exists.
// The verification compares phi(preimage) with eta modulo N2.
template <Field K>
std::optional<VecElem<K>> image_membership_quotient(const QuotientHom<K>& phi,
                                                    const VecElem<K>& eta) {
  if (eta.max_component() >= phi.target_rank())
    throw RankMismatch("element mentions a component outside the target");
  VecElem<K> canon = eta.resorted(phi.order());
  VecElem<K> lifted =
      detail::shift_to_target(canon, phi.source_rank(), phi.order());
  VecElem<K> r =
      normal_form(phi.algebra(), lifted, phi.graph().elems, phi.order())
          .remainder;
  if (r.max_component() >= phi.source_rank()) return std::nullopt;
  VecElem<K> diff = VecElem<K>::sub(phi.eval(r), canon, phi.order());
  if (!member(diff, phi.target_basis()).has_value())
    throw InternalError("quotient preimage failed evaluation modulo N2");
  return r;
}

// Sections with phi(xi_j) = eps_j-bar; verification runs modulo N2.
template <Field K>
std::optional<std::vector<VecElem<K>>> is_surjective_quotient(
    const QuotientHom<K>& phi) {
  auto sections = detail::surjectivity_sections(
      phi.graph(), phi.algebra(), phi.source_rank(), phi.target_rank(),
      phi.order());
  if (!sections) return std::nullopt;
  for (int j = 0; j < phi.target_rank(); ++j) {
    VecElem<K> eps = VecElem<K>::monomial(phi.algebra().one(),
                                          Exponent(phi.algebra().ngens()), j);
    VecElem<K> diff =
        VecElem<K>::sub(phi.eval((*sections)[j]), eps, phi.order());
    if (!member(diff, phi.target_basis()).has_value())
      throw InternalError("surjectivity section failed evaluation modulo N2");
  }
  return sections;
}

}  // namespace solvkit

#endif  // SOLVKIT_HOMS_HPP
