// solvkit: exact computer algebra for solvable polynomial algebras.
// Distributed under the Apache License, Version 2.0; see LICENSE.

#ifndef SOLVKIT_ALGEBRA_HPP
#define SOLVKIT_ALGEBRA_HPP

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "exponent.hpp"
#include "fields.hpp"
#include "module_order.hpp"
#include "order.hpp"
#include "poly.hpp"

namespace solvkit {

// One rewrite rule a_j a_i = lambda a_i a_j + f for a pair j > i.
template <Field K>
struct Relation {
  K lambda;
  Poly<K> f;
};

template <Field K>
class RelationTable {
 public:
  RelationTable() = default;
  explicit RelationTable(int ngens) : n_(ngens) {}

  int ngens() const { return n_; }

  void set(int j, int i, K lambda, Poly<K> f) {
    if (!(0 <= i && i < j && j < n_))
      throw DomainError("relation indices must satisfy 0 <= i < j < n");
    rel_[{j, i}] = Relation<K>{std::move(lambda), std::move(f)};
  }
  bool has(int j, int i) const { return rel_.count({j, i}) != 0; }
  const Relation<K>& at(int j, int i) const {
    auto it = rel_.find({j, i});
    if (it == rel_.end()) throw DomainError("missing relation pair");
    return it->second;
  }

 private:
  int n_ = 0;
  std::map<std::pair<int, int>, Relation<K>> rel_;
};

template <Field K>
struct AlgebraDef {
  std::vector<std::string> names;
  K one;  // multiplicative unit of the coefficient field
  MonomialOrder order;
  RelationTable<K> relations;
};

enum class ValidationErrorKind {
  incomplete_relation_table,
  zero_lambda,
  leading_monomial_not_smaller,
  overlap_inconsistent
};

template <Field K>
struct ValidationError {
  ValidationErrorKind kind;
  int i = -1, j = -1, k = -1;
  // Overlap case: the two disagreeing normal forms of (a_k a_j) a_i and
  // a_k (a_j a_i).
  Poly<K> left_nf, right_nf;
};

namespace detail {

// PBW normal form of a sum of coefficiented generator words, by repeatedly
// replacing the leftmost adjacent inversion a_j a_i (j > i) through the
// relation table. Terminates for tables satisfying condition (S): the swap
// keeps the commutative exponent and lowers the inversion count, and every
// f-term strictly lowers the exponent under the (well-)ordering.
template <Field K>
std::map<Exponent, K> normalize_words(const RelationTable<K>& table, int ngens,
                                      std::map<std::vector<int>, K> work) {
  std::map<Exponent, K> done;
  auto push = [](std::map<std::vector<int>, K>& m, std::vector<int> w, K c) {
    auto [it, fresh] = m.emplace(std::move(w), c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) m.erase(it);
    }
  };
  while (!work.empty()) {
    auto it = work.begin();
    std::vector<int> w = it->first;
    K c = it->second;
    work.erase(it);

    std::size_t k = 0;
    while (k + 1 < w.size() && w[k] <= w[k + 1]) ++k;
    if (k + 1 >= w.size()) {
      Exponent m = Exponent::from_word(ngens, w);
      auto [dit, fresh] = done.emplace(std::move(m), c);
      if (!fresh) {
        dit->second += c;
        if (dit->second.is_zero()) done.erase(dit);
      }
      continue;
    }

    const Relation<K>& rel = table.at(w[k], w[k + 1]);
    std::vector<int> swapped(w);
    std::swap(swapped[k], swapped[k + 1]);
    push(work, std::move(swapped), c * rel.lambda);
    for (const auto& t : rel.f.terms()) {
      std::vector<int> spliced(w.begin(), w.begin() + k);
      std::vector<int> mid = t.m.word();
      spliced.insert(spliced.end(), mid.begin(), mid.end());
      spliced.insert(spliced.end(), w.begin() + k + 2, w.end());
      push(work, std::move(spliced), c * t.c);
    }
  }
  return done;
}

template <Field K>
Poly<K> poly_of_map(std::map<Exponent, K> m, const MonomialOrder& ord) {
  std::vector<Term<K>> ts;
  ts.reserve(m.size());
  for (auto& [e, c] : m) ts.push_back({std::move(c), e});
  return Poly<K>::from_terms(std::move(ts), ord);
}

}  // namespace detail

// A solvable polynomial algebra whose presentation passed validation. The
// only way to obtain one is validate_algebra (or the extension/tensor
// constructors, which re-run it). Immutable; cheap to copy.
template <Field K>
class ValidatedAlgebra {
 public:
  int ngens() const { return static_cast<int>(c_->def.names.size()); }
  const std::vector<std::string>& names() const { return c_->def.names; }
  const std::string& name(int i) const { return c_->def.names.at(i); }
  const MonomialOrder& order() const { return c_->def.order; }
  const K& one() const { return c_->def.one; }
  K zero() const { return c_->def.one - c_->def.one; }
  const RelationTable<K>& relations() const { return c_->def.relations; }
  const AlgebraDef<K>& def() const { return c_->def; }

  // Every f_ji has total degree at most 2.
  bool quadric() const { return c_->quadric; }
  bool graded_unit_order() const { return c_->def.order.graded_unit_weights(); }

  Poly<K> unit_poly() const {
    return Poly<K>::monomial(one(), Exponent(ngens()));
  }
  Poly<K> gen(int i) const {
    return Poly<K>::monomial(one(), Exponent::unit(ngens(), i));
  }
  Poly<K> monomial(K c, Exponent m) const {
    m.require_arity(ngens());
    return Poly<K>::monomial(std::move(c), std::move(m));
  }

  Poly<K> mul_mono(const Exponent& alpha, const Exponent& beta,
                   const MonomialOrder& out) const {
    alpha.require_arity(ngens());
    beta.require_arity(ngens());
    std::vector<int> w = alpha.word();
    std::vector<int> wb = beta.word();
    w.insert(w.end(), wb.begin(), wb.end());
    std::map<std::vector<int>, K> seed;
    seed.emplace(std::move(w), one());
    return detail::poly_of_map(
        detail::normalize_words(c_->def.relations, ngens(), std::move(seed)), out);
  }
  Poly<K> mul_mono(const Exponent& alpha, const Exponent& beta) const {
    return mul_mono(alpha, beta, order());
  }

  Poly<K> mul(const Poly<K>& f, const Poly<K>& g, const MonomialOrder& out) const {
    std::map<std::vector<int>, K> seed;
    for (const auto& ft : f.terms()) {
      std::vector<int> wf = ft.m.word();
      for (const auto& gt : g.terms()) {
        std::vector<int> w = wf;
        std::vector<int> wg = gt.m.word();
        w.insert(w.end(), wg.begin(), wg.end());
        K c = ft.c * gt.c;
        auto [it, fresh] = seed.emplace(std::move(w), c);
        if (!fresh) {
          it->second += c;
          if (it->second.is_zero()) seed.erase(it);
        }
      }
    }
    return detail::poly_of_map(
        detail::normalize_words(c_->def.relations, ngens(), std::move(seed)), out);
  }
  Poly<K> mul(const Poly<K>& f, const Poly<K>& g) const {
    return mul(f, g, order());
  }

  // Left action on a free-module element, componentwise.
  VecElem<K> mul(const Poly<K>& f, const VecElem<K>& v,
                 const ModuleOrder& out) const {
    std::vector<VTerm<K>> ts;
    for (int comp : v.components_present()) {
      std::vector<Term<K>> part;
      for (const auto& t : v.terms())
        if (t.comp == comp) part.push_back({t.c, t.m});
      Poly<K> pc = Poly<K>::from_terms(std::move(part), order());
      Poly<K> prod = mul(f, pc, order());
      for (const auto& t : prod.terms()) ts.push_back({t.c, t.m, comp});
    }
    return VecElem<K>::from_terms(std::move(ts), out);
  }

  Poly<K> add(const Poly<K>& f, const Poly<K>& g) const {
    return Poly<K>::add(f, g, order());
  }
  Poly<K> sub(const Poly<K>& f, const Poly<K>& g) const {
    return Poly<K>::sub(f, g, order());
  }

 private:
  struct Core {
    AlgebraDef<K> def;
    bool quadric;
  };
  explicit ValidatedAlgebra(std::shared_ptr<const Core> c) : c_(std::move(c)) {}

  template <Field K2>
  friend std::variant<ValidatedAlgebra<K2>, ValidationError<K2>> validate_algebra(
      AlgebraDef<K2> def);

  std::shared_ptr<const Core> c_;
};

template <Field K>
using ValidationResult = std::variant<ValidatedAlgebra<K>, ValidationError<K>>;

// Checks condition (S) pairwise (lambda nonzero, leading-monomial descent)
// and generator-triple overlap confluence, the finite stand-in for the
// presentation being a Groebner presentation: all rules have two-letter
// left-hand sides, so triple overlaps are the only critical pairs.
template <Field K>
ValidationResult<K> validate_algebra(AlgebraDef<K> def) {
  const int n = static_cast<int>(def.names.size());
  if (n == 0) throw DomainError("algebra needs at least one generator");
  if (def.order.arity() != n)
    throw ArityMismatch("ordering arity differs from generator count");
  if (def.relations.ngens() != n)
    throw ArityMismatch("relation table arity differs from generator count");
  for (int i = 0; i < n; ++i) {
    if (def.names[i].empty()) throw DomainError("empty generator name");
    for (int j = i + 1; j < n; ++j)
      if (def.names[i] == def.names[j])
        throw DomainError("duplicate generator name " + def.names[i]);
  }

  // Pair conditions, scanned in a fixed order so the first failure is
  // deterministic.
  RelationTable<K> canon(n);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      if (!def.relations.has(j, i))
        return ValidationError<K>{ValidationErrorKind::incomplete_relation_table,
                                  i, j, -1, {}, {}};
      const Relation<K>& r = def.relations.at(j, i);
      if (r.lambda.is_zero())
        return ValidationError<K>{ValidationErrorKind::zero_lambda, i, j, -1, {}, {}};
      Poly<K> f = r.f.resorted(def.order);
      if (!f.is_zero()) {
        Exponent eij = Exponent::unit(n, i) + Exponent::unit(n, j);
        if (def.order.compare(f.lm(), eij) != Cmp::less)
          return ValidationError<K>{
              ValidationErrorKind::leading_monomial_not_smaller, i, j, -1, {}, {}};
      }
      canon.set(j, i, r.lambda, std::move(f));
    }
  def.relations = std::move(canon);

  bool quadric = true;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (def.relations.at(j, i).f.max_total_degree() > 2) quadric = false;

  // Triple overlaps. Rewriting terminates here because the pair conditions
  // above already hold.
  auto rel_rhs = [&](int j, int i) {
    const Relation<K>& r = def.relations.at(j, i);
    Exponent eij = Exponent::unit(n, i) + Exponent::unit(n, j);
    return Poly<K>::add(Poly<K>::monomial(r.lambda, eij), r.f, def.order);
  };
  auto word_product = [&](const Poly<K>& f, const Poly<K>& g) {
    std::map<std::vector<int>, K> seed;
    for (const auto& ft : f.terms())
      for (const auto& gt : g.terms()) {
        std::vector<int> w = ft.m.word();
        std::vector<int> wg = gt.m.word();
        w.insert(w.end(), wg.begin(), wg.end());
        K c = ft.c * gt.c;
        auto [it, fresh] = seed.emplace(std::move(w), c);
        if (!fresh) {
          it->second += c;
          if (it->second.is_zero()) seed.erase(it);
        }
      }
    return detail::poly_of_map(
        detail::normalize_words(def.relations, n, std::move(seed)), def.order);
  };
  for (int k = 2; k < n; ++k)
    for (int j = 1; j < k; ++j)
      for (int i = 0; i < j; ++i) {
        Poly<K> gi = Poly<K>::monomial(def.one, Exponent::unit(n, i));
        Poly<K> gk = Poly<K>::monomial(def.one, Exponent::unit(n, k));
        Poly<K> left = word_product(rel_rhs(k, j), gi);   // (a_k a_j) a_i
        Poly<K> right = word_product(gk, rel_rhs(j, i));  // a_k (a_j a_i)
        if (left != right)
          return ValidationError<K>{ValidationErrorKind::overlap_inconsistent,
                                    i, j, k, std::move(left), std::move(right)};
      }

  using Core = typename ValidatedAlgebra<K>::Core;
  auto core = std::make_shared<Core>(Core{std::move(def), quadric});
  return ValidatedAlgebra<K>(std::move(core));
}

// A[t]: one central generator appended, ordering extended so the t-degree
// dominates (Prop 1.4 shape). Revalidates, which must succeed.
template <Field K>
ValidatedAlgebra<K> extend_with_t(const ValidatedAlgebra<K>& A,
                                  const std::string& t_name = "t") {
  const int n = A.ngens();
  std::string tn = t_name;
  for (bool clash = true; clash;) {
    clash = false;
    for (const auto& nm : A.names())
      if (nm == tn) {
        tn += "'";
        clash = true;
      }
  }
  AlgebraDef<K> def{A.names(), A.one(),
                    MonomialOrder::t_extension(A.order()), RelationTable<K>(n + 1)};
  def.names.push_back(tn);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      const Relation<K>& r = A.relations().at(j, i);
      std::vector<Term<K>> ts;
      for (const auto& t : r.f.terms()) ts.push_back({t.c, t.m.append(0)});
      def.relations.set(j, i, r.lambda,
                        Poly<K>::from_terms(std::move(ts), def.order));
    }
  for (int i = 0; i < n; ++i) def.relations.set(n, i, A.one(), Poly<K>{});

  auto res = validate_algebra(std::move(def));
  if (auto* ok = std::get_if<ValidatedAlgebra<K>>(&res)) return *ok;
  throw InternalError("central extension failed validation");
}

// A1 (x) A2 with cross-block generators commuting and the product ordering
// (Prop 1.5 shape). Revalidates, which must succeed.
template <Field K>
ValidatedAlgebra<K> tensor(const ValidatedAlgebra<K>& A1,
                           const ValidatedAlgebra<K>& A2) {
  if (!(A1.one() == A2.one())) throw DomainError("tensor over different fields");
  const int n1 = A1.ngens(), n2 = A2.ngens();
  AlgebraDef<K> def{A1.names(), A1.one(),
                    MonomialOrder::product(A1.order(), A2.order()),
                    RelationTable<K>(n1 + n2)};
  for (const auto& nm : A2.names()) {
    std::string cand = nm;
    for (bool clash = true; clash;) {
      clash = false;
      for (const auto& ex : def.names)
        if (ex == cand) {
          cand += "'";
          clash = true;
        }
    }
    def.names.push_back(cand);
  }
  std::vector<int> left_slots(n1), right_slots(n2);
  for (int i = 0; i < n1; ++i) left_slots[i] = i;
  for (int i = 0; i < n2; ++i) right_slots[i] = n1 + i;
  auto lift = [&](const Poly<K>& f, const std::vector<int>& slots) {
    std::vector<Term<K>> ts;
    for (const auto& t : f.terms())
      ts.push_back({t.c, t.m.scatter(n1 + n2, slots)});
    return Poly<K>::from_terms(std::move(ts), def.order);
  };
  for (int j = 1; j < n1; ++j)
    for (int i = 0; i < j; ++i) {
      const Relation<K>& r = A1.relations().at(j, i);
      def.relations.set(j, i, r.lambda, lift(r.f, left_slots));
    }
  for (int j = 1; j < n2; ++j)
    for (int i = 0; i < j; ++i) {
      const Relation<K>& r = A2.relations().at(j, i);
      def.relations.set(n1 + j, n1 + i, r.lambda, lift(r.f, right_slots));
    }
  for (int j = 0; j < n2; ++j)
    for (int i = 0; i < n1; ++i)
      def.relations.set(n1 + j, i, A1.one(), Poly<K>{});

  auto res = validate_algebra(std::move(def));
  if (auto* ok = std::get_if<ValidatedAlgebra<K>>(&res)) return *ok;
  throw InternalError("tensor product failed validation");
}

}  // namespace solvkit

#endif  // SOLVKIT_ALGEBRA_HPP
