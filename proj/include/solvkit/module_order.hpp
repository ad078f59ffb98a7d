// solvkit: exact computer algebra for solvable polynomial algebras.
// Distributed under the Apache License, Version 2.0; see LICENSE.

#ifndef SOLVKIT_MODULE_ORDER_HPP
#define SOLVKIT_MODULE_ORDER_HPP

#include <memory>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "exponent.hpp"
#include "order.hpp"

namespace solvkit {

// Monomial ordering on the free-module basis {a^alpha e_i}. Components are
// 0-based internally; smaller component index means smaller basis vector
// wherever position participates in a comparison.
class ModuleOrder {
 public:
  enum class Kind {
    top,             // exponent first under base, tie smaller component
    pot,             // component first, tie exponent under base
    graded,          // weighted degree + per-component shift, explicit tie
    schreyer,        // compare LM(a^alpha g_i) under a captured order, tie index
    pot_prefix,      // kept components lowest (in listed order), then POT
    direct_sum_elim, // eps block always below e block
    t_elim           // t-degree dominates, tie inner module order
  };

  static ModuleOrder top(MonomialOrder base) {
    Node n;
    n.kind = Kind::top;
    n.scalar = std::make_shared<MonomialOrder>(std::move(base));
    return ModuleOrder(std::move(n));
  }
  static ModuleOrder pot(MonomialOrder base) {
    Node n;
    n.kind = Kind::pot;
    n.scalar = std::make_shared<MonomialOrder>(std::move(base));
    return ModuleOrder(std::move(n));
  }
  static ModuleOrder graded(std::vector<long long> weights,
                            std::vector<long long> shifts, ModuleOrder tie) {
    if (static_cast<int>(weights.size()) != tie.arity())
      throw DomainError("graded module order: weight arity mismatch");
    for (long long w : weights)
      if (w <= 0) throw DomainError("graded module order requires positive weights");
    Node n;
    n.kind = Kind::graded;
    n.weights = std::move(weights);
    n.shifts = std::move(shifts);
    n.a = tie.n_;
    return ModuleOrder(std::move(n));
  }
  // Reference leading monomials are captured by value; later changes to the
  // basis they came from cannot affect comparisons.
  static ModuleOrder schreyer(ModuleOrder under,
                              std::vector<std::pair<Exponent, int>> ref_lm) {
    if (ref_lm.empty()) throw DomainError("Schreyer order over empty reference list");
    for (const auto& [e, c] : ref_lm) {
      e.require_arity(under.arity());
      if (c < 0) throw RankMismatch("negative component in Schreyer reference");
    }
    Node n;
    n.kind = Kind::schreyer;
    n.a = under.n_;
    n.ref = std::move(ref_lm);
    return ModuleOrder(std::move(n));
  }
  static ModuleOrder pot_prefix(MonomialOrder base, std::vector<int> kept) {
    if (kept.empty()) throw DomainError("empty component subset");
    Node n;
    n.kind = Kind::pot_prefix;
    n.scalar = std::make_shared<MonomialOrder>(std::move(base));
    n.idx = std::move(kept);
    return ModuleOrder(std::move(n));
  }
  static ModuleOrder direct_sum_elim(int e_rank, ModuleOrder ord_e,
                                     ModuleOrder ord_eps) {
    if (e_rank <= 0) throw DomainError("direct sum elimination needs e-rank > 0");
    if (ord_e.arity() != ord_eps.arity())
      throw DomainError("direct sum block orders have different arities");
    Node n;
    n.kind = Kind::direct_sum_elim;
    n.split = e_rank;
    n.a = ord_e.n_;
    n.b = ord_eps.n_;
    return ModuleOrder(std::move(n));
  }
  static ModuleOrder t_elim(ModuleOrder inner) {
    Node n;
    n.kind = Kind::t_elim;
    n.a = inner.n_;
    return ModuleOrder(std::move(n));
  }

  Kind kind() const { return n_->kind; }

  // Arity of the exponents this order compares.
  int arity() const {
    switch (n_->kind) {
      case Kind::top:
      case Kind::pot:
      case Kind::pot_prefix:
        return n_->scalar->arity();
      case Kind::graded:
        return static_cast<int>(n_->weights.size());
      case Kind::schreyer:
      case Kind::direct_sum_elim:
        return ModuleOrder(n_->a).arity();
      case Kind::t_elim:
        return ModuleOrder(n_->a).arity() + 1;
    }
    throw InternalError("unreachable module order kind");
  }

  Cmp compare(const Exponent& ae, int ac, const Exponent& be, int bc) const {
    if (ac < 0 || bc < 0) throw RankMismatch("negative component");
    return cmp(*n_, ae, ac, be, bc);
  }
  bool less(const Exponent& ae, int ac, const Exponent& be, int bc) const {
    return compare(ae, ac, be, bc) == Cmp::less;
  }

  // Structural accessors for truncation prechecks.
  const MonomialOrder& scalar_base() const { return *n_->scalar; }
  const std::vector<int>& kept_components() const { return n_->idx; }
  ModuleOrder sub_a() const { return ModuleOrder(n_->a); }
  int split() const { return n_->split; }

 private:
  struct Node {
    Kind kind;
    std::shared_ptr<MonomialOrder> scalar;  // top/pot/pot_prefix
    std::vector<long long> weights, shifts;
    std::vector<int> idx;  // pot_prefix kept components, in elimination order
    std::vector<std::pair<Exponent, int>> ref;
    std::shared_ptr<const Node> a, b;
    int split = 0;
  };

  explicit ModuleOrder(Node n) : n_(std::make_shared<const Node>(std::move(n))) {}
  explicit ModuleOrder(std::shared_ptr<const Node> n) : n_(std::move(n)) {}

  static Cmp cmp(const Node& n, const Exponent& ae, int ac, const Exponent& be,
                 int bc) {
    switch (n.kind) {
      case Kind::top: {
        Cmp c = n.scalar->compare(ae, be);
        if (c != Cmp::equal) return c;
        return cmp_ll(ac, bc);
      }
      case Kind::pot: {
        Cmp c = cmp_ll(ac, bc);
        if (c != Cmp::equal) return c;
        return n.scalar->compare(ae, be);
      }
      case Kind::graded: {
        if (ac >= static_cast<int>(n.shifts.size()) ||
            bc >= static_cast<int>(n.shifts.size()))
          throw RankMismatch("component outside graded shift table");
        Cmp c = cmp_ll(ae.weighted_degree(n.weights) + n.shifts[ac],
                       be.weighted_degree(n.weights) + n.shifts[bc]);
        if (c != Cmp::equal) return c;
        return cmp(*n.a, ae, ac, be, bc);
      }
      case Kind::schreyer: {
        if (ac >= static_cast<int>(n.ref.size()) ||
            bc >= static_cast<int>(n.ref.size()))
          throw RankMismatch("component outside Schreyer reference list");
        // LM(a^alpha g_i) = a^{alpha+lm_i} e_{c_i} by LM multiplicativity.
        Cmp c = cmp(*n.a, ae + n.ref[ac].first, n.ref[ac].second,
                    be + n.ref[bc].first, n.ref[bc].second);
        if (c != Cmp::equal) return c;
        return cmp_ll(ac, bc);
      }
      case Kind::pot_prefix: {
        Cmp c = cmp_ll(cls(n.idx, ac), cls(n.idx, bc));
        if (c != Cmp::equal) return c;
        return n.scalar->compare(ae, be);
      }
      case Kind::direct_sum_elim: {
        bool a_eps = ac >= n.split, b_eps = bc >= n.split;
        if (a_eps != b_eps) return a_eps ? Cmp::less : Cmp::greater;
        if (a_eps) return cmp(*n.b, ae, ac - n.split, be, bc - n.split);
        return cmp(*n.a, ae, ac, be, bc);
      }
      case Kind::t_elim: {
        Cmp c = cmp_ll(ae[ae.arity() - 1], be[be.arity() - 1]);
        if (c != Cmp::equal) return c;
        return cmp(*n.a, ae.drop_last(), ac, be.drop_last(), bc);
      }
    }
    throw InternalError("unreachable module order kind");
  }

  // Kept components rank below everything else, in their listed order.
  static long long cls(const std::vector<int>& kept, int c) {
    for (std::size_t k = 0; k < kept.size(); ++k)
      if (kept[k] == c) return static_cast<long long>(k);
    return static_cast<long long>(kept.size()) + c;
  }

  std::shared_ptr<const Node> n_;
};

}  // namespace solvkit

#endif  // SOLVKIT_MODULE_ORDER_HPP
