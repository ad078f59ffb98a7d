// solvkit: exact computer algebra for solvable polynomial algebras.
// Distributed under the Apache License, Version 2.0; see LICENSE.

#ifndef SOLVKIT_ORDER_HPP
#define SOLVKIT_ORDER_HPP

#include <algorithm>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "exponent.hpp"

namespace solvkit {

enum class Cmp { less = -1, equal = 0, greater = 1 };

inline Cmp cmp_ll(long long a, long long b) {
  if (a < b) return Cmp::less;
  if (a > b) return Cmp::greater;
  return Cmp::equal;
}
inline Cmp flip(Cmp c) {
  return c == Cmp::less ? Cmp::greater : (c == Cmp::greater ? Cmp::less : Cmp::equal);
}

// Monomial ordering on exponents of a fixed arity. Immutable value; the
// closed set of variants covers every ordering the engine constructs.
// All variants are admissible: total, multiplicative, with the zero
// exponent as minimum (weights are validated positive where that is
// load-bearing).
class MonomialOrder {
 public:
  enum class Kind {
    lex,          // priority permutation, first listed generator largest
    deglex,       // weighted degree, tie lex
    degrevlex,    // weighted degree, tie reverse-lex
    weighted,     // weighted degree, explicit tie order
    elim_block,   // complement block under `outside`, then U block under `inside`
    t_extension,  // last slot (t) dominates, tie `inside` on the first n slots
    product,      // left block under `outside`, tie right block under `inside`
    restriction   // scatter into parent arity, compare under `outside`
  };

  static MonomialOrder lex(std::vector<int> priority) {
    require_permutation(priority);
    Node n;
    n.kind = Kind::lex;
    n.arity = static_cast<int>(priority.size());
    n.idx = std::move(priority);
    return MonomialOrder(std::move(n));
  }
  static MonomialOrder deglex(std::vector<long long> weights,
                              std::vector<int> tie_priority) {
    require_permutation(tie_priority);
    if (weights.size() != tie_priority.size())
      throw DomainError("deglex weights and tie arity differ");
    require_positive(weights);
    Node n;
    n.kind = Kind::deglex;
    n.arity = static_cast<int>(weights.size());
    n.weights = std::move(weights);
    n.idx = std::move(tie_priority);
    return MonomialOrder(std::move(n));
  }
  // Unit weights, natural generator priority a_1 > ... > a_n.
  static MonomialOrder deglex(std::size_t arity) {
    return deglex(std::vector<long long>(arity, 1), iota(arity));
  }
  static MonomialOrder degrevlex(std::vector<long long> weights) {
    require_positive(weights);
    Node n;
    n.kind = Kind::degrevlex;
    n.arity = static_cast<int>(weights.size());
    n.weights = std::move(weights);
    return MonomialOrder(std::move(n));
  }
  static MonomialOrder degrevlex(std::size_t arity) {
    return degrevlex(std::vector<long long>(arity, 1));
  }
  static MonomialOrder lex(std::size_t arity) { return lex(iota(arity)); }
  static MonomialOrder weighted(std::vector<long long> weights,
                                MonomialOrder tie) {
    if (static_cast<int>(weights.size()) != tie.arity())
      throw DomainError("weight vector arity differs from tie order");
    for (long long w : weights)
      if (w < 0) throw DomainError("weighted order requires nonnegative weights");
    Node n;
    n.kind = Kind::weighted;
    n.arity = tie.arity();
    n.weights = std::move(weights);
    n.a = tie.n_;
    return MonomialOrder(std::move(n));
  }
  static MonomialOrder elim_block(MonomialOrder outside, MonomialOrder inside,
                                  std::vector<int> keep) {
    if (outside.arity() != inside.arity())
      throw DomainError("elimination block orders have different arities");
    require_subset(keep, outside.arity(), /*proper=*/true);
    Node n;
    n.kind = Kind::elim_block;
    n.arity = outside.arity();
    n.idx = std::move(keep);
    n.a = outside.n_;
    n.b = inside.n_;
    return MonomialOrder(std::move(n));
  }
  static MonomialOrder t_extension(MonomialOrder inner) {
    Node n;
    n.kind = Kind::t_extension;
    n.arity = inner.arity() + 1;
    n.a = inner.n_;
    return MonomialOrder(std::move(n));
  }
  static MonomialOrder product(MonomialOrder left, MonomialOrder right) {
    Node n;
    n.kind = Kind::product;
    n.arity = left.arity() + right.arity();
    n.a = left.n_;
    n.b = right.n_;
    return MonomialOrder(std::move(n));
  }
  // The parent ordering restricted to monomials supported on `keep`,
  // reindexed to arity keep.size(). Admissible because the scatter map is
  // an additive embedding.
  static MonomialOrder restriction(MonomialOrder parent, std::vector<int> keep) {
    require_subset(keep, parent.arity(), /*proper=*/false);
    Node n;
    n.kind = Kind::restriction;
    n.arity = static_cast<int>(keep.size());
    n.idx = std::move(keep);
    n.a = parent.n_;
    return MonomialOrder(std::move(n));
  }

  Kind kind() const { return n_->kind; }
  int arity() const { return n_->arity; }

  Cmp compare(const Exponent& a, const Exponent& b) const {
    a.require_arity(n_->arity);
    b.require_arity(n_->arity);
    return cmp(*n_, a, b);
  }
  bool less(const Exponent& a, const Exponent& b) const {
    return compare(a, b) == Cmp::less;
  }

  // True for orderings graded by total degree with unit weights; the GK
  // dimension bound is exact only in that regime.
  bool graded_unit_weights() const {
    if (n_->kind != Kind::deglex && n_->kind != Kind::degrevlex &&
        n_->kind != Kind::weighted)
      return false;
    return std::all_of(n_->weights.begin(), n_->weights.end(),
                       [](long long w) { return w == 1; });
  }

  // Structural accessors used by truncation prechecks.
  const std::vector<int>& block_keep() const { return n_->idx; }
  MonomialOrder sub_a() const { return MonomialOrder(n_->a); }
  MonomialOrder sub_b() const { return MonomialOrder(n_->b); }

  friend bool operator==(const MonomialOrder& x, const MonomialOrder& y) {
    return same(*x.n_, *y.n_);
  }

 private:
  struct Node {
    Kind kind;
    int arity = 0;
    std::vector<long long> weights;
    std::vector<int> idx;  // lex priority / elim keep / restriction keep
    std::shared_ptr<const Node> a, b;
  };

  explicit MonomialOrder(Node n) : n_(std::make_shared<const Node>(std::move(n))) {}
  explicit MonomialOrder(std::shared_ptr<const Node> n) : n_(std::move(n)) {}

  static std::vector<int> iota(std::size_t n) {
    std::vector<int> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(i);
    return v;
  }
  static void require_permutation(const std::vector<int>& p) {
    std::vector<int> s(p);
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i < s.size(); ++i)
      if (s[i] != static_cast<int>(i))
        throw DomainError("priority list is not a permutation");
    if (p.empty()) throw DomainError("empty priority list");
  }
  static void require_positive(const std::vector<long long>& w) {
    for (long long x : w)
      if (x <= 0) throw DomainError("graded order requires positive weights");
  }
  static void require_subset(std::vector<int>& keep, int arity, bool proper) {
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    if (keep.empty()) throw DomainError("empty generator subset");
    if (keep.front() < 0 || keep.back() >= arity)
      throw DomainError("generator subset out of range");
    if (proper && static_cast<int>(keep.size()) == arity)
      throw DomainError("generator subset must be proper");
  }

  static Cmp cmp(const Node& n, const Exponent& a, const Exponent& b) {
    switch (n.kind) {
      case Kind::lex:
        for (int p : n.idx) {
          Cmp c = cmp_ll(a[p], b[p]);
          if (c != Cmp::equal) return c;
        }
        return Cmp::equal;
      case Kind::deglex: {
        Cmp c = cmp_ll(a.weighted_degree(n.weights), b.weighted_degree(n.weights));
        if (c != Cmp::equal) return c;
        for (int p : n.idx) {
          c = cmp_ll(a[p], b[p]);
          if (c != Cmp::equal) return c;
        }
        return Cmp::equal;
      }
      case Kind::degrevlex: {
        Cmp c = cmp_ll(a.weighted_degree(n.weights), b.weighted_degree(n.weights));
        if (c != Cmp::equal) return c;
        // ties: last differing slot, larger entry means smaller monomial
        for (int i = n.arity - 1; i >= 0; --i) {
          c = cmp_ll(a[i], b[i]);
          if (c != Cmp::equal) return flip(c);
        }
        return Cmp::equal;
      }
      case Kind::weighted: {
        Cmp c = cmp_ll(a.weighted_degree(n.weights), b.weighted_degree(n.weights));
        if (c != Cmp::equal) return c;
        return cmp(*n.a, a, b);
      }
      case Kind::elim_block: {
        Cmp c = cmp(*n.a, mask_out(a, n.idx), mask_out(b, n.idx));
        if (c != Cmp::equal) return c;
        return cmp(*n.b, mask_in(a, n.idx), mask_in(b, n.idx));
      }
      case Kind::t_extension: {
        Cmp c = cmp_ll(a[n.arity - 1], b[n.arity - 1]);
        if (c != Cmp::equal) return c;
        return cmp(*n.a, a.drop_last(), b.drop_last());
      }
      case Kind::product: {
        int nl = n.a->arity;
        std::vector<int> left = range(0, nl), right = range(nl, n.arity);
        Cmp c = cmp(*n.a, a.restrict(left), b.restrict(left));
        if (c != Cmp::equal) return c;
        return cmp(*n.b, a.restrict(right), b.restrict(right));
      }
      case Kind::restriction:
        return cmp(*n.a, a.scatter(n.a->arity, n.idx), b.scatter(n.a->arity, n.idx));
    }
    throw InternalError("unreachable ordering kind");
  }

  static std::vector<int> range(int lo, int hi) {
    std::vector<int> v;
    for (int i = lo; i < hi; ++i) v.push_back(i);
    return v;
  }
  // Zero the kept slots (complement-block sub-exponent, padded).
  static Exponent mask_out(const Exponent& e, const std::vector<int>& keep) {
    std::vector<long long> v(e.arity());
    std::size_t k = 0;
    for (std::size_t i = 0; i < e.arity(); ++i) {
      while (k < keep.size() && static_cast<std::size_t>(keep[k]) < i) ++k;
      bool kept = k < keep.size() && static_cast<std::size_t>(keep[k]) == i;
      v[i] = kept ? 0 : e[i];
    }
    return Exponent(std::move(v));
  }
  // Zero the complement slots (U-block sub-exponent, padded).
  static Exponent mask_in(const Exponent& e, const std::vector<int>& keep) {
    std::vector<long long> v(e.arity(), 0);
    for (int i : keep) v[i] = e[i];
    return Exponent(std::move(v));
  }

  static bool same(const Node& x, const Node& y) {
    if (x.kind != y.kind || x.arity != y.arity || x.weights != y.weights ||
        x.idx != y.idx)
      return false;
    if (!x.a != !y.a || !x.b != !y.b) return false;
    if (x.a && !same(*x.a, *y.a)) return false;
    if (x.b && !same(*x.b, *y.b)) return false;
    return true;
  }

  std::shared_ptr<const Node> n_;
};

// Prop 2.2 block construction: an elimination ordering with respect to the
// monomials supported on U, whose restriction to those monomials is `base`.
inline MonomialOrder elim_order(const MonomialOrder& base, std::vector<int> keep) {
  return MonomialOrder::elim_block(base, base, std::move(keep));
}

}  // namespace solvkit

#endif  // SOLVKIT_ORDER_HPP
