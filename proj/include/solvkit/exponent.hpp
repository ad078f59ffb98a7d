// solvkit: exact computer algebra for solvable polynomial algebras.
// Distributed under the Apache License, Version 2.0; see LICENSE.

#ifndef SOLVKIT_EXPONENT_HPP
#define SOLVKIT_EXPONENT_HPP

#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"

namespace solvkit {

// Commutative exponent vector of a PBW monomial a_1^{e_0} ... a_n^{e_{n-1}}.
// Entries are nonnegative; arity is fixed at construction.
class Exponent {
 public:
  Exponent() = default;
  explicit Exponent(std::size_t arity) : e_(arity, 0) {}
  Exponent(std::initializer_list<long long> e) : e_(e) { check_nonneg(); }
  explicit Exponent(std::vector<long long> e) : e_(std::move(e)) { check_nonneg(); }

  // Unit exponent of generator i.
  static Exponent unit(std::size_t arity, std::size_t i) {
    Exponent e(arity);
    e.e_.at(i) = 1;
    return e;
  }

  std::size_t arity() const { return e_.size(); }
  long long operator[](std::size_t i) const { return e_[i]; }
  bool is_zero() const {
    for (long long v : e_)
      if (v != 0) return false;
    return true;
  }

  long long total_degree() const {
    return std::accumulate(e_.begin(), e_.end(), 0LL);
  }
  long long weighted_degree(const std::vector<long long>& w) const {
    require_arity(w.size());
    long long d = 0;
    for (std::size_t i = 0; i < e_.size(); ++i) d += w[i] * e_[i];
    return d;
  }

  Exponent operator+(const Exponent& o) const {
    require_arity(o.arity());
    Exponent r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) {
      r.e_[i] += o.e_[i];
      assert(r.e_[i] >= e_[i] && "exponent overflow");
    }
    return r;
  }
  // Pre: o divides *this.
  Exponent operator-(const Exponent& o) const {
    require_arity(o.arity());
    Exponent r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) {
      r.e_[i] -= o.e_[i];
      if (r.e_[i] < 0) throw DomainError("exponent subtraction went negative");
    }
    return r;
  }
  // Componentwise maximum (the lcm exponent).
  Exponent join(const Exponent& o) const {
    require_arity(o.arity());
    Exponent r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (o.e_[i] > r.e_[i]) r.e_[i] = o.e_[i];
    return r;
  }
  // Componentwise <=: a^{*this} left-divides a^{o} positionwise.
  bool divides(const Exponent& o) const {
    require_arity(o.arity());
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }
  // True when every positive entry sits at an index contained in `keep`
  // (keep is sorted ascending).
  bool supported_on(const std::vector<int>& keep) const {
    std::size_t k = 0;
    for (std::size_t i = 0; i < e_.size(); ++i) {
      while (k < keep.size() && static_cast<std::size_t>(keep[k]) < i) ++k;
      if (e_[i] != 0 &&
          (k >= keep.size() || static_cast<std::size_t>(keep[k]) != i))
        return false;
    }
    return true;
  }

  // Restriction to the positions in `keep` (new arity = keep.size()).
  Exponent restrict(const std::vector<int>& keep) const {
    std::vector<long long> r;
    r.reserve(keep.size());
    for (int i : keep) r.push_back(e_.at(i));
    return Exponent(std::move(r));
  }
  // Scatter into a larger arity, placing entry k at position keep[k].
  Exponent scatter(std::size_t arity, const std::vector<int>& keep) const {
    require_arity(keep.size());
    Exponent r(arity);
    for (std::size_t k = 0; k < keep.size(); ++k) r.e_.at(keep[k]) = e_[k];
    return r;
  }
  // Drop the last slot (projection A[t] -> A on the t-degree-0 slice).
  Exponent drop_last() const {
    assert(!e_.empty());
    return Exponent(std::vector<long long>(e_.begin(), e_.end() - 1));
  }
  // Append one slot (embedding A -> A[t]).
  Exponent append(long long v) const {
    Exponent r(*this);
    r.e_.push_back(v);
    if (v < 0) throw DomainError("negative exponent entry");
    return r;
  }

  // PBW word: generator indices ascending, each repeated by its entry.
  std::vector<int> word() const {
    std::vector<int> w;
    for (std::size_t i = 0; i < e_.size(); ++i)
      for (long long k = 0; k < e_[i]; ++k) w.push_back(static_cast<int>(i));
    return w;
  }
  static Exponent from_word(std::size_t arity, const std::vector<int>& w) {
    Exponent e(arity);
    for (int g : w) e.e_.at(g) += 1;
    return e;
  }

  friend bool operator==(const Exponent& a, const Exponent& b) {
    return a.e_ == b.e_;
  }
  friend bool operator!=(const Exponent& a, const Exponent& b) {
    return a.e_ != b.e_;
  }
  // Container ordering only (maps and dedup); not a monomial ordering.
  friend bool operator<(const Exponent& a, const Exponent& b) {
    return a.e_ < b.e_;
  }

  void require_arity(std::size_t n) const {
    if (e_.size() != n)
      throw ArityMismatch("exponent arity " + std::to_string(e_.size()) +
                          " where " + std::to_string(n) + " expected");
  }

 private:
  void check_nonneg() const {
    for (long long v : e_)
      if (v < 0) throw DomainError("negative exponent entry");
  }
  std::vector<long long> e_;
};

}  // namespace solvkit

#endif  // SOLVKIT_EXPONENT_HPP
