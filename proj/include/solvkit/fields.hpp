// solvkit: exact computer algebra for solvable polynomial algebras.
// Distributed under the Apache License, Version 2.0; see LICENSE.

#ifndef SOLVKIT_FIELDS_HPP
#define SOLVKIT_FIELDS_HPP

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <string>

#include "errors.hpp"

namespace solvkit {

/* ------------------------------------------------------------------ */
/* Rational numbers                                                    */
/* ------------------------------------------------------------------ */

// Arbitrary precision rational. Invariant: lowest terms, positive
// denominator (GMP canonical form), so equality is representation
// equality and printing is canonical.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design for literals
  Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    v_.canonicalize();
  }
  static Rational from_decimal(const std::string& num, const std::string& den) {
    mpq_class q(mpz_class(num, 10), mpz_class(den, 10));
    if (q.get_den() == 0) throw DomainError("rational with zero denominator");
    q.canonicalize();
    Rational r;
    r.v_ = q;
    return r;
  }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Rational operator-() const { return Rational(-v_); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }

  Rational inverse() const {
    if (is_zero()) throw DomainError("inverse of zero");
    Rational r;
    r.v_ = 1 / v_;
    return r;
  }

  // "7", "-3", "5/2", "-1/6".
  std::string str() const { return v_.get_str(); }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

/* ------------------------------------------------------------------ */
/* Prime fields                                                        */
/* ------------------------------------------------------------------ */

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Element of GF(p). Invariant: 0 <= value < p. The modulus travels with
// the element; the default constructed element is the zero of an as yet
// unspecified field and combines with any modulus.
class GFp {
 public:
  GFp() : v_(0), p_(0) {}
  GFp(long long v, long long p) : p_(p) {
    if (p < 2) throw DomainError("GF(p) modulus must be at least 2");
    v_ = v % p;
    if (v_ < 0) v_ += p;
  }
  static GFp from_decimal(const std::string& num, const std::string& den,
                          long long p) {
    mpz_class n(num, 10), d(den, 10), m(std::to_string(p), 10);
    mpz_class nr = n % m, dr = d % m;
    GFp a(nr.get_si(), p), b(dr.get_si(), p);
    return a / b;
  }

  long long value() const { return v_; }
  long long modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  GFp operator-() const {
    GFp r(*this);
    if (r.v_ != 0) r.v_ = r.p_ - r.v_;
    return r;
  }
  friend GFp operator+(const GFp& a, const GFp& b) {
    long long p = merged_mod(a, b);
    if (p == 0) return GFp();
    return GFp(a.v_ + b.v_, p);
  }
  friend GFp operator-(const GFp& a, const GFp& b) {
    long long p = merged_mod(a, b);
    if (p == 0) return GFp();
    return GFp(a.v_ - b.v_, p);
  }
  friend GFp operator*(const GFp& a, const GFp& b) {
    long long p = merged_mod(a, b);
    if (p == 0) return GFp();
    return GFp(a.v_ * b.v_, p);
  }
  friend GFp operator/(const GFp& a, const GFp& b) { return a * b.inverse(); }
  GFp& operator+=(const GFp& o) { return *this = *this + o; }
  GFp& operator-=(const GFp& o) { return *this = *this - o; }
  GFp& operator*=(const GFp& o) { return *this = *this * o; }
  GFp& operator/=(const GFp& o) { return *this = *this / o; }

  friend bool operator==(const GFp& a, const GFp& b) {
    return a.v_ == b.v_ && (a.p_ == b.p_ || a.v_ == 0);
  }
  friend bool operator!=(const GFp& a, const GFp& b) { return !(a == b); }

  GFp inverse() const {
    if (v_ == 0) throw DomainError("inverse of zero");
    // extended Euclid: t*v == 1 (mod p)
    long long t = 0, nt = 1, r = p_, nr = v_;
    while (nr != 0) {
      long long q = r / nr;
      long long tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    return GFp(t, p_);
  }

  // Least nonnegative residue, "0" .. "p-1".
  std::string str() const { return std::to_string(v_); }

 private:
  static long long merged_mod(const GFp& a, const GFp& b) {
    if (a.p_ == 0) return b.p_;
    if (b.p_ == 0) return a.p_;
    if (a.p_ != b.p_) throw DomainError("mixed GF(p) moduli");
    return a.p_;
  }
  long long v_;
  long long p_;
};

/* ------------------------------------------------------------------ */

template <class K>
concept Field = requires(const K a, const K b) {
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.is_one() } -> std::convertible_to<bool>;
  { a + b } -> std::convertible_to<K>;
  { a - b } -> std::convertible_to<K>;
  { a * b } -> std::convertible_to<K>;
  { a / b } -> std::convertible_to<K>;
  { -a } -> std::convertible_to<K>;
  { a.inverse() } -> std::convertible_to<K>;
  { a == b } -> std::convertible_to<bool>;
  { a.str() } -> std::convertible_to<std::string>;
};

static_assert(Field<Rational>);
static_assert(Field<GFp>);

}  // namespace solvkit

#endif  // SOLVKIT_FIELDS_HPP
