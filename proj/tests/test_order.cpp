#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include <solvkit/exponent.hpp>
#include <solvkit/order.hpp>

using solvkit::Cmp;
using solvkit::DomainError;
using solvkit::Exponent;
using solvkit::MonomialOrder;

namespace {

Exponent rand_exp(std::mt19937_64& rng, int n, int hi) {
  std::uniform_int_distribution<long long> d(0, hi);
  std::vector<long long> e(n);
  for (auto& v : e) v = d(rng);
  return Exponent(std::move(e));
}

// Ordering axioms, sampled: totality/antisymmetry, transitivity,
// multiplicativity, and minimality of the zero exponent.
void check_axioms(const MonomialOrder& ord, unsigned seed) {
  std::mt19937_64 rng(seed);
  int n = ord.arity();
  Exponent zero(n);
  for (int it = 0; it < 200; ++it) {
    Exponent a = rand_exp(rng, n, 4), b = rand_exp(rng, n, 4),
             c = rand_exp(rng, n, 4);
    Cmp ab = ord.compare(a, b);
    CHECK(ord.compare(b, a) == solvkit::flip(ab));
    if (ab == Cmp::equal) CHECK(a == b);  // orderings here are total on exponents
    if (ord.compare(a, b) != Cmp::greater && ord.compare(b, c) != Cmp::greater)
      CHECK(ord.compare(a, c) != Cmp::greater);
    if (ab == Cmp::less) CHECK(ord.compare(a + c, b + c) == Cmp::less);
    if (!a.is_zero()) CHECK(ord.compare(zero, a) == Cmp::less);
  }
}

}  // namespace

TEST_CASE("lex respects priority permutation") {
  MonomialOrder xy = MonomialOrder::lex({0, 1});  // x largest
  CHECK(xy.compare(Exponent{1, 0}, Exponent{0, 5}) == Cmp::greater);
  CHECK(xy.compare(Exponent{2, 1}, Exponent{2, 3}) == Cmp::less);

  MonomialOrder yx = MonomialOrder::lex({1, 0});  // y largest
  CHECK(yx.compare(Exponent{1, 0}, Exponent{0, 5}) == Cmp::less);

  CHECK_THROWS_AS(MonomialOrder::lex({0, 0}), DomainError);
}

TEST_CASE("deglex grades then breaks ties by lex") {
  MonomialOrder o = MonomialOrder::deglex(3);
  CHECK(o.compare(Exponent{0, 0, 3}, Exponent{1, 1, 0}) == Cmp::greater);
  CHECK(o.compare(Exponent{1, 0, 1}, Exponent{0, 2, 0}) == Cmp::greater);
  CHECK(o.compare(Exponent{0, 1, 1}, Exponent{0, 2, 0}) == Cmp::less);
}

TEST_CASE("degrevlex tie goes to the smaller trailing exponent") {
  MonomialOrder o = MonomialOrder::degrevlex(3);
  // xz vs y^2: equal degree, last differing slot is z; larger there = smaller.
  CHECK(o.compare(Exponent{1, 0, 1}, Exponent{0, 2, 0}) == Cmp::less);
  CHECK(o.compare(Exponent{1, 1, 0}, Exponent{0, 2, 0}) == Cmp::greater);
  CHECK(o.compare(Exponent{0, 0, 1}, Exponent{1, 0, 0}) == Cmp::less);
}

TEST_CASE("weighted degree dominates, tie order decides") {
  MonomialOrder o =
      MonomialOrder::weighted({2, 1}, MonomialOrder::lex({0, 1}));
  CHECK(o.compare(Exponent{1, 0}, Exponent{0, 1}) == Cmp::greater);
  CHECK(o.compare(Exponent{1, 0}, Exponent{0, 2}) == Cmp::greater);  // tie, lex
  CHECK(o.compare(Exponent{0, 3}, Exponent{1, 0}) == Cmp::greater);
}

TEST_CASE("elimination block order pushes the complement on top") {
  MonomialOrder base = MonomialOrder::deglex(2);
  MonomialOrder o = solvkit::elim_order(base, {1});  // eliminate x, keep y
  CHECK(o.compare(Exponent{1, 0}, Exponent{0, 9}) == Cmp::greater);
  CHECK(o.compare(Exponent{0, 2}, Exponent{0, 3}) == Cmp::less);
  CHECK(o.compare(Exponent{2, 1}, Exponent{1, 5}) == Cmp::greater);

  // Defining property of an elimination ordering with respect to V(S),
  // S = monomials on {y}: anything at or below a pure-y monomial is pure-y.
  std::mt19937_64 rng(7);
  for (int it = 0; it < 200; ++it) {
    Exponent a = rand_exp(rng, 2, 5);
    Exponent s = rand_exp(rng, 2, 5);
    s = Exponent{0, s[1]};
    if (o.compare(a, s) != Cmp::greater) CHECK(a[0] == 0);
  }
  CHECK_THROWS_AS(solvkit::elim_order(base, {0, 1}), DomainError);
}

TEST_CASE("t-extension makes the last slot dominate") {
  MonomialOrder o = MonomialOrder::t_extension(MonomialOrder::deglex(2));
  CHECK(o.compare(Exponent{9, 9, 0}, Exponent{0, 0, 1}) == Cmp::less);
  CHECK(o.compare(Exponent{1, 0, 1}, Exponent{0, 1, 1}) == Cmp::greater);
}

TEST_CASE("product order compares the left block first") {
  MonomialOrder o =
      MonomialOrder::product(MonomialOrder::lex(1), MonomialOrder::lex(1));
  CHECK(o.compare(Exponent{1, 0}, Exponent{0, 7}) == Cmp::greater);
  CHECK(o.compare(Exponent{1, 2}, Exponent{1, 3}) == Cmp::less);
}

TEST_CASE("restriction compares through the parent embedding") {
  MonomialOrder parent = solvkit::elim_order(MonomialOrder::lex(2), {1});
  MonomialOrder r = MonomialOrder::restriction(parent, {1});
  CHECK(r.arity() == 1);
  CHECK(r.compare(Exponent{3}, Exponent{2}) == Cmp::greater);
  CHECK(r.compare(Exponent{0}, Exponent{1}) == Cmp::less);
}

TEST_CASE("ordering axioms hold on samples for every constructor") {
  check_axioms(MonomialOrder::lex({2, 0, 1}), 1);
  check_axioms(MonomialOrder::deglex(3), 2);
  check_axioms(MonomialOrder::deglex({1, 2, 1}, {1, 0, 2}), 3);
  check_axioms(MonomialOrder::degrevlex(3), 4);
  check_axioms(MonomialOrder::degrevlex({2, 1, 1}), 5);
  check_axioms(MonomialOrder::weighted({3, 1, 0}, MonomialOrder::lex(3)), 6);
  check_axioms(solvkit::elim_order(MonomialOrder::deglex(4), {1, 3}), 7);
  check_axioms(MonomialOrder::t_extension(MonomialOrder::degrevlex(2)), 8);
  check_axioms(
      MonomialOrder::product(MonomialOrder::deglex(2), MonomialOrder::lex(2)), 9);
  check_axioms(MonomialOrder::restriction(MonomialOrder::deglex(5), {0, 2, 4}),
               10);
}

TEST_CASE("graded unit weights flag") {
  CHECK(MonomialOrder::deglex(2).graded_unit_weights());
  CHECK(MonomialOrder::degrevlex(3).graded_unit_weights());
  CHECK(!MonomialOrder::deglex({2, 1}, {0, 1}).graded_unit_weights());
  CHECK(!MonomialOrder::lex(2).graded_unit_weights());
  CHECK(!solvkit::elim_order(MonomialOrder::deglex(2), {1}).graded_unit_weights());
}

TEST_CASE("structural equality") {
  CHECK(MonomialOrder::deglex(3) == MonomialOrder::deglex(3));
  CHECK(!(MonomialOrder::deglex(3) == MonomialOrder::lex(3)));
  CHECK(solvkit::elim_order(MonomialOrder::deglex(2), {1}) ==
        solvkit::elim_order(MonomialOrder::deglex(2), {1}));
}
