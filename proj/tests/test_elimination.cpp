// Elimination: truncation, subalgebra contraction, intersections, weak
// independence, and the dimension search. Ground truth comes from three
// independent oracles: a commutative Buchberger engine, univariate gcd/lcm
// arithmetic, and degree-filtered exact linear algebra.

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <variant>
#include <vector>

#include "solvkit/elimination.hpp"
#include "solvkit/groebner.hpp"
#include "support/bridge.hpp"

using namespace solvkit;
using fx::Q;

namespace {

// All exponents of the given arity with total degree <= cap, ascending in
// (degree, slots) so the enumeration is deterministic.
std::vector<Exponent> monos_up_to(int arity, int cap) {
  std::vector<Exponent> out;
  std::vector<long long> cur(arity, 0);
  // Odometer over the box [0, cap]^arity, filtered by total degree.
  while (true) {
    long long total = 0;
    for (long long v : cur) total += v;
    if (total <= cap) out.push_back(Exponent(cur));
    int slot = arity - 1;
    while (slot >= 0 && cur[slot] == cap) cur[slot--] = 0;
    if (slot < 0) break;
    ++cur[slot];
  }
  std::sort(out.begin(), out.end(), [](const Exponent& a, const Exponent& b) {
    long long da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    for (std::size_t i = 0; i < a.arity(); ++i)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  });
  return out;
}

using MonoIndex = std::map<std::pair<Exponent, int>, std::size_t>;

MonoIndex index_of(const std::vector<Exponent>& monos, int rank) {
  MonoIndex idx;
  std::size_t k = 0;
  for (int c = 0; c < rank; ++c)
    for (const Exponent& m : monos) idx[{m, c}] = k++;
  return idx;
}

oracle::Row to_row(const VecElem<Q>& v, const MonoIndex& idx) {
  oracle::Row row(idx.size(), Q(0));
  for (const auto& t : v.terms()) row[idx.at({t.m, t.comp})] = t.c;
  return row;
}

oracle::Row to_row(const Poly<Q>& p, const MonoIndex& idx) {
  oracle::Row row(idx.size(), Q(0));
  for (const auto& t : p.terms()) row[idx.at({t.m, 0})] = t.c;
  return row;
}

// Row span of N cap F_cap for a left ideal N given by a Groebner basis under
// a degree-compatible base ordering: products a^gamma g with
// deg gamma + deg g <= cap exhaust the filtered piece.
std::vector<oracle::Row> ideal_rows(const ValidatedAlgebra<Q>& A,
                                    const std::vector<Poly<Q>>& gb, int cap,
                                    const std::vector<Exponent>& monos,
                                    const MonoIndex& idx) {
  std::vector<oracle::Row> rows;
  for (const Poly<Q>& g : gb) {
    long long dg = g.max_total_degree();
    for (const Exponent& m : monos) {
      if (m.total_degree() + dg > cap) continue;
      rows.push_back(to_row(A.mul(Poly<Q>::monomial(Q(1), m), g), idx));
    }
  }
  return rows;
}

// Same filtration for a submodule of A^rank.
std::vector<oracle::Row> module_rows(const ValidatedAlgebra<Q>& A,
                                     const std::vector<VecElem<Q>>& gb,
                                     const ModuleOrder& mo, int cap,
                                     const std::vector<Exponent>& monos,
                                     const MonoIndex& idx) {
  std::vector<oracle::Row> rows;
  for (const VecElem<Q>& g : gb) {
    long long dg = 0;
    for (const auto& t : g.terms()) dg = std::max(dg, t.m.total_degree());
    for (const Exponent& m : monos) {
      if (m.total_degree() + dg > cap) continue;
      rows.push_back(to_row(A.mul(Poly<Q>::monomial(Q(1), m), g, mo), idx));
    }
  }
  return rows;
}

// Coordinate-subspace rows: the unit row of every basis monomial the
// sub-basis keeps.
std::vector<oracle::Row> subspace_rows(const SubBasis& S,
                                       const std::vector<Exponent>& monos,
                                       int rank, const MonoIndex& idx) {
  std::vector<oracle::Row> rows;
  for (int c = 0; c < rank; ++c) {
    for (const Exponent& m : monos) {
      if (!S.contains(m, c)) continue;
      oracle::Row row(idx.size(), Q(0));
      row[idx.at({m, c})] = Q(1);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

Poly<Q> scatter_poly(const Poly<Q>& p, int arity, const std::vector<int>& keep,
                     const MonomialOrder& ord) {
  std::vector<Term<Q>> ts;
  for (const auto& t : p.terms()) ts.push_back({t.c, t.m.scatter(arity, keep)});
  return Poly<Q>::from_terms(std::move(ts), ord);
}

std::vector<Poly<Q>> sub_polys(const SubalgebraGB<Q>& r) {
  return scalar_elems(r.basis, r.subalgebra.order());
}

// Univariate bridge: dense oracle polynomial -> Poly over a one-generator
// algebra, and back.
Poly<Q> from_u(const oracle::UPoly& u, const ValidatedAlgebra<Q>& A) {
  std::vector<Term<Q>> ts;
  for (std::size_t d = 0; d < u.size(); ++d)
    if (!u[d].is_zero())
      ts.push_back({u[d], Exponent({static_cast<long long>(d)})});
  return Poly<Q>::from_terms(std::move(ts), A.order());
}

oracle::UPoly rand_upoly(std::mt19937_64& rng, int deg) {
  oracle::UPoly u(static_cast<std::size_t>(deg) + 1, Q(0));
  std::uniform_int_distribution<long> c(-4, 4);
  for (auto& x : u) x = Q(c(rng));
  u[deg] = Q(1);
  return oracle::u_trim(std::move(u));
}

}  // namespace

TEST_CASE("truncation keeps exactly the sub-basis-supported elements") {
  auto A = fx::commutative_q({"x", "y"}, MonomialOrder::deglex(2));
  MonomialOrder eo = elim_order(A.order(), {1});

  // G = {x - y^2, y^3} is already a Groebner basis under the elimination
  // ordering; the y-slice keeps only y^3.
  Poly<Q> g1 = fx::P(A, {{Q(1), {1, 0}}, {Q(-1), {0, 2}}});
  Poly<Q> g2 = fx::P(A, {{Q(1), {0, 3}}});
  GroebnerBasis<Q> G = reduce_basis(buchberger_ideal(A, {g1, g2}, eo));
  REQUIRE(G.elems.size() == 2);

  auto cut = truncate_to_VS(G, SubBasis::generators({1}));
  REQUIRE(cut.size() == 1);
  CHECK(cut[0] == VecElem<Q>::from_poly(g2.resorted(eo), 0, G.order));

  SECTION("module slice under plain POT") {
    ModuleOrder mo = ModuleOrder::pot(A.order());
    VecElem<Q> h1 = fx::V(mo, {{Q(1), {0, 0}, 1}, {Q(-1), {1, 0}, 0}});
    VecElem<Q> h2 = fx::V(mo, {{Q(1), {0, 1}, 0}});
    GroebnerBasis<Q> M = buchberger(A, {h1, h2}, mo, 2);
    auto kept = truncate_to_VS(M, SubBasis::components({0}));
    REQUIRE(kept.size() == 1);
    CHECK(kept[0] == h2);
  }
}

TEST_CASE("truncation refuses orderings that do not eliminate") {
  auto A = fx::commutative_q({"x", "y"}, MonomialOrder::deglex(2));
  Poly<Q> g = fx::P(A, {{Q(1), {0, 3}}});
  GroebnerBasis<Q> G = buchberger_ideal(A, {g}, A.order());

  CHECK_THROWS_AS(truncate_to_VS(G, SubBasis::generators({1})),
                  StructuralMismatch);
  CHECK_THROWS_AS(truncate_to_VS(G, SubBasis::t_slice()), StructuralMismatch);

  SECTION("matching elimination block but wrong subset") {
    GroebnerBasis<Q> E =
        buchberger_ideal(A, {g}, elim_order(A.order(), {1}));
    CHECK_NOTHROW(truncate_to_VS(E, SubBasis::generators({1})));
    CHECK_THROWS_AS(truncate_to_VS(E, SubBasis::generators({0})),
                    StructuralMismatch);
  }

  SECTION("POT eliminates component prefixes only") {
    ModuleOrder mo = ModuleOrder::pot(A.order());
    VecElem<Q> h = fx::V(mo, {{Q(1), {0, 1}, 1}});
    GroebnerBasis<Q> M = buchberger(A, {h}, mo, 2);
    CHECK_NOTHROW(truncate_to_VS(M, SubBasis::components({0})));
    CHECK_THROWS_AS(truncate_to_VS(M, SubBasis::components({1})),
                    StructuralMismatch);
  }
}

TEST_CASE("subalgebra closure check reports the first offending monomial") {
  SECTION("q-Heisenberg: {x, y} is not closed, z leaks in") {
    auto A = fx::qheis(Q(2));
    auto fail = subalgebra_closure_check(A, {0, 1});
    REQUIRE(fail.has_value());
    CHECK(fail->j == 1);
    CHECK(fail->i == 0);
    CHECK(fail->monomial == Exponent({0, 0, 1}));
    CHECK_FALSE(subalgebra_closure_check(A, {1, 2}).has_value());
    CHECK_FALSE(subalgebra_closure_check(A, {0, 2}).has_value());
  }

  SECTION("cubic tail: {a1, a3} leaks the degree-3 monomial first") {
    auto A = fx::li3();
    auto fail = subalgebra_closure_check(A, {0, 2});
    REQUIRE(fail.has_value());
    CHECK(fail->j == 2);
    CHECK(fail->i == 0);
    CHECK(fail->monomial == Exponent({0, 2, 1}));
  }

  SECTION("commutative subsets are always closed") {
    auto A = fx::commutative_q({"x", "y", "z"}, MonomialOrder::deglex(3));
    CHECK_FALSE(subalgebra_closure_check(A, {0, 1}).has_value());
    CHECK_FALSE(subalgebra_closure_check(A, {2}).has_value());
  }
}

TEST_CASE("ideal elimination matches the commutative oracle") {
  auto A = fx::commutative_q({"x", "y"}, MonomialOrder::deglex(2));
  std::mt19937_64 rng(0xe11e);

  for (int iter = 0; iter < 30; ++iter) {
    std::vector<Poly<Q>> gens = {fx::rand_poly(rng, A, 3, 3),
                                 fx::rand_poly(rng, A, 2, 3)};
    std::vector<int> keep = {iter % 2};

    auto res = eliminate_ideal(A, gens, keep);
    auto* ok = std::get_if<SubalgebraGB<Q>>(&res);
    REQUIRE(ok != nullptr);
    CHECK(ok->keep == keep);
    CHECK(ok->subalgebra.ngens() == 1);
    CHECK(ok->subalgebra.name(0) == A.name(keep[0]));

    std::vector<oracle::CPoly> cgens;
    for (const auto& g : gens) cgens.push_back(fx::to_c(g));
    std::vector<oracle::CPoly> want = oracle::c_eliminate(cgens, 2, keep);

    std::vector<Poly<Q>> mine = sub_polys(*ok);
    REQUIRE(mine.size() == want.size());
    for (std::size_t i = 0; i < mine.size(); ++i) {
      Poly<Q> ambient =
          scatter_poly(mine[i], 2, keep, A.order());
      CHECK(oracle::c_sub(fx::to_c(ambient), want[i]).empty());
    }
  }
}

TEST_CASE("ideal elimination with a two-variable slice") {
  // Multi-variable keeps need the restricted orderings to agree, so compare
  // under a pure lex base on both sides.
  auto A = fx::commutative_q({"x", "y", "z"}, MonomialOrder::lex(3));
  std::mt19937_64 rng(0x3115);

  for (int iter = 0; iter < 12; ++iter) {
    std::vector<Poly<Q>> gens = {fx::rand_poly(rng, A, 3, 2),
                                 fx::rand_poly(rng, A, 2, 2)};
    std::vector<int> keep = {1, 2};

    auto res = eliminate_ideal(A, gens, keep);
    auto* ok = std::get_if<SubalgebraGB<Q>>(&res);
    REQUIRE(ok != nullptr);

    std::vector<oracle::CPoly> cgens;
    for (const auto& g : gens) cgens.push_back(fx::to_c(g));
    std::vector<oracle::CPoly> want = oracle::c_eliminate(cgens, 3, keep);

    std::vector<Poly<Q>> mine = sub_polys(*ok);
    REQUIRE(mine.size() == want.size());
    for (std::size_t i = 0; i < mine.size(); ++i) {
      Poly<Q> ambient = scatter_poly(mine[i], 3, keep, A.order());
      CHECK(oracle::c_sub(fx::to_c(ambient), want[i]).empty());
    }
  }
}

TEST_CASE("ideal elimination, frozen cases") {
  SECTION("x = y^2 contracts to the cube") {
    auto A = fx::commutative_q({"x", "y"}, MonomialOrder::deglex(2));
    Poly<Q> g1 = fx::P(A, {{Q(1), {1, 0}}, {Q(-1), {0, 2}}});
    Poly<Q> g2 = fx::P(A, {{Q(1), {0, 3}}});
    auto res = eliminate_ideal(A, {g1, g2}, {1});
    auto& ok = std::get<SubalgebraGB<Q>>(res);
    REQUIRE(ok.subalgebra.names() == std::vector<std::string>{"y"});
    auto polys = sub_polys(ok);
    REQUIRE(polys.size() == 1);
    CHECK(polys[0] ==
          Poly<Q>::monomial(Q(1), Exponent({3})));
  }

  SECTION("Weyl: the left ideal of x d meets K[x] trivially") {
    auto A = fx::weyl1();
    Poly<Q> xd = fx::P(A, {{Q(1), {1, 1}}});
    auto res = eliminate_ideal(A, {xd}, {0});
    auto& ok = std::get<SubalgebraGB<Q>>(res);
    CHECK(ok.basis.elems.empty());
  }

  SECTION("Weyl: d^2 and x d together reach d") {
    auto A = fx::weyl1();
    Poly<Q> d2 = fx::P(A, {{Q(1), {0, 2}}});
    Poly<Q> xd = fx::P(A, {{Q(1), {1, 1}}});
    auto res = eliminate_ideal(A, {d2, xd}, {1});
    auto& ok = std::get<SubalgebraGB<Q>>(res);
    auto polys = sub_polys(ok);
    REQUIRE(polys.size() == 1);
    CHECK(polys[0] == Poly<Q>::monomial(Q(1), Exponent({1})));
  }

  SECTION("closure failures surface as values, not bases") {
    auto A = fx::qheis(Q(2));
    auto res = eliminate_ideal(A, {A.gen(2)}, {0, 1});
    auto* fail = std::get_if<ClosureFailure>(&res);
    REQUIRE(fail != nullptr);
    CHECK(fail->j == 1);
    CHECK(fail->i == 0);
    CHECK(fail->monomial == Exponent({0, 0, 1}));

    auto B = fx::li3();
    auto res2 = eliminate_ideal(B, {B.gen(1)}, {0, 2});
    auto* fail2 = std::get_if<ClosureFailure>(&res2);
    REQUIRE(fail2 != nullptr);
    CHECK(fail2->monomial == Exponent({0, 2, 1}));
  }
}

TEST_CASE("elimination agrees with degree-filtered linear algebra") {
  const int cap = 4;

  auto check_case = [&](const ValidatedAlgebra<Q>& A,
                        const std::vector<Poly<Q>>& gens,
                        const std::vector<int>& keep) {
    auto res = eliminate_ideal(A, gens, keep);
    auto* ok = std::get_if<SubalgebraGB<Q>>(&res);
    REQUIRE(ok != nullptr);

    const int n = A.ngens();
    auto monos = monos_up_to(n, cap);
    auto idx = index_of(monos, 1);
    auto gb =
        scalar_elems(reduce_basis(buchberger_ideal(A, gens, A.order())),
                     A.order());
    auto lhs = oracle::span_intersection(
        ideal_rows(A, gb, cap, monos, idx),
        subspace_rows(SubBasis::generators(keep), monos, 1, idx));

    // The contracted basis, scattered back into the ambient algebra and
    // multiplied by kept-supported cofactors, must span the same space.
    std::vector<oracle::Row> rhs;
    for (const Poly<Q>& e : sub_polys(*ok)) {
      Poly<Q> amb = scatter_poly(e, n, keep, A.order());
      long long de = amb.max_total_degree();
      for (const Exponent& m : monos) {
        if (!m.supported_on(keep) || m.total_degree() + de > cap) continue;
        rhs.push_back(to_row(A.mul(Poly<Q>::monomial(Q(1), m), amb), idx));
      }
    }
    CHECK(oracle::same_span(lhs, rhs));
  };

  SECTION("random commutative ideals") {
    auto A = fx::commutative_q({"x", "y"}, MonomialOrder::deglex(2));
    std::mt19937_64 rng(0xf17e);
    for (int iter = 0; iter < 8; ++iter) {
      std::vector<Poly<Q>> gens = {fx::rand_poly(rng, A, 2, 2),
                                   fx::rand_poly(rng, A, 2, 2)};
      check_case(A, gens, {iter % 2});
    }
  }

  SECTION("Weyl algebra slices") {
    auto A = fx::weyl1();
    Poly<Q> d2 = fx::P(A, {{Q(1), {0, 2}}});
    Poly<Q> xd = fx::P(A, {{Q(1), {1, 1}}});
    check_case(A, {d2, xd}, {1});
    check_case(A, {xd}, {0});
    check_case(A, {fx::P(A, {{Q(1), {0, 1}}})}, {0});
  }

  SECTION("q-Heisenberg q-commutative slice") {
    auto A = fx::qheis(Q(2));
    std::mt19937_64 rng(0x9e15);
    for (int iter = 0; iter < 4; ++iter) {
      std::vector<Poly<Q>> gens = {fx::rand_poly(rng, A, 2, 1),
                                   fx::rand_poly(rng, A, 2, 1)};
      check_case(A, gens, {1, 2});
    }
  }
}

TEST_CASE("elimination membership transfer") {
  // p supported on U lies in N iff it lies in the contracted ideal.
  auto A = fx::qheis(Q(3));
  std::mt19937_64 rng(0x7a35);
  std::vector<int> keep = {1, 2};

  for (int iter = 0; iter < 6; ++iter) {
    std::vector<Poly<Q>> gens = {fx::rand_poly(rng, A, 2, 2),
                                 fx::rand_poly(rng, A, 2, 2)};
    auto res = eliminate_ideal(A, gens, keep);
    auto& ok = std::get<SubalgebraGB<Q>>(res);
    GroebnerBasis<Q> Gamb =
        reduce_basis(buchberger_ideal(A, gens, A.order()));

    for (int probe = 0; probe < 10; ++probe) {
      // Random polynomial supported on the kept generators.
      std::vector<Term<Q>> ts;
      for (int t = 0; t < 3; ++t)
        ts.push_back(
            {fx::rand_q(rng), fx::rand_exp(rng, 2, 2).scatter(3, keep)});
      Poly<Q> p = Poly<Q>::from_terms(std::move(ts), A.order());

      bool in_ambient =
          member(VecElem<Q>::from_poly(p, 0, Gamb.order), Gamb).has_value();
      std::vector<Term<Q>> rs;
      for (const auto& t : p.terms()) rs.push_back({t.c, t.m.restrict(keep)});
      Poly<Q> pr =
          Poly<Q>::from_terms(std::move(rs), ok.subalgebra.order());
      bool in_sub =
          member(VecElem<Q>::from_poly(pr, 0, ok.basis.order), ok.basis)
              .has_value();
      CHECK(in_ambient == in_sub);
    }
  }
}

TEST_CASE("module elimination") {
  auto A = fx::commutative_q({"x", "y"}, MonomialOrder::deglex(2));
  ModuleOrder base = ModuleOrder::pot(A.order());
  VecElem<Q> h1 = fx::V(base, {{Q(1), {0, 0}, 1}, {Q(-1), {1, 0}, 0}});
  VecElem<Q> h2 = fx::V(base, {{Q(1), {0, 1}, 0}});

  SECTION("keeping the first component leaves y e_0") {
    GroebnerBasis<Q> R = eliminate_module(A, {h1, h2}, {0}, 2);
    CHECK(R.rank == 1);
    REQUIRE(R.elems.size() == 1);
    CHECK(R.elems[0] ==
          fx::V(R.order, {{Q(1), {0, 1}, 0}}));
  }

  SECTION("keeping the second component solves for the e_1 multiples") {
    // h e_1 lies in the span iff h x is a multiple of y, so the slice is
    // generated by y e_1, re-indexed to component 0.
    GroebnerBasis<Q> R = eliminate_module(A, {h1, h2}, {1}, 2);
    CHECK(R.rank == 1);
    REQUIRE(R.elems.size() == 1);
    CHECK(R.elems[0] == fx::V(R.order, {{Q(1), {0, 1}, 0}}));
  }

  SECTION("random submodules against filtered linear algebra") {
    std::mt19937_64 rng(0x30d5);
    const int cap = 4;
    auto monos = monos_up_to(2, cap);
    auto idx = index_of(monos, 2);
    for (int iter = 0; iter < 6; ++iter) {
      std::vector<VecElem<Q>> gens;
      for (int g = 0; g < 2; ++g) {
        std::vector<VTerm<Q>> ts;
        for (int t = 0; t < 2; ++t)
          ts.push_back({fx::rand_q(rng), fx::rand_exp(rng, 2, 2),
                        static_cast<int>(rng() % 2)});
        gens.push_back(VecElem<Q>::from_terms(std::move(ts), base));
      }
      std::vector<int> keep = {iter % 2};
      GroebnerBasis<Q> R = eliminate_module(A, gens, keep, 2);

      // Degree-filtered spans need a degree-compatible ordering, so both
      // sides are re-based onto TOP before expanding products.
      ModuleOrder top = ModuleOrder::top(A.order());
      GroebnerBasis<Q> G = reduce_basis(buchberger(A, gens, top, 2));
      auto lhs = oracle::span_intersection(
          module_rows(A, G.elems, top, cap, monos, idx),
          subspace_rows(SubBasis::components(keep), monos, 2, idx));

      // Undo the re-indexing: component i of the result is keep[i].
      std::vector<VecElem<Q>> ambient;
      for (const VecElem<Q>& e : R.elems) {
        std::vector<VTerm<Q>> ts;
        for (const auto& t : e.terms()) ts.push_back({t.c, t.m, keep[t.comp]});
        ambient.push_back(VecElem<Q>::from_terms(std::move(ts), top));
      }
      GroebnerBasis<Q> Gr = reduce_basis(buchberger(A, ambient, top, 2));
      auto rhs = module_rows(A, Gr.elems, top, cap, monos, idx);
      CHECK(oracle::same_span(lhs, rhs));
    }
  }
}

TEST_CASE("ideal intersection") {
  SECTION("the textbook pair in one variable") {
    auto A = fx::commutative_q({"x"}, MonomialOrder::deglex(1));
    Poly<Q> x = A.gen(0);
    Poly<Q> x1 = fx::P(A, {{Q(1), {1}}, {Q(1), {0}}});
    GroebnerBasis<Q> R = intersect_ideals(A, {x}, {x1});
    auto polys = scalar_elems(R, A.order());
    REQUIRE(polys.size() == 1);
    CHECK(polys[0] == fx::P(A, {{Q(1), {2}}, {Q(1), {1}}}));
  }

  SECTION("univariate intersections are lcms") {
    auto A = fx::commutative_q({"x"}, MonomialOrder::deglex(1));
    std::mt19937_64 rng(0x1c31);
    std::uniform_int_distribution<int> dd(1, 4);
    for (int iter = 0; iter < 20; ++iter) {
      oracle::UPoly f = rand_upoly(rng, dd(rng));
      oracle::UPoly g = rand_upoly(rng, dd(rng));
      GroebnerBasis<Q> R =
          intersect_ideals(A, {from_u(f, A)}, {from_u(g, A)});
      auto polys = scalar_elems(R, A.order());
      REQUIRE(polys.size() == 1);
      CHECK(polys[0] == from_u(oracle::u_monic(oracle::u_lcm(f, g)), A));
    }
  }

  SECTION("idempotence and zero ideals") {
    auto A = fx::weyl1();
    Poly<Q> d = A.gen(1);
    GroebnerBasis<Q> R = intersect_ideals(A, {d}, {d});
    auto polys = scalar_elems(R, A.order());
    REQUIRE(polys.size() == 1);
    CHECK(polys[0] == d);

    CHECK(intersect_ideals(A, {}, {d}).elems.empty());
    CHECK(intersect_ideals(A, {d}, {}).elems.empty());
  }

  SECTION("bivariate: containment both ways plus the filtered span") {
    auto A = fx::commutative_q({"x", "y"}, MonomialOrder::deglex(2));
    std::mt19937_64 rng(0xb1b1);
    const int cap = 5;
    auto monos = monos_up_to(2, cap);
    auto idx = index_of(monos, 1);
    for (int iter = 0; iter < 6; ++iter) {
      Poly<Q> f = fx::rand_poly(rng, A, 2, 2);
      Poly<Q> g = fx::rand_poly(rng, A, 2, 2);
      if (f.is_zero() || g.is_zero()) continue;
      GroebnerBasis<Q> R = intersect_ideals(A, {f}, {g});

      GroebnerBasis<Q> G1 = reduce_basis(buchberger_ideal(A, {f}, A.order()));
      GroebnerBasis<Q> G2 = reduce_basis(buchberger_ideal(A, {g}, A.order()));
      for (const VecElem<Q>& e : R.elems) {
        CHECK(member(e, G1).has_value());
        CHECK(member(e, G2).has_value());
      }
      // f g lies in the intersection, so it must reduce to zero.
      VecElem<Q> fg = VecElem<Q>::from_poly(A.mul(f, g), 0, R.order);
      CHECK(member(fg, R).has_value());

      auto lhs = oracle::span_intersection(
          ideal_rows(A, scalar_elems(G1, A.order()), cap, monos, idx),
          ideal_rows(A, scalar_elems(G2, A.order()), cap, monos, idx));
      auto rhs = ideal_rows(A, scalar_elems(R, A.order()), cap, monos, idx);
      CHECK(oracle::same_span(lhs, rhs));
    }
  }

  SECTION("noncommutative mutual membership") {
    auto A = fx::weyl1();
    std::mt19937_64 rng(0xdead);
    for (int iter = 0; iter < 5; ++iter) {
      Poly<Q> f = fx::rand_poly(rng, A, 2, 2);
      Poly<Q> g = fx::rand_poly(rng, A, 2, 2);
      if (f.is_zero() || g.is_zero()) continue;
      GroebnerBasis<Q> R = intersect_ideals(A, {f}, {g});
      GroebnerBasis<Q> G1 = reduce_basis(buchberger_ideal(A, {f}, A.order()));
      GroebnerBasis<Q> G2 = reduce_basis(buchberger_ideal(A, {g}, A.order()));
      for (const VecElem<Q>& e : R.elems) {
        CHECK(member(e, G1).has_value());
        CHECK(member(e, G2).has_value());
      }
    }
  }
}

TEST_CASE("submodule intersection") {
  auto A = fx::commutative_q({"x", "y"}, MonomialOrder::deglex(2));
  ModuleOrder base = ModuleOrder::pot(A.order());

  SECTION("frozen rank-2 case") {
    VecElem<Q> ye0 = fx::V(base, {{Q(1), {0, 1}, 0}});
    VecElem<Q> e1 = fx::V(base, {{Q(1), {0, 0}, 1}});
    VecElem<Q> e0 = fx::V(base, {{Q(1), {0, 0}, 0}});
    GroebnerBasis<Q> R =
        intersect_submodules(A, {ye0, e1}, {e0}, base, 2);
    REQUIRE(R.elems.size() == 1);
    CHECK(R.elems[0] == ye0);
  }

  SECTION("rank guard") {
    VecElem<Q> bad = fx::V(base, {{Q(1), {0, 0}, 3}});
    CHECK_THROWS_AS(intersect_submodules(A, {bad}, {bad}, base, 2),
                    RankMismatch);
  }

  SECTION("random rank-2 cases against the filtered span") {
    std::mt19937_64 rng(0x5107);
    const int cap = 4;
    auto monos = monos_up_to(2, cap);
    auto idx = index_of(monos, 2);
    for (int iter = 0; iter < 5; ++iter) {
      auto rand_elem = [&] {
        std::vector<VTerm<Q>> ts;
        for (int t = 0; t < 2; ++t)
          ts.push_back({fx::rand_q(rng), fx::rand_exp(rng, 2, 1),
                        static_cast<int>(rng() % 2)});
        return VecElem<Q>::from_terms(std::move(ts), base);
      };
      std::vector<VecElem<Q>> n1 = {rand_elem(), rand_elem()};
      std::vector<VecElem<Q>> n2 = {rand_elem()};
      GroebnerBasis<Q> R = intersect_submodules(A, n1, n2, base, 2);

      GroebnerBasis<Q> G1 = reduce_basis(buchberger(A, n1, base, 2));
      GroebnerBasis<Q> G2 = reduce_basis(buchberger(A, n2, base, 2));
      for (const VecElem<Q>& e : R.elems) {
        CHECK(member(e, G1).has_value());
        CHECK(member(e, G2).has_value());
      }
      // Spans are degree-filtered, so expand under TOP bases.
      ModuleOrder top = ModuleOrder::top(A.order());
      GroebnerBasis<Q> T1 = reduce_basis(buchberger(A, n1, top, 2));
      GroebnerBasis<Q> T2 = reduce_basis(buchberger(A, n2, top, 2));
      std::vector<VecElem<Q>> rgens;
      for (const VecElem<Q>& e : R.elems) rgens.push_back(e.resorted(top));
      GroebnerBasis<Q> Tr = reduce_basis(buchberger(A, rgens, top, 2));
      auto lhs = oracle::span_intersection(
          module_rows(A, T1.elems, top, cap, monos, idx),
          module_rows(A, T2.elems, top, cap, monos, idx));
      auto rhs = module_rows(A, Tr.elems, top, cap, monos, idx);
      CHECK(oracle::same_span(lhs, rhs));
    }
  }
}

TEST_CASE("weak independence") {
  auto A = fx::commutative_q({"x", "y"}, MonomialOrder::deglex(2));
  Poly<Q> x = A.gen(0);
  CHECK(weakly_independent(A, {x}, {1}));
  CHECK_FALSE(weakly_independent(A, {x}, {0}));
  CHECK_FALSE(weakly_independent(A, {A.unit_poly()}, {0}));
  CHECK_FALSE(weakly_independent(A, {A.unit_poly()}, {1}));

  auto W = fx::weyl1();
  CHECK(weakly_independent(W, {W.gen(1)}, {0}));
  CHECK_FALSE(weakly_independent(W, {W.gen(1)}, {1}));
}

TEST_CASE("dimension search") {
  SECTION("commutative plane curve") {
    auto A = fx::commutative_q({"x", "y"}, MonomialOrder::deglex(2));
    DimSearchResult r = gk_dim_search(A, {A.gen(0)});
    CHECK(r.dim == 1);
    CHECK(r.witness == std::vector<int>{1});
    CHECK(r.exact);
  }

  SECTION("Weyl module K[x]") {
    auto A = fx::weyl1();
    DimSearchResult r = gk_dim_search(A, {A.gen(1)});
    CHECK(r.dim == 1);
    CHECK(r.witness == std::vector<int>{0});
    CHECK(r.exact);
  }

  SECTION("unit ideal collapses to a point") {
    auto A = fx::commutative_q({"x", "y"}, MonomialOrder::deglex(2));
    DimSearchResult r = gk_dim_search(A, {A.unit_poly()});
    CHECK(r.dim == 0);
    CHECK(r.witness.empty());
  }

  SECTION("zero ideal is rejected") {
    auto A = fx::commutative_q({"x", "y"}, MonomialOrder::deglex(2));
    CHECK_THROWS_AS(gk_dim_search(A, {}), ZeroIdeal);
    CHECK_THROWS_AS(gk_dim_search(A, {Poly<Q>{}}), ZeroIdeal);
  }

  SECTION("cubic tails forfeit exactness") {
    auto A = fx::li3();
    DimSearchResult r = gk_dim_search(A, {A.gen(0)});
    CHECK(r.dim >= 1);
    CHECK_FALSE(r.exact);
  }
}
