// solvkit: exact computer algebra for solvable polynomial algebras.
// Distributed under the Apache License, Version 2.0; see LICENSE.
//
// Canonical text rendering. Terms print strictly descending exactly as
// stored (printing never resorts), monomials as name^exp products in PBW
// order, rationals in lowest terms, GF(p) residues least nonnegative.
// Bases print monic and sorted by leading monomial descending, so that the
// same mathematical object always yields byte-identical text.

#ifndef SOLVKIT_PRINT_HPP
#define SOLVKIT_PRINT_HPP

#include <string>
#include <vector>

#include "solvkit/algebra.hpp"
#include "solvkit/elimination.hpp"
#include "solvkit/groebner.hpp"
#include "solvkit/poly.hpp"

namespace solvkit {

inline std::string monomial_str(const std::vector<std::string>& names,
                                const Exponent& e) {
  std::string out;
  for (std::size_t i = 0; i < e.arity(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += names[i];
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out;  // empty for the unit monomial
}

namespace detail {

// "<magnitude>[*<mono>][*e<comp>]" with the usual 1-elisions; sign handled
// by the caller. comp < 0 means scalar context.
template <Field K>
std::string term_body(const std::vector<std::string>& names, const K& c,
                      const Exponent& m, int comp, bool& negative) {
  std::string mag = c.str();
  negative = !mag.empty() && mag[0] == '-';
  if (negative) mag = mag.substr(1);
  std::string tail = monomial_str(names, m);
  if (comp >= 0) {
    if (!tail.empty()) tail += "*";
    tail += "e" + std::to_string(comp);
  }
  if (tail.empty()) return mag;
  if (mag == "1") return tail;
  return mag + "*" + tail;
}

template <Field K, class TermRange, class Proj>
std::string sum_str(const std::vector<std::string>& names,
                    const TermRange& terms, Proj comp_of) {
  std::string out;
  for (const auto& t : terms) {
    bool neg = false;
    std::string body = term_body(names, t.c, t.m, comp_of(t), neg);
    if (out.empty())
      out = (neg ? "-" : "") + body;
    else
      out += (neg ? " - " : " + ") + body;
  }
  return out.empty() ? "0" : out;
}

}  // namespace detail

template <Field K>
std::string poly_str(const std::vector<std::string>& names, const Poly<K>& p) {
  return detail::sum_str<K>(names, p.terms(), [](const Term<K>&) { return -1; });
}

template <Field K>
std::string vec_str(const std::vector<std::string>& names,
                    const VecElem<K>& v) {
  return detail::sum_str<K>(names, v.terms(),
                            [](const VTerm<K>& t) { return t.comp; });
}

// Rank-1 elements read better without the e0 everywhere.
template <Field K>
std::string elem_str(const std::vector<std::string>& names,
                     const VecElem<K>& v, int rank) {
  if (rank != 1) return vec_str(names, v);
  return detail::sum_str<K>(names, v.terms(), [](const VTerm<K>&) { return -1; });
}

// Monic elements, leading monomials strictly descending under the basis
// order; zero elements dropped. Matches the reduced-basis normalization, so
// reduced bases render without copying surprises.
template <Field K>
std::vector<std::string> basis_strings(const GroebnerBasis<K>& G) {
  std::vector<VecElem<K>> es;
  es.reserve(G.elems.size());
  for (const auto& g : G.elems)
    if (!g.is_zero()) es.push_back(g.scaled(g.lc().inverse()));
  std::sort(es.begin(), es.end(), [&](const VecElem<K>& a, const VecElem<K>& b) {
    return G.order.compare(a.lm_exp(), a.lm_comp(), b.lm_exp(), b.lm_comp()) ==
           Cmp::greater;
  });
  std::vector<std::string> out;
  out.reserve(es.size());
  for (const auto& e : es)
    out.push_back(elem_str(G.algebra.names(), e, G.rank));
  return out;
}

inline std::string bracket_list(const std::vector<std::string>& xs) {
  if (xs.empty()) return "[ ]";
  std::string out = "[ ";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += xs[i];
  }
  return out + " ]";
}

template <Field K>
std::string basis_str(const GroebnerBasis<K>& G) {
  return bracket_list(basis_strings(G));
}

template <Field K>
std::string validation_message(const std::vector<std::string>& names,
                               const ValidationError<K>& e) {
  auto pair = [&](int hi, int lo) { return names[hi] + "*" + names[lo]; };
  switch (e.kind) {
    case ValidationErrorKind::incomplete_relation_table:
      return "missing relation " + pair(e.j, e.i);
    case ValidationErrorKind::zero_lambda:
      return "zero lambda in relation " + pair(e.j, e.i);
    case ValidationErrorKind::leading_monomial_not_smaller:
      return "relation " + pair(e.j, e.i) + " has a tail not below " +
             pair(e.i, e.j);
    case ValidationErrorKind::overlap_inconsistent:
      return "overlap " + names[e.k] + "*" + names[e.j] + "*" + names[e.i] +
             " rewrites inconsistently: " + poly_str(names, e.left_nf) +
             " vs " + poly_str(names, e.right_nf);
  }
  throw InternalError("unreachable validation error kind");
}

inline std::string closure_message(const std::vector<std::string>& names,
                                   const ClosureFailure& f) {
  std::string mono = monomial_str(names, f.monomial);
  if (mono.empty()) mono = "1";
  return "closure failure: " + names[f.j] + "*" + names[f.i] + " produces " +
         mono;
}

}  // namespace solvkit

#endif  // SOLVKIT_PRINT_HPP
