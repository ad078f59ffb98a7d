// solvkit: exact computer algebra for solvable polynomial algebras.
// Distributed under the Apache License, Version 2.0; see LICENSE.
//
// Session evaluator: executes parsed statements against the library and
// reports through an event sink. Each command produces exactly one result
// event whose text is `<canonical command>: <result>`; the canonical
// command re-renders any expression argument in normal form, so every
// transcript doubles as a parse-print round trip. Declarations are silent
// except for warnings and the hom well-definedness gate.
//
// The same events carry a JSON mirror, which is what `--json` prints, so
// the two output modes cannot drift apart.

#ifndef SOLVKIT_SESSION_HPP
#define SOLVKIT_SESSION_HPP

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"
#include "solvkit/algebra.hpp"
#include "solvkit/elimination.hpp"
#include "solvkit/errors.hpp"
#include "solvkit/fields.hpp"
#include "solvkit/groebner.hpp"
#include "solvkit/homs.hpp"
#include "solvkit/module_order.hpp"
#include "solvkit/order.hpp"
#include "solvkit/parse.hpp"
#include "solvkit/poly.hpp"
#include "solvkit/print.hpp"

namespace solvkit {

// Hard error: the command cannot produce a result (invalid algebra, zero
// ideal dimension search, library precondition). The driver reports it and
// exits nonzero; the REPL reports it and continues.
struct SessionError : std::runtime_error {
  explicit SessionError(const std::string& what) : std::runtime_error(what) {}
};

struct Event {
  enum class Kind { warning, result, trace };
  Kind kind = Kind::result;
  std::string text;             // full human-readable line, no newline
  nlohmann::ordered_json json;  // one NDJSON object
};
using EventSink = std::function<void(const Event&)>;

/* ------------------------------------------------------- coefficients -- */

// Maps the field-agnostic decimal literals of the AST into K. The GF(p)
// instance carries its modulus; mixing moduli is ruled out at the driver.
template <class K>
struct FieldCtx;

template <>
struct FieldCtx<Rational> {
  Rational from_decimal(const std::string& num, const std::string& den) const {
    return Rational::from_decimal(num, den);
  }
  Rational one() const { return Rational(1); }
  bool accepts(const FieldSpec& f) const { return f.rationals; }
  std::string name() const { return "QQ"; }
};

template <>
struct FieldCtx<GFp> {
  long long p = 2;
  GFp from_decimal(const std::string& num, const std::string& den) const {
    mpz_class d(den, 10), m(std::to_string(p), 10);
    if (mpz_class(d % m) == 0)
      throw DomainError("denominator " + den + " vanishes in " + name());
    return GFp::from_decimal(num, den, p);
  }
  GFp one() const { return GFp(1, p); }
  bool accepts(const FieldSpec& f) const {
    return !f.rationals && f.modulus == p;
  }
  std::string name() const { return "GF(" + std::to_string(p) + ")"; }
};

inline std::string field_spec_name(const FieldSpec& f) {
  return f.rationals ? "QQ" : "GF(" + std::to_string(f.modulus) + ")";
}

/* -------------------------------------------------------------- session -- */

template <Field K>
class Session {
 public:
  Session(FieldCtx<K> field, EventSink sink, bool trace = false,
          bool field_overridden = false)
      : field_(std::move(field)),
        sink_(std::move(sink)),
        trace_(trace),
        overridden_(field_overridden) {}

  // Executes one statement. Throws ParseError never; SessionError on hard
  // errors; library errors are wrapped into SessionError with the statement
  // as context.
  void exec(const Stmt& st) {
    std::visit(
        [&](const auto& s) {
          try {
            exec_one(s);
          } catch (const SessionError&) {
            throw;
          } catch (const std::invalid_argument& e) {
            throw SessionError(stmt_context(s) + ": " + e.what());
          }
        },
        st);
  }

 private:
  struct AlgB {
    std::string name;
    std::vector<std::string> names;
    MonomialOrder order;
    std::optional<ValidatedAlgebra<K>> alg;
    std::optional<ValidationError<K>> bad;
  };
  struct AlgRef {
    int idx;
  };
  struct IdealB {
    int alg;
    std::vector<Poly<K>> gens;
  };
  struct ModB {
    int alg;
    int rank;
    bool pot;
  };
  struct SubB {
    int alg;
    int rank;
    bool pot;
    std::string module;
    std::vector<VecElem<K>> gens;
  };
  struct HomB {
    int alg;
    int src_rank, tgt_rank;
    std::variant<FreeHom<K>, QuotientHom<K>> h;
  };
  using Binding = std::variant<AlgRef, IdealB, ModB, SubB, HomB>;

  /* events */

  void warn(const std::string& msg) {
    Event ev;
    ev.kind = Event::Kind::warning;
    ev.text = "warning: " + msg;
    ev.json = nlohmann::ordered_json{{"warning", msg}};
    sink_(ev);
  }
  void result(const std::string& label, const std::string& body,
              nlohmann::ordered_json j) {
    Event ev;
    ev.kind = Event::Kind::result;
    ev.text = label + ": " + body;
    ev.json = nlohmann::ordered_json{{"command", label},
                                     {"result", std::move(j)}};
    sink_(ev);
  }

  // Division-step reporting for nf and member. Divisors are 1-based; the
  // component is omitted for rank-1 baskets where it is always e0.
  TraceSink<K> make_trace(std::vector<std::string> names, int rank) {
    return [this, names = std::move(names), rank](const ReductionStep<K>& s) {
      std::string mono = monomial_str(names, s.target);
      if (mono.empty()) mono = "1";
      if (rank != 1) mono += "*e" + std::to_string(s.component);
      std::string cof = monomial_str(names, s.cofactor);
      if (cof.empty()) cof = "1";
      Event ev;
      ev.kind = Event::Kind::trace;
      ev.text = "trace: reduce " + mono + " by g" +
                std::to_string(s.divisor + 1) + ": coefficient " +
                s.coeff.str() + ", cofactor " + cof;
      ev.json = nlohmann::ordered_json{
          {"trace",
           nlohmann::ordered_json{{"monomial", mono},
                                  {"divisor", s.divisor + 1},
                                  {"coefficient", s.coeff.str()},
                                  {"cofactor", cof}}}};
      sink_(ev);
    };
  }

  /* lookups */

  const Binding& lookup(const std::string& name) const {
    auto it = bind_.find(name);
    if (it == bind_.end())
      throw SessionError("unknown name '" + name + "'");
    return it->second;
  }
  template <class B>
  const B& get(const std::string& name, const char* what) const {
    const Binding& b = lookup(name);
    const B* p = std::get_if<B>(&b);
    if (!p) throw SessionError("'" + name + "' is not " + std::string(what));
    return *p;
  }
  const ValidatedAlgebra<K>& need_alg(int idx, const std::string& ctx) const {
    const AlgB& a = algebras_[idx];
    if (!a.alg)
      throw SessionError(ctx + ": algebra " + a.name +
                         " failed validation: " +
                         validation_message(a.names, *a.bad));
    return *a.alg;
  }

  /* literal conversion */

  MonomialOrder order_from_spec(const OrderSpec& s) const {
    switch (s.kind) {
      case OrderSpec::Kind::lex:
        return MonomialOrder::lex(s.ids);
      case OrderSpec::Kind::deglex:
        return MonomialOrder::deglex(
            std::vector<long long>(s.ids.size(), 1), s.ids);
      case OrderSpec::Kind::degrevlex:
        return MonomialOrder::degrevlex(s.ids.size());
      case OrderSpec::Kind::elim:
        return elim_order(order_from_spec(*s.base), s.ids);
    }
    throw InternalError("unreachable order spec kind");
  }

  K coeff_of(const TermLit& t) const {
    K c = field_.from_decimal(t.num, t.den);
    if (t.negative) c = -c;
    return c;
  }

  Poly<K> poly_from(const ExprLit& e, const MonomialOrder& ord) const {
    std::vector<Term<K>> ts;
    for (const TermLit& t : e.terms) {
      K c = coeff_of(t);
      if (c.is_zero()) continue;
      ts.push_back({std::move(c), t.mono});
    }
    return Poly<K>::from_terms(std::move(ts), ord);
  }

  // Terms with a zero coefficient are dropped before construction: the
  // literal `0` carries no component and must not reach the comparator.
  VecElem<K> vec_from(const ExprLit& e, const ModuleOrder& ord) const {
    std::vector<VTerm<K>> ts;
    for (const TermLit& t : e.terms) {
      K c = coeff_of(t);
      if (c.is_zero()) continue;
      ts.push_back({std::move(c), t.mono, t.comp});
    }
    return VecElem<K>::from_terms(std::move(ts), ord);
  }

  ModuleOrder mod_order(const ModB& m) const {
    const MonomialOrder& base = algebras_[m.alg].order;
    return m.pot ? ModuleOrder::pot(base) : ModuleOrder::top(base);
  }
  ModuleOrder sub_order(const SubB& s) const {
    const MonomialOrder& base = algebras_[s.alg].order;
    return s.pot ? ModuleOrder::pot(base) : ModuleOrder::top(base);
  }

  static std::string brace_set(const std::vector<std::string>& xs) {
    if (xs.empty()) return "{ }";
    std::string out = "{ ";
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) out += ", ";
      out += xs[i];
    }
    return out + " }";
  }
  std::string gen_set(int alg, const std::vector<int>& ids) const {
    std::vector<std::string> xs;
    for (int i : ids) xs.push_back(algebras_[alg].names[i]);
    return brace_set(xs);
  }
  static std::string comp_set(const std::vector<int>& ids) {
    std::vector<std::string> xs;
    for (int i : ids) xs.push_back("e" + std::to_string(i));
    return brace_set(xs);
  }

  /* declarations */

  void exec_one(const AlgebraDecl& d) {
    if (!overridden_ && !field_.accepts(d.field))
      throw SessionError("algebra " + d.name + ": declared field " +
                         field_spec_name(d.field) +
                         " does not match the session field " + field_.name());
    MonomialOrder ord = order_from_spec(d.order);
    const int n = static_cast<int>(d.gens.size());

    AlgebraDef<K> def{d.gens, field_.one(), ord, RelationTable<K>(n)};
    std::vector<std::vector<bool>> declared(n, std::vector<bool>(n, false));
    for (const RelDecl& r : d.rels) {
      Poly<K> rhs = poly_from(r.rhs, ord);
      Exponent mono = Exponent::unit(static_cast<std::size_t>(n), r.i) +
                      Exponent::unit(static_cast<std::size_t>(n), r.j);
      K lambda{};
      for (const Term<K>& t : rhs.terms())
        if (t.m == mono) lambda = t.c;
      Poly<K> f = lambda.is_zero()
                      ? rhs
                      : Poly<K>::sub(rhs, Poly<K>::monomial(lambda, mono), ord);
      def.relations.set(r.j, r.i, std::move(lambda), std::move(f));
      declared[r.j][r.i] = true;
    }
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) {
        if (declared[j][i]) continue;
        warn("algebra " + d.name + ": relation " + d.gens[j] + "*" +
             d.gens[i] + " not declared, assuming " + d.gens[j] + "*" +
             d.gens[i] + " = " + d.gens[i] + "*" + d.gens[j]);
        def.relations.set(j, i, field_.one(), Poly<K>());
      }

    AlgB entry{d.name, d.gens, ord, std::nullopt, std::nullopt};
    auto res = validate_algebra(std::move(def));
    if (auto* ok = std::get_if<ValidatedAlgebra<K>>(&res))
      entry.alg = std::move(*ok);
    else
      entry.bad = std::move(std::get<ValidationError<K>>(res));
    algebras_.push_back(std::move(entry));
    active_ = static_cast<int>(algebras_.size()) - 1;
    bind_[d.name] = AlgRef{active_};
  }

  void exec_one(const IdealDecl& d) {
    const MonomialOrder& ord = algebras_[active_].order;
    IdealB b{active_, {}};
    for (const ExprLit& e : d.gens) b.gens.push_back(poly_from(e, ord));
    bind_[d.name] = std::move(b);
  }

  void exec_one(const ModuleDecl& d) {
    bind_[d.name] = ModB{active_, d.rank, d.pot};
  }

  void exec_one(const SubmoduleDecl& d) {
    const ModB& m = get<ModB>(d.module, "a module");
    ModuleOrder ord = mod_order(m);
    SubB b{m.alg, m.rank, m.pot, d.module, {}};
    for (const ExprLit& e : d.gens) b.gens.push_back(vec_from(e, ord));
    bind_[d.name] = std::move(b);
  }

  void exec_one(const HomDecl& d) {
    const ModB& src = get<ModB>(d.src_module, "a module");
    const ModB& tgt = get<ModB>(d.tgt_module, "a module");
    const ValidatedAlgebra<K>& A = need_alg(src.alg, "hom " + d.name);
    ModuleOrder pot = ModuleOrder::pot(A.order());
    std::vector<VecElem<K>> images;
    for (const ExprLit& e : d.images) images.push_back(vec_from(e, pot));

    if (d.src_sub.empty() && d.tgt_sub.empty()) {
      FreeHom<K> h(A, src.rank, tgt.rank, std::move(images));
      bind_[d.name] = HomB{src.alg, src.rank, tgt.rank, std::move(h)};
      return;
    }
    std::vector<VecElem<K>> n1, n2;
    if (!d.src_sub.empty()) n1 = get<SubB>(d.src_sub, "a submodule").gens;
    if (!d.tgt_sub.empty()) n2 = get<SubB>(d.tgt_sub, "a submodule").gens;
    auto made = QuotientHom<K>::make(A, src.rank, std::move(n1), tgt.rank,
                                     std::move(n2), std::move(images));
    if (auto* err = std::get_if<HomNotWellDefined>(&made)) {
      const SubB& sb = get<SubB>(d.src_sub, "a submodule");
      std::string q = elem_str(A.names(), sb.gens[err->q], src.rank);
      result("hom " + d.name,
             "not well defined, image of source relation " + q +
                 " leaves the target submodule",
             nlohmann::ordered_json{{"well_defined", false},
                                    {"obstruction", q}});
      return;
    }
    bind_[d.name] = HomB{src.alg, src.rank, tgt.rank,
                         std::move(std::get<QuotientHom<K>>(made))};
  }

  /* statement context for wrapped library errors */

  static std::string stmt_context(const AlgebraDecl& d) {
    return "algebra " + d.name;
  }
  static std::string stmt_context(const IdealDecl& d) {
    return "ideal " + d.name;
  }
  static std::string stmt_context(const ModuleDecl& d) {
    return "module " + d.name;
  }
  static std::string stmt_context(const SubmoduleDecl& d) {
    return "submodule " + d.name;
  }
  static std::string stmt_context(const HomDecl& d) { return "hom " + d.name; }
  static std::string stmt_context(const Command& c) {
    return command_word(c.kind) + " " + c.a;
  }

  /* commands */

  void exec_one(const Command& c) { run_command(c); }

  static std::string command_word(Command::Kind k) {
    switch (k) {
      case Command::Kind::validate: return "validate";
      case Command::Kind::gb: return "gb";
      case Command::Kind::nf: return "nf";
      case Command::Kind::member: return "member";
      case Command::Kind::eliminate: return "eliminate";
      case Command::Kind::intersect: return "intersect";
      case Command::Kind::windep: return "windep";
      case Command::Kind::dim: return "dim";
      case Command::Kind::kernel: return "kernel";
      case Command::Kind::member_image: return "member-image";
      case Command::Kind::surjective: return "surjective";
    }
    throw InternalError("unreachable command kind");
  }

  void run_command(const Command& c) {
    switch (c.kind) {
      case Command::Kind::validate: cmd_validate(c); return;
      case Command::Kind::gb: cmd_gb(c); return;
      case Command::Kind::nf: cmd_nf(c, /*membership=*/false); return;
      case Command::Kind::member: cmd_nf(c, /*membership=*/true); return;
      case Command::Kind::eliminate: cmd_eliminate(c); return;
      case Command::Kind::intersect: cmd_intersect(c); return;
      case Command::Kind::windep: cmd_windep(c); return;
      case Command::Kind::dim: cmd_dim(c); return;
      case Command::Kind::kernel: cmd_kernel(c); return;
      case Command::Kind::member_image: cmd_member_image(c); return;
      case Command::Kind::surjective: cmd_surjective(c); return;
    }
    throw InternalError("unreachable command kind");
  }

  void cmd_validate(const Command& c) {
    const AlgRef& r = get<AlgRef>(c.a, "an algebra");
    const AlgB& a = algebras_[r.idx];
    std::string label = "validate " + c.a;
    if (a.alg) {
      result(label, "ok", nlohmann::ordered_json{{"ok", true}});
    } else {
      std::string msg = validation_message(a.names, *a.bad);
      result(label, "invalid: " + msg,
             nlohmann::ordered_json{{"ok", false}, {"reason", msg}});
    }
  }

  // Shared by gb / nf / member: the reduced basis a binding denotes.
  GroebnerBasis<K> basis_of(const std::string& name, const Binding& b,
                            const std::string& ctx) const {
    if (const IdealB* id = std::get_if<IdealB>(&b)) {
      const ValidatedAlgebra<K>& A = need_alg(id->alg, ctx);
      return reduce_basis(buchberger_ideal(A, id->gens, A.order()));
    }
    if (const SubB* sb = std::get_if<SubB>(&b)) {
      const ValidatedAlgebra<K>& A = need_alg(sb->alg, ctx);
      return reduce_basis(buchberger(A, sb->gens, sub_order(*sb), sb->rank));
    }
    throw SessionError("'" + name + "' is not an ideal or submodule");
  }

  void cmd_gb(const Command& c) {
    GroebnerBasis<K> G = basis_of(c.a, lookup(c.a), "gb " + c.a);
    result("gb " + c.a, basis_str(G),
           nlohmann::ordered_json{{"basis", basis_strings(G)}});
  }

  void cmd_nf(const Command& c, bool membership) {
    const std::string word = membership ? "member" : "nf";
    const std::string sep = membership ? " in " : " mod ";
    const Binding& b = lookup(c.a);
    std::string ctx = word + " " + c.a;
    GroebnerBasis<K> G = basis_of(c.a, b, ctx);
    const ValidatedAlgebra<K>& A = G.algebra;

    VecElem<K> xi;
    std::string expr;
    if (std::holds_alternative<IdealB>(b)) {
      Poly<K> p = poly_from(*c.expr, A.order());
      expr = poly_str(A.names(), p);
      xi = VecElem<K>::from_poly(p, 0, G.order);
    } else {
      xi = vec_from(*c.expr, G.order);
      expr = elem_str(A.names(), xi, G.rank);
    }
    std::string label = word + " " + expr + sep + c.a;

    TraceSink<K> tr;
    const TraceSink<K>* trp = nullptr;
    if (trace_) {
      tr = make_trace(A.names(), G.rank);
      trp = &tr;
    }
    if (membership) {
      bool in = member(xi, G, trp).has_value();
      result(label, in ? "true" : "false",
             nlohmann::ordered_json{{"member", in}});
    } else {
      VecElem<K> r = normal_form(A, xi, G.elems, G.order, trp).remainder;
      std::string s = elem_str(A.names(), r, G.rank);
      result(label, s, nlohmann::ordered_json{{"nf", s}});
    }
  }

  void cmd_eliminate(const Command& c) {
    const Binding& b = lookup(c.a);
    if (const IdealB* id = std::get_if<IdealB>(&b)) {
      std::string label =
          "eliminate " + c.a + " keep " + gen_set(id->alg, c.keep);
      const ValidatedAlgebra<K>& A = need_alg(id->alg, label);
      EliminationResult<K> res = eliminate_ideal(A, id->gens, c.keep);
      if (auto* fail = std::get_if<ClosureFailure>(&res)) {
        std::string msg = closure_message(A.names(), *fail);
        std::string mono = monomial_str(A.names(), fail->monomial);
        if (mono.empty()) mono = "1";
        result(label, msg,
               nlohmann::ordered_json{
                   {"closure_failure",
                    nlohmann::ordered_json{
                        {"relation", A.name(fail->j) + "*" + A.name(fail->i)},
                        {"monomial", mono}}}});
        return;
      }
      const SubalgebraGB<K>& s = std::get<SubalgebraGB<K>>(res);
      result(label, basis_str(s.basis),
             nlohmann::ordered_json{{"basis", basis_strings(s.basis)},
                                    {"subalgebra", s.subalgebra.names()}});
      return;
    }
    const SubB& sb = get<SubB>(c.a, "an ideal or submodule");
    std::string label = "eliminate " + c.a + " keep " + comp_set(c.keep);
    const ValidatedAlgebra<K>& A = need_alg(sb.alg, label);
    GroebnerBasis<K> G = eliminate_module(A, sb.gens, c.keep, sb.rank);
    // Components come back re-indexed 0..|U|-1; report them in ambient
    // numbering under the module's declared order.
    ModuleOrder ord = sub_order(sb);
    std::vector<VecElem<K>> elems;
    for (const VecElem<K>& g : G.elems)
      elems.push_back(g.mapped(
          [&](const VTerm<K>& t) {
            return VTerm<K>{t.c, t.m, c.keep[static_cast<std::size_t>(t.comp)]};
          },
          ord));
    GroebnerBasis<K> out{A, std::move(ord), sb.rank, std::move(elems), true};
    result(label, basis_str(out),
           nlohmann::ordered_json{{"basis", basis_strings(out)}});
  }

  void cmd_intersect(const Command& c) {
    std::string label = "intersect " + c.a + " " + c.b;
    const Binding& ba = lookup(c.a);
    if (const IdealB* i1 = std::get_if<IdealB>(&ba)) {
      const IdealB& i2 = get<IdealB>(c.b, "an ideal");
      if (i1->alg != i2.alg)
        throw SessionError(label + ": ideals over different algebras");
      const ValidatedAlgebra<K>& A = need_alg(i1->alg, label);
      GroebnerBasis<K> G = intersect_ideals(A, i1->gens, i2.gens);
      result(label, basis_str(G),
             nlohmann::ordered_json{{"basis", basis_strings(G)}});
      return;
    }
    const SubB& s1 = get<SubB>(c.a, "an ideal or submodule");
    const SubB& s2 = get<SubB>(c.b, "a submodule");
    if (s1.module != s2.module)
      throw SessionError(label + ": submodules of different modules");
    const ValidatedAlgebra<K>& A = need_alg(s1.alg, label);
    GroebnerBasis<K> G =
        intersect_submodules(A, s1.gens, s2.gens, sub_order(s1), s1.rank);
    result(label, basis_str(G),
           nlohmann::ordered_json{{"basis", basis_strings(G)}});
  }

  void cmd_windep(const Command& c) {
    const IdealB& id = get<IdealB>(c.a, "an ideal");
    std::string label = "windep " + c.a + " " + gen_set(id.alg, c.keep);
    const ValidatedAlgebra<K>& A = need_alg(id.alg, label);
    bool w = weakly_independent(A, id.gens, c.keep);
    result(label, w ? "true" : "false",
           nlohmann::ordered_json{{"windep", w}});
  }

  void cmd_dim(const Command& c) {
    const IdealB& id = get<IdealB>(c.a, "an ideal");
    std::string label = "dim " + c.a;
    const ValidatedAlgebra<K>& A = need_alg(id.alg, label);
    DimSearchResult r = gk_dim_search(A, id.gens);
    std::string body = std::string("dim ") + (r.exact ? "= " : ">= ") +
                       std::to_string(r.dim) + " witness " +
                       gen_set(id.alg, r.witness);
    std::vector<std::string> wit;
    for (int i : r.witness) wit.push_back(A.name(i));
    result(label, body,
           nlohmann::ordered_json{
               {"dim", r.dim}, {"exact", r.exact}, {"witness", wit}});
  }

  void cmd_kernel(const Command& c) {
    const HomB& h = get<HomB>(c.a, "a hom");
    std::string label = "kernel " + c.a;
    GroebnerBasis<K> G = std::visit(
        [](const auto& phi) {
          if constexpr (std::is_same_v<std::decay_t<decltype(phi)>,
                                       FreeHom<K>>)
            return kernel_free(phi);
          else
            return kernel_quotient(phi);
        },
        h.h);
    result(label, basis_str(G),
           nlohmann::ordered_json{{"basis", basis_strings(G)}});
  }

  void cmd_member_image(const Command& c) {
    const HomB& h = get<HomB>(c.a, "a hom");
    const ValidatedAlgebra<K>& A = need_alg(h.alg, "member-image " + c.a);
    ModuleOrder pot = ModuleOrder::pot(A.order());
    VecElem<K> eta = vec_from(*c.expr, pot);
    std::string label = "member-image " + c.a + " " +
                        elem_str(A.names(), eta, h.tgt_rank);
    std::optional<VecElem<K>> pre = std::visit(
        [&](const auto& phi) {
          if constexpr (std::is_same_v<std::decay_t<decltype(phi)>,
                                       FreeHom<K>>)
            return image_membership(phi, eta);
          else
            return image_membership_quotient(phi, eta);
        },
        h.h);
    if (pre) {
      std::string s = elem_str(A.names(), *pre, h.src_rank);
      result(label, "preimage " + s,
             nlohmann::ordered_json{{"in_image", true}, {"preimage", s}});
    } else {
      result(label, "not in image",
             nlohmann::ordered_json{{"in_image", false}});
    }
  }

  void cmd_surjective(const Command& c) {
    const HomB& h = get<HomB>(c.a, "a hom");
    std::string label = "surjective " + c.a;
    bool onto = std::visit(
        [](const auto& phi) {
          if constexpr (std::is_same_v<std::decay_t<decltype(phi)>,
                                       FreeHom<K>>)
            return is_surjective_free(phi).has_value();
          else
            return is_surjective_quotient(phi).has_value();
        },
        h.h);
    result(label, onto ? "true" : "false",
           nlohmann::ordered_json{{"surjective", onto}});
  }

  FieldCtx<K> field_;
  EventSink sink_;
  bool trace_;
  bool overridden_;

  std::vector<AlgB> algebras_;
  int active_ = -1;
  std::map<std::string, Binding> bind_;
};

}  // namespace solvkit

#endif  // SOLVKIT_SESSION_HPP
