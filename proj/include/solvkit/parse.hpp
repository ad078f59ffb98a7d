// solvkit: exact computer algebra for solvable polynomial algebras.
// Distributed under the Apache License, Version 2.0; see LICENSE.
//
// Script format (.solv): a sequence of declarations and commands over a
// single coefficient field. Newlines are whitespace; '#' starts a comment.
//
//   algebra A field QQ gens x y order deglex(x, y)
//     rel y*x = x*y
//   ideal I = x - y^2, y^3
//   gb I
//   eliminate I keep { y }
//
// The parser resolves identifiers as it goes (generator names against the
// algebra a binding belongs to, binding names against earlier declarations)
// so every diagnostic carries a line:column position. Coefficients stay
// decimal literals here; the session maps them into the active field, which
// is what lets one parse serve both QQ and GF(p) runs.

#ifndef SOLVKIT_PARSE_HPP
#define SOLVKIT_PARSE_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "solvkit/errors.hpp"
#include "solvkit/exponent.hpp"
#include "solvkit/fields.hpp"

namespace solvkit {

struct SrcPos {
  int line = 1;
  int col = 1;
};

struct ParseError : std::runtime_error {
  ParseError(SrcPos p, const std::string& what)
      : std::runtime_error(std::to_string(p.line) + ":" +
                           std::to_string(p.col) + ": " + what),
        pos(p),
        msg(what) {}
  SrcPos pos;
  std::string msg;  // without the position prefix
};

/* ------------------------------------------------------------------ AST -- */

struct FieldSpec {
  bool rationals = true;
  long long modulus = 0;  // GF(p) only
};

struct OrderSpec {
  enum class Kind { lex, deglex, degrevlex, elim };
  Kind kind = Kind::deglex;
  std::vector<int> ids;  // priority permutation, or the elim keep set
  std::shared_ptr<const OrderSpec> base;  // elim only
};

// One signed term with the coefficient kept as decimal strings; mono has
// the arity of the owning algebra, comp is -1 in scalar context.
struct TermLit {
  bool negative = false;
  std::string num = "1";
  std::string den = "1";
  Exponent mono;
  int comp = -1;
};

struct ExprLit {
  std::vector<TermLit> terms;
  SrcPos pos;
};

struct RelDecl {
  int j = 0, i = 0;  // generator indices, j > i
  ExprLit rhs;
  SrcPos pos;
};

struct AlgebraDecl {
  std::string name;
  FieldSpec field;
  std::vector<std::string> gens;
  OrderSpec order;
  std::vector<RelDecl> rels;
  SrcPos pos;
};

struct IdealDecl {
  std::string name;
  std::vector<ExprLit> gens;
  SrcPos pos;
};

struct ModuleDecl {
  std::string name;
  int rank = 1;
  bool pot = true;  // false: TOP
  SrcPos pos;
};

struct SubmoduleDecl {
  std::string name;
  std::string module;
  std::vector<ExprLit> gens;
  SrcPos pos;
};

struct HomDecl {
  std::string name;
  std::string src_module, tgt_module;
  std::string src_sub, tgt_sub;  // empty: free side
  std::vector<ExprLit> images;
  SrcPos pos;
};

struct Command {
  enum class Kind {
    validate,
    gb,
    nf,
    member,
    eliminate,
    intersect,
    windep,
    dim,
    kernel,
    member_image,
    surjective
  };
  Kind kind = Kind::validate;
  std::string a, b;             // binding names
  std::optional<ExprLit> expr;  // nf / member / member-image
  std::vector<int> keep;        // eliminate / windep, ascending
  bool keep_components = false; // eliminate over a submodule
  SrcPos pos;
};

using Stmt = std::variant<AlgebraDecl, IdealDecl, ModuleDecl, SubmoduleDecl,
                          HomDecl, Command>;

struct Script {
  std::vector<Stmt> stmts;
};

/* ---------------------------------------------------------------- lexer -- */

namespace detail {

struct Token {
  enum class Kind { ident, keyword, number, punct, eof };
  Kind kind = Kind::eof;
  std::string text;
  SrcPos pos;
};

inline bool is_keyword(const std::string& s) {
  static const char* const kws[] = {
      "algebra",  "field",     "QQ",        "GF",        "gens",
      "order",    "rel",       "ideal",     "module",    "submodule",
      "hom",      "images",    "rank",      "in",        "over",
      "keep",     "mod",       "lex",       "deglex",    "degrevlex",
      "elim",     "pot",       "top",       "validate",  "gb",
      "nf",       "member",    "member-image", "eliminate", "intersect",
      "windep",   "dim",       "kernel",    "surjective"};
  for (const char* k : kws)
    if (s == k) return true;
  return false;
}

// True for e0, e1, ...: the reserved free-module component symbols.
inline bool is_component_symbol(const std::string& s) {
  if (s.size() < 2 || s[0] != 'e') return false;
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

inline std::vector<Token> lex(const std::string& text, SrcPos start,
                              SrcPos& end) {
  std::vector<Token> out;
  SrcPos pos = start;
  std::size_t i = 0;
  auto step = [&](char c) {
    if (c == '\n') {
      ++pos.line;
      pos.col = 1;
    } else {
      ++pos.col;
    }
  };
  auto alpha = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };

  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      step(c);
      ++i;
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') {
        step(text[i]);
        ++i;
      }
      continue;
    }
    SrcPos here = pos;
    if (alpha(c)) {
      std::string w;
      while (i < text.size() && (alpha(text[i]) || digit(text[i]))) {
        w += text[i];
        step(text[i]);
        ++i;
      }
      // The one hyphenated command name.
      if (w == "member" && text.compare(i, 6, "-image") == 0) {
        w += "-image";
        for (int k = 0; k < 6; ++k) step(text[i + k]);
        i += 6;
      }
      out.push_back({is_keyword(w) ? Token::Kind::keyword : Token::Kind::ident,
                     std::move(w), here});
      continue;
    }
    if (digit(c)) {
      std::string w;
      while (i < text.size() && digit(text[i])) {
        w += text[i];
        step(text[i]);
        ++i;
      }
      out.push_back({Token::Kind::number, std::move(w), here});
      continue;
    }
    if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      out.push_back({Token::Kind::punct, "->", here});
      step('-');
      step('>');
      i += 2;
      continue;
    }
    static const std::string puncts = "(){},=*^+-/:";
    if (puncts.find(c) != std::string::npos) {
      out.push_back({Token::Kind::punct, std::string(1, c), here});
      step(c);
      ++i;
      continue;
    }
    throw ParseError(here, std::string("unexpected character '") + c + "'");
  }
  end = pos;
  return out;
}

}  // namespace detail

/* --------------------------------------------------------------- parser -- */

// Incremental parser with a persistent binding environment, so a REPL can
// feed one line at a time while generator names keep resolving. Run mode
// feeds the whole script once.
class Parser {
 public:
  void feed(const std::string& text) {
    auto toks = detail::lex(text, feed_pos_, feed_pos_);
    ts_.insert(ts_.end(), toks.begin(), toks.end());
  }

  bool at_end() const { return k_ >= ts_.size(); }

  // Drop unconsumed tokens after an error (REPL recovery).
  void discard_pending() {
    ts_.clear();
    k_ = 0;
    limit_ = static_cast<std::size_t>(-1);
  }

  Stmt parse_statement() {
    const detail::Token& t = peek();
    if (t.kind != detail::Token::Kind::keyword)
      throw ParseError(t.pos, "expected a declaration or command, got '" +
                                  t.text + "'");
    if (t.text == "algebra") return parse_algebra();
    if (t.text == "ideal") return parse_ideal();
    if (t.text == "module") return parse_module();
    if (t.text == "submodule") return parse_submodule();
    if (t.text == "hom") return parse_hom();
    if (t.text == "rel")
      throw ParseError(t.pos, "'rel' belongs inside an algebra declaration");
    return parse_command();
  }

 private:
  using Token = detail::Token;

  struct AlgInfo {
    std::vector<std::string> gens;
  };
  enum class BKind { algebra, ideal, module, submodule, hom };
  struct BInfo {
    BKind kind = BKind::algebra;
    int algebra = -1;
    int rank = 0;  // module rank (module/submodule bindings)
    std::string module;
    int src_rank = 0, tgt_rank = 0;  // hom
  };

  /* token plumbing */

  const Token& peek() const {
    static const Token eof_tok{Token::Kind::eof, "", {}};
    if (k_ >= ts_.size() || k_ >= limit_) {
      eof_here_ = eof_tok;
      eof_here_.pos = k_ < ts_.size() ? ts_[k_].pos : feed_pos_;
      return eof_here_;
    }
    return ts_[k_];
  }
  const Token& next() {
    const Token& t = peek();
    if (t.kind != Token::Kind::eof) ++k_;
    return t;
  }
  bool is_punct(const std::string& s) const {
    const Token& t = peek();
    return t.kind == Token::Kind::punct && t.text == s;
  }
  bool is_kw(const std::string& s) const {
    const Token& t = peek();
    return t.kind == Token::Kind::keyword && t.text == s;
  }
  bool accept_punct(const std::string& s) {
    if (!is_punct(s)) return false;
    ++k_;
    return true;
  }
  void expect_punct(const std::string& s) {
    if (!accept_punct(s))
      throw ParseError(peek().pos, "expected '" + s + "'");
  }
  void expect_kw(const std::string& s) {
    if (!is_kw(s)) throw ParseError(peek().pos, "expected '" + s + "'");
    ++k_;
  }
  std::string expect_ident(const std::string& what) {
    const Token& t = peek();
    if (t.kind != Token::Kind::ident)
      throw ParseError(t.pos, "expected " + what);
    ++k_;
    return t.text;
  }
  long long expect_number(const std::string& what) {
    const Token& t = peek();
    if (t.kind != Token::Kind::number)
      throw ParseError(t.pos, "expected " + what);
    try {
      long long v = std::stoll(t.text);
      ++k_;
      return v;
    } catch (const std::out_of_range&) {
      throw ParseError(t.pos, what + " out of range");
    }
  }

  /* environment */

  const BInfo& lookup(const std::string& name, SrcPos pos) const {
    auto it = env_.find(name);
    if (it == env_.end())
      throw ParseError(pos, "unknown name '" + name + "'");
    return it->second;
  }
  const AlgInfo& active_algebra(SrcPos pos) const {
    if (active_ < 0)
      throw ParseError(pos, "no algebra has been declared yet");
    return algebras_[active_];
  }
  static int gen_index(const AlgInfo& a, const std::string& name) {
    for (std::size_t i = 0; i < a.gens.size(); ++i)
      if (a.gens[i] == name) return static_cast<int>(i);
    return -1;
  }

  /* expressions */

  // vec_rank < 0: scalar context. Otherwise components e0..e{rank-1} are
  // admitted and every nonzero term must carry one.
  ExprLit parse_expr(const AlgInfo& alg, int vec_rank) {
    ExprLit e;
    e.pos = peek().pos;
    bool neg = accept_punct("-");
    e.terms.push_back(parse_term(alg, vec_rank, neg));
    for (;;) {
      if (accept_punct("+"))
        neg = false;
      else if (accept_punct("-"))
        neg = true;
      else
        break;
      e.terms.push_back(parse_term(alg, vec_rank, neg));
    }
    return e;
  }

  TermLit parse_term(const AlgInfo& alg, int vec_rank, bool neg) {
    const int arity = static_cast<int>(alg.gens.size());
    TermLit t;
    t.negative = neg;
    t.mono = Exponent(static_cast<std::size_t>(arity));
    std::vector<long long> ev(arity, 0);

    bool any = false, coeff_seen = false, need_factor = false;
    int last_idx = -1;
    SrcPos start = peek().pos;
    for (;;) {
      const Token& tok = peek();
      bool factor_start = tok.kind == Token::Kind::number ||
                          tok.kind == Token::Kind::ident;
      if (!factor_start) {
        if (need_factor)
          throw ParseError(tok.pos, "expected a factor after '*'");
        break;
      }
      if (t.comp >= 0)
        throw ParseError(tok.pos, "component symbol must end its term");

      if (tok.kind == Token::Kind::number) {
        if (any)
          throw ParseError(tok.pos, "coefficient must lead its term");
        t.num = tok.text;
        ++k_;
        if (accept_punct("/")) {
          const Token& d = peek();
          if (d.kind != Token::Kind::number)
            throw ParseError(d.pos, "expected a denominator");
          if (d.text == "0")
            throw ParseError(d.pos, "zero denominator");
          t.den = d.text;
          ++k_;
        }
        if (is_punct("^"))
          throw ParseError(peek().pos, "cannot exponentiate a coefficient");
        coeff_seen = true;
      } else if (vec_rank >= 0 && detail::is_component_symbol(tok.text)) {
        long long comp = 0;
        try {
          comp = std::stoll(tok.text.substr(1));
        } catch (const std::out_of_range&) {
          throw ParseError(tok.pos, "component index out of range");
        }
        if (comp >= vec_rank)
          throw ParseError(tok.pos, "component " + tok.text +
                                        " exceeds the module rank " +
                                        std::to_string(vec_rank));
        t.comp = static_cast<int>(comp);
        ++k_;
      } else {
        int idx = gen_index(alg, tok.text);
        if (idx < 0)
          throw ParseError(tok.pos, "unknown identifier '" + tok.text + "'");
        if (idx < last_idx)
          throw ParseError(tok.pos, "non-PBW monomial: " + tok.text +
                                        " may not follow " +
                                        alg.gens[last_idx]);
        ++k_;
        long long ex = 1;
        if (accept_punct("^")) ex = expect_number("an exponent");
        ev[idx] += ex;
        last_idx = idx;
      }
      any = true;
      need_factor = accept_punct("*");
    }
    if (!any && !coeff_seen)
      throw ParseError(start, "expected a term");
    if (vec_rank >= 0 && t.comp < 0 && t.num != "0")
      throw ParseError(start, "module element term needs a component symbol "
                              "e0..e" + std::to_string(vec_rank - 1));
    t.mono = Exponent(std::move(ev));
    return t;
  }

  std::vector<ExprLit> parse_expr_list(const AlgInfo& alg, int vec_rank) {
    std::vector<ExprLit> out;
    out.push_back(parse_expr(alg, vec_rank));
    while (accept_punct(","))
      out.push_back(parse_expr(alg, vec_rank));
    return out;
  }

  /* declarations */

  std::string fresh_binding_name() {
    return expect_ident("a binding name");
  }

  std::vector<int> parse_id_list_braced(const AlgInfo& alg,
                                        const char* what) {
    expect_punct("{");
    std::vector<int> ids;
    for (;;) {
      const Token& t = peek();
      if (t.kind != Token::Kind::ident) break;
      int idx = gen_index(alg, t.text);
      if (idx < 0)
        throw ParseError(t.pos, "unknown identifier '" + t.text + "'");
      if (std::find(ids.begin(), ids.end(), idx) != ids.end())
        throw ParseError(t.pos, std::string("duplicate generator in ") + what);
      ids.push_back(idx);
      ++k_;
      accept_punct(",");
    }
    if (ids.empty())
      throw ParseError(peek().pos, std::string("expected generators in ") + what);
    expect_punct("}");
    std::sort(ids.begin(), ids.end());
    return ids;
  }

  OrderSpec parse_orderspec(const AlgInfo& alg) {
    const Token& t = peek();
    const int n = static_cast<int>(alg.gens.size());
    auto parse_paren_ids = [&]() {
      expect_punct("(");
      std::vector<int> ids;
      for (;;) {
        const Token& u = peek();
        if (u.kind != Token::Kind::ident) break;
        int idx = gen_index(alg, u.text);
        if (idx < 0)
          throw ParseError(u.pos, "unknown identifier '" + u.text + "'");
        if (std::find(ids.begin(), ids.end(), idx) != ids.end())
          throw ParseError(u.pos, "duplicate generator in ordering");
        ids.push_back(idx);
        ++k_;
        accept_punct(",");
      }
      expect_punct(")");
      return ids;
    };

    if (is_kw("lex") || is_kw("deglex") || is_kw("degrevlex")) {
      std::string kw = t.text;
      ++k_;
      std::vector<int> ids = parse_paren_ids();
      if (static_cast<int>(ids.size()) != n)
        throw ParseError(t.pos, kw + " must list every generator once");
      OrderSpec s;
      s.ids = std::move(ids);
      if (kw == "lex") {
        s.kind = OrderSpec::Kind::lex;
      } else if (kw == "deglex") {
        s.kind = OrderSpec::Kind::deglex;
      } else {
        for (int i = 0; i < n; ++i)
          if (s.ids[i] != i)
            throw ParseError(t.pos,
                             "degrevlex ties are fixed by the declaration "
                             "order; list the generators in that order");
        s.kind = OrderSpec::Kind::degrevlex;
      }
      return s;
    }
    if (is_kw("elim")) {
      ++k_;
      OrderSpec s;
      s.kind = OrderSpec::Kind::elim;
      s.ids = parse_id_list_braced(alg, "elim{...}");
      if (static_cast<int>(s.ids.size()) >= n)
        throw ParseError(t.pos,
                         "elim{...} must keep a proper subset of the "
                         "generators");
      expect_kw("over");
      s.base = std::make_shared<const OrderSpec>(parse_orderspec(alg));
      return s;
    }
    throw ParseError(t.pos,
                     "expected an ordering (lex, deglex, degrevlex, elim)");
  }

  Stmt parse_algebra() {
    SrcPos pos = peek().pos;
    ++k_;  // algebra
    AlgebraDecl d;
    d.pos = pos;
    d.name = fresh_binding_name();

    expect_kw("field");
    if (is_kw("QQ")) {
      ++k_;
      d.field = FieldSpec{true, 0};
    } else if (is_kw("GF")) {
      ++k_;
      bool paren = accept_punct("(");
      SrcPos ppos = peek().pos;
      long long p = expect_number("a modulus");
      if (paren) expect_punct(")");
      if (!is_prime_u64(static_cast<std::uint64_t>(p)))
        throw ParseError(ppos, "GF modulus must be prime");
      d.field = FieldSpec{false, p};
    } else {
      throw ParseError(peek().pos, "expected a field (QQ or GF <p>)");
    }

    expect_kw("gens");
    while (peek().kind == Token::Kind::ident) {
      const Token& g = peek();
      if (detail::is_component_symbol(g.text))
        throw ParseError(g.pos, "generator name '" + g.text +
                                    "' is reserved for module components");
      if (std::find(d.gens.begin(), d.gens.end(), g.text) != d.gens.end())
        throw ParseError(g.pos, "duplicate generator name " + g.text);
      d.gens.push_back(g.text);
      ++k_;
      accept_punct(",");
    }
    if (d.gens.empty())
      throw ParseError(peek().pos, "expected at least one generator");

    AlgInfo info{d.gens};
    expect_kw("order");
    d.order = parse_orderspec(info);

    std::vector<std::pair<int, int>> seen;
    while (is_kw("rel")) {
      RelDecl r;
      r.pos = peek().pos;
      ++k_;
      SrcPos jpos = peek().pos;
      std::string jn = expect_ident("a generator");
      int j = gen_index(info, jn);
      if (j < 0) throw ParseError(jpos, "unknown identifier '" + jn + "'");
      expect_punct("*");
      SrcPos ipos = peek().pos;
      std::string in = expect_ident("a generator");
      int i = gen_index(info, in);
      if (i < 0) throw ParseError(ipos, "unknown identifier '" + in + "'");
      if (j == i)
        throw ParseError(ipos, "relation pairs " + jn + " with itself");
      if (j < i)
        throw ParseError(jpos, "relations must be given as higher*lower: " +
                                   in + "*" + jn + " here");
      if (std::find(seen.begin(), seen.end(), std::pair(j, i)) != seen.end())
        throw ParseError(r.pos, "duplicate relation " + jn + "*" + in);
      seen.emplace_back(j, i);
      expect_punct("=");
      r.j = j;
      r.i = i;
      r.rhs = parse_expr(info, -1);
      d.rels.push_back(std::move(r));
    }

    algebras_.push_back(std::move(info));
    active_ = static_cast<int>(algebras_.size()) - 1;
    env_[d.name] = BInfo{BKind::algebra, active_, 0, "", 0, 0};
    return d;
  }

  Stmt parse_ideal() {
    SrcPos pos = peek().pos;
    ++k_;
    IdealDecl d;
    d.pos = pos;
    d.name = fresh_binding_name();
    const AlgInfo& alg = active_algebra(pos);
    expect_punct("=");
    d.gens = parse_expr_list(alg, -1);
    env_[d.name] = BInfo{BKind::ideal, active_, 0, "", 0, 0};
    return d;
  }

  Stmt parse_module() {
    SrcPos pos = peek().pos;
    ++k_;
    ModuleDecl d;
    d.pos = pos;
    d.name = fresh_binding_name();
    active_algebra(pos);
    expect_kw("rank");
    SrcPos rpos = peek().pos;
    long long r = expect_number("a rank");
    if (r < 1) throw ParseError(rpos, "module rank must be at least 1");
    d.rank = static_cast<int>(r);
    if (is_kw("order")) {
      ++k_;
      if (is_kw("pot")) {
        ++k_;
        d.pot = true;
      } else if (is_kw("top")) {
        ++k_;
        d.pot = false;
      } else {
        throw ParseError(peek().pos, "expected 'pot' or 'top'");
      }
    }
    env_[d.name] = BInfo{BKind::module, active_, d.rank, "", 0, 0};
    return d;
  }

  Stmt parse_submodule() {
    SrcPos pos = peek().pos;
    ++k_;
    SubmoduleDecl d;
    d.pos = pos;
    d.name = fresh_binding_name();
    expect_kw("in");
    SrcPos mpos = peek().pos;
    d.module = expect_ident("a module name");
    const BInfo& m = lookup(d.module, mpos);
    if (m.kind != BKind::module)
      throw ParseError(mpos, "'" + d.module + "' is not a module");
    expect_punct("=");
    d.gens = parse_expr_list(algebras_[m.algebra], m.rank);
    env_[d.name] = BInfo{BKind::submodule, m.algebra, m.rank, d.module, 0, 0};
    return d;
  }

  Stmt parse_hom() {
    SrcPos pos = peek().pos;
    ++k_;
    HomDecl d;
    d.pos = pos;
    d.name = fresh_binding_name();
    expect_punct(":");

    auto parse_side = [&](std::string& mod, std::string& sub) -> const BInfo& {
      SrcPos mpos = peek().pos;
      mod = expect_ident("a module name");
      const BInfo& m = lookup(mod, mpos);
      if (m.kind != BKind::module)
        throw ParseError(mpos, "'" + mod + "' is not a module");
      if (accept_punct("/")) {
        SrcPos spos = peek().pos;
        sub = expect_ident("a submodule name");
        const BInfo& s = lookup(sub, spos);
        if (s.kind != BKind::submodule || s.module != mod)
          throw ParseError(spos, "'" + sub + "' is not a submodule of " + mod);
      }
      return m;
    };

    const BInfo& src = parse_side(d.src_module, d.src_sub);
    expect_punct("->");
    const BInfo& tgt = parse_side(d.tgt_module, d.tgt_sub);
    if (src.algebra != tgt.algebra)
      throw ParseError(pos, "hom between modules over different algebras");

    expect_kw("images");
    d.images = parse_expr_list(algebras_[src.algebra], tgt.rank);
    if (static_cast<int>(d.images.size()) != src.rank)
      throw ParseError(pos, "expected " + std::to_string(src.rank) +
                                " images for a rank " +
                                std::to_string(src.rank) + " source, got " +
                                std::to_string(d.images.size()));
    env_[d.name] = BInfo{BKind::hom, src.algebra, 0, "", src.rank, tgt.rank};
    return d;
  }

  /* commands */

  const BInfo& named_kind(const std::string& name, SrcPos pos, BKind want,
                          const char* what) const {
    const BInfo& b = lookup(name, pos);
    if (b.kind != want)
      throw ParseError(pos, "'" + name + "' is not " + std::string(what));
    return b;
  }

  // nf/member write the expression before the binding it is read against;
  // scan ahead to the separator keyword, resolve the binding, then parse
  // the buffered range under that binding's algebra.
  void parse_expr_before(Command& c, const char* sep) {
    std::size_t start = k_;
    while (!(peek().kind == Token::Kind::keyword && peek().text == sep)) {
      const Token& t = peek();
      if (t.kind == Token::Kind::eof || t.kind == Token::Kind::keyword)
        throw ParseError(t.pos, std::string("expected '") + sep +
                                    " <name>' after the expression");
      ++k_;
    }
    ++k_;  // sep
    SrcPos npos = peek().pos;
    c.a = expect_ident("an ideal or submodule name");
    const BInfo& b = lookup(c.a, npos);
    if (b.kind != BKind::ideal && b.kind != BKind::submodule)
      throw ParseError(npos, "'" + c.a + "' is not an ideal or submodule");
    std::size_t after = k_;
    k_ = start;
    limit_ = after - 2;  // the separator keyword sits right before the name
    c.expr = parse_expr(algebras_[b.algebra],
                        b.kind == BKind::submodule ? b.rank : -1);
    if (k_ != limit_)
      throw ParseError(ts_[k_].pos,
                       "unexpected '" + ts_[k_].text + "' in expression");
    limit_ = static_cast<std::size_t>(-1);
    k_ = after;
  }

  Stmt parse_command() {
    SrcPos pos = peek().pos;
    std::string kw = peek().text;
    ++k_;
    Command c;
    c.pos = pos;

    if (kw == "validate") {
      c.kind = Command::Kind::validate;
      SrcPos npos = peek().pos;
      c.a = expect_ident("an algebra name");
      named_kind(c.a, npos, BKind::algebra, "an algebra");
      return c;
    }
    if (kw == "gb") {
      c.kind = Command::Kind::gb;
      SrcPos npos = peek().pos;
      c.a = expect_ident("an ideal or submodule name");
      const BInfo& b = lookup(c.a, npos);
      if (b.kind != BKind::ideal && b.kind != BKind::submodule)
        throw ParseError(npos, "'" + c.a + "' is not an ideal or submodule");
      return c;
    }
    if (kw == "nf") {
      c.kind = Command::Kind::nf;
      parse_expr_before(c, "mod");
      return c;
    }
    if (kw == "member") {
      c.kind = Command::Kind::member;
      parse_expr_before(c, "in");
      return c;
    }
    if (kw == "eliminate") {
      c.kind = Command::Kind::eliminate;
      SrcPos npos = peek().pos;
      c.a = expect_ident("an ideal or submodule name");
      const BInfo& b = lookup(c.a, npos);
      expect_kw("keep");
      if (b.kind == BKind::ideal) {
        const AlgInfo& alg = algebras_[b.algebra];
        c.keep = parse_id_list_braced(alg, "keep {...}");
        if (static_cast<int>(c.keep.size()) >=
            static_cast<int>(alg.gens.size()))
          throw ParseError(npos,
                           "keep {...} must be a proper subset of the "
                           "generators");
      } else if (b.kind == BKind::submodule) {
        c.keep_components = true;
        expect_punct("{");
        for (;;) {
          const Token& t = peek();
          if (t.kind != Token::Kind::ident ||
              !detail::is_component_symbol(t.text))
            break;
          long long comp = std::stoll(t.text.substr(1));
          if (comp >= b.rank)
            throw ParseError(t.pos, "component " + t.text +
                                        " exceeds the module rank " +
                                        std::to_string(b.rank));
          if (std::find(c.keep.begin(), c.keep.end(),
                        static_cast<int>(comp)) != c.keep.end())
            throw ParseError(t.pos, "duplicate component in keep {...}");
          c.keep.push_back(static_cast<int>(comp));
          ++k_;
          accept_punct(",");
        }
        if (c.keep.empty())
          throw ParseError(peek().pos, "expected components e<k> in keep {...}");
        expect_punct("}");
        std::sort(c.keep.begin(), c.keep.end());
      } else {
        throw ParseError(npos, "'" + c.a + "' is not an ideal or submodule");
      }
      return c;
    }
    if (kw == "intersect") {
      c.kind = Command::Kind::intersect;
      SrcPos apos = peek().pos;
      c.a = expect_ident("an ideal or submodule name");
      SrcPos bpos = peek().pos;
      c.b = expect_ident("an ideal or submodule name");
      const BInfo& ba = lookup(c.a, apos);
      const BInfo& bb = lookup(c.b, bpos);
      if (ba.kind == BKind::ideal && bb.kind == BKind::ideal) {
        if (ba.algebra != bb.algebra)
          throw ParseError(bpos, "intersect needs ideals over the same algebra");
      } else if (ba.kind == BKind::submodule && bb.kind == BKind::submodule) {
        if (ba.module != bb.module)
          throw ParseError(bpos,
                           "intersect needs submodules of the same module");
      } else {
        throw ParseError(apos,
                         "intersect needs two ideals or two submodules");
      }
      return c;
    }
    if (kw == "windep") {
      c.kind = Command::Kind::windep;
      SrcPos npos = peek().pos;
      c.a = expect_ident("an ideal name");
      const BInfo& b = named_kind(c.a, npos, BKind::ideal, "an ideal");
      const AlgInfo& alg = algebras_[b.algebra];
      c.keep = parse_id_list_braced(alg, "{...}");
      if (static_cast<int>(c.keep.size()) >= static_cast<int>(alg.gens.size()))
        throw ParseError(npos,
                         "{...} must be a proper subset of the generators");
      return c;
    }
    if (kw == "dim") {
      c.kind = Command::Kind::dim;
      SrcPos npos = peek().pos;
      c.a = expect_ident("an ideal name");
      named_kind(c.a, npos, BKind::ideal, "an ideal");
      return c;
    }
    if (kw == "kernel" || kw == "surjective") {
      c.kind = kw == "kernel" ? Command::Kind::kernel
                              : Command::Kind::surjective;
      SrcPos npos = peek().pos;
      c.a = expect_ident("a hom name");
      named_kind(c.a, npos, BKind::hom, "a hom");
      return c;
    }
    if (kw == "member-image") {
      c.kind = Command::Kind::member_image;
      SrcPos npos = peek().pos;
      c.a = expect_ident("a hom name");
      const BInfo& b = named_kind(c.a, npos, BKind::hom, "a hom");
      c.expr = parse_expr(algebras_[b.algebra], b.tgt_rank);
      return c;
    }
    throw ParseError(pos, "unexpected '" + kw + "'");
  }

  std::vector<Token> ts_;
  std::size_t k_ = 0;
  std::size_t limit_ = static_cast<std::size_t>(-1);
  SrcPos feed_pos_{1, 1};
  mutable Token eof_here_;

  std::vector<AlgInfo> algebras_;
  int active_ = -1;
  std::map<std::string, BInfo> env_;
};

inline Script parse_script(const std::string& text) {
  Parser p;
  p.feed(text);
  Script s;
  while (!p.at_end()) s.stmts.push_back(p.parse_statement());
  return s;
}

}  // namespace solvkit

#endif  // SOLVKIT_PARSE_HPP
