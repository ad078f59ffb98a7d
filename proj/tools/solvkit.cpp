// solvkit: exact computer algebra for solvable polynomial algebras.
// Distributed under the Apache License, Version 2.0; see LICENSE.
//
// CLI driver. `solvkit run <script.solv>` executes a script; `solvkit repl`
// reads statements interactively. Flags: --json (NDJSON events instead of
// text), --field (override the coefficient field), --trace-reductions
// (report each division step in nf and member).

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "solvkit/solvkit.hpp"

namespace {

struct FieldChoice {
  bool rationals = true;
  long long p = 0;
};

// "QQ", "GF7", "GF(7)".
std::optional<FieldChoice> parse_field_flag(const std::string& s) {
  if (s == "QQ") return FieldChoice{true, 0};
  if (s.rfind("GF", 0) != 0) return std::nullopt;
  std::string rest = s.substr(2);
  if (rest.size() >= 2 && rest.front() == '(' && rest.back() == ')')
    rest = rest.substr(1, rest.size() - 2);
  if (rest.empty()) return std::nullopt;
  for (char c : rest)
    if (c < '0' || c > '9') return std::nullopt;
  long long p = 0;
  try {
    p = std::stoll(rest);
  } catch (const std::out_of_range&) {
    return std::nullopt;
  }
  if (!solvkit::is_prime_u64(static_cast<std::uint64_t>(p)))
    return std::nullopt;
  return FieldChoice{false, p};
}

solvkit::EventSink make_sink(bool json) {
  return [json](const solvkit::Event& ev) {
    if (json)
      std::cout << ev.json.dump() << "\n";
    else
      std::cout << ev.text << "\n";
  };
}

template <class K>
int run_statements(const solvkit::Script& sc, solvkit::FieldCtx<K> fc,
                   bool json, bool trace, bool overridden) {
  solvkit::Session<K> session(std::move(fc), make_sink(json), trace,
                              overridden);
  for (const solvkit::Stmt& st : sc.stmts) session.exec(st);
  return 0;
}

int do_run(const std::string& path, bool json, const std::string& field,
           bool trace) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    return 1;
  }
  std::stringstream buf;
  buf << in.rdbuf();

  solvkit::Script sc;
  try {
    sc = solvkit::parse_script(buf.str());
  } catch (const solvkit::ParseError& e) {
    std::cerr << path << ":" << e.pos.line << ":" << e.pos.col
              << ": error: " << e.msg << "\n";
    return 1;
  }

  FieldChoice fc;
  bool overridden = !field.empty();
  if (overridden) {
    auto parsed = parse_field_flag(field);
    if (!parsed) {
      std::cerr << "error: --field must be QQ or GF(p) with p prime\n";
      return 1;
    }
    fc = *parsed;
  } else {
    bool seen = false;
    for (const solvkit::Stmt& st : sc.stmts) {
      const auto* a = std::get_if<solvkit::AlgebraDecl>(&st);
      if (!a) continue;
      FieldChoice here{a->field.rationals, a->field.modulus};
      if (!seen) {
        fc = here;
        seen = true;
      } else if (fc.rationals != here.rationals || fc.p != here.p) {
        std::cerr << "error: script mixes coefficient fields; pick one with "
                     "--field\n";
        return 1;
      }
    }
  }

  if (fc.rationals)
    return run_statements<solvkit::Rational>(sc, {}, json, trace, overridden);
  return run_statements<solvkit::GFp>(sc, {fc.p}, json, trace, overridden);
}

template <class K>
int repl_loop(solvkit::FieldCtx<K> fc, bool json, bool trace,
              bool overridden) {
  solvkit::Session<K> session(std::move(fc), make_sink(json), trace,
                              overridden);
  solvkit::Parser parser;
  auto prompt = [&] {
    if (!json) std::cout << "solvkit> " << std::flush;
  };
  std::string line, acc;
  prompt();
  while (std::getline(std::cin, line)) {
    if (!line.empty() && line.back() == '\\') {
      acc += line.substr(0, line.size() - 1) + "\n";
      continue;
    }
    acc += line + "\n";
    try {
      parser.feed(acc);
      while (!parser.at_end()) session.exec(parser.parse_statement());
    } catch (const solvkit::ParseError& e) {
      std::cerr << "error: " << e.what() << "\n";
      parser.discard_pending();
    } catch (const solvkit::SessionError& e) {
      std::cerr << "error: " << e.what() << "\n";
      parser.discard_pending();
    }
    acc.clear();
    prompt();
  }
  return 0;
}

int do_repl(bool json, const std::string& field, bool trace) {
  FieldChoice fc;
  bool overridden = !field.empty();
  if (overridden) {
    auto parsed = parse_field_flag(field);
    if (!parsed) {
      std::cerr << "error: --field must be QQ or GF(p) with p prime\n";
      return 1;
    }
    fc = *parsed;
  }
  if (fc.rationals) return repl_loop<solvkit::Rational>({}, json, trace, overridden);
  return repl_loop<solvkit::GFp>({fc.p}, json, trace, overridden);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"solvkit: exact computer algebra for solvable polynomial "
               "algebras"};
  app.require_subcommand(1);
  app.fallthrough(true);

  bool json = false, trace = false;
  std::string field;
  app.add_flag("--json", json, "emit newline-delimited JSON events");
  app.add_option("--field", field, "coefficient field override: QQ or GF(p)");
  app.add_flag("--trace-reductions", trace,
               "report each division step in nf and member");

  std::string path;
  CLI::App* run = app.add_subcommand("run", "execute a .solv script");
  run->add_option("script", path, "script file")->required();
  app.add_subcommand("repl", "interactive session");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return do_run(path, json, field, trace);
    return do_repl(json, field, trace);
  } catch (const solvkit::SessionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
