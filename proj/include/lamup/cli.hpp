#pragma once

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>

#include "lamup/alpha.hpp"
#include "lamup/debruijn.hpp"
#include "lamup/freevars.hpp"
#include "lamup/selftest.hpp"
#include "lamup/syntax.hpp"
#include "lamup/term.hpp"

namespace lamup::cli {

namespace detail {

// A fully formatted one-line diagnostic, ready for stderr.
struct Diagnostic : std::runtime_error {
  explicit Diagnostic(std::string msg) : std::runtime_error(std::move(msg)) {}
};

// Runs a parse step under an argument label so diagnostics name both the
// argument and the offending span inside it.
template <typename F>
auto parse_arg(const std::string& label, F&& f) {
  try {
    return f();
  } catch (const ParseError& e) {
    throw Diagnostic(label + ": " + e.message() + " at " +
                     std::to_string(e.span().start) + ".." +
                     std::to_string(e.span().end));
  } catch (const std::invalid_argument& e) {
    throw Diagnostic(label + ": " + e.what());
  }
}

// '-' is the whole standard input (read once, shared between arguments);
// '@path' is the contents of a file; anything else is the text itself.
inline std::string resolve_text(const std::string& raw, std::istream& in,
                                std::optional<std::string>& stdin_cache) {
  if (raw == "-") {
    if (!stdin_cache) {
      std::ostringstream buf;
      buf << in.rdbuf();
      stdin_cache = buf.str();
    }
    return *stdin_cache;
  }
  if (!raw.empty() && raw.front() == '@') {
    std::string path = raw.substr(1);
    std::ifstream file(path);
    if (!file) throw Diagnostic("cannot read file '" + path + "'");
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
  }
  return raw;
}

// The whole argument must be a single variable name.
inline VarName parse_var(std::string_view text) {
  lamup::detail::Lexer lx(text);
  const lamup::detail::Token& t = lx.peek();
  if (t.kind != lamup::detail::Tok::Ident) {
    throw ParseError("expected variable name, found " + lamup::detail::describe(t),
                     t.span);
  }
  VarName v = lamup::detail::to_var(lx.take());
  const lamup::detail::Token& rest = lx.peek();
  if (rest.kind != lamup::detail::Tok::End) {
    throw ParseError("unexpected " + lamup::detail::describe(rest), rest.span);
  }
  return v;
}

inline std::string error_prefix(const std::ostream& err) {
  bool color = &err == &std::cerr && ::isatty(2) != 0 &&
               std::getenv("NO_COLOR") == nullptr;
  return color ? "\033[31merror:\033[0m " : "error: ";
}

}  // namespace detail

// Entry point behind the lamup binary, separated from main() so the whole
// surface is testable in-process. Exit codes: 0 for success (including
// 'equivalent' and a passing selftest), 1 for a well-formed negative answer
// ('distinct', a failing selftest), 2 for any input or usage error.
inline int run(const std::vector<std::string>& args, std::istream& in,
               std::ostream& out, std::ostream& err) {
  CLI::App app{"lambda terms with explicit weakenings", "lamup"};
  app.require_subcommand(1);

  std::string alpha_a, alpha_b, alpha_var = "z";
  CLI::App* alpha_cmd =
      app.add_subcommand("alpha", "decide whether two terms are alpha-equivalent");
  alpha_cmd->add_option("term1", alpha_a, "first term")->required();
  alpha_cmd->add_option("term2", alpha_b, "second term")->required();
  alpha_cmd->add_option("--var", alpha_var, "canonical binder variable");

  std::string db_term, db_var = "z";
  CLI::App* db_cmd =
      app.add_subcommand("db", "rewrite every binder to the canonical variable");
  db_cmd->add_option("term", db_term, "term")->required();
  db_cmd->add_option("--var", db_var, "canonical binder variable");

  std::string tr_term, tr_ctx = "nil";
  CLI::App* tr_cmd = app.add_subcommand(
      "translate", "read a term as a nameless term relative to a context");
  tr_cmd->add_option("term", tr_term, "term")->required();
  tr_cmd->add_option("--ctx", tr_ctx, "context, outermost first");

  std::string undb_term, undb_var = "z";
  CLI::App* undb_cmd = app.add_subcommand(
      "undb", "read a nameless term back with every binder named");
  undb_cmd->add_option("dbterm", undb_term, "nameless term")->required();
  undb_cmd->add_option("--var", undb_var, "canonical binder variable");

  std::string derive_term, derive_ctx = "nil";
  CLI::App* derive_cmd = app.add_subcommand(
      "derive", "print the unique derivation of ctx |- term");
  derive_cmd->add_option("term", derive_term, "term")->required();
  derive_cmd->add_option("--ctx", derive_ctx, "context, outermost first");

  std::string ren_spec, ren_term;
  CLI::App* ren_cmd = app.add_subcommand("rename", "apply a renaming to a term");
  ren_cmd->add_option("renaming", ren_spec, "renaming, e.g. '{y x}_a,b'")
      ->required();
  ren_cmd->add_option("term", ren_term, "term")->required();

  std::string chain_var, chain_ctx, chain_term;
  CLI::App* chain_cmd = app.add_subcommand(
      "chain", "send every context variable to one variable, depth by depth");
  chain_cmd->add_option("var", chain_var, "target variable")->required();
  chain_cmd->add_option("ctx", chain_ctx, "context, outermost first")->required();
  chain_cmd->add_option("term", chain_term, "term")->required();

  std::string fv_term_text;
  CLI::App* fv_cmd =
      app.add_subcommand("fv", "free variables of a term by weakening depth");
  fv_cmd->add_option("term", fv_term_text, "term")->required();

  std::string fvdb_term_text;
  CLI::App* fvdb_cmd = app.add_subcommand(
      "fvdb", "free variables of a nameless term by weakening depth");
  fvdb_cmd->add_option("dbterm", fvdb_term_text, "nameless term")->required();

  selftest::Config st_cfg;
  CLI::App* st_cmd =
      app.add_subcommand("selftest", "run the full property suite");
  st_cmd->add_option("--cases", st_cfg.cases, "random cases per suite");
  st_cmd->add_option("--max-size", st_cfg.max_size, "size budget for random terms");
  st_cmd->add_option("--seed", st_cfg.seed, "generator seed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
      return app.exit(e, out, err);
    }
    err << detail::error_prefix(err) << e.what() << '\n';
    return 2;
  }

  try {
    std::optional<std::string> stdin_cache;
    auto text = [&](const std::string& raw) {
      return detail::resolve_text(raw, in, stdin_cache);
    };
    auto term_of = [&](const std::string& label, const std::string& raw) {
      return detail::parse_arg(label, [&] { return parse_term(text(raw)); });
    };
    auto dbterm_of = [&](const std::string& label, const std::string& raw) {
      return detail::parse_arg(label, [&] { return parse_dbterm(text(raw)); });
    };
    auto var_of = [&](const std::string& label, const std::string& raw) {
      return detail::parse_arg(label, [&] { return detail::parse_var(raw); });
    };
    auto ctx_of = [&](const std::string& label, const std::string& raw) {
      return detail::parse_arg(label, [&] { return parse_context(raw); });
    };

    if (alpha_cmd->parsed()) {
      Term a = term_of("term 1", alpha_a);
      Term b = term_of("term 2", alpha_b);
      VarName z = var_of("--var", alpha_var);
      if (alpha_eq(a, b, z)) {
        out << "equivalent\n";
        return 0;
      }
      out << "distinct\n";
      return 1;
    }
    if (db_cmd->parsed()) {
      Term m = term_of("term", db_term);
      out << print_term(db_named(var_of("--var", db_var), m)) << '\n';
      return 0;
    }
    if (tr_cmd->parsed()) {
      Term m = term_of("term", tr_term);
      out << print_dbterm(translate(ctx_of("--ctx", tr_ctx), m)) << '\n';
      return 0;
    }
    if (undb_cmd->parsed()) {
      DbTerm a = dbterm_of("dbterm", undb_term);
      out << print_term(db_named_generalized(var_of("--var", undb_var), a))
          << '\n';
      return 0;
    }
    if (derive_cmd->parsed()) {
      Term m = term_of("term", derive_term);
      out << print_derivation(derive(ctx_of("--ctx", derive_ctx), m));
      return 0;
    }
    if (ren_cmd->parsed()) {
      Renaming f = detail::parse_arg(
          "renaming", [&] { return parse_renaming(text(ren_spec)); });
      Term m = term_of("term", ren_term);
      out << print_term(apply_renaming(f, m)) << '\n';
      return 0;
    }
    if (chain_cmd->parsed()) {
      VarName z = var_of("var", chain_var);
      Context g = ctx_of("ctx", chain_ctx);
      Term m = term_of("term", chain_term);
      out << print_term(chain_rename(z, g, m)) << '\n';
      return 0;
    }
    if (fv_cmd->parsed()) {
      out << print_fvseq(fv_term(term_of("term", fv_term_text))) << '\n';
      return 0;
    }
    if (fvdb_cmd->parsed()) {
      out << print_fvseq(fv_dbterm(dbterm_of("dbterm", fvdb_term_text))) << '\n';
      return 0;
    }
    if (st_cmd->parsed()) {
      return selftest::run_selftest(st_cfg, out);
    }
  } catch (const detail::Diagnostic& e) {
    err << detail::error_prefix(err) << e.what() << '\n';
    return 2;
  }
  err << detail::error_prefix(err) << "no subcommand selected\n";
  return 2;
}

}  // namespace lamup::cli
