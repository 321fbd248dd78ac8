// Acceptance gate for the library and CLI: twelve checks, one line each.
// Every check runs against the default verification configuration; four of
// them also carry a wall-clock budget that fails the run when exceeded.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "lamup/cli.hpp"
#include "lamup/selftest.hpp"

namespace {

using lamup::selftest::Config;
using lamup::selftest::SuiteResult;

struct Outcome {
  bool ok = false;
  std::string detail;  // shown only on failure
};

struct CliCall {
  int code = -1;
  std::string out;
};

CliCall call(std::vector<std::string> args) {
  std::istringstream in;
  std::ostringstream out;
  std::ostringstream err;
  CliCall r;
  r.code = lamup::cli::run(args, in, out, err);
  r.out = out.str() + err.str();
  return r;
}

Outcome expect_cli(std::vector<std::string> args, int code,
                   const std::string& out) {
  CliCall r = call(args);
  if (r.code != code || r.out != out) {
    std::string got = "args:";
    for (const auto& a : args) got += " '" + a + "'";
    got += " -> code " + std::to_string(r.code) + ", output \"" + r.out + "\"";
    return {false, got};
  }
  return {true, {}};
}

Outcome from_suites(const std::vector<SuiteResult>& rs) {
  for (const SuiteResult& r : rs) {
    if (!r.passed()) {
      return {false, r.name + ": " + std::to_string(r.failures) +
                         " failure(s); first: " + r.detail};
    }
  }
  return {true, {}};
}

Outcome golden_cli_examples() {
  const std::vector<std::pair<std::vector<std::string>, std::pair<int, std::string>>>
      cases = {
          {{"alpha", "\\x. z", "\\y. ^z"}, {0, "equivalent\n"}},
          {{"alpha", "\\x. z", "\\y. z"}, {0, "equivalent\n"}},
          {{"alpha", "\\x. x", "\\x. ^x"}, {1, "distinct\n"}},
          {{"alpha", "\\x.\\z. x", "\\y.\\z. y"}, {0, "equivalent\n"}},
          {{"db", "\\x.\\y. y"}, {0, "\\z.\\z. z\n"}},
          {{"db", "\\x.\\y. x"}, {0, "\\z.\\z. ^z\n"}},
          {{"db", "\\y. x"}, {0, "\\z. ^x\n"}},
          {{"translate", "\\x.\\y. x y z"}, {0, "\\.\\. (^1) 1 ^^z\n"}},
          {{"translate", "x", "--ctx", "x,y"}, {0, "^1\n"}},
          {{"undb", "\\.\\. (^1) 1 ^^z"}, {0, "\\z.\\z. (^z) z ^^z\n"}},
          {{"rename", "{y x}", "\\z. x"}, {0, "\\z. ^y\n"}},
          {{"rename", "{y x}", "x z"}, {0, "y ^z\n"}},
          {{"chain", "z", "x,y", "x"}, {0, "^z\n"}},
          {{"chain", "z", "x,y", "y"}, {0, "z\n"}},
          {{"fv", "^x"}, {0, "1:{x}\n"}},
          {{"fv", "\\x.\\x. ^x"}, {0, "{}\n"}},
          {{"fvdb", "1"}, {0, "{}\n"}},
          {{"derive", "\\x.\\y. x y z"},
           {0,
            "LamR: nil ⊢ \\x.\\y. x y z\n"
            "  LamR: x ⊢ \\y. x y z\n"
            "    AppR: x,y ⊢ x y z\n"
            "      AppR: x,y ⊢ x y\n"
            "        Weak: x,y ⊢ x\n"
            "          AxHere: x ⊢ x\n"
            "        AxHere: x,y ⊢ y\n"
            "      Weak: x,y ⊢ z\n"
            "        Weak: x ⊢ z\n"
            "          AxNil: nil ⊢ z\n"}},
      };
  for (const auto& [args, want] : cases) {
    Outcome o = expect_cli(args, want.first, want.second);
    if (!o.ok) return o;
  }
  return {true, {}};
}

Outcome selftest_end_to_end() {
  CliCall r = call({"selftest"});
  if (r.code != 0) {
    return {false, "selftest exit code " + std::to_string(r.code) + "\n" + r.out};
  }
  if (r.out.find("OK: 13 suites passed") == std::string::npos) {
    return {false, "missing summary line in:\n" + r.out};
  }
  return {true, {}};
}

}  // namespace

int main() {
  const Config cfg;  // 10000 cases per suite, size budget 30, fixed seed

  struct Criterion {
    const char* name;
    double limit_seconds;  // 0 means no wall-clock budget
    std::function<Outcome()> check;
  };

  const std::vector<Criterion> criteria = {
      {"01-cli-golden-examples", 1.0, golden_cli_examples},
      {"02-rename-composition", 30.0,
       [&] { return from_suites({lamup::selftest::suite_rename_composition(cfg)}); }},
      {"03-rename-commutation", 0,
       [&] { return from_suites({lamup::selftest::suite_rename_commutation(cfg)}); }},
      {"04-canonical-roundtrip", 0,
       [&] { return from_suites({lamup::selftest::suite_db_roundtrip(cfg)}); }},
      {"05-rename-alpha-invariance", 0,
       [&] {
         return from_suites({lamup::selftest::suite_db_commute(cfg),
                             lamup::selftest::suite_rename_preserves_alpha(cfg)});
       }},
      {"06-binder-unpacking", 0,
       [&] { return from_suites({lamup::selftest::suite_binder_unpacking(cfg)}); }},
      {"07-route-agreement", 60.0,
       [&] { return from_suites({lamup::selftest::suite_route_agreement(cfg)}); }},
      {"08-generalized-readback", 0,
       [&] {
         return from_suites({lamup::selftest::suite_generalized_route(cfg),
                             lamup::selftest::suite_chain_unfolding(cfg)});
       }},
      {"09-walk-soundness", 0,
       [&] {
         return from_suites({lamup::selftest::suite_walk_soundness(cfg),
                             lamup::selftest::suite_z_independence(cfg)});
       }},
      {"10-free-variable-agreement", 0,
       [&] { return from_suites({lamup::selftest::suite_fv_agreement(cfg)}); }},
      {"11-syntax-roundtrip", 0,
       [&] { return from_suites({lamup::selftest::suite_syntax_roundtrip(cfg)}); }},
      {"12-selftest-end-to-end", 300.0, selftest_end_to_end},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o = c.check();
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    bool in_budget = c.limit_seconds <= 0 || secs <= c.limit_seconds;
    bool pass = o.ok && in_budget;
    std::printf("%s  %-28s  %7.2fs", pass ? "PASS" : "FAIL", c.name, secs);
    if (c.limit_seconds > 0) std::printf("  (budget %.0fs)", c.limit_seconds);
    std::printf("\n");
    if (!o.ok) std::printf("      %s\n", o.detail.c_str());
    if (o.ok && !in_budget) std::printf("      over wall-clock budget\n");
    if (!pass) ++failed;
    std::fflush(stdout);
  }
  if (failed == 0) {
    std::printf("OK: 12 of 12 acceptance criteria hold\n");
    return 0;
  }
  std::printf("FAIL: %d of 12 acceptance criteria violated\n", failed);
  return 1;
}
