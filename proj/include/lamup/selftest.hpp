#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lamup/alpha.hpp"
#include "lamup/debruijn.hpp"
#include "lamup/freevars.hpp"
#include "lamup/syntax.hpp"
#include "lamup/term.hpp"
#include "lamup/testgen.hpp"

// Executable property suites over randomly generated and exhaustively
// enumerated terms. The CLI's `selftest` subcommand runs all of them; the
// acceptance tests run them individually with pinned case counts. Every
// suite derives its generator stream from (config seed, suite name), so
// runs are reproducible and suites are independent of each other.

namespace lamup::selftest {

struct Config {
  std::size_t cases = 10000;    // random cases per suite
  std::size_t max_size = 30;    // size budget for random terms
  std::uint64_t seed = 20240817;

  // The walk suites replay whole rewrite walks per case, so they run a
  // fifth of the budget.
  std::size_t walk_cases() const {
    return std::max<std::size_t>(1, cases / 5);
  }
};

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string detail;  // first failing instance
  double seconds = 0.0;

  bool passed() const { return failures == 0; }
};

namespace detail {

using lamup::detail::draw;

inline Rng suite_rng(const Config& cfg, std::string_view name) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a over the suite name
  for (char c : name) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return Rng(cfg.seed ^ h);
}

inline const std::vector<VarName>& pool_xy() {
  static const std::vector<VarName> p{VarName("x"), VarName("y")};
  return p;
}

inline const std::vector<VarName>& pool_xyz() {
  static const std::vector<VarName> p{VarName("x"), VarName("y"),
                                      VarName("z")};
  return p;
}

inline const std::vector<VarName>& pool_xyzw() {
  static const std::vector<VarName> p{VarName("x"), VarName("y"), VarName("z"),
                                      VarName("w")};
  return p;
}

class Suite {
 public:
  explicit Suite(std::string name) : start_(std::chrono::steady_clock::now()) {
    result_.name = std::move(name);
  }

  template <typename Describe>
  void expect(bool ok, Describe&& describe) {
    if (ok) return;
    if (result_.failures == 0) result_.detail = describe();
    ++result_.failures;
  }

  SuiteResult finish(std::size_t cases) {
    result_.cases = cases;
    result_.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
            .count();
    return result_;
  }

 private:
  SuiteResult result_;
  std::chrono::steady_clock::time_point start_;
};

// Sequential renamings blow up with very deep lift stacks (each context
// element can add one ^ per variable per step), so suites that chain one
// renaming per context element keep contexts at a sane depth.
inline std::size_t chain_depth(const Config& cfg) {
  return std::min<std::size_t>(cfg.max_size, 16);
}

struct WalkCase {
  Term from;
  Term to;
};

// Shared corpus for walk-soundness and z-independence: pairs (M, W) where W
// is a random alpha walk from M of up to 8 steps.
inline std::vector<WalkCase> walk_corpus(const Config& cfg) {
  Rng rng = suite_rng(cfg, "walk-soundness");
  const auto& pool = pool_xyz();
  std::size_t n = cfg.walk_cases();
  std::vector<WalkCase> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Term m = random_term(rng, cfg.max_size, pool);
    std::size_t steps = draw(rng, 9);  // 0..8
    std::uint64_t walk_seed = rng();
    out.push_back(WalkCase{m, random_alpha_walk(m, steps, pool, walk_seed)});
  }
  return out;
}

}  // namespace detail

// {x1 x2}_G . {x2 x3}_G = {x1 x3}_G as functions on terms.
inline SuiteResult suite_rename_composition(const Config& cfg) {
  detail::Suite suite("rename-composition");
  Rng rng = detail::suite_rng(cfg, "rename-composition");
  const auto& pool = detail::pool_xyz();
  auto name = [&] { return pool[detail::draw(rng, pool.size())]; };
  for (std::size_t i = 0; i < cfg.cases; ++i) {
    VarName x1 = name(), x2 = name(), x3 = name();
    Context g = random_context(rng, cfg.max_size, pool);
    Term m = random_term(rng, cfg.max_size, pool);
    Term lhs = apply_renaming(Renaming{x1, x2, g},
                              apply_renaming(Renaming{x2, x3, g}, m));
    Term rhs = apply_renaming(Renaming{x1, x3, g}, m);
    suite.expect(lhs == rhs, [&] {
      return print_renaming(Renaming{x1, x2, g}) + " after " +
             print_renaming(Renaming{x2, x3, g}) + " on " + print_term(m) +
             ": " + print_term(lhs) + " != " + print_term(rhs);
    });
  }
  return suite.finish(cfg.cases);
}

// {y x}_G (F_{x,G} M) = F_{y,G} ({y x}_G M) for an arbitrary renaming F.
inline SuiteResult suite_rename_commutation(const Config& cfg) {
  detail::Suite suite("rename-commutation");
  Rng rng = detail::suite_rng(cfg, "rename-commutation");
  const auto& pool = detail::pool_xyz();
  auto name = [&] { return pool[detail::draw(rng, pool.size())]; };
  for (std::size_t i = 0; i < cfg.cases; ++i) {
    VarName x = name(), y = name();
    Renaming f = random_renaming(rng, detail::chain_depth(cfg), pool);
    Context g = random_context(rng, detail::chain_depth(cfg), pool);
    Term m = random_term(rng, cfg.max_size, pool);

    Renaming fx = f, fy = f;
    fx.lifts.push_back(x);
    fx.lifts.insert(fx.lifts.end(), g.begin(), g.end());
    fy.lifts.push_back(y);
    fy.lifts.insert(fy.lifts.end(), g.begin(), g.end());
    Renaming yx{y, x, g};

    Term lhs = apply_renaming(yx, apply_renaming(fx, m));
    Term rhs = apply_renaming(fy, apply_renaming(yx, m));
    suite.expect(lhs == rhs, [&] {
      return print_renaming(yx) + " against " + print_renaming(f) + " on " +
             print_term(m) + ": " + print_term(lhs) + " != " + print_term(rhs);
    });
  }
  return suite.finish(cfg.cases);
}

// db(z, M) is alpha-equivalent to M, whichever variables play z on either
// side of the comparison.
inline SuiteResult suite_db_roundtrip(const Config& cfg) {
  detail::Suite suite("db-roundtrip");
  Rng rng = detail::suite_rng(cfg, "db-roundtrip");
  const auto& pool = detail::pool_xyz();
  for (std::size_t i = 0; i < cfg.cases; ++i) {
    Term m = random_term(rng, cfg.max_size, pool);
    for (const VarName& zi : pool) {
      Term canon = db_named(zi, m);
      for (const VarName& zj : pool) {
        suite.expect(alpha_eq(canon, m, zj), [&] {
          return "db(" + zi.str() + ", " + print_term(m) +
                 ") not alpha-equal to it under " + zj.str();
        });
      }
    }
  }
  return suite.finish(cfg.cases);
}

// F(db(z, M)) = db(z, F(M)) for every renaming F.
inline SuiteResult suite_db_commute(const Config& cfg) {
  detail::Suite suite("db-commute");
  Rng rng = detail::suite_rng(cfg, "db-commute");
  const auto& pool = detail::pool_xyz();
  for (std::size_t i = 0; i < cfg.cases; ++i) {
    Renaming f = random_renaming(rng, detail::chain_depth(cfg), pool);
    Term m = random_term(rng, cfg.max_size, pool);
    const VarName& z = pool[detail::draw(rng, pool.size())];
    Term lhs = apply_renaming(f, db_named(z, m));
    Term rhs = db_named(z, apply_renaming(f, m));
    suite.expect(lhs == rhs, [&] {
      return print_renaming(f) + " vs db(" + z.str() + ") on " + print_term(m) +
             ": " + print_term(lhs) + " != " + print_term(rhs);
    });
  }
  return suite.finish(cfg.cases);
}

// Alpha-equivalence is preserved by renaming: M =a N implies F(M) =a F(N).
// Equivalent pairs come from random alpha walks.
inline SuiteResult suite_rename_preserves_alpha(const Config& cfg) {
  detail::Suite suite("rename-preserves-alpha");
  Rng rng = detail::suite_rng(cfg, "rename-preserves-alpha");
  const auto& pool = detail::pool_xyz();
  for (std::size_t i = 0; i < cfg.cases; ++i) {
    Term m = random_term(rng, cfg.max_size, pool);
    std::size_t steps = 1 + detail::draw(rng, 4);
    Term n = random_alpha_walk(m, steps, pool, rng());
    Renaming f = random_renaming(rng, detail::chain_depth(cfg), pool);
    suite.expect(alpha_eq(apply_renaming(f, m), apply_renaming(f, n)), [&] {
      return print_renaming(f) + " split the class of " + print_term(m) +
             " and " + print_term(n);
    });
  }
  return suite.finish(cfg.cases);
}

// \x. M =a \y. N  iff  {z x}M =a {z y}N: binders can be unpacked against a
// shared fresh-or-not variable z. Cases mix unrelated N, walked N, and
// direct axiom images of M.
inline SuiteResult suite_binder_unpacking(const Config& cfg) {
  detail::Suite suite("binder-unpacking");
  Rng rng = detail::suite_rng(cfg, "binder-unpacking");
  const auto& pool = detail::pool_xyz();
  auto name = [&] { return pool[detail::draw(rng, pool.size())]; };
  for (std::size_t i = 0; i < cfg.cases; ++i) {
    VarName x = name(), y = name(), z = name();
    Term m = random_term(rng, cfg.max_size, pool);
    Term n = m;
    switch (i % 3) {
      case 0:
        n = random_term(rng, cfg.max_size, pool);
        break;
      case 1:
        n = random_alpha_walk(m, 1 + detail::draw(rng, 3), pool, rng());
        break;
      default:
        n = apply_renaming(Renaming{y, x}, m);  // \y. n is the axiom image
        break;
    }
    bool lams = alpha_eq(Term::lam(x, m), Term::lam(y, n));
    bool bodies =
        alpha_eq(apply_renaming(Renaming{z, x}, m), apply_renaming(Renaming{z, y}, n));
    suite.expect(lams == bodies, [&] {
      return "\\" + x.str() + ". " + print_term(m) + " vs \\" + y.str() + ". " +
             print_term(n) + ": lambda comparison " + (lams ? "true" : "false") +
             " but unpacked comparison " + (bodies ? "true" : "false");
    });
    if (i % 3 == 2) {
      suite.expect(lams, [&] {
        return "axiom image not alpha-equal: \\" + x.str() + ". " +
               print_term(m);
      });
    }
  }
  return suite.finish(cfg.cases);
}

// The nameless route and the renaming route agree everywhere:
//   - db_generalized(z, translate(nil, M)) = db(z, M) for every M;
//   - translate-based equality and db-based equality give the same verdict
//     on every pair. Checked exhaustively for all terms of size <= 7 over
//     {x, y} (pairwise over the whole square) and on random larger terms.
inline SuiteResult suite_route_agreement(const Config& cfg) {
  detail::Suite suite("route-agreement");
  Rng rng = detail::suite_rng(cfg, "route-agreement");

  auto canon_ids = [](const std::vector<Term>& terms, detail::Suite& s) {
    std::unordered_map<std::string, int> db_ids, tr_ids;
    std::vector<int> by_db, by_tr;
    by_db.reserve(terms.size());
    by_tr.reserve(terms.size());
    const VarName zz("z");
    for (const Term& t : terms) {
      DbTerm tr = translate(Context{}, t);
      Term db = db_named(zz, t);
      s.expect(db_named_generalized(zz, tr) == db, [&] {
        return "routes disagree on " + print_term(t);
      });
      by_db.push_back(
          db_ids.emplace(print_term(db), static_cast<int>(db_ids.size()))
              .first->second);
      by_tr.push_back(
          tr_ids.emplace(print_dbterm(tr), static_cast<int>(tr_ids.size()))
              .first->second);
    }
    return std::pair(std::move(by_db), std::move(by_tr));
  };

  auto pairwise = [&suite](const std::vector<Term>& terms,
                           const std::vector<int>& by_db,
                           const std::vector<int>& by_tr) {
    for (std::size_t i = 0; i < terms.size(); ++i) {
      for (std::size_t j = i; j < terms.size(); ++j) {
        bool via_db = by_db[i] == by_db[j];
        bool via_tr = by_tr[i] == by_tr[j];
        if (via_db != via_tr) {
          suite.expect(false, [&] {
            return "verdicts differ on " + print_term(terms[i]) + " vs " +
                   print_term(terms[j]);
          });
        }
      }
    }
  };

  std::vector<Term> small = enumerate_terms(7, detail::pool_xy());
  auto [small_db, small_tr] = canon_ids(small, suite);
  pairwise(small, small_db, small_tr);

  std::vector<Term> big;
  big.reserve(cfg.cases);
  for (std::size_t i = 0; i < cfg.cases; ++i) {
    big.push_back(random_term(rng, cfg.max_size, detail::pool_xyz()));
  }
  auto [big_db, big_tr] = canon_ids(big, suite);
  pairwise(big, big_db, big_tr);

  // Positive pairs: walks stay equivalent under both verdicts.
  for (std::size_t i = 0; i < big.size(); i += 10) {
    Term w = random_alpha_walk(big[i], 3, detail::pool_xyz(), rng());
    bool via_db = alpha_eq(big[i], w);
    bool via_tr = alpha_eq_via_context(big[i], w);
    suite.expect(via_db && via_tr, [&] {
      return "walk image lost: " + print_term(big[i]) + " vs " + print_term(w);
    });
  }

  return suite.finish(small.size() + big.size());
}

// The context-indexed strengthening of route agreement:
//   db_generalized(z, translate(G, M)) = {z/G}(db(z, M)).
inline SuiteResult suite_generalized_route(const Config& cfg) {
  detail::Suite suite("generalized-route");
  Rng rng = detail::suite_rng(cfg, "generalized-route");
  const auto& pool = detail::pool_xyz();
  for (std::size_t i = 0; i < cfg.cases; ++i) {
    const VarName& z = pool[detail::draw(rng, pool.size())];
    Context g = random_context(rng, detail::chain_depth(cfg), pool);
    Term m = random_term(rng, cfg.max_size, pool);
    Term lhs = db_named_generalized(z, translate(g, m));
    Term rhs = chain_rename(z, g, db_named(z, m));
    suite.expect(lhs == rhs, [&] {
      return "context " + print_context(g) + ", term " + print_term(m) + ": " +
             print_term(lhs) + " != " + print_term(rhs);
    });
  }
  return suite.finish(cfg.cases);
}

// {z/G}(\z. {z x}M) = \z. {z/G,x}M, and its multi-binder corollary
// \x1. \x2. M =a \z. \z. {z/x1,x2}M.
inline SuiteResult suite_chain_unfolding(const Config& cfg) {
  detail::Suite suite("chain-unfolding");
  Rng rng = detail::suite_rng(cfg, "chain-unfolding");
  const auto& pool = detail::pool_xyz();
  auto name = [&] { return pool[detail::draw(rng, pool.size())]; };
  for (std::size_t i = 0; i < cfg.cases; ++i) {
    VarName z = name(), x = name();
    Context g = random_context(rng, detail::chain_depth(cfg), pool);
    Term m = random_term(rng, cfg.max_size, pool);

    Term lhs =
        chain_rename(z, g, Term::lam(z, apply_renaming(Renaming{z, x}, m)));
    Term rhs = chain_rename(z, extended(g, x), m);
    suite.expect(lhs == Term::lam(z, rhs), [&] {
      return "context " + print_context(g) + ", binder " + x.str() +
             ", term " + print_term(m);
    });

    VarName x1 = name(), x2 = name();
    Term nested = Term::lam(x1, Term::lam(x2, m));
    Term flat = Term::lam(
        z, Term::lam(z, chain_rename(z, Context{x1, x2}, m)));
    suite.expect(alpha_eq(nested, flat), [&] {
      return "multi-binder law failed on " + print_term(nested);
    });
  }
  return suite.finish(cfg.cases);
}

// Every random alpha walk stays in the class it started from.
inline SuiteResult suite_walk_soundness(const Config& cfg) {
  detail::Suite suite("walk-soundness");
  auto corpus = detail::walk_corpus(cfg);
  for (const auto& wc : corpus) {
    suite.expect(alpha_eq(wc.from, wc.to), [&] {
      return "walk escaped the class: " + print_term(wc.from) + " to " +
             print_term(wc.to);
    });
  }
  return suite.finish(corpus.size());
}

// The verdict of alpha_eq does not depend on the canonical variable, on
// equivalent pairs (walks) and unrelated pairs alike.
inline SuiteResult suite_z_independence(const Config& cfg) {
  detail::Suite suite("z-independence");
  auto corpus = detail::walk_corpus(cfg);
  const auto& zpool = detail::pool_xyzw();
  auto agree = [&](const Term& a, const Term& b, bool* verdict) {
    bool first = alpha_eq(a, b, zpool[0]);
    for (std::size_t i = 1; i < zpool.size(); ++i) {
      if (alpha_eq(a, b, zpool[i]) != first) return false;
    }
    *verdict = first;
    return true;
  };
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    bool verdict = false;
    suite.expect(agree(corpus[i].from, corpus[i].to, &verdict) && verdict, [&] {
      return "walk pair verdict unstable or false: " +
             print_term(corpus[i].from) + " vs " + print_term(corpus[i].to);
    });
    const Term& other = corpus[(i + 1) % corpus.size()].from;
    suite.expect(agree(corpus[i].from, other, &verdict), [&] {
      return "verdict depends on canonical variable: " +
             print_term(corpus[i].from) + " vs " + print_term(other);
    });
  }
  return suite.finish(corpus.size());
}

// Stratified free variables are invariant under the nameless translation:
// fv(translate(nil, M)) = fv(M), exhaustively on small terms and on random
// larger ones.
inline SuiteResult suite_fv_agreement(const Config& cfg) {
  detail::Suite suite("fv-agreement");
  Rng rng = detail::suite_rng(cfg, "fv-agreement");
  std::size_t count = 0;
  auto check = [&](const Term& m) {
    ++count;
    FvSeq named = fv_term(m);
    FvSeq nameless = fv_dbterm(translate(Context{}, m));
    suite.expect(named == nameless, [&] {
      return print_term(m) + ": " + print_fvseq(named) + " != " +
             print_fvseq(nameless);
    });
  };
  for (const Term& m : enumerate_terms(7, detail::pool_xy())) check(m);
  for (std::size_t i = 0; i < cfg.cases; ++i) {
    check(random_term(rng, cfg.max_size, detail::pool_xyz()));
  }
  return suite.finish(count);
}

// parse . print is the identity on every printable value, and printed
// output is a fixed point of the printer.
inline SuiteResult suite_syntax_roundtrip(const Config& cfg) {
  detail::Suite suite("syntax-roundtrip");
  Rng rng = detail::suite_rng(cfg, "syntax-roundtrip");
  const auto& pool = detail::pool_xyz();
  std::size_t count = 0;
  for (std::size_t i = 0; i < cfg.cases; ++i) {
    Term t = random_term(rng, cfg.max_size, pool);
    std::string s = print_term(t);
    ++count;
    suite.expect(parse_term(s) == t && print_term(parse_term(s)) == s, [&] {
      return "term round-trip failed: " + s;
    });

    DbTerm d = random_dbterm(rng, cfg.max_size, pool);
    std::string ds = print_dbterm(d);
    ++count;
    suite.expect(parse_dbterm(ds) == d && print_dbterm(parse_dbterm(ds)) == ds,
                 [&] { return "db term round-trip failed: " + ds; });

    Context g = random_context(rng, cfg.max_size, pool);
    ++count;
    suite.expect(parse_context(print_context(g)) == g, [&] {
      return "context round-trip failed: " + print_context(g);
    });

    Renaming f = random_renaming(rng, cfg.max_size, pool);
    ++count;
    suite.expect(parse_renaming(print_renaming(f)) == f, [&] {
      return "renaming round-trip failed: " + print_renaming(f);
    });

    FvSeq fv = fv_term(random_term(rng, cfg.max_size, pool));
    ++count;
    suite.expect(parse_fvseq(print_fvseq(fv)) == fv, [&] {
      return "fv sequence round-trip failed: " + print_fvseq(fv);
    });
  }
  return suite.finish(count);
}

inline std::vector<SuiteResult> run_all(const Config& cfg) {
  std::vector<SuiteResult> results{
      suite_binder_unpacking(cfg),
      suite_chain_unfolding(cfg),
      suite_db_commute(cfg),
      suite_db_roundtrip(cfg),
      suite_fv_agreement(cfg),
      suite_generalized_route(cfg),
      suite_rename_commutation(cfg),
      suite_rename_composition(cfg),
      suite_rename_preserves_alpha(cfg),
      suite_route_agreement(cfg),
      suite_syntax_roundtrip(cfg),
      suite_walk_soundness(cfg),
      suite_z_independence(cfg),
  };
  std::sort(results.begin(), results.end(),
            [](const SuiteResult& a, const SuiteResult& b) {
              return a.name < b.name;
            });
  return results;
}

// Runs everything, prints one line per suite (sorted by name) plus a
// summary, and returns 0 exactly when every suite passed.
inline int run_selftest(const Config& cfg, std::ostream& out) {
  std::vector<SuiteResult> results = run_all(cfg);
  std::size_t width = 0;
  for (const auto& r : results) width = std::max(width, r.name.size());
  std::size_t failed = 0;
  for (const auto& r : results) {
    char line[160];
    std::snprintf(line, sizeof line, "%s  %-*s  %8zu cases  %7.2fs",
                  r.passed() ? "PASS" : "FAIL", static_cast<int>(width),
                  r.name.c_str(), r.cases, r.seconds);
    out << line << '\n';
    if (!r.passed()) {
      ++failed;
      out << "      " << r.failures << " failure(s); first: " << r.detail
          << '\n';
    }
  }
  if (failed == 0) {
    out << "OK: " << results.size() << " suites passed\n";
    return 0;
  }
  out << "FAIL: " << failed << " of " << results.size() << " suites failed\n";
  return 1;
}

}  // namespace lamup::selftest
