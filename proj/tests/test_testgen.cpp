#include <catch2/catch_amalgamated.hpp>

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "lamup/syntax.hpp"
#include "lamup/term.hpp"
#include "lamup/testgen.hpp"

using namespace lamup;

namespace {

const std::vector<VarName> kX{VarName("x")};
const std::vector<VarName> kXY{VarName("x"), VarName("y")};

std::vector<std::string> printed(const std::vector<Term>& ts) {
  std::vector<std::string> out;
  out.reserve(ts.size());
  for (const Term& t : ts) out.push_back(print_term(t));
  return out;
}

// How many distinct terms of each exact size exist over a pool of v names:
// a size-n term is ^M with |M| = n-1, or \x. M with any of the v binders and
// |M| = n-1, or M N with |M| + |N| = n-1. Computed here from scratch so the
// enumerator is checked against something it does not share code with.
std::vector<std::size_t> census(std::size_t max_size, std::size_t v) {
  std::vector<std::size_t> t(max_size + 1, 0);
  if (max_size >= 1) t[1] = v;
  for (std::size_t n = 2; n <= max_size; ++n) {
    t[n] = t[n - 1] + v * t[n - 1];
    for (std::size_t k = 1; k + 1 < n; ++k) t[n] += t[k] * t[n - 1 - k];
  }
  return t;
}

}  // namespace

TEST_CASE("enumeration of tiny pools is frozen literally", "[testgen]") {
  CHECK(printed(enumerate_terms(1, kX)) == std::vector<std::string>{"x"});
  CHECK(printed(enumerate_terms(2, kX)) ==
        std::vector<std::string>{"x", "^x", "\\x. x"});
  CHECK(printed(enumerate_terms(3, kX)) ==
        std::vector<std::string>{"x", "^x", "\\x. x", "^^x", "^(\\x. x)",
                                 "\\x. ^x", "\\x.\\x. x", "x x"});
  CHECK(printed(enumerate_terms(2, kXY)) ==
        std::vector<std::string>{"x", "y", "^x", "^y", "\\x. x", "\\x. y",
                                 "\\y. x", "\\y. y"});
}

TEST_CASE("enumeration matches an independent census of term counts",
          "[testgen]") {
  std::vector<Term> all = enumerate_terms(7, kXY);
  CHECK(all.size() == 10878u);  // sum of the census row below

  std::vector<std::size_t> want = census(7, 2);
  CHECK(want == std::vector<std::size_t>{0, 2, 6, 22, 90, 394, 1806, 8558});

  std::vector<std::size_t> got(8, 0);
  for (const Term& t : all) {
    std::size_t n = term_size(t);
    REQUIRE(n >= 1);
    REQUIRE(n <= 7);
    ++got[n];
  }
  CHECK(got == want);

  // Sizes are non-decreasing along the output.
  for (std::size_t i = 1; i < all.size(); ++i) {
    CHECK(term_size(all[i - 1]) <= term_size(all[i]));
  }
}

TEST_CASE("enumeration emits no duplicates and ignores pool duplicates",
          "[testgen]") {
  std::vector<std::string> forms = printed(enumerate_terms(5, kXY));
  std::set<std::string> unique(forms.begin(), forms.end());
  CHECK(unique.size() == forms.size());

  const std::vector<VarName> doubled{VarName("x"), VarName("x")};
  CHECK(printed(enumerate_terms(3, doubled)) ==
        printed(enumerate_terms(3, kX)));
  const std::vector<VarName> shuffled{VarName("y"), VarName("x")};
  CHECK(printed(enumerate_terms(3, shuffled)) ==
        printed(enumerate_terms(3, kXY)));
}

TEST_CASE("random terms respect budget and pool", "[testgen]") {
  Rng rng(2024);
  for (int i = 0; i < 500; ++i) {
    std::size_t budget = 1 + detail::draw(rng, 12);
    Term t = random_term(rng, budget, kXY);
    std::size_t n = term_size(t);
    CHECK(n >= 1);
    CHECK(n <= budget);

    // Every name in the term, binders included, comes from the pool.
    std::vector<const Term*> stack{&t};
    while (!stack.empty()) {
      const Term* m = stack.back();
      stack.pop_back();
      switch (m->kind()) {
        case Term::Kind::Var:
          CHECK((m->var_name() == VarName("x") || m->var_name() == VarName("y")));
          break;
        case Term::Kind::Lam:
          CHECK((m->binder() == VarName("x") || m->binder() == VarName("y")));
          stack.push_back(&m->body());
          break;
        case Term::Kind::App:
          stack.push_back(&m->fun());
          stack.push_back(&m->arg());
          break;
        case Term::Kind::Up:
          stack.push_back(&m->inner());
          break;
      }
    }
  }
}

TEST_CASE("random terms live inside the enumerated universe", "[testgen]") {
  std::vector<std::string> forms = printed(enumerate_terms(4, kXY));
  std::set<std::string> universe(forms.begin(), forms.end());
  Rng rng(7);
  for (int i = 0; i < 300; ++i) {
    Term t = random_term(rng, 4, kXY);
    CHECK(universe.count(print_term(t)) == 1);
  }
}

TEST_CASE("random nameless terms respect budget and reach both leaf kinds",
          "[testgen]") {
  Rng rng(11);
  bool saw_one = false;
  bool saw_var = false;
  for (int i = 0; i < 400; ++i) {
    DbTerm t = random_dbterm(rng, 10, kXY);
    std::vector<const DbTerm*> stack{&t};
    std::size_t n = 0;
    while (!stack.empty()) {
      const DbTerm* m = stack.back();
      stack.pop_back();
      ++n;
      switch (m->kind()) {
        case DbTerm::Kind::One:
          saw_one = true;
          break;
        case DbTerm::Kind::Var:
          saw_var = true;
          CHECK((m->var_name() == VarName("x") || m->var_name() == VarName("y")));
          break;
        case DbTerm::Kind::Lam:
          stack.push_back(&m->body());
          break;
        case DbTerm::Kind::App:
          stack.push_back(&m->fun());
          stack.push_back(&m->arg());
          break;
        case DbTerm::Kind::Up:
          stack.push_back(&m->inner());
          break;
      }
    }
    CHECK(n <= 10u);
  }
  CHECK(saw_one);
  CHECK(saw_var);
}

TEST_CASE("random contexts and renamings stay inside their bounds",
          "[testgen]") {
  Rng rng(5);
  bool saw_empty = false;
  bool saw_full = false;
  for (int i = 0; i < 400; ++i) {
    Context g = random_context(rng, 5, kXY);
    CHECK(g.size() <= 5u);
    if (g.empty()) saw_empty = true;
    if (g.size() == 5u) saw_full = true;
    for (const VarName& v : g) {
      CHECK((v == VarName("x") || v == VarName("y")));
    }

    Renaming f = random_renaming(rng, 5, kXY);
    CHECK((f.target == VarName("x") || f.target == VarName("y")));
    CHECK((f.source == VarName("x") || f.source == VarName("y")));
    CHECK(f.lifts.size() <= 5u);
  }
  CHECK(saw_empty);
  CHECK(saw_full);
}

TEST_CASE("seeded configurations reproduce their values exactly", "[testgen]") {
  GenConfig cfg;
  cfg.max_size = 12;
  cfg.name_pool = kXY;
  cfg.seed = 99;
  CHECK(random_term(cfg) == random_term(cfg));
  CHECK(random_dbterm(cfg) == random_dbterm(cfg));
  CHECK(random_context(cfg) == random_context(cfg));
  CHECK(random_renaming(cfg) == random_renaming(cfg));

  // Two independently seeded streams agree draw by draw.
  Rng a(424242);
  Rng b(424242);
  for (int i = 0; i < 50; ++i) {
    CHECK(random_term(a, 9, kXY) == random_term(b, 9, kXY));
  }
}

TEST_CASE("degenerate generator arguments are rejected", "[testgen]") {
  Rng rng(1);
  const std::vector<VarName> empty;
  CHECK_THROWS_AS(random_term(rng, 0, kXY), std::invalid_argument);
  CHECK_THROWS_AS(random_term(rng, 5, empty), std::invalid_argument);
  CHECK_THROWS_AS(random_dbterm(rng, 0, kXY), std::invalid_argument);
  CHECK_THROWS_AS(random_dbterm(rng, 5, empty), std::invalid_argument);
  CHECK_THROWS_AS(random_context(rng, 5, empty), std::invalid_argument);
  CHECK_THROWS_AS(random_renaming(rng, 5, empty), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_terms(0, kXY), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_terms(3, empty), std::invalid_argument);
}
