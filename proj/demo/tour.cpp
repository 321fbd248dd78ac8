// A short tour of the library: build terms, decide alpha-equivalence,
// canonicalize along both routes, and inspect derivations and free
// variables. Build and run:
//
//   cmake --build build --target lamup_demo && ./build/lamup_demo

#include <iostream>

#include "lamup/lamup.hpp"

using namespace lamup;

int main() {
  // Terms can be parsed from the surface syntax or assembled by hand.
  Term m = parse_term("\\x.\\y. x y z");
  Term n = Term::lam(VarName("a"),
                     Term::lam(VarName("b"),
                               Term::app(Term::app(Term::var(VarName("a")),
                                                   Term::var(VarName("b"))),
                                         Term::up(Term::up(Term::var(VarName("z")))))));
  std::cout << "m = " << m << "\n";
  std::cout << "n = " << n << "\n";

  // The two differ in binder names and in how often z is weakened, yet they
  // describe the same binding structure.
  std::cout << "alpha-equivalent: " << (alpha_eq(m, n) ? "yes" : "no") << "\n\n";

  // Route one: rewrite every binder to one canonical variable.
  std::cout << "db(z, m)        = " << db_named(VarName("z"), m) << "\n";

  // Route two: read the term as a nameless term and back.
  DbTerm a = translate(Context{}, m);
  std::cout << "translate(nil)  = " << a << "\n";
  std::cout << "read back       = " << db_named_generalized(VarName("z"), a)
            << "\n\n";

  // Renamings act without capture; weakenings record every skipped binder.
  Renaming f = parse_renaming("{y x}");
  std::cout << "{y x} (\\w. x)   = " << apply_renaming(f, parse_term("\\w. x"))
            << "\n";

  // Each judgment ctx |- term has exactly one derivation.
  std::cout << "\n" << print_derivation(derive(Context{}, parse_term("\\x. x y")));

  // Free variables come stratified by weakening depth.
  std::cout << "\nfv(x ^(y z))    = " << print_fvseq(fv_term(parse_term("x ^(y z)")))
            << "\n";
  std::cout << "fv(\\x. ^x)      = " << print_fvseq(fv_term(parse_term("\\x. ^x")))
            << "\n";
  return 0;
}
