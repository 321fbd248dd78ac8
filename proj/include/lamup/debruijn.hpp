#pragma once

#include <cassert>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "lamup/term.hpp"

namespace lamup {

// Immutable generalized de Bruijn term:
//
//   A, B ::= x | 1 | A B | \. A | ^A
//
// Binders are nameless; 1 refers to the nearest enclosing binder not
// cancelled by a ^; free variables keep their names. Same representation
// discipline as Term: shared immutable nodes, O(1) copies, pure operations.
class DbTerm {
 public:
  enum class Kind { Var, One, App, Lam, Up };  // order matches the variant

  static DbTerm var(VarName v);
  static DbTerm one();
  static DbTerm app(DbTerm fun, DbTerm arg);
  static DbTerm lam(DbTerm body);
  static DbTerm up(DbTerm inner);

  Kind kind() const;
  bool is(Kind k) const { return kind() == k; }

  const VarName& var_name() const;  // Var only
  const DbTerm& fun() const;        // App only
  const DbTerm& arg() const;        // App only
  const DbTerm& body() const;       // Lam only
  const DbTerm& inner() const;      // Up only

  friend bool operator==(const DbTerm& a, const DbTerm& b);

 private:
  struct Node;
  explicit DbTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct DbTerm::Node {
  struct VarN {
    VarName name;
  };
  struct OneN {};
  struct AppN {
    DbTerm fun;
    DbTerm arg;
  };
  struct LamN {
    DbTerm body;
  };
  struct UpN {
    DbTerm inner;
  };
  std::variant<VarN, OneN, AppN, LamN, UpN> data;
};

inline DbTerm DbTerm::var(VarName v) {
  return DbTerm(std::make_shared<const Node>(Node{Node::VarN{std::move(v)}}));
}

inline DbTerm DbTerm::one() {
  return DbTerm(std::make_shared<const Node>(Node{Node::OneN{}}));
}

inline DbTerm DbTerm::app(DbTerm fun, DbTerm arg) {
  return DbTerm(std::make_shared<const Node>(
      Node{Node::AppN{std::move(fun), std::move(arg)}}));
}

inline DbTerm DbTerm::lam(DbTerm body) {
  return DbTerm(std::make_shared<const Node>(Node{Node::LamN{std::move(body)}}));
}

inline DbTerm DbTerm::up(DbTerm inner) {
  return DbTerm(std::make_shared<const Node>(Node{Node::UpN{std::move(inner)}}));
}

inline DbTerm::Kind DbTerm::kind() const {
  return static_cast<Kind>(node_->data.index());
}

inline const VarName& DbTerm::var_name() const {
  return std::get<Node::VarN>(node_->data).name;
}

inline const DbTerm& DbTerm::fun() const {
  return std::get<Node::AppN>(node_->data).fun;
}

inline const DbTerm& DbTerm::arg() const {
  return std::get<Node::AppN>(node_->data).arg;
}

inline const DbTerm& DbTerm::body() const {
  return std::get<Node::LamN>(node_->data).body;
}

inline const DbTerm& DbTerm::inner() const {
  return std::get<Node::UpN>(node_->data).inner;
}

inline bool operator==(const DbTerm& a, const DbTerm& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case DbTerm::Kind::Var:
      return a.var_name() == b.var_name();
    case DbTerm::Kind::One:
      return true;
    case DbTerm::Kind::App:
      return a.fun() == b.fun() && a.arg() == b.arg();
    case DbTerm::Kind::Lam:
      return a.body() == b.body();
    case DbTerm::Kind::Up:
      return a.inner() == b.inner();
  }
  return false;
}

inline bool dbterm_eq(const DbTerm& a, const DbTerm& b) { return a == b; }

// The judgment G |- M is derivable for every context G and term M by exactly
// one of seven rules, so each (G, M) has a unique derivation:
//
//   AxNil            nil |- x
//   AxHere           G,x |- x
//   Weak     G |- x  =>  G,z |- x          (z != x)
//   AppR     G |- M, G |- N  =>  G |- M N
//   UpNil    nil |- M  =>  nil |- ^M
//   UpCons   G |- M  =>  G,x |- ^M
//   LamR     G,x |- M  =>  G |- \x. M
enum class Rule { AxNil, AxHere, Weak, AppR, UpNil, UpCons, LamR };

inline const char* rule_name(Rule r) {
  switch (r) {
    case Rule::AxNil:
      return "AxNil";
    case Rule::AxHere:
      return "AxHere";
    case Rule::Weak:
      return "Weak";
    case Rule::AppR:
      return "AppR";
    case Rule::UpNil:
      return "UpNil";
    case Rule::UpCons:
      return "UpCons";
    case Rule::LamR:
      return "LamR";
  }
  return "?";
}

// One node of a derivation tree: the rule applied, the conclusion (context
// and subject), and the premises in rule order.
struct Derivation {
  Rule rule;
  Context context;
  Term subject;
  std::vector<Derivation> premises{};
};

inline bool operator==(const Derivation& a, const Derivation& b) {
  return a.rule == b.rule && a.context == b.context && a.subject == b.subject &&
         a.premises == b.premises;
}

// Builds the unique derivation of g |- m. Total: some rule applies to every
// shape, and every premise is smaller in (term size, context length).
inline Derivation derive(const Context& g, const Term& m) {
  switch (m.kind()) {
    case Term::Kind::Var: {
      if (g.empty()) return Derivation{Rule::AxNil, g, m};
      if (g.back() == m.var_name()) return Derivation{Rule::AxHere, g, m};
      Context shorter(g.begin(), g.end() - 1);
      return Derivation{Rule::Weak, g, m, {derive(shorter, m)}};
    }
    case Term::Kind::App:
      return Derivation{Rule::AppR, g, m,
                        {derive(g, m.fun()), derive(g, m.arg())}};
    case Term::Kind::Up: {
      if (g.empty()) return Derivation{Rule::UpNil, g, m, {derive(g, m.inner())}};
      Context shorter(g.begin(), g.end() - 1);
      return Derivation{Rule::UpCons, g, m, {derive(shorter, m.inner())}};
    }
    case Term::Kind::Lam:
      return Derivation{Rule::LamR, g, m,
                        {derive(extended(g, m.binder()), m.body())}};
  }
  assert(false);
  return Derivation{Rule::AxNil, g, m};
}

// Checks that every node of d is a correct instance of its rule.
inline bool valid_derivation(const Derivation& d) {
  const Context& g = d.context;
  const Term& m = d.subject;
  auto shorter = [&] { return Context(g.begin(), g.end() - 1); };
  switch (d.rule) {
    case Rule::AxNil:
      return d.premises.empty() && g.empty() && m.is(Term::Kind::Var);
    case Rule::AxHere:
      return d.premises.empty() && !g.empty() && m.is(Term::Kind::Var) &&
             g.back() == m.var_name();
    case Rule::Weak:
      return d.premises.size() == 1 && !g.empty() && m.is(Term::Kind::Var) &&
             g.back() != m.var_name() && d.premises[0].context == shorter() &&
             d.premises[0].subject == m && valid_derivation(d.premises[0]);
    case Rule::AppR:
      return d.premises.size() == 2 && m.is(Term::Kind::App) &&
             d.premises[0].context == g && d.premises[1].context == g &&
             d.premises[0].subject == m.fun() &&
             d.premises[1].subject == m.arg() &&
             valid_derivation(d.premises[0]) && valid_derivation(d.premises[1]);
    case Rule::UpNil:
      return d.premises.size() == 1 && g.empty() && m.is(Term::Kind::Up) &&
             d.premises[0].context.empty() &&
             d.premises[0].subject == m.inner() &&
             valid_derivation(d.premises[0]);
    case Rule::UpCons:
      return d.premises.size() == 1 && !g.empty() && m.is(Term::Kind::Up) &&
             d.premises[0].context == shorter() &&
             d.premises[0].subject == m.inner() &&
             valid_derivation(d.premises[0]);
    case Rule::LamR:
      return d.premises.size() == 1 && m.is(Term::Kind::Lam) &&
             d.premises[0].context == extended(g, m.binder()) &&
             d.premises[0].subject == m.body() && valid_derivation(d.premises[0]);
  }
  return false;
}

// Reads a named term as a generalized de Bruijn term relative to a context:
// the variable bound at the end of the context becomes 1, each earlier
// context position adds a ^, and variables outside the context stay named.
// Defined by direct recursion on (g, m); it agrees with folding the
// derivation of g |- m rule by rule.
inline DbTerm translate(const Context& g, const Term& m) {
  switch (m.kind()) {
    case Term::Kind::Var: {
      if (g.empty()) return DbTerm::var(m.var_name());
      if (g.back() == m.var_name()) return DbTerm::one();
      return DbTerm::up(translate(Context(g.begin(), g.end() - 1), m));
    }
    case Term::Kind::App:
      return DbTerm::app(translate(g, m.fun()), translate(g, m.arg()));
    case Term::Kind::Up: {
      if (g.empty()) return DbTerm::up(translate(g, m.inner()));
      return DbTerm::up(translate(Context(g.begin(), g.end() - 1), m.inner()));
    }
    case Term::Kind::Lam:
      return DbTerm::lam(translate(extended(g, m.binder()), m.body()));
  }
  assert(false);
  return DbTerm::one();
}

// Reads a generalized de Bruijn term back as a named term whose binders are
// all z: 1 becomes z, \. A becomes \z. A, everything else is structural.
inline Term db_named_generalized(const VarName& z, const DbTerm& a) {
  switch (a.kind()) {
    case DbTerm::Kind::Var:
      return Term::var(a.var_name());
    case DbTerm::Kind::One:
      return Term::var(z);
    case DbTerm::Kind::App:
      return Term::app(db_named_generalized(z, a.fun()),
                       db_named_generalized(z, a.arg()));
    case DbTerm::Kind::Lam:
      return Term::lam(z, db_named_generalized(z, a.body()));
    case DbTerm::Kind::Up:
      return Term::up(db_named_generalized(z, a.inner()));
  }
  assert(false);
  return Term::var(z);
}

// {z/G}: sends every variable of G to z at its depth, one renaming per
// context element:
//
//   {z/nil}M = M        {z/x,D}M = {z/D}({z x}_D M)
//
// Note the orientation: chain_rename peels the FRONT of the context, while
// the lifts inside a Renaming peel from the BACK. The two lists are read in
// opposite directions.
inline Term chain_rename(const VarName& z, const Context& g, const Term& m) {
  if (g.empty()) return m;
  Context rest(g.begin() + 1, g.end());
  Term step = apply_renaming(Renaming{z, g.front(), rest}, m);
  return chain_rename(z, rest, step);
}

// Decides alpha-equivalence without ever renaming: translate both terms
// relative to the empty context and compare nameless trees.
inline bool alpha_eq_via_context(const Term& m, const Term& n) {
  return translate(Context{}, m) == translate(Context{}, n);
}

}  // namespace lamup
