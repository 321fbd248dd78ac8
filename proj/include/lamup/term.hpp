#pragma once

#include <cassert>
#include <cstddef>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace lamup {

// Variable identifier. Equality is exact string equality; alpha-insensitive
// comparison is a property of terms, not of names. Names are ASCII
// identifiers: a letter or `_` followed by letters, digits, `_`, `'`.
// `nil` is reserved by the context syntax and rejected here so that every
// printable value round-trips through its parser.
class VarName {
 public:
  explicit VarName(std::string name) : name_(std::move(name)) {
    if (!valid(name_)) {
      throw std::invalid_argument("invalid variable name: '" + name_ + "'");
    }
  }

  static bool valid(std::string_view s) {
    if (s.empty() || s == "nil") return false;
    auto head = [](char c) {
      return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
    };
    auto tail = [&](char c) {
      return head(c) || (c >= '0' && c <= '9') || c == '\'';
    };
    if (!head(s.front())) return false;
    for (char c : s.substr(1)) {
      if (!tail(c)) return false;
    }
    return true;
  }

  const std::string& str() const { return name_; }

  friend bool operator==(const VarName&, const VarName&) = default;
  friend auto operator<=>(const VarName&, const VarName&) = default;

 private:
  std::string name_;
};

// Finite ordered list of variables, repetitions allowed. The empty vector is
// the context nil; concatenation is vector concatenation.
using Context = std::vector<VarName>;

inline Context extended(Context g, VarName x) {
  g.push_back(std::move(x));
  return g;
}

// Immutable term over the grammar
//
//   M, N ::= x | M N | \x. M | ^M
//
// ^M is an explicit weakening: M does not use the nearest enclosing binder.
// No normalization happens at construction; ^^x and ^x are distinct values.
// Terms are trees behind shared immutable nodes, so copies are O(1) and all
// operations on them are pure; values can be used freely across threads.
class Term {
 public:
  enum class Kind { Var, App, Lam, Up };  // order matches the node variant

  static Term var(VarName v);
  static Term app(Term fun, Term arg);
  static Term lam(VarName binder, Term body);
  static Term up(Term inner);

  Kind kind() const;
  bool is(Kind k) const { return kind() == k; }

  const VarName& var_name() const;  // Var only
  const Term& fun() const;          // App only
  const Term& arg() const;          // App only
  const VarName& binder() const;    // Lam only
  const Term& body() const;         // Lam only
  const Term& inner() const;        // Up only

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Term::Node {
  struct VarN {
    VarName name;
  };
  struct AppN {
    Term fun;
    Term arg;
  };
  struct LamN {
    VarName binder;
    Term body;
  };
  struct UpN {
    Term inner;
  };
  std::variant<VarN, AppN, LamN, UpN> data;
};

inline Term Term::var(VarName v) {
  return Term(std::make_shared<const Node>(Node{Node::VarN{std::move(v)}}));
}

inline Term Term::app(Term fun, Term arg) {
  return Term(std::make_shared<const Node>(
      Node{Node::AppN{std::move(fun), std::move(arg)}}));
}

inline Term Term::lam(VarName binder, Term body) {
  return Term(std::make_shared<const Node>(
      Node{Node::LamN{std::move(binder), std::move(body)}}));
}

inline Term Term::up(Term inner) {
  return Term(std::make_shared<const Node>(Node{Node::UpN{std::move(inner)}}));
}

inline Term::Kind Term::kind() const {
  return static_cast<Kind>(node_->data.index());
}

inline const VarName& Term::var_name() const {
  return std::get<Node::VarN>(node_->data).name;
}

inline const Term& Term::fun() const {
  return std::get<Node::AppN>(node_->data).fun;
}

inline const Term& Term::arg() const {
  return std::get<Node::AppN>(node_->data).arg;
}

inline const VarName& Term::binder() const {
  return std::get<Node::LamN>(node_->data).binder;
}

inline const Term& Term::body() const {
  return std::get<Node::LamN>(node_->data).body;
}

inline const Term& Term::inner() const {
  return std::get<Node::UpN>(node_->data).inner;
}

// Structural identity: binder names compared literally. Alpha-insensitive
// comparison is alpha_eq in alpha.hpp.
inline bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::Var:
      return a.var_name() == b.var_name();
    case Term::Kind::App:
      return a.fun() == b.fun() && a.arg() == b.arg();
    case Term::Kind::Lam:
      return a.binder() == b.binder() && a.body() == b.body();
    case Term::Kind::Up:
      return a.inner() == b.inner();
  }
  return false;
}

inline bool term_eq(const Term& a, const Term& b) { return a == b; }

// Number of constructors in the tree; always >= 1.
inline std::size_t term_size(const Term& m) {
  switch (m.kind()) {
    case Term::Kind::Var:
      return 1;
    case Term::Kind::App:
      return 1 + term_size(m.fun()) + term_size(m.arg());
    case Term::Kind::Lam:
      return 1 + term_size(m.body());
    case Term::Kind::Up:
      return 1 + term_size(m.inner());
  }
  return 0;
}

// Renaming function {target source} with a list of lifts, written
// {y x}_{g1,...,gn}. Plain {y x} maps x to y and wraps every other variable
// in ^. Lifts are stored outermost-first: the innermost (most recently
// added) lift is lifts.back() and is the first one consumed when the
// renaming meets a variable or a weakening. target == source is legal, as
// are lifts mentioning either of them.
struct Renaming {
  VarName target;
  VarName source;
  Context lifts{};

  friend bool operator==(const Renaming&, const Renaming&) = default;
};

// F |-> F_x: pushes one more lift under a binder.
inline Renaming lift_renaming(Renaming f, VarName x) {
  f.lifts.push_back(std::move(x));
  return f;
}

namespace detail {

// Active lifts as a linked chain with the innermost lift at the head, so a
// binder extends in O(1) and a variable or weakening peels in O(1).
struct LiftChain {
  const VarName* var;
  const LiftChain* outer;
};

inline Term apply_rec(const VarName& target, const VarName& source,
                      const LiftChain* lifts, const Term& m) {
  switch (m.kind()) {
    case Term::Kind::App:
      return Term::app(apply_rec(target, source, lifts, m.fun()),
                       apply_rec(target, source, lifts, m.arg()));
    case Term::Kind::Lam: {
      LiftChain under{&m.binder(), lifts};
      return Term::lam(m.binder(), apply_rec(target, source, &under, m.body()));
    }
    case Term::Kind::Up:
      if (lifts == nullptr) return m;  // {y x}(^M) = ^M
      return Term::up(apply_rec(target, source, lifts->outer, m.inner()));
    case Term::Kind::Var: {
      const VarName& v = m.var_name();
      if (lifts == nullptr) {
        if (v == source) return Term::var(target);  // {y x}(x) = y
        return Term::up(m);                         // {y x}(z) = ^z
      }
      if (v == *lifts->var) return m;  // F_x(x) = x
      return Term::up(apply_rec(target, source, lifts->outer, m));  // F_x(z) = ^F(z)
    }
  }
  assert(false);
  return m;
}

}  // namespace detail

// Applies the renaming by structural recursion. Total on all inputs; each
// step shrinks (term size, lift count) lexicographically. Binders are kept
// in place: F(\x. M) = \x. F_x(M).
inline Term apply_renaming(const Renaming& f, const Term& m) {
  std::vector<detail::LiftChain> links;
  links.reserve(f.lifts.size());  // no reallocation: outer pointers stay valid
  const detail::LiftChain* head = nullptr;
  for (const VarName& v : f.lifts) {
    links.push_back(detail::LiftChain{&v, head});
    head = &links.back();
  }
  return detail::apply_rec(f.target, f.source, head, m);
}

}  // namespace lamup
