#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "lamup/term.hpp"

namespace lamup {

class NotALambda : public std::invalid_argument {
 public:
  NotALambda() : std::invalid_argument("alpha_axiom_rename: term is not a lambda") {}
};

// The one alpha-conversion step: \x. M  |->  \y. {y x}M. No freshness side
// condition; y may occur in M, including y == x.
inline Term alpha_axiom_rename(const Term& m, const VarName& y) {
  if (m.kind() != Term::Kind::Lam) throw NotALambda{};
  return Term::lam(y, apply_renaming(Renaming{y, m.binder()}, m.body()));
}

// Canonical representative of m's alpha class: every binder is rewritten to
// z bottom-up, ^-wrapping whatever the rewrite displaces.
//
//   db(x) = x    db(^M) = ^db(M)    db(M N) = db(M) db(N)
//   db(\x. M) = \z. {z x}(db(M))
//
// Idempotent on its own image, and db(M) is alpha-equivalent to M.
inline Term db_named(const VarName& z, const Term& m) {
  switch (m.kind()) {
    case Term::Kind::Var:
      return m;
    case Term::Kind::Up:
      return Term::up(db_named(z, m.inner()));
    case Term::Kind::App:
      return Term::app(db_named(z, m.fun()), db_named(z, m.arg()));
    case Term::Kind::Lam:
      return Term::lam(
          z, apply_renaming(Renaming{z, m.binder()}, db_named(z, m.body())));
  }
  return m;
}

// Decides alpha-equivalence by comparing canonical representatives. The
// answer does not depend on the choice of z.
inline bool alpha_eq(const Term& m, const Term& n,
                     const VarName& z = VarName("z")) {
  return db_named(z, m) == db_named(z, n);
}

namespace detail {

// Pre-order paths (child indices from the root) of every Lam node.
inline void lam_paths(const Term& m, std::vector<std::size_t>& prefix,
                      std::vector<std::vector<std::size_t>>& out) {
  if (m.kind() == Term::Kind::Lam) out.push_back(prefix);
  switch (m.kind()) {
    case Term::Kind::Var:
      return;
    case Term::Kind::App:
      prefix.push_back(0);
      lam_paths(m.fun(), prefix, out);
      prefix.back() = 1;
      lam_paths(m.arg(), prefix, out);
      prefix.pop_back();
      return;
    case Term::Kind::Lam:
      prefix.push_back(0);
      lam_paths(m.body(), prefix, out);
      prefix.pop_back();
      return;
    case Term::Kind::Up:
      prefix.push_back(0);
      lam_paths(m.inner(), prefix, out);
      prefix.pop_back();
      return;
  }
}

inline Term axiom_at(const Term& m, std::span<const std::size_t> path,
                     const VarName& y) {
  if (path.empty()) return alpha_axiom_rename(m, y);
  auto rest = path.subspan(1);
  switch (m.kind()) {
    case Term::Kind::App:
      return path.front() == 0
                 ? Term::app(axiom_at(m.fun(), rest, y), m.arg())
                 : Term::app(m.fun(), axiom_at(m.arg(), rest, y));
    case Term::Kind::Lam:
      return Term::lam(m.binder(), axiom_at(m.body(), rest, y));
    case Term::Kind::Up:
      return Term::up(axiom_at(m.inner(), rest, y));
    case Term::Kind::Var:
      break;
  }
  assert(false);
  return m;
}

}  // namespace detail

// Random walk through m's alpha class: each step picks a Lam subterm
// (uniformly over pre-order positions), picks a name from the pool, and
// rewrites that subterm by the axiom. Deterministic per (inputs, seed):
// draws come from std::mt19937_64 reduced by modulo, position before name.
// If m has no Lam subterm the walk is the identity.
inline Term random_alpha_walk(const Term& m, std::size_t steps,
                              std::span<const VarName> name_pool,
                              std::uint64_t seed) {
  if (name_pool.empty()) {
    throw std::invalid_argument("random_alpha_walk: empty name pool");
  }
  std::mt19937_64 rng(seed);
  Term cur = m;
  for (std::size_t s = 0; s < steps; ++s) {
    std::vector<std::vector<std::size_t>> positions;
    std::vector<std::size_t> prefix;
    detail::lam_paths(cur, prefix, positions);
    if (positions.empty()) return cur;
    const auto& path = positions[rng() % positions.size()];
    const VarName& y = name_pool[rng() % name_pool.size()];
    cur = detail::axiom_at(cur, path, y);
  }
  return cur;
}

}  // namespace lamup
