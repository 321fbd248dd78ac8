#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "lamup/debruijn.hpp"
#include "lamup/term.hpp"

namespace lamup {

// All generators draw from std::mt19937_64 (the 64-bit Mersenne Twister,
// fully specified by the standard) and reduce by modulo, so every
// (seed, arguments) pair produces the same values on every platform.
using Rng = std::mt19937_64;

namespace detail {

inline std::size_t draw(Rng& rng, std::size_t n) {
  return static_cast<std::size_t>(rng() % n);
}

inline void require_pool(std::span<const VarName> pool) {
  if (pool.empty()) throw std::invalid_argument("generator: empty name pool");
}

}  // namespace detail

struct GenConfig {
  std::size_t max_size = 8;
  std::vector<VarName> name_pool{};
  std::uint64_t seed = 0;
};

// Random term with term_size <= budget, names from the pool. Composite
// constructors get double weight so sizes tend toward the budget.
inline Term random_term(Rng& rng, std::size_t budget,
                        std::span<const VarName> pool) {
  detail::require_pool(pool);
  if (budget == 0) throw std::invalid_argument("random_term: zero budget");
  auto name = [&] { return pool[detail::draw(rng, pool.size())]; };
  if (budget == 1) return Term::var(name());
  // Var 1, Up 1, Lam 2, App 2 (App only once budget >= 3).
  std::size_t r = detail::draw(rng, budget >= 3 ? 6 : 4);
  switch (r) {
    case 0:
      return Term::var(name());
    case 1:
      return Term::up(random_term(rng, budget - 1, pool));
    case 2:
    case 3:
      return Term::lam(name(), random_term(rng, budget - 1, pool));
    default: {
      std::size_t left = 1 + detail::draw(rng, budget - 2);
      Term fun = random_term(rng, left, pool);
      return Term::app(std::move(fun), random_term(rng, budget - 1 - left, pool));
    }
  }
}

inline Term random_term(const GenConfig& cfg) {
  Rng rng(cfg.seed);
  return random_term(rng, cfg.max_size, cfg.name_pool);
}

// Random generalized de Bruijn term, same size discipline as random_term.
inline DbTerm random_dbterm(Rng& rng, std::size_t budget,
                            std::span<const VarName> pool) {
  detail::require_pool(pool);
  if (budget == 0) throw std::invalid_argument("random_dbterm: zero budget");
  auto name = [&] { return pool[detail::draw(rng, pool.size())]; };
  if (budget == 1) {
    return detail::draw(rng, 2) == 0 ? DbTerm::var(name()) : DbTerm::one();
  }
  // Var 1, One 1, Up 1, Lam 2, App 2 (App only once budget >= 3).
  std::size_t r = detail::draw(rng, budget >= 3 ? 7 : 5);
  switch (r) {
    case 0:
      return DbTerm::var(name());
    case 1:
      return DbTerm::one();
    case 2:
      return DbTerm::up(random_dbterm(rng, budget - 1, pool));
    case 3:
    case 4:
      return DbTerm::lam(random_dbterm(rng, budget - 1, pool));
    default: {
      std::size_t left = 1 + detail::draw(rng, budget - 2);
      DbTerm fun = random_dbterm(rng, left, pool);
      return DbTerm::app(std::move(fun),
                         random_dbterm(rng, budget - 1 - left, pool));
    }
  }
}

inline DbTerm random_dbterm(const GenConfig& cfg) {
  Rng rng(cfg.seed);
  return random_dbterm(rng, cfg.max_size, cfg.name_pool);
}

// Random context with length uniform in [0, max_size]; the empty context is
// always reachable.
inline Context random_context(Rng& rng, std::size_t max_size,
                              std::span<const VarName> pool) {
  detail::require_pool(pool);
  Context g;
  std::size_t len = detail::draw(rng, max_size + 1);
  g.reserve(len);
  for (std::size_t i = 0; i < len; ++i) {
    g.push_back(pool[detail::draw(rng, pool.size())]);
  }
  return g;
}

inline Context random_context(const GenConfig& cfg) {
  Rng rng(cfg.seed);
  return random_context(rng, cfg.max_size, cfg.name_pool);
}

// Random renaming: target and source drawn from the pool (possibly equal),
// lifts a random context.
inline Renaming random_renaming(Rng& rng, std::size_t max_size,
                                std::span<const VarName> pool) {
  detail::require_pool(pool);
  VarName target = pool[detail::draw(rng, pool.size())];
  VarName source = pool[detail::draw(rng, pool.size())];
  return Renaming{std::move(target), std::move(source),
                  random_context(rng, max_size, pool)};
}

inline Renaming random_renaming(const GenConfig& cfg) {
  Rng rng(cfg.seed);
  return random_renaming(rng, cfg.max_size, cfg.name_pool);
}

// Every term over the pool with term_size <= max_size, exactly once, in a
// fixed documented order: ascending size; within one size, variables (name
// order), then ^-terms (inner term in this order), then lambdas (binder
// name major, body minor), then applications (function size ascending, then
// function order, then argument order). Duplicate pool names are ignored.
// Subterms are shared, so memory is one node per emitted term.
inline std::vector<Term> enumerate_terms(std::size_t max_size,
                                         std::span<const VarName> pool_in) {
  detail::require_pool(pool_in);
  if (max_size == 0) throw std::invalid_argument("enumerate_terms: zero size");
  std::vector<VarName> pool(pool_in.begin(), pool_in.end());
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());

  std::vector<std::vector<Term>> by_size(max_size + 1);
  for (const VarName& v : pool) by_size[1].push_back(Term::var(v));
  for (std::size_t s = 2; s <= max_size; ++s) {
    for (const Term& t : by_size[s - 1]) by_size[s].push_back(Term::up(t));
    for (const VarName& v : pool) {
      for (const Term& t : by_size[s - 1]) by_size[s].push_back(Term::lam(v, t));
    }
    for (std::size_t left = 1; left + 2 <= s; ++left) {
      for (const Term& f : by_size[left]) {
        for (const Term& a : by_size[s - 1 - left]) {
          by_size[s].push_back(Term::app(f, a));
        }
      }
    }
  }

  std::vector<Term> out;
  for (std::size_t s = 1; s <= max_size; ++s) {
    out.insert(out.end(), by_size[s].begin(), by_size[s].end());
  }
  return out;
}

}  // namespace lamup
