#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <utility>
#include <vector>

#include "lamup/debruijn.hpp"
#include "lamup/term.hpp"

namespace lamup {

// Free variables stratified by weakening depth: level i holds the variables
// that occur free under exactly i pending ^'s. Stored canonically: trailing
// empty levels are dropped, so the all-empty sequence has depth 0 and equal
// sequences compare equal with ==. Queries beyond the stored depth return
// the empty set.
class FvSeq {
 public:
  using Level = std::set<VarName>;

  FvSeq() = default;
  explicit FvSeq(std::vector<Level> levels) : levels_(std::move(levels)) {
    while (!levels_.empty() && levels_.back().empty()) levels_.pop_back();
  }

  std::size_t depth() const { return levels_.size(); }
  bool all_empty() const { return levels_.empty(); }

  const Level& level(std::size_t i) const {
    static const Level none;
    return i < levels_.size() ? levels_[i] : none;
  }

  friend bool operator==(const FvSeq&, const FvSeq&) = default;

 private:
  std::vector<Level> levels_;
};

// Level-by-level free variables of a named term:
//
//   FV_0(x) = {x}         FV_{i+1}(x) = {}
//   FV_0(^M) = {}         FV_{i+1}(^M) = FV_i(M)
//   FV_i(M N) = FV_i(M) u FV_i(N)
//   FV_0(\x. M) = (FV_0(M) \ {x}) u FV_1(M)
//   FV_{i+1}(\x. M) = FV_{i+2}(M)
inline FvSeq fv_term(const Term& m) {
  using Levels = std::vector<FvSeq::Level>;
  switch (m.kind()) {
    case Term::Kind::Var: {
      Levels lv(1);
      lv[0].insert(m.var_name());
      return FvSeq(std::move(lv));
    }
    case Term::Kind::Up: {
      FvSeq f = fv_term(m.inner());
      Levels lv(f.depth() + 1);
      for (std::size_t i = 0; i < f.depth(); ++i) lv[i + 1] = f.level(i);
      return FvSeq(std::move(lv));
    }
    case Term::Kind::App: {
      FvSeq a = fv_term(m.fun());
      FvSeq b = fv_term(m.arg());
      Levels lv(std::max(a.depth(), b.depth()));
      for (std::size_t i = 0; i < lv.size(); ++i) {
        lv[i] = a.level(i);
        lv[i].insert(b.level(i).begin(), b.level(i).end());
      }
      return FvSeq(std::move(lv));
    }
    case Term::Kind::Lam: {
      FvSeq f = fv_term(m.body());
      Levels lv(std::max<std::size_t>(1, f.depth()));
      lv[0] = f.level(0);
      lv[0].erase(m.binder());
      lv[0].insert(f.level(1).begin(), f.level(1).end());
      for (std::size_t i = 1; i < lv.size(); ++i) lv[i] = f.level(i + 1);
      return FvSeq(std::move(lv));
    }
  }
  return FvSeq{};
}

// Same stratification for generalized de Bruijn terms; 1 is bound, so it
// contributes nothing, and \. merges levels 0 and 1 without removing names:
//
//   FV_i(1) = {}
//   FV_0(\. A) = FV_0(A) u FV_1(A)      FV_{i+1}(\. A) = FV_{i+2}(A)
inline FvSeq fv_dbterm(const DbTerm& a) {
  using Levels = std::vector<FvSeq::Level>;
  switch (a.kind()) {
    case DbTerm::Kind::Var: {
      Levels lv(1);
      lv[0].insert(a.var_name());
      return FvSeq(std::move(lv));
    }
    case DbTerm::Kind::One:
      return FvSeq{};
    case DbTerm::Kind::Up: {
      FvSeq f = fv_dbterm(a.inner());
      Levels lv(f.depth() + 1);
      for (std::size_t i = 0; i < f.depth(); ++i) lv[i + 1] = f.level(i);
      return FvSeq(std::move(lv));
    }
    case DbTerm::Kind::App: {
      FvSeq l = fv_dbterm(a.fun());
      FvSeq r = fv_dbterm(a.arg());
      Levels lv(std::max(l.depth(), r.depth()));
      for (std::size_t i = 0; i < lv.size(); ++i) {
        lv[i] = l.level(i);
        lv[i].insert(r.level(i).begin(), r.level(i).end());
      }
      return FvSeq(std::move(lv));
    }
    case DbTerm::Kind::Lam: {
      FvSeq f = fv_dbterm(a.body());
      Levels lv(std::max<std::size_t>(1, f.depth()));
      lv[0] = f.level(0);
      lv[0].insert(f.level(1).begin(), f.level(1).end());
      for (std::size_t i = 1; i < lv.size(); ++i) lv[i] = f.level(i + 1);
      return FvSeq(std::move(lv));
    }
  }
  return FvSeq{};
}

}  // namespace lamup
