#pragma once

// Limit points of the metric completion, presented as fast Cauchy streams
// of HF approximants: level(S_k, S_{k+1}) >= k+1, so the limit L satisfies
// trunc(k, S_k) = trunc(k, L). Distance and membership on limit points are
// answered per resolution; nothing about the completion is decided from
// infinite data.

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "finitary/expr.hpp"
#include "finitary/hf.hpp"
#include "finitary/level.hpp"
#include "finitary/rational.hpp"

namespace finitary {

class CauchyPoint {
 public:
  CauchyPoint(std::string name, std::function<HfSet(uint32_t)> approximant);

  const std::string& name() const { return name_; }

  // The k-th approximant S_k. Pure and memoized. Whenever two adjacent
  // approximants have materialized, the modulus is verified through the
  // truncation characterization (trunc(k, S_k) = trunc(k, S_{k+1}));
  // a violating stream raises DomainError.
  HfSet at(uint32_t k) const;

  // Largest gap index the lazy modulus check covers (default 8).
  void set_modulus_check_bound(uint32_t bound);

  // Marks a point whose k-th approximant has all of the level space
  // D_{k-1} as members; membership queries against such a point reduce to
  // a depth bound and never materialize the approximant.
  bool members_are_full_level_space() const { return full_level_space_; }

 private:
  friend CauchyPoint universe_point();
  std::string name_;
  struct Memo;
  std::shared_ptr<Memo> memo_;
  bool full_level_space_ = false;
};

// The stream of depth-k truncations of a rational set.
CauchyPoint from_rational(const RationalSet& g);

// S_0 = start, S_{i+1} = step(S_i) for a step expression guarded in its
// single variable; gap i holds level(S_i, S_{i+1}).
struct Iteration {
  std::vector<HfSet> approximants;  // n+1 entries
  std::vector<Level> gaps;          // n entries, strictly increasing while finite
};
Iteration iterate_guarded(const SetExprPtr& step, HfSet start, uint32_t n);

// Exact separating level when the limits provably differ below resolution
// k; otherwise only the lower bound "level >= k" (distance <= 2^-k).
struct ApproxDist {
  bool exact;
  Level value;  // exact level, or the bound k
  std::string to_text() const {
    return exact ? value.to_fraction() : "<=" + value.to_fraction();
  }
};
ApproxDist approx_dist(const CauchyPoint& p, const CauchyPoint& q, uint32_t k);

// Membership at resolution k (k >= 1):
// trunc(k-1, p.S_{k-1}) in members(trunc(k, q.S_k)).
// True membership in the completion implies yes at every resolution.
bool approx_member(const CauchyPoint& p, const CauchyPoint& q, uint32_t k);

// level(S_k, S_{k+1}) >= k+1 for all k <= bound.
bool verify_modulus(const CauchyPoint& p, uint32_t bound);

// The three canonical limit constructions.
CauchyPoint omega_point();     // iterated singletons of {} (the Quine atom)
CauchyPoint infinity_point();  // x = {0} u {{y} | y in x}
CauchyPoint universe_point();  // V_k = the set of all of D_{k-1}

// Built-in points by CLI name: "omega", "infinity", "universe".
CauchyPoint builtin_point(const std::string& name);

}  // namespace finitary
