#pragma once

// Hereditarily finite sets, hash-consed into a process-wide append-only
// store. A node's children are deduplicated and sorted strictly increasing
// under the canonical order, so two sets are equal iff their handles are
// equal. The store supports concurrent readers; insertion is exclusive.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "finitary/level.hpp"

namespace finitary {

class HfSet {
 public:
  constexpr HfSet() = default;  // the empty set
  constexpr uint32_t id() const { return id_; }
  friend constexpr bool operator==(HfSet, HfSet) = default;

  static constexpr HfSet from_id(uint32_t id) { return HfSet(id); }

 private:
  explicit constexpr HfSet(uint32_t id) : id_(id) {}
  uint32_t id_ = 0;
};

// The unique set with no members.
HfSet empty();

// Canonical set with the given members; invariant under permutation and
// repetition of the argument list.
HfSet make(std::vector<HfSet> members);

// Canonical child list, sorted strictly increasing under compare().
const std::vector<HfSet>& members(HfSet s);

bool is_member(HfSet a, HfSet b);

// depth(empty) = 0, else 1 + max over members.
uint32_t depth(HfSet s);

// Strict total order with the empty set as minimum. Member lists are
// compared lexicographically in descending order; with a common prefix the
// shorter list is smaller.
std::strong_ordering compare(HfSet a, HfSet b);

// Depth-k projection: trunc(0,s) = {} and
// trunc(k+1,s) = make([trunc(k,m) for m in members(s)]).
HfSet trunc(uint32_t k, HfSet s);

// Stratified bisimulation ~_k by its inductive clauses: ~_0 is total and
// s ~_{k+1} t iff members match both ways up to ~_k.
bool strat_eq(uint32_t k, HfSet s, HfSet t);

// Least k with not(s ~_k t); infinite when s = t.
Level level(HfSet s, HfSet t);

// The ultrametric distance 2^(-level).
Level dist(HfSet s, HfSet t);

// Same distance computed by the recursive Hausdorff rules: equal sets are
// at distance 0, empty against nonempty is 1/2, and otherwise half the
// two-sided min/max over member distances. Agrees with dist() everywhere.
Level dist_hausdorff(HfSet s, HfSet t);

HfSet set_union(HfSet s, HfSet t);
HfSet singleton(HfSet s);
HfSet pair_set(HfSet s, HfSet t);

// Union of all members' members.
HfSet big_union(HfSet s);

// Set of all subsets of members(s); 2^n members. Guarded by a size cap.
HfSet power_set(HfSet s);

// Brace rendering with members in canonical order, e.g. "{{},{{}}}".
std::string to_text(HfSet s);

// Number of nodes currently interned.
size_t store_size();

}  // namespace finitary

template <>
struct std::hash<finitary::HfSet> {
  size_t operator()(finitary::HfSet s) const noexcept {
    // splitmix64 finalizer
    uint64_t x = s.id() + 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return static_cast<size_t>(x ^ (x >> 31));
  }
};
