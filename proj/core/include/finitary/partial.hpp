#pragma once

// Partial sets: pointed graphs whose nodes are either Bottom or a set of
// children, ordered by the Egli-Milner relation. Bottom is strictly below
// everything; no set is below Bottom. Total (Bottom-free) partial sets
// present exactly the rational sets.

#include <cstdint>
#include <string>
#include <vector>

#include "finitary/level.hpp"
#include "finitary/rational.hpp"

namespace finitary {

struct PartialGraph {
  // is_bottom[i] marks Bottom leaves; their child lists must be empty.
  std::vector<uint8_t> is_bottom;
  std::vector<std::vector<uint32_t>> children;
  uint32_t root = 0;
};

class PartialSet {
 public:
  PartialSet();  // the empty (total) set

  static PartialSet bottom();

  uint32_t node_count() const { return static_cast<uint32_t>(children_.size()); }
  bool node_is_bottom(uint32_t v) const { return is_bottom_[v] != 0; }
  const std::vector<uint32_t>& children_of(uint32_t v) const { return children_[v]; }
  bool is_cyclic() const { return cyclic_; }

  friend bool operator==(const PartialSet& a, const PartialSet& b) {
    return a.is_bottom_ == b.is_bottom_ && a.children_ == b.children_;
  }

 private:
  friend PartialSet canonical_partial(const PartialGraph&);
  std::vector<uint8_t> is_bottom_;
  std::vector<std::vector<uint32_t>> children_;
  bool cyclic_;
};

// Kind-aware bisimulation quotient with canonical numbering (node 0 = root).
PartialSet canonical_partial(const PartialGraph& g);

// Egli-Milner order, as a greatest fixed point over node pairs:
// Bottom below anything, Set never below Bottom, and Set S below Set T iff
// every member of S is below some member of T and every member of T is
// above some member of S.
bool em_leq(const PartialSet& p, const PartialSet& q);

// Order-equivalence (em_leq both ways); the equality of the domain.
bool em_equiv(const PartialSet& p, const PartialSet& q);

// No Bottom node reachable.
bool is_total(const PartialSet& p);

// Strip the partiality wrapper. Throws DomainError on non-total input.
RationalSet to_rational(const PartialSet& p);

PartialSet embed_partial(const RationalSet& g);

// Replace every node at depth k from the root by Bottom; bot_trunc(0, g)
// is Bottom itself. The results form an increasing chain below
// embed_partial(g).
PartialSet bot_trunc(uint32_t k, const RationalSet& g);

// t is maximal within the pool: anything above it is also below it.
// Requires is_total(t).
bool maximality_check(const PartialSet& t, const std::vector<PartialSet>& pool);

// All partial sets of depth <= k whose leaves are Bottom or {}.
std::vector<PartialSet> enum_partial(uint32_t k);

// Braces extended with the token _|_ for Bottom; equation-system form for
// cyclic values.
std::string partial_text(const PartialSet& p);

// Evaluate a variable-free expression (braces, unions, _|_).
PartialSet eval_closed_partial(const SetExprPtr& e);

// Solve a guarded system whose right-hand sides may use _|_.
std::vector<std::pair<std::string, PartialSet>> solve_partial(const EqSystem& sys);

}  // namespace finitary
