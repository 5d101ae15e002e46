#pragma once

// Finitely presentable (possibly cyclic, finitely branching) finitary sets,
// represented as bisimulation-minimal pointed graphs with a canonical node
// numbering. Equal sets have byte-identical serializations. Node 0 is
// always the root.

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "finitary/expr.hpp"
#include "finitary/hf.hpp"
#include "finitary/level.hpp"

namespace finitary {

// Arbitrary finite pointed graph; input format for minimize().
struct PointedGraph {
  std::vector<std::vector<uint32_t>> children;
  uint32_t root = 0;
};

class RationalSet {
 public:
  RationalSet() : children_(1), cyclic_(false) {}  // the empty set

  uint32_t node_count() const { return static_cast<uint32_t>(children_.size()); }
  const std::vector<uint32_t>& children_of(uint32_t node) const { return children_[node]; }
  bool is_cyclic() const { return cyclic_; }

  PointedGraph as_graph() const { return PointedGraph{children_, 0}; }

  // Canonical structural equality; coincides with bisimilarity.
  friend bool operator==(const RationalSet& a, const RationalSet& b) {
    return a.children_ == b.children_;
  }

 private:
  friend RationalSet minimize(const PointedGraph&);
  std::vector<std::vector<uint32_t>> children_;  // children_[i] sorted ascending
  bool cyclic_;
};

// Quotient by the largest bisimulation, restricted to the reachable part,
// renumbered canonically (refinement block order walked root-first).
// Idempotent; the result is bisimilar to the input.
RationalSet minimize(const PointedGraph& g);

bool bisim(const RationalSet& g, const RationalSet& h);

// Least refinement round at which the roots' stratified classes separate;
// infinite when bisimilar. Agrees with hfcore level() under embed().
Level strat_level(const RationalSet& g, const RationalSet& h);

// g is bisimilar to some child of h's root.
bool member(const RationalSet& g, const RationalSet& h);

// Each root child as a rational set, sorted by compare().
std::vector<RationalSet> unfold(const RationalSet& h);

// The set whose members are the given sets.
RationalSet fold(const std::vector<RationalSet>& members);

RationalSet set_union(const RationalSet& g, const RationalSet& h);
RationalSet singleton(const RationalSet& g);
RationalSet pair_set(const RationalSet& g, const RationalSet& h);
RationalSet big_union(const RationalSet& g);
RationalSet power_set(const RationalSet& g);

RationalSet embed(HfSet s);

// Inverse of embed on acyclic sets; throws DomainError("non-well-founded")
// on cyclic input.
HfSet to_hf(const RationalSet& g);

// Depth-k truncation to a hereditarily finite set.
HfSet trunc_hf(uint32_t k, const RationalSet& g);

// Strict total order: acyclic sets first, in hfcore order; cyclic sets
// after, ordered by canonical text. EQ iff bisimilar.
std::strong_ordering compare(const RationalSet& g, const RationalSet& h);

// Brace text for acyclic sets; otherwise a guarded equation system over
// the canonical node names, e.g. "x0={x0}".
std::string canonical_text(const RationalSet& g);

std::string to_dot(const RationalSet& g);

// --- guarded equation systems ---------------------------------------------

struct Equation {
  std::string name;
  SetExprPtr rhs;
};

struct EqSystem {
  std::vector<Equation> equations;
};

struct SystemIssue {
  enum class Kind { Unguarded, Duplicate, Undefined };
  Kind kind;
  std::string variable;
  std::string equation;  // name of the offending equation
  std::string message;
};

// Empty result means the system is well-formed and guarded.
std::vector<SystemIssue> check_guarded(const EqSystem& sys);

// Unique solution of a guarded system, one rational set per variable, in
// equation order. Throws DomainError when check_guarded reports issues.
std::vector<std::pair<std::string, RationalSet>> solve(const EqSystem& sys);

// Evaluate a variable-free expression (braces and unions) to a rational set.
RationalSet eval_closed(const SetExprPtr& e);

}  // namespace finitary
