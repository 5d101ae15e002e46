#pragma once

// The positive set-theory axioms as executable operations over rational
// sets. Predicates are closed modal formulas (clopen, hence continuous);
// term functions are set expressions in one variable, denoting continuous
// maps of the universe into itself.

#include <string>
#include <vector>

#include "finitary/expr.hpp"
#include "finitary/formula.hpp"
#include "finitary/rational.hpp"

namespace finitary {

// A unary set expression over the distinguished variable `v`: braces,
// unions, big union (U e), powerset (P e) and separation (sep(e, f)).
class TermFn {
 public:
  explicit TermFn(SetExprPtr expr);

  RationalSet eval(const RationalSet& x) const;
  const SetExprPtr& expr() const { return expr_; }

 private:
  SetExprPtr expr_;
};

// {y in x | y |= pred}; always a member-subset of x.
RationalSet separation(const RationalSet& x, const Formula& pred);

// {f(y) | y in x}, deduplicated by bisimulation.
RationalSet replacement(const RationalSet& x, const TermFn& f);

// Picks the canonical-least member of f(z) for every member z of x and
// collects the picks. Every f(z) must be nonempty; the offending member is
// named otherwise. Satisfies the two-clause choice condition:
// every z in x has a member of f(z) in y, and every w in y is in some f(z).
RationalSet choice(const RationalSet& x, const TermFn& f);

struct AxiomCheck {
  std::string name;
  bool passed;
  std::string note;
};

struct SuiteReport {
  std::vector<AxiomCheck> checks;
  bool all_passed() const;
};

// Closure, extensionality, powerset counting, separation/replacement/
// choice postconditions, infinity and universe membership at finite
// resolution. Deterministic sampling.
SuiteReport axiom_suite();

}  // namespace finitary
