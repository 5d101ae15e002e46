#pragma once

// Semantics and decision procedure for closed modal-K formulas over the
// set universe. Box/Diamond read over membership: s |= []f iff every
// member satisfies f, s |= <>f iff some member does. A depth-k formula
// only probes truncations to depth k, so validity over the whole universe
// is decided by evaluating on the finite level space D_k.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "finitary/formula.hpp"
#include "finitary/hf.hpp"
#include "finitary/level.hpp"
#include "finitary/rational.hpp"

namespace finitary {

bool sat(HfSet s, const Formula& f);
bool sat(const RationalSet& g, const Formula& f);

// The master formula characterizing an HF set up to bisimulation:
// master({}) = []false and
// master({x1..xn}) = [](master(x1)|...|master(xn)) & <>master(x1) & ... .
Formula master(HfSet s);

// All values of trunc(k, .): D_0 = { {} }, D_{k+1} = subsets of D_k,
// sorted canonically. Sizes 1, 2, 4, 16, 65536 for k = 0..4.
const std::vector<HfSet>& enum_level(uint32_t k);

// Enumeration cap for the level spaces (default 4; D_5 is astronomical).
uint32_t level_cap();
void set_level_cap(uint32_t k);

// Denotation of a formula as a subset of D_depth.
struct NormalForm {
  uint32_t depth;
  std::vector<bool> sat;  // indexed like enum_level(depth)

  size_t count() const;
  bool is_full() const;
  bool is_empty() const;
  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

NormalForm normal_form(const Formula& f);
// Denotation at an explicit depth k >= modal_depth(f).
NormalForm normal_form_at(const Formula& f, uint32_t k);

bool valid(const Formula& f);
bool satisfiable(const Formula& f);
bool equiv(const Formula& f, const Formula& g);
bool entails(const Formula& f, const Formula& g);

// Characteristic formula of a level-space element: s |= char_formula(k, e)
// iff trunc(k, s) = e. Requires depth(e) <= k.
Formula char_formula(uint32_t k, HfSet e);

// 2^|D_k|, exactly when it fits, symbolically otherwise. Defined for k <= 5.
struct AlgebraSize {
  std::optional<uint64_t> exact;
  std::string text;
};
AlgebraSize algebra_size(uint32_t k);

// Characteristic formulas of all elements of D_k; each has a singleton
// denotation at depth k (the ultrafilter witnesses).
std::vector<Formula> atoms(uint32_t k);

// Least k such that some depth-k formula separates the two sets (via
// characteristic formulas); infinite when bisimilar. Coincides with
// strat_level / level at every depth.
Level formula_level(HfSet s, HfSet t);
Level formula_level(const RationalSet& g, const RationalSet& h);

}  // namespace finitary
