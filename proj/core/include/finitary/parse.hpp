#pragma once

// Recursive-descent parsers for the textual surface: brace sets, equation
// systems, modal formulas, partial sets, process terms and term functions.
// Errors carry 1-based line/column positions.

#include <string>

#include "finitary/expr.hpp"
#include "finitary/formula.hpp"
#include "finitary/hf.hpp"
#include "finitary/partial.hpp"
#include "finitary/process.hpp"
#include "finitary/rational.hpp"
#include "finitary/universe.hpp"

namespace finitary {

// Brace text (unions allowed, identifiers rejected) to a canonical HF set.
HfSet parse_set(const std::string& text);

// A variable-free set expression to a rational set.
RationalSet parse_rational(const std::string& text);

// `name = expr ;` equations; identifiers refer to system variables.
EqSystem parse_system(const std::string& text);

// Universal set reader for the CLI: equation systems (solved, first
// variable's value) or plain expressions.
RationalSet read_rational(const std::string& text);

Formula parse_formula(const std::string& text);

// Partial sets: braces plus _|_, or the equation-system form.
PartialSet parse_partial(const std::string& text);

ProcessPtr parse_process(const std::string& text);

TermFn parse_term_fn(const std::string& text);

// A guarded step expression in at most one variable (for iteration).
SetExprPtr parse_step(const std::string& text);

}  // namespace finitary
