#pragma once

// Abstract syntax shared by the equation-system solver, guarded iteration
// and the term-function evaluator. Which node kinds are admissible depends
// on the context; each consumer validates what it accepts.

#include <memory>
#include <string>
#include <vector>

#include "finitary/formula.hpp"

namespace finitary {

struct SetExpr;
using SetExprPtr = std::shared_ptr<const SetExpr>;

struct SetExpr {
  enum class Kind {
    Braces,    // {e1,...,en}
    Var,       // identifier
    Union,     // e1 | e2
    BigUnion,  // U e
    Power,     // P e
    Sep,       // sep(e, formula)
    Bottom,    // _|_ (partial sets only)
  };

  Kind kind;
  std::vector<SetExprPtr> items;  // Braces members / Union pair / unary child
  std::string name;               // Var
  Formula pred;                   // Sep

  static SetExprPtr braces(std::vector<SetExprPtr> members) {
    auto e = std::make_shared<SetExpr>();
    e->kind = Kind::Braces;
    e->items = std::move(members);
    return e;
  }
  static SetExprPtr var(std::string n) {
    auto e = std::make_shared<SetExpr>();
    e->kind = Kind::Var;
    e->name = std::move(n);
    return e;
  }
  static SetExprPtr union_of(SetExprPtr a, SetExprPtr b) {
    auto e = std::make_shared<SetExpr>();
    e->kind = Kind::Union;
    e->items = {std::move(a), std::move(b)};
    return e;
  }
  static SetExprPtr big_union_of(SetExprPtr a) {
    auto e = std::make_shared<SetExpr>();
    e->kind = Kind::BigUnion;
    e->items = {std::move(a)};
    return e;
  }
  static SetExprPtr power_of(SetExprPtr a) {
    auto e = std::make_shared<SetExpr>();
    e->kind = Kind::Power;
    e->items = {std::move(a)};
    return e;
  }
  static SetExprPtr sep_of(SetExprPtr a, Formula pred) {
    auto e = std::make_shared<SetExpr>();
    e->kind = Kind::Sep;
    e->items = {std::move(a)};
    e->pred = std::move(pred);
    return e;
  }
  static SetExprPtr bottom() {
    auto e = std::make_shared<SetExpr>();
    e->kind = Kind::Bottom;
    return e;
  }
};

// Names of all variables occurring anywhere in the expression.
std::vector<std::string> expr_variables(const SetExprPtr& e);

// True when every occurrence of every variable sits inside at least one
// pair of set-forming braces.
bool expr_guarded(const SetExprPtr& e);

}  // namespace finitary
