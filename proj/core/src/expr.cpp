#include "finitary/expr.hpp"

#include <algorithm>

namespace finitary {
namespace {

void collect_vars(const SetExprPtr& e, std::vector<std::string>& out) {
  if (e->kind == SetExpr::Kind::Var) {
    out.push_back(e->name);
    return;
  }
  for (const auto& it : e->items) collect_vars(it, out);
}

bool guarded_rec(const SetExprPtr& e, int brace_depth) {
  switch (e->kind) {
    case SetExpr::Kind::Var:
      return brace_depth > 0;
    case SetExpr::Kind::Braces:
      return std::all_of(e->items.begin(), e->items.end(),
                         [&](const SetExprPtr& m) { return guarded_rec(m, brace_depth + 1); });
    default:
      // Union, BigUnion, Power, Sep do not guard their operands.
      return std::all_of(e->items.begin(), e->items.end(),
                         [&](const SetExprPtr& m) { return guarded_rec(m, brace_depth); });
  }
}

}  // namespace

std::vector<std::string> expr_variables(const SetExprPtr& e) {
  std::vector<std::string> out;
  collect_vars(e, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool expr_guarded(const SetExprPtr& e) { return guarded_rec(e, 0); }

}  // namespace finitary
