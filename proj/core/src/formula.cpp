#include "finitary/formula.hpp"

#include <algorithm>

namespace finitary {
namespace {

int precedence(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Implies:
      return 1;
    case Formula::Kind::Or:
      return 2;
    case Formula::Kind::And:
      return 3;
    default:
      return 4;  // constants and unary operators
  }
}

}  // namespace

Formula Formula::make(Kind k, Formula a, Formula b) {
  uint32_t d = 0;
  if (!a.is_null()) d = std::max(d, a.node_->modal_depth);
  if (!b.is_null()) d = std::max(d, b.node_->modal_depth);
  if (k == Kind::Box || k == Kind::Diamond) ++d;
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->left = a.node_;
  n->right = b.node_;
  n->modal_depth = d;
  return Formula(std::move(n));
}

Formula Formula::top() { return make(Kind::True, {}, {}); }
Formula Formula::bottom() { return make(Kind::False, {}, {}); }
Formula Formula::neg(Formula f) { return make(Kind::Not, std::move(f), {}); }
Formula Formula::conj(Formula a, Formula b) { return make(Kind::And, std::move(a), std::move(b)); }
Formula Formula::disj(Formula a, Formula b) { return make(Kind::Or, std::move(a), std::move(b)); }
Formula Formula::implies(Formula a, Formula b) {
  return make(Kind::Implies, std::move(a), std::move(b));
}
Formula Formula::box(Formula f) { return make(Kind::Box, std::move(f), {}); }
Formula Formula::diamond(Formula f) { return make(Kind::Diamond, std::move(f), {}); }

Formula Formula::iff(Formula a, Formula b) {
  return conj(implies(a, b), implies(b, a));
}

Formula Formula::disj_all(const std::vector<Formula>& fs) {
  if (fs.empty()) return bottom();
  Formula acc = fs[0];
  for (size_t i = 1; i < fs.size(); ++i) acc = disj(acc, fs[i]);
  return acc;
}

Formula Formula::conj_all(const std::vector<Formula>& fs) {
  if (fs.empty()) return top();
  Formula acc = fs[0];
  for (size_t i = 1; i < fs.size(); ++i) acc = conj(acc, fs[i]);
  return acc;
}

bool Formula::same_shape(const Formula& other) const {
  if (node_ == other.node_) return true;
  if (!node_ || !other.node_) return false;
  if (node_->kind != other.node_->kind) return false;
  return Formula(node_->left).same_shape(Formula(other.node_->left)) &&
         Formula(node_->right).same_shape(Formula(other.node_->right));
}

namespace {

void render(const Formula& f, int parent_prec, std::string& out) {
  int prec = precedence(f.kind());
  bool parens = prec < parent_prec;
  if (parens) out += "(";
  switch (f.kind()) {
    case Formula::Kind::True:
      out += "true";
      break;
    case Formula::Kind::False:
      out += "false";
      break;
    case Formula::Kind::Not:
      out += "~";
      render(f.left(), 4, out);
      break;
    case Formula::Kind::Box:
      out += "[]";
      render(f.left(), 4, out);
      break;
    case Formula::Kind::Diamond:
      out += "<>";
      render(f.left(), 4, out);
      break;
    case Formula::Kind::And:
      render(f.left(), 3, out);
      out += "&";
      render(f.right(), 4, out);
      break;
    case Formula::Kind::Or:
      render(f.left(), 2, out);
      out += "|";
      render(f.right(), 3, out);
      break;
    case Formula::Kind::Implies:
      render(f.left(), 2, out);  // right associative: parenthesize a nested -> on the left
      out += "->";
      render(f.right(), 1, out);
      break;
  }
  if (parens) out += ")";
}

}  // namespace

std::string Formula::to_text() const {
  std::string out;
  render(*this, 0, out);
  return out;
}

}  // namespace finitary
