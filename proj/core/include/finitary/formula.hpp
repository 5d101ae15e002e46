#pragma once

// Closed modal-K formulas: no propositional atoms, just the constants,
// Boolean connectives and the two modalities. Formulas are immutable
// shared DAGs; sharing keeps characteristic formulas small and lets
// evaluators memoize on node identity.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace finitary {

class Formula {
 public:
  enum class Kind : uint8_t { True, False, Not, And, Or, Implies, Box, Diamond };

  Formula() = default;  // empty handle; use the factories below

  static Formula top();
  static Formula bottom();
  static Formula neg(Formula f);
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula implies(Formula a, Formula b);
  static Formula box(Formula f);
  static Formula diamond(Formula f);

  // (a -> b) & (b -> a); there is no primitive biconditional.
  static Formula iff(Formula a, Formula b);

  // Left-associated folds; empty input gives bottom() resp. top().
  static Formula disj_all(const std::vector<Formula>& fs);
  static Formula conj_all(const std::vector<Formula>& fs);

  Kind kind() const { return node_->kind; }
  Formula left() const { return Formula(node_->left); }
  Formula right() const { return Formula(node_->right); }

  // Nesting depth of modalities.
  uint32_t modal_depth() const { return node_->modal_depth; }

  bool is_null() const { return node_ == nullptr; }

  // Node identity, usable as a memoization key. Structurally equal formulas
  // built independently may have distinct identities.
  const void* identity() const { return node_.get(); }

  // Structural equality (same shape, not semantic equivalence).
  bool same_shape(const Formula& other) const;

  // Canonical text in the CLI grammar: `true false ~ & | -> [] <>` with
  // minimal parentheses. Precedence: unary > & > | > -> (right assoc).
  std::string to_text() const;

 private:
  struct Node {
    Kind kind;
    std::shared_ptr<const Node> left, right;
    uint32_t modal_depth;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Formula make(Kind k, Formula a, Formula b);

  std::shared_ptr<const Node> node_;
};

}  // namespace finitary
