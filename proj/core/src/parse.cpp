#include "finitary/parse.hpp"

#include <cctype>

#include "finitary/errors.hpp"

namespace finitary {
namespace {

struct Cursor {
  const std::string& text;
  size_t pos = 0;
  int line = 1, col = 1;

  explicit Cursor(const std::string& t) : text(t) {}

  void advance() {
    if (pos < text.size()) {
      if (text[pos] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++pos;
    }
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) advance();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  bool at(const std::string& s) {
    skip_ws();
    return text.compare(pos, s.size(), s) == 0;
  }

  bool eat(const std::string& s) {
    if (!at(s)) return false;
    for (size_t i = 0; i < s.size(); ++i) advance();
    return true;
  }

  void expect(const std::string& s, const std::string& what) {
    if (!eat(s)) fail("expected '" + s + "' " + what);
  }

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line, col); }

  void expect_end() {
    skip_ws();
    if (pos < text.size()) fail("unexpected trailing input");
  }

  bool ident_start() {
    char c = peek();
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }

  std::string ident() {
    skip_ws();
    if (pos >= text.size() ||
        !(std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      fail("expected an identifier");
    std::string out;
    while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                 text[pos] == '_' || text[pos] == '\''))
      out += text[pos], advance();
    return out;
  }
};

struct ExprOpts {
  bool idents = false;    // variables / names allowed
  bool bottom = false;    // the _|_ leaf allowed
  bool term_ops = false;  // U, P, sep(...) allowed
};

Formula parse_formula_expr(Cursor& cur);

SetExprPtr parse_expr(Cursor& cur, const ExprOpts& opts);

SetExprPtr parse_expr_primary(Cursor& cur, const ExprOpts& opts) {
  if (opts.bottom && cur.eat("_|_")) return SetExpr::bottom();
  if (cur.eat("{")) {
    std::vector<SetExprPtr> items;
    if (!cur.at("}")) {
      items.push_back(parse_expr(cur, opts));
      while (cur.eat(",")) items.push_back(parse_expr(cur, opts));
    }
    cur.expect("}", "to close the set");
    return SetExpr::braces(std::move(items));
  }
  if (opts.term_ops) {
    if (cur.at("sep")) {
      Cursor probe = cur;  // "sep" could be an identifier elsewhere; here it is an operator
      probe.eat("sep");
      if (probe.peek() == '(') {
        cur.eat("sep");
        cur.expect("(", "after sep");
        SetExprPtr inner = parse_expr(cur, opts);
        cur.expect(",", "between the set and the predicate");
        Formula pred = parse_formula_expr(cur);
        cur.expect(")", "to close sep(...)");
        return SetExpr::sep_of(std::move(inner), std::move(pred));
      }
    }
    if (cur.at("U") || cur.at("P")) {
      Cursor probe = cur;
      std::string name = probe.ident();
      if (name == "U") {
        cur.ident();
        return SetExpr::big_union_of(parse_expr_primary(cur, opts));
      }
      if (name == "P") {
        cur.ident();
        return SetExpr::power_of(parse_expr_primary(cur, opts));
      }
    }
  }
  if (opts.idents && cur.ident_start()) return SetExpr::var(cur.ident());
  if (cur.eat("(")) {
    SetExprPtr inner = parse_expr(cur, opts);
    cur.expect(")", "to close the group");
    return inner;
  }
  cur.fail(opts.idents ? "expected '{', an identifier or '('" : "expected '{' or '('");
}

SetExprPtr parse_expr(Cursor& cur, const ExprOpts& opts) {
  SetExprPtr e = parse_expr_primary(cur, opts);
  while (cur.eat("|")) e = SetExpr::union_of(std::move(e), parse_expr_primary(cur, opts));
  return e;
}

// formula grammar: implication (right assoc) > or > and > unary
Formula parse_formula_unary(Cursor& cur) {
  if (cur.eat("~")) return Formula::neg(parse_formula_unary(cur));
  if (cur.eat("[]")) return Formula::box(parse_formula_unary(cur));
  if (cur.eat("<>")) return Formula::diamond(parse_formula_unary(cur));
  if (cur.eat("(")) {
    Formula f = parse_formula_expr(cur);
    cur.expect(")", "to close the group");
    return f;
  }
  if (cur.ident_start()) {
    std::string word = cur.ident();
    if (word == "true") return Formula::top();
    if (word == "false") return Formula::bottom();
    cur.fail("formulas are closed: unexpected name '" + word + "'");
  }
  cur.fail("expected a formula");
}

Formula parse_formula_and(Cursor& cur) {
  Formula f = parse_formula_unary(cur);
  while (cur.eat("&")) f = Formula::conj(f, parse_formula_unary(cur));
  return f;
}

Formula parse_formula_or(Cursor& cur) {
  Formula f = parse_formula_and(cur);
  while (cur.eat("|")) f = Formula::disj(f, parse_formula_and(cur));
  return f;
}

Formula parse_formula_expr(Cursor& cur) {
  Formula f = parse_formula_or(cur);
  if (cur.eat("->")) return Formula::implies(f, parse_formula_expr(cur));
  return f;
}

EqSystem parse_system_body(Cursor& cur, const ExprOpts& opts) {
  EqSystem sys;
  while (true) {
    cur.skip_ws();
    if (cur.pos >= cur.text.size()) break;
    std::string name = cur.ident();
    cur.expect("=", "after the variable name");
    SetExprPtr rhs = parse_expr(cur, opts);
    sys.equations.push_back({std::move(name), std::move(rhs)});
    if (!cur.eat(";")) break;  // terminator required between equations
  }
  if (sys.equations.empty()) cur.fail("expected at least one equation");
  cur.expect_end();
  return sys;
}

ProcessPtr parse_process_atom(Cursor& cur);

ProcessPtr parse_process_sum(Cursor& cur) {
  ProcessPtr p = parse_process_atom(cur);
  while (cur.eat("+")) p = ProcessTerm::sum(p, parse_process_atom(cur));
  return p;
}

ProcessPtr parse_process_atom(Cursor& cur) {
  if (cur.eat("0")) return ProcessTerm::nil();
  if (cur.eat("(")) {
    ProcessPtr p = parse_process_sum(cur);
    cur.expect(")", "to close the group");
    return p;
  }
  if (cur.eat("e")) {
    cur.expect(".", "after the action prefix 'e'");
    return ProcessTerm::prefix(parse_process_atom(cur));
  }
  cur.fail("expected '0', 'e.' or '('");
}

}  // namespace

HfSet parse_set(const std::string& text) {
  Cursor cur(text);
  SetExprPtr e = parse_expr(cur, ExprOpts{});
  cur.expect_end();
  return to_hf(eval_closed(e));
}

RationalSet parse_rational(const std::string& text) {
  Cursor cur(text);
  SetExprPtr e = parse_expr(cur, ExprOpts{});
  cur.expect_end();
  return eval_closed(e);
}

EqSystem parse_system(const std::string& text) {
  Cursor cur(text);
  return parse_system_body(cur, ExprOpts{.idents = true});
}

RationalSet read_rational(const std::string& text) {
  if (text.find('=') != std::string::npos) {
    EqSystem sys = parse_system(text);
    return solve(sys).front().second;
  }
  return parse_rational(text);
}

Formula parse_formula(const std::string& text) {
  Cursor cur(text);
  Formula f = parse_formula_expr(cur);
  cur.expect_end();
  return f;
}

PartialSet parse_partial(const std::string& text) {
  if (text.find('=') != std::string::npos) {
    Cursor cur(text);
    EqSystem sys = parse_system_body(cur, ExprOpts{.idents = true, .bottom = true});
    return solve_partial(sys).front().second;
  }
  Cursor cur(text);
  SetExprPtr e = parse_expr(cur, ExprOpts{.bottom = true});
  cur.expect_end();
  return eval_closed_partial(e);
}

ProcessPtr parse_process(const std::string& text) {
  Cursor cur(text);
  ProcessPtr p = parse_process_sum(cur);
  cur.expect_end();
  return p;
}

TermFn parse_term_fn(const std::string& text) {
  Cursor cur(text);
  SetExprPtr e = parse_expr(cur, ExprOpts{.idents = true, .term_ops = true});
  cur.expect_end();
  return TermFn(std::move(e));
}

SetExprPtr parse_step(const std::string& text) {
  Cursor cur(text);
  SetExprPtr e = parse_expr(cur, ExprOpts{.idents = true});
  cur.expect_end();
  return e;
}

}  // namespace finitary
