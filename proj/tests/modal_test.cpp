#include <random>

#include "doctest.h"
#include "finitary/errors.hpp"
#include "finitary/modal.hpp"
#include "finitary/parse.hpp"
#include "support/generators.hpp"

using namespace finitary;
using testsupport::naive_sat;
using testsupport::random_formula;
using testsupport::random_hf;
using testsupport::random_rational;

namespace {

Formula box_bot() { return Formula::box(Formula::bottom()); }
Formula dia_top() { return Formula::diamond(Formula::top()); }

RationalSet omega() { return solve(parse_system("x={x};")).front().second; }

}  // namespace

TEST_SUITE_BEGIN("modal");

TEST_CASE("satisfaction basics") {
  CHECK(sat(empty(), box_bot()));
  CHECK(sat(omega(), dia_top()));
  CHECK(!sat(singleton(empty()), box_bot()));
  CHECK(sat(empty(), Formula::top()));
  CHECK(!sat(empty(), Formula::bottom()));
}

TEST_CASE("satisfaction against the naive evaluator") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 300; ++i) {
    HfSet s = random_hf(rng, 3, 3);
    Formula f = random_formula(rng, 4);
    CHECK(sat(s, f) == naive_sat(s, f));
    CHECK(sat(embed(s), f) == naive_sat(s, f));
  }
}

TEST_CASE("master formulas") {
  CHECK(master(empty()).to_text() == "[]false");
  CHECK(master(singleton(empty())).to_text() == "[][]false&<>[]false");
  CHECK(master(empty()).modal_depth() == 1);

  std::mt19937_64 rng(32);
  for (int i = 0; i < 50; ++i) {
    HfSet s = random_hf(rng, 3, 2);
    CHECK(master(s).modal_depth() == depth(s) + 1);
  }

  // characterization over the level-2 space, and against the quine atom
  const auto& d2 = enum_level(2);
  for (HfSet s : d2)
    for (HfSet t : d2) CHECK(sat(t, master(s)) == (s == t));
  RationalSet w = omega();
  for (HfSet s : d2) CHECK(!sat(w, master(s)));
  // rational sets satisfy exactly the masters of their HF presentations
  for (HfSet s : d2)
    for (HfSet t : d2) CHECK(sat(embed(t), master(s)) == bisim(embed(t), embed(s)));
}

TEST_CASE("level spaces") {
  CHECK(enum_level(0).size() == 1);
  CHECK(enum_level(1).size() == 2);
  CHECK(enum_level(2).size() == 4);
  CHECK(enum_level(3).size() == 16);
  CHECK(enum_level(1) == std::vector<HfSet>{empty(), singleton(empty())});

  for (uint32_t k = 0; k <= 2; ++k)
    CHECK(enum_level(k + 1).size() == (size_t{1} << enum_level(k).size()));

  // every element is its own truncation, and distinct
  for (uint32_t k = 0; k <= 3; ++k)
    for (HfSet e : enum_level(k)) CHECK(trunc(k, e) == e);
}

TEST_CASE("level cap") {
  uint32_t saved = level_cap();
  set_level_cap(3);
  CHECK_THROWS_AS(enum_level(4), ResourceError);
  CHECK_THROWS_WITH_AS(enum_level(4), doctest::Contains("cap of 3"), ResourceError);
  set_level_cap(saved);
}

TEST_CASE("decision procedure basics") {
  CHECK(!valid(dia_top()));
  CHECK(satisfiable(dia_top()));
  CHECK(!valid(box_bot()));
  CHECK(satisfiable(box_bot()));
  CHECK(valid(Formula::iff(Formula::diamond(Formula::bottom()), Formula::bottom())));
  CHECK(valid(Formula::implies(Formula::bottom(), box_bot())));
  CHECK(equiv(Formula::neg(dia_top()), box_bot()));
  CHECK(entails(box_bot(), Formula::neg(dia_top())));
  CHECK(!entails(dia_top(), box_bot()));
}

TEST_CASE("modal algebra axioms on closed instances") {
  std::vector<Formula> insts = atoms(2);
  for (const Formula& a : insts)
    for (const Formula& b : insts) {
      // diamond distributes over joins; box over meets
      CHECK(valid(Formula::iff(Formula::diamond(Formula::disj(a, b)),
                               Formula::disj(Formula::diamond(a), Formula::diamond(b)))));
      CHECK(valid(Formula::iff(Formula::box(Formula::conj(a, b)),
                               Formula::conj(Formula::box(a), Formula::box(b)))));
      // the two cross laws
      CHECK(valid(Formula::implies(Formula::box(Formula::disj(a, b)),
                                   Formula::disj(Formula::box(a), Formula::diamond(b)))));
      CHECK(valid(Formula::implies(Formula::conj(Formula::diamond(a), Formula::box(b)),
                                   Formula::diamond(Formula::conj(a, b)))));
    }
  // units: box true = true, diamond false = false
  CHECK(valid(Formula::box(Formula::top())));
  CHECK(valid(Formula::iff(Formula::diamond(Formula::bottom()), Formula::bottom())));

  // interdefinability is a theorem, not a rewrite
  std::mt19937_64 rng(33);
  for (int i = 0; i < 40; ++i) {
    Formula a = random_formula(rng, 3);
    CHECK(valid(Formula::iff(Formula::box(a), Formula::neg(Formula::diamond(Formula::neg(a))))));
  }

  // the concrete instances p = []false, q = <>true
  Formula p = box_bot(), q = dia_top();
  CHECK(valid(Formula::iff(Formula::diamond(Formula::disj(p, q)),
                           Formula::disj(Formula::diamond(p), Formula::diamond(q)))));
  CHECK(valid(Formula::implies(Formula::box(Formula::disj(p, q)),
                               Formula::disj(Formula::box(p), Formula::diamond(q)))));
}

TEST_CASE("characteristic formulas") {
  CHECK(char_formula(1, empty()).to_text() == "[]false");
  CHECK(equiv(char_formula(1, singleton(empty())), dia_top()));

  // the four level-2 characters are pairwise inequivalent and exhaustive
  auto chars = atoms(2);
  REQUIRE(chars.size() == 4);
  for (size_t i = 0; i < chars.size(); ++i)
    for (size_t j = 0; j < chars.size(); ++j)
      CHECK(equiv(chars[i], chars[j]) == (i == j));
  CHECK(valid(Formula::disj_all(chars)));

  // s satisfies exactly the character of its truncation
  std::mt19937_64 rng(34);
  for (int i = 0; i < 100; ++i) {
    HfSet s = random_hf(rng, 3, 3);
    for (uint32_t k = 1; k <= 2; ++k)
      for (HfSet e : enum_level(k)) CHECK(sat(s, char_formula(k, e)) == (trunc(k, s) == e));
  }

  CHECK_THROWS_AS(char_formula(1, make({singleton(empty())})), DomainError);
}

TEST_CASE("normal forms and depth lifting") {
  NormalForm nf = normal_form(dia_top());
  CHECK(nf.depth == 1);
  CHECK(nf.count() == 1);

  std::mt19937_64 rng(35);
  for (int i = 0; i < 60; ++i) {
    Formula f = random_formula(rng, 2);
    uint32_t j = f.modal_depth();
    uint32_t k = j + 1 + static_cast<uint32_t>(rng() % 2);
    if (k > 3) continue;
    // a depth-j formula only sees depth-j truncations
    for (HfSet e : enum_level(k)) CHECK(sat(e, f) == sat(trunc(j, e), f));
  }
}

TEST_CASE("algebra sizes") {
  CHECK(algebra_size(0).exact == uint64_t{2});
  CHECK(algebra_size(1).exact == uint64_t{4});
  CHECK(algebra_size(2).exact == uint64_t{16});
  CHECK(algebra_size(3).exact == uint64_t{65536});
  CHECK(algebra_size(4).text == "2^65536");
  CHECK(!algebra_size(4).exact.has_value());
  CHECK(algebra_size(5).text == "2^(2^65536)");
  CHECK_THROWS_AS(algebra_size(6), ResourceError);
}

TEST_CASE("atoms have singleton denotations") {
  for (uint32_t k = 1; k <= 2; ++k) {
    auto as = atoms(k);
    CHECK(as.size() == enum_level(k).size());
    for (const Formula& a : as) CHECK(normal_form_at(a, k).count() == 1);
  }
}

TEST_CASE("formula level is the stratified level") {
  CHECK(formula_level(empty(), singleton(empty())) == Level::at(1));
  CHECK(formula_level(empty(), empty()).is_infinite());

  std::mt19937_64 rng(36);
  for (int i = 0; i < 200; ++i) {
    HfSet s = random_hf(rng, 4, 3), t = random_hf(rng, 4, 3);
    CHECK(formula_level(s, t) == level(s, t));
  }
  for (int i = 0; i < 60; ++i) {
    RationalSet g = random_rational(rng), h = random_rational(rng);
    CHECK(formula_level(g, h) == strat_level(g, h));
  }
  RationalSet w = omega();
  CHECK(formula_level(w, w).is_infinite());
  CHECK(formula_level(w, embed(trunc_hf(3, w))) == strat_level(w, embed(trunc_hf(3, w))));
}

TEST_SUITE_END();
