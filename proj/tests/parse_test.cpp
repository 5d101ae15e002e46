#include <random>

#include "doctest.h"
#include "finitary/errors.hpp"
#include "finitary/parse.hpp"
#include "support/generators.hpp"

using namespace finitary;
using testsupport::random_formula;
using testsupport::random_hf;
using testsupport::random_process;
using testsupport::random_rational;

TEST_SUITE_BEGIN("parse");

TEST_CASE("set parsing") {
  CHECK(parse_set("{{},{{}}}") == pair_set(empty(), singleton(empty())));
  CHECK(parse_set("{}") == empty());
  CHECK(parse_set(" { { } , { } } ") == singleton(empty()));
  CHECK(parse_set("{{}} | {}") == singleton(empty()));
}

TEST_CASE("set round trip") {
  std::mt19937_64 rng(71);
  for (int i = 0; i < 150; ++i) {
    HfSet s = random_hf(rng, 4, 3);
    CHECK(parse_set(to_text(s)) == s);
  }
}

TEST_CASE("formula parsing") {
  CHECK(parse_formula("[]false").same_shape(Formula::box(Formula::bottom())));
  CHECK(parse_formula("~<>true").same_shape(Formula::neg(Formula::diamond(Formula::top()))));
  // precedence: unary > & > | > ->
  Formula f = parse_formula("[]true & <>false | true -> false");
  CHECK(f.kind() == Formula::Kind::Implies);
  CHECK(f.left().kind() == Formula::Kind::Or);
  CHECK(f.left().left().kind() == Formula::Kind::And);
  // -> is right associative
  Formula g = parse_formula("true -> false -> true");
  CHECK(g.right().kind() == Formula::Kind::Implies);
}

TEST_CASE("formula round trip") {
  std::mt19937_64 rng(72);
  for (int i = 0; i < 200; ++i) {
    Formula f = random_formula(rng, 4);
    CHECK(parse_formula(f.to_text()).same_shape(f));
  }
}

TEST_CASE("system parsing") {
  EqSystem sys = parse_system("x = {x};");
  REQUIRE(sys.equations.size() == 1);
  CHECK(sys.equations[0].name == "x");
  CHECK(bisim(solve(sys).front().second, solve(parse_system("x={x}")).front().second));

  EqSystem two = parse_system("a = {b};\nb = {a};");
  CHECK(two.equations.size() == 2);
}

TEST_CASE("rational round trip through canonical text") {
  std::mt19937_64 rng(73);
  for (int i = 0; i < 100; ++i) {
    RationalSet g = random_rational(rng);
    std::string text = canonical_text(g);
    RationalSet back = read_rational(text);
    CHECK(bisim(back, g));
    CHECK(canonical_text(back) == text);
  }
}

TEST_CASE("partial parsing and round trip") {
  CHECK(parse_partial("_|_") == PartialSet::bottom());
  CHECK(em_equiv(parse_partial("{_|_,{}}"), parse_partial("{{},_|_}")));
  CHECK(parse_partial("x0={x0}") == embed_partial(read_rational("x0={x0}")));

  std::mt19937_64 rng(74);
  for (int i = 0; i < 60; ++i) {
    RationalSet g = random_rational(rng);
    for (uint32_t k = 0; k <= 3; ++k) {
      PartialSet p = bot_trunc(k, g);
      CHECK(parse_partial(partial_text(p)) == p);
    }
    PartialSet q = embed_partial(g);
    CHECK(parse_partial(partial_text(q)) == q);
  }
}

TEST_CASE("process parsing and semantics") {
  CHECK(process_to_set(parse_process("0")) == empty());
  CHECK(process_to_set(parse_process("e.0 + e.e.0")) == parse_set("{{},{{}}}"));
  CHECK(process_to_set(parse_process("e.(0+0)")) == singleton(empty()));

  std::mt19937_64 rng(75);
  for (int i = 0; i < 150; ++i) {
    ProcessPtr p = random_process(rng, 4), q = random_process(rng, 4), r = random_process(rng, 4);
    // the semilattice laws become set identities
    CHECK(process_to_set(ProcessTerm::sum(p, ProcessTerm::nil())) == process_to_set(p));
    CHECK(process_to_set(ProcessTerm::sum(p, q)) == process_to_set(ProcessTerm::sum(q, p)));
    CHECK(process_to_set(ProcessTerm::sum(ProcessTerm::sum(p, q), r)) ==
          process_to_set(ProcessTerm::sum(p, ProcessTerm::sum(q, r))));
    CHECK(process_to_set(ProcessTerm::sum(p, p)) == process_to_set(p));
    // render/parse round trip
    CHECK(process_to_set(parse_process(process_text(p))) == process_to_set(p));
  }
}

TEST_CASE("term function parsing") {
  CHECK_NOTHROW(parse_term_fn("{v}"));
  CHECK_NOTHROW(parse_term_fn("U v"));
  CHECK_NOTHROW(parse_term_fn("P v"));
  CHECK_NOTHROW(parse_term_fn("sep(v, <>true)"));
  CHECK_NOTHROW(parse_term_fn("{v,{}} | {{v}}"));
  CHECK_THROWS_AS(parse_term_fn("{w}"), DomainError);
}

TEST_CASE("errors carry positions") {
  try {
    parse_set("{{},");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() >= 4);
    CHECK(std::string(e.what()).find("1:") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_set("{**}"), ParseError);
  CHECK_THROWS_AS(parse_set("{} {}"), ParseError);
  CHECK_THROWS_AS(parse_formula("true &"), ParseError);
  CHECK_THROWS_AS(parse_formula("maybe"), ParseError);
  CHECK_THROWS_AS(parse_process("e0"), ParseError);
  CHECK_THROWS_AS(parse_system(""), ParseError);
  CHECK_THROWS_AS(parse_set("{x}"), ParseError);  // idents only in systems
  try {
    parse_system("x = {x};\ny = {");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_SUITE_END();
