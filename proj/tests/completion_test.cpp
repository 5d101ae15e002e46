#include <random>

#include "doctest.h"
#include "finitary/completion.hpp"
#include "finitary/errors.hpp"
#include "finitary/modal.hpp"
#include "finitary/parse.hpp"
#include "support/generators.hpp"

using namespace finitary;
using testsupport::random_rational;

namespace {

RationalSet omega_set() { return solve(parse_system("x={x};")).front().second; }

}  // namespace

TEST_SUITE_BEGIN("completion");

TEST_CASE("truncation streams of rational sets") {
  CauchyPoint p = from_rational(omega_set());
  CHECK(p.at(0) == empty());
  CHECK(p.at(3) == singleton(singleton(singleton(empty()))));

  CauchyPoint q = from_rational(embed(singleton(empty())));
  for (uint32_t k = 1; k <= 6; ++k) CHECK(q.at(k) == singleton(empty()));

  std::mt19937_64 rng(41);
  for (int i = 0; i < 40; ++i) {
    CauchyPoint r = from_rational(random_rational(rng));
    CHECK(verify_modulus(r, 8));
    // stabilization: trunc(k, S_m) is constant for m >= k
    for (uint32_t k = 0; k <= 4; ++k)
      for (uint32_t m = k; m <= 6; ++m) CHECK(trunc(k, r.at(m)) == trunc(k, r.at(k)));
  }
}

TEST_CASE("guarded iteration reproduces the paper distances") {
  // step {x}: the singleton chain
  Iteration it = iterate_guarded(parse_step("{x}"), empty(), 3);
  REQUIRE(it.gaps.size() == 3);
  CHECK(it.gaps[0] == Level::at(1));
  CHECK(it.gaps[1] == Level::at(2));
  CHECK(it.gaps[2] == Level::at(3));

  // step {} u {x}: same consecutive distances along a widening chain
  Iteration it2 = iterate_guarded(parse_step("{{}} | {x}"), empty(), 3);
  CHECK(it2.gaps == std::vector<Level>{Level::at(1), Level::at(2), Level::at(3)});
  CHECK(it2.approximants[2] == parse_set("{{},{{}}}"));

  // literally nesting the singleton inside the braces contracts faster
  Iteration it3 = iterate_guarded(parse_step("{{},{x}}"), empty(), 3);
  CHECK(it3.gaps == std::vector<Level>{Level::at(1), Level::at(3), Level::at(5)});

  // contractivity: gaps strictly increase while finite
  for (const Iteration* i : {&it, &it2, &it3})
    for (size_t g = 1; g < i->gaps.size(); ++g)
      if (!i->gaps[g].is_infinite()) CHECK(i->gaps[g] > i->gaps[g - 1]);
}

TEST_CASE("iteration from a different seed reaches the same limit") {
  Iteration it = iterate_guarded(parse_step("{x}"), singleton(empty()), 4);
  CauchyPoint w = omega_point();
  for (uint32_t k = 0; k <= 4; ++k) CHECK(trunc(k, it.approximants[k]) == w.at(k));
}

TEST_CASE("unguarded steps are rejected") {
  CHECK_THROWS_AS(iterate_guarded(parse_step("x"), empty(), 2), DomainError);
  CHECK_THROWS_AS(iterate_guarded(parse_step("{x} | x"), empty(), 2), DomainError);
  CHECK_THROWS_AS(iterate_guarded(parse_step("{x} | {y}"), empty(), 2), DomainError);
}

TEST_CASE("approximate distance") {
  CauchyPoint w = omega_point();
  CauchyPoint e = from_rational(embed(empty()));
  ApproxDist d = approx_dist(w, e, 5);
  CHECK(d.exact);
  CHECK(d.value == Level::at(1));

  ApproxDist same = approx_dist(w, w, 6);
  CHECK(!same.exact);
  CHECK(same.value == Level::at(6));

  // the iterate-limit of step {x} from {} is the same point
  CauchyPoint it("iterate", [](uint32_t k) {
    HfSet s = empty();
    for (uint32_t i = 0; i < k; ++i) s = singleton(s);
    return s;
  });
  ApproxDist di = approx_dist(w, it, 6);
  CHECK(!di.exact);
  CHECK(di.value == Level::at(6));
}

TEST_CASE("approximate membership") {
  CauchyPoint w = omega_point();
  for (uint32_t k = 1; k <= 6; ++k) CHECK(approx_member(w, w, k));

  CauchyPoint e = from_rational(embed(empty()));
  CHECK(approx_member(e, w, 1));  // everything matches at the coarsest level
  CHECK(!approx_member(e, w, 2));

  // the quine atom is a member of the infinity set at every resolution:
  // its approximants are the iterated singletons
  CauchyPoint inf = infinity_point();
  for (uint32_t k = 1; k <= 6; ++k) CHECK(approx_member(w, inf, k));

  // no flips back to yes once separated, for built-in pairs
  std::vector<CauchyPoint> builtins{omega_point(), infinity_point(), from_rational(embed(empty()))};
  for (const CauchyPoint& p : builtins)
    for (const CauchyPoint& q : builtins) {
      bool seen_no = false;
      for (uint32_t k = 1; k <= 6; ++k) {
        bool yes = approx_member(p, q, k);
        if (seen_no) CHECK(!yes);
        if (!yes) seen_no = true;
      }
    }

  CHECK_THROWS_AS(approx_member(e, w, 0), DomainError);
}

TEST_CASE("the infinity point") {
  CauchyPoint inf = infinity_point();
  CHECK(inf.at(0) == empty());
  CHECK(inf.at(1) == singleton(empty()));
  CHECK(inf.at(2) == parse_set("{{},{{}}}"));
  CHECK(inf.at(3) == parse_set("{{},{{}},{{{}}}}"));
  CHECK(verify_modulus(inf, 8));

  CauchyPoint p0 = from_rational(embed(empty()));
  CauchyPoint p1 = from_rational(embed(singleton(empty())));
  for (uint32_t k = 1; k <= 6; ++k) {
    CHECK(approx_member(p0, inf, k));
    CHECK(approx_member(p1, inf, k));
  }
}

TEST_CASE("the omega point") {
  CauchyPoint w = omega_point();
  CHECK(verify_modulus(w, 8));
  CauchyPoint t = from_rational(omega_set());
  for (uint32_t k = 0; k <= 6; ++k) CHECK(w.at(k) == t.at(k));
}

TEST_CASE("the universe point") {
  CauchyPoint v = universe_point();
  CHECK(v.at(0) == empty());
  CHECK(v.at(1) == singleton(empty()));
  CHECK(v.at(2) == parse_set("{{},{{}}}"));
  CHECK(v.at(3) == make(enum_level(2)));
  CHECK(verify_modulus(v, 4));
  CHECK(v.at(2) == trunc(2, v.at(3)));  // V_k = trunc(k, V_{k+1})

  for (uint32_t k = 1; k <= 6; ++k) CHECK(approx_member(v, v, k));

  // beyond V_5 the approximant would need the astronomically large D_5
  CHECK_THROWS_AS(v.at(6), ResourceError);
}

TEST_CASE("built-in points by name") {
  CHECK(builtin_point("omega").at(2) == singleton(singleton(empty())));
  CHECK(builtin_point("infinity").name() == "infinity");
  CHECK(builtin_point("universe").members_are_full_level_space());
  CHECK_THROWS_AS(builtin_point("nonesuch"), DomainError);
}

TEST_CASE("violating streams are rejected as their approximants materialize") {
  CauchyPoint bad("flipflop", [](uint32_t k) {
    return k % 2 ? singleton(empty()) : empty();
  });
  CHECK(bad.at(1) == singleton(empty()));
  // S_2 = {} but trunc(1, S_1) = {{}}: the gap (1,2) breaks the modulus
  CHECK_THROWS_WITH_AS(bad.at(2), doctest::Contains("fast modulus"), DomainError);

  CauchyPoint slow("slow", [](uint32_t k) {
    // converges, but not fast enough: S_k only agrees to depth k-1
    HfSet s = empty();
    for (uint32_t i = 1; i < k; ++i) s = singleton(s);
    return s;
  });
  slow.at(3);
  CHECK_THROWS_AS(slow.at(4), DomainError);
}

TEST_SUITE_END();
