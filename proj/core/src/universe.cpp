#include "finitary/universe.hpp"

#include <algorithm>
#include <random>

#include "finitary/completion.hpp"
#include "finitary/errors.hpp"
#include "finitary/modal.hpp"

namespace finitary {

TermFn::TermFn(SetExprPtr expr) : expr_(std::move(expr)) {
  auto vars = expr_variables(expr_);
  for (const auto& v : vars)
    if (v != "v") throw DomainError("term function may only use the variable 'v', found '" + v + "'");
}

namespace {

RationalSet eval_term(const SetExpr* e, const RationalSet& x) {
  switch (e->kind) {
    case SetExpr::Kind::Var:
      return x;
    case SetExpr::Kind::Braces: {
      std::vector<RationalSet> ms;
      ms.reserve(e->items.size());
      for (const auto& it : e->items) ms.push_back(eval_term(it.get(), x));
      return fold(ms);
    }
    case SetExpr::Kind::Union:
      return set_union(eval_term(e->items[0].get(), x), eval_term(e->items[1].get(), x));
    case SetExpr::Kind::BigUnion:
      return big_union(eval_term(e->items[0].get(), x));
    case SetExpr::Kind::Power:
      return power_set(eval_term(e->items[0].get(), x));
    case SetExpr::Kind::Sep:
      return separation(eval_term(e->items[0].get(), x), e->pred);
    case SetExpr::Kind::Bottom:
      throw DomainError("bottom is not a set; term functions act on total sets");
  }
  throw DomainError("unreachable term kind");
}

}  // namespace

RationalSet TermFn::eval(const RationalSet& x) const { return eval_term(expr_.get(), x); }

RationalSet separation(const RationalSet& x, const Formula& pred) {
  std::vector<RationalSet> keep;
  for (const RationalSet& m : unfold(x))
    if (sat(m, pred)) keep.push_back(m);
  return fold(keep);
}

RationalSet replacement(const RationalSet& x, const TermFn& f) {
  std::vector<RationalSet> image;
  for (const RationalSet& m : unfold(x)) image.push_back(f.eval(m));
  return fold(image);
}

RationalSet choice(const RationalSet& x, const TermFn& f) {
  std::vector<RationalSet> picks;
  for (const RationalSet& z : unfold(x)) {
    std::vector<RationalSet> candidates = unfold(f.eval(z));
    if (candidates.empty())
      throw DomainError("choice: f(z) is empty for member z = " + canonical_text(z));
    picks.push_back(candidates.front());  // unfold sorts by the canonical order
  }
  return fold(picks);
}

bool SuiteReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const AxiomCheck& c) { return c.passed; });
}

namespace {

HfSet sample_hf(std::mt19937_64& rng, uint32_t max_depth, uint32_t max_width) {
  if (max_depth == 0) return empty();
  std::uniform_int_distribution<uint32_t> width(0, max_width);
  std::vector<HfSet> ms;
  uint32_t n = width(rng);
  ms.reserve(n);
  for (uint32_t i = 0; i < n; ++i) ms.push_back(sample_hf(rng, max_depth - 1, max_width));
  return make(std::move(ms));
}

RationalSet sample_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<uint32_t> node_count(1, 5);
  uint32_t n = node_count(rng);
  PointedGraph g;
  g.children.resize(n);
  std::uniform_int_distribution<uint32_t> pick(0, n - 1);
  std::uniform_int_distribution<uint32_t> deg(0, 3);
  for (uint32_t v = 0; v < n; ++v) {
    uint32_t d = deg(rng);
    for (uint32_t i = 0; i < d; ++i) g.children[v].push_back(pick(rng));
  }
  g.root = 0;
  return minimize(g);
}

// two sets have matching member lists up to bisimulation
bool members_match(const RationalSet& g, const RationalSet& h) {
  auto ug = unfold(g);
  auto uh = unfold(h);
  auto covered = [](const std::vector<RationalSet>& xs, const std::vector<RationalSet>& ys) {
    return std::all_of(xs.begin(), xs.end(), [&](const RationalSet& x) {
      return std::any_of(ys.begin(), ys.end(),
                         [&](const RationalSet& y) { return bisim(x, y); });
    });
  };
  return covered(ug, uh) && covered(uh, ug);
}

}  // namespace

SuiteReport axiom_suite() {
  SuiteReport report;
  auto add = [&report](const std::string& name, bool ok, const std::string& note) {
    report.checks.push_back({name, ok, note});
  };
  std::mt19937_64 rng(0x5eedf00dULL);

  // closure: empty set, singleton, union, big union
  {
    RationalSet e = fold({});
    add("closure-empty", unfold(e).empty(), "fold([]) has no members");
  }
  {
    bool ok = true;
    for (int i = 0; i < 25 && ok; ++i) {
      RationalSet x = sample_rational(rng);
      auto u = unfold(singleton(x));
      ok = u.size() == 1 && bisim(u[0], x);
    }
    add("closure-singleton", ok, "unfold({x}) = [x] on 25 samples");
  }
  {
    bool ok = true;
    for (int i = 0; i < 25 && ok; ++i) {
      RationalSet x = sample_rational(rng);
      RationalSet y = sample_rational(rng);
      RationalSet u = set_union(x, y);
      for (const RationalSet& m : unfold(x)) ok = ok && member(m, u);
      for (const RationalSet& m : unfold(y)) ok = ok && member(m, u);
      for (const RationalSet& m : unfold(u)) ok = ok && (member(m, x) || member(m, y));
    }
    add("closure-union", ok, "membership in x u y on 25 samples");
  }
  {
    bool ok = true;
    for (int i = 0; i < 25 && ok; ++i) {
      RationalSet x = sample_rational(rng);
      RationalSet u = big_union(x);
      for (const RationalSet& m : unfold(x))
        for (const RationalSet& mm : unfold(m)) ok = ok && member(mm, u);
      for (const RationalSet& w : unfold(u)) {
        bool found = false;
        for (const RationalSet& m : unfold(x)) found = found || member(w, m);
        ok = ok && found;
      }
    }
    add("closure-bigunion", ok, "members of Ux are members of members on 25 samples");
  }

  // powerset member count
  {
    bool ok = true;
    for (int i = 0; i < 20 && ok; ++i) {
      RationalSet x = sample_rational(rng);
      size_t n = unfold(x).size();
      if (n > 8) continue;
      ok = unfold(power_set(x)).size() == (size_t{1} << n);
    }
    add("powerset-count", ok, "|P(x)| = 2^|x| on 20 samples");
  }

  // extensionality on random pairs (biased toward collisions via small sets)
  {
    bool ok = true;
    for (int i = 0; i < 200 && ok; ++i) {
      RationalSet g = i % 2 ? sample_rational(rng) : embed(sample_hf(rng, 3, 2));
      RationalSet h = i % 3 ? sample_rational(rng) : embed(sample_hf(rng, 3, 2));
      ok = bisim(g, h) == members_match(g, h);
    }
    add("extensionality", ok, "bisim iff matching members on 200 pairs");
  }

  // separation / replacement / choice postconditions
  {
    std::vector<Formula> preds{Formula::top(), Formula::bottom(),
                               Formula::diamond(Formula::top()),
                               Formula::box(Formula::bottom()),
                               Formula::box(Formula::diamond(Formula::top()))};
    bool ok = true;
    for (int i = 0; i < 100 && ok; ++i) {
      RationalSet x = sample_rational(rng);
      const Formula& p = preds[i % preds.size()];
      RationalSet r = separation(x, p);
      for (const RationalSet& m : unfold(r)) ok = ok && member(m, x) && sat(m, p);
      for (const RationalSet& m : unfold(x))
        if (sat(m, p)) ok = ok && member(m, r);
    }
    add("separation", ok, "exact member filter on 100 samples");
  }
  {
    std::vector<TermFn> fns;
    fns.emplace_back(SetExpr::var("v"));
    fns.emplace_back(SetExpr::braces({SetExpr::var("v")}));
    fns.emplace_back(SetExpr::big_union_of(SetExpr::var("v")));
    fns.emplace_back(SetExpr::braces({SetExpr::var("v"), SetExpr::braces({})}));
    bool ok = true;
    for (int i = 0; i < 100 && ok; ++i) {
      RationalSet x = sample_rational(rng);
      const TermFn& f = fns[i % fns.size()];
      RationalSet r = replacement(x, f);
      auto ux = unfold(x);
      ok = unfold(r).size() <= ux.size();
      for (const RationalSet& m : ux) ok = ok && member(f.eval(m), r);
      for (const RationalSet& w : unfold(r)) {
        bool found = false;
        for (const RationalSet& m : ux) found = found || bisim(w, f.eval(m));
        ok = ok && found;
      }
    }
    add("replacement", ok, "image property on 100 samples");
  }
  {
    std::vector<TermFn> fns;
    fns.emplace_back(SetExpr::braces({SetExpr::var("v")}));
    fns.emplace_back(SetExpr::braces({SetExpr::var("v"), SetExpr::braces({})}));
    fns.emplace_back(SetExpr::power_of(SetExpr::var("v")));
    bool ok = true;
    for (int i = 0; i < 100 && ok; ++i) {
      RationalSet x = sample_rational(rng);
      const TermFn& f = fns[i % fns.size()];
      RationalSet y = choice(x, f);
      for (const RationalSet& z : unfold(x)) {
        bool clause1 = false;
        for (const RationalSet& w : unfold(f.eval(z))) clause1 = clause1 || member(w, y);
        ok = ok && clause1;
      }
      for (const RationalSet& w : unfold(y)) {
        bool clause2 = false;
        for (const RationalSet& z : unfold(x)) clause2 = clause2 || member(w, f.eval(z));
        ok = ok && clause2;
      }
    }
    add("choice", ok, "two-clause postcondition on 100 samples");
  }

  // infinity: {} and {{}} are members at every checked resolution
  {
    CauchyPoint inf = infinity_point();
    CauchyPoint p0 = from_rational(embed(empty()));
    CauchyPoint p1 = from_rational(embed(singleton(empty())));
    bool ok = true;
    for (uint32_t k = 1; k <= 6; ++k)
      ok = ok && approx_member(p0, inf, k) && approx_member(p1, inf, k);
    add("infinity", ok, "{} and {{}} in the infinity set at k <= 6");
  }

  // the universal set: V in V at every checked resolution
  {
    CauchyPoint v = universe_point();
    bool ok = true;
    for (uint32_t k = 1; k <= 6; ++k) ok = ok && approx_member(v, v, k);
    add("universe-self-membership", ok, "V in V at k <= 6");
  }

  return report;
}

}  // namespace finitary
