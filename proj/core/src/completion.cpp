#include "finitary/completion.hpp"

#include <mutex>
#include <unordered_map>

#include "finitary/errors.hpp"
#include "finitary/modal.hpp"

namespace finitary {

struct CauchyPoint::Memo {
  std::mutex mu;
  std::function<HfSet(uint32_t)> fn;
  std::unordered_map<uint32_t, HfSet> cache;
  uint32_t check_bound = 8;
};

CauchyPoint::CauchyPoint(std::string name, std::function<HfSet(uint32_t)> approximant)
    : name_(std::move(name)), memo_(std::make_shared<Memo>()) {
  memo_->fn = std::move(approximant);
}

void CauchyPoint::set_modulus_check_bound(uint32_t bound) {
  std::lock_guard lock(memo_->mu);
  memo_->check_bound = bound;
}

HfSet CauchyPoint::at(uint32_t k) const {
  {
    std::lock_guard lock(memo_->mu);
    auto it = memo_->cache.find(k);
    if (it != memo_->cache.end()) return it->second;
  }
  HfSet v = memo_->fn(k);
  // gaps (k-1,k) and (k,k+1) whose other side has already materialized
  std::vector<std::pair<uint32_t, std::pair<HfSet, HfSet>>> gaps;
  {
    std::lock_guard lock(memo_->mu);
    memo_->cache.emplace(k, v);
    if (k > 0 && k - 1 <= memo_->check_bound) {
      auto it = memo_->cache.find(k - 1);
      if (it != memo_->cache.end()) gaps.push_back({k - 1, {it->second, v}});
    }
    if (k <= memo_->check_bound) {
      auto it = memo_->cache.find(k + 1);
      if (it != memo_->cache.end()) gaps.push_back({k, {v, it->second}});
    }
  }
  for (const auto& [j, pair] : gaps)
    if (trunc(j, pair.first) != trunc(j, pair.second))
      throw DomainError("cauchy point '" + name_ +
                        "' violates the fast modulus between approximants " + std::to_string(j) +
                        " and " + std::to_string(j + 1));
  return v;
}

CauchyPoint from_rational(const RationalSet& g) {
  return CauchyPoint("trunc(" + canonical_text(g) + ")",
                     [g](uint32_t k) { return trunc_hf(k, g); });
}

namespace {

// Evaluate a step expression (braces, unions, the single variable) on an
// HF value.
HfSet eval_step(const SetExpr* e, const std::string& var, HfSet value) {
  switch (e->kind) {
    case SetExpr::Kind::Var:
      if (e->name != var) throw DomainError("unexpected variable '" + e->name + "' in step");
      return value;
    case SetExpr::Kind::Braces: {
      std::vector<HfSet> ms;
      ms.reserve(e->items.size());
      for (const auto& it : e->items) ms.push_back(eval_step(it.get(), var, value));
      return make(std::move(ms));
    }
    case SetExpr::Kind::Union:
      return set_union(eval_step(e->items[0].get(), var, value),
                       eval_step(e->items[1].get(), var, value));
    default:
      throw DomainError("operator not allowed in a guarded step");
  }
}

}  // namespace

Iteration iterate_guarded(const SetExprPtr& step, HfSet start, uint32_t n) {
  auto vars = expr_variables(step);
  if (vars.size() > 1)
    throw DomainError("guarded step must use a single variable, found " +
                      std::to_string(vars.size()));
  if (!expr_guarded(step))
    throw DomainError("step is not guarded: variable '" + vars.front() +
                      "' occurs outside set braces");
  std::string var = vars.empty() ? "" : vars.front();

  Iteration out;
  out.approximants.push_back(start);
  for (uint32_t i = 0; i < n; ++i) {
    HfSet next = eval_step(step.get(), var, out.approximants.back());
    out.gaps.push_back(level(out.approximants.back(), next));
    out.approximants.push_back(next);
  }
  return out;
}

ApproxDist approx_dist(const CauchyPoint& p, const CauchyPoint& q, uint32_t k) {
  for (uint32_t j = 1; j < k; ++j) {
    HfSet tp = trunc(j, p.at(j));
    HfSet tq = trunc(j, q.at(j));
    if (tp != tq) return ApproxDist{true, Level::at(j)};
  }
  return ApproxDist{false, Level::at(k)};
}

bool approx_member(const CauchyPoint& p, const CauchyPoint& q, uint32_t k) {
  if (k == 0) throw DomainError("approx_member: resolution must be >= 1");
  if (q.members_are_full_level_space()) {
    // members(trunc(k, V_k)) is all of D_{k-1}, and membership in a level
    // space is exactly a depth bound, which a (k-1)-truncation always
    // meets. No approximant needs to be materialized.
    return true;
  }
  HfSet elem = trunc(k - 1, p.at(k - 1));
  HfSet container = trunc(k, q.at(k));
  return is_member(elem, container);
}

bool verify_modulus(const CauchyPoint& p, uint32_t bound) {
  for (uint32_t k = 0; k < bound; ++k)
    if (level(p.at(k), p.at(k + 1)) < Level::at(k + 1)) return false;
  return true;
}

CauchyPoint omega_point() {
  return CauchyPoint("omega", [](uint32_t k) {
    HfSet s = empty();
    for (uint32_t i = 0; i < k; ++i) s = singleton(s);
    return s;
  });
}

CauchyPoint infinity_point() {
  return CauchyPoint("infinity", [](uint32_t k) {
    HfSet s = empty();
    for (uint32_t i = 0; i < k; ++i) {
      std::vector<HfSet> ms{empty()};
      for (HfSet m : members(s)) ms.push_back(singleton(m));
      s = make(std::move(ms));
    }
    return s;
  });
}

CauchyPoint universe_point() {
  CauchyPoint p("universe", [](uint32_t k) {
    if (k == 0) return empty();
    if (k - 1 > level_cap())
      throw ResourceError("universe approximant V_" + std::to_string(k) +
                          " needs level space D_" + std::to_string(k - 1) +
                          ", beyond the cap of " + std::to_string(level_cap()));
    return make(enum_level(k - 1));
  });
  p.full_level_space_ = true;
  // gap 5 would need V_6, i.e. all of D_5
  p.set_modulus_check_bound(4);
  return p;
}

CauchyPoint builtin_point(const std::string& name) {
  if (name == "omega") return omega_point();
  if (name == "infinity") return infinity_point();
  if (name == "universe") return universe_point();
  throw DomainError("unknown built-in point '" + name + "' (omega, infinity, universe)");
}

}  // namespace finitary
