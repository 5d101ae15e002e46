#include "finitary/modal.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <mutex>
#include <unordered_map>

#include "finitary/errors.hpp"

namespace finitary {
namespace {

// Evaluation memoized on (formula node, set). Box/Diamond recurse into
// members with a structurally smaller formula, so this terminates on
// cyclic sets as well.
template <typename MemberRange>
class Evaluator {
 public:
  explicit Evaluator(MemberRange members) : members_(std::move(members)) {}

  bool eval(const Formula& f, uint32_t v) {
    uint64_t key = (uint64_t(reinterpret_cast<uintptr_t>(f.identity()) & 0xffffffffu) << 32) | v;
    auto it = memo_.find(key);
    if (it != memo_.end() && it->second.first == f.identity()) return it->second.second;
    bool r = false;
    switch (f.kind()) {
      case Formula::Kind::True:
        r = true;
        break;
      case Formula::Kind::False:
        r = false;
        break;
      case Formula::Kind::Not:
        r = !eval(f.left(), v);
        break;
      case Formula::Kind::And:
        r = eval(f.left(), v) && eval(f.right(), v);
        break;
      case Formula::Kind::Or:
        r = eval(f.left(), v) || eval(f.right(), v);
        break;
      case Formula::Kind::Implies:
        r = !eval(f.left(), v) || eval(f.right(), v);
        break;
      case Formula::Kind::Box: {
        r = true;
        for (uint32_t c : members_(v))
          if (!eval(f.left(), c)) {
            r = false;
            break;
          }
        break;
      }
      case Formula::Kind::Diamond: {
        r = false;
        for (uint32_t c : members_(v))
          if (eval(f.left(), c)) {
            r = true;
            break;
          }
        break;
      }
    }
    memo_[key] = {f.identity(), r};
    return r;
  }

 private:
  MemberRange members_;
  std::unordered_map<uint64_t, std::pair<const void*, bool>> memo_;
};

struct LevelCache {
  std::mutex mu;
  std::deque<std::vector<HfSet>> levels;  // levels[k] = D_k; deque keeps refs stable
  uint32_t cap = 4;
};

LevelCache& level_cache() {
  static LevelCache cache;
  return cache;
}

std::vector<HfSet> subsets_of(const std::vector<HfSet>& prev) {
  std::vector<HfSet> out;
  out.reserve(size_t{1} << prev.size());
  for (uint64_t mask = 0; mask < (uint64_t{1} << prev.size()); ++mask) {
    std::vector<HfSet> ms;
    for (size_t i = 0; i < prev.size(); ++i)
      if (mask & (uint64_t{1} << i)) ms.push_back(prev[i]);
    out.push_back(make(std::move(ms)));
  }
  std::sort(out.begin(), out.end(),
            [](HfSet a, HfSet b) { return compare(a, b) == std::strong_ordering::less; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

bool sat(HfSet s, const Formula& f) {
  auto range = [](uint32_t v) {
    std::vector<uint32_t> ids;
    for (HfSet m : members(HfSet::from_id(v))) ids.push_back(m.id());
    return ids;
  };
  Evaluator<decltype(range)> ev(range);
  return ev.eval(f, s.id());
}

bool sat(const RationalSet& g, const Formula& f) {
  auto range = [&g](uint32_t v) -> const std::vector<uint32_t>& { return g.children_of(v); };
  Evaluator<decltype(range)> ev(range);
  return ev.eval(f, 0);
}

Formula master(HfSet s) {
  const auto& ms = members(s);
  if (ms.empty()) return Formula::box(Formula::bottom());
  std::vector<Formula> parts;
  parts.reserve(ms.size());
  for (HfSet m : ms) parts.push_back(master(m));
  std::vector<Formula> diamonds;
  diamonds.reserve(ms.size());
  for (const Formula& p : parts) diamonds.push_back(Formula::diamond(p));
  return Formula::conj(Formula::box(Formula::disj_all(parts)), Formula::conj_all(diamonds));
}

const std::vector<HfSet>& enum_level(uint32_t k) {
  LevelCache& cache = level_cache();
  {
    std::unique_lock lock(cache.mu);
    if (k > cache.cap)
      throw ResourceError("enum_level: level " + std::to_string(k) +
                          " exceeds the cap of " + std::to_string(cache.cap));
    if (k < cache.levels.size()) return cache.levels[k];
  }
  std::vector<HfSet> level = k == 0 ? std::vector<HfSet>{empty()} : subsets_of(enum_level(k - 1));
  std::unique_lock lock(cache.mu);
  if (cache.levels.size() == k) cache.levels.push_back(std::move(level));
  return cache.levels[k];
}

uint32_t level_cap() {
  LevelCache& cache = level_cache();
  std::lock_guard lock(cache.mu);
  return cache.cap;
}

void set_level_cap(uint32_t k) {
  LevelCache& cache = level_cache();
  std::lock_guard lock(cache.mu);
  cache.cap = k;
}

size_t NormalForm::count() const {
  return static_cast<size_t>(std::count(sat.begin(), sat.end(), true));
}
bool NormalForm::is_full() const { return count() == sat.size(); }
bool NormalForm::is_empty() const { return count() == 0; }

NormalForm normal_form_at(const Formula& f, uint32_t k) {
  if (k < f.modal_depth())
    throw DomainError("normal_form_at: depth " + std::to_string(k) +
                      " is below the formula's modal depth");
  const auto& elems = enum_level(k);
  NormalForm nf;
  nf.depth = k;
  nf.sat.reserve(elems.size());
  for (HfSet e : elems) nf.sat.push_back(sat(e, f));
  return nf;
}

NormalForm normal_form(const Formula& f) { return normal_form_at(f, f.modal_depth()); }

bool valid(const Formula& f) { return normal_form(f).is_full(); }
bool satisfiable(const Formula& f) { return !normal_form(f).is_empty(); }

bool equiv(const Formula& f, const Formula& g) {
  uint32_t k = std::max(f.modal_depth(), g.modal_depth());
  return normal_form_at(f, k) == normal_form_at(g, k);
}

bool entails(const Formula& f, const Formula& g) {
  uint32_t k = std::max(f.modal_depth(), g.modal_depth());
  NormalForm a = normal_form_at(f, k);
  NormalForm b = normal_form_at(g, k);
  for (size_t i = 0; i < a.sat.size(); ++i)
    if (a.sat[i] && !b.sat[i]) return false;
  return true;
}

namespace {

Formula char_rec(uint32_t k, HfSet e, std::unordered_map<uint64_t, Formula>& memo) {
  if (k == 0) return Formula::top();
  uint64_t key = (uint64_t{k} << 32) | e.id();
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  const auto& ms = members(e);
  Formula out;
  if (ms.empty()) {
    out = Formula::box(Formula::bottom());
  } else {
    std::vector<Formula> parts;
    parts.reserve(ms.size());
    for (HfSet m : ms) parts.push_back(char_rec(k - 1, m, memo));
    std::vector<Formula> diamonds;
    for (const Formula& p : parts) diamonds.push_back(Formula::diamond(p));
    out = Formula::conj(Formula::box(Formula::disj_all(parts)), Formula::conj_all(diamonds));
  }
  memo.emplace(key, out);
  return out;
}

}  // namespace

Formula char_formula(uint32_t k, HfSet e) {
  if (depth(e) > k)
    throw DomainError("char_formula: element has depth " + std::to_string(depth(e)) +
                      " > level " + std::to_string(k));
  std::unordered_map<uint64_t, Formula> memo;
  return char_rec(k, e, memo);
}

AlgebraSize algebra_size(uint32_t k) {
  // |D_k| = 1, 2, 4, 16, 65536, 2^65536; the algebra has 2^|D_k| elements.
  switch (k) {
    case 0:
      return {uint64_t{2}, "2"};
    case 1:
      return {uint64_t{4}, "4"};
    case 2:
      return {uint64_t{16}, "16"};
    case 3:
      return {uint64_t{65536}, "65536"};
    case 4:
      return {std::nullopt, "2^65536"};
    case 5:
      return {std::nullopt, "2^(2^65536)"};
    default:
      throw ResourceError("algebra_size: defined for k <= 5 only");
  }
}

std::vector<Formula> atoms(uint32_t k) {
  std::vector<Formula> out;
  for (HfSet e : enum_level(k)) out.push_back(char_formula(k, e));
  return out;
}

namespace {

// Scan k = 1, 2, ... testing whether the characteristic formula of the
// left truncation still holds on the right; the first failure is the
// separating level.
template <typename SatFn, typename TruncFn>
Level formula_level_scan(SatFn sat_right, TruncFn trunc_left, uint32_t bound) {
  std::unordered_map<uint64_t, Formula> memo;
  for (uint32_t k = 1; k <= bound; ++k) {
    Formula chi = char_rec(k, trunc_left(k), memo);
    if (!sat_right(chi)) return Level::at(k);
  }
  return Level::infinite();
}

}  // namespace

Level formula_level(HfSet s, HfSet t) {
  if (s == t) return Level::infinite();
  uint32_t bound = std::max(depth(s), depth(t));
  return formula_level_scan([&](const Formula& f) { return sat(t, f); },
                            [&](uint32_t k) { return trunc(k, s); }, bound);
}

Level formula_level(const RationalSet& g, const RationalSet& h) {
  uint32_t bound = g.node_count() + h.node_count();
  return formula_level_scan([&](const Formula& f) { return sat(h, f); },
                            [&](uint32_t k) { return trunc_hf(k, g); }, bound);
}

}  // namespace finitary
