#include "finitary/hf.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "finitary/errors.hpp"

namespace finitary {
namespace {

constexpr size_t kPowerSetCap = 20;  // 2^20 children is already over a million

uint64_t hash_children(const std::vector<HfSet>& kids) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (HfSet k : kids) {
    h ^= k.id();
    h *= 0x100000001b3ull;
  }
  return h;
}

uint64_t pair_key(HfSet a, HfSet b) {
  return (uint64_t{a.id()} << 32) | b.id();
}

struct Node {
  std::vector<HfSet> children;  // sorted strictly increasing under compare()
  uint32_t depth;
};

// Append-only interner. Node references stay valid forever (deque storage),
// so readers may hold onto member lists without a lock once fetched.
class HfStore {
 public:
  static HfStore& global() {
    static HfStore store;
    return store;
  }

  HfStore() { intern({}); }  // id 0 = the empty set

  const Node& node(HfSet s) const {
    std::shared_lock lock(mu_);
    return nodes_[s.id()];
  }

  size_t size() const {
    std::shared_lock lock(mu_);
    return nodes_.size();
  }

  // kids must already be canonical (sorted, deduplicated).
  HfSet intern(std::vector<HfSet> kids) {
    uint64_t h = hash_children(kids);
    std::unique_lock lock(mu_);
    auto it = buckets_.find(h);
    if (it != buckets_.end()) {
      for (uint32_t id : it->second)
        if (nodes_[id].children == kids) return HfSet::from_id(id);
    }
    uint32_t d = 0;
    for (HfSet k : kids) d = std::max(d, nodes_[k.id()].depth + 1);
    uint32_t id = static_cast<uint32_t>(nodes_.size());
    nodes_.push_back(Node{std::move(kids), d});
    buckets_[h].push_back(id);
    return HfSet::from_id(id);
  }

  std::strong_ordering compare(HfSet a, HfSet b) {
    if (a == b) return std::strong_ordering::equal;
    bool flip = a.id() > b.id();
    if (flip) std::swap(a, b);
    uint64_t key = pair_key(a, b);
    int8_t v = 0;
    {
      std::lock_guard lock(cmp_mu_);
      auto it = cmp_cache_.find(key);
      if (it != cmp_cache_.end()) v = it->second;
    }
    if (v == 0) {
      const std::vector<HfSet>& ma = node(a).children;
      const std::vector<HfSet>& mb = node(b).children;
      size_t i = ma.size(), j = mb.size();
      std::strong_ordering res = std::strong_ordering::equal;
      while (i > 0 && j > 0) {
        res = compare(ma[i - 1], mb[j - 1]);
        if (res != std::strong_ordering::equal) break;
        --i, --j;
      }
      if (res == std::strong_ordering::equal) {
        assert(i != j);  // equal canonical lists would be the same handle
        res = i < j ? std::strong_ordering::less : std::strong_ordering::greater;
      }
      v = res == std::strong_ordering::less ? -1 : 1;
      std::lock_guard lock(cmp_mu_);
      cmp_cache_.emplace(key, v);
    }
    if (flip) v = static_cast<int8_t>(-v);
    return v < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }

 private:
  mutable std::shared_mutex mu_;
  std::deque<Node> nodes_;
  std::unordered_map<uint64_t, std::vector<uint32_t>> buckets_;

  std::mutex cmp_mu_;
  std::unordered_map<uint64_t, int8_t> cmp_cache_;
};

bool strat_eq_memo(uint32_t k, HfSet s, HfSet t,
                   std::unordered_map<uint64_t, bool>* memo_per_k) {
  if (k == 0 || s == t) return true;
  uint64_t key = pair_key(s, t);
  auto& memo = memo_per_k[k];
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  const auto& ms = members(s);
  const auto& mt = members(t);
  bool ok = true;
  for (HfSet a : ms) {
    bool matched = false;
    for (HfSet b : mt)
      if (strat_eq_memo(k - 1, a, b, memo_per_k)) {
        matched = true;
        break;
      }
    if (!matched) {
      ok = false;
      break;
    }
  }
  if (ok)
    for (HfSet b : mt) {
      bool matched = false;
      for (HfSet a : ms)
        if (strat_eq_memo(k - 1, a, b, memo_per_k)) {
          matched = true;
          break;
        }
      if (!matched) {
        ok = false;
        break;
      }
    }
  memo.emplace(key, ok);
  return ok;
}

Level hausdorff_memo(HfSet s, HfSet t, std::unordered_map<uint64_t, Level>& memo) {
  if (s == t) return Level::infinite();  // rule (1)
  uint64_t key = s.id() < t.id() ? pair_key(s, t) : pair_key(t, s);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  Level res = Level::at(1);
  const auto& ms = members(s);
  const auto& mt = members(t);
  if (!ms.empty() && !mt.empty()) {
    // rule (2.2): sup/inf of distances become min/max of levels, and the
    // 1/2 contraction becomes +1.
    auto direction = [&](const std::vector<HfSet>& xs, const std::vector<HfSet>& ys) {
      Level worst = Level::infinite();
      for (HfSet x : xs) {
        Level best = Level::at(0);
        for (HfSet y : ys) best = std::max(best, hausdorff_memo(x, y, memo));
        worst = std::min(worst, best);
      }
      return worst;
    };
    Level m = std::min(direction(ms, mt), direction(mt, ms));
    assert(!m.is_infinite());  // distinct canonical sets always separate
    res = m.succ();
  }
  // rule (2.1): exactly one side empty stays at level 1.
  memo.emplace(key, res);
  return res;
}

}  // namespace

HfSet empty() { return HfSet(); }

HfSet make(std::vector<HfSet> ms) {
  auto& store = HfStore::global();
  std::sort(ms.begin(), ms.end(), [&](HfSet a, HfSet b) {
    return store.compare(a, b) == std::strong_ordering::less;
  });
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  return store.intern(std::move(ms));
}

const std::vector<HfSet>& members(HfSet s) { return HfStore::global().node(s).children; }

bool is_member(HfSet a, HfSet b) {
  const auto& ms = members(b);
  return std::find(ms.begin(), ms.end(), a) != ms.end();
}

uint32_t depth(HfSet s) { return HfStore::global().node(s).depth; }

std::strong_ordering compare(HfSet a, HfSet b) { return HfStore::global().compare(a, b); }

HfSet trunc(uint32_t k, HfSet s) {
  if (k >= depth(s)) return s;
  if (k == 0) return empty();
  std::vector<HfSet> ms;
  ms.reserve(members(s).size());
  for (HfSet m : members(s)) ms.push_back(trunc(k - 1, m));
  return make(std::move(ms));
}

bool strat_eq(uint32_t k, HfSet s, HfSet t) {
  std::vector<std::unordered_map<uint64_t, bool>> memo(k + 1);
  return strat_eq_memo(k, s, t, memo.data());
}

Level level(HfSet s, HfSet t) {
  if (s == t) return Level::infinite();
  uint32_t bound = std::max(depth(s), depth(t));
  std::vector<std::unordered_map<uint64_t, bool>> memo(bound + 1);
  for (uint32_t k = 1; k <= bound; ++k)
    if (!strat_eq_memo(k, s, t, memo.data())) return Level::at(k);
  assert(false && "distinct sets must separate by their maximum depth");
  return Level::infinite();
}

Level dist(HfSet s, HfSet t) { return level(s, t); }

Level dist_hausdorff(HfSet s, HfSet t) {
  std::unordered_map<uint64_t, Level> memo;
  return hausdorff_memo(s, t, memo);
}

HfSet set_union(HfSet s, HfSet t) {
  std::vector<HfSet> ms = members(s);
  const auto& mt = members(t);
  ms.insert(ms.end(), mt.begin(), mt.end());
  return make(std::move(ms));
}

HfSet singleton(HfSet s) { return make({s}); }

HfSet pair_set(HfSet s, HfSet t) { return make({s, t}); }

HfSet big_union(HfSet s) {
  std::vector<HfSet> ms;
  for (HfSet m : members(s)) {
    const auto& mm = members(m);
    ms.insert(ms.end(), mm.begin(), mm.end());
  }
  return make(std::move(ms));
}

HfSet power_set(HfSet s) {
  const auto& ms = members(s);
  if (ms.size() > kPowerSetCap)
    throw ResourceError("power_set: set has " + std::to_string(ms.size()) +
                        " members, cap is " + std::to_string(kPowerSetCap));
  std::vector<HfSet> subsets;
  subsets.reserve(size_t{1} << ms.size());
  for (uint64_t mask = 0; mask < (uint64_t{1} << ms.size()); ++mask) {
    std::vector<HfSet> sub;
    for (size_t i = 0; i < ms.size(); ++i)
      if (mask & (uint64_t{1} << i)) sub.push_back(ms[i]);
    subsets.push_back(make(std::move(sub)));
  }
  return make(std::move(subsets));
}

std::string to_text(HfSet s) {
  std::string out = "{";
  bool first = true;
  for (HfSet m : members(s)) {
    if (!first) out += ",";
    first = false;
    out += to_text(m);
  }
  out += "}";
  return out;
}

size_t store_size() { return HfStore::global().size(); }

}  // namespace finitary
