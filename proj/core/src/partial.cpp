#include "finitary/partial.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <unordered_map>

#include "finitary/errors.hpp"

namespace finitary {
namespace {

std::vector<uint32_t> sorted_unique(std::vector<uint32_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool compute_cyclic(const std::vector<std::vector<uint32_t>>& children, uint32_t root) {
  enum { White, Grey, Black };
  std::vector<uint8_t> color(children.size(), White);
  std::vector<std::pair<uint32_t, size_t>> stack{{root, 0}};
  color[root] = Grey;
  while (!stack.empty()) {
    auto& [v, i] = stack.back();
    if (i == children[v].size()) {
      color[v] = Black;
      stack.pop_back();
      continue;
    }
    uint32_t c = children[v][i++];
    if (color[c] == Grey) return true;
    if (color[c] == White) {
      color[c] = Grey;
      stack.emplace_back(c, 0);
    }
  }
  return false;
}

}  // namespace

PartialSet::PartialSet() : is_bottom_(1, 0), children_(1), cyclic_(false) {}

PartialSet PartialSet::bottom() {
  PartialSet p;
  p.is_bottom_ = {1};
  return p;
}

PartialSet canonical_partial(const PartialGraph& input) {
  if (input.root >= input.children.size() || input.is_bottom.size() != input.children.size())
    throw DomainError("canonical_partial: malformed graph");
  // reachable restriction
  std::vector<uint32_t> order{input.root};
  std::vector<uint32_t> index(input.children.size(), UINT32_MAX);
  index[input.root] = 0;
  for (size_t i = 0; i < order.size(); ++i)
    for (uint32_t c : input.children[order[i]])
      if (index[c] == UINT32_MAX) {
        index[c] = static_cast<uint32_t>(order.size());
        order.push_back(c);
      }

  uint32_t n = static_cast<uint32_t>(order.size());
  std::vector<std::vector<uint32_t>> children(n);
  std::vector<uint8_t> bottom(n);
  for (uint32_t i = 0; i < n; ++i) {
    bottom[i] = input.is_bottom[order[i]];
    for (uint32_t c : input.children[order[i]]) children[i].push_back(index[c]);
  }

  // signature refinement, kind-aware from the start: Bottom nodes form
  // block 0 when present
  std::vector<uint32_t> block_of(n);
  uint32_t count = 0;
  {
    bool have_bottom = std::find(bottom.begin(), bottom.end(), 1) != bottom.end();
    bool have_set = std::find(bottom.begin(), bottom.end(), 0) != bottom.end();
    uint32_t set_block = have_bottom ? 1 : 0;
    for (uint32_t v = 0; v < n; ++v) block_of[v] = bottom[v] ? 0 : set_block;
    count = static_cast<uint32_t>(have_bottom) + static_cast<uint32_t>(have_set);
  }
  while (true) {
    std::vector<std::vector<uint32_t>> blocks(count);
    for (uint32_t v = 0; v < n; ++v) blocks[block_of[v]].push_back(v);
    std::vector<uint32_t> next(n);
    uint32_t assigned = 0;
    for (const auto& block : blocks) {
      std::map<std::vector<uint32_t>, std::vector<uint32_t>> groups;
      for (uint32_t v : block) {
        std::vector<uint32_t> sig;
        for (uint32_t c : children[v]) sig.push_back(block_of[c]);
        groups[sorted_unique(std::move(sig))].push_back(v);
      }
      for (const auto& [sig, nodes] : groups) {
        for (uint32_t v : nodes) next[v] = assigned;
        ++assigned;
      }
    }
    if (assigned == count) break;
    block_of = std::move(next);
    count = assigned;
  }

  // quotient, then root-first BFS renumbering
  std::vector<std::vector<uint32_t>> bc(count);
  std::vector<uint8_t> bbottom(count, 0);
  std::vector<bool> seen(count, false);
  for (uint32_t v = 0; v < n; ++v) {
    uint32_t b = block_of[v];
    if (seen[b]) continue;
    seen[b] = true;
    bbottom[b] = bottom[v];
    std::vector<uint32_t> kids;
    for (uint32_t c : children[v]) kids.push_back(block_of[c]);
    bc[b] = sorted_unique(std::move(kids));
  }
  uint32_t root_block = block_of[0];
  std::vector<uint32_t> final_id(count, UINT32_MAX);
  std::vector<uint32_t> bfs{root_block};
  final_id[root_block] = 0;
  for (size_t i = 0; i < bfs.size(); ++i)
    for (uint32_t c : bc[bfs[i]])
      if (final_id[c] == UINT32_MAX) {
        final_id[c] = static_cast<uint32_t>(bfs.size());
        bfs.push_back(c);
      }

  PartialSet out;
  out.children_.assign(count, {});
  out.is_bottom_.assign(count, 0);
  for (uint32_t b = 0; b < count; ++b) {
    std::vector<uint32_t> kids;
    for (uint32_t c : bc[b]) kids.push_back(final_id[c]);
    out.children_[final_id[b]] = sorted_unique(std::move(kids));
    out.is_bottom_[final_id[b]] = bbottom[b];
  }
  out.cyclic_ = compute_cyclic(out.children_, 0);
  return out;
}

bool em_leq(const PartialSet& p, const PartialSet& q) {
  uint32_t np = p.node_count(), nq = q.node_count();
  // rel[u][v]: u (in p) can still be below v (in q)
  std::vector<std::vector<uint8_t>> rel(np, std::vector<uint8_t>(nq, 1));
  for (uint32_t u = 0; u < np; ++u)
    for (uint32_t v = 0; v < nq; ++v)
      if (!p.node_is_bottom(u) && q.node_is_bottom(v)) rel[u][v] = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (uint32_t u = 0; u < np; ++u) {
      if (p.node_is_bottom(u)) continue;  // Bottom stays below everything
      for (uint32_t v = 0; v < nq; ++v) {
        if (!rel[u][v] || q.node_is_bottom(v)) continue;
        bool ok = true;
        for (uint32_t a : p.children_of(u)) {
          bool found = false;
          for (uint32_t b : q.children_of(v))
            if (rel[a][b]) {
              found = true;
              break;
            }
          if (!found) {
            ok = false;
            break;
          }
        }
        if (ok)
          for (uint32_t b : q.children_of(v)) {
            bool found = false;
            for (uint32_t a : p.children_of(u))
              if (rel[a][b]) {
                found = true;
                break;
              }
            if (!found) {
              ok = false;
              break;
            }
          }
        if (!ok) {
          rel[u][v] = 0;
          changed = true;
        }
      }
    }
  }
  return rel[0][0] != 0;
}

bool em_equiv(const PartialSet& p, const PartialSet& q) {
  return em_leq(p, q) && em_leq(q, p);
}

bool is_total(const PartialSet& p) {
  for (uint32_t v = 0; v < p.node_count(); ++v)
    if (p.node_is_bottom(v)) return false;
  return true;
}

RationalSet to_rational(const PartialSet& p) {
  if (!is_total(p)) throw DomainError("partial set is not total: contains a bottom node");
  PointedGraph g;
  g.root = 0;
  for (uint32_t v = 0; v < p.node_count(); ++v) g.children.push_back(p.children_of(v));
  return minimize(g);
}

PartialSet embed_partial(const RationalSet& g) {
  PartialGraph pg;
  pg.root = 0;
  pg.is_bottom.assign(g.node_count(), 0);
  for (uint32_t v = 0; v < g.node_count(); ++v) pg.children.push_back(g.children_of(v));
  return canonical_partial(pg);
}

PartialSet bot_trunc(uint32_t k, const RationalSet& g) {
  // Unfold to depth k; the cut layer becomes Bottom. Memoized on (depth
  // remaining, node), so sharing in g is preserved.
  PartialGraph pg;
  std::unordered_map<uint64_t, uint32_t> memo;
  std::function<uint32_t(uint32_t, uint32_t)> build = [&](uint32_t remaining,
                                                          uint32_t v) -> uint32_t {
    uint64_t key = (uint64_t{remaining} << 32) | v;
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    uint32_t id = static_cast<uint32_t>(pg.children.size());
    pg.children.emplace_back();
    pg.is_bottom.push_back(remaining == 0 ? 1 : 0);
    memo.emplace(key, id);
    if (remaining > 0) {
      std::vector<uint32_t> kids;
      for (uint32_t c : g.children_of(v)) kids.push_back(build(remaining - 1, c));
      pg.children[id] = std::move(kids);
    }
    return id;
  };
  pg.root = build(k, 0);
  return canonical_partial(pg);
}

bool maximality_check(const PartialSet& t, const std::vector<PartialSet>& pool) {
  if (!is_total(t)) throw DomainError("maximality_check requires a total element");
  for (const PartialSet& p : pool)
    if (em_leq(t, p) && !em_leq(p, t)) return false;
  return true;
}

std::vector<PartialSet> enum_partial(uint32_t k) {
  // level 0: Bottom and the empty set; level j+1 adds all sets of level-j
  // elements
  std::vector<PartialSet> cur{PartialSet::bottom(), PartialSet()};
  for (uint32_t j = 0; j < k; ++j) {
    if (cur.size() > 25)
      throw ResourceError("enum_partial: level " + std::to_string(j) + " already has " +
                          std::to_string(cur.size()) + " elements; the next level is out of reach");
    std::vector<PartialSet> next{PartialSet::bottom()};
    uint64_t n = cur.size();
    for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
      PartialGraph pg;
      pg.is_bottom.push_back(0);
      pg.children.emplace_back();
      pg.root = 0;
      for (uint64_t i = 0; i < n; ++i) {
        if (!(mask & (uint64_t{1} << i))) continue;
        const PartialSet& m = cur[i];
        uint32_t off = static_cast<uint32_t>(pg.children.size());
        pg.children[0].push_back(off);
        for (uint32_t v = 0; v < m.node_count(); ++v) {
          std::vector<uint32_t> kids = m.children_of(v);
          for (uint32_t& c : kids) c += off;
          pg.children.push_back(std::move(kids));
          pg.is_bottom.push_back(m.node_is_bottom(v) ? 1 : 0);
        }
      }
      next.push_back(canonical_partial(pg));
    }
    // canonical forms may repeat (e.g. {_|_,_|_} = {_|_}); deduplicate
    std::sort(next.begin(), next.end(), [](const PartialSet& a, const PartialSet& b) {
      return partial_text(a) < partial_text(b);
    });
    next.erase(std::unique(next.begin(), next.end()), next.end());
    cur = std::move(next);
  }
  return cur;
}

namespace {

std::string acyclic_text(const PartialSet& p, uint32_t v) {
  if (p.node_is_bottom(v)) return "_|_";
  std::vector<std::string> parts;
  for (uint32_t c : p.children_of(v)) parts.push_back(acyclic_text(p, c));
  std::sort(parts.begin(), parts.end());
  std::string out = "{";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ",";
    out += parts[i];
  }
  return out + "}";
}

}  // namespace

std::string partial_text(const PartialSet& p) {
  if (!p.is_cyclic()) return acyclic_text(p, 0);
  std::string out;
  for (uint32_t v = 0; v < p.node_count(); ++v) {
    if (v > 0) out += ";";
    out += "x" + std::to_string(v) + "=";
    if (p.node_is_bottom(v)) {
      out += "_|_";
      continue;
    }
    out += "{";
    bool first = true;
    for (uint32_t c : p.children_of(v)) {
      if (!first) out += ",";
      first = false;
      out += "x" + std::to_string(c);
    }
    out += "}";
  }
  return out;
}

namespace {

// Graph construction mirroring the rational-system builder, with _|_
// leaves admitted.
struct PartialBuilder {
  std::map<std::string, uint32_t> var_node;
  std::map<std::string, const SetExpr*> rhs_of;
  PartialGraph g;
  std::unordered_map<const SetExpr*, uint32_t> node_memo;

  uint32_t fresh(bool bottom) {
    g.children.emplace_back();
    g.is_bottom.push_back(bottom ? 1 : 0);
    return static_cast<uint32_t>(g.children.size() - 1);
  }

  static void require_plain(const SetExpr* e) {
    if (e->kind != SetExpr::Kind::Braces && e->kind != SetExpr::Kind::Union &&
        e->kind != SetExpr::Kind::Var && e->kind != SetExpr::Kind::Bottom)
      throw DomainError("operator not allowed in a partial set expression");
  }

  std::vector<uint32_t> member_nodes(const SetExpr* e) {
    require_plain(e);
    switch (e->kind) {
      case SetExpr::Kind::Braces: {
        std::vector<uint32_t> out;
        for (const auto& it : e->items) out.push_back(node_of(it.get()));
        return out;
      }
      case SetExpr::Kind::Union: {
        std::vector<uint32_t> out = member_nodes(e->items[0].get());
        auto r = member_nodes(e->items[1].get());
        out.insert(out.end(), r.begin(), r.end());
        return out;
      }
      case SetExpr::Kind::Var:
        return member_nodes(rhs_of.at(e->name));
      case SetExpr::Kind::Bottom:
        throw DomainError("bottom has no members; _|_ cannot be a union operand");
      default:
        throw DomainError("operator not allowed in a partial set expression");
    }
  }

  uint32_t node_of(const SetExpr* e) {
    require_plain(e);
    if (e->kind == SetExpr::Kind::Var) return var_node.at(e->name);
    auto it = node_memo.find(e);
    if (it != node_memo.end()) return it->second;
    if (e->kind == SetExpr::Kind::Bottom) {
      uint32_t id = fresh(true);
      node_memo.emplace(e, id);
      return id;
    }
    uint32_t id = fresh(false);
    node_memo.emplace(e, id);
    // member_nodes may grow g.children; finish it before indexing
    std::vector<uint32_t> kids = member_nodes(e);
    g.children[id] = std::move(kids);
    return id;
  }
};

}  // namespace

PartialSet eval_closed_partial(const SetExprPtr& e) {
  if (!expr_variables(e).empty())
    throw DomainError("expression contains variables; use an equation system");
  PartialBuilder b;
  b.g.root = b.node_of(e.get());
  return canonical_partial(b.g);
}

std::vector<std::pair<std::string, PartialSet>> solve_partial(const EqSystem& sys) {
  if (sys.equations.empty()) throw DomainError("empty equation system");
  auto issues = check_guarded(sys);
  if (!issues.empty()) throw DomainError(issues.front().message);

  PartialBuilder b;
  for (const Equation& eq : sys.equations) {
    b.var_node[eq.name] = b.fresh(eq.rhs->kind == SetExpr::Kind::Bottom);
    b.rhs_of[eq.name] = eq.rhs.get();
  }
  for (const Equation& eq : sys.equations)
    if (eq.rhs->kind != SetExpr::Kind::Bottom) {
      std::vector<uint32_t> kids = b.member_nodes(eq.rhs.get());
      b.g.children[b.var_node.at(eq.name)] = std::move(kids);
    }

  std::vector<std::pair<std::string, PartialSet>> out;
  for (const Equation& eq : sys.equations) {
    b.g.root = b.var_node.at(eq.name);
    out.emplace_back(eq.name, canonical_partial(b.g));
  }
  return out;
}

}  // namespace finitary
