#include "finitary/rational.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>

#include "finitary/errors.hpp"

namespace finitary {
namespace {

constexpr size_t kPowerSetCap = 20;

using Adjacency = std::vector<std::vector<uint32_t>>;

std::vector<uint32_t> sorted_unique(std::vector<uint32_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// One synchronous signature-refinement round. Sub-blocks are ordered by
// (parent block, sorted child-block signature), which keeps the block
// numbering a function of the bisimulation structure alone.
std::vector<uint32_t> refine_round(const Adjacency& children,
                                   const std::vector<uint32_t>& block_of, uint32_t block_count,
                                   uint32_t* new_count) {
  std::vector<std::vector<uint32_t>> blocks(block_count);
  for (uint32_t v = 0; v < block_of.size(); ++v) blocks[block_of[v]].push_back(v);

  std::vector<uint32_t> next(block_of.size());
  uint32_t assigned = 0;
  for (const auto& block : blocks) {
    std::map<std::vector<uint32_t>, std::vector<uint32_t>> groups;
    for (uint32_t v : block) {
      std::vector<uint32_t> sig;
      sig.reserve(children[v].size());
      for (uint32_t c : children[v]) sig.push_back(block_of[c]);
      groups[sorted_unique(std::move(sig))].push_back(v);
    }
    for (const auto& [sig, nodes] : groups) {
      for (uint32_t v : nodes) next[v] = assigned;
      ++assigned;
    }
  }
  *new_count = assigned;
  return next;
}

struct Refined {
  std::vector<uint32_t> block_of;
  uint32_t count;
};

Refined refine_to_fixpoint(const Adjacency& children) {
  Refined cur{std::vector<uint32_t>(children.size(), 0), children.empty() ? 0u : 1u};
  while (true) {
    uint32_t count = 0;
    auto next = refine_round(children, cur.block_of, cur.count, &count);
    if (count == cur.count) return cur;
    cur = Refined{std::move(next), count};
  }
}

// Reachable restriction preserving nothing about the input order: the
// canonical result is determined later by the refinement blocks.
PointedGraph restrict_reachable(const PointedGraph& g) {
  std::vector<uint32_t> order;
  std::vector<uint32_t> index(g.children.size(), UINT32_MAX);
  order.push_back(g.root);
  index[g.root] = 0;
  for (size_t i = 0; i < order.size(); ++i)
    for (uint32_t c : g.children[order[i]])
      if (index[c] == UINT32_MAX) {
        index[c] = static_cast<uint32_t>(order.size());
        order.push_back(c);
      }
  PointedGraph out;
  out.root = 0;
  out.children.resize(order.size());
  for (size_t i = 0; i < order.size(); ++i)
    for (uint32_t c : g.children[order[i]]) out.children[i].push_back(index[c]);
  return out;
}

bool compute_cyclic(const Adjacency& children, uint32_t root) {
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

Adjacency joint_graph(const RationalSet& g, const RationalSet& h, uint32_t* root_h) {
  Adjacency children;
  children.reserve(g.node_count() + h.node_count());
  for (uint32_t v = 0; v < g.node_count(); ++v) children.push_back(g.children_of(v));
  uint32_t off = g.node_count();
  for (uint32_t v = 0; v < h.node_count(); ++v) {
    std::vector<uint32_t> kids = h.children_of(v);
    for (uint32_t& c : kids) c += off;
    children.push_back(std::move(kids));
  }
  *root_h = off;
  return children;
}

}  // namespace

RationalSet minimize(const PointedGraph& input) {
  if (input.root >= input.children.size())
    throw DomainError("minimize: root node does not exist");
  PointedGraph g = restrict_reachable(input);
  Refined part = refine_to_fixpoint(g.children);

  // Quotient adjacency on blocks; all nodes of a block agree at fixpoint.
  Adjacency block_children(part.count);
  std::vector<bool> seen(part.count, false);
  for (uint32_t v = 0; v < g.children.size(); ++v) {
    uint32_t b = part.block_of[v];
    if (seen[b]) continue;
    seen[b] = true;
    std::vector<uint32_t> kids;
    for (uint32_t c : g.children[v]) kids.push_back(part.block_of[c]);
    block_children[b] = sorted_unique(std::move(kids));
  }

  // Root-first breadth-first renumbering over blocks, children taken in
  // refinement-block order, so the root is always node 0.
  uint32_t root_block = part.block_of[g.root];
  std::vector<uint32_t> final_id(part.count, UINT32_MAX);
  std::vector<uint32_t> bfs{root_block};
  final_id[root_block] = 0;
  for (size_t i = 0; i < bfs.size(); ++i)
    for (uint32_t c : block_children[bfs[i]])
      if (final_id[c] == UINT32_MAX) {
        final_id[c] = static_cast<uint32_t>(bfs.size());
        bfs.push_back(c);
      }

  RationalSet out;
  out.children_.assign(part.count, {});
  for (uint32_t b = 0; b < part.count; ++b) {
    std::vector<uint32_t> kids;
    for (uint32_t c : block_children[b]) kids.push_back(final_id[c]);
    out.children_[final_id[b]] = sorted_unique(std::move(kids));
  }
  out.cyclic_ = compute_cyclic(out.children_, 0);
  return out;
}

Level strat_level(const RationalSet& g, const RationalSet& h) {
  uint32_t root_h = 0;
  Adjacency children = joint_graph(g, h, &root_h);
  std::vector<uint32_t> block_of(children.size(), 0);
  uint32_t count = 1;
  for (uint32_t round = 1;; ++round) {
    uint32_t next_count = 0;
    auto next = refine_round(children, block_of, count, &next_count);
    if (next[0] != next[root_h]) return Level::at(round);
    if (next_count == count) return Level::infinite();
    block_of = std::move(next);
    count = next_count;
  }
}

bool bisim(const RationalSet& g, const RationalSet& h) {
  return strat_level(g, h).is_infinite();
}

bool member(const RationalSet& g, const RationalSet& h) {
  uint32_t root_h = 0;
  Adjacency children = joint_graph(g, h, &root_h);
  std::vector<uint32_t> block_of(children.size(), 0);
  uint32_t count = 1;
  while (true) {
    uint32_t next_count = 0;
    auto next = refine_round(children, block_of, count, &next_count);
    if (next_count == count) break;
    block_of = std::move(next);
    count = next_count;
  }
  for (uint32_t c : h.children_of(0))
    if (block_of[c + root_h] == block_of[0]) return true;
  return false;
}

std::vector<RationalSet> unfold(const RationalSet& h) {
  std::vector<RationalSet> out;
  PointedGraph g = h.as_graph();
  for (uint32_t c : h.children_of(0)) {
    g.root = c;
    out.push_back(minimize(g));
  }
  std::sort(out.begin(), out.end(), [](const RationalSet& a, const RationalSet& b) {
    return compare(a, b) == std::strong_ordering::less;
  });
  return out;
}

RationalSet fold(const std::vector<RationalSet>& members) {
  PointedGraph g;
  g.children.emplace_back();  // root
  for (const RationalSet& m : members) {
    uint32_t off = static_cast<uint32_t>(g.children.size());
    g.children[0].push_back(off);
    for (uint32_t v = 0; v < m.node_count(); ++v) {
      std::vector<uint32_t> kids = m.children_of(v);
      for (uint32_t& c : kids) c += off;
      g.children.push_back(std::move(kids));
    }
  }
  return minimize(g);
}

RationalSet set_union(const RationalSet& g, const RationalSet& h) {
  PointedGraph j;
  j.children.emplace_back();
  auto append = [&j](const RationalSet& r) {
    uint32_t off = static_cast<uint32_t>(j.children.size());
    for (uint32_t v = 0; v < r.node_count(); ++v) {
      std::vector<uint32_t> kids = r.children_of(v);
      for (uint32_t& c : kids) c += off;
      j.children.push_back(std::move(kids));
    }
    return off;
  };
  uint32_t og = append(g);
  uint32_t oh = append(h);
  for (uint32_t c : g.children_of(0)) j.children[0].push_back(c + og);
  for (uint32_t c : h.children_of(0)) j.children[0].push_back(c + oh);
  return minimize(j);
}

RationalSet singleton(const RationalSet& g) { return fold({g}); }

RationalSet pair_set(const RationalSet& g, const RationalSet& h) { return fold({g, h}); }

RationalSet big_union(const RationalSet& g) {
  PointedGraph j;
  j.children.emplace_back();
  uint32_t off = 1;
  for (uint32_t v = 0; v < g.node_count(); ++v) {
    std::vector<uint32_t> kids = g.children_of(v);
    for (uint32_t& c : kids) c += off;
    j.children.push_back(std::move(kids));
  }
  for (uint32_t c : g.children_of(0))
    for (uint32_t cc : g.children_of(c)) j.children[0].push_back(cc + off);
  return minimize(j);
}

RationalSet power_set(const RationalSet& g) {
  const auto& roots = g.children_of(0);
  size_t n = roots.size();
  if (n > kPowerSetCap)
    throw ResourceError("power_set: set has " + std::to_string(n) + " members, cap is " +
                        std::to_string(kPowerSetCap));
  PointedGraph j;
  uint32_t subsets = static_cast<uint32_t>(1u << n);
  uint32_t off = 1 + subsets;
  j.children.resize(off);
  for (uint32_t v = 0; v < g.node_count(); ++v) {
    std::vector<uint32_t> kids = g.children_of(v);
    for (uint32_t& c : kids) c += off;
    j.children.push_back(std::move(kids));
  }
  for (uint32_t mask = 0; mask < subsets; ++mask) {
    j.children[0].push_back(1 + mask);
    for (size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) j.children[1 + mask].push_back(roots[i] + off);
  }
  return minimize(j);
}

RationalSet embed(HfSet s) {
  std::unordered_map<HfSet, uint32_t> index;
  std::vector<HfSet> order;
  std::vector<HfSet> stack{s};
  index.emplace(s, 0);
  order.push_back(s);
  while (!stack.empty()) {
    HfSet v = stack.back();
    stack.pop_back();
    for (HfSet m : members(v))
      if (index.emplace(m, static_cast<uint32_t>(order.size())).second) {
        order.push_back(m);
        stack.push_back(m);
      }
  }
  PointedGraph g;
  g.children.resize(order.size());
  for (size_t i = 0; i < order.size(); ++i)
    for (HfSet m : members(order[i])) g.children[i].push_back(index.at(m));
  g.root = 0;
  return minimize(g);
}

HfSet to_hf(const RationalSet& g) {
  if (g.is_cyclic()) throw DomainError("non-well-founded: cyclic set has no HF form");
  std::vector<HfSet> value(g.node_count());
  std::vector<bool> done(g.node_count(), false);
  // children always resolvable in reverse BFS order on a DAG? Not in
  // general; do an explicit post-order walk.
  std::vector<std::pair<uint32_t, size_t>> stack{{0, 0}};
  std::vector<bool> on_stack(g.node_count(), false);
  on_stack[0] = true;
  while (!stack.empty()) {
    auto& [v, i] = stack.back();
    const auto& kids = g.children_of(v);
    if (i == kids.size()) {
      std::vector<HfSet> ms;
      ms.reserve(kids.size());
      for (uint32_t c : kids) ms.push_back(value[c]);
      value[v] = make(std::move(ms));
      done[v] = true;
      on_stack[v] = false;
      stack.pop_back();
      continue;
    }
    uint32_t c = kids[i++];
    if (!done[c]) {
      assert(!on_stack[c]);
      on_stack[c] = true;
      stack.emplace_back(c, 0);
    }
  }
  return value[0];
}

namespace {

HfSet trunc_node(uint32_t k, uint32_t v, const RationalSet& g,
                 std::unordered_map<uint64_t, HfSet>& memo) {
  if (k == 0) return empty();
  uint64_t key = (uint64_t{k} << 32) | v;
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  std::vector<HfSet> ms;
  for (uint32_t c : g.children_of(v)) ms.push_back(trunc_node(k - 1, c, g, memo));
  HfSet r = make(std::move(ms));
  memo.emplace(key, r);
  return r;
}

}  // namespace

HfSet trunc_hf(uint32_t k, const RationalSet& g) {
  std::unordered_map<uint64_t, HfSet> memo;
  return trunc_node(k, 0, g, memo);
}

std::strong_ordering compare(const RationalSet& g, const RationalSet& h) {
  bool cg = g.is_cyclic(), ch = h.is_cyclic();
  if (!cg && !ch) return compare(to_hf(g), to_hf(h));
  if (cg != ch) return cg ? std::strong_ordering::greater : std::strong_ordering::less;
  return canonical_text(g) <=> canonical_text(h);
}

std::string canonical_text(const RationalSet& g) {
  if (!g.is_cyclic()) return to_text(to_hf(g));
  std::string out;
  for (uint32_t v = 0; v < g.node_count(); ++v) {
    if (v > 0) out += ";";
    out += "x" + std::to_string(v) + "={";
    bool first = true;
    for (uint32_t c : g.children_of(v)) {
      if (!first) out += ",";
      first = false;
      out += "x" + std::to_string(c);
    }
    out += "}";
  }
  return out;
}

std::string to_dot(const RationalSet& g) {
  std::string out = "digraph rational {\n";
  for (uint32_t v = 0; v < g.node_count(); ++v)
    out += "  x" + std::to_string(v) +
           (v == 0 ? " [shape=doublecircle];\n" : " [shape=circle];\n");
  for (uint32_t v = 0; v < g.node_count(); ++v)
    for (uint32_t c : g.children_of(v))
      out += "  x" + std::to_string(v) + " -> x" + std::to_string(c) + ";\n";
  out += "}\n";
  return out;
}

// --- guarded equation systems ----------------------------------------------

namespace {

void walk_vars(const SetExprPtr& e, int brace_depth,
               const std::function<void(const std::string&, int)>& visit) {
  if (e->kind == SetExpr::Kind::Var) {
    visit(e->name, brace_depth);
    return;
  }
  int next = e->kind == SetExpr::Kind::Braces ? brace_depth + 1 : brace_depth;
  for (const auto& it : e->items) walk_vars(it, next, visit);
}

}  // namespace

std::vector<SystemIssue> check_guarded(const EqSystem& sys) {
  std::vector<SystemIssue> issues;
  std::set<std::string> defined;
  for (const Equation& eq : sys.equations) {
    if (!defined.insert(eq.name).second)
      issues.push_back({SystemIssue::Kind::Duplicate, eq.name, eq.name,
                        "duplicate definition of '" + eq.name + "'"});
  }
  for (const Equation& eq : sys.equations) {
    walk_vars(eq.rhs, 0, [&](const std::string& var, int depth) {
      if (!defined.count(var)) {
        issues.push_back({SystemIssue::Kind::Undefined, var, eq.name,
                          "undefined name '" + var + "' in equation '" + eq.name + "'"});
      } else if (depth == 0) {
        issues.push_back({SystemIssue::Kind::Unguarded, var, eq.name,
                          "unguarded variable '" + var + "' in equation '" + eq.name + "'"});
      }
    });
  }
  return issues;
}

namespace {

struct SystemBuilder {
  const EqSystem& sys;
  std::map<std::string, uint32_t> var_node;
  std::map<std::string, const SetExpr*> rhs_of;
  Adjacency children;
  std::unordered_map<const SetExpr*, uint32_t> node_memo;

  explicit SystemBuilder(const EqSystem& s) : sys(s) {
    for (const Equation& eq : s.equations) {
      var_node[eq.name] = static_cast<uint32_t>(children.size());
      rhs_of[eq.name] = eq.rhs.get();
      children.emplace_back();
    }
  }

  static void require_plain(const SetExpr* e) {
    if (e->kind != SetExpr::Kind::Braces && e->kind != SetExpr::Kind::Union &&
        e->kind != SetExpr::Kind::Var)
      throw DomainError("operator not allowed in an equation system");
  }

  // The member list of the set denoted by expr. Top-level unions flatten;
  // a variable contributes its own (syntactic) member list, which is safe
  // because guardedness rules out bare variables at the top level.
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
      default:
        throw DomainError("operator not allowed in an equation system");
    }
  }

  uint32_t node_of(const SetExpr* e) {
    require_plain(e);
    if (e->kind == SetExpr::Kind::Var) return var_node.at(e->name);
    auto it = node_memo.find(e);
    if (it != node_memo.end()) return it->second;
    uint32_t id = static_cast<uint32_t>(children.size());
    children.emplace_back();
    node_memo.emplace(e, id);
    // member_nodes may grow `children`; finish it before indexing
    std::vector<uint32_t> kids = member_nodes(e);
    children[id] = std::move(kids);
    return id;
  }
};

}  // namespace

std::vector<std::pair<std::string, RationalSet>> solve(const EqSystem& sys) {
  if (sys.equations.empty()) throw DomainError("empty equation system");
  auto issues = check_guarded(sys);
  if (!issues.empty()) throw DomainError(issues.front().message);

  SystemBuilder b(sys);
  for (const Equation& eq : sys.equations) {
    std::vector<uint32_t> kids = b.member_nodes(eq.rhs.get());
    b.children[b.var_node.at(eq.name)] = std::move(kids);
  }

  std::vector<std::pair<std::string, RationalSet>> out;
  PointedGraph g;
  g.children = b.children;
  for (const Equation& eq : sys.equations) {
    g.root = b.var_node.at(eq.name);
    out.emplace_back(eq.name, minimize(g));
  }
  return out;
}

RationalSet eval_closed(const SetExprPtr& e) {
  if (!expr_variables(e).empty())
    throw DomainError("expression contains variables; use an equation system");
  EqSystem none;
  SystemBuilder b(none);
  uint32_t root = b.node_of(e.get());
  PointedGraph g;
  g.children = std::move(b.children);
  g.root = root;
  return minimize(g);
}

}  // namespace finitary
