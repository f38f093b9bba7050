#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "invdiam/error.hpp"
#include "invdiam/graph.hpp"

namespace invdiam {

using Triangle = std::array<Vertex, 3>;

// All triangles a<b<c in lexicographic order.
inline std::vector<Triangle> triangles(const LabelledGraph& g) {
  std::vector<Triangle> out;
  for (const Edge& e : g.edges()) {
    auto iu = g.incidences(e.u);
    auto iv = g.incidences(e.v);
    std::size_t i = 0, j = 0;
    while (i < iu.size() && j < iv.size()) {
      if (iu[i].neighbour < iv[j].neighbour) {
        ++i;
      } else if (iv[j].neighbour < iu[i].neighbour) {
        ++j;
      } else {
        if (iu[i].neighbour > e.v) out.push_back({e.u, e.v, iu[i].neighbour});
        ++i;
        ++j;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::array<EdgeId, 3> triangle_edges(const LabelledGraph& g, const Triangle& t) {
  return {*g.edge_index(t[0], t[1]), *g.edge_index(t[0], t[2]), *g.edge_index(t[1], t[2])};
}

// Does edge e lie in a triangle of g whose other two edges are outside `removed`?
inline bool in_surviving_triangle(const LabelledGraph& g, EdgeId e, const std::vector<char>& removed) {
  const Edge& ed = g.edge(e);
  for (const Incidence& a : g.incidences(ed.u)) {
    if (a.neighbour == ed.v || removed[a.edge]) continue;
    if (auto b = g.edge_index(a.neighbour, ed.v); b && !removed[*b]) return true;
  }
  return false;
}

inline bool is_triangle_free_after(const LabelledGraph& g, const std::vector<char>& removed) {
  for (const Triangle& t : triangles(g)) {
    auto es = triangle_edges(g, t);
    if (!removed[es[0]] && !removed[es[1]] && !removed[es[2]]) return false;
  }
  return true;
}

namespace detail {

inline std::vector<EdgeId> exact_transversal(const LabelledGraph& g, const std::vector<Triangle>& tris) {
  std::vector<std::array<EdgeId, 3>> tri_edges;
  for (const auto& t : tris) tri_edges.push_back(triangle_edges(g, t));
  std::vector<char> removed(g.m(), 0);
  std::vector<EdgeId> current;
  std::optional<std::vector<EdgeId>> best;
  // iterative deepening on the transversal size
  auto rec = [&](auto&& self, std::size_t budget) -> bool {
    const std::array<EdgeId, 3>* open = nullptr;
    for (const auto& te : tri_edges) {
      if (!removed[te[0]] && !removed[te[1]] && !removed[te[2]]) {
        open = &te;
        break;
      }
    }
    if (!open) {
      best = current;
      return true;
    }
    if (budget == 0) return false;
    for (EdgeId e : *open) {
      removed[e] = 1;
      current.push_back(e);
      const bool ok = self(self, budget - 1);
      current.pop_back();
      removed[e] = 0;
      if (ok) return true;
    }
    return false;
  };
  for (std::size_t k = 0; k <= g.m(); ++k) {
    if (rec(rec, k)) break;
  }
  std::vector<EdgeId> out = *best;
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

struct TransversalOptions {
  bool exact = false;
  std::size_t exact_cap = 40;  // largest m accepted in exact mode
};

// Edge set F with g\F triangle-free and every f in F lying in a triangle of
// g\(F\{f}). Default: cut of a locally optimal bipartition, then pruned;
// |F| <= floor(m/2). Exact mode returns a minimum transversal.
inline std::vector<EdgeId> min_triangle_transversal(const LabelledGraph& g, const TransversalOptions& opt = {}) {
  const auto tris = triangles(g);
  if (tris.empty()) return {};
  if (opt.exact) {
    if (g.m() > opt.exact_cap) {
      throw BudgetExceeded("exact triangle transversal limited to m <= " + std::to_string(opt.exact_cap));
    }
    return detail::exact_transversal(g, tris);
  }

  // two-colour a BFS forest, then move vertices while the cut grows
  std::vector<int> side(g.n(), -1);
  for (Vertex s = 0; s < g.n(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<Vertex> queue{s};
    for (std::size_t h = 0; h < queue.size(); ++h) {
      for (const Incidence& inc : g.incidences(queue[h])) {
        if (side[inc.neighbour] < 0) {
          side[inc.neighbour] = 1 - side[queue[h]];
          queue.push_back(inc.neighbour);
        }
      }
    }
  }
  bool moved = true;
  while (moved) {
    moved = false;
    for (Vertex v = 0; v < g.n(); ++v) {
      std::size_t same = 0;
      for (const Incidence& inc : g.incidences(v)) same += side[inc.neighbour] == side[v] ? 1 : 0;
      if (2 * same > g.degree(v)) {
        side[v] = 1 - side[v];
        moved = true;
      }
    }
  }
  std::vector<char> removed(g.m(), 0);
  for (EdgeId e = 0; e < g.m(); ++e) removed[e] = side[g.edge(e).u] == side[g.edge(e).v] ? 1 : 0;
  // put back every edge that closes no triangle
  for (EdgeId e = 0; e < g.m(); ++e) {
    if (removed[e] && !in_surviving_triangle(g, e, removed)) removed[e] = 0;
  }
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.m(); ++e) {
    if (removed[e]) out.push_back(e);
  }
  return out;
}

struct PackingOptions {
  bool exact = false;
  std::size_t exact_cap = 40;
};

// Edge-disjoint triangles: greedy in lexicographic order (maximal), or a
// maximum packing in exact mode.
inline std::vector<Triangle> greedy_triangle_packing(const LabelledGraph& g, const PackingOptions& opt = {}) {
  const auto tris = triangles(g);
  std::vector<std::array<EdgeId, 3>> te;
  for (const auto& t : tris) te.push_back(triangle_edges(g, t));
  std::vector<char> used(g.m(), 0);
  if (!opt.exact) {
    std::vector<Triangle> out;
    for (std::size_t i = 0; i < tris.size(); ++i) {
      if (used[te[i][0]] || used[te[i][1]] || used[te[i][2]]) continue;
      used[te[i][0]] = used[te[i][1]] = used[te[i][2]] = 1;
      out.push_back(tris[i]);
    }
    return out;
  }
  if (g.m() > opt.exact_cap) {
    throw BudgetExceeded("exact triangle packing limited to m <= " + std::to_string(opt.exact_cap));
  }
  std::vector<std::size_t> current, best;
  const std::size_t upper = g.m() / 3;
  auto rec = [&](auto&& self, std::size_t from, std::size_t free_edges) -> void {
    if (current.size() > best.size()) best = current;
    if (best.size() == upper) return;
    if (current.size() + free_edges / 3 <= best.size()) return;
    for (std::size_t i = from; i < tris.size(); ++i) {
      if (used[te[i][0]] || used[te[i][1]] || used[te[i][2]]) continue;
      used[te[i][0]] = used[te[i][1]] = used[te[i][2]] = 1;
      current.push_back(i);
      self(self, i + 1, free_edges - 3);
      current.pop_back();
      used[te[i][0]] = used[te[i][1]] = used[te[i][2]] = 0;
      if (best.size() == upper) return;
    }
  };
  rec(rec, 0, g.m());
  std::vector<Triangle> out;
  for (auto i : best) out.push_back(tris[i]);
  return out;
}

}  // namespace invdiam
