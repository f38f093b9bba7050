#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "invdiam/error.hpp"
#include "invdiam/graph.hpp"

namespace invdiam {

// Each part is a path given by its vertex sequence (2 or 3 vertices).
struct PathDecomposition {
  std::vector<std::vector<Vertex>> parts;
};

// Decomposes a connected graph into ceil(m/2) paths of order at most 3.
// Edges are paired bottom-up along a DFS tree: every vertex pairs its
// remaining non-parent edges and, if one is left over, pairs it with the
// edge to its parent.
inline PathDecomposition kotzig_p3(const LabelledGraph& g) {
  PathDecomposition out;
  if (g.m() == 0) return out;
  if (!is_connected(g)) throw Error("kotzig_p3 needs a connected graph");

  const std::size_t n = g.n();
  constexpr auto kNone = static_cast<EdgeId>(-1);
  std::vector<EdgeId> parent_edge(n, kNone);
  std::vector<char> seen(n, 0);
  std::vector<Vertex> preorder;
  preorder.reserve(n);

  // iterative DFS from vertex 0 keeping an explicit incidence cursor
  std::vector<std::pair<Vertex, std::size_t>> stack{{0, 0}};
  seen[0] = 1;
  preorder.push_back(0);
  while (!stack.empty()) {
    auto& [v, cursor] = stack.back();
    auto inc = g.incidences(v);
    if (cursor == inc.size()) {
      stack.pop_back();
      continue;
    }
    const Incidence next = inc[cursor++];
    if (seen[next.neighbour]) continue;
    seen[next.neighbour] = 1;
    parent_edge[next.neighbour] = next.edge;
    preorder.push_back(next.neighbour);
    stack.emplace_back(next.neighbour, 0);
  }

  std::vector<char> used(g.m(), 0);
  auto other = [&](EdgeId e, Vertex v) { return g.edge(e).u == v ? g.edge(e).v : g.edge(e).u; };
  for (auto it = preorder.rbegin(); it != preorder.rend(); ++it) {
    const Vertex v = *it;
    std::vector<EdgeId> pending;
    for (const Incidence& inc : g.incidences(v)) {
      if (inc.edge != parent_edge[v] && !used[inc.edge]) pending.push_back(inc.edge);
    }
    if (pending.size() % 2 == 1 && parent_edge[v] != kNone) pending.push_back(parent_edge[v]);
    std::size_t i = 0;
    for (; i + 1 < pending.size(); i += 2) {
      used[pending[i]] = used[pending[i + 1]] = 1;
      out.parts.push_back({other(pending[i], v), v, other(pending[i + 1], v)});
    }
    if (i < pending.size()) {
      used[pending[i]] = 1;
      out.parts.push_back({v, other(pending[i], v)});
    }
  }
  return out;
}

// Edge ids of a path part.
inline std::vector<EdgeId> path_edges(const LabelledGraph& g, const std::vector<Vertex>& path) {
  std::vector<EdgeId> out;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    auto e = g.edge_index(path[i], path[i + 1]);
    if (!e) throw Error("path part uses a non-edge");
    out.push_back(*e);
  }
  return out;
}

}  // namespace invdiam
