#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "invdiam/decompositions/tree_view.hpp"
#include "invdiam/graph.hpp"

namespace invdiam {

namespace detail {

struct Tree4Step {
  std::vector<std::vector<Vertex>> parts;
  std::vector<Vertex> removed;
};

// Cases at the v1 end of the path; nullopt when d(v2)=2, d(v3)=3 and the
// third neighbour of v3 has degree 2.
inline std::optional<Tree4Step> tree4_end(const TreeView& t, const std::vector<Vertex>& path) {
  const Vertex v1 = path[0], v2 = path[1], v3 = path[2];

  // v2 with leaves hanging off it and `up` as its only non-leaf neighbour
  auto around = [&](Vertex c, Vertex up) -> std::optional<Tree4Step> {
    auto leaves = t.neighbours_except(c, {up});
    if (leaves.size() >= 3) {
      return Tree4Step{{{leaves[0], leaves[1], leaves[2], c}}, {leaves[0], leaves[1], leaves[2]}};
    }
    if (leaves.size() == 2) return Tree4Step{{{leaves[0], c, leaves[1], up}}, {leaves[0], c, leaves[1]}};
    return std::nullopt;
  };
  if (auto s = around(v2, v3)) return s;

  const Vertex v4 = path[3];
  if (t.degree(v3) == 2) return Tree4Step{{{v1, v2, v3, v4}}, {v1, v2, v3}};
  const auto others = t.neighbours_except(v3, {v2, v4});
  for (Vertex w : others) {
    if (t.degree(w) >= 3) return around(w, v3);
  }
  for (Vertex w : others) {
    if (t.degree(w) == 1) return Tree4Step{{{v1, v2, v3, w}}, {v1, v2, w}};
  }
  auto far = [&](Vertex w) { return t.neighbours_except(w, {v3})[0]; };
  if (t.degree(v3) >= 5) {
    const Vertex w2 = others[0], x2 = others[1], y2 = others[2];
    const Vertex w1 = far(w2), x1 = far(x2), y1 = far(y2);
    return Tree4Step{{{v1, v2, v3, w2}, {x1, x2, v3, y2}, {w1, w2, y1, y2}}, {v1, w1, x1, y1, v2, w2, x2, y2}};
  }
  if (t.degree(v3) == 4) {
    const Vertex w2 = others[0], x2 = others[1];
    const Vertex w1 = far(w2), x1 = far(x2);
    const Vertex vt = path.back(), vt1 = path[path.size() - 2];
    return Tree4Step{{{v1, v2, v3, w2}, {x1, x2, v3, v4}, {w1, w2, vt1, vt}}, {v1, w1, x1, v2, w2, x2, v3, vt}};
  }
  return std::nullopt;
}

inline Tree4Step tree4_step(const TreeView& t) {
  auto path = t.longest_path();
  if (auto s = tree4_end(t, path)) return *s;
  std::vector<Vertex> rev(path.rbegin(), path.rend());
  if (auto s = tree4_end(t, rev)) return *s;

  // both ends: v2 of degree 2 hanging off a degree-3 vertex with a second
  // pendant path of length 2
  const std::size_t len = path.size();
  const Vertex v1 = path[0], v2 = path[1], v3 = path[2];
  const Vertex w2 = t.neighbours_except(v3, {v2, path[3]})[0];
  const Vertex w1 = t.neighbours_except(w2, {v3})[0];
  if (len == 5) {
    const Vertex v4 = path[3], v5 = path[4];
    return Tree4Step{{{v1, v2, v3, v4}, {v3, w2}, {w1, w2, v4, v5}}, t.vertices()};
  }
  const Vertex vt = path[len - 1], vt1 = path[len - 2], vt2 = path[len - 3];
  const Vertex wt1 = t.neighbours_except(vt2, {vt1, path[len - 4]})[0];
  const Vertex wt = t.neighbours_except(wt1, {vt2})[0];
  return Tree4Step{{{v1, v2, v3, w2}, {vt, vt1, vt2, wt1}, {w1, w2, wt1, wt}}, {v1, w1, v2, w2, vt, wt, vt1, wt1}};
}

}  // namespace detail

// Vertex sets of order at most 4 whose induced subgraphs are edge-disjoint
// and cover every edge; at most ceil(3(n-1)/8) of them.
inline std::vector<std::vector<Vertex>> tree4_decomposition(const LabelledGraph& t) {
  require_tree(t, "tree4_decomposition");
  std::vector<std::vector<Vertex>> parts;
  TreeView view(t);
  while (view.size() > 4) {
    auto step = detail::tree4_step(view);
    for (auto& p : step.parts) {
      std::sort(p.begin(), p.end());
      parts.push_back(std::move(p));
    }
    for (Vertex v : step.removed) view.remove(v);
  }
  if (view.size() >= 2) parts.push_back(view.vertices());
  return parts;
}

inline std::size_t tree4_bound(std::size_t n) { return n == 0 ? 0 : (3 * (n - 1) + 7) / 8; }

}  // namespace invdiam
