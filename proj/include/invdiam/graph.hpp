#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "invdiam/bits.hpp"
#include "invdiam/error.hpp"

namespace invdiam {

using Vertex = std::uint32_t;
using EdgeId = std::size_t;

struct Edge {
  Vertex u;  // u < v
  Vertex v;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Incidence {
  Vertex neighbour;
  EdgeId edge;
};

// Simple undirected graph on vertices 0..n-1. Edges are stored as (min,max)
// pairs sorted lexicographically; an edge's index is its position in that
// order. Immutable once built.
class LabelledGraph {
 public:
  LabelledGraph() = default;

  static LabelledGraph build(std::size_t n, std::vector<std::pair<Vertex, Vertex>> pairs) {
    LabelledGraph g;
    g.n_ = n;
    g.edges_.reserve(pairs.size());
    for (auto [a, b] : pairs) {
      if (a >= n || b >= n) {
        throw Error("vertex label out of range in edge (" + std::to_string(a) + "," + std::to_string(b) +
                    ") for n=" + std::to_string(n));
      }
      if (a == b) throw Error("self-loop at vertex " + std::to_string(a));
      g.edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    for (std::size_t i = 1; i < g.edges_.size(); ++i) {
      if (g.edges_[i] == g.edges_[i - 1]) {
        throw Error("duplicate edge (" + std::to_string(g.edges_[i].u) + "," + std::to_string(g.edges_[i].v) + ")");
      }
    }
    g.offsets_.assign(n + 1, 0);
    for (const Edge& e : g.edges_) {
      ++g.offsets_[e.u + 1];
      ++g.offsets_[e.v + 1];
    }
    std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
    g.incidences_.resize(2 * g.edges_.size());
    std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (EdgeId i = 0; i < g.edges_.size(); ++i) {
      const Edge& e = g.edges_[i];
      g.incidences_[fill[e.u]++] = Incidence{e.v, i};
      g.incidences_[fill[e.v]++] = Incidence{e.u, i};
    }
    for (std::size_t v = 0; v < n; ++v) {
      std::sort(g.incidences_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
                g.incidences_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]),
                [](const Incidence& a, const Incidence& b) { return a.neighbour < b.neighbour; });
    }
    return g;
  }

  std::size_t n() const noexcept { return n_; }
  std::size_t m() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId i) const { return edges_.at(i); }

  // Incident edges of v sorted by neighbour label.
  std::span<const Incidence> incidences(Vertex v) const {
    return {incidences_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  std::size_t max_degree() const {
    std::size_t d = 0;
    for (Vertex v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
  }

  std::optional<EdgeId> edge_index(Vertex a, Vertex b) const {
    if (a >= n_ || b >= n_ || a == b) return std::nullopt;
    auto inc = incidences(a);
    auto it = std::lower_bound(inc.begin(), inc.end(), b,
                               [](const Incidence& x, Vertex key) { return x.neighbour < key; });
    if (it != inc.end() && it->neighbour == b) return it->edge;
    return std::nullopt;
  }
  bool adjacent(Vertex a, Vertex b) const { return edge_index(a, b).has_value(); }

  std::vector<std::pair<Vertex, Vertex>> edge_pairs() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(edges_.size());
    for (const Edge& e : edges_) out.emplace_back(e.u, e.v);
    return out;
  }

  EdgeMask all_edges() const { return EdgeMask::ones(m()); }
  EdgeMask no_edges() const { return EdgeMask::zeros(m()); }

  friend bool operator==(const LabelledGraph& a, const LabelledGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Incidence> incidences_;
};

inline LabelledGraph build_graph(std::size_t n, std::vector<std::pair<Vertex, Vertex>> pairs) {
  return LabelledGraph::build(n, std::move(pairs));
}

// Connected component id per vertex, numbered by smallest member.
inline std::vector<std::size_t> component_ids(const LabelledGraph& g, const EdgeMask* restrict_to = nullptr) {
  constexpr auto kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> comp(g.n(), kUnset);
  std::size_t next = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (comp[s] != kUnset) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (const Incidence& inc : g.incidences(v)) {
        if (restrict_to && !restrict_to->test(inc.edge)) continue;
        if (comp[inc.neighbour] == kUnset) {
          comp[inc.neighbour] = next;
          stack.push_back(inc.neighbour);
        }
      }
    }
    ++next;
  }
  return comp;
}

inline std::size_t component_count(const LabelledGraph& g) {
  auto c = component_ids(g);
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

inline bool is_connected(const LabelledGraph& g) { return component_count(g) <= 1; }

inline bool is_forest(const LabelledGraph& g) { return g.m() + component_count(g) == g.n(); }

inline bool is_tree(const LabelledGraph& g) { return g.n() >= 1 && is_connected(g) && g.m() + 1 == g.n(); }

// A graph carved out of a parent. Vertex and edge maps are strictly
// increasing, so orientation bits transfer unchanged in both directions.
struct Subgraph {
  LabelledGraph graph;
  std::vector<Vertex> to_parent_vertex;
  std::vector<EdgeId> to_parent_edge;
};

// Subgraph induced by the given vertex set (any order, duplicates ignored).
inline Subgraph induced_subgraph(const LabelledGraph& g, std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  std::vector<Vertex> local(g.n(), static_cast<Vertex>(-1));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= g.n()) throw Error("vertex " + std::to_string(vertices[i]) + " out of range");
    local[vertices[i]] = static_cast<Vertex>(i);
  }
  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::vector<EdgeId> emap;
  for (EdgeId i = 0; i < g.m(); ++i) {
    const Edge& e = g.edge(i);
    if (local[e.u] != static_cast<Vertex>(-1) && local[e.v] != static_cast<Vertex>(-1)) {
      pairs.emplace_back(local[e.u], local[e.v]);
      emap.push_back(i);
    }
  }
  return Subgraph{LabelledGraph::build(vertices.size(), std::move(pairs)), std::move(vertices), std::move(emap)};
}

// Spanning subgraph keeping only the edges in mask.
inline Subgraph edge_subgraph(const LabelledGraph& g, const EdgeMask& mask) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::vector<EdgeId> emap;
  mask.for_each_set([&](std::size_t i) {
    pairs.emplace_back(g.edge(i).u, g.edge(i).v);
    emap.push_back(i);
  });
  std::vector<Vertex> vmap(g.n());
  std::iota(vmap.begin(), vmap.end(), Vertex{0});
  return Subgraph{LabelledGraph::build(g.n(), std::move(pairs)), std::move(vmap), std::move(emap)};
}

// Subgraph on the non-isolated endpoints of the masked edges.
inline Subgraph compact_edge_subgraph(const LabelledGraph& g, const EdgeMask& mask) {
  std::vector<Vertex> vs;
  mask.for_each_set([&](std::size_t i) {
    vs.push_back(g.edge(i).u);
    vs.push_back(g.edge(i).v);
  });
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  std::vector<Vertex> local(g.n(), static_cast<Vertex>(-1));
  for (std::size_t i = 0; i < vs.size(); ++i) local[vs[i]] = static_cast<Vertex>(i);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::vector<EdgeId> emap;
  mask.for_each_set([&](std::size_t i) {
    pairs.emplace_back(local[g.edge(i).u], local[g.edge(i).v]);
    emap.push_back(i);
  });
  return Subgraph{LabelledGraph::build(vs.size(), std::move(pairs)), std::move(vs), std::move(emap)};
}

template <class Tag>
EdgeBits<Tag> restrict_to(const Subgraph& sub, const EdgeBits<Tag>& parent_bits) {
  EdgeBits<Tag> out(sub.graph.m());
  for (EdgeId i = 0; i < sub.to_parent_edge.size(); ++i) {
    if (parent_bits.test(sub.to_parent_edge[i])) out.set(i);
  }
  return out;
}

inline EdgeMask lift_mask(const Subgraph& sub, const EdgeMask& local, std::size_t parent_m) {
  EdgeMask out(parent_m);
  local.for_each_set([&](std::size_t i) { out.set(sub.to_parent_edge[i]); });
  return out;
}

}  // namespace invdiam
