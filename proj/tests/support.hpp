#pragma once

// Independent reference implementations used only by the tests.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "invdiam/graph.hpp"
#include "invdiam/inversion.hpp"

namespace testsupport {

using invdiam::LabelledGraph;
using invdiam::Vertex;

// Masks of every subset of size <= p, straight from the definition.
inline std::vector<std::uint64_t> naive_generators(const LabelledGraph& g, std::size_t p) {
  std::set<std::uint64_t> out;
  const std::size_t n = g.n();
  for (std::uint64_t sub = 1; sub < (std::uint64_t{1} << n); ++sub) {
    if (static_cast<std::size_t>(__builtin_popcountll(sub)) > p) continue;
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < g.m(); ++i) {
      const auto& e = g.edge(i);
      if ((sub >> e.u & 1) && (sub >> e.v & 1)) mask |= std::uint64_t{1} << i;
    }
    if (mask) out.insert(mask);
  }
  return {out.begin(), out.end()};
}

// Plain BFS distances from one orientation (as a number) to all others.
inline std::vector<int> naive_distances(const LabelledGraph& g, std::size_t p, std::uint64_t source) {
  const auto gens = naive_generators(g, p);
  std::vector<int> dist(std::size_t{1} << g.m(), -1);
  std::deque<std::uint64_t> q{source};
  dist[source] = 0;
  while (!q.empty()) {
    const auto s = q.front();
    q.pop_front();
    for (auto x : gens) {
      if (dist[s ^ x] < 0) {
        dist[s ^ x] = dist[s] + 1;
        q.push_back(s ^ x);
      }
    }
  }
  return dist;
}

inline int naive_distance(const LabelledGraph& g, std::size_t p, std::uint64_t a, std::uint64_t b) {
  return naive_distances(g, p, a)[b];
}

// Largest distance over every ordered pair.
inline int naive_diameter_all_pairs(const LabelledGraph& g, std::size_t p) {
  int best = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.m()); ++s) {
    for (int d : naive_distances(g, p, s)) best = std::max(best, d);
  }
  return best;
}

inline LabelledGraph random_tree(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (std::size_t v = 1; v < n; ++v) {
    std::uniform_int_distribution<std::size_t> d(0, v - 1);
    e.emplace_back(static_cast<Vertex>(d(rng)), static_cast<Vertex>(v));
  }
  // shuffle labels so the tree is not always rooted at 0 with increasing parents
  std::vector<Vertex> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<Vertex>(i);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (auto& [a, b] : e) {
    a = perm[a];
    b = perm[b];
  }
  return LabelledGraph::build(n, e);
}

inline LabelledGraph random_graph(std::size_t n, double prob, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(prob);
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (coin(rng)) e.emplace_back(a, b);
    }
  }
  return LabelledGraph::build(n, e);
}

inline LabelledGraph random_connected(std::size_t n, std::size_t extra, std::mt19937_64& rng) {
  auto t = random_tree(n, rng);
  auto e = t.edge_pairs();
  std::set<std::pair<Vertex, Vertex>> have(e.begin(), e.end());
  std::uniform_int_distribution<Vertex> d(0, static_cast<Vertex>(n - 1));
  std::size_t tries = 0;
  while (extra > 0 && tries < 100 * (extra + 1)) {
    ++tries;
    Vertex a = d(rng), b = d(rng);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    if (have.insert({a, b}).second) {
      e.emplace_back(a, b);
      --extra;
    }
  }
  return LabelledGraph::build(n, e);
}

inline invdiam::Orientation random_orientation(std::size_t m, std::mt19937_64& rng) {
  invdiam::Orientation o(m);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t i = 0; i < m; ++i) o.set(i, coin(rng));
  return o;
}

// Edges of g inside x (independent of inversion_mask).
inline std::size_t spanned_edges(const LabelledGraph& g, const std::vector<Vertex>& x) {
  std::set<Vertex> s(x.begin(), x.end());
  std::size_t c = 0;
  for (const auto& e : g.edges()) c += (s.count(e.u) && s.count(e.v)) ? 1 : 0;
  return c;
}

inline bool induced_matching(const LabelledGraph& g, const std::vector<std::size_t>& edges) {
  std::set<Vertex> ends;
  for (auto i : edges) {
    if (!ends.insert(g.edge(i).u).second || !ends.insert(g.edge(i).v).second) return false;
  }
  std::set<std::size_t> inside(edges.begin(), edges.end());
  for (std::size_t i = 0; i < g.m(); ++i) {
    if (!inside.count(i) && ends.count(g.edge(i).u) && ends.count(g.edge(i).v)) return false;
  }
  return true;
}

// Uniform labelled tree from a random Pruefer sequence.
inline LabelledGraph prufer_tree(std::size_t n, std::mt19937_64& rng) {
  if (n <= 1) return LabelledGraph::build(n, {});
  if (n == 2) return LabelledGraph::build(2, {{0, 1}});
  std::uniform_int_distribution<Vertex> d(0, static_cast<Vertex>(n - 1));
  std::vector<Vertex> seq(n - 2);
  for (auto& x : seq) x = d(rng);
  std::vector<std::size_t> deg(n, 1);
  for (auto x : seq) ++deg[x];
  std::set<Vertex> leaves;
  for (Vertex v = 0; v < n; ++v) {
    if (deg[v] == 1) leaves.insert(v);
  }
  std::vector<std::pair<Vertex, Vertex>> e;
  for (auto x : seq) {
    Vertex leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    e.emplace_back(leaf, x);
    if (--deg[x] == 1) leaves.insert(x);
  }
  Vertex a = *leaves.begin();
  Vertex b = *std::next(leaves.begin());
  e.emplace_back(a, b);
  return LabelledGraph::build(n, e);
}

// Long spine with short random branches; exercises the deep path cases.
inline LabelledGraph caterpillar_tree(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::pair<Vertex, Vertex>> e;
  std::uniform_int_distribution<int> coin(0, 3);
  for (Vertex v = 1; v < n; ++v) {
    std::uniform_int_distribution<Vertex> back(v >= 3 ? v - 3 : 0, v - 1);
    e.emplace_back(coin(rng) == 0 ? v - 1 : back(rng), v);
  }
  std::vector<Vertex> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<Vertex>(i);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (auto& [a, b] : e) {
    a = perm[a];
    b = perm[b];
  }
  return LabelledGraph::build(n, e);
}

// Union-find over a vertex subset: is the subgraph induced by s a tree?
inline bool induces_tree(const LabelledGraph& g, const std::vector<Vertex>& s) {
  if (s.empty()) return false;
  std::set<Vertex> in(s.begin(), s.end());
  std::vector<Vertex> parent(g.n());
  for (Vertex v = 0; v < g.n(); ++v) parent[v] = v;
  auto find = [&](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::size_t edges = 0;
  for (const auto& e : g.edges()) {
    if (in.count(e.u) && in.count(e.v)) {
      ++edges;
      Vertex a = find(e.u), b = find(e.v);
      if (a == b) return false;
      parent[a] = b;
    }
  }
  return edges + 1 == in.size();
}

inline std::vector<Vertex> complement_of(std::size_t n, const std::vector<Vertex>& s) {
  std::set<Vertex> in(s.begin(), s.end());
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v) {
    if (!in.count(v)) out.push_back(v);
  }
  return out;
}

}  // namespace testsupport
