#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "invdiam/error.hpp"
#include "invdiam/graph.hpp"

namespace invdiam::families {

using Pairs = std::vector<std::pair<Vertex, Vertex>>;

// k disjoint edges {2i, 2i+1}.
inline LabelledGraph matching(std::size_t k) {
  Pairs e;
  for (Vertex i = 0; i < k; ++i) e.emplace_back(2 * i, 2 * i + 1);
  return build_graph(2 * k, e);
}

inline LabelledGraph complete(std::size_t n) {
  Pairs e;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) e.emplace_back(a, b);
  }
  return build_graph(n, e);
}

inline LabelledGraph path(std::size_t n) {
  Pairs e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return build_graph(n, e);
}

// K_{1,k} with centre 0.
inline LabelledGraph star(std::size_t k) {
  Pairs e;
  for (Vertex i = 1; i <= k; ++i) e.emplace_back(0, i);
  return build_graph(k + 1, e);
}

inline LabelledGraph cycle(std::size_t n) {
  if (n < 3) throw Error("cycle needs n >= 3");
  Pairs e;
  for (Vertex i = 0; i < n; ++i) e.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  return build_graph(n, e);
}

// Hub 0 joined to the cycle 1..n-1.
inline LabelledGraph wheel(std::size_t n) {
  if (n < 4) throw Error("wheel needs n >= 4");
  Pairs e;
  for (Vertex i = 1; i < n; ++i) {
    e.emplace_back(0, i);
    e.emplace_back(i, i + 1 < n ? i + 1 : 1);
  }
  return build_graph(n, e);
}

// Centre 0, legs y_i = 1..s+eps, pendants z_i = s+eps+i attached to y_i for
// i <= s, where s = floor((n-1)/2) and eps = n-1-2s.
inline LabelledGraph spider4(std::size_t n) {
  if (n < 1) throw Error("spider4 needs n >= 1");
  const std::size_t s = (n - 1) / 2;
  const std::size_t eps = n - 1 - 2 * s;
  Pairs e;
  for (Vertex i = 1; i <= s + eps; ++i) e.emplace_back(0, i);
  for (Vertex i = 1; i <= s; ++i) e.emplace_back(i, static_cast<Vertex>(s + eps + i));
  return build_graph(n, e);
}

// Root 0 and q branches; branch j uses 1+7j .. 7+7j as x, y1, y2, z1..z4
// with edges r-x, x-y1, x-y2, y1-z1, y1-z2, y2-z3, y2-z4.
inline LabelledGraph spider5(std::size_t q) {
  Pairs e;
  for (Vertex j = 0; j < q; ++j) {
    const Vertex x = 1 + 7 * j, y1 = x + 1, y2 = x + 2;
    e.emplace_back(0, x);
    e.emplace_back(x, y1);
    e.emplace_back(x, y2);
    e.emplace_back(y1, x + 3);
    e.emplace_back(y1, x + 4);
    e.emplace_back(y2, x + 5);
    e.emplace_back(y2, x + 6);
  }
  return build_graph(7 * q + 1, e);
}

// Plane triangulation on 4q vertices with every degree odd: K4, then
// repeatedly a K4 placed inside a face u1u2u3 with outer face v1v2v3 and
// edges u_i v_j for i != j.
inline LabelledGraph odd_triangulation(std::size_t q) {
  if (q < 1) throw Error("odd_triangulation needs q >= 1");
  Pairs e{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  std::array<Vertex, 3> face{0, 1, 3};
  for (Vertex b = 4; b < 4 * q; b += 4) {
    const std::array<Vertex, 3> v{b, static_cast<Vertex>(b + 1), static_cast<Vertex>(b + 2)};
    const Vertex centre = b + 3;
    for (int i = 0; i < 3; ++i) {
      e.emplace_back(v[i], centre);
      e.emplace_back(v[i], v[(i + 1) % 3]);
      for (int j = 0; j < 3; ++j) {
        if (i != j) e.emplace_back(face[i], v[j]);
      }
    }
    face = {v[0], v[1], centre};
  }
  return build_graph(4 * q, e);
}

// K2 on {0,1} plus n-2 vertices joined to both ends.
inline LabelledGraph g2(std::size_t n) {
  if (n < 2) throw Error("g2 needs n >= 2");
  Pairs e{{0, 1}};
  for (Vertex x = 2; x < n; ++x) {
    e.emplace_back(0, x);
    e.emplace_back(1, x);
  }
  return build_graph(n, e);
}

// Cycle 0..n-3 and two non-adjacent hubs n-2, n-1 joined to the whole cycle.
inline LabelledGraph double_wheel(std::size_t n) {
  if (n < 5) throw Error("double_wheel needs n >= 5");
  const Vertex c = static_cast<Vertex>(n - 2);
  Pairs e;
  for (Vertex i = 0; i < c; ++i) {
    e.emplace_back(i, (i + 1) % c);
    e.emplace_back(i, c);
    e.emplace_back(i, c + 1);
  }
  return build_graph(n, e);
}

// Poles 0 and 11, upper ring 1..5, lower ring 6..10.
inline LabelledGraph icosahedron() {
  Pairs e;
  for (Vertex i = 0; i < 5; ++i) {
    const Vertex up = 1 + i, up_next = 1 + (i + 1) % 5;
    const Vertex lo = 6 + i, lo_next = 6 + (i + 1) % 5;
    e.emplace_back(0, up);
    e.emplace_back(up, up_next);
    e.emplace_back(11, lo);
    e.emplace_back(lo, lo_next);
    e.emplace_back(up, lo);
    e.emplace_back(up, lo_next);
  }
  return build_graph(12, e);
}

// Uniform labelled tree from a random Pruefer sequence.
inline LabelledGraph random_tree(std::size_t n, std::mt19937_64& rng) {
  if (n <= 1) return build_graph(n, {});
  if (n == 2) return build_graph(2, {{0, 1}});
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  std::vector<Vertex> seq(n - 2);
  for (auto& s : seq) s = pick(rng);
  std::vector<std::size_t> deg(n, 1);
  for (Vertex s : seq) ++deg[s];
  std::set<Vertex> leaves;
  for (Vertex v = 0; v < n; ++v) {
    if (deg[v] == 1) leaves.insert(v);
  }
  Pairs e;
  for (Vertex s : seq) {
    const Vertex leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    e.emplace_back(leaf, s);
    if (--deg[s] == 1) leaves.insert(s);
  }
  e.emplace_back(*leaves.begin(), *std::next(leaves.begin()));
  return build_graph(n, e);
}

// K4, then each new vertex splits a uniformly chosen face into three.
inline LabelledGraph random_planar_triangulation(std::size_t n, std::mt19937_64& rng) {
  if (n < 3) throw Error("random_planar_triangulation needs n >= 3");
  if (n == 3) return complete(3);
  Pairs e{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  std::vector<std::array<Vertex, 3>> faces{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  for (Vertex v = 4; v < n; ++v) {
    std::uniform_int_distribution<std::size_t> pick(0, faces.size() - 1);
    const std::size_t i = pick(rng);
    const auto f = faces[i];
    for (Vertex u : f) e.emplace_back(u, v);
    faces[i] = {f[0], f[1], v};
    faces.push_back({f[0], f[2], v});
    faces.push_back({f[1], f[2], v});
  }
  return build_graph(n, e);
}

// Random spanning tree plus `extra` further random edges (when available).
inline LabelledGraph random_connected(std::size_t n, std::size_t extra, std::mt19937_64& rng) {
  auto t = random_tree(n, rng);
  std::set<std::pair<Vertex, Vertex>> have;
  for (const Edge& ed : t.edges()) have.insert({ed.u, ed.v});
  const std::size_t cap = n * (n - 1) / 2;
  std::uniform_int_distribution<Vertex> pick(0, n == 0 ? 0 : static_cast<Vertex>(n - 1));
  for (std::size_t added = 0; added < extra && have.size() < cap;) {
    Vertex a = pick(rng), b = pick(rng);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    if (have.insert({a, b}).second) ++added;
  }
  return build_graph(n, Pairs(have.begin(), have.end()));
}

inline const std::vector<std::string>& names() {
  static const std::vector<std::string> all{
      "matching", "complete", "path", "star", "cycle", "wheel", "spider4", "spider5", "odd_triangulation",
      "g2", "double_wheel", "icosahedron", "random_tree", "random_planar_triangulation", "random_connected"};
  return all;
}

// Families by name. `size` is k for matching and star, q for spider5 and
// odd_triangulation, n otherwise (ignored for the icosahedron); `extra`
// only matters for random_connected.
inline LabelledGraph generate(const std::string& family, std::size_t size, std::uint64_t seed = 1,
                              std::size_t extra = 0) {
  std::mt19937_64 rng(seed);
  if (family == "matching") return matching(size);
  if (family == "complete") return complete(size);
  if (family == "path") return path(size);
  if (family == "star") return star(size);
  if (family == "cycle") return cycle(size);
  if (family == "wheel") return wheel(size);
  if (family == "spider4") return spider4(size);
  if (family == "spider5") return spider5(size);
  if (family == "odd_triangulation") return odd_triangulation(size);
  if (family == "g2") return g2(size);
  if (family == "double_wheel") return double_wheel(size);
  if (family == "icosahedron") return icosahedron();
  if (family == "random_tree") return random_tree(size, rng);
  if (family == "random_planar_triangulation") return random_planar_triangulation(size, rng);
  if (family == "random_connected") return random_connected(size, extra, rng);
  throw Error("unknown family '" + family + "'");
}

inline bool is_planar_family(const std::string& family) {
  return family == "path" || family == "star" || family == "cycle" || family == "wheel" || family == "spider4" ||
         family == "spider5" || family == "odd_triangulation" || family == "g2" || family == "double_wheel" ||
         family == "icosahedron" || family == "random_tree" || family == "random_planar_triangulation" ||
         family == "matching";
}

}  // namespace invdiam::families
