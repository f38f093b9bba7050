#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <random>
#include <set>

#include "invdiam/decompositions.hpp"
#include "support.hpp"

using namespace invdiam;

namespace {

LabelledGraph path(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return build_graph(n, e);
}

LabelledGraph star(std::size_t leaves) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return build_graph(leaves + 1, e);
}

LabelledGraph complete(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) e.emplace_back(a, b);
  }
  return build_graph(n, e);
}

// Mixed tree families.
LabelledGraph some_tree(std::size_t n, int kind, std::mt19937_64& rng) {
  switch (kind % 3) {
    case 0:
      return testsupport::random_tree(n, rng);
    case 1:
      return testsupport::prufer_tree(n, rng);
    default:
      return testsupport::caterpillar_tree(n, rng);
  }
}

std::vector<std::size_t> induced_edges(const LabelledGraph& g, const std::vector<Vertex>& s) {
  std::set<Vertex> in(s.begin(), s.end());
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < g.m(); ++i) {
    if (in.count(g.edge(i).u) && in.count(g.edge(i).v)) out.push_back(i);
  }
  return out;
}

void check_kotzig(const LabelledGraph& g) {
  auto d = kotzig_p3(g);
  ASSERT_EQ(d.parts.size(), (g.m() + 1) / 2);
  std::vector<int> cover(g.m(), 0);
  std::size_t short_parts = 0;
  for (const auto& part : d.parts) {
    ASSERT_TRUE(part.size() == 2 || part.size() == 3);
    short_parts += part.size() == 2 ? 1 : 0;
    if (part.size() == 3) {
      ASSERT_NE(part[0], part[2]);
    }
    for (std::size_t i = 0; i + 1 < part.size(); ++i) {
      auto e = g.edge_index(part[i], part[i + 1]);
      ASSERT_TRUE(e.has_value());
      ++cover[*e];
    }
  }
  EXPECT_LE(short_parts, 1u);
  for (int c : cover) EXPECT_EQ(c, 1);
}

void check_tree4(const LabelledGraph& t) {
  auto parts = tree4_decomposition(t);
  EXPECT_LE(parts.size(), tree4_bound(t.n()));
  std::vector<int> cover(t.m(), 0);
  for (const auto& p : parts) {
    EXPECT_LE(p.size(), 4u);
    for (auto e : induced_edges(t, p)) ++cover[e];
  }
  for (int c : cover) EXPECT_EQ(c, 1);
}

void check_extract(const LabelledGraph& t, Vertex r, std::size_t p) {
  auto x = tree_extract_set(t, r, p);
  EXPECT_LE(x.x.size(), p);
  const auto inside = induced_edges(t, x.x);
  EXPECT_EQ(x.edge_count, inside.size());
  const double c = std::sqrt(2.0 + std::sqrt(2.0));
  EXPECT_GE(static_cast<double>(inside.size()), static_cast<double>(p) - c * std::sqrt(static_cast<double>(p)));
  // components of T minus the induced edges
  std::set<std::size_t> removed(inside.begin(), inside.end());
  std::vector<Vertex> parent(t.n());
  for (Vertex v = 0; v < t.n(); ++v) parent[v] = v;
  auto find = [&](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::vector<char> touched(t.n(), 0);
  for (std::size_t i = 0; i < t.m(); ++i) {
    if (removed.count(i)) continue;
    touched[t.edge(i).u] = touched[t.edge(i).v] = 1;
    parent[find(t.edge(i).u)] = find(t.edge(i).v);
  }
  for (Vertex v = 0; v < t.n(); ++v) {
    if (touched[v]) {
      EXPECT_EQ(find(v), find(r)) << "vertex " << v;
    }
  }
}

// Independent check of the witness definitions via union-find.
void check_good5(const LabelledGraph& t, const Good5Witness& w) {
  using testsupport::complement_of;
  using testsupport::induces_tree;
  if (w.kind == Good5Witness::Kind::set) {
    ASSERT_EQ(w.x1.size(), 5u);
    EXPECT_TRUE(induces_tree(t, w.x1));
    std::vector<Vertex> rest;
    for (Vertex v : w.x1) {
      if (v != w.t1) rest.push_back(v);
    }
    EXPECT_TRUE(induces_tree(t, complement_of(t.n(), rest)));
    return;
  }
  EXPECT_LE(w.x1.size(), 5u);
  EXPECT_LE(w.x2.size(), 5u);
  EXPECT_EQ(induced_edges(t, w.x1).size(), 4u);
  EXPECT_EQ(induced_edges(t, w.x2).size(), 3u);
  std::vector<Vertex> common, uni;
  std::set<Vertex> s1(w.x1.begin(), w.x1.end());
  std::set<Vertex> su(w.x1.begin(), w.x1.end());
  for (Vertex v : w.x2) {
    if (s1.count(v)) common.push_back(v);
    su.insert(v);
  }
  EXPECT_TRUE(induced_edges(t, common).empty());
  std::vector<Vertex> removed;
  for (Vertex v : su) {
    if (v != w.t1 && v != w.t2) removed.push_back(v);
  }
  auto rest = complement_of(t.n(), removed);
  EXPECT_TRUE(induces_tree(t, rest));
  // the two inversions cover exactly the edges leaving the remaining tree
  EXPECT_EQ(removed.size(), 7u);
  auto rest_edges = induced_edges(t, rest);
  std::set<std::size_t> keep(rest_edges.begin(), rest_edges.end());
  for (auto e : induced_edges(t, w.x1)) EXPECT_FALSE(keep.count(e));
  for (auto e : induced_edges(t, w.x2)) EXPECT_FALSE(keep.count(e));
}

}  // namespace

TEST(Kotzig, Examples) {
  auto d = kotzig_p3(path(5));
  ASSERT_EQ(d.parts.size(), 2u);
  EXPECT_EQ(d.parts[0].size(), 3u);
  EXPECT_EQ(d.parts[1].size(), 3u);
  d = kotzig_p3(complete(3));
  ASSERT_EQ(d.parts.size(), 2u);
  EXPECT_EQ(d.parts[0].size() + d.parts[1].size(), 5u);
  EXPECT_EQ(kotzig_p3(path(2)).parts.size(), 1u);
  EXPECT_THROW(kotzig_p3(build_graph(4, {{0, 1}, {2, 3}})), Error);
  EXPECT_TRUE(kotzig_p3(build_graph(1, {})).parts.empty());
}

TEST(Kotzig, PartCountOnConnectedGraphs) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 2 + static_cast<std::size_t>(i % 25);
    auto g = testsupport::random_connected(n, static_cast<std::size_t>(rng() % (2 * n)), rng);
    check_kotzig(g);
  }
  check_kotzig(complete(7));
  check_kotzig(complete(8));
}

TEST(StrongColouring, Examples) {
  auto m = build_graph(8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}});
  EXPECT_EQ(strong_edge_colouring(m).classes.size(), 1u);
  EXPECT_EQ(strong_edge_colouring(path(4)).classes.size(), 3u);
  EXPECT_EQ(strong_edge_colouring(complete(3)).classes.size(), 3u);
  // no two edges of P4 can share a class
  auto p4 = path(4);
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = a + 1; b < 3; ++b) EXPECT_FALSE(is_induced_matching(p4, {a, b}));
  }
}

TEST(StrongColouring, ClassesAreInducedMatchings) {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 200; ++i) {
    auto g = testsupport::random_graph(4 + static_cast<std::size_t>(i % 20), 0.25, rng);
    auto c = strong_edge_colouring(g);
    const std::size_t delta = g.max_degree();
    EXPECT_LE(c.classes.size(), std::max<std::size_t>(2 * delta * delta, g.m() ? 1 : 0));
    std::vector<int> seen(g.m(), 0);
    for (const auto& cls : c.classes) {
      EXPECT_TRUE(testsupport::induced_matching(g, cls));
      for (auto e : cls) ++seen[e];
    }
    for (int s : seen) EXPECT_EQ(s, 1);
  }
}

TEST(TriangleTransversal, Examples) {
  EXPECT_TRUE(min_triangle_transversal(path(5)).empty());
  EXPECT_EQ(min_triangle_transversal(complete(3)).size(), 1u);
  for (bool exact : {false, true}) {
    auto k4 = complete(4);
    auto f = min_triangle_transversal(k4, {exact, 40});
    ASSERT_EQ(f.size(), 2u);
    std::set<Vertex> ends{k4.edge(f[0]).u, k4.edge(f[0]).v, k4.edge(f[1]).u, k4.edge(f[1]).v};
    EXPECT_EQ(ends.size(), 4u);
  }
  EXPECT_THROW(min_triangle_transversal(complete(10), {true, 40}), BudgetExceeded);
}

TEST(TriangleTransversal, Properties) {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 150; ++i) {
    const std::size_t n = 4 + static_cast<std::size_t>(i % 8);
    auto g = testsupport::random_connected(n, static_cast<std::size_t>(rng() % (2 * n)), rng);
    auto f = min_triangle_transversal(g);
    std::vector<char> removed(g.m(), 0);
    for (auto e : f) removed[e] = 1;
    EXPECT_TRUE(is_triangle_free_after(g, removed));
    EXPECT_LE(f.size(), g.m() / 2);
    for (auto e : f) {
      removed[e] = 0;
      EXPECT_FALSE(is_triangle_free_after(g, removed));
      removed[e] = 1;
    }
    EdgeMask keep = g.all_edges();
    for (auto e : f) keep.flip(e);
    EXPECT_EQ(component_count(edge_subgraph(g, keep).graph), 1u);

    if (g.m() <= 14) {
      // brute force minimum over all edge subsets
      std::size_t best = g.m();
      for (std::uint32_t s = 0; s < (1u << g.m()); ++s) {
        const auto k = static_cast<std::size_t>(__builtin_popcount(s));
        if (k >= best) continue;
        std::vector<char> r(g.m(), 0);
        for (std::size_t b = 0; b < g.m(); ++b) r[b] = s >> b & 1;
        if (is_triangle_free_after(g, r)) best = k;
      }
      auto exact = min_triangle_transversal(g, {true, 40});
      EXPECT_EQ(exact.size(), best);
      EXPECT_LE(exact.size(), f.size());
    }
  }
}

TEST(TrianglePacking, Examples) {
  EXPECT_TRUE(greedy_triangle_packing(path(6)).empty());
  EXPECT_EQ(greedy_triangle_packing(complete(4)).size(), 1u);
  auto two = build_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  EXPECT_EQ(greedy_triangle_packing(two).size(), 2u);
  EXPECT_EQ(greedy_triangle_packing(complete(4), {true, 40}).size(), 1u);
}

TEST(TrianglePacking, MaximalAndExact) {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 100; ++i) {
    auto g = testsupport::random_graph(7, 0.55, rng);
    auto greedy = greedy_triangle_packing(g);
    std::vector<char> used(g.m(), 0);
    for (const auto& t : greedy) {
      for (auto e : triangle_edges(g, t)) {
        EXPECT_FALSE(used[e]);
        used[e] = 1;
      }
    }
    for (const auto& t : triangles(g)) {
      auto es = triangle_edges(g, t);
      EXPECT_TRUE(used[es[0]] || used[es[1]] || used[es[2]]);
    }
    // brute force maximum over subsets of triangles
    auto tris = triangles(g);
    std::size_t best = 0;
    if (tris.size() <= 16) {
      for (std::uint32_t s = 0; s < (1u << tris.size()); ++s) {
        std::vector<char> u(g.m(), 0);
        bool ok = true;
        for (std::size_t b = 0; b < tris.size() && ok; ++b) {
          if (!(s >> b & 1)) continue;
          for (auto e : triangle_edges(g, tris[b])) {
            ok = ok && !u[e];
            u[e] = 1;
          }
        }
        if (ok) best = std::max<std::size_t>(best, __builtin_popcount(s));
      }
      EXPECT_EQ(greedy_triangle_packing(g, {true, 40}).size(), best);
    }
  }
}

TEST(InducedMatching, Examples) {
  auto two = build_graph(4, {{0, 1}, {2, 3}});
  auto m = find_induced_matching(two, 2);
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(m->size(), 2u);
  EXPECT_FALSE(find_induced_matching(complete(4), 2).has_value());
  auto p5 = path(5);
  m = find_induced_matching(p5, 2);
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(*m, (std::vector<EdgeId>{0, 3}));
}

TEST(InducedMatching, AgreesWithBruteForce) {
  std::mt19937_64 rng(59);
  for (int i = 0; i < 120; ++i) {
    auto g = testsupport::random_graph(9, 0.3, rng);
    if (g.m() > 16) continue;
    for (std::size_t q = 1; q <= 4; ++q) {
      bool exists = false;
      for (std::uint32_t s = 0; s < (1u << g.m()) && !exists; ++s) {
        if (static_cast<std::size_t>(__builtin_popcount(s)) != q) continue;
        std::vector<std::size_t> es;
        for (std::size_t b = 0; b < g.m(); ++b) {
          if (s >> b & 1) es.push_back(b);
        }
        exists = testsupport::induced_matching(g, es);
      }
      auto found = find_induced_matching(g, q);
      EXPECT_EQ(found.has_value(), exists);
      if (found) {
        EXPECT_EQ(found->size(), q);
        EXPECT_TRUE(testsupport::induced_matching(g, *found));
      }
    }
  }
}

TEST(Degeneracy, Examples) {
  std::mt19937_64 rng(61);
  EXPECT_EQ(degeneracy_ordering(testsupport::random_tree(12, rng)).k, 1u);
  EXPECT_EQ(degeneracy_ordering(complete(4)).k, 3u);
  auto fan = build_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}});
  EXPECT_EQ(degeneracy_ordering(fan).k, 2u);
}

TEST(Degeneracy, EqualsMaxMinDegree) {
  std::mt19937_64 rng(67);
  for (int i = 0; i < 60; ++i) {
    auto g = testsupport::random_graph(9, 0.45, rng);
    auto d = degeneracy_ordering(g);
    std::size_t best = 0;
    for (std::uint32_t s = 1; s < (1u << g.n()); ++s) {
      std::size_t mn = g.n();
      for (Vertex v = 0; v < g.n(); ++v) {
        if (!(s >> v & 1)) continue;
        std::size_t dv = 0;
        for (const auto& inc : g.incidences(v)) dv += s >> inc.neighbour & 1;
        mn = std::min(mn, dv);
      }
      best = std::max(best, mn);
    }
    EXPECT_EQ(d.k, best);
    for (Vertex v = 0; v < g.n(); ++v) EXPECT_LE(forward_neighbours(g, d, v).size(), d.k);
  }
}

TEST(Tree4, Examples) {
  EXPECT_EQ(tree4_decomposition(path(4)).size(), 1u);
  EXPECT_EQ(tree4_decomposition(star(7)).size(), 3u);
  check_tree4(star(7));
  // centre 0, four branches y_i - z_i
  auto spider = build_graph(9, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {2, 6}, {3, 7}, {4, 8}});
  EXPECT_LE(tree4_decomposition(spider).size(), 3u);
  check_tree4(spider);
  EXPECT_TRUE(tree4_decomposition(build_graph(1, {})).empty());
  EXPECT_THROW(tree4_decomposition(complete(3)), Error);
}

TEST(Tree4, RandomTreesSatisfyPredicates) {
  std::mt19937_64 rng(71);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 1 + static_cast<std::size_t>(rng() % 60);
    check_tree4(some_tree(n, i, rng));
  }
  for (std::size_t n = 1; n <= 40; ++n) check_tree4(path(n));
}

TEST(Good5, Examples) {
  auto w = find_good5(path(5));
  EXPECT_EQ(w.kind, Good5Witness::Kind::set);
  EXPECT_EQ(w.x1, (std::vector<Vertex>{0, 1, 2, 3, 4}));
  EXPECT_TRUE(w.t1 == 0 || w.t1 == 4);
  w = find_good5(star(4));
  EXPECT_EQ(w.kind, Good5Witness::Kind::set);
  EXPECT_EQ(w.t1, 0u);
  auto branch = build_graph(8, {{0, 1}, {1, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 6}, {3, 7}});
  w = find_good5(branch);
  EXPECT_TRUE(is_good5_witness(branch, w));
  check_good5(branch, w);
  EXPECT_THROW(find_good5(path(4)), Error);
}

TEST(Good5, RandomTreesSatisfyPredicates) {
  std::mt19937_64 rng(73);
  std::map<std::string, int> rules;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 5 + static_cast<std::size_t>(rng() % 56);
    auto t = some_tree(n, i, rng);
    auto w = find_good5(t);
    ++rules[w.rule];
    EXPECT_TRUE(is_usable_good5_witness(t, w));
    check_good5(t, w);
  }
  // the case analysis, not the exhaustive fallback, should handle these
  EXPECT_EQ(rules.count("search-pair"), 0u);
  for (const auto& [rule, count] : rules) RecordProperty(rule, count);
}

TEST(TreeExtract, Examples) {
  auto p6 = path(6);
  auto x = tree_extract_set(p6, 2, 6);
  EXPECT_EQ(x.x.size(), 6u);
  EXPECT_EQ(x.edge_count, 5u);
  x = tree_extract_set(star(5), 0, 4);
  EXPECT_EQ(x.x.size(), 4u);
  EXPECT_TRUE(std::count(x.x.begin(), x.x.end(), 0u));
  EXPECT_EQ(x.edge_count, 3u);
  check_extract(path(10), 0, 6);
  x = tree_extract_set(path(10), 0, 6);
  EXPECT_GE(x.edge_count, 2u);
  EXPECT_THROW(tree_extract_set(path(3), 0, 4), Error);
  EXPECT_THROW(tree_extract_set(path(8), 0, 3), Error);
}

TEST(TreeExtract, RandomTreesSatisfyPredicates) {
  std::mt19937_64 rng(79);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t p = 4 + static_cast<std::size_t>(rng() % 20);
    const std::size_t n = p + static_cast<std::size_t>(rng() % 60);
    auto t = some_tree(n, i, rng);
    check_extract(t, static_cast<Vertex>(rng() % n), p);
  }
}

TEST(Good5, ThreeLeavesBesideThePath) {
  // spine 0..6, vertex 7 hangs off 3 and carries leaves 8, 9, 10
  auto t = build_graph(11, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {3, 7}, {7, 8}, {7, 9}, {7, 10}});
  auto w = find_good5(t);
  EXPECT_EQ(w.rule, "w3-three-leaves");
  EXPECT_EQ(w.x1, (std::vector<Vertex>{3, 7, 8, 9, 10}));
  EXPECT_EQ(w.t1, 3u);
  check_good5(t, w);
}
