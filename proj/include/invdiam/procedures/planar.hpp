#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "invdiam/decompositions/triangles.hpp"
#include "invdiam/procedures/common.hpp"
#include "invdiam/procedures/uppergen.hpp"

namespace invdiam {

inline bool is_planar(const LabelledGraph& g) {
  if (g.n() < 5 || g.m() < 9) return true;
  if (g.n() >= 3 && g.m() > 3 * g.n() - 6) return false;
  boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS> bg(g.n());
  for (const Edge& e : g.edges()) boost::add_edge(e.u, e.v, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

struct PlanarSmallCounts {
  std::size_t triangles = 0;
  std::size_t squares = 0;
  std::size_t cherries = 0;
  std::size_t pairs = 0;
  std::size_t singles = 0;
};

inline std::size_t planar_small_bound(std::size_t n, std::size_t p) {
  if (p == 3) return 11 * n >= 16 ? (11 * n - 16) / 6 : 0;
  return (4 * n + 10) / 3;
}

// Small p on planar graphs: all-disagreeing triangles, then 4-cycles (two
// inversions), then non-adjacent disagreeing pairs of edges (a cherry, or
// for p >= 4 two edges with no edge between them), then single edges.
inline PlannerReport plan_planar_small(const LabelledGraph& g, std::size_t p, const Orientation& o1,
                                       const Orientation& o2, PlanarSmallCounts* counts_out = nullptr) {
  check_instance(g, p, o1, o2, "planar-small");
  if (p < 3) throw Error("planar-small: needs p >= 3");
  if (!is_planar(g)) throw Error("planar-small: graph is not planar");
  PlanState st(g, o1, o2);
  PlanarSmallCounts c;

  for (const Triangle& t : triangles(g)) {
    auto es = triangle_edges(g, t);
    if (st.differs(es[0]) && st.differs(es[1]) && st.differs(es[2])) {
      st.invert({t[0], t[1], t[2]});
      ++c.triangles;
    }
  }

  auto diff_nbrs = [&](Vertex v) {
    std::vector<Vertex> out;
    for (const Incidence& inc : g.incidences(v)) {
      if (st.differs(inc.edge)) out.push_back(inc.neighbour);
    }
    return out;
  };

  for (bool found = true; found;) {
    found = false;
    for (Vertex v1 = 0; v1 < g.n() && !found; ++v1) {
      auto nb = diff_nbrs(v1);
      for (std::size_t i = 0; i < nb.size() && !found; ++i) {
        for (std::size_t j = i + 1; j < nb.size() && !found; ++j) {
          const Vertex v2 = nb[i], v4 = nb[j];
          for (Vertex v3 : diff_nbrs(v2)) {
            if (v3 == v1 || v3 == v4 || !st.differs(v3, v4)) continue;
            st.invert({v1, v2, v3});
            st.invert({v3, v4, v1});
            ++c.squares;
            found = true;
            break;
          }
        }
      }
    }
  }

  for (bool found = true; found;) {
    found = false;
    for (Vertex y = 0; y < g.n() && !found; ++y) {
      auto nb = diff_nbrs(y);
      for (std::size_t i = 0; i < nb.size() && !found; ++i) {
        for (std::size_t j = i + 1; j < nb.size() && !found; ++j) {
          if (g.adjacent(nb[i], nb[j])) continue;
          st.invert({nb[i], y, nb[j]});
          ++c.cherries;
          found = true;
        }
      }
    }
  }

  if (p >= 4) {
    for (bool found = true; found;) {
      found = false;
      const auto open = st.diff().indices();
      for (std::size_t i = 0; i < open.size() && !found; ++i) {
        const Edge a = g.edge(open[i]);
        for (std::size_t j = i + 1; j < open.size() && !found; ++j) {
          const Edge b = g.edge(open[j]);
          if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) continue;
          if (g.adjacent(a.u, b.u) || g.adjacent(a.u, b.v) || g.adjacent(a.v, b.u) || g.adjacent(a.v, b.v)) continue;
          st.invert({a.u, a.v, b.u, b.v});
          ++c.pairs;
          found = true;
        }
      }
    }
  }

  for (std::size_t e : st.diff().indices()) {
    st.invert({g.edge(e).u, g.edge(e).v});
    ++c.singles;
  }
  if (counts_out) *counts_out = c;
  const std::string route = "t" + std::to_string(c.triangles) + "-s" + std::to_string(c.squares) + "-c" +
                            std::to_string(c.cherries) + "-d" + std::to_string(c.pairs) + "-e" +
                            std::to_string(c.singles);
  return finish_plan(g, p, o1, o2, std::move(st.plan()), planar_small_bound(g.n(), p), "planar-small", route);
}

// Any p on planar graphs: the star and matching peeling, with a residue of
// maximum degree below q resolved one vertex at a time (matched vertices
// first) or by strong colour classes, whichever is shorter. At most
// ceil(m/q) + 8q - 8 inversions.
inline PlannerReport plan_planar_general(const LabelledGraph& g, std::size_t p, const Orientation& o1,
                                         const Orientation& o2) {
  check_instance(g, p, o1, o2, "planar-general");
  if (!is_planar(g)) throw Error("planar-general: graph is not planar");
  const std::size_t q = p / 2;
  PlanState st(g, o1, o2);
  std::string route = "peel";
  auto cover = [](PlanState& s, const Subgraph& res) {
    const LabelledGraph& r = res.graph;
    std::vector<char> matched(r.n(), 0);
    std::vector<Vertex> order;
    for (const Edge& e : r.edges()) {
      if (matched[e.u] || matched[e.v]) continue;
      matched[e.u] = matched[e.v] = 1;
      order.push_back(e.u);
      order.push_back(e.v);
    }
    std::vector<char> done(r.n(), 0);
    for (Vertex v : order) done[v] = 1;
    for (Vertex v = 0; v < r.n(); ++v) {
      if (!done[v]) order.push_back(v);
    }
    std::fill(done.begin(), done.end(), 0);
    for (Vertex v : order) {
      InversionSet x{res.to_parent_vertex[v]};
      for (const Incidence& inc : r.incidences(v)) {
        if (!done[inc.neighbour] && s.differs(res.to_parent_edge[inc.edge])) {
          x.push_back(res.to_parent_vertex[inc.neighbour]);
        }
      }
      s.invert(x);
      done[v] = 1;
    }
  };
  // the strong colouring plan is used instead when it is shorter
  auto stall = [&](PlanState& s, const Subgraph& res) {
    PlanState by_cover = s, by_colour = s;
    cover(by_cover, res);
    detail::stall_by_strong_colouring(by_colour, res);
    const bool colour = by_colour.plan().length() < by_cover.plan().length();
    s = colour ? std::move(by_colour) : std::move(by_cover);
    route = colour ? "strong-colouring" : "vertex-cover";
  };
  if (!st.done()) detail::peel(st, q, stall);
  return finish_plan(g, p, o1, o2, std::move(st.plan()), ceil_div(g.m(), q) + 8 * q - 8, "planar-general", route);
}

}  // namespace invdiam
