#pragma once

#include <cstddef>
#include <vector>

#include "invdiam/graph.hpp"

namespace invdiam {

struct StrongColouring {
  std::vector<std::vector<EdgeId>> classes;
};

// True iff the edges form a matching and no other edge of g joins two of
// their endpoints.
inline bool is_induced_matching(const LabelledGraph& g, const std::vector<EdgeId>& edges) {
  std::vector<char> end(g.n(), 0);
  for (EdgeId e : edges) {
    const Edge& ed = g.edge(e);
    if (end[ed.u] || end[ed.v]) return false;
    end[ed.u] = end[ed.v] = 1;
  }
  std::size_t inside = 0;
  for (const Edge& ed : g.edges()) inside += (end[ed.u] && end[ed.v]) ? 1 : 0;
  return inside == edges.size();
}

// Greedy by edge index; uses at most 2*D*(D-1)+1 colours for max degree D.
inline StrongColouring strong_edge_colouring(const LabelledGraph& g) {
  constexpr auto kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> colour(g.m(), kNone);
  StrongColouring out;
  std::vector<char> taken;
  for (EdgeId e = 0; e < g.m(); ++e) {
    taken.assign(out.classes.size() + 1, 0);
    const Edge& ed = g.edge(e);
    for (Vertex end : {ed.u, ed.v}) {
      for (const Incidence& a : g.incidences(end)) {
        if (colour[a.edge] != kNone) taken[colour[a.edge]] = 1;
        for (const Incidence& b : g.incidences(a.neighbour)) {
          if (colour[b.edge] != kNone) taken[colour[b.edge]] = 1;
        }
      }
    }
    std::size_t c = 0;
    while (taken[c]) ++c;
    colour[e] = c;
    if (c == out.classes.size()) out.classes.emplace_back();
    out.classes[c].push_back(e);
  }
  return out;
}

}  // namespace invdiam
