#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "invdiam/graph.hpp"

namespace invdiam {

// An induced matching with exactly q edges, or nullopt when none exists.
// Branches on the first usable edge (by index); an edge is usable when none
// of its endpoints is adjacent to or equal to an endpoint already chosen.
inline std::optional<std::vector<EdgeId>> find_induced_matching(const LabelledGraph& g, std::size_t q) {
  if (q == 0) return std::vector<EdgeId>{};
  if (g.m() < q) return std::nullopt;

  // blocked[v] counts chosen edges whose closed neighbourhood contains v
  std::vector<unsigned> blocked(g.n(), 0);
  auto mark = [&](EdgeId e, int delta) {
    const Edge& ed = g.edge(e);
    for (Vertex end : {ed.u, ed.v}) {
      blocked[end] += static_cast<unsigned>(delta);
      for (const Incidence& inc : g.incidences(end)) blocked[inc.neighbour] += static_cast<unsigned>(delta);
    }
  };
  auto usable = [&](EdgeId e) { return blocked[g.edge(e).u] == 0 && blocked[g.edge(e).v] == 0; };

  std::vector<EdgeId> chosen;
  auto rec = [&](auto&& self, EdgeId from) -> bool {
    if (chosen.size() == q) return true;
    std::size_t left = 0;
    for (EdgeId e = from; e < g.m() && left + chosen.size() < q; ++e) left += usable(e) ? 1 : 0;
    if (left + chosen.size() < q) return false;
    for (EdgeId e = from; e < g.m(); ++e) {
      if (!usable(e)) continue;
      chosen.push_back(e);
      mark(e, 1);
      if (self(self, e + 1)) return true;
      mark(e, -1);
      chosen.pop_back();
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return chosen;
}

}  // namespace invdiam
