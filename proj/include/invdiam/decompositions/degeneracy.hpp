#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <utility>
#include <vector>

#include "invdiam/graph.hpp"

namespace invdiam {

struct DegeneracyOrdering {
  std::vector<Vertex> order;     // order[i] is v_{i+1}
  std::vector<std::size_t> pos;  // pos[v] = index of v in order
  std::size_t k = 0;             // max number of neighbours later in the order
};

// Repeatedly removes a vertex of minimum current degree (smallest label on
// ties). Every vertex then has at most k neighbours after it.
inline DegeneracyOrdering degeneracy_ordering(const LabelledGraph& g) {
  DegeneracyOrdering out;
  const std::size_t n = g.n();
  std::vector<std::size_t> deg(n);
  std::set<std::pair<std::size_t, Vertex>> queue;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    queue.insert({deg[v], v});
  }
  std::vector<char> gone(n, 0);
  out.pos.assign(n, 0);
  while (!queue.empty()) {
    auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    out.k = std::max(out.k, d);
    out.pos[v] = out.order.size();
    out.order.push_back(v);
    gone[v] = 1;
    for (const Incidence& inc : g.incidences(v)) {
      const Vertex w = inc.neighbour;
      if (gone[w]) continue;
      queue.erase({deg[w], w});
      queue.insert({--deg[w], w});
    }
  }
  return out;
}

// Neighbours of v that come after it in the ordering, ascending by label.
inline std::vector<Vertex> forward_neighbours(const LabelledGraph& g, const DegeneracyOrdering& d, Vertex v) {
  std::vector<Vertex> out;
  for (const Incidence& inc : g.incidences(v)) {
    if (d.pos[inc.neighbour] > d.pos[v]) out.push_back(inc.neighbour);
  }
  return out;
}

}  // namespace invdiam
