#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

#include "invdiam/decompositions/degeneracy.hpp"
#include "invdiam/procedures/common.hpp"

namespace invdiam {

// k-degenerate graphs with p >= k+1: one inversion per vertex, at most n-1.
inline PlannerReport plan_degenerate(const LabelledGraph& g, std::size_t p, const Orientation& o1,
                                     const Orientation& o2) {
  check_instance(g, p, o1, o2, "degenerate");
  const auto d = degeneracy_ordering(g);
  if (p < d.k + 1) throw Error("degenerate: p must exceed the degeneracy " + std::to_string(d.k));
  PlanState st(g, o1, o2);
  for (Vertex v : d.order) {
    InversionSet x{v};
    for (Vertex w : forward_neighbours(g, d, v)) {
      if (st.differs(v, w)) x.push_back(w);
    }
    st.invert(x);
  }
  return finish_plan(g, p, o1, o2, std::move(st.plan()), g.n() == 0 ? 0 : g.n() - 1, "degenerate", "");
}

// Vertices by decreasing degree, each with its remaining disagreeing edges
// in groups of p-1.
inline PlannerReport plan_procedure1(const LabelledGraph& g, std::size_t p, const Orientation& o1,
                                     const Orientation& o2) {
  check_instance(g, p, o1, o2, "procedure1");
  if (p < 3) throw Error("procedure1: needs p >= 3");
  std::vector<Vertex> order(g.n());
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  std::vector<char> alive(g.n(), 1);
  PlanState st(g, o1, o2);
  for (Vertex v : order) {
    std::vector<Vertex> pending;
    for (const Incidence& inc : g.incidences(v)) {
      if (alive[inc.neighbour] && st.differs(inc.edge)) pending.push_back(inc.neighbour);
    }
    for (std::size_t i = 0; i < pending.size(); i += p - 1) {
      InversionSet x{v};
      for (std::size_t j = i; j < std::min(pending.size(), i + p - 1); ++j) x.push_back(pending[j]);
      st.invert(x);
    }
    alive[v] = 0;
  }
  const std::size_t bound = g.n() == 0 ? 0 : (g.m() + (p - 2) * (g.n() - 1)) / (p - 1);
  return finish_plan(g, p, o1, o2, std::move(st.plan()), bound, "procedure1", "");
}

}  // namespace invdiam
