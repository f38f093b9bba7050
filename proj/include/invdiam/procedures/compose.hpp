#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "invdiam/procedures/common.hpp"

namespace invdiam {

using Planner =
    std::function<PlannerReport(const LabelledGraph&, std::size_t, const Orientation&, const Orientation&)>;

// g is the edge-disjoint union of a spanning subgraph H (edges in h_edges)
// and the subgraph induced by i_vertices. H is planned first on g; what is
// left lies inside G[I] and is planned there. The lengths add up.
inline PlannerReport compose_subgraph_then_induced(const LabelledGraph& g, std::size_t p, const Orientation& o1,
                                                   const Orientation& o2, const EdgeMask& h_edges,
                                                   const Planner& plan_h, const std::vector<Vertex>& i_vertices,
                                                   const Planner& plan_i) {
  check_instance(g, p, o1, o2, "compose");
  if (h_edges.size() != g.m()) throw Error("compose: edge mask has the wrong length");
  auto gi = induced_subgraph(g, i_vertices);
  EdgeMask covered = h_edges;
  for (EdgeId e : gi.to_parent_edge) {
    if (h_edges.test(e)) throw Error("compose: H and G[I] share an edge");
    covered.set(e);
  }
  if (covered.count() != g.m()) throw Error("compose: some edge is neither in H nor in G[I]");

  auto h = edge_subgraph(g, h_edges);
  auto rh = plan_h(h.graph, p, restrict_to(h, o1), restrict_to(h, o2));
  InversionPlan plan = rh.plan;
  const Orientation mid = apply_plan(g, o1, plan);
  auto ri = plan_i(gi.graph, p, restrict_to(gi, mid), restrict_to(gi, o2));
  for (const auto& x : ri.plan.steps) {
    InversionSet lifted;
    for (Vertex v : x) lifted.push_back(gi.to_parent_vertex[v]);
    plan.steps.push_back(normalized(lifted));
  }
  return finish_plan(g, p, o1, o2, std::move(plan), rh.bound + ri.bound, "compose",
                     rh.plan.provenance + "+" + ri.plan.provenance);
}

}  // namespace invdiam
