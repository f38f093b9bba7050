#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "invdiam/decompositions/colouring.hpp"
#include "invdiam/decompositions/matching.hpp"
#include "invdiam/oracle.hpp"
#include "invdiam/procedures/common.hpp"

namespace invdiam {

namespace detail {

// Residual graph of the peeling loop: star centres are deleted, induced
// matchings lose their edges.
struct Residual {
  std::vector<char> vertex_alive;
  EdgeMask edges;
  std::vector<std::size_t> degree;

  explicit Residual(const LabelledGraph& g)
      : vertex_alive(g.n(), 1), edges(EdgeMask::ones(g.m())), degree(g.n()) {
    for (Vertex v = 0; v < g.n(); ++v) degree[v] = g.degree(v);
  }

  void drop_edge(const LabelledGraph& g, EdgeId e) {
    if (!edges.test(e)) return;
    edges.set(e, false);
    --degree[g.edge(e).u];
    --degree[g.edge(e).v];
  }

  void drop_vertex(const LabelledGraph& g, Vertex v) {
    for (const Incidence& inc : g.incidences(v)) drop_edge(g, inc.edge);
    vertex_alive[v] = 0;
  }
};

struct PeelCounts {
  std::size_t stars = 0;
  std::size_t star_steps = 0;
  std::size_t matchings = 0;
  std::size_t stall_steps = 0;
};

using StallHandler = std::function<void(PlanState&, const Subgraph& residual)>;

// Stars of size q while some vertex has q residual neighbours, then induced
// matchings of size q; the stall handler resolves what is left, and the
// matchings are repaired last-in first-out.
inline PeelCounts peel(PlanState& st, std::size_t q, const StallHandler& stall) {
  const LabelledGraph& g = st.graph();
  Residual res(g);
  PeelCounts counts;
  std::vector<std::vector<EdgeId>> deferred;
  for (;;) {
    Vertex centre = 0;
    std::size_t best = 0;
    for (Vertex v = 0; v < g.n(); ++v) {
      if (res.vertex_alive[v] && res.degree[v] > best) {
        best = res.degree[v];
        centre = v;
      }
    }
    if (best == 0) break;
    if (best >= q) {
      std::vector<Vertex> nbrs;
      for (const Incidence& inc : g.incidences(centre)) {
        if (res.edges.test(inc.edge)) nbrs.push_back(inc.neighbour);
      }
      const std::size_t groups = nbrs.size() / q;
      for (std::size_t i = 0; i < groups; ++i) {
        const std::size_t end = i + 1 == groups ? nbrs.size() : (i + 1) * q;
        InversionSet x{centre};
        for (std::size_t j = i * q; j < end; ++j) {
          if (st.differs(centre, nbrs[j])) x.push_back(nbrs[j]);
        }
        if (x.size() > 1) {
          st.invert(x);
          ++counts.star_steps;
        }
      }
      ++counts.stars;
      res.drop_vertex(g, centre);
      continue;
    }
    auto sub = edge_subgraph(g, res.edges);
    auto found = find_induced_matching(sub.graph, q);
    if (found) {
      std::vector<EdgeId> mt;
      for (EdgeId e : *found) mt.push_back(sub.to_parent_edge[e]);
      for (EdgeId e : mt) res.drop_edge(g, e);
      deferred.push_back(std::move(mt));
      ++counts.matchings;
      continue;
    }
    const std::size_t before = st.plan().length();
    stall(st, compact_edge_subgraph(g, res.edges));
    counts.stall_steps = st.plan().length() - before;
    break;
  }
  for (auto it = deferred.rbegin(); it != deferred.rend(); ++it) {
    InversionSet z;
    for (EdgeId e : *it) {
      if (st.differs(e)) {
        z.push_back(g.edge(e).u);
        z.push_back(g.edge(e).v);
      }
    }
    st.invert(z);
  }
  return counts;
}

// One inversion per strong colour class of the residual graph.
inline void stall_by_strong_colouring(PlanState& st, const Subgraph& res) {
  for (const auto& cls : strong_edge_colouring(res.graph).classes) {
    InversionSet z;
    for (EdgeId e : cls) {
      const EdgeId pe = res.to_parent_edge[e];
      if (st.differs(pe)) {
        z.push_back(st.graph().edge(pe).u);
        z.push_back(st.graph().edge(pe).v);
      }
    }
    st.invert(z);
  }
}

}  // namespace detail

struct UppergenOptions {
  bool use_oracle = true;         // solve a small residue exactly
  std::size_t oracle_max_edges = 20;
  std::size_t oracle_max_p = 9;
};

// Additive constant of the sharper bound ceil(m/q) + psi(p), known for p <= 9.
inline std::optional<std::size_t> uppergen_psi(std::size_t p) {
  if (p <= 5) return 0;
  if (p <= 9) return 1;
  return std::nullopt;
}

// Stars and induced matchings of size floor(p/2), at most ceil(m/q) + p^2/2
// inversions.
inline PlannerReport plan_uppergen(const LabelledGraph& g, std::size_t p, const Orientation& o1, const Orientation& o2,
                                   const UppergenOptions& opt = {}) {
  check_instance(g, p, o1, o2, "uppergen");
  const std::size_t q = p / 2;
  PlanState st(g, o1, o2);
  std::string route = "strong-colouring";
  bool exact_residue = false;
  auto stall = [&](PlanState& s, const Subgraph& res) {
    if (opt.use_oracle && p <= opt.oracle_max_p && res.graph.m() <= opt.oracle_max_edges) {
      const auto target = restrict_to(res, s.diff()).to_u64();
      OracleOptions oo;
      oo.threads = 1;
      auto r = distance_of_mask(res.graph, p, target, oo);
      for (const auto& x : r.witness_plan->steps) {
        InversionSet lifted;
        for (Vertex v : x) lifted.push_back(res.to_parent_vertex[v]);
        s.invert(lifted);
      }
      route = "oracle-residue";
      exact_residue = true;
      return;
    }
    detail::stall_by_strong_colouring(s, res);
  };
  if (!st.done()) {
    auto counts = detail::peel(st, q, stall);
    if (counts.stall_steps == 0 && !exact_residue) route = "peel";
  } else {
    route = "peel";
  }
  auto out = finish_plan(g, p, o1, o2, std::move(st.plan()), ceil_div(g.m(), q) + p * p / 2, "uppergen", route);
  auto psi = uppergen_psi(p);
  if (psi && (exact_residue || route == "peel")) out.refined_bound = ceil_div(g.m(), q) + *psi;
  return out;
}

}  // namespace invdiam
