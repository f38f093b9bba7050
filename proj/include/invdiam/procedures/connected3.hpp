#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "invdiam/decompositions/kotzig.hpp"
#include "invdiam/decompositions/triangles.hpp"
#include "invdiam/procedures/common.hpp"

namespace invdiam {

struct Connected3Options {
  TransversalOptions transversal;
};

namespace detail {

// Kotzig paths of G\F, then the edges of F one at a time.
inline InversionPlan connected3_transversal(const LabelledGraph& g, const EdgeMask& diff,
                                            const TransversalOptions& topt, std::size_t& f_size) {
  PlanState st(g, diff);
  const auto f = min_triangle_transversal(g, topt);
  f_size = f.size();
  EdgeMask keep = EdgeMask::ones(g.m());
  for (EdgeId e : f) keep.set(e, false);
  auto h = edge_subgraph(g, keep);
  for (const auto& path : kotzig_p3(h.graph).parts) {
    auto es = path_edges(g, path);
    if (es.size() == 2 && st.differs(es[0]) && st.differs(es[1])) {
      st.invert(path);
      continue;
    }
    for (EdgeId e : es) {
      if (st.differs(e)) st.invert({g.edge(e).u, g.edge(e).v});
    }
  }
  for (EdgeId e : f) {
    if (st.differs(e)) st.invert({g.edge(e).u, g.edge(e).v});
  }
  return std::move(st.plan());
}

// Smallest family (one or two sets) of subsets of `verts` whose inversions
// flip exactly `want` among `local` edges.
inline std::vector<InversionSet> fix_within(const LabelledGraph& g, const std::vector<Vertex>& verts,
                                            const std::vector<EdgeId>& local, std::uint32_t want) {
  const std::size_t k = verts.size();
  std::vector<std::uint32_t> effect(1u << k, 0);
  for (std::uint32_t s = 0; s < (1u << k); ++s) {
    for (std::size_t i = 0; i < local.size(); ++i) {
      const Edge& e = g.edge(local[i]);
      bool a = false, b = false;
      for (std::size_t j = 0; j < k; ++j) {
        if (!(s >> j & 1)) continue;
        a = a || verts[j] == e.u;
        b = b || verts[j] == e.v;
      }
      if (a && b) effect[s] |= 1u << i;
    }
  }
  auto as_set = [&](std::uint32_t s) {
    InversionSet x;
    for (std::size_t j = 0; j < k; ++j) {
      if (s >> j & 1) x.push_back(verts[j]);
    }
    return normalized(x);
  };
  if (want == 0) return {};
  for (std::uint32_t s = 0; s < (1u << k); ++s) {
    if (effect[s] == want) return {as_set(s)};
  }
  for (std::uint32_t s = 0; s < (1u << k); ++s) {
    for (std::uint32_t t = s + 1; t < (1u << k); ++t) {
      if ((effect[s] ^ effect[t]) == want) return {as_set(s), as_set(t)};
    }
  }
  throw Error("no inversion pair fixes the path part");
}

// Kotzig paths of G with their induced edges, repaired in reverse order.
inline InversionPlan connected3_paths(const LabelledGraph& g, const EdgeMask& diff, std::size_t& triangle_parts) {
  PlanState st(g, diff);
  EdgeMask open = EdgeMask::ones(g.m());
  std::vector<std::pair<std::vector<Vertex>, std::vector<EdgeId>>> parts;
  for (auto& path : kotzig_p3(g).parts) {
    std::vector<EdgeId> local;
    for (std::size_t i = 0; i < path.size(); ++i) {
      for (std::size_t j = i + 1; j < path.size(); ++j) {
        if (auto e = g.edge_index(path[i], path[j]); e && open.test(*e)) {
          local.push_back(*e);
          open.set(*e, false);
        }
      }
    }
    parts.emplace_back(std::move(path), std::move(local));
  }
  triangle_parts = 0;
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
    const auto& [verts, local] = *it;
    if (local.size() == 3) ++triangle_parts;
    std::uint32_t want = 0;
    for (std::size_t i = 0; i < local.size(); ++i) {
      if (st.differs(local[i])) want |= 1u << i;
    }
    for (auto& x : fix_within(g, verts, local, want)) st.invert(x);
  }
  return std::move(st.plan());
}

}  // namespace detail

// Connected graphs with p >= 3: at most ceil(3m/4) inversions. Two routes
// are tried and the shorter plan wins (ties go to the transversal route).
inline PlannerReport plan_connected3(const LabelledGraph& g, std::size_t p, const Orientation& o1,
                                     const Orientation& o2, const Connected3Options& opt = {}) {
  check_instance(g, p, o1, o2, "connected3");
  if (p < 3) throw Error("connected3: needs p >= 3");
  if (!is_connected(g)) throw Error("connected3: graph is not connected");
  const std::size_t bound = ceil_div(3 * g.m(), 4);
  const EdgeMask diff = disagreement(o1, o2);
  if (diff.none()) return finish_plan(g, p, o1, o2, {}, bound, "connected3", "transversal");
  std::size_t f_size = 0, triangle_parts = 0;
  auto a = detail::connected3_transversal(g, diff, opt.transversal, f_size);
  auto b = detail::connected3_paths(g, diff, triangle_parts);
  const bool take_a = a.length() <= b.length();
  auto out = finish_plan(g, p, o1, o2, take_a ? std::move(a) : std::move(b), bound, "connected3",
                         take_a ? "transversal" : "paths");
  out.refined_bound = take_a ? ceil_div(g.m() + f_size, 2) : ceil_div(g.m(), 2) + triangle_parts;
  return out;
}

}  // namespace invdiam
