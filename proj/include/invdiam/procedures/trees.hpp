#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "invdiam/decompositions/good5.hpp"
#include "invdiam/decompositions/kotzig.hpp"
#include "invdiam/decompositions/tree4.hpp"
#include "invdiam/decompositions/tree_extract.hpp"
#include "invdiam/procedures/common.hpp"

namespace invdiam {

enum class TreeRoute { best, tree2, tree4, tree5, extract };

inline const char* tree_route_name(TreeRoute r) {
  switch (r) {
    case TreeRoute::best: return "best";
    case TreeRoute::tree2: return "tree2";
    case TreeRoute::tree4: return "tree4";
    case TreeRoute::tree5: return "tree5";
    case TreeRoute::extract: return "extract";
  }
  return "?";
}

inline bool tree_route_applies(TreeRoute r, std::size_t p) {
  switch (r) {
    case TreeRoute::best: return p >= 3;
    case TreeRoute::tree2: return p >= 3;
    case TreeRoute::tree4: return p >= 4;
    case TreeRoute::tree5: return p >= 5;
    case TreeRoute::extract: return p >= 6;
  }
  return false;
}

// Guaranteed number of inversions reversing a tree on n vertices.
inline std::size_t tree_route_bound(TreeRoute r, std::size_t n, std::size_t p) {
  if (n <= 1) return 0;
  switch (r) {
    case TreeRoute::tree2: return n / 2;
    case TreeRoute::tree4: return tree4_bound(n);
    case TreeRoute::tree5: return ceil_div(2 * (n - 1), 7);
    case TreeRoute::extract:
      return static_cast<std::size_t>(std::ceil(static_cast<double>(n - 1) / extract_threshold(p) - 1e-9));
    case TreeRoute::best: {
      std::size_t b = tree_route_bound(TreeRoute::tree2, n, p);
      for (TreeRoute x : {TreeRoute::tree4, TreeRoute::tree5, TreeRoute::extract}) {
        if (tree_route_applies(x, p)) b = std::min(b, tree_route_bound(x, n, p));
      }
      return b;
    }
  }
  return 0;
}

namespace detail {

inline std::vector<InversionSet> reverse_tree(const LabelledGraph& t, std::size_t p, TreeRoute route) {
  std::vector<InversionSet> steps;
  if (t.m() == 0) return steps;
  switch (route) {
    case TreeRoute::tree2:
      for (auto& part : kotzig_p3(t).parts) steps.push_back(normalized(part));
      break;
    case TreeRoute::tree4:
      steps = tree4_decomposition(t);
      break;
    case TreeRoute::tree5: {
      TreeView view(t);
      while (view.size() >= 5) {
        auto w = detail::find_good5(view);
        std::vector<Vertex> drop;
        steps.push_back(normalized(w.x1));
        for (Vertex v : w.x1) {
          if (v != w.t1 && v != w.t2) drop.push_back(v);
        }
        if (w.kind == Good5Witness::Kind::pair) {
          steps.push_back(normalized(w.x2));
          for (Vertex v : w.x2) {
            if (v != w.t1 && v != w.t2) drop.push_back(v);
          }
        }
        std::sort(drop.begin(), drop.end());
        drop.erase(std::unique(drop.begin(), drop.end()), drop.end());
        for (Vertex v : drop) view.remove(v);
      }
      if (view.size() >= 2) steps.push_back(view.vertices());
      break;
    }
    case TreeRoute::extract: {
      TreeView view(t);
      while (view.size() > p) {
        const Vertex r = view.vertices().front();
        auto x = detail::tree_extract_set(view, r, p);
        steps.push_back(x.x);
        std::vector<char> in_x(t.n(), 0);
        for (Vertex v : x.x) in_x[v] = 1;
        // keep the part still attached to r once the induced edges are gone
        std::vector<char> keep(t.n(), 0);
        std::vector<Vertex> queue{r};
        keep[r] = 1;
        for (std::size_t h = 0; h < queue.size(); ++h) {
          for (Vertex w : view.neighbours(queue[h])) {
            if (keep[w] || (in_x[queue[h]] && in_x[w])) continue;
            keep[w] = 1;
            queue.push_back(w);
          }
        }
        for (Vertex v : view.vertices()) {
          if (!keep[v]) view.remove(v);
        }
      }
      if (view.size() >= 2) steps.push_back(view.vertices());
      break;
    }
    case TreeRoute::best:
      throw Error("reverse_tree needs a concrete route");
  }
  return steps;
}

// Joins the non-trivial components of a forest into one tree on its
// non-isolated vertices. Virtual edges are never inverted in isolation, so a
// plan reversing the tree reverses the forest.
struct JoinedForest {
  LabelledGraph tree;
  std::vector<Vertex> to_forest;
};

inline JoinedForest join_forest(const LabelledGraph& f) {
  std::vector<Vertex> used;
  std::vector<Vertex> local(f.n(), static_cast<Vertex>(-1));
  for (Vertex v = 0; v < f.n(); ++v) {
    if (f.degree(v) > 0) {
      local[v] = static_cast<Vertex>(used.size());
      used.push_back(v);
    }
  }
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (const Edge& e : f.edges()) pairs.emplace_back(local[e.u], local[e.v]);
  const auto comp = component_ids(f);
  std::vector<char> seen(f.n(), 0);
  Vertex anchor = static_cast<Vertex>(-1);
  for (Vertex v : used) {
    if (seen[comp[v]]) continue;
    seen[comp[v]] = 1;
    if (anchor == static_cast<Vertex>(-1)) {
      anchor = local[v];
    } else {
      pairs.emplace_back(anchor, local[v]);
    }
  }
  return JoinedForest{LabelledGraph::build(used.size(), std::move(pairs)), std::move(used)};
}

inline std::size_t non_isolated(const LabelledGraph& g) {
  std::size_t k = 0;
  for (Vertex v = 0; v < g.n(); ++v) k += g.degree(v) > 0 ? 1 : 0;
  return k;
}

}  // namespace detail

// Plan reversing every edge of the forest f; trees use their own vertex
// count, forests the number of non-isolated vertices.
inline PlannerReport conv_plan_forest(const LabelledGraph& f, std::size_t p, TreeRoute route = TreeRoute::best) {
  if (!is_forest(f)) throw Error("conv_plan_forest: graph is not a forest");
  if (p < 3) throw Error("conv_plan_forest: needs p >= 3");
  if (!tree_route_applies(route, p)) {
    throw Error(std::string("conv_plan_forest: route ") + tree_route_name(route) + " needs a larger p");
  }
  const auto from = Orientation::zeros(f.m());
  const auto to = Orientation::ones(f.m());
  const std::size_t n = detail::non_isolated(f);
  if (f.m() == 0) return finish_plan(f, p, from, to, {}, 0, "conv-tree", tree_route_name(route));
  auto joined = detail::join_forest(f);
  std::vector<TreeRoute> routes;
  if (route == TreeRoute::best) {
    for (TreeRoute r : {TreeRoute::tree2, TreeRoute::tree4, TreeRoute::tree5, TreeRoute::extract}) {
      if (tree_route_applies(r, p)) routes.push_back(r);
    }
  } else {
    routes.push_back(route);
  }
  InversionPlan best;
  TreeRoute chosen = routes.front();
  bool have = false;
  std::vector<std::pair<std::string, std::size_t>> tried;
  for (TreeRoute r : routes) {
    InversionPlan plan;
    for (auto& x : detail::reverse_tree(joined.tree, p, r)) {
      InversionSet lifted;
      for (Vertex v : x) lifted.push_back(joined.to_forest[v]);
      plan.steps.push_back(normalized(lifted));
    }
    tried.emplace_back(tree_route_name(r), plan.length());
    if (!have || plan.length() < best.length()) {
      best = std::move(plan);
      chosen = r;
      have = true;
    }
  }
  auto out = finish_plan(f, p, from, to, std::move(best), tree_route_bound(route, n, p), "conv-tree",
                         tree_route_name(chosen));
  out.candidates = std::move(tried);
  return out;
}

inline PlannerReport conv_plan_tree(const LabelledGraph& t, std::size_t p, TreeRoute route = TreeRoute::best) {
  if (!is_tree(t)) throw Error("conv_plan_tree: graph is not a tree");
  return conv_plan_forest(t, p, route);
}

// Forests: the components of the disagreeing edges are 2-coloured along the
// agreeing edges, and each colour class is reversed as a forest.
inline PlannerReport lift_conv_to_id(const LabelledGraph& f, std::size_t p, const Orientation& o1,
                                     const Orientation& o2, TreeRoute route = TreeRoute::best) {
  check_instance(f, p, o1, o2, "forest-id");
  if (!is_forest(f)) throw Error("forest-id: graph is not a forest");
  const EdgeMask diff = disagreement(o1, o2);
  if (diff.none()) return finish_plan(f, p, o1, o2, {}, 0, "forest-id", tree_route_name(route));
  const auto comp = component_ids(f, &diff);
  std::size_t comps = 0;
  for (auto c : comp) comps = std::max(comps, c + 1);
  std::vector<std::vector<std::size_t>> adj(comps);
  for (EdgeId e = 0; e < f.m(); ++e) {
    if (diff.test(e)) continue;
    const auto a = comp[f.edge(e).u], b = comp[f.edge(e).v];
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> side(comps, -1);
  for (std::size_t s = 0; s < comps; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<std::size_t> queue{s};
    for (std::size_t h = 0; h < queue.size(); ++h) {
      for (auto w : adj[queue[h]]) {
        if (side[w] < 0) {
          side[w] = 1 - side[queue[h]];
          queue.push_back(w);
        }
      }
    }
  }
  InversionPlan plan;
  std::size_t bound = 0;
  std::string routes;
  for (int s : {0, 1}) {
    EdgeMask part(f.m());
    diff.for_each_set([&](std::size_t e) {
      if (side[comp[f.edge(e).u]] == s) part.set(e);
    });
    if (part.none()) continue;
    auto sub = compact_edge_subgraph(f, part);
    auto rep = conv_plan_forest(sub.graph, p, route);
    for (const auto& x : rep.plan.steps) {
      InversionSet lifted;
      for (Vertex v : x) lifted.push_back(sub.to_parent_vertex[v]);
      plan.steps.push_back(std::move(lifted));
    }
    bound += rep.bound;
    routes += (routes.empty() ? "" : "+") + rep.route;
  }
  return finish_plan(f, p, o1, o2, std::move(plan), bound, "forest-id", routes);
}

}  // namespace invdiam
