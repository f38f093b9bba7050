#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "invdiam/bits.hpp"
#include "invdiam/error.hpp"
#include "invdiam/graph.hpp"
#include "invdiam/inversion.hpp"

namespace invdiam {

struct PlannerReport {
  InversionPlan plan;
  std::size_t bound = 0;  // guaranteed upper bound on the plan length
  std::string planner;
  std::string route;
  // Sharper bound that holds for this particular run, if any.
  std::optional<std::size_t> refined_bound;
  // best_plan only: (planner/route, length) of every candidate tried
  std::vector<std::pair<std::string, std::size_t>> candidates;

  std::size_t length() const noexcept { return plan.length(); }
};

inline std::size_t ceil_div(std::size_t a, std::size_t b) { return b == 0 ? 0 : (a + b - 1) / b; }

// Tracks the edges still disagreeing with the target while a plan is built.
class PlanState {
 public:
  PlanState(const LabelledGraph& g, const Orientation& o1, const Orientation& o2)
      : g_(&g), diff_(disagreement(o1, o2)) {}
  PlanState(const LabelledGraph& g, EdgeMask diff) : g_(&g), diff_(std::move(diff)) {}

  const LabelledGraph& graph() const { return *g_; }
  bool differs(EdgeId e) const { return diff_.test(e); }
  bool differs(Vertex a, Vertex b) const {
    auto e = g_->edge_index(a, b);
    return e && diff_.test(*e);
  }
  const EdgeMask& diff() const { return diff_; }
  bool done() const { return diff_.none(); }

  // Sets with fewer than two vertices change nothing and are dropped.
  void invert(InversionSet x) {
    x = normalized(std::move(x));
    if (x.size() < 2) return;
    diff_ ^= inversion_mask(*g_, x);
    plan_.steps.push_back(std::move(x));
  }

  InversionPlan& plan() { return plan_; }
  const InversionPlan& plan() const { return plan_; }

 private:
  const LabelledGraph* g_;
  EdgeMask diff_;
  InversionPlan plan_;
};

inline void check_instance(const LabelledGraph& g, std::size_t p, const Orientation& o1, const Orientation& o2,
                           const char* who) {
  if (o1.size() != g.m() || o2.size() != g.m()) {
    throw Error(std::string(who) + ": orientation length does not match the edge count");
  }
  if (p < 2) throw Error(std::string(who) + ": p must be at least 2");
}

// Validates the plan against the instance and fills in the report.
inline PlannerReport finish_plan(const LabelledGraph& g, std::size_t p, const Orientation& o1, const Orientation& o2,
                                 InversionPlan plan, std::size_t bound, std::string planner, std::string route) {
  plan.p = p;
  plan.provenance = route.empty() ? planner : planner + "/" + route;
  auto rep = verify_plan(g, o1, o2, plan, p);
  if (!rep.valid) {
    std::string why = planner + " produced an invalid plan";
    for (const auto& v : rep.violations) why += "; " + v;
    throw Error(why);
  }
  PlannerReport out;
  out.plan = std::move(plan);
  out.bound = bound;
  out.planner = std::move(planner);
  out.route = std::move(route);
  return out;
}

inline std::vector<Vertex> other_ends(const LabelledGraph& g, Vertex v, const std::vector<EdgeId>& edges) {
  std::vector<Vertex> out;
  for (EdgeId e : edges) out.push_back(g.edge(e).u == v ? g.edge(e).v : g.edge(e).u);
  return out;
}

}  // namespace invdiam
