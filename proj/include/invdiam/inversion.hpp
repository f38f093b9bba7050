#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "invdiam/bits.hpp"
#include "invdiam/error.hpp"
#include "invdiam/graph.hpp"

namespace invdiam {

using InversionSet = std::vector<Vertex>;

struct InversionPlan {
  std::vector<InversionSet> steps;
  std::size_t p = 0;
  std::string provenance;

  std::size_t length() const noexcept { return steps.size(); }
  std::size_t max_step_size() const noexcept {
    std::size_t s = 0;
    for (const auto& x : steps) s = std::max(s, x.size());
    return s;
  }
  void append(const InversionPlan& other) { steps.insert(steps.end(), other.steps.begin(), other.steps.end()); }
};

inline InversionSet normalized(InversionSet x) {
  std::sort(x.begin(), x.end());
  x.erase(std::unique(x.begin(), x.end()), x.end());
  return x;
}

// Edges with both endpoints in x.
inline EdgeMask inversion_mask(const LabelledGraph& g, const InversionSet& x) {
  EdgeMask mask(g.m());
  InversionSet xs = normalized(x);
  if (!xs.empty() && xs.back() >= g.n()) {
    throw Error("vertex " + std::to_string(xs.back()) + " out of range (n=" + std::to_string(g.n()) + ")");
  }
  if (xs.size() <= 24) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
      for (std::size_t j = i + 1; j < xs.size(); ++j) {
        if (auto e = g.edge_index(xs[i], xs[j])) mask.set(*e);
      }
    }
  } else {
    for (Vertex v : xs) {
      for (const Incidence& inc : g.incidences(v)) {
        if (inc.neighbour > v && std::binary_search(xs.begin(), xs.end(), inc.neighbour)) mask.set(inc.edge);
      }
    }
  }
  return mask;
}

// XOR of the step masks.
inline EdgeMask plan_mask(const LabelledGraph& g, const InversionPlan& plan) {
  EdgeMask total(g.m());
  for (const auto& x : plan.steps) total ^= inversion_mask(g, x);
  return total;
}

inline Orientation apply_plan(const LabelledGraph& g, const Orientation& o, const InversionPlan& plan) {
  if (o.size() != g.m()) throw Error("orientation length does not match host edge count");
  return o ^ plan_mask(g, plan);
}

inline Orientation apply_set(const LabelledGraph& g, const Orientation& o, const InversionSet& x) {
  if (o.size() != g.m()) throw Error("orientation length does not match host edge count");
  return o ^ inversion_mask(g, x);
}

struct PlanReport {
  bool valid = false;
  std::size_t length = 0;
  std::vector<std::string> violations;
};

inline PlanReport verify_plan(const LabelledGraph& g, const Orientation& o1, const Orientation& o2,
                              const InversionPlan& plan, std::size_t p) {
  PlanReport r;
  r.length = plan.steps.size();
  if (o1.size() != g.m() || o2.size() != g.m()) {
    r.violations.push_back("orientation length does not match host edge count " + std::to_string(g.m()));
    return r;
  }
  EdgeMask total(g.m());
  bool steps_ok = true;
  for (std::size_t i = 0; i < plan.steps.size(); ++i) {
    const auto& x = plan.steps[i];
    InversionSet xs = normalized(x);
    if (xs.size() != x.size()) {
      r.violations.push_back("step " + std::to_string(i) + ": repeated vertex");
    }
    if (xs.size() > p) {
      r.violations.push_back("step " + std::to_string(i) + ": size " + std::to_string(xs.size()) + " exceeds p=" +
                             std::to_string(p));
    }
    if (!xs.empty() && xs.back() >= g.n()) {
      r.violations.push_back("step " + std::to_string(i) + ": vertex " + std::to_string(xs.back()) +
                             " out of range");
      steps_ok = false;
      continue;
    }
    total ^= inversion_mask(g, xs);
  }
  if (steps_ok) {
    EdgeMask residue = disagreement(o1 ^ total, o2);
    if (residue.any()) {
      r.violations.push_back("plan leaves " + std::to_string(residue.count()) + " edge(s) wrongly oriented");
    }
  }
  r.valid = r.violations.empty();
  return r;
}

}  // namespace invdiam
