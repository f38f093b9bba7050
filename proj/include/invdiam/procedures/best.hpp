#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "invdiam/decompositions/degeneracy.hpp"
#include "invdiam/procedures/common.hpp"
#include "invdiam/procedures/connected3.hpp"
#include "invdiam/procedures/degenerate.hpp"
#include "invdiam/procedures/planar.hpp"
#include "invdiam/procedures/trees.hpp"
#include "invdiam/procedures/uppergen.hpp"

namespace invdiam {

struct BestPlanOptions {
  bool planar = false;  // also run the planar planners (checked)
  UppergenOptions uppergen;
  Connected3Options connected3;
};

// Every planner whose hypotheses hold; shortest plan wins, ties by name.
// The reported bound is the smallest bound among the candidates.
inline PlannerReport best_plan(const LabelledGraph& g, std::size_t p, const Orientation& o1, const Orientation& o2,
                               const BestPlanOptions& opt = {}) {
  check_instance(g, p, o1, o2, "best");
  std::vector<PlannerReport> reps;
  reps.push_back(plan_uppergen(g, p, o1, o2, opt.uppergen));
  if (p >= 3 && is_connected(g)) reps.push_back(plan_connected3(g, p, o1, o2, opt.connected3));
  if (p >= degeneracy_ordering(g).k + 1) reps.push_back(plan_degenerate(g, p, o1, o2));
  if (p >= 3) reps.push_back(plan_procedure1(g, p, o1, o2));
  if (p >= 3 && is_forest(g)) reps.push_back(lift_conv_to_id(g, p, o1, o2));
  if (opt.planar) {
    if (!is_planar(g)) throw Error("best: graph flagged planar is not planar");
    if (p >= 3) reps.push_back(plan_planar_small(g, p, o1, o2));
    reps.push_back(plan_planar_general(g, p, o1, o2));
  }
  std::size_t pick = 0;
  std::size_t bound = reps[0].bound;
  std::vector<std::pair<std::string, std::size_t>> cands;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    cands.emplace_back(reps[i].plan.provenance, reps[i].length());
    bound = std::min(bound, reps[i].bound);
    const auto& a = reps[i];
    const auto& b = reps[pick];
    if (a.length() < b.length() || (a.length() == b.length() && a.planner < b.planner)) pick = i;
  }
  PlannerReport out = std::move(reps[pick]);
  out.bound = bound;
  out.candidates = std::move(cands);
  return out;
}

}  // namespace invdiam
