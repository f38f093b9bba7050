#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <random>
#include <string>

#include "invdiam/bounds.hpp"
#include "invdiam/corpus.hpp"
#include "invdiam/decompositions.hpp"
#include "invdiam/io.hpp"
#include "invdiam/oracle.hpp"
#include "invdiam/procedures.hpp"

using namespace invdiam;
using io::Json;

namespace {

// A file path, or a literal 0/1 string when no such file exists.
Orientation load_orientation(const std::string& arg, std::size_t m) {
  if (!std::filesystem::exists(arg) && arg.find_first_not_of("01") == std::string::npos) {
    return io::parse_orientation(arg, m);
  }
  return io::read_orientation(arg, m);
}

std::string rational_text(const Rational& r) {
  return r.denominator() == 1 ? std::to_string(r.numerator())
                              : std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Json opt_json(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

Json edge_list(const LabelledGraph& g, const std::vector<EdgeId>& es) {
  Json out = Json::array();
  for (EdgeId e : es) out.push_back({g.edge(e).u, g.edge(e).v});
  return out;
}

Json report_json(const LabelledGraph& g, std::size_t p, const Orientation& o1, const Orientation& o2,
                 const PlannerReport& rep) {
  auto check = verify_plan(g, o1, o2, rep.plan, p);
  Json cands = Json::array();
  for (const auto& [name, len] : rep.candidates) cands.push_back({{"planner", name}, {"length", len}});
  return {{"planner", rep.planner},          {"route", rep.route},
          {"length", rep.length()},          {"bound", rep.bound},
          {"refined_bound", opt_json(rep.refined_bound)}, {"valid", check.valid},
          {"candidates", cands}};
}

PlannerReport run_strategy(const std::string& strategy, bool planar, const LabelledGraph& g, std::size_t p,
                           const Orientation& o1, const Orientation& o2) {
  if (strategy == "auto") {
    BestPlanOptions opt;
    opt.planar = planar;
    return best_plan(g, p, o1, o2, opt);
  }
  if (strategy == "uppergen") return plan_uppergen(g, p, o1, o2);
  if (strategy == "connected3") return plan_connected3(g, p, o1, o2);
  if (strategy == "degenerate") return plan_degenerate(g, p, o1, o2);
  if (strategy == "procedure1") return plan_procedure1(g, p, o1, o2);
  if (strategy == "tree") return lift_conv_to_id(g, p, o1, o2);
  // planar
  auto general = plan_planar_general(g, p, o1, o2);
  if (p < 3) return general;
  auto small = plan_planar_small(g, p, o1, o2);
  return small.length() <= general.length() ? small : general;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bounded-size inversion workbench for oriented graphs"};
  app.require_subcommand(1);

  // oracle
  auto* oracle = app.add_subcommand("oracle", "exact distance, diameter or converse number");
  std::string oracle_kind, graph_file, o1_arg, o2_arg, plan_out;
  std::size_t p = 3, max_edges = 22, threads = 0;
  oracle->add_option("kind", oracle_kind, "distance | diameter | converse")
      ->required()
      ->check(CLI::IsMember({"distance", "diameter", "converse"}));
  oracle->add_option("--graph", graph_file, "graph file")->required();
  oracle->add_option("--p", p, "largest inversion size")->capture_default_str();
  oracle->add_option("--o1", o1_arg, "source orientation (file or 0/1 string)");
  oracle->add_option("--o2", o2_arg, "target orientation (file or 0/1 string)");
  oracle->add_option("--max-edges", max_edges, "largest m for the full search")->capture_default_str();
  oracle->add_option("--threads", threads, "worker threads (0: INVDIAM_THREADS or hardware)");
  oracle->add_option("--emit-plan", plan_out, "write the witness plan as JSON");

  // plan
  auto* plan = app.add_subcommand("plan", "constructive inversion plan");
  std::string strategy = "auto";
  bool planar = false;
  plan->add_option("--graph", graph_file, "graph file")->required();
  plan->add_option("--p", p, "largest inversion size")->capture_default_str();
  plan->add_option("--o1", o1_arg, "source orientation (default all 0)");
  plan->add_option("--o2", o2_arg, "target orientation (default: converse of o1)");
  plan->add_option("--strategy", strategy)
      ->check(CLI::IsMember({"auto", "uppergen", "connected3", "degenerate", "procedure1", "tree", "planar"}))
      ->capture_default_str();
  plan->add_flag("--planar", planar, "also try the planar planners (auto)");
  plan->add_option("--emit-plan", plan_out, "write the plan as JSON");

  // decompose
  auto* decompose = app.add_subcommand("decompose", "edge decompositions as JSON");
  std::string decomposition;
  bool exact = false;
  decompose->add_option("kind", decomposition)
      ->required()
      ->check(CLI::IsMember({"kotzig", "tree4", "strong-colouring", "transversal", "packing"}));
  decompose->add_option("--graph", graph_file, "graph file")->required();
  decompose->add_flag("--exact", exact, "exact transversal or packing");

  // generate
  auto* generate = app.add_subcommand("generate", "write a family member");
  std::string family, out_file, orientation_out;
  std::size_t size = 0, extra = 0;
  std::uint64_t seed = 1;
  generate->add_option("family", family)->required()->check(CLI::IsMember(families::names()));
  generate->add_option("--size", size, "family parameter")->required();
  generate->add_option("--seed", seed, "random seed")->capture_default_str();
  generate->add_option("--extra", extra, "extra edges (random_connected)");
  generate->add_option("--out", out_file, "graph file (default stdout)");
  generate->add_option("--emit-orientation", orientation_out, "also write a random orientation");

  // bound
  auto* bound = app.add_subcommand("bound", "lower bounds");
  std::string bound_kind;
  bool certify = false;
  bound->add_option("kind", bound_kind)->required()->check(CLI::IsMember({"lower"}));
  bound->add_option("--graph", graph_file, "graph file")->required();
  bound->add_option("--p", p, "largest inversion size")->capture_default_str();
  bound->add_flag("--certify", certify, "check every certificate");

  // verify
  auto* verify = app.add_subcommand("verify", "check a plan; exit 1 if invalid");
  std::string plan_in;
  std::size_t verify_p = 0;
  verify->add_option("--graph", graph_file, "graph file")->required();
  verify->add_option("--o1", o1_arg, "source orientation")->required();
  verify->add_option("--o2", o2_arg, "target orientation")->required();
  verify->add_option("--plan", plan_in, "plan JSON")->required();
  verify->add_option("--p", verify_p, "largest inversion size (default: the plan's p)");

  // corpus
  auto* corpus_cmd = app.add_subcommand("corpus", "seeded cross-check of oracle, planners and bounds");
  corpus::CorpusSpec spec;
  std::string csv_out, json_out;
  corpus_cmd->add_option("--seed", spec.seed)->capture_default_str();
  corpus_cmd->add_option("--trees", spec.trees)->capture_default_str();
  corpus_cmd->add_option("--connected", spec.connected)->capture_default_str();
  corpus_cmd->add_option("--triangulations", spec.triangulations)->capture_default_str();
  corpus_cmd->add_option("--p-min", spec.p_min)->capture_default_str();
  corpus_cmd->add_option("--p-max", spec.p_max)->capture_default_str();
  corpus_cmd->add_option("--max-edges", spec.max_edges, "oracle only up to this m")->capture_default_str();
  corpus_cmd->add_option("--threads", spec.threads, "0: INVDIAM_THREADS or hardware");
  corpus_cmd->add_option("--csv", csv_out, "CSV report");
  corpus_cmd->add_option("--json", json_out, "JSON report");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*oracle) {
      auto g = io::read_graph(graph_file);
      OracleOptions opt;
      opt.max_edges = max_edges;
      opt.threads = threads;
      OracleResult r;
      Orientation from = o1_arg.empty() ? Orientation::zeros(g.m()) : load_orientation(o1_arg, g.m());
      if (oracle_kind == "distance") {
        if (o2_arg.empty()) throw Error("oracle distance needs --o2");
        r = distance(g, p, from, load_orientation(o2_arg, g.m()), opt);
      } else if (oracle_kind == "diameter") {
        r = diameter(g, p, opt);
        from = Orientation::zeros(g.m());
      } else {
        r = converse_number(g, p, opt);
        from = Orientation::zeros(g.m());
      }
      Json j{{"kind", oracle_kind},
             {"n", g.n()},
             {"m", g.m()},
             {"p", p},
             {"value", opt_json(r.value)},
             {"mode", r.stats.mode},
             {"states_visited", r.stats.states_visited}};
      if (oracle_kind != "distance") {
        j["from"] = from.to_string();
        j["to"] = Orientation::from_u64(g.m(), r.target_mask).to_string();
      }
      emit(j);
      if (!plan_out.empty() && r.witness_plan) io::write_plan(plan_out, *r.witness_plan);
      return 0;
    }
    if (*plan) {
      auto g = io::read_graph(graph_file);
      const Orientation from = o1_arg.empty() ? Orientation::zeros(g.m()) : load_orientation(o1_arg, g.m());
      const Orientation to = o2_arg.empty() ? converse(from) : load_orientation(o2_arg, g.m());
      auto rep = run_strategy(strategy, planar, g, p, from, to);
      emit(report_json(g, p, from, to, rep));
      if (!plan_out.empty()) io::write_plan(plan_out, rep.plan);
      return 0;
    }
    if (*decompose) {
      auto g = io::read_graph(graph_file);
      Json parts = Json::array();
      if (decomposition == "kotzig") {
        for (const auto& part : kotzig_p3(g).parts) parts.push_back(part);
      } else if (decomposition == "tree4") {
        for (const auto& part : tree4_decomposition(g)) parts.push_back(part);
      } else if (decomposition == "strong-colouring") {
        for (const auto& cls : strong_edge_colouring(g).classes) parts.push_back(edge_list(g, cls));
      } else if (decomposition == "transversal") {
        parts = edge_list(g, min_triangle_transversal(g, {exact, 40}));
      } else {
        for (const auto& t : greedy_triangle_packing(g, {exact, 40})) parts.push_back(t);
      }
      emit({{"kind", decomposition}, {"count", parts.size()}, {"parts", parts}});
      return 0;
    }
    if (*generate) {
      auto g = families::generate(family, size, seed, extra);
      if (out_file.empty()) {
        std::cout << io::format_graph(g);
      } else {
        io::write_graph(out_file, g);
      }
      if (!orientation_out.empty()) {
        std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
        Orientation o(g.m());
        for (EdgeId e = 0; e < g.m(); ++e) o.set(e, rng() & 1);
        io::write_orientation(orientation_out, o);
      }
      return 0;
    }
    if (*bound) {
      auto g = io::read_graph(graph_file);
      LowerBoundOptions opt;
      opt.certify = certify;
      auto lb = lower_bound(g, p, opt);
      Json methods = Json::array();
      for (const auto& [name, v] : lb.methods) methods.push_back({{"method", name}, {"value", v}});
      Json j{{"value", lb.value}, {"method", lb.method}, {"verified", lb.verified}, {"methods", methods}};
      if (lb.certificate) {
        Json w = Json::array();
        for (const auto& x : lb.certificate->weights) w.push_back(rational_text(x));
        j["certificate"] = {{"name", lb.certificate->name}, {"cap", rational_text(lb.certificate->cap)}, {"weights", w}};
      }
      emit(j);
      return 0;
    }
    if (*verify) {
      auto g = io::read_graph(graph_file);
      auto pl = io::read_plan(plan_in);
      const std::size_t limit = verify_p ? verify_p : pl.p;
      if (limit == 0) throw Error("verify needs --p when the plan carries none");
      auto r = verify_plan(g, load_orientation(o1_arg, g.m()), load_orientation(o2_arg, g.m()), pl, limit);
      emit({{"valid", r.valid}, {"length", r.length}, {"p", limit}, {"violations", r.violations}});
      return r.valid ? 0 : 1;
    }
    if (*corpus_cmd) {
      auto rep = corpus::run_corpus(spec);
      if (!csv_out.empty()) io::write_text(csv_out, corpus::to_csv(rep));
      if (!json_out.empty()) io::write_text(json_out, corpus::to_json(rep, spec).dump(2) + "\n");
      std::cout << "instances " << rep.instances << ", rows " << rep.rows.size() << ", oracle runs "
                << rep.oracle_runs << ", oracle skipped " << rep.oracle_skipped << ", failures " << rep.failures
                << '\n';
      return rep.ok() ? 0 : 1;
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
