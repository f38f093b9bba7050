#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "invdiam/bounds.hpp"
#include "invdiam/oracle.hpp"
#include "invdiam/procedures.hpp"

namespace invdiam::corpus {

struct CorpusSpec {
  std::uint64_t seed = 20240601;
  std::size_t trees = 170;
  std::size_t connected = 170;
  std::size_t triangulations = 160;
  std::size_t tree_max_n = 200;
  std::size_t connected_max_m = 60;
  std::size_t triangulation_max_n = 40;
  std::size_t p_min = 2;
  std::size_t p_max = 10;
  std::size_t max_edges = 18;  // oracle runs only up to this many edges
  std::size_t threads = 0;     // 0: INVDIAM_THREADS or hardware
};

struct Instance {
  std::size_t id = 0;
  std::string family;
  LabelledGraph g;
  std::size_t p = 2;
  Orientation o1, o2;
  bool planar = false;
};

struct Row {
  std::size_t instance = 0;
  std::string family;
  std::size_t n = 0, m = 0, p = 0;
  std::string pair;  // "conv" (o1 to its converse) or "pair" (o1 to o2)
  std::string planner;
  std::string route;
  std::optional<std::size_t> length;
  std::optional<std::size_t> bound;
  std::optional<std::size_t> refined_bound;
  bool valid = false;
  std::optional<std::size_t> lower;   // conv rows only
  std::optional<std::size_t> oracle;  // exact distance when run
  std::string oracle_status;          // exact | skipped | budget
  bool pass = false;
  std::string reason;
};

struct RunReport {
  std::vector<Row> rows;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::size_t oracle_runs = 0;
  std::size_t oracle_skipped = 0;
  bool ok() const { return failures == 0; }
};

// Deterministic given the CorpusSpec: every instance draws its own seed from one
// stream, in family order.
inline std::vector<Instance> make_instances(const CorpusSpec& spec) {
  if (spec.p_min < 2 || spec.p_max < spec.p_min) throw Error("corpus: need 2 <= p_min <= p_max");
  std::mt19937_64 master(spec.seed);
  std::vector<Instance> out;
  auto add = [&](const std::string& family, std::size_t count, auto&& make) {
    for (std::size_t i = 0; i < count; ++i) {
      std::mt19937_64 rng(master());
      Instance inst;
      inst.id = out.size();
      inst.family = family;
      // half of each family is small enough for the oracle
      const bool small = i % 2 == 0;
      inst.g = make(rng, small);
      inst.p = spec.p_min + rng() % (spec.p_max - spec.p_min + 1);
      inst.o1 = Orientation(inst.g.m());
      inst.o2 = Orientation(inst.g.m());
      for (EdgeId e = 0; e < inst.g.m(); ++e) {
        inst.o1.set(e, rng() & 1);
        inst.o2.set(e, rng() & 1);
      }
      inst.planar = family != "random_connected" || is_planar(inst.g);
      out.push_back(std::move(inst));
    }
  };
  auto between = [](std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return hi <= lo ? lo : lo + rng() % (hi - lo + 1);
  };
  add("random_tree", spec.trees, [&](std::mt19937_64& rng, bool small) {
    const std::size_t n = small ? between(rng, 2, std::min<std::size_t>(19, spec.tree_max_n))
                                : between(rng, 20, spec.tree_max_n);
    return families::random_tree(n, rng);
  });
  add("random_connected", spec.connected, [&](std::mt19937_64& rng, bool small) {
    const std::size_t max_m = small ? std::min<std::size_t>(18, spec.connected_max_m) : spec.connected_max_m;
    const std::size_t n = between(rng, 3, std::min<std::size_t>(max_m + 1, small ? 12 : 30));
    const std::size_t room = std::min(n * (n - 1) / 2, max_m) - (n - 1);
    return families::random_connected(n, between(rng, 0, room), rng);
  });
  add("random_planar_triangulation", spec.triangulations, [&](std::mt19937_64& rng, bool small) {
    const std::size_t n = small ? between(rng, 4, std::min<std::size_t>(8, spec.triangulation_max_n))
                                : between(rng, 9, spec.triangulation_max_n);
    return families::random_planar_triangulation(n, rng);
  });
  return out;
}

namespace detail {

inline std::vector<std::pair<std::string, std::function<PlannerReport(const Orientation&, const Orientation&)>>>
planners_for(const Instance& inst, bool conv) {
  const auto& g = inst.g;
  const std::size_t p = inst.p;
  std::vector<std::pair<std::string, std::function<PlannerReport(const Orientation&, const Orientation&)>>> out;
  out.emplace_back("uppergen", [&g, p](const Orientation& a, const Orientation& b) { return plan_uppergen(g, p, a, b); });
  if (p >= 3 && is_connected(g)) {
    out.emplace_back("connected3", [&g, p](const Orientation& a, const Orientation& b) {
      return plan_connected3(g, p, a, b);
    });
  }
  if (p >= degeneracy_ordering(g).k + 1) {
    out.emplace_back("degenerate", [&g, p](const Orientation& a, const Orientation& b) {
      return plan_degenerate(g, p, a, b);
    });
  }
  if (p >= 3) {
    out.emplace_back("procedure1", [&g, p](const Orientation& a, const Orientation& b) {
      return plan_procedure1(g, p, a, b);
    });
  }
  if (p >= 3 && is_forest(g)) {
    out.emplace_back("forest-id", [&g, p](const Orientation& a, const Orientation& b) {
      return lift_conv_to_id(g, p, a, b);
    });
    if (conv) {
      for (TreeRoute r : {TreeRoute::tree2, TreeRoute::tree4, TreeRoute::tree5, TreeRoute::extract}) {
        if (!tree_route_applies(r, p)) continue;
        out.emplace_back(std::string("conv-tree:") + tree_route_name(r), [&g, p, r](const Orientation&, const Orientation&) {
          return conv_plan_forest(g, p, r);
        });
      }
    }
  }
  if (inst.planar) {
    if (p >= 3) {
      out.emplace_back("planar-small", [&g, p](const Orientation& a, const Orientation& b) {
        return plan_planar_small(g, p, a, b);
      });
    }
    out.emplace_back("planar-general", [&g, p](const Orientation& a, const Orientation& b) {
      return plan_planar_general(g, p, a, b);
    });
  }
  return out;
}

}  // namespace detail

inline std::vector<Row> run_instance(const Instance& inst, const CorpusSpec& spec) {
  std::vector<Row> rows;
  const auto& g = inst.g;
  for (const bool conv : {true, false}) {
    const Orientation from = conv ? Orientation::zeros(g.m()) : inst.o1;
    const Orientation to = conv ? Orientation::ones(g.m()) : inst.o2;
    std::optional<std::size_t> exact;
    std::string status = "skipped";
    if (g.m() <= spec.max_edges) {
      OracleOptions oo;
      oo.threads = 1;
      try {
        exact = distance(g, inst.p, from, to, oo).value;
        status = "exact";
      } catch (const BudgetExceeded&) {
        status = "budget";
      }
    }
    std::optional<std::size_t> lower;
    if (conv) lower = lower_bound(g, inst.p).value;
    for (const auto& [name, run] : detail::planners_for(inst, conv)) {
      Row r;
      r.instance = inst.id;
      r.family = inst.family;
      r.n = g.n();
      r.m = g.m();
      r.p = inst.p;
      r.pair = conv ? "conv" : "pair";
      r.planner = name;
      r.lower = lower;
      r.oracle = exact;
      r.oracle_status = status;
      try {
        auto rep = run(from, to);
        r.route = rep.route;
        r.length = rep.length();
        r.bound = rep.bound;
        r.refined_bound = rep.refined_bound;
        r.valid = verify_plan(g, from, to, rep.plan, inst.p).valid;
      } catch (const Error& e) {
        r.reason = e.what();
      }
      std::vector<std::string> why;
      if (!r.valid) why.push_back("invalid plan");
      if (r.length && r.bound && *r.length > *r.bound) why.push_back("length above bound");
      if (r.length && r.refined_bound && *r.length > *r.refined_bound) why.push_back("length above refined bound");
      if (lower && exact && *lower > *exact) why.push_back("lower bound above oracle");
      if (r.length && exact && *r.length < *exact) why.push_back("length below oracle");
      r.pass = why.empty();
      for (const auto& w : why) r.reason += (r.reason.empty() ? "" : "; ") + w;
      rows.push_back(std::move(r));
    }
  }
  return rows;
}

inline RunReport run_corpus(const CorpusSpec& spec) {
  const auto instances = make_instances(spec);
  std::vector<std::vector<Row>> per(instances.size());
  const std::size_t workers = std::max<std::size_t>(1, std::min(resolve_threads(spec.threads), instances.size()));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < instances.size(); i = next++) per[i] = run_instance(instances[i], spec);
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  RunReport rep;
  rep.instances = instances.size();
  for (auto& rows : per) {
    if (!rows.empty()) {
      // one oracle result per pair, counted once
      for (const auto& r : rows) {
        if (r.planner != "uppergen") continue;
        if (r.oracle_status == "exact") ++rep.oracle_runs;
        else ++rep.oracle_skipped;
      }
    }
    for (auto& r : rows) {
      if (!r.pass) ++rep.failures;
      rep.rows.push_back(std::move(r));
    }
  }
  return rep;
}

inline const char* csv_header() {
  return "instance,family,n,m,p,pair,planner,route,length,bound,refined_bound,valid,lower_bound,oracle,"
         "oracle_status,pass,reason";
}

inline std::string to_csv(const RunReport& rep) {
  auto opt = [](const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : std::string(); };
  auto quote = [](const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  };
  std::ostringstream out;
  out << csv_header() << '\n';
  for (const auto& r : rep.rows) {
    out << r.instance << ',' << r.family << ',' << r.n << ',' << r.m << ',' << r.p << ',' << r.pair << ','
        << r.planner << ',' << quote(r.route) << ',' << opt(r.length) << ',' << opt(r.bound) << ','
        << opt(r.refined_bound) << ',' << (r.valid ? 1 : 0) << ',' << opt(r.lower) << ',' << opt(r.oracle) << ','
        << r.oracle_status << ',' << (r.pass ? 1 : 0) << ',' << quote(r.reason) << '\n';
  }
  return out.str();
}

inline nlohmann::json to_json(const RunReport& rep, const CorpusSpec& spec) {
  using nlohmann::json;
  auto opt = [](const std::optional<std::size_t>& v) { return v ? json(*v) : json(nullptr); };
  json rows = json::array();
  for (const auto& r : rep.rows) {
    rows.push_back({{"instance", r.instance},     {"family", r.family},
                    {"n", r.n},                   {"m", r.m},
                    {"p", r.p},                   {"pair", r.pair},
                    {"planner", r.planner},       {"route", r.route},
                    {"length", opt(r.length)},    {"bound", opt(r.bound)},
                    {"refined_bound", opt(r.refined_bound)}, {"valid", r.valid},
                    {"lower_bound", opt(r.lower)}, {"oracle", opt(r.oracle)},
                    {"oracle_status", r.oracle_status}, {"pass", r.pass},
                    {"reason", r.reason}});
  }
  return json{{"spec",
               {{"seed", spec.seed},
                {"trees", spec.trees},
                {"connected", spec.connected},
                {"triangulations", spec.triangulations},
                {"tree_max_n", spec.tree_max_n},
                {"connected_max_m", spec.connected_max_m},
                {"triangulation_max_n", spec.triangulation_max_n},
                {"p_min", spec.p_min},
                {"p_max", spec.p_max},
                {"max_edges", spec.max_edges}}},
              {"summary",
               {{"instances", rep.instances},
                {"rows", rep.rows.size()},
                {"failures", rep.failures},
                {"oracle_runs", rep.oracle_runs},
                {"oracle_skipped", rep.oracle_skipped}}},
              {"rows", rows}};
}

}  // namespace invdiam::corpus
