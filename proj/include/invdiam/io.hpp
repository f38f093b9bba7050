#pragma once

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "invdiam/bits.hpp"
#include "invdiam/error.hpp"
#include "invdiam/graph.hpp"
#include "invdiam/inversion.hpp"

namespace invdiam::io {

using Json = nlohmann::json;

namespace detail {

inline bool skip_line(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '#';
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void dump(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

}  // namespace detail

// "n m" then m lines "u v" with u < v; blank lines and '#' comments skipped.
inline LabelledGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  bool header = false;
  std::size_t n = 0, m = 0;
  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::set<std::pair<long long, long long>> seen;
  while (std::getline(in, line)) {
    ++lineno;
    if (detail::skip_line(line)) continue;
    std::istringstream ls(line);
    long long a = -1, b = -1;
    std::string extra;
    if (!(ls >> a >> b) || (ls >> extra) || a < 0 || b < 0) throw ParseError("expected two nonnegative integers", lineno);
    if (!header) {
      n = static_cast<std::size_t>(a);
      m = static_cast<std::size_t>(b);
      header = true;
      continue;
    }
    if (pairs.size() == m) throw ParseError("more edge lines than announced", lineno);
    if (a >= b) throw ParseError("edge endpoints must satisfy u < v", lineno);
    if (static_cast<std::size_t>(b) >= n) throw ParseError("vertex label out of range", lineno);
    if (!seen.insert({a, b}).second) throw ParseError("duplicate edge", lineno);
    pairs.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  if (!header) throw ParseError("missing 'n m' header", 0);
  if (pairs.size() != m) throw ParseError("expected " + std::to_string(m) + " edges, found " + std::to_string(pairs.size()), lineno);
  try {
    return LabelledGraph::build(n, std::move(pairs));
  } catch (const Error& e) {
    throw ParseError(e.what(), 0);
  }
}

inline std::string format_graph(const LabelledGraph& g) {
  std::ostringstream out;
  out << g.n() << ' ' << g.m() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

// One line of m characters over {0,1}, character i is edge i.
inline Orientation parse_orientation(const std::string& text, std::size_t m) {
  std::istringstream in(text);
  std::string line, bits;
  std::size_t lineno = 0, at = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (detail::skip_line(line)) continue;
    if (!bits.empty()) throw ParseError("orientation must be a single line", lineno);
    line.erase(line.find_last_not_of(" \t\r") + 1);
    line.erase(0, line.find_first_not_of(" \t"));
    bits = line;
    at = lineno;
  }
  if (bits.size() != m) {
    throw ParseError("orientation has " + std::to_string(bits.size()) + " characters, graph has " +
                         std::to_string(m) + " edges",
                     at);
  }
  try {
    return Orientation::from_string(bits);
  } catch (const Error& e) {
    throw ParseError(e.what(), at);
  }
}

inline std::string format_orientation(const Orientation& o) { return o.to_string() + "\n"; }

inline Json plan_to_json(const InversionPlan& plan) {
  Json steps = Json::array();
  for (const auto& x : plan.steps) steps.push_back(x);
  return Json{{"steps", steps}, {"p", plan.p}, {"provenance", plan.provenance}};
}

// Loads without validating against any graph or p.
inline InversionPlan plan_from_json(const Json& j) {
  InversionPlan plan;
  try {
    if (!j.is_object() || !j.contains("steps")) throw Error("plan JSON needs a 'steps' array");
    for (const auto& s : j.at("steps")) {
      InversionSet x;
      for (const auto& v : s) {
        const auto val = v.get<long long>();
        if (val < 0) throw Error("negative vertex in plan");
        x.push_back(static_cast<Vertex>(val));
      }
      plan.steps.push_back(std::move(x));
    }
    if (j.contains("p")) plan.p = j.at("p").get<std::size_t>();
    if (j.contains("provenance")) plan.provenance = j.at("provenance").get<std::string>();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("plan JSON: ") + e.what(), 0);
  } catch (const Error& e) {
    throw ParseError(e.what(), 0);
  }
  return plan;
}

inline InversionPlan parse_plan(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    // byte offset to line number
    const std::size_t upto = std::min<std::size_t>(e.byte, text.size());
    const auto line = 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<long>(upto), '\n'));
    throw ParseError(std::string("plan JSON: ") + e.what(), line);
  }
  return plan_from_json(j);
}

inline std::string format_plan(const InversionPlan& plan) { return plan_to_json(plan).dump(2) + "\n"; }

inline LabelledGraph read_graph(const std::string& path) { return parse_graph(detail::slurp(path)); }
inline Orientation read_orientation(const std::string& path, std::size_t m) {
  return parse_orientation(detail::slurp(path), m);
}
inline InversionPlan read_plan(const std::string& path) { return parse_plan(detail::slurp(path)); }
inline void write_graph(const std::string& path, const LabelledGraph& g) { detail::dump(path, format_graph(g)); }
inline void write_orientation(const std::string& path, const Orientation& o) {
  detail::dump(path, format_orientation(o));
}
inline void write_plan(const std::string& path, const InversionPlan& plan) { detail::dump(path, format_plan(plan)); }
inline void write_text(const std::string& path, const std::string& text) { detail::dump(path, text); }

}  // namespace invdiam::io
