#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "invdiam/error.hpp"
#include "invdiam/graph.hpp"

namespace invdiam {

using Rational = boost::rational<std::int64_t>;

// Edge weights such that no (<= p)-set spans more than `cap`; every plan
// reversing all edges then needs at least ceil(total / cap) inversions.
struct WeightCertificate {
  std::vector<Rational> weights;
  Rational cap{1};
  std::string name;

  Rational total() const { return std::accumulate(weights.begin(), weights.end(), Rational(0)); }
  std::size_t implied_bound() const {
    const Rational q = total() / cap;
    const std::int64_t fl = q.numerator() / q.denominator();
    return static_cast<std::size_t>(q.denominator() == 1 ? fl : fl + 1);
  }
};

struct CertificateCheck {
  bool valid = false;
  Rational heaviest{0};         // largest spanned weight seen
  std::vector<Vertex> witness;  // a set attaining it
  std::size_t nodes = 0;
};

struct CertificateOptions {
  std::size_t exhaustive_n = 24;      // no node budget up to this order
  std::size_t node_budget = 50'000'000;
};

// Branch and bound over vertex sets of size <= p in label order. Adding a
// set Y to X gains at most the sum of the weighted degrees of Y, which
// prunes branches that cannot exceed the best weight found so far.
inline CertificateCheck check_weight_certificate(const LabelledGraph& g, std::size_t p, const WeightCertificate& cert,
                                                 const CertificateOptions& opt = {}) {
  if (cert.weights.size() != g.m()) throw Error("certificate has the wrong number of weights");
  for (const auto& w : cert.weights) {
    if (w < 0) throw Error("certificate weights must be nonnegative");
  }
  const std::size_t n = g.n();
  std::vector<Rational> wdeg(n, Rational(0));
  for (EdgeId e = 0; e < g.m(); ++e) {
    wdeg[g.edge(e).u] += cert.weights[e];
    wdeg[g.edge(e).v] += cert.weights[e];
  }
  // suffix lists of the heaviest weighted degrees
  std::vector<std::vector<Rational>> top(n + 1);
  for (std::size_t i = n; i-- > 0;) {
    top[i] = top[i + 1];
    top[i].push_back(wdeg[i]);
    std::sort(top[i].begin(), top[i].end(), [](const Rational& a, const Rational& b) { return a > b; });
    if (top[i].size() > p) top[i].resize(p);
  }
  CertificateCheck out;
  std::vector<char> in(n, 0);
  std::vector<Vertex> chosen;
  const bool budgeted = n > opt.exhaustive_n;
  auto rec = [&](auto&& self, Vertex from, Rational weight) -> void {
    if (++out.nodes > opt.node_budget && budgeted) {
      throw BudgetExceeded("certificate check exceeded " + std::to_string(opt.node_budget) + " nodes");
    }
    if (weight > out.heaviest || out.witness.empty()) {
      out.heaviest = weight;
      out.witness = chosen;
    }
    if (chosen.size() == p || from >= n) return;
    Rational optimistic = weight;
    for (std::size_t i = 0; i < std::min(top[from].size(), p - chosen.size()); ++i) optimistic += top[from][i];
    if (optimistic <= out.heaviest) return;
    for (Vertex v = from; v < n; ++v) {
      Rational gain(0);
      for (const Incidence& inc : g.incidences(v)) {
        if (in[inc.neighbour]) gain += cert.weights[inc.edge];
      }
      in[v] = 1;
      chosen.push_back(v);
      self(self, v + 1, weight + gain);
      chosen.pop_back();
      in[v] = 0;
    }
  };
  rec(rec, 0, Rational(0));
  out.valid = out.heaviest <= cert.cap;
  return out;
}

inline bool verify_weight_certificate(const LabelledGraph& g, std::size_t p, const WeightCertificate& cert,
                                      const CertificateOptions& opt = {}) {
  return check_weight_certificate(g, p, cert, opt).valid;
}

namespace certificates {

// 1 / C(p,2) per edge, cap 1.
inline WeightCertificate uniform(const LabelledGraph& g, std::size_t p) {
  const auto pairs = static_cast<std::int64_t>(p * (p - 1) / 2);
  return WeightCertificate{std::vector<Rational>(g.m(), Rational(1, pairs)), Rational(1), "uniform"};
}

// Weight 1 per edge, cap floor(p/2); valid when g is a matching.
inline WeightCertificate matching(const LabelledGraph& g, std::size_t p) {
  return WeightCertificate{std::vector<Rational>(g.m(), Rational(1)), Rational(static_cast<std::int64_t>(p / 2)),
                           "matching"};
}

// Double wheel with hubs n-2, n-1: 1/((p-2)^2+1) on hub edges and
// (p-3)/((p-2)^2+1) on rim edges, cap 1.
inline WeightCertificate double_wheel(const LabelledGraph& g, std::size_t p) {
  const auto d = static_cast<std::int64_t>((p - 2) * (p - 2) + 1);
  const auto hub_a = static_cast<Vertex>(g.n() - 2), hub_b = static_cast<Vertex>(g.n() - 1);
  WeightCertificate c{{}, Rational(1), "double-wheel"};
  for (const Edge& e : g.edges()) {
    const bool hub = e.u == hub_a || e.u == hub_b || e.v == hub_a || e.v == hub_b;
    c.weights.push_back(hub ? Rational(1, d) : Rational(static_cast<std::int64_t>(p) - 3, d));
  }
  return c;
}

// Spider with centre 0: weight 1 on centre edges, 2 on pendant edges, cap 4.
inline WeightCertificate spider4(const LabelledGraph& g) {
  WeightCertificate c{{}, Rational(4), "spider4"};
  for (const Edge& e : g.edges()) c.weights.push_back(e.u == 0 ? Rational(1) : Rational(2));
  return c;
}

}  // namespace certificates

}  // namespace invdiam
