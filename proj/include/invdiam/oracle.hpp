#pragma once

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "invdiam/bits.hpp"
#include "invdiam/error.hpp"
#include "invdiam/graph.hpp"
#include "invdiam/inversion.hpp"

namespace invdiam {

// Distinct nonzero masks reachable by one (<=p)-inversion. Sorted by mask
// value; witnesses[i] is the smallest (then lexicographically first) set
// producing masks[i].
struct GeneratorSet {
  std::size_t m = 0;
  std::vector<std::uint64_t> masks;
  std::vector<InversionSet> witnesses;

  std::size_t size() const noexcept { return masks.size(); }
};

inline GeneratorSet generator_masks(const LabelledGraph& g, std::size_t p) {
  if (g.m() > 64) throw BudgetExceeded("generator masks need m <= 64, got m=" + std::to_string(g.m()));
  GeneratorSet out;
  out.m = g.m();
  if (p < 2 || g.m() == 0) return out;

  std::vector<Vertex> verts;
  std::vector<Vertex> max_nbr(g.n(), 0);
  for (Vertex v = 0; v < g.n(); ++v) {
    if (g.degree(v) == 0) continue;
    verts.push_back(v);
    max_nbr[v] = g.incidences(v).back().neighbour;
  }

  std::unordered_map<std::uint64_t, InversionSet> best;
  InversionSet chosen;
  std::vector<char> satisfied;
  std::uint64_t mask = 0;

  auto better = [](const InversionSet& a, const InversionSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  };

  // Every vertex of a minimal witness has a neighbour inside it, so a chosen
  // vertex whose largest neighbour is already behind the cursor kills the
  // branch.
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (chosen.size() >= 2 && std::all_of(satisfied.begin(), satisfied.end(), [](char c) { return c != 0; })) {
      auto it = best.find(mask);
      if (it == best.end()) {
        best.emplace(mask, chosen);
      } else if (better(chosen, it->second)) {
        it->second = chosen;
      }
    }
    if (chosen.size() >= p) return;
    for (std::size_t idx = start; idx < verts.size(); ++idx) {
      const Vertex v = verts[idx];
      bool dead = false;
      for (std::size_t k = 0; k < chosen.size(); ++k) {
        if (!satisfied[k] && max_nbr[chosen[k]] < v) {
          dead = true;
          break;
        }
      }
      if (dead) break;
      const std::uint64_t saved_mask = mask;
      std::vector<char> saved_sat = satisfied;
      bool v_sat = false;
      for (std::size_t k = 0; k < chosen.size(); ++k) {
        if (auto e = g.edge_index(chosen[k], v)) {
          mask |= std::uint64_t{1} << *e;
          satisfied[k] = 1;
          v_sat = true;
        }
      }
      chosen.push_back(v);
      satisfied.push_back(v_sat ? 1 : 0);
      self(self, idx + 1);
      chosen.pop_back();
      satisfied = std::move(saved_sat);
      mask = saved_mask;
    }
  };
  rec(rec, 0);

  std::vector<std::pair<std::uint64_t, InversionSet>> items(best.begin(), best.end());
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [mk, w] : items) {
    out.masks.push_back(mk);
    out.witnesses.push_back(std::move(w));
  }
  return out;
}

struct OracleOptions {
  std::size_t max_edges = 22;         // full BFS over 2^m states
  std::size_t mitm_max_edges = 30;    // bidirectional search for single distances
  std::size_t mitm_state_cap = std::size_t{1} << 25;
  std::size_t layer_store_bytes = std::size_t{512} << 20;
  std::size_t threads = 0;            // 0: INVDIAM_THREADS or hardware concurrency
};

struct OracleStats {
  std::size_t states_visited = 0;
  std::size_t generators = 0;
  double seconds = 0.0;
  std::string mode;
  std::vector<std::size_t> layer_sizes;
};

struct OracleResult {
  std::optional<std::size_t> value;  // empty: unreachable
  std::optional<InversionPlan> witness_plan;
  std::uint64_t target_mask = 0;     // disagreement mask realised by the witness
  OracleStats stats;
};

inline std::size_t resolve_threads(std::size_t requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("INVDIAM_THREADS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && v > 0) return static_cast<std::size_t>(v);
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : hc;
}

namespace detail {

class BitArray {
 public:
  explicit BitArray(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}
  bool test(std::uint64_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::uint64_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  void clear() { std::fill(words_.begin(), words_.end(), 0); }
  std::size_t bits() const { return bits_; }
  std::vector<std::uint64_t>& words() { return words_; }
  const std::vector<std::uint64_t>& words() const { return words_; }
  std::size_t bytes() const { return words_.size() * sizeof(std::uint64_t); }

 private:
  std::size_t bits_;
  std::vector<std::uint64_t> words_;
};

// Layered BFS from the zero mask over (Z/2)^m with the given generators.
class CayleyBfs {
 public:
  CayleyBfs(std::size_t m, const std::vector<std::uint64_t>& gens, std::size_t threads)
      : m_(m), states_(std::uint64_t{1} << m), gens_(gens), threads_(threads), visited_(states_),
        frontier_(states_) {
    visited_.set(0);
    frontier_.set(0);
    frontier_count_ = 1;
    visited_count_ = 1;
  }

  std::size_t layer() const { return layer_; }
  std::size_t frontier_count() const { return frontier_count_; }
  std::size_t visited_count() const { return visited_count_; }
  const BitArray& frontier() const { return frontier_; }
  const BitArray& visited() const { return visited_; }

  // Advances one layer; returns false once the frontier is empty.
  bool step() {
    if (frontier_count_ == 0) return false;
    BitArray next(states_);
    const std::size_t unvisited = states_ - visited_count_;
    const double push_cost = static_cast<double>(frontier_count_) * static_cast<double>(gens_.size());
    const double pull_cost =
        static_cast<double>(unvisited) *
        std::min<double>(static_cast<double>(gens_.size()),
                         static_cast<double>(states_) / static_cast<double>(frontier_count_) + 1.0);
    if (pull_cost < push_cost || (threads_ > 1 && frontier_count_ * gens_.size() > (std::size_t{1} << 16))) {
      pull(next);
    } else {
      push(next);
    }
    auto& vw = visited_.words();
    const auto& nw = next.words();
    for (std::size_t i = 0; i < vw.size(); ++i) vw[i] |= nw[i];
    frontier_ = std::move(next);
    frontier_count_ = frontier_.count();
    visited_count_ += frontier_count_;
    if (frontier_count_ > 0) ++layer_;
    return frontier_count_ > 0;
  }

 private:
  void push(BitArray& next) {
    const auto& fw = frontier_.words();
    for (std::size_t w = 0; w < fw.size(); ++w) {
      std::uint64_t word = fw[w];
      while (word) {
        const std::uint64_t s = (w << 6) | static_cast<std::uint64_t>(std::countr_zero(word));
        word &= word - 1;
        for (std::uint64_t g : gens_) {
          const std::uint64_t t = s ^ g;
          if (!visited_.test(t) && !next.test(t)) next.set(t);
        }
      }
    }
  }

  void pull_range(BitArray& next, std::size_t w_begin, std::size_t w_end) {
    const auto& vw = visited_.words();
    auto& nw = next.words();
    for (std::size_t w = w_begin; w < w_end; ++w) {
      std::uint64_t todo = ~vw[w];
      if (states_ < 64) todo &= (std::uint64_t{1} << states_) - 1;
      std::uint64_t out = 0;
      while (todo) {
        const int b = std::countr_zero(todo);
        todo &= todo - 1;
        const std::uint64_t s = (w << 6) | static_cast<std::uint64_t>(b);
        for (std::uint64_t g : gens_) {
          if (frontier_.test(s ^ g)) {
            out |= std::uint64_t{1} << b;
            break;
          }
        }
      }
      nw[w] = out;
    }
  }

  void pull(BitArray& next) {
    const std::size_t words = visited_.words().size();
    const std::size_t workers = std::max<std::size_t>(1, std::min(threads_, words / 64 + 1));
    if (workers == 1) {
      pull_range(next, 0, words);
      return;
    }
    std::vector<std::thread> pool;
    const std::size_t chunk = (words + workers - 1) / workers;
    for (std::size_t t = 0; t < workers; ++t) {
      const std::size_t b = t * chunk;
      const std::size_t e = std::min(words, b + chunk);
      if (b >= e) break;
      pool.emplace_back([this, &next, b, e] { pull_range(next, b, e); });
    }
    for (auto& th : pool) th.join();
  }

  std::size_t m_;
  std::uint64_t states_;
  const std::vector<std::uint64_t>& gens_;
  std::size_t threads_;
  BitArray visited_;
  BitArray frontier_;
  std::size_t frontier_count_ = 0;
  std::size_t visited_count_ = 0;
  std::size_t layer_ = 0;
};

// Answers "is state x at distance exactly k from zero" for k below the
// search depth, either from stored frontiers or by re-running the BFS.
class LayerIndex {
 public:
  LayerIndex(std::size_t m, const std::vector<std::uint64_t>& gens, std::size_t threads, bool store)
      : m_(m), gens_(gens), threads_(threads), store_(store) {}

  void record(const BitArray& frontier) {
    if (store_) layers_.push_back(frontier);
  }

  bool at_layer(std::uint64_t x, std::size_t k) {
    if (store_) return layers_.at(k).test(x);
    if (!cached_ || cached_layer_ != k) {
      CayleyBfs bfs(m_, gens_, threads_);
      while (bfs.layer() < k && bfs.step()) {
      }
      cached_.emplace(bfs.frontier());
      cached_layer_ = k;
    }
    return cached_->test(x);
  }

 private:
  std::size_t m_;
  const std::vector<std::uint64_t>& gens_;
  std::size_t threads_;
  bool store_;
  std::vector<BitArray> layers_;
  std::optional<BitArray> cached_;
  std::size_t cached_layer_ = 0;
};

// Lexicographically smallest generator sequence from 0 to target.
inline std::vector<std::size_t> reconstruct(std::uint64_t target, std::size_t dist,
                                            const std::vector<std::uint64_t>& gens, LayerIndex& layers) {
  std::vector<std::size_t> seq;
  std::uint64_t r = target;
  for (std::size_t i = 0; i < dist; ++i) {
    const std::size_t want = dist - i - 1;
    bool found = false;
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      if (layers.at_layer(r ^ gens[gi], want)) {
        seq.push_back(gi);
        r ^= gens[gi];
        found = true;
        break;
      }
    }
    if (!found) throw Error("internal: BFS layer reconstruction failed");
  }
  return seq;
}

inline InversionPlan plan_from_sequence(const GeneratorSet& gs, const std::vector<std::size_t>& seq, std::size_t p) {
  InversionPlan plan;
  plan.p = p;
  plan.provenance = "oracle";
  for (std::size_t gi : seq) plan.steps.push_back(gs.witnesses[gi]);
  return plan;
}

struct BfsOutcome {
  std::optional<std::size_t> distance;  // of target, when requested
  std::size_t eccentricity = 0;
  std::uint64_t farthest = 0;
  std::vector<std::size_t> seq;
  std::size_t visited = 0;
  std::vector<std::size_t> layer_sizes;
};

// Full or early-stopping BFS; target = nullopt runs to exhaustion.
inline BfsOutcome run_bfs(const GeneratorSet& gs, std::optional<std::uint64_t> target, const OracleOptions& opt,
                          bool want_witness) {
  const std::size_t threads = resolve_threads(opt.threads);
  const std::size_t m = gs.m;
  const std::size_t frontier_bytes = ((std::size_t{1} << m) + 63) / 64 * 8;
  const bool store = want_witness && frontier_bytes * (m + 1) <= opt.layer_store_bytes;
  CayleyBfs bfs(m, gs.masks, threads);
  LayerIndex layers(m, gs.masks, threads, store);
  BfsOutcome out;
  layers.record(bfs.frontier());
  out.layer_sizes.push_back(1);
  if (target && *target == 0) {
    out.distance = 0;
    out.visited = 1;
    return out;
  }
  while (bfs.step()) {
    layers.record(bfs.frontier());
    out.layer_sizes.push_back(bfs.frontier_count());
    if (target && bfs.frontier().test(*target)) {
      out.distance = bfs.layer();
      break;
    }
  }
  out.visited = bfs.visited_count();
  if (!target) {
    out.eccentricity = bfs.layer();
    // bfs.frontier() is empty now; the last stored layer holds the farthest states.
    std::optional<std::uint64_t> far;
    if (store) {
      // smallest mask in the last layer
      for (std::uint64_t x = 0; x < (std::uint64_t{1} << m); ++x) {
        if (layers.at_layer(x, out.eccentricity)) {
          far = x;
          break;
        }
      }
    } else {
      CayleyBfs again(m, gs.masks, threads);
      while (again.layer() < out.eccentricity && again.step()) {
      }
      for (std::uint64_t x = 0; x < (std::uint64_t{1} << m); ++x) {
        if (again.frontier().test(x)) {
          far = x;
          break;
        }
      }
    }
    out.farthest = far.value_or(0);
    if (want_witness) out.seq = reconstruct(out.farthest, out.eccentricity, gs.masks, layers);
    return out;
  }
  if (out.distance && want_witness) out.seq = reconstruct(*target, *out.distance, gs.masks, layers);
  return out;
}

// Bidirectional BFS on hashed layers; the witness is valid and shortest
// but not necessarily the lexicographically smallest.
inline BfsOutcome run_mitm(const GeneratorSet& gs, std::uint64_t target, const OracleOptions& opt) {
  BfsOutcome out;
  if (target == 0) {
    out.distance = 0;
    out.visited = 1;
    return out;
  }
  constexpr std::uint32_t kRoot = std::numeric_limits<std::uint32_t>::max();
  std::unordered_map<std::uint64_t, std::uint32_t> side_a{{0, kRoot}};
  std::unordered_map<std::uint64_t, std::uint32_t> side_b{{target, kRoot}};
  std::vector<std::uint64_t> front_a{0};
  std::vector<std::uint64_t> front_b{target};
  std::size_t depth_a = 0;
  std::size_t depth_b = 0;
  while (!front_a.empty() && !front_b.empty()) {
    const bool expand_a = front_a.size() <= front_b.size();
    auto& mine = expand_a ? side_a : side_b;
    auto& other = expand_a ? side_b : side_a;
    auto& front = expand_a ? front_a : front_b;
    std::vector<std::uint64_t> next;
    std::optional<std::uint64_t> meet;
    for (std::uint64_t s : front) {
      for (std::uint32_t gi = 0; gi < gs.masks.size(); ++gi) {
        const std::uint64_t x = s ^ gs.masks[gi];
        if (mine.count(x)) continue;
        mine.emplace(x, gi);
        next.push_back(x);
        if (other.count(x) && (!meet || x < *meet)) meet = x;
      }
      if (side_a.size() + side_b.size() > opt.mitm_state_cap) {
        throw BudgetExceeded("meet-in-the-middle search exceeded " + std::to_string(opt.mitm_state_cap) + " states");
      }
    }
    (expand_a ? depth_a : depth_b) += 1;
    front = std::move(next);
    if (meet) {
      out.distance = depth_a + depth_b;
      std::vector<std::size_t> left;
      for (std::uint64_t x = *meet; side_a.at(x) != kRoot;) {
        const std::uint32_t gi = side_a.at(x);
        left.push_back(gi);
        x ^= gs.masks[gi];
      }
      std::reverse(left.begin(), left.end());
      for (std::uint64_t x = *meet; side_b.at(x) != kRoot;) {
        const std::uint32_t gi = side_b.at(x);
        left.push_back(gi);
        x ^= gs.masks[gi];
      }
      out.seq = std::move(left);
      out.visited = side_a.size() + side_b.size();
      return out;
    }
  }
  out.visited = side_a.size() + side_b.size();
  return out;
}

inline void check_host(const LabelledGraph& g, const Orientation& o) {
  if (o.size() != g.m()) {
    throw Error("orientation has " + std::to_string(o.size()) + " bits but graph has " + std::to_string(g.m()) +
                " edges");
  }
}

}  // namespace detail

inline OracleResult distance_of_mask(const LabelledGraph& g, std::size_t p, std::uint64_t target,
                                     const OracleOptions& opt = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  const bool full = g.m() <= opt.max_edges;
  if (!full && g.m() > opt.mitm_max_edges) {
    throw BudgetExceeded("m=" + std::to_string(g.m()) + " exceeds the oracle budget (max-edges " +
                         std::to_string(opt.max_edges) + ", meet-in-the-middle " +
                         std::to_string(opt.mitm_max_edges) + ")");
  }
  const GeneratorSet gs = generator_masks(g, p);
  detail::BfsOutcome bo = full ? detail::run_bfs(gs, target, opt, true) : detail::run_mitm(gs, target, opt);
  OracleResult r;
  r.value = bo.distance;
  r.target_mask = target;
  if (bo.distance) r.witness_plan = detail::plan_from_sequence(gs, bo.seq, p);
  r.stats.states_visited = bo.visited;
  r.stats.generators = gs.size();
  r.stats.mode = full ? "bfs" : "mitm";
  r.stats.layer_sizes = std::move(bo.layer_sizes);
  r.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

inline OracleResult distance(const LabelledGraph& g, std::size_t p, const Orientation& o1, const Orientation& o2,
                             const OracleOptions& opt = {}) {
  detail::check_host(g, o1);
  detail::check_host(g, o2);
  if (g.m() > 64) throw BudgetExceeded("m=" + std::to_string(g.m()) + " exceeds the oracle budget");
  return distance_of_mask(g, p, disagreement(o1, o2).to_u64(), opt);
}

inline OracleResult diameter(const LabelledGraph& g, std::size_t p, const OracleOptions& opt = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  if (g.m() > opt.max_edges) {
    throw BudgetExceeded("diameter needs a full search; m=" + std::to_string(g.m()) + " exceeds max-edges " +
                         std::to_string(opt.max_edges));
  }
  const GeneratorSet gs = generator_masks(g, p);
  OracleResult r;
  if (gs.size() == 0 && g.m() > 0) {
    r.value.reset();
  } else {
    detail::BfsOutcome bo = detail::run_bfs(gs, std::nullopt, opt, true);
    r.value = bo.eccentricity;
    r.target_mask = bo.farthest;
    r.witness_plan = detail::plan_from_sequence(gs, bo.seq, p);
    r.stats.states_visited = bo.visited;
    r.stats.layer_sizes = std::move(bo.layer_sizes);
  }
  r.stats.generators = gs.size();
  r.stats.mode = "bfs";
  r.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

inline OracleResult converse_number(const LabelledGraph& g, std::size_t p, const OracleOptions& opt = {}) {
  if (g.m() > 64) throw BudgetExceeded("m=" + std::to_string(g.m()) + " exceeds the oracle budget");
  const std::uint64_t all = g.m() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.m()) - 1;
  return distance_of_mask(g, p, all, opt);
}

}  // namespace invdiam
