#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "invdiam/decompositions/tree_view.hpp"
#include "invdiam/error.hpp"
#include "invdiam/graph.hpp"

namespace invdiam {

inline double extract_constant() { return std::sqrt(2.0 + std::sqrt(2.0)); }

// p - c*sqrt(p), the guaranteed number of induced edges.
inline double extract_threshold(std::size_t p) {
  return static_cast<double>(p) - extract_constant() * std::sqrt(static_cast<double>(p));
}

struct ExtractedSet {
  std::vector<Vertex> x;  // ascending
  Vertex root = 0;
  std::size_t edge_count = 0;
};

namespace detail {

class Extractor {
 public:
  Extractor(const TreeView& t, Vertex root) : t_(t), parent_(t.host().n(), kNone), size_(t.host().n(), 0) {
    std::vector<Vertex> order{root};
    parent_[root] = root;
    for (std::size_t h = 0; h < order.size(); ++h) {
      for (Vertex w : t.neighbours(order[h])) {
        if (parent_[w] == kNone) {
          parent_[w] = order[h];
          order.push_back(w);
        }
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      size_[*it] += 1;
      if (*it != root) size_[parent_[*it]] += size_[*it];
    }
  }

  std::vector<Vertex> run(Vertex r, std::size_t p) const {
    std::vector<Vertex> kids = children(r);
    std::stable_sort(kids.begin(), kids.end(), [&](Vertex a, Vertex b) { return size_[a] > size_[b]; });
    std::size_t total = size_[r];
    while (!kids.empty() && total - size_[kids.back()] >= p) {
      total -= size_[kids.back()];
      kids.pop_back();
    }
    std::vector<Vertex> x;
    if (total == p) {
      x.push_back(r);
      for (Vertex k : kids) collect(k, x);
      return x;
    }
    if (kids.size() == 1) return run(kids[0], p);
    const Vertex last = kids.back();
    const std::size_t alpha = total - 1 - size_[last];
    if (static_cast<double>(size_[last]) <= extract_constant() * std::sqrt(static_cast<double>(p))) {
      x.push_back(r);
    } else if (p - alpha <= 3) {
      x.push_back(last);
    } else {
      x = run(last, p - alpha);
    }
    for (std::size_t i = 0; i + 1 < kids.size(); ++i) collect(kids[i], x);
    return x;
  }

 private:
  static constexpr Vertex kNone = static_cast<Vertex>(-1);
  const TreeView& t_;
  std::vector<Vertex> parent_;
  std::vector<std::size_t> size_;

  std::vector<Vertex> children(Vertex v) const {
    std::vector<Vertex> out;
    for (Vertex w : t_.neighbours(v)) {
      if (parent_[w] == v && w != v) out.push_back(w);
    }
    return out;
  }

  void collect(Vertex v, std::vector<Vertex>& out) const {
    std::vector<Vertex> stack{v};
    while (!stack.empty()) {
      const Vertex a = stack.back();
      stack.pop_back();
      out.push_back(a);
      for (Vertex c : children(a)) stack.push_back(c);
    }
  }
};

inline ExtractedSet tree_extract_set(const TreeView& t, Vertex r, std::size_t p) {
  if (p < 4) throw Error("tree_extract_set needs p >= 4");
  if (!t.alive(r)) throw Error("root is not a vertex of the tree");
  if (t.size() < p) throw Error("tree_extract_set needs at least p vertices");
  ExtractedSet out;
  out.x = Extractor(t, r).run(r, p);
  std::sort(out.x.begin(), out.x.end());
  out.root = r;
  out.edge_count = t.edges_within(out.x);
  return out;
}

}  // namespace detail

// X with |X| <= p, at least p - c*sqrt(p) induced edges (c = sqrt(2+sqrt 2)),
// and every nontrivial component of T minus those edges containing r.
inline ExtractedSet tree_extract_set(const LabelledGraph& t, Vertex r, std::size_t p) {
  require_tree(t, "tree_extract_set");
  if (r >= t.n()) throw Error("root out of range");
  return detail::tree_extract_set(TreeView(t), r, p);
}

}  // namespace invdiam
