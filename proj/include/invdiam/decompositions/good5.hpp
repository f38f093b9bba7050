#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "invdiam/decompositions/tree_view.hpp"
#include "invdiam/error.hpp"
#include "invdiam/graph.hpp"

namespace invdiam {

struct Good5Witness {
  enum class Kind { set, pair };
  Kind kind = Kind::set;
  std::vector<Vertex> x1;  // the set, or the four-edge member of a pair
  std::vector<Vertex> x2;  // empty for a set
  Vertex t1 = 0;
  Vertex t2 = 0;
  std::string rule;  // which case produced it
};

namespace detail {

inline bool distinct_live(const TreeView& t, const std::vector<Vertex>& x) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!t.alive(x[i])) return false;
    for (std::size_t j = 0; j < i; ++j) {
      if (x[i] == x[j]) return false;
    }
  }
  return true;
}

inline bool contains(const std::vector<Vertex>& x, Vertex v) { return std::find(x.begin(), x.end(), v) != x.end(); }

// Good 5-set with root r.
inline bool good5_set(const TreeView& t, const std::vector<Vertex>& x, Vertex r) {
  if (x.size() != 5 || !distinct_live(t, x) || !contains(x, r)) return false;
  if (t.edges_within(x) != 4) return false;
  std::vector<Vertex> rest;
  for (Vertex v : x) {
    if (v != r) rest.push_back(v);
  }
  return t.removal_leaves_tree(rest);
}

// Good 5-pair with roots r1, r2, as defined.
inline bool good5_pair(const TreeView& t, const std::vector<Vertex>& x1, const std::vector<Vertex>& x2, Vertex r1,
                       Vertex r2) {
  if (x1.size() > 5 || x2.size() > 5 || !distinct_live(t, x1) || !distinct_live(t, x2)) return false;
  if (t.edges_within(x1) != 4 || t.edges_within(x2) != 3) return false;
  std::vector<Vertex> common, removed;
  for (Vertex v : x1) {
    if (contains(x2, v)) common.push_back(v);
  }
  if (t.edges_within(common) != 0) return false;
  for (Vertex v : x1) {
    if (v != r1 && v != r2) removed.push_back(v);
  }
  for (Vertex v : x2) {
    if (v != r1 && v != r2 && !contains(x1, v)) removed.push_back(v);
  }
  return t.removal_leaves_tree(removed);
}

// A pair that can actually be used to reverse the tree: roots inside their
// sets, exactly seven vertices removed, and neither induced subgraph keeps
// an edge of the remaining tree.
inline bool good5_pair_usable(const TreeView& t, const std::vector<Vertex>& x1, const std::vector<Vertex>& x2,
                              Vertex r1, Vertex r2) {
  if (!good5_pair(t, x1, x2, r1, r2) || !contains(x1, r1) || !contains(x2, r2)) return false;
  std::vector<Vertex> all = x1;
  for (Vertex v : x2) {
    if (!contains(all, v)) all.push_back(v);
  }
  const std::size_t roots = r1 == r2 ? 1 : 2;
  if (all.size() != 7 + roots) return false;
  if (r1 != r2 && t.host().adjacent(r1, r2)) {
    if ((contains(x1, r1) && contains(x1, r2)) || (contains(x2, r1) && contains(x2, r2))) return false;
  }
  return true;
}

class Good5Search {
 public:
  explicit Good5Search(const TreeView& t) : t_(t) {}

  std::optional<Good5Witness> run() {
    if (auto w = four_leaves()) return w;
    auto path = t_.longest_path();
    std::vector<Vertex> rev(path.rbegin(), path.rend());
    for (const auto& p : {path, rev}) {
      if (auto w = claim_v2(p)) return w;
      if (auto w = claim_v3(p)) return w;
      if (auto w = final_cases(p)) return w;
    }
    if (auto w = search_sets()) return w;
    if (t_.size() <= 18) return search_pairs();
    return std::nullopt;
  }

 private:
  const TreeView& t_;

  std::optional<Good5Witness> set(std::vector<Vertex> x, Vertex r, const char* rule) const {
    if (!good5_set(t_, x, r)) return std::nullopt;
    std::sort(x.begin(), x.end());
    return Good5Witness{Good5Witness::Kind::set, std::move(x), {}, r, r, rule};
  }

  std::optional<Good5Witness> pair(std::vector<Vertex> x1, std::vector<Vertex> x2, Vertex r1, Vertex r2,
                                   const char* rule) const {
    if (!good5_pair_usable(t_, x1, x2, r1, r2)) return std::nullopt;
    std::sort(x1.begin(), x1.end());
    std::sort(x2.begin(), x2.end());
    return Good5Witness{Good5Witness::Kind::pair, std::move(x1), std::move(x2), r1, r2, rule};
  }

  std::vector<Vertex> leaf_neighbours(Vertex v) const {
    std::vector<Vertex> out;
    for (Vertex w : t_.neighbours(v)) {
      if (t_.degree(w) == 1) out.push_back(w);
    }
    return out;
  }

  std::optional<Good5Witness> four_leaves_at(Vertex v) const {
    auto l = leaf_neighbours(v);
    if (l.size() < 4) return std::nullopt;
    return set({l[0], l[1], l[2], l[3], v}, v, "four-leaves");
  }

  std::optional<Good5Witness> four_leaves() const {
    for (Vertex v : t_.vertices()) {
      if (auto w = four_leaves_at(v)) return w;
    }
    return std::nullopt;
  }

  // Path with d(v2) >= 3.
  std::optional<Good5Witness> claim_v2(const std::vector<Vertex>& p) const {
    const std::size_t len = p.size();
    if (len < 4) return std::nullopt;
    const Vertex v1 = p[0], v2 = p[1], v3 = p[2], v4 = p[3];
    const std::size_t d2 = t_.degree(v2);
    if (d2 <= 2) return std::nullopt;
    if (d2 >= 5) return four_leaves_at(v2);
    const auto side = t_.neighbours_except(v2, {v1, v3});
    if (d2 == 4) return set({v1, side[0], side[1], v2, v3}, v3, "v2-degree-4");
    const Vertex u1 = side[0];
    if (t_.degree(v3) == 2) return set({u1, v1, v2, v3, v4}, v4, "v2-degree-3-v3-degree-2");
    const auto others = t_.neighbours_except(v3, {v2, v4});
    for (Vertex w2 : others) {
      if (t_.degree(w2) == 1) {
        if (auto w = set({u1, v1, v2, w2, v3}, v3, "v2-degree-3-leaf-at-v3")) return w;
      }
    }
    const Vertex vl = p[len - 1], vl1 = p[len - 2], vl2 = p[len - 3];
    for (Vertex w2 : others) {
      const std::size_t dw = t_.degree(w2);
      if (dw == 1) continue;
      const std::vector<Vertex> x1{u1, v1, v2, w2, v3};
      const auto below = t_.neighbours_except(w2, {v3});
      std::optional<Good5Witness> w;
      if (dw >= 5) {
        w = four_leaves_at(w2);
      } else if (dw == 4) {
        w = set({below[0], below[1], below[2], w2, v3}, v3, "v2-degree-3-fork-at-v3");
      } else if (dw == 2) {
        if (t_.degree(vl1) >= 3) {
          const Vertex wl = t_.neighbours_except(vl1, {vl2, vl})[0];
          w = pair(x1, {below[0], w2, vl, wl, vl1}, v3, vl1, "v2-degree-3-path-pair-fork");
        } else {
          w = pair(x1, {below[0], w2, vl, vl1, vl2}, v3, vl2, "v2-degree-3-path-pair");
        }
      } else {
        w = pair(x1, {below[0], below[1], w2, vl, vl1}, v3, vl1, "v2-degree-3-cherry-pair");
      }
      if (w) return w;
    }
    return std::nullopt;
  }

  // Path with d(v2) = 2.
  std::optional<Good5Witness> claim_v3(const std::vector<Vertex>& p) const {
    if (p.size() < 4) return std::nullopt;
    const Vertex v1 = p[0], v2 = p[1], v3 = p[2], v4 = p[3];
    const auto others = t_.neighbours_except(v3, {v2, v4});
    for (Vertex w : others) {
      if (t_.degree(w) >= 3) {
        std::vector<Vertex> alt{t_.neighbours_except(w, {v3})[0], w};
        alt.insert(alt.end(), p.begin() + 2, p.end());
        if (auto r = claim_v2(alt)) return r;
      }
    }
    for (Vertex w : others) {
      if (t_.degree(w) == 2) {
        const Vertex w1 = t_.neighbours_except(w, {v3})[0];
        if (auto r = set({v1, w1, v2, w, v3}, v3, "v3-pendant-path")) return r;
      }
    }
    if (others.size() >= 2) return set({v1, v2, others[0], others[1], v3}, v3, "v3-two-leaves");
    if (others.size() == 1) return set({v1, v2, others[0], v3, v4}, v4, "v3-one-leaf");
    return std::nullopt;
  }

  // Path with d(v2) = d(v3) = 2.
  std::optional<Good5Witness> final_cases(const std::vector<Vertex>& p) const {
    const std::size_t len = p.size();
    if (len < 5) return std::nullopt;
    const Vertex v1 = p[0], v2 = p[1], v3 = p[2], v4 = p[3], v5 = p[4];
    if (t_.degree(v4) == 2) return set({v1, v2, v3, v4, v5}, v5, "v4-degree-2");
    const Vertex vl = p[len - 1], vl1 = p[len - 2], vl2 = p[len - 3];
    const std::vector<Vertex> x1{v1, v2, v3, 0, v4};
    for (Vertex w3 : t_.neighbours_except(v4, {v3, v5})) {
      auto x = x1;
      x[3] = w3;
      std::optional<Good5Witness> r;
      if (t_.degree(w3) == 1) {
        r = set(x, v4, "w3-leaf");
        if (r) return r;
        continue;
      }
      std::optional<Vertex> w2;
      for (Vertex y : t_.neighbours_except(w3, {v4})) {
        if (t_.degree(y) >= 2) {
          w2 = y;
          break;
        }
      }
      if (w2) {
        const Vertex w1 = t_.neighbours_except(*w2, {w3})[0];
        std::vector<Vertex> alt{w1, *w2, w3};
        alt.insert(alt.end(), p.begin() + 3, p.end());
        if ((r = claim_v2(alt))) return r;
        if ((r = claim_v3(alt))) return r;
        if ((r = pair(x, {w1, *w2, w3, vl, vl1}, v4, vl1, "w3-pendant-path-pair"))) return r;
        continue;
      }
      const auto leaves = t_.neighbours_except(w3, {v4});
      if (leaves.size() >= 4) {
        r = four_leaves_at(w3);
      } else if (leaves.size() == 3) {
        r = set({leaves[0], leaves[1], leaves[2], w3, v4}, v4, "w3-three-leaves");
      } else if (leaves.size() == 2) {
        r = pair(x, {leaves[0], leaves[1], w3, vl, vl1}, v4, vl1, "w3-two-leaves-pair");
      } else {
        std::vector<Vertex> rev(p.rbegin(), p.rend());
        if ((r = claim_v2(rev))) return r;
        if ((r = claim_v3(rev))) return r;
        r = pair(x, {leaves[0], w3, vl, vl1, vl2}, v4, vl2, "w3-one-leaf-pair");
      }
      if (r) return r;
    }
    return std::nullopt;
  }

  // Subtrees of five vertices, via extension sets.
  void for_each_subtree5(const std::function<bool(const std::vector<Vertex>&)>& visit) const {
    const auto verts = t_.vertices();
    std::vector<Vertex> cur;
    bool stop = false;
    auto rec = [&](auto&& self, std::vector<Vertex> ext, Vertex root) -> void {
      if (stop) return;
      if (cur.size() == 5) {
        stop = visit(cur);
        return;
      }
      while (!ext.empty() && !stop) {
        const Vertex w = ext.back();
        ext.pop_back();
        auto next = ext;
        for (Vertex y : t_.neighbours(w)) {
          if (y > root && !contains(cur, y) && !contains(next, y) && y != w) {
            bool adjacent_to_cur = false;
            for (Vertex c : cur) adjacent_to_cur = adjacent_to_cur || t_.host().adjacent(c, y);
            if (!adjacent_to_cur) next.push_back(y);
          }
        }
        cur.push_back(w);
        self(self, next, root);
        cur.pop_back();
      }
    };
    for (Vertex v : verts) {
      cur = {v};
      std::vector<Vertex> ext;
      for (Vertex y : t_.neighbours(v)) {
        if (y > v) ext.push_back(y);
      }
      rec(rec, ext, v);
      if (stop) return;
    }
  }

  std::optional<Good5Witness> search_sets() const {
    std::optional<Good5Witness> found;
    for_each_subtree5([&](const std::vector<Vertex>& x) {
      auto sorted = x;
      std::sort(sorted.begin(), sorted.end());
      for (Vertex r : sorted) {
        if ((found = set(sorted, r, "search-set"))) return true;
      }
      return false;
    });
    return found;
  }

  std::optional<Good5Witness> search_pairs() const {
    std::vector<std::vector<Vertex>> fives;
    for_each_subtree5([&](const std::vector<Vertex>& x) {
      auto s = x;
      std::sort(s.begin(), s.end());
      fives.push_back(std::move(s));
      return false;
    });
    std::sort(fives.begin(), fives.end());
    // second members: vertex sets of size 4 or 5 spanning exactly three edges
    const auto verts = t_.vertices();
    std::vector<std::vector<Vertex>> threes;
    std::vector<Vertex> cur;
    auto rec = [&](auto&& self, std::size_t from) -> void {
      if (cur.size() >= 4 && t_.edges_within(cur) == 3) threes.push_back(cur);
      if (cur.size() == 5) return;
      for (std::size_t i = from; i < verts.size(); ++i) {
        cur.push_back(verts[i]);
        if (t_.edges_within(cur) <= 3) self(self, i + 1);
        cur.pop_back();
      }
    };
    rec(rec, 0);
    for (const auto& x1 : fives) {
      for (const auto& x2 : threes) {
        std::size_t shared = 0;
        for (Vertex v : x2) shared += contains(x1, v) ? 1 : 0;
        if (x1.size() + x2.size() - shared < 8) continue;
        for (Vertex r1 : x1) {
          for (Vertex r2 : x2) {
            if (auto w = pair(x1, x2, r1, r2, "search-pair")) return w;
          }
        }
      }
    }
    return std::nullopt;
  }
};

inline Good5Witness find_good5(const TreeView& t) {
  if (t.size() < 5) throw Error("find_good5 needs at least 5 vertices");
  auto w = Good5Search(t).run();
  if (!w) throw Error("no good 5-set or usable good 5-pair found");
  return *w;
}

}  // namespace detail

// A good 5-set or a usable good 5-pair of the tree t (n >= 5).
inline Good5Witness find_good5(const LabelledGraph& t) {
  require_tree(t, "find_good5");
  return detail::find_good5(TreeView(t));
}

inline bool is_good5_witness(const LabelledGraph& t, const Good5Witness& w) {
  TreeView view(t);
  if (w.kind == Good5Witness::Kind::set) return detail::good5_set(view, w.x1, w.t1);
  return detail::good5_pair(view, w.x1, w.x2, w.t1, w.t2);
}

// Pairs additionally need exactly seven removed vertices and no induced edge
// inside the remaining tree.
inline bool is_usable_good5_witness(const LabelledGraph& t, const Good5Witness& w) {
  TreeView view(t);
  if (w.kind == Good5Witness::Kind::set) return detail::good5_set(view, w.x1, w.t1);
  return detail::good5_pair_usable(view, w.x1, w.x2, w.t1, w.t2);
}

}  // namespace invdiam
