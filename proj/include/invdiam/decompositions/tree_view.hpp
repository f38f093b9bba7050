#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "invdiam/error.hpp"
#include "invdiam/graph.hpp"

namespace invdiam {

// A subtree of a host tree given by a set of live vertices. Vertex removal
// is O(degree); the live vertices are expected to induce a tree.
class TreeView {
 public:
  explicit TreeView(const LabelledGraph& host) : host_(&host), alive_(host.n(), 1), deg_(host.n()) {
    for (Vertex v = 0; v < host.n(); ++v) deg_[v] = host.degree(v);
    size_ = host.n();
  }

  TreeView(const LabelledGraph& host, const std::vector<Vertex>& vertices)
      : host_(&host), alive_(host.n(), 0), deg_(host.n(), 0) {
    for (Vertex v : vertices) {
      if (!alive_.at(v)) ++size_;
      alive_[v] = 1;
    }
    for (Vertex v : vertices) {
      std::size_t d = 0;
      for (const Incidence& inc : host.incidences(v)) d += alive_[inc.neighbour];
      deg_[v] = d;
    }
  }

  const LabelledGraph& host() const { return *host_; }
  std::size_t size() const { return size_; }
  bool alive(Vertex v) const { return alive_[v] != 0; }
  std::size_t degree(Vertex v) const { return deg_[v]; }

  std::vector<Vertex> neighbours(Vertex v) const {
    std::vector<Vertex> out;
    for (const Incidence& inc : host_->incidences(v)) {
      if (alive_[inc.neighbour]) out.push_back(inc.neighbour);
    }
    return out;
  }

  // Live neighbours of v other than those listed in `except`, ascending.
  std::vector<Vertex> neighbours_except(Vertex v, std::initializer_list<Vertex> except) const {
    std::vector<Vertex> out;
    for (Vertex w : neighbours(v)) {
      if (std::find(except.begin(), except.end(), w) == except.end()) out.push_back(w);
    }
    return out;
  }

  std::vector<Vertex> vertices() const {
    std::vector<Vertex> out;
    out.reserve(size_);
    for (Vertex v = 0; v < host_->n(); ++v) {
      if (alive_[v]) out.push_back(v);
    }
    return out;
  }

  void remove(Vertex v) {
    if (!alive_[v]) throw Error("vertex " + std::to_string(v) + " already removed");
    alive_[v] = 0;
    --size_;
    for (const Incidence& inc : host_->incidences(v)) {
      if (alive_[inc.neighbour]) --deg_[inc.neighbour];
    }
  }

  // Edges of the host with both ends in x (x must hold distinct live vertices).
  std::size_t edges_within(const std::vector<Vertex>& x) const {
    std::size_t twice = 0;
    for (Vertex a : x) {
      for (Vertex b : x) twice += (a != b && host_->adjacent(a, b)) ? 1 : 0;
    }
    return twice / 2;
  }

  // Removing the distinct live vertices r leaves a (nonempty) tree.
  bool removal_leaves_tree(const std::vector<Vertex>& r) const {
    if (r.size() >= size_) return false;
    std::size_t touching = 0;
    for (Vertex v : r) touching += deg_[v];
    return touching - edges_within(r) == r.size();
  }

  // Breadth-first distances from s over live vertices (unreached = -1).
  std::vector<long> distances(Vertex s) const {
    std::vector<long> dist(host_->n(), -1);
    std::vector<Vertex> queue{s};
    dist[s] = 0;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      for (const Incidence& inc : host_->incidences(queue[h])) {
        if (alive_[inc.neighbour] && dist[inc.neighbour] < 0) {
          dist[inc.neighbour] = dist[queue[h]] + 1;
          queue.push_back(inc.neighbour);
        }
      }
    }
    return dist;
  }

  // The lexicographically least longest path, as a vertex sequence.
  std::vector<Vertex> longest_path() const {
    auto verts = vertices();
    if (verts.empty()) return {};
    auto farthest = [&](const std::vector<long>& d) {
      Vertex best = verts.front();
      for (Vertex v : verts) {
        if (d[v] > d[best]) best = v;
      }
      return best;
    };
    const Vertex a = farthest(distances(verts.front()));
    const auto da = distances(a);
    const Vertex b = farthest(da);
    const auto db = distances(b);
    const long diam = da[b];
    Vertex start = a;
    for (Vertex v : verts) {
      if (std::max(da[v], db[v]) == diam) {
        start = v;
        break;
      }
    }
    // root at start; height[v] = longest downward path length
    std::vector<Vertex> order{start};
    std::vector<Vertex> parent(host_->n(), start);
    std::vector<char> seen(host_->n(), 0);
    seen[start] = 1;
    for (std::size_t h = 0; h < order.size(); ++h) {
      for (const Incidence& inc : host_->incidences(order[h])) {
        if (alive_[inc.neighbour] && !seen[inc.neighbour]) {
          seen[inc.neighbour] = 1;
          parent[inc.neighbour] = order[h];
          order.push_back(inc.neighbour);
        }
      }
    }
    std::vector<long> height(host_->n(), 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      if (*it != start) height[parent[*it]] = std::max(height[parent[*it]], height[*it] + 1);
    }
    std::vector<Vertex> path{start};
    Vertex cur = start;
    for (long need = diam - 1; need >= 0; --need) {
      for (const Incidence& inc : host_->incidences(cur)) {
        const Vertex c = inc.neighbour;
        if (alive_[c] && parent[c] == cur && c != start && height[c] == need) {
          cur = c;
          break;
        }
      }
      path.push_back(cur);
    }
    return path;
  }

 private:
  const LabelledGraph* host_;
  std::vector<char> alive_;
  std::vector<std::size_t> deg_;
  std::size_t size_ = 0;
};

inline void require_tree(const LabelledGraph& t, const char* who) {
  if (!is_tree(t)) throw Error(std::string(who) + " needs a tree");
}

}  // namespace invdiam
