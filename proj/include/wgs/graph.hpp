#pragma once

#include <cstdint>
#include <unordered_set>
#include <utility>
#include <vector>

namespace wgs {

// Immutable undirected simple graph on vertices 0..n-1. Adjacency is kept
// both as sorted neighbor lists and as a hashed edge set, so adjacency tests
// run in constant expected time (the query model requires it).
class Graph {
 public:
  Graph() = default;
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }

  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  bool adjacent(int u, int v) const {
    if (u == v) return false;
    return edge_set_.count(key(u, v)) != 0;
  }

  // canonical edge list: u < v, lexicographically sorted
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  // subgraph induced by `verts` (need not be sorted; duplicates rejected).
  // Vertices are relabeled by rank in the sorted vertex list; the mapping
  // new->old is returned through `old_ids`.
  Graph induced(const std::vector<int>& verts, std::vector<int>* old_ids = nullptr) const;

 private:
  int n_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<std::pair<int, int>> edges_;
  std::unordered_set<uint64_t> edge_set_;

  static uint64_t key(int u, int v) {
    if (u > v) std::swap(u, v);
    return (static_cast<uint64_t>(static_cast<uint32_t>(u)) << 32) |
           static_cast<uint32_t>(v);
  }
};

struct DegeneracyOrder {
  std::vector<int> order;  // peeling order; every vertex has <= t later neighbors
  int t = 0;
};

// min-degree peeling with smallest-index tie-breaking
DegeneracyOrder degeneracy(const Graph& g);

// same vertex set, u~v iff 1 <= dist_G(u,v) <= k
Graph distance_power(const Graph& g, int k);

}  // namespace wgs
