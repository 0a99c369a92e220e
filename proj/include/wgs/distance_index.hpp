#pragma once

#include <limits>
#include <span>
#include <vector>

#include "wgs/graph.hpp"

namespace wgs {

inline constexpr int kUnboundedRadius = std::numeric_limits<int>::max();
inline constexpr int kInfDist = std::numeric_limits<int>::max();

// Truncated BFS tables, one row per source. Row u stores the vertices at
// distance 0..min(radius, ecc(u)) from u, grouped by level and sorted within
// each level. An n x n matrix is deliberately avoided: the radius is small
// while graphs may be large.
class DistanceIndex {
 public:
  int radius() const { return radius_; }
  int n() const { return static_cast<int>(offsets_.size()); }

  // kInfDist when the true distance exceeds the radius
  int dist(int u, int v) const {
    int top = max_level(u);
    for (int l = 0; l <= top; ++l) {
      if (at_level(u, l, v)) return l;
    }
    return kInfDist;
  }

  bool known(int u, int v) const { return dist(u, v) != kInfDist; }

  int max_level(int u) const { return static_cast<int>(offsets_[u].size()) - 2; }

  std::span<const int> level(int u, int l) const {
    if (l < 0 || l > max_level(u)) return {};
    return {verts_[u].data() + offsets_[u][l],
            static_cast<size_t>(offsets_[u][l + 1] - offsets_[u][l])};
  }

  bool at_level(int u, int l, int v) const {
    auto lv = level(u, l);
    return std::binary_search(lv.begin(), lv.end(), v);
  }

  friend DistanceIndex build_index(const Graph& g, int radius, int threads);

 private:
  int radius_ = 0;
  std::vector<std::vector<int>> verts_;    // per source, levels concatenated
  std::vector<std::vector<int>> offsets_;  // per source, level start offsets
};

// Per-source truncated BFS. `threads` > 1 splits the sources across worker
// threads; assembly is order-independent so the result is identical.
DistanceIndex build_index(const Graph& g, int radius, int threads = 1);

// {w in N(u) : dist(w,v) = dist(u,v)-1}; throws if dist(u,v) is not in the
// index or u == v
std::vector<int> gate_set(const Graph& g, const DistanceIndex& idx, int u, int v);

// R_r(u,z) = {v : 2 <= dist(u,v) <= r and z in gate(u,v)}; u,z must be adjacent
std::vector<int> shortest_path_region(const Graph& g, const DistanceIndex& idx, int u,
                                      int z, int r);

}  // namespace wgs
