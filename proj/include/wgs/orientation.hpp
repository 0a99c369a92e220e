#pragma once

#include <utility>
#include <vector>

#include "wgs/graph.hpp"

namespace wgs {

// Set of directed edges over the edge set of an underlying graph. Both
// directions of one edge may be present. Treated as immutable once built.
struct PartialOrientation {
  int n = 0;
  std::vector<std::vector<int>> out;  // sorted out-neighbor lists

  PartialOrientation() = default;
  explicit PartialOrientation(int n_) : n(n_), out(n_) {}

  // validates every directed edge against g and dedupes
  static PartialOrientation from_edges(const Graph& g,
                                       const std::vector<std::pair<int, int>>& arcs);

  bool has(int u, int v) const;
  std::vector<std::pair<int, int>> arcs() const;  // sorted (u,v) list
};

// Nonnegative weight per ordered adjacent pair; absent pairs mean weight 0.
// Entries are kept sparse and sorted by neighbor.
struct FractionalOrientation {
  int n = 0;
  std::vector<std::vector<std::pair<int, double>>> w;

  FractionalOrientation() = default;
  explicit FractionalOrientation(int n_) : n(n_), w(n_) {}

  static FractionalOrientation from_entries(
      const Graph& g, const std::vector<std::tuple<int, int, double>>& entries);

  double weight(int u, int v) const;
  double out_sum(int u) const;
  void set(int u, int v, double value);  // keeps the row sorted; used by builders
};

// exact set of vertices reachable from u by directed paths of length <= a
std::vector<int> reach_set(const PartialOrientation& h, int u, int a);

int max_outdegree(const PartialOrientation& h);
double max_outdegree(const FractionalOrientation& p);

// weight 1 exactly on the directed edges of h
FractionalOrientation to_fractional(const PartialOrientation& h);

// unions two orientations on the same vertex set
PartialOrientation orientation_union(const PartialOrientation& a,
                                     const PartialOrientation& b);

}  // namespace wgs
