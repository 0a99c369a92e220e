#pragma once

#include <vector>

#include "wgs/graph.hpp"
#include "wgs/orientation.hpp"
#include "wgs/rng.hpp"

namespace wgs {

struct QueryAnswer {
  bool within_r = false;
  int distance = -1;      // valid when within_r
  std::vector<int> path;  // concrete u..v path of that length
};

// Deterministic query against a weak r-guidance system (assumed valid, not
// re-checked): directed walks from both ends joined by one graph edge, scanned
// in increasing total length; the first hit is the exact distance.
QueryAnswer query_distance(const Graph& g, const PartialOrientation& h, int u, int v,
                           int r);

struct Exploration {
  std::vector<int> walk_u;  // starts at u
  std::vector<int> walk_v;  // starts at v
};

// recursive randomized exploration: adjacency and radius-one base cases,
// otherwise a uniform side choice followed by a p-random step
Exploration random_exploration(const Graph& g, const FractionalOrientation& p, int u,
                               int v, int r, Rng& rng);

// true when the two walks are disjoint and meet (shared endpoint or one
// connecting edge); *length_out receives the edge count of the joined path
bool exploration_forms_path(const Graph& g, const Exploration& e, int* length_out);

// Runs ceil(confidence_k * (4c)^(r-1)) explorations and reports the shortest
// verified path; one-sided error, "greater than r" wrong with probability at
// most exp(-confidence_k) when the true distance is within r.
QueryAnswer query_probabilistic(const Graph& g, const FractionalOrientation& p, int u,
                                int v, int r, double confidence_k, Rng& rng);

}  // namespace wgs
