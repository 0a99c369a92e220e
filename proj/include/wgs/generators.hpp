#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "wgs/graph.hpp"
#include "wgs/orientation.hpp"
#include "wgs/synthesize.hpp"
#include "wgs/tree_model.hpp"

namespace wgs {

// base graph plus a universal vertex (index n), all incident edges oriented
// toward it; a plus-guidance system of outdegree one for every r
std::pair<Graph, PartialOrientation> universal_vertex_graph(const Graph& base);

// square of the twice-subdivided star K_{1,n}; X are the leaves, Y the
// neighbors of the center
struct SubdividedStarPower {
  Graph tree;
  Graph graph;  // tree^2
  std::vector<int> x_set;
  std::vector<int> y_set;
};

SubdividedStarPower subdivided_star_power(int n);

// every X-pair is joined by exactly one shortest path of length three and it
// uses exactly one Y-clique edge
bool subdivided_star_structure_ok(const SubdividedStarPower& s);

// random bipartite L x R with hub vertices, plus the explicit fractional
// weights (3/a on hub rows, 2.5/a on R->L and L->first-part rows)
struct GakInstance {
  int a = 0, k = 0, m = 0;
  Graph graph;
  std::vector<int> l_set;
  std::vector<int> r_set;
  std::vector<std::vector<int>> parts;
  std::vector<int> hubs;
  FractionalOrientation p_explicit;
};

GakInstance gak_instance(int a, int k, uint64_t seed);

// split graph from the projective plane of prime order n: points form a
// clique, lines an independent set, incidence edges between them
struct ProjectiveSplit {
  int order = 0;
  Graph graph;
  std::vector<int> points;  // the clique
  std::vector<int> lines;   // the independent set
};

ProjectiveSplit projective_split_graph(int n);

struct LabeledGraph {
  Graph graph;
  std::vector<int> label;  // 1..6
};

// recursive clique-width-6 family; |V| = a(|V_{d-1}|+2)+2 with H_0 = K_2
LabeledGraph halfgraph_hard_instance(int d, int a);

std::vector<Interval> random_interval_set(int n, uint64_t seed);

Graph random_graph(int n, double edge_probability, uint64_t seed);
Graph petersen();
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);  // K_{1,leaves}, center 0

TreeModel random_tree_model(int m, int d, int leaves, uint64_t seed);

}  // namespace wgs
