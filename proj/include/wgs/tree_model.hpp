#pragma once

#include <set>
#include <vector>

#include "wgs/graph.hpp"

namespace wgs {

// (m,d)-tree model: a rooted tree whose leaves are the graph vertices, all at
// depth exactly d, with leaf labels in 1..m and a per-level symmetric
// signature deciding adjacency. Leaves are the node ids 0..num_leaves-1.
struct TreeModel {
  int m = 0;
  int depth = 0;
  int num_leaves = 0;
  std::vector<int> parent;      // per node, -1 for the root
  std::vector<int> leaf_label;  // per leaf, 1..m
  std::vector<std::set<std::pair<int, int>>> signature;  // index 1..depth, pairs (a<=b)

  int num_nodes() const { return static_cast<int>(parent.size()); }
  bool signature_has(int level, int a, int b) const {
    if (level < 1 || level > depth) return false;
    if (a > b) std::swap(a, b);
    return signature[level].count({a, b}) != 0;
  }
  void add_signature(int level, int a, int b) {
    if (a > b) std::swap(a, b);
    signature[level].insert({a, b});
  }

  // throws std::invalid_argument when the model invariants fail
  void validate() const;

  std::vector<int> node_depths() const;
};

// adjacency on the leaves: uv is an edge iff (label(u),label(v)) is in S(i)
// where i is the leaf-to-LCA distance
Graph graph_from_tree_model(const TreeModel& model);

}  // namespace wgs
