#include "wgs/tree_model.hpp"

#include <stdexcept>

namespace wgs {

std::vector<int> TreeModel::node_depths() const {
  int nn = num_nodes();
  std::vector<int> depth_of(nn, -1);
  for (int v = 0; v < nn; ++v) {
    // walk up, then fill the path
    int steps = 0;
    int x = v;
    while (x >= 0 && depth_of[x] < 0) {
      x = parent[x];
      ++steps;
      if (steps > nn) throw std::invalid_argument("tree model: parent cycle");
    }
    int base = x < 0 ? -1 : depth_of[x];
    int d = base + steps;
    x = v;
    while (x >= 0 && depth_of[x] < 0) {
      depth_of[x] = d--;
      x = parent[x];
    }
  }
  return depth_of;
}

void TreeModel::validate() const {
  int nn = num_nodes();
  if (num_leaves < 1 || num_leaves > nn)
    throw std::invalid_argument("tree model: bad leaf count");
  if (m < 1 || depth < 1) throw std::invalid_argument("tree model: m and d must be >= 1");
  if (static_cast<int>(leaf_label.size()) != num_leaves)
    throw std::invalid_argument("tree model: label count mismatch");
  if (static_cast<int>(signature.size()) < depth + 1)
    throw std::invalid_argument("tree model: signature levels missing");
  int roots = 0;
  std::vector<bool> has_child(nn, false);
  for (int v = 0; v < nn; ++v) {
    if (parent[v] < 0) {
      ++roots;
    } else {
      if (parent[v] >= nn) throw std::invalid_argument("tree model: bad parent id");
      has_child[parent[v]] = true;
    }
  }
  if (roots != 1) throw std::invalid_argument("tree model: must have exactly one root");
  auto depths = node_depths();
  for (int v = 0; v < nn; ++v) {
    bool leaf = !has_child[v];
    if (leaf != (v < num_leaves))
      throw std::invalid_argument("tree model: leaves must be node ids 0..leaves-1");
    if (leaf && depths[v] != depth)
      throw std::invalid_argument("tree model: every leaf must sit at depth d");
  }
  for (int v = 0; v < num_leaves; ++v) {
    if (leaf_label[v] < 1 || leaf_label[v] > m)
      throw std::invalid_argument("tree model: label out of range");
  }
  for (int i = 1; i <= depth; ++i) {
    for (auto [a, b] : signature[i]) {
      if (a < 1 || b < 1 || a > m || b > m || a > b)
        throw std::invalid_argument("tree model: bad signature pair");
    }
  }
}

Graph graph_from_tree_model(const TreeModel& model) {
  model.validate();
  auto depths = model.node_depths();
  auto lca_halfdist = [&](int u, int v) {
    int x = u, y = v;
    while (x != y) {
      if (depths[x] >= depths[y]) x = model.parent[x];
      else y = model.parent[y];
    }
    return model.depth - depths[x];
  };
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < model.num_leaves; ++u) {
    for (int v = u + 1; v < model.num_leaves; ++v) {
      int i = lca_halfdist(u, v);
      if (model.signature_has(i, model.leaf_label[u], model.leaf_label[v]))
        edges.emplace_back(u, v);
    }
  }
  return Graph(model.num_leaves, edges);
}

}  // namespace wgs
