#include "wgs/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>

namespace wgs {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
  adj_.resize(n_);
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
      throw std::invalid_argument("Graph: endpoint out of range: " + std::to_string(u) +
                                  " " + std::to_string(v));
    if (u == v) throw std::invalid_argument("Graph: self-loop at " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (!edge_set_.insert(key(u, v)).second)
      throw std::invalid_argument("Graph: duplicate edge " + std::to_string(u) + " " +
                                  std::to_string(v));
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    edges_.emplace_back(u, v);
  }
  for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
  std::sort(edges_.begin(), edges_.end());
}

Graph Graph::induced(const std::vector<int>& verts, std::vector<int>* old_ids) const {
  std::vector<int> sorted = verts;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("Graph::induced: duplicate vertex");
  std::vector<int> rank(n_, -1);
  for (size_t i = 0; i < sorted.size(); ++i) {
    int v = sorted[i];
    if (v < 0 || v >= n_) throw std::invalid_argument("Graph::induced: vertex out of range");
    rank[v] = static_cast<int>(i);
  }
  std::vector<std::pair<int, int>> sub_edges;
  for (auto [u, v] : edges_) {
    if (rank[u] >= 0 && rank[v] >= 0) sub_edges.emplace_back(rank[u], rank[v]);
  }
  if (old_ids) *old_ids = sorted;
  return Graph(static_cast<int>(sorted.size()), sub_edges);
}

DegeneracyOrder degeneracy(const Graph& g) {
  int n = g.n();
  std::vector<int> deg(n);
  std::set<std::pair<int, int>> queue;  // (degree, vertex)
  for (int v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    queue.insert({deg[v], v});
  }
  std::vector<bool> removed(n, false);
  DegeneracyOrder out;
  out.order.reserve(n);
  while (!queue.empty()) {
    auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    out.t = std::max(out.t, d);
    removed[v] = true;
    out.order.push_back(v);
    for (int w : g.neighbors(v)) {
      if (removed[w]) continue;
      queue.erase({deg[w], w});
      --deg[w];
      queue.insert({deg[w], w});
    }
  }
  return out;
}

Graph distance_power(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("distance_power: k must be positive");
  int n = g.n();
  std::vector<std::pair<int, int>> edges;
  std::vector<int> dist(n);
  std::vector<int> frontier, next;
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    frontier = {s};
    for (int level = 1; level <= k && !frontier.empty(); ++level) {
      next.clear();
      for (int u : frontier) {
        for (int w : g.neighbors(u)) {
          if (dist[w] < 0) {
            dist[w] = level;
            next.push_back(w);
            if (w > s) edges.emplace_back(s, w);
          }
        }
      }
      frontier.swap(next);
    }
  }
  return Graph(n, edges);
}

}  // namespace wgs
