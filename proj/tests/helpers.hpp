#pragma once

#include <algorithm>
#include <vector>

#include "wgs/graph.hpp"
#include "wgs/orientation.hpp"
#include "wgs/rng.hpp"

namespace wgs::test {

// plain BFS distance matrix, the ground truth everything else is checked against
inline std::vector<std::vector<int>> bfs_all_pairs(const Graph& g) {
  int n = g.n();
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
  for (int s = 0; s < n; ++s) {
    dist[s][s] = 0;
    std::vector<int> frontier{s}, next;
    while (!frontier.empty()) {
      next.clear();
      for (int u : frontier) {
        for (int w : g.neighbors(u)) {
          if (dist[s][w] < 0) {
            dist[s][w] = dist[s][u] + 1;
            next.push_back(w);
          }
        }
      }
      frontier.swap(next);
    }
  }
  return dist;
}

inline int true_diameter(const Graph& g) {
  auto d = bfs_all_pairs(g);
  int best = 0;
  for (const auto& row : d) {
    for (int v : row) best = std::max(best, v);
  }
  return best;
}

// directed reachability by naive expansion, used as the reach_set oracle
inline std::vector<int> naive_reach(const PartialOrientation& h, int u, int a) {
  std::vector<bool> in(h.n, false);
  in[u] = true;
  for (int step = 0; step < a; ++step) {
    std::vector<bool> nxt = in;
    for (int x = 0; x < h.n; ++x) {
      if (!in[x]) continue;
      for (int y : h.out[x]) nxt[y] = true;
    }
    in.swap(nxt);
  }
  std::vector<int> out;
  for (int v = 0; v < h.n; ++v) {
    if (in[v]) out.push_back(v);
  }
  return out;
}

inline PartialOrientation random_orientation(const Graph& g, Rng& rng) {
  PartialOrientation h(g.n());
  std::vector<std::pair<int, int>> arcs;
  for (auto [u, v] : g.edges()) {
    switch (rng.next_below(4)) {
      case 0: arcs.emplace_back(u, v); break;
      case 1: arcs.emplace_back(v, u); break;
      case 2:
        arcs.emplace_back(u, v);
        arcs.emplace_back(v, u);
        break;
      default: break;  // unoriented
    }
  }
  return PartialOrientation::from_edges(g, arcs);
}

inline bool same_graph(const Graph& a, const Graph& b) {
  return a.n() == b.n() && a.edges() == b.edges();
}

}  // namespace wgs::test
