#include "wgs/distance_index.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace wgs {

namespace {

void bfs_rows(const Graph& g, int radius, int begin, int end,
              std::vector<std::vector<int>>& verts, std::vector<std::vector<int>>& offsets) {
  int n = g.n();
  std::vector<int> seen(n, -1);
  std::vector<int> frontier, next;
  for (int s = begin; s < end; ++s) {
    auto& row = verts[s];
    auto& off = offsets[s];
    row.clear();
    off.clear();
    seen.assign(n, -1);
    seen[s] = 0;
    frontier = {s};
    off.push_back(0);
    row.push_back(s);
    off.push_back(1);
    for (int level = 1; level <= radius && !frontier.empty(); ++level) {
      next.clear();
      for (int u : frontier) {
        for (int w : g.neighbors(u)) {
          if (seen[w] < 0) {
            seen[w] = level;
            next.push_back(w);
          }
        }
      }
      if (next.empty()) break;
      std::sort(next.begin(), next.end());
      row.insert(row.end(), next.begin(), next.end());
      off.push_back(static_cast<int>(row.size()));
      frontier.swap(next);
    }
  }
}

}  // namespace

DistanceIndex build_index(const Graph& g, int radius, int threads) {
  if (radius < 1) throw std::invalid_argument("build_index: radius must be positive");
  DistanceIndex idx;
  idx.radius_ = radius;
  int n = g.n();
  idx.verts_.resize(n);
  idx.offsets_.resize(n);
  int cap = radius == kUnboundedRadius ? n : radius;
  if (threads <= 1 || n < 64) {
    bfs_rows(g, cap, 0, n, idx.verts_, idx.offsets_);
  } else {
    threads = std::min<int>(threads, std::max(1u, std::thread::hardware_concurrency()));
    std::vector<std::thread> pool;
    int chunk = (n + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      int lo = t * chunk, hi = std::min(n, lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back([&, lo, hi] { bfs_rows(g, cap, lo, hi, idx.verts_, idx.offsets_); });
    }
    for (auto& th : pool) th.join();
  }
  return idx;
}

std::vector<int> gate_set(const Graph& g, const DistanceIndex& idx, int u, int v) {
  if (u == v) throw std::invalid_argument("gate_set: u == v");
  int l = idx.dist(u, v);
  if (l == kInfDist)
    throw std::invalid_argument("gate_set: distance unknown (exceeds index radius)");
  std::vector<int> out;
  for (int w : g.neighbors(u)) {
    if (idx.at_level(v, l - 1, w)) out.push_back(w);
  }
  return out;
}

std::vector<int> shortest_path_region(const Graph& g, const DistanceIndex& idx, int u,
                                      int z, int r) {
  if (!g.adjacent(u, z)) throw std::invalid_argument("shortest_path_region: u,z not adjacent");
  std::vector<int> out;
  int top = std::min(r, idx.max_level(u));
  for (int l = 2; l <= top; ++l) {
    for (int v : idx.level(u, l)) {
      if (idx.at_level(z, l - 1, v)) out.push_back(v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace wgs
