#include "wgs/orientation.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>
#include <tuple>

namespace wgs {

PartialOrientation PartialOrientation::from_edges(
    const Graph& g, const std::vector<std::pair<int, int>>& arcs) {
  PartialOrientation h(g.n());
  for (auto [u, v] : arcs) {
    if (!g.adjacent(u, v))
      throw std::invalid_argument("orientation: " + std::to_string(u) + "->" +
                                  std::to_string(v) + " is not an edge of the graph");
    h.out[u].push_back(v);
  }
  for (auto& row : h.out) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
  return h;
}

bool PartialOrientation::has(int u, int v) const {
  if (u < 0 || u >= n) return false;
  return std::binary_search(out[u].begin(), out[u].end(), v);
}

std::vector<std::pair<int, int>> PartialOrientation::arcs() const {
  std::vector<std::pair<int, int>> all;
  for (int u = 0; u < n; ++u) {
    for (int v : out[u]) all.emplace_back(u, v);
  }
  return all;
}

FractionalOrientation FractionalOrientation::from_entries(
    const Graph& g, const std::vector<std::tuple<int, int, double>>& entries) {
  FractionalOrientation p(g.n());
  for (auto [u, v, val] : entries) {
    if (!g.adjacent(u, v))
      throw std::invalid_argument("fractional orientation: pair is not an edge");
    if (val < 0) throw std::invalid_argument("fractional orientation: negative weight");
    p.set(u, v, val);
  }
  return p;
}

double FractionalOrientation::weight(int u, int v) const {
  const auto& row = w[u];
  auto it = std::lower_bound(row.begin(), row.end(), std::make_pair(v, 0.0),
                             [](const auto& a, const auto& b) { return a.first < b.first; });
  if (it != row.end() && it->first == v) return it->second;
  return 0.0;
}

double FractionalOrientation::out_sum(int u) const {
  double s = 0;
  for (const auto& [v, val] : w[u]) s += val;
  return s;
}

void FractionalOrientation::set(int u, int v, double value) {
  auto& row = w[u];
  auto it = std::lower_bound(row.begin(), row.end(), std::make_pair(v, 0.0),
                             [](const auto& a, const auto& b) { return a.first < b.first; });
  if (it != row.end() && it->first == v) {
    it->second = value;
  } else {
    row.insert(it, {v, value});
  }
}

std::vector<int> reach_set(const PartialOrientation& h, int u, int a) {
  std::vector<int> dist(h.n, -1);
  dist[u] = 0;
  std::vector<int> frontier{u}, next, out{u};
  for (int level = 1; level <= a && !frontier.empty(); ++level) {
    next.clear();
    for (int x : frontier) {
      for (int y : h.out[x]) {
        if (dist[y] < 0) {
          dist[y] = level;
          next.push_back(y);
          out.push_back(y);
        }
      }
    }
    frontier.swap(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int max_outdegree(const PartialOrientation& h) {
  size_t best = 0;
  for (const auto& row : h.out) best = std::max(best, row.size());
  return static_cast<int>(best);
}

double max_outdegree(const FractionalOrientation& p) {
  double best = 0;
  for (int u = 0; u < p.n; ++u) best = std::max(best, p.out_sum(u));
  return best;
}

FractionalOrientation to_fractional(const PartialOrientation& h) {
  FractionalOrientation p(h.n);
  for (int u = 0; u < h.n; ++u) {
    p.w[u].reserve(h.out[u].size());
    for (int v : h.out[u]) p.w[u].emplace_back(v, 1.0);
  }
  return p;
}

PartialOrientation orientation_union(const PartialOrientation& a,
                                     const PartialOrientation& b) {
  if (a.n != b.n) throw std::invalid_argument("orientation_union: size mismatch");
  PartialOrientation r(a.n);
  for (int u = 0; u < a.n; ++u) {
    r.out[u].reserve(a.out[u].size() + b.out[u].size());
    std::merge(a.out[u].begin(), a.out[u].end(), b.out[u].begin(), b.out[u].end(),
               std::back_inserter(r.out[u]));
    r.out[u].erase(std::unique(r.out[u].begin(), r.out[u].end()), r.out[u].end());
  }
  return r;
}

}  // namespace wgs
