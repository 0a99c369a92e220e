#include "wgs/query.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "wgs/distance_index.hpp"
#include "wgs/synthesize.hpp"

namespace wgs {

namespace {

// truncated directed BFS over h with smallest-index parents
void directed_bfs(const PartialOrientation& h, int s, int depth, std::vector<int>& dist,
                  std::vector<int>& parent) {
  dist.assign(h.n, -1);
  parent.assign(h.n, -1);
  dist[s] = 0;
  std::vector<int> frontier{s}, next;
  for (int level = 1; level <= depth && !frontier.empty(); ++level) {
    next.clear();
    for (int x : frontier) {
      for (int y : h.out[x]) {
        if (dist[y] < 0) {
          dist[y] = level;
          parent[y] = x;
          next.push_back(y);
        }
      }
    }
    std::sort(next.begin(), next.end());
    frontier.swap(next);
  }
}

}  // namespace

QueryAnswer query_distance(const Graph& g, const PartialOrientation& h, int u, int v,
                           int r) {
  QueryAnswer ans;
  if (u == v) {
    ans.within_r = true;
    ans.distance = 0;
    ans.path = {u};
    return ans;
  }
  if (g.adjacent(u, v)) {
    ans.within_r = true;
    ans.distance = 1;
    ans.path = {u, v};
    return ans;
  }
  if (r < 2) return ans;
  std::vector<int> du, dv, pu, pv;
  directed_bfs(h, u, r - 1, du, pu);
  directed_bfs(h, v, r - 1, dv, pv);
  // connecting edge {x,y} with x on u's side: total walk length du+dv+1,
  // smallest (length, x, y) wins for a canonical answer
  int best = kInfDist, bx = -1, by = -1;
  for (int x = 0; x < g.n(); ++x) {
    if (du[x] < 0) continue;
    for (int y : g.neighbors(x)) {
      if (dv[y] < 0) continue;
      int len = du[x] + dv[y] + 1;
      if (len < best || (len == best && (x < bx || (x == bx && y < by)))) {
        best = len;
        bx = x;
        by = y;
      }
    }
  }
  if (best > r) return ans;
  ans.within_r = true;
  ans.distance = best;
  std::vector<int> front;
  for (int x = bx; x >= 0; x = pu[x]) front.push_back(x);
  std::reverse(front.begin(), front.end());
  for (int y = by; y >= 0; y = pv[y]) front.push_back(y);
  ans.path = std::move(front);
  return ans;
}

Exploration random_exploration(const Graph& g, const FractionalOrientation& p, int u,
                               int v, int r, Rng& rng) {
  if (u == v) throw std::invalid_argument("random_exploration: u and v must differ");
  if (g.adjacent(u, v)) return {{u, v}, {v}};
  if (r == 1 || g.degree(u) == 0 || g.degree(v) == 0) return {{u}, {v}};
  bool from_u = rng.next_bool();
  int x = from_u ? u : v;
  int y = p_random_neighbor(g, p, x, rng);
  if (from_u) {
    Exploration rest = random_exploration(g, p, y, v, r - 1, rng);
    Exploration out;
    out.walk_u.push_back(u);
    out.walk_u.insert(out.walk_u.end(), rest.walk_u.begin(), rest.walk_u.end());
    out.walk_v = std::move(rest.walk_v);
    return out;
  }
  Exploration rest = random_exploration(g, p, u, y, r - 1, rng);
  Exploration out;
  out.walk_u = std::move(rest.walk_u);
  out.walk_v.push_back(v);
  out.walk_v.insert(out.walk_v.end(), rest.walk_v.begin(), rest.walk_v.end());
  return out;
}

bool exploration_forms_path(const Graph& g, const Exploration& e, int* length_out) {
  if (e.walk_u.empty() || e.walk_v.empty()) return false;
  std::vector<int> joined = e.walk_u;
  int ub = e.walk_u.back(), vb = e.walk_v.back();
  if (ub == vb) {
    joined.insert(joined.end(), e.walk_v.rbegin() + 1, e.walk_v.rend());
  } else if (g.adjacent(ub, vb)) {
    joined.insert(joined.end(), e.walk_v.rbegin(), e.walk_v.rend());
  } else {
    return false;
  }
  std::set<int> uniq(joined.begin(), joined.end());
  if (uniq.size() != joined.size()) return false;
  if (length_out) *length_out = static_cast<int>(joined.size()) - 1;
  return true;
}

QueryAnswer query_probabilistic(const Graph& g, const FractionalOrientation& p, int u,
                                int v, int r, double confidence_k, Rng& rng) {
  QueryAnswer ans;
  if (u == v) {
    ans.within_r = true;
    ans.distance = 0;
    ans.path = {u};
    return ans;
  }
  if (g.adjacent(u, v)) {
    ans.within_r = true;
    ans.distance = 1;
    ans.path = {u, v};
    return ans;
  }
  double c = max_outdegree(p);
  double base = std::max(1.0, 4.0 * c);
  int64_t trials =
      std::max<int64_t>(1, static_cast<int64_t>(std::ceil(confidence_k *
                                                          std::pow(base, r - 1))));
  int best = kInfDist;
  std::vector<int> best_path;
  for (int64_t t = 0; t < trials; ++t) {
    Exploration e = random_exploration(g, p, u, v, r, rng);
    int len = 0;
    if (!exploration_forms_path(g, e, &len)) continue;
    if (len > r || len >= best) continue;
    best = len;
    best_path = e.walk_u;
    if (e.walk_u.back() == e.walk_v.back()) {
      best_path.insert(best_path.end(), e.walk_v.rbegin() + 1, e.walk_v.rend());
    } else {
      best_path.insert(best_path.end(), e.walk_v.rbegin(), e.walk_v.rend());
    }
  }
  if (best <= r) {
    ans.within_r = true;
    ans.distance = best;
    ans.path = std::move(best_path);
  }
  return ans;
}

}  // namespace wgs
