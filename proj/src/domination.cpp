#include "wgs/domination.hpp"

#include <algorithm>
#include <stdexcept>

#include "wgs/verify.hpp"

namespace wgs {

namespace {

// distance from the set within the whole graph
std::vector<int> bfs_from_set(const Graph& g, const std::vector<int>& sources) {
  std::vector<int> dist(g.n(), -1);
  std::vector<int> frontier, next;
  for (int s : sources) {
    if (dist[s] < 0) {
      dist[s] = 0;
      frontier.push_back(s);
    }
  }
  while (!frontier.empty()) {
    next.clear();
    for (int u : frontier) {
      for (int w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          next.push_back(w);
        }
      }
    }
    frontier.swap(next);
  }
  return dist;
}

bool is_r_dominating(const Graph& g, const std::vector<int>& d_set, int r) {
  if (d_set.empty()) return g.n() == 0;
  auto dist = bfs_from_set(g, d_set);
  for (int v = 0; v < g.n(); ++v) {
    if (dist[v] < 0 || dist[v] > r) return false;
  }
  return true;
}

// dist(u,v) > bound, using an index of radius >= bound
bool farther_than(const DistanceIndex& idx, int u, int v, int bound) {
  int d = idx.dist(u, v);
  return d == kInfDist || d > bound;
}

bool is_independent(const DistanceIndex& idx, const std::vector<int>& a_set, int bound) {
  for (size_t i = 0; i < a_set.size(); ++i) {
    for (size_t j = i + 1; j < a_set.size(); ++j) {
      if (!farther_than(idx, a_set[i], a_set[j], bound)) return false;
    }
  }
  return true;
}

struct GreedyPick {
  std::vector<int> d_set;
  std::vector<int> a_prime;  // in pick order
};

// while D is not r-dominating, pick the smallest vertex at distance > r from
// D and add it plus its h-reachable r-ball to D
GreedyPick greedy_domination(const Graph& g, const PartialOrientation& h, int r) {
  GreedyPick out;
  std::vector<bool> in_d(g.n(), false);
  while (true) {
    int pick = -1;
    if (out.d_set.empty()) {
      pick = g.n() > 0 ? 0 : -1;
    } else {
      auto dist = bfs_from_set(g, out.d_set);
      for (int v = 0; v < g.n(); ++v) {
        if (dist[v] < 0 || dist[v] > r) {
          pick = v;
          break;
        }
      }
    }
    if (pick < 0) break;
    out.a_prime.push_back(pick);
    for (int w : reach_set(h, pick, r)) {
      if (!in_d[w]) {
        in_d[w] = true;
        out.d_set.push_back(w);
      }
    }
    if (!in_d[pick]) {
      in_d[pick] = true;
      out.d_set.push_back(pick);
    }
  }
  std::sort(out.d_set.begin(), out.d_set.end());
  return out;
}

// largest color class of a greedy coloring along the reverse degeneracy order
// of the conflict graph on `verts` (edges join pairs within distance bound)
std::vector<int> conflict_extract(const DistanceIndex& idx, const std::vector<int>& verts,
                                  int bound) {
  int k = static_cast<int>(verts.size());
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (!farther_than(idx, verts[i], verts[j], bound)) edges.emplace_back(i, j);
    }
  }
  Graph f(k, edges);
  DegeneracyOrder ord = degeneracy(f);
  std::vector<int> color(k, -1);
  int max_color = 0;
  for (int i = k - 1; i >= 0; --i) {
    int v = ord.order[i];
    std::vector<bool> used(max_color + 2, false);
    for (int w : f.neighbors(v)) {
      if (color[w] >= 0) used[color[w]] = true;
    }
    int c = 0;
    while (used[c]) ++c;
    color[v] = c;
    max_color = std::max(max_color, c + 1);
  }
  std::vector<std::vector<int>> classes(max_color);
  for (int i = 0; i < k; ++i) classes[color[i]].push_back(verts[i]);
  size_t best = 0;
  for (size_t c = 1; c < classes.size(); ++c) {
    if (classes[c].size() > classes[best].size()) best = c;
  }
  std::vector<int> a = classes.empty() ? std::vector<int>{} : classes[best];
  std::sort(a.begin(), a.end());
  return a;
}

void check_outputs(const Graph& g, const DistanceIndex& idx, const DominationResult& res,
                   int r) {
  if (!is_r_dominating(g, res.d_set, r))
    throw std::logic_error("domination: produced set is not r-dominating");
  if (!is_independent(idx, res.a_set, 2 * r))
    throw std::logic_error("domination: produced set is not 2r-independent");
}

}  // namespace

DominationResult dominate_via_guidance(const Graph& g, const DistanceIndex& idx,
                                       const PartialOrientation& h, int r) {
  if (idx.radius() < 2 * r)
    throw std::invalid_argument("dominate_via_guidance: index radius < 2r");
  auto rep = verify_strict(g, idx, h, 2 * r, StrictMode::full);
  if (!rep.valid)
    throw std::invalid_argument(
        "dominate_via_guidance: input is not a (full) 2r-guidance system");

  DominationResult res;
  if (g.n() == 0) {
    res.ratio = 0;
    return res;
  }
  GreedyPick pick = greedy_domination(g, h, r);
  res.d_set = pick.d_set;
  std::vector<int> a_sorted = pick.a_prime;
  std::sort(a_sorted.begin(), a_sorted.end());
  if (is_independent(idx, a_sorted, 2 * r)) {
    res.a_set = a_sorted;
  } else {
    res.a_set = conflict_extract(idx, pick.a_prime, 2 * r);
  }
  res.ratio = static_cast<double>(res.d_set.size()) / res.a_set.size();
  int c = max_outdegree(h) + 1;  // the guarantee is stated for outdegree < c
  res.bound_b = static_cast<double>(c) * c;
  res.bound_satisfied = res.ratio <= *res.bound_b + 1e-12;
  check_outputs(g, idx, res, r);
  return res;
}

BigInt sigma_constant(int p, int c, int r) {
  if (p < 1 || c < 2 || r < 1) throw std::invalid_argument("sigma: need p,r >= 1, c >= 2");
  BigInt pw(1);
  for (int i = 0; i < 2 * r + 1; ++i) pw *= BigInt(c);
  BigInt sigma(0);
  for (int q = 2; q <= p; ++q) sigma = pw * (sigma + BigInt(1));
  return sigma;
}

BigInt domination_bound_b(int c, int r, int k) {
  if (c < 2 || r < 1 || k < 1)
    throw std::invalid_argument("bound_b: need c >= 2, r >= 1, k >= 1");
  BigInt pw_low(1);
  for (int i = 0; i < r + 1; ++i) pw_low *= BigInt(c);
  BigInt pw_high(1);
  for (int i = 0; i < 2 * r + 1; ++i) pw_high *= BigInt(c);
  return pw_low * (pw_high * sigma_constant(k + 1, c, r) + BigInt(1));
}

DominationResult dominate_weak(const Graph& g, const DistanceIndex& idx,
                               const PartialOrientation& h, int r, int c, int k) {
  if (idx.radius() < 2 * r)
    throw std::invalid_argument("dominate_weak: index radius < 2r");
  if (c < 2) throw std::invalid_argument("dominate_weak: c >= 2 required");
  if (max_outdegree(h) > c)
    throw std::invalid_argument("dominate_weak: outdegree exceeds the declared c");
  auto rep = verify_weak(g, idx, h, 2 * r);
  if (!rep.valid)
    throw std::invalid_argument("dominate_weak: input is not a weak 2r-guidance system");

  DominationResult res;
  if (g.n() == 0) {
    res.ratio = 0;
    return res;
  }
  GreedyPick pick = greedy_domination(g, h, r);

  // order audit: reach balls of earlier picks stay farther than r from later
  // picks (the selection rule enforces it; fail loudly if not)
  for (size_t i = 0; i < pick.a_prime.size(); ++i) {
    auto ball = reach_set(h, pick.a_prime[i], r);
    for (size_t j = i + 1; j < pick.a_prime.size(); ++j) {
      for (int w : ball) {
        if (!farther_than(idx, w, pick.a_prime[j], r))
          throw std::logic_error("dominate_weak: pick-order property violated");
      }
    }
  }

  res.d_set = pick.d_set;
  res.a_set = conflict_extract(idx, pick.a_prime, 2 * r);
  res.ratio = static_cast<double>(res.d_set.size()) / res.a_set.size();
  BigInt b = domination_bound_b(c, r, k);
  res.bound_b = b.to_double();
  res.bound_satisfied =
      BigInt(static_cast<int64_t>(res.d_set.size())) <=
      b * BigInt(static_cast<int64_t>(res.a_set.size()));
  check_outputs(g, idx, res, r);
  return res;
}

HalfgraphResult find_halfgraph(const Graph& g, const DistanceIndex& idx, int r, int k,
                               int64_t budget) {
  if (k < 1 || r < 1) throw std::invalid_argument("find_halfgraph: r,k >= 1 required");
  if (idx.radius() < r) throw std::invalid_argument("find_halfgraph: index radius < r");
  HalfgraphResult res;

  // per vertex: sorted list at distance exactly r
  std::vector<std::vector<int>> exact(g.n());
  for (int v = 0; v < g.n(); ++v) {
    auto lv = idx.level(v, r);
    exact[v].assign(lv.begin(), lv.end());
  }

  std::vector<int> us, vs;
  // chooses u_i then v_i; constraints: dist(u_i, v_j) > r for j < i and
  // dist(u_i, v_j) = r for j >= i
  std::function<bool(int)> step = [&](int i) -> bool {
    if (i == k) return true;
    // candidates for v_i: distance exactly r from all chosen u_1..u_i
    for (int u = 0; u < g.n(); ++u) {
      if (++res.nodes_visited > budget) {
        res.status = HalfgraphStatus::budget_exhausted;
        return false;
      }
      bool ok = true;
      for (int prev : vs) {
        if (!farther_than(idx, u, prev, r)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      std::vector<int> candidates = exact[u];
      for (int prev : us) {
        std::vector<int> merged;
        std::set_intersection(candidates.begin(), candidates.end(), exact[prev].begin(),
                              exact[prev].end(), std::back_inserter(merged));
        candidates.swap(merged);
        if (candidates.empty()) break;
      }
      if (candidates.empty()) continue;
      us.push_back(u);
      for (int v : candidates) {
        if (++res.nodes_visited > budget) {
          res.status = HalfgraphStatus::budget_exhausted;
          us.pop_back();
          return false;
        }
        vs.push_back(v);
        if (step(i + 1)) {
          return true;
        }
        vs.pop_back();
        if (res.status == HalfgraphStatus::budget_exhausted) {
          us.pop_back();
          return false;
        }
      }
      us.pop_back();
    }
    return false;
  };

  if (step(0)) {
    res.status = HalfgraphStatus::found;
    res.witness.u = us;
    res.witness.v = vs;
  } else if (res.status != HalfgraphStatus::budget_exhausted) {
    res.status = HalfgraphStatus::none;
  }
  return res;
}

}  // namespace wgs
