#include "wgs/synthesize.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "wgs/verify.hpp"

namespace wgs {

// ---------------------------------------------------------------------------
// derandomized rounding

namespace {

struct RoundingPair {
  int u, v;
  std::vector<int> gate_u, gate_v;  // sorted
  double q_u, q_v;                  // p-random hit probability per side
};

double hit_probability(const Graph& g, const FractionalOrientation& p, int u,
                       const std::vector<int>& gate) {
  double total = p.out_sum(u);
  if (total > 0) {
    double mass = 0;
    for (int y : gate) mass += p.weight(u, y);
    return mass / total;
  }
  if (g.degree(u) == 0) return 0;
  return static_cast<double>(gate.size()) / g.degree(u);
}

}  // namespace

PartialOrientation round_fractional(const Graph& g, const DistanceIndex& idx,
                                    const FractionalOrientation& p, int r, double c,
                                    RoundingTrace* trace) {
  if (g.n() < 2) throw std::invalid_argument("round_fractional: n >= 2 required");
  if (c <= 0) throw std::invalid_argument("round_fractional: c must be positive");
  if (idx.radius() < r) throw std::invalid_argument("round_fractional: index radius < r");

  std::vector<RoundingPair> pairs;
  for (int u = 0; u < g.n(); ++u) {
    int top = std::min(r, idx.max_level(u));
    for (int l = 2; l <= top; ++l) {
      for (int v : idx.level(u, l)) {
        if (v <= u) continue;
        RoundingPair pr;
        pr.u = u;
        pr.v = v;
        pr.gate_u = gate_set(g, idx, u, v);
        pr.gate_v = gate_set(g, idx, v, u);
        pr.q_u = hit_probability(g, p, u, pr.gate_u);
        pr.q_v = hit_probability(g, p, v, pr.gate_v);
        pairs.push_back(std::move(pr));
      }
    }
  }

  int rounds = static_cast<int>(std::ceil(4.0 * c * std::log(g.n())));
  if (trace) {
    trace->dissatisfied = {static_cast<int64_t>(pairs.size())};
    trace->rounds_budget = rounds;
    trace->c = c;
  }

  PartialOrientation h(g.n());
  std::vector<size_t> active(pairs.size());
  std::iota(active.begin(), active.end(), size_t{0});
  const double shrink = 1.0 - 1.0 / (2.0 * c);

  std::vector<std::vector<size_t>> by_vertex(g.n());
  // per pair and side: 0 undecided, 1 hit, 2 miss
  std::vector<char> side_u(pairs.size()), side_v(pairs.size());
  std::vector<double> score(g.n(), 0.0);

  for (int round = 0; round < rounds && !active.empty(); ++round) {
    for (auto& row : by_vertex) row.clear();
    for (size_t id : active) {
      side_u[id] = side_v[id] = 0;
      by_vertex[pairs[id].u].push_back(id);
      by_vertex[pairs[id].v].push_back(id);
    }
    for (int z = 0; z < g.n(); ++z) {
      if (by_vertex[z].empty()) continue;
      // score(w) = sum over active pairs of z of (other side's miss factor)
      // for w in the pair's gate at z; picking argmax minimizes the
      // conditional expected number of dissatisfied pairs
      std::vector<int> touched;
      for (size_t id : by_vertex[z]) {
        const RoundingPair& pr = pairs[id];
        bool z_is_u = pr.u == z;
        char other_state = z_is_u ? side_v[id] : side_u[id];
        if (other_state == 1) continue;  // already satisfied this round
        double other_factor =
            other_state == 2 ? 1.0 : 1.0 - (z_is_u ? pr.q_v : pr.q_u);
        if (other_factor <= 0) continue;
        for (int w : z_is_u ? pr.gate_u : pr.gate_v) {
          if (score[w] == 0.0) touched.push_back(w);
          score[w] += other_factor;
        }
      }
      int choice = -1;
      double best = 0;
      std::sort(touched.begin(), touched.end());
      touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
      for (int w : touched) {
        if (score[w] > best) {
          best = score[w];
          choice = w;
        }
        score[w] = 0.0;
      }
      // choice < 0 happens only when every remaining pair of z carries zero
      // weight; deciding "no edge" is then expectation-neutral, but the side
      // must be recorded as a miss so the partner vertex sees factor one
      if (choice >= 0 && !h.has(z, choice)) {
        auto& row = h.out[z];
        row.insert(std::lower_bound(row.begin(), row.end(), choice), choice);
      }
      for (size_t id : by_vertex[z]) {
        const RoundingPair& pr = pairs[id];
        bool z_is_u = pr.u == z;
        bool hit = choice >= 0 &&
                   std::binary_search((z_is_u ? pr.gate_u : pr.gate_v).begin(),
                                      (z_is_u ? pr.gate_u : pr.gate_v).end(), choice);
        (z_is_u ? side_u[id] : side_v[id]) = hit ? 1 : 2;
      }
    }
    std::vector<size_t> next;
    for (size_t id : active) {
      if (side_u[id] != 1 && side_v[id] != 1) next.push_back(id);
    }
    double bound = shrink * static_cast<double>(active.size()) + 1e-9;
    if (static_cast<double>(next.size()) > bound)
      throw std::logic_error("round_fractional: round failed the (1 - 1/(2c)) contraction");
    active.swap(next);
    if (trace) trace->dissatisfied.push_back(static_cast<int64_t>(active.size()));
  }
  if (!active.empty())
    throw std::logic_error("round_fractional: dissatisfied pairs remain after all rounds");
  return h;
}

// ---------------------------------------------------------------------------

int p_random_neighbor(const Graph& g, const FractionalOrientation& p, int u, Rng& rng) {
  if (g.degree(u) == 0) throw std::invalid_argument("p_random_neighbor: isolated vertex");
  double total = p.out_sum(u);
  if (total <= 0) {
    return g.neighbors(u)[rng.next_below(g.degree(u))];
  }
  double target = rng.next_double() * total;
  double acc = 0;
  for (const auto& [v, val] : p.w[u]) {
    acc += val;
    if (target < acc) return v;
  }
  // numerical leftovers: last positive entry
  for (auto it = p.w[u].rbegin(); it != p.w[u].rend(); ++it) {
    if (it->second > 0) return it->first;
  }
  return g.neighbors(u)[0];
}

std::vector<int> hitting_set(const std::vector<std::vector<int>>& system,
                             const std::vector<double>& w, HittingStrategy strategy,
                             Rng& rng) {
  for (const auto& s : system) {
    if (s.empty()) throw std::invalid_argument("hitting_set: empty member set");
  }
  if (system.empty()) return {};

  auto hits_all = [&](const std::vector<int>& sel) {
    for (const auto& s : system) {
      bool hit = false;
      for (int e : sel) {
        if (std::binary_search(s.begin(), s.end(), e)) {
          hit = true;
          break;
        }
      }
      if (!hit) return false;
    }
    return true;
  };

  auto greedy = [&]() {
    std::vector<bool> covered(system.size(), false);
    std::vector<int> out;
    size_t remaining = system.size();
    while (remaining > 0) {
      std::map<int, int> gain;
      for (size_t i = 0; i < system.size(); ++i) {
        if (covered[i]) continue;
        for (int e : system[i]) ++gain[e];
      }
      int best = -1, best_gain = 0;
      double best_w = 0;
      for (auto [e, cnt] : gain) {
        double we = e < static_cast<int>(w.size()) ? w[e] : 0;
        if (cnt > best_gain || (cnt == best_gain && we > best_w)) {
          best = e;
          best_gain = cnt;
          best_w = we;
        }
      }
      out.push_back(best);
      for (size_t i = 0; i < system.size(); ++i) {
        if (!covered[i] && std::binary_search(system[i].begin(), system[i].end(), best)) {
          covered[i] = true;
          --remaining;
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  };

  if (strategy == HittingStrategy::greedy) return greedy();

  // epsilon-net sampling proportional to w
  std::vector<double> prefix(w.size() + 1, 0.0);
  for (size_t i = 0; i < w.size(); ++i) prefix[i + 1] = prefix[i] + std::max(0.0, w[i]);
  double total = prefix.back();
  if (total <= 0) return greedy();
  int64_t sample_size = std::max<int64_t>(1, static_cast<int64_t>(std::ceil(2.0 * total)));
  int64_t limit = 64 * (static_cast<int64_t>(w.size()) + 1);
  while (sample_size <= limit) {
    std::vector<int> sel;
    for (int64_t i = 0; i < sample_size; ++i) {
      double t = rng.next_double() * total;
      int e = static_cast<int>(std::upper_bound(prefix.begin(), prefix.end(), t) -
                               prefix.begin()) -
              1;
      e = std::clamp(e, 0, static_cast<int>(w.size()) - 1);
      sel.push_back(e);
    }
    std::sort(sel.begin(), sel.end());
    sel.erase(std::unique(sel.begin(), sel.end()), sel.end());
    if (hits_all(sel)) {
      // drop sampled elements that turned out redundant
      for (size_t i = sel.size(); i-- > 0;) {
        std::vector<int> without = sel;
        without.erase(without.begin() + i);
        if (hits_all(without)) sel = std::move(without);
      }
      return sel;
    }
    sample_size *= 2;
  }
  return greedy();
}

PartialOrientation vc_round(const Graph& g, const DistanceIndex& idx,
                            const FractionalOrientation& p, int r, uint64_t seed,
                            HittingStrategy strategy) {
  if (idx.radius() < r) throw std::invalid_argument("vc_round: index radius < r");
  PartialOrientation h(g.n());
  for (int u = 0; u < g.n(); ++u) {
    // R_u: qualifying targets whose gate carries at least half the covering mass
    std::vector<std::vector<int>> system;
    int top = std::min(r, idx.max_level(u));
    for (int l = 2; l <= top; ++l) {
      for (int v : idx.level(u, l)) {
        auto gate = gate_set(g, idx, u, v);
        double mass = 0;
        for (int y : gate) mass += p.weight(u, y);
        if (mass >= 0.5 - 1e-6) system.push_back(std::move(gate));
      }
    }
    if (system.empty()) continue;
    // ground set: neighbors of u, weighted by 2 p(u,.)
    const auto& nbrs = g.neighbors(u);
    std::vector<int> rank(g.n(), -1);
    for (size_t i = 0; i < nbrs.size(); ++i) rank[nbrs[i]] = static_cast<int>(i);
    std::vector<double> w(nbrs.size(), 0.0);
    for (size_t i = 0; i < nbrs.size(); ++i) w[i] = 2.0 * p.weight(u, nbrs[i]);
    for (auto& s : system) {
      for (int& y : s) y = rank[y];
      std::sort(s.begin(), s.end());
    }
    Rng rng = Rng::derive(seed, static_cast<uint64_t>(u));
    std::vector<int> hit = hitting_set(system, w, strategy, rng);
    for (int e : hit) h.out[u].push_back(nbrs[e]);
    std::sort(h.out[u].begin(), h.out[u].end());
  }
  return h;
}

PartialOrientation complete_to_guidance(const Graph& g, const DistanceIndex& idx,
                                        const PartialOrientation& h, int r) {
  auto rep = verify_weak(g, idx, h, r);
  if (!rep.valid)
    throw std::invalid_argument("complete_to_guidance: input is not a weak r-guidance system");
  DegeneracyOrder ord = degeneracy(g);
  std::vector<int> pos(g.n());
  for (int i = 0; i < g.n(); ++i) pos[ord.order[i]] = i;
  PartialOrientation full = h;
  for (auto [u, v] : g.edges()) {
    int from = pos[u] < pos[v] ? u : v;
    int to = from == u ? v : u;
    if (!full.has(from, to)) {
      auto& row = full.out[from];
      row.insert(std::lower_bound(row.begin(), row.end(), to), to);
    }
  }
  return full;
}

PowerLift power_lift(const Graph& g, const DistanceIndex& idx, const PartialOrientation& h,
                     int k, int r) {
  if (k < 1 || r < 1) throw std::invalid_argument("power_lift: k and r must be positive");
  if (idx.radius() < k * r) throw std::invalid_argument("power_lift: index radius < k*r");
  auto rep = verify_weak(g, idx, h, k * r);
  if (!rep.valid)
    throw std::invalid_argument("power_lift: input is not a weak kr-guidance system");

  PowerLift out;
  out.power = distance_power(g, k);
  out.f = PartialOrientation(g.n());
  for (int u = 0; u < g.n(); ++u) {
    for (int v : reach_set(h, u, k)) {
      if (v != u) out.f.out[u].push_back(v);
    }
    std::sort(out.f.out[u].begin(), out.f.out[u].end());
  }
  double c = max_outdegree(h);
  if (c >= 2) {
    out.outdegree_bound = 2.0 * std::pow(c, k);
  } else {
    double s = 0, t = 1;
    for (int i = 1; i <= k; ++i) {
      t *= c;
      s += t;
    }
    out.outdegree_bound = s;
  }
  return out;
}

IntervalGuidance interval_guidance(const std::vector<Interval>& intervals) {
  int n = static_cast<int>(intervals.size());
  for (const auto& iv : intervals) {
    if (!(iv.lo < iv.hi))
      throw std::invalid_argument("interval_guidance: degenerate interval");
  }
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (std::max(intervals[u].lo, intervals[v].lo) <
          std::min(intervals[u].hi, intervals[v].hi))
        edges.emplace_back(u, v);
    }
  }
  IntervalGuidance out;
  out.graph = Graph(n, edges);
  std::vector<std::pair<int, int>> arcs;
  for (int u = 0; u < n; ++u) {
    const auto& nbrs = out.graph.neighbors(u);
    if (nbrs.empty()) continue;
    int right_most = nbrs[0], left_most = nbrs[0];
    for (int v : nbrs) {
      if (intervals[v].hi > intervals[right_most].hi) right_most = v;
      if (intervals[v].lo < intervals[left_most].lo) left_most = v;
    }
    arcs.emplace_back(u, right_most);
    arcs.emplace_back(u, left_most);
  }
  out.h = PartialOrientation::from_edges(out.graph, arcs);
  return out;
}

std::vector<std::vector<int>> equivalence_classes(const Graph& g, const CutPartition& cut) {
  std::vector<int> side(g.n(), -1);
  for (int v : cut.a) side[v] = 0;
  for (int v : cut.b) {
    if (side[v] == 0) throw std::invalid_argument("cut: A and B intersect");
    side[v] = 1;
  }
  for (int v = 0; v < g.n(); ++v) {
    if (side[v] < 0) throw std::invalid_argument("cut: A and B must cover all vertices");
  }
  std::map<std::pair<int, std::vector<int>>, std::vector<int>> groups;
  for (int v = 0; v < g.n(); ++v) {
    std::vector<int> cross;
    for (int w : g.neighbors(v)) {
      if (side[w] != side[v]) cross.push_back(w);
    }
    groups[{side[v], std::move(cross)}].push_back(v);
  }
  std::vector<std::vector<int>> classes;
  classes.reserve(groups.size());
  for (auto& [key, members] : groups) classes.push_back(std::move(members));
  std::sort(classes.begin(), classes.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  return classes;
}

namespace {

// multi-source BFS from the class, propagating (distance, smallest source)
void class_bfs(const Graph& g, const std::vector<int>& sources, std::vector<int>& dist,
               std::vector<int>& src) {
  dist.assign(g.n(), -1);
  src.assign(g.n(), -1);
  std::vector<int> frontier;
  for (int s : sources) {
    dist[s] = 0;
    src[s] = s;
    frontier.push_back(s);
  }
  std::sort(frontier.begin(), frontier.end());
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int u : frontier) {
      for (int v : g.neighbors(u)) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          src[v] = src[u];
          next.push_back(v);
        } else if (dist[v] == dist[u] + 1 && src[u] < src[v]) {
          src[v] = src[u];
        }
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    frontier.swap(next);
  }
}

void verify_side(const Graph& g, const std::vector<int>& side_verts,
                 const PartialOrientation& h, int r, const char* which) {
  std::vector<int> ids;
  Graph sub = g.induced(side_verts, &ids);
  std::vector<int> rank(g.n(), -1);
  for (size_t i = 0; i < ids.size(); ++i) rank[ids[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> local_arcs;
  for (int u = 0; u < h.n; ++u) {
    for (int v : h.out[u]) {
      if (rank[u] < 0 || rank[v] < 0)
        throw std::invalid_argument(std::string("cut_compose: ") + which +
                                    " has an arc leaving its side");
      local_arcs.emplace_back(rank[u], rank[v]);
    }
  }
  PartialOrientation local = PartialOrientation::from_edges(sub, local_arcs);
  DistanceIndex idx = build_index(sub, std::max(1, r));
  auto rep = verify_weak(sub, idx, local, r);
  if (!rep.valid)
    throw std::invalid_argument(std::string("cut_compose: ") + which +
                                " is not a weak r-guidance system of its side");
}

}  // namespace

PartialOrientation cut_compose(const Graph& g, const DistanceIndex& idx,
                               const CutPartition& cut, const PartialOrientation& ha,
                               const PartialOrientation& hb, int r) {
  auto classes = equivalence_classes(g, cut);  // also validates the partition
  if (!cut.a.empty()) verify_side(g, cut.a, ha, r, "hA");
  if (!cut.b.empty()) verify_side(g, cut.b, hb, r, "hB");

  PartialOrientation h = orientation_union(ha, hb);

  // per class: nearest member (smallest index among nearest), then one gate
  // edge toward it from every vertex of the class's components
  std::vector<int> dist, src;
  std::vector<int> target_dist;
  for (const auto& cls : classes) {
    class_bfs(g, cls, dist, src);
    // distances to each distinct chosen target
    std::map<int, std::vector<int>> by_target;
    for (int u = 0; u < g.n(); ++u) {
      if (dist[u] >= 1) by_target[src[u]].push_back(u);
    }
    for (const auto& [target, verts] : by_target) {
      // plain BFS from the target
      target_dist.assign(g.n(), -1);
      target_dist[target] = 0;
      std::vector<int> frontier{target}, next;
      while (!frontier.empty()) {
        next.clear();
        for (int x : frontier) {
          for (int y : g.neighbors(x)) {
            if (target_dist[y] < 0) {
              target_dist[y] = target_dist[x] + 1;
              next.push_back(y);
            }
          }
        }
        frontier.swap(next);
      }
      for (int u : verts) {
        int l = dist[u];
        int gate = -1;
        for (int z : g.neighbors(u)) {
          if (target_dist[z] == l - 1) {
            gate = z;
            break;
          }
        }
        if (gate >= 0 && !h.has(u, gate)) {
          auto& row = h.out[u];
          row.insert(std::lower_bound(row.begin(), row.end(), gate), gate);
        }
      }
    }
  }
  if (!verify_weak(g, idx, h, r).valid)
    throw std::logic_error("cut_compose: composed system failed verification");
  return h;
}

// ---------------------------------------------------------------------------
// tree-model construction

namespace {

using TypeKey = std::vector<int>;  // [k, f(1..k), g upper triangle]

struct NodeTypes {
  std::map<TypeKey, std::vector<int>> a_sets;  // representative tuple vertices
};

}  // namespace

TreeModelGuidance tree_model_guidance(const TreeModel& model, int r, int64_t tuple_budget) {
  if (r < 1) throw std::invalid_argument("tree_model_guidance: r must be positive");
  model.validate();
  TreeModelGuidance out;
  out.graph = graph_from_tree_model(model);
  out.h = PartialOrientation(model.num_leaves);
  out.outdegree_bound = std::pow(r, 3) * std::pow(model.m, r) *
                        std::pow(model.depth + 1, r * r) * model.depth;

  int nn = model.num_nodes();
  auto depths = model.node_depths();

  // descendant leaves per node, ascending
  std::vector<std::vector<int>> desc(nn);
  {
    std::vector<int> order(nn);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return depths[x] > depths[y]; });
    for (int v : order) {
      if (v < model.num_leaves) desc[v].push_back(v);
      if (model.parent[v] >= 0) {
        auto& up = desc[model.parent[v]];
        up.insert(up.end(), desc[v].begin(), desc[v].end());
      }
    }
    for (auto& d : desc) std::sort(d.begin(), d.end());
  }

  // pairwise leaf half-distances
  int L = model.num_leaves;
  std::vector<std::vector<int>> half(L, std::vector<int>(L, 0));
  for (int u = 0; u < L; ++u) {
    for (int v = u + 1; v < L; ++v) {
      int x = u, y = v;
      while (x != y) {
        if (depths[x] >= depths[y]) x = model.parent[x];
        else y = model.parent[y];
      }
      half[u][v] = half[v][u] = model.depth - depths[x];
    }
  }

  // enumeration budget
  int64_t work = 0;
  for (int x = 0; x < nn; ++x) {
    int64_t sz = static_cast<int64_t>(desc[x].size());
    int64_t pw = 1;
    for (int k = 1; k <= r; ++k) {
      if (pw > tuple_budget / std::max<int64_t>(sz, 1)) {
        pw = tuple_budget + 1;
        break;
      }
      pw *= sz;
      work += pw;
      if (work > tuple_budget) break;
    }
    if (work > tuple_budget)
      throw TypeBudgetError("tree_model_guidance: type enumeration budget exceeded");
  }

  // A(x,t): vertices of the lexicographically first tuple of each type
  std::vector<NodeTypes> types(nn);
  std::vector<int> tuple;
  for (int x = 0; x < nn; ++x) {
    const auto& leaves = desc[x];
    int sz = static_cast<int>(leaves.size());
    if (sz == 0) continue;
    for (int k = 1; k <= r && k <= sz; ++k) {
      // ordered tuples of distinct leaves in lexicographic order
      std::vector<int> pos(k, -1);
      std::vector<bool> used(sz, false);
      tuple.assign(k, -1);
      int depth_i = 0;
      while (depth_i >= 0) {
        if (depth_i == k) {
          TypeKey key;
          key.push_back(k);
          for (int i = 0; i < k; ++i) key.push_back(model.leaf_label[tuple[i]]);
          for (int i = 0; i < k; ++i) {
            for (int j = i + 1; j < k; ++j) key.push_back(half[tuple[i]][tuple[j]]);
          }
          auto& slot = types[x].a_sets[key];
          if (slot.empty()) {
            slot.assign(tuple.begin(), tuple.begin() + k);
            std::sort(slot.begin(), slot.end());
          }
          --depth_i;
          continue;
        }
        int& p = pos[depth_i];
        if (p >= 0) used[p] = false;
        ++p;
        while (p < sz && used[p]) ++p;
        if (p >= sz) {
          p = -1;
          --depth_i;
          continue;
        }
        used[p] = true;
        tuple[depth_i] = leaves[p];
        ++depth_i;
        if (depth_i < k) pos[depth_i] = -1;
      }
    }
  }

  // children lists
  std::vector<std::vector<int>> children(nn);
  for (int v = 0; v < nn; ++v) {
    if (model.parent[v] >= 0) children[model.parent[v]].push_back(v);
  }
  for (auto& ch : children) std::sort(ch.begin(), ch.end());

  // B(y) = union over types of the A-sets of the first r+1 children holding
  // that type
  std::vector<std::vector<int>> b_set(nn);
  for (int y = 0; y < nn; ++y) {
    if (children[y].empty()) continue;
    std::map<TypeKey, int> taken;
    std::vector<int> acc;
    std::map<TypeKey, std::vector<const std::vector<int>*>> per_type;
    for (int x : children[y]) {
      for (const auto& [key, aset] : types[x].a_sets) per_type[key].push_back(&aset);
    }
    for (const auto& [key, sets] : per_type) {
      int take = std::min<int>(static_cast<int>(sets.size()), r + 1);
      for (int i = 0; i < take; ++i) acc.insert(acc.end(), sets[i]->begin(), sets[i]->end());
    }
    std::sort(acc.begin(), acc.end());
    acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
    b_set[y] = std::move(acc);
  }

  out.b_sets = b_set;
  // orient u -> v whenever uv is an edge and v lies in B(y) of an ancestor y
  for (int u = 0; u < L; ++u) {
    std::vector<int> row;
    for (int y = model.parent[u]; y >= 0; y = model.parent[y]) {
      for (int v : b_set[y]) {
        if (v != u && out.graph.adjacent(u, v)) row.push_back(v);
      }
    }
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    out.h.out[u] = std::move(row);
  }
  return out;
}

}  // namespace wgs
