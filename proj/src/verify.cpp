#include "wgs/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "wgs/format.hpp"

namespace wgs {

namespace {

void require_radius(const DistanceIndex& idx, int r) {
  if (idx.radius() < r)
    throw std::invalid_argument("verify: index radius smaller than r");
}

// does out[u] contain a vertex at distance target from v?
bool has_out_in_gate(const DistanceIndex& idx, const PartialOrientation& h, int u, int v,
                     int target_level) {
  for (int w : h.out[u]) {
    if (idx.at_level(v, target_level, w)) return true;
  }
  return false;
}

}  // namespace

std::string serialize_report(const VerificationReport& rep) {
  std::string out;
  out += rep.valid ? "valid true\n" : "valid false\n";
  out += "maxout " + format_number(rep.max_outdegree) + "\n";
  for (const auto& d : rep.dissatisfied) {
    out += "bad " + std::to_string(d.u) + " " + std::to_string(d.v) + " " +
           std::to_string(d.dist) + "\n";
  }
  return out;
}

VerificationReport verify_weak(const Graph& g, const DistanceIndex& idx,
                               const PartialOrientation& h, int r) {
  require_radius(idx, r);
  VerificationReport rep;
  rep.max_outdegree = max_outdegree(h);
  for (int u = 0; u < g.n(); ++u) {
    int top = std::min(r, idx.max_level(u));
    for (int l = 2; l <= top; ++l) {
      for (int v : idx.level(u, l)) {
        if (v <= u) continue;
        ++rep.pairs_checked;
        if (has_out_in_gate(idx, h, u, v, l - 1)) continue;
        if (has_out_in_gate(idx, h, v, u, l - 1)) continue;
        rep.dissatisfied.push_back({u, v, l});
      }
    }
  }
  rep.valid = rep.dissatisfied.empty();
  std::sort(rep.dissatisfied.begin(), rep.dissatisfied.end());
  return rep;
}

VerificationReport verify_strict(const Graph& g, const DistanceIndex& idx,
                                 const PartialOrientation& h, int r, StrictMode mode) {
  require_radius(idx, r);
  VerificationReport rep;
  rep.max_outdegree = max_outdegree(h);

  // directed truncated BFS ball of every vertex, as sorted (vertex, dist) rows
  int n = g.n();
  std::vector<std::vector<std::pair<int, int>>> ball(n);
  {
    std::vector<int> dist(n);
    for (int s = 0; s < n; ++s) {
      std::fill(dist.begin(), dist.end(), -1);
      dist[s] = 0;
      std::vector<int> frontier{s}, next;
      ball[s].push_back({s, 0});
      for (int level = 1; level <= r && !frontier.empty(); ++level) {
        next.clear();
        for (int x : frontier) {
          for (int y : h.out[x]) {
            if (dist[y] < 0) {
              dist[y] = level;
              next.push_back(y);
              ball[s].push_back({y, level});
            }
          }
        }
        frontier.swap(next);
      }
      std::sort(ball[s].begin(), ball[s].end());
    }
  }

  auto meets = [&](int u, int v, int l) {
    const auto& bu = ball[u];
    const auto& bv = ball[v];
    size_t i = 0, j = 0;
    while (i < bu.size() && j < bv.size()) {
      if (bu[i].first < bv[j].first) {
        ++i;
      } else if (bu[i].first > bv[j].first) {
        ++j;
      } else {
        if (bu[i].second + bv[j].second <= l) return true;
        ++i;
        ++j;
      }
    }
    return false;
  };

  int lo = mode == StrictMode::full ? 1 : 2;
  for (int u = 0; u < g.n(); ++u) {
    int top = std::min(r, idx.max_level(u));
    for (int l = lo; l <= top; ++l) {
      for (int v : idx.level(u, l)) {
        if (v <= u) continue;
        ++rep.pairs_checked;
        if (!meets(u, v, l)) rep.dissatisfied.push_back({u, v, l});
      }
    }
  }
  rep.valid = rep.dissatisfied.empty();
  std::sort(rep.dissatisfied.begin(), rep.dissatisfied.end());
  return rep;
}

VerificationReport verify_fractional(const Graph& g, const DistanceIndex& idx,
                                     const FractionalOrientation& p, int r, double tol) {
  require_radius(idx, r);
  if (tol < 0) throw std::invalid_argument("verify_fractional: negative tolerance");
  VerificationReport rep;
  rep.max_outdegree = max_outdegree(p);
  int n = g.n();

  // Gate masses for every ordered (u, v) with 2 <= dist <= r, stored aligned
  // with the index rows. A scatter over p's support beats per-pair gate
  // merges on large instances: y in N(u) contributes p(u,y) to exactly the
  // targets v with dist(u,v) = dist(y,v) + 1.
  std::vector<size_t> row_base(n + 1, 0);
  std::vector<int> row_top(n);
  for (int u = 0; u < n; ++u) {
    row_top[u] = std::min(r, idx.max_level(u));
    size_t count = 0;
    for (int l = 2; l <= row_top[u]; ++l) count += idx.level(u, l).size();
    row_base[u + 1] = row_base[u] + count;
  }
  std::vector<double> mass(row_base[n], 0.0);
  // slot of v inside u's level-l block
  auto slot_of = [&](int u, int l, int v) -> size_t {
    size_t off = row_base[u];
    for (int ll = 2; ll < l; ++ll) off += idx.level(u, ll).size();
    auto lv = idx.level(u, l);
    return off + (std::lower_bound(lv.begin(), lv.end(), v) - lv.begin());
  };

  std::vector<int> stamp_dist(n, -1);
  std::vector<size_t> stamp_slot(n, 0);
  for (int u = 0; u < n; ++u) {
    if (row_base[u + 1] == row_base[u]) continue;
    size_t off = row_base[u];
    for (int l = 2; l <= row_top[u]; ++l) {
      for (int v : idx.level(u, l)) {
        stamp_dist[v] = l;
        stamp_slot[v] = off++;
      }
    }
    for (const auto& [y, w] : p.w[u]) {
      if (w == 0) continue;
      int ytop = std::min(row_top[u] - 1, idx.max_level(y));
      for (int j = 1; j <= ytop; ++j) {
        for (int v : idx.level(y, j)) {
          if (stamp_dist[v] == j + 1) mass[stamp_slot[v]] += w;
        }
      }
      // y itself covers targets at distance 1 from y only via j >= 1 above;
      // dist(u,v) = 2 with v = y is impossible since y is adjacent to u
    }
    for (int l = 2; l <= row_top[u]; ++l) {
      for (int v : idx.level(u, l)) stamp_dist[v] = -1;
    }
  }

  for (int u = 0; u < n; ++u) {
    size_t off = row_base[u];
    for (int l = 2; l <= row_top[u]; ++l) {
      for (int v : idx.level(u, l)) {
        size_t my_slot = off++;
        if (v <= u) continue;
        ++rep.pairs_checked;
        double total = mass[my_slot] + mass[slot_of(v, l, u)];
        if (total >= 1.0 - tol) continue;
        rep.dissatisfied.push_back({u, v, l});
      }
    }
  }
  rep.valid = rep.dissatisfied.empty();
  std::sort(rep.dissatisfied.begin(), rep.dissatisfied.end());
  return rep;
}

namespace {

template <class Num, class Entry>
std::pair<std::vector<Entry>, Num> evaluate_dual_impl(const Graph& g,
                                                      const DistanceIndex& idx, int r,
                                                      const std::vector<Entry>& y) {
  // x_u accumulates per neighbor z: S[u][z] = sum over v with z in gate(u,v)
  std::vector<std::map<int, Num>> per_edge(g.n());
  Num total_y{0};
  for (const auto& e : y) {
    int l = idx.dist(e.u, e.v);
    if (e.u == e.v || l == kInfDist || l < 2 || l > r)
      throw std::invalid_argument("evaluate_dual: pair distance outside 2..r");
    total_y += e.w;
    for (int z : gate_set(g, idx, e.u, e.v)) per_edge[e.u][z] += e.w;
    for (int z : gate_set(g, idx, e.v, e.u)) per_edge[e.v][z] += e.w;
  }
  Num total_x{0};
  for (int u = 0; u < g.n(); ++u) {
    Num best{0};
    for (const auto& [z, s] : per_edge[u]) {
      if (best < s) best = s;
    }
    total_x += best;
  }
  Num value{0};
  if (!(total_x == Num{0})) value = total_y / total_x;
  return {y, value};
}

}  // namespace

DualCertificate evaluate_dual(const Graph& g, const DistanceIndex& idx, int r,
                              const std::vector<DualEntry>& y) {
  for (const auto& e : y) {
    if (e.w < 0) throw std::invalid_argument("evaluate_dual: negative weight");
  }
  auto [entries, value] = evaluate_dual_impl<double>(g, idx, r, y);
  return DualCertificate{std::move(entries), value};
}

DualCertificateExact evaluate_dual_exact(const Graph& g, const DistanceIndex& idx, int r,
                                         const std::vector<DualEntryExact>& y) {
  for (const auto& e : y) {
    if (e.w.sign() < 0) throw std::invalid_argument("evaluate_dual: negative weight");
  }
  auto [entries, value] = evaluate_dual_impl<Rational>(g, idx, r, y);
  return DualCertificateExact{std::move(entries), value};
}

DualCertificate to_double(const DualCertificateExact& c) {
  DualCertificate out;
  out.value = c.value.to_double();
  out.y.reserve(c.y.size());
  for (const auto& e : c.y) out.y.push_back({e.u, e.v, e.w.to_double()});
  return out;
}

DualCertificateExact girth5_certificate(const Graph& g, const DistanceIndex& idx,
                                        const std::vector<int>& z_set) {
  std::vector<bool> in_z(g.n(), false);
  for (int v : z_set) in_z[v] = true;

  std::vector<int> deg_z(g.n(), 0);
  for (int v : z_set) {
    for (int w : g.neighbors(v)) {
      if (in_z[w]) ++deg_z[v];
    }
  }
  for (int v : z_set) {
    if (deg_z[v] < 2)
      throw std::invalid_argument("girth5_certificate: G[Z] has a vertex of degree < 2");
  }

  DualCertificateExact cert;
  for (int u : z_set) {
    for (int v : z_set) {
      if (v <= u) continue;
      if (g.adjacent(u, v)) continue;
      // common neighbors in G; certificate requires uniqueness
      int common = 0;
      int via = -1;
      for (int w : g.neighbors(u)) {
        if (g.adjacent(w, v)) {
          ++common;
          via = w;
        }
      }
      if (common == 0) continue;
      if (common > 1)
        throw std::invalid_argument(
            "girth5_certificate: distance-2 pair with two common neighbors (girth < 5)");
      if (!in_z[via]) continue;
      cert.y.push_back({u, v, Rational(1, deg_z[via] - 1)});
    }
  }
  cert.value = evaluate_dual_exact(g, idx, 2, cert.y).value;
  return cert;
}

// ---------------------------------------------------------------------------
// brute-force optimum

namespace {

struct PairInfo {
  int u, v, dist;
  std::vector<int> gate_u;  // gate(u,v)
  std::vector<int> gate_v;  // gate(v,u)
};

struct BruteState {
  const Graph* g;
  int r;
  GuidanceNotion notion;
  std::vector<bool> in_focus;
  std::vector<std::vector<int>> out;  // current arcs, unsorted append/pop
  std::vector<PairInfo> pairs;
  int cap = 0;
  int64_t nodes_left = 0;

  void tick() {
    if (--nodes_left < 0) throw SearchBudgetError("brute_force_optimum: node budget exhausted");
  }
};

bool weak_pair_ok(const BruteState& st, const PairInfo& pr) {
  for (int w : st.out[pr.u]) {
    if (std::binary_search(pr.gate_u.begin(), pr.gate_u.end(), w)) return true;
  }
  for (int w : st.out[pr.v]) {
    if (std::binary_search(pr.gate_v.begin(), pr.gate_v.end(), w)) return true;
  }
  return false;
}

bool weak_dfs(BruteState& st, int t) {
  st.tick();
  const PairInfo* bad = nullptr;
  for (const auto& pr : st.pairs) {
    if (!weak_pair_ok(st, pr)) {
      bad = &pr;
      break;
    }
  }
  if (!bad) return true;
  auto try_side = [&](int a, const std::vector<int>& gate) {
    if (st.in_focus[a] && static_cast<int>(st.out[a].size()) >= t) return false;
    for (int w : gate) {
      if (std::find(st.out[a].begin(), st.out[a].end(), w) != st.out[a].end()) continue;
      st.out[a].push_back(w);
      bool ok = weak_dfs(st, t);
      st.out[a].pop_back();
      if (ok) return true;
    }
    return false;
  };
  if (try_side(bad->u, bad->gate_u)) return true;
  return try_side(bad->v, bad->gate_v);
}

// directed meet test for strict notions on explicit arc sets
bool strict_pair_ok(const Graph& g, const std::vector<std::vector<int>>& out, int u, int v,
                    int l) {
  int n = g.n();
  auto ball = [&](int s, std::vector<int>& dist) {
    dist.assign(n, -1);
    dist[s] = 0;
    std::vector<int> frontier{s}, next;
    for (int level = 1; level <= l && !frontier.empty(); ++level) {
      next.clear();
      for (int x : frontier) {
        for (int y : out[x]) {
          if (dist[y] < 0) {
            dist[y] = level;
            next.push_back(y);
          }
        }
      }
      frontier.swap(next);
    }
  };
  std::vector<int> du, dv;
  ball(u, du);
  ball(v, dv);
  for (int w = 0; w < n; ++w) {
    if (du[w] >= 0 && dv[w] >= 0 && du[w] + dv[w] <= l) return true;
  }
  return false;
}

struct StrictSearch {
  BruteState* st;
  std::vector<int> focus_list;
  std::vector<std::vector<int>> fixed;  // arcs of non-focus vertices

  // assigned out-sets per focus vertex are stored in st->out
  bool dfs(size_t i, int t) {
    st->tick();
    // orientation with current assignments plus everything still open
    std::vector<std::vector<int>> optimistic = st->out;
    for (size_t j = i; j < focus_list.size(); ++j) {
      int x = focus_list[j];
      optimistic[x] = st->g->neighbors(x);
    }
    for (const auto& pr : st->pairs) {
      if (!strict_pair_ok(*st->g, optimistic, pr.u, pr.v, pr.dist)) return false;
    }
    if (i == focus_list.size()) return true;
    int x = focus_list[i];
    const auto& nbrs = st->g->neighbors(x);
    int deg = static_cast<int>(nbrs.size());
    // subsets of N(x) of size <= t, enumerated in increasing size then lex
    std::vector<int> pick;
    std::function<bool(int, int)> choose = [&](int from, int remaining) -> bool {
      if (remaining == 0 || from == deg) {
        st->out[x].clear();
        for (int idx : pick) st->out[x].push_back(nbrs[idx]);
        return dfs(i + 1, t);
      }
      // option: stop adding here
      st->out[x].clear();
      for (int idx : pick) st->out[x].push_back(nbrs[idx]);
      if (dfs(i + 1, t)) return true;
      for (int j = from; j < deg; ++j) {
        pick.push_back(j);
        if (choose(j + 1, remaining - 1)) return true;
        pick.pop_back();
      }
      return false;
    };
    if (t == 0 || deg == 0) {
      st->out[x].clear();
      return dfs(i + 1, t);
    }
    bool ok = choose(0, t);
    st->out[x].clear();
    return ok;
  }
};

}  // namespace

BruteForceResult brute_force_optimum(const Graph& g, const DistanceIndex& idx, int r,
                                     int max_outdegree_cap, GuidanceNotion notion,
                                     const std::vector<int>* focus, int64_t node_budget) {
  require_radius(idx, r);
  BruteState st;
  st.g = &g;
  st.r = r;
  st.notion = notion;
  st.nodes_left = node_budget;
  st.in_focus.assign(g.n(), focus == nullptr);
  if (focus) {
    for (int v : *focus) st.in_focus[v] = true;
  }

  int lo = notion == GuidanceNotion::strict_full ? 1 : 2;
  for (int u = 0; u < g.n(); ++u) {
    int top = std::min(r, idx.max_level(u));
    for (int l = std::max(lo, 1); l <= top; ++l) {
      for (int v : idx.level(u, l)) {
        if (v <= u) continue;
        PairInfo pr;
        pr.u = u;
        pr.v = v;
        pr.dist = l;
        if (l >= 2) {
          pr.gate_u = gate_set(g, idx, u, v);
          pr.gate_v = gate_set(g, idx, v, u);
        }
        st.pairs.push_back(std::move(pr));
      }
    }
  }

  // arcs of non-focus vertices are free: include all of them
  st.out.assign(g.n(), {});
  for (int u = 0; u < g.n(); ++u) {
    if (!st.in_focus[u]) st.out[u] = g.neighbors(u);
  }

  for (int t = 0; t <= max_outdegree_cap; ++t) {
    bool ok;
    if (notion == GuidanceNotion::weak) {
      ok = weak_dfs(st, t);
    } else {
      StrictSearch search;
      search.st = &st;
      for (int v = 0; v < g.n(); ++v) {
        if (st.in_focus[v]) search.focus_list.push_back(v);
      }
      ok = search.dfs(0, t);
    }
    if (ok) return {false, t};
  }
  return {true, 0};
}

// ---------------------------------------------------------------------------
// VC dimension of the gate-set systems

namespace {

bool shattered(const std::vector<std::vector<int>>& sets, const std::vector<int>& a) {
  size_t want = size_t{1} << a.size();
  std::vector<bool> seen(want, false);
  size_t found = 0;
  for (const auto& s : sets) {
    size_t mask = 0;
    for (size_t i = 0; i < a.size(); ++i) {
      if (std::binary_search(s.begin(), s.end(), a[i])) mask |= size_t{1} << i;
    }
    if (!seen[mask]) {
      seen[mask] = true;
      if (++found == want) return true;
    }
  }
  return false;
}

}  // namespace

int vc_dimension(const Graph& g, const DistanceIndex& idx, int r, int cap) {
  if (cap < 0) throw std::invalid_argument("vc_dimension: negative cap");
  int best = 0;
  for (int u = 0; u < g.n() && best < cap; ++u) {
    std::set<std::vector<int>> distinct;
    int top = std::min(r, idx.max_level(u));
    for (int l = 2; l <= top; ++l) {
      for (int v : idx.level(u, l)) distinct.insert(gate_set(g, idx, u, v));
    }
    if (distinct.empty()) continue;
    std::vector<std::vector<int>> sets(distinct.begin(), distinct.end());
    std::set<int> ground_set;
    for (const auto& s : sets) ground_set.insert(s.begin(), s.end());
    std::vector<int> ground(ground_set.begin(), ground_set.end());

    // grow shattered sets level by level; shattering is hereditary
    std::vector<std::vector<int>> frontier;
    for (int a : ground) {
      std::vector<int> single{a};
      if (shattered(sets, single)) frontier.push_back(std::move(single));
    }
    int depth = frontier.empty() ? 0 : 1;
    while (!frontier.empty() && depth < cap) {
      std::vector<std::vector<int>> next;
      for (const auto& a : frontier) {
        for (int e : ground) {
          if (e <= a.back()) continue;
          std::vector<int> bigger = a;
          bigger.push_back(e);
          if (shattered(sets, bigger)) next.push_back(std::move(bigger));
        }
      }
      if (next.empty()) break;
      ++depth;
      frontier.swap(next);
    }
    best = std::max(best, depth);
  }
  return std::min(best, cap);
}

}  // namespace wgs
