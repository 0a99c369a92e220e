#include "wgs/generators.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

#include "wgs/distance_index.hpp"
#include "wgs/rng.hpp"

namespace wgs {

std::pair<Graph, PartialOrientation> universal_vertex_graph(const Graph& base) {
  int n = base.n();
  std::vector<std::pair<int, int>> edges = base.edges();
  for (int v = 0; v < n; ++v) edges.emplace_back(v, n);
  Graph g(n + 1, edges);
  PartialOrientation h(n + 1);
  for (int v = 0; v < n; ++v) h.out[v].push_back(n);
  return {std::move(g), std::move(h)};
}

SubdividedStarPower subdivided_star_power(int n) {
  if (n < 2) throw std::invalid_argument("subdivided_star_power: n >= 2 required");
  // center 0, y_i = 1..n, mid_i = n+i, leaf x_i = 2n+i
  std::vector<std::pair<int, int>> tree_edges;
  for (int i = 1; i <= n; ++i) {
    tree_edges.emplace_back(0, i);
    tree_edges.emplace_back(i, n + i);
    tree_edges.emplace_back(n + i, 2 * n + i);
  }
  SubdividedStarPower s;
  s.tree = Graph(3 * n + 1, tree_edges);
  s.graph = distance_power(s.tree, 2);
  for (int i = 1; i <= n; ++i) {
    s.y_set.push_back(i);
    s.x_set.push_back(2 * n + i);
  }
  return s;
}

bool subdivided_star_structure_ok(const SubdividedStarPower& s) {
  const Graph& g = s.graph;
  std::vector<bool> in_y(g.n(), false);
  for (int y : s.y_set) in_y[y] = true;
  DistanceIndex idx = build_index(g, 3);
  for (size_t i = 0; i < s.x_set.size(); ++i) {
    for (size_t j = i + 1; j < s.x_set.size(); ++j) {
      int u = s.x_set[i], v = s.x_set[j];
      if (idx.dist(u, v) != 3) return false;
      // enumerate all shortest paths u-a-b-v
      int count = 0, y_edges_on_last = -1;
      for (int a : g.neighbors(u)) {
        if (idx.dist(a, v) != 2) continue;
        for (int b : g.neighbors(a)) {
          if (!g.adjacent(b, v) || idx.dist(b, v) != 1) continue;
          if (idx.dist(u, b) != 2) continue;
          ++count;
          int y_edges = 0;
          if (in_y[u] && in_y[a]) ++y_edges;
          if (in_y[a] && in_y[b]) ++y_edges;
          if (in_y[b] && in_y[v]) ++y_edges;
          y_edges_on_last = y_edges;
        }
      }
      if (count != 1 || y_edges_on_last != 1) return false;
    }
  }
  return true;
}

GakInstance gak_instance(int a, int k, uint64_t seed) {
  if (a < 2 || k < 1) throw std::invalid_argument("gak_instance: need a >= 2, k >= 1");
  GakInstance inst;
  inst.a = a;
  inst.k = k;
  inst.m = k << (k + 1);  // k * 2^(k+1)
  int m = inst.m;
  int r_size = m * a;
  int n = a + r_size + m;
  // L = 0..a-1, R = a..a+ma-1, hubs after R
  for (int v = 0; v < a; ++v) inst.l_set.push_back(v);
  for (int v = 0; v < r_size; ++v) inst.r_set.push_back(a + v);
  inst.parts.resize(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < a; ++j) inst.parts[i].push_back(a + i * a + j);
    inst.hubs.push_back(a + r_size + i);
  }

  Rng rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int z = 0; z < a; ++z) {
    for (int u = a; u < a + r_size; ++u) {
      if (rng.next_double() < 0.5) edges.emplace_back(z, u);
    }
  }
  for (int i = 0; i < m; ++i) {
    for (int v : inst.parts[i]) edges.emplace_back(inst.hubs[i], v);
  }
  inst.graph = Graph(n, edges);

  inst.p_explicit = FractionalOrientation(n);
  double hub_w = 3.0 / a;
  double cross_w = 2.5 / a;
  for (int i = 0; i < m; ++i) {
    auto& row = inst.p_explicit.w[inst.hubs[i]];
    for (int v : inst.parts[i]) row.emplace_back(v, hub_w);
    std::sort(row.begin(), row.end());
  }
  for (int u = a; u < a + r_size; ++u) {
    auto& row = inst.p_explicit.w[u];
    for (int z : inst.graph.neighbors(u)) {
      if (z < a) row.emplace_back(z, cross_w);
    }
    std::sort(row.begin(), row.end());
  }
  for (int z = 0; z < a; ++z) {
    auto& row = inst.p_explicit.w[z];
    for (int u : inst.graph.neighbors(z)) {
      if (u >= a && u < 2 * a) row.emplace_back(u, cross_w);  // first part only
    }
    std::sort(row.begin(), row.end());
  }
  return inst;
}

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

ProjectiveSplit projective_split_graph(int n) {
  if (!is_prime(n))
    throw std::invalid_argument("projective_split_graph: order must be prime");
  // normalized homogeneous coordinates over the prime field
  std::vector<std::array<int, 3>> coords;
  for (int y = 0; y < n; ++y) {
    for (int z = 0; z < n; ++z) coords.push_back({1, y, z});
  }
  for (int z = 0; z < n; ++z) coords.push_back({0, 1, z});
  coords.push_back({0, 0, 1});
  int big_n = static_cast<int>(coords.size());  // n^2 + n + 1

  auto incident = [&](int p, int l) {
    int dot = coords[p][0] * coords[l][0] + coords[p][1] * coords[l][1] +
              coords[p][2] * coords[l][2];
    return dot % n == 0;
  };

  // axioms: every line has n+1 points, every point on n+1 lines, two lines
  // meet in exactly one point
  std::vector<std::vector<int>> line_pts(big_n);
  for (int l = 0; l < big_n; ++l) {
    for (int p = 0; p < big_n; ++p) {
      if (incident(p, l)) line_pts[l].push_back(p);
    }
    if (static_cast<int>(line_pts[l].size()) != n + 1)
      throw std::logic_error("projective plane: line size mismatch");
  }
  for (int p = 0; p < big_n; ++p) {
    int cnt = 0;
    for (int l = 0; l < big_n; ++l) cnt += incident(p, l) ? 1 : 0;
    if (cnt != n + 1) throw std::logic_error("projective plane: point degree mismatch");
  }
  for (int l1 = 0; l1 < big_n; ++l1) {
    for (int l2 = l1 + 1; l2 < big_n; ++l2) {
      int common = 0;
      for (int p : line_pts[l1])
        common += std::binary_search(line_pts[l2].begin(), line_pts[l2].end(), p) ? 1 : 0;
      if (common != 1) throw std::logic_error("projective plane: line intersection != 1");
    }
  }

  ProjectiveSplit out;
  out.order = n;
  std::vector<std::pair<int, int>> edges;
  for (int p = 0; p < big_n; ++p) {
    out.points.push_back(p);
    for (int q = p + 1; q < big_n; ++q) edges.emplace_back(p, q);  // clique on points
  }
  for (int l = 0; l < big_n; ++l) {
    out.lines.push_back(big_n + l);
    for (int p : line_pts[l]) edges.emplace_back(p, big_n + l);
  }
  out.graph = Graph(2 * big_n, edges);
  return out;
}

LabeledGraph halfgraph_hard_instance(int d, int a) {
  if (d < 0) throw std::invalid_argument("halfgraph_hard_instance: d >= 0 required");
  if (a < std::max(2, 2 * d - 1))
    throw std::invalid_argument("halfgraph_hard_instance: need a >= max(2, 2d-1)");
  LabeledGraph cur;
  cur.graph = Graph(2, {{0, 1}});
  cur.label = {1, 2};
  for (int level = 1; level <= d; ++level) {
    // H' = previous + v3,v4 joined to labels 1 and 2
    int pn = cur.graph.n();
    std::vector<std::pair<int, int>> prime_edges = cur.graph.edges();
    int v3 = pn, v4 = pn + 1;
    std::vector<int> prime_label = cur.label;
    prime_label.push_back(3);
    prime_label.push_back(4);
    for (int v = 0; v < pn; ++v) {
      if (cur.label[v] == 1) prime_edges.emplace_back(v, v4);
      if (cur.label[v] == 2) prime_edges.emplace_back(v, v3);
    }
    int prime_n = pn + 2;

    // a disjoint copies, then v5 and v6 joined to labels 3 and 4
    std::vector<std::pair<int, int>> edges;
    std::vector<int> label;
    for (int copy = 0; copy < a; ++copy) {
      int off = copy * prime_n;
      for (auto [u, v] : prime_edges) edges.emplace_back(off + u, off + v);
      label.insert(label.end(), prime_label.begin(), prime_label.end());
    }
    int v5 = a * prime_n, v6 = v5 + 1;
    label.push_back(5);
    label.push_back(6);
    for (int v = 0; v < v5; ++v) {
      if (label[v] == 3) edges.emplace_back(v, v5);
      if (label[v] == 4) edges.emplace_back(v, v6);
    }
    cur.graph = Graph(v6 + 1, edges);
    // relabel 3,5 -> 1 and 4,6 -> 2
    for (int& l : label) {
      if (l == 3 || l == 5) l = 1;
      if (l == 4 || l == 6) l = 2;
    }
    cur.label = std::move(label);
  }
  return cur;
}

std::vector<Interval> random_interval_set(int n, uint64_t seed) {
  if (n < 0) throw std::invalid_argument("random_interval_set: n >= 0 required");
  Rng rng(seed);
  std::set<double> used;
  auto draw = [&]() {
    double x = rng.next_double();
    while (!used.insert(x).second) x = rng.next_double();
    return x;
  };
  std::vector<Interval> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    double p = draw(), q = draw();
    out.push_back({std::min(p, q), std::max(p, q)});
  }
  return out;
}

Graph random_graph(int n, double edge_probability, uint64_t seed) {
  if (edge_probability < 0 || edge_probability > 1)
    throw std::invalid_argument("random_graph: probability outside [0,1]");
  Rng rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.next_double() < edge_probability) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

Graph petersen() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);      // outer cycle
    edges.emplace_back(i, i + 5);            // spokes
    edges.emplace_back(i + 5, (i + 2) % 5 + 5);  // inner pentagram
  }
  return Graph(10, edges);
}

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: n >= 3 required");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph star_graph(int leaves) {
  if (leaves < 0) throw std::invalid_argument("star_graph: leaves >= 0 required");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph(leaves + 1, edges);
}

TreeModel random_tree_model(int m, int d, int leaves, uint64_t seed) {
  if (m < 1 || d < 1 || leaves < 1)
    throw std::invalid_argument("random_tree_model: m, d, leaves must be >= 1");
  Rng rng(seed);
  TreeModel model;
  model.m = m;
  model.depth = d;
  model.num_leaves = leaves;
  model.parent.assign(leaves, -1);
  std::vector<int> current(leaves);
  for (int i = 0; i < leaves; ++i) current[i] = i;
  int next_id = leaves;
  for (int depth = d - 1; depth >= 1; --depth) {
    int q = 1 + static_cast<int>(rng.next_below(current.size()));
    std::vector<int> parents(q);
    for (int i = 0; i < q; ++i) {
      parents[i] = next_id++;
      model.parent.push_back(-1);
    }
    for (size_t i = 0; i < current.size(); ++i) {
      // the first q children keep every parent nonempty
      int p = i < static_cast<size_t>(q) ? parents[i]
                                         : parents[rng.next_below(q)];
      model.parent[current[i]] = p;
    }
    current = parents;
  }
  int root = next_id++;
  model.parent.push_back(-1);
  for (int v : current) model.parent[v] = root;

  model.leaf_label.resize(leaves);
  for (int i = 0; i < leaves; ++i)
    model.leaf_label[i] = 1 + static_cast<int>(rng.next_below(m));
  model.signature.resize(d + 1);
  for (int i = 1; i <= d; ++i) {
    for (int x = 1; x <= m; ++x) {
      for (int y = x; y <= m; ++y) {
        if (rng.next_bool()) model.add_signature(i, x, y);
      }
    }
  }
  model.validate();
  return model;
}

}  // namespace wgs
