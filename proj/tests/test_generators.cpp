#include "doctest.h"

#include "helpers.hpp"
#include "wgs/generators.hpp"
#include "wgs/verify.hpp"

using namespace wgs;

TEST_CASE("universal vertex construction") {
  SUBCASE("edgeless base becomes a star") {
    auto [g, h] = universal_vertex_graph(Graph(3, {}));
    CHECK(g.n() == 4);
    CHECK(g.m() == 3);
    CHECK(max_outdegree(h) == 1);
    auto idx = build_index(g, 3);
    CHECK(verify_strict(g, idx, h, 3, StrictMode::plus).valid);
  }
  SUBCASE("wheel over C4 is a plus-guidance system for any radius") {
    auto [g, h] = universal_vertex_graph(cycle_graph(4));
    auto idx = build_index(g, 5);
    CHECK(verify_strict(g, idx, h, 5, StrictMode::plus).valid);
    CHECK(verify_weak(g, idx, h, 5).valid);
    CHECK(max_outdegree(h) == 1);
  }
  SUBCASE("empty base") {
    auto [g, h] = universal_vertex_graph(Graph(0, {}));
    CHECK(g.n() == 1);
    CHECK(max_outdegree(h) == 0);
  }
}

TEST_CASE("subdivided star power") {
  SUBCASE("n = 2") {
    auto s = subdivided_star_power(2);
    CHECK(s.tree.n() == 7);
    auto idx = build_index(s.graph, 4);
    CHECK(idx.dist(s.x_set[0], s.x_set[1]) == 3);
  }
  SUBCASE("Y induces a clique for n = 5") {
    auto s = subdivided_star_power(5);
    for (size_t i = 0; i < s.y_set.size(); ++i) {
      for (size_t j = i + 1; j < s.y_set.size(); ++j)
        CHECK(s.graph.adjacent(s.y_set[i], s.y_set[j]));
    }
  }
  SUBCASE("structure checker passes for n = 6") {
    CHECK(subdivided_star_structure_ok(subdivided_star_power(6)));
  }
}

TEST_CASE("gak instances") {
  SUBCASE("a=2, k=1 sizes") {
    auto inst = gak_instance(2, 1, 1);
    CHECK(inst.m == 4);
    CHECK(inst.graph.n() == 14);  // 2 + 8 + 4
    CHECK(inst.l_set.size() == 2);
    CHECK(inst.r_set.size() == 8);
    CHECK(inst.hubs.size() == 4);
  }
  SUBCASE("structural counts across parameters") {
    Rng rng(6);
    for (int a : {2, 5, 17, 50}) {
      for (int k : {1, 2, 3}) {
        auto inst = gak_instance(a, k, rng.next());
        int m = k << (k + 1);
        CHECK(inst.m == m);
        CHECK(static_cast<int>(inst.l_set.size()) == a);
        CHECK(static_cast<int>(inst.r_set.size()) == m * a);
        CHECK(static_cast<int>(inst.parts.size()) == m);
        for (const auto& part : inst.parts)
          CHECK(static_cast<int>(part.size()) == a);
        for (int i = 0; i < m; ++i) {
          CHECK(inst.graph.degree(inst.hubs[i]) == a);
          CHECK(inst.p_explicit.out_sum(inst.hubs[i]) == doctest::Approx(3.0));
        }
        CHECK(max_outdegree(inst.p_explicit) <= 3.0 + 1e-12);
      }
    }
  }
  SUBCASE("seeded determinism") {
    auto one = gak_instance(5, 2, 42);
    auto two = gak_instance(5, 2, 42);
    auto other = gak_instance(5, 2, 43);
    CHECK(one.graph.edges() == two.graph.edges());
    CHECK(one.graph.edges() != other.graph.edges());
  }
}

TEST_CASE("projective split graphs") {
  SUBCASE("Fano, order 2") {
    auto s = projective_split_graph(2);
    CHECK(s.graph.n() == 14);
    for (int l : s.lines) CHECK(s.graph.degree(l) == 3);
    for (int p : s.points) CHECK(s.graph.degree(p) == 6 + 3);  // clique + incidences
    // B independent, A a clique
    for (size_t i = 0; i < s.lines.size(); ++i) {
      for (size_t j = i + 1; j < s.lines.size(); ++j)
        CHECK(!s.graph.adjacent(s.lines[i], s.lines[j]));
    }
    for (size_t i = 0; i < s.points.size(); ++i) {
      for (size_t j = i + 1; j < s.points.size(); ++j)
        CHECK(s.graph.adjacent(s.points[i], s.points[j]));
    }
  }
  SUBCASE("order 3") {
    auto s = projective_split_graph(3);
    CHECK(s.graph.n() == 26);
    for (int l : s.lines) CHECK(s.graph.degree(l) == 4);
  }
  SUBCASE("composite order is rejected") {
    CHECK_THROWS_AS(projective_split_graph(4), std::invalid_argument);
    CHECK_THROWS_AS(projective_split_graph(6), std::invalid_argument);
  }
}

TEST_CASE("halfgraph-hard instances") {
  CHECK(halfgraph_hard_instance(0, 2).graph.n() == 2);

  auto h1 = halfgraph_hard_instance(1, 2);
  CHECK(h1.graph.n() == 10);  // a(|H0|+2)+2

  auto h2 = halfgraph_hard_instance(2, 4);
  CHECK(h2.graph.n() == 82);
  CHECK(h2.graph.n() <= 8 * 4 * 4 - 6);

  SUBCASE("labels split evenly") {
    for (const auto& inst : {h1, h2}) {
      int ones = 0, twos = 0;
      for (int l : inst.label) {
        if (l == 1) ++ones;
        if (l == 2) ++twos;
      }
      CHECK(ones == twos);
      CHECK(ones + twos == inst.graph.n());
    }
  }
  SUBCASE("parameter guard") {
    CHECK_THROWS_AS(halfgraph_hard_instance(3, 4), std::invalid_argument);  // a < 2d-1
  }
}

TEST_CASE("random interval sets") {
  CHECK(random_interval_set(0, 1).empty());
  CHECK(random_interval_set(1, 1).size() == 1);
  auto a = random_interval_set(20, 9);
  auto b = random_interval_set(20, 9);
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].lo == b[i].lo);
    CHECK(a[i].hi == b[i].hi);
    CHECK(a[i].lo < a[i].hi);
  }
  // all endpoints distinct
  std::vector<double> pts;
  for (const auto& iv : a) {
    pts.push_back(iv.lo);
    pts.push_back(iv.hi);
  }
  std::sort(pts.begin(), pts.end());
  CHECK(std::adjacent_find(pts.begin(), pts.end()) == pts.end());
}

TEST_CASE("petersen graph is the 3-regular Moore graph") {
  Graph g = petersen();
  CHECK(g.n() == 10);
  CHECK(g.m() == 15);
  for (int v = 0; v < 10; ++v) CHECK(g.degree(v) == 3);
  auto dist = test::bfs_all_pairs(g);
  for (int u = 0; u < 10; ++u) {
    for (int v = u + 1; v < 10; ++v) {
      int common = 0;
      for (int w : g.neighbors(u)) common += g.adjacent(w, v) ? 1 : 0;
      if (g.adjacent(u, v)) {
        CHECK(common == 0);  // triangle-free
      } else {
        CHECK(common == 1);  // girth five with diameter two
        CHECK(dist[u][v] == 2);
      }
    }
  }
}

TEST_CASE("simple families") {
  CHECK(cycle_graph(5).m() == 5);
  CHECK(path_graph(1).m() == 0);
  CHECK(star_graph(4).degree(0) == 4);
  CHECK(random_graph(8, 0.0, 3).m() == 0);
  CHECK(random_graph(8, 1.0, 3).m() == 28);
  CHECK(random_graph(10, 0.4, 7).edges() == random_graph(10, 0.4, 7).edges());
}

TEST_CASE("random tree models") {
  SUBCASE("depth one is a star") {
    TreeModel model = random_tree_model(3, 1, 6, 5);
    CHECK(model.num_nodes() == 7);
    for (int leaf = 0; leaf < 6; ++leaf) CHECK(model.parent[leaf] == 6);
  }
  SUBCASE("single leaf is a path") {
    TreeModel model = random_tree_model(2, 4, 1, 5);
    CHECK(model.num_nodes() == 5);
  }
  SUBCASE("seeded determinism") {
    TreeModel a = random_tree_model(2, 3, 9, 77);
    TreeModel b = random_tree_model(2, 3, 9, 77);
    CHECK(a.parent == b.parent);
    CHECK(a.leaf_label == b.leaf_label);
    for (int i = 1; i <= a.depth; ++i) CHECK(a.signature[i] == b.signature[i]);
  }
}
