#include "doctest.h"

#include <cmath>

#include "helpers.hpp"
#include "wgs/generators.hpp"
#include "wgs/lp.hpp"
#include "wgs/query.hpp"
#include "wgs/synthesize.hpp"
#include "wgs/verify.hpp"

using namespace wgs;

namespace {

PartialOrientation cyclic(const Graph& cycle) {
  std::vector<std::pair<int, int>> arcs;
  for (int i = 0; i < cycle.n(); ++i) arcs.emplace_back(i, (i + 1) % cycle.n());
  return PartialOrientation::from_edges(cycle, arcs);
}

}  // namespace

TEST_CASE("query_distance basics") {
  Graph p3 = path_graph(3);
  auto h = PartialOrientation::from_edges(p3, {{0, 1}});
  auto a = query_distance(p3, h, 0, 2, 2);
  CHECK(a.within_r);
  CHECK(a.distance == 2);
  CHECK(a.path == std::vector<int>{0, 1, 2});

  auto adj = query_distance(p3, h, 0, 1, 2);
  CHECK(adj.distance == 1);
  CHECK(adj.path == std::vector<int>{0, 1});

  Graph c5 = cycle_graph(5);
  auto hc = cyclic(c5);
  auto qc = query_distance(c5, hc, 0, 2, 2);
  CHECK(qc.within_r);
  CHECK(qc.distance == 2);

  auto far = query_distance(path_graph(5), PartialOrientation(5), 0, 4, 2);
  CHECK(!far.within_r);
}

TEST_CASE("query_distance agrees with BFS under valid systems") {
  Rng rng(808);
  for (int trial = 0; trial < 12; ++trial) {
    Graph g = random_graph(12, 0.25, rng.next());
    int r = 2 + trial % 3;
    auto idx = build_index(g, r);
    auto sol = solve(build_guidance_lp(g, idx, r));
    PartialOrientation h =
        sol.status == LpStatus::infeasible_degenerate
            ? PartialOrientation(g.n())
            : round_fractional(g, idx, sol.p, r, std::max(sol.c, 0.5));
    REQUIRE(verify_weak(g, idx, h, r).valid);
    auto truth = test::bfs_all_pairs(g);
    for (int u = 0; u < g.n(); ++u) {
      for (int v = 0; v < g.n(); ++v) {
        auto ans = query_distance(g, h, u, v, r);
        int expect = truth[u][v];
        if (expect >= 0 && expect <= r) {
          REQUIRE(ans.within_r);
          CHECK(ans.distance == expect);
          REQUIRE(static_cast<int>(ans.path.size()) == expect + 1);
          CHECK(ans.path.front() == u);
          CHECK(ans.path.back() == v);
          for (size_t i = 0; i + 1 < ans.path.size(); ++i)
            CHECK(g.adjacent(ans.path[i], ans.path[i + 1]));
        } else {
          CHECK(!ans.within_r);
        }
      }
    }
  }
}

TEST_CASE("query_distance over the other construction routes") {
  auto check_all_pairs = [](const Graph& g, const PartialOrientation& h, int r) {
    auto truth = test::bfs_all_pairs(g);
    for (int u = 0; u < g.n(); ++u) {
      for (int v = 0; v < g.n(); ++v) {
        auto ans = query_distance(g, h, u, v, r);
        int expect = truth[u][v];
        if (expect >= 0 && expect <= r) {
          REQUIRE(ans.within_r);
          CHECK(ans.distance == expect);
        } else {
          CHECK(!ans.within_r);
        }
      }
    }
  };

  SUBCASE("interval route at n = 40") {
    auto built = interval_guidance(random_interval_set(40, 12));
    int r = std::min(4, std::max(1, test::true_diameter(built.graph)));
    check_all_pairs(built.graph, built.h, r);
  }
  SUBCASE("vc-round route") {
    Graph g = random_graph(25, 0.25, 77);
    auto idx = build_index(g, 3);
    auto sol = solve(build_guidance_lp(g, idx, 3));
    REQUIRE(sol.status == LpStatus::optimal);
    auto h = vc_round(g, idx, sol.p, 3, 8);
    REQUIRE(verify_weak(g, idx, h, 3).valid);
    check_all_pairs(g, h, 3);
  }
  SUBCASE("completion route") {
    Graph g = random_graph(20, 0.2, 13);
    auto idx = build_index(g, 2);
    auto sol = solve(build_guidance_lp(g, idx, 2));
    REQUIRE(sol.status == LpStatus::optimal);
    auto weak = round_fractional(g, idx, sol.p, 2, std::max(sol.c, 0.5));
    auto full = complete_to_guidance(g, idx, weak, 2);
    check_all_pairs(g, full, 2);
  }
  SUBCASE("power-lift route") {
    Graph g = path_graph(9);
    auto idx = build_index(g, 4);
    std::vector<std::pair<int, int>> arcs;
    for (auto [u, v] : g.edges()) {
      arcs.emplace_back(u, v);
      arcs.emplace_back(v, u);
    }
    auto lift = power_lift(g, idx, PartialOrientation::from_edges(g, arcs), 2, 2);
    check_all_pairs(lift.power, lift.f, 2);
  }
}

TEST_CASE("random_exploration base cases") {
  Graph p3 = path_graph(3);
  FractionalOrientation p(3);
  p.set(0, 1, 1.0);
  p.set(2, 1, 1.0);
  Rng rng(5);
  SUBCASE("adjacent pairs are deterministic") {
    for (int i = 0; i < 50; ++i) {
      auto e = random_exploration(p3, p, 0, 1, 3, rng);
      CHECK(e.walk_u == std::vector<int>{0, 1});
      CHECK(e.walk_v == std::vector<int>{1});
    }
  }
  SUBCASE("radius one stops immediately") {
    auto e = random_exploration(p3, p, 0, 2, 1, rng);
    CHECK(e.walk_u == std::vector<int>{0});
    CHECK(e.walk_v == std::vector<int>{2});
  }
  SUBCASE("P3 endpoints meet with the guaranteed rate") {
    int success = 0;
    const int trials = 20000;
    for (int t = 0; t < trials; ++t) {
      auto e = random_exploration(p3, p, 0, 2, 2, rng);
      int len = 0;
      if (exploration_forms_path(p3, e, &len) && len == 2) ++success;
    }
    double q = 0.25;  // (4c)^-(l-1) with c = 1
    double sigma = std::sqrt(q * (1 - q) / trials);
    CHECK(static_cast<double>(success) / trials >= q - 3 * sigma);
  }
}

TEST_CASE("query_probabilistic") {
  SUBCASE("adjacent pairs short-circuit") {
    Graph p2 = path_graph(2);
    FractionalOrientation p(2);
    Rng rng(2);
    auto ans = query_probabilistic(p2, p, 0, 1, 3, 5, rng);
    CHECK(ans.distance == 1);
  }
  SUBCASE("C5 distance two") {
    Graph c5 = cycle_graph(5);
    FractionalOrientation p(5);
    for (int i = 0; i < 5; ++i) {
      p.set(i, (i + 1) % 5, 0.5);
      p.set(i, (i + 4) % 5, 0.5);
    }
    Rng rng(7);
    int hits = 0;
    for (int rep = 0; rep < 200; ++rep) {
      auto ans = query_probabilistic(c5, p, 0, 2, 2, 10, rng);
      if (ans.within_r && ans.distance == 2) ++hits;
    }
    CHECK(hits == 200);
  }
  SUBCASE("separate components answer greater-than-r") {
    Graph g(4, {{0, 1}, {2, 3}});
    FractionalOrientation p(4);
    p.set(0, 1, 1.0);
    Rng rng(3);
    auto ans = query_probabilistic(g, p, 0, 2, 3, 8, rng);
    CHECK(!ans.within_r);
  }
  SUBCASE("returned paths always carry the true distance") {
    Rng rng(606);
    for (int trial = 0; trial < 8; ++trial) {
      Graph g = random_graph(10, 0.3, rng.next());
      auto idx = build_index(g, 3);
      auto sol = solve(build_guidance_lp(g, idx, 3));
      if (sol.status == LpStatus::infeasible_degenerate) continue;
      auto truth = test::bfs_all_pairs(g);
      for (int u = 0; u < g.n(); ++u) {
        for (int v = u + 1; v < g.n(); ++v) {
          auto ans = query_probabilistic(g, sol.p, u, v, 3, 10, rng);
          if (ans.within_r) {
            CHECK(truth[u][v] == ans.distance);
            CHECK(static_cast<int>(ans.path.size()) == ans.distance + 1);
            for (size_t i = 0; i + 1 < ans.path.size(); ++i)
              CHECK(g.adjacent(ans.path[i], ans.path[i + 1]));
          } else {
            CHECK((truth[u][v] < 0 || truth[u][v] > 3));
          }
        }
      }
    }
  }
}
