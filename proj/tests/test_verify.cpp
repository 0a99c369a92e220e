#include "doctest.h"

#include "helpers.hpp"
#include "wgs/generators.hpp"
#include "wgs/verify.hpp"

using namespace wgs;

namespace {

PartialOrientation bidirect_all(const Graph& g) {
  std::vector<std::pair<int, int>> arcs;
  for (auto [u, v] : g.edges()) {
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  return PartialOrientation::from_edges(g, arcs);
}

PartialOrientation cyclic(const Graph& cycle) {
  std::vector<std::pair<int, int>> arcs;
  for (int i = 0; i < cycle.n(); ++i) arcs.emplace_back(i, (i + 1) % cycle.n());
  return PartialOrientation::from_edges(cycle, arcs);
}

}  // namespace

TEST_CASE("verify_weak on the basic instances") {
  Graph p3 = path_graph(3);
  auto idx = build_index(p3, 2);
  auto ok = verify_weak(p3, idx, PartialOrientation::from_edges(p3, {{0, 1}}), 2);
  CHECK(ok.valid);
  CHECK(ok.pairs_checked == 1);

  auto bad = verify_weak(p3, idx, PartialOrientation(3), 2);
  CHECK(!bad.valid);
  REQUIRE(bad.dissatisfied.size() == 1);
  CHECK(bad.dissatisfied[0] == DissatisfiedPair{0, 2, 2});

  Graph c5 = cycle_graph(5);
  auto idxc = build_index(c5, 2);
  auto rep = verify_weak(c5, idxc, cyclic(c5), 2);
  CHECK(rep.valid);
  CHECK(rep.max_outdegree == 1.0);
  CHECK(rep.pairs_checked == 5);
}

TEST_CASE("verify_strict modes") {
  // plus-guidance of the star: all leaves into the center, any radius
  Graph star = star_graph(4);
  std::vector<std::pair<int, int>> arcs;
  for (int leaf = 1; leaf <= 4; ++leaf) arcs.emplace_back(leaf, 0);
  auto into_center = PartialOrientation::from_edges(star, arcs);
  auto idx = build_index(star, 5);
  CHECK(verify_strict(star, idx, into_center, 5, StrictMode::plus).valid);
  CHECK(verify_strict(star, idx, into_center, 2, StrictMode::full).valid);

  // a single unoriented edge fails full mode at distance 1
  Graph k2 = path_graph(2);
  auto idx2 = build_index(k2, 1);
  auto rep = verify_strict(k2, idx2, PartialOrientation(2), 1, StrictMode::full);
  CHECK(!rep.valid);
  CHECK(rep.dissatisfied.size() == 1);

  Graph p3 = path_graph(3);
  auto idx3 = build_index(p3, 2);
  auto meet = PartialOrientation::from_edges(p3, {{0, 1}, {2, 1}});
  CHECK(verify_strict(p3, idx3, meet, 2, StrictMode::full).valid);
}

TEST_CASE("full implies plus implies weak") {
  Rng rng(99);
  int full_seen = 0, plus_seen = 0;
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = random_graph(8, 0.35, rng.next());
    auto h = test::random_orientation(g, rng);
    auto idx = build_index(g, 3);
    bool full = verify_strict(g, idx, h, 3, StrictMode::full).valid;
    bool plus = verify_strict(g, idx, h, 3, StrictMode::plus).valid;
    bool weak = verify_weak(g, idx, h, 3).valid;
    if (full) CHECK(plus);
    if (plus) CHECK(weak);
    full_seen += full ? 1 : 0;
    plus_seen += plus ? 1 : 0;
  }
  CHECK(plus_seen > 0);
}

TEST_CASE("verify_fractional") {
  Graph c5 = cycle_graph(5);
  auto idx = build_index(c5, 2);
  FractionalOrientation halves(5);
  for (int i = 0; i < 5; ++i) {
    halves.set(i, (i + 1) % 5, 0.5);
    halves.set(i, (i + 4) % 5, 0.5);
  }
  CHECK(verify_fractional(c5, idx, halves, 2, 0.0).valid);

  Graph p3 = path_graph(3);
  auto idx3 = build_index(p3, 2);
  FractionalOrientation weakp(3);
  weakp.set(0, 1, 0.4);
  weakp.set(2, 1, 0.4);
  auto rep = verify_fractional(p3, idx3, weakp, 2, 0.0);
  CHECK(!rep.valid);
  CHECK(rep.dissatisfied.size() == 1);
}

TEST_CASE("weak-valid orientations convert to fractional systems") {
  Rng rng(5);
  for (int trial = 0; trial < 15; ++trial) {
    Graph g = random_graph(9, 0.3, rng.next());
    auto h = bidirect_all(g);
    auto idx = build_index(g, 3);
    REQUIRE(verify_weak(g, idx, h, 3).valid);
    CHECK(verify_fractional(g, idx, to_fractional(h), 3, 0.0).valid);
  }
  Graph c5 = cycle_graph(5);
  auto idx = build_index(c5, 2);
  CHECK(verify_fractional(c5, idx, to_fractional(cyclic(c5)), 2, 0.0).valid);
}

TEST_CASE("report serialization") {
  Graph p3 = path_graph(3);
  auto idx = build_index(p3, 2);
  auto rep = verify_weak(p3, idx, PartialOrientation(3), 2);
  CHECK(serialize_report(rep) == "valid false\nmaxout 0\nbad 0 2 2\n");
}

TEST_CASE("evaluate_dual") {
  Graph c5 = cycle_graph(5);
  auto idx = build_index(c5, 2);
  SUBCASE("zero certificate evaluates to zero") {
    auto cert = evaluate_dual(c5, idx, 2, {});
    CHECK(cert.value == 0.0);
  }
  SUBCASE("all-ones on the distance-2 pairs of C5") {
    std::vector<DualEntry> y;
    for (int i = 0; i < 5; ++i) y.push_back({i, (i + 2) % 5, 1.0});
    auto cert = evaluate_dual(c5, idx, 2, y);
    CHECK(cert.value == doctest::Approx(1.0));
  }
  SUBCASE("pairs outside 2..r are rejected") {
    CHECK_THROWS_AS(evaluate_dual(c5, idx, 2, {{0, 1, 1.0}}), std::invalid_argument);
  }
}

TEST_CASE("Fano split graph dual certificate is exactly 3/2") {
  auto split = projective_split_graph(2);
  REQUIRE(split.graph.n() == 14);
  auto idx = build_index(split.graph, 2);
  std::vector<DualEntryExact> y;
  for (size_t i = 0; i < split.lines.size(); ++i) {
    for (size_t j = i + 1; j < split.lines.size(); ++j)
      y.push_back({split.lines[i], split.lines[j], Rational(1)});
  }
  auto cert = evaluate_dual_exact(split.graph, idx, 2, y);
  CHECK(cert.value == Rational(3, 2));
}

TEST_CASE("girth-5 certificates") {
  SUBCASE("Petersen") {
    Graph g = petersen();
    auto idx = build_index(g, 2);
    auto cert = girth5_certificate(g, idx, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9});
    CHECK(cert.value == Rational(3, 2));
  }
  SUBCASE("plain cycle") {
    Graph c5 = cycle_graph(5);
    auto idx = build_index(c5, 2);
    auto cert = girth5_certificate(c5, idx, {0, 1, 2, 3, 4});
    CHECK(cert.value == Rational(1));
  }
  SUBCASE("pendant vertex excluded by Z") {
    Graph g(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}});
    auto idx = build_index(g, 2);
    auto cert = girth5_certificate(g, idx, {0, 1, 2, 3, 4});
    CHECK(cert.value == Rational(1));
  }
  SUBCASE("four-cycles are detected") {
    Graph c4 = cycle_graph(4);
    auto idx = build_index(c4, 2);
    CHECK_THROWS_AS(girth5_certificate(c4, idx, {0, 1, 2, 3}), std::invalid_argument);
  }
  SUBCASE("low degrees are detected") {
    Graph p3 = path_graph(3);
    auto idx = build_index(p3, 2);
    CHECK_THROWS_AS(girth5_certificate(p3, idx, {0, 1, 2}), std::invalid_argument);
  }
}

TEST_CASE("brute-force optimum") {
  Graph p3 = path_graph(3);
  auto idx3 = build_index(p3, 2);
  auto res = brute_force_optimum(p3, idx3, 2, 4);
  CHECK(!res.exceeds_cap);
  CHECK(res.value == 1);

  Graph c5 = cycle_graph(5);
  auto idxc = build_index(c5, 2);
  res = brute_force_optimum(c5, idxc, 2, 4);
  CHECK(res.value == 1);

  Graph k3 = cycle_graph(3);
  auto idxk = build_index(k3, 2);
  res = brute_force_optimum(k3, idxk, 2, 4);
  CHECK(res.value == 0);

  SUBCASE("cap exceeded is reported, not thrown") {
    auto capped = brute_force_optimum(p3, idx3, 2, 0);
    CHECK(capped.exceeds_cap);
  }
  SUBCASE("node budget throws") {
    Graph g = random_graph(8, 0.5, 12);
    auto idx = build_index(g, 3);
    CHECK_THROWS_AS(brute_force_optimum(g, idx, 3, 6, GuidanceNotion::weak, nullptr, 3),
                    SearchBudgetError);
  }
  SUBCASE("strict search agrees on tiny instances") {
    auto strict = brute_force_optimum(p3, idx3, 2, 4, GuidanceNotion::strict_full);
    CHECK(strict.value == 1);
    auto plus = brute_force_optimum(p3, idx3, 2, 4, GuidanceNotion::strict_plus);
    CHECK(plus.value == 1);
    auto k3_full = brute_force_optimum(k3, idxk, 2, 4, GuidanceNotion::strict_full);
    CHECK(k3_full.value == 1);  // distance-1 pairs force oriented edges
    auto k3_plus = brute_force_optimum(k3, idxk, 2, 4, GuidanceNotion::strict_plus);
    CHECK(k3_plus.value == 0);
  }
}

TEST_CASE("brute-force lower-bounds every verified orientation") {
  Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = random_graph(7, 0.35, rng.next());
    auto idx = build_index(g, 3);
    auto opt = brute_force_optimum(g, idx, 3, 7);
    REQUIRE(!opt.exceeds_cap);
    auto h = test::random_orientation(g, rng);
    if (verify_weak(g, idx, h, 3).valid) CHECK(opt.value <= max_outdegree(h));
    // the dual of any nonnegative certificate stays below the optimum
    std::vector<DualEntry> y;
    for (int u = 0; u < g.n(); ++u) {
      for (int l = 2; l <= std::min(3, idx.max_level(u)); ++l) {
        for (int v : idx.level(u, l)) {
          if (v > u && rng.next_bool()) y.push_back({u, v, rng.next_double()});
        }
      }
    }
    auto cert = evaluate_dual(g, idx, 3, y);
    CHECK(cert.value <= opt.value + 1e-9);
  }
}

TEST_CASE("vc dimension of gate systems") {
  Graph p3 = path_graph(3);
  auto idx3 = build_index(p3, 2);
  CHECK(vc_dimension(p3, idx3, 2) == 0);

  Graph c4 = cycle_graph(4);
  auto idx4 = build_index(c4, 2);
  CHECK(vc_dimension(c4, idx4, 2) == 0);

  Graph none(4, {});
  auto idxe = build_index(none, 2);
  CHECK(vc_dimension(none, idxe, 2) == 0);

  Graph c5 = cycle_graph(5);
  auto idx5 = build_index(c5, 2);
  CHECK(vc_dimension(c5, idx5, 2) == 1);

  // gates at vertex 0: {1}, {2}, {1,2}, {3} -> shatters {1,2}
  Graph g(8, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}, {1, 6}, {2, 6}, {3, 7}});
  auto idx = build_index(g, 2);
  CHECK(vc_dimension(g, idx, 2) == 2);
  CHECK(vc_dimension(g, idx, 2, 1) == 1);
  CHECK(vc_dimension(g, idx, 2, 0) == 0);
}
