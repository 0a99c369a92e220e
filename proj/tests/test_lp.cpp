#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "helpers.hpp"
#include "wgs/generators.hpp"
#include "wgs/lp.hpp"
#include "wgs/simplex.hpp"
#include "wgs/verify.hpp"

using namespace wgs;

TEST_CASE("dense simplex engine on hand solvable programs") {
  SUBCASE("bounded maximization via negated costs") {
    // min -x - y, x + y <= 4, x <= 2, y <= 3
    std::vector<LpRow<double>> rows(3);
    rows[0].coeffs = {{0, 1.0}, {1, 1.0}};
    rows[0].rhs = 4;
    rows[1].coeffs = {{0, 1.0}};
    rows[1].rhs = 2;
    rows[2].coeffs = {{1, 1.0}};
    rows[2].rhs = 3;
    DenseSimplex<double> engine(2, {-1.0, -1.0}, rows);
    auto res = engine.solve();
    REQUIRE(res.status == SolveStatus::optimal);
    CHECK(res.objective == doctest::Approx(-4.0));
    CHECK(res.x[0] + res.x[1] == doctest::Approx(4.0));
  }
  SUBCASE("ge and eq rows need phase one") {
    // min 2x + y, x + y >= 3, x - y = 1  ->  x = 2, y = 1
    std::vector<LpRow<double>> rows(2);
    rows[0].coeffs = {{0, 1.0}, {1, 1.0}};
    rows[0].sense = RowSense::ge;
    rows[0].rhs = 3;
    rows[1].coeffs = {{0, 1.0}, {1, -1.0}};
    rows[1].sense = RowSense::eq;
    rows[1].rhs = 1;
    DenseSimplex<double> engine(2, {2.0, 1.0}, rows);
    auto res = engine.solve();
    REQUIRE(res.status == SolveStatus::optimal);
    CHECK(res.objective == doctest::Approx(5.0));
    CHECK(res.x[0] == doctest::Approx(2.0));
    CHECK(res.x[1] == doctest::Approx(1.0));
  }
  SUBCASE("infeasible") {
    std::vector<LpRow<double>> rows(2);
    rows[0].coeffs = {{0, 1.0}};
    rows[0].rhs = 1;  // x <= 1
    rows[1].coeffs = {{0, 1.0}};
    rows[1].sense = RowSense::ge;
    rows[1].rhs = 2;  // x >= 2
    DenseSimplex<double> engine(1, {1.0}, rows);
    CHECK(engine.solve().status == SolveStatus::infeasible);
  }
  SUBCASE("unbounded") {
    std::vector<LpRow<double>> rows(1);
    rows[0].coeffs = {{0, 1.0}};
    rows[0].sense = RowSense::ge;
    rows[0].rhs = 1;
    DenseSimplex<double> engine(1, {-1.0}, rows);
    CHECK(engine.solve().status == SolveStatus::unbounded);
  }
  SUBCASE("duals of a le system") {
    // min -3x - 2y, x + y <= 4, x <= 2: optimum x=2,y=2, duals -2 and -1
    std::vector<LpRow<double>> rows(2);
    rows[0].coeffs = {{0, 1.0}, {1, 1.0}};
    rows[0].rhs = 4;
    rows[1].coeffs = {{0, 1.0}};
    rows[1].rhs = 2;
    DenseSimplex<double> engine(2, {-3.0, -2.0}, rows);
    auto res = engine.solve();
    REQUIRE(res.status == SolveStatus::optimal);
    CHECK(res.row_dual[0] == doctest::Approx(-2.0));
    CHECK(res.row_dual[1] == doctest::Approx(-1.0));
  }
  SUBCASE("exact rational arithmetic") {
    // min x, 3x >= 1
    std::vector<LpRow<Rational>> rows(1);
    rows[0].coeffs = {{0, Rational(3)}};
    rows[0].sense = RowSense::ge;
    rows[0].rhs = Rational(1);
    DenseSimplex<Rational> engine(1, {Rational(1)}, rows);
    auto res = engine.solve();
    REQUIRE(res.status == SolveStatus::optimal);
    CHECK(res.objective == Rational(1, 3));
  }
}

TEST_CASE("guidance LP shapes") {
  Graph p3 = path_graph(3);
  auto idx3 = build_index(p3, 2);
  auto prob = build_guidance_lp(p3, idx3, 2);
  CHECK(prob.num_pair_vars() == 4);
  CHECK(prob.cover_rows.size() == 1);
  CHECK(prob.n == 3);

  Graph k3 = cycle_graph(3);
  auto idxk = build_index(k3, 2);
  CHECK(build_guidance_lp(k3, idxk, 2).cover_rows.empty());

  Graph c5 = cycle_graph(5);
  auto idxc = build_index(c5, 2);
  auto probc = build_guidance_lp(c5, idxc, 2);
  CHECK(probc.num_pair_vars() == 10);
  CHECK(probc.cover_rows.size() == 5);

  auto text = dump_lp(probc);
  CHECK(text.find("Minimize") != std::string::npos);
  CHECK(text.find("cov_0_2") != std::string::npos);
}

TEST_CASE("guidance LP optima on the classics") {
  SUBCASE("P3, r=2") {
    Graph g = path_graph(3);
    auto idx = build_index(g, 2);
    auto sol = solve(build_guidance_lp(g, idx, 2));
    CHECK(sol.status == LpStatus::optimal);
    CHECK(sol.c == doctest::Approx(0.5).epsilon(1e-8));
    CHECK(sol.p.weight(0, 1) == doctest::Approx(0.5));
    CHECK(sol.p.weight(2, 1) == doctest::Approx(0.5));
  }
  SUBCASE("P4, r=3") {
    Graph g = path_graph(4);
    auto idx = build_index(g, 3);
    auto sol = solve(build_guidance_lp(g, idx, 3));
    CHECK(sol.c == doctest::Approx(0.5).epsilon(1e-8));
  }
  SUBCASE("C5, r=2") {
    Graph g = cycle_graph(5);
    auto idx = build_index(g, 2);
    auto sol = solve(build_guidance_lp(g, idx, 2));
    CHECK(sol.c == doctest::Approx(1.0).epsilon(1e-8));
  }
  SUBCASE("K3 degenerates to zero") {
    Graph g = cycle_graph(3);
    auto idx = build_index(g, 2);
    auto sol = solve(build_guidance_lp(g, idx, 2));
    CHECK(sol.status == LpStatus::infeasible_degenerate);
    CHECK(sol.c == 0.0);
    CHECK(max_outdegree(sol.p) == 0.0);
  }
}

TEST_CASE("exact rational solve") {
  Graph p3 = path_graph(3);
  auto idx3 = build_index(p3, 2);
  auto sol3 = solve_exact(build_guidance_lp(p3, idx3, 2));
  CHECK(sol3.c == Rational(1, 2));

  Graph c5 = cycle_graph(5);
  auto idxc = build_index(c5, 2);
  auto solc = solve_exact(build_guidance_lp(c5, idxc, 2));
  CHECK(solc.c == Rational(1));

  Graph p4 = path_graph(4);
  auto idx4 = build_index(p4, 3);
  auto sol4 = solve_exact(build_guidance_lp(p4, idx4, 3));
  CHECK(sol4.c == Rational(1, 2));
}

TEST_CASE("LP solutions are feasible, dual-matched, and below brute force") {
  Rng rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    Graph g = random_graph(8, 0.35, rng.next());
    int r = 2 + static_cast<int>(trial % 2);
    auto idx = build_index(g, r);
    auto prob = build_guidance_lp(g, idx, r);
    auto sol = solve(prob);
    if (sol.status == LpStatus::infeasible_degenerate) continue;
    CHECK(sol.primal_residual <= 1e-7);
    CHECK(sol.dual_gap <= 1e-7);  // strong duality within 10x the solve tolerance
    CHECK(verify_fractional(g, idx, sol.p, r, 1e-7).valid);
    CHECK(max_outdegree(sol.p) <= sol.c + 1e-7);
    auto cert = evaluate_dual(g, idx, r, sol.dual_y);
    CHECK(std::abs(cert.value - sol.c) <= 1e-7);

    auto bf = brute_force_optimum(g, idx, r, 8);
    REQUIRE(!bf.exceeds_cap);
    CHECK(sol.c <= bf.value + 1e-6);
  }
}

TEST_CASE("LP optimum is invariant under vertex relabeling") {
  Rng rng(41);
  Graph g = random_graph(9, 0.4, 2024);
  auto idx = build_index(g, 2);
  double base = solve(build_guidance_lp(g, idx, 2)).c;
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<int> perm(g.n());
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = g.n() - 1; i > 0; --i)
      std::swap(perm[i], perm[rng.next_below(i + 1)]);
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    Graph pg(g.n(), edges);
    auto pidx = build_index(pg, 2);
    CHECK(solve(build_guidance_lp(pg, pidx, 2)).c == doctest::Approx(base).epsilon(1e-7));
  }
}

TEST_CASE("both simplex routings agree") {
  // the engine picks the formulation by tableau size; either way the optimum
  // must match the exact rational solver
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < 6; ++u) {
    for (int v = u + 1; v < 6; ++v) edges.emplace_back(u, v);
  }
  edges.emplace_back(0, 6);  // pendant hanging off a K6
  Graph dense(7, edges);
  auto idxd = build_index(dense, 2);
  auto probd = build_guidance_lp(dense, idxd, 2);
  auto sold = solve(probd);
  auto exactd = solve_exact(probd);
  CHECK(sold.c == doctest::Approx(exactd.c.to_double()).epsilon(1e-8));

  Graph sparse = path_graph(10);
  auto idxs = build_index(sparse, 3);
  auto probs = build_guidance_lp(sparse, idxs, 3);
  auto sols = solve(probs);
  auto exacts = solve_exact(probs);
  CHECK(sols.c == doctest::Approx(exacts.c.to_double()).epsilon(1e-8));

  // the wide split graph exercises the dual-form route
  auto split = projective_split_graph(3);
  auto idxw = build_index(split.graph, 2);
  auto probw = build_guidance_lp(split.graph, idxw, 2);
  auto solw = solve(probw);
  auto exactw = solve_exact(probw);
  CHECK(solw.c == doctest::Approx(exactw.c.to_double()).epsilon(1e-8));
}

TEST_CASE("fractional_guidance composes build and solve") {
  auto [wheel, orient] = universal_vertex_graph(cycle_graph(4));
  auto fg = fractional_guidance(wheel, 2);
  CHECK(fg.c <= 1.0 + 1e-6);
  auto idx = build_index(wheel, 2);
  CHECK(verify_fractional(wheel, idx, fg.p, 2, 1e-7).valid);
  CHECK(fg.dual.value == doctest::Approx(fg.c).epsilon(1e-6));
}
