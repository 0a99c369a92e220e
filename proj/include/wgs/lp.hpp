#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "wgs/distance_index.hpp"
#include "wgs/graph.hpp"
#include "wgs/orientation.hpp"
#include "wgs/rational.hpp"
#include "wgs/verify.hpp"

namespace wgs {

// The fractional-guidance linear program:
//   minimize c
//     sum_v p(u,v) <= c                        for every vertex u
//     sum_{y in gate(u,v)} p(u,y)
//       + sum_{y in gate(v,u)} p(v,y) >= 1     for every pair at distance 2..r
//     p >= 0
struct LpProblem {
  int n = 0;
  int r = 0;
  std::vector<std::pair<int, int>> var_pairs;  // variable i is the ordered pair
  std::vector<int> var_offset;                 // first variable of each vertex, size n+1

  struct CoverRow {
    int u, v, dist;
    std::vector<int> u_vars;  // p(u,y) for y in gate(u,v)
    std::vector<int> v_vars;  // p(v,y) for y in gate(v,u)
  };
  std::vector<CoverRow> cover_rows;

  int num_pair_vars() const { return static_cast<int>(var_pairs.size()); }
  int var_of(int u, int v) const;  // -1 when (u,v) is not an ordered adjacent pair

  std::unordered_map<uint64_t, int> var_index;
};

struct SolverStallError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class LpStatus { optimal, infeasible_degenerate };

struct LpSolution {
  FractionalOrientation p;
  double c = 0;
  std::vector<DualEntry> dual_y;
  LpStatus status = LpStatus::optimal;
  double primal_residual = 0;  // worst constraint violation of the returned p
  double dual_gap = 0;         // |c - sum(dual_y)|
  int64_t iterations = 0;
};

struct LpSolutionExact {
  std::vector<std::tuple<int, int, Rational>> p_entries;
  Rational c;
  std::vector<DualEntryExact> dual_y;
  LpStatus status = LpStatus::optimal;
};

LpProblem build_guidance_lp(const Graph& g, const DistanceIndex& idx, int r);

// Deterministic simplex solve. The engine pivots on whichever of the primal
// and dual formulations has fewer rows (the dual needs no phase 1); both
// yield the optimal p, the optimum c, and the dual pair weights.
LpSolution solve(const LpProblem& prob, double tol = 1e-8);

// exact rational re-solve, intended for small instances (< 2000 variables)
LpSolutionExact solve_exact(const LpProblem& prob);

struct FractionalGuidance {
  FractionalOrientation p;
  double c = 0;
  DualCertificate dual;
};

FractionalGuidance fractional_guidance(const Graph& g, int r, double tol = 1e-8);

// human-readable LP text format, for cross-checking with external solvers
std::string dump_lp(const LpProblem& prob);

}  // namespace wgs
