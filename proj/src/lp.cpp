#include "wgs/lp.hpp"

#include <algorithm>
#include <cmath>

#include "wgs/format.hpp"
#include "wgs/simplex.hpp"

namespace wgs {

namespace {

uint64_t pair_key(int u, int v) {
  return (static_cast<uint64_t>(static_cast<uint32_t>(u)) << 32) | static_cast<uint32_t>(v);
}

}  // namespace

int LpProblem::var_of(int u, int v) const {
  auto it = var_index.find(pair_key(u, v));
  return it == var_index.end() ? -1 : it->second;
}

LpProblem build_guidance_lp(const Graph& g, const DistanceIndex& idx, int r) {
  if (idx.radius() < r) throw std::invalid_argument("build_guidance_lp: index radius < r");
  LpProblem prob;
  prob.n = g.n();
  prob.r = r;
  prob.var_offset.resize(g.n() + 1, 0);
  for (int u = 0; u < g.n(); ++u) {
    prob.var_offset[u] = prob.num_pair_vars();
    for (int v : g.neighbors(u)) {
      prob.var_index.emplace(pair_key(u, v), prob.num_pair_vars());
      prob.var_pairs.emplace_back(u, v);
    }
  }
  prob.var_offset[g.n()] = prob.num_pair_vars();

  for (int u = 0; u < g.n(); ++u) {
    int top = std::min(r, idx.max_level(u));
    for (int l = 2; l <= top; ++l) {
      for (int v : idx.level(u, l)) {
        if (v <= u) continue;
        LpProblem::CoverRow row;
        row.u = u;
        row.v = v;
        row.dist = l;
        for (int y : gate_set(g, idx, u, v)) row.u_vars.push_back(prob.var_of(u, y));
        for (int y : gate_set(g, idx, v, u)) row.v_vars.push_back(prob.var_of(v, y));
        prob.cover_rows.push_back(std::move(row));
      }
    }
  }
  return prob;
}

namespace {

// Primal formulation: variables p_0..p_{np-1}, then c. Rows: one capacity row
// per vertex (<= 0), one covering row per pair (>= 1).
template <class Num>
DenseSolveResult<Num> solve_primal_form(const LpProblem& prob, const SimplexOptions& opts) {
  int np = prob.num_pair_vars();
  int c_var = np;
  std::vector<Num> costs(np + 1, Num{0});
  costs[c_var] = Num{1};
  std::vector<LpRow<Num>> rows;
  rows.reserve(prob.n + prob.cover_rows.size());
  for (int u = 0; u < prob.n; ++u) {
    LpRow<Num> row;
    row.sense = RowSense::le;
    row.rhs = Num{0};
    for (int j = prob.var_offset[u]; j < prob.var_offset[u + 1]; ++j)
      row.coeffs.push_back({j, Num{1}});
    row.coeffs.push_back({c_var, Num{-1}});
    rows.push_back(std::move(row));
  }
  for (const auto& cr : prob.cover_rows) {
    LpRow<Num> row;
    row.sense = RowSense::ge;
    row.rhs = Num{1};
    for (int j : cr.u_vars) row.coeffs.push_back({j, Num{1}});
    for (int j : cr.v_vars) row.coeffs.push_back({j, Num{1}});
    rows.push_back(std::move(row));
  }
  DenseSimplex<Num> engine(np + 1, std::move(costs), std::move(rows), opts);
  return engine.solve();
}

// Dual formulation: variables y per covering row, then x per vertex.
//   maximize sum(y)  ==  minimize -sum(y)
//     sum_{pairs v : z in gate(u,v)} y_uv - x_u <= 0   per ordered pair (u,z)
//     sum_u x_u <= 1
// It is feasible at the slack basis, so no phase-1 is needed.
template <class Num>
DenseSolveResult<Num> solve_dual_form(const LpProblem& prob, const SimplexOptions& opts) {
  int ny = static_cast<int>(prob.cover_rows.size());
  int nv = ny + prob.n;
  std::vector<Num> costs(nv, Num{0});
  for (int i = 0; i < ny; ++i) costs[i] = Num{-1};
  std::vector<LpRow<Num>> rows(prob.num_pair_vars());
  for (int j = 0; j < prob.num_pair_vars(); ++j) {
    rows[j].sense = RowSense::le;
    rows[j].rhs = Num{0};
    rows[j].coeffs.push_back({ny + prob.var_pairs[j].first, Num{-1}});
  }
  for (int i = 0; i < ny; ++i) {
    for (int j : prob.cover_rows[i].u_vars) rows[j].coeffs.push_back({i, Num{1}});
    for (int j : prob.cover_rows[i].v_vars) rows[j].coeffs.push_back({i, Num{1}});
  }
  LpRow<Num> norm;
  norm.sense = RowSense::le;
  norm.rhs = Num{1};
  for (int u = 0; u < prob.n; ++u) norm.coeffs.push_back({ny + u, Num{1}});
  rows.push_back(std::move(norm));
  DenseSimplex<Num> engine(nv, std::move(costs), std::move(rows), opts);
  return engine.solve();
}

template <class Num>
Num clip_nonneg(Num v) {
  if constexpr (std::is_same_v<Num, double>) {
    return v < 0 ? 0.0 : v;
  } else {
    return v.sign() < 0 ? Num{0} : v;
  }
}

template <class Num>
struct GenericSolution {
  std::vector<std::tuple<int, int, Num>> p_entries;
  Num c{0};
  std::vector<std::tuple<int, int, Num>> y_entries;
  int64_t iterations = 0;
};

template <class Num>
GenericSolution<Num> solve_generic(const LpProblem& prob, const SimplexOptions& opts) {
  // Tableau cells of both formulations. The primal form is the default (its
  // covering rows have rhs 1, so pivots make progress); the homogeneous dual
  // form is worth its extreme degeneracy only when it is far smaller, as on
  // dense graphs with many qualifying pairs.
  int64_t np = prob.num_pair_vars();
  int64_t pc = static_cast<int64_t>(prob.cover_rows.size());
  int64_t primal_cells = (prob.n + pc) * (np + 1 + prob.n + 2 * pc);
  int64_t dual_cells = (np + 1) * (pc + prob.n + np + 1);
  GenericSolution<Num> out;
  DenseSolveResult<Num> res;
  bool used_dual_form = dual_cells * 4 < primal_cells;
  if (used_dual_form) {
    res = solve_dual_form<Num>(prob, opts);
  } else {
    res = solve_primal_form<Num>(prob, opts);
  }
  if (res.status == SolveStatus::iteration_limit) {
    // stalled; retry on the other formulation before giving up
    used_dual_form = !used_dual_form;
    res = used_dual_form ? solve_dual_form<Num>(prob, opts)
                         : solve_primal_form<Num>(prob, opts);
  }
  if (res.status == SolveStatus::iteration_limit)
    throw SolverStallError("lp solve: iteration budget exhausted");
  if (res.status != SolveStatus::optimal)
    throw std::logic_error("lp solve: guidance LP must be feasible and bounded");
  out.iterations = res.iterations;
  int ny = static_cast<int>(prob.cover_rows.size());
  if (used_dual_form) {
    out.c = -res.objective;
    for (int i = 0; i < ny; ++i) {
      Num v = clip_nonneg(res.x[i]);
      if (!(v == Num{0}))
        out.y_entries.push_back({prob.cover_rows[i].u, prob.cover_rows[i].v, v});
    }
    for (int j = 0; j < prob.num_pair_vars(); ++j) {
      Num v = clip_nonneg(-res.row_dual[j]);
      if (!(v == Num{0}))
        out.p_entries.push_back(
            {prob.var_pairs[j].first, prob.var_pairs[j].second, v});
    }
  } else {
    out.c = res.objective;
    for (int j = 0; j < prob.num_pair_vars(); ++j) {
      Num v = clip_nonneg(res.x[j]);
      if (!(v == Num{0}))
        out.p_entries.push_back(
            {prob.var_pairs[j].first, prob.var_pairs[j].second, v});
    }
    for (int i = 0; i < ny; ++i) {
      Num v = clip_nonneg(res.row_dual[prob.n + i]);
      if (!(v == Num{0}))
        out.y_entries.push_back({prob.cover_rows[i].u, prob.cover_rows[i].v, v});
    }
  }
  return out;
}

}  // namespace

LpSolution solve(const LpProblem& prob, double tol) {
  if (tol <= 0) throw std::invalid_argument("lp solve: tol must be positive");
  LpSolution sol;
  sol.p = FractionalOrientation(prob.n);
  if (prob.cover_rows.empty()) {
    // no pair at distance 2..r: optimum 0 with empty p
    sol.status = LpStatus::infeasible_degenerate;
    sol.c = 0;
    return sol;
  }
  SimplexOptions opts;
  opts.tol = std::min(1e-9, tol);
  auto gen = solve_generic<double>(prob, opts);
  sol.c = std::max(0.0, gen.c);
  sol.iterations = gen.iterations;
  for (auto [u, v, val] : gen.p_entries) sol.p.set(u, v, val);
  double sum_y = 0;
  for (auto [u, v, val] : gen.y_entries) {
    sol.dual_y.push_back({u, v, val});
    sum_y += val;
  }
  sol.dual_gap = std::abs(sol.c - sum_y);
  // residuals of the returned primal point
  double worst = 0;
  for (int u = 0; u < prob.n; ++u) worst = std::max(worst, sol.p.out_sum(u) - sol.c);
  for (const auto& cr : prob.cover_rows) {
    double mass = 0;
    for (int j : cr.u_vars)
      mass += sol.p.weight(prob.var_pairs[j].first, prob.var_pairs[j].second);
    for (int j : cr.v_vars)
      mass += sol.p.weight(prob.var_pairs[j].first, prob.var_pairs[j].second);
    worst = std::max(worst, 1.0 - mass);
  }
  sol.primal_residual = worst;
  return sol;
}

LpSolutionExact solve_exact(const LpProblem& prob) {
  LpSolutionExact sol;
  if (prob.cover_rows.empty()) {
    sol.status = LpStatus::infeasible_degenerate;
    sol.c = Rational(0);
    return sol;
  }
  SimplexOptions opts;
  opts.max_iterations = 2'000'000;
  auto gen = solve_generic<Rational>(prob, opts);
  sol.c = gen.c;
  sol.p_entries = std::move(gen.p_entries);
  for (auto& [u, v, val] : gen.y_entries) sol.dual_y.push_back({u, v, val});
  return sol;
}

FractionalGuidance fractional_guidance(const Graph& g, int r, double tol) {
  DistanceIndex idx = build_index(g, r);
  LpProblem prob = build_guidance_lp(g, idx, r);
  LpSolution sol = solve(prob, tol);
  FractionalGuidance out;
  out.p = std::move(sol.p);
  out.c = sol.c;
  if (!sol.dual_y.empty()) out.dual = evaluate_dual(g, idx, r, sol.dual_y);
  return out;
}

std::string dump_lp(const LpProblem& prob) {
  std::string s;
  auto pvar = [&](int j) {
    return "p_" + std::to_string(prob.var_pairs[j].first) + "_" +
           std::to_string(prob.var_pairs[j].second);
  };
  s += "Minimize\n obj: c\nSubject To\n";
  for (int u = 0; u < prob.n; ++u) {
    if (prob.var_offset[u] == prob.var_offset[u + 1]) continue;
    s += " cap_" + std::to_string(u) + ":";
    for (int j = prob.var_offset[u]; j < prob.var_offset[u + 1]; ++j) s += " + " + pvar(j);
    s += " - c <= 0\n";
  }
  for (const auto& cr : prob.cover_rows) {
    s += " cov_" + std::to_string(cr.u) + "_" + std::to_string(cr.v) + ":";
    for (int j : cr.u_vars) s += " + " + pvar(j);
    for (int j : cr.v_vars) s += " + " + pvar(j);
    s += " >= 1\n";
  }
  s += "End\n";
  return s;
}

}  // namespace wgs
