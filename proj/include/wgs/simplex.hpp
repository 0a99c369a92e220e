#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "wgs/kernels.hpp"
#include "wgs/rational.hpp"

namespace wgs {

enum class RowSense { le, ge, eq };

template <class Num>
struct LpRow {
  std::vector<std::pair<int, Num>> coeffs;  // (variable, coefficient)
  RowSense sense = RowSense::le;
  Num rhs{0};
};

enum class SolveStatus { optimal, infeasible, unbounded, iteration_limit };

template <class Num>
struct DenseSolveResult {
  SolveStatus status = SolveStatus::optimal;
  Num objective{0};
  std::vector<Num> x;         // one value per structural variable
  std::vector<Num> row_dual;  // one multiplier per input row
  int64_t iterations = 0;
};

struct SimplexOptions {
  double tol = 1e-9;
  int64_t max_iterations = 500000;
  // Partial pricing block size (double mode). Pivot updates cost O(rows*cols)
  // while pricing costs O(window), so a generous window that usually covers
  // the whole column range converges in far fewer iterations.
  int pricing_window = 8192;
  int64_t stall_limit = 4000;  // degenerate pivots before switching to Bland's rule
  // Iterations without any objective improvement before giving up with
  // iteration_limit; callers can then retry on a different formulation.
  // Ignored in exact mode, where Bland's rule terminates unconditionally.
  int64_t no_progress_limit = 30000;
};

// Dense-tableau two-phase primal simplex, minimizing c^T x over x >= 0 subject
// to the given rows. Deterministic: partial pricing with a fixed window and
// smallest-index tie-breaking, falling back to Bland's rule after a stall so
// cycling cannot occur. The Rational instantiation runs Bland's rule from the
// start with exact arithmetic.
template <class Num>
class DenseSimplex {
 public:
  DenseSimplex(int num_vars, std::vector<Num> costs, std::vector<LpRow<Num>> rows,
               SimplexOptions opts = {})
      : nv_(num_vars), costs_(std::move(costs)), rows_(std::move(rows)), opts_(opts) {
    if (static_cast<int>(costs_.size()) != nv_)
      throw std::invalid_argument("simplex: cost vector size mismatch");
  }

  DenseSolveResult<Num> solve() {
    build_tableau();
    DenseSolveResult<Num> out;
    if (num_artificial_ > 0) {
      set_phase_costs(true);
      SolveStatus st = iterate(true);
      if (st == SolveStatus::iteration_limit) {
        out.status = st;
        out.iterations = iterations_;
        return out;
      }
      if (is_positive(objective_)) {
        out.status = SolveStatus::infeasible;
        out.iterations = iterations_;
        return out;
      }
      expel_basic_artificials();
    }
    set_phase_costs(false);
    SolveStatus st = iterate(false);
    out.status = st;
    out.iterations = iterations_;
    if (st != SolveStatus::optimal) return out;
    out.objective = objective_;
    out.x.assign(nv_, Num{0});
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < nv_) out.x[basis_[i]] = rhs(i);
    }
    out.row_dual.resize(m_);
    for (int i = 0; i < m_; ++i) {
      // reduced cost of the row's initial identity column j is c_j - pi_i
      // with c_j = 0 in phase 2
      out.row_dual[i] = -redcost_[identity_col_[i]];
    }
    return out;
  }

 private:
  int nv_;
  std::vector<Num> costs_;
  std::vector<LpRow<Num>> rows_;
  SimplexOptions opts_;

  int m_ = 0;
  int ncols_ = 0;  // structural + slack/surplus + artificial
  int stride_ = 0;
  std::vector<Num> tab_;      // m_ rows of (ncols_ + 1), last column is rhs
  std::vector<Num> redcost_;  // ncols_ entries
  Num objective_{0};
  std::vector<int> basis_;
  std::vector<int> identity_col_;
  std::vector<bool> is_artificial_;
  std::vector<Num> phase_costs_;
  int num_artificial_ = 0;
  int64_t iterations_ = 0;
  int64_t stalled_ = 0;
  bool bland_ = exact();
  int price_start_ = 0;

  static constexpr bool exact() { return !std::is_same_v<Num, double>; }

  Num* row(int i) { return tab_.data() + static_cast<size_t>(i) * stride_; }
  Num& rhs(int i) { return row(i)[ncols_]; }

  bool is_positive(const Num& v) const {
    if constexpr (exact()) return v.sign() > 0;
    else return v > opts_.tol;
  }
  bool is_negative(const Num& v) const {
    if constexpr (exact()) return v.sign() < 0;
    else return v < -opts_.tol;
  }
  bool nonzero_pivot(const Num& v) const {
    if constexpr (exact()) return v.sign() != 0;
    else return std::abs(v) > opts_.tol;
  }

  void build_tableau() {
    m_ = static_cast<int>(rows_.size());
    // normalize rhs >= 0
    for (auto& r : rows_) {
      bool neg;
      if constexpr (exact()) neg = r.rhs.sign() < 0;
      else neg = r.rhs < 0;
      if (neg) {
        for (auto& [j, a] : r.coeffs) a = -a;
        r.rhs = -r.rhs;
        r.sense = r.sense == RowSense::le   ? RowSense::ge
                  : r.sense == RowSense::ge ? RowSense::le
                                            : RowSense::eq;
      }
    }
    int extra = 0;
    for (const auto& r : rows_) {
      extra += r.sense == RowSense::ge ? 2 : 1;  // surplus+artificial or slack/artificial
    }
    ncols_ = nv_ + extra;
    stride_ = ncols_ + 1;
    tab_.assign(static_cast<size_t>(m_) * stride_, Num{0});
    basis_.assign(m_, -1);
    identity_col_.assign(m_, -1);
    is_artificial_.assign(ncols_, false);
    int next = nv_;
    for (int i = 0; i < m_; ++i) {
      Num* t = row(i);
      for (const auto& [j, a] : rows_[i].coeffs) {
        if (j < 0 || j >= nv_) throw std::invalid_argument("simplex: bad column index");
        t[j] += a;
      }
      t[ncols_] = rows_[i].rhs;
      switch (rows_[i].sense) {
        case RowSense::le:
          t[next] = Num{1};
          basis_[i] = next;
          identity_col_[i] = next;
          ++next;
          break;
        case RowSense::ge:
          t[next] = Num{-1};
          ++next;
          t[next] = Num{1};
          is_artificial_[next] = true;
          basis_[i] = next;
          identity_col_[i] = next;
          ++num_artificial_;
          ++next;
          break;
        case RowSense::eq:
          t[next] = Num{1};
          is_artificial_[next] = true;
          basis_[i] = next;
          identity_col_[i] = next;
          ++num_artificial_;
          ++next;
          break;
      }
    }
  }

  void set_phase_costs(bool phase1) {
    phase_costs_.assign(ncols_, Num{0});
    if (phase1) {
      for (int j = 0; j < ncols_; ++j) {
        if (is_artificial_[j]) phase_costs_[j] = Num{1};
      }
    } else {
      for (int j = 0; j < nv_; ++j) phase_costs_[j] = costs_[j];
    }
    // reduced costs r_j = c_j - c_B^T B^-1 A_j over the current tableau
    redcost_ = phase_costs_;
    objective_ = Num{0};
    for (int i = 0; i < m_; ++i) {
      const Num& cb = phase_costs_[basis_[i]];
      bool skip;
      if constexpr (exact()) skip = cb.sign() == 0;
      else skip = cb == 0.0;
      if (skip) continue;
      Num* t = row(i);
      if constexpr (!exact()) {
        kern::active().axpy(redcost_.data(), t, -cb, ncols_);
      } else {
        for (int j = 0; j < ncols_; ++j) redcost_[j] -= cb * t[j];
      }
      objective_ += cb * t[ncols_];
    }
  }

  int price() {
    // Bland: smallest admissible index; artificials never re-enter
    if (bland_) {
      for (int j = 0; j < ncols_; ++j) {
        if (is_artificial_[j]) continue;
        if (is_negative(redcost_[j])) return j;
      }
      return -1;
    }
    // partial pricing: scan fixed-size windows cyclically from price_start_,
    // take the most negative entry in the first window that has one
    int window = std::max(1, opts_.pricing_window);
    int scanned = 0;
    int j0 = price_start_ % ncols_;
    while (scanned < ncols_) {
      int best = -1;
      Num best_val{0};
      for (int k = 0; k < window && scanned < ncols_; ++k, ++scanned) {
        int j = (j0 + scanned) % ncols_;
        if (is_artificial_[j]) continue;
        if (is_negative(redcost_[j]) && (best < 0 || redcost_[j] < best_val)) {
          best = j;
          best_val = redcost_[j];
        }
      }
      if (best >= 0) {
        price_start_ = best + 1;
        return best;
      }
    }
    return -1;
  }

  SolveStatus iterate(bool) {
    int64_t no_progress = 0;
    while (true) {
      if (iterations_ >= opts_.max_iterations) return SolveStatus::iteration_limit;
      int col = price();
      if (col < 0) return SolveStatus::optimal;
      int prow = ratio_test(col);
      if (prow < 0) return SolveStatus::unbounded;
      Num old_obj = objective_;
      pivot(prow, col);
      ++iterations_;
      if constexpr (!exact()) {
        if (objective_ < old_obj - opts_.tol) {
          stalled_ = 0;
          no_progress = 0;
        } else {
          if (!bland_ && ++stalled_ >= opts_.stall_limit) {
            bland_ = true;  // anti-cycling fallback
          }
          if (++no_progress >= opts_.no_progress_limit)
            return SolveStatus::iteration_limit;
        }
      }
    }
  }

  int ratio_test(int col) {
    // a basic artificial with a nonzero pivot entry leaves first; its basic
    // value is zero, so pivoting there keeps feasibility regardless of sign
    for (int i = 0; i < m_; ++i) {
      if (is_artificial_[basis_[i]] && nonzero_pivot(row(i)[col])) {
        bool zero_val;
        if constexpr (exact()) zero_val = rhs(i).sign() == 0;
        else zero_val = std::abs(rhs(i)) <= opts_.tol;
        if (zero_val) return i;
      }
    }
    int best = -1;
    Num best_num{0}, best_den{1};
    for (int i = 0; i < m_; ++i) {
      const Num& a = row(i)[col];
      if (!is_positive(a)) continue;
      const Num& b = rhs(i);
      if (best < 0) {
        best = i;
        best_num = b;
        best_den = a;
        continue;
      }
      // compare b/a against best_num/best_den without dividing; on ties the
      // smallest basis index leaves (Bland-compatible)
      Num lhs = b * best_den;
      Num rhs_v = best_num * a;
      bool smaller, tie;
      if constexpr (exact()) {
        smaller = lhs < rhs_v;
        tie = lhs == rhs_v;
      } else {
        smaller = lhs < rhs_v - opts_.tol;
        tie = std::abs(lhs - rhs_v) <= opts_.tol;
      }
      if (smaller || (tie && basis_[i] < basis_[best])) {
        best = i;
        best_num = b;
        best_den = a;
      }
    }
    return best;
  }

  void pivot(int prow, int col) {
    Num* p = row(prow);
    Num inv;
    if constexpr (exact()) inv = Num{1} / p[col];
    else inv = 1.0 / p[col];
    if constexpr (!exact()) {
      kern::active().scale(p, inv, stride_);
      p[col] = 1.0;
      for (int i = 0; i < m_; ++i) {
        if (i == prow) continue;
        Num f = row(i)[col];
        if (f == 0.0) continue;
        kern::active().axpy(row(i), p, -f, stride_);
        row(i)[col] = 0.0;
      }
      double f = redcost_[col];
      if (f != 0.0) {
        kern::active().axpy(redcost_.data(), p, -f, ncols_);
        objective_ += f * p[ncols_];  // entering at value rhs/pivot changes z by r_j * theta
        redcost_[col] = 0.0;
      }
    } else {
      for (int j = 0; j < stride_; ++j) p[j] = p[j] * inv;
      for (int i = 0; i < m_; ++i) {
        if (i == prow) continue;
        Num f = row(i)[col];
        if (f.sign() == 0) continue;
        Num* t = row(i);
        for (int j = 0; j < stride_; ++j) t[j] = t[j] - f * p[j];
      }
      Num f = redcost_[col];
      if (f.sign() != 0) {
        for (int j = 0; j < ncols_; ++j) redcost_[j] = redcost_[j] - f * p[j];
        objective_ = objective_ + f * p[ncols_];
      }
    }
    basis_[prow] = col;
  }

  void expel_basic_artificials() {
    for (int i = 0; i < m_; ++i) {
      if (!is_artificial_[basis_[i]]) continue;
      int found = -1;
      for (int j = 0; j < ncols_; ++j) {
        if (is_artificial_[j]) continue;
        if (nonzero_pivot(row(i)[j])) {
          found = j;
          break;
        }
      }
      if (found >= 0) pivot(i, found);
      // otherwise the row is redundant; the artificial stays basic at zero
      // and the ratio test keeps it at zero
    }
  }
};

}  // namespace wgs
