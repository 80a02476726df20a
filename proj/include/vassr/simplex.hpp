#pragma once

// Exact rational linear programming: maximize c·x subject to A·x = b,
// x >= 0, via the two-phase primal simplex method with Bland's rule.
// All pivoting is over arbitrary-precision rationals, so strict-inequality
// decisions (open-cone membership) never suffer boundary errors.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "vassr/basics.hpp"

namespace vassr {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rat objective;        // valid when Optimal
  RatVec solution;      // valid when Optimal (length n)
};

namespace detail {

class Tableau {
 public:
  // A: m x n rational matrix, b: length m with b >= 0 assumed arranged by
  // the caller, basis: initial basic variable per row (columns forming an
  // identity in A).
  Tableau(std::vector<RatVec> a, RatVec b, std::vector<std::size_t> basis)
      : a_(std::move(a)), b_(std::move(b)), basis_(std::move(basis)) {}

  std::size_t rows() const { return a_.size(); }
  std::size_t cols() const { return a_.empty() ? 0 : a_.front().size(); }
  const std::vector<std::size_t>& basis() const { return basis_; }
  const RatVec& rhs() const { return b_; }
  const std::vector<RatVec>& matrix() const { return a_; }

  void pivot(std::size_t row, std::size_t col) {
    Rat p = a_[row][col];
    for (Rat& x : a_[row]) x /= p;
    b_[row] /= p;
    for (std::size_t i = 0; i < rows(); ++i) {
      if (i == row) continue;
      Rat f = a_[i][col];
      if (f == 0) continue;
      for (std::size_t j = 0; j < cols(); ++j) a_[i][j] -= f * a_[row][j];
      b_[i] -= f * b_[row];
    }
    basis_[row] = col;
  }

  // Maximizes objective c over the current basis.  Returns false when
  // unbounded.  Bland's rule on both entering and leaving choices.
  bool maximize(const RatVec& c, Rat& value, RatVec& x) {
    std::size_t m = rows(), n = cols();
    while (true) {
      // Reduced costs: cbar_j = c_j - y·A_j with y from the basis.
      RatVec cb(m);
      for (std::size_t i = 0; i < m; ++i) cb[i] = c[basis_[i]];
      std::size_t enter = n;
      for (std::size_t j = 0; j < n; ++j) {
        Rat cbar = c[j];
        for (std::size_t i = 0; i < m; ++i) cbar -= cb[i] * a_[i][j];
        if (cbar > 0) {
          enter = j;  // Bland: smallest improving index
          break;
        }
      }
      if (enter == n) break;  // optimal
      std::size_t leave = m;
      Rat best_ratio;
      for (std::size_t i = 0; i < m; ++i) {
        if (a_[i][enter] > 0) {
          Rat ratio = b_[i] / a_[i][enter];
          if (leave == m || ratio < best_ratio ||
              (ratio == best_ratio && basis_[i] < basis_[leave])) {
            leave = i;
            best_ratio = ratio;
          }
        }
      }
      if (leave == m) return false;  // unbounded
      pivot(leave, enter);
    }
    x.assign(n, Rat(0));
    value = 0;
    for (std::size_t i = 0; i < m; ++i) {
      x[basis_[i]] = b_[i];
      value += c[basis_[i]] * b_[i];
    }
    return true;
  }

 private:
  std::vector<RatVec> a_;
  RatVec b_;
  std::vector<std::size_t> basis_;
};

}  // namespace detail

// Solves max c·x s.t. A·x = b, x >= 0 exactly.
inline LpResult simplex_solve(std::vector<RatVec> a, RatVec b, RatVec c) {
  std::size_t m = a.size();
  std::size_t n = m == 0 ? c.size() : a.front().size();
  if (c.size() != n) throw std::invalid_argument("simplex: size mismatch");
  if (m == 0) {
    // No constraints: optimum is 0 at x = 0 unless some c_j > 0.
    LpResult r;
    for (const Rat& cj : c)
      if (cj > 0) {
        r.status = LpStatus::Unbounded;
        return r;
      }
    r.status = LpStatus::Optimal;
    r.objective = 0;
    r.solution.assign(n, Rat(0));
    return r;
  }
  // Arrange b >= 0.
  for (std::size_t i = 0; i < m; ++i) {
    if (b[i] < 0) {
      for (Rat& x : a[i]) x = -x;
      b[i] = -b[i];
    }
  }
  // Phase 1: artificial variables, maximize -sum(artificials).
  std::vector<RatVec> a1(m, RatVec(n + m, Rat(0)));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) a1[i][j] = a[i][j];
    a1[i][n + i] = 1;
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;
  detail::Tableau t(std::move(a1), b, basis);
  RatVec c1(n + m, Rat(0));
  for (std::size_t i = 0; i < m; ++i) c1[n + i] = -1;
  Rat v1;
  RatVec x1;
  if (!t.maximize(c1, v1, x1))
    throw std::logic_error("simplex: phase 1 unbounded");
  LpResult res;
  if (v1 != 0) {
    res.status = LpStatus::Infeasible;
    return res;
  }
  // Drive any lingering artificial variables out of the basis (degenerate
  // rows), or recognize the row as redundant.
  std::vector<bool> drop_row(m, false);
  for (std::size_t i = 0; i < m; ++i) {
    if (t.basis()[i] >= n) {
      bool pivoted = false;
      for (std::size_t j = 0; j < n; ++j) {
        if (t.matrix()[i][j] != 0) {
          t.pivot(i, j);
          pivoted = true;
          break;
        }
      }
      if (!pivoted) drop_row[i] = true;  // redundant constraint
    }
  }
  // Rebuild a clean phase-2 tableau without artificial columns and
  // without redundant rows.
  std::vector<RatVec> a2;
  RatVec b2;
  std::vector<std::size_t> basis2;
  for (std::size_t i = 0; i < m; ++i) {
    if (drop_row[i]) continue;
    RatVec row(t.matrix()[i].begin(), t.matrix()[i].begin() + n);
    a2.push_back(std::move(row));
    b2.push_back(t.rhs()[i]);
    basis2.push_back(t.basis()[i]);
  }
  detail::Tableau t2(std::move(a2), std::move(b2), std::move(basis2));
  Rat v2;
  RatVec x2;
  if (!t2.maximize(c, v2, x2)) {
    res.status = LpStatus::Unbounded;
    return res;
  }
  res.status = LpStatus::Optimal;
  res.objective = v2;
  res.solution = std::move(x2);
  return res;
}

// Feasibility of A·x = b, x >= 0.
inline bool lp_feasible(std::vector<RatVec> a, RatVec b) {
  std::size_t n = a.empty() ? 0 : a.front().size();
  LpResult r = simplex_solve(std::move(a), std::move(b), RatVec(n, Rat(0)));
  return r.status == LpStatus::Optimal;
}

}  // namespace vassr
