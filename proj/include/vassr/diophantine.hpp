#pragma once

// Exact solving of linear Diophantine systems A·x = b over nonnegative
// integers: the complete set U of pointwise-minimal solutions, the Hilbert
// basis P of the homogeneous system, and membership in U + P*.
//
// The solver is a completion-style breadth-first search (Contejean–Devie):
// frontier nodes grow from the unit vectors, a node branches on variable i
// only when the defect inner product <A·x, A·e_i> is negative, nodes
// dominating an already-found minimal solution are pruned, and everything
// is capped by the explicit norm bound (constant·n·N)^m.

#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "vassr/basics.hpp"

namespace vassr {

struct DiophantineSystem {
  std::vector<IntVec> matrix;  // m rows of length n
  IntVec rhs;                  // length m

  std::size_t rows() const { return matrix.size(); }
  std::size_t cols() const { return matrix.empty() ? 0 : matrix.front().size(); }

  Int max_coefficient() const {
    Int m = 1;
    for (const IntVec& row : matrix)
      for (const Int& a : row) m = std::max(m, abs_int(a));
    for (const Int& b : rhs) m = std::max(m, abs_int(b));
    return m;
  }
};

struct SolutionSetDescription {
  std::vector<IntVec> minimal_inhomogeneous;  // U
  std::vector<IntVec> hilbert_basis;          // P
};

struct DiophBudgetExceeded : std::runtime_error {
  DiophBudgetExceeded()
      : std::runtime_error("Diophantine completion node cap exceeded") {}
};

// The explicit norm cap standing in for the O(nN)^m minimal-solution bound:
// (constant·n·N)^m.
inline Int taming_bound(const Int& n, const Int& N, const Int& m,
                        const Int& constant = 2) {
  if (m < 0 || !m.fits_ulong_p())
    throw std::invalid_argument("taming_bound: bad exponent");
  return int_pow(constant * n * N, m.get_ui());
}

namespace detail {

inline IntVec apply_matrix(const std::vector<IntVec>& rows, const IntVec& x) {
  IntVec y(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) y[i] = dot(rows[i], x);
  return y;
}

}  // namespace detail

// Hilbert basis of A·y = 0 over nonnegative integers by Contejean–Devie
// completion, pruned at `norm_cap` (minimal solutions never exceed the
// taming bound, so pruning there is lossless) and at `node_cap` nodes.
inline std::vector<IntVec> hilbert_basis_homogeneous(
    const std::vector<IntVec>& rows, const Int& norm_cap,
    std::size_t node_cap = 2000000) {
  std::size_t n = rows.empty() ? 0 : rows.front().size();
  std::vector<IntVec> basis;
  if (n == 0) return basis;
  // Column images A·e_i, reused in the branching condition.
  std::vector<IntVec> col(n);
  for (std::size_t i = 0; i < n; ++i) {
    IntVec e = zero_vec(n);
    e[i] = 1;
    col[i] = detail::apply_matrix(rows, e);
  }
  std::set<IntVec> frontier;
  for (std::size_t i = 0; i < n; ++i) {
    IntVec e = zero_vec(n);
    e[i] = 1;
    frontier.insert(std::move(e));
  }
  std::size_t nodes = 0;
  auto dominated = [&](const IntVec& x) {
    for (const IntVec& b : basis)
      if (leq_vec(b, x)) return true;
    return false;
  };
  while (!frontier.empty()) {
    // One breadth level = one extra unit of norm; solutions surface in
    // nondecreasing norm order, so domination checks against the basis so
    // far decide minimality exactly.
    std::set<IntVec> next;
    std::vector<IntVec> level_solutions;
    for (const IntVec& x : frontier) {
      if (++nodes > node_cap) throw DiophBudgetExceeded();
      IntVec defect = detail::apply_matrix(rows, x);
      if (is_zero_vec(defect)) {
        if (!dominated(x)) level_solutions.push_back(x);
        continue;
      }
      if (dominated(x)) continue;
      if (norm1(x) >= norm_cap) continue;
      for (std::size_t i = 0; i < n; ++i) {
        if (dot(defect, col[i]) < 0) {
          IntVec child = x;
          child[i] += 1;
          next.insert(std::move(child));
        }
      }
    }
    for (IntVec& s : level_solutions) basis.push_back(std::move(s));
    frontier = std::move(next);
  }
  std::sort(basis.begin(), basis.end(), lex_less);
  return basis;
}

// Complete minimal-solution description of A·x = b: the inhomogeneous
// system is embedded as the homogeneous system [A | -b]·(x,z) = 0; basis
// elements with z = 1 are exactly the minimal solutions of A·x = b, those
// with z = 0 the Hilbert basis of A·x = 0.
inline SolutionSetDescription minimal_solutions(
    const DiophantineSystem& sys, const Int& taming_constant = 2,
    std::size_t node_cap = 2000000) {
  std::size_t m = sys.rows(), n = sys.cols();
  std::vector<IntVec> ext(m);
  for (std::size_t i = 0; i < m; ++i) {
    ext[i] = sys.matrix[i];
    ext[i].push_back(-sys.rhs[i]);
  }
  Int cap = taming_bound(Int(n + 1), sys.max_coefficient(), Int(m),
                         taming_constant);
  std::vector<IntVec> basis = hilbert_basis_homogeneous(ext, cap, node_cap);
  SolutionSetDescription out;
  for (const IntVec& y : basis) {
    IntVec x(y.begin(), y.end() - 1);
    if (y.back() == 0)
      out.hilbert_basis.push_back(std::move(x));
    else if (y.back() == 1)
      out.minimal_inhomogeneous.push_back(std::move(x));
    // z >= 2 elements are extended-system artifacts; irrelevant here.
  }
  return out;
}

// Decides x in U + P* by recursive descent with memoization.
inline bool membership_in_solution_set(const SolutionSetDescription& desc,
                                       const IntVec& x) {
  std::map<IntVec, bool> memo;
  std::function<bool(const IntVec&)> in_pstar = [&](const IntVec& y) -> bool {
    if (is_zero_vec(y)) return true;
    auto it = memo.find(y);
    if (it != memo.end()) return it->second;
    bool ok = false;
    for (const IntVec& p : desc.hilbert_basis) {
      if (!is_zero_vec(p) && leq_vec(p, y) && in_pstar(sub_vec(y, p))) {
        ok = true;
        break;
      }
    }
    memo[y] = ok;
    return ok;
  };
  for (const IntVec& u : desc.minimal_inhomogeneous)
    if (leq_vec(u, x) && in_pstar(sub_vec(x, u))) return true;
  return false;
}

// ---------------------------------------------------------------------------
// System builder with inequality rows (slack variables)
// ---------------------------------------------------------------------------

// Builds A·x = b systems from equality and >=-inequality rows over a fixed
// set of named nonnegative unknowns.  Inequalities a·x >= b become
// a·x - s = b with a fresh slack unknown s, matching the usual dummy-variable
// conversion.  Rows whose coefficients are all zero are resolved immediately.
class SystemBuilder {
 public:
  explicit SystemBuilder(std::size_t num_vars) : num_vars_(num_vars) {}

  // coeffs has length num_vars (slack added internally).
  void add_equality(IntVec coeffs, Int rhs) {
    add_row(std::move(coeffs), std::move(rhs), false);
  }
  void add_geq(IntVec coeffs, Int rhs) {
    add_row(std::move(coeffs), std::move(rhs), true);
  }

  bool trivially_infeasible() const { return infeasible_; }
  std::size_t num_vars() const { return num_vars_; }
  std::size_t num_slacks() const { return slack_rows_; }

  // Assembled system over num_vars + num_slacks unknowns (slacks trailing).
  DiophantineSystem build() const {
    DiophantineSystem sys;
    std::size_t total = num_vars_ + slack_rows_;
    std::size_t slack_seen = 0;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      IntVec row = rows_[r];
      row.resize(total, Int(0));
      if (is_geq_[r]) row[num_vars_ + slack_seen++] = -1;
      sys.matrix.push_back(std::move(row));
      sys.rhs.push_back(rhs_[r]);
    }
    if (sys.matrix.empty()) {
      // Degenerate but well-formed: one vacuous equation 0 = 0.
      sys.matrix.push_back(zero_vec(total == 0 ? 1 : total));
      sys.rhs.push_back(0);
    }
    return sys;
  }

 private:
  void add_row(IntVec coeffs, Int rhs, bool geq) {
    if (coeffs.size() != num_vars_)
      throw std::invalid_argument("SystemBuilder: row width mismatch");
    bool all_zero = is_zero_vec(coeffs);
    if (all_zero) {
      // Constant row: decide now instead of burdening the search.
      if (geq ? (Int(0) < rhs) : (rhs != 0)) infeasible_ = true;
      return;
    }
    rows_.push_back(std::move(coeffs));
    rhs_.push_back(std::move(rhs));
    is_geq_.push_back(geq);
    if (geq) ++slack_rows_;
  }

  std::size_t num_vars_;
  std::size_t slack_rows_ = 0;
  bool infeasible_ = false;
  std::vector<IntVec> rows_;
  IntVec rhs_;
  std::vector<bool> is_geq_;
};

}  // namespace vassr
