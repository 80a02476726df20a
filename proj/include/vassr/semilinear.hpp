#pragma once

// Algebra of linear, bounded-sumset, hybrid, and arithmetic sets with
// exact membership, bounded enumeration, the 1-D decomposition of linear
// sets into arithmetic progressions, and B-approximation certificates.

#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "vassr/basics.hpp"

namespace vassr {

namespace detail {

// Canonical period list: lexicographically sorted, duplicates and zero
// vectors removed.
inline std::vector<IntVec> canonical_periods(std::vector<IntVec> p) {
  std::sort(p.begin(), p.end(), lex_less);
  p.erase(std::unique(p.begin(), p.end()), p.end());
  p.erase(std::remove_if(p.begin(), p.end(),
                         [](const IntVec& v) { return is_zero_vec(v); }),
          p.end());
  return p;
}

}  // namespace detail

// a + P*: base plus all nonnegative integer combinations of the periods.
struct LinearSet {
  IntVec base;
  std::vector<IntVec> periods;

  LinearSet(IntVec a, std::vector<IntVec> p)
      : base(std::move(a)), periods(detail::canonical_periods(std::move(p))) {}
};

// a + P^{<=B}: at most B period occurrences in total.
struct BoundedLinearSet {
  IntVec base;
  std::vector<IntVec> periods;
  Int budget;

  BoundedLinearSet(IntVec a, std::vector<IntVec> p, Int b)
      : base(std::move(a)),
        periods(detail::canonical_periods(std::move(p))),
        budget(std::move(b)) {
    if (budget < 0) throw std::invalid_argument("BoundedLinearSet: B < 0");
  }
};

// a + P^{x·c<=T} + Q*: periods P carry strictly positive costs c, their
// total cost is capped by T (possibly infinite); periods Q are free.
struct HybridSet {
  IntVec base;
  std::vector<IntVec> bounded_periods;  // P, aligned with costs
  IntVec costs;                         // strictly positive, |P| entries
  ExtNat cap;                           // T
  std::vector<IntVec> free_periods;     // Q

  HybridSet(IntVec a, std::vector<IntVec> p, IntVec c, ExtNat t,
            std::vector<IntVec> q)
      : base(std::move(a)),
        bounded_periods(std::move(p)),
        costs(std::move(c)),
        cap(std::move(t)),
        free_periods(detail::canonical_periods(std::move(q))) {
    if (bounded_periods.size() != costs.size())
      throw std::invalid_argument("HybridSet: cost vector length mismatch");
    for (const Int& ci : costs)
      if (ci <= 0) throw std::invalid_argument("HybridSet: nonpositive cost");
  }
};

// a + r^{<=T} = { a, a+r, ..., a+T·r } (or unbounded when T = infinity).
struct ArithmeticSet {
  Int start;
  Int difference;
  ExtNat cap;

  ArithmeticSet(Int a, Int r, ExtNat t)
      : start(std::move(a)), difference(std::move(r)), cap(std::move(t)) {
    if (start < 0 || difference < 0)
      throw std::invalid_argument("ArithmeticSet: negative parameter");
  }

  bool contains(const Int& x) const {
    if (x < start) return false;
    if (difference == 0) return x == start;
    Int delta = x - start;
    if (delta % difference != 0) return false;
    Int k = delta / difference;
    return ExtNat(k) <= cap;
  }
};

// ---------------------------------------------------------------------------
// Membership
// ---------------------------------------------------------------------------

namespace detail {

inline bool in_pstar(const std::vector<IntVec>& periods, const IntVec& y,
                     std::map<IntVec, bool>& memo) {
  if (is_zero_vec(y)) return true;
  auto it = memo.find(y);
  if (it != memo.end()) return it->second;
  bool ok = false;
  for (const IntVec& p : periods) {
    if (leq_vec(p, y) && in_pstar(periods, sub_vec(y, p), memo)) {
      ok = true;
      break;
    }
  }
  memo[y] = ok;
  return ok;
}

inline bool in_bounded_sumset(const std::vector<IntVec>& periods,
                              const IntVec& y, const Int& budget,
                              std::map<std::pair<IntVec, Int>, bool>& memo) {
  if (is_zero_vec(y)) return true;
  if (budget <= 0) return false;
  auto key = std::make_pair(y, budget);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  bool ok = false;
  for (const IntVec& p : periods) {
    if (leq_vec(p, y) &&
        in_bounded_sumset(periods, sub_vec(y, p), budget - 1, memo)) {
      ok = true;
      break;
    }
  }
  memo[key] = ok;
  return ok;
}

}  // namespace detail

inline bool member(const LinearSet& s, const IntVec& x) {
  if (x.size() != s.base.size())
    throw std::invalid_argument("member: dimension mismatch");
  if (!leq_vec(s.base, x)) return false;
  std::map<IntVec, bool> memo;
  return detail::in_pstar(s.periods, sub_vec(x, s.base), memo);
}

inline bool member(const BoundedLinearSet& s, const IntVec& x) {
  if (x.size() != s.base.size())
    throw std::invalid_argument("member: dimension mismatch");
  if (!leq_vec(s.base, x)) return false;
  std::map<std::pair<IntVec, Int>, bool> memo;
  return detail::in_bounded_sumset(s.periods, sub_vec(x, s.base), s.budget,
                                   memo);
}

inline bool member(const HybridSet& s, const IntVec& x) {
  if (x.size() != s.base.size())
    throw std::invalid_argument("member: dimension mismatch");
  if (!leq_vec(s.base, x)) return false;
  // Enumerate P-combinations within the cost cap (costs are strictly
  // positive, so the recursion depth is bounded by T and by the target),
  // then close with Q*.
  IntVec target = sub_vec(x, s.base);
  std::set<std::pair<IntVec, Int>> seen;
  std::function<bool(const IntVec&, const Int&)> search =
      [&](const IntVec& y, const Int& cost_left) -> bool {
    if (!seen.insert({y, cost_left}).second) return false;
    std::map<IntVec, bool> memo;
    if (detail::in_pstar(s.free_periods, y, memo)) return true;
    for (std::size_t i = 0; i < s.bounded_periods.size(); ++i) {
      const IntVec& p = s.bounded_periods[i];
      if (!leq_vec(p, y)) continue;
      if (s.costs[i] > cost_left) continue;
      if (search(sub_vec(y, p), cost_left - s.costs[i])) return true;
    }
    return false;
  };
  Int cost_cap;
  if (s.cap.is_finite()) {
    cost_cap = s.cap.value();
  } else {
    // Any sufficient cap works: each nonzero period use consumes at least
    // one unit of the target's norm, so at most norm(target) uses occur,
    // each costing at most max(c).
    Int max_cost = 1;
    for (const Int& ci : s.costs) max_cost = std::max(max_cost, ci);
    cost_cap = max_cost * norm1(target) + 1;
  }
  return search(target, cost_cap);
}

// ---------------------------------------------------------------------------
// Bounded enumeration
// ---------------------------------------------------------------------------

inline std::set<IntVec> enumerate_up_to(const LinearSet& s,
                                        const Int& norm_cap) {
  std::set<IntVec> out;
  if (norm1(s.base) > norm_cap) return out;
  std::vector<IntVec> frontier{s.base};
  out.insert(s.base);
  while (!frontier.empty()) {
    std::vector<IntVec> next;
    for (const IntVec& v : frontier) {
      for (const IntVec& p : s.periods) {
        IntVec w = add_vec(v, p);
        if (norm1(w) <= norm_cap && out.insert(w).second)
          next.push_back(std::move(w));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

inline std::set<IntVec> enumerate_up_to(const BoundedLinearSet& s,
                                        const Int& norm_cap) {
  std::set<IntVec> out;
  if (norm1(s.base) > norm_cap) return out;
  std::set<std::pair<IntVec, Int>> seen;
  std::vector<std::pair<IntVec, Int>> frontier{{s.base, s.budget}};
  seen.insert(frontier.front());
  out.insert(s.base);
  while (!frontier.empty()) {
    std::vector<std::pair<IntVec, Int>> next;
    for (const auto& [v, left] : frontier) {
      if (left <= 0) continue;
      for (const IntVec& p : s.periods) {
        IntVec w = add_vec(v, p);
        if (norm1(w) > norm_cap) continue;
        auto key = std::make_pair(w, Int(left - 1));
        if (seen.insert(key).second) {
          out.insert(w);
          next.push_back(std::move(key));
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

inline std::set<IntVec> enumerate_up_to(const HybridSet& s,
                                        const Int& norm_cap) {
  std::set<IntVec> out;
  if (norm1(s.base) > norm_cap) return out;
  // Track the minimal spent cost per vector; expansion by free periods
  // keeps cost, bounded periods add their cost.
  std::map<IntVec, Int> best_cost;
  std::vector<IntVec> frontier{s.base};
  best_cost[s.base] = 0;
  auto cost_ok = [&](const Int& c) {
    return !s.cap.is_finite() || c <= s.cap.value();
  };
  while (!frontier.empty()) {
    std::vector<IntVec> next;
    for (const IntVec& v : frontier) {
      Int c = best_cost[v];
      auto push = [&](IntVec w, Int wc) {
        if (norm1(w) > norm_cap || !cost_ok(wc)) return;
        auto it = best_cost.find(w);
        if (it == best_cost.end() || wc < it->second) {
          best_cost[w] = wc;
          next.push_back(std::move(w));
        }
      };
      for (const IntVec& q : s.free_periods) push(add_vec(v, q), c);
      for (std::size_t i = 0; i < s.bounded_periods.size(); ++i)
        push(add_vec(v, s.bounded_periods[i]), c + s.costs[i]);
    }
    frontier = std::move(next);
  }
  for (const auto& [v, c] : best_cost) out.insert(v);
  return out;
}

inline std::set<Int> enumerate_up_to(const ArithmeticSet& s,
                                     const Int& value_cap) {
  std::set<Int> out;
  Int x = s.start;
  Int k = 0;
  while (x <= value_cap && ExtNat(k) <= s.cap) {
    out.insert(x);
    if (s.difference == 0) break;
    x += s.difference;
    k += 1;
  }
  return out;
}

// ---------------------------------------------------------------------------
// 1-D decomposition (linear set of naturals into arithmetic progressions)
// ---------------------------------------------------------------------------

// a + B* with B a finite set of positive naturals bounded by b = max(B)
// equals a finite union of progressions c + d* with c <= a + b^3 and
// d = b.  Empty B is the singleton {a} by convention.
inline std::vector<ArithmeticSet> decompose_1dim(const Int& a,
                                                 const std::set<Int>& B) {
  if (a < 0) throw std::invalid_argument("decompose_1dim: negative base");
  for (const Int& x : B)
    if (x < 1) throw std::invalid_argument("decompose_1dim: period < 1");
  if (B.empty()) return {ArithmeticSet(a, 0, ExtNat(Int(0)))};
  Int b = *B.rbegin();
  Int bound = b * b * b;
  // Coin-problem DP for membership of a + B* over offsets 0..bound.
  std::vector<bool> reachable(bound.get_ui() + 1, false);
  reachable[0] = true;
  for (unsigned long off = 0; off <= bound.get_ui(); ++off) {
    if (!reachable[off]) continue;
    for (const Int& p : B) {
      unsigned long np = off + p.get_ui();
      if (np <= bound.get_ui()) reachable[np] = true;
    }
  }
  std::vector<ArithmeticSet> out;
  std::set<Int> starts_taken;
  for (unsigned long off = 0; off <= bound.get_ui(); ++off) {
    if (!reachable[off]) continue;
    Int c = a + Int(off);
    // Skip starts already covered by an earlier progression of the same
    // difference: c - b taken implies c + b* is a subset.
    if (starts_taken.count(c - b)) {
      starts_taken.insert(c);
      continue;
    }
    starts_taken.insert(c);
    out.emplace_back(c, b, ExtNat::infinity());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Approximation certificates
// ---------------------------------------------------------------------------

enum class ApproxKind { WholeLinear, BApproximation };

struct ApproxCertificate {
  ApproxKind kind;
  LinearSet set;
  Int A;
  Int B;

  // Norm-side validity of the certificate parameters.
  bool norms_valid() const {
    Int pn = 0;
    for (const IntVec& p : set.periods) pn = std::max(pn, norm1(p));
    if (kind == ApproxKind::WholeLinear)
      return norm1(set.base) <= B * A && pn <= A;
    return norm1(set.base) <= A && pn <= A;
  }
};

struct SandwichResult {
  bool holds = false;
  bool cap_meaningful = true;  // false: a + P^{<=B} has no member in the ball
};

// Verifies a + P^{<=B} (subset of) S (subset of) a + P* restricted to
// vectors of norm <= norm_cap, with S given as a membership predicate.
inline SandwichResult check_sandwich(
    const ApproxCertificate& cert,
    const std::function<bool(const IntVec&)>& reach_predicate,
    const Int& norm_cap) {
  SandwichResult res;
  BoundedLinearSet lower(cert.set.base, cert.set.periods, cert.B);
  std::set<IntVec> lower_members = enumerate_up_to(lower, norm_cap);
  if (lower_members.empty()) res.cap_meaningful = false;
  for (const IntVec& x : lower_members) {
    if (!reach_predicate(x)) {
      res.holds = false;
      return res;
    }
  }
  // Upper inclusion: every predicate member in the ball lies in a + P*.
  // Enumerate the nonnegative ball (dimension <= 3 at desk scale).
  std::size_t d = cert.set.base.size();
  std::vector<IntVec> ball;
  IntVec cur = zero_vec(d);
  std::function<void(std::size_t, Int)> walk = [&](std::size_t i, Int left) {
    if (i == d) {
      ball.push_back(cur);
      return;
    }
    for (Int v = 0; v <= left; ++v) {
      cur[i] = v;
      walk(i + 1, left - v);
    }
    cur[i] = 0;
  };
  walk(0, norm_cap);
  for (const IntVec& x : ball) {
    if (reach_predicate(x) && !member(cert.set, x)) {
      res.holds = false;
      return res;
    }
  }
  res.holds = true;
  return res;
}

}  // namespace vassr
