#pragma once

// 2-VASS / geometrically-2-dimensional machinery: simple linear path
// schemes (SLPS), the reachability-set transformers for prefix, one-turn
// infix, and suffix pieces of a zigzag decomposition, their composition,
// and the dimension-lowering trims for geometrically <= 2-dimensional
// 3-VASS.
//
// The one-turn transformer works from the minimal solution (w, p) of the
// exponent equation n1*x1 - n2*x2 = v1 - u1 - eff1(alpha1 alpha2): feasible
// exponent pairs form the chain w + k*p over a contiguous interval of k
// (lower end fixed by first-coordinate drops, upper end a floor-linear
// function of the source ordinate), and the image of an arithmetic input
// set is projected exactly through a small Diophantine system.

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "vassr/basics.hpp"
#include "vassr/cone.hpp"
#include "vassr/diophantine.hpp"
#include "vassr/semilinear.hpp"
#include "vassr/transform.hpp"
#include "vassr/vass.hpp"

namespace vassr {

// Alternating scheme alpha_0 beta_1 alpha_1 ... beta_k alpha_k over
// 2-vectors: fixed segments alpha_i, single-transition loops beta_i.
struct Slps {
  std::vector<std::vector<IntVec>> segments;  // k+1 entries
  std::vector<IntVec> loops;                  // k entries

  Slps(std::vector<std::vector<IntVec>> segs, std::vector<IntVec> lps)
      : segments(std::move(segs)), loops(std::move(lps)) {
    if (segments.size() != loops.size() + 1)
      throw std::invalid_argument("Slps: alternation shape");
    for (const auto& seg : segments)
      for (const IntVec& e : seg)
        if (e.size() != 2) throw std::invalid_argument("Slps: not 2-d");
    for (const IntVec& e : loops)
      if (e.size() != 2) throw std::invalid_argument("Slps: not 2-d");
  }

  static Slps empty() { return Slps({{}}, {}); }
  std::size_t loop_count() const { return loops.size(); }
};

// alpha1 beta1* alpha2 beta2* with eff(beta1) in N+ x (-N+) and
// eff(beta2) in (-N+) x N+.
struct OneTurnSlps {
  std::vector<IntVec> alpha1;
  IntVec beta1;
  std::vector<IntVec> alpha2;
  IntVec beta2;

  OneTurnSlps(std::vector<IntVec> a1, IntVec b1, std::vector<IntVec> a2,
              IntVec b2)
      : alpha1(std::move(a1)),
        beta1(std::move(b1)),
        alpha2(std::move(a2)),
        beta2(std::move(b2)) {
    if (beta1.size() != 2 || beta2.size() != 2)
      throw std::invalid_argument("OneTurnSlps: not 2-d");
    for (const IntVec& e : alpha1)
      if (e.size() != 2) throw std::invalid_argument("OneTurnSlps: not 2-d");
    for (const IntVec& e : alpha2)
      if (e.size() != 2) throw std::invalid_argument("OneTurnSlps: not 2-d");
    if (!(beta1[0] > 0 && beta1[1] < 0 && beta2[0] < 0 && beta2[1] > 0))
      throw std::invalid_argument("OneTurnSlps: quadrant conditions");
  }
};

namespace detail {

inline IntVec seq_effect(const std::vector<IntVec>& seq) {
  IntVec e = zero_vec(2);
  for (const IntVec& v : seq) e = add_vec(e, v);
  return e;
}

// drop_j(seq) = max over all prefixes (including empty and full) of
// -eff_j(prefix); always >= 0.  A start point x admits the whole segment
// iff x >= drop componentwise.
inline IntVec seq_drop(const std::vector<IntVec>& seq) {
  IntVec eff = zero_vec(2), drop = zero_vec(2);
  for (const IntVec& v : seq) {
    eff = add_vec(eff, v);
    for (std::size_t j = 0; j < 2; ++j)
      drop[j] = std::max(drop[j], Int(-eff[j]));
  }
  return drop;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Brute-force SLPS reachability (test oracle)
// ---------------------------------------------------------------------------

// All endpoints of valid VASS executions of the scheme from s with every
// loop count <= loop_cap.  Exact within the cap.
inline std::set<IntVec> slps_enumerate(const Slps& l, const IntVec& s,
                                       unsigned long loop_cap) {
  std::set<IntVec> cur{s};
  auto run_segment = [&](const std::vector<IntVec>& seg,
                         std::set<IntVec>& pts) {
    std::set<IntVec> out;
    for (const IntVec& x : pts) {
      IntVec y = x;
      bool ok = true;
      for (const IntVec& e : seg) {
        y = add_vec(y, e);
        if (!all_nonneg(y)) {
          ok = false;
          break;
        }
      }
      if (ok) out.insert(std::move(y));
    }
    pts = std::move(out);
  };
  run_segment(l.segments[0], cur);
  for (std::size_t i = 0; i < l.loops.size(); ++i) {
    std::set<IntVec> out;
    for (const IntVec& x : cur) {
      IntVec y = x;
      out.insert(y);
      for (unsigned long n = 1; n <= loop_cap; ++n) {
        y = add_vec(y, l.loops[i]);
        if (!all_nonneg(y)) break;
        out.insert(y);
      }
    }
    cur = std::move(out);
    run_segment(l.segments[i + 1], cur);
  }
  return cur;
}

// ---------------------------------------------------------------------------
// Prefix transformer
// ---------------------------------------------------------------------------

// { u2 : (u1, u2) in Reach(lambda, s) } as arithmetic sets.  The loop
// counts n_i and the final ordinate are unknowns of one Diophantine
// system (segment-drop feasibility as inequalities); the solution set's
// projection to the ordinate is decomposed into progressions.
inline std::vector<ArithmeticSet> prefix_lines(const Slps& l, const IntVec& s,
                                               const Int& u1) {
  if (l.loop_count() > 3)
    throw std::invalid_argument("prefix_lines: scheme not short");
  if (u1 < 0) throw std::invalid_argument("prefix_lines: u1 < 0");
  std::size_t k = l.loop_count();
  // Gate: s must admit segment 0.
  IntVec drop0 = detail::seq_drop(l.segments[0]);
  if (!(leq_vec(drop0, s))) return {};
  // Variables: n_1..n_k, z (= final ordinate).
  std::size_t nv = k + 1;
  SystemBuilder sb(nv);
  // Accumulated fixed effects.
  IntVec acc = add_vec(s, detail::seq_effect(l.segments[0]));
  // Row coefficient vectors per coordinate as loops accumulate.
  for (std::size_t i = 1; i <= k; ++i) {
    // Position before segment i: acc + sum_{l<=i} n_l * loop_l.
    IntVec drop = detail::seq_drop(l.segments[i]);
    for (std::size_t j = 0; j < 2; ++j) {
      IntVec coeffs(nv, Int(0));
      for (std::size_t lix = 0; lix < i; ++lix)
        coeffs[lix] = l.loops[lix][j];
      sb.add_geq(std::move(coeffs), drop[j] - acc[j]);
    }
    acc = add_vec(acc, detail::seq_effect(l.segments[i]));
  }
  // Final point: coordinate 1 equals u1, coordinate 2 equals z.
  {
    IntVec coeffs(nv, Int(0));
    for (std::size_t lix = 0; lix < k; ++lix) coeffs[lix] = l.loops[lix][0];
    sb.add_equality(std::move(coeffs), u1 - acc[0]);
  }
  {
    IntVec coeffs(nv, Int(0));
    for (std::size_t lix = 0; lix < k; ++lix) coeffs[lix] = l.loops[lix][1];
    coeffs[k] = -1;
    sb.add_equality(std::move(coeffs), -acc[1]);
  }
  if (sb.trivially_infeasible()) return {};
  SolutionSetDescription desc = minimal_solutions(sb.build());
  std::vector<ArithmeticSet> out;
  std::set<Int> period_vals;
  for (const IntVec& p : desc.hilbert_basis)
    if (p[k] > 0) period_vals.insert(p[k]);
  std::set<std::pair<Int, Int>> seen;  // (start, diff) dedupe
  for (const IntVec& u : desc.minimal_inhomogeneous) {
    for (const ArithmeticSet& a : decompose_1dim(u[k], period_vals)) {
      if (seen.insert({a.start, a.difference}).second) out.push_back(a);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// One-turn transformer
// ---------------------------------------------------------------------------

namespace detail {

struct OneTurnCore {
  bool solvable = false;  // eq (xy) has nonnegative solutions
  bool gate_ok = false;   // u1 admits alpha1's first-coordinate drops
  Int w1, w2, p1, p2;     // minimal solution and period of eq (xy)
  Int E0;                 // v2 - c at the minimal solution
  Int ebar;               // ordinate step per chain index k
  Int k_lo;               // lower interval end (source-independent)
  Int A, Q;               // upper end: k <= floor((c + A) / Q)
  Int c_gate;             // source ordinate must be >= c_gate
};

inline OneTurnCore one_turn_core(const OneTurnSlps& l, const Int& u1,
                                 const Int& v1) {
  OneTurnCore core;
  Int x1 = l.beta1[0], y1 = -l.beta1[1];
  Int x2 = -l.beta2[0], y2 = l.beta2[1];
  IntVec d1 = seq_drop(l.alpha1), d2 = seq_drop(l.alpha2);
  IntVec e1 = seq_effect(l.alpha1), e2 = seq_effect(l.alpha2);
  core.c_gate = d1[1];
  core.gate_ok = (u1 >= d1[0]);
  // n1*x1 - n2*x2 = rhs0.
  Int rhs0 = v1 - u1 - e1[0] - e2[0];
  Int g = gcd_int(x1, x2);
  if (rhs0 % g != 0) return core;  // no integer solutions
  // Smallest n1 >= max(0, ceil(rhs0/x1)) with n1*x1 == rhs0 (mod x2).
  Int x2g = x2 / g;
  Int inv;
  if (x2g == 1) {
    inv = 0;
  } else if (mpz_invert(inv.get_mpz_t(), Int(x1 / g).get_mpz_t(),
                        x2g.get_mpz_t()) == 0) {
    return core;  // cannot happen: x1/g and x2/g are coprime
  }
  Int r0 = ((rhs0 / g) % x2g * inv) % x2g;
  if (r0 < 0) r0 += x2g;
  Int n1_min = r0;
  Int need = ceil_div(std::max(Int(0), rhs0), x1);
  if (n1_min < need) n1_min += ceil_div(need - n1_min, x2g) * x2g;
  core.w1 = n1_min;
  core.w2 = (n1_min * x1 - rhs0) / x2;
  core.p1 = x2g;
  core.p2 = x1 / g;
  core.solvable = true;
  // Interval of chain indices k (n = w + k*p):
  //  - first-coordinate drops of alpha2 give a source-independent lower
  //    bound on n1;
  //  - second-coordinate feasibility through beta1^n1 and alpha2 gives
  //    n1 <= floor((c + eff2(alpha1) - drop2(alpha2)) / y1).
  Int lo1 = ceil_div(std::max(Int(0), Int(d2[0] - u1 - e1[0])), x1);
  core.k_lo = std::max(Int(0), ceil_div(Int(lo1 - core.w1), core.p1));
  Int K = e1[1] - d2[1];
  core.A = K - y1 * core.w1;
  core.Q = y1 * core.p1;
  core.E0 = e1[1] + e2[1] - core.w1 * y1 + core.w2 * y2;
  core.ebar = -core.p1 * y1 + core.p2 * y2;
  return core;
}

// R(c) for a single source ordinate, as one normalized arithmetic set
// (empty optional when no exponent pair is feasible).
inline std::optional<ArithmeticSet> one_turn_single(const OneTurnCore& core,
                                                    const Int& c) {
  if (!core.solvable || !core.gate_ok || c < core.c_gate) return std::nullopt;
  Int k_hi = floor_div(c + core.A, core.Q);
  if (k_hi < core.k_lo) return std::nullopt;
  Int lo_val = c + core.E0 + core.k_lo * core.ebar;
  Int hi_val = c + core.E0 + k_hi * core.ebar;
  Int count = k_hi - core.k_lo;
  if (core.ebar >= 0)
    return ArithmeticSet(lo_val, core.ebar, ExtNat(count));
  return ArithmeticSet(hi_val, -core.ebar, ExtNat(count));
}

}  // namespace detail

// R(S1) = { v2 : exists u2 in S1 with (u1,u2) ->* (v1,v2) via
// alpha1 beta1^n1 alpha2 beta2^n2 }, exactly, as arithmetic sets.
// Small finite inputs are enumerated ordinate by ordinate; infinite (or
// long) inputs go through an exact Diophantine projection of the
// two-parameter family (source index i, chain index k).
inline std::vector<ArithmeticSet> one_turn_transform(const OneTurnSlps& l,
                                                     const Int& u1,
                                                     const Int& v1,
                                                     const ArithmeticSet& S1) {
  if (u1 < 0 || v1 < 0)
    throw std::invalid_argument("one_turn_transform: negative abscissa");
  detail::OneTurnCore core = detail::one_turn_core(l, u1, v1);
  if (!core.solvable || !core.gate_ok) return {};
  std::vector<ArithmeticSet> out;
  std::set<std::pair<Int, std::pair<Int, std::string>>> seen;
  auto push = [&](const ArithmeticSet& a) {
    auto key = std::make_pair(a.start,
                              std::make_pair(a.difference, a.cap.to_string()));
    if (seen.insert(key).second) out.push_back(a);
  };
  const Int enumerate_cutoff = 64;
  if (S1.difference == 0 || (S1.cap.is_finite() &&
                             S1.cap.value() <= enumerate_cutoff)) {
    Int terms = S1.difference == 0 ? Int(0)
                                   : (S1.cap.is_finite() ? S1.cap.value()
                                                         : Int(0));
    for (Int i = 0; i <= terms; i += 1) {
      auto r = detail::one_turn_single(core, S1.start + i * S1.difference);
      if (r) push(*r);
    }
    return out;
  }
  // General case: values are c0 + i*r + E0 + (k_lo + k')*ebar over
  // naturals i, k' subject to
  //    Q*(k_lo + k') <= c0 + i*r + A          (upper interval end)
  //    c0 + i*r >= c_gate                      (segment-1 ordinate gate)
  //    i <= T                                  (when finite)
  // with the value itself kept as an explicit unknown z >= 0; the
  // solution set's z-projection is decomposed into progressions.
  Int r = S1.difference, c0 = S1.start;
  // Align c0 upward to the gate to keep constants small.
  if (c0 < core.c_gate) {
    Int skip = ceil_div(core.c_gate - c0, r);
    if (S1.cap.is_finite() && skip > S1.cap.value()) return out;
    c0 += skip * r;
    // Remaining term count shrinks accordingly.
    if (S1.cap.is_finite()) {
      ArithmeticSet rest(c0, r, ExtNat(S1.cap.value() - skip));
      return one_turn_transform(l, u1, v1, rest);
    }
  }
  std::size_t nv = 3;  // i, k', z
  SystemBuilder sb(nv);
  // z = c0 + i*r + E0 + (k_lo + k')*ebar.
  sb.add_equality(IntVec{r, core.ebar, Int(-1)},
                  -(c0 + core.E0 + core.k_lo * core.ebar));
  // i*r - Q*k' >= Q*k_lo - c0 - A.
  sb.add_geq(IntVec{r, -core.Q, Int(0)}, core.Q * core.k_lo - c0 - core.A);
  if (S1.cap.is_finite()) sb.add_geq(IntVec{Int(-1), Int(0), Int(0)},
                                     -S1.cap.value());
  if (sb.trivially_infeasible()) return out;
  SolutionSetDescription desc = minimal_solutions(sb.build(), 2, 8000000);
  std::set<Int> period_vals;
  for (const IntVec& p : desc.hilbert_basis)
    if (p[2] > 0) period_vals.insert(p[2]);
  for (const IntVec& u : desc.minimal_inhomogeneous)
    for (const ArithmeticSet& a : decompose_1dim(u[2], period_vals)) push(a);
  return out;
}

// ---------------------------------------------------------------------------
// Suffix transformer
// ---------------------------------------------------------------------------

// Reach(lambda, u + p^{<= T}) as hybrid sets: the source index m along the
// input line and the loop counts are unknowns of one system; periods of
// the solution set split into free ones (m-component zero) and
// cost-carrying ones (cost = m-component), capped by T - m(base).
inline std::vector<HybridSet> suffix_hybrid(const Slps& l, const IntVec& u,
                                            const IntVec& p, const ExtNat& T) {
  if (l.loop_count() > 3)
    throw std::invalid_argument("suffix_hybrid: scheme not short");
  std::size_t k = l.loop_count();
  // Variables: m, n_1..n_k, z1, z2.
  std::size_t nv = 1 + k + 2;
  SystemBuilder sb(nv);
  // Segment-0 gate: u + m*p >= drop(segment 0).
  IntVec drop0 = detail::seq_drop(l.segments[0]);
  for (std::size_t j = 0; j < 2; ++j) {
    IntVec coeffs(nv, Int(0));
    coeffs[0] = p[j];
    sb.add_geq(std::move(coeffs), drop0[j] - u[j]);
  }
  IntVec acc = add_vec(u, detail::seq_effect(l.segments[0]));
  for (std::size_t i = 1; i <= k; ++i) {
    IntVec drop = detail::seq_drop(l.segments[i]);
    for (std::size_t j = 0; j < 2; ++j) {
      IntVec coeffs(nv, Int(0));
      coeffs[0] = p[j];
      for (std::size_t lix = 0; lix < i; ++lix)
        coeffs[1 + lix] = l.loops[lix][j];
      sb.add_geq(std::move(coeffs), drop[j] - acc[j]);
    }
    acc = add_vec(acc, detail::seq_effect(l.segments[i]));
  }
  for (std::size_t j = 0; j < 2; ++j) {
    IntVec coeffs(nv, Int(0));
    coeffs[0] = p[j];
    for (std::size_t lix = 0; lix < k; ++lix)
      coeffs[1 + lix] = l.loops[lix][j];
    coeffs[1 + k + j] = -1;
    sb.add_equality(std::move(coeffs), -acc[j]);
  }
  if (sb.trivially_infeasible()) return {};
  SolutionSetDescription desc = minimal_solutions(sb.build());
  std::vector<HybridSet> out;
  for (const IntVec& sol : desc.minimal_inhomogeneous) {
    const Int& m_base = sol[0];
    if (T.is_finite() && m_base > T.value()) continue;
    ExtNat cap = T.is_finite() ? ExtNat(T.value() - m_base) : ExtNat::infinity();
    std::vector<IntVec> bounded, free_p;
    IntVec costs;
    for (const IntVec& per : desc.hilbert_basis) {
      IntVec proj{per[1 + k], per[2 + k]};
      if (per[0] == 0) {
        free_p.push_back(std::move(proj));
      } else {
        bounded.push_back(std::move(proj));
        costs.push_back(per[0]);
      }
    }
    out.emplace_back(IntVec{sol[1 + k], sol[2 + k]}, std::move(bounded),
                     std::move(costs), cap, std::move(free_p));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Zigzag composition
// ---------------------------------------------------------------------------

struct ZigzagDecomposition {
  Slps lambda1;                        // short prefix (<= 3 loops)
  std::vector<OneTurnSlps> lambda2;    // zigzagging middle, paired loops
  Slps lambda3;                        // short suffix (<= 3 loops)
  Int B;                               // closeness bound for midpoints
  Int b;                               // abscissa after lambda1
  Int b_prime;                         // abscissa after lambda2
};

struct InvalidDecomposition : std::runtime_error {
  explicit InvalidDecomposition(const std::string& m) : std::runtime_error(m) {}
};

// Chains prefix_lines -> one one_turn_transform per loop pair (unioned
// over all B-close intermediate abscissae) -> suffix_hybrid.
inline std::vector<HybridSet> compose_zigzag(const ZigzagDecomposition& d,
                                             const IntVec& s) {
  if (d.lambda1.loop_count() > 3 || d.lambda3.loop_count() > 3)
    throw InvalidDecomposition("lambda1/lambda3 must be short");
  if (d.b < 0 || d.b > d.B || d.b_prime < 0 || d.b_prime > d.B)
    throw InvalidDecomposition("midpoint abscissae out of [0,B]");
  if (d.lambda2.empty() && d.b != d.b_prime)
    throw InvalidDecomposition("empty middle requires b == b'");
  std::map<Int, std::vector<ArithmeticSet>> lines;
  lines[d.b] = prefix_lines(d.lambda1, s, d.b);
  for (std::size_t pair = 0; pair < d.lambda2.size(); ++pair) {
    bool last = (pair + 1 == d.lambda2.size());
    std::map<Int, std::vector<ArithmeticSet>> next;
    for (const auto& [u1, sets] : lines) {
      for (const ArithmeticSet& a : sets) {
        for (Int v1 = 0; v1 <= d.B; v1 += 1) {
          if (last && v1 != d.b_prime) continue;
          std::vector<ArithmeticSet> img =
              one_turn_transform(d.lambda2[pair], u1, v1, a);
          auto& dst = next[v1];
          dst.insert(dst.end(), img.begin(), img.end());
        }
      }
    }
    // Deduplicate per abscissa.
    for (auto& [v1, sets] : next) {
      std::set<std::pair<Int, std::pair<Int, std::string>>> seen;
      std::vector<ArithmeticSet> ded;
      for (const ArithmeticSet& a : sets) {
        auto key = std::make_pair(
            a.start, std::make_pair(a.difference, a.cap.to_string()));
        if (seen.insert(key).second) ded.push_back(a);
      }
      sets = std::move(ded);
    }
    lines = std::move(next);
  }
  std::vector<HybridSet> out;
  auto it = lines.find(d.b_prime);
  if (it == lines.end()) return out;
  for (const ArithmeticSet& a : it->second) {
    std::vector<HybridSet> part = suffix_hybrid(
        d.lambda3, IntVec{d.b_prime, a.start}, IntVec{Int(0), a.difference},
        a.cap);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Trims for geometrically <= 2-dimensional 3-VASS
// ---------------------------------------------------------------------------

struct NotGeom2 : std::runtime_error {
  NotGeom2() : std::runtime_error("geometric dimension exceeds 2") {}
};

struct TrimGeom2Result {
  ProductVass product;
  IntVec normal;      // a with <a, cycle> = 0 for every simple cycle
  bool dropped;       // true: dim-2 output (coordinate folded away)
  std::size_t coord;  // folded coordinate when dropped
};

// An integer normal orthogonal to every simple-cycle effect.
inline IntVec orthogonal_cycle_normal(const Vass& v) {
  std::vector<IntVec> eff = simple_cycle_effects(v);
  if (rank_of(eff) >= 3) throw NotGeom2();
  return orthogonal_complement_normal(eff);
}

// Lowers a geometrically <= 2-dimensional 3-VASS: if the orthogonal
// normal has uniform sign, some coordinate with nonzero normal entry is
// bounded along every path and folds into the state (dim-2 output);
// otherwise the inner product <a,x> is tracked in the state (dim-3
// output, still geometrically <= 2).  C bounds the tracked value.
inline TrimGeom2Result trim_geom2(const Vass& v, const Configuration& s,
                                  const Configuration& t, const Int& C) {
  if (v.dimension() != 3)
    throw std::invalid_argument("trim_geom2: dimension must be 3");
  IntVec a = orthogonal_cycle_normal(v);
  bool nonneg = all_nonneg(a);
  bool nonpos = all_nonneg(neg_vec(a));
  if (nonneg || nonpos) {
    IntVec apos = nonneg ? a : neg_vec(a);
    std::size_t j = 0;
    while (j < 3 && apos[j] == 0) ++j;
    ProductVass prod = fold_coordinate_drop(v, j, C, s, t);
    return TrimGeom2Result{std::move(prod), a, true, j};
  }
  ProductVass prod = trim_inner_product(v, a, C, s, t);
  return TrimGeom2Result{std::move(prod), a, false, 0};
}

}  // namespace vassr
