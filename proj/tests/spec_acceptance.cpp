// Acceptance gate: ten independent end-to-end checks, one pass/fail line
// each.  Exit status is nonzero when any criterion fails.

#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "test_util.hpp"
#include "vassr/cone.hpp"
#include "vassr/diophantine.hpp"
#include "vassr/io.hpp"
#include "vassr/oracle.hpp"
#include "vassr/reach3.hpp"
#include "vassr/semilinear.hpp"
#include "vassr/slps.hpp"
#include "vassr/vass.hpp"

using namespace vassr;
using testutil::Rng;

namespace {

IntVec iv(std::initializer_list<long> xs) {
  IntVec v;
  for (long x : xs) v.push_back(Int(x));
  return v;
}

// The alternating-loop family: 2k single-state components, loop (-1,2) in
// odd positions and (2,-1) in even ones, zero-effect bridges.
Vass zigzag_family(int k) {
  std::vector<std::string> names;
  for (int i = 1; i <= 2 * k; ++i) names.push_back("q" + std::to_string(i));
  Vass v(2, names);
  for (int i = 0; i < 2 * k; ++i) {
    v.add_transition(i, (i % 2 == 0) ? iv({-1, 2}) : iv({2, -1}), i);
    if (i + 1 < 2 * k) v.add_transition(i, iv({0, 0}), i + 1);
  }
  return v;
}

std::set<IntVec> zigzag_enumeration(int k, const Int& cap) {
  Vass v = zigzag_family(k);
  SearchBudget b;
  b.counter_cap = cap;
  b.length_cap = 100000;
  b.node_cap = 5000000;
  Configuration s{0, iv({1, 0}), Mode::Vass};
  ReachSet rs = reach_set(v, s, b);
  std::set<IntVec> at_last;
  for (const auto& [state, vec] : rs.configurations)
    if (state == 2 * k - 1) at_last.insert(vec);
  return at_last;
}

// --------------------------------------------------------------- criterion 1
// Alternating-loop family: the enumerated set at the last state equals
// { (x1,x2) : x1 + 2 x2 <= 4^k and x1 + 2 x2 = 1 mod 3 } for k = 1,2,3.
bool crit1() {
  for (int k = 1; k <= 3; ++k) {
    Int bound = int_pow(Int(4), (unsigned long)k);
    std::set<IntVec> got = zigzag_enumeration(k, bound + 4);
    std::set<IntVec> want;
    for (Int x1 = 0; x1 <= bound; x1 += 1)
      for (Int x2 = 0; x1 + 2 * x2 <= bound; x2 += 1)
        if ((x1 + 2 * x2) % 3 == 1) want.insert(IntVec{x1, x2});
    if (got != want) return false;
  }
  return true;
}

// --------------------------------------------------------------- criterion 2
// Semi-linear over-approximation of the same sets, plus the lower-inclusion
// certificate for every admissible budget B.
bool crit2() {
  std::vector<LinearSet> approx{
      LinearSet(iv({1, 0}), {iv({0, 3}), iv({3, 0})}),
      LinearSet(iv({2, 1}), {iv({0, 3}), iv({3, 0})}),
      LinearSet(iv({0, 2}), {iv({0, 3}), iv({3, 0})})};
  for (int k = 1; k <= 3; ++k) {
    Int bound = int_pow(Int(4), (unsigned long)k);
    std::set<IntVec> xk = zigzag_enumeration(k, bound + 4);
    for (const IntVec& x : xk) {
      bool covered = false;
      for (const LinearSet& L : approx) covered = covered || member(L, x);
      if (!covered) return false;
    }
    for (Int B = 0; 8 * B <= bound; B += 1) {
      ApproxCertificate cert{ApproxKind::BApproximation, approx.front(),
                             Int(8), B};
      auto pred = [&](const IntVec& x) {
        return xk.count(x) > 0 && member(cert.set, x);
      };
      SandwichResult r = check_sandwich(cert, pred, bound);
      if (!r.holds) return false;
    }
  }
  return true;
}

// --------------------------------------------------------------- criterion 3
// One-turn schemes.  Exact stepwise simulation: the descending first loop
// bounds its exponent by the available ordinate, and the second exponent is
// determined by the abscissa equation, so the brute set is complete.
std::set<Int> brute_one_turn(const std::vector<IntVec>& a1, const IntVec& b1,
                             const std::vector<IntVec>& a2, const IntVec& b2,
                             const Int& u1, const Int& v1, const Int& c) {
  std::set<Int> out;
  IntVec start{u1, c};
  auto run_seg = [](IntVec cur, const std::vector<IntVec>& seg)
      -> std::optional<IntVec> {
    for (const IntVec& e : seg) {
      cur = add_vec(cur, e);
      if (!all_nonneg(cur)) return std::nullopt;
    }
    return cur;
  };
  auto after_a1 = run_seg(start, a1);
  if (!after_a1) return out;
  Int n1_max = (*after_a1)[1] / (-b1[1]);  // b1 ordinate is negative
  for (Int n1 = 0; n1 <= n1_max; n1 += 1) {
    IntVec cur = *after_a1;
    bool ok = true;
    for (Int i = 0; i < n1 && ok; i += 1) {
      cur = add_vec(cur, b1);
      ok = all_nonneg(cur);
    }
    if (!ok) continue;
    auto after_a2 = run_seg(cur, a2);
    if (!after_a2) continue;
    Int need = (*after_a2)[0] - v1;  // n2 * (-b2[0]) must equal this
    Int q = -b2[0];
    if (need < 0 || need % q != 0) continue;
    Int n2 = need / q;
    cur = *after_a2;
    for (Int i = 0; i < n2 && ok; i += 1) {
      cur = add_vec(cur, b2);
      ok = all_nonneg(cur);
    }
    if (ok && cur[0] == v1) out.insert(cur[1]);
  }
  return out;
}

bool crit3() {
  // Pinned example: empty segments, loops (2,-1) and (-3,3), u1=0, v1=1.
  OneTurnSlps pinned({}, iv({2, -1}), {}, iv({-3, 3}));
  auto image = [&](const OneTurnSlps& l, const Int& u1, const Int& v1,
                   const ArithmeticSet& s1, const Int& cap) {
    std::set<Int> vals;
    for (const ArithmeticSet& a : one_turn_transform(l, u1, v1, s1))
      for (const Int& v : enumerate_up_to(a, cap)) vals.insert(v);
    return vals;
  };
  auto single = [](const Int& c) {
    return ArithmeticSet(c, Int(0), ExtNat(Int(0)));
  };
  if (image(pinned, Int(0), Int(1), single(Int(6)), Int(1000)) !=
      std::set<Int>{7, 10})
    return false;
  if (image(pinned, Int(0), Int(1), single(Int(9)), Int(1000)) !=
      std::set<Int>{10, 13, 16})
    return false;

  Rng rng(90210);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<IntVec> a1, a2;
    if (rng.pick(0, 1)) a1.push_back(rng.vec(2, -2, 2));
    if (rng.pick(0, 1)) a2.push_back(rng.vec(2, -2, 2));
    IntVec b1{rng.pick_int(1, 5), -rng.pick_int(1, 5)};
    IntVec b2{-rng.pick_int(1, 5), rng.pick_int(1, 5)};
    OneTurnSlps l(a1, b1, a2, b2);
    Int u1 = rng.pick_int(0, 5), v1 = rng.pick_int(0, 5);
    ArithmeticSet s1(rng.pick_int(0, 5), rng.pick_int(1, 3),
                     ExtNat(rng.pick_int(0, 2)));  // at most 3 terms
    std::set<Int> brute;
    for (Int i = 0; i <= s1.cap.value(); i += 1) {
      std::set<Int> one = brute_one_turn(a1, b1, a2, b2, u1, v1,
                                         s1.start + i * s1.difference);
      brute.insert(one.begin(), one.end());
    }
    Int cap = 1000;
    for (const Int& v : brute) cap = std::max(cap, Int(v + 1000));
    if (image(l, u1, v1, s1, cap) != brute) return false;
  }
  return true;
}

// --------------------------------------------------------------- criterion 4
// Minimal solutions of linear Diophantine systems over the naturals.
// A box of radius R is downward closed, so the minimal solutions inside it
// are exactly the globally minimal solutions inside it.
bool crit4() {
  {
    DiophantineSystem sys;
    sys.matrix = {iv({2, -3})};
    sys.rhs = iv({1});
    SolutionSetDescription d = minimal_solutions(sys);
    if (d.minimal_inhomogeneous != std::vector<IntVec>{iv({2, 1})})
      return false;
    if (d.hilbert_basis != std::vector<IntVec>{iv({3, 2})}) return false;
  }
  Rng rng(19937);
  auto solves = [](const DiophantineSystem& sys, const IntVec& x,
                   bool homogeneous) {
    for (std::size_t r = 0; r < sys.rows(); ++r) {
      Int lhs = dot(sys.matrix[r], x);
      if (lhs != (homogeneous ? Int(0) : sys.rhs[r])) return false;
    }
    return true;
  };
  auto leq = [](const IntVec& a, const IntVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] > b[i]) return false;
    return true;
  };
  const long R = 8;
  int done = 0;
  for (int attempt = 0; attempt < 400 && done < 200; ++attempt) {
    std::size_t n = (std::size_t)rng.pick(1, 4);
    std::size_t m = (std::size_t)rng.pick(1, 3);
    DiophantineSystem sys;
    for (std::size_t r = 0; r < m; ++r) sys.matrix.push_back(rng.vec(n, -5, 5));
    sys.rhs = rng.vec(m, -5, 5);
    SolutionSetDescription d;
    try {
      d = minimal_solutions(sys);
    } catch (const DiophBudgetExceeded&) {
      continue;  // redraw; the cap guards runtime, not correctness
    }
    ++done;
    // Every reported vector solves its system; each family is an antichain.
    for (const IntVec& u : d.minimal_inhomogeneous)
      if (!solves(sys, u, false)) return false;
    for (const IntVec& p : d.hilbert_basis)
      if (is_zero_vec(p) || !solves(sys, p, true)) return false;
    for (const auto& fam : {d.minimal_inhomogeneous, d.hilbert_basis})
      for (std::size_t i = 0; i < fam.size(); ++i)
        for (std::size_t j = 0; j < fam.size(); ++j)
          if (i != j && leq(fam[i], fam[j])) return false;
    // Exhaustive enumeration over the box, both systems.
    for (bool homogeneous : {false, true}) {
      std::vector<IntVec> sols;
      IntVec x = zero_vec(n);
      std::function<void(std::size_t)> walk = [&](std::size_t i) {
        if (i == n) {
          if (solves(sys, x, homogeneous) && !(homogeneous && is_zero_vec(x)))
            sols.push_back(x);
          return;
        }
        for (long v = 0; v <= R; ++v) {
          x[i] = v;
          walk(i + 1);
        }
        x[i] = 0;
      };
      walk(0);
      std::set<IntVec> brute_min;
      for (const IntVec& a : sols) {
        bool minimal = true;
        for (const IntVec& b : sols)
          if (b != a && leq(b, a)) minimal = false;
        if (minimal) brute_min.insert(a);
      }
      std::set<IntVec> got;
      for (const IntVec& u :
           homogeneous ? d.hilbert_basis : d.minimal_inhomogeneous) {
        bool in_box = true;
        for (const Int& c : u) in_box = in_box && c <= R;
        if (in_box) got.insert(u);
      }
      if (got != brute_min) return false;
    }
  }
  return done == 200;
}

// --------------------------------------------------------------- criterion 5
// Level-by-level search budgets: pinned hand values and the closed-form
// ceiling (4Nn)^(2*i!) * U^(i!) across a 50-point parameter grid.
bool crit5() {
  RackoffBudget rb = rackoff_budget(Int(2), Int(1), Int(3), 3);
  if (rb.H[0] != 3 || rb.L[0] != 6 || rb.H[1] != 9 || rb.L[1] != 168)
    return false;
  int points = 0;
  for (long n = 1; n <= 5; ++n)
    for (long N = 1; N <= 2; ++N)
      for (long U = 1; U <= 5; ++U) {
        ++points;
        RackoffBudget g = rackoff_budget(Int(n), Int(N), Int(U), 3);
        for (int i = 0; i < 3; ++i) {
          if (g.H[i] > g.ceiling[i]) return false;
          if (g.L[i] > g.ceiling[i]) return false;
        }
      }
  return points == 50;
}

// --------------------------------------------------------------- criterion 6
// Length-preserving reductions.  Paths of length <= 12 stay within small
// counters, so a wide-enough tracking range makes both constructions
// bijective on them; the per-length path counts must match exactly.
bool crit6() {
  Rng rng(60601);
  SearchBudget cls_budget;
  cls_budget.counter_cap = 32;
  cls_budget.length_cap = 24;
  cls_budget.node_cap = 200000;
  const unsigned long LEN = 12;
  int nonwide_done = 0, nondiag_done = 0;
  for (int attempt = 0; attempt < 6000 &&
                        (nonwide_done < 30 || nondiag_done < 30);
       ++attempt) {
    int states = (int)rng.pick(1, 4);
    std::vector<std::string> names;
    for (int i = 0; i < states; ++i) names.push_back("q" + std::to_string(i));
    Vass v(3, names);
    // A Hamiltonian cycle keeps the graph one strongly connected component.
    for (int i = 0; i < states; ++i)
      v.add_transition(i, rng.vec(3, -3, 3), (i + 1) % states);
    long extra = rng.pick(0, 3);
    for (long e = 0; e < extra; ++e)
      v.add_transition((int)rng.pick(0, states - 1), rng.vec(3, -3, 3),
                       (int)rng.pick(0, states - 1));
    auto dd = sequential_decompose(v);
    if (!std::holds_alternative<SequentialDecomposition>(dd)) continue;
    const auto& d = std::get<SequentialDecomposition>(dd);
    Configuration s{0, rng.vec(3, 0, 3), Mode::Vass};
    Configuration t{(int)rng.pick(0, states - 1), rng.vec(3, 0, 3),
                    Mode::Vass};
    if (rng.pick(0, 1)) {
      Configuration cur = s;
      long hops = rng.pick(0, 8);
      for (long h = 0; h < hops; ++h) {
        std::vector<int> out;
        for (int i = 0; i < (int)v.transitions().size(); ++i)
          if (v.transition(i).src == cur.state) out.push_back(i);
        if (out.empty()) break;
        auto r = step(cur, out[(size_t)rng.pick(0, (long)out.size() - 1)], v);
        if (std::holds_alternative<StepError>(r)) break;
        cur = std::get<Configuration>(r);
      }
      t = cur;
    }
    Classification cls;
    try {
      cls = classify(v, d, s, t, cls_budget);
    } catch (const std::exception&) {
      continue;
    }
    if (!cls.conclusive) continue;
    std::vector<Int> base_counts = count_paths_by_length(v, s, t, LEN);
    if (cls.verdict == ClassVerdict::NonWide && nonwide_done < 30) {
      IntVec a;
      try {
        a = detail::nonnegative_normal(simple_cycle_effects(v));
      } catch (const NotFullDim&) {
        continue;
      }
      // Counters stay below s-entry + 3 per step; bound the tracked value.
      Int B = norm1(a) * Int(3 + (long)LEN * 3) + 1;
      try {
        ProductVass prod = trim_aB(v, HalfSpaceNormal{a}, B, s, t);
        if (!prod.source || !prod.target) return false;
        if (count_paths_by_length(prod.vass, *prod.source, *prod.target,
                                  LEN) != base_counts)
          return false;
      } catch (const std::exception&) {
        return false;
      }
      ++nonwide_done;
    } else if (cls.verdict == ClassVerdict::NonDiagonal && nondiag_done < 30) {
      std::vector<ProductVass> parts = case3_split(v, s, t, Int(64));
      if (parts.size() != 3) return false;
      std::set<unsigned long> union_lengths, base_lengths;
      for (unsigned long l = 0; l <= LEN; ++l)
        if (base_counts[l] > 0) base_lengths.insert(l);
      for (const ProductVass& p : parts) {
        if (!p.source || !p.target) return false;
        std::vector<Int> c =
            count_paths_by_length(p.vass, *p.source, *p.target, LEN);
        if (c != base_counts) return false;  // range 64 covers every path
        for (unsigned long l = 0; l <= LEN; ++l)
          if (c[l] > 0) union_lengths.insert(l);
      }
      if (union_lengths != base_lengths) return false;
      ++nondiag_done;
    }
  }
  return nonwide_done == 30 && nondiag_done == 30;
}

// --------------------------------------------------------------- criterion 7
// Cascade membership: the iterated cone recurrence against the one-shot
// witness LP, on sampled rational points.
bool crit7() {
  Rng rng(70707);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t k = (std::size_t)rng.pick(1, 3);
    std::vector<OpenCone> cones;
    for (std::size_t j = 0; j < k; ++j) {
      OpenCone c;
      long g = rng.pick(1, 3);
      for (long i = 0; i < g; ++i) {
        IntVec r = rng.vec(3, -3, 3);
        if (is_zero_vec(r)) r = iv({1, 0, 0});
        c.generators.push_back(r);
      }
      cones.push_back(std::move(c));
    }
    OpenCone seq = sequential_cone(cones, 3);
    for (int probe = 0; probe < 50; ++probe) {
      RatVec x(3);
      for (auto& q : x) {
        q = Rat(rng.pick(-6, 6), rng.pick(1, 3));
        q.canonicalize();
      }
      bool via_seq = !seq.empty() && cone_member(seq, x);
      bool via_cascade = cascade_member(cones, x);
      if (via_seq != via_cascade) return false;
    }
  }
  return true;
}

// --------------------------------------------------------------- criterion 8
// Exact integer-relaxation reachability against capped relaxed search.
bool crit8() {
  Rng rng(88088);
  int checked = 0, found = 0;
  for (int trial = 0; trial < 200; ++trial) {
    Vass v = testutil::random_vass(rng, (int)rng.pick(1, 3),
                                   (int)rng.pick(1, 4), 3, 2);
    Configuration s{(int)rng.pick(0, (long)v.state_count() - 1),
                    rng.vec(3, 0, 2), Mode::Vass};
    Configuration t{(int)rng.pick(0, (long)v.state_count() - 1),
                    rng.vec(3, 0, 2), Mode::Vass};
    if (trial % 2 == 0) {
      Configuration cur{s.state, s.vector, Mode::Z};
      long hops = rng.pick(0, 6);
      for (long h = 0; h < hops; ++h) {
        std::vector<int> out;
        for (int i = 0; i < (int)v.transitions().size(); ++i)
          if (v.transition(i).src == cur.state) out.push_back(i);
        if (out.empty()) break;
        cur = std::get<Configuration>(
            step(cur, out[(size_t)rng.pick(0, (long)out.size() - 1)], v));
      }
      t = Configuration{cur.state, cur.vector, Mode::Vass};
    }
    ZReachResult zr;
    try {
      zr = z_reach_exact(v, s, t);
    } catch (const std::runtime_error&) {
      continue;
    }
    ++checked;
    SearchBudget b;
    b.counter_cap = 16;
    b.length_cap = 16;
    Configuration zs{s.state, s.vector, Mode::Z};
    Configuration zt{t.state, t.vector, Mode::Z};
    ReachResult br = bfs_reach(v, zs, zt, b);
    if (br.verdict == SearchVerdict::Reachable) {
      ++found;
      if (!zr.reachable) return false;
    }
    if (zr.reachable) {
      if (!zr.witness || !replays_to(*zr.witness, v, zt)) return false;
      // An exhausted relaxed search proves unreachability.
      if (br.verdict == SearchVerdict::ExhaustedAllStates) return false;
    }
  }
  return checked >= 150 && found >= 30;
}

// A random chain-shaped 3-VASS: k single-state components with self loops,
// single bridges in between.
struct ChainInstance {
  Vass v;
  Configuration s, t;
};

ChainInstance random_chain(Rng& rng, int max_components, long norm) {
  int k = (int)rng.pick(1, max_components);
  std::vector<std::string> names;
  for (int i = 0; i < k; ++i) names.push_back("p" + std::to_string(i));
  Vass v(3, names);
  for (int i = 0; i < k; ++i) {
    long loops = rng.pick(0, 2);
    for (long l = 0; l < loops; ++l)
      v.add_transition(i, rng.vec(3, -norm, norm), i);
    if (i + 1 < k) v.add_transition(i, rng.vec(3, -norm, norm), i + 1);
  }
  Configuration s{0, rng.vec(3, 0, 3), Mode::Vass};
  Configuration t{k - 1, rng.vec(3, 0, 6), Mode::Vass};
  if (rng.pick(0, 1)) {
    Configuration cur = s;
    long hops = rng.pick(0, 8);
    for (long h = 0; h < hops; ++h) {
      std::vector<int> out;
      for (int i = 0; i < (int)v.transitions().size(); ++i)
        if (v.transition(i).src == cur.state) out.push_back(i);
      if (out.empty()) break;
      auto r = step(cur, out[(size_t)rng.pick(0, (long)out.size() - 1)], v);
      if (std::holds_alternative<StepError>(r)) break;
      cur = std::get<Configuration>(r);
    }
    if (cur.state == k - 1) t = cur;
  }
  return ChainInstance{std::move(v), std::move(s), std::move(t)};
}

// --------------------------------------------------------------- criterion 9
// The full solver against exhaustive search on instances where the latter
// is conclusive, with replayable witnesses.
bool crit9() {
  Rng rng(99099);
  int done = 0, reachable_seen = 0, unreachable_seen = 0;
  ReachPolicy policy;
  policy.counter_cap_start = 32;
  policy.length_cap_start = 32;
  policy.escalation_rounds = 3;
  for (int attempt = 0; attempt < 1200 && done < 100; ++attempt) {
    ChainInstance inst = random_chain(rng, 3, 4);
    SearchBudget b;
    b.counter_cap = 48;
    b.length_cap = 32;
    b.node_cap = 500000;
    ReachResult oracle = bfs_reach(inst.v, inst.s, inst.t, b);
    if (oracle.verdict == SearchVerdict::NotWithinBudget) continue;
    ++done;
    Reach3Result r = decide_reach3(inst.v, inst.s, inst.t, policy);
    if (oracle.verdict == SearchVerdict::Reachable) {
      ++reachable_seen;
      if (r.verdict != ReachVerdict::Reachable) return false;
      if (!r.witness || !replays_to(*r.witness, inst.v, inst.t)) return false;
    } else {
      ++unreachable_seen;
      if (r.verdict != ReachVerdict::Unreachable) return false;
    }
  }
  return done == 100 && reachable_seen >= 15 && unreachable_seen >= 15;
}

// -------------------------------------------------------------- criterion 10
// Distance regression: every enumerated reachable configuration stays
// within the polynomial distance budget of the cycle-effect cone.
bool crit10() {
  Rng rng(101010);
  SearchBudget cls_budget;
  cls_budget.counter_cap = 32;
  cls_budget.length_cap = 24;
  cls_budget.node_cap = 200000;
  int done = 0;
  for (int attempt = 0; attempt < 2000 && done < 20; ++attempt) {
    ChainInstance inst = random_chain(rng, 2, 3);
    auto dd = sequential_decompose(inst.v);
    if (!std::holds_alternative<SequentialDecomposition>(dd)) continue;
    const auto& d = std::get<SequentialDecomposition>(dd);
    Classification cls;
    try {
      cls = classify(inst.v, d, inst.s, inst.t, cls_budget);
    } catch (const std::exception&) {
      continue;
    }
    if (!cls.conclusive || !cls.forward_diagonal) continue;
    OpenCone cone = sequential_cone(component_cones(inst.v, d), 3);
    if (cone.empty()) continue;
    ++done;
    Int M = Int((long)inst.v.state_count());
    for (const Transition& tr : inst.v.transitions())
      M = std::max(M, norm1(tr.effect));
    M = std::max(M, norm1(inst.s.vector));
    Int D = distance_budget(M);
    SearchBudget b;
    b.counter_cap = 16;
    b.length_cap = 10;
    ReachSet rs = reach_set(inst.v, inst.s, b);
    for (const auto& [state, vec] : rs.configurations) {
      IntVec rel = sub_vec(vec, inst.s.vector);
      if (!within_distance_of_cone(rel, cone, Rat(D))) return false;
    }
  }
  return done == 20;
}

}  // namespace

int main() {
  std::vector<std::function<bool()>> criteria{
      crit1, crit2, crit3, crit4, crit5,
      crit6, crit7, crit8, crit9, crit10};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    bool ok = false;
    try {
      ok = criteria[i]();
    } catch (const std::exception& e) {
      std::cerr << "criterion " << (i + 1) << " exception: " << e.what()
                << "\n";
      ok = false;
    }
    std::cout << "criterion " << (i + 1) << ": " << (ok ? "PASS" : "FAIL")
              << std::endl;
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
