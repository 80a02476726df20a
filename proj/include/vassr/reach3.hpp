#pragma once

// 3-VASS structural analysis and the desk-scale decision procedure:
// diagonality/wideness classification, forward/backward pump
// constructions, inner-product trims, coordinate splits,
// good-for-induction reductions, component elimination, double-exponential
// bound calculators, and the top-level solver.
//
// Soundness discipline: every Reachable verdict carries a witness that is
// replay-checked; Unreachable is issued only from exact integer-relaxation
// infeasibility or from a breadth-first search that provably exhausted the
// reachable set.  All polynomial constants gate budgets, never soundness.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "vassr/basics.hpp"
#include "vassr/cone.hpp"
#include "vassr/diophantine.hpp"
#include "vassr/oracle.hpp"
#include "vassr/semilinear.hpp"
#include "vassr/transform.hpp"
#include "vassr/vass.hpp"

namespace vassr {

// ---------------------------------------------------------------------------
// Configuration
// ---------------------------------------------------------------------------

struct SolverConstants {
  Int rackoff_constant = 4;  // multiplier in ceiling formulas
  Int bound_c = 2;           // base constant c; C = c^3
  Int gfi_B = 12;            // fold range for good-for-induction outputs
  Int distance_constant = 4; // multiplier in the cone-distance budget
  std::size_t digit_cap = 4096;  // explicit-digit cap for bound_h values
};

// Distance budget for the not-far-from-the-cone regression: a generous
// polynomial 4·M·L₂(M) + 3·M built from the dimension-2 length budget.
inline Int distance_budget(const Int& M, const SolverConstants& cfg = {}) {
  Int m = std::max(M, Int(2));
  RackoffBudget rb = rackoff_budget(m, m, m, 2);
  return cfg.distance_constant * m * rb.L.back() + 3 * m;
}

// ---------------------------------------------------------------------------
// Wideness and classification
// ---------------------------------------------------------------------------

namespace detail {

// Open cone of a component: nonzero simple-cycle effects of the restricted
// subgraph as generators.
inline OpenCone component_cone(const Vass& v, const std::vector<int>& states) {
  SubVass sub = restrict_to_states(v, states);
  std::vector<IntVec> eff = simple_cycle_effects(sub.vass);
  eff.erase(std::remove_if(eff.begin(), eff.end(),
                           [](const IntVec& e) { return is_zero_vec(e); }),
            eff.end());
  return OpenCone{std::move(eff)};
}

// Sequential cone with the {0}-cone convention: a cycle-free component
// past the first is a no-op, a cycle-free first component empties the
// whole cascade.
inline OpenCone seq_cone_of(std::vector<OpenCone> cones) {
  if (cones.empty() || cones.front().empty()) return OpenCone{};
  std::vector<OpenCone> kept;
  for (OpenCone& c : cones)
    if (!c.empty()) kept.push_back(std::move(c));
  return sequential_cone(kept, 3);
}

}  // namespace detail

// Per-component open cones in chain order.
inline std::vector<OpenCone> component_cones(const Vass& v,
                                             const SequentialDecomposition& d) {
  std::vector<OpenCone> out;
  for (const std::vector<int>& comp : d.components)
    out.push_back(detail::component_cone(v, comp));
  return out;
}

// Wide: the open positive orthant is included in the sequential cone of
// the system or of its reversal (reversal = reversed chain order with
// negated cycle effects).
inline bool is_wide(const Vass& v, const SequentialDecomposition& d) {
  if (v.dimension() != 3) throw std::invalid_argument("is_wide: dimension");
  std::vector<OpenCone> cones = component_cones(v, d);
  OpenCone fwd = detail::seq_cone_of(cones);
  if (!fwd.empty() && contains_open_orthant(fwd)) return true;
  std::vector<OpenCone> rev_cones;
  for (auto it = cones.rbegin(); it != cones.rend(); ++it) {
    OpenCone c;
    for (const IntVec& g : it->generators) c.generators.push_back(neg_vec(g));
    rev_cones.push_back(std::move(c));
  }
  OpenCone bwd = detail::seq_cone_of(rev_cones);
  return !bwd.empty() && contains_open_orthant(bwd);
}

enum class ClassVerdict { Easy, NonWide, NonDiagonal, Geom2, Inconclusive };

inline const char* to_string(ClassVerdict v) {
  switch (v) {
    case ClassVerdict::Easy: return "easy";
    case ClassVerdict::NonWide: return "non-wide";
    case ClassVerdict::NonDiagonal: return "non-diagonal";
    case ClassVerdict::Geom2: return "geom2";
    default: return "inconclusive";
  }
}

struct Classification {
  bool forward_diagonal = false;
  std::optional<IntVec> delta;       // strictly positive cycle effect at s
  std::vector<int> forward_cycle;    // firings of that cycle
  bool backward_diagonal = false;
  std::optional<IntVec> delta_prime; // strictly positive reverse-cycle effect
  std::vector<int> backward_cycle_rev;  // firings in the reversed system
  bool wide = false;
  int geometric_dimension = 0;
  bool conclusive = true;  // both diagonality searches were conclusive
  ClassVerdict verdict = ClassVerdict::Inconclusive;
};

// Forward diagonality: a cycle p(w) -> p(w + Delta) with Delta >= 1 exists
// iff p(w + 1) is coverable from p(w); backward via the reversed system;
// wideness via the sequential cones; verdict precedence: cycle-free ->
// NonDiagonal, diagonal+wide -> Easy, diagonal+flat -> Geom2, narrow ->
// NonWide, else NonDiagonal.
inline Classification classify(const Vass& v, const SequentialDecomposition& d,
                               const Configuration& s, const Configuration& t,
                               const SearchBudget& budget = {}) {
  if (v.dimension() != 3) throw std::invalid_argument("classify: dimension");
  Classification cls;
  CoverResult fwd = coverable(
      v, s, Configuration{s.state, add_vec(s.vector, ones_vec(3)), s.mode},
      budget);
  if (fwd.verdict == CoverVerdict::Coverable) {
    cls.forward_diagonal = true;
    cls.forward_cycle = fwd.witness->firings;
    auto end = replay(*fwd.witness, v);
    cls.delta = sub_vec(std::get<Configuration>(end).vector, s.vector);
  } else if (fwd.verdict == CoverVerdict::NotWithinBudget) {
    cls.conclusive = false;
  }
  Vass rv = reverse(v);
  Configuration rt{t.state, t.vector, Mode::Vass};
  CoverResult bwd = coverable(
      rv, rt, Configuration{t.state, add_vec(t.vector, ones_vec(3)), Mode::Vass},
      budget);
  if (bwd.verdict == CoverVerdict::Coverable) {
    cls.backward_diagonal = true;
    cls.backward_cycle_rev = bwd.witness->firings;
    auto end = replay(*bwd.witness, rv);
    cls.delta_prime = sub_vec(std::get<Configuration>(end).vector, t.vector);
  } else if (bwd.verdict == CoverVerdict::NotWithinBudget) {
    cls.conclusive = false;
  }
  cls.wide = is_wide(v, d);
  cls.geometric_dimension = geometric_dimension(v);
  bool no_cycles = simple_cycle_effects(v).empty();
  bool diagonal = cls.forward_diagonal && cls.backward_diagonal;
  if (no_cycles) {
    cls.verdict = ClassVerdict::NonDiagonal;
    cls.conclusive = true;
  } else if (diagonal && cls.wide) {
    cls.verdict = ClassVerdict::Easy;
  } else if (diagonal && cls.geometric_dimension <= 2) {
    cls.verdict = ClassVerdict::Geom2;
  } else if (!cls.wide) {
    cls.verdict = ClassVerdict::NonWide;  // independent of diagonality
  } else if (cls.conclusive) {
    cls.verdict = ClassVerdict::NonDiagonal;
  } else {
    cls.verdict = ClassVerdict::Inconclusive;
  }
  return cls;
}

// ---------------------------------------------------------------------------
// Pump constructions
// ---------------------------------------------------------------------------

struct ConstructionFailed : std::runtime_error {
  explicit ConstructionFailed(const std::string& m) : std::runtime_error(m) {}
};

namespace detail {

// Shortest transition path between two states (state graph only).
inline std::vector<int> state_path(const Vass& v, int from, int to) {
  if (from == to) return {};
  std::map<int, std::pair<int, int>> parent;  // state -> (prev state, tid)
  std::vector<int> frontier{from};
  std::set<int> seen{from};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int q : frontier) {
      for (int tid : v.outgoing(q)) {
        int w = v.transition(tid).dst;
        if (!seen.insert(w).second) continue;
        parent[w] = {q, tid};
        if (w == to) {
          std::vector<int> path;
          for (int cur = to; cur != from;) {
            auto [pq, pt] = parent.at(cur);
            path.push_back(pt);
            cur = pq;
          }
          std::reverse(path.begin(), path.end());
          return path;
        }
        next.push_back(w);
      }
    }
    frontier = std::move(next);
  }
  throw ConstructionFailed("state graph is not strongly connected");
}

// A cycle at `home` visiting every state of the (strongly connected)
// system, by stitching shortest state paths.
inline std::vector<int> state_covering_cycle(const Vass& v, int home) {
  std::vector<int> firings;
  std::set<int> visited{home};
  int cur = home;
  for (std::size_t q = 0; q < v.state_count(); ++q) {
    if (visited.count((int)q)) continue;
    std::vector<int> leg = state_path(v, cur, (int)q);
    for (int tid : leg) {
      firings.push_back(tid);
      visited.insert(v.transition(tid).dst);
    }
    cur = (int)q;
  }
  if (cur != home) {
    std::vector<int> back = state_path(v, cur, home);
    firings.insert(firings.end(), back.begin(), back.end());
  }
  return firings;
}

inline IntVec firings_effect(const Vass& v, const std::vector<int>& firings) {
  IntVec e = zero_vec(v.dimension());
  for (int tid : firings) e = add_vec(e, v.transition(tid).effect);
  return e;
}

// Componentwise drop of a firing sequence: the minimal nonnegative start
// vector from which it replays.
inline IntVec firings_drop(const Vass& v, const std::vector<int>& firings) {
  IntVec eff = zero_vec(v.dimension()), drop = zero_vec(v.dimension());
  for (int tid : firings) {
    eff = add_vec(eff, v.transition(tid).effect);
    for (std::size_t j = 0; j < eff.size(); ++j)
      drop[j] = std::max(drop[j], Int(-eff[j]));
  }
  return drop;
}

// Splices `count[i]` copies of cycle i into `spine` at the first visit of
// the cycle's start state (the spine must visit it).
inline std::vector<int> splice_cycles(const Vass& v,
                                      const std::vector<int>& spine,
                                      int start_state,
                                      const std::vector<std::vector<int>>& cyc,
                                      const std::vector<int>& cyc_start,
                                      const IntVec& count) {
  std::vector<int> out;
  std::set<std::size_t> pending;
  for (std::size_t i = 0; i < cyc.size(); ++i)
    if (count[i] > 0) pending.insert(i);
  auto splice_at = [&](int state) {
    for (auto it = pending.begin(); it != pending.end();) {
      if (cyc_start[*it] == state) {
        for (Int rep = 0; rep < count[*it]; rep += 1)
          out.insert(out.end(), cyc[*it].begin(), cyc[*it].end());
        it = pending.erase(it);
      } else {
        ++it;
      }
    }
  };
  int cur = start_state;
  splice_at(cur);
  for (int tid : spine) {
    out.push_back(tid);
    cur = v.transition(tid).dst;
    splice_at(cur);
  }
  if (!pending.empty())
    throw ConstructionFailed("cycle start state not on the covering cycle");
  return out;
}

}  // namespace detail

struct PumpResult {
  Int ell;           // composite multiplier: the path effect is ell * delta'
  WitnessPath path;  // replays from s
};

// Constructs a replaying path p(w) -> p(w + ell·delta_prime) in a strongly
// connected 3-VASS: solve  l·Δ' = m·Δ + Δ̃ + Σ rᵢ·eᵢ  (Δ̃ the effect of a
// state-covering cycle π₁, eᵢ the simple-cycle effects) over nonnegative
// integers with l >= 1, then replay-escalate the scaled path
// π^{km} ; π₁ with k·rᵢ spliced cycles, doubling k until it replays.
inline PumpResult pump_multiple(const Vass& v, const Configuration& s,
                                const IntVec& delta,
                                const std::vector<int>& pi,
                                const IntVec& delta_prime,
                                unsigned long k_ceiling = 4096) {
  if (!all_positive(delta) || !all_positive(delta_prime))
    throw ConstructionFailed("pump_multiple: deltas must be positive");
  std::vector<int> pi1 = detail::state_covering_cycle(v, s.state);
  IntVec delta_tilde = detail::firings_effect(v, pi1);
  std::map<IntVec, std::vector<int>> cycles = simple_cycles_by_effect(v);
  std::vector<IntVec> eff;
  std::vector<std::vector<int>> walks;
  std::vector<int> starts;
  for (auto& [e, walk] : cycles) {
    eff.push_back(e);
    starts.push_back(v.transition(walk.front()).src);
    walks.push_back(walk);
  }
  // Unknowns: l̂ (l = 1 + l̂), m, r_1..r_n; equations per coordinate:
  //   l̂·Δ' - m·Δ - Σ rᵢ eᵢ = Δ̃ - Δ'.
  std::size_t n = eff.size();
  SystemBuilder sb(2 + n);
  for (std::size_t c = 0; c < 3; ++c) {
    IntVec row(2 + n, Int(0));
    row[0] = delta_prime[c];
    row[1] = -delta[c];
    for (std::size_t i = 0; i < n; ++i) row[2 + i] = -eff[i][c];
    sb.add_equality(std::move(row), delta_tilde[c] - delta_prime[c]);
  }
  if (sb.trivially_infeasible())
    throw ConstructionFailed("pump_multiple: system infeasible");
  SolutionSetDescription desc = minimal_solutions(sb.build());
  if (desc.minimal_inhomogeneous.empty())
    throw ConstructionFailed("pump_multiple: no nonnegative solution");
  std::size_t tried = 0;
  for (const IntVec& sol : desc.minimal_inhomogeneous) {
    if (++tried > 20) break;
    Int ell = sol[0] + 1, m = sol[1];
    IntVec counts(sol.begin() + 2, sol.end());
    for (unsigned long k = 1; k <= k_ceiling; k *= 2) {
      std::vector<int> firings;
      for (Int rep = 0; rep < Int(k) * m; rep += 1)
        firings.insert(firings.end(), pi.begin(), pi.end());
      IntVec scaled(counts.size());
      for (std::size_t i = 0; i < counts.size(); ++i)
        scaled[i] = counts[i] * Int(k);
      std::vector<int> tail =
          detail::splice_cycles(v, pi1, s.state, walks, starts, scaled);
      firings.insert(firings.end(), tail.begin(), tail.end());
      WitnessPath w{s, std::move(firings)};
      auto end = replay(w, v);
      if (!std::holds_alternative<Configuration>(end)) continue;
      const Configuration& fin = std::get<Configuration>(end);
      Int total_ell = Int(k) * ell;
      IntVec expect = add_vec(s.vector, scale_vec(total_ell, delta_prime));
      if (fin.state == s.state && fin.vector == expect)
        return PumpResult{total_ell, std::move(w)};
    }
  }
  throw ConstructionFailed("pump_multiple: no scaling replayed");
}

struct CascadeResult {
  Int ell;
  std::vector<IntVec> cascade;        // Δ'_1..Δ'_k, partial sums > 0
  std::vector<WitnessPath> segments;  // per-component cycles; each replays
};

// Joint cascade system: Δ'_j are nonnegative combinations of component-j
// simple-cycle effects, all prefix sums strictly positive, total = l·Δ'.
// Each returned segment is a state-covering cycle of its component with the
// solution cycles spliced in, sourced at its own drop so it replays.
inline CascadeResult pump_cascade(const Vass& v,
                                  const SequentialDecomposition& d,
                                  const Configuration& s,
                                  const IntVec& delta_prime) {
  if (!all_positive(delta_prime))
    throw ConstructionFailed("pump_cascade: delta' must be positive");
  std::size_t k = d.components.size();
  std::vector<SubVass> subs;
  std::vector<std::vector<IntVec>> eff(k);
  std::vector<std::vector<std::vector<int>>> walks(k);
  std::vector<std::vector<int>> starts(k);
  std::vector<std::size_t> offset(k);
  std::size_t nvars = 1;  // l̂ first
  for (std::size_t j = 0; j < k; ++j) {
    subs.push_back(restrict_to_states(v, d.components[j]));
    std::map<IntVec, std::vector<int>> cyc =
        simple_cycles_by_effect(subs[j].vass);
    for (auto& [e, walk] : cyc) {
      if (is_zero_vec(e)) continue;
      eff[j].push_back(e);
      starts[j].push_back(subs[j].vass.transition(walk.front()).src);
      walks[j].push_back(walk);
    }
    offset[j] = nvars;
    nvars += eff[j].size();
  }
  SystemBuilder sb(nvars);
  for (std::size_t c = 0; c < 3; ++c) {
    IntVec row(nvars, Int(0));
    row[0] = -delta_prime[c];
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = 0; i < eff[j].size(); ++i)
        row[offset[j] + i] = eff[j][i][c];
    sb.add_equality(std::move(row), delta_prime[c]);
  }
  for (std::size_t pre = 1; pre < k; ++pre) {
    for (std::size_t c = 0; c < 3; ++c) {
      IntVec row(nvars, Int(0));
      for (std::size_t j = 0; j < pre; ++j)
        for (std::size_t i = 0; i < eff[j].size(); ++i)
          row[offset[j] + i] = eff[j][i][c];
      sb.add_geq(std::move(row), Int(1));
    }
  }
  if (sb.trivially_infeasible())
    throw ConstructionFailed("pump_cascade: system infeasible");
  SolutionSetDescription desc = minimal_solutions(sb.build());
  if (desc.minimal_inhomogeneous.empty())
    throw ConstructionFailed("pump_cascade: no nonnegative solution");
  const IntVec& sol = desc.minimal_inhomogeneous.front();
  CascadeResult res;
  res.ell = sol[0] + 1;
  for (std::size_t j = 0; j < k; ++j) {
    IntVec dj = zero_vec(3);
    IntVec counts(eff[j].size());
    for (std::size_t i = 0; i < eff[j].size(); ++i) {
      counts[i] = sol[offset[j] + i];
      dj = add_vec(dj, scale_vec(counts[i], eff[j][i]));
    }
    res.cascade.push_back(dj);
    int home = starts[j].empty() ? 0 : starts[j].front();
    std::vector<int> spine =
        detail::state_covering_cycle(subs[j].vass, home);
    std::vector<int> firings = detail::splice_cycles(
        subs[j].vass, spine, home, walks[j], starts[j], counts);
    // Map to original transition ids; source at the drop so the segment
    // replays as a VASS path.
    IntVec drop = detail::firings_drop(subs[j].vass, firings);
    std::vector<int> orig;
    for (int tid : firings) orig.push_back(subs[j].transition_map[tid]);
    Configuration src{subs[j].state_map[home], drop, Mode::Vass};
    res.segments.push_back(WitnessPath{src, std::move(orig)});
  }
  // Invariant check: strictly positive partial sums.
  IntVec acc = zero_vec(3);
  for (const IntVec& dj : res.cascade) {
    acc = add_vec(acc, dj);
    if (!all_positive(acc))
      throw ConstructionFailed("pump_cascade: partial sum not positive");
  }
  (void)s;
  return res;
}

// ---------------------------------------------------------------------------
// Trims, splits, and good-for-induction reductions
// ---------------------------------------------------------------------------

struct PreconditionViolated : std::runtime_error {
  explicit PreconditionViolated(const std::string& m) : std::runtime_error(m) {}
};

// Inner-product trim of a whole system: requires <a, e> >= 0 for every
// simple-cycle effect e; states carry b = <a,x> in [-B, B].  Cycle effects
// of the product are orthogonal to a, so it is geometrically <= 2-dim.
inline ProductVass trim_aB(const Vass& v, const HalfSpaceNormal& a,
                           const Int& B, const Configuration& s,
                           const Configuration& t) {
  for (const IntVec& e : simple_cycle_effects(v))
    if (dot(a.a, e) < 0)
      throw PreconditionViolated("trim_aB: cycle with negative inner product");
  return trim_inner_product(v, a.a, B, s, t);
}

// The three coordinate folds: coordinate j mirrored in the state over
// [0, B], dimension kept.  The union of the three length sets equals the
// original's for non-diagonal instances with an adequate B.
inline std::vector<ProductVass> case3_split(const Vass& v,
                                            const Configuration& s,
                                            const Configuration& t,
                                            const Int& B) {
  std::vector<ProductVass> out;
  for (std::size_t j = 0; j < 3; ++j)
    out.push_back(fold_coordinate_keep(v, j, B, s, t));
  return out;
}

namespace detail {

// Rewrites the first component of a sequential system: its states become
// <q, b> with b = <a, x> tracked over [lo, hi]; the bridge to the second
// component fires either from every annotated state or only from the one
// with b = *bridge_exit; later components are untouched.
inline ProductVass fold_first_component(const Vass& v,
                                        const SequentialDecomposition& d,
                                        const IntVec& a, const Int& lo,
                                        const Int& hi,
                                        const std::optional<Int>& bridge_exit,
                                        const Configuration& s,
                                        const Configuration& t) {
  const std::vector<int>& comp1 = d.components.front();
  std::set<int> in_comp1(comp1.begin(), comp1.end());
  check_product_size(comp1.size(), hi - lo + 1);
  std::vector<std::string> names;
  std::map<std::pair<int, Int>, int> idx;       // annotated comp1 states
  std::map<int, int> plain;                     // other states
  for (int q : comp1)
    for (Int b = lo; b <= hi; b += 1) {
      idx[{q, b}] = (int)names.size();
      names.push_back(annotated_state(v.state_name(q), b));
    }
  for (std::size_t q = 0; q < v.state_count(); ++q)
    if (!in_comp1.count((int)q)) {
      plain[(int)q] = (int)names.size();
      names.push_back(v.state_name((int)q));
    }
  ProductVass out{Vass(v.dimension(), names), {}, std::nullopt, std::nullopt};
  for (const Transition& tr : v.transitions()) {
    bool src1 = in_comp1.count(tr.src), dst1 = in_comp1.count(tr.dst);
    if (src1 && dst1) {
      for (Int b = lo; b <= hi; b += 1) {
        Int b2 = b + dot(a, tr.effect);
        if (b2 < lo || b2 > hi) continue;
        out.vass.add_transition(idx.at({tr.src, b}), tr.effect,
                                idx.at({tr.dst, b2}));
        out.transition_origin.push_back(tr.id);
      }
    } else if (src1) {
      for (Int b = lo; b <= hi; b += 1) {
        if (bridge_exit && b != *bridge_exit) continue;
        out.vass.add_transition(idx.at({tr.src, b}), tr.effect,
                                plain.at(tr.dst));
        out.transition_origin.push_back(tr.id);
      }
    } else {
      out.vass.add_transition(plain.at(tr.src), tr.effect, plain.at(tr.dst));
      out.transition_origin.push_back(tr.id);
    }
  }
  auto map_conf = [&](const Configuration& c) -> std::optional<Configuration> {
    if (!in_comp1.count(c.state))
      return Configuration{plain.at(c.state), c.vector, c.mode};
    Int b = dot(a, c.vector);
    if (b < lo || b > hi) return std::nullopt;
    return Configuration{idx.at({c.state, b}), c.vector, c.mode};
  };
  out.source = map_conf(s);
  out.target = map_conf(t);
  return out;
}

// A normal with nonnegative inner product against every effect: a facet
// normal when the effects span 3-space, the orthogonal-complement normal
// otherwise.
inline IntVec nonnegative_normal(const std::vector<IntVec>& effects) {
  std::vector<IntVec> nz;
  for (const IntVec& e : effects)
    if (!is_zero_vec(e)) nz.push_back(e);
  if (rank_of(nz) == 3) {
    std::vector<HalfSpaceNormal> fs = facet_normals(OpenCone{nz});
    if (fs.empty()) throw NotFullDim();
    return fs.front().a;
  }
  return orthogonal_complement_normal(nz);
}

}  // namespace detail

struct GoodSystem {
  ProductVass product;
  std::string description;
};

// Length-equivalent reduction of a non-easy system to systems whose first
// component is geometrically <= 2-dimensional.  Non-wide: one inner-product
// trim of the first component (facet-normal a).  Non-diagonal: 3·(B+1)
// coordinate folds of the first component with the bridge pinned to each
// exit value.  Single-component systems specialize to trim_aB/case3_split.
inline std::vector<GoodSystem> good_for_induction(
    const Vass& v, const SequentialDecomposition& d, const Classification& cls,
    const Configuration& s, const Configuration& t,
    const SolverConstants& cfg = {}) {
  if (cls.verdict == ClassVerdict::Easy ||
      cls.verdict == ClassVerdict::Inconclusive)
    throw std::invalid_argument("good_for_induction: needs a non-easy verdict");
  Int B = cfg.gfi_B;
  std::vector<GoodSystem> out;
  bool single = d.components.size() == 1;
  if (cls.verdict == ClassVerdict::NonWide ||
      cls.verdict == ClassVerdict::Geom2) {
    SubVass first = restrict_to_states(v, d.components.front());
    IntVec a = detail::nonnegative_normal(simple_cycle_effects(first.vass));
    if (single) {
      out.push_back(GoodSystem{trim_aB(v, HalfSpaceNormal{a}, B, s, t),
                               "inner-product trim"});
    } else {
      out.push_back(
          GoodSystem{detail::fold_first_component(v, d, a, -B, B, std::nullopt,
                                                  s, t),
                     "first-component inner-product trim"});
    }
    return out;
  }
  // Non-diagonal: coordinate folds.
  for (std::size_t j = 0; j < 3; ++j) {
    IntVec unit = zero_vec(3);
    unit[j] = 1;
    if (single) {
      out.push_back(GoodSystem{fold_coordinate_keep(v, j, B, s, t),
                               "coordinate fold " + std::to_string(j)});
    } else {
      for (Int b = 0; b <= B; b += 1)
        out.push_back(GoodSystem{
            detail::fold_first_component(v, d, unit, 0, B, b, s, t),
            "coordinate fold " + std::to_string(j) + " exit " + b.get_str()});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Component elimination
// ---------------------------------------------------------------------------

struct ReducedSystem {
  Vass vass;
  Configuration source;
  Configuration target;
  std::vector<int> transition_origin;  // -1 for inserted period loops
};

// Drops the first component and its bridge; the supplied linear set L
// stands in for everything the first component could deliver at the second
// component's entry state q2: the new source is q2(L.base) and one
// self-loop (q2, r, q2) per period r of L.
inline ReducedSystem reduce_component(const Vass& v,
                                      const SequentialDecomposition& d,
                                      const LinearSet& L,
                                      const Configuration& t) {
  if (d.components.size() < 2)
    throw std::invalid_argument("reduce_component: needs >= 2 components");
  const std::vector<int>& comp1 = d.components.front();
  std::set<int> drop(comp1.begin(), comp1.end());
  int q2 = v.transition(d.bridges.front()).dst;
  std::vector<int> kept;
  for (std::size_t q = 0; q < v.state_count(); ++q)
    if (!drop.count((int)q)) kept.push_back((int)q);
  SubVass sub = restrict_to_states(v, kept);
  ReducedSystem out{std::move(sub.vass), {}, {}, std::move(sub.transition_map)};
  for (const IntVec& r : L.periods) {
    out.vass.add_transition(sub.state_rev.at(q2), r, sub.state_rev.at(q2));
    out.transition_origin.push_back(-1);
  }
  out.source = Configuration{sub.state_rev.at(q2), L.base, Mode::Vass};
  out.target = Configuration{sub.state_rev.at(t.state), t.vector, t.mode};
  return out;
}

// Desk-scale source for L: enumerate configurations reachable at q2 using
// the first component, the bridge, and q2's own loops, then extract a base
// (lexicographic minimum) and greedy periods (differences not already
// generated by earlier ones).
inline std::optional<LinearSet> entry_linear_set(
    const Vass& v, const SequentialDecomposition& d, const Configuration& s,
    const SearchBudget& budget = {}) {
  if (d.components.size() < 2) return std::nullopt;
  int q2 = v.transition(d.bridges.front()).dst;
  std::vector<int> states = d.components.front();
  states.push_back(q2);
  SubVass sub = restrict_to_states(v, states);
  if (!sub.state_rev.count(s.state)) return std::nullopt;
  Configuration ss{sub.state_rev.at(s.state), s.vector, s.mode};
  ReachSet rs = reach_set(sub.vass, ss, budget);
  if (!rs.complete) return std::nullopt;
  std::vector<IntVec> at_entry;
  for (const auto& [state, vec] : rs.configurations)
    if (state == sub.state_rev.at(q2)) at_entry.push_back(vec);
  if (at_entry.empty()) return std::nullopt;
  std::sort(at_entry.begin(), at_entry.end(), lex_less);
  IntVec base = at_entry.front();
  std::vector<IntVec> diffs;
  for (std::size_t i = 1; i < at_entry.size(); ++i)
    diffs.push_back(sub_vec(at_entry[i], base));
  std::sort(diffs.begin(), diffs.end(), [](const IntVec& a, const IntVec& b) {
    Int na = norm1(a), nb = norm1(b);
    if (na != nb) return na < nb;
    return lex_less(a, b);
  });
  std::vector<IntVec> periods;
  for (const IntVec& dvec : diffs) {
    if (!all_nonneg(dvec)) continue;  // non-monotone entry sets stay bases-only
    std::map<IntVec, bool> memo;
    if (!detail::in_pstar(periods, dvec, memo)) periods.push_back(dvec);
  }
  return LinearSet(base, periods);
}

// ---------------------------------------------------------------------------
// Bound calculators
// ---------------------------------------------------------------------------

struct BoundValue {
  bool symbolic = false;            // true: too many digits, value omitted
  Int value;                        // closed-form ceiling M^(C^(2^k - 1))
  Int base;                         // M
  Int exponent;                     // C^(2^k - 1)
  std::optional<Int> recurrence_value;  // exact H∘h∘H∘h∘H recurrence
  Int recurrence_exponent;          // its exponent e_k (e_1 = c, e_{k+1} = C·e_k²)
};

// h_k(m) with h_1(m) = m^c and h_{k+1} = H∘h_k∘H∘h_k∘H for H(m) = m^c;
// every stage is a pure power, so only exponents are iterated.  Closed-form
// ceiling m^(C^(2^k - 1)) with C = c³.
inline BoundValue bound_h(const Int& M, int k, const SolverConstants& cfg = {}) {
  if (M < 2 || k < 1 || k > 40)
    throw std::invalid_argument("bound_h: M >= 2, 1 <= k <= 40 required");
  Int c = cfg.bound_c;
  Int C = c * c * c;
  BoundValue out;
  out.base = M;
  if (k > 16) {
    // Even the exponent C^(2^k - 1) is astronomically long; stay symbolic.
    out.symbolic = true;
    out.exponent = 0;
    return out;
  }
  Int e;
  mpz_pow_ui(e.get_mpz_t(), C.get_mpz_t(), (1ul << k) - 1);
  out.exponent = e;
  Int ek = c;
  for (int i = 1; i < k; ++i) ek = C * ek * ek;
  out.recurrence_exponent = ek;
  // Digit estimate: exponent * digits(M).
  Int digits = Int(M.get_str().size()) * e;
  if (digits > Int(cfg.digit_cap) || !e.fits_ulong_p()) {
    out.symbolic = true;
  } else {
    out.value = int_pow(M, e.get_ui());
    if (ek.fits_ulong_p() &&
        Int(M.get_str().size()) * ek <= Int(cfg.digit_cap))
      out.recurrence_value = int_pow(M, ek.get_ui());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Top-level decision procedure
// ---------------------------------------------------------------------------

enum class ReachVerdict { Reachable, Unreachable, Inconclusive };

inline const char* to_string(ReachVerdict v) {
  switch (v) {
    case ReachVerdict::Reachable: return "reachable";
    case ReachVerdict::Unreachable: return "unreachable";
    default: return "inconclusive";
  }
}

struct ReachPolicy {
  Int counter_cap_start = 64;
  Int length_cap_start = 64;
  int escalation_rounds = 4;       // caps double each round
  std::size_t node_cap = 2000000;
  std::size_t witness_length_cap = 200000;
  bool use_constructions = true;   // try pump/lift before the search backstop
};

struct Reach3Result {
  ReachVerdict verdict = ReachVerdict::Inconclusive;
  std::optional<WitnessPath> witness;
  std::optional<Classification> classification;
  std::string note;
};

namespace detail {

// Easy-case witness: forward pump to height N·l·Δ', the integer-relaxation
// witness shifted up (valid once N clears its drop), and N·l backward
// pump cycles closing back down to t.
inline std::optional<WitnessPath> easy_lift(const Vass& v,
                                            const Configuration& s,
                                            const Configuration& t,
                                            const Classification& cls,
                                            const WitnessPath& zwitness,
                                            const ReachPolicy& policy) {
  PumpResult pump =
      pump_multiple(v, s, *cls.delta, cls.forward_cycle, *cls.delta_prime);
  // Minimal shift multiple N: N·l·Δ'_j must clear the Z-path's deepest dip.
  IntVec run = s.vector;
  IntVec low = s.vector;
  for (int tid : zwitness.firings) {
    run = add_vec(run, v.transition(tid).effect);
    for (std::size_t j = 0; j < 3; ++j) low[j] = std::min(low[j], run[j]);
  }
  Int N = 1;
  for (std::size_t j = 0; j < 3; ++j) {
    if (low[j] >= 0) continue;
    N = std::max(N, ceil_div(-low[j], pump.ell * (*cls.delta_prime)[j]));
  }
  std::vector<int> firings;
  for (Int rep = 0; rep < N; rep += 1)
    firings.insert(firings.end(), pump.path.firings.begin(),
                   pump.path.firings.end());
  firings.insert(firings.end(), zwitness.firings.begin(),
                 zwitness.firings.end());
  std::vector<int> down(cls.backward_cycle_rev.rbegin(),
                        cls.backward_cycle_rev.rend());
  for (Int rep = 0; rep < N * pump.ell; rep += 1)
    firings.insert(firings.end(), down.begin(), down.end());
  if (firings.size() > policy.witness_length_cap) return std::nullopt;
  WitnessPath w{s, std::move(firings)};
  if (replays_to(w, v, t)) return w;
  return std::nullopt;
}

}  // namespace detail

inline Reach3Result decide_reach3(const Vass& v, const Configuration& s,
                                  const Configuration& t,
                                  const ReachPolicy& policy = {},
                                  const SolverConstants& cfg = {}) {
  (void)cfg;
  Reach3Result res;
  if (v.dimension() != 3)
    throw std::invalid_argument("decide_reach3: dimension must be 3");
  if (!s.valid() || !t.valid() || s.mode != Mode::Vass || t.mode != Mode::Vass)
    throw std::invalid_argument("decide_reach3: endpoints must be VASS mode");
  if (s.state == t.state && s.vector == t.vector) {
    res.verdict = ReachVerdict::Reachable;
    res.witness = WitnessPath{s, {}};
    res.note = "source equals target";
    return res;
  }
  // Integer relaxation: exact, and unreachability transfers to VASS.
  std::optional<ZReachResult> zres;
  try {
    zres = z_reach_exact(v, s, t);
    if (!zres->reachable) {
      res.verdict = ReachVerdict::Unreachable;
      res.note = "integer relaxation infeasible";
      return res;
    }
  } catch (const std::runtime_error&) {
    zres.reset();  // relaxation too large; fall through
  }
  // Classification and the easy-case construction.
  auto decomp = sequential_decompose(v);
  if (std::holds_alternative<SequentialDecomposition>(decomp)) {
    const auto& d = std::get<SequentialDecomposition>(decomp);
    try {
      SearchBudget cb;
      cb.counter_cap = policy.counter_cap_start * 4;
      cb.length_cap = policy.length_cap_start * 4;
      cb.node_cap = policy.node_cap;
      Classification cls = classify(v, d, s, t, cb);
      res.classification = cls;
      if (policy.use_constructions && cls.verdict == ClassVerdict::Easy &&
          zres && zres->reachable && zres->witness) {
        auto lifted = detail::easy_lift(v, s, t, cls, *zres->witness, policy);
        if (lifted) {
          res.verdict = ReachVerdict::Reachable;
          res.witness = std::move(lifted);
          res.note = "easy case: pump + integer witness + reverse pump";
          return res;
        }
      }
    } catch (const std::runtime_error&) {
      // classification or construction budgets exceeded; backstop decides
    }
  }
  // Search backstop with escalation; Unreachable only on a provably
  // exhausted search.
  SearchBudget b;
  b.counter_cap = policy.counter_cap_start;
  b.length_cap = policy.length_cap_start;
  b.node_cap = policy.node_cap;
  for (int round = 0; round < policy.escalation_rounds; ++round) {
    ReachResult r = bfs_reach(v, s, t, b);
    if (r.verdict == SearchVerdict::Reachable) {
      res.verdict = ReachVerdict::Reachable;
      res.witness = r.witness;
      res.note = "breadth-first search";
      return res;
    }
    if (r.verdict == SearchVerdict::ExhaustedAllStates) {
      res.verdict = ReachVerdict::Unreachable;
      res.note = "search exhausted the reachable set";
      return res;
    }
    b.counter_cap *= 2;
    b.length_cap *= 2;
  }
  res.verdict = ReachVerdict::Inconclusive;
  res.note = "budget ceiling reached";
  return res;
}

}  // namespace vassr
