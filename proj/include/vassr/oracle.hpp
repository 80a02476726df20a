#pragma once

// Ground-truth engines: bounded breadth-first search for reachability,
// coverability and simultaneous-high configurations, reachable-set
// enumeration, path-length counting, Rackoff-style budget sequences, and
// exact Z-reachability via support enumeration + Diophantine cycle
// systems.

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <variant>
#include <vector>

#include "vassr/basics.hpp"
#include "vassr/diophantine.hpp"
#include "vassr/vass.hpp"

namespace vassr {

struct SearchBudget {
  Int counter_cap = 1000;   // max |coordinate| explored
  Int length_cap = 1000;    // max path length
  std::size_t node_cap = 1000000;
};

enum class SearchVerdict { Reachable, ExhaustedAllStates, NotWithinBudget };

struct ReachResult {
  SearchVerdict verdict = SearchVerdict::NotWithinBudget;
  std::optional<WitnessPath> witness;  // present iff Reachable
};

namespace detail {

inline bool within_counter_cap(const IntVec& v, const Int& cap, Mode mode) {
  for (const Int& x : v) {
    if (mode == Mode::Vass) {
      if (x > cap) return false;
    } else {
      if (abs_int(x) > cap) return false;
    }
  }
  return true;
}

}  // namespace detail

// Breadth-first search for t from s.  Deterministic: frontier nodes are
// expanded in the lexicographic order of their transition-id paths and
// transitions in increasing id, so the returned witness is the
// lexicographically least among the shortest.  ExhaustedAllStates is
// reported only when the frontier empties without any step having been
// pruned by the counter cap -- then the explored set is the whole
// reachable set and unreachability is certain.
inline ReachResult bfs_reach(const Vass& v, const Configuration& s,
                             const Configuration& t, const SearchBudget& b) {
  ReachResult res;
  if (!s.valid() || !t.valid() || s.mode != t.mode)
    throw std::invalid_argument("bfs_reach: invalid endpoints");
  if (s.state == t.state && s.vector == t.vector) {
    res.verdict = SearchVerdict::Reachable;
    res.witness = WitnessPath{s, {}};
    return res;
  }
  struct Node {
    Configuration conf;
    int parent;  // index into pool, -1 for root
    int tid;
  };
  std::vector<Node> pool{{s, -1, -1}};
  std::set<std::pair<int, IntVec>> visited{{s.state, s.vector}};
  std::vector<int> frontier{0};
  bool pruned = false;
  Int depth = 0;
  while (!frontier.empty()) {
    if (depth >= b.length_cap) {
      res.verdict = SearchVerdict::NotWithinBudget;
      return res;
    }
    std::vector<int> next;
    for (int ni : frontier) {
      Configuration cur = pool[ni].conf;  // copy: pool may reallocate
      for (int tid : v.outgoing(cur.state)) {
        auto r = step(cur, tid, v);
        if (std::holds_alternative<StepError>(r)) continue;
        Configuration nc = std::get<Configuration>(r);
        if (!detail::within_counter_cap(nc.vector, b.counter_cap, s.mode)) {
          pruned = true;
          continue;
        }
        if (!visited.insert({nc.state, nc.vector}).second) continue;
        if (pool.size() >= b.node_cap) {
          res.verdict = SearchVerdict::NotWithinBudget;
          return res;
        }
        pool.push_back(Node{nc, ni, tid});
        int idx = static_cast<int>(pool.size()) - 1;
        if (nc.state == t.state && nc.vector == t.vector) {
          std::vector<int> firings;
          for (int j = idx; j != 0; j = pool[j].parent)
            firings.push_back(pool[j].tid);
          std::reverse(firings.begin(), firings.end());
          res.verdict = SearchVerdict::Reachable;
          res.witness = WitnessPath{s, std::move(firings)};
          return res;
        }
        next.push_back(idx);
      }
    }
    frontier = std::move(next);
    depth += 1;
  }
  res.verdict = pruned ? SearchVerdict::NotWithinBudget
                       : SearchVerdict::ExhaustedAllStates;
  return res;
}

// All configurations reachable from s within the budget; `complete` is
// true when no cap was hit (the set is the full reachable set).
struct ReachSet {
  std::set<std::pair<int, IntVec>> configurations;
  bool complete = false;
};

inline ReachSet reach_set(const Vass& v, const Configuration& s,
                          const SearchBudget& b) {
  ReachSet out;
  if (!s.valid()) throw std::invalid_argument("reach_set: invalid source");
  std::vector<Configuration> frontier{s};
  out.configurations.insert({s.state, s.vector});
  bool pruned = false;
  Int depth = 0;
  bool capped_by_length = false;
  while (!frontier.empty()) {
    if (depth >= b.length_cap) {
      capped_by_length = true;
      break;
    }
    std::vector<Configuration> next;
    for (const Configuration& cur : frontier) {
      for (int tid : v.outgoing(cur.state)) {
        auto r = step(cur, tid, v);
        if (std::holds_alternative<StepError>(r)) continue;
        Configuration nc = std::get<Configuration>(r);
        if (!detail::within_counter_cap(nc.vector, b.counter_cap, s.mode)) {
          pruned = true;
          continue;
        }
        if (out.configurations.size() >= b.node_cap) {
          pruned = true;
          continue;
        }
        if (out.configurations.insert({nc.state, nc.vector}).second)
          next.push_back(std::move(nc));
      }
    }
    frontier = std::move(next);
    depth += 1;
  }
  out.complete = !pruned && !capped_by_length;
  return out;
}

// Number of s -> t paths per length 0..length_cap (VASS or Z semantics by
// the mode of s).  Exact: configurations reachable within length_cap are
// finitely many.
inline std::vector<Int> count_paths_by_length(const Vass& v,
                                              const Configuration& s,
                                              const Configuration& t,
                                              unsigned long length_cap) {
  std::vector<Int> counts(length_cap + 1, Int(0));
  std::map<std::pair<int, IntVec>, Int> layer{{{s.state, s.vector}, Int(1)}};
  if (!s.valid()) return counts;
  for (unsigned long len = 0; len <= length_cap; ++len) {
    auto it = layer.find({t.state, t.vector});
    if (it != layer.end()) counts[len] = it->second;
    if (len == length_cap) break;
    std::map<std::pair<int, IntVec>, Int> next;
    for (const auto& [key, cnt] : layer) {
      Configuration cur{key.first, key.second, s.mode};
      for (int tid : v.outgoing(cur.state)) {
        auto r = step(cur, tid, v);
        if (std::holds_alternative<StepError>(r)) continue;
        const Configuration& nc = std::get<Configuration>(r);
        next[{nc.state, nc.vector}] += cnt;
      }
    }
    layer = std::move(next);
  }
  return counts;
}

// Set of s -> t path lengths up to length_cap.
inline std::set<unsigned long> path_lengths(const Vass& v,
                                            const Configuration& s,
                                            const Configuration& t,
                                            unsigned long length_cap) {
  std::vector<Int> counts = count_paths_by_length(v, s, t, length_cap);
  std::set<unsigned long> out;
  for (unsigned long i = 0; i <= length_cap; ++i)
    if (counts[i] > 0) out.insert(i);
  return out;
}

// ---------------------------------------------------------------------------
// Coverability and simultaneous-high search
// ---------------------------------------------------------------------------

enum class CoverVerdict { Coverable, NotCoverable, NotWithinBudget };

struct CoverResult {
  CoverVerdict verdict = CoverVerdict::NotWithinBudget;
  std::optional<WitnessPath> witness;
};

namespace detail {

// Shared BFS for "reach any configuration satisfying `accept`".
template <typename Accept>
inline CoverResult bfs_predicate(const Vass& v, const Configuration& s,
                                 Accept&& accept, const SearchBudget& b) {
  CoverResult res;
  struct Node {
    Configuration conf;
    int parent;
    int tid;
  };
  if (accept(s)) {
    res.verdict = CoverVerdict::Coverable;
    res.witness = WitnessPath{s, {}};
    return res;
  }
  std::vector<Node> pool{{s, -1, -1}};
  std::set<std::pair<int, IntVec>> visited{{s.state, s.vector}};
  std::vector<int> frontier{0};
  bool pruned = false;
  Int depth = 0;
  while (!frontier.empty()) {
    if (depth >= b.length_cap) {
      res.verdict = CoverVerdict::NotWithinBudget;
      return res;
    }
    std::vector<int> next;
    for (int ni : frontier) {
      Configuration cur = pool[ni].conf;
      for (int tid : v.outgoing(cur.state)) {
        auto r = step(cur, tid, v);
        if (std::holds_alternative<StepError>(r)) continue;
        Configuration nc = std::get<Configuration>(r);
        if (!within_counter_cap(nc.vector, b.counter_cap, s.mode)) {
          pruned = true;
          continue;
        }
        if (!visited.insert({nc.state, nc.vector}).second) continue;
        if (pool.size() >= b.node_cap) {
          res.verdict = CoverVerdict::NotWithinBudget;
          return res;
        }
        pool.push_back(Node{nc, ni, tid});
        int idx = static_cast<int>(pool.size()) - 1;
        if (accept(nc)) {
          std::vector<int> firings;
          for (int j = idx; j != 0; j = pool[j].parent)
            firings.push_back(pool[j].tid);
          std::reverse(firings.begin(), firings.end());
          res.verdict = CoverVerdict::Coverable;
          res.witness = WitnessPath{s, std::move(firings)};
          return res;
        }
        next.push_back(idx);
      }
    }
    frontier = std::move(next);
    depth += 1;
  }
  res.verdict =
      pruned ? CoverVerdict::NotWithinBudget : CoverVerdict::NotCoverable;
  return res;
}

}  // namespace detail

// Coverability: is some q(w' >= target.vector) with q = target.state
// reachable from s?
inline CoverResult coverable(const Vass& v, const Configuration& s,
                             const Configuration& target,
                             const SearchBudget& b) {
  return detail::bfs_predicate(
      v, s,
      [&](const Configuration& c) {
        return c.state == target.state && leq_vec(target.vector, c.vector);
      },
      b);
}

// Path to a configuration with every coordinate >= U (any state).
inline CoverResult simultaneous_high_path(const Vass& v,
                                          const Configuration& s,
                                          const Int& U,
                                          const SearchBudget& b) {
  return detail::bfs_predicate(
      v, s,
      [&](const Configuration& c) {
        for (const Int& x : c.vector)
          if (x < U) return false;
        return true;
      },
      b);
}

// ---------------------------------------------------------------------------
// Rackoff budgets
// ---------------------------------------------------------------------------

struct RackoffBudget {
  Int n, N, U;
  int d = 3;
  std::vector<Int> H;  // H[i-1] = H_i
  std::vector<Int> L;  // L[i-1] = L_i
  std::vector<Int> ceiling;  // Prop hd-bound: (4Nn)^(2*i!) * U^(i!)
};

// H_1 = U, L_1 = n·U, H_i = U + N·L_{i-1}, L_i = n·H_i^i + L_{i-1}.
inline RackoffBudget rackoff_budget(const Int& n, const Int& N, const Int& U,
                                    int d) {
  if (n < 1 || N < 1 || U < 0 || d < 1 || d > 3)
    throw std::invalid_argument("rackoff_budget: parameter range");
  RackoffBudget rb;
  rb.n = n;
  rb.N = N;
  rb.U = U;
  rb.d = d;
  unsigned long fact = 1;
  for (int i = 1; i <= d; ++i) {
    Int Hi = (i == 1) ? U : Int(U + N * rb.L.back());
    Int Li = (i == 1) ? Int(n * U)
                      : Int(n * int_pow(Hi, (unsigned long)i) + rb.L.back());
    rb.H.push_back(Hi);
    rb.L.push_back(Li);
    fact *= (unsigned long)i;
    rb.ceiling.push_back(int_pow(4 * N * n, 2 * fact) * int_pow(U, fact));
  }
  return rb;
}

// ---------------------------------------------------------------------------
// Exact Z-reachability
// ---------------------------------------------------------------------------

struct ZReachResult {
  bool reachable = false;
  Int implied_length = 0;             // for the first admissible support
  std::optional<WitnessPath> witness; // Z-mode path, replayable
};

namespace detail {

// Walks from s.state to t.state over the transition subset, visiting every
// support state, of length <= |Q'|^2; collects one witness walk per
// distinct effect.
struct SigmaWalk {
  IntVec effect;
  std::vector<int> firings;
};

inline std::vector<SigmaWalk> sigma0_walks(const Vass& v,
                                           const std::vector<int>& tids,
                                           const std::vector<int>& support_states,
                                           int s_state, int t_state,
                                           std::size_t node_cap) {
  std::map<int, int> state_pos;
  for (std::size_t i = 0; i < support_states.size(); ++i)
    state_pos[support_states[i]] = static_cast<int>(i);
  if (support_states.size() > 12)
    throw DiophBudgetExceeded();  // support size cap
  unsigned full = (1u << support_states.size()) - 1;
  unsigned long max_len =
      (unsigned long)(support_states.size() * support_states.size());
  // Key: (state, visited mask, effect) -> first witness walk.
  std::map<std::tuple<int, unsigned, IntVec>, std::vector<int>> seen;
  std::vector<std::tuple<int, unsigned, IntVec>> frontier;
  auto mask_of = [&](int q, unsigned m) {
    return m | (1u << state_pos.at(q));
  };
  std::tuple<int, unsigned, IntVec> start{
      s_state, mask_of(s_state, 0), zero_vec(v.dimension())};
  seen[start] = {};
  frontier.push_back(start);
  std::vector<SigmaWalk> out;
  auto harvest = [&](const std::tuple<int, unsigned, IntVec>& key) {
    if (std::get<0>(key) == t_state && std::get<1>(key) == full)
      out.push_back(SigmaWalk{std::get<2>(key), seen.at(key)});
  };
  harvest(start);
  for (unsigned long len = 1; len <= max_len && !frontier.empty(); ++len) {
    std::vector<std::tuple<int, unsigned, IntVec>> next;
    for (const auto& key : frontier) {
      const auto& [q, m, eff] = key;
      std::vector<int> base = seen.at(key);
      for (int tid : tids) {
        const Transition& tr = v.transition(tid);
        if (tr.src != q) continue;
        std::tuple<int, unsigned, IntVec> nk{
            tr.dst, mask_of(tr.dst, m), add_vec(eff, tr.effect)};
        if (seen.count(nk)) continue;
        if (seen.size() >= node_cap) throw DiophBudgetExceeded();
        std::vector<int> walk = base;
        walk.push_back(tid);
        seen.emplace(nk, std::move(walk));
        harvest(nk);
        next.push_back(std::move(nk));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace detail

// Exact Z-reachability.  Enumerates candidate supports (connected
// transition subsets touching both endpoints' states); for each, every
// achievable effect of a covering walk sigma_0 (each support state visited,
// length at most |Q'|^2 by the usual shortening argument) leads to the
// 3-equation system  sum_delta x_delta·e_delta = t - s - eff(sigma_0)
// over deduplicated simple-cycle effects of the support subgraph, solved
// over nonnegative integers.  Any solution assembles into a real Z-path by
// splicing cycles into sigma_0 at their start states.
inline ZReachResult z_reach_exact(const Vass& v, const Configuration& s,
                                  const Configuration& t,
                                  std::size_t node_cap = 4000000) {
  ZReachResult res;
  IntVec needed = sub_vec(t.vector, s.vector);
  if (s.state == t.state && is_zero_vec(needed)) {
    res.reachable = true;
    res.implied_length = 0;
    Configuration zs = s;
    zs.mode = Mode::Z;
    res.witness = WitnessPath{zs, {}};
    return res;
  }
  std::size_t nt = v.transitions().size();
  if (nt > 16) throw DiophBudgetExceeded();
  for (unsigned long mask = 1; mask < (1ul << nt); ++mask) {
    std::vector<int> tids;
    std::set<int> qset;
    for (std::size_t i = 0; i < nt; ++i)
      if (mask & (1ul << i)) {
        tids.push_back(static_cast<int>(i));
        qset.insert(v.transition((int)i).src);
        qset.insert(v.transition((int)i).dst);
      }
    if (!qset.count(s.state) || !qset.count(t.state)) continue;
    // Connectivity of the undirected support graph.
    {
      std::map<int, std::vector<int>> und;
      for (int tid : tids) {
        const Transition& tr = v.transition(tid);
        und[tr.src].push_back(tr.dst);
        und[tr.dst].push_back(tr.src);
      }
      std::set<int> comp{*qset.begin()};
      std::vector<int> stack{*qset.begin()};
      while (!stack.empty()) {
        int q = stack.back();
        stack.pop_back();
        for (int w : und[q])
          if (comp.insert(w).second) stack.push_back(w);
      }
      if (comp.size() != qset.size()) continue;
    }
    std::vector<int> support_states(qset.begin(), qset.end());
    // Support subgraph and its simple cycles (with representative walks).
    std::vector<int> sub_states = support_states;
    SubVass sub = restrict_to_states(v, sub_states);
    // Keep only the selected transitions in the subgraph cycle search:
    // rebuild with exactly `tids`.
    Vass subv(v.dimension(), sub.vass.state_names());
    std::vector<int> sub_tid_map;
    for (int tid : tids) {
      const Transition& tr = v.transition(tid);
      subv.add_transition(sub.state_rev.at(tr.src), tr.effect,
                          sub.state_rev.at(tr.dst));
      sub_tid_map.push_back(tid);
    }
    std::map<IntVec, std::vector<int>> cycles =
        simple_cycles_by_effect(subv);
    std::vector<IntVec> cyc_effects;
    std::vector<std::vector<int>> cyc_walks;  // original transition ids
    std::vector<int> cyc_start_state;         // original state id
    for (auto& [eff, walk] : cycles) {
      cyc_effects.push_back(eff);
      std::vector<int> orig;
      for (int stid : walk) orig.push_back(sub_tid_map[stid]);
      cyc_start_state.push_back(v.transition(orig.front()).src);
      cyc_walks.push_back(std::move(orig));
    }
    std::vector<detail::SigmaWalk> walks = detail::sigma0_walks(
        v, tids, support_states, s.state, t.state, node_cap);
    for (const detail::SigmaWalk& w : walks) {
      IntVec rhs = sub_vec(needed, w.effect);
      if (cyc_effects.empty()) {
        if (!is_zero_vec(rhs)) continue;
      }
      DiophantineSystem sys;
      for (std::size_t row = 0; row < v.dimension(); ++row) {
        IntVec arow(cyc_effects.size());
        for (std::size_t cix = 0; cix < cyc_effects.size(); ++cix)
          arow[cix] = cyc_effects[cix][row];
        sys.matrix.push_back(std::move(arow));
        sys.rhs.push_back(rhs[row]);
      }
      std::vector<IntVec> solution_counts;
      if (cyc_effects.empty()) {
        solution_counts.push_back(IntVec{});
      } else {
        SolutionSetDescription desc = minimal_solutions(sys);
        if (desc.minimal_inhomogeneous.empty()) continue;
        solution_counts.push_back(desc.minimal_inhomogeneous.front());
      }
      const IntVec& counts = solution_counts.front();
      // Assemble: splice each cycle (with multiplicity) into sigma_0 at
      // the first visit of its start state.
      std::vector<int> firings;
      std::set<std::size_t> pending;
      for (std::size_t cix = 0; cix < counts.size(); ++cix)
        if (counts[cix] > 0) pending.insert(cix);
      int cur_state = s.state;
      Int total_len = Int((unsigned long)w.firings.size());
      auto splice_at = [&](int state) {
        for (auto it = pending.begin(); it != pending.end();) {
          std::size_t cix = *it;
          if (cyc_start_state[cix] == state) {
            for (Int rep = 0; rep < counts[cix]; ++rep)
              for (int tid : cyc_walks[cix]) firings.push_back(tid);
            total_len += counts[cix] * Int(cyc_walks[cix].size());
            it = pending.erase(it);
          } else {
            ++it;
          }
        }
      };
      splice_at(cur_state);
      for (int tid : w.firings) {
        firings.push_back(tid);
        cur_state = v.transition(tid).dst;
        splice_at(cur_state);
      }
      if (!pending.empty()) continue;  // cycle start never visited (cannot
                                       // happen: sigma_0 covers support)
      res.reachable = true;
      res.implied_length = total_len;
      Configuration zs = s;
      zs.mode = Mode::Z;
      res.witness = WitnessPath{zs, std::move(firings)};
      return res;
    }
  }
  return res;
}

}  // namespace vassr
