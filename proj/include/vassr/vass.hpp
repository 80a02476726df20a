#pragma once

// Core VASS data model: states, integer-effect transitions, step/path
// semantics over nonnegative (VASS) or unrestricted (Z) counters,
// sequential (chain-of-SCCs) decomposition, simple-cycle effect
// enumeration, and geometric dimension.

#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "vassr/basics.hpp"

namespace vassr {

enum class Mode { Vass, Z };

struct Transition {
  int id = 0;  // stable ordinal in declaration order
  int src = 0;
  IntVec effect;
  int dst = 0;
};

class Vass {
 public:
  Vass(std::size_t dimension, std::vector<std::string> state_names)
      : dim_(dimension), state_names_(std::move(state_names)) {
    for (std::size_t i = 0; i < state_names_.size(); ++i)
      state_index_[state_names_[i]] = static_cast<int>(i);
    if (state_index_.size() != state_names_.size())
      throw std::invalid_argument("Vass: duplicate state name");
  }

  int add_transition(int src, IntVec effect, int dst) {
    check_state(src);
    check_state(dst);
    if (effect.size() != dim_)
      throw std::invalid_argument("Vass: effect dimension mismatch");
    int id = static_cast<int>(transitions_.size());
    transitions_.push_back(Transition{id, src, std::move(effect), dst});
    return id;
  }

  std::size_t dimension() const { return dim_; }
  std::size_t state_count() const { return state_names_.size(); }
  const std::vector<std::string>& state_names() const { return state_names_; }
  const std::string& state_name(int q) const { return state_names_.at(q); }
  int state_id(const std::string& name) const {
    auto it = state_index_.find(name);
    if (it == state_index_.end())
      throw std::out_of_range("Vass: unknown state " + name);
    return it->second;
  }
  bool has_state(const std::string& name) const {
    return state_index_.count(name) != 0;
  }
  const std::vector<Transition>& transitions() const { return transitions_; }
  const Transition& transition(int id) const { return transitions_.at(id); }

  // size(V) = sum of transition norms plus the number of transitions.
  Int size_measure() const {
    Int s = Int(transitions_.size());
    for (const Transition& t : transitions_) s += norm1(t.effect);
    return s;
  }

  // Largest of: transition norms, state count, transition count.  A handy
  // single "magnitude" M for bound formulas.
  Int magnitude() const {
    Int m = Int(std::max(state_names_.size(), transitions_.size()));
    if (m == 0) m = 1;
    for (const Transition& t : transitions_) m = std::max(m, norm1(t.effect));
    return m;
  }

  std::vector<int> outgoing(int q) const {
    std::vector<int> out;
    for (const Transition& t : transitions_)
      if (t.src == q) out.push_back(t.id);
    return out;
  }

 private:
  void check_state(int q) const {
    if (q < 0 || static_cast<std::size_t>(q) >= state_names_.size())
      throw std::out_of_range("Vass: state index out of range");
  }
  std::size_t dim_;
  std::vector<std::string> state_names_;
  std::map<std::string, int> state_index_;
  std::vector<Transition> transitions_;
};

struct Configuration {
  int state = 0;
  IntVec vector;
  Mode mode = Mode::Vass;

  bool valid() const { return mode == Mode::Z || all_nonneg(vector); }
  friend bool operator==(const Configuration& a, const Configuration& b) {
    return a.state == b.state && a.vector == b.vector && a.mode == b.mode;
  }
};

struct WitnessPath {
  Configuration source;
  std::vector<int> firings;

  std::size_t length() const { return firings.size(); }
};

enum class StepError { StateMismatch, NegativeCounter };

struct InvalidStep {
  std::size_t index;
  StepError cause;
};

// Fires transition t from configuration c.  VASS mode blocks any firing
// that would push a counter below zero.
inline std::variant<Configuration, StepError> step(const Configuration& c,
                                                   int t, const Vass& v) {
  const Transition& tr = v.transition(t);
  if (tr.src != c.state) return StepError::StateMismatch;
  Configuration out;
  out.state = tr.dst;
  out.mode = c.mode;
  out.vector = add_vec(c.vector, tr.effect);
  if (c.mode == Mode::Vass && !all_nonneg(out.vector))
    return StepError::NegativeCounter;
  return out;
}

// Replays a witness path; returns the final configuration or the index
// and cause of the first invalid step.
inline std::variant<Configuration, InvalidStep> replay(const WitnessPath& p,
                                                       const Vass& v) {
  Configuration cur = p.source;
  if (p.source.mode == Mode::Vass && !all_nonneg(p.source.vector))
    return InvalidStep{0, StepError::NegativeCounter};
  for (std::size_t i = 0; i < p.firings.size(); ++i) {
    auto r = step(cur, p.firings[i], v);
    if (std::holds_alternative<StepError>(r))
      return InvalidStep{i, std::get<StepError>(r)};
    cur = std::get<Configuration>(r);
  }
  return cur;
}

inline bool replays_to(const WitnessPath& p, const Vass& v,
                       const Configuration& t) {
  auto r = replay(p, v);
  if (!std::holds_alternative<Configuration>(r)) return false;
  const Configuration& c = std::get<Configuration>(r);
  return c.state == t.state && c.vector == t.vector;
}

// Reversal: each transition (q, v, q') becomes (q', -v, q), ids preserved;
// source and target swap roles.
inline Vass reverse(const Vass& v) {
  Vass r(v.dimension(), v.state_names());
  for (const Transition& t : v.transitions())
    r.add_transition(t.dst, neg_vec(t.effect), t.src);
  return r;
}

struct ReversedInstance {
  Vass vass;
  Configuration source;
  Configuration target;
};

inline ReversedInstance reverse(const Vass& v, const Configuration& s,
                                const Configuration& t) {
  return ReversedInstance{reverse(v), t, s};
}

// ---------------------------------------------------------------------------
// Sequential decomposition (chain of SCCs joined by single bridges)
// ---------------------------------------------------------------------------

struct SequentialDecomposition {
  // components[i] = state ids of V_{i+1}, in chain order.
  std::vector<std::vector<int>> components;
  // bridges[i] = transition id of u_{i+1}, from components[i] to
  // components[i+1].
  std::vector<int> bridges;
  // component_of[q] = index of the component containing state q.
  std::vector<int> component_of;
};

struct NotSequential {
  std::string reason;
};

namespace detail {

// Tarjan SCC; returns component index per state, components numbered in
// reverse topological order of the condensation.
inline std::vector<int> tarjan_scc(const Vass& v, int& comp_count) {
  int n = static_cast<int>(v.state_count());
  std::vector<std::vector<int>> adj(n);
  for (const Transition& t : v.transitions()) adj[t.src].push_back(t.dst);
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  int next_index = 0;
  comp_count = 0;
  // Iterative Tarjan to avoid deep recursion.
  struct Frame {
    int node;
    std::size_t child;
  };
  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    std::vector<Frame> frames{{root, 0}};
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.child < adj[f.node].size()) {
        int w = adj[f.node][f.child++];
        if (index[w] == -1) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.node] = std::min(low[f.node], index[w]);
        }
      } else {
        if (low[f.node] == index[f.node]) {
          while (true) {
            int w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            comp[w] = comp_count;
            if (w == f.node) break;
          }
          ++comp_count;
        }
        int done = f.node;
        frames.pop_back();
        if (!frames.empty())
          low[frames.back().node] =
              std::min(low[frames.back().node], low[done]);
      }
    }
  }
  return comp;
}

}  // namespace detail

// Computes the SCC condensation and checks it forms a simple chain with
// exactly one bridge transition between consecutive components.
inline std::variant<SequentialDecomposition, NotSequential>
sequential_decompose(const Vass& v) {
  int comp_count = 0;
  std::vector<int> comp = detail::tarjan_scc(v, comp_count);
  if (comp_count == 0) return NotSequential{"no states"};
  // Count cross-component transitions per ordered component pair.
  std::map<std::pair<int, int>, std::vector<int>> cross;
  for (const Transition& t : v.transitions()) {
    if (comp[t.src] != comp[t.dst])
      cross[{comp[t.src], comp[t.dst]}].push_back(t.id);
  }
  // Chain order: Tarjan numbers SCCs in reverse topological order, so the
  // chain (if any) runs comp_count-1, ..., 0.
  std::vector<int> order(comp_count);
  for (int i = 0; i < comp_count; ++i) order[i] = comp_count - 1 - i;
  std::vector<int> bridges;
  for (int i = 0; i + 1 < comp_count; ++i) {
    auto it = cross.find({order[i], order[i + 1]});
    if (it == cross.end())
      return NotSequential{"condensation is not a chain: no bridge between "
                           "consecutive components"};
    if (it->second.size() != 1)
      return NotSequential{"parallel bridges between components"};
    bridges.push_back(it->second.front());
  }
  // Any cross edge other than the chain bridges breaks the shape.
  std::size_t cross_total = 0;
  for (const auto& [key, ids] : cross) cross_total += ids.size();
  if (cross_total != bridges.size())
    return NotSequential{"cross-component transitions outside the chain"};
  SequentialDecomposition d;
  d.components.resize(comp_count);
  d.component_of.resize(v.state_count());
  for (std::size_t q = 0; q < v.state_count(); ++q) {
    int pos = comp_count - 1 - comp[q];
    d.components[pos].push_back(static_cast<int>(q));
    d.component_of[q] = pos;
  }
  d.bridges = std::move(bridges);
  return d;
}

// Restriction of v to a subset of states (internal transitions only).
// State names are preserved; transition "origin" ids map back to v.
struct SubVass {
  Vass vass;
  std::vector<int> state_map;        // sub state -> original state
  std::map<int, int> state_rev;      // original -> sub
  std::vector<int> transition_map;   // sub transition -> original id
};

inline SubVass restrict_to_states(const Vass& v, const std::vector<int>& qs) {
  std::vector<std::string> names;
  names.reserve(qs.size());
  for (int q : qs) names.push_back(v.state_name(q));
  SubVass sub{Vass(v.dimension(), names), qs, {}, {}};
  for (std::size_t i = 0; i < qs.size(); ++i) sub.state_rev[qs[i]] = (int)i;
  for (const Transition& t : v.transitions()) {
    auto a = sub.state_rev.find(t.src);
    auto b = sub.state_rev.find(t.dst);
    if (a != sub.state_rev.end() && b != sub.state_rev.end()) {
      sub.vass.add_transition(a->second, t.effect, b->second);
      sub.transition_map.push_back(t.id);
    }
  }
  return sub;
}

// ---------------------------------------------------------------------------
// Simple cycles (elementary circuits) and geometric dimension
// ---------------------------------------------------------------------------

struct CycleBudgetExceeded : std::runtime_error {
  CycleBudgetExceeded()
      : std::runtime_error("simple-cycle enumeration cap exceeded") {}
};

namespace detail {

// Johnson-style elementary circuit enumeration.  Each circuit is reported
// through the sink as its transition-id sequence.  Raw circuit count is
// capped; desk-scale inputs stay far below the cap.
template <typename Fn>
inline void enumerate_circuits(const Vass& v, Fn&& emit,
                               std::size_t cap = 1000000) {
  int n = static_cast<int>(v.state_count());
  std::size_t count = 0;
  for (int start = 0; start < n; ++start) {
    // DFS from `start` over states >= start, never revisiting a state on
    // the current path; every return to `start` closes an elementary
    // circuit whose minimal state is `start`.
    std::vector<bool> on_path(n, false);
    std::vector<int> path_transitions;
    struct Frame {
      int state;
      std::vector<int> out;
      std::size_t next;
    };
    std::vector<Frame> stack;
    auto push_state = [&](int q) {
      std::vector<int> out;
      for (int tid : v.outgoing(q))
        if (v.transition(tid).dst >= start) out.push_back(tid);
      stack.push_back(Frame{q, std::move(out), 0});
      on_path[q] = true;
    };
    push_state(start);
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < f.out.size()) {
        int tid = f.out[f.next++];
        int w = v.transition(tid).dst;
        if (w == start) {
          path_transitions.push_back(tid);
          if (++count > cap) throw CycleBudgetExceeded();
          emit(path_transitions);
          path_transitions.pop_back();
        } else if (!on_path[w]) {
          path_transitions.push_back(tid);
          push_state(w);
        }
      } else {
        on_path[f.state] = false;
        stack.pop_back();
        if (!path_transitions.empty()) path_transitions.pop_back();
      }
    }
  }
}

}  // namespace detail

// Effects of all simple cycles (no repeated intermediate state),
// deduplicated by effect vector and sorted lexicographically.
inline std::vector<IntVec> simple_cycle_effects(const Vass& v,
                                                std::size_t cap = 1000000) {
  std::set<IntVec> effects;
  detail::enumerate_circuits(
      v,
      [&](const std::vector<int>& circuit) {
        IntVec e = zero_vec(v.dimension());
        for (int tid : circuit) e = add_vec(e, v.transition(tid).effect);
        effects.insert(std::move(e));
      },
      cap);
  return std::vector<IntVec>(effects.begin(), effects.end());
}

// Simple cycles with their transition sequences, deduplicated by effect
// (first witness per effect kept, deterministic order).
inline std::map<IntVec, std::vector<int>> simple_cycles_by_effect(
    const Vass& v, std::size_t cap = 1000000) {
  std::map<IntVec, std::vector<int>> out;
  detail::enumerate_circuits(
      v,
      [&](const std::vector<int>& circuit) {
        IntVec e = zero_vec(v.dimension());
        for (int tid : circuit) e = add_vec(e, v.transition(tid).effect);
        out.emplace(std::move(e), circuit);
      },
      cap);
  return out;
}

// Geometric dimension: rank of the span of simple-cycle effects.
inline int geometric_dimension(const Vass& v, std::size_t cap = 1000000) {
  return rank_of(simple_cycle_effects(v, cap));
}

}  // namespace vassr
