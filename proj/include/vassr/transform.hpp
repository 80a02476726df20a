#pragma once

// State-product transformations shared by the 2-D and 3-D reductions:
// tracking a bounded inner product <a,x> in the state, and folding a
// bounded coordinate into the state (keeping or dropping the coordinate
// from the counter vector).  All products carry a transition-id map back
// to the original system so witnesses can be pulled back.

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "vassr/basics.hpp"
#include "vassr/vass.hpp"

namespace vassr {

struct ProductVass {
  Vass vass;
  std::vector<int> transition_origin;  // product tid -> original tid
  std::optional<Configuration> source;
  std::optional<Configuration> target;  // absent when out of the bound

  // Pull a product witness back to original transition ids.
  WitnessPath pull_back(const WitnessPath& w, const Configuration& orig_s) const {
    WitnessPath out;
    out.source = orig_s;
    for (int tid : w.firings) out.firings.push_back(transition_origin.at(tid));
    return out;
  }
};

namespace detail {

inline std::string annotated_state(const std::string& base, const Int& b) {
  std::ostringstream os;
  os << base << "@" << b.get_str();
  return os.str();
}

inline void check_product_size(std::size_t states, const Int& range) {
  if (range > 200000 || Int(states) * range > 400000)
    throw std::runtime_error("state product too large for desk scale");
}

}  // namespace detail

// States <q,b> with b = <a,x> ranging over [-B, B]; transitions
// (<q,b>, v, <q',b + <a,v>>).  Dimension is unchanged; every cycle of the
// product has an effect orthogonal to a, so the product is geometrically
// <= 2-dimensional.  Configurations map bijectively (b is determined by
// the counters), hence path lengths are preserved exactly.
inline ProductVass trim_inner_product(const Vass& v, const IntVec& a,
                                      const Int& B, const Configuration& s,
                                      const Configuration& t) {
  if (a.size() != v.dimension())
    throw std::invalid_argument("trim_inner_product: normal dim mismatch");
  if (B < 0) throw std::invalid_argument("trim_inner_product: B < 0");
  detail::check_product_size(v.state_count(), 2 * B + 1);
  std::vector<std::string> names;
  std::map<std::pair<int, Int>, int> idx;
  for (std::size_t q = 0; q < v.state_count(); ++q) {
    for (Int b = -B; b <= B; b += 1) {
      idx[{(int)q, b}] = (int)names.size();
      names.push_back(detail::annotated_state(v.state_name((int)q), b));
    }
  }
  ProductVass out{Vass(v.dimension(), names), {}, std::nullopt, std::nullopt};
  for (std::size_t q = 0; q < v.state_count(); ++q) {
    for (Int b = -B; b <= B; b += 1) {
      for (int tid : v.outgoing((int)q)) {
        const Transition& tr = v.transition(tid);
        Int b2 = b + dot(a, tr.effect);
        if (b2 < -B || b2 > B) continue;
        out.vass.add_transition(idx.at({(int)q, b}), tr.effect,
                                idx.at({tr.dst, b2}));
        out.transition_origin.push_back(tid);
      }
    }
  }
  Int bs = dot(a, s.vector), bt = dot(a, t.vector);
  if (bs >= -B && bs <= B)
    out.source = Configuration{idx.at({s.state, bs}), s.vector, s.mode};
  if (bt >= -B && bt <= B)
    out.target = Configuration{idx.at({t.state, bt}), t.vector, t.mode};
  return out;
}

// States <q,c> with c = x_j in [0, B]; the coordinate stays in the vector
// as well (the state only mirrors it, bounded).  Paths of the original
// whose j-th coordinate never exceeds B correspond bijectively.
inline ProductVass fold_coordinate_keep(const Vass& v, std::size_t j,
                                        const Int& B, const Configuration& s,
                                        const Configuration& t) {
  if (j >= v.dimension())
    throw std::invalid_argument("fold_coordinate_keep: bad coordinate");
  detail::check_product_size(v.state_count(), B + 1);
  std::vector<std::string> names;
  std::map<std::pair<int, Int>, int> idx;
  for (std::size_t q = 0; q < v.state_count(); ++q) {
    for (Int c = 0; c <= B; c += 1) {
      idx[{(int)q, c}] = (int)names.size();
      names.push_back(detail::annotated_state(v.state_name((int)q), c));
    }
  }
  ProductVass out{Vass(v.dimension(), names), {}, std::nullopt, std::nullopt};
  for (std::size_t q = 0; q < v.state_count(); ++q) {
    for (Int c = 0; c <= B; c += 1) {
      for (int tid : v.outgoing((int)q)) {
        const Transition& tr = v.transition(tid);
        Int c2 = c + tr.effect[j];
        if (c2 < 0 || c2 > B) continue;
        out.vass.add_transition(idx.at({(int)q, c}), tr.effect,
                                idx.at({tr.dst, c2}));
        out.transition_origin.push_back(tid);
      }
    }
  }
  if (s.vector[j] <= B)
    out.source = Configuration{idx.at({s.state, s.vector[j]}), s.vector, s.mode};
  if (t.vector[j] <= B)
    out.target = Configuration{idx.at({t.state, t.vector[j]}), t.vector, t.mode};
  return out;
}

// States <q,c> with c = x_j in [0, B]; coordinate j is removed from the
// vector (the state carries it exactly).  Produces a (d-1)-dimensional
// VASS; configurations with x_j <= B map bijectively.
inline ProductVass fold_coordinate_drop(const Vass& v, std::size_t j,
                                        const Int& B, const Configuration& s,
                                        const Configuration& t) {
  if (j >= v.dimension())
    throw std::invalid_argument("fold_coordinate_drop: bad coordinate");
  detail::check_product_size(v.state_count(), B + 1);
  std::vector<std::string> names;
  std::map<std::pair<int, Int>, int> idx;
  for (std::size_t q = 0; q < v.state_count(); ++q) {
    for (Int c = 0; c <= B; c += 1) {
      idx[{(int)q, c}] = (int)names.size();
      names.push_back(detail::annotated_state(v.state_name((int)q), c));
    }
  }
  auto drop = [&](const IntVec& x) {
    IntVec y;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (i != j) y.push_back(x[i]);
    return y;
  };
  ProductVass out{Vass(v.dimension() - 1, names), {}, std::nullopt,
                  std::nullopt};
  for (std::size_t q = 0; q < v.state_count(); ++q) {
    for (Int c = 0; c <= B; c += 1) {
      for (int tid : v.outgoing((int)q)) {
        const Transition& tr = v.transition(tid);
        Int c2 = c + tr.effect[j];
        if (c2 < 0 || c2 > B) continue;
        out.vass.add_transition(idx.at({(int)q, c}), drop(tr.effect),
                                idx.at({tr.dst, c2}));
        out.transition_origin.push_back(tid);
      }
    }
  }
  if (s.vector[j] <= B)
    out.source =
        Configuration{idx.at({s.state, s.vector[j]}), drop(s.vector), s.mode};
  if (t.vector[j] <= B)
    out.target =
        Configuration{idx.at({t.state, t.vector[j]}), drop(t.vector), t.mode};
  return out;
}

}  // namespace vassr
