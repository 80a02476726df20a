// Command-line surface: parses the VASS text format and exposes the
// library's solvers, oracles, transformations, and bound calculators as
// subcommands with JSON or human-readable output.
//
// Exit codes: 0 conclusive, 2 inconclusive, 1 usage/parse error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "vassr/io.hpp"
#include "vassr/oracle.hpp"
#include "vassr/reach3.hpp"
#include "vassr/semilinear.hpp"
#include "vassr/slps.hpp"
#include "vassr/vass.hpp"

using json = nlohmann::ordered_json;
using namespace vassr;

namespace {

struct CommonOpts {
  std::string file;
  std::string format = "json";
  long cap_counter = 256;
  long cap_length = 256;
  long cap_nodes = 1000000;
  unsigned long seed = 1;
  std::string constants_file;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

SearchBudget budget_of(const CommonOpts& o) {
  SearchBudget b;
  b.counter_cap = Int(o.cap_counter);
  b.length_cap = Int(o.cap_length);
  b.node_cap = (std::size_t)o.cap_nodes;
  return b;
}

SolverConstants constants_of(const CommonOpts& o) {
  SolverConstants cfg;
  if (o.constants_file.empty()) return cfg;
  std::ifstream in(o.constants_file);
  if (!in) throw std::runtime_error("cannot open " + o.constants_file);
  json j = json::parse(in);
  if (j.contains("rackoff_constant"))
    cfg.rackoff_constant = Int(j["rackoff_constant"].get<std::string>());
  if (j.contains("bound_c")) cfg.bound_c = Int(j["bound_c"].get<std::string>());
  if (j.contains("gfi_B")) cfg.gfi_B = Int(j["gfi_B"].get<std::string>());
  if (j.contains("distance_constant"))
    cfg.distance_constant = Int(j["distance_constant"].get<std::string>());
  return cfg;
}

json vec_json(const IntVec& v) {
  json a = json::array();
  for (const Int& x : v) a.push_back(x.get_str());
  return a;
}

json witness_json(const WitnessPath& w) {
  json a = json::array();
  for (int tid : w.firings) a.push_back(tid);
  return a;
}

json base_doc() {
  json j;
  j["schema"] = 1;
  return j;
}

int emit(const json& j, const CommonOpts& o, int code) {
  if (o.format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    for (auto it = j.begin(); it != j.end(); ++it)
      std::cout << it.key() << ": " << it.value().dump() << "\n";
  }
  return code;
}

ParsedVass load(const CommonOpts& o, bool need_init, bool need_target) {
  ParsedVass p = parse_vass_text(read_input(o.file));
  if (need_init && !p.init) throw std::runtime_error("missing init line");
  if (need_target && !p.target) throw std::runtime_error("missing target line");
  return p;
}

json budgets_json(const CommonOpts& o) {
  json j;
  j["counter_cap"] = o.cap_counter;
  j["length_cap"] = o.cap_length;
  j["node_cap"] = o.cap_nodes;
  return j;
}

int cmd_reach(const CommonOpts& o) {
  ParsedVass p = load(o, true, true);
  json j = base_doc();
  j["budgets"] = budgets_json(o);
  if (p.vass.dimension() == 3) {
    ReachPolicy policy;
    policy.counter_cap_start = Int(o.cap_counter);
    policy.length_cap_start = Int(o.cap_length);
    policy.node_cap = (std::size_t)o.cap_nodes;
    Reach3Result r = decide_reach3(p.vass, *p.init, *p.target, policy,
                                   constants_of(o));
    j["verdict"] = to_string(r.verdict);
    j["note"] = r.note;
    if (r.classification) {
      json c;
      c["verdict"] = to_string(r.classification->verdict);
      c["wide"] = r.classification->wide;
      c["forward_diagonal"] = r.classification->forward_diagonal;
      c["backward_diagonal"] = r.classification->backward_diagonal;
      c["geometric_dimension"] = r.classification->geometric_dimension;
      j["classification"] = c;
    }
    if (r.witness) {
      if (!replays_to(*r.witness, p.vass, *p.target))
        throw std::runtime_error("internal error: witness fails to replay");
      j["witness"] = witness_json(*r.witness);
      j["length"] = r.witness->length();
    }
    return emit(j, o, r.verdict == ReachVerdict::Inconclusive ? 2 : 0);
  }
  ReachResult r = bfs_reach(p.vass, *p.init, *p.target, budget_of(o));
  j["verdict"] = r.verdict == SearchVerdict::Reachable ? "reachable"
                 : r.verdict == SearchVerdict::ExhaustedAllStates
                     ? "unreachable"
                     : "inconclusive";
  if (r.witness) {
    j["witness"] = witness_json(*r.witness);
    j["length"] = r.witness->length();
  }
  return emit(j, o, r.verdict == SearchVerdict::NotWithinBudget ? 2 : 0);
}

int cmd_cover(const CommonOpts& o) {
  ParsedVass p = load(o, true, true);
  CoverResult r = coverable(p.vass, *p.init, *p.target, budget_of(o));
  json j = base_doc();
  j["budgets"] = budgets_json(o);
  j["verdict"] = r.verdict == CoverVerdict::Coverable ? "coverable"
                 : r.verdict == CoverVerdict::NotCoverable ? "not-coverable"
                                                           : "inconclusive";
  if (r.witness) {
    j["witness"] = witness_json(*r.witness);
    j["length"] = r.witness->length();
  }
  return emit(j, o, r.verdict == CoverVerdict::NotWithinBudget ? 2 : 0);
}

int cmd_zreach(const CommonOpts& o) {
  ParsedVass p = load(o, true, true);
  json j = base_doc();
  try {
    ZReachResult r = z_reach_exact(p.vass, *p.init, *p.target);
    j["verdict"] = r.reachable ? "reachable" : "unreachable";
    if (r.witness) {
      j["witness"] = witness_json(*r.witness);
      j["implied_length"] = r.implied_length.get_str();
    }
    return emit(j, o, 0);
  } catch (const std::runtime_error& e) {
    j["verdict"] = "inconclusive";
    j["note"] = e.what();
    return emit(j, o, 2);
  }
}

int cmd_classify(const CommonOpts& o) {
  ParsedVass p = load(o, true, true);
  auto d = sequential_decompose(p.vass);
  json j = base_doc();
  if (!std::holds_alternative<SequentialDecomposition>(d)) {
    j["error"] = "not sequential: " + std::get<NotSequential>(d).reason;
    return emit(j, o, 2);
  }
  Classification cls = classify(p.vass, std::get<SequentialDecomposition>(d),
                                *p.init, *p.target, budget_of(o));
  j["verdict"] = to_string(cls.verdict);
  j["wide"] = cls.wide;
  j["forward_diagonal"] = cls.forward_diagonal;
  j["backward_diagonal"] = cls.backward_diagonal;
  j["geometric_dimension"] = cls.geometric_dimension;
  j["conclusive"] = cls.conclusive;
  if (cls.delta) j["delta"] = vec_json(*cls.delta);
  if (cls.delta_prime) j["delta_prime"] = vec_json(*cls.delta_prime);
  return emit(j, o, cls.conclusive ? 0 : 2);
}

int cmd_decompose(const CommonOpts& o) {
  ParsedVass p = load(o, false, false);
  auto d = sequential_decompose(p.vass);
  json j = base_doc();
  if (!std::holds_alternative<SequentialDecomposition>(d)) {
    j["sequential"] = false;
    j["reason"] = std::get<NotSequential>(d).reason;
    return emit(j, o, 0);
  }
  const auto& sd = std::get<SequentialDecomposition>(d);
  j["sequential"] = true;
  json comps = json::array();
  for (const auto& comp : sd.components) {
    json c = json::array();
    for (int q : comp) c.push_back(p.vass.state_name(q));
    comps.push_back(c);
  }
  j["components"] = comps;
  json bridges = json::array();
  for (int b : sd.bridges) bridges.push_back(b);
  j["bridges"] = bridges;
  return emit(j, o, 0);
}

int cmd_cone(const CommonOpts& o) {
  ParsedVass p = load(o, false, false);
  auto d = sequential_decompose(p.vass);
  json j = base_doc();
  if (!std::holds_alternative<SequentialDecomposition>(d)) {
    j["error"] = "not sequential: " + std::get<NotSequential>(d).reason;
    return emit(j, o, 2);
  }
  const auto& sd = std::get<SequentialDecomposition>(d);
  std::vector<OpenCone> cones = component_cones(p.vass, sd);
  json cj = json::array();
  for (const OpenCone& c : cones) {
    json g = json::array();
    for (const IntVec& v : c.generators) g.push_back(vec_json(v));
    cj.push_back(g);
  }
  j["component_cones"] = cj;
  if (p.vass.dimension() == 3) {
    j["wide"] = is_wide(p.vass, sd);
    OpenCone seq = detail::seq_cone_of(cones);
    json g = json::array();
    for (const IntVec& v : seq.generators) g.push_back(vec_json(v));
    j["sequential_cone"] = g;
  }
  return emit(j, o, 0);
}

int cmd_trim(const CommonOpts& o) {
  ParsedVass p = load(o, true, true);
  json j = base_doc();
  try {
    TrimGeom2Result r =
        trim_geom2(p.vass, *p.init, *p.target, Int(o.cap_counter));
    j["normal"] = vec_json(r.normal);
    j["dropped_coordinate"] = r.dropped ? json((long)r.coord) : json();
    j["vass"] = serialize_vass(r.product.vass, r.product.source,
                               r.product.target);
    j["source_mapped"] = r.product.source.has_value();
    j["target_mapped"] = r.product.target.has_value();
    return emit(j, o, 0);
  } catch (const NotGeom2&) {
    j["error"] = "geometric dimension exceeds 2";
    return emit(j, o, 2);
  }
}

int cmd_split(const CommonOpts& o) {
  ParsedVass p = load(o, true, true);
  std::vector<ProductVass> parts =
      case3_split(p.vass, *p.init, *p.target, Int(o.cap_counter));
  json j = base_doc();
  json arr = json::array();
  for (const ProductVass& pv : parts) {
    json e;
    e["vass"] = serialize_vass(pv.vass, pv.source, pv.target);
    e["source_mapped"] = pv.source.has_value();
    e["target_mapped"] = pv.target.has_value();
    arr.push_back(e);
  }
  j["folds"] = arr;
  return emit(j, o, 0);
}

int cmd_reduce(const CommonOpts& o) {
  ParsedVass p = load(o, true, true);
  auto d = sequential_decompose(p.vass);
  json j = base_doc();
  if (!std::holds_alternative<SequentialDecomposition>(d)) {
    j["error"] = "not sequential";
    return emit(j, o, 2);
  }
  const auto& sd = std::get<SequentialDecomposition>(d);
  auto L = entry_linear_set(p.vass, sd, *p.init, budget_of(o));
  if (!L) {
    j["error"] = "entry set not computable within budget";
    return emit(j, o, 2);
  }
  j["entry_base"] = vec_json(L->base);
  json pj = json::array();
  for (const IntVec& r : L->periods) pj.push_back(vec_json(r));
  j["entry_periods"] = pj;
  ReducedSystem red = reduce_component(p.vass, sd, *L, *p.target);
  j["vass"] = serialize_vass(red.vass, red.source, red.target);
  return emit(j, o, 0);
}

int cmd_approx(const CommonOpts& o) {
  // Linear-set over-approximation of the reachability set at the target
  // state, with a sandwich check against the enumerated ground truth.
  ParsedVass p = load(o, true, true);
  ReachSet rs = reach_set(p.vass, *p.init, budget_of(o));
  json j = base_doc();
  if (!rs.complete) {
    j["error"] = "reach set not complete within budget";
    return emit(j, o, 2);
  }
  std::vector<IntVec> at_target;
  for (const auto& [state, vec] : rs.configurations)
    if (state == p.target->state) at_target.push_back(vec);
  if (at_target.empty()) {
    j["reachable_at_target"] = 0;
    return emit(j, o, 0);
  }
  std::sort(at_target.begin(), at_target.end(), lex_less);
  IntVec base = at_target.front();
  std::vector<IntVec> periods;
  for (std::size_t i = 1; i < at_target.size(); ++i) {
    IntVec diff = sub_vec(at_target[i], base);
    if (!all_nonneg(diff)) continue;
    std::map<IntVec, bool> memo;
    if (!detail::in_pstar(periods, diff, memo)) periods.push_back(diff);
  }
  LinearSet L(base, periods);
  j["base"] = vec_json(L.base);
  json pj = json::array();
  for (const IntVec& r : L.periods) pj.push_back(vec_json(r));
  j["periods"] = pj;
  bool upper = true;
  for (const IntVec& x : at_target)
    if (!member(L, x)) upper = false;
  j["covers_enumeration"] = upper;
  j["reachable_at_target"] = at_target.size();
  return emit(j, o, 0);
}

int cmd_oracle(const CommonOpts& o) {
  ParsedVass p = load(o, true, false);
  ReachSet rs = reach_set(p.vass, *p.init, budget_of(o));
  json j = base_doc();
  j["complete"] = rs.complete;
  j["budgets"] = budgets_json(o);
  json arr = json::array();
  for (const auto& [state, vec] : rs.configurations) {
    json e;
    e["state"] = p.vass.state_name(state);
    e["vector"] = vec_json(vec);
    arr.push_back(e);
  }
  j["configurations"] = arr;
  return emit(j, o, rs.complete ? 0 : 2);
}

int cmd_bounds(const CommonOpts& o, long M, int k) {
  json j = base_doc();
  SolverConstants cfg = constants_of(o);
  BoundValue b = bound_h(Int(M), k, cfg);
  j["M"] = M;
  j["k"] = k;
  j["symbolic"] = b.symbolic;
  j["exponent"] = b.exponent.get_str();
  if (!b.symbolic) j["value"] = b.value.get_str();
  if (b.recurrence_value)
    j["recurrence_value"] = b.recurrence_value->get_str();
  j["recurrence_exponent"] = b.recurrence_exponent.get_str();
  Int m = std::max(Int(M), Int(2));
  RackoffBudget rb = rackoff_budget(m, m, m, 3);
  json rj;
  json H = json::array(), L = json::array(), C = json::array();
  for (const Int& x : rb.H) H.push_back(x.get_str());
  for (const Int& x : rb.L) L.push_back(x.get_str());
  for (const Int& x : rb.ceiling) C.push_back(x.get_str());
  rj["H"] = H;
  rj["L"] = L;
  rj["ceiling"] = C;
  j["rackoff"] = rj;
  return emit(j, o, 0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reachability toolkit for low-dimensional VASS"};
  app.require_subcommand(1);
  CommonOpts o;
  long bounds_M = 2;
  int bounds_k = 1;

  auto add_common = [&](CLI::App* sub, bool with_file) {
    if (with_file)
      sub->add_option("file", o.file, "input file ('-' for stdin)")
          ->required();
    sub->add_option("--cap-counter", o.cap_counter, "counter cap");
    sub->add_option("--cap-length", o.cap_length, "path length cap");
    sub->add_option("--cap-nodes", o.cap_nodes, "search node cap");
    sub->add_option("--seed", o.seed, "generator seed");
    sub->add_option("--constants", o.constants_file,
                    "polynomial constants JSON file");
    sub->add_option("--format", o.format, "output format: json|text")
        ->check(CLI::IsMember({"json", "text"}));
  };

  for (const char* name :
       {"reach", "cover", "zreach", "classify", "decompose", "cone", "trim",
        "split", "reduce", "approx", "oracle"})
    add_common(app.add_subcommand(name, name), true);
  CLI::App* bounds = app.add_subcommand("bounds", "bound calculators");
  add_common(bounds, false);
  bounds->add_option("--M", bounds_M, "magnitude")->required();
  bounds->add_option("--k", bounds_k, "component count")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    std::string sub = app.get_subcommands().front()->get_name();
    if (sub == "reach") return cmd_reach(o);
    if (sub == "cover") return cmd_cover(o);
    if (sub == "zreach") return cmd_zreach(o);
    if (sub == "classify") return cmd_classify(o);
    if (sub == "decompose") return cmd_decompose(o);
    if (sub == "cone") return cmd_cone(o);
    if (sub == "trim") return cmd_trim(o);
    if (sub == "split") return cmd_split(o);
    if (sub == "reduce") return cmd_reduce(o);
    if (sub == "approx") return cmd_approx(o);
    if (sub == "oracle") return cmd_oracle(o);
    if (sub == "bounds") return cmd_bounds(o, bounds_M, bounds_k);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
