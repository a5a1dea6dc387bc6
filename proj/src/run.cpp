#include "achord/run.hpp"

#include <chrono>
#include <map>
#include <set>

#include <json.hpp>

#include "achord/asteroidal.hpp"
#include "achord/chordal.hpp"
#include "achord/dp.hpp"
#include "achord/fillin.hpp"
#include "achord/kernels.hpp"
#include "achord/oracle.hpp"

namespace achord {

using json = nlohmann::json;

namespace {

const std::set<std::string> kSolveProblems = {
    "wis", "wvc", "oct", "bipartite-subgraph", "wfvs", "induced-forest",
    "d-colorable", "h-colorable", "d-degenerate", "coloring", "cvc"};

const std::set<std::string> kKernelVariants = {"split-is", "interval-is", "turing-wclique"};

Error bad(const std::string& what) { return Error(ErrorCode::invalid_argument, what); }

json labels_json(const Graph& g, const VertexSet& s) {
  json out = json::array();
  for (Vertex v : s) out.push_back(g.label(v));
  return out;
}

json pairs_json(const Graph& g, const EdgeSet& pairs) {
  json out = json::array();
  for (const auto& p : pairs) out.push_back({g.label(p.u), g.label(p.v)});
  return out;
}

int non_edge_count(const Graph& g) {
  const long long n = g.size();
  return static_cast<int>(n * (n - 1) / 2 - g.edge_count());
}

WeightMap input_weights(const RunConfig& cfg, const ParsedGraph& in) {
  if (!cfg.weights_path.empty()) return parse_weights_text(read_file(cfg.weights_path), in.graph);
  if (in.weights) return *in.weights;
  return unit_weights(in.graph.size());
}

struct BuiltDecomposition {
  NiceTreeDecomposition nice;
  std::optional<Modulator> modulator;
  bool within_budget = true;
};

BuiltDecomposition build_decomposition(const RunConfig& cfg, const Graph& g) {
  BuiltDecomposition out;
  if (!cfg.decomposition_path.empty()) {
    out.nice = nice_from_text(read_file(cfg.decomposition_path), g);
    require_valid_nice(out.nice, g);
    return out;
  }
  std::optional<AlmostChordalDecomposition> built;
  if (cfg.k) built = kalmost_nice_decomposition(g, *cfg.k);
  if (!built) {
    // Budget exceeded or not given: any triangulation still yields a valid
    // decomposition, only the bag deficiency grows.
    out.within_budget = !cfg.k.has_value();
    built = decomposition_from_modulator(g, minimal_triangulation(g));
  }
  out.nice = std::move(built->decomposition);
  out.modulator = std::move(built->modulator);
  return out;
}

json decomposition_summary(const BuiltDecomposition& b, const Graph& g) {
  json out;
  out["nodes"] = b.nice.nodes.size();
  out["max_deficiency"] = b.nice.max_deficiency();
  out["within_budget"] = b.within_budget;
  if (b.modulator) out["modulator"] = pairs_json(g, b.modulator->pairs);
  return out;
}

json assignment_json(const Graph& g, const VertexSet& s, const std::vector<int>& values) {
  json out = json::array();
  for (std::size_t i = 0; i < s.size() && i < values.size(); ++i) out.push_back({g.label(s[i]), values[i]});
  return out;
}

// Exhaustive value comparable to the solver value; coloring maps to 1/0.
Weight oracle_value(const std::string& problem, const Graph& g, const WeightMap& w, const RunConfig& cfg,
                    const Graph* pattern) {
  const Weight total = total_weight(w, all_vertices(g));
  auto run = [&](OracleProblem p, int d = 0) {
    OracleParams params;
    params.d = d;
    params.pattern = pattern;
    return brute_force(p, g, w, params).value;
  };
  if (problem == "wis") return run(OracleProblem::max_wis);
  if (problem == "wvc") return total - run(OracleProblem::max_wis);
  if (problem == "bipartite-subgraph") return run(OracleProblem::max_d_colorable, 2);
  if (problem == "oct") return total - run(OracleProblem::max_d_colorable, 2);
  if (problem == "induced-forest") return run(OracleProblem::max_d_degenerate, 1);
  if (problem == "wfvs") return total - run(OracleProblem::max_d_degenerate, 1);
  if (problem == "d-colorable") return run(OracleProblem::max_d_colorable, *cfg.d);
  if (problem == "d-degenerate") return run(OracleProblem::max_d_degenerate, *cfg.d);
  if (problem == "h-colorable") return run(OracleProblem::max_h_colorable);
  if (problem == "cvc") return run(OracleProblem::min_cvc);
  if (problem == "coloring") return brute_force(OracleProblem::chromatic_number, g).value <= *cfg.ell ? 1 : 0;
  throw Error(ErrorCode::internal, "no oracle for " + problem);
}

void run_fillin(const RunConfig& cfg, const Graph& g, json& rec) {
  const std::string method = cfg.problem.empty() ? "exact" : cfg.problem;
  std::optional<Modulator> a;
  if (method == "exact") {
    a = exact_fillin(g, cfg.k ? *cfg.k : non_edge_count(g));
  } else if (method == "minimal") {
    a = minimal_triangulation(g);
  } else {
    a = approx_fillin(g, *cfg.k);
  }
  rec["result"]["method"] = method;
  if (a) {
    rec["result"]["modulator"] = pairs_json(g, a->pairs);
    rec["result"]["size"] = a->size();
    rec["verdict"] = "in-class";
  } else {
    rec["verdict"] = "not-in-class";
  }
}

void run_decompose(const RunConfig& cfg, const Graph& g, json& rec) {
  auto built = kalmost_nice_decomposition(g, cfg.k ? *cfg.k : non_edge_count(g));
  if (!built) {
    rec["verdict"] = "not-in-class";
    return;
  }
  auto& r = rec["result"];
  r["modulator"] = pairs_json(g, built->modulator.pairs);
  r["nodes"] = built->decomposition.nodes.size();
  r["root"] = built->decomposition.root;
  r["max_deficiency"] = built->decomposition.max_deficiency();
  r["decomposition"] = nice_to_text(built->decomposition, g);
  rec["verdict"] = "in-class";
}

void run_solve(const RunConfig& cfg, const ParsedGraph& in, json& rec) {
  const Graph& g = in.graph;
  const WeightMap w = input_weights(cfg, in);
  std::optional<ParsedGraph> pattern;
  if (cfg.problem == "h-colorable") pattern = parse_graph_file(cfg.pattern_path);
  const BuiltDecomposition b = build_decomposition(cfg, g);
  rec["decomposition"] = decomposition_summary(b, g);
  auto& r = rec["result"];
  const std::string& p = cfg.problem;
  Weight value = 0;
  if (p == "coloring") {
    ColoringStats stats;
    const Solution s = solve_coloring(g, static_cast<int>(*cfg.ell), b.nice, &stats);
    r["colorable"] = s.feasible;
    if (s.feasible) r["coloring"] = assignment_json(g, all_vertices(g), s.assignment);
    std::size_t widest = 0;
    for (const auto& bag : stats.bags) widest = std::max(widest, bag.partitions);
    r["max_partitions"] = widest;
    rec["verdict"] = s.feasible ? "yes" : "no";
    value = s.feasible ? 1 : 0;
  } else {
    Solution s;
    if (auto classic = classic_problem_from_name(p)) {
      s = solve_classic(*classic, g, w, b.nice);
    } else if (p == "d-colorable") {
      s = solve_d_colorable(g, w, *cfg.d, b.nice);
    } else if (p == "d-degenerate") {
      s = solve_d_degenerate(g, w, *cfg.d, b.nice);
    } else if (p == "h-colorable") {
      s = solve_h_colorable(g, w, pattern->graph, b.nice);
    } else {
      s = solve_cvc(g, w, b.nice);
    }
    r["value"] = s.value;
    r["witness"] = labels_json(g, s.vertices);
    if (!s.assignment.empty()) {
      json a = json::array();
      for (std::size_t i = 0; i < s.vertices.size() && i < s.assignment.size(); ++i) {
        const int image = s.assignment[i];
        a.push_back({g.label(s.vertices[i]), pattern ? pattern->graph.label(image) : image});
      }
      r["assignment"] = a;
    }
    if (!s.ordering.empty()) r["ordering"] = labels_json(g, s.ordering);
    rec["verdict"] = "solved";
    value = s.value;
  }
  if (cfg.oracle) {
    const Weight expected = oracle_value(p, g, w, cfg, pattern ? &pattern->graph : nullptr);
    rec["oracle"] = {{"value", expected}, {"agrees", expected == value}};
  }
}

json trace_json(const std::vector<RuleRecord>& trace) {
  json out = json::array();
  for (const auto& r : trace) {
    json e;
    e["rule"] = r.rule;
    if (!r.note.empty()) e["note"] = r.note;
    e["vertices"] = r.vertices;
    e["removed"] = r.removed;
    e["threshold_delta"] = r.threshold_delta;
    if (r.rule == "construct") {
      e["x"] = r.x_labels;
      e["components"] = r.components;
      e["component_weights"] = r.component_weights;
      e["label_base"] = r.label_base;
    }
    out.push_back(std::move(e));
  }
  return out;
}

void emit_instance(const KernelInstance& inst, json& rec) {
  rec["verdict"] = kernel_verdict_name(inst.verdict);
  rec["trace"] = trace_json(inst.trace);
  if (inst.verdict != KernelVerdict::reduced) return;
  auto& out = rec["result"]["instance"];
  out["graph"] = graph_to_text(inst.graph, inst.weights);
  out["labels"] = inst.graph.labels();
  out["vertices"] = inst.graph.size();
  out["threshold"] = inst.threshold;
}

void run_kernel(const RunConfig& cfg, const ParsedGraph& in, json& rec) {
  const Graph& g = in.graph;
  if (cfg.problem == "split-is") {
    emit_instance(split_is_kernel(g, *cfg.ell, *cfg.k).instance, rec);
  } else if (cfg.problem == "interval-is") {
    const IntervalKernelResult res = interval_is_compress(g, *cfg.ell, *cfg.k);
    emit_instance(res.instance, rec);
    rec["result"]["irrelevant_checks"] = res.irrelevant_checks;
    rec["result"]["remainder_chordal_ok"] = res.remainder_chordal_ok;
  } else {
    const WeightMap w = input_weights(cfg, in);
    const TuringKernelResult res = turing_kernel_wclique(g, w, *cfg.threshold, *cfg.k);
    rec["verdict"] = kernel_verdict_name(res.verdict);
    auto& r = rec["result"];
    r["x"] = res.x_labels;
    r["queries"] = json::array();
    for (const auto& q : res.queries) {
      r["queries"].push_back({{"labels", q.labels}, {"threshold", q.threshold}, {"answer", q.answer}});
    }
  }
}

void run_validate(const RunConfig& cfg, const Graph& g, json& rec) {
  auto& r = rec["result"];
  if (!cfg.decomposition_path.empty()) {
    const NiceTreeDecomposition t = nice_from_text(read_file(cfg.decomposition_path), g);
    const auto violation = validate_nice(t, g);
    r["valid"] = !violation;
    r["violation"] = violation ? json(*violation) : json(nullptr);
    r["nodes"] = t.nodes.size();
    if (!violation) r["max_deficiency"] = t.max_deficiency();
    rec["verdict"] = violation ? "invalid" : "valid";
    return;
  }
  const ChordalityResult c = is_chordal(g);
  r["chordal"] = c.chordal;
  if (c.chordal) {
    r["peo"] = labels_json(g, c.peo);
    const auto at = find_AT(g);
    r["interval"] = !at.has_value();
    if (at) r["asteroidal_triple"] = labels_json(g, VertexSet(at->begin(), at->end()));
  } else {
    r["chordless_cycle"] = labels_json(g, c.cycle);
    r["interval"] = false;
  }
  r["split"] = is_split_graph(g);
  r["degeneracy"] = degeneracy_ordering(g).degeneracy;
  r["components"] = connected_components(g).size();
  rec["verdict"] = "valid";
}

void flatten(const json& j, const std::string& prefix, std::string& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    }
    return;
  }
  out += prefix + ": ";
  out += j.is_string() ? j.get<std::string>() : j.dump();
  out += '\n';
}

}  // namespace

std::optional<Verb> verb_from_name(const std::string& name) {
  static const std::map<std::string, Verb> names = {{"fillin", Verb::fillin},
                                                    {"decompose", Verb::decompose},
                                                    {"solve", Verb::solve},
                                                    {"kernel", Verb::kernel},
                                                    {"validate", Verb::validate}};
  auto it = names.find(name);
  if (it == names.end()) return std::nullopt;
  return it->second;
}

const char* verb_name(Verb v) {
  switch (v) {
    case Verb::fillin: return "fillin";
    case Verb::decompose: return "decompose";
    case Verb::solve: return "solve";
    case Verb::kernel: return "kernel";
    case Verb::validate: return "validate";
  }
  return "?";
}

void validate_config(const RunConfig& cfg) {
  if (cfg.k && *cfg.k < 0) throw bad("k must be non-negative");
  if (cfg.ell && *cfg.ell < 0) throw bad("ell must be non-negative");
  switch (cfg.verb) {
    case Verb::fillin:
      if (!cfg.problem.empty() && cfg.problem != "exact" && cfg.problem != "minimal" && cfg.problem != "approx") {
        throw bad("fillin method must be exact, minimal or approx");
      }
      if (cfg.problem == "approx" && !cfg.k) throw bad("fillin approx requires --k");
      break;
    case Verb::decompose:
    case Verb::validate:
      if (!cfg.problem.empty()) throw bad(std::string(verb_name(cfg.verb)) + " takes no problem");
      break;
    case Verb::solve: {
      const std::string& p = cfg.problem;
      if (!kSolveProblems.count(p)) throw bad("unknown solve problem '" + p + "'");
      if (p == "d-colorable" && (!cfg.d || *cfg.d < 1)) throw bad("d-colorable requires --d >= 1");
      if (p == "d-degenerate" && (!cfg.d || *cfg.d < 0)) throw bad("d-degenerate requires --d >= 0");
      if (p == "h-colorable" && cfg.pattern_path.empty()) throw bad("h-colorable requires --pattern");
      if (p == "coloring" && (!cfg.ell || *cfg.ell < 1)) throw bad("coloring requires --ell >= 1");
      if (p == "coloring" && *cfg.ell > 64) throw bad("coloring supports --ell up to 64");
      break;
    }
    case Verb::kernel:
      if (!kKernelVariants.count(cfg.problem)) throw bad("unknown kernel variant '" + cfg.problem + "'");
      if (!cfg.k) throw bad("kernel requires --k");
      if (cfg.problem != "turing-wclique" && !cfg.ell) throw bad(cfg.problem + " requires --ell");
      if (cfg.problem == "turing-wclique" && !cfg.threshold) throw bad("turing-wclique requires --W");
      break;
  }
}

RunReport run(const RunConfig& cfg, const ParsedGraph& in) {
  validate_config(cfg);
  const auto start = std::chrono::steady_clock::now();
  const Graph& g = in.graph;
  json rec;
  rec["verb"] = verb_name(cfg.verb);
  rec["input"] = {{"digest", in.digest},
                  {"vertices", g.size()},
                  {"edges", g.edge_count()},
                  {"weighted", in.weights.has_value() || !cfg.weights_path.empty()}};
  json params = json::object();
  if (!cfg.problem.empty()) params["problem"] = cfg.problem;
  if (cfg.k) params["k"] = *cfg.k;
  if (cfg.d) params["d"] = *cfg.d;
  if (cfg.ell) params["ell"] = *cfg.ell;
  if (cfg.threshold) params["W"] = *cfg.threshold;
  if (cfg.oracle) params["oracle"] = true;
  params["seed"] = cfg.seed;
  rec["parameters"] = params;
  rec["result"] = json::object();

  switch (cfg.verb) {
    case Verb::fillin: run_fillin(cfg, g, rec); break;
    case Verb::decompose: run_decompose(cfg, g, rec); break;
    case Verb::solve: run_solve(cfg, in, rec); break;
    case Verb::kernel: run_kernel(cfg, in, rec); break;
    case Verb::validate: run_validate(cfg, g, rec); break;
  }

  if (cfg.timing) {
    const auto elapsed = std::chrono::steady_clock::now() - start;
    rec["wall_time_ms"] = std::chrono::duration<double, std::milli>(elapsed).count();
  }
  RunReport out;
  out.json = rec.dump(2);
  flatten(rec, "", out.text);
  return out;
}

int exit_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return 2;
    case ErrorCode::parse: return 3;
    case ErrorCode::graph: return 4;
    case ErrorCode::precondition: return 5;
    case ErrorCode::decomposition: return 6;
    case ErrorCode::size_guard: return 7;
    case ErrorCode::internal: return 70;
  }
  return 70;
}

}  // namespace achord
