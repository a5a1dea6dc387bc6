#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "achord/achord.h"

namespace {

struct Options {
  std::string verb;
  std::string problem;
  std::string input;
  std::optional<int32_t> k, d;
  std::optional<int64_t> ell, w;
  std::string pattern, decomposition, weights;
  std::string format = "json";
  bool oracle = false;
  bool no_timing = false;
  uint64_t seed = 0;
};

int fail(achord_status status, const std::string& format) {
  const std::string message = achord_last_error();
  std::cerr << "error: " << message << "\n";
  if (format == "json") {
    nlohmann::json err = {{"error", {{"code", achord_status_string(status)}, {"message", message}}}};
    std::cout << err.dump(2) << "\n";
  } else {
    std::cout << "error.code: " << achord_status_string(status) << "\nerror.message: " << message << "\n";
  }
  return static_cast<int>(status);
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--k", o.k, "Fill-in budget");
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  sub->add_flag("--no-timing", o.no_timing, "Omit wall time from the report");
  sub->add_option("--seed", o.seed, "Seed recorded in the report");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Algorithms for graphs that are a few edges away from chordal"};
  app.require_subcommand(1);
  Options o;

  auto* fillin = app.add_subcommand("fillin", "Chordal modulator (exact, minimal or approx)");
  fillin->add_option("input", o.input, "Graph file")->required();
  fillin->add_option("--method", o.problem, "exact | minimal | approx")
      ->check(CLI::IsMember({"exact", "minimal", "approx"}));
  add_common(fillin, o);

  auto* decompose = app.add_subcommand("decompose", "Nice tree decomposition with small bag deficiency");
  decompose->add_option("input", o.input, "Graph file")->required();
  add_common(decompose, o);

  auto* solve = app.add_subcommand("solve", "Optimise over a decomposition");
  solve->add_option("problem", o.problem,
                    "wis | wvc | oct | bipartite-subgraph | wfvs | induced-forest | d-colorable | "
                    "h-colorable | d-degenerate | coloring | cvc")
      ->required();
  solve->add_option("input", o.input, "Graph file")->required();
  solve->add_option("--d", o.d, "Colour count or degeneracy bound");
  solve->add_option("--ell", o.ell, "Colour count for coloring");
  solve->add_option("--pattern", o.pattern, "Pattern graph for h-colorable");
  solve->add_option("--decomposition", o.decomposition, "Use this nice decomposition");
  solve->add_option("--weights", o.weights, "Weight file with 'w u value' lines");
  solve->add_flag("--oracle", o.oracle, "Cross-check with exhaustive search");
  add_common(solve, o);

  auto* kernel = app.add_subcommand("kernel", "Kernelization pipelines");
  kernel->add_option("variant", o.problem, "split-is | interval-is | turing-wclique")->required();
  kernel->add_option("input", o.input, "Graph file")->required();
  kernel->add_option("--ell", o.ell, "Independent set size threshold");
  kernel->add_option("--W", o.w, "Clique weight threshold");
  kernel->add_option("--weights", o.weights, "Weight file with 'w u value' lines");
  add_common(kernel, o);

  auto* validate = app.add_subcommand("validate", "Check a graph or a nice decomposition");
  validate->add_option("input", o.input, "Graph file")->required();
  validate->add_option("--decomposition", o.decomposition, "Nice decomposition to check");
  add_common(validate, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : ACHORD_E_INVALID_ARGUMENT;
  }
  o.verb = app.get_subcommands().front()->get_name();

  achord_graph* g = nullptr;
  achord_status st = achord_graph_parse_file(o.input.c_str(), &g);
  if (st != ACHORD_OK) return fail(st, o.format);

  achord_config cfg;
  achord_config_init(&cfg);
  cfg.verb = o.verb.c_str();
  cfg.problem = o.problem.empty() ? nullptr : o.problem.c_str();
  if (o.k) cfg.has_k = 1, cfg.k = *o.k;
  if (o.d) cfg.has_d = 1, cfg.d = *o.d;
  if (o.ell) cfg.has_ell = 1, cfg.ell = *o.ell;
  if (o.w) cfg.has_w = 1, cfg.w = *o.w;
  cfg.pattern_path = o.pattern.empty() ? nullptr : o.pattern.c_str();
  cfg.decomposition_path = o.decomposition.empty() ? nullptr : o.decomposition.c_str();
  cfg.weights_path = o.weights.empty() ? nullptr : o.weights.c_str();
  cfg.oracle = o.oracle ? 1 : 0;
  cfg.timing = o.no_timing ? 0 : 1;
  cfg.seed = o.seed;

  achord_report* report = nullptr;
  st = achord_run(&cfg, g, &report);
  achord_graph_free(g);
  if (st != ACHORD_OK) return fail(st, o.format);
  std::cout << (o.format == "json" ? achord_report_json(report) : achord_report_text(report));
  if (o.format == "json") std::cout << "\n";
  achord_report_free(report);
  return 0;
}
