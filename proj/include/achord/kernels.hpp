#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "achord/fillin.hpp"
#include "achord/graph.hpp"

namespace achord {

enum class KernelVerdict { reduced, not_in_class, resolved_yes, resolved_no };

const char* kernel_verdict_name(KernelVerdict v);

// One applied reduction rule. Vertices are graph labels.
struct RuleRecord {
  std::string rule;
  std::string note;
  std::vector<int> vertices;  // vertices the rule acted on (bookkeeping)
  std::vector<int> removed;   // vertices deleted from the graph
  Weight threshold_delta = 0;

  // Filled only by the compressed-graph construction step.
  std::vector<int> x_labels;
  std::vector<std::vector<int>> components;
  std::vector<Weight> component_weights;
  int label_base = 0;  // component i becomes vertex label_base + i
};

struct KernelInstance {
  Graph graph;
  std::optional<WeightMap> weights;
  Weight threshold = 0;
  std::vector<RuleRecord> trace;
  KernelVerdict verdict = KernelVerdict::reduced;
};

// Re-applies a trace to the original instance; verdicts are not replayed.
KernelInstance replay_trace(const Graph& g, const std::optional<WeightMap>& w, Weight threshold,
                            const std::vector<RuleRecord>& trace);

struct SplitEdit {
  EdgeSet pairs;
  VertexSet clique;
  VertexSet independent;
};

// Minimum edit set via the degree-sequence characterisation of splittance.
SplitEdit split_edit_partition(const Graph& g);
EdgeSet split_edit(const Graph& g);

bool is_split_graph(const Graph& g);

// Throws Error(precondition) naming an uncovered edge if vc is not a cover.
Modulator vc_to_split_modulator(const Graph& g, const VertexSet& vc);

struct SplitPartition {
  VertexSet clique;       // K
  VertexSet independent;  // I
  VertexSet x;            // endpoints of added pairs, grown while resolving D
  VertexSet y;            // K without X
  EdgeSet deleted;        // D
};

// Partition invariants for budget k: I independent, Y a clique, X complete to Y,
// |X| <= (k+2)k, independent subsets of X of size <= 2k.
std::array<bool, 5> check_split_partition(const Graph& g, const SplitPartition& p, int k);

struct SplitKernelResult {
  KernelInstance instance;
  std::optional<SplitPartition> after_resolving;
};

SplitKernelResult split_is_kernel(const Graph& g, Weight ell, int k);

struct IntervalKernelResult {
  KernelInstance instance;  // target problem: weighted independent set
  int f1_growth_steps = 0;
  int any_growth_steps = 0;
  int irrelevant_checks = 0;
  bool remainder_chordal_ok = true;  // G - X chordal at every irrelevant-vertex check
  std::optional<std::size_t> x_after_growth;
};

IntervalKernelResult interval_is_compress(const Graph& g, Weight ell, int k);

using CliqueOracle = std::function<bool(const Graph&, const WeightMap&, Weight)>;

// Brute-force "max clique weight >= W".
bool default_clique_oracle(const Graph& g, const WeightMap& w, Weight threshold);

struct TuringQuery {
  std::vector<int> labels;
  Weight threshold = 0;
  bool answer = false;
};

struct TuringKernelResult {
  KernelVerdict verdict = KernelVerdict::resolved_no;
  std::vector<int> x_labels;
  std::vector<TuringQuery> queries;
};

TuringKernelResult turing_kernel_wclique(const Graph& g, const WeightMap& w, Weight threshold, int k,
                                         const CliqueOracle& oracle = default_clique_oracle);

}  // namespace achord
