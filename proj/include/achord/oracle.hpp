#pragma once

#include <optional>
#include <string>

#include "achord/graph.hpp"
#include "achord/solution.hpp"

namespace achord {

enum class OracleProblem {
  max_wis,
  chromatic_number,
  max_wclique,
  max_d_colorable,
  max_d_degenerate,
  max_h_colorable,
  min_cvc,
  min_fillin,
  min_split_edit,
  min_split_completion,
  min_interval_completion,
};

constexpr int kOracleMaxVertices = 20;

struct OracleParams {
  int d = 0;
  const Graph* pattern = nullptr;  // for max_h_colorable
};

std::optional<OracleProblem> oracle_problem_from_name(const std::string& name);

// Exhaustive search straight from the problem definitions. Throws
// Error(size_guard) above kOracleMaxVertices vertices. Missing weights mean
// unit weights.
Solution brute_force(OracleProblem problem, const Graph& g,
                     const std::optional<WeightMap>& w = std::nullopt, const OracleParams& params = {});

}  // namespace achord
