#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "achord/errors.hpp"
#include "achord/graph.hpp"
#include "achord/io.hpp"

namespace achord {

enum class Verb { fillin, decompose, solve, kernel, validate };

std::optional<Verb> verb_from_name(const std::string& name);
const char* verb_name(Verb v);

struct RunConfig {
  Verb verb = Verb::validate;
  // solve: problem name; kernel: variant; fillin: exact | minimal | approx.
  std::string problem;
  std::optional<int> k;
  std::optional<int> d;
  std::optional<Weight> ell;
  std::optional<Weight> threshold;  // W
  std::string pattern_path;
  std::string decomposition_path;
  std::string weights_path;
  bool oracle = false;
  bool timing = true;
  std::uint64_t seed = 0;
};

// Throws Error(invalid_argument) on a parameter combination the verb cannot use.
void validate_config(const RunConfig& cfg);

struct RunReport {
  std::string json;  // canonical record, keys sorted
  std::string text;  // flattened "key: value" rendering of the same record
};

// Runs one verb on an already parsed input graph. Module errors propagate
// as Error with their code.
RunReport run(const RunConfig& cfg, const ParsedGraph& input);

// Process exit status for an error code; 0 is reserved for computed results.
int exit_status(ErrorCode code);

}  // namespace achord
