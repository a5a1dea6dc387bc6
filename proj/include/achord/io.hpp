#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "achord/graph.hpp"

namespace achord {

struct ParsedGraph {
  Graph graph;                     // labels are the 1-based file ids
  std::optional<WeightMap> weights;
  std::string digest;              // FNV-1a 64 of the raw text, hex
};

// Edge list ("n m", m lines "u v") or DIMACS ("p edge n m", "e u v"), both
// with an optional trailing block of "w u value" lines. Throws Error(parse)
// with the offending line number.
ParsedGraph parse_graph_text(std::string_view text);
ParsedGraph parse_graph_file(const std::string& path);

// "w u value" lines only; one entry per vertex of g.
WeightMap parse_weights_text(std::string_view text, const Graph& g);

// Edge-list rendering with positional 1-based ids.
std::string graph_to_text(const Graph& g, const std::optional<WeightMap>& w = std::nullopt);

std::string read_file(const std::string& path);
std::string fnv1a_hex(std::string_view data);

}  // namespace achord
