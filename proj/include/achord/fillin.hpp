#pragma once

#include <optional>

#include "achord/chordal.hpp"
#include "achord/graph.hpp"

namespace achord {

enum class GraphClass { chordal, interval, split, complete };

const char* graph_class_name(GraphClass c);

struct Modulator {
  EdgeSet pairs;  // non-edges of the host graph
  GraphClass target = GraphClass::chordal;

  int size() const { return static_cast<int>(pairs.size()); }
};

// Minimum chordal modulator when fill-in(g) <= k, nullopt otherwise.
std::optional<Modulator> exact_fillin(const Graph& g, int k);

// Inclusion-minimal chordal modulator (min-fill elimination, then removal
// of every fill edge whose deletion keeps the graph chordal).
Modulator minimal_triangulation(const Graph& g);

// Modulator of size <= 8k^2, or nullopt when fill-in(g) > k.
std::optional<Modulator> approx_fillin(const Graph& g, int k);

struct Deficiency {
  int count = 0;
  EdgeSet pairs;
};

Deficiency bag_deficiency(const Graph& g, const VertexSet& bag);

struct AlmostChordalDecomposition {
  Modulator modulator;
  NiceTreeDecomposition decomposition;
};

// Nice decomposition whose bags become cliques once the modulator is added.
// Throws Error(precondition) when g + pairs is not chordal.
AlmostChordalDecomposition decomposition_from_modulator(const Graph& g, const Modulator& a);

// nullopt means fill-in(g) > k.
std::optional<AlmostChordalDecomposition> kalmost_nice_decomposition(const Graph& g, int k);

}  // namespace achord
