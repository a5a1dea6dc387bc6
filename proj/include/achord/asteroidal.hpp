#pragma once

#include <array>
#include <optional>
#include <string>

#include "achord/graph.hpp"

namespace achord {

using Triple = std::array<Vertex, 3>;

enum class ShapeKind { f1, f2, f3, f4, f5, unclassified };

struct WitnessShape {
  ShapeKind kind = ShapeKind::unclassified;
  int r = 0;  // path length parameter for F3(r) and F4(r)

  std::string name() const;
  bool operator==(const WitnessShape&) const = default;
};

struct ATWitness {
  Triple terminals{};  // sorted
  VertexSet vertices;  // includes the terminals
  WitnessShape shape;
};

// A witness template: graph plus the indices of its three terminals.
struct WitnessTemplate {
  WitnessShape shape;
  Graph graph;
  Triple terminals{};
};

WitnessTemplate make_template(ShapeKind kind, int r = 0);

bool is_asteroidal_triple(const Graph& g, const Triple& t);

// First AT in lexicographic order, drawn from `restrict` when given.
std::optional<Triple> find_AT(const Graph& g, const std::optional<VertexSet>& restrict = std::nullopt);

// Throws Error(precondition) if t is not an AT of g.
ATWitness minimize_at_witness(const Graph& g, const Triple& t);

// f has to be a minimal witness for terminals t (indices of f).
WitnessShape classify_witness(const Graph& f, const Triple& t);

enum class ShapeFilter { f1_only, any };

// Searches ATs of g - E(g[x]) with a witness meeting x in at most one vertex
// or only in terminals and whose shape passes the filter. The returned
// witness lives in g - E(g[x]); indices refer to g.
std::optional<ATWitness> find_x_touching_at(const Graph& g, const VertexSet& x,
                                            ShapeFilter filter = ShapeFilter::any);

}  // namespace achord
