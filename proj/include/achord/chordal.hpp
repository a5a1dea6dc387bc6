#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "achord/graph.hpp"

namespace achord {

struct ChordalityResult {
  bool chordal = false;
  // Perfect elimination ordering when chordal.
  std::vector<Vertex> peo;
  // Induced chordless cycle (length >= 4) in cyclic order otherwise.
  std::vector<Vertex> cycle;
};

ChordalityResult is_chordal(const Graph& g);

// Shortest induced cycle of length >= 4, empty when g is chordal.
std::vector<Vertex> shortest_chordless_cycle(const Graph& g);

struct TreeDecomposition {
  std::vector<VertexSet> bags;
  std::vector<std::pair<int, int>> tree_edges;
};

// Bags are the maximal cliques. Throws Error(precondition) on non-chordal g.
TreeDecomposition clique_tree(const Graph& g);

std::vector<VertexSet> maximal_cliques_chordal(const Graph& g);

// Returns a description of the first violated condition ("T1: ...", ...).
std::optional<std::string> validate_decomposition(const TreeDecomposition& t, const Graph& g);

enum class NodeKind { leaf, introduce, forget, join };

const char* node_kind_name(NodeKind kind);

struct NiceNode {
  NodeKind kind = NodeKind::leaf;
  Vertex vertex = -1;  // introduced or forgotten vertex
  int parent = -1;
  std::vector<int> children;
  VertexSet bag;
  EdgeSet missing;  // non-adjacent pairs of g inside the bag
};

// Nodes are stored so that every child precedes its parent.
struct NiceTreeDecomposition {
  std::vector<NiceNode> nodes;
  int root = -1;

  int max_deficiency() const;
};

// Throws Error(decomposition) naming the violated condition.
NiceTreeDecomposition make_nice(const TreeDecomposition& t, const Graph& g);

std::optional<std::string> validate_nice(const NiceTreeDecomposition& t, const Graph& g);

// Throws Error(decomposition) when validate_nice reports a violation.
void require_valid_nice(const NiceTreeDecomposition& t, const Graph& g);

struct IndependentSetResult {
  Weight weight = 0;
  VertexSet vertices;
};

// Throws Error(precondition) on non-chordal g.
IndependentSetResult max_weight_is_chordal(const Graph& g, const WeightMap& w);

// Line format, vertex tokens are graph labels:
//   ntd <node count> <root id>
//   <id> <leaf|introduce|forget|join> <vertex label or -> <parent id or -1> : <bag labels>
std::string nice_to_text(const NiceTreeDecomposition& t, const Graph& g);
NiceTreeDecomposition nice_from_text(std::string_view text, const Graph& g);

}  // namespace achord
