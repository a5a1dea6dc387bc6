#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "achord/errors.hpp"

namespace achord {

using Vertex = int;
using Weight = std::int64_t;

// Sorted, duplicate-free list of vertex indices.
using VertexSet = std::vector<Vertex>;

struct VertexPair {
  Vertex u = 0;
  Vertex v = 0;

  VertexPair() = default;
  VertexPair(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  auto operator<=>(const VertexPair&) const = default;
};

// Sorted, duplicate-free list of normalized pairs.
using EdgeSet = std::vector<VertexPair>;

// One weight per vertex index.
using WeightMap = std::vector<Weight>;

EdgeSet normalize_pairs(std::vector<VertexPair> pairs);

// Immutable simple undirected graph. Vertices are indices 0..n-1; every
// vertex also carries an external label that survives subgraph extraction.
class Graph {
 public:
  Graph() = default;
  // Throws Error(graph) on self-loops, out-of-range endpoints, duplicates or
  // repeated labels. Empty `labels` means label(i) == i.
  Graph(int n, const EdgeSet& edges, std::vector<int> labels = {});

  int size() const { return n_; }
  int edge_count() const { return m_; }

  bool adjacent(Vertex u, Vertex v) const {
    return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
  }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

  int label(Vertex v) const { return labels_[v]; }
  const std::vector<int>& labels() const { return labels_; }
  std::optional<Vertex> find_label(int label) const;

  EdgeSet edges() const;

  bool operator==(const Graph& other) const;

 private:
  int n_ = 0;
  int m_ = 0;
  std::size_t words_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::uint64_t> bits_;
  std::vector<int> labels_;
};

Graph build_graph(int n, const EdgeSet& edges);

Graph complement(const Graph& g);

enum class ModulatorMode { add, remove, symmetric_difference };

Graph apply_modulator(const Graph& g, const EdgeSet& pairs, ModulatorMode mode);

// Vertex i of the result is s[i] of g (s sorted); labels are carried over.
Graph induced_subgraph(const Graph& g, const VertexSet& s);

Graph remove_vertices(const Graph& g, const VertexSet& s);

struct DegeneracyResult {
  std::vector<Vertex> ordering;
  int degeneracy = 0;
};

DegeneracyResult degeneracy_ordering(const Graph& g);

// All cliques including the empty one, each sorted; order is by the
// degeneracy ordering position of the first vertex, then by subset index.
std::vector<VertexSet> enumerate_cliques(const Graph& g);

std::vector<VertexSet> connected_components(const Graph& g);

bool is_clique(const Graph& g, const VertexSet& s);
bool is_independent(const Graph& g, const VertexSet& s);

EdgeSet missing_pairs(const Graph& g, const VertexSet& s);

Weight total_weight(const WeightMap& w, const VertexSet& s);
WeightMap unit_weights(int n);
// Throws unless w has one entry per vertex (and all >= 1 when positive).
void check_weights(const Graph& g, const WeightMap& w, bool positive);

VertexSet all_vertices(const Graph& g);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
bool contains(const VertexSet& s, Vertex v);

}  // namespace achord
