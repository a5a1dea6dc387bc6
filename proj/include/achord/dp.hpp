#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "achord/chordal.hpp"
#include "achord/graph.hpp"
#include "achord/solution.hpp"

namespace achord {

// floor((3d + sqrt(d^2 + 8dk)) / 2)
int candidate_bound(int d, int k);

struct CandidateFamily {
  VertexSet bag;
  int d = 1;
  int deficiency = 0;
  int bound = 0;
  std::vector<VertexSet> sets;  // sorted by size, then lexicographically
};

// Every subset of `bag` inducing a d-colourable subgraph, built as unions of
// at most d cliques of the complement of g[bag].
CandidateFamily enumerate_bag_candidates(const Graph& g, const VertexSet& bag, int d);

// The maximisation solvers return the optimum in `value`, the chosen set in
// `vertices` and the colour / pattern vertex of each chosen vertex in
// `assignment`. All of them validate `t` against `g` first.
Solution solve_d_colorable(const Graph& g, const WeightMap& w, int d, const NiceTreeDecomposition& t);
Solution solve_h_colorable(const Graph& g, const WeightMap& w, const Graph& h, const NiceTreeDecomposition& t);

// `ordering` holds an elimination order of the witness in which every vertex
// has at most d later neighbours.
Solution solve_d_degenerate(const Graph& g, const WeightMap& w, int d, const NiceTreeDecomposition& t);

struct ColoringStats {
  struct Bag {
    int node = 0;
    int deficiency = 0;
    std::size_t partitions = 0;
  };
  std::vector<Bag> bags;
};

// `feasible` answers "is g ell-colourable"; on yes `assignment[v]` is the
// colour of vertex v.
Solution solve_coloring(const Graph& g, int ell, const NiceTreeDecomposition& t, ColoringStats* stats = nullptr);

// Minimum-weight connected vertex cover. Throws Error(precondition) if g is
// disconnected.
Solution solve_cvc(const Graph& g, const WeightMap& w, const NiceTreeDecomposition& t);

enum class ClassicProblem { wis, wvc, oct, bipartite_subgraph, wfvs, induced_forest };

std::optional<ClassicProblem> classic_problem_from_name(const std::string& name);
const char* classic_problem_name(ClassicProblem p);

Solution solve_classic(ClassicProblem problem, const Graph& g, const WeightMap& w, const NiceTreeDecomposition& t);

// Independent checkers used to re-validate witnesses.
bool is_proper_coloring(const Graph& g, const VertexSet& s, const std::vector<int>& colors, int d);
bool is_homomorphism(const Graph& g, const VertexSet& s, const std::vector<int>& image, const Graph& h);
bool is_degeneracy_ordering(const Graph& g, const VertexSet& s, const std::vector<Vertex>& order, int d);
bool is_forest(const Graph& g, const VertexSet& s);
bool is_connected_vertex_cover(const Graph& g, const VertexSet& s);

}  // namespace achord
