#pragma once

#include <vector>

#include "achord/graph.hpp"

namespace achord {

struct Solution {
  // False for decision problems answered "no" and for infeasible optima.
  bool feasible = true;
  Weight value = 0;
  VertexSet vertices;
  // Colour / pattern vertex per entry of `vertices` (or per graph vertex for
  // colourings of the whole graph); empty when not applicable.
  std::vector<int> assignment;
  std::vector<Vertex> ordering;
  EdgeSet pairs;
};

}  // namespace achord
