#include "achord/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>

namespace achord {

namespace {

using Mask = std::uint32_t;

struct Dense {
  int n = 0;
  std::vector<Mask> adj;
};

Dense dense_of(const Graph& g) {
  Dense d;
  d.n = g.size();
  d.adj.assign(d.n, 0);
  for (const auto& e : g.edges()) {
    d.adj[e.u] |= Mask{1} << e.v;
    d.adj[e.v] |= Mask{1} << e.u;
  }
  return d;
}

VertexSet members(Mask m) {
  VertexSet out;
  for (int v = 0; m; ++v, m >>= 1) {
    if (m & 1) out.push_back(v);
  }
  return out;
}

Weight mask_weight(const WeightMap& w, Mask m) {
  Weight total = 0;
  for (int v = 0; m; ++v, m >>= 1) {
    if (m & 1) total += w[v];
  }
  return total;
}

bool independent(const Dense& d, Mask m) {
  for (Mask r = m; r; r &= r - 1) {
    if (d.adj[std::countr_zero(r)] & m) return false;
  }
  return true;
}

bool clique(const Dense& d, Mask m) {
  for (Mask r = m; r; r &= r - 1) {
    const int v = std::countr_zero(r);
    if ((((d.adj[v] | (Mask{1} << v)) & m) ^ m) != 0) return false;
  }
  return true;
}

bool connected(const Dense& d, Mask m) {
  if (m == 0) return true;
  Mask seen = m & (~m + 1);
  Mask frontier = seen;
  while (frontier) {
    Mask next = 0;
    for (Mask r = frontier; r; r &= r - 1) next |= d.adj[std::countr_zero(r)] & m;
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == m;
}

// Colours vertices of m with `colors` colours, first free colour first.
bool color_subset(const Dense& d, Mask m, int colors, std::vector<int>& color) {
  const VertexSet verts = members(m);
  color.assign(d.n, -1);
  std::function<bool(std::size_t)> go = [&](std::size_t i) {
    if (i == verts.size()) return true;
    const int v = verts[i];
    for (int c = 0; c < colors; ++c) {
      bool ok = true;
      for (std::size_t j = 0; j < i; ++j) {
        if (color[verts[j]] == c && ((d.adj[v] >> verts[j]) & 1)) { ok = false; break; }
      }
      if (!ok) continue;
      color[v] = c;
      if (go(i + 1)) return true;
      color[v] = -1;
    }
    return false;
  };
  return go(0);
}

bool degenerate_within(const Dense& d, Mask m, int bound, std::vector<Vertex>* order) {
  Mask rest = m;
  while (rest) {
    int pick = -1;
    for (Mask r = rest; r; r &= r - 1) {
      const int v = std::countr_zero(r);
      if (std::popcount(d.adj[v] & rest) <= bound) { pick = v; break; }
    }
    if (pick < 0) return false;
    if (order) order->push_back(pick);
    rest &= ~(Mask{1} << pick);
  }
  return true;
}

bool homomorphic(const Dense& d, Mask m, const Graph& h, std::vector<int>& image) {
  const VertexSet verts = members(m);
  image.assign(d.n, -1);
  std::function<bool(std::size_t)> go = [&](std::size_t i) {
    if (i == verts.size()) return true;
    const int v = verts[i];
    for (int x = 0; x < h.size(); ++x) {
      bool ok = true;
      for (std::size_t j = 0; j < i; ++j) {
        const int u = verts[j];
        if (((d.adj[v] >> u) & 1) && !h.adjacent(x, image[u])) { ok = false; break; }
      }
      if (!ok) continue;
      image[v] = x;
      if (go(i + 1)) return true;
      image[v] = -1;
    }
    return false;
  };
  return go(0);
}

// Chordal iff simplicial vertices can be peeled until nothing is left.
bool chordal_by_peeling(const Dense& d) {
  Mask rest = d.n == 32 ? ~Mask{0} : (Mask{1} << d.n) - 1;
  while (rest) {
    int pick = -1;
    for (Mask r = rest; r; r &= r - 1) {
      const int v = std::countr_zero(r);
      if (clique(d, d.adj[v] & rest)) { pick = v; break; }
    }
    if (pick < 0) return false;
    rest &= ~(Mask{1} << pick);
  }
  return true;
}

Mask reach(const Dense& d, int from, Mask allowed) {
  Mask seen = Mask{1} << from;
  Mask frontier = seen;
  while (frontier) {
    Mask next = 0;
    for (Mask r = frontier; r; r &= r - 1) next |= d.adj[std::countr_zero(r)] & allowed;
    frontier = next & ~seen;
    seen |= next;
  }
  return seen;
}

bool has_asteroidal_triple(const Dense& d) {
  const Mask all = d.n == 32 ? ~Mask{0} : (Mask{1} << d.n) - 1;
  auto linked = [&](int a, int b, int avoid) {
    const Mask allowed = all & ~(d.adj[avoid] | (Mask{1} << avoid));
    if (!((allowed >> a) & 1) || !((allowed >> b) & 1)) return false;
    return ((reach(d, a, allowed) >> b) & 1) != 0;
  };
  for (int a = 0; a < d.n; ++a) {
    for (int b = a + 1; b < d.n; ++b) {
      if ((d.adj[a] >> b) & 1) continue;
      for (int c = b + 1; c < d.n; ++c) {
        if (((d.adj[a] >> c) & 1) || ((d.adj[b] >> c) & 1)) continue;
        if (linked(a, b, c) && linked(b, c, a) && linked(a, c, b)) return true;
      }
    }
  }
  return false;
}

// Smallest set of non-edges whose addition satisfies `accept`.
Solution min_completion(const Graph& g, const std::function<bool(const Dense&)>& accept) {
  const Dense base = dense_of(g);
  std::vector<VertexPair> non_edges;
  for (int u = 0; u < base.n; ++u) {
    for (int v = u + 1; v < base.n; ++v) {
      if (!((base.adj[u] >> v) & 1)) non_edges.emplace_back(u, v);
    }
  }
  std::vector<std::size_t> pick;
  Solution out;
  std::function<bool(std::size_t, std::size_t)> choose = [&](std::size_t start, std::size_t left) {
    if (left == 0) {
      Dense d = base;
      for (std::size_t i : pick) {
        d.adj[non_edges[i].u] |= Mask{1} << non_edges[i].v;
        d.adj[non_edges[i].v] |= Mask{1} << non_edges[i].u;
      }
      return accept(d);
    }
    for (std::size_t i = start; i + left <= non_edges.size(); ++i) {
      pick.push_back(i);
      if (choose(i + 1, left - 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  for (std::size_t size = 0; size <= non_edges.size(); ++size) {
    pick.clear();
    if (choose(0, size)) {
      out.value = static_cast<Weight>(size);
      for (std::size_t i : pick) out.pairs.push_back(non_edges[i]);
      return out;
    }
  }
  out.feasible = false;
  return out;
}

template <typename Accept>
Solution best_subset(const Dense& d, const WeightMap& w, bool maximize, Accept accept) {
  Solution out;
  out.feasible = false;
  const Mask limit = Mask{1} << d.n;
  Mask best = 0;
  for (Mask m = 0; m < limit; ++m) {
    if (!accept(m)) continue;
    const Weight value = mask_weight(w, m);
    if (!out.feasible || (maximize ? value > out.value : value < out.value)) {
      out.feasible = true;
      out.value = value;
      best = m;
    }
  }
  out.vertices = members(best);
  return out;
}

}  // namespace

std::optional<OracleProblem> oracle_problem_from_name(const std::string& name) {
  if (name == "max-wis") return OracleProblem::max_wis;
  if (name == "chromatic-number") return OracleProblem::chromatic_number;
  if (name == "max-wclique") return OracleProblem::max_wclique;
  if (name == "max-d-colorable") return OracleProblem::max_d_colorable;
  if (name == "max-d-degenerate") return OracleProblem::max_d_degenerate;
  if (name == "max-h-colorable") return OracleProblem::max_h_colorable;
  if (name == "min-cvc") return OracleProblem::min_cvc;
  if (name == "min-fillin") return OracleProblem::min_fillin;
  if (name == "min-split-edit") return OracleProblem::min_split_edit;
  if (name == "min-split-completion") return OracleProblem::min_split_completion;
  if (name == "min-interval-completion") return OracleProblem::min_interval_completion;
  return std::nullopt;
}

Solution brute_force(OracleProblem problem, const Graph& g, const std::optional<WeightMap>& weights,
                     const OracleParams& params) {
  if (g.size() > kOracleMaxVertices) {
    throw Error(ErrorCode::size_guard, "oracle limited to " + std::to_string(kOracleMaxVertices) + " vertices");
  }
  const WeightMap w = weights ? *weights : unit_weights(g.size());
  check_weights(g, w, false);
  const Dense d = dense_of(g);
  const Mask all = (Mask{1} << d.n) - 1;

  switch (problem) {
    case OracleProblem::max_wis:
      return best_subset(d, w, true, [&](Mask m) { return independent(d, m); });

    case OracleProblem::max_wclique:
      return best_subset(d, w, true, [&](Mask m) { return clique(d, m); });

    case OracleProblem::chromatic_number: {
      Solution out;
      std::vector<int> color;
      for (int c = 0; c <= d.n; ++c) {
        if (color_subset(d, all, c, color)) {
          out.value = c;
          out.vertices = members(all);
          out.assignment = color;
          return out;
        }
      }
      throw Error(ErrorCode::internal, "colouring search failed");
    }

    case OracleProblem::max_d_colorable: {
      if (params.d < 1) throw Error(ErrorCode::invalid_argument, "d must be at least 1");
      std::vector<int> color;
      auto out = best_subset(d, w, true, [&](Mask m) { return color_subset(d, m, params.d, color); });
      color_subset(d, [&] {
        Mask m = 0;
        for (Vertex v : out.vertices) m |= Mask{1} << v;
        return m;
      }(), params.d, color);
      for (Vertex v : out.vertices) out.assignment.push_back(color[v]);
      return out;
    }

    case OracleProblem::max_d_degenerate: {
      if (params.d < 0) throw Error(ErrorCode::invalid_argument, "d must be non-negative");
      auto out = best_subset(d, w, true, [&](Mask m) { return degenerate_within(d, m, params.d, nullptr); });
      Mask m = 0;
      for (Vertex v : out.vertices) m |= Mask{1} << v;
      degenerate_within(d, m, params.d, &out.ordering);
      return out;
    }

    case OracleProblem::max_h_colorable: {
      if (!params.pattern) throw Error(ErrorCode::invalid_argument, "pattern graph required");
      std::vector<int> image;
      auto out = best_subset(d, w, true, [&](Mask m) { return homomorphic(d, m, *params.pattern, image); });
      Mask m = 0;
      for (Vertex v : out.vertices) m |= Mask{1} << v;
      homomorphic(d, m, *params.pattern, image);
      for (Vertex v : out.vertices) out.assignment.push_back(image[v]);
      return out;
    }

    case OracleProblem::min_cvc: {
      if (!connected(d, all)) throw Error(ErrorCode::precondition, "graph is not connected");
      return best_subset(d, w, false, [&](Mask m) {
        for (int v = 0; v < d.n; ++v) {
          if (!((m >> v) & 1) && (d.adj[v] & ~m)) return false;
        }
        return connected(d, m);
      });
    }

    case OracleProblem::min_fillin:
      return min_completion(g, chordal_by_peeling);

    case OracleProblem::min_interval_completion:
      return min_completion(g, [](const Dense& h) { return chordal_by_peeling(h) && !has_asteroidal_triple(h); });

    case OracleProblem::min_split_edit:
    case OracleProblem::min_split_completion: {
      const bool edit = problem == OracleProblem::min_split_edit;
      Solution out;
      out.feasible = false;
      for (Mask k = 0; k <= all; ++k) {
        const Mask rest = all & ~k;
        Weight cost = 0;
        for (Mask r = k; r; r &= r - 1) {
          const int v = std::countr_zero(r);
          cost += std::popcount(k & ~d.adj[v] & ~(Mask{1} << v));
        }
        cost /= 2;
        Weight inside = 0;
        for (Mask r = rest; r; r &= r - 1) inside += std::popcount(d.adj[std::countr_zero(r)] & rest);
        inside /= 2;
        if (!edit && inside > 0) continue;
        cost += inside;
        if (!out.feasible || cost < out.value) {
          out.feasible = true;
          out.value = cost;
          out.vertices = members(k);
        }
        if (k == all) break;
      }
      return out;
    }
  }
  throw Error(ErrorCode::internal, "unknown oracle problem");
}

}  // namespace achord
