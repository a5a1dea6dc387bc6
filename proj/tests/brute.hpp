#pragma once

// Small exhaustive checks written straight from definitions, kept apart from
// both the library and its oracle module.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <queue>
#include <vector>

#include "achord/graph.hpp"

namespace brute {

using achord::Graph;
using achord::Vertex;
using achord::VertexSet;
using achord::Weight;
using achord::WeightMap;

inline VertexSet members(std::uint32_t mask) {
  VertexSet s;
  for (int v = 0; mask; ++v, mask >>= 1)
    if (mask & 1) s.push_back(v);
  return s;
}

inline bool independent(const Graph& g, std::uint32_t mask) {
  const VertexSet s = members(mask);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.adjacent(s[i], s[j])) return false;
  return true;
}

inline bool clique(const Graph& g, std::uint32_t mask) {
  const VertexSet s = members(mask);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!g.adjacent(s[i], s[j])) return false;
  return true;
}

inline bool connected(const Graph& g, std::uint32_t mask) {
  if (!mask) return true;
  const int start = __builtin_ctz(mask);
  std::uint32_t seen = 1u << start;
  std::vector<int> stack = {start};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int u : g.neighbors(v)) {
      if ((mask >> u & 1) && !(seen >> u & 1)) {
        seen |= 1u << u;
        stack.push_back(u);
      }
    }
  }
  return seen == mask;
}

// Some vertex subset of size >= 4 induces a connected 2-regular graph.
inline bool has_chordless_cycle(const Graph& g) {
  const int n = g.size();
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    if (__builtin_popcount(m) < 4) continue;
    bool two = true;
    for (Vertex v : members(m)) {
      int deg = 0;
      for (int u : g.neighbors(v)) deg += m >> u & 1;
      two = two && deg == 2;
    }
    if (two && connected(g, m)) return true;
  }
  return false;
}

inline int shortest_chordless_cycle_length(const Graph& g) {
  const int n = g.size();
  int best = 0;
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    const int size = __builtin_popcount(m);
    if (size < 4 || (best && size >= best)) continue;
    bool two = true;
    for (Vertex v : members(m)) {
      int deg = 0;
      for (int u : g.neighbors(v)) deg += m >> u & 1;
      two = two && deg == 2;
    }
    if (two && connected(g, m)) best = size;
  }
  return best;
}

inline Weight max_weight_independent(const Graph& g, const WeightMap& w) {
  Weight best = 0;
  for (std::uint32_t m = 0; m < (1u << g.size()); ++m) {
    if (!independent(g, m)) continue;
    Weight s = 0;
    for (Vertex v : members(m)) s += w[v];
    best = std::max(best, s);
  }
  return best;
}

inline std::vector<VertexSet> maximal_cliques(const Graph& g) {
  std::vector<VertexSet> out;
  const int n = g.size();
  for (std::uint32_t m = 1; m < (1u << n); ++m) {
    if (!clique(g, m)) continue;
    bool maximal = true;
    for (int v = 0; v < n && maximal; ++v)
      if (!(m >> v & 1) && clique(g, m | 1u << v)) maximal = false;
    if (maximal) out.push_back(members(m));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Largest minimum degree over all induced subgraphs.
inline int degeneracy(const Graph& g) {
  int best = 0;
  for (std::uint32_t m = 1; m < (1u << g.size()); ++m) {
    int low = g.size();
    for (Vertex v : members(m)) {
      int deg = 0;
      for (int u : g.neighbors(v)) deg += m >> u & 1;
      low = std::min(low, deg);
    }
    best = std::max(best, low);
  }
  return best;
}

// Vertices reachable from `from` without entering N[x].
inline std::vector<bool> reach_avoiding(const Graph& g, Vertex from, Vertex x) {
  std::vector<bool> blocked(g.size(), false), seen(g.size(), false);
  blocked[x] = true;
  for (int u : g.neighbors(x)) blocked[u] = true;
  if (blocked[from]) return seen;
  std::queue<int> q;
  q.push(from);
  seen[from] = true;
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int u : g.neighbors(v)) {
      if (!blocked[u] && !seen[u]) {
        seen[u] = true;
        q.push(u);
      }
    }
  }
  return seen;
}

inline bool asteroidal(const Graph& g, Vertex a, Vertex b, Vertex c) {
  if (a == b || b == c || a == c) return false;
  if (g.adjacent(a, b) || g.adjacent(b, c) || g.adjacent(a, c)) return false;
  return reach_avoiding(g, a, c)[b] && reach_avoiding(g, b, a)[c] && reach_avoiding(g, a, b)[c];
}

inline bool has_asteroidal_triple(const Graph& g) {
  const int n = g.size();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        if (asteroidal(g, a, b, c)) return true;
  return false;
}

inline bool colorable(const Graph& g, int colors) {
  std::vector<int> c(g.size(), -1);
  std::function<bool(int)> go = [&](int v) {
    if (v == g.size()) return true;
    for (int x = 0; x < colors; ++x) {
      bool ok = true;
      for (int u : g.neighbors(v)) ok = ok && c[u] != x;
      if (!ok) continue;
      c[v] = x;
      if (go(v + 1)) return true;
      c[v] = -1;
    }
    return false;
  };
  return go(0);
}

}  // namespace brute
