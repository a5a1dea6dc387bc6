#include "achord/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <unordered_map>

namespace achord {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid-argument";
    case ErrorCode::parse: return "parse-error";
    case ErrorCode::graph: return "graph-error";
    case ErrorCode::precondition: return "precondition-failed";
    case ErrorCode::decomposition: return "invalid-decomposition";
    case ErrorCode::size_guard: return "size-guard";
    case ErrorCode::internal: return "internal-error";
  }
  return "internal-error";
}

namespace {

std::string pair_text(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

EdgeSet normalize_pairs(std::vector<VertexPair> pairs) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return pairs;
}

Graph::Graph(int n, const EdgeSet& edges, std::vector<int> labels)
    : n_(n), labels_(std::move(labels)) {
  if (n < 0) throw Error(ErrorCode::graph, "negative vertex count");
  if (labels_.empty()) {
    labels_.resize(n);
    std::iota(labels_.begin(), labels_.end(), 0);
  }
  if (static_cast<int>(labels_.size()) != n) {
    throw Error(ErrorCode::graph, "label count does not match vertex count");
  }
  {
    std::vector<int> sorted = labels_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw Error(ErrorCode::graph, "duplicate vertex label");
    }
  }
  words_ = (static_cast<std::size_t>(n) + 63) / 64;
  bits_.assign(words_ * n, 0);
  adj_.assign(n, {});
  for (const auto& e : edges) {
    if (e.u == e.v) throw Error(ErrorCode::graph, "self-loop " + pair_text(e.u, e.v));
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw Error(ErrorCode::graph, "endpoint out of range " + pair_text(e.u, e.v));
    }
    if (adjacent(e.u, e.v)) {
      throw Error(ErrorCode::graph, "duplicate edge " + pair_text(e.u, e.v));
    }
    bits_[e.u * words_ + (e.v >> 6)] |= std::uint64_t{1} << (e.v & 63);
    bits_[e.v * words_ + (e.u >> 6)] |= std::uint64_t{1} << (e.u & 63);
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
    ++m_;
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

std::optional<Vertex> Graph::find_label(int label) const {
  for (Vertex v = 0; v < n_; ++v) {
    if (labels_[v] == label) return v;
  }
  return std::nullopt;
}

EdgeSet Graph::edges() const {
  EdgeSet out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool Graph::operator==(const Graph& other) const {
  return n_ == other.n_ && labels_ == other.labels_ && adj_ == other.adj_;
}

Graph build_graph(int n, const EdgeSet& edges) { return Graph(n, edges); }

Graph complement(const Graph& g) {
  EdgeSet out;
  for (Vertex u = 0; u < g.size(); ++u) {
    for (Vertex v = u + 1; v < g.size(); ++v) {
      if (!g.adjacent(u, v)) out.emplace_back(u, v);
    }
  }
  return Graph(g.size(), out, g.labels());
}

Graph apply_modulator(const Graph& g, const EdgeSet& pairs, ModulatorMode mode) {
  std::set<VertexPair> edges;
  for (const auto& e : g.edges()) edges.insert(e);
  for (const auto& p : pairs) {
    if (p.u == p.v || p.u < 0 || p.v >= g.size()) {
      throw Error(ErrorCode::graph, "modulator pair out of range " + pair_text(p.u, p.v));
    }
    const bool present = g.adjacent(p.u, p.v);
    switch (mode) {
      case ModulatorMode::add:
        if (present) throw Error(ErrorCode::graph, "pair already an edge " + pair_text(p.u, p.v));
        edges.insert(p);
        break;
      case ModulatorMode::remove:
        if (!present) throw Error(ErrorCode::graph, "pair is not an edge " + pair_text(p.u, p.v));
        edges.erase(p);
        break;
      case ModulatorMode::symmetric_difference:
        if (present) edges.erase(p); else edges.insert(p);
        break;
    }
  }
  return Graph(g.size(), EdgeSet(edges.begin(), edges.end()), g.labels());
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  std::vector<int> index(g.size(), -1);
  std::vector<int> labels;
  labels.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Vertex v = s[i];
    if (v < 0 || v >= g.size()) {
      throw Error(ErrorCode::graph, "unknown vertex " + std::to_string(v));
    }
    if (index[v] != -1) throw Error(ErrorCode::graph, "repeated vertex " + std::to_string(v));
    index[v] = static_cast<int>(i);
    labels.push_back(g.label(v));
  }
  EdgeSet edges;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (Vertex u : g.neighbors(s[i])) {
      if (index[u] > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), index[u]);
    }
  }
  return Graph(static_cast<int>(s.size()), normalize_pairs(std::move(edges)), std::move(labels));
}

Graph remove_vertices(const Graph& g, const VertexSet& s) {
  return induced_subgraph(g, set_difference(all_vertices(g), s));
}

DegeneracyResult degeneracy_ordering(const Graph& g) {
  const int n = g.size();
  DegeneracyResult result;
  std::vector<int> deg(n);
  std::vector<char> removed(n, 0);
  std::set<std::pair<int, Vertex>> queue;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    queue.insert({deg[v], v});
  }
  while (!queue.empty()) {
    auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    removed[v] = 1;
    result.degeneracy = std::max(result.degeneracy, d);
    result.ordering.push_back(v);
    for (Vertex u : g.neighbors(v)) {
      if (removed[u]) continue;
      queue.erase({deg[u], u});
      --deg[u];
      queue.insert({deg[u], u});
    }
  }
  return result;
}

std::vector<VertexSet> enumerate_cliques(const Graph& g) {
  const auto order = degeneracy_ordering(g).ordering;
  std::vector<int> pos(g.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);

  std::vector<VertexSet> out;
  out.push_back({});
  for (Vertex v : order) {
    std::vector<Vertex> later;
    for (Vertex u : g.neighbors(v)) {
      if (pos[u] > pos[v]) later.push_back(u);
    }
    const std::size_t subsets = std::size_t{1} << later.size();
    for (std::size_t mask = 0; mask < subsets; ++mask) {
      VertexSet clique{v};
      bool ok = true;
      for (std::size_t i = 0; i < later.size() && ok; ++i) {
        if (!((mask >> i) & 1)) continue;
        for (Vertex w : clique) {
          if (w != v && !g.adjacent(w, later[i])) { ok = false; break; }
        }
        clique.push_back(later[i]);
      }
      if (!ok) continue;
      std::sort(clique.begin(), clique.end());
      out.push_back(std::move(clique));
    }
  }
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<int> comp(g.size(), -1);
  std::vector<VertexSet> out;
  for (Vertex s = 0; s < g.size(); ++s) {
    if (comp[s] != -1) continue;
    VertexSet block;
    std::vector<Vertex> stack{s};
    comp[s] = static_cast<int>(out.size());
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      block.push_back(v);
      for (Vertex u : g.neighbors(v)) {
        if (comp[u] == -1) {
          comp[u] = comp[s];
          stack.push_back(u);
        }
      }
    }
    std::sort(block.begin(), block.end());
    out.push_back(std::move(block));
  }
  return out;
}

bool is_clique(const Graph& g, const VertexSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (!g.adjacent(s[i], s[j])) return false;
    }
  }
  return true;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (g.adjacent(s[i], s[j])) return false;
    }
  }
  return true;
}

EdgeSet missing_pairs(const Graph& g, const VertexSet& s) {
  EdgeSet out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (!g.adjacent(s[i], s[j])) out.emplace_back(s[i], s[j]);
    }
  }
  return normalize_pairs(std::move(out));
}

Weight total_weight(const WeightMap& w, const VertexSet& s) {
  Weight total = 0;
  for (Vertex v : s) total += w[v];
  return total;
}

WeightMap unit_weights(int n) { return WeightMap(n, 1); }

void check_weights(const Graph& g, const WeightMap& w, bool positive) {
  if (static_cast<int>(w.size()) != g.size()) {
    throw Error(ErrorCode::invalid_argument, "weight map size does not match vertex count");
  }
  if (positive) {
    for (Vertex v = 0; v < g.size(); ++v) {
      if (w[v] < 1) {
        throw Error(ErrorCode::invalid_argument,
                    "weight of vertex " + std::to_string(g.label(v)) + " must be positive");
      }
    }
  }
}

VertexSet all_vertices(const Graph& g) {
  VertexSet out(g.size());
  std::iota(out.begin(), out.end(), 0);
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool contains(const VertexSet& s, Vertex v) { return std::binary_search(s.begin(), s.end(), v); }

}  // namespace achord
