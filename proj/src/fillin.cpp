#include "achord/fillin.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace achord {

const char* graph_class_name(GraphClass c) {
  switch (c) {
    case GraphClass::chordal: return "chordal";
    case GraphClass::interval: return "interval";
    case GraphClass::split: return "split";
    case GraphClass::complete: return "complete";
  }
  return "chordal";
}

namespace {

using Chords = std::vector<std::pair<int, int>>;

// All triangulations of the polygon with corners i..j (edge i-j present).
std::vector<Chords> polygon_triangulations(int i, int j) {
  if (j - i < 2) return {Chords{}};
  std::vector<Chords> out;
  for (int m = i + 1; m < j; ++m) {
    for (const auto& left : polygon_triangulations(i, m)) {
      for (const auto& right : polygon_triangulations(m, j)) {
        Chords c = left;
        c.insert(c.end(), right.begin(), right.end());
        if (m - i >= 2) c.emplace_back(i, m);
        if (j - m >= 2) c.emplace_back(m, j);
        out.push_back(std::move(c));
      }
    }
  }
  return out;
}

std::vector<EdgeSet> cycle_triangulations(const std::vector<Vertex>& cycle) {
  std::vector<EdgeSet> out;
  for (const auto& chords : polygon_triangulations(0, static_cast<int>(cycle.size()) - 1)) {
    std::vector<VertexPair> pairs;
    for (auto [a, b] : chords) pairs.emplace_back(cycle[a], cycle[b]);
    out.push_back(normalize_pairs(std::move(pairs)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

class FillinSearch {
 public:
  explicit FillinSearch(const Graph& g) : g_(g) {}

  std::optional<EdgeSet> run(const EdgeSet& added, int budget) {
    auto known = failed_.find(added);
    if (known != failed_.end() && known->second >= budget) return std::nullopt;
    const Graph h = apply_modulator(g_, added, ModulatorMode::add);
    const auto cycle = shortest_chordless_cycle(h);
    if (cycle.empty()) return added;
    const int need = static_cast<int>(cycle.size()) - 3;
    if (need <= budget) {
      for (const auto& tri : cycle_triangulations(cycle)) {
        if (auto found = run(set_union_pairs(added, tri), budget - need)) return found;
      }
    }
    auto& slot = failed_[added];
    slot = std::max(slot, budget);
    return std::nullopt;
  }

 private:
  static EdgeSet set_union_pairs(const EdgeSet& a, const EdgeSet& b) {
    EdgeSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  }

  const Graph& g_;
  std::map<EdgeSet, int> failed_;
};

}  // namespace

std::optional<Modulator> exact_fillin(const Graph& g, int k) {
  if (k < 0) throw Error(ErrorCode::invalid_argument, "budget must be non-negative");
  FillinSearch search(g);
  // Iterative deepening: the first budget that succeeds is the minimum.
  for (int b = 0; b <= k; ++b) {
    if (auto found = search.run({}, b)) return Modulator{*found, GraphClass::chordal};
  }
  return std::nullopt;
}

Modulator minimal_triangulation(const Graph& g) {
  const int n = g.size();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (const auto& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = 1;
  std::vector<char> eliminated(n, 0);
  std::vector<VertexPair> fill;
  for (int step = 0; step < n; ++step) {
    Vertex pick = -1;
    int best = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (eliminated[v]) continue;
      int cost = 0;
      for (Vertex a = 0; a < n; ++a) {
        if (eliminated[a] || !adj[v][a]) continue;
        for (Vertex b = a + 1; b < n; ++b) {
          if (!eliminated[b] && adj[v][b] && !adj[a][b]) ++cost;
        }
      }
      if (pick == -1 || cost < best) {
        pick = v;
        best = cost;
      }
    }
    eliminated[pick] = 1;
    for (Vertex a = 0; a < n; ++a) {
      if (eliminated[a] || !adj[pick][a]) continue;
      for (Vertex b = a + 1; b < n; ++b) {
        if (!eliminated[b] && adj[pick][b] && !adj[a][b]) {
          adj[a][b] = adj[b][a] = 1;
          fill.emplace_back(a, b);
        }
      }
    }
  }
  EdgeSet pairs = normalize_pairs(std::move(fill));
  // A triangulation is minimal iff no single fill edge can be dropped.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      EdgeSet trial = pairs;
      trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
      if (is_chordal(apply_modulator(g, trial, ModulatorMode::add)).chordal) {
        pairs = std::move(trial);
        changed = true;
        break;
      }
    }
  }
  return Modulator{pairs, GraphClass::chordal};
}

std::optional<Modulator> approx_fillin(const Graph& g, int k) {
  if (k < 0) throw Error(ErrorCode::invalid_argument, "budget must be non-negative");
  Modulator heuristic = minimal_triangulation(g);
  if (heuristic.size() <= k) return heuristic;
  return exact_fillin(g, k);
}

Deficiency bag_deficiency(const Graph& g, const VertexSet& bag) {
  for (Vertex v : bag) {
    if (v < 0 || v >= g.size()) throw Error(ErrorCode::graph, "bag vertex out of range");
  }
  Deficiency d;
  d.pairs = missing_pairs(g, bag);
  d.count = static_cast<int>(d.pairs.size());
  return d;
}

AlmostChordalDecomposition decomposition_from_modulator(const Graph& g, const Modulator& a) {
  const Graph h = apply_modulator(g, a.pairs, ModulatorMode::add);
  if (!is_chordal(h).chordal) throw Error(ErrorCode::precondition, "modulator does not triangulate the graph");
  return {a, make_nice(clique_tree(h), g)};
}

std::optional<AlmostChordalDecomposition> kalmost_nice_decomposition(const Graph& g, int k) {
  if (k < 0) throw Error(ErrorCode::invalid_argument, "budget must be non-negative");
  Modulator heuristic = minimal_triangulation(g);
  if (heuristic.size() <= k) return decomposition_from_modulator(g, heuristic);
  auto exact = exact_fillin(g, k);
  if (!exact) return std::nullopt;
  return decomposition_from_modulator(g, *exact);
}

}  // namespace achord
