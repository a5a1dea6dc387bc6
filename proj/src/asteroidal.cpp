#include "achord/asteroidal.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <tuple>

namespace achord {

std::string WitnessShape::name() const {
  switch (kind) {
    case ShapeKind::f1: return "F1";
    case ShapeKind::f2: return "F2";
    case ShapeKind::f3: return "F3(" + std::to_string(r) + ")";
    case ShapeKind::f4: return "F4(" + std::to_string(r) + ")";
    case ShapeKind::f5: return "F5";
    case ShapeKind::unclassified: return "unclassified";
  }
  return "unclassified";
}

WitnessTemplate make_template(ShapeKind kind, int r) {
  WitnessTemplate t;
  t.shape = {kind, (kind == ShapeKind::f3 || kind == ShapeKind::f4) ? r : 0};
  std::vector<VertexPair> e;
  int n = 0;
  switch (kind) {
    case ShapeKind::f1: {
      // 0 centre, 1..3 middle, 4..6 terminals
      n = 7;
      for (int i = 1; i <= 3; ++i) {
        e.emplace_back(0, i);
        e.emplace_back(i, i + 3);
      }
      t.terminals = {4, 5, 6};
      break;
    }
    case ShapeKind::f2: {
      // path z1 x1 x2 x3 z3 = 0..4, apex 5 over x1..x3, handle 6
      n = 7;
      for (int i = 0; i < 4; ++i) e.emplace_back(i, i + 1);
      for (int i = 1; i <= 3; ++i) e.emplace_back(5, i);
      e.emplace_back(5, 6);
      t.terminals = {0, 4, 6};
      break;
    }
    case ShapeKind::f3: {
      if (r < 2) throw Error(ErrorCode::invalid_argument, "F3 needs r >= 2");
      // x1..xr = 0..r-1, apex r, z1 = r+1, z2 = r+2, z3 = r+3
      n = r + 4;
      for (int i = 0; i + 1 < r; ++i) e.emplace_back(i, i + 1);
      for (int i = 0; i < r; ++i) e.emplace_back(r, i);
      e.emplace_back(r + 1, 0);
      e.emplace_back(r + 2, r);
      e.emplace_back(r + 3, r - 1);
      t.terminals = {r + 1, r + 2, r + 3};
      break;
    }
    case ShapeKind::f4: {
      if (r < 1) throw Error(ErrorCode::invalid_argument, "F4 needs r >= 1");
      // x1..xr = 0..r-1, centres r and r+1, z1 = r+2, z2 = r+3, z3 = r+4
      n = r + 5;
      const int y1 = r, y2 = r + 1, z1 = r + 2, z2 = r + 3, z3 = r + 4;
      for (int i = 0; i + 1 < r; ++i) e.emplace_back(i, i + 1);
      for (int i = 0; i < r; ++i) {
        e.emplace_back(y1, i);
        e.emplace_back(y2, i);
      }
      e.emplace_back(y1, y2);
      e.emplace_back(z1, 0);
      e.emplace_back(z1, y1);
      e.emplace_back(z3, r - 1);
      e.emplace_back(z3, y2);
      e.emplace_back(z2, y1);
      e.emplace_back(z2, y2);
      t.terminals = {z1, z2, z3};
      break;
    }
    case ShapeKind::f5: {
      n = 6;
      for (int i = 0; i < 6; ++i) e.emplace_back(i, (i + 1) % 6);
      t.terminals = {0, 2, 4};
      break;
    }
    case ShapeKind::unclassified:
      throw Error(ErrorCode::invalid_argument, "no template for unclassified");
  }
  t.graph = Graph(n, normalize_pairs(std::move(e)));
  return t;
}

namespace {

// Component ids of g[mask] - N[x]; -1 for vertices outside.
std::vector<int> components_avoiding(const Graph& g, const std::vector<char>& mask, Vertex x) {
  const int n = g.size();
  std::vector<int> comp(n, -1);
  std::vector<char> blocked(n, 0);
  blocked[x] = 1;
  for (Vertex u : g.neighbors(x)) blocked[u] = 1;
  int next = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (!mask[s] || blocked[s] || comp[s] != -1) continue;
    std::vector<Vertex> stack{s};
    comp[s] = next;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex u : g.neighbors(v)) {
        if (mask[u] && !blocked[u] && comp[u] == -1) {
          comp[u] = next;
          stack.push_back(u);
        }
      }
    }
    ++next;
  }
  return comp;
}

bool same_side(const std::vector<int>& comp, Vertex a, Vertex b) {
  return comp[a] != -1 && comp[a] == comp[b];
}

bool is_at_in(const Graph& g, const std::vector<char>& mask, const Triple& t) {
  const auto [a, b, c] = t;
  if (a == b || b == c || a == c) return false;
  if (!mask[a] || !mask[b] || !mask[c]) return false;
  if (g.adjacent(a, b) || g.adjacent(b, c) || g.adjacent(a, c)) return false;
  return same_side(components_avoiding(g, mask, c), a, b) &&
         same_side(components_avoiding(g, mask, a), b, c) &&
         same_side(components_avoiding(g, mask, b), a, c);
}

Triple sorted(Triple t) {
  std::sort(t.begin(), t.end());
  return t;
}

// Greedy deletion in increasing label order; by monotonicity of the AT
// property one pass leaves an inclusion-minimal set.
VertexSet minimize_within(const Graph& g, std::vector<char> mask, const Triple& t) {
  std::vector<Vertex> order;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (mask[v] && v != t[0] && v != t[1] && v != t[2]) order.push_back(v);
  }
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.label(a) < g.label(b); });
  for (Vertex v : order) {
    mask[v] = 0;
    if (!is_at_in(g, mask, t)) mask[v] = 1;
  }
  VertexSet out;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (mask[v]) out.push_back(v);
  }
  return out;
}

// Template isomorphism with terminals mapped onto terminals.
class TemplateMatcher {
 public:
  TemplateMatcher(const Graph& pattern, const Triple& pt, const Graph& target, const Triple& tt)
      : p_(pattern), g_(target), map_(pattern.size(), -1), used_(target.size(), 0),
        p_term_(pattern.size(), 0), g_term_(target.size(), 0) {
    for (Vertex v : pt) p_term_[v] = 1;
    for (Vertex v : tt) g_term_[v] = 1;
    // BFS order from the first terminal so every vertex after the first has
    // an already-mapped neighbour.
    std::vector<char> seen(p_.size(), 0);
    std::deque<Vertex> queue{pt[0]};
    seen[pt[0]] = 1;
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      order_.push_back(v);
      for (Vertex u : p_.neighbors(v)) {
        if (!seen[u]) { seen[u] = 1; queue.push_back(u); }
      }
    }
  }

  bool run() {
    if (p_.size() != g_.size() || p_.edge_count() != g_.edge_count()) return false;
    if (static_cast<int>(order_.size()) != p_.size()) return false;
    return extend(0);
  }

 private:
  bool extend(std::size_t i) {
    if (i == order_.size()) return true;
    const Vertex pv = order_[i];
    for (Vertex gv = 0; gv < g_.size(); ++gv) {
      if (used_[gv] || p_term_[pv] != g_term_[gv] || p_.degree(pv) != g_.degree(gv)) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        const Vertex pu = order_[j];
        if (p_.adjacent(pv, pu) != g_.adjacent(gv, map_[pu])) ok = false;
      }
      if (!ok) continue;
      map_[pv] = gv;
      used_[gv] = 1;
      if (extend(i + 1)) return true;
      map_[pv] = -1;
      used_[gv] = 0;
    }
    return false;
  }

  const Graph& p_;
  const Graph& g_;
  std::vector<Vertex> order_;
  std::vector<Vertex> map_;
  std::vector<char> used_;
  std::vector<char> p_term_;
  std::vector<char> g_term_;
};

bool matches(const WitnessTemplate& tpl, const Graph& f, const Triple& t) {
  return TemplateMatcher(tpl.graph, tpl.terminals, f, t).run();
}

bool passes(const WitnessShape& s, ShapeFilter filter) {
  if (s.kind == ShapeKind::unclassified) return false;
  return filter == ShapeFilter::any || s.kind == ShapeKind::f1;
}

}  // namespace

bool is_asteroidal_triple(const Graph& g, const Triple& t) {
  for (Vertex v : t) {
    if (v < 0 || v >= g.size()) return false;
  }
  return is_at_in(g, std::vector<char>(g.size(), 1), t);
}

std::optional<Triple> find_AT(const Graph& g, const std::optional<VertexSet>& restrict) {
  VertexSet pool = restrict ? *restrict : all_vertices(g);
  std::vector<char> all(g.size(), 1);
  std::vector<std::vector<int>> comp(g.size());
  for (Vertex v : pool) comp[v] = components_avoiding(g, all, v);
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = i + 1; j < pool.size(); ++j) {
      const Vertex a = pool[i], b = pool[j];
      if (g.adjacent(a, b)) continue;
      for (std::size_t l = j + 1; l < pool.size(); ++l) {
        const Vertex c = pool[l];
        if (g.adjacent(a, c) || g.adjacent(b, c)) continue;
        if (same_side(comp[c], a, b) && same_side(comp[a], b, c) && same_side(comp[b], a, c)) {
          return Triple{a, b, c};
        }
      }
    }
  }
  return std::nullopt;
}

ATWitness minimize_at_witness(const Graph& g, const Triple& t) {
  if (!is_asteroidal_triple(g, t)) throw Error(ErrorCode::precondition, "triple is not an AT");
  ATWitness w;
  w.terminals = sorted(t);
  w.vertices = minimize_within(g, std::vector<char>(g.size(), 1), t);
  Graph f = induced_subgraph(g, w.vertices);
  Triple local{};
  for (int i = 0; i < 3; ++i) {
    local[i] = static_cast<Vertex>(std::lower_bound(w.vertices.begin(), w.vertices.end(), w.terminals[i]) -
                                   w.vertices.begin());
  }
  w.shape = classify_witness(f, local);
  return w;
}

WitnessShape classify_witness(const Graph& f, const Triple& t) {
  const int n = f.size();
  std::vector<WitnessTemplate> candidates;
  if (n == 7) {
    candidates.push_back(make_template(ShapeKind::f1));
    candidates.push_back(make_template(ShapeKind::f2));
  }
  if (n == 6) candidates.push_back(make_template(ShapeKind::f5));
  if (n - 4 >= 2 && n - 4 != 3) candidates.push_back(make_template(ShapeKind::f3, n - 4));
  if (n - 5 >= 1) candidates.push_back(make_template(ShapeKind::f4, n - 5));
  for (const auto& tpl : candidates) {
    if (matches(tpl, f, t)) return tpl.shape;
  }
  return {};
}

std::optional<ATWitness> find_x_touching_at(const Graph& g, const VertexSet& x, ShapeFilter filter) {
  const int n = g.size();
  EdgeSet inside;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      if (g.adjacent(x[i], x[j])) inside.emplace_back(x[i], x[j]);
    }
  }
  const Graph h = apply_modulator(g, inside, ModulatorMode::remove);
  std::vector<char> in_x(n, 0);
  for (Vertex v : x) in_x[v] = 1;

  // All-pairs distances in h for the search order.
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
  for (Vertex s = 0; s < n; ++s) {
    std::deque<Vertex> queue{s};
    dist[s][s] = 0;
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex u : h.neighbors(v)) {
        if (dist[s][u] == -1) {
          dist[s][u] = dist[s][v] + 1;
          queue.push_back(u);
        }
      }
    }
  }

  auto make_witness = [&](const VertexSet& verts, const Triple& t) {
    ATWitness w;
    w.terminals = sorted(t);
    w.vertices = verts;
    Graph f = induced_subgraph(h, verts);
    Triple local{};
    for (int i = 0; i < 3; ++i) {
      local[i] = static_cast<Vertex>(std::lower_bound(verts.begin(), verts.end(), w.terminals[i]) - verts.begin());
    }
    w.shape = classify_witness(f, local);
    return w;
  };

  // A touching witness for t inside `region`, if one exists: either all
  // non-terminal X vertices dropped, or (terminals outside X) exactly one kept.
  auto touching_witness = [&](const std::vector<char>& region, const Triple& t) -> std::optional<VertexSet> {
    std::vector<char> base(n, 0);
    for (Vertex v = 0; v < n; ++v) base[v] = region[v] && !in_x[v];
    for (Vertex v : t) base[v] = region[v];
    if (is_at_in(h, base, t)) return minimize_within(h, base, t);
    if (in_x[t[0]] || in_x[t[1]] || in_x[t[2]]) return std::nullopt;
    for (Vertex v : x) {
      if (!region[v]) continue;
      base[v] = 1;
      if (is_at_in(h, base, t)) return minimize_within(h, base, t);
      base[v] = 0;
    }
    return std::nullopt;
  };

  std::set<VertexSet> explored;
  std::vector<VertexSet> regions{all_vertices(h)};
  while (!regions.empty()) {
    VertexSet region_set = std::move(regions.front());
    regions.erase(regions.begin());
    if (!explored.insert(region_set).second) continue;
    std::vector<char> region(n, 0);
    for (Vertex v : region_set) region[v] = 1;
    std::vector<std::vector<int>> comp(n);
    for (Vertex v : region_set) comp[v] = components_avoiding(h, region, v);

    std::vector<std::tuple<int, Triple>> triples;
    for (std::size_t i = 0; i < region_set.size(); ++i) {
      for (std::size_t j = i + 1; j < region_set.size(); ++j) {
        const Vertex a = region_set[i], b = region_set[j];
        if (h.adjacent(a, b)) continue;
        for (std::size_t l = j + 1; l < region_set.size(); ++l) {
          const Vertex c = region_set[l];
          if (h.adjacent(a, c) || h.adjacent(b, c)) continue;
          if (same_side(comp[c], a, b) && same_side(comp[a], b, c) && same_side(comp[b], a, c)) {
            triples.emplace_back(dist[a][b] + dist[b][c] + dist[a][c], Triple{a, b, c});
          }
        }
      }
    }
    std::sort(triples.begin(), triples.end());
    for (const auto& [total, t] : triples) {
      auto verts = touching_witness(region, t);
      if (!verts) continue;
      ATWitness w = make_witness(*verts, t);
      if (passes(w.shape, filter)) return w;
      // Smaller witnesses for other triples may hide inside this one.
      if (verts->size() < region_set.size()) regions.push_back(*verts);
    }
  }
  return std::nullopt;
}

}  // namespace achord
