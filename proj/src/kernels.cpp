#include "achord/kernels.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "achord/asteroidal.hpp"
#include "achord/chordal.hpp"
#include "achord/oracle.hpp"

namespace achord {

const char* kernel_verdict_name(KernelVerdict v) {
  switch (v) {
    case KernelVerdict::reduced: return "reduced";
    case KernelVerdict::not_in_class: return "not-in-class";
    case KernelVerdict::resolved_yes: return "resolved-yes";
    case KernelVerdict::resolved_no: return "resolved-no";
  }
  return "reduced";
}

namespace {

using Labels = std::vector<int>;  // sorted graph labels

Labels labels_of(const Graph& g, const VertexSet& s) {
  Labels out;
  for (Vertex v : s) out.push_back(g.label(v));
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet indices_of(const Graph& g, const Labels& labels) {
  std::map<int, Vertex> index;
  for (Vertex v = 0; v < g.size(); ++v) index[g.label(v)] = v;
  VertexSet out;
  for (int l : labels) {
    auto it = index.find(l);
    if (it != index.end()) out.push_back(it->second);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Labels label_union(const Labels& a, const Labels& b) {
  Labels out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Labels label_difference(const Labels& a, const Labels& b) {
  Labels out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Graph delete_labels(const Graph& g, const Labels& labels) { return remove_vertices(g, indices_of(g, labels)); }

// Compressed graph on X plus one vertex per component.
std::pair<Graph, WeightMap> build_compressed(const Graph& g, const Labels& x_labels,
                                             const std::vector<Labels>& components,
                                             const std::vector<Weight>& component_weights, int label_base) {
  const VertexSet x = indices_of(g, x_labels);
  std::vector<VertexSet> comps;
  for (const auto& c : components) comps.push_back(indices_of(g, c));
  const int nx = static_cast<int>(x.size());
  const int n = nx + static_cast<int>(comps.size());
  std::vector<int> labels;
  WeightMap w;
  for (Vertex v : x) {
    labels.push_back(g.label(v));
    w.push_back(1);
  }
  for (std::size_t i = 0; i < comps.size(); ++i) {
    labels.push_back(label_base + static_cast<int>(i));
    w.push_back(component_weights[i]);
  }
  auto touches = [&](Vertex v, const VertexSet& c) {
    for (Vertex u : c) {
      if (g.adjacent(v, u)) return true;
    }
    return false;
  };
  std::vector<VertexPair> edges;
  for (int i = 0; i < nx; ++i) {
    for (int j = i + 1; j < nx; ++j) {
      if (g.adjacent(x[i], x[j])) edges.emplace_back(i, j);
    }
    for (std::size_t c = 0; c < comps.size(); ++c) {
      if (touches(x[i], comps[c])) edges.emplace_back(i, nx + static_cast<int>(c));
    }
  }
  for (std::size_t a = 0; a < comps.size(); ++a) {
    for (std::size_t b = a + 1; b < comps.size(); ++b) {
      bool linked = !set_intersection(comps[a], comps[b]).empty();
      for (std::size_t i = 0; i < comps[a].size() && !linked; ++i) linked = touches(comps[a][i], comps[b]);
      if (linked) edges.emplace_back(nx + static_cast<int>(a), nx + static_cast<int>(b));
    }
  }
  return {Graph(n, normalize_pairs(std::move(edges)), std::move(labels)), std::move(w)};
}

int max_independent_size(const Graph& g, VertexSet candidates) {
  if (candidates.empty()) return 0;
  // Branch on a vertex of maximum degree inside the candidate set.
  Vertex pick = candidates[0];
  int best_deg = -1;
  bool any_edge = false;
  for (Vertex v : candidates) {
    int deg = 0;
    for (Vertex u : candidates) deg += g.adjacent(u, v);
    if (deg > best_deg) {
      best_deg = deg;
      pick = v;
    }
    any_edge = any_edge || deg > 0;
  }
  if (!any_edge) return static_cast<int>(candidates.size());
  VertexSet without = set_difference(candidates, {pick});
  VertexSet with;
  for (Vertex v : without) {
    if (!g.adjacent(v, pick)) with.push_back(v);
  }
  return std::max(max_independent_size(g, without), 1 + max_independent_size(g, with));
}

}  // namespace

KernelInstance replay_trace(const Graph& g, const std::optional<WeightMap>& w, Weight threshold,
                            const std::vector<RuleRecord>& trace) {
  KernelInstance out;
  out.graph = g;
  out.weights = w;
  out.threshold = threshold;
  for (const auto& r : trace) {
    if (r.rule == "construct") {
      auto [h, hw] = build_compressed(out.graph, r.x_labels, r.components, r.component_weights, r.label_base);
      out.graph = std::move(h);
      out.weights = std::move(hw);
    } else if (!r.removed.empty()) {
      const VertexSet gone = indices_of(out.graph, r.removed);
      if (out.weights) {
        WeightMap kept;
        for (Vertex v = 0; v < out.graph.size(); ++v) {
          if (!contains(gone, v)) kept.push_back((*out.weights)[v]);
        }
        out.weights = std::move(kept);
      }
      out.graph = remove_vertices(out.graph, gone);
    }
    out.threshold += r.threshold_delta;
  }
  out.trace = trace;
  return out;
}

SplitEdit split_edit_partition(const Graph& g) {
  const int n = g.size();
  std::vector<Vertex> order = all_vertices(g);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  int m = 0;
  for (int i = 1; i <= n; ++i) {
    if (g.degree(order[i - 1]) >= i - 1) m = i;
  }
  SplitEdit out;
  out.clique.assign(order.begin(), order.begin() + m);
  out.independent.assign(order.begin() + m, order.end());
  std::sort(out.clique.begin(), out.clique.end());
  std::sort(out.independent.begin(), out.independent.end());
  out.pairs = missing_pairs(g, out.clique);
  for (std::size_t i = 0; i < out.independent.size(); ++i) {
    for (std::size_t j = i + 1; j < out.independent.size(); ++j) {
      if (g.adjacent(out.independent[i], out.independent[j])) {
        out.pairs.emplace_back(out.independent[i], out.independent[j]);
      }
    }
  }
  out.pairs = normalize_pairs(std::move(out.pairs));
  return out;
}

EdgeSet split_edit(const Graph& g) { return split_edit_partition(g).pairs; }

bool is_split_graph(const Graph& g) { return split_edit(g).empty(); }

Modulator vc_to_split_modulator(const Graph& g, const VertexSet& vc) {
  for (const auto& e : g.edges()) {
    if (!contains(vc, e.u) && !contains(vc, e.v)) {
      throw Error(ErrorCode::precondition, "edge " + std::to_string(g.label(e.u)) + "-" +
                                               std::to_string(g.label(e.v)) + " is not covered");
    }
  }
  return Modulator{missing_pairs(g, vc), GraphClass::split};
}

std::array<bool, 5> check_split_partition(const Graph& g, const SplitPartition& p, int k) {
  std::array<bool, 5> ok{};
  ok[0] = is_independent(g, p.independent);
  ok[1] = is_clique(g, p.y);
  ok[2] = true;
  for (Vertex x : p.x) {
    for (Vertex y : p.y) {
      if (!g.adjacent(x, y)) ok[2] = false;
    }
  }
  ok[3] = static_cast<int>(p.x.size()) <= (k + 2) * k;
  ok[4] = ok[3] && max_independent_size(g, p.x) <= 2 * k;
  return ok;
}

SplitKernelResult split_is_kernel(const Graph& g, Weight ell, int k) {
  if (k < 0 || ell < 0) throw Error(ErrorCode::invalid_argument, "k and ell must be non-negative");
  SplitKernelResult res;
  KernelInstance& inst = res.instance;
  inst.graph = g;
  inst.threshold = ell;

  const SplitEdit edit = split_edit_partition(g);
  {
    RuleRecord r;
    r.rule = "split-edit";
    r.note = "edit set of size " + std::to_string(edit.pairs.size());
    inst.trace.push_back(r);
  }
  if (static_cast<int>(edit.pairs.size()) > k) {
    inst.verdict = KernelVerdict::not_in_class;
    return res;
  }

  SplitPartition p;
  p.clique = edit.clique;
  p.independent = edit.independent;
  for (const auto& pr : edit.pairs) {
    if (g.adjacent(pr.u, pr.v)) {
      p.deleted.push_back(pr);
    } else {
      p.x = set_union(p.x, {pr.u});
      p.x = set_union(p.x, {pr.v});
    }
  }
  p.y = set_difference(p.clique, p.x);

  // Resolve deleted edges inside I.
  std::vector<VertexPair> order = p.deleted;
  std::sort(order.begin(), order.end(), [&](const VertexPair& a, const VertexPair& b) {
    return std::pair(g.label(a.u), g.label(a.v)) < std::pair(g.label(b.u), g.label(b.v));
  });
  for (const auto& e : order) {
    if (!contains(p.independent, e.u) || !contains(p.independent, e.v)) continue;
    auto missing_in_y = [&](Vertex v) {
      VertexSet out;
      for (Vertex y : p.y) {
        if (!g.adjacent(v, y)) out.push_back(y);
      }
      return out;
    };
    const VertexSet mu = missing_in_y(e.u), mv = missing_in_y(e.v);
    if (static_cast<int>(mu.size()) >= k + 2 && static_cast<int>(mv.size()) >= k + 2) {
      RuleRecord r;
      r.rule = "resolve-deleted-edge";
      r.vertices = labels_of(g, {e.u, e.v});
      r.note = "both endpoints miss at least k+2 vertices of Y";
      inst.trace.push_back(r);
      inst.verdict = KernelVerdict::not_in_class;
      return res;
    }
    const bool take_u = mu.size() < mv.size() || (mu.size() == mv.size() && g.label(e.u) < g.label(e.v));
    const Vertex moved = take_u ? e.u : e.v;
    const VertexSet& away = take_u ? mu : mv;
    p.independent = set_difference(p.independent, {moved});
    p.x = set_union(p.x, set_union({moved}, away));
    p.y = set_difference(p.y, away);
    RuleRecord r;
    r.rule = "resolve-deleted-edge";
    r.vertices = labels_of(g, set_union({moved}, away));
    r.note = "moved endpoint of deleted edge into X";
    inst.trace.push_back(r);
  }
  res.after_resolving = p;

  Labels x = labels_of(g, p.x), y = labels_of(g, p.y), in = labels_of(g, p.independent);
  Graph cur = g;

  // Clique vertices seen from I are never needed.
  {
    Labels gone;
    const VertexSet ii = indices_of(cur, in);
    for (Vertex v : indices_of(cur, y)) {
      for (Vertex u : ii) {
        if (cur.adjacent(u, v)) {
          gone.push_back(cur.label(v));
          break;
        }
      }
    }
    if (!gone.empty()) {
      RuleRecord r;
      r.rule = "drop-clique-neighbors";
      r.removed = gone;
      r.vertices = gone;
      inst.trace.push_back(r);
      cur = delete_labels(cur, gone);
      y = label_difference(y, gone);
    }
  }
  // One vertex of Y suffices; it joins I.
  if (!y.empty()) {
    RuleRecord r;
    r.rule = "shrink-clique";
    r.removed.assign(y.begin() + 1, y.end());
    r.vertices = {y.front()};
    r.note = "kept vertex moved into I";
    inst.trace.push_back(r);
    cur = delete_labels(cur, r.removed);
    in = label_union(in, {y.front()});
    y.clear();
  }
  // X vertices with at least 2k neighbours in I.
  {
    Labels gone;
    const VertexSet ii = indices_of(cur, in);
    for (Vertex u : indices_of(cur, x)) {
      int seen = 0;
      for (Vertex v : ii) seen += cur.adjacent(u, v);
      if (seen >= 2 * k) gone.push_back(cur.label(u));
    }
    if (!gone.empty()) {
      RuleRecord r;
      r.rule = "drop-high-degree";
      r.removed = gone;
      r.vertices = gone;
      inst.trace.push_back(r);
      cur = delete_labels(cur, gone);
      x = label_difference(x, gone);
    }
  }
  // Isolated vertices go into every maximum independent set.
  {
    Labels gone;
    for (Vertex v = 0; v < cur.size(); ++v) {
      if (cur.degree(v) == 0) gone.push_back(cur.label(v));
    }
    if (!gone.empty()) {
      RuleRecord r;
      r.rule = "take-isolated";
      r.removed = gone;
      r.vertices = gone;
      r.threshold_delta = -static_cast<Weight>(gone.size());
      inst.trace.push_back(r);
      cur = delete_labels(cur, gone);
      inst.threshold += r.threshold_delta;
    }
  }
  inst.graph = std::move(cur);
  if (inst.threshold <= 0) {
    inst.verdict = KernelVerdict::resolved_yes;
  } else if (inst.graph.size() == 0) {
    inst.verdict = KernelVerdict::resolved_no;
  }
  return res;
}

IntervalKernelResult interval_is_compress(const Graph& g, Weight ell, int k) {
  if (k < 0) throw Error(ErrorCode::invalid_argument, "k must be non-negative");
  IntervalKernelResult res;
  KernelInstance& inst = res.instance;
  inst.graph = g;
  inst.threshold = ell;

  const auto a = approx_fillin(g, k);
  if (!a) {
    RuleRecord r;
    r.rule = "fill-in";
    r.note = "fill-in exceeds budget";
    inst.trace.push_back(r);
    inst.verdict = KernelVerdict::not_in_class;
    return res;
  }
  Labels x;
  for (const auto& pr : a->pairs) x = label_union(x, labels_of(g, {pr.u, pr.v}));
  {
    RuleRecord r;
    r.rule = "fill-in";
    r.vertices = x;
    r.note = "modulator of size " + std::to_string(a->size());
    inst.trace.push_back(r);
  }
  Graph cur = g;

  // Both growth phases share one loop with different shape filters.
  auto grow = [&](ShapeFilter filter, const char* rule, const char* stop, int& count) {
    while (count < k + 1) {
      auto w = find_x_touching_at(cur, indices_of(cur, x), filter);
      if (!w) return true;
      RuleRecord r;
      r.rule = rule;
      r.vertices = labels_of(cur, w->vertices);
      r.note = "witness " + w->shape.name();
      inst.trace.push_back(r);
      x = label_union(x, r.vertices);
      ++count;
    }
    RuleRecord r;
    r.rule = stop;
    r.note = "applied k+1 times";
    inst.trace.push_back(r);
    inst.verdict = KernelVerdict::not_in_class;
    return false;
  };

  if (!grow(ShapeFilter::f1_only, "grow-f1", "f1-limit", res.f1_growth_steps)) return res;

  // A vertex whose neighbourhood outside X has a large independent
  // set is irrelevant.
  const long long p = 8LL * k * k + 7LL * k + 2;
  for (bool fired = true; fired;) {
    fired = false;
    ++res.irrelevant_checks;
    if (!is_chordal(remove_vertices(cur, indices_of(cur, x))).chordal) {
      res.remainder_chordal_ok = false;
      break;
    }
    const VertexSet xi = indices_of(cur, x);
    std::vector<Vertex> order = all_vertices(cur);
    std::sort(order.begin(), order.end(), [&](Vertex a2, Vertex b2) { return cur.label(a2) < cur.label(b2); });
    for (Vertex v : order) {
      VertexSet nb;
      for (Vertex u : cur.neighbors(v)) {
        if (!contains(xi, u)) nb.push_back(u);
      }
      const Graph h = induced_subgraph(cur, nb);
      if (max_weight_is_chordal(h, unit_weights(h.size())).weight >= p + 1) {
        RuleRecord r;
        r.rule = "drop-irrelevant";
        r.removed = {cur.label(v)};
        r.vertices = r.removed;
        inst.trace.push_back(r);
        x = label_difference(x, r.removed);
        cur = delete_labels(cur, r.removed);
        fired = true;
        break;
      }
    }
  }

  if (!grow(ShapeFilter::any, "grow-any", "any-limit", res.any_growth_steps)) return res;
  res.x_after_growth = x.size();

  // Chordal components are solved directly.
  for (const auto& comp : connected_components(cur)) {
    const Graph h = induced_subgraph(cur, comp);
    if (!is_chordal(h).chordal) continue;
    const Weight alpha = max_weight_is_chordal(h, unit_weights(h.size())).weight;
    RuleRecord r;
    r.rule = "solve-chordal-component";
    r.removed = labels_of(cur, comp);
    r.vertices = r.removed;
    r.threshold_delta = -alpha;
    inst.trace.push_back(r);
    inst.threshold -= alpha;
    x = label_difference(x, r.removed);
  }
  {
    Labels gone;
    for (const auto& r : inst.trace) {
      if (r.rule == "solve-chordal-component") gone = label_union(gone, r.removed);
    }
    cur = delete_labels(cur, gone);
  }
  if (inst.threshold <= 0) {
    inst.graph = cur;
    inst.verdict = KernelVerdict::resolved_yes;
    return res;
  }
  if (cur.size() == 0) {
    inst.graph = cur;
    inst.verdict = KernelVerdict::resolved_no;
    return res;
  }

  // Components of G - (X u N(Y)) for every Y within X of size <= 2.
  const VertexSet xi = indices_of(cur, x);
  std::set<Labels> family;
  auto collect = [&](const VertexSet& ys) {
    VertexSet drop = xi;
    for (Vertex y : ys) {
      VertexSet nb(cur.neighbors(y).begin(), cur.neighbors(y).end());
      drop = set_union(drop, nb);
    }
    const VertexSet keep = set_difference(all_vertices(cur), drop);
    const Graph h = induced_subgraph(cur, keep);
    for (const auto& c : connected_components(h)) {
      VertexSet orig;
      for (Vertex v : c) orig.push_back(keep[v]);
      family.insert(labels_of(cur, orig));
    }
  };
  collect({});
  for (std::size_t i = 0; i < xi.size(); ++i) {
    collect({xi[i]});
    for (std::size_t j = i + 1; j < xi.size(); ++j) collect({xi[i], xi[j]});
  }

  RuleRecord r;
  r.rule = "construct";
  r.x_labels = x;
  r.components.assign(family.begin(), family.end());
  for (const auto& c : r.components) {
    const Graph h = induced_subgraph(cur, indices_of(cur, c));
    r.component_weights.push_back(max_weight_is_chordal(h, unit_weights(h.size())).weight);
  }
  int max_label = -1;
  for (int l : g.labels()) max_label = std::max(max_label, l);
  r.label_base = max_label + 1;
  auto [gs, ws] = build_compressed(cur, r.x_labels, r.components, r.component_weights, r.label_base);
  r.note = std::to_string(r.components.size()) + " components";
  inst.trace.push_back(r);
  inst.graph = std::move(gs);
  inst.weights = std::move(ws);
  inst.verdict = KernelVerdict::reduced;
  return res;
}

bool default_clique_oracle(const Graph& g, const WeightMap& w, Weight threshold) {
  return brute_force(OracleProblem::max_wclique, g, w).value >= threshold;
}

TuringKernelResult turing_kernel_wclique(const Graph& g, const WeightMap& w, Weight threshold, int k,
                                         const CliqueOracle& oracle) {
  if (k < 0) throw Error(ErrorCode::invalid_argument, "k must be non-negative");
  check_weights(g, w, true);
  TuringKernelResult res;
  const auto a = approx_fillin(g, k);
  if (!a) {
    res.verdict = KernelVerdict::not_in_class;
    return res;
  }
  VertexSet x;
  for (const auto& pr : a->pairs) x = set_union(x, {pr.u, pr.v});
  res.x_labels = labels_of(g, x);
  const Graph filled = apply_modulator(g, a->pairs, ModulatorMode::add);
  bool yes = g.size() == 0 && threshold <= 0;
  for (const auto& c : maximal_cliques_chordal(filled)) {
    const VertexSet xc = set_intersection(x, c);
    const Weight rest = total_weight(w, set_difference(c, xc));
    TuringQuery q;
    q.labels = labels_of(g, xc);
    q.threshold = std::max<Weight>(0, threshold - rest);
    WeightMap sub_w;
    for (Vertex v : xc) sub_w.push_back(w[v]);
    q.answer = oracle(induced_subgraph(g, xc), sub_w, q.threshold);
    yes = yes || q.answer;
    res.queries.push_back(std::move(q));
  }
  res.verdict = yes ? KernelVerdict::resolved_yes : KernelVerdict::resolved_no;
  return res;
}

}  // namespace achord
