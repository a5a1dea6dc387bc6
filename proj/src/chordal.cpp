#include "achord/chordal.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <sstream>
#include <string>

namespace achord {

namespace {

// BFS from `a` through vertices outside N[v]; returns, for every neighbor b
// of v that is not adjacent to a, a shortest a..b path whose interior avoids
// N[v]. Paths come back as parent arrays; -1 marks unreachable targets.
struct AvoidingBfs {
  std::vector<int> dist;
  std::vector<Vertex> parent;
};

AvoidingBfs bfs_avoiding(const Graph& g, Vertex v, Vertex a) {
  const int n = g.size();
  AvoidingBfs r{std::vector<int>(n, -1), std::vector<Vertex>(n, -1)};
  std::deque<Vertex> queue{a};
  r.dist[a] = 0;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : g.neighbors(x)) {
      if (r.dist[y] != -1 || y == v) continue;
      r.dist[y] = r.dist[x] + 1;
      r.parent[y] = x;
      // Neighbors of v end a path; only vertices outside N[v] are expanded.
      if (!g.adjacent(v, y)) queue.push_back(y);
    }
  }
  return r;
}

std::vector<Vertex> cycle_from(const AvoidingBfs& r, Vertex v, Vertex b) {
  std::vector<Vertex> path;
  for (Vertex x = b; x != -1; x = r.parent[x]) path.push_back(x);
  std::reverse(path.begin(), path.end());  // a ... b
  std::vector<Vertex> cycle{v};
  cycle.insert(cycle.end(), path.begin(), path.end());
  return cycle;
}

// Shortest chordless cycle through v, preferring the given neighbor pair order.
std::vector<Vertex> best_cycle_at(const Graph& g, Vertex v, std::size_t limit) {
  std::vector<Vertex> best;
  auto nb = g.neighbors(v);
  for (std::size_t i = 0; i < nb.size(); ++i) {
    const Vertex a = nb[i];
    AvoidingBfs r;
    bool searched = false;
    for (std::size_t j = i + 1; j < nb.size(); ++j) {
      const Vertex b = nb[j];
      if (g.adjacent(a, b)) continue;
      if (!searched) {
        r = bfs_avoiding(g, v, a);
        searched = true;
      }
      if (r.dist[b] < 0) continue;
      const std::size_t len = static_cast<std::size_t>(r.dist[b]) + 2;
      if (len < limit && (best.empty() || len < best.size())) best = cycle_from(r, v, b);
    }
  }
  return best;
}

}  // namespace

ChordalityResult is_chordal(const Graph& g) {
  const int n = g.size();
  ChordalityResult result;
  // Maximum cardinality search: visit order is the reverse of a PEO.
  std::vector<int> weight(n, 0);
  std::vector<char> visited(n, 0);
  std::vector<Vertex> visit;
  visit.reserve(n);
  for (int step = 0; step < n; ++step) {
    Vertex pick = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (!visited[v] && (pick == -1 || weight[v] > weight[pick])) pick = v;
    }
    visited[pick] = 1;
    visit.push_back(pick);
    for (Vertex u : g.neighbors(pick)) {
      if (!visited[u]) ++weight[u];
    }
  }
  std::vector<Vertex> peo(visit.rbegin(), visit.rend());
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[peo[i]] = i;

  for (Vertex v : peo) {
    Vertex parent = -1;
    for (Vertex u : g.neighbors(v)) {
      if (pos[u] > pos[v] && (parent == -1 || pos[u] < pos[parent])) parent = u;
    }
    if (parent == -1) continue;
    for (Vertex u : g.neighbors(v)) {
      if (u == parent || pos[u] < pos[v] || g.adjacent(u, parent)) continue;
      // v has two non-adjacent later neighbours: recover a certificate.
      result.cycle = best_cycle_at(g, v, std::numeric_limits<std::size_t>::max());
      if (result.cycle.empty()) result.cycle = shortest_chordless_cycle(g);
      return result;
    }
  }
  result.chordal = true;
  result.peo = std::move(peo);
  return result;
}

std::vector<Vertex> shortest_chordless_cycle(const Graph& g) {
  std::vector<Vertex> best;
  for (Vertex v = 0; v < g.size(); ++v) {
    const std::size_t limit = best.empty() ? std::numeric_limits<std::size_t>::max() : best.size();
    auto c = best_cycle_at(g, v, limit);
    if (!c.empty()) best = std::move(c);
    if (best.size() == 4) break;
  }
  return best;
}

std::vector<VertexSet> maximal_cliques_chordal(const Graph& g) {
  auto res = is_chordal(g);
  if (!res.chordal) throw Error(ErrorCode::precondition, "graph is not chordal");
  const int n = g.size();
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[res.peo[i]] = i;
  std::vector<VertexSet> cand;
  for (Vertex v : res.peo) {
    VertexSet c{v};
    for (Vertex u : g.neighbors(v)) {
      if (pos[u] > pos[v]) c.push_back(u);
    }
    std::sort(c.begin(), c.end());
    cand.push_back(std::move(c));
  }
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  std::vector<VertexSet> out;
  for (const auto& c : cand) {
    bool dominated = false;
    for (const auto& other : cand) {
      if (other.size() > c.size() && std::includes(other.begin(), other.end(), c.begin(), c.end())) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(c);
  }
  return out;
}

TreeDecomposition clique_tree(const Graph& g) {
  TreeDecomposition t;
  if (g.size() == 0) {
    t.bags.push_back({});
    return t;
  }
  t.bags = maximal_cliques_chordal(g);
  const std::size_t c = t.bags.size();
  // Maximum-weight spanning tree of the clique intersection graph (Prim).
  std::vector<char> in_tree(c, 0);
  std::vector<int> best(c, -1);
  std::vector<int> link(c, -1);
  in_tree[0] = 1;
  auto relax = [&](std::size_t from) {
    for (std::size_t j = 0; j < c; ++j) {
      if (in_tree[j]) continue;
      const int w = static_cast<int>(set_intersection(t.bags[from], t.bags[j]).size());
      if (w > best[j]) {
        best[j] = w;
        link[j] = static_cast<int>(from);
      }
    }
  };
  relax(0);
  for (std::size_t step = 1; step < c; ++step) {
    int pick = -1;
    for (std::size_t j = 0; j < c; ++j) {
      if (!in_tree[j] && (pick == -1 || best[j] > best[pick])) pick = static_cast<int>(j);
    }
    in_tree[pick] = 1;
    t.tree_edges.emplace_back(link[pick], pick);
    relax(pick);
  }
  return t;
}

std::optional<std::string> validate_decomposition(const TreeDecomposition& t, const Graph& g) {
  const int nb = static_cast<int>(t.bags.size());
  if (nb == 0) return "tree: no bags";
  for (const auto& bag : t.bags) {
    for (std::size_t i = 0; i < bag.size(); ++i) {
      if (bag[i] < 0 || bag[i] >= g.size()) return "bag: vertex out of range";
      if (i > 0 && bag[i - 1] >= bag[i]) return "bag: not sorted or repeated vertex";
    }
  }
  if (static_cast<int>(t.tree_edges.size()) != nb - 1) return "tree: edge count is not bags - 1";
  std::vector<std::vector<int>> adj(nb);
  for (auto [a, b] : t.tree_edges) {
    if (a < 0 || b < 0 || a >= nb || b >= nb || a == b) return "tree: bad edge";
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  {
    std::vector<char> seen(nb, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 0;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      ++count;
      for (int y : adj[x]) {
        if (!seen[y]) { seen[y] = 1; stack.push_back(y); }
      }
    }
    if (count != nb) return "tree: not connected";
  }
  std::vector<std::vector<int>> holders(g.size());
  for (int i = 0; i < nb; ++i) {
    for (Vertex v : t.bags[i]) holders[v].push_back(i);
  }
  for (Vertex v = 0; v < g.size(); ++v) {
    if (holders[v].empty()) return "T1: vertex " + std::to_string(g.label(v)) + " in no bag";
  }
  for (const auto& e : g.edges()) {
    bool found = false;
    for (int i : holders[e.u]) {
      if (contains(t.bags[i], e.v)) { found = true; break; }
    }
    if (!found) {
      return "T2: edge " + std::to_string(g.label(e.u)) + "-" + std::to_string(g.label(e.v)) +
             " in no bag";
    }
  }
  for (Vertex v = 0; v < g.size(); ++v) {
    int inner = 0;
    for (auto [a, b] : t.tree_edges) {
      if (contains(t.bags[a], v) && contains(t.bags[b], v)) ++inner;
    }
    if (inner != static_cast<int>(holders[v].size()) - 1) {
      return "T3: bags holding vertex " + std::to_string(g.label(v)) + " are not connected";
    }
  }
  return std::nullopt;
}

const char* node_kind_name(NodeKind kind) {
  switch (kind) {
    case NodeKind::leaf: return "leaf";
    case NodeKind::introduce: return "introduce";
    case NodeKind::forget: return "forget";
    case NodeKind::join: return "join";
  }
  return "leaf";
}

int NiceTreeDecomposition::max_deficiency() const {
  std::size_t m = 0;
  for (const auto& node : nodes) m = std::max(m, node.missing.size());
  return static_cast<int>(m);
}

namespace {

class NiceBuilder {
 public:
  NiceBuilder(const TreeDecomposition& t, const Graph& g) : t_(t), g_(g), adj_(t.bags.size()) {
    for (auto [a, b] : t.tree_edges) {
      adj_[a].push_back(b);
      adj_[b].push_back(a);
    }
    for (auto& list : adj_) std::sort(list.begin(), list.end());
  }

  NiceTreeDecomposition build() {
    int top = build_subtree(0, -1);
    for (Vertex v : t_.bags[0]) top = add(NodeKind::forget, v, {top});
    out_.root = top;
    return std::move(out_);
  }

 private:
  int add(NodeKind kind, Vertex v, std::vector<int> children) {
    NiceNode node;
    node.kind = kind;
    node.vertex = v;
    if (kind == NodeKind::introduce) {
      node.bag = set_union(out_.nodes[children[0]].bag, {v});
    } else if (kind == NodeKind::forget) {
      node.bag = set_difference(out_.nodes[children[0]].bag, {v});
    } else if (kind == NodeKind::join) {
      node.bag = out_.nodes[children[0]].bag;
    }
    node.missing = missing_pairs(g_, node.bag);
    const int id = static_cast<int>(out_.nodes.size());
    for (int c : children) out_.nodes[c].parent = id;
    node.children = std::move(children);
    out_.nodes.push_back(std::move(node));
    return id;
  }

  // Chain of forgets then introduces turning the bag of `top` into `target`.
  int morph(int top, const VertexSet& target) {
    const VertexSet from = out_.nodes[top].bag;
    for (Vertex v : set_difference(from, target)) top = add(NodeKind::forget, v, {top});
    for (Vertex v : set_difference(target, from)) top = add(NodeKind::introduce, v, {top});
    return top;
  }

  int build_subtree(int t, int parent) {
    std::vector<int> tops;
    for (int c : adj_[t]) {
      if (c == parent) continue;
      tops.push_back(morph(build_subtree(c, t), t_.bags[t]));
    }
    if (tops.empty()) return morph(add(NodeKind::leaf, -1, {}), t_.bags[t]);
    int top = tops[0];
    for (std::size_t i = 1; i < tops.size(); ++i) top = add(NodeKind::join, -1, {top, tops[i]});
    return top;
  }

  const TreeDecomposition& t_;
  const Graph& g_;
  std::vector<std::vector<int>> adj_;
  NiceTreeDecomposition out_;
};

}  // namespace

NiceTreeDecomposition make_nice(const TreeDecomposition& t, const Graph& g) {
  if (auto violation = validate_decomposition(t, g)) {
    throw Error(ErrorCode::decomposition, *violation);
  }
  return NiceBuilder(t, g).build();
}

std::optional<std::string> validate_nice(const NiceTreeDecomposition& t, const Graph& g) {
  const int count = static_cast<int>(t.nodes.size());
  if (count == 0 || t.root < 0 || t.root >= count) return "nice: missing root";
  if (t.nodes[t.root].parent != -1) return "nice: root has a parent";
  if (!t.nodes[t.root].bag.empty()) return "nice: root bag not empty";
  TreeDecomposition plain;
  for (int id = 0; id < count; ++id) {
    const auto& node = t.nodes[id];
    const std::string where = "nice: node " + std::to_string(id) + " ";
    for (int c : node.children) {
      if (c < 0 || c >= id) return where + "child not stored before parent";
      if (t.nodes[c].parent != id) return where + "child/parent mismatch";
      plain.tree_edges.emplace_back(c, id);
    }
    if (id != t.root && (node.parent < 0 || node.parent >= count)) return where + "has no parent";
    if (node.missing != missing_pairs(g, node.bag)) return where + "deficiency list is wrong";
    plain.bags.push_back(node.bag);
    const std::size_t kids = node.children.size();
    switch (node.kind) {
      case NodeKind::leaf:
        if (kids != 0 || !node.bag.empty()) return where + "leaf must be childless with empty bag";
        break;
      case NodeKind::introduce: {
        if (kids != 1) return where + "introduce needs one child";
        const auto& cb = t.nodes[node.children[0]].bag;
        if (contains(cb, node.vertex) || node.bag != set_union(cb, {node.vertex})) {
          return where + "introduce bag mismatch";
        }
        break;
      }
      case NodeKind::forget: {
        if (kids != 1) return where + "forget needs one child";
        const auto& cb = t.nodes[node.children[0]].bag;
        if (!contains(cb, node.vertex) || node.bag != set_difference(cb, {node.vertex})) {
          return where + "forget bag mismatch";
        }
        break;
      }
      case NodeKind::join:
        if (kids != 2) return where + "join needs two children";
        if (t.nodes[node.children[0]].bag != node.bag || t.nodes[node.children[1]].bag != node.bag) {
          return where + "join bags differ";
        }
        break;
    }
  }
  return validate_decomposition(plain, g);
}

void require_valid_nice(const NiceTreeDecomposition& t, const Graph& g) {
  if (auto violation = validate_nice(t, g)) throw Error(ErrorCode::decomposition, *violation);
}

IndependentSetResult max_weight_is_chordal(const Graph& g, const WeightMap& w) {
  check_weights(g, w, true);
  auto res = is_chordal(g);
  if (!res.chordal) throw Error(ErrorCode::precondition, "graph is not chordal");
  const int n = g.size();
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[res.peo[i]] = i;
  // Reduce residual weights along the PEO, then pick greedily in reverse.
  std::vector<Weight> residual(w.begin(), w.end());
  std::vector<char> marked(n, 0);
  for (Vertex v : res.peo) {
    if (residual[v] <= 0) continue;
    marked[v] = 1;
    for (Vertex u : g.neighbors(v)) {
      if (pos[u] > pos[v]) residual[u] = std::max<Weight>(0, residual[u] - residual[v]);
    }
  }
  IndependentSetResult out;
  std::vector<char> chosen(n, 0);
  for (int i = n - 1; i >= 0; --i) {
    const Vertex v = res.peo[i];
    if (!marked[v]) continue;
    bool free = true;
    for (Vertex u : g.neighbors(v)) {
      if (chosen[u]) { free = false; break; }
    }
    if (!free) continue;
    chosen[v] = 1;
    out.vertices.push_back(v);
    out.weight += w[v];
  }
  std::sort(out.vertices.begin(), out.vertices.end());
  return out;
}

std::string nice_to_text(const NiceTreeDecomposition& t, const Graph& g) {
  std::ostringstream out;
  out << "ntd " << t.nodes.size() << ' ' << t.root << '\n';
  for (std::size_t id = 0; id < t.nodes.size(); ++id) {
    const auto& node = t.nodes[id];
    out << id << ' ' << node_kind_name(node.kind) << ' ';
    if (node.vertex >= 0) out << g.label(node.vertex); else out << '-';
    out << ' ' << node.parent << " :";
    for (Vertex v : node.bag) out << ' ' << g.label(v);
    out << '\n';
  }
  return out.str();
}

NiceTreeDecomposition nice_from_text(std::string_view text, const Graph& g) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string& what) -> Error {
    return Error(ErrorCode::parse, "decomposition line " + std::to_string(line_no) + ": " + what);
  };
  auto vertex_of = [&](const std::string& token) {
    int label = 0;
    try {
      std::size_t used = 0;
      label = std::stoi(token, &used);
      if (used != token.size()) throw fail("bad vertex token '" + token + "'");
    } catch (const std::logic_error&) {
      throw fail("bad vertex token '" + token + "'");
    }
    auto v = g.find_label(label);
    if (!v) throw fail("unknown vertex label " + token);
    return *v;
  };

  NiceTreeDecomposition t;
  std::size_t expected = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (!header) {
      if (first != "ntd" || !(ls >> expected >> t.root)) throw fail("expected 'ntd <nodes> <root>'");
      header = true;
      t.nodes.resize(expected);
      continue;
    }
    std::size_t id = 0;
    try {
      id = std::stoul(first);
    } catch (const std::logic_error&) {
      throw fail("bad node id");
    }
    if (id >= expected) throw fail("node id out of range");
    std::string kind, vtoken, colon;
    int parent = -1;
    if (!(ls >> kind >> vtoken >> parent >> colon) || colon != ":") throw fail("malformed node line");
    NiceNode& node = t.nodes[id];
    if (kind == "leaf") node.kind = NodeKind::leaf;
    else if (kind == "introduce") node.kind = NodeKind::introduce;
    else if (kind == "forget") node.kind = NodeKind::forget;
    else if (kind == "join") node.kind = NodeKind::join;
    else throw fail("unknown node kind '" + kind + "'");
    node.vertex = vtoken == "-" ? -1 : vertex_of(vtoken);
    node.parent = parent;
    std::string token;
    while (ls >> token) node.bag.push_back(vertex_of(token));
    std::sort(node.bag.begin(), node.bag.end());
    node.missing = missing_pairs(g, node.bag);
  }
  if (!header) throw fail("empty decomposition");
  for (std::size_t id = 0; id < t.nodes.size(); ++id) {
    const int p = t.nodes[id].parent;
    if (p >= 0) {
      if (p >= static_cast<int>(t.nodes.size())) throw fail("parent out of range");
      t.nodes[p].children.push_back(static_cast<int>(id));
    }
  }
  return t;
}

}  // namespace achord
