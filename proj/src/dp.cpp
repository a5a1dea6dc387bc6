#include "achord/dp.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

namespace achord {

namespace {

// Infeasible states carry no value: nullopt is the -inf / +inf marker.
using Value = std::optional<Weight>;
using Key = std::vector<int>;

struct KeyHash {
  std::size_t operator()(const Key& k) const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (int x : k) {
      h ^= static_cast<std::size_t>(x + 7);
      h *= 0x100000001b3ull;
    }
    return h;
  }
};

template <typename V>
using Table = std::unordered_map<Key, V, KeyHash>;

Value lookup(const Table<Value>& t, const Key& k) {
  auto it = t.find(k);
  return it == t.end() ? std::nullopt : it->second;
}

Key erase_at(Key k, std::size_t p) {
  k.erase(k.begin() + static_cast<std::ptrdiff_t>(p));
  return k;
}

Key insert_at(Key k, std::size_t p, int x) {
  k.insert(k.begin() + static_cast<std::ptrdiff_t>(p), x);
  return k;
}

std::size_t position(const VertexSet& bag, Vertex v) {
  return static_cast<std::size_t>(std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
}

// Relabel non-negative block ids by first appearance; negatives untouched.
Key canonical_blocks(Key k, std::size_t prefix) {
  std::map<int, int> relabel;
  for (std::size_t i = 0; i < prefix; ++i) {
    if (k[i] < 0) continue;
    auto [it, inserted] = relabel.try_emplace(k[i], static_cast<int>(relabel.size()));
    k[i] = it->second;
  }
  return k;
}

int block_count(const Key& k, std::size_t prefix) {
  int m = -1;
  for (std::size_t i = 0; i < prefix; ++i) m = std::max(m, k[i]);
  return m + 1;
}

bool colorable_local(const Graph& g, const VertexSet& s, int d) {
  std::vector<int> color(s.size(), -1);
  std::function<bool(std::size_t)> go = [&](std::size_t i) {
    if (i == s.size()) return true;
    for (int c = 0; c < d; ++c) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        if (color[j] == c && g.adjacent(s[i], s[j])) ok = false;
      }
      if (!ok) continue;
      color[i] = c;
      if (go(i + 1)) return true;
    }
    color[i] = -1;
    return false;
  };
  return go(0);
}

void check_common(const Graph& g, const WeightMap& w, const NiceTreeDecomposition& t) {
  check_weights(g, w, true);
  require_valid_nice(t, g);
}

// ---------------------------------------------------------------------------
// Colour / homomorphism DP over candidate states. A key stores, per bag
// position, -1 (outside S) or the label of that vertex.

class AssignmentDP {
 public:
  using Compatible = std::function<bool(int, int)>;

  AssignmentDP(const Graph& g, const WeightMap& w, int labels, Compatible compatible, int family_d,
               const NiceTreeDecomposition& t)
      : g_(g), w_(w), labels_(labels), compatible_(std::move(compatible)), family_d_(family_d), t_(t) {}

  Solution solve() {
    tables_.resize(t_.nodes.size());
    for (std::size_t id = 0; id < t_.nodes.size(); ++id) fill(static_cast<int>(id));
    const Value best = lookup(tables_[t_.root], Key{});
    Solution out;
    if (!best) throw Error(ErrorCode::internal, "root state infeasible");
    out.value = *best;
    std::vector<int> label(g_.size(), -1);
    reconstruct(label);
    for (Vertex v = 0; v < g_.size(); ++v) {
      if (label[v] >= 0) {
        out.vertices.push_back(v);
        out.assignment.push_back(label[v]);
      }
    }
    return out;
  }

 private:
  std::vector<Key> states(const NiceNode& node) {
    std::vector<Key> out;
    const VertexSet& bag = node.bag;
    for (const VertexSet& s : family(bag).sets) {
      std::vector<std::size_t> pos;
      for (Vertex v : s) pos.push_back(position(bag, v));
      Key key(bag.size(), -1);
      std::function<void(std::size_t)> go = [&](std::size_t i) {
        if (i == pos.size()) {
          out.push_back(key);
          return;
        }
        for (int a = 0; a < labels_; ++a) {
          bool ok = true;
          for (std::size_t j = 0; j < i && ok; ++j) {
            if (g_.adjacent(bag[pos[i]], bag[pos[j]]) && !compatible_(a, key[pos[j]])) ok = false;
          }
          if (!ok) continue;
          key[pos[i]] = a;
          go(i + 1);
          key[pos[i]] = -1;
        }
      };
      go(0);
    }
    return out;
  }

  const CandidateFamily& family(const VertexSet& bag) {
    auto it = families_.find(bag);
    if (it == families_.end()) it = families_.emplace(bag, enumerate_bag_candidates(g_, bag, family_d_)).first;
    return it->second;
  }

  Value value_of(int id, const Key& key) {
    const NiceNode& node = t_.nodes[id];
    switch (node.kind) {
      case NodeKind::leaf:
        return Weight{0};
      case NodeKind::introduce: {
        const std::size_t p = position(node.bag, node.vertex);
        const Value child = lookup(tables_[node.children[0]], erase_at(key, p));
        if (!child || key[p] < 0) return child;
        return *child + w_[node.vertex];
      }
      case NodeKind::forget: {
        const std::size_t p = position(t_.nodes[node.children[0]].bag, node.vertex);
        Value best;
        for (int a = -1; a < labels_; ++a) {
          const Value v = lookup(tables_[node.children[0]], insert_at(key, p, a));
          if (v && (!best || *v > *best)) best = v;
        }
        return best;
      }
      case NodeKind::join: {
        const Value a = lookup(tables_[node.children[0]], key);
        const Value b = lookup(tables_[node.children[1]], key);
        if (!a || !b) return std::nullopt;
        Weight shared = 0;
        for (std::size_t i = 0; i < key.size(); ++i) {
          if (key[i] >= 0) shared += w_[node.bag[i]];
        }
        return *a + *b - shared;
      }
    }
    return std::nullopt;
  }

  void fill(int id) {
    auto& table = tables_[id];
    for (const Key& key : states(t_.nodes[id])) table.emplace(key, value_of(id, key));
  }

  void reconstruct(std::vector<int>& label) {
    std::vector<std::pair<int, Key>> stack{{t_.root, Key{}}};
    while (!stack.empty()) {
      auto [id, key] = stack.back();
      stack.pop_back();
      const NiceNode& node = t_.nodes[id];
      for (std::size_t i = 0; i < key.size(); ++i) {
        if (key[i] >= 0) label[node.bag[i]] = key[i];
      }
      switch (node.kind) {
        case NodeKind::leaf:
          break;
        case NodeKind::introduce:
          stack.emplace_back(node.children[0], erase_at(key, position(node.bag, node.vertex)));
          break;
        case NodeKind::forget: {
          const Value target = lookup(tables_[id], key);
          const std::size_t p = position(t_.nodes[node.children[0]].bag, node.vertex);
          for (int a = -1; a < labels_; ++a) {
            Key ck = insert_at(key, p, a);
            if (lookup(tables_[node.children[0]], ck) == target) {
              stack.emplace_back(node.children[0], std::move(ck));
              break;
            }
          }
          break;
        }
        case NodeKind::join:
          stack.emplace_back(node.children[0], key);
          stack.emplace_back(node.children[1], key);
          break;
      }
    }
  }

  const Graph& g_;
  const WeightMap& w_;
  int labels_;
  Compatible compatible_;
  int family_d_;
  const NiceTreeDecomposition& t_;
  std::vector<Table<Value>> tables_;
  std::map<VertexSet, CandidateFamily> families_;
};

// ---------------------------------------------------------------------------
// Tables filled forward from the children, with back-pointers for witness
// recovery. Used by the degeneracy and connected vertex cover programs.

struct Entry {
  Key key;
  Weight value = 0;
  int src1 = -1;
  int src2 = -1;
};

class PushTable {
 public:
  explicit PushTable(bool maximize) : maximize_(maximize) {}

  void offer(Key key, Weight value, int src1, int src2 = -1) {
    auto it = index_.find(key);
    if (it == index_.end()) {
      index_.emplace(key, static_cast<int>(entries_.size()));
      entries_.push_back({std::move(key), value, src1, src2});
      return;
    }
    Entry& e = entries_[it->second];
    if (maximize_ ? value > e.value : value < e.value) {
      e.value = value;
      e.src1 = src1;
      e.src2 = src2;
    }
  }

  const std::vector<Entry>& entries() const { return entries_; }

 private:
  bool maximize_;
  std::vector<Entry> entries_;
  std::unordered_map<Key, int, KeyHash> index_;
};

// Follows back-pointers from `entry` at `root`, calling visit(node, key).
template <typename Visit>
void trace_back(const NiceTreeDecomposition& t, const std::vector<PushTable>& tables, int entry, Visit visit) {
  std::vector<std::pair<int, int>> stack{{t.root, entry}};
  while (!stack.empty()) {
    auto [id, e] = stack.back();
    stack.pop_back();
    const Entry& cur = tables[id].entries()[e];
    visit(id, cur.key);
    const auto& kids = t.nodes[id].children;
    if (!kids.empty()) stack.emplace_back(kids[0], cur.src1);
    if (kids.size() > 1) stack.emplace_back(kids[1], cur.src2);
  }
}

// ---------------------------------------------------------------------------
// d-degenerate DP. Key per bag position: -1, or rank * (d + 1) + delta where
// rank is the position of the vertex in the partial ordering of S and delta
// its number of later neighbours in the whole partial solution.

class DegenerateDP {
 public:
  DegenerateDP(const Graph& g, const WeightMap& w, int d, const NiceTreeDecomposition& t)
      : g_(g), w_(w), d_(d), base_(d + 1), t_(t) {}

  Solution solve() {
    for (std::size_t id = 0; id < t_.nodes.size(); ++id) tables_.emplace_back(true);
    for (std::size_t id = 0; id < t_.nodes.size(); ++id) fill(static_cast<int>(id));
    const auto& root = tables_[t_.root].entries();
    if (root.empty()) throw Error(ErrorCode::internal, "root state infeasible");
    Solution out;
    out.value = root[0].value;
    std::vector<char> chosen(g_.size(), 0);
    trace_back(t_, tables_, 0, [&](int id, const Key& key) {
      for (std::size_t i = 0; i < key.size(); ++i) {
        if (key[i] >= 0) chosen[t_.nodes[id].bag[i]] = 1;
      }
    });
    for (Vertex v = 0; v < g_.size(); ++v) {
      if (chosen[v]) out.vertices.push_back(v);
    }
    // Any minimum-degree peeling of the witness is a valid ordering.
    const Graph sub = induced_subgraph(g_, out.vertices);
    for (Vertex v : degeneracy_ordering(sub).ordering) out.ordering.push_back(out.vertices[v]);
    return out;
  }

 private:
  int rank(int code) const { return code / base_; }
  int delta(int code) const { return code % base_; }
  int code(int r, int dl) const { return r * base_ + dl; }

  bool in_family(const VertexSet& bag, const Key& key) {
    auto it = families_.find(bag);
    if (it == families_.end()) {
      auto fam = enumerate_bag_candidates(g_, bag, d_ + 1);
      it = families_.emplace(bag, std::set<VertexSet>(fam.sets.begin(), fam.sets.end())).first;
    }
    VertexSet s;
    for (std::size_t i = 0; i < key.size(); ++i) {
      if (key[i] >= 0) s.push_back(bag[i]);
    }
    return it->second.count(s) > 0;
  }

  void fill(int id) {
    const NiceNode& node = t_.nodes[id];
    PushTable& out = tables_[id];
    switch (node.kind) {
      case NodeKind::leaf:
        out.offer(Key{}, 0, -1);
        break;
      case NodeKind::introduce: {
        const std::size_t p = position(node.bag, node.vertex);
        const auto& child = tables_[node.children[0]].entries();
        for (int i = 0; i < static_cast<int>(child.size()); ++i) {
          const Entry& e = child[i];
          out.offer(insert_at(e.key, p, -1), e.value, i);
          int members = 0;
          for (int c : e.key) members += c >= 0;
          for (int q = 0; q <= members; ++q) {
            Key key = insert_at(e.key, p, -1);
            int later = 0;
            bool ok = true;
            for (std::size_t j = 0; j < key.size() && ok; ++j) {
              if (j == p || key[j] < 0) continue;
              const int r = rank(key[j]);
              int dl = delta(key[j]);
              const bool adj = g_.adjacent(node.bag[j], node.vertex);
              if (r >= q) {
                later += adj;
                key[j] = code(r + 1, dl);
              } else {
                dl += adj;
                if (dl > d_) ok = false;
                key[j] = code(r, dl);
              }
            }
            if (!ok || later > d_) continue;
            key[p] = code(q, later);
            if (!in_family(node.bag, key)) continue;
            out.offer(std::move(key), e.value + w_[node.vertex], i);
          }
        }
        break;
      }
      case NodeKind::forget: {
        const std::size_t p = position(t_.nodes[node.children[0]].bag, node.vertex);
        const auto& child = tables_[node.children[0]].entries();
        for (int i = 0; i < static_cast<int>(child.size()); ++i) {
          const Entry& e = child[i];
          Key key = erase_at(e.key, p);
          if (e.key[p] >= 0) {
            const int gone = rank(e.key[p]);
            for (int& c : key) {
              if (c >= 0 && rank(c) > gone) c = code(rank(c) - 1, delta(c));
            }
          }
          out.offer(std::move(key), e.value, i);
        }
        break;
      }
      case NodeKind::join: {
        const auto& left = tables_[node.children[0]].entries();
        const auto& right = tables_[node.children[1]].entries();
        std::unordered_map<Key, std::vector<int>, KeyHash> by_order;
        for (int j = 0; j < static_cast<int>(right.size()); ++j) by_order[order_of(right[j].key)].push_back(j);
        for (int i = 0; i < static_cast<int>(left.size()); ++i) {
          const Key order = order_of(left[i].key);
          auto it = by_order.find(order);
          if (it == by_order.end()) continue;
          Weight shared = 0;
          std::vector<int> inner(order.size(), 0);
          for (std::size_t a = 0; a < order.size(); ++a) {
            if (order[a] < 0) continue;
            shared += w_[node.bag[a]];
            for (std::size_t b = 0; b < order.size(); ++b) {
              if (order[b] > order[a] && g_.adjacent(node.bag[a], node.bag[b])) ++inner[a];
            }
          }
          for (int j : it->second) {
            Key key = left[i].key;
            bool ok = true;
            for (std::size_t a = 0; a < key.size() && ok; ++a) {
              if (key[a] < 0) continue;
              const int dl = delta(left[i].key[a]) + delta(right[j].key[a]) - inner[a];
              if (dl > d_) ok = false;
              key[a] = code(order[a], dl);
            }
            if (ok) out.offer(std::move(key), left[i].value + right[j].value - shared, i, j);
          }
        }
        break;
      }
    }
  }

  Key order_of(const Key& key) const {
    Key out(key.size(), -1);
    for (std::size_t i = 0; i < key.size(); ++i) {
      if (key[i] >= 0) out[i] = rank(key[i]);
    }
    return out;
  }

  const Graph& g_;
  const WeightMap& w_;
  int d_;
  int base_;
  const NiceTreeDecomposition& t_;
  std::vector<PushTable> tables_;
  std::map<VertexSet, std::set<VertexSet>> families_;
};

// ---------------------------------------------------------------------------
// Connected vertex cover DP. Key: per bag position -1 (vertex in U, outside
// the cover) or the block id of its connectivity class, followed by a flag
// that is 1 once a finished component has been forgotten entirely.

class CvcDP {
 public:
  CvcDP(const Graph& g, const WeightMap& w, const NiceTreeDecomposition& t) : g_(g), w_(w), t_(t) {}

  Solution solve() {
    for (std::size_t id = 0; id < t_.nodes.size(); ++id) tables_.emplace_back(false);
    for (std::size_t id = 0; id < t_.nodes.size(); ++id) fill(static_cast<int>(id));
    const auto& root = tables_[t_.root].entries();
    int best = -1;
    for (int i = 0; i < static_cast<int>(root.size()); ++i) {
      if (best < 0 || root[i].value < root[best].value) best = i;
    }
    if (best < 0) throw Error(ErrorCode::internal, "no connected vertex cover found");
    Solution out;
    out.value = root[best].value;
    std::vector<char> chosen(g_.size(), 0);
    trace_back(t_, tables_, best, [&](int id, const Key& key) {
      for (std::size_t i = 0; i + 1 < key.size(); ++i) {
        if (key[i] >= 0) chosen[t_.nodes[id].bag[i]] = 1;
      }
    });
    for (Vertex v = 0; v < g_.size(); ++v) {
      if (chosen[v]) out.vertices.push_back(v);
    }
    return out;
  }

 private:
  void fill(int id) {
    const NiceNode& node = t_.nodes[id];
    PushTable& out = tables_[id];
    const std::size_t width = node.bag.size();
    switch (node.kind) {
      case NodeKind::leaf:
        out.offer(Key{0}, 0, -1);
        break;
      case NodeKind::introduce: {
        const std::size_t p = position(node.bag, node.vertex);
        const auto& child = tables_[node.children[0]].entries();
        for (int i = 0; i < static_cast<int>(child.size()); ++i) {
          const Entry& e = child[i];
          const Key base = insert_at(e.key, p, -1);
          // v outside the cover: every bag neighbour must be inside it.
          bool covered = true;
          for (std::size_t j = 0; j < width && covered; ++j) {
            if (j != p && base[j] < 0 && g_.adjacent(node.bag[j], node.vertex)) covered = false;
          }
          if (covered) out.offer(base, e.value, i);
          // v inside the cover: impossible once a component was sealed.
          if (base[width] == 1) continue;
          Key key = base;
          const int fresh = static_cast<int>(width) + 1;
          std::vector<int> merged;
          for (std::size_t j = 0; j < width; ++j) {
            if (j != p && base[j] >= 0 && g_.adjacent(node.bag[j], node.vertex)) merged.push_back(base[j]);
          }
          for (std::size_t j = 0; j < width; ++j) {
            if (j != p && key[j] >= 0 && std::find(merged.begin(), merged.end(), key[j]) != merged.end()) {
              key[j] = fresh;
            }
          }
          key[p] = fresh;
          out.offer(canonical_blocks(std::move(key), width), e.value + w_[node.vertex], i);
        }
        break;
      }
      case NodeKind::forget: {
        const std::size_t p = position(t_.nodes[node.children[0]].bag, node.vertex);
        const auto& child = tables_[node.children[0]].entries();
        for (int i = 0; i < static_cast<int>(child.size()); ++i) {
          const Entry& e = child[i];
          const int block = e.key[p];
          Key key = erase_at(e.key, p);
          if (block >= 0) {
            bool shared = false, others = false;
            for (std::size_t j = 0; j < width; ++j) {
              if (key[j] >= 0) others = true;
              if (key[j] == block) shared = true;
            }
            // Dropping the last vertex of a block seals that component; this
            // is only allowed when it is the whole cover.
            if (!shared) {
              if (others) continue;
              key[width] = 1;
            }
            key = canonical_blocks(std::move(key), width);
          }
          out.offer(std::move(key), e.value, i);
        }
        break;
      }
      case NodeKind::join: {
        const auto& left = tables_[node.children[0]].entries();
        const auto& right = tables_[node.children[1]].entries();
        std::unordered_map<Key, std::vector<int>, KeyHash> by_cover;
        for (int j = 0; j < static_cast<int>(right.size()); ++j) by_cover[cover_of(right[j].key, width)].push_back(j);
        for (int i = 0; i < static_cast<int>(left.size()); ++i) {
          auto it = by_cover.find(cover_of(left[i].key, width));
          if (it == by_cover.end()) continue;
          Weight shared = 0;
          for (std::size_t a = 0; a < width; ++a) {
            if (left[i].key[a] >= 0) shared += w_[node.bag[a]];
          }
          for (int j : it->second) {
            const Key& l = left[i].key;
            const Key& r = right[j].key;
            if (l[width] == 1 && r[width] == 1) continue;
            // Union-find over positions to merge both connectivity partitions.
            std::vector<std::size_t> parent(width);
            std::iota(parent.begin(), parent.end(), 0);
            std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
              return parent[x] == x ? x : parent[x] = find(parent[x]);
            };
            for (const Key* side : {&l, &r}) {
              for (std::size_t a = 0; a < width; ++a) {
                for (std::size_t b = a + 1; b < width; ++b) {
                  if ((*side)[a] >= 0 && (*side)[a] == (*side)[b]) parent[find(a)] = find(b);
                }
              }
            }
            Key key(width + 1, -1);
            for (std::size_t a = 0; a < width; ++a) {
              if (l[a] >= 0) key[a] = static_cast<int>(find(a));
            }
            key[width] = std::max(l[width], r[width]);
            out.offer(canonical_blocks(std::move(key), width), left[i].value + right[j].value - shared, i, j);
          }
        }
        break;
      }
    }
  }

  static Key cover_of(const Key& key, std::size_t width) {
    Key out(width);
    for (std::size_t a = 0; a < width; ++a) out[a] = key[a] >= 0;
    return out;
  }

  const Graph& g_;
  const WeightMap& w_;
  const NiceTreeDecomposition& t_;
  std::vector<PushTable> tables_;
};

// ---------------------------------------------------------------------------
// Colouring DP over partitions of each bag into independent sets. Key: block
// id per bag position, canonical by first appearance.

class ColoringDP {
 public:
  ColoringDP(const Graph& g, int ell, const NiceTreeDecomposition& t, ColoringStats* stats)
      : g_(g), ell_(ell), t_(t), stats_(stats) {}

  Solution solve() {
    tables_.resize(t_.nodes.size());
    for (std::size_t id = 0; id < t_.nodes.size(); ++id) fill(static_cast<int>(id));
    Solution out;
    out.feasible = lookup(t_.root, Key{});
    if (!out.feasible) return out;
    out.assignment.assign(g_.size(), -1);
    reconstruct(out.assignment);
    out.vertices = all_vertices(g_);
    std::set<int> used(out.assignment.begin(), out.assignment.end());
    out.value = static_cast<Weight>(used.size());
    return out;
  }

 private:
  bool lookup(int id, const Key& key) const {
    auto it = tables_[id].find(key);
    return it != tables_[id].end() && it->second;
  }

  // Partitions of the deficiency endpoints into independent blocks; all
  // other bag vertices are singletons.
  std::vector<Key> partitions(const NiceNode& node) const {
    std::vector<Key> out;
    const VertexSet& bag = node.bag;
    VertexSet ends;
    for (const auto& pr : node.missing) {
      ends.push_back(pr.u);
      ends.push_back(pr.v);
    }
    std::sort(ends.begin(), ends.end());
    ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
    const int forced = static_cast<int>(bag.size() - ends.size());
    std::vector<std::size_t> pos;
    for (Vertex v : ends) pos.push_back(position(bag, v));
    Key key(bag.size(), -1);
    std::function<void(std::size_t, int)> go = [&](std::size_t i, int blocks) {
      if (blocks + forced > ell_) return;
      if (i == pos.size()) {
        Key full = key;
        int next = blocks;
        for (std::size_t j = 0; j < full.size(); ++j) {
          if (full[j] < 0) full[j] = next++;
        }
        out.push_back(canonical_blocks(std::move(full), full.size()));
        return;
      }
      for (int b = 0; b <= blocks; ++b) {
        bool ok = true;
        for (std::size_t j = 0; j < i && ok; ++j) {
          if (key[pos[j]] == b && g_.adjacent(bag[pos[i]], bag[pos[j]])) ok = false;
        }
        if (!ok) continue;
        key[pos[i]] = b;
        go(i + 1, b == blocks ? blocks + 1 : blocks);
        key[pos[i]] = -1;
      }
    };
    go(0, 0);
    return out;
  }

  // Child partitions reachable by putting forgotten vertex v back.
  std::vector<Key> with_vertex(const Key& key, const VertexSet& child_bag, Vertex v) const {
    const std::size_t p = position(child_bag, v);
    const int blocks = block_count(key, key.size());
    std::vector<Key> out;
    for (int b = 0; b <= blocks; ++b) {
      bool ok = true;
      for (std::size_t j = 0; j < key.size() && ok; ++j) {
        const std::size_t cj = j < p ? j : j + 1;
        if (key[j] == b && g_.adjacent(child_bag[cj], v)) ok = false;
      }
      if (ok) out.push_back(canonical_blocks(insert_at(key, p, b), key.size() + 1));
    }
    return out;
  }

  void fill(int id) {
    const NiceNode& node = t_.nodes[id];
    auto keys = partitions(node);
    if (stats_) stats_->bags.push_back({id, static_cast<int>(node.missing.size()), keys.size()});
    auto& table = tables_[id];
    for (const Key& key : keys) {
      bool col = false;
      switch (node.kind) {
        case NodeKind::leaf:
          col = true;
          break;
        case NodeKind::introduce: {
          const std::size_t p = position(node.bag, node.vertex);
          col = block_count(key, key.size()) <= ell_ &&
                lookup(node.children[0], canonical_blocks(erase_at(key, p), key.size() - 1));
          break;
        }
        case NodeKind::forget:
          for (const Key& ck : with_vertex(key, t_.nodes[node.children[0]].bag, node.vertex)) {
            if (lookup(node.children[0], ck)) { col = true; break; }
          }
          break;
        case NodeKind::join:
          col = lookup(node.children[0], key) && lookup(node.children[1], key);
          break;
      }
      table.emplace(key, col);
    }
  }

  // Top-down: a vertex receives its colour at its forget node; blocks keep
  // their colour below that point.
  void reconstruct(std::vector<int>& color) const {
    struct Frame {
      int id;
      Key key;
    };
    std::vector<Frame> stack{{t_.root, Key{}}};
    while (!stack.empty()) {
      Frame f = std::move(stack.back());
      stack.pop_back();
      const NiceNode& node = t_.nodes[f.id];
      switch (node.kind) {
        case NodeKind::leaf:
          break;
        case NodeKind::introduce: {
          const std::size_t p = position(node.bag, node.vertex);
          stack.push_back({node.children[0], canonical_blocks(erase_at(f.key, p), f.key.size() - 1)});
          break;
        }
        case NodeKind::forget: {
          const VertexSet& cb = t_.nodes[node.children[0]].bag;
          const std::size_t p = position(cb, node.vertex);
          for (const Key& ck : with_vertex(f.key, cb, node.vertex)) {
            if (!lookup(node.children[0], ck)) continue;
            int mate = -1;
            for (std::size_t j = 0; j < ck.size(); ++j) {
              if (j != p && ck[j] == ck[p]) mate = color[cb[j]];
            }
            if (mate < 0) {
              std::vector<char> taken(ell_, 0);
              for (Vertex u : node.bag) taken[color[u]] = 1;
              mate = static_cast<int>(std::find(taken.begin(), taken.end(), 0) - taken.begin());
            }
            color[node.vertex] = mate;
            stack.push_back({node.children[0], ck});
            break;
          }
          break;
        }
        case NodeKind::join:
          stack.push_back({node.children[0], f.key});
          stack.push_back({node.children[1], f.key});
          break;
      }
    }
  }

  const Graph& g_;
  int ell_;
  const NiceTreeDecomposition& t_;
  ColoringStats* stats_;
  std::vector<Table<bool>> tables_;
};

}  // namespace

int candidate_bound(int d, int k) {
  if (d < 1 || k < 0) throw Error(ErrorCode::invalid_argument, "candidate_bound needs d >= 1 and k >= 0");
  const long long disc = static_cast<long long>(d) * d + 8LL * d * k;
  long long root = static_cast<long long>(std::sqrt(static_cast<double>(disc)));
  while (root * root > disc) --root;
  while ((root + 1) * (root + 1) <= disc) ++root;
  return static_cast<int>((3LL * d + root) / 2);
}

CandidateFamily enumerate_bag_candidates(const Graph& g, const VertexSet& bag, int d) {
  if (d < 1) throw Error(ErrorCode::invalid_argument, "d must be at least 1");
  CandidateFamily fam;
  fam.bag = bag;
  fam.d = d;
  const Graph local = induced_subgraph(g, bag);
  fam.deficiency = static_cast<int>(missing_pairs(local, all_vertices(local)).size());
  fam.bound = candidate_bound(d, fam.deficiency);
  const auto cliques = enumerate_cliques(complement(local));
  std::set<VertexSet> current{VertexSet{}};
  for (int round = 0; round < d; ++round) {
    std::set<VertexSet> next;
    for (const auto& s : current) {
      for (const auto& c : cliques) next.insert(set_union(s, c));
    }
    current = std::move(next);
  }
  for (const auto& s : current) {
    if (!colorable_local(local, s, d)) continue;
    VertexSet mapped;
    for (Vertex v : s) mapped.push_back(bag[v]);
    fam.sets.push_back(std::move(mapped));
  }
  std::sort(fam.sets.begin(), fam.sets.end(), [](const VertexSet& a, const VertexSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return fam;
}

Solution solve_d_colorable(const Graph& g, const WeightMap& w, int d, const NiceTreeDecomposition& t) {
  if (d < 1) throw Error(ErrorCode::invalid_argument, "d must be at least 1");
  check_common(g, w, t);
  return AssignmentDP(g, w, d, [](int a, int b) { return a != b; }, d, t).solve();
}

Solution solve_h_colorable(const Graph& g, const WeightMap& w, const Graph& h, const NiceTreeDecomposition& t) {
  if (h.size() < 1) throw Error(ErrorCode::invalid_argument, "pattern graph must have a vertex");
  check_common(g, w, t);
  return AssignmentDP(g, w, h.size(), [&h](int a, int b) { return h.adjacent(a, b); }, h.size(), t).solve();
}

Solution solve_d_degenerate(const Graph& g, const WeightMap& w, int d, const NiceTreeDecomposition& t) {
  if (d < 0) throw Error(ErrorCode::invalid_argument, "d must be non-negative");
  check_common(g, w, t);
  return DegenerateDP(g, w, d, t).solve();
}

Solution solve_coloring(const Graph& g, int ell, const NiceTreeDecomposition& t, ColoringStats* stats) {
  if (ell < 1) throw Error(ErrorCode::invalid_argument, "ell must be at least 1");
  require_valid_nice(t, g);
  return ColoringDP(g, ell, t, stats).solve();
}

Solution solve_cvc(const Graph& g, const WeightMap& w, const NiceTreeDecomposition& t) {
  check_common(g, w, t);
  if (connected_components(g).size() > 1) throw Error(ErrorCode::precondition, "graph is not connected");
  return CvcDP(g, w, t).solve();
}

std::optional<ClassicProblem> classic_problem_from_name(const std::string& name) {
  if (name == "wis") return ClassicProblem::wis;
  if (name == "wvc") return ClassicProblem::wvc;
  if (name == "oct") return ClassicProblem::oct;
  if (name == "bipartite-subgraph") return ClassicProblem::bipartite_subgraph;
  if (name == "wfvs") return ClassicProblem::wfvs;
  if (name == "induced-forest") return ClassicProblem::induced_forest;
  return std::nullopt;
}

const char* classic_problem_name(ClassicProblem p) {
  switch (p) {
    case ClassicProblem::wis: return "wis";
    case ClassicProblem::wvc: return "wvc";
    case ClassicProblem::oct: return "oct";
    case ClassicProblem::bipartite_subgraph: return "bipartite-subgraph";
    case ClassicProblem::wfvs: return "wfvs";
    case ClassicProblem::induced_forest: return "induced-forest";
  }
  return "wis";
}

Solution solve_classic(ClassicProblem problem, const Graph& g, const WeightMap& w, const NiceTreeDecomposition& t) {
  auto complemented = [&](Solution s) {
    Solution out;
    out.value = total_weight(w, all_vertices(g)) - s.value;
    out.vertices = set_difference(all_vertices(g), s.vertices);
    return out;
  };
  auto forest = [&] {
    Solution s = solve_d_degenerate(g, w, 1, t);
    if (!is_forest(g, s.vertices)) throw Error(ErrorCode::internal, "induced forest witness has a cycle");
    return s;
  };
  switch (problem) {
    case ClassicProblem::wis: return solve_d_colorable(g, w, 1, t);
    case ClassicProblem::bipartite_subgraph: return solve_d_colorable(g, w, 2, t);
    case ClassicProblem::induced_forest: return forest();
    case ClassicProblem::wvc: return complemented(solve_d_colorable(g, w, 1, t));
    case ClassicProblem::oct: return complemented(solve_d_colorable(g, w, 2, t));
    case ClassicProblem::wfvs: return complemented(forest());
  }
  throw Error(ErrorCode::internal, "unknown problem");
}

bool is_proper_coloring(const Graph& g, const VertexSet& s, const std::vector<int>& colors, int d) {
  if (colors.size() != s.size()) return false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (colors[i] < 0 || colors[i] >= d) return false;
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (g.adjacent(s[i], s[j]) && colors[i] == colors[j]) return false;
    }
  }
  return true;
}

bool is_homomorphism(const Graph& g, const VertexSet& s, const std::vector<int>& image, const Graph& h) {
  if (image.size() != s.size()) return false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (image[i] < 0 || image[i] >= h.size()) return false;
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (g.adjacent(s[i], s[j]) && !h.adjacent(image[i], image[j])) return false;
    }
  }
  return true;
}

bool is_degeneracy_ordering(const Graph& g, const VertexSet& s, const std::vector<Vertex>& order, int d) {
  VertexSet sorted_order(order.begin(), order.end());
  std::sort(sorted_order.begin(), sorted_order.end());
  if (sorted_order != s) return false;
  for (std::size_t i = 0; i < order.size(); ++i) {
    int later = 0;
    for (std::size_t j = i + 1; j < order.size(); ++j) later += g.adjacent(order[i], order[j]);
    if (later > d) return false;
  }
  return true;
}

bool is_forest(const Graph& g, const VertexSet& s) {
  const Graph sub = induced_subgraph(g, s);
  return sub.edge_count() + static_cast<int>(connected_components(sub).size()) == sub.size();
}

bool is_connected_vertex_cover(const Graph& g, const VertexSet& s) {
  for (const auto& e : g.edges()) {
    if (!contains(s, e.u) && !contains(s, e.v)) return false;
  }
  return connected_components(induced_subgraph(g, s)).size() <= 1;
}

}  // namespace achord
