#include "achord/io.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace achord {

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

class LineParser {
 public:
  explicit LineParser(std::string_view text) : text_(text) {}

  // Next non-blank line split into tokens; false at end of input.
  bool next(std::vector<std::string_view>& out) {
    while (pos_ <= text_.size()) {
      if (pos_ == text_.size()) {
        pos_ = text_.size() + 1;
        return false;
      }
      std::size_t end = text_.find('\n', pos_);
      if (end == std::string_view::npos) end = text_.size();
      std::string_view line = text_.substr(pos_, end - pos_);
      pos_ = end + 1;
      ++line_no_;
      out = tokens(line);
      if (!out.empty()) return true;
    }
    return false;
  }

  int line() const { return line_no_; }

  Error fail(const std::string& what) const {
    return Error(ErrorCode::parse, "line " + std::to_string(line_no_) + ": " + what);
  }

  long long number(std::string_view token) const {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw fail("expected an integer, got '" + std::string(token) + "'");
    }
    return value;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_no_ = 0;
};

struct WeightBlock {
  std::vector<std::optional<Weight>> values;

  void add(LineParser& p, const std::vector<std::string_view>& t, int n) {
    if (t.size() != 3 || t[0] != "w") throw p.fail("expected 'w <vertex> <weight>'");
    const long long u = p.number(t[1]);
    if (u < 1 || u > n) throw p.fail("weight for unknown vertex " + std::to_string(u));
    if (values.empty()) values.resize(n);
    if (values[u - 1]) throw p.fail("repeated weight for vertex " + std::to_string(u));
    values[u - 1] = p.number(t[2]);
  }

  std::optional<WeightMap> finish(const LineParser& p, int n) const {
    if (values.empty()) return std::nullopt;
    WeightMap out;
    for (int v = 0; v < n; ++v) {
      if (!values[v]) throw p.fail("missing weight for vertex " + std::to_string(v + 1));
      out.push_back(*values[v]);
    }
    return out;
  }
};

}  // namespace

ParsedGraph parse_graph_text(std::string_view text) {
  LineParser p(text);
  std::vector<std::string_view> t;
  bool dimacs = false;
  long long n = 0, m = 0;
  for (;;) {
    if (!p.next(t)) throw p.fail("missing header");
    if (t[0] == "c") continue;  // DIMACS comment before the header
    if (t[0] == "p") {
      if (t.size() != 4 || t[1] != "edge") throw p.fail("expected 'p edge <n> <m>'");
      n = p.number(t[2]);
      m = p.number(t[3]);
      dimacs = true;
    } else {
      if (t.size() != 2) throw p.fail("expected '<n> <m>'");
      n = p.number(t[0]);
      m = p.number(t[1]);
    }
    break;
  }
  if (n < 0 || m < 0) throw p.fail("negative count in header");
  if (n > 1000000) throw p.fail("vertex count too large");

  std::set<VertexPair> seen;
  std::vector<VertexPair> edges;
  WeightBlock weights;
  while (p.next(t)) {
    if (dimacs && t[0] == "c") continue;
    if (t[0] == "w") {
      weights.add(p, t, static_cast<int>(n));
      continue;
    }
    if (!weights.values.empty()) throw p.fail("edge after weight block");
    std::string_view a, b;
    if (dimacs) {
      if (t.size() != 3 || t[0] != "e") throw p.fail("expected 'e <u> <v>'");
      a = t[1];
      b = t[2];
    } else {
      if (t.size() != 2) throw p.fail("expected '<u> <v>'");
      a = t[0];
      b = t[1];
    }
    const long long u = p.number(a), v = p.number(b);
    if (u < 1 || v < 1 || u > n || v > n) throw p.fail("vertex out of range");
    if (u == v) throw p.fail("self-loop at vertex " + std::to_string(u));
    if (static_cast<long long>(edges.size()) >= m) throw p.fail("more edges than declared");
    VertexPair e(static_cast<int>(u - 1), static_cast<int>(v - 1));
    if (!seen.insert(e).second) {
      throw p.fail("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }
    edges.push_back(e);
  }
  if (static_cast<long long>(edges.size()) != m) {
    throw p.fail("expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  ParsedGraph out;
  std::vector<int> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = i + 1;
  out.graph = Graph(static_cast<int>(n), normalize_pairs(std::move(edges)), std::move(labels));
  out.weights = weights.finish(p, static_cast<int>(n));
  out.digest = fnv1a_hex(text);
  return out;
}

ParsedGraph parse_graph_file(const std::string& path) { return parse_graph_text(read_file(path)); }

WeightMap parse_weights_text(std::string_view text, const Graph& g) {
  LineParser p(text);
  std::vector<std::string_view> t;
  WeightBlock block;
  while (p.next(t)) block.add(p, t, g.size());
  auto w = block.finish(p, g.size());
  if (!w) {
    if (g.size() == 0) return {};
    throw p.fail("no weights given");
  }
  return *w;
}

std::string graph_to_text(const Graph& g, const std::optional<WeightMap>& w) {
  std::ostringstream out;
  out << g.size() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) out << e.u + 1 << ' ' << e.v + 1 << '\n';
  if (w) {
    for (int v = 0; v < g.size(); ++v) out << "w " << v + 1 << ' ' << (*w)[v] << '\n';
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::invalid_argument, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[i] = digits[h & 15];
  return out;
}

}  // namespace achord
