#include <doctest.h>

#include "achord/io.hpp"
#include "generators.hpp"

using namespace achord;

namespace {

std::string parse_error(const std::string& text) {
  try {
    parse_graph_text(text);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::parse);
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("edge list format") {
  const auto p3 = parse_graph_text("3 2\n1 2\n2 3\n");
  CHECK(p3.graph.size() == 3);
  CHECK(p3.graph.edges() == gen::path(3).edges());
  CHECK(p3.graph.labels() == std::vector<int>{1, 2, 3});
  CHECK_FALSE(p3.weights.has_value());
}

TEST_CASE("dimacs format") {
  const auto c4 = parse_graph_text("c a comment\np edge 4 4\ne 1 2\ne 2 3\nc inline\ne 3 4\ne 4 1\n");
  CHECK(c4.graph.edges() == gen::cycle(4).edges());
}

TEST_CASE("weight block") {
  const auto w = parse_graph_text("3 1\n1 2\nw 1 5\nw 2 6\nw 3 7\n");
  REQUIRE(w.weights.has_value());
  CHECK(*w.weights == WeightMap{5, 6, 7});
  CHECK(parse_error("3 1\n1 2\nw 1 5\nw 3 7\n").find("missing weight for vertex 2") != std::string::npos);
  CHECK(parse_error("2 0\nw 1 5\nw 1 6\nw 2 1\n").find("repeated weight") != std::string::npos);
  CHECK(parse_weights_text("w 2 4\nw 1 3\n", gen::path(2)) == WeightMap{3, 4});
}

TEST_CASE("rejections carry line numbers") {
  CHECK(parse_error("3 1\n1 1\n") == "line 2: self-loop at vertex 1");
  CHECK(parse_error("3 2\n1 2\n2 1\n").find("line 3: duplicate edge") == 0);
  CHECK(parse_error("3 1\n1 x\n").find("line 2:") == 0);
  CHECK(parse_error("3 2\n1 2\n").find("expected 2 edges") != std::string::npos);
  CHECK(parse_error("3 1\n1 2\n2 3\n").find("line 3: more edges") == 0);
  CHECK(parse_error("2 1\n1 5\n").find("out of range") != std::string::npos);
  CHECK(parse_error("").find("missing header") != std::string::npos);
  CHECK(parse_error("p edge 2 1\n1 2\n").find("line 2:") == 0);
  CHECK(parse_error("2 1\nw 1 1\n1 2\n").find("line 3:") == 0);
}

TEST_CASE("writer round trip and digest") {
  gen::Rng rng(81);
  for (int t = 0; t < 20; ++t) {
    const Graph g = gen::random_graph(rng, gen::uniform(rng, 0, 12), 0.3);
    const WeightMap w = gen::random_weights(rng, g.size());
    const std::string text = graph_to_text(g, w);
    const auto back = parse_graph_text(text);
    CHECK(back.graph.edges() == g.edges());
    CHECK(back.weights.value_or(WeightMap{}) == w);
    CHECK(graph_to_text(back.graph, back.weights) == text);
    CHECK(back.digest == fnv1a_hex(text));
  }
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
}
