#include <doctest.h>

#include <algorithm>

#include "achord/asteroidal.hpp"
#include "achord/chordal.hpp"
#include "brute.hpp"
#include "generators.hpp"

using namespace achord;

namespace {

std::vector<WitnessTemplate> all_templates() {
  std::vector<WitnessTemplate> out = {make_template(ShapeKind::f1), make_template(ShapeKind::f2),
                                      make_template(ShapeKind::f5)};
  for (int r : {2, 4, 5}) out.push_back(make_template(ShapeKind::f3, r));
  for (int r : {1, 2, 3, 4}) out.push_back(make_template(ShapeKind::f4, r));
  return out;
}

bool is_minimal_witness(const Graph& g, const ATWitness& w) {
  const Graph f = induced_subgraph(g, w.vertices);
  Triple t{};
  for (int i = 0; i < 3; ++i)
    t[i] = static_cast<int>(std::lower_bound(w.vertices.begin(), w.vertices.end(), w.terminals[i]) - w.vertices.begin());
  if (!brute::asteroidal(f, t[0], t[1], t[2])) return false;
  for (Vertex u = 0; u < f.size(); ++u) {
    if (u == t[0] || u == t[1] || u == t[2]) continue;
    VertexSet rest;
    for (Vertex v = 0; v < f.size(); ++v)
      if (v != u) rest.push_back(v);
    const Graph h = induced_subgraph(f, rest);
    auto shift = [&](Vertex v) { return v > u ? v - 1 : v; };
    if (brute::asteroidal(h, shift(t[0]), shift(t[1]), shift(t[2]))) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("is_asteroidal_triple matches the definition") {
  gen::Rng rng(31);
  for (int t = 0; t < 80; ++t) {
    const Graph g = gen::random_graph(rng, gen::uniform(rng, 3, 9), 0.3);
    for (int a = 0; a < g.size(); ++a)
      for (int b = a + 1; b < g.size(); ++b)
        for (int c = b + 1; c < g.size(); ++c)
          CHECK(is_asteroidal_triple(g, {a, b, c}) == brute::asteroidal(g, a, b, c));
  }
}

TEST_CASE("find_AT examples") {
  CHECK_FALSE(find_AT(gen::path(6)).has_value());
  const auto claw = find_AT(gen::subdivided_claw());
  REQUIRE(claw.has_value());
  CHECK(*claw == Triple{4, 5, 6});
  const auto c6 = find_AT(gen::cycle(6));
  REQUIRE(c6.has_value());
  CHECK(*c6 == Triple{0, 2, 4});
  CHECK_FALSE(find_AT(gen::subdivided_claw(), VertexSet{0, 1, 2, 3}).has_value());
}

TEST_CASE("find_AT agrees with triple enumeration") {
  gen::Rng rng(32);
  for (int t = 0; t < 120; ++t) {
    const Graph g = t % 2 ? gen::random_graph(rng, gen::uniform(rng, 0, 12), 0.25)
                          : gen::random_chordal(rng, gen::uniform(rng, 1, 12));
    const auto at = find_AT(g);
    CHECK(at.has_value() == brute::has_asteroidal_triple(g));
    if (at) CHECK(brute::asteroidal(g, (*at)[0], (*at)[1], (*at)[2]));
  }
  for (int t = 0; t < 40; ++t) CHECK_FALSE(find_AT(gen::random_interval(rng, gen::uniform(rng, 1, 12))).has_value());
}

TEST_CASE("templates are minimal witnesses of their own shape") {
  for (const auto& tpl : all_templates()) {
    CAPTURE(tpl.shape.name());
    const auto& [a, b, c] = tpl.terminals;
    REQUIRE(brute::asteroidal(tpl.graph, a, b, c));
    CHECK(is_chordal(tpl.graph).chordal == (tpl.shape.kind != ShapeKind::f5));
    const ATWitness w = minimize_at_witness(tpl.graph, tpl.terminals);
    CHECK(w.vertices == all_vertices(tpl.graph));
    CHECK(w.shape == tpl.shape);
    CHECK(classify_witness(tpl.graph, tpl.terminals) == tpl.shape);
  }
  CHECK(make_template(ShapeKind::f1).graph.size() == 7);
  CHECK(make_template(ShapeKind::f5).graph.size() == 6);
  CHECK(make_template(ShapeKind::f3, 4).graph.size() == 8);
  CHECK(make_template(ShapeKind::f4, 2).graph.size() == 7);
}

TEST_CASE("classify_witness examples") {
  CHECK(classify_witness(gen::subdivided_claw(), {4, 5, 6}).kind == ShapeKind::f1);
  CHECK(classify_witness(gen::cycle(6), {0, 2, 4}).kind == ShapeKind::f5);
  // C7 with spread terminals is a minimal witness outside the catalogue.
  CHECK(classify_witness(gen::cycle(7), {0, 2, 4}).kind == ShapeKind::unclassified);
  CHECK(WitnessShape{ShapeKind::f3, 4}.name() == "F3(4)");
}

TEST_CASE("minimize_at_witness") {
  const Graph c6 = gen::cycle(6);
  CHECK(minimize_at_witness(c6, {0, 2, 4}).vertices == all_vertices(c6));

  const Graph pendant = apply_modulator(build_graph(8, gen::subdivided_claw().edges()), {{0, 7}}, ModulatorMode::add);
  const auto w = minimize_at_witness(pendant, {4, 5, 6});
  CHECK(w.vertices == VertexSet{0, 1, 2, 3, 4, 5, 6});
  CHECK(w.shape.kind == ShapeKind::f1);
  CHECK(is_minimal_witness(pendant, w));

  CHECK_THROWS_AS(minimize_at_witness(gen::path(5), {0, 2, 4}), Error);

  // F1 hidden in a larger random chordal graph on fresh vertices.
  gen::Rng rng(33);
  for (int t = 0; t < 20; ++t) {
    const Graph host = gen::random_chordal(rng, 6);
    EdgeSet edges;
    for (const auto& e : gen::subdivided_claw().edges()) edges.push_back(e);
    for (const auto& e : host.edges()) edges.emplace_back(e.u + 7, e.v + 7);
    edges.emplace_back(0, 7);  // host hangs off the claw centre
    const Graph g = build_graph(13, normalize_pairs(edges));
    const auto m = minimize_at_witness(g, {4, 5, 6});
    CHECK(m.vertices.size() == 7);
    CHECK(is_minimal_witness(g, m));
  }
}

TEST_CASE("chordal graphs with an AT contain a catalogued witness") {
  // The catalogued witness may use a different triple than the first AT.
  gen::Rng rng(34);
  int seen = 0;
  for (int t = 0; t < 300 && seen < 60; ++t) {
    const Graph g = gen::random_chordal(rng, gen::uniform(rng, 6, 12));
    const auto at = find_AT(g);
    if (!at) continue;
    ++seen;
    const auto w = minimize_at_witness(g, *at);
    CHECK(is_minimal_witness(g, w));
    const auto found = find_x_touching_at(g, {});
    REQUIRE(found.has_value());
    CHECK(found->shape.kind != ShapeKind::unclassified);
    CHECK(is_minimal_witness(g, *found));
  }
  CHECK(seen > 10);
}

TEST_CASE("find_x_touching_at") {
  CHECK_FALSE(find_x_touching_at(gen::path(6), {}).has_value());

  const auto claw = find_x_touching_at(gen::subdivided_claw(), {}, ShapeFilter::f1_only);
  REQUIRE(claw.has_value());
  CHECK(claw->terminals == Triple{4, 5, 6});
  CHECK(claw->shape.kind == ShapeKind::f1);

  // Triangulating C6 by its inner triangle leaves every missing pair inside X.
  const Graph c6 = gen::cycle(6);
  const auto f5 = find_x_touching_at(c6, {0, 2, 4});
  REQUIRE(f5.has_value());
  CHECK(f5->shape.kind == ShapeKind::f5);
  CHECK(f5->terminals == Triple{0, 2, 4});
  const VertexSet in_x = set_intersection(f5->vertices, {0, 2, 4});
  CHECK(std::includes(f5->terminals.begin(), f5->terminals.end(), in_x.begin(), in_x.end()));
}
