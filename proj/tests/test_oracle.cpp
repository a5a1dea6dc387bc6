#include <doctest.h>

#include "achord/chordal.hpp"
#include "achord/oracle.hpp"
#include "brute.hpp"
#include "generators.hpp"

using namespace achord;

TEST_CASE("oracle examples") {
  CHECK(brute_force(OracleProblem::max_wis, gen::cycle(5)).value == 2);
  CHECK(brute_force(OracleProblem::chromatic_number, gen::petersen()).value == 3);
  CHECK(brute::colorable(gen::petersen(), 3));
  CHECK_FALSE(brute::colorable(gen::petersen(), 2));
  CHECK(brute_force(OracleProblem::min_fillin, gen::cycle(6)).value == 3);
  CHECK(brute_force(OracleProblem::min_cvc, gen::cycle(4)).value == 3);
  CHECK(brute_force(OracleProblem::max_wclique, gen::complete(4), WeightMap{1, 2, 3, 4}).value == 10);
  CHECK(brute_force(OracleProblem::min_split_edit, gen::cycle(4)).value == 1);
}

TEST_CASE("oracle size guard and names") {
  CHECK_THROWS_AS(brute_force(OracleProblem::max_wis, gen::path(kOracleMaxVertices + 1)), Error);
  CHECK(oracle_problem_from_name("max-wis") == OracleProblem::max_wis);
  CHECK_FALSE(oracle_problem_from_name("nope").has_value());
}

TEST_CASE("oracle self-consistency") {
  gen::Rng rng(51);
  for (int t = 0; t < 60; ++t) {
    const Graph g = gen::random_graph(rng, gen::uniform(rng, 1, 10), 0.4);
    const WeightMap w = gen::random_weights(rng, g.size());
    const Weight is = brute_force(OracleProblem::max_wis, g, w).value;
    CHECK(is == brute::max_weight_independent(g, w));

    const Weight chi = brute_force(OracleProblem::chromatic_number, g).value;
    CHECK(brute::colorable(g, static_cast<int>(chi)));
    if (chi > 1) CHECK_FALSE(brute::colorable(g, static_cast<int>(chi - 1)));

    OracleParams p;
    p.d = static_cast<int>(chi);
    CHECK(brute_force(OracleProblem::max_d_colorable, g, w, p).value == total_weight(w, all_vertices(g)));
    p.d = 1;
    CHECK(brute_force(OracleProblem::max_d_colorable, g, w, p).value == is);
    p.d = 0;
    CHECK(brute_force(OracleProblem::max_d_degenerate, g, w, p).value == is);

    const Graph k1 = build_graph(1, {});
    p.pattern = &k1;
    CHECK(brute_force(OracleProblem::max_h_colorable, g, w, p).value == is);

    CHECK((brute_force(OracleProblem::min_fillin, g).value == 0) == is_chordal(g).chordal);
  }
}

TEST_CASE("oracle witnesses") {
  gen::Rng rng(52);
  for (int t = 0; t < 30; ++t) {
    const Graph g = gen::random_chordal(rng, gen::uniform(rng, 2, 10));
    const auto s = brute_force(OracleProblem::min_cvc, g);
    VertexSet cover = s.vertices;
    for (const auto& e : g.edges()) CHECK((contains(cover, e.u) || contains(cover, e.v)));
  }
}
