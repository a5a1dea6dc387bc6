#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

#include "achord/achord.h"

using nlohmann::json;

namespace {

struct Graph {
  achord_graph* g = nullptr;
  explicit Graph(const char* text) { REQUIRE(achord_graph_parse_text(text, &g) == ACHORD_OK); }
  ~Graph() { achord_graph_free(g); }
};

json run(const achord_graph* g, achord_config cfg) {
  cfg.timing = 0;
  achord_report* r = nullptr;
  const achord_status st = achord_run(&cfg, g, &r);
  REQUIRE_MESSAGE(st == ACHORD_OK, achord_last_error());
  json out = json::parse(achord_report_json(r));
  achord_report_free(r);
  return out;
}

achord_config config(const char* verb, const char* problem = nullptr) {
  achord_config c;
  achord_config_init(&c);
  c.verb = verb;
  c.problem = problem;
  return c;
}

const char* kC4 = "4 4\n1 2\n2 3\n3 4\n4 1\n";
const char* kC5 = "5 5\n1 2\n2 3\n3 4\n4 5\n5 1\n";

}  // namespace

TEST_CASE("graph handles") {
  achord_graph* g = nullptr;
  CHECK(achord_graph_parse_text("3 1\n1 1\n", &g) == ACHORD_E_PARSE);
  CHECK(g == nullptr);
  CHECK(std::string(achord_last_error()) == "line 2: self-loop at vertex 1");
  CHECK(achord_graph_parse_file("/nonexistent/file", &g) == ACHORD_E_INVALID_ARGUMENT);

  const int32_t edges[] = {1, 2, 2, 3};
  const int64_t weights[] = {4, 5, 6};
  REQUIRE(achord_graph_create(3, edges, 2, weights, &g) == ACHORD_OK);
  CHECK(achord_graph_vertex_count(g) == 3);
  CHECK(achord_graph_edge_count(g) == 2);
  auto cfg = config("solve", "wis");
  const json r = run(g, cfg);
  CHECK(r["result"]["value"] == 10);
  achord_graph_free(g);
  CHECK(achord_graph_create(2, edges, 2, nullptr, &g) == ACHORD_E_PARSE);
  CHECK(std::string(achord_status_string(ACHORD_E_SIZE_GUARD)) == "size_guard");
}

TEST_CASE("solve wis on C5") {
  Graph c5(kC5);
  auto cfg = config("solve", "wis");
  cfg.has_k = 1;
  cfg.k = 1;
  cfg.oracle = 1;
  const json r = run(c5.g, cfg);
  CHECK(r["verb"] == "solve");
  CHECK(r["result"]["value"] == 2);
  CHECK(r["oracle"]["agrees"] == true);
  CHECK(r["result"]["witness"].size() == 2);
  CHECK(r["input"]["digest"].get<std::string>().size() == 16);
  CHECK_FALSE(r.contains("wall_time_ms"));
}

TEST_CASE("fillin C4") {
  Graph c4(kC4);
  auto cfg = config("fillin");
  cfg.has_k = 1;
  cfg.k = 1;
  const json r = run(c4.g, cfg);
  CHECK(r["result"]["modulator"].size() == 1);
  CHECK(r["verdict"] == "in-class");
  cfg.k = 0;
  CHECK(run(c4.g, cfg)["verdict"] == "not-in-class");
}

TEST_CASE("kernel split-is on C4") {
  Graph c4(kC4);
  auto cfg = config("kernel", "split-is");
  cfg.has_k = 1;
  cfg.k = 1;
  cfg.has_ell = 1;
  cfg.ell = 2;
  const json r = run(c4.g, cfg);
  CHECK(r["verdict"] == "resolved-yes");
  CHECK(r["trace"].size() >= 1);
  CHECK(r["trace"][0]["rule"] == "split-edit");
  cfg.ell = 3;
  CHECK(run(c4.g, cfg)["verdict"] == "resolved-no");
}

TEST_CASE("every solve problem runs and agrees with the oracle") {
  Graph c5(kC5);
  std::string pattern = "/tmp/achord_capi_pattern.txt";
  std::ofstream(pattern) << "2 1\n1 2\n";
  for (const char* p : {"wis", "wvc", "oct", "bipartite-subgraph", "wfvs", "induced-forest", "d-colorable",
                        "h-colorable", "d-degenerate", "coloring", "cvc"}) {
    CAPTURE(p);
    auto cfg = config("solve", p);
    cfg.has_d = 1;
    cfg.d = 2;
    cfg.has_ell = 1;
    cfg.ell = 3;
    cfg.pattern_path = pattern.c_str();
    cfg.oracle = 1;
    const json r = run(c5.g, cfg);
    CHECK(r["oracle"]["agrees"] == true);
  }
  std::remove(pattern.c_str());
}

TEST_CASE("configuration errors are rejected before work") {
  Graph c5(kC5);
  achord_report* r = nullptr;
  auto cfg = config("solve", "coloring");
  CHECK(achord_run(&cfg, c5.g, &r) == ACHORD_E_INVALID_ARGUMENT);
  CHECK(std::string(achord_last_error()).find("--ell") != std::string::npos);
  cfg = config("solve", "nope");
  CHECK(achord_run(&cfg, c5.g, &r) == ACHORD_E_INVALID_ARGUMENT);
  cfg = config("frobnicate");
  CHECK(achord_run(&cfg, c5.g, &r) == ACHORD_E_INVALID_ARGUMENT);
  cfg = config("kernel", "split-is");
  CHECK(achord_run(&cfg, c5.g, &r) == ACHORD_E_INVALID_ARGUMENT);
  CHECK(r == nullptr);

  Graph two("2 0\n");
  cfg = config("solve", "cvc");
  CHECK(achord_run(&cfg, two.g, &r) == ACHORD_E_PRECONDITION);
}

TEST_CASE("validate verb") {
  Graph c5(kC5);
  const json r = run(c5.g, config("validate"));
  CHECK(r["result"]["chordal"] == false);
  CHECK(r["result"]["chordless_cycle"].size() == 5);
  Graph p3("3 2\n1 2\n2 3\n");
  const json q = run(p3.g, config("validate"));
  CHECK(q["result"]["chordal"] == true);
  CHECK(q["result"]["interval"] == true);
}

TEST_CASE("decompose output validates") {
  Graph c5(kC5);
  auto cfg = config("decompose");
  cfg.has_k = 1;
  cfg.k = 2;
  const json r = run(c5.g, cfg);
  REQUIRE(r["verdict"] == "in-class");
  CHECK(r["result"]["max_deficiency"] == 2);
  const std::string path = "/tmp/achord_capi_decomposition.txt";
  std::ofstream(path) << r["result"]["decomposition"].get<std::string>();
  auto v = config("validate");
  v.decomposition_path = path.c_str();
  CHECK(run(c5.g, v)["result"]["valid"] == true);
  auto s = config("solve", "wis");
  s.decomposition_path = path.c_str();
  CHECK(run(c5.g, s)["result"]["value"] == 2);
  std::remove(path.c_str());
}

TEST_CASE("reports are deterministic") {
  Graph g("8 11\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n7 8\n8 1\n1 5\n2 6\n3 7\n");
  for (const char* p : {"wis", "d-degenerate", "cvc", "coloring"}) {
    auto cfg = config("solve", p);
    cfg.has_d = 1;
    cfg.d = 1;
    cfg.has_ell = 1;
    cfg.ell = 3;
    CHECK(run(g.g, cfg).dump() == run(g.g, cfg).dump());
  }
  auto k = config("kernel", "interval-is");
  k.has_k = 1;
  k.k = 3;
  k.has_ell = 1;
  k.ell = 3;
  CHECK(run(g.g, k).dump() == run(g.g, k).dump());
}
