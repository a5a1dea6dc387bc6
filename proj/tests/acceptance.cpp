// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "achord/chordal.hpp"
#include "achord/dp.hpp"
#include "achord/errors.hpp"
#include "achord/fillin.hpp"
#include "achord/io.hpp"
#include "achord/kernels.hpp"
#include "achord/oracle.hpp"
#include "achord/run.hpp"
#include "brute.hpp"
#include "generators.hpp"

using namespace achord;

namespace {

struct Criterion {
  int checks = 0;
  int failures = 0;
  std::string first_failure;
  std::string summary;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (failures++ == 0) first_failure = what;
  }
};

int report(int id, const std::string& title, const std::function<void(Criterion&)>& body) {
  Criterion c;
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  const bool pass = c.failures == 0;
  std::printf("criterion %d: %s %s (%d checks%s%s)", id, pass ? "PASS" : "FAIL", title.c_str(), c.checks,
              c.summary.empty() ? "" : ", ", c.summary.c_str());
  if (!pass) std::printf(" first failure: %s [%d failed]", c.first_failure.c_str(), c.failures);
  std::printf("\n");
  std::fflush(stdout);
  return pass ? 0 : 1;
}

std::string describe(const Graph& g) {
  std::ostringstream os;
  os << "n=" << g.size() << " edges=";
  for (const auto& e : g.edges()) os << e.u << "-" << e.v << " ";
  return os.str();
}

Weight oracle(OracleProblem p, const Graph& g, const WeightMap& w, int d = 0, const Graph* h = nullptr) {
  OracleParams params;
  params.d = d;
  params.pattern = h;
  return brute_force(p, g, w, params).value;
}

struct Instance {
  Graph g;
  WeightMap w;
  NiceTreeDecomposition t;
};

// Shared by the solver, candidate and structural checks.
std::vector<Instance> solver_instances() {
  gen::Rng rng(20240601);
  std::vector<Instance> out;
  while (out.size() < 50) {
    const Graph g = gen::near_chordal(rng, gen::uniform(rng, 2, 12), gen::uniform(rng, 0, 3));
    if (connected_components(g).size() != 1) continue;
    auto d = kalmost_nice_decomposition(g, 3);
    if (!d) throw Error(ErrorCode::internal, "no 3-almost decomposition for " + describe(g));
    out.push_back({g, gen::random_weights(rng, g.size(), 1, 10), d->decomposition});
  }
  return out;
}

void solver_equivalence(Criterion& c, const std::vector<Instance>& instances) {
  const Graph k1 = gen::complete(1), k2 = gen::complete(2), k3 = gen::complete(3), c4 = gen::cycle(4);
  int max_n = 0;
  for (const auto& [g, w, t] : instances) {
    max_n = std::max(max_n, g.size());
    const std::string id = describe(g);
    const Weight total = total_weight(w, all_vertices(g));
    const Weight wis = brute::max_weight_independent(g, w);
    const Weight bip = oracle(OracleProblem::max_d_colorable, g, w, 2);
    const Weight forest = oracle(OracleProblem::max_d_degenerate, g, w, 1);

    auto classic = [&](ClassicProblem p, Weight expected) {
      c.expect(solve_classic(p, g, w, t).value == expected, std::string(classic_problem_name(p)) + " on " + id);
    };
    classic(ClassicProblem::wis, wis);
    classic(ClassicProblem::wvc, total - wis);
    classic(ClassicProblem::oct, total - bip);
    classic(ClassicProblem::bipartite_subgraph, bip);
    classic(ClassicProblem::wfvs, total - forest);

    for (int d = 1; d <= 3; ++d) {
      const auto s = solve_d_colorable(g, w, d, t);
      c.expect(s.value == oracle(OracleProblem::max_d_colorable, g, w, d), "d-colorable on " + id);
      c.expect(is_proper_coloring(g, s.vertices, s.assignment, d), "d-colorable witness on " + id);
    }
    for (int d = 0; d <= 2; ++d) {
      const auto s = solve_d_degenerate(g, w, d, t);
      c.expect(s.value == oracle(OracleProblem::max_d_degenerate, g, w, d), "d-degenerate on " + id);
      c.expect(is_degeneracy_ordering(g, s.vertices, s.ordering, d), "d-degenerate witness on " + id);
    }
    for (const Graph* h : {&k1, &k2, &k3, &c4}) {
      const auto s = solve_h_colorable(g, w, *h, t);
      c.expect(s.value == oracle(OracleProblem::max_h_colorable, g, w, 0, h), "h-colorable on " + id);
      c.expect(is_homomorphism(g, s.vertices, s.assignment, *h), "h-colorable witness on " + id);
    }
    const Weight chi = brute_force(OracleProblem::chromatic_number, g).value;
    for (int ell = 1; ell <= 5; ++ell)
      c.expect(solve_coloring(g, ell, t).feasible == (chi <= ell), "coloring on " + id);
    const auto cvc = solve_cvc(g, w, t);
    c.expect(cvc.value == oracle(OracleProblem::min_cvc, g, w), "cvc on " + id);
    c.expect(is_connected_vertex_cover(g, cvc.vertices), "cvc witness on " + id);
  }
  c.summary = std::to_string(instances.size()) + " graphs, n <= " + std::to_string(max_n);
}

void candidate_bound_check(Criterion& c, const std::vector<Instance>& instances) {
  int bags = 0;
  for (const auto& inst : instances) {
    std::set<VertexSet> seen;
    for (const auto& node : inst.t.nodes) {
      if (!seen.insert(node.bag).second) continue;
      ++bags;
      const int n = static_cast<int>(node.bag.size());
      for (int d = 1; d <= 3; ++d) {
        const auto fam = enumerate_bag_candidates(inst.g, node.bag, d);
        const int k = bag_deficiency(inst.g, node.bag).count;
        const int bound = static_cast<int>(std::floor((3.0 * d + std::sqrt(double(d * d + 8 * d * k))) / 2.0 + 1e-9));
        const std::set<VertexSet> have(fam.sets.begin(), fam.sets.end());
        for (const auto& s : fam.sets) c.expect(static_cast<int>(s.size()) <= bound, "candidate size in " + describe(inst.g));
        for (std::uint32_t m = 0; m < (1u << n); ++m) {
          VertexSet s;
          for (int i = 0; i < n; ++i)
            if (m >> i & 1u) s.push_back(node.bag[i]);
          if (brute::colorable(induced_subgraph(inst.g, s), d))
            c.expect(have.count(s) == 1, "missing candidate in " + describe(inst.g));
        }
      }
    }
  }
  c.summary = std::to_string(bags) + " distinct bags, d = 1..3";
}

void fillin_exactness(Criterion& c) {
  gen::Rng rng(20240602);
  for (int t = 0; t < 100; ++t) {
    const Graph g = gen::random_graph(rng, gen::uniform(rng, 1, 8), gen::uniform(rng, 25, 65) / 100.0);
    const Weight truth = brute_force(OracleProblem::min_fillin, g).value;
    const auto a = exact_fillin(g, static_cast<int>(truth));
    c.expect(a && a->size() == truth, "fill-in on " + describe(g));
    if (a) c.expect(is_chordal(apply_modulator(g, a->pairs, ModulatorMode::add)).chordal, "not chordal: " + describe(g));
    if (truth > 0) c.expect(!exact_fillin(g, static_cast<int>(truth) - 1), "below optimum: " + describe(g));
  }
  for (int n = 4; n <= 9; ++n) {
    const auto a = exact_fillin(gen::cycle(n), n);
    c.expect(a && a->size() == n - 3, "C" + std::to_string(n));
  }
  c.summary = "100 random graphs n <= 8, C4..C9";
}

bool answer(const KernelInstance& inst) {
  if (inst.verdict == KernelVerdict::resolved_yes) return true;
  if (inst.verdict == KernelVerdict::resolved_no) return false;
  const WeightMap w = inst.weights ? *inst.weights : unit_weights(inst.graph.size());
  return brute::max_weight_independent(inst.graph, w) >= inst.threshold;
}

void split_kernel(Criterion& c) {
  gen::Rng rng(20240603);
  int tested = 0, max_out = 0;
  for (int t = 0; t < 400 && tested < 40; ++t) {
    const Graph g = gen::near_split(rng, gen::uniform(rng, 3, 12), gen::uniform(rng, 0, 3));
    const Weight completion = brute_force(OracleProblem::min_split_completion, g).value;
    if (completion > 3) continue;
    const int k = gen::uniform(rng, static_cast<int>(completion), 3);
    ++tested;
    const Weight alpha = brute::max_weight_independent(g, unit_weights(g.size()));
    for (Weight ell = 0; ell <= g.size() + 1; ++ell) {
      const auto res = split_is_kernel(g, ell, k);
      const std::string id = describe(g) + " k=" + std::to_string(k) + " ell=" + std::to_string(ell);
      c.expect(res.instance.verdict != KernelVerdict::not_in_class, "rejected " + id);
      max_out = std::max(max_out, res.instance.graph.size());
      c.expect(res.instance.graph.size() <= 2 * k * k * (k + 2), "size " + id);
      c.expect(answer(res.instance) == (alpha >= ell), "answer " + id);
      c.expect(res.after_resolving.has_value(), "no partition " + id);
      if (res.after_resolving)
        for (bool ok : check_split_partition(g, *res.after_resolving, k)) c.expect(ok, "partition invariant " + id);
    }
  }
  c.expect(tested >= 30, "only " + std::to_string(tested) + " instances");
  c.summary = std::to_string(tested) + " instances, largest output " + std::to_string(max_out) + " vertices";
}

// Interval graph minus a few edges: interval completion at most the number removed.
Graph near_interval(gen::Rng& rng, int n, int deleted) {
  EdgeSet edges = gen::random_interval(rng, n).edges();
  std::shuffle(edges.begin(), edges.end(), rng);
  edges.erase(edges.begin(), edges.begin() + std::min<int>(deleted, static_cast<int>(edges.size())));
  return build_graph(n, normalize_pairs(edges));
}

void interval_compression(Criterion& c) {
  gen::Rng rng(20240604);
  int tested = 0, reduced = 0;
  for (int t = 0; t < 40; ++t) {
    const int removed = gen::uniform(rng, 0, 3);
    const Graph g = near_interval(rng, gen::uniform(rng, 4, 12), removed);
    const int k = gen::uniform(rng, removed, 3);
    ++tested;
    const Weight alpha = brute::max_weight_independent(g, unit_weights(g.size()));
    for (Weight ell = std::max<Weight>(0, alpha - 1); ell <= alpha + 1; ++ell) {
      const auto res = interval_is_compress(g, ell, k);
      const std::string id = describe(g) + " k=" + std::to_string(k) + " ell=" + std::to_string(ell);
      c.expect(res.instance.verdict != KernelVerdict::not_in_class, "rejected " + id);
      c.expect(res.remainder_chordal_ok, "G - X not chordal " + id);
      c.expect(answer(res.instance) == (alpha >= ell), "answer " + id);
      if (res.instance.verdict == KernelVerdict::reduced) ++reduced;
    }
  }
  c.expect(tested >= 30, "too few instances");
  c.summary = std::to_string(tested) + " instances, " + std::to_string(reduced) + " reduced outputs";
}

void turing_kernel(Criterion& c) {
  gen::Rng rng(20240605);
  int tested = 0;
  std::size_t largest = 0;
  for (int t = 0; t < 40; ++t) {
    const int k = gen::uniform(rng, 0, 3);
    const Graph g = gen::near_chordal(rng, gen::uniform(rng, 2, 12), k);
    const WeightMap w = gen::random_weights(rng, g.size(), 1, 10);
    const Weight target = gen::uniform(rng, 1, 30);
    const auto res = turing_kernel_wclique(g, w, target, k);
    const std::string id = describe(g) + " k=" + std::to_string(k);
    ++tested;
    c.expect(res.verdict != KernelVerdict::not_in_class, "rejected " + id);
    bool any = false;
    for (const auto& q : res.queries) {
      largest = std::max(largest, q.labels.size());
      c.expect(static_cast<int>(q.labels.size()) <= 16 * k * k, "query size " + id);
      any = any || q.answer;
    }
    const bool truth = brute_force(OracleProblem::max_wclique, g, w).value >= target;
    c.expect(any == truth, "disjunction " + id);
    c.expect((res.verdict == KernelVerdict::resolved_yes) == truth, "verdict " + id);
  }
  c.summary = std::to_string(tested) + " instances, largest query " + std::to_string(largest) + " vertices";
}

void structural(Criterion& c, const std::vector<Instance>& instances) {
  gen::Rng rng(20240606);
  for (int t = 0; t < 40; ++t) {
    const Graph g = gen::random_graph(rng, gen::uniform(rng, 1, 8), 0.5);
    const Weight fill = brute_force(OracleProblem::min_fillin, g).value;
    const Weight interval = brute_force(OracleProblem::min_interval_completion, g).value;
    const Weight clique = static_cast<Weight>(missing_pairs(g, all_vertices(g)).size());
    c.expect(clique >= interval && interval >= fill, "measure order on " + describe(g));
  }
  for (int t = 0; t < 40; ++t) {
    const Graph g = gen::random_graph(rng, gen::uniform(rng, 1, 14), gen::uniform(rng, 10, 60) / 100.0);
    const int d = degeneracy_ordering(g).degeneracy;
    c.expect(enumerate_cliques(g).size() <= (std::size_t{1} << d) * g.size() + 1, "clique count on " + describe(g));
  }
  int builds = 0, bags = 0;
  for (const auto& inst : instances) {
    ++builds;
    c.expect(!validate_nice(inst.t, inst.g).has_value(), "invalid decomposition for " + describe(inst.g));
    const auto heuristic = decomposition_from_modulator(inst.g, minimal_triangulation(inst.g)).decomposition;
    ++builds;
    c.expect(!validate_nice(heuristic, inst.g).has_value(), "invalid heuristic decomposition for " + describe(inst.g));
    for (int ell = 1; ell <= 4; ++ell) {
      ColoringStats stats;
      solve_coloring(inst.g, ell, inst.t, &stats);
      for (const auto& b : stats.bags) {
        ++bags;
        const double k = b.deficiency;
        const double bound = b.deficiency == 0 ? 1.0 : std::pow(2 * k, 2 * k);
        c.expect(static_cast<double>(b.partitions) <= bound, "partition count in " + describe(inst.g));
      }
    }
  }
  c.summary = std::to_string(builds) + " decompositions, " + std::to_string(bags) + " coloring bags";
}

void determinism(Criterion& c) {
  const ParsedGraph g = parse_graph_text("8 11\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n7 8\n8 1\n1 5\n2 6\n3 7\n");
  auto once = [&](RunConfig cfg) {
    cfg.timing = false;
    return run(cfg, g).json;
  };
  std::vector<RunConfig> configs;
  for (const char* p : {"wis", "wvc", "oct", "bipartite-subgraph", "wfvs", "induced-forest", "d-colorable",
                        "d-degenerate", "coloring", "cvc"}) {
    RunConfig cfg;
    cfg.verb = Verb::solve;
    cfg.problem = p;
    cfg.d = 2;
    cfg.ell = 3;
    configs.push_back(cfg);
  }
  for (const char* v : {"split-is", "interval-is", "turing-wclique"}) {
    RunConfig cfg;
    cfg.verb = Verb::kernel;
    cfg.problem = v;
    cfg.k = 3;
    cfg.ell = 3;
    cfg.threshold = 3;
    configs.push_back(cfg);
  }
  for (Verb v : {Verb::fillin, Verb::decompose, Verb::validate}) {
    RunConfig cfg;
    cfg.verb = v;
    cfg.k = 3;
    configs.push_back(cfg);
  }
  for (const auto& cfg : configs) {
    const std::string first = once(cfg);
    for (int r = 0; r < 3; ++r) c.expect(once(cfg) == first, std::string("run differs for ") + verb_name(cfg.verb) + " " + cfg.problem);
  }

  gen::Rng rng(20240607);
  for (int t = 0; t < 10; ++t) {
    const Graph h = gen::near_chordal(rng, 10, 3);
    const WeightMap w = gen::random_weights(rng, 10);
    const auto td = decomposition_from_modulator(h, minimal_triangulation(h)).decomposition;
    const auto a = solve_d_colorable(h, w, 2, td), b = solve_d_colorable(h, w, 2, td);
    c.expect(a.vertices == b.vertices && a.assignment == b.assignment, "witness differs");
  }
  c.summary = std::to_string(configs.size()) + " report configurations";
}

}  // namespace

int main() {
  std::vector<Instance> instances;
  int failed = 0;
  failed += report(1, "solvers match brute force", [&](Criterion& c) {
    instances = solver_instances();
    solver_equivalence(c, instances);
  });
  failed += report(2, "candidate families bounded and complete", [&](Criterion& c) { candidate_bound_check(c, instances); });
  failed += report(3, "exact fill-in", fillin_exactness);
  failed += report(4, "split kernel", split_kernel);
  failed += report(5, "interval compression", interval_compression);
  failed += report(6, "turing kernel", turing_kernel);
  failed += report(7, "structural invariants", [&](Criterion& c) { structural(c, instances); });
  failed += report(8, "determinism", determinism);
  return failed == 0 ? 0 : 1;
}
