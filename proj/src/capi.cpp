#include "achord/achord.h"

#include <exception>
#include <new>
#include <string>

#include "achord/io.hpp"
#include "achord/run.hpp"

struct achord_graph {
  achord::ParsedGraph parsed;
};

struct achord_report {
  achord::RunReport report;
};

namespace {

thread_local std::string last_error;

achord_status to_status(achord::ErrorCode code) {
  return static_cast<achord_status>(achord::exit_status(code));
}

template <typename F>
achord_status guarded(F&& f) {
  last_error.clear();
  try {
    f();
    return ACHORD_OK;
  } catch (const achord::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return ACHORD_E_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return ACHORD_E_INTERNAL;
  }
}

achord_status null_argument(const char* what) {
  last_error = std::string(what) + " is null";
  return ACHORD_E_INVALID_ARGUMENT;
}

std::string or_empty(const char* s) { return s ? s : ""; }

}  // namespace

extern "C" {

achord_status achord_graph_parse_file(const char* path, achord_graph** out) {
  if (!path || !out) return null_argument("argument");
  *out = nullptr;
  return guarded([&] { *out = new achord_graph{achord::parse_graph_file(path)}; });
}

achord_status achord_graph_parse_text(const char* text, achord_graph** out) {
  if (!text || !out) return null_argument("argument");
  *out = nullptr;
  return guarded([&] { *out = new achord_graph{achord::parse_graph_text(text)}; });
}

achord_status achord_graph_create(int32_t n, const int32_t* edges, int32_t m, const int64_t* weights,
                                  achord_graph** out) {
  if (!out || (m > 0 && !edges)) return null_argument("argument");
  *out = nullptr;
  return guarded([&] {
    if (n < 0 || m < 0) throw achord::Error(achord::ErrorCode::invalid_argument, "negative size");
    std::string text = std::to_string(n) + " " + std::to_string(m) + "\n";
    for (int32_t i = 0; i < m; ++i) {
      text += std::to_string(edges[2 * i]) + " " + std::to_string(edges[2 * i + 1]) + "\n";
    }
    if (weights) {
      for (int32_t v = 0; v < n; ++v) text += "w " + std::to_string(v + 1) + " " + std::to_string(weights[v]) + "\n";
    }
    *out = new achord_graph{achord::parse_graph_text(text)};
  });
}

int32_t achord_graph_vertex_count(const achord_graph* g) { return g ? g->parsed.graph.size() : 0; }

int32_t achord_graph_edge_count(const achord_graph* g) { return g ? g->parsed.graph.edge_count() : 0; }

void achord_graph_free(achord_graph* g) { delete g; }

void achord_config_init(achord_config* cfg) {
  if (!cfg) return;
  *cfg = achord_config{};
  cfg->verb = "validate";
  cfg->timing = 1;
}

achord_status achord_run(const achord_config* cfg, const achord_graph* g, achord_report** out) {
  if (!cfg || !g || !out) return null_argument("argument");
  *out = nullptr;
  return guarded([&] {
    achord::RunConfig rc;
    const auto verb = achord::verb_from_name(or_empty(cfg->verb));
    if (!verb) throw achord::Error(achord::ErrorCode::invalid_argument, "unknown verb '" + or_empty(cfg->verb) + "'");
    rc.verb = *verb;
    rc.problem = or_empty(cfg->problem);
    if (cfg->has_k) rc.k = cfg->k;
    if (cfg->has_d) rc.d = cfg->d;
    if (cfg->has_ell) rc.ell = cfg->ell;
    if (cfg->has_w) rc.threshold = cfg->w;
    rc.pattern_path = or_empty(cfg->pattern_path);
    rc.decomposition_path = or_empty(cfg->decomposition_path);
    rc.weights_path = or_empty(cfg->weights_path);
    rc.oracle = cfg->oracle != 0;
    rc.timing = cfg->timing != 0;
    rc.seed = cfg->seed;
    *out = new achord_report{achord::run(rc, g->parsed)};
  });
}

const char* achord_report_json(const achord_report* r) { return r ? r->report.json.c_str() : ""; }

const char* achord_report_text(const achord_report* r) { return r ? r->report.text.c_str() : ""; }

void achord_report_free(achord_report* r) { delete r; }

const char* achord_last_error(void) { return last_error.c_str(); }

const char* achord_status_string(achord_status s) {
  switch (s) {
    case ACHORD_OK: return "ok";
    case ACHORD_E_INVALID_ARGUMENT: return "invalid_argument";
    case ACHORD_E_PARSE: return "parse";
    case ACHORD_E_GRAPH: return "graph";
    case ACHORD_E_PRECONDITION: return "precondition";
    case ACHORD_E_DECOMPOSITION: return "decomposition";
    case ACHORD_E_SIZE_GUARD: return "size_guard";
    case ACHORD_E_INTERNAL: return "internal";
  }
  return "unknown";
}

}  // extern "C"
