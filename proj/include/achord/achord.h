#ifndef ACHORD_ACHORD_H
#define ACHORD_ACHORD_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(ACHORD_BUILDING)
#define ACHORD_API __declspec(dllexport)
#else
#define ACHORD_API __declspec(dllimport)
#endif
#else
#define ACHORD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes double as process exit statuses for the command-line tool. */
typedef enum achord_status {
  ACHORD_OK = 0,
  ACHORD_E_INVALID_ARGUMENT = 2,
  ACHORD_E_PARSE = 3,
  ACHORD_E_GRAPH = 4,
  ACHORD_E_PRECONDITION = 5,
  ACHORD_E_DECOMPOSITION = 6,
  ACHORD_E_SIZE_GUARD = 7,
  ACHORD_E_INTERNAL = 70
} achord_status;

typedef struct achord_graph achord_graph;
typedef struct achord_report achord_report;

/* Graphs. Vertex ids are 1-based everywhere in this API. */
ACHORD_API achord_status achord_graph_parse_file(const char* path, achord_graph** out);
ACHORD_API achord_status achord_graph_parse_text(const char* text, achord_graph** out);
/* `edges` holds 2*m ids; `weights` may be NULL, otherwise n entries. */
ACHORD_API achord_status achord_graph_create(int32_t n, const int32_t* edges, int32_t m, const int64_t* weights,
                                             achord_graph** out);
ACHORD_API int32_t achord_graph_vertex_count(const achord_graph* g);
ACHORD_API int32_t achord_graph_edge_count(const achord_graph* g);
ACHORD_API void achord_graph_free(achord_graph* g);

typedef struct achord_config {
  const char* verb;    /* fillin | decompose | solve | kernel | validate */
  const char* problem; /* solve problem, kernel variant or fillin method; may be NULL */
  int has_k;
  int32_t k;
  int has_d;
  int32_t d;
  int has_ell;
  int64_t ell;
  int has_w;
  int64_t w;
  const char* pattern_path;       /* h-colorable pattern graph */
  const char* decomposition_path; /* nice decomposition in text form */
  const char* weights_path;       /* "w u value" lines */
  int oracle;                     /* also run the exhaustive oracle */
  int timing;                     /* include wall time in the report */
  uint64_t seed;
} achord_config;

ACHORD_API void achord_config_init(achord_config* cfg);

/* On success *out owns a report; on failure *out is NULL and
   achord_last_error() describes the problem. */
ACHORD_API achord_status achord_run(const achord_config* cfg, const achord_graph* g, achord_report** out);

ACHORD_API const char* achord_report_json(const achord_report* r);
ACHORD_API const char* achord_report_text(const achord_report* r);
ACHORD_API void achord_report_free(achord_report* r);

/* Message of the last failed call on this thread; empty if none. */
ACHORD_API const char* achord_last_error(void);
ACHORD_API const char* achord_status_string(achord_status s);

#ifdef __cplusplus
}
#endif

#endif
