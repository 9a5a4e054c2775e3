/* C interface to the edgepoly library.
 *
 * Graphs are opaque handles. Every call returns an ep_status; on failure
 * ep_last_error() describes the problem for the calling thread. Strings
 * returned through `char** out` are heap-allocated JSON documents owned by
 * the caller and released with ep_string_free().
 */
#ifndef EDGEPOLY_EDGEPOLY_H
#define EDGEPOLY_EDGEPOLY_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(EDGEPOLY_BUILDING)
#    define EP_API __declspec(dllexport)
#  else
#    define EP_API __declspec(dllimport)
#  endif
#else
#  define EP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

#define EP_SCHEMA_VERSION 1

/* Values double as CLI exit codes. */
typedef enum ep_status {
  EP_OK = 0,
  EP_ERR_USAGE = 2,    /* bad argument (null pointer, unknown mode) */
  EP_ERR_INPUT = 3,    /* unparsable graph, failed precondition */
  EP_ERR_CAP = 4,      /* vertex cap exceeded */
  EP_ERR_INTERNAL = 5
} ep_status;

typedef struct ep_graph ep_graph;

typedef enum ep_search_mode { EP_MODE_ANY = 0, EP_MODE_TYPE1 = 1, EP_MODE_TYPE2 = 2 } ep_search_mode;

typedef enum ep_decompose_output {
  EP_OUTPUT_WITNESS = 0,
  EP_OUTPUT_ENUMERATE = 1,
  EP_OUTPUT_COUNT = 2
} ep_decompose_output;

typedef struct ep_options {
  int max_cycle_vertices;
  int max_enum_vertices;
  int exhaustive_normality; /* nonzero: check every simple odd cycle */
  int odd_chord_triples;    /* nonzero: odd-triples drawn from odd chords only */
  int list_polytope_edges;  /* nonzero: include the edge pair list */
  unsigned threads;         /* corpus workers, 0 = hardware concurrency */
} ep_options;

/* Defaults, with EDGEPOLY_MAX_VERTICES applied to both caps when set. */
EP_API void ep_options_init(ep_options* options);

EP_API const char* ep_last_error(void);
EP_API void ep_string_free(char* s);
EP_API const char* ep_version(void);

/* Edge-list or JSON text, auto-detected. */
EP_API ep_status ep_graph_parse(const char* text, ep_graph** out);
EP_API ep_status ep_graph_load(const char* path, ep_graph** out);
/* "complete:4", "cycle:6", "path:3", "multipartite:2,2", "random:d:p[:seed]". */
EP_API ep_status ep_graph_generate(const char* spec, ep_graph** out);
EP_API void ep_graph_free(ep_graph* g);

EP_API int ep_graph_vertex_count(const ep_graph* g);
EP_API size_t ep_graph_edge_count(const ep_graph* g);
/* Writes the endpoints of edge `index` (sorted edge order). */
EP_API ep_status ep_graph_edge(const ep_graph* g, size_t index, int* u, int* v);
EP_API ep_status ep_graph_to_edge_list(const ep_graph* g, char** out);
EP_API int ep_graph_is_connected(const ep_graph* g);

/* Structural summary. */
EP_API ep_status ep_info_json(const ep_graph* g, char** out);
/* Polytope edge count, exact dimension, compatibility counts. */
EP_API ep_status ep_polytope_json(const ep_graph* g, const ep_options* options, char** out);
EP_API ep_status ep_decompose_json(const ep_graph* g, ep_search_mode mode,
                                   ep_decompose_output output, const ep_options* options,
                                   char** out);
EP_API ep_status ep_normal_json(const ep_graph* g, const ep_options* options, char** out);
EP_API ep_status ep_quadratic_json(const ep_graph* g, const ep_options* options, char** out);
EP_API ep_status ep_verify_json(const ep_graph* g, const ep_options* options, char** out);
/* Corpus description as JSON, e.g.
 *   {"random": {"count": 500, "min_vertices": 4, "max_vertices": 9,
 *               "probabilities": [0.3, 0.5, 0.7], "seed": 7},
 *    "multipartite": {"min_vertices": 2, "max_vertices": 8, "min_parts": 3}}
 * Missing keys take their defaults; a missing family is skipped. */
EP_API ep_status ep_corpus_verify_json(const char* corpus_spec, const ep_options* options,
                                       char** out);

/* Direct queries. */
EP_API ep_status ep_is_decomposable(const ep_graph* g, ep_search_mode mode, int* decomposable);
EP_API ep_status ep_count_decompositions(const ep_graph* g, const ep_options* options,
                                         uint64_t* count);
/* 2^(d-1) - sum(2^|V_i| - 1) - 1, verbatim (may be negative). */
EP_API ep_status ep_multipartite_formula(const int* parts, size_t part_count, int64_t* value);
/* weights: d entries in {-1,0,1}. *accepted set to 1 when the hyperplane
 * decomposes the polytope. */
EP_API ep_status ep_validate_weights(const ep_graph* g, const int* weights, size_t count,
                                     int* accepted);

#ifdef __cplusplus
}
#endif

#endif /* EDGEPOLY_EDGEPOLY_H */
