#include "edgepoly/edgepoly.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include "edgepoly/criteria.hpp"
#include "edgepoly/decompose.hpp"
#include "edgepoly/graph.hpp"
#include "edgepoly/polytope.hpp"
#include "edgepoly/verify.hpp"
#include "json_report.hpp"

struct ep_graph {
  edgepoly::SimpleGraph graph;
};

namespace {

using namespace edgepoly;

thread_local std::string last_error;

ep_status fail(ep_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs body and maps library exceptions onto status codes.
template <typename Body>
ep_status guarded(Body&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const CapExceeded& e) {
    return fail(EP_ERR_CAP, e.what());
  } catch (const InputError& e) {
    return fail(EP_ERR_INPUT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(EP_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(EP_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ep_status emit(const report::json& doc, char** out) {
  *out = copy_string(doc.dump(2) + "\n");
  return EP_OK;
}

Limits limits_of(const ep_options* options) {
  if (options == nullptr) return limits_from_environment();
  Limits l;
  l.max_cycle_vertices = options->max_cycle_vertices;
  l.max_enum_vertices = options->max_enum_vertices;
  return l;
}

ep_options defaults() {
  ep_options o;
  ep_options_init(&o);
  return o;
}

ep_status new_graph(SimpleGraph g, ep_graph** out) {
  *out = new ep_graph{std::move(g)};
  return EP_OK;
}

}  // namespace

extern "C" {

void ep_options_init(ep_options* options) {
  if (options == nullptr) return;
  const Limits l = limits_from_environment();
  options->max_cycle_vertices = l.max_cycle_vertices;
  options->max_enum_vertices = l.max_enum_vertices;
  options->exhaustive_normality = 0;
  options->odd_chord_triples = 0;
  options->list_polytope_edges = 0;
  options->threads = 0;
}

const char* ep_last_error(void) { return last_error.c_str(); }

void ep_string_free(char* s) { std::free(s); }

const char* ep_version(void) { return "1.0.0"; }

ep_status ep_graph_parse(const char* text, ep_graph** out) {
  if (text == nullptr || out == nullptr) return fail(EP_ERR_USAGE, "null argument");
  return guarded([&] { return new_graph(parse_graph(text), out); });
}

ep_status ep_graph_load(const char* path, ep_graph** out) {
  if (path == nullptr || out == nullptr) return fail(EP_ERR_USAGE, "null argument");
  return guarded([&] {
    std::ifstream in(path, std::ios::binary);
    if (!in) return fail(EP_ERR_INPUT, std::string("cannot open ") + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return new_graph(parse_graph(buffer.str()), out);
  });
}

ep_status ep_graph_generate(const char* spec, ep_graph** out) {
  if (spec == nullptr || out == nullptr) return fail(EP_ERR_USAGE, "null argument");
  return guarded([&] { return new_graph(generate_graph(parse_generator_spec(spec)), out); });
}

void ep_graph_free(ep_graph* g) { delete g; }

int ep_graph_vertex_count(const ep_graph* g) { return g ? g->graph.vertex_count() : 0; }

size_t ep_graph_edge_count(const ep_graph* g) { return g ? g->graph.edge_count() : 0; }

ep_status ep_graph_edge(const ep_graph* g, size_t index, int* u, int* v) {
  if (g == nullptr || u == nullptr || v == nullptr) return fail(EP_ERR_USAGE, "null argument");
  if (index >= g->graph.edge_count()) return fail(EP_ERR_USAGE, "edge index out of range");
  *u = g->graph.edge(index).u;
  *v = g->graph.edge(index).v;
  return EP_OK;
}

ep_status ep_graph_to_edge_list(const ep_graph* g, char** out) {
  if (g == nullptr || out == nullptr) return fail(EP_ERR_USAGE, "null argument");
  return guarded([&] {
    *out = copy_string(to_edge_list(g->graph));
    return EP_OK;
  });
}

int ep_graph_is_connected(const ep_graph* g) { return g && is_connected(g->graph) ? 1 : 0; }

ep_status ep_info_json(const ep_graph* g, char** out) {
  if (g == nullptr || out == nullptr) return fail(EP_ERR_USAGE, "null argument");
  return guarded([&] { return emit(report::info(g->graph), out); });
}

ep_status ep_polytope_json(const ep_graph* g, const ep_options* options, char** out) {
  if (g == nullptr || out == nullptr) return fail(EP_ERR_USAGE, "null argument");
  const ep_options o = options ? *options : defaults();
  return guarded([&] { return emit(report::polytope(g->graph, o.list_polytope_edges != 0), out); });
}

ep_status ep_decompose_json(const ep_graph* g, ep_search_mode mode, ep_decompose_output output,
                            const ep_options* options, char** out) {
  if (g == nullptr || out == nullptr) return fail(EP_ERR_USAGE, "null argument");
  SearchMode search_mode;
  switch (mode) {
    case EP_MODE_ANY:
      search_mode = SearchMode::any;
      break;
    case EP_MODE_TYPE1:
      search_mode = SearchMode::type1;
      break;
    case EP_MODE_TYPE2:
      search_mode = SearchMode::type2;
      break;
    default:
      return fail(EP_ERR_USAGE, "unknown search mode");
  }
  const Limits limits = limits_of(options);
  return guarded([&] {
    switch (output) {
      case EP_OUTPUT_WITNESS: {
        SearchStats stats;
        auto w = is_decomposable(g->graph, search_mode, &stats);
        return emit(report::witness(g->graph, search_mode, w, stats), out);
      }
      case EP_OUTPUT_ENUMERATE:
      case EP_OUTPUT_COUNT: {
        const auto all = enumerate_decompositions(g->graph, limits);
        return emit(report::decompositions(all, output == EP_OUTPUT_ENUMERATE), out);
      }
    }
    return fail(EP_ERR_USAGE, "unknown output kind");
  });
}

ep_status ep_normal_json(const ep_graph* g, const ep_options* options, char** out) {
  if (g == nullptr || out == nullptr) return fail(EP_ERR_USAGE, "null argument");
  const ep_options o = options ? *options : defaults();
  const auto mode = o.exhaustive_normality ? NormalityMode::exhaustive : NormalityMode::induced;
  return guarded([&] {
    return emit(report::normality(odd_cycle_condition(g->graph, limits_of(&o), mode), mode), out);
  });
}

ep_status ep_quadratic_json(const ep_graph* g, const ep_options* options, char** out) {
  if (g == nullptr || out == nullptr) return fail(EP_ERR_USAGE, "null argument");
  const ep_options o = options ? *options : defaults();
  const auto mode = o.odd_chord_triples ? TripleMode::odd_chords : TripleMode::literal;
  return guarded([&] {
    return emit(report::quadratic(quadratic_condition(g->graph, limits_of(&o), mode), mode), out);
  });
}

ep_status ep_verify_json(const ep_graph* g, const ep_options* options, char** out) {
  if (g == nullptr || out == nullptr) return fail(EP_ERR_USAGE, "null argument");
  const Limits limits = limits_of(options);
  return guarded([&] { return emit(report::theorem(verify_theorems(g->graph, limits), true), out); });
}

ep_status ep_corpus_verify_json(const char* corpus_spec, const ep_options* options, char** out) {
  if (corpus_spec == nullptr || out == nullptr) return fail(EP_ERR_USAGE, "null argument");
  const ep_options o = options ? *options : defaults();
  return guarded([&] {
    report::json doc;
    try {
      doc = report::json::parse(corpus_spec);
    } catch (const report::json::parse_error& e) {
      return fail(EP_ERR_INPUT, std::string("corpus spec: ") + e.what());
    }
    const CorpusSpec spec = report::corpus_spec_from_json(doc);
    return emit(report::corpus(corpus_verify(spec, limits_of(&o), o.threads)), out);
  });
}

ep_status ep_is_decomposable(const ep_graph* g, ep_search_mode mode, int* decomposable) {
  if (g == nullptr || decomposable == nullptr) return fail(EP_ERR_USAGE, "null argument");
  if (mode != EP_MODE_ANY && mode != EP_MODE_TYPE1 && mode != EP_MODE_TYPE2)
    return fail(EP_ERR_USAGE, "unknown search mode");
  const SearchMode m = mode == EP_MODE_TYPE1   ? SearchMode::type1
                       : mode == EP_MODE_TYPE2 ? SearchMode::type2
                                               : SearchMode::any;
  return guarded([&] {
    *decomposable = is_decomposable(g->graph, m).has_value() ? 1 : 0;
    return EP_OK;
  });
}

ep_status ep_count_decompositions(const ep_graph* g, const ep_options* options, uint64_t* count) {
  if (g == nullptr || count == nullptr) return fail(EP_ERR_USAGE, "null argument");
  const Limits limits = limits_of(options);
  return guarded([&] {
    *count = enumerate_decompositions(g->graph, limits).size();
    return EP_OK;
  });
}

ep_status ep_multipartite_formula(const int* parts, size_t part_count, int64_t* value) {
  if (parts == nullptr || value == nullptr) return fail(EP_ERR_USAGE, "null argument");
  return guarded([&] {
    *value = count_multipartite_decompositions(PartSpec({parts, parts + part_count})).value;
    return EP_OK;
  });
}

ep_status ep_validate_weights(const ep_graph* g, const int* weights, size_t count, int* accepted) {
  if (g == nullptr || weights == nullptr || accepted == nullptr)
    return fail(EP_ERR_USAGE, "null argument");
  return guarded([&] {
    const WeightVector w(std::vector<int>(weights, weights + count));
    *accepted = validate_weights(g->graph, w).accepted() ? 1 : 0;
    return EP_OK;
  });
}

}  // extern "C"
