#include "json_report.hpp"

namespace edgepoly::report {
namespace {

json header(const char* command) {
  return json{{"schema_version", kSchemaVersion}, {"command", command}};
}

json weights_json(const WeightVector& w) { return w.to_vector(); }

json decomposition_json(const Decomposition& d) {
  return json{{"first", edges_json(d.first())}, {"second", edges_json(d.second())}};
}

json piece_json(const PieceProperties& p) {
  json j{{"connected", p.connected}, {"dimension", p.dimension}};
  j["normal"] = p.normal ? json(*p.normal) : json(nullptr);
  j["quadratic"] = p.quadratic ? json(*p.quadratic) : json(nullptr);
  return j;
}

json counts_json(const std::map<std::string, std::size_t>& m) {
  json j = json::object();
  for (const auto& [k, v] : m) j[k] = v;
  return j;
}

}  // namespace

json edge_json(const Edge& e) { return json::array({e.u, e.v}); }

json edges_json(std::span<const Edge> edges) {
  json j = json::array();
  for (const auto& e : edges) j.push_back(edge_json(e));
  return j;
}

json cycle_json(const Cycle& c) { return json(std::vector<int>(c.vertices().begin(), c.vertices().end())); }

json info(const SimpleGraph& g) {
  json j = header("info");
  j["vertices"] = g.vertex_count();
  j["edges"] = g.edge_count();
  const bool connected = is_connected(g);
  j["connected"] = connected;
  if (connected) {
    const auto sides = bipartition(g);
    j["bipartite"] = sides.has_value();
    if (sides) j["bipartition"] = json{{"left", sides->left}, {"right", sides->right}};
  } else {
    j["bipartite"] = nullptr;
  }
  j["has_four_cycle"] = has_four_cycle(g);
  if (auto parts = multipartite_parts(g))
    j["multipartite_parts"] = parts->sizes;
  else
    j["multipartite_parts"] = nullptr;
  j["edge_list"] = edges_json(g.edges());
  return j;
}

json polytope(const SimpleGraph& g, bool list_edges) {
  json j = header("polytope");
  j["vertices"] = g.vertex_count();
  j["polytope_vertices"] = g.edge_count();
  const auto pairs = polytope_edges(g);
  j["polytope_edges"] = pairs.size();
  const CompatibilityTable table(g);
  j["cycle_compatible_pairs"] = table.compatible_pair_count();
  j["dimension"] = g.edge_count() > 0 ? json(polytope_dimension(g)) : json(nullptr);
  if (list_edges) {
    json list = json::array();
    for (const auto& [e, f] : pairs) list.push_back(json::array({edge_json(e), edge_json(f)}));
    j["edge_pairs"] = std::move(list);
  }
  return j;
}

json witness(const SimpleGraph& g, SearchMode mode, const std::optional<DecompositionWitness>& w,
             const SearchStats& stats) {
  json j = header("decompose");
  j["mode"] = to_string(mode);
  j["decomposable"] = w.has_value();
  if (w) {
    const auto pieces = signed_pieces(g, w->weights);
    j["type"] = to_string(w->type);
    j["weights"] = weights_json(w->weights);
    j["e_plus"] = edges_json(pieces.e_plus);
    j["e_minus"] = edges_json(pieces.e_minus);
  } else {
    j["type"] = nullptr;
    j["weights"] = nullptr;
    j["e_plus"] = nullptr;
    j["e_minus"] = nullptr;
  }
  j["search"] = json{{"seeds_tried", stats.seeds_tried},
                     {"seeds_skipped_by_memo", stats.seeds_skipped_by_memo},
                     {"nodes", stats.nodes},
                     {"four_cycle_prunes", stats.four_cycle_prunes},
                     {"memo_prunes", stats.memo_prunes}};
  return j;
}

json decompositions(const std::vector<Decomposition>& all, bool list) {
  json j = header("decompose");
  j["decomposable"] = !all.empty();
  j["count"] = all.size();
  if (list) {
    json arr = json::array();
    for (const auto& d : all) arr.push_back(decomposition_json(d));
    j["decompositions"] = std::move(arr);
  }
  return j;
}

json normality(const NormalityReport& r, NormalityMode mode) {
  json j = header("normal");
  j["mode"] = mode == NormalityMode::induced ? "induced" : "exhaustive";
  j["normal"] = r.normal;
  if (r.violation)
    j["violation"] = json{{"cycles", json::array({cycle_json(r.violation->first),
                                                  cycle_json(r.violation->second)})}};
  else
    j["violation"] = nullptr;
  return j;
}

json quadratic(const QuadraticReport& r, TripleMode mode) {
  json j = header("quadratic");
  j["triple_mode"] = mode == TripleMode::literal ? "literal" : "odd_chords";
  j["quadratic"] = r.quadratic;
  if (r.violation) {
    json v{{"kind", to_string(r.violation->kind)}};
    json cycles = json::array({cycle_json(r.violation->cycle)});
    if (r.violation->other) cycles.push_back(cycle_json(*r.violation->other));
    v["cycles"] = std::move(cycles);
    v["shared_vertex"] = r.violation->shared ? json(*r.violation->shared) : json(nullptr);
    j["violation"] = std::move(v);
  } else {
    j["violation"] = nullptr;
  }
  return j;
}

json theorem(const TheoremReport& r, bool include_decompositions) {
  json j = header("verify");
  j["vertices"] = r.vertices;
  j["edges"] = r.edges;
  j["bipartite"] = r.bipartite;
  j["has_four_cycle"] = r.has_four_cycle;
  j["dimension"] = r.dimension;
  j["normal"] = r.normal;
  j["quadratic"] = r.quadratic;
  j["quadratic_modes_agree"] = r.quadratic_modes_agree;
  j["decomposable"] = r.decomposable;
  j["decomposition_count"] = r.decompositions.size();
  j["accepted_vectors"] = json{{"total", r.accepted_vectors},
                               {"type1", r.type1_vectors},
                               {"type2", r.type2_vectors}};
  j["search"] = json{{"any", r.witness.has_value()},
                     {"type1", r.search_type1},
                     {"type2", r.search_type2}};
  if (r.witness)
    j["witness"] = json{{"type", to_string(r.witness->type)},
                        {"weights", weights_json(r.witness->weights)}};
  else
    j["witness"] = nullptr;
  if (r.parts) {
    j["multipartite"] = json{{"parts", r.parts->sizes},
                             {"formula", *r.formula},
                             {"delta", *r.formula_delta}};
  } else {
    j["multipartite"] = nullptr;
  }
  j["quadratic_patterns"] = counts_json(r.quadratic_patterns);
  j["normality_patterns"] = counts_json(r.normality_patterns);
  j["quadratic_converse_instances"] = r.quadratic_converse_instances;
  j["checks"] = counts_json(r.checks);
  json violations = json::array();
  for (const auto& v : r.violations) violations.push_back(json{{"claim", v.claim}, {"detail", v.detail}});
  j["violations"] = std::move(violations);
  if (include_decompositions) {
    json arr = json::array();
    for (const auto& d : r.decompositions) {
      json item = decomposition_json(d.decomposition);
      item["weights"] = weights_json(d.weights);
      item["type"] = to_string(d.type);
      item["first_piece"] = piece_json(d.first);
      item["second_piece"] = piece_json(d.second);
      arr.push_back(std::move(item));
    }
    j["decompositions"] = std::move(arr);
  }
  return j;
}

json corpus(const CorpusReport& r) {
  json j = header("corpus");
  j["graphs"] = r.graphs;
  j["failures"] = r.failures;
  j["decomposable"] = r.decomposable;
  j["decompositions"] = r.decompositions;
  j["search_disagreements"] = r.search_disagreements;
  j["violations"] = r.violations;
  j["violations_by_claim"] = counts_json(r.violations_by_claim);
  j["checks"] = counts_json(r.checks);
  j["quadratic_patterns"] = counts_json(r.quadratic_patterns);
  j["normality_patterns"] = counts_json(r.normality_patterns);
  j["quadratic_converse_instances"] = r.quadratic_converse_instances;
  j["quadratic_mode_disagreements"] = r.quadratic_mode_disagreements;
  json results = json::array();
  for (const auto& res : r.results) {
    json item{{"name", res.name}};
    if (res.report) {
      const TheoremReport& t = *res.report;
      item["vertices"] = t.vertices;
      item["edges"] = t.edges;
      item["decomposable"] = t.decomposable;
      item["search_decomposable"] = t.witness.has_value();
      item["decomposition_count"] = t.decompositions.size();
      item["normal"] = t.normal;
      item["quadratic"] = t.quadratic;
      if (t.parts)
        item["multipartite"] = json{{"parts", t.parts->sizes},
                                    {"formula", *t.formula},
                                    {"delta", *t.formula_delta}};
      json violations = json::array();
      for (const auto& v : t.violations)
        violations.push_back(json{{"claim", v.claim}, {"detail", v.detail}});
      item["violations"] = std::move(violations);
    } else {
      item["error"] = *res.error;
    }
    results.push_back(std::move(item));
  }
  j["results"] = std::move(results);
  return j;
}

CorpusSpec corpus_spec_from_json(const json& doc) {
  if (!doc.is_object()) throw InputError("corpus spec must be a JSON object");
  CorpusSpec spec;
  auto get_int = [](const json& obj, const char* key, int fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj[key].is_number_integer()) throw InputError(std::string("\"") + key + "\" must be an integer");
    return obj[key].get<int>();
  };
  if (doc.contains("random")) {
    const json& r = doc["random"];
    if (!r.is_object()) throw InputError("\"random\" must be an object");
    RandomFamily f;
    f.count = get_int(r, "count", f.count);
    f.min_vertices = get_int(r, "min_vertices", f.min_vertices);
    f.max_vertices = get_int(r, "max_vertices", f.max_vertices);
    if (r.contains("seed")) {
      if (!r["seed"].is_number_unsigned()) throw InputError("\"seed\" must be a non-negative integer");
      f.seed = r["seed"].get<std::uint64_t>();
    }
    if (r.contains("probabilities")) {
      if (!r["probabilities"].is_array()) throw InputError("\"probabilities\" must be an array");
      f.probabilities.clear();
      for (const auto& p : r["probabilities"]) {
        if (!p.is_number()) throw InputError("probabilities must be numbers");
        f.probabilities.push_back(p.get<double>());
      }
    }
    spec.random = f;
  }
  if (doc.contains("multipartite")) {
    const json& m = doc["multipartite"];
    if (!m.is_object()) throw InputError("\"multipartite\" must be an object");
    MultipartiteFamily f;
    f.min_vertices = get_int(m, "min_vertices", f.min_vertices);
    f.max_vertices = get_int(m, "max_vertices", f.max_vertices);
    f.min_parts = get_int(m, "min_parts", f.min_parts);
    f.max_parts = get_int(m, "max_parts", f.max_parts);
    spec.multipartite = f;
  }
  return spec;
}

}  // namespace edgepoly::report
