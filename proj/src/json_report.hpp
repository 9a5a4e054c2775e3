#pragma once

#include <json.hpp>

#include "edgepoly/criteria.hpp"
#include "edgepoly/decompose.hpp"
#include "edgepoly/verify.hpp"

namespace edgepoly::report {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

json edge_json(const Edge& e);
json edges_json(std::span<const Edge> edges);
json cycle_json(const Cycle& c);

json info(const SimpleGraph& g);
json polytope(const SimpleGraph& g, bool list_edges);
json witness(const SimpleGraph& g, SearchMode mode, const std::optional<DecompositionWitness>& w,
             const SearchStats& stats);
json decompositions(const std::vector<Decomposition>& all, bool list);
json normality(const NormalityReport& r, NormalityMode mode);
json quadratic(const QuadraticReport& r, TripleMode mode);
json theorem(const TheoremReport& r, bool include_decompositions);
json corpus(const CorpusReport& r);

CorpusSpec corpus_spec_from_json(const json& doc);

}  // namespace edgepoly::report
