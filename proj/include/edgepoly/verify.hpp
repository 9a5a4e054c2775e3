#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "edgepoly/criteria.hpp"
#include "edgepoly/decompose.hpp"
#include "edgepoly/graph.hpp"

namespace edgepoly {

// Claim identifiers reported by verify_theorems.
namespace claims {
inline constexpr const char* kSearchMatchesEnumeration = "search_matches_enumeration";
inline constexpr const char* kWitnessValid = "witness_valid";
inline constexpr const char* kFourCycle = "decomposable_has_four_cycle";
inline constexpr const char* kPiecesConnected = "pieces_connected_spanning";
inline constexpr const char* kPiecesDimension = "pieces_equal_dimension";
inline constexpr const char* kPiecesCover = "pieces_cover_edges";
inline constexpr const char* kOppositeEdges = "opposite_edges_zero_four_cycle";
inline constexpr const char* kSignFlip = "sign_flip_symmetry";
inline constexpr const char* kType2Structure = "type2_charge_structure";
inline constexpr const char* kType1Injective = "type1_injective";
inline constexpr const char* kLonelyPairParity = "lonely_pair_parity";
inline constexpr const char* kBipartiteLift = "bipartite_lift";
inline constexpr const char* kNormalityEquivalence = "normality_equivalence";
inline constexpr const char* kNormalityModes = "normality_modes_agree";
inline constexpr const char* kOddPairSingleSign = "odd_pair_single_sign";
inline constexpr const char* kQuadraticForward = "quadratic_forward";
inline constexpr const char* kMultipartiteFormula = "multipartite_formula";
}  // namespace claims

struct ClaimViolation {
  std::string claim;
  std::string detail;
  friend bool operator==(const ClaimViolation&, const ClaimViolation&) = default;
};

struct PieceProperties {
  bool connected = false;
  int dimension = -1;
  std::optional<bool> normal;  // absent when the piece is disconnected
  std::optional<bool> quadratic;
};

struct DecompositionRecord {
  Decomposition decomposition;
  WeightVector weights;  // first accepted normalized vector producing it
  DecompositionType type;
  PieceProperties first;
  PieceProperties second;
};

struct TheoremReport {
  int vertices = 0;
  std::size_t edges = 0;
  bool bipartite = false;
  bool has_four_cycle = false;

  bool decomposable = false;  // enumeration
  std::optional<DecompositionWitness> witness;  // search, mode any
  bool search_type1 = false;
  bool search_type2 = false;

  std::size_t accepted_vectors = 0;  // normalized
  std::size_t type1_vectors = 0;
  std::size_t type2_vectors = 0;
  std::vector<DecompositionRecord> decompositions;

  std::optional<PartSpec> parts;
  std::optional<std::int64_t> formula;
  std::optional<std::int64_t> formula_delta;  // enumeration count - formula

  int dimension = -1;
  bool normal = false;
  bool quadratic = false;
  bool quadratic_modes_agree = true;

  // "yes"/"no" of G, then of the two pieces (sorted, "no" first).
  std::map<std::string, std::size_t> quadratic_patterns;
  std::map<std::string, std::size_t> normality_patterns;
  std::size_t quadratic_converse_instances = 0;

  std::map<std::string, std::size_t> checks;  // claim -> times evaluated
  std::vector<ClaimViolation> violations;

  bool ok() const noexcept { return violations.empty(); }
};

// Requires a connected graph within both caps.
TheoremReport verify_theorems(const SimpleGraph& g, const Limits& limits = {});

struct RandomFamily {
  int count = 500;
  int min_vertices = 4;
  int max_vertices = 9;
  std::vector<double> probabilities{0.3, 0.5, 0.7};
  std::uint64_t seed = 7;
};

struct MultipartiteFamily {
  int min_vertices = 2;
  int max_vertices = 8;
  int min_parts = 2;
  int max_parts = 0;  // 0: no upper bound
};

struct CorpusSpec {
  std::optional<RandomFamily> random;
  std::optional<MultipartiteFamily> multipartite;
};

struct CorpusEntry {
  std::string name;
  SimpleGraph graph;
};

// Deterministic for a fixed spec. Random graph i uses probability
// probabilities[i % size] and a seed derived from (seed, i).
std::vector<CorpusEntry> build_corpus(const CorpusSpec& spec);

// Multipartite part sizes, non-increasing, in lexicographic order.
std::vector<PartSpec> multipartite_shapes(const MultipartiteFamily& family);

struct CorpusResult {
  std::string name;
  std::optional<TheoremReport> report;
  std::optional<std::string> error;  // cap or input failure for this graph
};

struct CorpusReport {
  std::vector<CorpusResult> results;
  std::size_t graphs = 0;
  std::size_t failures = 0;
  std::size_t decomposable = 0;
  std::size_t decompositions = 0;
  std::size_t search_disagreements = 0;
  std::size_t violations = 0;
  std::map<std::string, std::size_t> checks;
  std::map<std::string, std::size_t> violations_by_claim;
  std::map<std::string, std::size_t> quadratic_patterns;
  std::map<std::string, std::size_t> normality_patterns;
  std::size_t quadratic_converse_instances = 0;
  std::size_t quadratic_mode_disagreements = 0;
};

// Per-graph work runs on up to `threads` workers (0: hardware
// concurrency); results stay in corpus order.
CorpusReport corpus_verify(const CorpusSpec& spec, const Limits& limits = {},
                           unsigned threads = 0);

}  // namespace edgepoly
