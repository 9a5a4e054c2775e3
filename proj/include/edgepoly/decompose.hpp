#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "edgepoly/graph.hpp"
#include "edgepoly/polytope.hpp"

namespace edgepoly {

// Vertex charges in {-1, 0, +1}; the hyperplane sum_i w_i x_i = 0.
class WeightVector {
 public:
  WeightVector() = default;
  // Throws InputError on entries outside {-1, 0, 1}.
  explicit WeightVector(std::vector<int> weights);

  std::size_t size() const noexcept { return w_.size(); }
  int at(Vertex v) const { return w_.at(static_cast<std::size_t>(v - 1)); }
  void set(Vertex v, int value);
  std::span<const std::int8_t> values() const noexcept { return w_; }
  std::vector<int> to_vector() const { return {w_.begin(), w_.end()}; }

  bool has_zero() const noexcept;
  // First nonzero entry is +1.
  bool is_normalized() const noexcept;
  WeightVector negated() const;
  std::string to_string() const;

  friend auto operator<=>(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<std::int8_t> w_;
};

// sign(w_u + w_v).
int edge_sign(const WeightVector& w, const Edge& e);

struct SignAssignment {
  std::vector<std::int8_t> signs;  // indexed by edge index of the graph
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
};

SignAssignment sign_assignment(const SimpleGraph& g, const WeightVector& w);

enum class RejectReason { no_positive_edge, no_negative_edge, incompatible_pair };

std::string to_string(RejectReason r);

struct WeightRejection {
  RejectReason reason;
  // (positive edge, negative edge) for incompatible_pair.
  std::optional<std::pair<Edge, Edge>> witness;
};

struct WeightValidation {
  std::optional<SignAssignment> signs;  // present iff accepted
  std::optional<WeightRejection> rejection;

  bool accepted() const noexcept { return signs.has_value(); }
};

// Accepts iff there is a positive edge, a negative edge, and every
// (positive, negative) pair is cycle-compatible. Throws InputError when the
// length does not match d.
WeightValidation validate_weights(const SimpleGraph& g, const WeightVector& w);

// Unordered pair of edge sets; the lexicographically smaller set is first.
class Decomposition {
 public:
  Decomposition(std::vector<Edge> a, std::vector<Edge> b);

  std::span<const Edge> first() const noexcept { return first_; }
  std::span<const Edge> second() const noexcept { return second_; }

  friend auto operator<=>(const Decomposition&, const Decomposition&) = default;

 private:
  std::vector<Edge> first_;
  std::vector<Edge> second_;
};

// E_+ = {sign >= 0}, E_- = {sign <= 0}. Throws InputError for rejected
// weights.
Decomposition canonical_decomposition(const SimpleGraph& g, const WeightVector& w);

// Signed pieces as produced by w (not reordered).
struct SignedPieces {
  std::vector<Edge> e_plus;
  std::vector<Edge> e_minus;
};
SignedPieces signed_pieces(const SimpleGraph& g, const WeightVector& w);

enum class DecompositionType { type1, type2 };
enum class SearchMode { type1, type2, any };

std::string to_string(DecompositionType t);
std::string to_string(SearchMode m);

struct DecompositionWitness {
  WeightVector weights;
  Decomposition decomposition;
  DecompositionType type;
};

struct SearchStats {
  std::uint64_t seeds_tried = 0;
  std::uint64_t seeds_skipped_by_memo = 0;
  std::uint64_t nodes = 0;
  std::uint64_t four_cycle_prunes = 0;
  std::uint64_t memo_prunes = 0;
};

// Seeded frontier search with a failed-seed memo, run separately for
// charges in {-1,+1} (type I) and charges with zeros (type II). Throws
// InputError on disconnected input.
std::optional<DecompositionWitness> is_decomposable(const SimpleGraph& g,
                                                    SearchMode mode = SearchMode::any,
                                                    SearchStats* stats = nullptr);

// Calls visit for every accepted normalized weight vector (first nonzero
// entry +1) in base-3 counting order. Returning false stops. Throws
// CapExceeded when d > limits.max_enum_vertices, InputError on
// disconnected input.
using AcceptedVisitor = std::function<bool(const WeightVector&, const SignAssignment&)>;
void for_each_accepted_weight_vector(const SimpleGraph& g, const Limits& limits,
                                     const AcceptedVisitor& visit);

// All distinct decompositions, sorted. Brute force over normalized weights.
std::vector<Decomposition> enumerate_decompositions(const SimpleGraph& g,
                                                    const Limits& limits = {});

struct FormulaCount {
  std::int64_t value = 0;
  bool negative = false;  // the raw formula went below zero
};

// 2^(d-1) - sum_i (2^|V_i| - 1) - 1, returned verbatim.
FormulaCount count_multipartite_decompositions(const PartSpec& parts);

// Turns an accepted type II vector on a connected bipartite graph into a
// type I vector with the same decomposition: orient the bipartition so the
// +1 charges sit in L, then zeros in R become +1 and zeros in L become -1.
WeightVector lift_type2_to_type1(const SimpleGraph& g, const WeightVector& w);

}  // namespace edgepoly
