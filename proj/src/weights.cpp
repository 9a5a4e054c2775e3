#include <algorithm>
#include <sstream>

#include "edgepoly/decompose.hpp"

namespace edgepoly {

WeightVector::WeightVector(std::vector<int> weights) {
  w_.reserve(weights.size());
  for (int x : weights) {
    if (x < -1 || x > 1) throw InputError("weights must lie in {-1, 0, 1}");
    w_.push_back(static_cast<std::int8_t>(x));
  }
}

void WeightVector::set(Vertex v, int value) {
  if (value < -1 || value > 1) throw InputError("weights must lie in {-1, 0, 1}");
  w_.at(static_cast<std::size_t>(v - 1)) = static_cast<std::int8_t>(value);
}

bool WeightVector::has_zero() const noexcept {
  return std::find(w_.begin(), w_.end(), 0) != w_.end();
}

bool WeightVector::is_normalized() const noexcept {
  for (auto x : w_)
    if (x != 0) return x == 1;
  return false;
}

WeightVector WeightVector::negated() const {
  WeightVector out = *this;
  for (auto& x : out.w_) x = static_cast<std::int8_t>(-x);
  return out;
}

std::string WeightVector::to_string() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < w_.size(); ++i) out << (i ? "," : "") << static_cast<int>(w_[i]);
  out << ")";
  return out.str();
}

int edge_sign(const WeightVector& w, const Edge& e) {
  const int sum = w.at(e.u) + w.at(e.v);
  return (sum > 0) - (sum < 0);
}

SignAssignment sign_assignment(const SimpleGraph& g, const WeightVector& w) {
  if (static_cast<int>(w.size()) != g.vertex_count())
    throw InputError("weight vector has " + std::to_string(w.size()) + " entries, graph has " +
                     std::to_string(g.vertex_count()) + " vertices");
  SignAssignment s;
  s.signs.reserve(g.edge_count());
  for (const auto& e : g.edges()) {
    const int sign = edge_sign(w, e);
    s.signs.push_back(static_cast<std::int8_t>(sign));
    (sign > 0 ? s.positive : sign < 0 ? s.negative : s.zero) += 1;
  }
  return s;
}

std::string to_string(RejectReason r) {
  switch (r) {
    case RejectReason::no_positive_edge:
      return "no positive edge";
    case RejectReason::no_negative_edge:
      return "no negative edge";
    case RejectReason::incompatible_pair:
      return "positive and negative edge not cycle-compatible";
  }
  return "unknown";
}

WeightValidation validate_weights(const SimpleGraph& g, const WeightVector& w) {
  SignAssignment s = sign_assignment(g, w);
  WeightValidation result;
  if (s.positive == 0) {
    result.rejection = WeightRejection{RejectReason::no_positive_edge, std::nullopt};
    return result;
  }
  if (s.negative == 0) {
    result.rejection = WeightRejection{RejectReason::no_negative_edge, std::nullopt};
    return result;
  }
  const auto edges = g.edges();
  for (std::size_t p = 0; p < edges.size(); ++p) {
    if (s.signs[p] <= 0) continue;
    for (std::size_t n = 0; n < edges.size(); ++n) {
      if (s.signs[n] >= 0) continue;
      if (!cycle_compatible(g, edges[p], edges[n])) {
        result.rejection =
            WeightRejection{RejectReason::incompatible_pair, std::make_pair(edges[p], edges[n])};
        return result;
      }
    }
  }
  result.signs = std::move(s);
  return result;
}

Decomposition::Decomposition(std::vector<Edge> a, std::vector<Edge> b)
    : first_(std::move(a)), second_(std::move(b)) {
  std::sort(first_.begin(), first_.end());
  std::sort(second_.begin(), second_.end());
  if (second_ < first_) std::swap(first_, second_);
}

SignedPieces signed_pieces(const SimpleGraph& g, const WeightVector& w) {
  const SignAssignment s = sign_assignment(g, w);
  SignedPieces pieces;
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (s.signs[i] >= 0) pieces.e_plus.push_back(edges[i]);
    if (s.signs[i] <= 0) pieces.e_minus.push_back(edges[i]);
  }
  return pieces;
}

Decomposition canonical_decomposition(const SimpleGraph& g, const WeightVector& w) {
  const auto v = validate_weights(g, w);
  if (!v.accepted())
    throw InputError("weights " + w.to_string() + " rejected: " + to_string(v.rejection->reason));
  auto pieces = signed_pieces(g, w);
  return Decomposition(std::move(pieces.e_plus), std::move(pieces.e_minus));
}

std::string to_string(DecompositionType t) {
  return t == DecompositionType::type1 ? "I" : "II";
}

std::string to_string(SearchMode m) {
  switch (m) {
    case SearchMode::type1:
      return "type1";
    case SearchMode::type2:
      return "type2";
    case SearchMode::any:
      return "any";
  }
  return "any";
}

FormulaCount count_multipartite_decompositions(const PartSpec& parts) {
  const int d = parts.vertex_count();
  if (d > 62) throw InputError("formula evaluation supports at most 62 vertices");
  std::int64_t value = std::int64_t{1} << (d - 1);
  for (int s : parts.sizes) value -= (std::int64_t{1} << s) - 1;
  value -= 1;
  return {value, value < 0};
}

WeightVector lift_type2_to_type1(const SimpleGraph& g, const WeightVector& w) {
  const auto sides = bipartition(g);
  if (!sides) throw InputError("lift requires a bipartite graph");
  if (!validate_weights(g, w).accepted()) throw InputError("lift requires accepted weights");
  if (!w.has_zero()) throw InputError("lift requires a type II weight vector");

  std::vector<int> side(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
  for (Vertex v : sides->right) side[v] = 1;
  // Orient so that +1 charges sit in L.
  int plus_side = -1;
  for (Vertex v = 1; v <= g.vertex_count(); ++v) {
    if (w.at(v) != 1) continue;
    if (plus_side >= 0 && plus_side != side[v])
      throw InputError("+1 charges on both sides of the bipartition");
    plus_side = side[v];
  }
  const int left = plus_side < 0 ? 0 : plus_side;
  for (Vertex v = 1; v <= g.vertex_count(); ++v)
    if (w.at(v) == -1 && side[v] == left)
      throw InputError("-1 charge on the +1 side of the bipartition");

  WeightVector lifted = w;
  for (Vertex v = 1; v <= g.vertex_count(); ++v)
    if (w.at(v) == 0) lifted.set(v, side[v] == left ? -1 : 1);
  return lifted;
}

}  // namespace edgepoly
