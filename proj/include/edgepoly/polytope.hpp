#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "edgepoly/graph.hpp"

namespace edgepoly {

using LatticePoint = std::vector<int>;

// Indicator vector of the two endpoints of e in Z^d.
LatticePoint rho(const Edge& e, int d);

// e and f are vertex-disjoint and one of the two other perfect matchings on
// their four endpoints lies in the graph, i.e. the four endpoints induce a
// 4-cycle. Throws InputError unless e != f are both edges of g.
bool cycle_compatible(const SimpleGraph& g, const Edge& e, const Edge& f);

// conv(rho(e), rho(f)) is an edge of the edge polytope.
bool is_polytope_edge(const SimpleGraph& g, const Edge& e, const Edge& f);

std::vector<std::pair<Edge, Edge>> polytope_edges(const SimpleGraph& g);

// Affine dimension of {rho(e)} by exact integer rank. Throws on an empty
// edge set.
int polytope_dimension(const SimpleGraph& g);

// Rank of an integer matrix via fraction-free (Bareiss) elimination.
int integer_rank(std::vector<std::vector<std::int64_t>> rows);

// Precomputed cycle-compatibility of every edge pair, indexed by the
// graph's edge indices. Immutable once built.
class CompatibilityTable {
 public:
  explicit CompatibilityTable(const SimpleGraph& g);

  bool compatible(std::size_t e, std::size_t f) const noexcept { return bits_[e * m_ + f] != 0; }
  std::size_t edge_count() const noexcept { return m_; }
  std::size_t compatible_pair_count() const noexcept { return pairs_; }

 private:
  std::size_t m_;
  std::size_t pairs_ = 0;
  std::vector<std::uint8_t> bits_;
};

}  // namespace edgepoly
