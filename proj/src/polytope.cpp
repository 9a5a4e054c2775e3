#include "edgepoly/polytope.hpp"

#include <cstdlib>
#include <numeric>

namespace edgepoly {
namespace {

bool compatible_unchecked(const SimpleGraph& g, const Edge& e, const Edge& f) {
  if (e.shares_vertex(f)) return false;
  const auto [i, j] = e;
  const auto [k, l] = f;
  return (g.adjacent(j, k) && g.adjacent(l, i)) || (g.adjacent(j, l) && g.adjacent(k, i));
}

void require_edge(const SimpleGraph& g, const Edge& e) {
  if (!g.contains(e)) throw InputError("edge " + to_string(e) + " is not in the graph");
}

}  // namespace

LatticePoint rho(const Edge& e, int d) {
  if (e.u < 1 || e.v < 1 || e.u > d || e.v > d || e.u == e.v)
    throw InputError("edge " + to_string(e) + " is not an edge on 1.." + std::to_string(d));
  LatticePoint p(static_cast<std::size_t>(d), 0);
  p[e.u - 1] = 1;
  p[e.v - 1] = 1;
  return p;
}

bool cycle_compatible(const SimpleGraph& g, const Edge& e, const Edge& f) {
  require_edge(g, e);
  require_edge(g, f);
  if (e == f) throw InputError("cycle compatibility needs two distinct edges");
  return compatible_unchecked(g, e, f);
}

bool is_polytope_edge(const SimpleGraph& g, const Edge& e, const Edge& f) {
  return !cycle_compatible(g, e, f);
}

std::vector<std::pair<Edge, Edge>> polytope_edges(const SimpleGraph& g) {
  std::vector<std::pair<Edge, Edge>> out;
  const auto edges = g.edges();
  for (std::size_t a = 0; a < edges.size(); ++a)
    for (std::size_t b = a + 1; b < edges.size(); ++b)
      if (!compatible_unchecked(g, edges[a], edges[b])) out.emplace_back(edges[a], edges[b]);
  return out;
}

int integer_rank(std::vector<std::vector<std::int64_t>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  std::int64_t prev_pivot = 1;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const std::int64_t p = rows[rank][col];
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      for (std::size_t c = col + 1; c < cols; ++c) {
        // Exact division: Bareiss keeps every entry a minor of the input.
        const __int128 num = static_cast<__int128>(p) * rows[r][c] -
                             static_cast<__int128>(rows[r][col]) * rows[rank][c];
        rows[r][c] = static_cast<std::int64_t>(num / prev_pivot);
      }
      rows[r][col] = 0;
    }
    prev_pivot = p;
    ++rank;
  }
  return static_cast<int>(rank);
}

int polytope_dimension(const SimpleGraph& g) {
  const auto edges = g.edges();
  if (edges.empty()) throw InputError("edge polytope of a graph without edges is empty");
  if (g.vertex_count() > 60) throw InputError("exact dimension supports at most 60 vertices");
  const LatticePoint base = rho(edges.front(), g.vertex_count());
  std::vector<std::vector<std::int64_t>> rows;
  rows.reserve(edges.size() - 1);
  for (std::size_t i = 1; i < edges.size(); ++i) {
    const LatticePoint p = rho(edges[i], g.vertex_count());
    std::vector<std::int64_t> row(p.size());
    for (std::size_t c = 0; c < p.size(); ++c) row[c] = p[c] - base[c];
    rows.push_back(std::move(row));
  }
  return integer_rank(std::move(rows));
}

CompatibilityTable::CompatibilityTable(const SimpleGraph& g)
    : m_(g.edge_count()), bits_(m_ * m_, 0) {
  const auto edges = g.edges();
  for (std::size_t a = 0; a < m_; ++a) {
    for (std::size_t b = a + 1; b < m_; ++b) {
      if (compatible_unchecked(g, edges[a], edges[b])) {
        bits_[a * m_ + b] = bits_[b * m_ + a] = 1;
        ++pairs_;
      }
    }
  }
}

}  // namespace edgepoly
