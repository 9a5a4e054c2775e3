#pragma once

// Brute-force reference implementations used only by the tests. They share
// no code with the library beyond SimpleGraph and Edge.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "edgepoly/graph.hpp"

namespace oracle {

using edgepoly::Edge;
using edgepoly::SimpleGraph;
using VertexSeq = std::vector<int>;

// Rotate so the smallest vertex leads, then pick the direction with the
// smaller second entry.
inline VertexSeq normalize_cycle(VertexSeq c) {
  std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
  if (c.size() > 2 && c[1] > c.back()) std::reverse(c.begin() + 1, c.end());
  return c;
}

inline bool closes_cycle(const SimpleGraph& g, const VertexSeq& seq) {
  for (std::size_t i = 0; i < seq.size(); ++i)
    if (!g.adjacent(seq[i], seq[(i + 1) % seq.size()])) return false;
  return true;
}

// Every simple cycle, by trying all orderings of every vertex subset.
inline std::set<VertexSeq> all_cycles(const SimpleGraph& g) {
  std::set<VertexSeq> out;
  const int d = g.vertex_count();
  for (std::uint32_t subset = 0; subset < (1u << d); ++subset) {
    if (__builtin_popcount(subset) < 3) continue;
    VertexSeq seq;
    for (int v = 1; v <= d; ++v)
      if (subset >> (v - 1) & 1) seq.push_back(v);
    // Fix the first vertex and permute the rest.
    do {
      if (closes_cycle(g, seq)) out.insert(normalize_cycle(seq));
    } while (std::next_permutation(seq.begin() + 1, seq.end()));
  }
  return out;
}

inline std::uint64_t binomial(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

// Number of simple cycles of K_n: sum over j of C(n,j) (j-1)!/2.
inline std::uint64_t complete_graph_cycles(int n) {
  std::uint64_t total = 0;
  for (int j = 3; j <= n; ++j) {
    std::uint64_t f = 1;
    for (int i = 2; i < j; ++i) f *= static_cast<std::uint64_t>(i);
    total += binomial(n, j) * f / 2;
  }
  return total;
}

// e and f span four vertices whose induced subgraph has a Hamiltonian cycle.
inline bool compatible(const SimpleGraph& g, const Edge& e, const Edge& f) {
  VertexSeq vs{e.u, e.v, f.u, f.v};
  std::sort(vs.begin(), vs.end());
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) return false;
  do {
    if (closes_cycle(g, vs)) return true;
  } while (std::next_permutation(vs.begin() + 1, vs.end()));
  return false;
}

// Rank over GF(p) for a large prime; equals the rational rank for the small
// 0/1 matrices used here.
inline int rank_mod_p(std::vector<std::vector<std::int64_t>> rows) {
  constexpr std::int64_t p = 1'000'000'007;
  auto pow_mod = [](std::int64_t b, std::int64_t e) {
    std::int64_t r = 1;
    b %= p;
    while (e > 0) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  for (auto& r : rows)
    for (auto& x : r) x = ((x % p) + p) % p;
  int rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const std::int64_t inv = pow_mod(rows[rank][c], p - 2);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || rows[r][c] == 0) continue;
      const std::int64_t factor = rows[r][c] * inv % p;
      for (std::size_t k = c; k < cols; ++k) rows[r][k] = ((rows[r][k] - factor * rows[rank][k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

// Affine dimension of conv{e_u + e_v} over the given edges.
inline int dimension(int d, const std::vector<Edge>& edges) {
  std::vector<std::vector<std::int64_t>> rows;
  for (std::size_t i = 1; i < edges.size(); ++i) {
    std::vector<std::int64_t> r(d, 0);
    r[edges[i].u - 1] += 1;
    r[edges[i].v - 1] += 1;
    r[edges[0].u - 1] -= 1;
    r[edges[0].v - 1] -= 1;
    rows.push_back(r);
  }
  return rows.empty() ? 0 : rank_mod_p(rows);
}

inline int sign(int x) { return (x > 0) - (x < 0); }

// Definition-level acceptance test of a weight vector.
inline bool accepted(const SimpleGraph& g, const std::vector<int>& w) {
  std::vector<Edge> pos, neg;
  for (const Edge& e : g.edges()) {
    const int s = sign(w[e.u - 1] + w[e.v - 1]);
    if (s > 0) pos.push_back(e);
    if (s < 0) neg.push_back(e);
  }
  if (pos.empty() || neg.empty()) return false;
  for (const Edge& e : pos)
    for (const Edge& f : neg)
      if (!compatible(g, e, f)) return false;
  return true;
}

using EdgeSet = std::vector<Edge>;
using Split = std::pair<EdgeSet, EdgeSet>;

inline Split split_of(const SimpleGraph& g, const std::vector<int>& w) {
  EdgeSet plus, minus;
  for (const Edge& e : g.edges()) {
    const int s = sign(w[e.u - 1] + w[e.v - 1]);
    if (s >= 0) plus.push_back(e);
    if (s <= 0) minus.push_back(e);
  }
  if (minus < plus) std::swap(plus, minus);
  return {plus, minus};
}

// All decompositions from all 3^d weight vectors, no normalization.
inline std::set<Split> decompositions(const SimpleGraph& g) {
  const int d = g.vertex_count();
  std::set<Split> out;
  std::vector<int> w(d, -1);
  while (true) {
    if (accepted(g, w)) out.insert(split_of(g, w));
    int i = 0;
    while (i < d && w[i] == 1) w[i++] = -1;
    if (i == d) break;
    ++w[i];
  }
  return out;
}

inline bool connected_spanning(int d, const EdgeSet& edges) {
  std::vector<int> parent(d + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = d;
  for (const Edge& e : edges) {
    const int a = find(e.u), b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

inline int mask_of(const VertexSeq& c) {
  int m = 0;
  for (int v : c) m |= 1 << (v - 1);
  return m;
}

inline int edges_between(const SimpleGraph& g, int a, int b) {
  int n = 0;
  for (const Edge& e : g.edges()) {
    const bool ua = a >> (e.u - 1) & 1, va = a >> (e.v - 1) & 1;
    const bool ub = b >> (e.u - 1) & 1, vb = b >> (e.v - 1) & 1;
    if ((ua && vb) || (ub && va)) ++n;
  }
  return n;
}

// Odd cycle condition over every pair of simple odd cycles.
inline bool normal(const SimpleGraph& g) {
  std::vector<int> odd;
  for (const auto& c : all_cycles(g))
    if (c.size() % 2 == 1) odd.push_back(mask_of(c));
  for (std::size_t i = 0; i < odd.size(); ++i)
    for (std::size_t j = i + 1; j < odd.size(); ++j)
      if ((odd[i] & odd[j]) == 0 && edges_between(g, odd[i], odd[j]) == 0) return false;
  return true;
}

// Both conditions of the combinatorial quadratic criterion, literally.
inline bool quadratic(const SimpleGraph& g) {
  const auto cycles = all_cycles(g);
  for (const auto& c : cycles) {
    const int n = static_cast<int>(c.size());
    if (n % 2 == 1 || n < 6) continue;
    std::vector<std::pair<int, int>> chords;  // positions, i < j
    bool even_chord = false;
    for (int i = 0; i < n; ++i)
      for (int j = i + 2; j < n; ++j) {
        if (i == 0 && j == n - 1) continue;
        if (!g.adjacent(c[i], c[j])) continue;
        chords.emplace_back(i, j);
        if ((j - i) % 2 == 1) even_chord = true;
      }
    if (even_chord) continue;
    bool crossing = false;
    if (chords.size() >= 3)
      for (const auto& [a, b] : chords)
        for (const auto& [x, y] : chords)
          if (a < x && x < b && b < y) crossing = true;
    if (!crossing) return false;
  }
  std::vector<int> odd;
  for (const auto& c : cycles)
    if (c.size() % 2 == 1) odd.push_back(mask_of(c));
  for (std::size_t i = 0; i < odd.size(); ++i)
    for (std::size_t j = i + 1; j < odd.size(); ++j) {
      const int shared = odd[i] & odd[j];
      const int k = __builtin_popcount(shared);
      if (k >= 2) continue;
      if (k == 1 && edges_between(g, odd[i] & ~shared, odd[j] & ~shared) < 1) return false;
      if (k == 0 && edges_between(g, odd[i], odd[j]) < 2) return false;
    }
  return true;
}

}  // namespace oracle
