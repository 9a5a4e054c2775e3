#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "edgepoly/errors.hpp"

namespace edgepoly {

// Vertices are labelled 1..d everywhere in the public API.
using Vertex = int;
using VertexMask = std::uint64_t;

struct Edge {
  Vertex u = 0;  // u < v for every edge produced by make_edge
  Vertex v = 0;

  bool touches(Vertex x) const noexcept { return u == x || v == x; }
  bool shares_vertex(const Edge& o) const noexcept {
    return touches(o.u) || touches(o.v);
  }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

Edge make_edge(Vertex a, Vertex b);
std::string to_string(const Edge& e);

class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int d);
  // Throws InputError on loops, duplicates or endpoints outside 1..d.
  SimpleGraph(int d, std::vector<Edge> edges);

  int vertex_count() const noexcept { return d_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  // Sorted lexicographically; the position of an edge here is its index.
  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t index) const { return edges_.at(index); }

  bool adjacent(Vertex a, Vertex b) const noexcept;
  bool contains(const Edge& e) const noexcept { return adjacent(e.u, e.v); }
  std::optional<std::size_t> edge_index(Vertex a, Vertex b) const noexcept;
  std::optional<std::size_t> edge_index(const Edge& e) const noexcept {
    return edge_index(e.u, e.v);
  }
  // Ascending.
  std::span<const Vertex> neighbors(Vertex v) const { return nbrs_.at(v - 1); }
  std::size_t degree(Vertex v) const { return nbrs_.at(v - 1).size(); }
  // Only meaningful for d <= 64; bit (u-1) set for every neighbour u.
  VertexMask neighbor_mask(Vertex v) const { return masks_.at(v - 1); }

  // Spanning subgraph on the same vertex set with the given edge subset.
  SimpleGraph spanning_subgraph(std::span<const Edge> edges) const;

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.d_ == b.d_ && a.edges_ == b.edges_;
  }

 private:
  void build_indices();

  int d_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> nbrs_;
  std::vector<VertexMask> masks_;
  std::vector<int> index_;  // d*d table, -1 when absent
};

// ---------------------------------------------------------------------------
// Parsing and serialization

enum class GraphFormat { edge_list, structured, automatic };

// edge_list: one "u v" per line, '#' comments, optional "d=<n>" header.
// structured: JSON object {"d": n, "edges": [[u, v], ...]}.
// automatic picks structured when the first non-blank character is '{'.
SimpleGraph parse_graph(std::string_view text,
                        GraphFormat format = GraphFormat::automatic);
std::string to_edge_list(const SimpleGraph& g);

// ---------------------------------------------------------------------------
// Generators

struct PartSpec {
  std::vector<int> sizes;

  explicit PartSpec(std::vector<int> part_sizes);
  int vertex_count() const noexcept;
  std::size_t part_count() const noexcept { return sizes.size(); }
  friend bool operator==(const PartSpec&, const PartSpec&) = default;
};

enum class GeneratorKind { complete, cycle, path, complete_multipartite, random_connected };

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::complete;
  int d = 0;
  std::vector<int> parts;    // complete_multipartite
  double probability = 0.5;  // random_connected
  std::uint64_t seed = 0;    // random_connected
};

SimpleGraph complete_graph(int d);
SimpleGraph cycle_graph(int d);
SimpleGraph path_graph(int d);
SimpleGraph complete_multipartite_graph(const PartSpec& parts);
// Erdos-Renyi G(d, p) resampled until connected. Output depends only on
// (d, p, seed).
SimpleGraph random_connected_graph(int d, double p, std::uint64_t seed);
SimpleGraph generate_graph(const GeneratorSpec& spec);
// "complete:4", "cycle:6", "path:3", "multipartite:2,2,3", "random:9:0.5:7".
GeneratorSpec parse_generator_spec(std::string_view text);

// Part sizes (ordered by smallest vertex of each part) when g is complete
// multipartite with at least two parts.
std::optional<PartSpec> multipartite_parts(const SimpleGraph& g);

// ---------------------------------------------------------------------------
// Structure

bool is_connected(const SimpleGraph& g);

struct Bipartition {
  std::vector<Vertex> left;  // contains vertex 1
  std::vector<Vertex> right;
};

// Throws InputError on disconnected input; nullopt when an odd cycle exists.
std::optional<Bipartition> bipartition(const SimpleGraph& g);

// ---------------------------------------------------------------------------
// Cycles

class Cycle {
 public:
  // Rotates so the smallest vertex comes first and reflects so the second
  // vertex is smaller than the last. Requires >= 3 distinct vertices.
  static Cycle canonical(std::vector<Vertex> sequence);

  std::span<const Vertex> vertices() const noexcept { return seq_; }
  std::size_t length() const noexcept { return seq_.size(); }
  bool is_odd() const noexcept { return seq_.size() % 2 == 1; }
  bool is_even() const noexcept { return !is_odd(); }
  // Position of v in the canonical sequence, nullopt when absent.
  std::optional<std::size_t> position(Vertex v) const noexcept;
  bool contains(Vertex v) const noexcept { return position(v).has_value(); }
  VertexMask vertex_mask() const noexcept;
  // Cycle edges in sequence order: (c1,c2), (c2,c3), ..., (ck,c1).
  std::vector<Edge> edges() const;
  std::string to_string() const;

  friend auto operator<=>(const Cycle&, const Cycle&) = default;

 private:
  explicit Cycle(std::vector<Vertex> seq) : seq_(std::move(seq)) {}
  std::vector<Vertex> seq_;
};

bool is_cycle_of(const SimpleGraph& g, const Cycle& c);

enum class CycleParity { any, odd, even };

// Visitor receives each simple cycle once in canonical form, in
// lexicographic order. Returning false stops the walk.
using CycleVisitor = std::function<bool(std::span<const Vertex>)>;

// Throws CapExceeded when d > limits.max_cycle_vertices.
void for_each_simple_cycle(const SimpleGraph& g, const Limits& limits,
                           const CycleVisitor& visit);
void for_each_chordless_cycle(const SimpleGraph& g, const Limits& limits,
                              const CycleVisitor& visit);

std::vector<Cycle> enumerate_simple_cycles(const SimpleGraph& g, int min_len = 3,
                                           CycleParity parity = CycleParity::any,
                                           const Limits& limits = {});
// Chordless odd cycles.
std::vector<Cycle> enumerate_induced_odd_cycles(const SimpleGraph& g,
                                                const Limits& limits = {});

bool has_four_cycle(const SimpleGraph& g);

// ---------------------------------------------------------------------------
// Chords and bridges

enum class ChordParity { even, odd };

struct Chord {
  Edge endpoints;
  std::optional<ChordParity> parity;  // set only for even cycles
  friend bool operator==(const Chord&, const Chord&) = default;
};

// Throws InputError when c is not a cycle of g.
std::vector<Chord> cycle_chords(const SimpleGraph& g, const Cycle& c);
bool has_chord(const SimpleGraph& g, std::span<const Vertex> cycle);
// Endpoints distinct and interleaved around c.
bool chords_cross(const Cycle& c, const Chord& a, const Chord& b);

std::vector<Edge> bridges_between(const SimpleGraph& g, const Cycle& a, const Cycle& b,
                                  std::optional<Vertex> forbidden = std::nullopt);

// Repeatedly replaces an odd cycle with a shorter odd cycle on a subset of
// its vertices until it is chordless.
Cycle shrink_to_chordless_odd(const SimpleGraph& g, const Cycle& c);

inline int popcount(VertexMask m) noexcept { return __builtin_popcountll(m); }
inline VertexMask vertex_bit(Vertex v) noexcept { return VertexMask{1} << (v - 1); }

}  // namespace edgepoly
