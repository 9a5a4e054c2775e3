#pragma once

#include <optional>
#include <string>
#include <utility>

#include "edgepoly/graph.hpp"

namespace edgepoly {

struct NormalityReport {
  bool normal = true;
  // Chordless, vertex-disjoint odd cycles with no edge between them.
  std::optional<std::pair<Cycle, Cycle>> violation;
};

enum class NormalityMode {
  induced,     // chordless odd cycles only
  exhaustive,  // every simple odd cycle; certificates are shrunk to chordless
};

// Odd cycle condition: every two vertex-disjoint odd cycles are joined by
// an edge. Throws InputError on disconnected input, CapExceeded past the
// cycle cap.
NormalityReport odd_cycle_condition(const SimpleGraph& g, const Limits& limits = {},
                                    NormalityMode mode = NormalityMode::induced);

enum class TripleMode {
  literal,     // any three distinct chords, two of which cross
  odd_chords,  // three odd chords, two of which cross
};

// For an even cycle of length >= 6: an even chord exists, or an odd-triple.
bool even_cycle_ok(const SimpleGraph& g, const Cycle& c, TripleMode mode = TripleMode::literal);

// Sharing >= 2 vertices: true. Sharing exactly v: some bridge avoids v.
// Disjoint: at least two bridges. Throws InputError when a == b.
bool odd_pair_ok(const SimpleGraph& g, const Cycle& a, const Cycle& b);

enum class QuadraticViolationKind { even_cycle, odd_pair_one_node, odd_pair_disjoint };

std::string to_string(QuadraticViolationKind k);

struct QuadraticViolation {
  QuadraticViolationKind kind;
  Cycle cycle;
  std::optional<Cycle> other;
  std::optional<Vertex> shared;
};

struct QuadraticReport {
  bool quadratic = true;
  std::optional<QuadraticViolation> violation;
};

QuadraticReport quadratic_condition(const SimpleGraph& g, const Limits& limits = {},
                                    TripleMode mode = TripleMode::literal);

// Replays the predicate a certificate claims to fail; true when it fails.
bool certificate_fails(const SimpleGraph& g, const QuadraticViolation& v,
                       TripleMode mode = TripleMode::literal);
bool certificate_fails(const SimpleGraph& g, const std::pair<Cycle, Cycle>& odd_pair);

}  // namespace edgepoly
