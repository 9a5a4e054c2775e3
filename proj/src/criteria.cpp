#include "edgepoly/criteria.hpp"

#include <algorithm>
#include <unordered_set>

namespace edgepoly {
namespace {

// Number of edges joining a to b, where a and b are disjoint vertex sets.
int edges_between(const SimpleGraph& g, VertexMask a, VertexMask b) {
  int count = 0;
  while (a) {
    const Vertex v = __builtin_ctzll(a) + 1;
    a &= a - 1;
    count += popcount(g.neighbor_mask(v) & b);
  }
  return count;
}

// Odd cycles deduplicated by vertex set, each represented by the first
// cycle visited on that set.
struct OddCycleSets {
  std::vector<VertexMask> masks;
  std::vector<std::vector<Vertex>> representatives;
  std::unordered_set<VertexMask> seen;

  void add(std::span<const Vertex> c) {
    VertexMask m = 0;
    for (Vertex v : c) m |= vertex_bit(v);
    if (seen.insert(m).second) {
      masks.push_back(m);
      representatives.emplace_back(c.begin(), c.end());
    }
  }
};

void require_connected(const SimpleGraph& g) {
  if (!is_connected(g)) throw InputError("criterion requires a connected graph");
}

bool even_chord_or_triple(const SimpleGraph& g, std::span<const Vertex> cycle, TripleMode mode) {
  const std::size_t k = cycle.size();
  // Chords as position pairs (i < j).
  std::pair<std::size_t, std::size_t> chords[64 * 63 / 2];
  std::size_t count = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 2; j < k; ++j) {
      if ((i == 0 && j == k - 1) || !(g.neighbor_mask(cycle[i]) & vertex_bit(cycle[j]))) continue;
      if ((j - i) % 2 == 1) return true;  // even chord
      chords[count++] = {i, j};
    }
  }
  // No even chord, so every chord is odd and both triple modes coincide.
  (void)mode;
  if (count < 3) return false;
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = a + 1; b < count; ++b) {
      const auto [a1, a2] = chords[a];
      const auto [b1, b2] = chords[b];
      if ((a1 < b1 && b1 < a2 && a2 < b2) || (b1 < a1 && a1 < b2 && b2 < a2)) return true;
    }
  }
  return false;
}

// Vertex sets of two distinct odd cycles.
bool odd_masks_ok(const SimpleGraph& g, VertexMask a, VertexMask b) {
  const VertexMask shared = a & b;
  const int common = popcount(shared);
  if (common >= 2) return true;
  const int bridges = edges_between(g, a & ~shared, b & ~shared);
  return common == 1 ? bridges >= 1 : bridges >= 2;
}

}  // namespace

NormalityReport odd_cycle_condition(const SimpleGraph& g, const Limits& limits,
                                    NormalityMode mode) {
  require_connected(g);
  OddCycleSets sets;
  auto collect = [&](std::span<const Vertex> c) {
    if (c.size() % 2 == 1) sets.add(c);
    return true;
  };
  if (mode == NormalityMode::induced)
    for_each_chordless_cycle(g, limits, collect);
  else
    for_each_simple_cycle(g, limits, collect);

  for (std::size_t i = 0; i < sets.masks.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.masks.size(); ++j) {
      const VertexMask a = sets.masks[i];
      const VertexMask b = sets.masks[j];
      if ((a & b) != 0 || edges_between(g, a, b) != 0) continue;
      NormalityReport report;
      report.normal = false;
      Cycle first = Cycle::canonical(sets.representatives[i]);
      Cycle second = Cycle::canonical(sets.representatives[j]);
      if (mode == NormalityMode::exhaustive) {
        first = shrink_to_chordless_odd(g, first);
        second = shrink_to_chordless_odd(g, second);
      }
      report.violation = std::make_pair(std::move(first), std::move(second));
      return report;
    }
  }
  return {};
}

bool even_cycle_ok(const SimpleGraph& g, const Cycle& c, TripleMode mode) {
  if (!c.is_even() || c.length() < 6)
    throw InputError("even_cycle_ok needs an even cycle of length >= 6");
  const auto chords = cycle_chords(g, c);
  std::vector<Chord> pool;
  for (const auto& ch : chords) {
    if (ch.parity == ChordParity::even) return true;
    if (mode == TripleMode::literal || ch.parity == ChordParity::odd) pool.push_back(ch);
  }
  if (pool.size() < 3) return false;
  for (std::size_t a = 0; a < pool.size(); ++a)
    for (std::size_t b = a + 1; b < pool.size(); ++b)
      if (chords_cross(c, pool[a], pool[b])) return true;
  return false;
}

bool odd_pair_ok(const SimpleGraph& g, const Cycle& a, const Cycle& b) {
  if (a == b) throw InputError("odd_pair_ok needs two distinct cycles");
  if (!a.is_odd() || !b.is_odd()) throw InputError("odd_pair_ok needs two odd cycles");
  if (!is_cycle_of(g, a) || !is_cycle_of(g, b)) throw InputError("cycle is not in the graph");
  std::vector<Vertex> shared;
  for (Vertex v : a.vertices())
    if (b.contains(v)) shared.push_back(v);
  if (shared.size() >= 2) return true;
  if (shared.size() == 1) return !bridges_between(g, a, b, shared.front()).empty();
  return bridges_between(g, a, b).size() >= 2;
}

std::string to_string(QuadraticViolationKind k) {
  switch (k) {
    case QuadraticViolationKind::even_cycle:
      return "even_cycle";
    case QuadraticViolationKind::odd_pair_one_node:
      return "odd_pair_one_node";
    case QuadraticViolationKind::odd_pair_disjoint:
      return "odd_pair_disjoint";
  }
  return "unknown";
}

QuadraticReport quadratic_condition(const SimpleGraph& g, const Limits& limits, TripleMode mode) {
  require_connected(g);
  QuadraticReport report;
  OddCycleSets odd;
  for_each_simple_cycle(g, limits, [&](std::span<const Vertex> c) {
    if (c.size() % 2 == 1) {
      odd.add(c);
    } else if (c.size() >= 6 && !even_chord_or_triple(g, c, mode)) {
      report.quadratic = false;
      report.violation = QuadraticViolation{QuadraticViolationKind::even_cycle,
                                            Cycle::canonical({c.begin(), c.end()}), std::nullopt,
                                            std::nullopt};
      return false;
    }
    return true;
  });
  if (!report.quadratic) return report;

  // The pair predicate depends only on the two vertex sets.
  for (std::size_t i = 0; i < odd.masks.size(); ++i) {
    for (std::size_t j = i + 1; j < odd.masks.size(); ++j) {
      if (odd_masks_ok(g, odd.masks[i], odd.masks[j])) continue;
      const VertexMask shared = odd.masks[i] & odd.masks[j];
      QuadraticViolation v{shared ? QuadraticViolationKind::odd_pair_one_node
                                  : QuadraticViolationKind::odd_pair_disjoint,
                           Cycle::canonical(odd.representatives[i]),
                           Cycle::canonical(odd.representatives[j]), std::nullopt};
      if (shared) v.shared = __builtin_ctzll(shared) + 1;
      report.quadratic = false;
      report.violation = std::move(v);
      return report;
    }
  }
  return report;
}

bool certificate_fails(const SimpleGraph& g, const QuadraticViolation& v, TripleMode mode) {
  if (v.kind == QuadraticViolationKind::even_cycle) return !even_cycle_ok(g, v.cycle, mode);
  if (!v.other) return false;
  return !odd_pair_ok(g, v.cycle, *v.other);
}

bool certificate_fails(const SimpleGraph& g, const std::pair<Cycle, Cycle>& odd_pair) {
  const auto& [a, b] = odd_pair;
  if (!a.is_odd() || !b.is_odd() || (a.vertex_mask() & b.vertex_mask()) != 0) return false;
  if (!is_cycle_of(g, a) || !is_cycle_of(g, b)) return false;
  if (has_chord(g, a.vertices()) || has_chord(g, b.vertices())) return false;
  return bridges_between(g, a, b).empty();
}

}  // namespace edgepoly
