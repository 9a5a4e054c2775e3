#include <algorithm>
#include <sstream>

#include "edgepoly/graph.hpp"

namespace edgepoly {

Cycle Cycle::canonical(std::vector<Vertex> sequence) {
  if (sequence.size() < 3) throw InputError("a cycle needs at least 3 vertices");
  {
    auto sorted = sequence;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw InputError("cycle vertices must be distinct");
  }
  auto smallest = std::min_element(sequence.begin(), sequence.end());
  std::rotate(sequence.begin(), smallest, sequence.end());
  if (sequence[1] > sequence.back()) std::reverse(sequence.begin() + 1, sequence.end());
  return Cycle(std::move(sequence));
}

std::optional<std::size_t> Cycle::position(Vertex v) const noexcept {
  auto it = std::find(seq_.begin(), seq_.end(), v);
  if (it == seq_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - seq_.begin());
}

VertexMask Cycle::vertex_mask() const noexcept {
  VertexMask m = 0;
  for (Vertex v : seq_) m |= vertex_bit(v);
  return m;
}

std::vector<Edge> Cycle::edges() const {
  std::vector<Edge> out;
  out.reserve(seq_.size());
  for (std::size_t i = 0; i < seq_.size(); ++i)
    out.push_back(make_edge(seq_[i], seq_[(i + 1) % seq_.size()]));
  return out;
}

std::string Cycle::to_string() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < seq_.size(); ++i) out << (i ? "," : "") << seq_[i];
  out << ")";
  return out.str();
}

bool is_cycle_of(const SimpleGraph& g, const Cycle& c) {
  const auto vs = c.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i)
    if (!g.adjacent(vs[i], vs[(i + 1) % vs.size()])) return false;
  return true;
}

namespace {

void check_cap(const SimpleGraph& g, const Limits& limits) {
  const int cap = std::min(limits.max_cycle_vertices, kHardCycleCap);
  if (g.vertex_count() > cap) throw CapExceeded("cycle enumeration", g.vertex_count(), cap);
}

// Depth-first walk over paths start=p0 < p1,...; neighbours are tried in
// ascending order so cycles come out lexicographically.
class CycleWalker {
 public:
  CycleWalker(const SimpleGraph& g, const CycleVisitor& visit, bool chordless)
      : g_(g), visit_(visit), chordless_(chordless) {}

  void run() {
    const int d = g_.vertex_count();
    for (Vertex s = 1; s <= d && !stopped_; ++s) {
      start_ = s;
      above_ = s < 64 ? ~VertexMask{0} << s : 0;  // bits of vertices > s
      path_.assign(1, s);
      visited_ = vertex_bit(s);
      extend(0);
    }
  }

 private:
  // interior: vertices strictly between start and the last path vertex.
  void extend(VertexMask interior) {
    const Vertex last = path_.back();
    if (!chordless_ && path_.size() >= 3 && (g_.neighbor_mask(last) & vertex_bit(start_)) &&
        path_[1] < last) {
      if (!visit_(path_)) {
        stopped_ = true;
        return;
      }
    }
    VertexMask candidates = g_.neighbor_mask(last) & above_ & ~visited_;
    while (candidates && !stopped_) {
      const Vertex w = __builtin_ctzll(candidates) + 1;
      candidates &= candidates - 1;
      if (chordless_) {
        if (g_.neighbor_mask(w) & interior) continue;
        if (path_.size() >= 2 && (g_.neighbor_mask(w) & vertex_bit(start_))) {
          if (path_[1] < w) {
            path_.push_back(w);
            if (!visit_(path_)) stopped_ = true;
            path_.pop_back();
          }
          continue;
        }
      }
      const VertexMask next_interior = path_.size() >= 2 ? interior | vertex_bit(last) : interior;
      path_.push_back(w);
      visited_ |= vertex_bit(w);
      extend(next_interior);
      visited_ &= ~vertex_bit(w);
      path_.pop_back();
    }
  }

  const SimpleGraph& g_;
  const CycleVisitor& visit_;
  bool chordless_;
  bool stopped_ = false;
  Vertex start_ = 0;
  VertexMask above_ = 0;
  VertexMask visited_ = 0;
  std::vector<Vertex> path_;
};

bool matches(std::span<const Vertex> c, int min_len, CycleParity parity) {
  if (static_cast<int>(c.size()) < min_len) return false;
  switch (parity) {
    case CycleParity::any:
      return true;
    case CycleParity::odd:
      return c.size() % 2 == 1;
    case CycleParity::even:
      return c.size() % 2 == 0;
  }
  return true;
}

}  // namespace

void for_each_simple_cycle(const SimpleGraph& g, const Limits& limits, const CycleVisitor& visit) {
  check_cap(g, limits);
  CycleWalker(g, visit, false).run();
}

void for_each_chordless_cycle(const SimpleGraph& g, const Limits& limits,
                              const CycleVisitor& visit) {
  check_cap(g, limits);
  CycleWalker(g, visit, true).run();
}

std::vector<Cycle> enumerate_simple_cycles(const SimpleGraph& g, int min_len, CycleParity parity,
                                           const Limits& limits) {
  std::vector<Cycle> out;
  for_each_simple_cycle(g, limits, [&](std::span<const Vertex> c) {
    if (matches(c, min_len, parity)) out.push_back(Cycle::canonical({c.begin(), c.end()}));
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Cycle> enumerate_induced_odd_cycles(const SimpleGraph& g, const Limits& limits) {
  std::vector<Cycle> out;
  for_each_chordless_cycle(g, limits, [&](std::span<const Vertex> c) {
    if (c.size() % 2 == 1) out.push_back(Cycle::canonical({c.begin(), c.end()}));
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

bool has_four_cycle(const SimpleGraph& g) {
  const int d = g.vertex_count();
  for (Vertex a = 1; a <= d; ++a) {
    for (Vertex b = a + 1; b <= d; ++b) {
      int common = 0;
      for (Vertex x : g.neighbors(a))
        if (x != b && g.adjacent(x, b) && ++common == 2) return true;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------

std::vector<Chord> cycle_chords(const SimpleGraph& g, const Cycle& c) {
  if (!is_cycle_of(g, c)) throw InputError("cycle " + c.to_string() + " is not a cycle of the graph");
  const auto vs = c.vertices();
  const std::size_t k = vs.size();
  std::vector<Chord> chords;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 2; j < k; ++j) {
      if (i == 0 && j == k - 1) continue;
      if (!g.adjacent(vs[i], vs[j])) continue;
      Chord chord{make_edge(vs[i], vs[j]), std::nullopt};
      if (c.is_even()) chord.parity = (j - i) % 2 == 1 ? ChordParity::even : ChordParity::odd;
      chords.push_back(chord);
    }
  }
  return chords;
}

bool has_chord(const SimpleGraph& g, std::span<const Vertex> cycle) {
  const std::size_t k = cycle.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 2; j < k; ++j)
      if (!(i == 0 && j == k - 1) && g.adjacent(cycle[i], cycle[j])) return true;
  return false;
}

bool chords_cross(const Cycle& c, const Chord& a, const Chord& b) {
  auto ordered = [&](const Chord& ch) {
    auto p = c.position(ch.endpoints.u);
    auto q = c.position(ch.endpoints.v);
    if (!p || !q) throw InputError("chord endpoint not on cycle " + c.to_string());
    return std::pair{std::min(*p, *q), std::max(*p, *q)};
  };
  const auto [a1, a2] = ordered(a);
  const auto [b1, b2] = ordered(b);
  if (a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2) return false;
  return (a1 < b1 && b1 < a2 && a2 < b2) || (b1 < a1 && a1 < b2 && b2 < a2);
}

std::vector<Edge> bridges_between(const SimpleGraph& g, const Cycle& a, const Cycle& b,
                                  std::optional<Vertex> forbidden) {
  std::vector<Edge> out;
  for (const auto& e : g.edges()) {
    if (forbidden && e.touches(*forbidden)) continue;
    const bool forward = a.contains(e.u) && b.contains(e.v);
    const bool backward = b.contains(e.u) && a.contains(e.v);
    if (forward || backward) out.push_back(e);
  }
  return out;
}

Cycle shrink_to_chordless_odd(const SimpleGraph& g, const Cycle& c) {
  if (!c.is_odd()) throw InputError("cycle " + c.to_string() + " is not odd");
  Cycle current = c;
  for (;;) {
    const auto vs = current.vertices();
    const std::size_t k = vs.size();
    bool shrunk = false;
    for (std::size_t i = 0; i < k && !shrunk; ++i) {
      for (std::size_t j = i + 2; j < k && !shrunk; ++j) {
        if ((i == 0 && j == k - 1) || !g.adjacent(vs[i], vs[j])) continue;
        std::vector<Vertex> inner(vs.begin() + static_cast<long>(i), vs.begin() + static_cast<long>(j) + 1);
        std::vector<Vertex> outer(vs.begin() + static_cast<long>(j), vs.end());
        outer.insert(outer.end(), vs.begin(), vs.begin() + static_cast<long>(i) + 1);
        current = Cycle::canonical(inner.size() % 2 == 1 ? std::move(inner) : std::move(outer));
        shrunk = true;
      }
    }
    if (!shrunk) return current;
  }
}

}  // namespace edgepoly
