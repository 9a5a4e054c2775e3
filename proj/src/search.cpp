#include <algorithm>

#include "edgepoly/decompose.hpp"

namespace edgepoly {
namespace {

constexpr std::int8_t kUnset = 2;

// Backtracking over one charge type. Weights are fixed one vertex at a time,
// always on a vertex bordering the already-charged region; every edge whose
// sign becomes nonzero is checked against all edges of the opposite sign.
class SeedSearch {
 public:
  SeedSearch(const SimpleGraph& g, const CompatibilityTable& compat, DecompositionType type,
             SearchStats& stats)
      : g_(g),
        compat_(compat),
        type_(type),
        stats_(stats),
        m_(g.edge_count()),
        failed_(m_ * m_, 0),
        weight_(static_cast<std::size_t>(g.vertex_count()) + 1, kUnset) {}

  std::optional<WeightVector> run() {
    const auto edges = g_.edges();
    for (std::size_t neg = 0; neg < m_; ++neg) {
      for (std::size_t pos = 0; pos < m_; ++pos) {
        if (neg == pos || !compat_.compatible(neg, pos)) continue;
        if (failed(neg, pos)) {
          ++stats_.seeds_skipped_by_memo;
          continue;
        }
        ++stats_.seeds_tried;
        if (auto found = try_seed(edges[neg], edges[pos])) return found;
        // Negating every charge swaps the roles of the two seed edges, so
        // the reversed seed is exhausted as well.
        failed_[neg * m_ + pos] = 1;
        failed_[pos * m_ + neg] = 1;
      }
    }
    return std::nullopt;
  }

 private:
  bool failed(std::size_t neg, std::size_t pos) const { return failed_[neg * m_ + pos] != 0; }

  std::optional<WeightVector> try_seed(const Edge& neg, const Edge& pos) {
    if (type_ == DecompositionType::type1)
      return try_seed_charges(neg, pos, {-1, -1}, {1, 1});
    constexpr std::pair<int, int> neg_charges[] = {{-1, 0}, {0, -1}};
    constexpr std::pair<int, int> pos_charges[] = {{1, 0}, {0, 1}};
    for (auto nc : neg_charges)
      for (auto pc : pos_charges)
        if (auto found = try_seed_charges(neg, pos, nc, pc)) return found;
    return std::nullopt;
  }

  std::optional<WeightVector> try_seed_charges(const Edge& neg, const Edge& pos,
                                               std::pair<int, int> nc, std::pair<int, int> pc) {
    const Frame frame = mark();
    const bool ok = assign(neg.u, nc.first) && assign(neg.v, nc.second) &&
                    assign(pos.u, pc.first) && assign(pos.v, pc.second);
    std::optional<WeightVector> found;
    if (ok && extend()) found = current_weights();
    rollback(frame);
    return found;
  }

  struct Frame {
    std::size_t trail;
    std::size_t positives;
    std::size_t negatives;
  };

  Frame mark() const { return {trail_.size(), positive_.size(), negative_.size()}; }

  void rollback(const Frame& f) {
    while (trail_.size() > f.trail) {
      weight_[trail_.back()] = kUnset;
      trail_.pop_back();
    }
    positive_.resize(f.positives);
    negative_.resize(f.negatives);
  }

  // Sets v and checks every edge to an already-charged neighbour. On
  // failure the caller rolls back.
  bool assign(Vertex v, int value) {
    weight_[v] = static_cast<std::int8_t>(value);
    trail_.push_back(v);
    for (Vertex u : g_.neighbors(v)) {
      if (weight_[u] == kUnset) continue;
      const int sum = weight_[u] + value;
      if (sum == 0) continue;
      const std::size_t e = *g_.edge_index(u, v);
      if (sum > 0) {
        for (std::size_t f : negative_)
          if (!check_pair(f, e)) return false;
        positive_.push_back(e);
      } else {
        for (std::size_t f : positive_)
          if (!check_pair(e, f)) return false;
        negative_.push_back(e);
      }
    }
    return true;
  }

  bool check_pair(std::size_t neg, std::size_t pos) {
    if (!compat_.compatible(neg, pos)) {
      ++stats_.four_cycle_prunes;
      return false;
    }
    if (failed(neg, pos)) {
      ++stats_.memo_prunes;
      return false;
    }
    return true;
  }

  bool charged(Vertex v) const { return weight_[v] != kUnset && weight_[v] != 0; }

  std::optional<Vertex> next_frontier_vertex() const {
    const int d = g_.vertex_count();
    for (Vertex v = 1; v <= d; ++v) {
      if (weight_[v] != kUnset) continue;
      for (Vertex u : g_.neighbors(v)) {
        const bool qualifies =
            type_ == DecompositionType::type1 ? weight_[u] != kUnset : charged(u);
        if (qualifies) return v;
      }
    }
    return std::nullopt;
  }

  bool extend() {
    ++stats_.nodes;
    const auto v = next_frontier_vertex();
    if (!v) {
      // Type I reaches every vertex of a connected graph. For type II the
      // remaining vertices only border zero charges, so zero-filling them
      // creates zero edges only.
      const int d = g_.vertex_count();
      for (Vertex u = 1; u <= d; ++u) {
        if (weight_[u] != kUnset) continue;
        if (type_ == DecompositionType::type1) return false;
        weight_[u] = 0;
        trail_.push_back(u);
      }
      return true;
    }

    int choices[3];
    int count = 0;
    if (type_ == DecompositionType::type1) {
      choices[count++] = 1;
      choices[count++] = -1;
    } else {
      bool next_to_plus = false;
      bool next_to_minus = false;
      for (Vertex u : g_.neighbors(*v)) {
        next_to_plus |= weight_[u] == 1;
        next_to_minus |= weight_[u] == -1;
      }
      choices[count++] = 0;
      if (!next_to_plus) choices[count++] = 1;
      if (!next_to_minus) choices[count++] = -1;
    }

    for (int i = 0; i < count; ++i) {
      const Frame frame = mark();
      if (assign(*v, choices[i]) && extend()) return true;
      rollback(frame);
    }
    return false;
  }

  WeightVector current_weights() const {
    std::vector<int> w(static_cast<std::size_t>(g_.vertex_count()));
    for (Vertex v = 1; v <= g_.vertex_count(); ++v) w[v - 1] = weight_[v];
    return WeightVector(std::move(w));
  }

  const SimpleGraph& g_;
  const CompatibilityTable& compat_;
  DecompositionType type_;
  SearchStats& stats_;
  std::size_t m_;
  std::vector<std::uint8_t> failed_;  // ordered (negative edge, positive edge)
  std::vector<std::int8_t> weight_;   // 1-based, kUnset when free
  std::vector<Vertex> trail_;
  std::vector<std::size_t> positive_;
  std::vector<std::size_t> negative_;
};

}  // namespace

std::optional<DecompositionWitness> is_decomposable(const SimpleGraph& g, SearchMode mode,
                                                    SearchStats* stats) {
  if (!is_connected(g)) throw InputError("decomposability requires a connected graph");
  SearchStats local;
  SearchStats& s = stats != nullptr ? *stats : local;
  if (g.vertex_count() < 4 || !has_four_cycle(g)) return std::nullopt;

  const CompatibilityTable compat(g);
  std::vector<DecompositionType> order;
  if (mode != SearchMode::type2) order.push_back(DecompositionType::type1);
  if (mode != SearchMode::type1) order.push_back(DecompositionType::type2);
  for (auto type : order) {
    SeedSearch search(g, compat, type, s);
    if (auto w = search.run()) {
      WeightVector weights = w->is_normalized() ? *w : w->negated();
      auto decomposition = canonical_decomposition(g, weights);
      return DecompositionWitness{std::move(weights), std::move(decomposition), type};
    }
  }
  return std::nullopt;
}

}  // namespace edgepoly
