#include "edgepoly/verify.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <random>
#include <sstream>
#include <thread>

namespace edgepoly {
namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string pattern(bool whole, bool a, bool b) {
  // Pieces are unordered; list "no" before "yes".
  const bool lo = a && b;
  const bool hi = a || b;
  return "G=" + yes_no(whole) + " pieces=" + yes_no(lo) + "+" + yes_no(hi);
}

class Recorder {
 public:
  explicit Recorder(TheoremReport& r) : r_(r) {}

  void check(const char* claim, bool holds, const std::string& detail) {
    ++r_.checks[claim];
    if (!holds && failures_[claim]++ < kMaxPerClaim) r_.violations.push_back({claim, detail});
  }

 private:
  static constexpr std::size_t kMaxPerClaim = 5;
  TheoremReport& r_;
  std::map<std::string, std::size_t> failures_;
};

std::vector<Edge> edges_with_sign(const SimpleGraph& g, const SignAssignment& s, bool plus) {
  std::vector<Edge> out;
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (plus ? s.signs[i] >= 0 : s.signs[i] <= 0) out.push_back(edges[i]);
  return out;
}

PieceProperties piece_properties(const SimpleGraph& piece, const Limits& limits) {
  PieceProperties p;
  p.connected = is_connected(piece);
  p.dimension = piece.edge_count() > 0 ? polytope_dimension(piece) : -1;
  if (p.connected) {
    p.normal = odd_cycle_condition(piece, limits).normal;
    p.quadratic = quadratic_condition(piece, limits).quadratic;
  }
  return p;
}

// Every positive e=(i,j) and negative f=(k,l) close a 4-cycle through two
// zero edges.
bool opposite_edges_close_with_zero_edges(const SimpleGraph& g, const SignAssignment& s) {
  const auto edges = g.edges();
  auto zero = [&](Vertex a, Vertex b) {
    const auto idx = g.edge_index(a, b);
    return idx && s.signs[*idx] == 0;
  };
  for (std::size_t p = 0; p < edges.size(); ++p) {
    if (s.signs[p] <= 0) continue;
    for (std::size_t n = 0; n < edges.size(); ++n) {
      if (s.signs[n] >= 0) continue;
      const auto [i, j] = edges[p];
      const auto [k, l] = edges[n];
      if (edges[p].shares_vertex(edges[n])) return false;
      if (!((zero(j, k) && zero(l, i)) || (zero(j, l) && zero(k, i)))) return false;
    }
  }
  return true;
}

bool type2_structure_holds(const SimpleGraph& g, const WeightVector& w) {
  const int d = g.vertex_count();
  for (const auto& e : g.edges()) {
    if (w.at(e.u) == 1 && w.at(e.v) == 1) return false;
    if (w.at(e.u) == -1 && w.at(e.v) == -1) return false;
  }
  for (Vertex x = 1; x <= d; ++x) {
    bool plus = false, minus = false;
    for (Vertex y : g.neighbors(x)) {
      plus |= w.at(y) == 1;
      minus |= w.at(y) == -1;
    }
    if (plus && minus) return false;
  }
  return true;
}

// Edge-index sequences of every even cycle, in cycle order.
std::vector<std::vector<std::size_t>> even_cycle_edges(const SimpleGraph& g, const Limits& limits) {
  std::vector<std::vector<std::size_t>> out;
  for_each_simple_cycle(g, limits, [&](std::span<const Vertex> c) {
    if (c.size() % 2 == 0) {
      std::vector<std::size_t> idx(c.size());
      for (std::size_t i = 0; i < c.size(); ++i) idx[i] = *g.edge_index(c[i], c[(i + 1) % c.size()]);
      out.push_back(std::move(idx));
    }
    return true;
  });
  return out;
}

// On an even cycle with exactly one positive and one negative edge, the two
// positions have equal parity.
std::optional<std::size_t> lonely_pair_failure(const std::vector<std::vector<std::size_t>>& cycles,
                                               const SignAssignment& s) {
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    int pos_count = 0, neg_count = 0;
    std::size_t pos_at = 0, neg_at = 0;
    const auto& cyc = cycles[c];
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      const int sign = s.signs[cyc[i]];
      if (sign > 0) {
        ++pos_count;
        pos_at = i;
      } else if (sign < 0) {
        ++neg_count;
        neg_at = i;
      }
    }
    if (pos_count == 1 && neg_count == 1 && pos_at % 2 != neg_at % 2) return c;
  }
  return std::nullopt;
}

std::string describe(const Decomposition& d) {
  std::ostringstream out;
  out << "{";
  for (const auto& e : d.first()) out << to_string(e);
  out << "} | {";
  for (const auto& e : d.second()) out << to_string(e);
  out << "}";
  return out.str();
}

}  // namespace

TheoremReport verify_theorems(const SimpleGraph& g, const Limits& limits) {
  if (!is_connected(g)) throw InputError("verification requires a connected graph");
  TheoremReport r;
  Recorder rec(r);
  r.vertices = g.vertex_count();
  r.edges = g.edge_count();
  r.bipartite = bipartition(g).has_value();
  r.has_four_cycle = has_four_cycle(g);
  r.dimension = g.edge_count() > 0 ? polytope_dimension(g) : -1;

  const NormalityReport normality = odd_cycle_condition(g, limits, NormalityMode::induced);
  const NormalityReport normality_slow = odd_cycle_condition(g, limits, NormalityMode::exhaustive);
  r.normal = normality.normal;
  rec.check(claims::kNormalityModes, normality.normal == normality_slow.normal,
            "induced=" + yes_no(normality.normal) + " exhaustive=" + yes_no(normality_slow.normal));
  r.quadratic = quadratic_condition(g, limits, TripleMode::literal).quadratic;
  for (const auto& c : enumerate_simple_cycles(g, 6, CycleParity::even, limits)) {
    if (even_cycle_ok(g, c, TripleMode::literal) != even_cycle_ok(g, c, TripleMode::odd_chords)) {
      r.quadratic_modes_agree = false;
      break;
    }
  }

  const auto even_cycles = even_cycle_edges(g, limits);
  const auto sides = r.bipartite ? bipartition(g) : std::nullopt;

  std::map<Decomposition, std::size_t> index_of;  // into r.decompositions
  std::map<Decomposition, WeightVector> type1_owner;

  for_each_accepted_weight_vector(g, limits, [&](const WeightVector& w, const SignAssignment& s) {
    ++r.accepted_vectors;
    const bool type2 = w.has_zero();
    ++(type2 ? r.type2_vectors : r.type1_vectors);
    const Decomposition dec(edges_with_sign(g, s, true), edges_with_sign(g, s, false));
    const std::string tag = w.to_string();

    rec.check(claims::kFourCycle, r.has_four_cycle, tag);
    {
      std::size_t covered = 0;
      bool ok = true;
      for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const bool in_first = std::binary_search(dec.first().begin(), dec.first().end(), g.edge(i));
        const bool in_second = std::binary_search(dec.second().begin(), dec.second().end(), g.edge(i));
        covered += in_first || in_second;
        ok &= (in_first && in_second) == (s.signs[i] == 0);
      }
      rec.check(claims::kPiecesCover, ok && covered == g.edge_count(), tag);
    }
    rec.check(claims::kOppositeEdges, opposite_edges_close_with_zero_edges(g, s), tag);
    {
      const WeightVector flipped = w.negated();
      const auto v = validate_weights(g, flipped);
      const bool ok = v.accepted() && canonical_decomposition(g, flipped) == dec;
      rec.check(claims::kSignFlip, ok, tag);
    }
    if (type2) {
      rec.check(claims::kType2Structure, type2_structure_holds(g, w), tag);
    } else {
      auto [it, inserted] = type1_owner.emplace(dec, w);
      rec.check(claims::kType1Injective, inserted,
                tag + " collides with " + it->second.to_string());
    }
    if (auto bad = lonely_pair_failure(even_cycles, s))
      rec.check(claims::kLonelyPairParity, false, tag + " on even cycle #" + std::to_string(*bad));
    else
      rec.check(claims::kLonelyPairParity, true, tag);

    if (type2 && sides) {
      for (const WeightVector& candidate : {w, w.negated()}) {
        bool ok = false;
        std::string detail = candidate.to_string();
        try {
          const WeightVector lifted = lift_type2_to_type1(g, candidate);
          ok = !lifted.has_zero() && validate_weights(g, lifted).accepted() &&
               canonical_decomposition(g, lifted) == dec;
          detail += " -> " + lifted.to_string();
        } catch (const InputError& e) {
          detail += ": " + std::string(e.what());
        }
        rec.check(claims::kBipartiteLift, ok, detail);
      }
    }
    if (normality.violation) {
      // A bridgeless chordless odd pair cannot carry edges of both signs.
      bool plus = false, minus = false;
      for (const Cycle* c : {&normality.violation->first, &normality.violation->second}) {
        for (const auto& e : c->edges()) {
          const int sign = s.signs[*g.edge_index(e)];
          plus |= sign > 0;
          minus |= sign < 0;
        }
      }
      rec.check(claims::kOddPairSingleSign, !(plus && minus), tag);
    }

    if (!index_of.count(dec)) {
      index_of.emplace(dec, r.decompositions.size());
      r.decompositions.push_back(DecompositionRecord{
          dec, w, type2 ? DecompositionType::type2 : DecompositionType::type1, {}, {}});
    }
    return true;
  });

  r.decomposable = !r.decompositions.empty();
  std::sort(r.decompositions.begin(), r.decompositions.end(),
            [](const auto& a, const auto& b) { return a.decomposition < b.decomposition; });

  // Search against enumeration, per type.
  {
    SearchStats stats;
    r.witness = is_decomposable(g, SearchMode::any, &stats);
    r.search_type1 = is_decomposable(g, SearchMode::type1).has_value();
    r.search_type2 = is_decomposable(g, SearchMode::type2).has_value();
    const bool agree = r.witness.has_value() == r.decomposable &&
                       r.search_type1 == (r.type1_vectors > 0) &&
                       r.search_type2 == (r.type2_vectors > 0);
    rec.check(claims::kSearchMatchesEnumeration, agree,
              "search any/I/II=" + yes_no(r.witness.has_value()) + "/" + yes_no(r.search_type1) +
                  "/" + yes_no(r.search_type2) + " enumeration=" + yes_no(r.decomposable) + "/" +
                  yes_no(r.type1_vectors > 0) + "/" + yes_no(r.type2_vectors > 0));
    if (r.witness) {
      const auto v = validate_weights(g, r.witness->weights);
      const bool ok = v.accepted() &&
                      r.witness->weights.has_zero() ==
                          (r.witness->type == DecompositionType::type2) &&
                      canonical_decomposition(g, r.witness->weights) == r.witness->decomposition;
      rec.check(claims::kWitnessValid, ok, r.witness->weights.to_string());
    }
  }

  for (auto& record : r.decompositions) {
    const SimpleGraph first = g.spanning_subgraph(record.decomposition.first());
    const SimpleGraph second = g.spanning_subgraph(record.decomposition.second());
    record.first = piece_properties(first, limits);
    record.second = piece_properties(second, limits);
    const std::string tag = describe(record.decomposition);
    rec.check(claims::kPiecesConnected, record.first.connected && record.second.connected, tag);
    rec.check(claims::kPiecesDimension,
              record.first.dimension == r.dimension && record.second.dimension == r.dimension,
              tag);
    if (!record.first.normal || !record.second.normal) continue;

    const bool pieces_normal = *record.first.normal && *record.second.normal;
    rec.check(claims::kNormalityEquivalence, r.normal == pieces_normal, tag);
    ++r.normality_patterns[pattern(r.normal, *record.first.normal, *record.second.normal)];

    const bool qa = *record.first.quadratic;
    const bool qb = *record.second.quadratic;
    rec.check(claims::kQuadraticForward, !(qa && qb) || r.quadratic, tag);
    ++r.quadratic_patterns[pattern(r.quadratic, qa, qb)];
    if (r.quadratic && !(qa && qb)) ++r.quadratic_converse_instances;
  }

  if (auto parts = multipartite_parts(g)) {
    r.parts = parts;
    r.formula = count_multipartite_decompositions(*parts).value;
    r.formula_delta = static_cast<std::int64_t>(r.decompositions.size()) - *r.formula;
    if (parts->part_count() >= 3)
      rec.check(claims::kMultipartiteFormula, *r.formula_delta == 0,
                "enumeration " + std::to_string(r.decompositions.size()) + " vs formula " +
                    std::to_string(*r.formula));
  }
  return r;
}

// ---------------------------------------------------------------------------

std::vector<PartSpec> multipartite_shapes(const MultipartiteFamily& family) {
  std::vector<PartSpec> out;
  std::vector<int> current;
  // Non-increasing compositions of d.
  auto recurse = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      const int k = static_cast<int>(current.size());
      if (k >= family.min_parts && (family.max_parts == 0 || k <= family.max_parts))
        out.emplace_back(current);
      return;
    }
    for (int s = std::min(remaining, max_part); s >= 1; --s) {
      current.push_back(s);
      self(self, remaining - s, s);
      current.pop_back();
    }
  };
  for (int d = std::max(family.min_vertices, 2); d <= family.max_vertices; ++d) recurse(recurse, d, d);
  return out;
}

std::vector<CorpusEntry> build_corpus(const CorpusSpec& spec) {
  std::vector<CorpusEntry> out;
  if (spec.random) {
    const RandomFamily& f = *spec.random;
    if (f.count < 0 || f.min_vertices < 1 || f.max_vertices < f.min_vertices ||
        f.probabilities.empty())
      throw InputError("invalid random corpus family");
    const auto span = static_cast<std::uint64_t>(f.max_vertices - f.min_vertices + 1);
    for (int i = 0; i < f.count; ++i) {
      std::mt19937_64 rng(f.seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(i));
      const int d = f.min_vertices + static_cast<int>(rng() % span);
      const std::uint64_t graph_seed = rng();
      const double p = f.probabilities[static_cast<std::size_t>(i) % f.probabilities.size()];
      std::ostringstream name;
      name << "random#" << i << " d=" << d << " p=" << p;
      out.push_back({name.str(), random_connected_graph(d, p, graph_seed)});
    }
  }
  if (spec.multipartite) {
    for (const auto& shape : multipartite_shapes(*spec.multipartite)) {
      std::string name = "multipartite[";
      for (std::size_t i = 0; i < shape.sizes.size(); ++i)
        name += (i ? "," : "") + std::to_string(shape.sizes[i]);
      name += "]";
      out.push_back({name, complete_multipartite_graph(shape)});
    }
  }
  return out;
}

CorpusReport corpus_verify(const CorpusSpec& spec, const Limits& limits, unsigned threads) {
  const auto corpus = build_corpus(spec);
  CorpusReport report;
  report.results.resize(corpus.size());

  auto work = [&](std::size_t i) {
    CorpusResult& out = report.results[i];
    out.name = corpus[i].name;
    try {
      out.report = verify_theorems(corpus[i].graph, limits);
    } catch (const std::exception& e) {
      out.error = e.what();
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(corpus.size(), 1)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < corpus.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < corpus.size();) work(i);
      });
  }

  for (const auto& res : report.results) {
    ++report.graphs;
    if (!res.report) {
      ++report.failures;
      continue;
    }
    const TheoremReport& r = *res.report;
    report.decomposable += r.decomposable;
    report.decompositions += r.decompositions.size();
    report.violations += r.violations.size();
    for (const auto& [claim, n] : r.checks) report.checks[claim] += n;
    for (const auto& v : r.violations) {
      ++report.violations_by_claim[v.claim];
      if (v.claim == claims::kSearchMatchesEnumeration) ++report.search_disagreements;
    }
    for (const auto& [k, n] : r.quadratic_patterns) report.quadratic_patterns[k] += n;
    for (const auto& [k, n] : r.normality_patterns) report.normality_patterns[k] += n;
    report.quadratic_converse_instances += r.quadratic_converse_instances;
    report.quadratic_mode_disagreements += !r.quadratic_modes_agree;
  }
  return report;
}

}  // namespace edgepoly
