#include "edgepoly/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <random>
#include <sstream>

namespace edgepoly {

Limits limits_from_environment() {
  Limits limits;
  if (const char* env = std::getenv("EDGEPOLY_MAX_VERTICES"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    long value = std::strtol(env, &end, 10);
    if (end != nullptr && *end == '\0' && value > 0 && value < 1000) {
      limits.max_cycle_vertices = static_cast<int>(value);
      limits.max_enum_vertices = static_cast<int>(value);
    }
  }
  return limits;
}

Edge make_edge(Vertex a, Vertex b) {
  if (a == b) throw InputError("loop at vertex " + std::to_string(a));
  return a < b ? Edge{a, b} : Edge{b, a};
}

std::string to_string(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

SimpleGraph::SimpleGraph(int d) : SimpleGraph(d, {}) {}

SimpleGraph::SimpleGraph(int d, std::vector<Edge> edges) : d_(d), edges_(std::move(edges)) {
  if (d < 1) throw InputError("graph needs at least one vertex");
  for (auto& e : edges_) {
    if (e.u < 1 || e.v < 1 || e.u > d || e.v > d)
      throw InputError("edge " + to_string(e) + " has an endpoint outside 1.." + std::to_string(d));
    e = make_edge(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end())
    throw InputError("duplicate edge " + to_string(*dup));
  build_indices();
}

void SimpleGraph::build_indices() {
  const auto n = static_cast<std::size_t>(d_);
  nbrs_.assign(n, {});
  masks_.assign(n, 0);
  index_.assign(n * n, -1);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto [u, v] = edges_[i];
    nbrs_[u - 1].push_back(v);
    nbrs_[v - 1].push_back(u);
    index_[(u - 1) * n + (v - 1)] = static_cast<int>(i);
    index_[(v - 1) * n + (u - 1)] = static_cast<int>(i);
    if (d_ <= 64) {
      masks_[u - 1] |= vertex_bit(v);
      masks_[v - 1] |= vertex_bit(u);
    }
  }
  for (auto& list : nbrs_) std::sort(list.begin(), list.end());
}

bool SimpleGraph::adjacent(Vertex a, Vertex b) const noexcept {
  return edge_index(a, b).has_value();
}

std::optional<std::size_t> SimpleGraph::edge_index(Vertex a, Vertex b) const noexcept {
  if (a < 1 || b < 1 || a > d_ || b > d_) return std::nullopt;
  const int idx = index_[static_cast<std::size_t>(a - 1) * d_ + (b - 1)];
  if (idx < 0) return std::nullopt;
  return static_cast<std::size_t>(idx);
}

SimpleGraph SimpleGraph::spanning_subgraph(std::span<const Edge> edges) const {
  for (const auto& e : edges)
    if (!contains(e)) throw InputError("edge " + to_string(e) + " is not in the graph");
  return SimpleGraph(d_, std::vector<Edge>(edges.begin(), edges.end()));
}

// ---------------------------------------------------------------------------

PartSpec::PartSpec(std::vector<int> part_sizes) : sizes(std::move(part_sizes)) {
  if (sizes.size() < 2) throw InputError("a multipartite graph needs at least two parts");
  for (int s : sizes)
    if (s < 1) throw InputError("part sizes must be positive");
}

int PartSpec::vertex_count() const noexcept {
  int d = 0;
  for (int s : sizes) d += s;
  return d;
}

SimpleGraph complete_graph(int d) {
  if (d < 1) throw InputError("complete graph needs d >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 1; u <= d; ++u)
    for (Vertex v = u + 1; v <= d; ++v) edges.push_back({u, v});
  return SimpleGraph(d, std::move(edges));
}

SimpleGraph cycle_graph(int d) {
  if (d < 3) throw InputError("cycle graph needs d >= 3");
  std::vector<Edge> edges;
  for (Vertex u = 1; u < d; ++u) edges.push_back({u, u + 1});
  edges.push_back({1, d});
  return SimpleGraph(d, std::move(edges));
}

SimpleGraph path_graph(int d) {
  if (d < 1) throw InputError("path graph needs d >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 1; u < d; ++u) edges.push_back({u, u + 1});
  return SimpleGraph(d, std::move(edges));
}

SimpleGraph complete_multipartite_graph(const PartSpec& parts) {
  const int d = parts.vertex_count();
  std::vector<int> part_of(d + 1);
  Vertex next = 1;
  for (std::size_t p = 0; p < parts.sizes.size(); ++p)
    for (int i = 0; i < parts.sizes[p]; ++i) part_of[next++] = static_cast<int>(p);
  std::vector<Edge> edges;
  for (Vertex u = 1; u <= d; ++u)
    for (Vertex v = u + 1; v <= d; ++v)
      if (part_of[u] != part_of[v]) edges.push_back({u, v});
  return SimpleGraph(d, std::move(edges));
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Uniform in [0,1) from the top 53 bits; std distributions are not
// portable across standard libraries.
double unit_interval(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

SimpleGraph random_connected_graph(int d, double p, std::uint64_t seed) {
  if (d < 1) throw InputError("random graph needs d >= 1");
  if (!(p > 0.0 && p <= 1.0)) throw InputError("edge probability must lie in (0, 1]");
  std::mt19937_64 rng(splitmix64(seed));
  constexpr int kMaxAttempts = 100000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<Edge> edges;
    for (Vertex u = 1; u <= d; ++u)
      for (Vertex v = u + 1; v <= d; ++v)
        if (unit_interval(rng) < p) edges.push_back({u, v});
    SimpleGraph g(d, std::move(edges));
    if (is_connected(g)) return g;
  }
  throw InputError("no connected sample after " + std::to_string(kMaxAttempts) + " attempts");
}

SimpleGraph generate_graph(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case GeneratorKind::complete:
      return complete_graph(spec.d);
    case GeneratorKind::cycle:
      return cycle_graph(spec.d);
    case GeneratorKind::path:
      return path_graph(spec.d);
    case GeneratorKind::complete_multipartite:
      return complete_multipartite_graph(PartSpec(spec.parts));
    case GeneratorKind::random_connected:
      return random_connected_graph(spec.d, spec.probability, spec.seed);
  }
  throw InputError("unknown generator kind");
}

namespace {

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::string current;
  for (char c : text) {
    if (c == sep) {
      out.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  out.push_back(current);
  return out;
}

long long parse_integer(const std::string& token, const char* what) {
  if (token.empty()) throw InputError(std::string("missing ") + what);
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(token, &used);
  } catch (const std::exception&) {
    throw InputError(std::string("invalid ") + what + " '" + token + "'");
  }
  if (used != token.size()) throw InputError(std::string("invalid ") + what + " '" + token + "'");
  return value;
}

int parse_size(const std::string& token, const char* what) {
  const long long v = parse_integer(token, what);
  if (v < 1 || v > 100000) throw InputError(std::string(what) + " must be a positive integer");
  return static_cast<int>(v);
}

}  // namespace

GeneratorSpec parse_generator_spec(std::string_view text) {
  const auto fields = split(text, ':');
  const std::string& kind = fields[0];
  GeneratorSpec spec;
  auto expect = [&](std::size_t n) {
    if (fields.size() != n)
      throw InputError("generator '" + kind + "' expects " + std::to_string(n - 1) + " parameter(s)");
  };
  if (kind == "complete" || kind == "cycle" || kind == "path") {
    expect(2);
    spec.kind = kind == "complete" ? GeneratorKind::complete
                : kind == "cycle"  ? GeneratorKind::cycle
                                   : GeneratorKind::path;
    spec.d = parse_size(fields[1], "vertex count");
  } else if (kind == "multipartite") {
    expect(2);
    spec.kind = GeneratorKind::complete_multipartite;
    for (const auto& s : split(fields[1], ',')) spec.parts.push_back(parse_size(s, "part size"));
    spec.d = PartSpec(spec.parts).vertex_count();
  } else if (kind == "random") {
    if (fields.size() != 3 && fields.size() != 4)
      throw InputError("generator 'random' expects d:p[:seed]");
    spec.kind = GeneratorKind::random_connected;
    spec.d = parse_size(fields[1], "vertex count");
    try {
      std::size_t used = 0;
      spec.probability = std::stod(fields[2], &used);
      if (used != fields[2].size() || !(spec.probability > 0.0 && spec.probability <= 1.0))
        throw InputError("bad probability");
    } catch (const std::exception&) {
      throw InputError("invalid probability '" + fields[2] + "'");
    }
    if (fields.size() == 4) {
      const long long seed = parse_integer(fields[3], "seed");
      if (seed < 0) throw InputError("seed must be non-negative");
      spec.seed = static_cast<std::uint64_t>(seed);
    }
  } else {
    throw InputError("unknown generator kind '" + kind + "'");
  }
  return spec;
}

std::optional<PartSpec> multipartite_parts(const SimpleGraph& g) {
  const int d = g.vertex_count();
  std::vector<int> part_of(d + 1, -1);
  std::vector<int> sizes;
  for (Vertex v = 1; v <= d; ++v) {
    if (part_of[v] >= 0) continue;
    const int p = static_cast<int>(sizes.size());
    sizes.push_back(0);
    for (Vertex u = v; u <= d; ++u) {
      if (part_of[u] < 0 && !g.adjacent(u, v)) {
        part_of[u] = p;
        ++sizes[p];
      }
    }
  }
  if (sizes.size() < 2) return std::nullopt;
  for (Vertex u = 1; u <= d; ++u)
    for (Vertex v = u + 1; v <= d; ++v)
      if (g.adjacent(u, v) != (part_of[u] != part_of[v])) return std::nullopt;
  return PartSpec(std::move(sizes));
}

bool is_connected(const SimpleGraph& g) {
  const int d = g.vertex_count();
  std::vector<char> seen(d + 1, 0);
  std::vector<Vertex> stack{1};
  seen[1] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == d;
}

std::optional<Bipartition> bipartition(const SimpleGraph& g) {
  if (!is_connected(g)) throw InputError("bipartition requires a connected graph");
  const int d = g.vertex_count();
  std::vector<int> color(d + 1, -1);
  std::deque<Vertex> queue{1};
  color[1] = 0;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(v)) {
      if (color[w] < 0) {
        color[w] = 1 - color[v];
        queue.push_back(w);
      } else if (color[w] == color[v]) {
        return std::nullopt;
      }
    }
  }
  Bipartition parts;
  for (Vertex v = 1; v <= d; ++v) (color[v] == 0 ? parts.left : parts.right).push_back(v);
  return parts;
}

// ---------------------------------------------------------------------------

std::string to_edge_list(const SimpleGraph& g) {
  std::ostringstream out;
  out << "d=" << g.vertex_count() << "\n";
  for (const auto& e : g.edges()) out << e.u << " " << e.v << "\n";
  return out.str();
}

}  // namespace edgepoly
