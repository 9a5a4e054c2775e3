#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

#include <json.hpp>

#include "edgepoly/graph.hpp"

namespace edgepoly {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<long long> to_integer(std::string_view token) {
  long long value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  if (!token.empty() && token.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) return std::nullopt;
  return value;
}

constexpr long long kMaxVertices = 100000;

// Shared checks for both formats; line is 0 when unknown.
struct EdgeCollector {
  std::vector<Edge> edges;
  std::set<Edge> seen;
  long long max_vertex = 0;

  void add(long long a, long long b, int line) {
    if (a < 1 || b < 1) throw ParseError(line, "vertex labels must be positive");
    if (a > kMaxVertices || b > kMaxVertices) throw ParseError(line, "vertex label too large");
    if (a == b) throw ParseError(line, "loop at vertex " + std::to_string(a));
    const Edge e = make_edge(static_cast<Vertex>(a), static_cast<Vertex>(b));
    if (!seen.insert(e).second) throw ParseError(line, "duplicate edge " + to_string(e));
    edges.push_back(e);
    max_vertex = std::max({max_vertex, a, b});
  }

  SimpleGraph finish(std::optional<long long> declared, int declared_line) {
    if (declared) {
      if (*declared < max_vertex)
        throw ParseError(declared_line, "declared d=" + std::to_string(*declared) +
                                            " but vertex " + std::to_string(max_vertex) +
                                            " is used");
      return SimpleGraph(static_cast<int>(*declared), std::move(edges));
    }
    if (max_vertex == 0) throw ParseError(1, "graph has no edges and no d=<n> header");
    return SimpleGraph(static_cast<int>(max_vertex), std::move(edges));
  }
};

SimpleGraph parse_edge_list(std::string_view text) {
  EdgeCollector collector;
  std::optional<long long> declared;
  int declared_line = 0;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == 'd') {
      auto rest = trim(line.substr(1));
      if (rest.empty() || rest.front() != '=') throw ParseError(line_no, "malformed header");
      auto value = to_integer(trim(rest.substr(1)));
      if (!value || *value < 1 || *value > kMaxVertices)
        throw ParseError(line_no, "header needs a positive vertex count");
      if (declared) throw ParseError(line_no, "repeated d=<n> header");
      declared = *value;
      declared_line = line_no;
      continue;
    }

    const auto parts = tokens(line);
    if (parts.size() != 2) throw ParseError(line_no, "expected two vertex labels");
    const auto a = to_integer(parts[0]);
    const auto b = to_integer(parts[1]);
    if (!a || !b) throw ParseError(line_no, "vertex labels must be integers");
    collector.add(*a, *b, line_no);
  }
  return collector.finish(declared, declared_line);
}

int line_of_offset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<long>(offset), '\n'));
}

SimpleGraph parse_structured(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(line_of_offset(text, e.byte > 0 ? e.byte - 1 : 0), "malformed JSON");
  }
  if (!doc.is_object() || !doc.contains("edges") || !doc["edges"].is_array())
    throw ParseError(1, "structured graph needs an \"edges\" array");
  EdgeCollector collector;
  for (const auto& item : doc["edges"]) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
        !item[1].is_number_integer())
      throw ParseError(1, "each edge must be a pair of integers");
    collector.add(item[0].get<long long>(), item[1].get<long long>(), 1);
  }
  std::optional<long long> declared;
  if (doc.contains("d")) {
    if (!doc["d"].is_number_integer() || doc["d"].get<long long>() < 1 ||
        doc["d"].get<long long>() > kMaxVertices)
      throw ParseError(1, "\"d\" must be a positive integer");
    declared = doc["d"].get<long long>();
  }
  return collector.finish(declared, 1);
}

}  // namespace

SimpleGraph parse_graph(std::string_view text, GraphFormat format) {
  if (trim(text).empty()) throw ParseError(1, "empty input");
  if (format == GraphFormat::automatic)
    format = trim(text).front() == '{' ? GraphFormat::structured : GraphFormat::edge_list;
  return format == GraphFormat::structured ? parse_structured(text) : parse_edge_list(text);
}

}  // namespace edgepoly
