#include <doctest.h>

#include <json.hpp>
#include <string>

#include "edgepoly/edgepoly.h"

namespace {

struct Graph {
  ep_graph* g = nullptr;
  explicit Graph(const char* text) { REQUIRE(ep_graph_parse(text, &g) == EP_OK); }
  ~Graph() { ep_graph_free(g); }
};

nlohmann::json take_json(char* s) {
  auto j = nlohmann::json::parse(s);
  ep_string_free(s);
  return j;
}

}  // namespace

TEST_SUITE("capi") {

TEST_CASE("graph handles") {
  Graph sq("1 2\n2 3\n3 4\n4 1\n");
  CHECK(ep_graph_vertex_count(sq.g) == 4);
  CHECK(ep_graph_edge_count(sq.g) == 4);
  CHECK(ep_graph_is_connected(sq.g) == 1);
  int u = 0, v = 0;
  CHECK(ep_graph_edge(sq.g, 0, &u, &v) == EP_OK);
  CHECK(u == 1);
  CHECK(v == 2);
  CHECK(ep_graph_edge(sq.g, 9, &u, &v) == EP_ERR_USAGE);
  char* text = nullptr;
  REQUIRE(ep_graph_to_edge_list(sq.g, &text) == EP_OK);
  CHECK(std::string(text).find("1 2") != std::string::npos);
  ep_string_free(text);
}

TEST_CASE("errors map to status codes") {
  ep_graph* g = nullptr;
  CHECK(ep_graph_parse("1 1\n", &g) == EP_ERR_INPUT);
  CHECK(g == nullptr);
  CHECK(std::string(ep_last_error()).find("line 1") != std::string::npos);
  CHECK(ep_graph_parse(nullptr, &g) == EP_ERR_USAGE);
  CHECK(ep_graph_load("/nonexistent/graph.txt", &g) == EP_ERR_INPUT);
  CHECK(ep_graph_generate("bogus", &g) == EP_ERR_INPUT);

  REQUIRE(ep_graph_generate("complete:16", &g) == EP_OK);
  ep_options opt;
  ep_options_init(&opt);
  uint64_t count = 0;
  CHECK(ep_count_decompositions(g, &opt, &count) == EP_ERR_CAP);
  char* out = nullptr;
  CHECK(ep_decompose_json(g, EP_MODE_ANY, EP_OUTPUT_ENUMERATE, &opt, &out) == EP_ERR_CAP);
  CHECK(out == nullptr);
  ep_graph_free(g);
}

TEST_CASE("direct queries") {
  Graph k4("1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n");
  int yes = -1;
  CHECK(ep_is_decomposable(k4.g, EP_MODE_TYPE1, &yes) == EP_OK);
  CHECK(yes == 1);
  CHECK(ep_is_decomposable(k4.g, EP_MODE_TYPE2, &yes) == EP_OK);
  CHECK(yes == 0);
  uint64_t count = 0;
  CHECK(ep_count_decompositions(k4.g, nullptr, &count) == EP_OK);
  CHECK(count == 3);
  const int parts[] = {2, 2};
  int64_t value = 0;
  CHECK(ep_multipartite_formula(parts, 2, &value) == EP_OK);
  CHECK(value == 1);
  const int w[] = {1, 1, -1, -1};
  int accepted = -1;
  CHECK(ep_validate_weights(k4.g, w, 4, &accepted) == EP_OK);
  CHECK(accepted == 1);
  CHECK(ep_validate_weights(k4.g, w, 3, &accepted) == EP_ERR_INPUT);
}

TEST_CASE("json documents") {
  Graph sq("1 2\n2 3\n3 4\n4 1\n");
  char* out = nullptr;
  REQUIRE(ep_decompose_json(sq.g, EP_MODE_ANY, EP_OUTPUT_COUNT, nullptr, &out) == EP_OK);
  const auto count = take_json(out);
  CHECK(count["schema_version"] == EP_SCHEMA_VERSION);
  CHECK(count["count"] == 2);

  REQUIRE(ep_decompose_json(sq.g, EP_MODE_TYPE2, EP_OUTPUT_WITNESS, nullptr, &out) == EP_OK);
  const auto witness = take_json(out);
  CHECK(witness["decomposable"] == true);
  CHECK(witness["type"] == "II");

  REQUIRE(ep_polytope_json(sq.g, nullptr, &out) == EP_OK);
  const auto poly = take_json(out);
  CHECK(poly["polytope_edges"] == 4);
  CHECK(poly["dimension"] == 2);

  REQUIRE(ep_verify_json(sq.g, nullptr, &out) == EP_OK);
  const auto report = take_json(out);
  CHECK(report["violations"].empty());
  CHECK(report["multipartite"]["delta"] == 1);
}

TEST_CASE("corpus json is byte-stable") {
  const char* spec = R"({"random": {"count": 25, "max_vertices": 7}, "multipartite": {"max_vertices": 5}})";
  char* a = nullptr;
  char* b = nullptr;
  REQUIRE(ep_corpus_verify_json(spec, nullptr, &a) == EP_OK);
  ep_options opt;
  ep_options_init(&opt);
  opt.threads = 3;
  REQUIRE(ep_corpus_verify_json(spec, &opt, &b) == EP_OK);
  CHECK(std::string(a) == std::string(b));
  ep_string_free(a);
  ep_string_free(b);
  char* bad = nullptr;
  CHECK(ep_corpus_verify_json("{\"random\": {\"count\": -1}}", nullptr, &bad) == EP_ERR_INPUT);
  CHECK(ep_corpus_verify_json("not json", nullptr, &bad) == EP_ERR_INPUT);
}

}  // TEST_SUITE
