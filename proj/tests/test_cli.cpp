#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "cli.hpp"

#ifndef EDGEPOLY_TEST_DATA
#error "EDGEPOLY_TEST_DATA must name the test data directory"
#endif

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = edgepoly::cli::run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(EDGEPOLY_TEST_DATA) + "/" + name; }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("decompose count as json") {
  const Run r = run({"decompose", data("c4.txt"), "--count", "--json"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["count"] == 2);
}

TEST_CASE("decompose text output") {
  const Run w = run({"decompose", data("c4.txt")});
  CHECK(w.code == 0);
  CHECK(w.out.rfind("decomposable (type", 0) == 0);
  const Run e = run({"decompose", data("c4.txt"), "--enumerate"});
  CHECK(e.out.find("count: 2") != std::string::npos);
  CHECK(e.out.find("2: {") != std::string::npos);
  const Run none = run({"decompose", data("c4.txt"), "--mode", "type1"});
  CHECK(none.code == 0);
  CHECK(run({"decompose", data("c4.txt"), "--mode", "sideways"}).code == 2);
  CHECK(run({"decompose", data("c4.txt"), "--count", "--enumerate"}).code == 2);
}

TEST_CASE("normality certificate") {
  const Run r = run({"normal", data("twotri_path.txt")});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("not normal\n", 0) == 0);
  CHECK(r.out.find("(1,2,3)") != std::string::npos);
  CHECK(r.out.find("(5,6,7)") != std::string::npos);
  CHECK(run({"normal", data("twotri_bridge.txt"), "--exhaustive"}).out == "normal\n");
}

TEST_CASE("quadratic") {
  CHECK(run({"quadratic", data("c4.txt")}).out == "quadratic\n");
  const Run r = run({"quadratic", data("twotri_bridge.txt"), "--json", "--odd-chord-triples"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["quadratic"] == false);
  CHECK(j["violation"]["kind"] == "odd_pair_disjoint");
}

TEST_CASE("enumeration cap") {
  const Run r = run({"decompose", data("huge.txt"), "--enumerate"});
  CHECK(r.code == 4);
  CHECK(r.err.find("cap") != std::string::npos);
  CHECK(run({"decompose", data("huge.txt"), "--enumerate", "--max-enum-vertices", "10"}).code == 4);
  CHECK(run({"decompose", data("huge.txt")}).code == 0);
}

TEST_CASE("usage and input errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"info"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"info", data("missing.txt")}).code == 3);
  CHECK(run({"info", data("loop.txt")}).code == 3);
  CHECK(run({"verify"}).code == 2);
}

TEST_CASE("gen round trips through info") {
  const Run g = run({"gen", "multipartite:1,2,2"});
  CHECK(g.code == 0);
  CHECK(g.out.rfind("d=5\n", 0) == 0);
  const Run j = run({"gen", "cycle:5", "--json"});
  CHECK(nlohmann::json::parse(j.out)["edges"].size() == 5);
  CHECK(run({"gen", "wheel:4"}).code == 3);
}

TEST_CASE("info and polytope") {
  const Run i = run({"info", data("c4.txt"), "--json"});
  const auto j = nlohmann::json::parse(i.out);
  CHECK(j["bipartite"] == true);
  CHECK(j["has_four_cycle"] == true);
  const Run p = run({"polytope", data("k4.txt"), "--list"});
  CHECK(p.out.find("polytope edges: 12") != std::string::npos);
  CHECK(p.out.find("dimension: 3") != std::string::npos);
}

TEST_CASE("verify a graph and a corpus") {
  const Run k4 = run({"verify", data("k4.txt"), "--json"});
  const auto j = nlohmann::json::parse(k4.out);
  CHECK(j["decomposition_count"] == 3);
  CHECK(j["multipartite"]["delta"] == 0);
  CHECK(j["violations"].empty());
  const Run c = run({"verify", "--random", "20", "--max-d", "7", "--multipartite", "5", "--json"});
  CHECK(c.code == 0);
  CHECK(nlohmann::json::parse(c.out)["violations"] == 0);
  CHECK(run({"verify", "--corpus", data("corpus.json")}).code == 0);
}

}  // TEST_SUITE
