#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "edgepoly/edgepoly.h"

namespace edgepoly::cli {
namespace {

using nlohmann::json;

struct GraphDeleter {
  void operator()(ep_graph* g) const { ep_graph_free(g); }
};
using GraphHandle = std::unique_ptr<ep_graph, GraphDeleter>;

// Thrown to unwind with an ep_status as exit code.
struct Failure {
  ep_status status;
  std::string message;
};

void check(ep_status status) {
  if (status != EP_OK) throw Failure{status, ep_last_error()};
}

GraphHandle load_graph(const std::string& path) {
  ep_graph* raw = nullptr;
  if (path == "-") {
    std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    check(ep_graph_parse(text.c_str(), &raw));
  } else {
    check(ep_graph_load(path.c_str(), &raw));
  }
  return GraphHandle(raw);
}

// Takes ownership of a string returned by the C API.
std::string take(char* s) {
  std::string out(s);
  ep_string_free(s);
  return out;
}

std::string edge_text(const json& e) {
  return "(" + std::to_string(e[0].get<int>()) + "," + std::to_string(e[1].get<int>()) + ")";
}

std::string edges_text(const json& edges) {
  std::string out;
  for (const auto& e : edges) out += (out.empty() ? "" : " ") + edge_text(e);
  return out;
}

std::string seq_text(const json& seq) {
  std::string out = "(";
  for (std::size_t i = 0; i < seq.size(); ++i) out += (i ? "," : "") + seq[i].dump();
  return out + ")";
}

std::string yes_no(const json& b) {
  if (b.is_null()) return "n/a";
  return b.get<bool>() ? "yes" : "no";
}

std::string counts_text(const json& obj, const std::string& indent) {
  std::string out;
  for (const auto& [k, v] : obj.items()) out += indent + k + ": " + v.dump() + "\n";
  return out;
}

// Text renderers, one per report kind.

void render_info(const json& j, std::ostream& out) {
  out << "vertices: " << j["vertices"] << "\n"
      << "edges: " << j["edges"] << "\n"
      << "connected: " << yes_no(j["connected"]) << "\n"
      << "bipartite: " << yes_no(j["bipartite"]) << "\n"
      << "four-cycle: " << yes_no(j["has_four_cycle"]) << "\n";
  if (!j["multipartite_parts"].is_null()) out << "complete multipartite: " << seq_text(j["multipartite_parts"]) << "\n";
}

void render_polytope(const json& j, std::ostream& out) {
  out << "polytope vertices: " << j["polytope_vertices"] << "\n"
      << "polytope edges: " << j["polytope_edges"] << "\n"
      << "cycle-compatible pairs: " << j["cycle_compatible_pairs"] << "\n"
      << "dimension: " << j["dimension"] << "\n";
  if (j.contains("edge_pairs"))
    for (const auto& p : j["edge_pairs"]) out << "  " << edge_text(p[0]) << " -- " << edge_text(p[1]) << "\n";
}

void render_decompose(const json& j, std::ostream& out) {
  if (j.contains("count")) {
    out << "count: " << j["count"] << "\n";
    if (j.contains("decompositions")) {
      int i = 0;
      for (const auto& d : j["decompositions"])
        out << ++i << ": {" << edges_text(d["first"]) << "} | {" << edges_text(d["second"]) << "}\n";
    }
    return;
  }
  if (!j["decomposable"].get<bool>()) {
    out << "not decomposable\n";
    return;
  }
  out << "decomposable (type " << j["type"].get<std::string>() << ")\n"
      << "weights: " << seq_text(j["weights"]) << "\n"
      << "E+: " << edges_text(j["e_plus"]) << "\n"
      << "E-: " << edges_text(j["e_minus"]) << "\n";
}

void render_normal(const json& j, std::ostream& out) {
  if (j["normal"].get<bool>()) {
    out << "normal\n";
    return;
  }
  const auto& cycles = j["violation"]["cycles"];
  out << "not normal\n"
      << "certificate: odd cycles " << seq_text(cycles[0]) << " and " << seq_text(cycles[1])
      << " are vertex-disjoint with no edge between them\n";
}

void render_quadratic(const json& j, std::ostream& out) {
  if (j["quadratic"].get<bool>()) {
    out << "quadratic\n";
    return;
  }
  const auto& v = j["violation"];
  const auto kind = v["kind"].get<std::string>();
  out << "not quadratic\n";
  if (kind == "even_cycle") {
    out << "certificate: even cycle " << seq_text(v["cycles"][0])
        << " has neither an even chord nor an odd-triple\n";
  } else if (kind == "odd_pair_one_node") {
    out << "certificate: odd cycles " << seq_text(v["cycles"][0]) << " and " << seq_text(v["cycles"][1])
        << " share only vertex " << v["shared_vertex"] << " and no bridge avoids it\n";
  } else {
    out << "certificate: disjoint odd cycles " << seq_text(v["cycles"][0]) << " and "
        << seq_text(v["cycles"][1]) << " have fewer than two bridges\n";
  }
}

void render_verify(const json& j, std::ostream& out) {
  out << "vertices: " << j["vertices"] << ", edges: " << j["edges"] << "\n"
      << "decomposable: " << yes_no(j["decomposable"]) << " (search: " << yes_no(j["search"]["any"]) << ")\n"
      << "decompositions: " << j["decomposition_count"] << "\n"
      << "normal: " << yes_no(j["normal"]) << ", quadratic: " << yes_no(j["quadratic"]) << "\n";
  if (!j["multipartite"].is_null())
    out << "multipartite " << seq_text(j["multipartite"]["parts"]) << ": formula " << j["multipartite"]["formula"]
        << ", delta " << j["multipartite"]["delta"] << "\n";
  if (!j["quadratic_patterns"].empty()) out << "quadratic patterns:\n" << counts_text(j["quadratic_patterns"], "  ");
  out << "violated claims: " << j["violations"].size() << "\n";
  for (const auto& v : j["violations"])
    out << "  " << v["claim"].get<std::string>() << ": " << v["detail"].get<std::string>() << "\n";
}

void render_corpus(const json& j, std::ostream& out) {
  out << "graphs: " << j["graphs"] << " (failures: " << j["failures"] << ")\n"
      << "decomposable: " << j["decomposable"] << ", decompositions: " << j["decompositions"] << "\n"
      << "search/enumeration disagreements: " << j["search_disagreements"] << "\n"
      << "violated claims: " << j["violations"] << "\n";
  if (!j["violations_by_claim"].empty()) out << counts_text(j["violations_by_claim"], "  ");
  out << "quadratic patterns:\n" << counts_text(j["quadratic_patterns"], "  ");
  out << "normality patterns:\n" << counts_text(j["normality_patterns"], "  ");
  out << "quadratic converse instances: " << j["quadratic_converse_instances"] << "\n";
  for (const auto& r : j["results"]) {
    if (r.contains("error")) out << "  " << r["name"].get<std::string>() << ": error: " << r["error"].get<std::string>() << "\n";
    else if (!r["violations"].empty()) out << "  " << r["name"].get<std::string>() << ": " << r["violations"].size() << " violation(s)\n";
  }
}

void print(const std::string& doc, bool as_json, void (*render)(const json&, std::ostream&),
           std::ostream& out) {
  if (as_json)
    out << doc;
  else
    render(json::parse(doc), out);
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decompositions of edge polytopes of graphs", "edgepoly"};
  app.require_subcommand(1);

  ep_options options;
  ep_options_init(&options);
  bool as_json = false;
  std::string file;

  auto add_common = [&](CLI::App* sub, bool needs_file) {
    if (needs_file) sub->add_option("file", file, "Graph file (edge list or JSON), '-' for stdin")->required();
    sub->add_flag("--json", as_json, "Machine-readable output");
    sub->add_option("--max-cycle-vertices", options.max_cycle_vertices, "Cycle enumeration cap");
    sub->add_option("--max-enum-vertices", options.max_enum_vertices, "Weight enumeration cap");
  };

  auto* info = app.add_subcommand("info", "Graph summary");
  add_common(info, true);

  std::string gen_spec;
  auto* gen = app.add_subcommand("gen", "Generate a graph: complete:N, cycle:N, path:N, multipartite:A,B,..., random:N:P[:SEED]");
  gen->add_option("spec", gen_spec, "Generator spec")->required();
  gen->add_flag("--json", as_json, "Emit the structured JSON format");

  auto* poly = app.add_subcommand("polytope", "Edge polytope: vertices, edges, dimension");
  add_common(poly, true);
  bool list_edges = false;
  poly->add_flag("--list", list_edges, "List every polytope edge");

  auto* dec = app.add_subcommand("decompose", "Separating hyperplanes");
  add_common(dec, true);
  std::string mode = "any";
  dec->add_option("--mode", mode, "any | type1 | type2")->check(CLI::IsMember({"any", "type1", "type2"}));
  bool want_witness = false, want_enumerate = false, want_count = false;
  auto* w_opt = dec->add_flag("--witness", want_witness, "Search for one decomposition (default)");
  auto* e_opt = dec->add_flag("--enumerate", want_enumerate, "List all decompositions");
  auto* c_opt = dec->add_flag("--count", want_count, "Count all decompositions");
  w_opt->excludes(e_opt)->excludes(c_opt);
  e_opt->excludes(c_opt);

  auto* normal = app.add_subcommand("normal", "Odd cycle condition");
  add_common(normal, true);
  bool exhaustive = false, witness_flag = false;
  normal->add_flag("--witness", witness_flag, "Print the violating cycle pair (always shown)");
  normal->add_flag("--exhaustive", exhaustive, "Check every simple odd cycle, not only chordless ones");

  auto* quad = app.add_subcommand("quadratic", "Quadratic toric ideal criterion");
  add_common(quad, true);
  bool odd_triples = false;
  quad->add_flag("--witness", witness_flag, "Print the failing certificate (always shown)");
  quad->add_flag("--odd-chord-triples", odd_triples, "Draw odd-triples from odd chords only");

  auto* verify = app.add_subcommand("verify", "Check the structural claims on a graph or a generated corpus");
  verify->add_option("file", file, "Graph file; omit to run a corpus");
  verify->add_flag("--json", as_json, "Machine-readable output");
  verify->add_option("--max-cycle-vertices", options.max_cycle_vertices, "Cycle enumeration cap");
  verify->add_option("--max-enum-vertices", options.max_enum_vertices, "Weight enumeration cap");
  std::string corpus_file;
  verify->add_option("--corpus", corpus_file, "Corpus spec JSON file");
  int random_count = -1, min_d = 4, max_d = 9, mp_min_parts = 2, mp_max_d = -1;
  std::uint64_t seed = 7;
  verify->add_option("--random", random_count, "Number of random connected graphs");
  verify->add_option("--min-d", min_d, "Smallest random vertex count");
  verify->add_option("--max-d", max_d, "Largest random vertex count");
  verify->add_option("--seed", seed, "Corpus seed");
  verify->add_option("--multipartite", mp_max_d, "Add every complete multipartite graph up to this many vertices");
  verify->add_option("--min-parts", mp_min_parts, "Fewest parts for --multipartite");
  verify->add_option("--threads", options.threads, "Worker threads (0: all cores)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : EP_ERR_USAGE;
  }

  try {
    if (gen->parsed()) {
      ep_graph* raw = nullptr;
      check(ep_graph_generate(gen_spec.c_str(), &raw));
      GraphHandle g(raw);
      if (as_json) {
        json doc{{"d", ep_graph_vertex_count(g.get())}, {"edges", json::array()}};
        for (std::size_t i = 0; i < ep_graph_edge_count(g.get()); ++i) {
          int u = 0, v = 0;
          check(ep_graph_edge(g.get(), i, &u, &v));
          doc["edges"].push_back({u, v});
        }
        out << doc.dump() << "\n";
      } else {
        char* text = nullptr;
        check(ep_graph_to_edge_list(g.get(), &text));
        out << take(text);
      }
      return 0;
    }

    if (verify->parsed() && file.empty()) {
      json spec = json::object();
      if (!corpus_file.empty()) {
        std::ifstream in(corpus_file);
        if (!in) throw Failure{EP_ERR_INPUT, "cannot open " + corpus_file};
        try {
          spec = json::parse(in);
        } catch (const json::parse_error& e) {
          throw Failure{EP_ERR_INPUT, std::string("corpus spec: ") + e.what()};
        }
      }
      if (random_count >= 0)
        spec["random"] = {{"count", random_count}, {"min_vertices", min_d}, {"max_vertices", max_d}, {"seed", seed}};
      if (mp_max_d >= 0) spec["multipartite"] = {{"max_vertices", mp_max_d}, {"min_parts", mp_min_parts}};
      if (spec.empty()) {
        err << "verify: give a graph file, --corpus, --random or --multipartite\n";
        return EP_ERR_USAGE;
      }
      char* doc = nullptr;
      check(ep_corpus_verify_json(spec.dump().c_str(), &options, &doc));
      print(take(doc), as_json, render_corpus, out);
      return 0;
    }

    GraphHandle g = load_graph(file);
    char* doc = nullptr;
    if (info->parsed()) {
      check(ep_info_json(g.get(), &doc));
      print(take(doc), as_json, render_info, out);
    } else if (poly->parsed()) {
      options.list_polytope_edges = list_edges ? 1 : 0;
      check(ep_polytope_json(g.get(), &options, &doc));
      print(take(doc), as_json, render_polytope, out);
    } else if (dec->parsed()) {
      const ep_search_mode m = mode == "type1" ? EP_MODE_TYPE1 : mode == "type2" ? EP_MODE_TYPE2 : EP_MODE_ANY;
      const ep_decompose_output o = want_enumerate ? EP_OUTPUT_ENUMERATE : want_count ? EP_OUTPUT_COUNT : EP_OUTPUT_WITNESS;
      check(ep_decompose_json(g.get(), m, o, &options, &doc));
      print(take(doc), as_json, render_decompose, out);
    } else if (normal->parsed()) {
      options.exhaustive_normality = exhaustive ? 1 : 0;
      check(ep_normal_json(g.get(), &options, &doc));
      print(take(doc), as_json, render_normal, out);
    } else if (quad->parsed()) {
      options.odd_chord_triples = odd_triples ? 1 : 0;
      check(ep_quadratic_json(g.get(), &options, &doc));
      print(take(doc), as_json, render_quadratic, out);
    } else if (verify->parsed()) {
      check(ep_verify_json(g.get(), &options, &doc));
      print(take(doc), as_json, render_verify, out);
    }
    return 0;
  } catch (const Failure& f) {
    err << "edgepoly: " << f.message << "\n";
    return f.status;
  }
}

}  // namespace edgepoly::cli
