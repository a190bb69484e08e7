// gpgraph: build groups, emit (generalized) power graphs, run the checks.
//
// Exit codes: 0 ok, 1 verify found counterexamples under punctured,
// 2 bad input or I/O failure.

#include <fstream>
#include <iostream>
#include <sstream>

#include <omp.h>

#include "CLI11.hpp"
#include "gpg/catalog.hpp"
#include "gpg/planarity.hpp"
#include "gpg/powergraph.hpp"
#include "gpg/verify.hpp"

using namespace gpg;

namespace {

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Io, "cannot open " + path + " for writing");
  out << text;
  if (!out) throw Error(ErrorKind::Io, "write to " + path + " failed");
}

std::vector<VertexConvention> parse_conventions(const std::string& text) {
  std::vector<VertexConvention> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) out.push_back(parse_convention(item));
  }
  if (out.empty()) throw Error(ErrorKind::Parse, "no conventions given");
  return out;
}

int cmd_check(const FiniteGroup& g, const GroupSpec& spec, VertexConvention c) {
  const SimpleGraph gp = generalized_power_graph(g, c);
  const auto components = connected_components(gp);
  std::size_t complete_components = 0;
  for (const auto& comp : components) {
    if (is_complete(induced_subgraph(gp, comp))) ++complete_components;
  }
  const auto verdict = is_planar(gp);

  std::cout << "group       " << spec.name() << " (" << spec.to_text() << ")\n";
  std::cout << "order       " << g.order() << (g.is_abelian() ? ", abelian" : ", non-abelian")
            << (g.is_cyclic() ? ", cyclic" : "") << ", exponent " << g.exponent() << "\n";
  std::cout << "convention  " << to_string(c) << "\n";
  std::cout << "vertices    " << gp.vertex_count() << "\n";
  std::cout << "edges       " << gp.edge_count() << "\n";
  std::cout << "complete    " << (is_complete(gp) ? "yes" : "no") << "\n";
  std::cout << "components  " << components.size() << " (" << complete_components << " complete)\n";
  if (const auto p = g.p_group_prime()) {
    std::cout << "order-" << *p << " subgroups  " << g.subgroups_of_order_p(*p).size() << "\n";
  }
  std::cout << "planar      " << (verdict.planar ? "yes" : "no") << " [" << to_string(verdict.method) << "]";
  if (verdict.witness) {
    std::cout << " K5 on {";
    for (std::size_t i = 0; i < verdict.witness->size(); ++i) {
      std::cout << (i ? "," : "") << gp.label((*verdict.witness)[i]);
    }
    std::cout << "}";
  }
  std::cout << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized power graphs of finite groups"};
  app.require_subcommand(1);

  bool trust = false;
  app.add_flag("--trust", trust, "skip associativity checks on large table files");

  auto* group = app.add_subcommand("group", "group tables");
  group->require_subcommand(1);
  auto* group_build = group->add_subcommand("build", "construct a group and print its Cayley table");
  std::string build_spec, build_out;
  group_build->add_option("spec", build_spec, "group spec, e.g. dihedral:4")->required();
  group_build->add_option("--out", build_out, "write the table here instead of stdout");

  auto* graph = app.add_subcommand("graph", "emit a graph on the group");
  graph->require_subcommand(1);
  std::string graph_spec, graph_convention = "punctured", dot_path, edges_path;
  for (const char* kind : {"gp", "pg"}) {
    auto* sub = graph->add_subcommand(kind, std::string(kind) == "gp" ? "generalized power graph" : "power graph");
    sub->add_option("spec", graph_spec, "group spec")->required();
    sub->add_option("--convention", graph_convention, "strict|strict-id|punctured|full")
        ->capture_default_str();
    sub->add_option("--dot", dot_path, "write DOT here");
    sub->add_option("--edges", edges_path, "write an edge list here");
  }

  auto* check = app.add_subcommand("check", "completeness, components and planarity for one group");
  std::string check_spec, check_convention = "punctured";
  check->add_option("spec", check_spec, "group spec")->required();
  check->add_option("--convention", check_convention, "strict|strict-id|punctured|full")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "run every check over the catalog");
  std::uint64_t max_order = 64;
  std::string conventions_text = "strict,punctured", json_path;
  int threads = 0;
  bool no_dedupe = false, timings = false;
  verify->add_option("--max-order", max_order, "order bound")->capture_default_str()->check(CLI::Range(2, 4096));
  verify->add_option("--conventions", conventions_text, "comma separated")->capture_default_str();
  verify->add_option("--json", json_path, "write the JSON report here (- for stdout)");
  verify->add_option("--threads", threads, "OpenMP threads (0 = runtime default)")->check(CLI::NonNegativeNumber);
  verify->add_flag("--no-dedupe", no_dedupe, "keep fingerprint-equal catalog entries");
  verify->add_flag("--timings", timings, "include runtime_ms in the JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const BuildOptions build_options{trust};

    if (group_build->parsed()) {
      const FiniteGroup g = build(GroupSpec::parse(build_spec), build_options);
      std::ostringstream text;
      write_cayley_table(text, g);
      if (build_out.empty()) {
        std::cout << text.str();
      } else {
        write_file(build_out, text.str());
      }
      return 0;
    }

    if (graph->parsed()) {
      const GroupSpec spec = GroupSpec::parse(graph_spec);
      const VertexConvention c = parse_convention(graph_convention);
      const FiniteGroup g = build(spec, build_options);
      const bool power = graph->get_subcommand("pg")->parsed();
      const SimpleGraph out = power ? power_graph(g, c) : generalized_power_graph(g, c);
      if (!dot_path.empty()) write_file(dot_path, to_dot(out));
      if (!edges_path.empty()) write_file(edges_path, to_edge_list(out));
      if (dot_path.empty() && edges_path.empty()) std::cout << to_dot(out);
      return 0;
    }

    if (check->parsed()) {
      const GroupSpec spec = GroupSpec::parse(check_spec);
      return cmd_check(build(spec, build_options), spec, parse_convention(check_convention));
    }

    if (verify->parsed()) {
      if (threads > 0) omp_set_num_threads(threads);
      const auto conventions = parse_conventions(conventions_text);
      const auto reports = run_all(max_order, conventions, CatalogOptions{!no_dedupe});
      const std::string json = reports_to_json(reports, JsonOptions{timings, 2});
      if (json_path == "-") {
        std::cout << json;
      } else {
        if (!json_path.empty()) write_file(json_path, json);
        for (const auto& r : reports) {
          std::cout << std::left << std::setw(13) << to_string(r.theorem) << std::setw(10) << to_string(r.convention)
                    << std::setw(22) << to_string(r.verdict) << " groups=" << r.groups_tested;
          if (!r.counterexamples.empty()) std::cout << " counterexamples=" << r.counterexamples.size();
          if (!r.discrepancies.empty()) std::cout << " discrepancies=" << r.discrepancies.size();
          std::cout << "\n";
        }
      }
      return has_punctured_counterexamples(reports) ? 1 : 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
