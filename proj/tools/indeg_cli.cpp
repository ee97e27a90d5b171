// Copyright 2026 The indeg Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Links only the public C interface.
#include <indeg/indeg.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

namespace {

struct GraphHandle {
  indeg_graph* g = nullptr;
  ~GraphHandle() { indeg_graph_free(g); }
};

struct OwnedString {
  char* s = nullptr;
  ~OwnedString() { indeg_string_free(s); }
};

int report_failure(indeg_status status) {
  std::cerr << "indeg: " << indeg_last_error() << "\n";
  return static_cast<int>(status);
}

std::string read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// A spec argument may name a file holding the spec.
std::string resolve_text(const std::string& arg) {
  std::error_code ec;
  if (!arg.empty() && std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    return read_all(in);
  }
  return arg;
}

indeg_status load(const std::string& input, GraphHandle& out) {
  if (input == "-") return indeg_graph_parse(read_all(std::cin).c_str(), &out.g);
  return indeg_graph_load(input.c_str(), &out.g);
}

int emit(indeg_status status, const OwnedString& report) {
  if (report.s != nullptr) std::cout << report.s << "\n";
  if (status != INDEG_OK) return report_failure(status);
  return 0;
}

struct Common {
  std::string input;
  std::string objective = "square";
  std::string mode;
  std::uint64_t seed = 0;
  std::uint64_t trials = 100;
  std::string tie = "lowest-id";
  std::string fixed;
  unsigned dp_cap = 0;

  indeg_options options() const {
    indeg_options o;
    indeg_options_init(&o);
    o.seed = seed;
    o.trials = trials;
    o.tie_break = tie.c_str();
    o.fixed_arcs = fixed.empty() ? nullptr : fixed.c_str();
    if (dp_cap != 0) o.dp_cap = dp_cap;
    return o;
  }
};

void add_solver_flags(CLI::App* cmd, Common& c) {
  cmd->add_option("--input", c.input, "graph file, '-' for stdin, or a name (k5, c6, p4, fig4, gk:3)")
      ->required();
  cmd->add_option("--objective", c.objective, "objective name or JSON spec (or a file holding one)")
      ->capture_default_str();
  cmd->add_option("--mode", c.mode,
                  "cyclic-flow, acyclic-exact, acyclic-greedy, smallest-last, slope, "
                  "combine-st, random, derandomized")
      ->required();
  cmd->add_option("--seed", c.seed)->capture_default_str();
  cmd->add_option("--trials", c.trials, "random mode")->capture_default_str();
  cmd->add_option("--tie", c.tie, "acyclic-greedy tie-break: lowest-id, random, worst")
      ->capture_default_str();
  cmd->add_option("--fixed", c.fixed, "cyclic-flow pre-oriented edges, edge:head,...");
  cmd->add_option("--dp-cap", c.dp_cap, "acyclic-exact vertex cap");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Indegree-objective orientations of multigraphs"};
  app.set_version_flag("--version", std::string(indeg_version()));
  app.require_subcommand(1);

  Common common;
  CLI::App* solve = app.add_subcommand("solve", "run a solver and print its report");
  add_solver_flags(solve, common);
  CLI::App* compare = app.add_subcommand("compare", "check a solver against the brute-force oracle");
  add_solver_flags(compare, common);
  unsigned repeat = 5;
  CLI::App* bench = app.add_subcommand("bench", "time repeated solver runs");
  add_solver_flags(bench, common);
  bench->add_option("--repeat", repeat)->capture_default_str();

  std::string regime = "cyclic";
  CLI::App* oracle = app.add_subcommand("oracle", "exhaustive optimum of a small instance");
  oracle->add_option("--input", common.input)->required();
  oracle->add_option("--objective", common.objective)->capture_default_str();
  oracle->add_option("--regime", regime)
      ->check(CLI::IsMember({"cyclic", "acyclic"}))
      ->capture_default_str();

  std::string family;
  unsigned k = 2;
  std::size_t n = 6, m = 8, jobs = 3, slots = 2;
  std::optional<unsigned> max_degree;
  bool simple = false, connected = false;
  std::string output, objective_out;
  CLI::App* generate = app.add_subcommand("generate", "write an instance in the graph text format");
  generate->add_option("--family", family)
      ->required()
      ->check(CLI::IsMember({"fig4", "gk", "random", "scheduling"}));
  generate->add_option("-k", k, "gk parameter")->capture_default_str();
  generate->add_option("-n", n, "random: vertices")->capture_default_str();
  generate->add_option("-m", m, "random: edges")->capture_default_str();
  generate->add_option("--seed", common.seed)->capture_default_str();
  generate->add_flag("--simple", simple, "random: no parallel edges");
  generate->add_flag("--connected", connected, "random: connected");
  generate->add_option("--max-degree", max_degree, "random: degree bound");
  generate->add_option("--jobs", jobs)->capture_default_str();
  generate->add_option("--slots", slots)->capture_default_str();
  generate->add_option("--output", output, "graph destination (default stdout)");
  generate->add_option("--objective-out", objective_out, "scheduling: objective destination");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : INDEG_PARSE_ERROR;
  }

  if (*generate) {
    std::ostringstream req;
    req << "{\"family\":\"" << family << "\",\"k\":" << k << ",\"n\":" << n << ",\"m\":" << m
        << ",\"seed\":" << common.seed << ",\"simple\":" << (simple ? "true" : "false")
        << ",\"connected\":" << (connected ? "true" : "false") << ",\"jobs\":" << jobs
        << ",\"slots\":" << slots;
    if (max_degree) req << ",\"max_degree\":" << *max_degree;
    req << "}";
    OwnedString text, obj;
    const indeg_status st = indeg_generate(req.str().c_str(), &text.s, &obj.s);
    if (st != INDEG_OK) return report_failure(st);
    if (output.empty()) {
      std::cout << text.s;
    } else {
      std::ofstream(output) << text.s;
    }
    if (obj.s != nullptr) {
      if (objective_out.empty()) {
        std::cerr << "objective: " << obj.s << "\n";
      } else {
        std::ofstream(objective_out) << obj.s << "\n";
      }
    }
    return 0;
  }

  GraphHandle graph;
  if (indeg_status st = load(common.input, graph); st != INDEG_OK) return report_failure(st);
  const std::string objective = resolve_text(common.objective);
  const indeg_options options = common.options();
  OwnedString report;
  indeg_status st = INDEG_INTERNAL;
  if (*solve) {
    st = indeg_solve(graph.g, objective.c_str(), common.mode.c_str(), &options, &report.s);
  } else if (*compare) {
    st = indeg_compare(graph.g, objective.c_str(), common.mode.c_str(), &options, &report.s);
  } else if (*bench) {
    st = indeg_bench(graph.g, objective.c_str(), common.mode.c_str(), &options, repeat, &report.s);
  } else if (*oracle) {
    st = indeg_oracle(graph.g, objective.c_str(), regime.c_str(), &report.s);
  }
  return emit(st, report);
}
