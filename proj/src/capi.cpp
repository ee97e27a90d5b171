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

#include "indeg/indeg.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "errors.hpp"
#include "service.hpp"

struct indeg_graph {
  indeg::Multigraph graph;
};

namespace {

thread_local std::string g_last_error;

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

indeg_status fail(indeg_status status, const char* what) {
  g_last_error = what;
  return status;
}

// Maps exceptions from the core onto status codes.
template <class F>
indeg_status guarded(F&& body) {
  try {
    g_last_error.clear();
    return body();
  } catch (const indeg::InvalidInput& e) {
    return fail(INDEG_PARSE_ERROR, e.what());
  } catch (const indeg::PreconditionError& e) {
    return fail(INDEG_PRECONDITION, e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(INDEG_PARSE_ERROR, e.what());
  } catch (const std::exception& e) {
    return fail(INDEG_INTERNAL, e.what());
  } catch (...) {
    return fail(INDEG_INTERNAL, "unknown failure");
  }
}

indeg::SolveOptions convert(const indeg_options* options) {
  indeg::SolveOptions out;
  if (options == nullptr) return out;
  out.seed = options->seed;
  out.trials = options->trials;
  if (options->tie_break != nullptr) out.tie_break = options->tie_break;
  if (options->fixed_arcs != nullptr && *options->fixed_arcs != '\0') {
    out.fixed = indeg::parse_fixed_arcs(options->fixed_arcs);
  }
  out.dp_cap = options->dp_cap;
  return out;
}

indeg_status emit(const indeg::Json& doc, char** out) {
  *out = duplicate(doc.dump());
  return INDEG_OK;
}

indeg_status make_graph(indeg::Multigraph g, indeg_graph** out) {
  *out = new indeg_graph{std::move(g)};
  return INDEG_OK;
}

#define INDEG_REQUIRE(cond)                                          \
  do {                                                               \
    if (!(cond)) return fail(INDEG_INVALID_ARGUMENT, "null argument: " #cond); \
  } while (0)

}  // namespace

extern "C" {

void indeg_options_init(indeg_options* options) {
  if (options == nullptr) return;
  options->seed = 0;
  options->trials = 100;
  options->tie_break = "lowest-id";
  options->fixed_arcs = nullptr;
  options->dp_cap = indeg::kDefaultDpCap;
}

const char* indeg_version(void) { return INDEG_VERSION_STRING; }

const char* indeg_last_error(void) { return g_last_error.c_str(); }

void indeg_string_free(char* s) { std::free(s); }

indeg_status indeg_graph_parse(const char* text, indeg_graph** out) {
  INDEG_REQUIRE(text != nullptr && out != nullptr);
  return guarded([&] { return make_graph(indeg::parse_graph(text), out); });
}

indeg_status indeg_graph_named(const char* name, indeg_graph** out) {
  INDEG_REQUIRE(name != nullptr && out != nullptr);
  return guarded([&] {
    auto g = indeg::named_graph(name);
    if (!g) return fail(INDEG_INVALID_ARGUMENT, (std::string("unknown graph name ") + name).c_str());
    return make_graph(std::move(*g), out);
  });
}

indeg_status indeg_graph_load(const char* path_or_name, indeg_graph** out) {
  INDEG_REQUIRE(path_or_name != nullptr && out != nullptr);
  return guarded([&] { return make_graph(indeg::load_graph(path_or_name), out); });
}

indeg_status indeg_graph_from_edges(size_t n, size_t m, const uint32_t* endpoints,
                                    int allow_loops, indeg_graph** out) {
  INDEG_REQUIRE(out != nullptr && (m == 0 || endpoints != nullptr));
  return guarded([&] {
    std::vector<indeg::Edge> edges;
    edges.reserve(m);
    for (size_t i = 0; i < m; ++i) edges.push_back({endpoints[2 * i], endpoints[2 * i + 1]});
    return make_graph(indeg::Multigraph::build(n, std::move(edges), std::nullopt, allow_loops != 0),
                      out);
  });
}

void indeg_graph_free(indeg_graph* graph) { delete graph; }

size_t indeg_graph_vertex_count(const indeg_graph* graph) {
  return graph == nullptr ? 0 : graph->graph.vertex_count();
}

size_t indeg_graph_edge_count(const indeg_graph* graph) {
  return graph == nullptr ? 0 : graph->graph.edge_count();
}

indeg_status indeg_graph_to_text(const indeg_graph* graph, char** out) {
  INDEG_REQUIRE(graph != nullptr && out != nullptr);
  return guarded([&] {
    *out = duplicate(indeg::graph_to_text(graph->graph));
    return INDEG_OK;
  });
}

indeg_status indeg_solve(const indeg_graph* graph, const char* objective, const char* mode,
                         const indeg_options* options, char** report) {
  INDEG_REQUIRE(graph != nullptr && objective != nullptr && mode != nullptr && report != nullptr);
  return guarded([&] {
    return emit(indeg::solve(graph->graph, indeg::parse_objective(objective), mode, convert(options)),
                report);
  });
}

indeg_status indeg_oracle(const indeg_graph* graph, const char* objective, const char* regime,
                          char** report) {
  INDEG_REQUIRE(graph != nullptr && objective != nullptr && regime != nullptr && report != nullptr);
  return guarded([&] {
    return emit(indeg::oracle(graph->graph, indeg::parse_objective(objective), regime), report);
  });
}

indeg_status indeg_compare(const indeg_graph* graph, const char* objective, const char* mode,
                           const indeg_options* options, char** report) {
  INDEG_REQUIRE(graph != nullptr && objective != nullptr && mode != nullptr && report != nullptr);
  return guarded([&] {
    indeg::CompareResult r =
        indeg::compare(graph->graph, indeg::parse_objective(objective), mode, convert(options));
    emit(r.report, report);
    if (!r.agree) return fail(INDEG_MISMATCH, "solver result fails its check against the oracle");
    return INDEG_OK;
  });
}

indeg_status indeg_bench(const indeg_graph* graph, const char* objective, const char* mode,
                         const indeg_options* options, unsigned repeat, char** report) {
  INDEG_REQUIRE(graph != nullptr && objective != nullptr && mode != nullptr && report != nullptr);
  return guarded([&] {
    return emit(indeg::bench(graph->graph, indeg::parse_objective(objective), mode,
                             convert(options), repeat),
                report);
  });
}

indeg_status indeg_evaluate(const indeg_graph* graph, const char* objective, const char* report,
                            char** key) {
  INDEG_REQUIRE(graph != nullptr && objective != nullptr && report != nullptr && key != nullptr);
  return guarded([&] {
    const indeg::Objective obj = indeg::parse_objective(objective);
    return emit(indeg::key_to_json(indeg::reevaluate(graph->graph, obj, indeg::Json::parse(report))),
                key);
  });
}

indeg_status indeg_generate(const char* request, char** graph_text, char** objective) {
  INDEG_REQUIRE(request != nullptr && graph_text != nullptr && objective != nullptr);
  return guarded([&] {
    const indeg::Json doc = indeg::Json::parse(request);
    indeg::GenerateRequest req;
    req.family = doc.at("family").get<std::string>();
    req.k = doc.value("k", req.k);
    req.n = doc.value("n", req.n);
    req.m = doc.value("m", req.m);
    req.seed = doc.value("seed", req.seed);
    req.simple = doc.value("simple", req.simple);
    req.connected = doc.value("connected", req.connected);
    if (doc.contains("max_degree") && !doc["max_degree"].is_null()) {
      req.max_degree = doc["max_degree"].get<unsigned>();
    }
    req.jobs = doc.value("jobs", req.jobs);
    req.slots = doc.value("slots", req.slots);
    indeg::Generated g = indeg::generate(req);
    *graph_text = duplicate(g.graph_text);
    *objective = g.objective ? duplicate(g.objective->dump()) : nullptr;
    return INDEG_OK;
  });
}

}  // extern "C"
