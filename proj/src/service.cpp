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

#include "service.hpp"

#include <algorithm>
#include <chrono>

#include "balanced_order.hpp"
#include "errors.hpp"
#include "expectation.hpp"
#include "instances.hpp"
#include "oracle.hpp"
#include "smallest_last.hpp"

namespace indeg {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

template <class T>
Json numbers(const std::vector<T>& values) {
  Json out = Json::array();
  for (const T& v : values) out.push_back(v);
  return out;
}

Json header(const std::string& mode, const Objective& objective) {
  Json r;
  r["schema"] = 1;
  r["mode"] = mode;
  r["objective"] = objective_to_json(objective);
  return r;
}

void put_degrees(Json& r, const Multigraph& graph, const DegreeVector& d) {
  r["indeg"] = numbers(d.in);
  r["outdeg"] = numbers(d.out);
  if (graph.weighted()) {
    Json w = Json::array();
    for (const Rational& x : d.weighted_in) w.push_back(rational_to_json(x));
    r["weighted_indeg"] = std::move(w);
  }
}

Json orientation_json(const Multigraph& graph, const Orientation& o) {
  Json arcs = Json::array();
  for (EdgeId e = 0; e < graph.edge_count(); ++e) {
    arcs.push_back(Json::array({e, o.tail(graph, e), o.head(e)}));
  }
  return arcs;
}

void put_key(Json& r, const Objective& objective, const ObjectiveKey& key) {
  r["key"] = key_to_json(key);
  if (objective.kind == ObjectiveKind::kPhiSum) {
    r["feasible"] = std::get<LiftedCost>(key).penalty == 0;
  }
}

void put_orientation(Json& r, const Multigraph& graph, const Objective& objective,
                     const Orientation& o) {
  r["orientation"] = orientation_json(graph, o);
  r["order"] = nullptr;
  put_degrees(r, graph, degrees_of_orientation(graph, o));
  put_key(r, objective, evaluate(objective, graph, o));
}

void put_order(Json& r, const Multigraph& graph, const Objective& objective,
               const VertexOrder& order) {
  r["orientation"] =
      graph.has_loops() ? Json(nullptr) : orientation_json(graph, orientation_of_order(graph, order));
  r["order"] = numbers(order.vertices());
  put_degrees(r, graph, degrees_of_order(graph, order));
  put_key(r, objective, evaluate(objective, graph, order));
}

SeparableForm convex_form(const Multigraph& graph, const Objective& objective) {
  auto form = separable_form(objective, graph);
  if (!form) {
    throw PreconditionError(std::string("cyclic-flow needs a separable objective; ") +
                            to_string(objective.kind) + " has none");
  }
  if (!form->convex) {
    throw PreconditionError(std::string("cyclic-flow needs convex costs; this ") +
                            to_string(objective.kind) + " objective is not convex");
  }
  return std::move(*form);
}

TieBreak tie_break_of(const std::string& name) {
  if (name == "lowest-id") return TieBreak::kLowestId;
  if (name == "random") return TieBreak::kSeededRandom;
  if (name == "worst") return TieBreak::kExhaustiveWorst;
  throw InvalidInput("unknown tie-break '" + name + "' (lowest-id, random, worst)");
}

VertexOrder slope_order(const Multigraph& graph, const Objective& objective) {
  if (objective.kind != ObjectiveKind::kPhiSum || objective.lower || objective.upper) {
    throw PreconditionError("slope mode needs an unbounded phi_sum of linear functions");
  }
  std::vector<Rational> slopes;
  for (Vertex v = 0; v < graph.vertex_count(); ++v) {
    const ConvexSpec& s = objective.specs.size() == 1 ? objective.specs.front() : objective.specs.at(v);
    if (!s.is_linear()) {
      throw PreconditionError("slope mode needs linear functions, found " + s.name());
    }
    slopes.push_back(s.slope());
  }
  return linear_slope_order(graph, slopes);
}

// Completions of the fixed arcs, by enumeration.
ObjectiveKey brute_cyclic_key(const Multigraph& graph, const Objective& objective,
                              const std::vector<FixedArc>& fixed) {
  if (fixed.empty()) return brute_optimal(graph, objective, Regime::kCyclic).key;
  std::optional<ObjectiveKey> best;
  for_each_orientation(graph, [&](const Orientation& o) {
    for (const FixedArc& a : fixed) {
      if (o.head(a.edge) != a.head) return;
    }
    ObjectiveKey key = evaluate(objective, graph, o);
    if (!best || better(objective, key, *best)) best = std::move(key);
  });
  return std::move(*best);
}

Json check(const std::string& name, bool pass, Json detail = Json::object()) {
  Json c;
  c["name"] = name;
  c["pass"] = pass;
  for (auto& [k, v] : detail.items()) c[k] = v;
  return c;
}

std::uint64_t brute_max_rho_delta(const Multigraph& graph) {
  std::uint64_t best = 0;
  for_each_order(graph, [&](const VertexOrder& o) { best = std::max(best, rho_delta_sum(graph, o)); });
  return best;
}

}  // namespace

Json solve(const Multigraph& graph, const Objective& objective, const std::string& mode,
           const SolveOptions& options) {
  const auto start = Clock::now();
  Json r = header(mode, objective);
  if (!options.fixed.empty() && mode != "cyclic-flow") {
    throw InvalidInput("fixed arcs are only supported by cyclic-flow");
  }
  if (mode == "cyclic-flow") {
    SeparableForm form = convex_form(graph, objective);
    CyclicSolution s = options.fixed.empty() ? solve_cyclic(graph, form.costs)
                                             : solve_mixed(graph, options.fixed, form.costs);
    put_orientation(r, graph, objective, s.orientation);
  } else if (mode == "acyclic-exact") {
    put_order(r, graph, objective, exact_subset_dp(graph, objective, options.dp_cap).order);
  } else if (mode == "acyclic-greedy") {
    put_order(r, graph, objective,
              greedy_min_degree(graph, tie_break_of(options.tie_break), options.seed));
  } else if (mode == "smallest-last") {
    put_order(r, graph, objective, weighted_smallest_last(graph));
  } else if (mode == "slope") {
    put_order(r, graph, objective, slope_order(graph, objective));
  } else if (mode == "combine-st") {
    CombineStResult c = combine_st_orders(graph);
    put_order(r, graph, objective, c.order);
    r["predicted_imbalance"] = c.predicted_imbalance;
    r["terminals"] = numbers(c.terminals);
  } else if (mode == "random") {
    RandomTrials t = random_order_trials(graph, options.seed, options.trials);
    put_order(r, graph, objective, t.best);
    r["seed"] = options.seed;
    r["trials"] = options.trials;
    r["best_rho_delta_sum"] = t.best_value;
    r["mean_rho_delta_sum"] = rational_to_json(t.mean);
  } else if (mode == "derandomized") {
    DerandomizedResult d = derandomized_order(graph);
    put_order(r, graph, objective, d.order);
    Json chain = Json::array();
    for (const Rational& e : d.chain) chain.push_back(rational_to_json(e));
    r["expectation_chain"] = std::move(chain);
  } else {
    throw InvalidInput("unknown mode '" + mode + "'");
  }
  r["wall_ms"] = elapsed_ms(start);
  return r;
}

Json oracle(const Multigraph& graph, const Objective& objective, const std::string& regime) {
  const auto start = Clock::now();
  Regime reg;
  if (regime == "cyclic") {
    reg = Regime::kCyclic;
  } else if (regime == "acyclic") {
    reg = Regime::kAcyclic;
  } else {
    throw InvalidInput("unknown regime '" + regime + "' (cyclic, acyclic)");
  }
  BruteResult b = brute_optimal(graph, objective, reg);
  Json r = header("oracle", objective);
  r["regime"] = regime;
  if (b.orientation) {
    put_orientation(r, graph, objective, *b.orientation);
  } else {
    put_order(r, graph, objective, *b.order);
  }
  r["optimum_count"] = b.optimum_count;
  r["wall_ms"] = elapsed_ms(start);
  return r;
}

ObjectiveKey reevaluate(const Multigraph& graph, const Objective& objective, const Json& report) {
  if (report.contains("order") && report["order"].is_array()) {
    return evaluate(objective, graph, VertexOrder(report["order"].get<std::vector<Vertex>>()));
  }
  if (!report.contains("orientation") || !report["orientation"].is_array()) {
    throw InvalidInput("report has neither an order nor an orientation");
  }
  std::vector<Vertex> heads(graph.edge_count());
  std::vector<bool> seen(graph.edge_count(), false);
  for (const Json& arc : report["orientation"]) {
    const auto e = arc.at(0).get<std::size_t>();
    if (e >= heads.size() || seen[e]) throw InvalidInput("report orientation is malformed");
    seen[e] = true;
    heads[e] = arc.at(2).get<Vertex>();
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw InvalidInput("report orientation misses an edge");
  }
  return evaluate(objective, graph, Orientation(graph, std::move(heads)));
}

CompareResult compare(const Multigraph& graph, const Objective& objective,
                      const std::string& mode, const SolveOptions& options) {
  const auto start = Clock::now();
  CompareResult result;
  Json solver = solve(graph, objective, mode, options);
  const ObjectiveKey got = reevaluate(graph, objective, solver);
  Json checks = Json::array();
  checks.push_back(check("report round-trip", key_to_json(got) == solver["key"]));

  auto order_of = [&]() { return VertexOrder(solver["order"].get<std::vector<Vertex>>()); };
  if (mode == "cyclic-flow") {
    ObjectiveKey want = brute_cyclic_key(graph, objective, options.fixed);
    checks.push_back(check("equals cyclic optimum", compare(objective, got, want) == 0,
                           {{"oracle_key", key_to_json(want)}}));
  } else if (mode == "acyclic-exact" || mode == "slope") {
    ObjectiveKey want = brute_optimal(graph, objective, Regime::kAcyclic).key;
    checks.push_back(check("equals acyclic optimum", compare(objective, got, want) == 0,
                           {{"oracle_key", key_to_json(want)}}));
  } else if (mode == "smallest-last") {
    Objective mw = Objective::of(ObjectiveKind::kMaxWeightedIndeg);
    ObjectiveKey want = brute_optimal(graph, mw, Regime::kAcyclic).key;
    ObjectiveKey have = evaluate(mw, graph, order_of());
    checks.push_back(check("minimum max weighted left-degree", compare(mw, have, want) == 0,
                           {{"value", key_to_json(have)}, {"oracle_key", key_to_json(want)}}));
  } else if (mode == "combine-st") {
    const std::uint64_t have = rho_delta_sum(graph, order_of());
    const std::uint64_t want = brute_max_rho_delta(graph);
    checks.push_back(check("maximum rho-delta sum", have == want,
                           {{"value", have}, {"oracle_value", want}}));
    checks.push_back(check("imbalance matches terminals",
                           imbalance(graph, order_of()).total ==
                               solver["predicted_imbalance"].get<std::uint64_t>()));
  } else if (mode == "acyclic-greedy") {
    const Rational have(square_sum(graph, order_of()));
    Objective sq = Objective::phi_sum(ConvexSpec::square());
    const Rational opt = std::get<LiftedCost>(brute_optimal(graph, sq, Regime::kAcyclic).key).base;
    Rational harmonic(0);
    for (std::size_t i = 1; i <= graph.vertex_count(); ++i) harmonic += Rational(1, static_cast<long>(i));
    harmonic.canonicalize();
    const Rational degen(degeneracy(graph));
    checks.push_back(check("within degeneracy times optimum", have <= degen * opt,
                           {{"value", rational_to_json(have)}, {"oracle_value", rational_to_json(opt)}}));
    checks.push_back(check("within 4 H_n times optimum", have <= 4 * harmonic * opt));
  } else if (mode == "random" || mode == "derandomized") {
    const Rational opt(static_cast<unsigned long>(brute_max_rho_delta(graph)));
    if (mode == "random") {
      const Rational mean = conditional_expectation(graph, {});
      checks.push_back(check("expectation at least a third of optimum", 3 * mean >= opt,
                             {{"expectation", rational_to_json(mean)},
                              {"oracle_value", rational_to_json(opt)}}));
    } else {
      const Rational have(static_cast<unsigned long>(rho_delta_sum(graph, order_of())));
      checks.push_back(check("at least a third of optimum", 3 * have >= opt,
                             {{"value", rational_to_json(have)},
                              {"oracle_value", rational_to_json(opt)}}));
      bool monotone = true;
      const Json& chain = solver["expectation_chain"];
      for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        monotone = monotone && parse_rational(chain[i].get<std::string>()) <=
                                   parse_rational(chain[i + 1].get<std::string>());
      }
      checks.push_back(check("expectation chain non-decreasing", monotone));
    }
  }

  result.agree = std::all_of(checks.begin(), checks.end(),
                             [](const Json& c) { return c["pass"].get<bool>(); });
  Json r = header("compare", objective);
  r["solver_mode"] = mode;
  r["agree"] = result.agree;
  r["checks"] = std::move(checks);
  r["solver"] = std::move(solver);
  r["wall_ms"] = elapsed_ms(start);
  result.report = std::move(r);
  return result;
}

Generated generate(const GenerateRequest& req) {
  Generated out;
  if (req.family == "fig4") {
    out.graph_text = graph_to_text(fig4_graph());
  } else if (req.family == "gk") {
    out.graph_text = graph_to_text(gen_gk(req.k));
  } else if (req.family == "random") {
    RandomGraphParams p;
    p.n = req.n;
    p.m = req.m;
    p.seed = req.seed;
    p.simple = req.simple;
    p.max_degree = req.max_degree;
    p.connected = req.connected;
    out.graph_text = graph_to_text(random_multigraph(p));
  } else if (req.family == "scheduling") {
    SchedulingInstance inst = random_scheduling_instance(req.jobs, req.slots, req.seed);
    SchedulingGraph sg = scheduling_to_orientation(inst);
    out.graph_text = graph_to_text(sg.graph);
    Objective obj;
    std::vector<unsigned> f;
    std::vector<unsigned> g;
    for (Vertex v = 0; v < sg.graph.vertex_count(); ++v) {
      const VertexCost& c = sg.costs[v];
      obj.specs.push_back(c.spec);
      f.push_back(c.lower);
      g.push_back(c.upper.value_or(sg.graph.degree(v)));
    }
    obj.lower = std::move(f);
    obj.upper = std::move(g);
    out.objective = objective_to_json(obj);
  } else {
    throw InvalidInput("unknown family '" + req.family + "' (fig4, gk, random, scheduling)");
  }
  return out;
}

Json bench(const Multigraph& graph, const Objective& objective, const std::string& mode,
           const SolveOptions& options, unsigned repeat) {
  if (repeat == 0) throw InvalidInput("bench needs at least one repetition");
  std::vector<double> times;
  Json last;
  for (unsigned i = 0; i < repeat; ++i) {
    last = solve(graph, objective, mode, options);
    times.push_back(last["wall_ms"].get<double>());
  }
  std::sort(times.begin(), times.end());
  Json r = header("bench", objective);
  r["solver_mode"] = mode;
  r["repeat"] = repeat;
  r["vertices"] = graph.vertex_count();
  r["edges"] = graph.edge_count();
  r["key"] = last["key"];
  r["min_ms"] = times.front();
  r["median_ms"] = times[times.size() / 2];
  r["max_ms"] = times.back();
  return r;
}

}  // namespace indeg
