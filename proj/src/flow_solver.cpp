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

#include "flow_solver.hpp"

#include <functional>
#include <limits>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>

#include "errors.hpp"

namespace indeg {

FlowNetwork build_network(const Multigraph& graph, std::span<const VertexCost> costs) {
  if (graph.has_loops()) throw PreconditionError("the flow reduction needs a loop-free graph");
  const std::size_t n = graph.vertex_count();
  const std::size_t m = graph.edge_count();
  if (costs.size() != n) {
    throw InvalidInput("expected " + std::to_string(n) + " vertex costs, got " +
                       std::to_string(costs.size()));
  }

  FlowNetwork net;
  net.vertex_count = n;
  net.edge_count = m;
  net.source_arcs.assign(n, {});
  for (Vertex v = 0; v < n; ++v) {
    LiftedCost previous = costs[v](0);
    net.constant += previous;
    std::optional<LiftedCost> last_increment;
    for (unsigned l = 1; l <= graph.degree(v); ++l) {
      LiftedCost current = costs[v](l);
      LiftedCost increment = current - previous;
      if (last_increment && increment < *last_increment) {
        throw PreconditionError("cost of vertex " + std::to_string(v) +
                                " is not convex at indegree " + std::to_string(l - 1));
      }
      net.source_arcs[v].push_back(net.arcs.size());
      net.arcs.push_back({net.source(), net.vertex_node(v), increment});
      last_increment = increment;
      previous = std::move(current);
    }
  }
  net.incidence_arcs.reserve(m);
  for (EdgeId e = 0; e < m; ++e) {
    const Edge& edge = graph.edge(e);
    std::size_t a = net.arcs.size();
    net.arcs.push_back({net.vertex_node(edge.u), net.edge_node(e), LiftedCost()});
    net.arcs.push_back({net.vertex_node(edge.v), net.edge_node(e), LiftedCost()});
    net.incidence_arcs.emplace_back(a, a + 1);
  }
  for (EdgeId e = 0; e < m; ++e) {
    net.sink_arcs.push_back(net.arcs.size());
    net.arcs.push_back({net.edge_node(e), net.sink(), LiftedCost()});
  }
  return net;
}

Flow min_cost_flow(const FlowNetwork& network) {
  const std::size_t node_count = network.node_count();
  const std::size_t arc_count = network.arcs.size();

  // Residual arc 2a is the forward copy of arc a, 2a+1 its reverse.
  std::vector<std::vector<std::size_t>> out(node_count);
  for (std::size_t a = 0; a < arc_count; ++a) {
    out[network.arcs[a].from].push_back(2 * a);
    out[network.arcs[a].to].push_back(2 * a + 1);
  }
  std::vector<int> flow(arc_count, 0);
  auto residual_capacity = [&](std::size_t r) {
    return (r % 2 == 0) ? 1 - flow[r / 2] : flow[r / 2];
  };
  auto residual_head = [&](std::size_t r) {
    const auto& arc = network.arcs[r / 2];
    return (r % 2 == 0) ? arc.to : arc.from;
  };
  auto residual_cost = [&](std::size_t r) {
    const auto& arc = network.arcs[r / 2];
    return (r % 2 == 0) ? arc.cost : -arc.cost;
  };

  // Node ids are a topological order of the layered network, so one pass of
  // relaxation gives exact initial distances even with negative arc costs.
  std::vector<std::optional<LiftedCost>> potential(node_count);
  potential[network.source()] = LiftedCost();
  for (std::size_t u = 0; u < node_count; ++u) {
    if (!potential[u]) continue;
    for (std::size_t r : out[u]) {
      if (r % 2 != 0) continue;
      std::size_t w = residual_head(r);
      LiftedCost candidate = *potential[u] + residual_cost(r);
      if (!potential[w] || candidate < *potential[w]) potential[w] = std::move(candidate);
    }
  }

  using Entry = std::pair<LiftedCost, std::size_t>;
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  for (std::size_t unit = 0; unit < network.required_flow(); ++unit) {
    std::vector<std::optional<LiftedCost>> dist(node_count);
    std::vector<std::size_t> via(node_count, kNone);
    std::vector<bool> done(node_count, false);
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    dist[network.source()] = LiftedCost();
    heap.emplace(LiftedCost(), network.source());
    while (!heap.empty()) {
      auto [d, u] = heap.top();
      heap.pop();
      if (done[u]) continue;
      done[u] = true;
      for (std::size_t r : out[u]) {
        if (residual_capacity(r) <= 0) continue;
        std::size_t w = residual_head(r);
        if (done[w]) continue;
        LiftedCost reduced = residual_cost(r) + *potential[u] - *potential[w];
        LiftedCost candidate = d + reduced;
        if (!dist[w] || candidate < *dist[w]) {
          dist[w] = candidate;
          via[w] = r;
          heap.emplace(std::move(candidate), w);
        }
      }
    }
    if (!dist[network.sink()]) {
      throw std::logic_error("flow network cannot route every edge");
    }
    for (std::size_t u = 0; u < node_count; ++u) {
      if (dist[u]) *potential[u] += *dist[u];
    }
    for (std::size_t w = network.sink(); w != network.source();) {
      std::size_t r = via[w];
      flow[r / 2] += (r % 2 == 0) ? 1 : -1;
      w = (r % 2 == 0) ? network.arcs[r / 2].from : network.arcs[r / 2].to;
    }
  }

  Flow result;
  result.arc_flow = std::move(flow);
  for (std::size_t a = 0; a < arc_count; ++a) {
    if (result.arc_flow[a] != 0) result.cost += network.arcs[a].cost;
  }
  return result;
}

Orientation orientation_of_flow(const Multigraph& graph, const FlowNetwork& network,
                                const Flow& flow) {
  std::vector<Vertex> heads(graph.edge_count());
  for (EdgeId e = 0; e < graph.edge_count(); ++e) {
    const auto [to_u, to_v] = network.incidence_arcs[e];
    // Both copies of a parallel pair cannot carry flow; prefer u on ties.
    heads[e] = flow.arc_flow[to_u] != 0 ? graph.edge(e).u
               : flow.arc_flow[to_v] != 0 ? graph.edge(e).v
                                          : graph.edge(e).u;
  }
  return Orientation(graph, std::move(heads));
}

CyclicSolution solve_cyclic(const Multigraph& graph, std::span<const VertexCost> costs) {
  FlowNetwork network = build_network(graph, costs);
  Flow flow = min_cost_flow(network);
  CyclicSolution solution;
  solution.orientation = orientation_of_flow(graph, network, flow);
  solution.degrees = degrees_of_orientation(graph, solution.orientation);
  solution.cost = phi_sum_cost(costs, solution.degrees.in);
  if (solution.cost != flow.cost + network.constant) {
    throw std::logic_error("flow cost disagrees with the orientation's cost");
  }
  return solution;
}

CyclicSolution solve_cyclic(const Multigraph& graph, const Objective& objective) {
  auto form = separable_form(objective, graph);
  if (!form) {
    throw PreconditionError(std::string("objective ") + to_string(objective.kind) +
                            " has no separable form for the flow solver");
  }
  if (!form->convex) {
    throw PreconditionError(std::string("objective ") + to_string(objective.kind) +
                            " is not convex; the flow solver does not apply");
  }
  return solve_cyclic(graph, form->costs);
}

CyclicSolution solve_mixed(const Multigraph& graph, std::span<const FixedArc> fixed,
                           std::span<const VertexCost> costs) {
  if (graph.has_loops()) throw PreconditionError("the flow reduction needs a loop-free graph");
  const std::size_t n = graph.vertex_count();
  const std::size_t m = graph.edge_count();
  if (costs.size() != n) throw InvalidInput("vertex cost vector does not match the graph");

  std::vector<std::optional<Vertex>> fixed_head(m);
  std::vector<unsigned> fixed_in(n, 0);
  for (const FixedArc& arc : fixed) {
    if (arc.edge >= m) {
      throw InvalidInput("fixed arc refers to edge " + std::to_string(arc.edge) +
                         ", graph has " + std::to_string(m));
    }
    const Edge& edge = graph.edge(arc.edge);
    if (arc.head != edge.u && arc.head != edge.v) {
      throw InvalidInput("fixed head " + std::to_string(arc.head) + " is not an endpoint of edge " +
                         std::to_string(arc.edge));
    }
    if (fixed_head[arc.edge]) {
      throw InvalidInput("edge " + std::to_string(arc.edge) + " is fixed twice");
    }
    fixed_head[arc.edge] = arc.head;
    ++fixed_in[arc.head];
  }

  std::vector<Edge> free_edges;
  std::vector<EdgeId> free_ids;
  for (EdgeId e = 0; e < m; ++e) {
    if (fixed_head[e]) continue;
    free_edges.push_back(graph.edge(e));
    free_ids.push_back(e);
  }
  Multigraph residual = Multigraph::build(n, std::move(free_edges));
  std::vector<VertexCost> shifted(costs.begin(), costs.end());
  for (Vertex v = 0; v < n; ++v) shifted[v].shift += fixed_in[v];

  CyclicSolution partial = solve_cyclic(residual, shifted);
  std::vector<Vertex> heads(m);
  for (EdgeId e = 0; e < m; ++e) {
    if (fixed_head[e]) heads[e] = *fixed_head[e];
  }
  for (std::size_t i = 0; i < free_ids.size(); ++i) {
    heads[free_ids[i]] = partial.orientation.head(static_cast<EdgeId>(i));
  }

  CyclicSolution solution;
  solution.orientation = Orientation(graph, std::move(heads));
  solution.degrees = degrees_of_orientation(graph, solution.orientation);
  solution.cost = phi_sum_cost(costs, solution.degrees.in);
  return solution;
}

}  // namespace indeg
