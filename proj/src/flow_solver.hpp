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

#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "objectives.hpp"

namespace indeg {

// Layered network s -> v'_i -> e'_j -> t. Vertex v_i gets d(v_i) parallel
// unit arcs from s whose l-th cost is phi_i(l) - phi_i(l-1); every other arc
// costs nothing. All capacities are 1.
struct FlowNetwork {
  struct Arc {
    std::size_t from;
    std::size_t to;
    LiftedCost cost;
  };

  std::size_t vertex_count = 0;  // of the underlying graph
  std::size_t edge_count = 0;
  std::vector<Arc> arcs;
  // For every graph vertex, the ids of its parallel source arcs in order l = 1..d(v).
  std::vector<std::vector<std::size_t>> source_arcs;
  // For every graph edge, the ids of the arcs u'->e' and v'->e'.
  std::vector<std::pair<std::size_t, std::size_t>> incidence_arcs;
  std::vector<std::size_t> sink_arcs;
  // phi_v(0) offsets removed by normalisation; added back to reported costs.
  LiftedCost constant;

  std::size_t source() const { return 0; }
  std::size_t vertex_node(Vertex v) const { return 1 + v; }
  std::size_t edge_node(EdgeId e) const { return 1 + vertex_count + e; }
  std::size_t sink() const { return 1 + vertex_count + edge_count; }
  std::size_t node_count() const { return vertex_count + edge_count + 2; }
  std::size_t required_flow() const { return edge_count; }
};

// Throws PreconditionError for graphs with loops or when some vertex's cost
// increments are not non-decreasing on 0..d(v) (non-convex), InvalidInput
// when a cost cannot be evaluated on 0..d(v).
FlowNetwork build_network(const Multigraph& graph, std::span<const VertexCost> costs);

struct Flow {
  std::vector<int> arc_flow;
  // Sum of arc costs (normalised, without FlowNetwork::constant).
  LiftedCost cost;
};

// Successive shortest augmenting paths with node potentials; one unit per
// augmentation. Deterministic for a fixed network.
Flow min_cost_flow(const FlowNetwork& network);

// Heads are read off the used incidence arcs.
Orientation orientation_of_flow(const Multigraph& graph, const FlowNetwork& network,
                                const Flow& flow);

struct CyclicSolution {
  Orientation orientation;
  DegreeVector degrees;
  // Exact sum of the vertex costs; penalty > 0 means no orientation meets
  // the indegree bounds.
  LiftedCost cost;

  bool feasible() const { return cost.penalty == 0; }
};

// Optimal over all orientations, cyclic ones included.
CyclicSolution solve_cyclic(const Multigraph& graph, std::span<const VertexCost> costs);

// Uses the objective's separable form; throws PreconditionError if it has
// none or the form is not convex (inc_min, dec_max, max_weighted_indeg).
CyclicSolution solve_cyclic(const Multigraph& graph, const Objective& objective);

struct FixedArc {
  EdgeId edge;
  Vertex head;
};

// Optimal completion of a partial orientation: fixed arcs are removed and
// the cost of each head is shifted by one per fixed arc entering it. The
// result orients every edge; `cost` is over the whole graph.
CyclicSolution solve_mixed(const Multigraph& graph, std::span<const FixedArc> fixed,
                           std::span<const VertexCost> costs);

}  // namespace indeg
