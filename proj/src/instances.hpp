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

#include <cstdint>
#include <optional>
#include <vector>

#include "graph.hpp"
#include "numeric.hpp"
#include "objectives.hpp"

namespace indeg {

// The 9-vertex graph on which the acyclic dec-min and inc-max optima differ.
// Vertex i is v_{i+1} of the drawing.
Multigraph fig4_graph();

// k triangles chained by connector vertices. Triangle i (1-based) has
// vertices 3(i-1), 3(i-1)+1, 3(i-1)+2; connector u_i (i = 2..k) is vertex
// 3k + i - 2 and joins the third vertex of triangle i-1 to the first of
// triangle i. Throws InvalidInput for k < 1.
Multigraph gen_gk(unsigned k);
// Triangle vertices first, connectors last: a greedy run of value 9k - 4.
VertexOrder gk_adversarial_order(unsigned k);
// Triangle 1, then each connector followed by its triangle: value 7k - 2.
VertexOrder gk_optimal_order(unsigned k);

struct RandomGraphParams {
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint64_t seed = 0;
  bool simple = false;
  std::optional<unsigned> max_degree;
  bool connected = false;
};

// Loop-free random graph, deterministic in the parameters. Throws
// InvalidInput when no such graph exists or none is found after bounded
// retries.
Multigraph random_multigraph(const RandomGraphParams& params);

struct SchedulingInstance {
  // slots_of_job[j]: feasible timeslots of job j, distinct and non-empty.
  std::vector<std::vector<unsigned>> slots_of_job;
  // One convex cost per timeslot, evaluated at the slot's load.
  std::vector<ConvexSpec> slot_costs;

  std::size_t job_count() const { return slots_of_job.size(); }
  std::size_t slot_count() const { return slot_costs.size(); }
};

struct SchedulingGraph {
  // Jobs are vertices 0..J-1, timeslots J..J+T-1; one edge per feasible pair.
  Multigraph graph;
  std::vector<VertexCost> costs;
};

// Throws InvalidInput on an empty or out-of-range slot set.
SchedulingGraph scheduling_to_orientation(const SchedulingInstance& instance);

// Timeslot of every job in an orientation where each job has exactly one
// outgoing edge; InvalidInput otherwise.
std::vector<unsigned> schedule_of_orientation(const SchedulingInstance& instance,
                                              const SchedulingGraph& reduced,
                                              const Orientation& orientation);

// Cost of an assignment: sum over slots of h_t(load).
Rational schedule_cost(const SchedulingInstance& instance, std::span<const unsigned> assignment);

// Minimum over all assignments by enumeration.
Rational brute_schedule_cost(const SchedulingInstance& instance);

// Random instance with the given shape; slot costs are drawn from the convex
// builtins.
SchedulingInstance random_scheduling_instance(std::size_t jobs, std::size_t slots,
                                              std::uint64_t seed);

}  // namespace indeg
