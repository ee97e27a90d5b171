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
#include <span>

#include "graph.hpp"
#include "numeric.hpp"

namespace indeg {

// Builds the order right to left, each time placing a vertex of minimum
// weighted degree in the remaining graph (lowest id on ties). The result
// minimises the maximum weighted left-degree over all orders. Throws
// InvalidInput on negative or mis-sized weights.
VertexOrder weighted_smallest_last(const Multigraph& graph, std::span<const Rational> weights);
VertexOrder weighted_smallest_last(const Multigraph& graph);

// Largest weighted left-degree of the order.
Rational max_weighted_left_degree(const Multigraph& graph, const VertexOrder& order);

enum class TieBreak {
  kLowestId,
  kSeededRandom,
  // Among all executions of the greedy, one with the largest square-sum of
  // left-degrees. Exponential; limited to small graphs.
  kExhaustiveWorst,
};

// Unweighted smallest-last ordering with a choice of tie-breaking.
VertexOrder greedy_min_degree(const Multigraph& graph, TieBreak tie_break = TieBreak::kLowestId,
                              std::uint64_t seed = 0);

// True if every vertex has minimum degree in the subgraph induced by itself
// and its predecessors, i.e. the order is a possible greedy output.
bool is_greedy_run(const Multigraph& graph, const VertexOrder& order);

// Smallest k such that some order has every left-degree <= k.
unsigned degeneracy(const Multigraph& graph);

// Sum of squared left-degrees.
BigInt square_sum(const Multigraph& graph, const VertexOrder& order);

// Sorting by non-increasing slope (stable) minimises
// sum_v a_v * leftdeg(v) + b_v.
VertexOrder linear_slope_order(const Multigraph& graph, std::span<const Rational> slopes);

// sum over edges of min(a_u, a_v) plus the intercepts: the optimum above.
Rational linear_slope_optimum(const Multigraph& graph, std::span<const Rational> slopes,
                              std::span<const Rational> intercepts);

}  // namespace indeg
