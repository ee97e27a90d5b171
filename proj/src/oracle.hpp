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
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "graph.hpp"
#include "objectives.hpp"

namespace indeg {

inline constexpr std::size_t kMaxEnumeratedEdges = 20;
inline constexpr std::size_t kMaxEnumeratedVertices = 10;
inline constexpr std::size_t kMaxCertificateEdges = 16;

// Visits all 2^|E| orientations (edge e's head is its second endpoint when
// bit e of the counter is set). Throws PreconditionError above the cap or on
// graphs with loops.
void for_each_orientation(const Multigraph& graph,
                          const std::function<void(const Orientation&)>& visit);

// Visits all n! orders in lexicographic order of the permutation. Throws
// PreconditionError above the cap.
void for_each_order(const Multigraph& graph, const std::function<void(const VertexOrder&)>& visit);

enum class Regime { kCyclic, kAcyclic };

struct BruteResult {
  ObjectiveKey key;
  // Set in the acyclic regime.
  std::optional<VertexOrder> order;
  // Set in the cyclic regime.
  std::optional<Orientation> orientation;
  std::uint64_t optimum_count = 0;
};

// Exact optimum by enumeration: over all orientations (cyclic) or all orders
// (acyclic). The witness is the first optimum met.
BruteResult brute_optimal(const Multigraph& graph, const Objective& objective, Regime regime);

struct BruteCost {
  LiftedCost cost;
  std::optional<VertexOrder> order;
  std::optional<Orientation> orientation;
};

// Minimum of sum_v cost_v(indeg(v)) by enumeration; the costs need not be
// convex.
BruteCost brute_min_cost(const Multigraph& graph, std::span<const VertexCost> costs,
                         Regime regime);

struct VertexCertificate {
  // Strictly decreasing along a topological order of the orientation.
  std::vector<std::int64_t> slopes;
  std::int64_t minimum = 0;
  // True when every orientation minimising sum_v slope(v) indeg(v) has the
  // same indegree vector as the input.
  bool unique = false;
};

// Throws InvalidInput for a cyclic orientation, PreconditionError above
// kMaxCertificateEdges.
VertexCertificate vertex_certificate(const Multigraph& graph, const Orientation& orientation);

struct CycleDecomposition {
  // Edge ids of a shortest directed cycle, in cycle order.
  std::vector<EdgeId> cycle;
  // reversals[j]: the input with cycle[j] reversed.
  std::vector<Orientation> reversals;
  // True when the indegree vectors of the reversals average exactly to the
  // input's.
  bool averages = false;
};

// Throws InvalidInput for an acyclic orientation.
CycleDecomposition cycle_reversal_decomposition(const Multigraph& graph,
                                                const Orientation& orientation);

}  // namespace indeg
