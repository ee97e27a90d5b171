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
#include <vector>

#include "graph.hpp"

namespace indeg {

// Per-vertex imbalance floor(d/2) * ceil(d/2) - leftdeg * rightdeg.
struct ImbalanceReport {
  std::vector<std::uint64_t> per_vertex;
  std::uint64_t total = 0;
};

ImbalanceReport imbalance(const Multigraph& graph, const VertexOrder& order);

// Sum over vertices of leftdeg * rightdeg.
std::uint64_t rho_delta_sum(const Multigraph& graph, const VertexOrder& order);

struct CombineStResult {
  VertexOrder order;
  // Imbalance forced by the chosen terminals; equals the total imbalance of
  // the order.
  std::uint64_t predicted_imbalance = 0;
  // The first vertex and the closing terminal of every end-component after
  // the first.
  std::vector<Vertex> terminals;
};

// Maximises the sum of leftdeg * rightdeg on connected loop-free graphs of
// maximum degree at most 3 by chaining s-t orders of the blocks along a
// depth-first walk of the block-cut tree. Throws PreconditionError when the
// graph is disconnected, has loops, has a vertex of degree above 3 or has
// fewer than two vertices.
CombineStResult combine_st_orders(const Multigraph& graph);

}  // namespace indeg
