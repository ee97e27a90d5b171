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

#include <bit>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "objectives.hpp"

namespace indeg {

inline constexpr unsigned kDefaultDpCap = 26;

// f[S] is the optimum over orders of the subgraph induced by S; last[S] a
// vertex that may be placed last in such an order.
template <class Cost>
struct DpTable {
  std::vector<Cost> f;
  std::vector<std::uint8_t> last;
};

template <class Cost>
struct DpResult {
  VertexOrder order;
  Cost cost;
};

// Counts edges between v and the vertex set `mask`, plus loops at v.
class SubsetDegrees {
 public:
  explicit SubsetDegrees(const Multigraph& graph) : loops_(graph.vertex_count()) {
    const std::size_t n = graph.vertex_count();
    for (Vertex v = 0; v < n; ++v) {
      loops_[v] = graph.loops_at(v);
      for (const auto& [w, mult] : graph.neighbours(v)) {
        while (layers_.size() < mult) layers_.emplace_back(n, 0);
        for (unsigned k = 0; k < mult; ++k) layers_[k][v] |= std::uint32_t{1} << w;
      }
    }
  }

  unsigned operator()(Vertex v, std::uint32_t mask) const {
    unsigned d = loops_[v];
    for (const auto& layer : layers_) d += static_cast<unsigned>(std::popcount(layer[v] & mask));
    return d;
  }

 private:
  // layers_[k][v]: neighbours joined to v by more than k parallel edges.
  std::vector<std::vector<std::uint32_t>> layers_;
  std::vector<unsigned> loops_;
};

// f(S) = min over v in S of combine(f(S - v), eval(v, S)), where eval sees the
// set whose last vertex is v. Subsets are processed in increasing numeric
// order, so every proper subset is final before it is read. Ties keep the
// lowest vertex id.
template <class Cost, class Eval, class Combine = std::plus<>>
DpTable<Cost> subset_dp_table(std::size_t n, Eval&& eval, Cost identity, Combine combine = {},
                              unsigned cap = kDefaultDpCap) {
  if (n > cap || n > 31) {
    throw PreconditionError("subset DP is limited to " + std::to_string(std::min(cap, 31u)) +
                            " vertices, graph has " + std::to_string(n));
  }
  const std::uint32_t full = n == 0 ? 0 : ((std::uint32_t{1} << n) - 1);
  DpTable<Cost> table;
  table.f.resize(std::size_t{full} + 1);
  table.last.assign(std::size_t{full} + 1, 0);
  table.f[0] = identity;
  for (std::uint32_t set = 1; set <= full && set != 0; ++set) {
    bool have = false;
    Cost best{};
    std::uint8_t best_vertex = 0;
    for (std::uint32_t rest = set; rest != 0; rest &= rest - 1) {
      const auto v = static_cast<Vertex>(std::countr_zero(rest));
      Cost candidate = combine(table.f[set & ~(std::uint32_t{1} << v)], eval(v, set));
      if (!have || candidate < best) {
        best = std::move(candidate);
        best_vertex = static_cast<std::uint8_t>(v);
        have = true;
      }
    }
    table.f[set] = std::move(best);
    table.last[set] = best_vertex;
    if (set == full) break;
  }
  return table;
}

template <class Cost>
VertexOrder order_from_table(const DpTable<Cost>& table, std::size_t n) {
  std::vector<Vertex> perm(n);
  std::uint32_t set = n == 0 ? 0 : ((std::uint32_t{1} << n) - 1);
  for (std::size_t slot = n; slot-- > 0;) {
    Vertex v = table.last[set];
    perm[slot] = v;
    set &= ~(std::uint32_t{1} << v);
  }
  return VertexOrder(std::move(perm));
}

// Minimises sum_v values[v][leftdeg(v)]; values[v] must cover 0..d(v).
template <class Cost>
DpResult<Cost> exact_subset_dp(const Multigraph& graph,
                               const std::vector<std::vector<Cost>>& values,
                               unsigned cap = kDefaultDpCap) {
  const std::size_t n = graph.vertex_count();
  if (values.size() != n) throw InvalidInput("value table does not match the vertex count");
  for (Vertex v = 0; v < n; ++v) {
    if (values[v].size() <= graph.degree(v)) {
      throw InvalidInput("value table of vertex " + std::to_string(v) +
                         " does not cover its degree");
    }
  }
  SubsetDegrees left(graph);
  auto table = subset_dp_table<Cost>(
      n, [&](Vertex v, std::uint32_t set) -> const Cost& { return values[v][left(v, set)]; },
      Cost{}, std::plus<>{}, cap);
  const std::size_t full = n == 0 ? 0 : ((std::size_t{1} << n) - 1);
  return DpResult<Cost>{order_from_table(table, n), table.f[full]};
}

// Exact separable minimisation over orders with lifted vertex costs, which
// may be non-convex. Integer-valued costs run in 64-bit arithmetic.
DpResult<LiftedCost> exact_subset_dp(const Multigraph& graph, std::span<const VertexCost> costs,
                                     unsigned cap = kDefaultDpCap);

struct ObjectiveOptimum {
  VertexOrder order;
  ObjectiveKey key;
};

// Optimal order for any objective: separable kinds through their
// separable form, max_weighted_indeg through a min-max recurrence.
ObjectiveOptimum exact_subset_dp(const Multigraph& graph, const Objective& objective,
                                 unsigned cap = kDefaultDpCap);

}  // namespace indeg
