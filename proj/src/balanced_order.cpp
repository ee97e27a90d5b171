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

#include "balanced_order.hpp"

#include <algorithm>
#include <string>

#include "errors.hpp"

namespace indeg {
namespace {

std::uint64_t best_product(unsigned d) {
  return std::uint64_t{d / 2} * ((d + 1) / 2);
}

// First minimum-degree vertex of `candidates` other than `skip`.
Vertex min_degree_except(const Multigraph& graph, const std::vector<Vertex>& candidates,
                         Vertex skip) {
  bool have = false;
  Vertex best = 0;
  for (Vertex v : candidates) {
    if (v == skip) continue;
    if (!have || graph.degree(v) < graph.degree(best)) {
      best = v;
      have = true;
    }
  }
  return best;
}

// s-t order of one block, in global vertex ids.
std::vector<Vertex> block_order(const Multigraph& graph, const std::vector<Vertex>& block,
                                Vertex s, Vertex t) {
  auto local = [&](Vertex v) {
    return static_cast<Vertex>(std::lower_bound(block.begin(), block.end(), v) - block.begin());
  };
  Multigraph sub = graph.induced(block);
  VertexOrder order = st_order(sub, local(s), local(t));
  std::vector<Vertex> out;
  out.reserve(block.size());
  for (Vertex v : order) out.push_back(block[v]);
  return out;
}

}  // namespace

ImbalanceReport imbalance(const Multigraph& graph, const VertexOrder& order) {
  DegreeVector d = degrees_of_order(graph, order);
  ImbalanceReport report;
  report.per_vertex.resize(graph.vertex_count());
  for (Vertex v = 0; v < graph.vertex_count(); ++v) {
    report.per_vertex[v] =
        best_product(graph.degree(v)) - std::uint64_t{d.in[v]} * d.out[v];
    report.total += report.per_vertex[v];
  }
  return report;
}

std::uint64_t rho_delta_sum(const Multigraph& graph, const VertexOrder& order) {
  DegreeVector d = degrees_of_order(graph, order);
  std::uint64_t total = 0;
  for (std::size_t v = 0; v < d.size(); ++v) total += std::uint64_t{d.in[v]} * d.out[v];
  return total;
}

CombineStResult combine_st_orders(const Multigraph& graph) {
  const std::size_t n = graph.vertex_count();
  if (n < 2) throw PreconditionError("combine-st needs at least two vertices");
  if (graph.has_loops()) throw PreconditionError("combine-st needs a loop-free graph");
  if (graph.max_degree() > 3) {
    throw PreconditionError("combine-st needs maximum degree at most 3, graph has " +
                            std::to_string(graph.max_degree()));
  }
  if (!graph.is_connected()) throw PreconditionError("combine-st needs a connected graph");

  const BlockTree tree = block_tree(graph);
  CombineStResult result{VertexOrder::identity(0), 0, {}};
  std::vector<Vertex> perm;
  perm.reserve(n);

  if (tree.blocks.size() == 1) {
    // No cut vertex: the two smallest degrees go to the ends.
    const auto& block = tree.blocks[0];
    Vertex s = min_degree_except(graph, block, static_cast<Vertex>(n));
    Vertex t = min_degree_except(graph, block, s);
    perm = block_order(graph, block, s, t);
    result.predicted_imbalance = (graph.degree(s) - 1) + (graph.degree(t) - 1);
    result.terminals = {s, t};
    result.order = VertexOrder(std::move(perm));
    return result;
  }

  std::size_t first = 0;
  while (!tree.is_end_component(first)) ++first;

  struct Visit {
    std::size_t block;
    Vertex entry;
  };
  std::vector<bool> seen(tree.blocks.size(), false);
  // Explicit stack; children are pushed in reverse so the walk visits them in
  // ascending order.
  std::vector<Visit> stack{{first, static_cast<Vertex>(n)}};
  seen[first] = true;
  while (!stack.empty()) {
    const Visit visit = stack.back();
    stack.pop_back();
    const auto& block = tree.blocks[visit.block];
    const auto& cuts = tree.cuts_of_block[visit.block];

    Vertex s;
    Vertex t;
    if (visit.entry == n) {
      t = cuts.front();
      s = min_degree_except(graph, block, t);
      result.predicted_imbalance += graph.degree(s) - 1;
      result.terminals.push_back(s);
    } else {
      s = visit.entry;
      if (tree.is_end_component(visit.block)) {
        t = min_degree_except(graph, block, s);
        result.predicted_imbalance += graph.degree(t) - 1;
        result.terminals.push_back(t);
      } else {
        t = *std::find_if(cuts.begin(), cuts.end(), [&](Vertex c) { return c != s; });
      }
    }

    std::vector<Vertex> local = block_order(graph, block, s, t);
    if (visit.entry == n) {
      perm.insert(perm.end(), local.begin(), local.end());
    } else {
      perm.insert(perm.end(), local.begin() + 1, local.end());
    }

    std::vector<Visit> children;
    for (Vertex c : cuts) {
      for (std::size_t b : tree.blocks_of_vertex[c]) {
        if (!seen[b]) {
          seen[b] = true;
          children.push_back({b, c});
        }
      }
    }
    stack.insert(stack.end(), children.rbegin(), children.rend());
  }
  result.order = VertexOrder(std::move(perm));
  return result;
}

}  // namespace indeg
