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

#include "oracle.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <string>

#include "errors.hpp"

namespace indeg {
namespace {

void check_orientation_cap(const Multigraph& graph, std::size_t cap) {
  if (graph.edge_count() > cap) {
    throw PreconditionError("enumeration is limited to " + std::to_string(cap) +
                            " edges, graph has " + std::to_string(graph.edge_count()));
  }
  if (graph.has_loops()) throw PreconditionError("orientations are undefined with loops");
}

}  // namespace

void for_each_orientation(const Multigraph& graph,
                          const std::function<void(const Orientation&)>& visit) {
  check_orientation_cap(graph, kMaxEnumeratedEdges);
  const std::size_t m = graph.edge_count();
  std::vector<Vertex> heads(m);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
    for (std::size_t e = 0; e < m; ++e) {
      const Edge& edge = graph.edge(static_cast<EdgeId>(e));
      heads[e] = (mask >> e) & 1U ? edge.v : edge.u;
    }
    visit(Orientation(graph, heads));
  }
}

void for_each_order(const Multigraph& graph,
                    const std::function<void(const VertexOrder&)>& visit) {
  const std::size_t n = graph.vertex_count();
  if (n > kMaxEnumeratedVertices) {
    throw PreconditionError("order enumeration is limited to " +
                            std::to_string(kMaxEnumeratedVertices) + " vertices, graph has " +
                            std::to_string(n));
  }
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  do {
    visit(VertexOrder(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

BruteResult brute_optimal(const Multigraph& graph, const Objective& objective, Regime regime) {
  std::optional<BruteResult> best;
  auto consider = [&](ObjectiveKey key, auto&& store) {
    if (!best) {
      best.emplace();
      best->key = std::move(key);
      best->optimum_count = 1;
      store(*best);
      return;
    }
    const auto cmp = compare(objective, key, best->key);
    if (cmp < 0) {
      best->key = std::move(key);
      best->optimum_count = 1;
      store(*best);
    } else if (cmp == 0) {
      ++best->optimum_count;
    }
  };
  if (regime == Regime::kCyclic) {
    for_each_orientation(graph, [&](const Orientation& o) {
      consider(evaluate(objective, graph, o), [&](BruteResult& r) { r.orientation = o; });
    });
  } else {
    for_each_order(graph, [&](const VertexOrder& order) {
      consider(evaluate(objective, graph, order), [&](BruteResult& r) { r.order = order; });
    });
  }
  return std::move(*best);
}

BruteCost brute_min_cost(const Multigraph& graph, std::span<const VertexCost> costs,
                         Regime regime) {
  if (costs.size() != graph.vertex_count()) {
    throw InvalidInput("vertex cost vector does not match the graph");
  }
  std::optional<BruteCost> best;
  auto consider = [&](const DegreeVector& d, auto&& store) {
    LiftedCost c = phi_sum_cost(costs, d.in);
    if (!best || c < best->cost) {
      if (!best) best.emplace();
      best->cost = std::move(c);
      store(*best);
    }
  };
  if (regime == Regime::kCyclic) {
    for_each_orientation(graph, [&](const Orientation& o) {
      consider(degrees_of_orientation(graph, o), [&](BruteCost& r) { r.orientation = o; });
    });
  } else {
    for_each_order(graph, [&](const VertexOrder& order) {
      consider(degrees_of_order(graph, order), [&](BruteCost& r) { r.order = order; });
    });
  }
  return std::move(*best);
}

VertexCertificate vertex_certificate(const Multigraph& graph, const Orientation& orientation) {
  check_orientation_cap(graph, kMaxCertificateEdges);
  auto topo = topological_order(graph, orientation);
  if (!topo) throw InvalidInput("vertex certificate needs an acyclic orientation");
  const std::size_t n = graph.vertex_count();
  VertexCertificate cert;
  cert.slopes.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    cert.slopes[v] = static_cast<std::int64_t>(n - topo->position(v));
  }
  const std::vector<unsigned> target = degrees_of_orientation(graph, orientation).in;

  std::int64_t minimum = std::numeric_limits<std::int64_t>::max();
  bool unique = true;
  for_each_orientation(graph, [&](const Orientation& o) {
    std::int64_t value = 0;
    for (Vertex h : o.heads()) value += cert.slopes[h];
    if (value > minimum) return;
    const bool same = degrees_of_orientation(graph, o).in == target;
    if (value < minimum) {
      minimum = value;
      unique = same;
    } else if (!same) {
      unique = false;
    }
  });
  cert.minimum = minimum;
  cert.unique = unique;
  return cert;
}

CycleDecomposition cycle_reversal_decomposition(const Multigraph& graph,
                                                const Orientation& orientation) {
  if (graph.has_loops()) throw PreconditionError("orientations are undefined with loops");
  const std::size_t n = graph.vertex_count();
  std::vector<std::vector<EdgeId>> out(n);
  for (EdgeId e = 0; e < graph.edge_count(); ++e) {
    out[orientation.tail(graph, e)].push_back(e);
  }

  // Shortest cycle through each start vertex by BFS; keep the shortest overall.
  std::vector<EdgeId> best;
  for (Vertex s = 0; s < n; ++s) {
    std::vector<std::int64_t> via(n, -1);
    std::vector<bool> reached(n, false);
    std::deque<Vertex> queue{s};
    reached[s] = true;
    std::optional<EdgeId> closing;
    while (!queue.empty() && !closing) {
      Vertex x = queue.front();
      queue.pop_front();
      for (EdgeId e : out[x]) {
        Vertex y = orientation.head(e);
        if (y == s) {
          closing = e;
          break;
        }
        if (!reached[y]) {
          reached[y] = true;
          via[y] = e;
          queue.push_back(y);
        }
      }
    }
    if (!closing) continue;
    std::vector<EdgeId> cycle{*closing};
    for (Vertex x = orientation.tail(graph, *closing); x != s;) {
      const auto e = static_cast<EdgeId>(via[x]);
      cycle.push_back(e);
      x = orientation.tail(graph, e);
    }
    std::reverse(cycle.begin(), cycle.end());
    if (best.empty() || cycle.size() < best.size()) best = std::move(cycle);
  }
  if (best.empty()) throw InvalidInput("cycle decomposition needs a cyclic orientation");

  CycleDecomposition result;
  result.cycle = best;
  const std::vector<unsigned> base = degrees_of_orientation(graph, orientation).in;
  std::vector<std::uint64_t> sum(n, 0);
  for (EdgeId e : best) {
    Orientation r = orientation.flipped(graph, e);
    const auto in = degrees_of_orientation(graph, r).in;
    for (Vertex v = 0; v < n; ++v) sum[v] += in[v];
    result.reversals.push_back(std::move(r));
  }
  const std::uint64_t k = best.size();
  result.averages = true;
  for (Vertex v = 0; v < n; ++v) result.averages = result.averages && sum[v] == k * base[v];
  return result;
}

}  // namespace indeg
