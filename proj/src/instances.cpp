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

#include "instances.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "errors.hpp"

namespace indeg {
namespace {

std::size_t pick(std::mt19937_64& rng, std::size_t bound) {
  return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng);
}

// One attempt; nullopt when the random choices paint themselves into a corner.
std::optional<std::vector<Edge>> try_random_edges(const RandomGraphParams& p,
                                                   std::mt19937_64& rng) {
  const unsigned cap = p.max_degree.value_or(~0U);
  std::vector<unsigned> degree(p.n, 0);
  std::vector<std::vector<bool>> used(p.simple ? p.n : 0, std::vector<bool>(p.n, false));
  std::vector<Edge> edges;
  auto add = [&](Vertex u, Vertex v) {
    edges.push_back({u, v});
    ++degree[u];
    ++degree[v];
    if (p.simple) used[u][v] = used[v][u] = true;
  };
  if (p.connected) {
    // Random spanning tree: attach vertices in shuffled order to a random
    // earlier vertex with spare degree.
    std::vector<Vertex> perm(p.n);
    for (Vertex v = 0; v < p.n; ++v) perm[v] = v;
    std::shuffle(perm.begin(), perm.end(), rng);
    for (std::size_t i = 1; i < p.n; ++i) {
      std::vector<Vertex> open;
      for (std::size_t j = 0; j < i; ++j) {
        if (degree[perm[j]] < cap) open.push_back(perm[j]);
      }
      if (open.empty()) return std::nullopt;
      add(open[pick(rng, open.size())], perm[i]);
    }
  }
  while (edges.size() < p.m) {
    std::vector<Edge> candidates;
    for (Vertex u = 0; u < p.n; ++u) {
      for (Vertex v = u + 1; v < p.n; ++v) {
        if (degree[u] >= cap || degree[v] >= cap) continue;
        if (p.simple && used[u][v]) continue;
        candidates.push_back({u, v});
      }
    }
    if (candidates.empty()) return std::nullopt;
    const Edge e = candidates[pick(rng, candidates.size())];
    add(e.u, e.v);
  }
  // Stable ids independent of the construction order.
  std::sort(edges.begin(), edges.end(),
            [](const Edge& a, const Edge& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
  for (auto& e : edges) {
    if (pick(rng, 2) == 1) std::swap(e.u, e.v);
  }
  return edges;
}

}  // namespace

Multigraph fig4_graph() {
  // Pairs as drawn, 1-based.
  static constexpr int kPairs[][2] = {{1, 2}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8},
                                      {8, 1}, {1, 3}, {1, 4}, {2, 4}, {5, 7}, {6, 8},
                                      {9, 2}, {9, 3}, {9, 5}, {9, 6}, {9, 7}, {9, 8}};
  std::vector<Edge> edges;
  for (const auto& pair : kPairs) {
    edges.push_back({static_cast<Vertex>(pair[0] - 1), static_cast<Vertex>(pair[1] - 1)});
  }
  return Multigraph::build(9, std::move(edges));
}

Multigraph gen_gk(unsigned k) {
  if (k < 1) throw InvalidInput("G_k needs k >= 1");
  std::vector<Edge> edges;
  for (unsigned i = 0; i < k; ++i) {
    const Vertex a = 3 * i;
    edges.push_back({a, a + 1});
    edges.push_back({a + 1, a + 2});
    edges.push_back({a, a + 2});
  }
  for (unsigned i = 2; i <= k; ++i) {
    const Vertex u = 3 * k + i - 2;
    edges.push_back({3 * (i - 2) + 2, u});
    edges.push_back({u, 3 * (i - 1)});
  }
  return Multigraph::build(4 * k - 1, std::move(edges));
}

VertexOrder gk_adversarial_order(unsigned k) {
  if (k < 1) throw InvalidInput("G_k needs k >= 1");
  return VertexOrder::identity(4 * k - 1);
}

VertexOrder gk_optimal_order(unsigned k) {
  if (k < 1) throw InvalidInput("G_k needs k >= 1");
  std::vector<Vertex> perm{0, 1, 2};
  for (unsigned i = 2; i <= k; ++i) {
    perm.push_back(3 * k + i - 2);
    for (Vertex j = 0; j < 3; ++j) perm.push_back(3 * (i - 1) + j);
  }
  return VertexOrder(std::move(perm));
}

Multigraph random_multigraph(const RandomGraphParams& p) {
  if (p.m > 0 && p.n < 2) throw InvalidInput("edges need at least two vertices");
  if (p.simple && p.m > p.n * (p.n - (p.n > 0 ? 1 : 0)) / 2) {
    throw InvalidInput("a simple graph on " + std::to_string(p.n) + " vertices has at most " +
                       std::to_string(p.n * (p.n - 1) / 2) + " edges");
  }
  if (p.max_degree && std::size_t{*p.max_degree} * p.n < 2 * p.m) {
    throw InvalidInput("degree cap " + std::to_string(*p.max_degree) + " admits at most " +
                       std::to_string(std::size_t{*p.max_degree} * p.n / 2) + " edges");
  }
  if (p.connected && p.n > 1 && p.m + 1 < p.n) {
    throw InvalidInput("a connected graph on " + std::to_string(p.n) + " vertices needs " +
                       std::to_string(p.n - 1) + " edges");
  }
  if (p.connected && p.n > 2 && p.max_degree && *p.max_degree < 2) {
    throw InvalidInput("no connected graph on more than two vertices has maximum degree 1");
  }
  std::mt19937_64 rng(p.seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    if (auto edges = try_random_edges(p, rng)) {
      return Multigraph::build(p.n, std::move(*edges));
    }
  }
  throw InvalidInput("no graph with the requested parameters found");
}

SchedulingGraph scheduling_to_orientation(const SchedulingInstance& instance) {
  const std::size_t jobs = instance.job_count();
  const std::size_t slots = instance.slot_count();
  std::vector<Edge> edges;
  SchedulingGraph out;
  for (std::size_t j = 0; j < jobs; ++j) {
    const auto& allowed = instance.slots_of_job[j];
    if (allowed.empty()) throw InvalidInput("job " + std::to_string(j) + " has no timeslot");
    std::vector<unsigned> sorted(allowed);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw InvalidInput("job " + std::to_string(j) + " lists a timeslot twice");
    }
    for (unsigned t : allowed) {
      if (t >= slots) {
        throw InvalidInput("job " + std::to_string(j) + " uses unknown timeslot " +
                           std::to_string(t));
      }
      edges.push_back({static_cast<Vertex>(j), static_cast<Vertex>(jobs + t)});
    }
    const auto bound = static_cast<unsigned>(allowed.size() - 1);
    out.costs.push_back(lift(ConvexSpec::zero(), bound, bound));
  }
  for (const ConvexSpec& h : instance.slot_costs) out.costs.push_back(VertexCost{h, 0, std::nullopt, 0});
  out.graph = Multigraph::build(jobs + slots, std::move(edges));
  return out;
}

std::vector<unsigned> schedule_of_orientation(const SchedulingInstance& instance,
                                              const SchedulingGraph& reduced,
                                              const Orientation& orientation) {
  const std::size_t jobs = instance.job_count();
  std::vector<unsigned> assignment(jobs, 0);
  std::vector<unsigned> outgoing(jobs, 0);
  for (EdgeId e = 0; e < reduced.graph.edge_count(); ++e) {
    const Edge& edge = reduced.graph.edge(e);
    if (orientation.head(e) == edge.v) {
      ++outgoing[edge.u];
      assignment[edge.u] = static_cast<unsigned>(edge.v - jobs);
    }
  }
  for (std::size_t j = 0; j < jobs; ++j) {
    if (outgoing[j] != 1) {
      throw InvalidInput("job " + std::to_string(j) + " is not assigned to exactly one slot");
    }
  }
  return assignment;
}

Rational schedule_cost(const SchedulingInstance& instance, std::span<const unsigned> assignment) {
  std::vector<unsigned> load(instance.slot_count(), 0);
  for (unsigned t : assignment) ++load.at(t);
  Rational total(0);
  for (std::size_t t = 0; t < load.size(); ++t) total += instance.slot_costs[t](load[t]);
  return total;
}

Rational brute_schedule_cost(const SchedulingInstance& instance) {
  const std::size_t jobs = instance.job_count();
  for (const auto& allowed : instance.slots_of_job) {
    if (allowed.empty()) throw InvalidInput("a job has no timeslot");
  }
  std::vector<std::size_t> choice(jobs, 0);
  std::vector<unsigned> assignment(jobs);
  std::optional<Rational> best;
  while (true) {
    for (std::size_t j = 0; j < jobs; ++j) assignment[j] = instance.slots_of_job[j][choice[j]];
    Rational c = schedule_cost(instance, assignment);
    if (!best || c < *best) best = std::move(c);
    std::size_t j = 0;
    while (j < jobs && ++choice[j] == instance.slots_of_job[j].size()) choice[j++] = 0;
    if (j == jobs) break;
  }
  return *best;
}

SchedulingInstance random_scheduling_instance(std::size_t jobs, std::size_t slots,
                                              std::uint64_t seed) {
  if (slots == 0 && jobs > 0) throw InvalidInput("jobs need at least one timeslot");
  std::mt19937_64 rng(seed);
  SchedulingInstance inst;
  for (std::size_t j = 0; j < jobs; ++j) {
    std::vector<unsigned> allowed;
    while (allowed.empty()) {
      for (unsigned t = 0; t < slots; ++t) {
        if (pick(rng, 2) == 1) allowed.push_back(t);
      }
    }
    inst.slots_of_job.push_back(std::move(allowed));
  }
  for (std::size_t t = 0; t < slots; ++t) {
    switch (pick(rng, 4)) {
      case 0: inst.slot_costs.push_back(ConvexSpec::square()); break;
      case 1: inst.slot_costs.push_back(ConvexSpec::binom2()); break;
      case 2: inst.slot_costs.push_back(ConvexSpec::cube()); break;
      default:
        inst.slot_costs.push_back(ConvexSpec::linear(Rational(static_cast<long>(pick(rng, 4))),
                                                     Rational(static_cast<long>(pick(rng, 3)))));
        break;
    }
  }
  return inst;
}

}  // namespace indeg
