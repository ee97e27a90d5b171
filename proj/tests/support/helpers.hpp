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
#include <random>
#include <vector>

#include "graph.hpp"
#include "instances.hpp"

namespace indeg::testing {

inline Multigraph from_pairs(std::size_t n, std::vector<Edge> edges) {
  return Multigraph::build(n, std::move(edges));
}

inline Multigraph path(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Multigraph::build(n, std::move(edges));
}

inline Multigraph cycle(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back({v, static_cast<Vertex>((v + 1) % n)});
  return Multigraph::build(n, std::move(edges));
}

inline Multigraph complete(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Multigraph::build(n, std::move(edges));
}

inline Multigraph star(std::size_t leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.push_back({0, v});
  return Multigraph::build(leaves + 1, std::move(edges));
}

// Two triangles sharing vertex 2.
inline Multigraph bowtie() {
  return Multigraph::build(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
}

// Random graph with n in [lo, hi] and a random edge count that fits the
// constraints; `simple` decides parallel edges.
inline Multigraph random_graph(std::mt19937_64& rng, std::size_t lo_n, std::size_t hi_n,
                               std::size_t max_m, bool simple, bool connected,
                               std::optional<unsigned> max_degree = std::nullopt) {
  std::size_t n = std::uniform_int_distribution<std::size_t>(lo_n, hi_n)(rng);
  std::size_t cap_m = n < 2 ? 0 : max_m;
  if (simple) cap_m = std::min(cap_m, n * (n - 1) / 2);
  if (max_degree) cap_m = std::min(cap_m, std::size_t{*max_degree} * n / 2);
  std::size_t lo_m = connected && n > 0 ? n - 1 : 0;
  if (lo_m > cap_m) lo_m = cap_m;
  std::size_t m = std::uniform_int_distribution<std::size_t>(lo_m, cap_m)(rng);
  RandomGraphParams p;
  p.n = n;
  p.m = m;
  p.seed = rng();
  p.simple = simple;
  p.max_degree = max_degree;
  p.connected = connected;
  return random_multigraph(p);
}

}  // namespace indeg::testing
