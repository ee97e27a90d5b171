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

#include "smallest_last.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <unordered_map>

#include "errors.hpp"

namespace indeg {

VertexOrder weighted_smallest_last(const Multigraph& graph, std::span<const Rational> weights) {
  const std::size_t n = graph.vertex_count();
  if (weights.size() != graph.edge_count()) {
    throw InvalidInput("weight vector does not match the edge count");
  }
  for (const Rational& w : weights) {
    if (sgn(w) < 0) throw InvalidInput("smallest-last ordering needs non-negative weights");
  }
  std::vector<Rational> degree(n, Rational(0));
  for (EdgeId e = 0; e < graph.edge_count(); ++e) {
    const Edge& edge = graph.edge(e);
    degree[edge.u] += weights[e];
    if (!edge.is_loop()) degree[edge.v] += weights[e];
  }
  std::vector<bool> removed(n, false);
  std::vector<Vertex> perm(n);
  for (std::size_t slot = n; slot-- > 0;) {
    std::size_t best = n;
    for (Vertex v = 0; v < n; ++v) {
      if (removed[v]) continue;
      if (best == n || degree[v] < degree[best]) best = v;
    }
    const auto chosen = static_cast<Vertex>(best);
    perm[slot] = chosen;
    removed[chosen] = true;
    for (const Incidence& inc : graph.incident(chosen)) {
      if (inc.other != chosen && !removed[inc.other]) degree[inc.other] -= weights[inc.edge];
    }
  }
  return VertexOrder(std::move(perm));
}

VertexOrder weighted_smallest_last(const Multigraph& graph) {
  return weighted_smallest_last(graph, graph.weights());
}

Rational max_weighted_left_degree(const Multigraph& graph, const VertexOrder& order) {
  DegreeVector d = degrees_of_order(graph, order);
  Rational best(0);
  for (const Rational& w : d.weighted_in) best = std::max(best, w);
  return best;
}

namespace {

struct RemainingGraph {
  explicit RemainingGraph(const Multigraph& g) : graph(g), alive(g.vertex_count(), true) {
    degree.resize(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) degree[v] = g.degree(v);
  }

  std::vector<Vertex> minimum_degree_vertices() const {
    std::vector<Vertex> out;
    unsigned best = 0;
    for (Vertex v = 0; v < alive.size(); ++v) {
      if (!alive[v]) continue;
      if (out.empty() || degree[v] < best) {
        best = degree[v];
        out.assign(1, v);
      } else if (degree[v] == best) {
        out.push_back(v);
      }
    }
    return out;
  }

  void remove(Vertex v) {
    alive[v] = false;
    for (const Incidence& inc : graph.incident(v)) {
      if (inc.other != v && alive[inc.other]) --degree[inc.other];
    }
  }

  void restore(Vertex v) {
    for (const Incidence& inc : graph.incident(v)) {
      if (inc.other != v && alive[inc.other]) ++degree[inc.other];
    }
    alive[v] = true;
  }

  const Multigraph& graph;
  std::vector<bool> alive;
  std::vector<unsigned> degree;
};

constexpr std::size_t kExhaustiveCap = 30;

// Worst square-sum obtainable by the greedy from the remaining vertex set,
// memoised on that set.
class WorstGreedy {
 public:
  explicit WorstGreedy(const Multigraph& g) : remaining_(g) {}

  std::uint64_t solve(std::uint64_t mask) {
    if (mask == 0) return 0;
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second.value;
    Entry best;
    for (Vertex v : remaining_.minimum_degree_vertices()) {
      const std::uint64_t left = remaining_.degree[v];
      remaining_.remove(v);
      const std::uint64_t value = left * left + solve(mask & ~(std::uint64_t{1} << v));
      remaining_.restore(v);
      if (!best.valid || value > best.value) best = Entry{true, value, v};
    }
    memo_[mask] = best;
    return best.value;
  }

  Vertex choice(std::uint64_t mask) const { return memo_.at(mask).vertex; }

 private:
  struct Entry {
    bool valid = false;
    std::uint64_t value = 0;
    Vertex vertex = 0;
  };
  RemainingGraph remaining_;
  std::unordered_map<std::uint64_t, Entry> memo_;
};

}  // namespace

VertexOrder greedy_min_degree(const Multigraph& graph, TieBreak tie_break, std::uint64_t seed) {
  const std::size_t n = graph.vertex_count();
  std::vector<Vertex> perm(n);
  if (tie_break == TieBreak::kExhaustiveWorst) {
    if (n > kExhaustiveCap) {
      throw PreconditionError("exhaustive greedy search is limited to " +
                              std::to_string(kExhaustiveCap) + " vertices");
    }
    WorstGreedy search(graph);
    std::uint64_t mask = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    search.solve(mask);
    for (std::size_t slot = n; slot-- > 0;) {
      Vertex v = search.choice(mask);
      perm[slot] = v;
      mask &= ~(std::uint64_t{1} << v);
    }
    return VertexOrder(std::move(perm));
  }

  std::mt19937_64 rng(seed);
  RemainingGraph remaining(graph);
  for (std::size_t slot = n; slot-- > 0;) {
    std::vector<Vertex> candidates = remaining.minimum_degree_vertices();
    Vertex v = candidates.front();
    if (tie_break == TieBreak::kSeededRandom && candidates.size() > 1) {
      std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
      v = candidates[pick(rng)];
    }
    perm[slot] = v;
    remaining.remove(v);
  }
  return VertexOrder(std::move(perm));
}

bool is_greedy_run(const Multigraph& graph, const VertexOrder& order) {
  const std::size_t n = graph.vertex_count();
  if (order.size() != n) return false;
  // Degrees inside the current prefix.
  std::vector<unsigned> degree(n, 0);
  std::vector<bool> in_prefix(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    Vertex v = order[i];
    in_prefix[v] = true;
    degree[v] = graph.loops_at(v);
    for (const auto& [w, mult] : graph.neighbours(v)) {
      if (in_prefix[w]) {
        degree[v] += mult;
        degree[w] += mult;
      }
    }
    for (std::size_t j = 0; j <= i; ++j) {
      if (degree[order[j]] < degree[v]) return false;
    }
  }
  return true;
}

unsigned degeneracy(const Multigraph& graph) {
  VertexOrder order = greedy_min_degree(graph);
  DegreeVector d = degrees_of_order(graph, order);
  return d.in.empty() ? 0 : *std::max_element(d.in.begin(), d.in.end());
}

BigInt square_sum(const Multigraph& graph, const VertexOrder& order) {
  DegreeVector d = degrees_of_order(graph, order);
  BigInt total = 0;
  for (unsigned r : d.in) total += BigInt(r) * r;
  return total;
}

VertexOrder linear_slope_order(const Multigraph& graph, std::span<const Rational> slopes) {
  const std::size_t n = graph.vertex_count();
  if (slopes.size() != n) throw InvalidInput("slope vector does not match the vertex count");
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::stable_sort(perm.begin(), perm.end(),
                   [&](Vertex a, Vertex b) { return slopes[a] > slopes[b]; });
  return VertexOrder(std::move(perm));
}

Rational linear_slope_optimum(const Multigraph& graph, std::span<const Rational> slopes,
                              std::span<const Rational> intercepts) {
  const std::size_t n = graph.vertex_count();
  if (slopes.size() != n || intercepts.size() != n) {
    throw InvalidInput("slope and intercept vectors must match the vertex count");
  }
  Rational total(0);
  for (const Edge& e : graph.edges()) total += std::min(slopes[e.u], slopes[e.v]);
  for (const Rational& b : intercepts) total += b;
  return total;
}

}  // namespace indeg
