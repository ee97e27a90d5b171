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

#include "subset_dp.hpp"

#include <algorithm>
#include <compare>
#include <limits>

namespace indeg {
namespace {

struct SmallLifted {
  std::int64_t penalty = 0;
  std::int64_t base = 0;

  friend SmallLifted operator+(const SmallLifted& a, const SmallLifted& b) {
    return {a.penalty + b.penalty, a.base + b.base};
  }
  friend auto operator<=>(const SmallLifted&, const SmallLifted&) = default;
};

bool fits_small(const Rational& x, const Rational& limit) {
  return is_integer(x) && abs(x) <= limit;
}

}  // namespace

DpResult<LiftedCost> exact_subset_dp(const Multigraph& graph, std::span<const VertexCost> costs,
                                     unsigned cap) {
  const std::size_t n = graph.vertex_count();
  if (costs.size() != n) throw InvalidInput("vertex cost vector does not match the graph");
  if (n > cap) {
    throw PreconditionError("subset DP is limited to " + std::to_string(cap) +
                            " vertices, graph has " + std::to_string(n));
  }
  std::vector<std::vector<LiftedCost>> values(n);
  for (Vertex v = 0; v < n; ++v) {
    for (unsigned z = 0; z <= graph.degree(v); ++z) values[v].push_back(costs[v](z));
  }

  // Sum of n values stays below 2^62 in magnitude.
  const Rational limit(BigInt(std::int64_t{1} << 62) / BigInt(static_cast<unsigned long>(n + 1)));
  bool small = true;
  bool no_penalty = true;
  for (const auto& row : values) {
    for (const LiftedCost& c : row) {
      small = small && fits_small(c.base, limit) &&
              std::abs(c.penalty) <= std::numeric_limits<std::int32_t>::max();
      no_penalty = no_penalty && c.penalty == 0;
    }
  }

  if (small && no_penalty) {
    std::vector<std::vector<std::int64_t>> ints(n);
    for (Vertex v = 0; v < n; ++v) {
      for (const LiftedCost& c : values[v]) ints[v].push_back(c.base.get_num().get_si());
    }
    auto r = exact_subset_dp(graph, ints, cap);
    return {std::move(r.order), LiftedCost(0, Rational(static_cast<long>(r.cost)))};
  }
  if (small) {
    std::vector<std::vector<SmallLifted>> ints(n);
    for (Vertex v = 0; v < n; ++v) {
      for (const LiftedCost& c : values[v]) {
        ints[v].push_back({c.penalty, static_cast<std::int64_t>(c.base.get_num().get_si())});
      }
    }
    auto r = exact_subset_dp(graph, ints, cap);
    return {std::move(r.order),
            LiftedCost(r.cost.penalty, Rational(static_cast<long>(r.cost.base)))};
  }
  if (no_penalty) {
    std::vector<std::vector<Rational>> bases(n);
    for (Vertex v = 0; v < n; ++v) {
      for (const LiftedCost& c : values[v]) bases[v].push_back(c.base);
    }
    auto r = exact_subset_dp(graph, bases, cap);
    return {std::move(r.order), LiftedCost(0, std::move(r.cost))};
  }
  return exact_subset_dp(graph, values, cap);
}

ObjectiveOptimum exact_subset_dp(const Multigraph& graph, const Objective& objective,
                                 unsigned cap) {
  if (auto form = separable_form(objective, graph)) {
    auto r = exact_subset_dp(graph, std::span<const VertexCost>(form->costs), cap);
    ObjectiveKey key = evaluate(objective, graph, r.order);
    return {std::move(r.order), std::move(key)};
  }
  // max_weighted_indeg: f(S) = min over v of max(f(S - v), d_w(v, S)).
  const std::size_t n = graph.vertex_count();
  auto weighted_left = [&](Vertex v, std::uint32_t set) {
    Rational total(0);
    for (const Incidence& inc : graph.incident(v)) {
      if (inc.other == v || (set >> inc.other) & 1U) total += graph.weight(inc.edge);
    }
    return total;
  };
  auto table = subset_dp_table<Rational>(
      n, weighted_left, Rational(0),
      [](const Rational& a, const Rational& b) { return a < b ? b : a; }, cap);
  VertexOrder order = order_from_table(table, n);
  ObjectiveKey key = evaluate(objective, graph, order);
  return {std::move(order), std::move(key)};
}

}  // namespace indeg
