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

#include "expectation.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "balanced_order.hpp"
#include "errors.hpp"

namespace indeg {
namespace {

std::vector<bool> fixed_mask(const Multigraph& graph, std::span<const Vertex> prefix) {
  std::vector<bool> fixed(graph.vertex_count(), false);
  for (Vertex v : prefix) {
    if (v >= graph.vertex_count()) {
      throw InvalidInput("prefix vertex " + std::to_string(v) + " is out of range");
    }
    if (fixed[v]) throw InvalidInput("prefix repeats vertex " + std::to_string(v));
    fixed[v] = true;
  }
  return fixed;
}

// Prefix vertices have fixed left and right degrees.
BigInt prefix_part(const Multigraph& graph, std::span<const Vertex> prefix) {
  std::vector<bool> before(graph.vertex_count(), false);
  BigInt total = 0;
  for (Vertex v : prefix) {
    unsigned left = graph.loops_at(v);
    unsigned right = 0;
    for (const auto& [w, mult] : graph.neighbours(v)) (before[w] ? left : right) += mult;
    total += BigInt(left) * right;
    before[v] = true;
  }
  return total;
}

template <class FreeTerm>
Rational expectation_with(const Multigraph& graph, std::span<const Vertex> prefix,
                          FreeTerm&& free_term) {
  const std::vector<bool> fixed = fixed_mask(graph, prefix);
  Rational total(prefix_part(graph, prefix));
  for (Vertex v = 0; v < graph.vertex_count(); ++v) {
    if (!fixed[v]) total += free_term(v, fixed);
  }
  return total;
}

Rational closed_form_term(const Multigraph& graph, Vertex v, const std::vector<bool>& fixed) {
  long q = 0;
  for (const auto& [w, mult] : graph.neighbours(v)) {
    if (!fixed[w]) q += mult;
  }
  const long d = graph.degree(v);
  Rational e(q * (3 * d - 2 * q - 1), 6);
  e.canonicalize();
  return e;
}

}  // namespace

ExpectationTable::ExpectationTable(const Multigraph& graph, Vertex v,
                                   const std::vector<bool>& fixed) {
  if (v >= graph.vertex_count() || fixed.size() != graph.vertex_count()) {
    throw InvalidInput("expectation table arguments do not match the graph");
  }
  degree_ = graph.degree(v);
  std::vector<unsigned> mult;
  for (const auto& [w, m] : graph.neighbours(v)) {
    if (!fixed[w]) mult.push_back(m);
  }
  p_ = static_cast<unsigned>(mult.size());
  for (unsigned m : mult) q_ += m;
  cells_.assign(std::size_t{p_ + 1} * (p_ + 1) * (q_ + 1), BigInt(0));
  auto at = [&](unsigned j, unsigned k, unsigned l) -> BigInt& {
    return cells_[(std::size_t{j} * (p_ + 1) + k) * (q_ + 1) + l];
  };
  at(0, 0, 0) = 1;
  for (unsigned j = 1; j <= p_; ++j) {
    const unsigned m = mult[j - 1];
    for (unsigned k = 0; k <= j; ++k) {
      for (unsigned l = 0; l <= q_; ++l) {
        BigInt value = 0;
        if (k >= 1 && l >= m) value += BigInt(k) * at(j - 1, k - 1, l - m);
        if (k < j) value += BigInt(j - k) * at(j - 1, k, l);
        at(j, k, l) = std::move(value);
      }
    }
  }
}

const BigInt& ExpectationTable::count(unsigned j, unsigned k, unsigned l) const {
  if (j > p_ || k > p_ || l > q_) throw InvalidInput("expectation table index out of range");
  return cells_[(std::size_t{j} * (p_ + 1) + k) * (q_ + 1) + l];
}

Rational ExpectationTable::expectation() const {
  BigInt weighted = 0;
  BigInt permutations = 0;  // ends at (p+1)!
  for (unsigned k = 0; k <= p_; ++k) {
    for (unsigned l = 0; l <= q_; ++l) {
      const BigInt& c = count(p_, k, l);
      permutations += c;
      weighted += c * BigInt(static_cast<unsigned long>(degree_ - l) * l);
    }
  }
  Rational e(weighted, permutations);
  e.canonicalize();
  return e;
}

Rational conditional_expectation(const Multigraph& graph, std::span<const Vertex> prefix) {
  return expectation_with(graph, prefix, [&](Vertex v, const std::vector<bool>& fixed) {
    return ExpectationTable(graph, v, fixed).expectation();
  });
}

Rational conditional_expectation_closed_form(const Multigraph& graph,
                                             std::span<const Vertex> prefix) {
  if (!graph.is_simple()) throw InvalidInput("closed-form expectation needs a simple graph");
  return expectation_with(graph, prefix, [&](Vertex v, const std::vector<bool>& fixed) {
    return closed_form_term(graph, v, fixed);
  });
}

RandomTrials random_order_trials(const Multigraph& graph, std::uint64_t seed,
                                 std::uint64_t trials) {
  if (trials == 0) throw InvalidInput("random trials need at least one sample");
  std::mt19937_64 rng(seed);
  std::vector<Vertex> perm(graph.vertex_count());
  for (Vertex v = 0; v < perm.size(); ++v) perm[v] = v;
  RandomTrials result{VertexOrder::identity(graph.vertex_count()), 0, Rational(0)};
  BigInt sum = 0;
  bool have = false;
  for (std::uint64_t i = 0; i < trials; ++i) {
    // Fisher-Yates; reproducible for a fixed seed and standard library.
    for (std::size_t j = perm.size(); j > 1; --j) {
      std::uniform_int_distribution<std::size_t> pick(0, j - 1);
      std::swap(perm[j - 1], perm[pick(rng)]);
    }
    VertexOrder order(perm);
    const std::uint64_t value = rho_delta_sum(graph, order);
    sum += BigInt(static_cast<unsigned long>(value));
    if (!have || value > result.best_value) {
      result.best = std::move(order);
      result.best_value = value;
      have = true;
    }
  }
  result.mean = Rational(sum, BigInt(static_cast<unsigned long>(trials)));
  result.mean.canonicalize();
  return result;
}

DerandomizedResult derandomized_order(const Multigraph& graph) {
  const std::size_t n = graph.vertex_count();
  const bool simple = graph.is_simple();
  auto expect = [&](std::span<const Vertex> prefix) {
    return simple ? conditional_expectation_closed_form(graph, prefix)
                  : conditional_expectation(graph, prefix);
  };
  std::vector<Vertex> prefix;
  std::vector<bool> used(n, false);
  DerandomizedResult result{VertexOrder::identity(0), {expect(prefix)}};
  for (std::size_t i = 0; i < n; ++i) {
    bool have = false;
    Vertex best = 0;
    Rational best_value;
    for (Vertex v = 0; v < n; ++v) {
      if (used[v]) continue;
      prefix.push_back(v);
      Rational e = expect(prefix);
      prefix.pop_back();
      if (!have || e > best_value) {
        best = v;
        best_value = std::move(e);
        have = true;
      }
    }
    prefix.push_back(best);
    used[best] = true;
    result.chain.push_back(std::move(best_value));
  }
  result.order = VertexOrder(std::move(prefix));
  return result;
}

}  // namespace indeg
