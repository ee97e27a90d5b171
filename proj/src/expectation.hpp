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
#include <span>
#include <vector>

#include "graph.hpp"
#include "numeric.hpp"

namespace indeg {

// count(j, k, l): permutations of v and its first j free neighbours in which
// v has k successors and right-degree l. Free neighbours are the distinct
// neighbours outside the fixed prefix; parallel edges shift l by their
// multiplicity.
class ExpectationTable {
 public:
  ExpectationTable(const Multigraph& graph, Vertex v, const std::vector<bool>& fixed);

  unsigned free_neighbours() const { return p_; }
  unsigned free_degree() const { return q_; }
  const BigInt& count(unsigned j, unsigned k, unsigned l) const;
  // Expected leftdeg * rightdeg of v over the permutations of the free part.
  Rational expectation() const;

 private:
  unsigned p_ = 0;
  unsigned q_ = 0;
  unsigned degree_ = 0;
  std::vector<BigInt> cells_;  // (p+1) x (p+1) x (q+1), row-major in j, k, l
};

// Expected sum of leftdeg * rightdeg over uniformly random orders that start
// with `prefix`. Throws InvalidInput on a repeated or out-of-range vertex.
Rational conditional_expectation(const Multigraph& graph, std::span<const Vertex> prefix);

// Same value via the closed form for free vertices; simple graphs only
// (InvalidInput otherwise).
Rational conditional_expectation_closed_form(const Multigraph& graph,
                                             std::span<const Vertex> prefix);

struct RandomTrials {
  VertexOrder best;
  std::uint64_t best_value = 0;
  // Exact mean of the sampled objective values.
  Rational mean;
};

// Samples `trials` uniform orders from a generator seeded with `seed`.
// Throws InvalidInput when trials is zero.
RandomTrials random_order_trials(const Multigraph& graph, std::uint64_t seed,
                                 std::uint64_t trials);

struct DerandomizedResult {
  VertexOrder order;
  // chain[i] is the conditional expectation after fixing i vertices;
  // chain[n] is the objective of the order.
  std::vector<Rational> chain;
};

// Fixes vertices left to right, each time taking the vertex whose addition
// maximises the conditional expectation (lowest id on ties).
DerandomizedResult derandomized_order(const Multigraph& graph);

}  // namespace indeg
