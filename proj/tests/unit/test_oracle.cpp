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

#include <random>
#include <set>

#include "doctest.h"
#include "errors.hpp"
#include "oracle.hpp"
#include "support/helpers.hpp"

using namespace indeg;
using namespace indeg::testing;

TEST_CASE("enumeration counts") {
  Multigraph k3 = complete(3);
  std::size_t all = 0;
  std::size_t acyclic = 0;
  std::set<std::vector<Vertex>> seen;
  for_each_orientation(k3, [&](const Orientation& o) {
    ++all;
    acyclic += is_acyclic(k3, o) ? 1 : 0;
    seen.insert(o.heads());
  });
  CHECK(all == 8);
  CHECK(acyclic == 6);
  CHECK(seen.size() == 8);
  std::size_t single = 0;
  for_each_orientation(path(2), [&](const Orientation&) { ++single; });
  CHECK(single == 2);
  std::size_t orders = 0;
  for_each_order(Multigraph::build(3, {}), [&](const VertexOrder&) { ++orders; });
  CHECK(orders == 6);
  CHECK_THROWS_AS(for_each_order(Multigraph::build(11, {}), [](const VertexOrder&) {}),
                  PreconditionError);
  std::vector<Edge> many(21, Edge{0, 1});
  CHECK_THROWS_AS(for_each_orientation(Multigraph::build(2, many), [](const Orientation&) {}),
                  PreconditionError);
}

TEST_CASE("brute_optimal on K3 and G1") {
  Multigraph k3 = complete(3);
  Objective sq = Objective::phi_sum(ConvexSpec::square());
  auto cyc = brute_optimal(k3, sq, Regime::kCyclic);
  CHECK(std::get<LiftedCost>(cyc.key) == LiftedCost(0, Rational(3)));
  CHECK(cyc.optimum_count == 2);
  REQUIRE(cyc.orientation.has_value());
  CHECK(compare(sq, evaluate(sq, k3, *cyc.orientation), cyc.key) == 0);
  auto acyc = brute_optimal(k3, sq, Regime::kAcyclic);
  CHECK(std::get<LiftedCost>(acyc.key) == LiftedCost(0, Rational(5)));
  CHECK(acyc.optimum_count == 6);
  REQUIRE(acyc.order.has_value());
}

TEST_CASE("vertex certificate") {
  Multigraph k3 = complete(3);
  VertexCertificate c = vertex_certificate(k3, orientation_of_order(k3, VertexOrder({0, 1, 2})));
  CHECK(c.slopes == std::vector<std::int64_t>{3, 2, 1});
  CHECK(c.unique);
  CHECK(c.minimum == 1 + 1 + 2);
  CHECK_THROWS_AS(vertex_certificate(k3, Orientation(k3, {1, 2, 0})), InvalidInput);

  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 20; ++trial) {
    RandomGraphParams p;
    p.n = 2 + rng() % 6;
    p.m = p.n - 1;
    p.seed = rng();
    p.connected = true;
    Multigraph tree = random_multigraph(p);
    for_each_orientation(tree, [&](const Orientation& o) {
      CHECK(vertex_certificate(tree, o).unique);
    });
  }
}

TEST_CASE("cycle reversal decomposition") {
  Multigraph k3 = from_pairs(3, {{0, 1}, {1, 2}, {2, 0}});
  CycleDecomposition d = cycle_reversal_decomposition(k3, Orientation(k3, {1, 2, 0}));
  CHECK(d.cycle.size() == 3);
  CHECK(d.reversals.size() == 3);
  CHECK(d.averages);
  Multigraph par = from_pairs(2, {{0, 1}, {0, 1}});
  CycleDecomposition two = cycle_reversal_decomposition(par, Orientation(par, {1, 0}));
  CHECK(two.cycle.size() == 2);
  CHECK(two.averages);
  CHECK_THROWS_AS(cycle_reversal_decomposition(par, Orientation(par, {1, 1})), InvalidInput);
}

TEST_CASE("the cycle found is a shortest directed cycle") {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 40; ++trial) {
    Multigraph g = random_graph(rng, 2, 5, 7, false, true);
    for_each_orientation(g, [&](const Orientation& o) {
      if (is_acyclic(g, o)) return;
      CycleDecomposition d = cycle_reversal_decomposition(g, o);
      // Consecutive arcs chain head to tail and close up.
      for (std::size_t j = 0; j < d.cycle.size(); ++j) {
        EdgeId a = d.cycle[j];
        EdgeId b = d.cycle[(j + 1) % d.cycle.size()];
        CHECK(o.head(a) == o.tail(g, b));
      }
      // No shorter cycle: a 2-cycle would be an opposite parallel pair.
      if (d.cycle.size() > 2) {
        for (EdgeId a = 0; a < g.edge_count(); ++a) {
          for (EdgeId b = a + 1; b < g.edge_count(); ++b) {
            CHECK_FALSE((o.head(a) == o.tail(g, b) && o.head(b) == o.tail(g, a)));
          }
        }
      }
      CHECK(d.averages);
    });
  }
}
