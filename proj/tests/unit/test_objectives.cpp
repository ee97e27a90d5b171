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

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "doctest.h"
#include "errors.hpp"
#include "objectives.hpp"
#include "oracle.hpp"
#include "support/helpers.hpp"

using namespace indeg;
using namespace indeg::testing;

namespace {

// All non-increasing sequences of length len over 0..max_entry.
std::vector<std::vector<unsigned>> multisets(unsigned len, unsigned max_entry) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur;
  std::function<void(unsigned)> rec = [&](unsigned cap) {
    if (cur.size() == len) {
      out.push_back(cur);
      return;
    }
    for (unsigned x = 0; x <= cap; ++x) {
      cur.push_back(x);
      rec(x);
      cur.pop_back();
    }
  };
  rec(max_entry);
  return out;
}

Rational sum_of_squares(const std::vector<unsigned>& in) {
  Rational s(0);
  for (unsigned z : in) s += Rational(static_cast<long>(z) * z);
  return s;
}

int sign(std::strong_ordering o) { return o < 0 ? -1 : (o > 0 ? 1 : 0); }

}  // namespace

TEST_CASE("validate_convex reports breakpoints") {
  CHECK(validate_convex(ConvexSpec::square(), 4) == std::vector<unsigned>{1, 2, 3});
  CHECK(validate_convex(ConvexSpec::linear(Rational(2), Rational(5)), 4).empty());
  auto table = ConvexSpec::table({Rational(0), Rational(0), Rational(1), Rational(3)});
  CHECK(validate_convex(table, 3) == std::vector<unsigned>{1, 2});
  auto bad = ConvexSpec::table({Rational(0), Rational(2), Rational(3)});
  try {
    validate_convex(bad, 2);
    FAIL("expected a convexity violation");
  } catch (const ConvexityViolation& e) {
    CHECK(e.witness() == 1);
  }
  // The same table is fine when not declared convex.
  auto free_form = ConvexSpec::table({Rational(0), Rational(2), Rational(3)}, false);
  CHECK(validate_convex(free_form, 2).empty());
  CHECK_THROWS_AS(validate_convex(table, 5), InvalidInput);
  CHECK_THROWS_AS(table(4), InvalidInput);
}

TEST_CASE("builtin specs evaluate exactly") {
  CHECK(ConvexSpec::square()(3) == 9);
  CHECK(ConvexSpec::cube()(3) == 27);
  CHECK(ConvexSpec::binom2()(4) == 6);
  CHECK(ConvexSpec::abs_balance(5)(1) == 3);
  CHECK_THROWS(ConvexSpec::abs_balance()(1));
  CHECK(ConvexSpec::exp_base(BigInt(3))(4) == 81);
  CHECK(ConvexSpec::neg_exp_base(BigInt(3))(4) == Rational(1, 81));
  // No underflow far beyond double range.
  Rational tiny = ConvexSpec::neg_exp_base(BigInt(2))(400);
  CHECK(tiny > 0);
  CHECK(tiny * pow(BigInt(2), 400) == 1);
  CHECK(ConvexSpec::linear(Rational(2), Rational(5))(3) == 11);
  CHECK(ConvexSpec::zero()(7) == 0);
}

TEST_CASE("lift penalises indegrees outside [f, g]") {
  VertexCost fixed_two = lift(ConvexSpec::zero(), 2, 2);
  CHECK(fixed_two(2) == LiftedCost(0, Rational(0)));
  CHECK(fixed_two(0) == LiftedCost(2, Rational(0)));
  CHECK(lift(ConvexSpec::square(), 1, 3)(5) == LiftedCost(2, Rational(9)));
  CHECK_THROWS_AS(lift(ConvexSpec::zero(), 3, 2), InvalidInput);

  // f = 0, g = d reproduces the plain spec.
  VertexCost full = lift(ConvexSpec::cube(), 0, 4);
  for (unsigned z = 0; z <= 4; ++z) CHECK(full(z) == LiftedCost(0, ConvexSpec::cube()(z)));
}

TEST_CASE("LiftedCost order and arithmetic") {
  LiftedCost a(1, Rational(-5));
  LiftedCost b(0, Rational(100));
  LiftedCost c(1, Rational(3));
  CHECK(b < a);
  CHECK(a < c);
  CHECK(a + b == b + a);
  CHECK((a + b) + c == a + (b + c));
  CHECK(a + b - b == a);
}

TEST_CASE("evaluate on the small examples") {
  Multigraph k3 = from_pairs(3, {{0, 1}, {1, 2}, {2, 0}});
  Orientation euler(k3, {1, 2, 0});
  CHECK(std::get<Rational>(evaluate(Objective::of(ObjectiveKind::kRhoDeltaSum), k3, euler)) == 3);
  auto key = evaluate(Objective::of(ObjectiveKind::kDecMin), k3, VertexOrder({0, 1, 2}));
  CHECK(std::get<SortedKey>(key) == SortedKey{2, 1, 0});
  auto inc = evaluate(Objective::of(ObjectiveKind::kIncMax), k3, VertexOrder({0, 1, 2}));
  CHECK(std::get<SortedKey>(inc) == SortedKey{0, 1, 2});
  auto forb = evaluate(Objective::of(ObjectiveKind::kForbiddenSubpaths), k3, VertexOrder({0, 1, 2}));
  CHECK(std::get<Rational>(forb) == 1);
  auto sq = evaluate(Objective::phi_sum(ConvexSpec::square()), k3, euler);
  CHECK(std::get<LiftedCost>(sq) == LiftedCost(0, Rational(3)));

  Multigraph w = Multigraph::build(3, {{0, 1}, {1, 2}}, std::vector<Rational>{Rational(5), Rational(1)});
  auto mw = evaluate(Objective::of(ObjectiveKind::kMaxWeightedIndeg), w, VertexOrder({1, 0, 2}));
  CHECK(std::get<Rational>(mw) == 5);
  CHECK_THROWS_AS(evaluate(Objective::of(ObjectiveKind::kDecMin), k3, VertexOrder({0, 1})),
                  InvalidInput);
}

TEST_CASE("preference direction of every objective") {
  Objective dec_min = Objective::of(ObjectiveKind::kDecMin);
  Objective inc_max = Objective::of(ObjectiveKind::kIncMax);
  Objective inc_min = Objective::of(ObjectiveKind::kIncMin);
  Objective dec_max = Objective::of(ObjectiveKind::kDecMax);
  CHECK(better(dec_min, SortedKey{1, 1, 0}, SortedKey{2, 0, 0}));
  CHECK(better(inc_max, SortedKey{0, 1, 1}, SortedKey{0, 0, 2}));
  CHECK(better(inc_min, SortedKey{0, 0, 2}, SortedKey{0, 1, 1}));
  CHECK(better(dec_max, SortedKey{2, 0, 0}, SortedKey{1, 1, 0}));
  Objective rho = Objective::of(ObjectiveKind::kRhoDeltaSum);
  CHECK(better(rho, Rational(4), Rational(3)));
  Objective mw = Objective::of(ObjectiveKind::kMaxWeightedIndeg);
  CHECK(better(mw, Rational(3), Rational(4)));
}

TEST_CASE("dec_min and inc_max agree with the exponential sums") {
  CHECK(decmin_equals_exp_key(std::vector<unsigned>{2, 0, 0}, std::vector<unsigned>{1, 1, 0}));
  CHECK(decmin_equals_exp_key(std::vector<unsigned>{1, 1, 0}, std::vector<unsigned>{1, 1, 0}));
  // Independent check of the numbers: 3^2 + 1 + 1 = 11 > 3 + 3 + 1 = 7.
  CHECK(pow(BigInt(3), 2) + 2 == 11);
  std::size_t pairs = 0;
  for (unsigned n = 2; n <= 6; ++n) {
    auto all = multisets(n, 5);
    for (const auto& a : all) {
      for (const auto& b : all) {
        // Unsorted copies exercise the comparator's own sorting.
        std::vector<unsigned> ra(a.rbegin(), a.rend());
        CHECK(decmin_equals_exp_key(ra, b));
        CHECK(incmax_equals_negexp_key(ra, b));
        ++pairs;
      }
    }
  }
  CHECK(pairs > 200000);
}

TEST_CASE("separable forms induce the objective's preorder") {
  std::mt19937_64 rng(3);
  const ObjectiveKind kinds[] = {ObjectiveKind::kDecMin, ObjectiveKind::kIncMax,
                                 ObjectiveKind::kIncMin, ObjectiveKind::kDecMax,
                                 ObjectiveKind::kRhoDeltaSum,
                                 ObjectiveKind::kForbiddenSubpaths};
  for (int trial = 0; trial < 40; ++trial) {
    Multigraph g = random_graph(rng, 2, 6, 9, trial % 2 == 0, false);
    std::vector<Orientation> all;
    for_each_orientation(g, [&](const Orientation& o) { all.push_back(o); });
    for (ObjectiveKind kind : kinds) {
      Objective obj = Objective::of(kind);
      auto form = separable_form(obj, g);
      REQUIRE(form.has_value());
      for (int pair = 0; pair < 60; ++pair) {
        const Orientation& x = all[rng() % all.size()];
        const Orientation& y = all[rng() % all.size()];
        auto dx = degrees_of_orientation(g, x);
        auto dy = degrees_of_orientation(g, y);
        int native = sign(compare(obj, evaluate(obj, g, dx), evaluate(obj, g, dy)));
        int encoded = sign(phi_sum_cost(form->costs, dx.in) <=> phi_sum_cost(form->costs, dy.in));
        CHECK(native == encoded);
      }
    }
  }
  Multigraph w = Multigraph::build(2, {{0, 1}}, std::vector<Rational>{Rational(2)});
  CHECK_FALSE(separable_form(Objective::of(ObjectiveKind::kMaxWeightedIndeg), w).has_value());
}

TEST_CASE("forbidden subpaths and square sum rank degree vectors alike") {
  std::mt19937_64 rng(9);
  Objective forb = Objective::of(ObjectiveKind::kForbiddenSubpaths);
  for (int trial = 0; trial < 30; ++trial) {
    Multigraph g = random_graph(rng, 2, 6, 9, false, false);
    std::vector<DegreeVector> degs;
    for_each_orientation(g, [&](const Orientation& o) { degs.push_back(degrees_of_orientation(g, o)); });
    for (int pair = 0; pair < 50; ++pair) {
      const auto& x = degs[rng() % degs.size()];
      const auto& y = degs[rng() % degs.size()];
      int a = sign(compare(forb, evaluate(forb, g, x), evaluate(forb, g, y)));
      int b = cmp(sum_of_squares(x.in), sum_of_squares(y.in));
      b = (b > 0) - (b < 0);
      CHECK(a == b);
    }
  }
}

TEST_CASE("abs_balance phi-sum is the total imbalance") {
  std::mt19937_64 rng(13);
  Objective obj = Objective::phi_sum(ConvexSpec::abs_balance());
  for (int trial = 0; trial < 30; ++trial) {
    Multigraph g = random_graph(rng, 2, 6, 9, false, false);
    for_each_orientation(g, [&](const Orientation& o) {
      auto d = degrees_of_orientation(g, o);
      long total = 0;
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        total += std::abs(static_cast<long>(d.in[v]) - static_cast<long>(d.out[v]));
      }
      CHECK(std::get<LiftedCost>(evaluate(obj, g, d)) == LiftedCost(0, Rational(total)));
    });
  }
}

TEST_CASE("objective bounds and per-vertex specs") {
  Multigraph p = path(3);
  Objective obj = Objective::phi_sum(ConvexSpec::zero());
  obj.lower = std::vector<unsigned>{1, 0, 1};
  obj.upper = std::vector<unsigned>{1, 0, 1};
  auto costs = obj.vertex_costs(p);
  CHECK(costs[0].lower == 1);
  CHECK(*costs[0].upper == 1);
  obj.lower = std::vector<unsigned>{1, 0};
  CHECK_THROWS_AS(obj.vertex_costs(p), InvalidInput);
  Objective per = Objective::phi_sum(std::vector<ConvexSpec>{ConvexSpec::square(), ConvexSpec::cube()});
  CHECK_THROWS_AS(per.vertex_costs(p), InvalidInput);
}
