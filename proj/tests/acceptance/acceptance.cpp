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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails or exceeds its time limit. `acceptance N ...` runs a subset.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "balanced_order.hpp"
#include "errors.hpp"
#include "expectation.hpp"
#include "flow_solver.hpp"
#include "instances.hpp"
#include "oracle.hpp"
#include "smallest_last.hpp"
#include "subset_dp.hpp"
#include "support/helpers.hpp"

namespace {

using namespace indeg;
using indeg::testing::random_graph;

// Thrown by require() with the first failing detail.
struct Failure {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

std::string show(const Multigraph& g) {
  std::ostringstream out;
  out << "n=" << g.vertex_count() << " edges";
  for (const Edge& e : g.edges()) out << " " << e.u << "-" << e.v;
  return out.str();
}

std::string show(const ObjectiveKey& key) {
  if (const auto* s = std::get_if<SortedKey>(&key)) {
    std::string out = "[";
    for (std::size_t i = 0; i < s->size(); ++i) out += (i ? "," : "") + std::to_string((*s)[i]);
    return out + "]";
  }
  if (const auto* l = std::get_if<LiftedCost>(&key)) {
    return "(" + std::to_string(l->penalty) + ", " + to_string(l->base) + ")";
  }
  return to_string(std::get<Rational>(key));
}

// Retries until the generator accepts the parameters it drew.
template <class F>
Multigraph draw(std::mt19937_64& rng, F&& make) {
  for (int attempt = 0;; ++attempt) {
    try {
      return make(rng);
    } catch (const InvalidInput&) {
      if (attempt > 1000) throw;
    }
  }
}

Rational harmonic(std::size_t n) {
  Rational h(0);
  for (std::size_t i = 1; i <= n; ++i) h += Rational(1, static_cast<long>(i));
  h.canonicalize();
  return h;
}

Rational random_rational(std::mt19937_64& rng, int lo, int hi, int max_den) {
  Rational r(std::uniform_int_distribution<int>(lo, hi)(rng),
             std::uniform_int_distribution<int>(1, max_den)(rng));
  r.canonicalize();
  return r;
}

std::uint64_t brute_max_rho_delta(const Multigraph& g) {
  std::uint64_t best = 0;
  for_each_order(g, [&](const VertexOrder& o) { best = std::max(best, rho_delta_sum(g, o)); });
  return best;
}

Rational exhaustive_mean(const Multigraph& g, std::span<const Vertex> prefix = {}) {
  BigInt total = 0;
  std::uint64_t count = 0;
  for_each_order(g, [&](const VertexOrder& o) {
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      if (o[i] != prefix[i]) return;
    }
    total += static_cast<unsigned long>(rho_delta_sum(g, o));
    ++count;
  });
  Rational mean(total, BigInt(static_cast<unsigned long>(count)));
  mean.canonicalize();
  return mean;
}

BigInt floor_quarter_square_sum(const Multigraph& g) {
  BigInt s = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    s += static_cast<unsigned long>(g.degree(v) / 2) * ((g.degree(v) + 1) / 2);
  }
  return s;
}

// --- suites ---------------------------------------------------------------

std::vector<Multigraph> flow_suite() {
  std::mt19937_64 rng(3001);
  std::vector<Multigraph> out;
  for (int i = 0; i < 200; ++i) {
    out.push_back(draw(rng, [&](auto& r) { return random_graph(r, 2, 7, 12, i % 3 == 0, false); }));
  }
  return out;
}

std::vector<Multigraph> dp_suite() {
  std::mt19937_64 rng(3006);
  std::vector<Multigraph> out;
  for (int i = 0; i < 100; ++i) {
    out.push_back(draw(rng, [&](auto& r) { return random_graph(r, 1, 8, 14, i % 2 == 0, false); }));
  }
  return out;
}

std::vector<Multigraph> subcubic_suite() {
  std::mt19937_64 rng(3007);
  std::vector<Multigraph> out;
  for (int i = 0; i < 100; ++i) {
    out.push_back(
        draw(rng, [&](auto& r) { return random_graph(r, 2, 9, 14, i % 2 == 0, true, 3U); }));
  }
  return out;
}

std::vector<Multigraph> expectation_suite() {
  std::mt19937_64 rng(3008);
  std::vector<Multigraph> out;
  for (int i = 0; i < 50; ++i) {
    out.push_back(draw(rng, [&](auto& r) { return random_graph(r, 1, 7, 12, i % 2 == 0, false); }));
  }
  return out;
}

// --- criteria ---------------------------------------------------------------

std::string fig4_keys() {
  const Multigraph g = fig4_graph();
  const ObjectiveKey dec = exact_subset_dp(g, Objective::of(ObjectiveKind::kDecMin)).key;
  const ObjectiveKey inc = exact_subset_dp(g, Objective::of(ObjectiveKind::kIncMax)).key;
  require(dec == ObjectiveKey(SortedKey{3, 3, 3, 3, 2, 2, 1, 1, 0}), "dec_min key " + show(dec));
  require(inc == ObjectiveKey(SortedKey{0, 1, 2, 2, 2, 2, 2, 3, 4}), "inc_max key " + show(inc));
  return "dec_min " + show(dec) + ", inc_max " + show(inc);
}

std::string gk_family() {
  const Objective sq = Objective::phi_sum(ConvexSpec::square());
  Rational previous(0);
  std::string ratios;
  for (unsigned k = 1; k <= 5; ++k) {
    const Multigraph g = gen_gk(k);
    const auto opt = std::get<LiftedCost>(exact_subset_dp(g, sq).key);
    require(opt.penalty == 0 && opt.base == 7 * k - 2,
            "k=" + std::to_string(k) + " optimum " + to_string(opt.base));
    const VertexOrder adv = gk_adversarial_order(k);
    require(is_greedy_run(g, adv), "k=" + std::to_string(k) + " adversarial order is not greedy");
    const BigInt value = square_sum(g, adv);
    require(value == 9 * k - 4, "k=" + std::to_string(k) + " adversarial value " + value.get_str());
    Rational ratio(value, BigInt(7 * k - 2));
    ratio.canonicalize();
    require(ratio > previous && ratio < Rational(9, 7), "ratio not increasing below 9/7 at k=" +
                                                            std::to_string(k));
    previous = ratio;
    ratios += (k > 1 ? " " : "") + to_string(ratio);
  }
  return "ratios " + ratios;
}

std::string flow_equivalence() {
  std::mt19937_64 rng(3003);
  std::vector<Objective> objectives = {
      Objective::phi_sum(ConvexSpec::square()),   Objective::phi_sum(ConvexSpec::cube()),
      Objective::phi_sum(ConvexSpec::binom2()),   Objective::phi_sum(ConvexSpec::abs_balance()),
      Objective::of(ObjectiveKind::kDecMin),      Objective::of(ObjectiveKind::kIncMax),
  };
  int feasible = 0;
  int infeasible = 0;
  for (const Multigraph& g : flow_suite()) {
    for (const Objective& obj : objectives) {
      const ObjectiveKey got = evaluate(obj, g, solve_cyclic(g, obj).orientation);
      const ObjectiveKey want = brute_optimal(g, obj, Regime::kCyclic).key;
      require(compare(obj, got, want) == 0, std::string(to_string(obj.kind)) + " " +
                                                show(got) + " vs " + show(want) + " on " + show(g));
    }
    // Lifted zero: the penalty vanishes exactly when the bounds can be met.
    Objective bounded = Objective::phi_sum(ConvexSpec::zero());
    std::vector<unsigned> f, gb;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      const unsigned lo = std::uniform_int_distribution<unsigned>(0, g.degree(v))(rng);
      const unsigned hi = std::uniform_int_distribution<unsigned>(lo, std::min(g.degree(v), lo + 1))(rng);
      f.push_back(lo);
      gb.push_back(hi);
    }
    bounded.lower = f;
    bounded.upper = gb;
    bool exists = false;
    for_each_orientation(g, [&](const Orientation& o) {
      const DegreeVector d = degrees_of_orientation(g, o);
      bool ok = true;
      for (Vertex v = 0; v < g.vertex_count(); ++v) ok = ok && f[v] <= d.in[v] && d.in[v] <= gb[v];
      exists = exists || ok;
    });
    const ObjectiveKey got = evaluate(bounded, g, solve_cyclic(g, bounded).orientation);
    const ObjectiveKey want = brute_optimal(g, bounded, Regime::kCyclic).key;
    require(compare(bounded, got, want) == 0, "lifted zero " + show(got) + " vs " + show(want));
    require((std::get<LiftedCost>(got).penalty == 0) == exists,
            "penalty " + show(got) + " but bounded orientation exists=" + std::to_string(exists));
    (exists ? feasible : infeasible) += 1;
  }
  return "200 graphs x 7 objectives; bounds feasible " + std::to_string(feasible) +
         ", infeasible " + std::to_string(infeasible);
}

std::string simultaneous_optimality() {
  const Objective dec = Objective::of(ObjectiveKind::kDecMin);
  const Objective inc = Objective::of(ObjectiveKind::kIncMax);
  const Objective sq = Objective::phi_sum(ConvexSpec::square());
  for (const Multigraph& g : flow_suite()) {
    const Orientation o = solve_cyclic(g, dec).orientation;
    require(compare(inc, evaluate(inc, g, o), brute_optimal(g, inc, Regime::kCyclic).key) == 0,
            "dec_min orientation misses the inc_max optimum on " + show(g));
    require(compare(sq, evaluate(sq, g, o), brute_optimal(g, sq, Regime::kCyclic).key) == 0,
            "dec_min orientation misses the square-sum optimum on " + show(g));
  }
  return "200 graphs";
}

std::string weighted_smallest_last_optimal() {
  std::mt19937_64 rng(3005);
  for (int i = 0; i < 200; ++i) {
    const Multigraph shape = draw(rng, [&](auto& r) { return random_graph(r, 1, 8, 14, i % 2 == 0, false); });
    std::vector<Rational> w;
    for (EdgeId e = 0; e < shape.edge_count(); ++e) w.push_back(random_rational(rng, 0, 12, 5));
    const Multigraph g = Multigraph::build(shape.vertex_count(), shape.edges(), w);
    const Rational got = max_weighted_left_degree(g, weighted_smallest_last(g));
    std::optional<Rational> best;
    for_each_order(g, [&](const VertexOrder& o) {
      Rational v = max_weighted_left_degree(g, o);
      if (!best || v < *best) best = v;
    });
    require(got == *best, to_string(got) + " vs " + to_string(*best) + " on " + show(g));
  }
  return "200 weighted graphs";
}

std::string subset_dp_equivalence() {
  std::mt19937_64 rng(3016);
  int nonconvex = 0;
  const Objective kinds[] = {
      Objective::of(ObjectiveKind::kDecMin),      Objective::of(ObjectiveKind::kIncMax),
      Objective::of(ObjectiveKind::kIncMin),      Objective::of(ObjectiveKind::kDecMax),
      Objective::of(ObjectiveKind::kRhoDeltaSum), Objective::of(ObjectiveKind::kMaxWeightedIndeg),
      Objective::of(ObjectiveKind::kForbiddenSubpaths)};
  int index = 0;
  for (const Multigraph& g : dp_suite()) {
    std::vector<VertexCost> costs;
    const bool convex = index % 2 == 1;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      std::vector<Rational> values;
      Rational step = random_rational(rng, -6, 6, 3);
      Rational value = random_rational(rng, -5, 5, 4);
      for (unsigned z = 0; z <= g.degree(v); ++z) {
        values.push_back(value);
        if (convex) {
          step += random_rational(rng, 0, 4, 3);
          value += step;
        } else {
          value = random_rational(rng, -9, 9, 4);
        }
      }
      VertexCost c;
      c.spec = ConvexSpec::table(values, convex);
      if (convex) {
        const unsigned lo = std::uniform_int_distribution<unsigned>(0, g.degree(v))(rng);
        c = lift(c.spec, lo, std::uniform_int_distribution<unsigned>(lo, g.degree(v))(rng));
      }
      costs.push_back(c);
    }
    nonconvex += convex ? 0 : 1;
    const LiftedCost got = exact_subset_dp(g, std::span<const VertexCost>(costs)).cost;
    const LiftedCost want = brute_min_cost(g, costs, Regime::kAcyclic).cost;
    require(got == want, "tables (" + std::to_string(got.penalty) + ", " + to_string(got.base) +
                             ") vs (" + std::to_string(want.penalty) + ", " + to_string(want.base) +
                             ") on " + show(g));
    const Objective& obj = kinds[index % std::size(kinds)];
    const ObjectiveKey k = exact_subset_dp(g, obj).key;
    const ObjectiveKey b = brute_optimal(g, obj, Regime::kAcyclic).key;
    require(compare(obj, k, b) == 0,
            std::string(to_string(obj.kind)) + " " + show(k) + " vs " + show(b) + " on " + show(g));
    ++index;
  }
  return "100 graphs, " + std::to_string(nonconvex) + " with non-convex tables";
}

// Sum over end-components of the cheapest non-cut vertex's forced
// imbalance; a graph that is one block pays its two cheapest vertices.
std::uint64_t end_component_formula(const Multigraph& g) {
  auto cost = [&](Vertex v) -> std::uint64_t { return (g.degree(v) / 2) * ((g.degree(v) + 1) / 2); };
  const BlockTree t = block_tree(g);
  if (t.blocks.size() == 1) {
    std::vector<std::uint64_t> c;
    for (Vertex v = 0; v < g.vertex_count(); ++v) c.push_back(cost(v));
    std::sort(c.begin(), c.end());
    return c[0] + c[1];
  }
  std::uint64_t total = 0;
  for (std::size_t b = 0; b < t.blocks.size(); ++b) {
    if (!t.is_end_component(b)) continue;
    std::uint64_t best = UINT64_MAX;
    for (Vertex v : t.blocks[b]) {
      if (!t.is_cut_vertex(v)) best = std::min(best, cost(v));
    }
    total += best;
  }
  return total;
}

std::string combine_st_optimal() {
  int blocks = 0;
  for (const Multigraph& g : subcubic_suite()) {
    const CombineStResult r = combine_st_orders(g);
    const std::uint64_t got = rho_delta_sum(g, r.order);
    const std::uint64_t want = brute_max_rho_delta(g);
    require(got == want, std::to_string(got) + " vs " + std::to_string(want) + " on " + show(g));
    const std::uint64_t total = imbalance(g, r.order).total;
    require(total == r.predicted_imbalance, "imbalance differs from the prediction on " + show(g));
    require(total == end_component_formula(g), "imbalance " + std::to_string(total) +
                                                   " vs end-component formula " +
                                                   std::to_string(end_component_formula(g)));
    require(floor_quarter_square_sum(g) - want == total, "bound minus optimum differs on " + show(g));
    blocks += static_cast<int>(block_tree(g).blocks.size());
  }
  return "100 connected subcubic graphs, " + std::to_string(blocks) + " blocks";
}

std::string expectation_engine() {
  std::mt19937_64 rng(3018);
  int simple = 0;
  for (const Multigraph& g : expectation_suite()) {
    require(conditional_expectation(g, {}) == exhaustive_mean(g),
            "E(empty) " + to_string(conditional_expectation(g, {})) + " vs " +
                to_string(exhaustive_mean(g)) + " on " + show(g));
    std::vector<Vertex> perm(g.vertex_count());
    for (Vertex v = 0; v < perm.size(); ++v) perm[v] = v;
    std::shuffle(perm.begin(), perm.end(), rng);
    const std::size_t cut = std::uniform_int_distribution<std::size_t>(0, perm.size())(rng);
    const std::span<const Vertex> prefix(perm.data(), cut);
    require(conditional_expectation(g, prefix) == exhaustive_mean(g, prefix),
            "prefix expectation differs on " + show(g));
    if (g.is_simple()) {
      ++simple;
      for (std::size_t i = 0; i <= perm.size(); ++i) {
        const std::span<const Vertex> p(perm.data(), i);
        require(conditional_expectation(g, p) == conditional_expectation_closed_form(g, p),
                "table and closed form differ on " + show(g));
      }
    }
  }
  return "50 graphs, " + std::to_string(simple) + " simple";
}

std::string derandomization() {
  for (const Multigraph& g : expectation_suite()) {
    const DerandomizedResult d = derandomized_order(g);
    require(d.chain.size() == g.vertex_count() + 1, "chain length");
    require(d.chain.front() == exhaustive_mean(g), "chain does not start at E(empty)");
    for (std::size_t i = 0; i + 1 < d.chain.size(); ++i) {
      require(d.chain[i] <= d.chain[i + 1], "chain decreases at step " + std::to_string(i) +
                                                " on " + show(g));
    }
    const std::uint64_t value = rho_delta_sum(g, d.order);
    require(d.chain.back() == static_cast<unsigned long>(value), "chain end differs from objective");
    require(3 * value >= brute_max_rho_delta(g), "3 * value below optimum on " + show(g));
  }
  return "50 graphs";
}

std::string dichotomy() {
  std::mt19937_64 rng(3010);
  std::set<std::vector<Vertex>> seen;  // n, then endpoints
  std::size_t acyclic = 0, cyclic = 0, graphs = 0;
  while (graphs < 320) {
    const Multigraph g = draw(rng, [&](auto& r) { return random_graph(r, 2, 5, 7, graphs % 3 == 0, true); });
    std::vector<Vertex> key{static_cast<Vertex>(g.vertex_count())};
    for (const Edge& e : g.edges()) key.insert(key.end(), {e.u, e.v});
    if (!seen.insert(key).second) continue;
    ++graphs;
    const std::size_t n = g.vertex_count();
    std::vector<Orientation> all;
    for_each_orientation(g, [&](const Orientation& o) { all.push_back(o); });
    for (const Orientation& o : all) {
      const DegreeVector d = degrees_of_orientation(g, o);
      if (is_acyclic(g, o)) {
        ++acyclic;
        const VertexCertificate c = vertex_certificate(g, o);
        require(c.unique, "certificate not unique on " + show(g));
        const VertexOrder topo = *topological_order(g, o);
        for (std::size_t i = 0; i + 1 < n; ++i) {
          require(c.slopes[topo[i]] > c.slopes[topo[i + 1]], "slopes not decreasing");
        }
        // Independent check: the linear minimum is attained by this vector only.
        std::int64_t best = INT64_MAX;
        std::set<std::vector<unsigned>> argmin;
        for (const Orientation& other : all) {
          const DegreeVector e = degrees_of_orientation(g, other);
          std::int64_t value = 0;
          for (Vertex v = 0; v < n; ++v) value += c.slopes[v] * e.in[v];
          if (value < best) {
            best = value;
            argmin = {e.in};
          } else if (value == best) {
            argmin.insert(e.in);
          }
        }
        require(best == c.minimum && argmin.size() == 1 && *argmin.begin() == d.in,
                "linear minimiser is not unique on " + show(g));
      } else {
        ++cyclic;
        const CycleDecomposition c = cycle_reversal_decomposition(g, o);
        require(c.averages && !c.cycle.empty(), "no averaging decomposition on " + show(g));
        std::vector<unsigned> sum(n, 0);
        for (std::size_t j = 0; j < c.reversals.size(); ++j) {
          require(c.reversals[j] == o.flipped(g, c.cycle[j]), "reversal is not a single flip");
          const DegreeVector e = degrees_of_orientation(g, c.reversals[j]);
          for (Vertex v = 0; v < n; ++v) sum[v] += e.in[v];
        }
        for (Vertex v = 0; v < n; ++v) {
          require(sum[v] == c.cycle.size() * d.in[v], "reversals do not average on " + show(g));
        }
        for (std::size_t j = 0; j < c.cycle.size(); ++j) {
          const EdgeId a = c.cycle[j];
          const EdgeId b = c.cycle[(j + 1) % c.cycle.size()];
          require(o.head(a) == o.tail(g, b), "decomposition cycle is not directed");
        }
      }
    }
  }
  return std::to_string(graphs) + " graphs, " + std::to_string(acyclic) + " acyclic and " +
         std::to_string(cyclic) + " cyclic orientations";
}

std::string two_bounded_identity() {
  std::mt19937_64 rng(3011);
  int graphs = 0;
  std::size_t orders = 0;
  while (graphs < 50) {
    const Multigraph g = draw(rng, [&](auto& r) { return random_graph(r, 3, 8, 13, graphs % 2 == 0, false); });
    if (degeneracy(g) > 2) continue;
    ++graphs;
    // Distinct (n0, n2) over the 2-bounded orders; comparing these covers
    // every pair of orders.
    std::set<std::pair<long, long>> counts;
    std::size_t bounded = 0;
    for_each_order(g, [&](const VertexOrder& o) {
      const DegreeVector d = degrees_of_order(g, o);
      if (*std::max_element(d.in.begin(), d.in.end()) > 2) return;
      ++bounded;
      counts.emplace(std::count(d.in.begin(), d.in.end(), 0U),
                     std::count(d.in.begin(), d.in.end(), 2U));
    });
    require(bounded > 0, "no 2-bounded order although degeneracy <= 2");
    for (const auto& [n0, n2] : counts) {
      for (const auto& [m0, m2] : counts) {
        require(n2 - m2 == n0 - m0, "identity fails on " + show(g));
      }
    }
    orders += bounded;
  }
  return "50 graphs, " + std::to_string(orders) + " 2-bounded orders";
}

std::string greedy_bounds() {
  const Objective sq = Objective::phi_sum(ConvexSpec::square());
  auto check = [&](const Multigraph& g, const VertexOrder& order, const Rational& opt) {
    require(is_greedy_run(g, order), "not a greedy run on " + show(g));
    const Rational value(square_sum(g, order));
    require(value <= Rational(degeneracy(g)) * opt, "degeneracy bound fails on " + show(g));
    require(value <= 4 * harmonic(g.vertex_count()) * opt, "harmonic bound fails on " + show(g));
  };
  std::size_t runs = 0;
  for (const Multigraph& g : dp_suite()) {
    const Rational opt = std::get<LiftedCost>(brute_optimal(g, sq, Regime::kAcyclic).key).base;
    check(g, greedy_min_degree(g, TieBreak::kLowestId), opt);
    check(g, greedy_min_degree(g, TieBreak::kExhaustiveWorst), opt);
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      check(g, greedy_min_degree(g, TieBreak::kSeededRandom, seed), opt);
    }
    runs += 5;
  }
  for (unsigned k = 1; k <= 5; ++k) {
    const Multigraph g = gen_gk(k);
    check(g, gk_adversarial_order(k), std::get<LiftedCost>(exact_subset_dp(g, sq).key).base);
    ++runs;
  }
  return std::to_string(runs) + " greedy runs";
}

std::string scheduling_reduction() {
  std::mt19937_64 rng(3013);
  for (int i = 0; i < 50; ++i) {
    const std::size_t jobs = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    const std::size_t slots = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    const SchedulingInstance inst = random_scheduling_instance(jobs, slots, rng());
    const SchedulingGraph sg = scheduling_to_orientation(inst);
    const CyclicSolution s = solve_cyclic(sg.graph, sg.costs);
    const LiftedCost cost = phi_sum_cost(sg.costs, degrees_of_orientation(sg.graph, s.orientation).in);
    const Rational want = brute_schedule_cost(inst);
    require(cost.penalty == 0, "positive penalty on instance " + std::to_string(i));
    require(cost.base == want, to_string(cost.base) + " vs " + to_string(want));
    const std::vector<unsigned> assignment = schedule_of_orientation(inst, sg, s.orientation);
    require(schedule_cost(inst, assignment) == want, "decoded schedule cost differs");
  }
  return "50 instances";
}

struct Criterion {
  int id;
  const char* title;
  double limit_s;  // 0: no limit
  std::function<std::string()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "fig4 acyclic dec_min and inc_max keys", 1, fig4_keys},
      {2, "G_k exact optimum, adversarial greedy value, ratios", 30, gk_family},
      {3, "flow solver equals cyclic brute force", 120, flow_equivalence},
      {4, "dec_min orientation is simultaneously optimal", 120, simultaneous_optimality},
      {5, "weighted smallest-last is optimal", 120, weighted_smallest_last_optimal},
      {6, "subset DP equals permutation brute force", 120, subset_dp_equivalence},
      {7, "combine-st optimal, imbalance formula", 120, combine_st_optimal},
      {8, "conditional expectation engine exact", 120, expectation_engine},
      {9, "derandomized chain and one-third guarantee", 120, derandomization},
      {10, "acyclic certificates and cyclic averaging", 300, dichotomy},
      {11, "two-bounded order count identity", 0, two_bounded_identity},
      {12, "greedy square-sum bounds", 0, greedy_bounds},
      {13, "scheduling reduction", 0, scheduling_reduction},
  };
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::stoi(argv[i]));

  int failed = 0;
  for (const Criterion& c : criteria) {
    if (!only.empty() && !only.count(c.id)) continue;
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool pass = true;
    try {
      detail = c.run();
    } catch (const Failure& f) {
      pass = false;
      detail = f.what;
    } catch (const std::exception& e) {
      pass = false;
      detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (pass && c.limit_s > 0 && secs > c.limit_s) {
      pass = false;
      detail += " (over the " + std::to_string(static_cast<int>(c.limit_s)) + " s limit)";
    }
    failed += pass ? 0 : 1;
    std::printf("%s %2d  %s: %s [%.2f s]\n", pass ? "PASS" : "FAIL", c.id, c.title,
                detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
