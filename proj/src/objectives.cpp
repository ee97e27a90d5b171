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

#include "objectives.hpp"

#include <algorithm>
#include <functional>

#include "errors.hpp"

namespace indeg {

ConvexSpec ConvexSpec::linear(Rational a, Rational b) {
  ConvexSpec spec(Kind::kLinear);
  spec.a_ = std::move(a);
  spec.b_ = std::move(b);
  return spec;
}

ConvexSpec ConvexSpec::abs_balance(std::optional<unsigned> d) {
  ConvexSpec spec(Kind::kAbsBalance);
  spec.balance_d_ = d;
  return spec;
}

ConvexSpec ConvexSpec::exp_base(BigInt base) {
  if (base < 1) throw InvalidInput("exp_base needs a base >= 1");
  ConvexSpec spec(Kind::kExpBase);
  spec.base_ = std::move(base);
  return spec;
}

ConvexSpec ConvexSpec::neg_exp_base(BigInt base) {
  if (base < 1) throw InvalidInput("neg_exp_base needs a base >= 1");
  ConvexSpec spec(Kind::kNegExpBase);
  spec.base_ = std::move(base);
  return spec;
}

ConvexSpec ConvexSpec::table(std::vector<Rational> values, bool declared_convex) {
  if (values.empty()) throw InvalidInput("a tabulated function needs at least one value");
  ConvexSpec spec(Kind::kTable);
  spec.table_ = std::move(values);
  spec.declared_convex_ = declared_convex;
  return spec;
}

const std::string& ConvexSpec::name() const {
  static const std::string names[] = {"zero",        "linear",   "square",
                                      "cube",        "binom2",   "abs_balance",
                                      "exp_base",    "neg_exp_base", "table"};
  return names[static_cast<int>(kind_)];
}

std::optional<unsigned> ConvexSpec::domain_max() const {
  if (kind_ == Kind::kTable) return static_cast<unsigned>(table_.size() - 1);
  return std::nullopt;
}

Rational ConvexSpec::operator()(unsigned z) const {
  const Rational x(z);
  switch (kind_) {
    case Kind::kZero:
      return Rational(0);
    case Kind::kLinear:
      return a_ * x + b_;
    case Kind::kSquare:
      return x * x;
    case Kind::kCube:
      return x * x * x;
    case Kind::kBinom2:
      return Rational(BigInt(z) * (BigInt(z) - 1) / 2);
    case Kind::kAbsBalance: {
      if (!balance_d_) throw InvalidInput("abs_balance evaluated without a degree");
      long diff = 2L * z - static_cast<long>(*balance_d_);
      return Rational(diff < 0 ? -diff : diff);
    }
    case Kind::kExpBase:
      return Rational(pow(base_, z));
    case Kind::kNegExpBase:
      return Rational(BigInt(1), pow(base_, z));
    case Kind::kTable:
      if (z >= table_.size()) {
        throw InvalidInput("tabulated function evaluated at " + std::to_string(z) +
                           " beyond its last argument " + std::to_string(table_.size() - 1));
      }
      return table_[z];
  }
  return Rational(0);
}

ConvexSpec ConvexSpec::bound_to_degree(unsigned d) const {
  if (kind_ != Kind::kAbsBalance || balance_d_) return *this;
  return abs_balance(d);
}

std::vector<unsigned> validate_convex(const ConvexSpec& spec, unsigned d_max) {
  if (auto top = spec.domain_max(); top && *top < d_max) {
    throw InvalidInput("tabulated function covers 0.." + std::to_string(*top) +
                       " but must be evaluable up to " + std::to_string(d_max));
  }
  std::vector<unsigned> breakpoints;
  for (unsigned z = 1; z < d_max; ++z) {
    const Rational second = spec(z + 1) + spec(z - 1) - 2 * spec(z);
    const int s = sgn(second);
    if (s < 0 && spec.declared_convex()) {
      throw ConvexityViolation(z, "function is not convex at z = " + std::to_string(z));
    }
    if (s > 0) breakpoints.push_back(z);
  }
  return breakpoints;
}

LiftedCost VertexCost::operator()(unsigned z) const {
  const unsigned x = z + shift;
  std::int64_t penalty = 0;
  unsigned clamped = x;
  if (x < lower) {
    penalty = static_cast<std::int64_t>(lower) - x;
    clamped = lower;
  } else if (upper && x > *upper) {
    penalty = static_cast<std::int64_t>(x) - *upper;
    clamped = *upper;
  }
  return LiftedCost(penalty, spec(clamped));
}

VertexCost lift(const ConvexSpec& spec, unsigned f, unsigned g) {
  if (f > g) {
    throw InvalidInput("indegree bounds need f <= g, got f = " + std::to_string(f) +
                       ", g = " + std::to_string(g));
  }
  return VertexCost{spec, f, g, 0};
}

const char* to_string(ObjectiveKind kind) {
  switch (kind) {
    case ObjectiveKind::kPhiSum:
      return "phi_sum";
    case ObjectiveKind::kDecMin:
      return "dec_min";
    case ObjectiveKind::kIncMax:
      return "inc_max";
    case ObjectiveKind::kIncMin:
      return "inc_min";
    case ObjectiveKind::kDecMax:
      return "dec_max";
    case ObjectiveKind::kRhoDeltaSum:
      return "rho_delta_sum";
    case ObjectiveKind::kMaxWeightedIndeg:
      return "max_weighted_indeg";
    case ObjectiveKind::kForbiddenSubpaths:
      return "forbidden_subpaths";
  }
  return "?";
}

Objective Objective::phi_sum(ConvexSpec shared) {
  Objective o;
  o.specs.push_back(std::move(shared));
  return o;
}

Objective Objective::phi_sum(std::vector<ConvexSpec> per_vertex) {
  Objective o;
  o.specs = std::move(per_vertex);
  return o;
}

Objective Objective::of(ObjectiveKind kind) {
  Objective o;
  o.kind = kind;
  return o;
}

std::vector<VertexCost> Objective::vertex_costs(const Multigraph& graph) const {
  if (kind != ObjectiveKind::kPhiSum) {
    throw InvalidInput(std::string("objective ") + to_string(kind) + " has no per-vertex costs");
  }
  const std::size_t n = graph.vertex_count();
  if (specs.size() != 1 && specs.size() != n) {
    throw InvalidInput("phi_sum has " + std::to_string(specs.size()) +
                       " per-vertex specs for " + std::to_string(n) + " vertices");
  }
  auto check_bounds = [&](const std::optional<std::vector<unsigned>>& b, const char* name) {
    if (b && b->size() != n) {
      throw InvalidInput(std::string("bound vector ") + name + " has " +
                         std::to_string(b->size()) + " entries for " + std::to_string(n) +
                         " vertices");
    }
  };
  check_bounds(lower, "f");
  check_bounds(upper, "g");

  std::vector<VertexCost> costs;
  costs.reserve(n);
  for (Vertex v = 0; v < n; ++v) {
    const ConvexSpec& spec = specs.size() == 1 ? specs.front() : specs[v];
    VertexCost cost{spec.bound_to_degree(graph.degree(v)), 0, std::nullopt, 0};
    if (lower || upper) {
      unsigned f = lower ? (*lower)[v] : 0;
      unsigned g = upper ? (*upper)[v] : std::max(f, graph.degree(v));
      cost = lift(cost.spec, f, g);
    }
    costs.push_back(std::move(cost));
  }
  return costs;
}

LiftedCost phi_sum_cost(std::span<const VertexCost> costs, std::span<const unsigned> indeg) {
  if (costs.size() != indeg.size()) throw InvalidInput("cost and degree vectors differ in size");
  LiftedCost total;
  for (std::size_t v = 0; v < costs.size(); ++v) total += costs[v](indeg[v]);
  return total;
}

ObjectiveKey evaluate(const Objective& objective, const Multigraph& graph,
                      const DegreeVector& degrees) {
  const std::size_t n = graph.vertex_count();
  if (degrees.size() != n) {
    throw InvalidInput("degree vector has " + std::to_string(degrees.size()) +
                       " entries for " + std::to_string(n) + " vertices");
  }
  switch (objective.kind) {
    case ObjectiveKind::kPhiSum: {
      auto costs = objective.vertex_costs(graph);
      return phi_sum_cost(costs, degrees.in);
    }
    case ObjectiveKind::kDecMin:
    case ObjectiveKind::kDecMax: {
      SortedKey key = degrees.in;
      std::sort(key.begin(), key.end(), std::greater<>());
      return key;
    }
    case ObjectiveKind::kIncMax:
    case ObjectiveKind::kIncMin: {
      SortedKey key = degrees.in;
      std::sort(key.begin(), key.end());
      return key;
    }
    case ObjectiveKind::kRhoDeltaSum: {
      BigInt total = 0;
      for (std::size_t v = 0; v < n; ++v) total += BigInt(degrees.in[v]) * degrees.out[v];
      return Rational(total);
    }
    case ObjectiveKind::kMaxWeightedIndeg: {
      Rational best(0);
      for (const Rational& w : degrees.weighted_in) best = std::max(best, w);
      return best;
    }
    case ObjectiveKind::kForbiddenSubpaths: {
      BigInt total = 0;
      for (unsigned r : degrees.in) total += BigInt(r) * (BigInt(r) - 1) / 2;
      return Rational(total);
    }
  }
  throw InvalidInput("unknown objective");
}

ObjectiveKey evaluate(const Objective& objective, const Multigraph& graph,
                      const VertexOrder& order) {
  return evaluate(objective, graph, degrees_of_order(graph, order));
}

ObjectiveKey evaluate(const Objective& objective, const Multigraph& graph,
                      const Orientation& orientation) {
  return evaluate(objective, graph, degrees_of_orientation(graph, orientation));
}

namespace {

bool larger_is_better(ObjectiveKind kind) {
  return kind == ObjectiveKind::kIncMax || kind == ObjectiveKind::kDecMax ||
         kind == ObjectiveKind::kRhoDeltaSum;
}

std::strong_ordering raw_compare(const ObjectiveKey& a, const ObjectiveKey& b) {
  if (a.index() != b.index()) throw InvalidInput("objective keys of different shapes");
  if (const auto* x = std::get_if<LiftedCost>(&a)) return *x <=> std::get<LiftedCost>(b);
  if (const auto* x = std::get_if<SortedKey>(&a)) {
    const auto& y = std::get<SortedKey>(b);
    if (x->size() != y.size()) throw InvalidInput("sorted keys of different lengths");
    return *x <=> y;
  }
  int s = cmp(std::get<Rational>(a), std::get<Rational>(b));
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

}  // namespace

std::strong_ordering compare(const Objective& objective, const ObjectiveKey& a,
                             const ObjectiveKey& b) {
  auto order = raw_compare(a, b);
  if (larger_is_better(objective.kind)) return 0 <=> order;
  return order;
}

std::optional<SeparableForm> separable_form(const Objective& objective,
                                            const Multigraph& graph) {
  const std::size_t n = graph.vertex_count();
  const BigInt base(static_cast<unsigned long>(std::max<std::size_t>(n, 2)));
  SeparableForm form;
  auto shared = [&](const ConvexSpec& spec) {
    form.costs.assign(n, VertexCost{spec, 0, std::nullopt, 0});
  };
  auto per_vertex_table = [&](auto&& value, bool convex) {
    form.costs.clear();
    for (Vertex v = 0; v < n; ++v) {
      std::vector<Rational> values;
      for (unsigned z = 0; z <= graph.degree(v); ++z) values.push_back(value(v, z));
      form.costs.push_back(VertexCost{ConvexSpec::table(std::move(values), convex), 0,
                                      std::nullopt, 0});
    }
    form.convex = convex;
  };

  switch (objective.kind) {
    case ObjectiveKind::kPhiSum:
      form.costs = objective.vertex_costs(graph);
      form.convex = std::all_of(form.costs.begin(), form.costs.end(),
                                [](const VertexCost& c) { return c.spec.declared_convex(); });
      return form;
    case ObjectiveKind::kForbiddenSubpaths:
      shared(ConvexSpec::binom2());
      return form;
    case ObjectiveKind::kDecMin:
      shared(ConvexSpec::exp_base(base));
      return form;
    case ObjectiveKind::kIncMax:
      shared(ConvexSpec::neg_exp_base(base));
      return form;
    case ObjectiveKind::kDecMax:
      per_vertex_table([&](Vertex, unsigned z) { return Rational(-pow(base, z)); }, false);
      return form;
    case ObjectiveKind::kIncMin:
      per_vertex_table([&](Vertex, unsigned z) { return Rational(BigInt(-1), pow(base, z)); },
                       false);
      return form;
    case ObjectiveKind::kRhoDeltaSum:
      // in*out = in*(d - in), so maximising it is minimising in^2 - d*in.
      per_vertex_table(
          [&](Vertex v, unsigned z) {
            return Rational(BigInt(z) * z - BigInt(graph.degree(v)) * z);
          },
          true);
      return form;
    case ObjectiveKind::kMaxWeightedIndeg:
      return std::nullopt;
  }
  return std::nullopt;
}

namespace {

int sign_of(std::strong_ordering o) { return o < 0 ? -1 : (o > 0 ? 1 : 0); }

int exp_sum_compare(std::span<const unsigned> a, std::span<const unsigned> b, bool negative) {
  const BigInt base(static_cast<unsigned long>(a.size()));
  Rational sa(0);
  Rational sb(0);
  for (unsigned z : a) sa += negative ? Rational(BigInt(1), pow(base, z)) : Rational(pow(base, z));
  for (unsigned z : b) sb += negative ? Rational(BigInt(1), pow(base, z)) : Rational(pow(base, z));
  int s = cmp(sa, sb);
  return s < 0 ? -1 : (s > 0 ? 1 : 0);
}

void check_pair(std::span<const unsigned> a, std::span<const unsigned> b) {
  if (a.size() != b.size()) throw InvalidInput("degree vectors differ in length");
  if (a.size() < 2) throw InvalidInput("the exponential encoding needs at least 2 vertices");
}

}  // namespace

bool decmin_equals_exp_key(std::span<const unsigned> a, std::span<const unsigned> b) {
  check_pair(a, b);
  std::vector<unsigned> x(a.begin(), a.end());
  std::vector<unsigned> y(b.begin(), b.end());
  std::sort(x.begin(), x.end(), std::greater<>());
  std::sort(y.begin(), y.end(), std::greater<>());
  return sign_of(x <=> y) == exp_sum_compare(a, b, false);
}

bool incmax_equals_negexp_key(std::span<const unsigned> a, std::span<const unsigned> b) {
  check_pair(a, b);
  std::vector<unsigned> x(a.begin(), a.end());
  std::vector<unsigned> y(b.begin(), b.end());
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  // inc_max prefers the larger sequence; the encoding prefers the smaller sum.
  return -sign_of(x <=> y) == exp_sum_compare(a, b, true);
}

}  // namespace indeg
