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

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "numeric.hpp"

namespace indeg {

// A per-vertex discrete function of the indegree, either one of the builtin
// families or a table over 0..values.size()-1. Evaluation is exact.
class ConvexSpec {
 public:
  enum class Kind {
    kZero,
    kLinear,       // a*z + b
    kSquare,       // z^2
    kCube,         // z^3
    kBinom2,       // z(z-1)/2
    kAbsBalance,   // |2z - d|
    kExpBase,      // b^z
    kNegExpBase,   // b^-z
    kTable,
  };

  ConvexSpec() = default;

  static ConvexSpec zero() { return ConvexSpec(Kind::kZero); }
  static ConvexSpec linear(Rational a, Rational b);
  static ConvexSpec square() { return ConvexSpec(Kind::kSquare); }
  static ConvexSpec cube() { return ConvexSpec(Kind::kCube); }
  static ConvexSpec binom2() { return ConvexSpec(Kind::kBinom2); }
  // Without an explicit d the spec is bound to each vertex's degree when
  // an objective is resolved on a graph.
  static ConvexSpec abs_balance(std::optional<unsigned> d = std::nullopt);
  static ConvexSpec exp_base(BigInt base);
  static ConvexSpec neg_exp_base(BigInt base);
  // declared_convex = false admits arbitrary tables (subset DP only).
  static ConvexSpec table(std::vector<Rational> values, bool declared_convex = true);

  Kind kind() const { return kind_; }
  const std::string& name() const;
  bool declared_convex() const { return declared_convex_; }
  bool is_linear() const { return kind_ == Kind::kZero || kind_ == Kind::kLinear; }
  // Slope and intercept; only meaningful when is_linear().
  const Rational& slope() const { return a_; }
  const Rational& intercept() const { return b_; }
  const BigInt& base() const { return base_; }
  std::optional<unsigned> balance_degree() const { return balance_d_; }
  const std::vector<Rational>& values() const { return table_; }

  // Largest argument the spec can be evaluated at, if bounded.
  std::optional<unsigned> domain_max() const;

  // Throws InvalidInput beyond a table, or for abs_balance with no degree
  // bound yet.
  Rational operator()(unsigned z) const;

  // Fills in the degree parameter of an unbound abs_balance.
  ConvexSpec bound_to_degree(unsigned d) const;

  friend bool operator==(const ConvexSpec&, const ConvexSpec&) = default;

 private:
  explicit ConvexSpec(Kind kind) : kind_(kind) {}

  Kind kind_ = Kind::kZero;
  Rational a_;
  Rational b_;
  BigInt base_;
  std::optional<unsigned> balance_d_;
  std::vector<Rational> table_;
  bool declared_convex_ = true;
};

// Interior points z in 1..d_max-1 with phi(z+1) + phi(z-1) > 2 phi(z). For a
// spec declared convex, a point with phi(z+1) + phi(z-1) < 2 phi(z) throws
// ConvexityViolation naming z.
std::vector<unsigned> validate_convex(const ConvexSpec& spec, unsigned d_max);

class ConvexityViolation : public InvalidInput {
 public:
  ConvexityViolation(unsigned z, const std::string& what) : InvalidInput(what), z_(z) {}
  unsigned witness() const { return z_; }

 private:
  unsigned z_;
};

// Cost of the (f,g)-lifting: `penalty` counts bound-violation units, taking
// the place of the unbounded multiplier, and is compared first.
struct LiftedCost {
  std::int64_t penalty = 0;
  Rational base;

  LiftedCost() = default;
  LiftedCost(std::int64_t p, Rational b) : penalty(p), base(std::move(b)) {}

  LiftedCost& operator+=(const LiftedCost& o) {
    penalty += o.penalty;
    base += o.base;
    return *this;
  }
  LiftedCost& operator-=(const LiftedCost& o) {
    penalty -= o.penalty;
    base -= o.base;
    return *this;
  }
  friend LiftedCost operator+(LiftedCost a, const LiftedCost& b) { return a += b; }
  friend LiftedCost operator-(LiftedCost a, const LiftedCost& b) { return a -= b; }
  friend LiftedCost operator-(const LiftedCost& a) { return LiftedCost(-a.penalty, -a.base); }
  friend bool operator==(const LiftedCost& a, const LiftedCost& b) {
    return a.penalty == b.penalty && a.base == b.base;
  }
  friend std::strong_ordering operator<=>(const LiftedCost& a, const LiftedCost& b) {
    if (auto c = a.penalty <=> b.penalty; c != 0) return c;
    int s = cmp(a.base, b.base);
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
};

// A vertex's cost as a function of its indegree: the spec, optionally lifted
// to bounds [f, g], and shifted by the number of pre-oriented arcs entering
// the vertex.
struct VertexCost {
  ConvexSpec spec;
  unsigned lower = 0;
  std::optional<unsigned> upper;
  unsigned shift = 0;

  LiftedCost operator()(unsigned z) const;
};

// Throws InvalidInput if f > g.
VertexCost lift(const ConvexSpec& spec, unsigned f, unsigned g);

enum class ObjectiveKind {
  kPhiSum,
  kDecMin,
  kIncMax,
  kIncMin,
  kDecMax,
  kRhoDeltaSum,
  kMaxWeightedIndeg,
  kForbiddenSubpaths,
};

const char* to_string(ObjectiveKind kind);

struct Objective {
  ObjectiveKind kind = ObjectiveKind::kPhiSum;
  // phi_sum only: one shared spec or one per vertex.
  std::vector<ConvexSpec> specs;
  std::optional<std::vector<unsigned>> lower;
  std::optional<std::vector<unsigned>> upper;

  static Objective phi_sum(ConvexSpec shared);
  static Objective phi_sum(std::vector<ConvexSpec> per_vertex);
  static Objective of(ObjectiveKind kind);

  // Per-vertex lifted costs of a phi_sum objective on `graph`, with
  // abs_balance bound to vertex degrees. Throws InvalidInput on size
  // mismatches or f > g.
  std::vector<VertexCost> vertex_costs(const Multigraph& graph) const;
};

// Lexicographic keys are sorted indegree sequences.
using SortedKey = std::vector<unsigned>;
using ObjectiveKey = std::variant<LiftedCost, SortedKey, Rational>;

ObjectiveKey evaluate(const Objective& objective, const Multigraph& graph,
                      const DegreeVector& degrees);
ObjectiveKey evaluate(const Objective& objective, const Multigraph& graph,
                      const VertexOrder& order);
ObjectiveKey evaluate(const Objective& objective, const Multigraph& graph,
                      const Orientation& orientation);

// less: `a` is strictly better than `b` under the objective's preference.
std::strong_ordering compare(const Objective& objective, const ObjectiveKey& a,
                             const ObjectiveKey& b);
inline bool better(const Objective& objective, const ObjectiveKey& a, const ObjectiveKey& b) {
  return compare(objective, a, b) < 0;
}

// Sum over vertices of phi_v(indeg(v)) as a lifted cost.
LiftedCost phi_sum_cost(std::span<const VertexCost> costs, std::span<const unsigned> indeg);

// A separable minimisation form of the objective, sum_v cost_v(indeg(v)),
// whose optimal solutions coincide with the objective's. Lexicographic kinds
// map to (negated) n^z and n^-z; rho_delta_sum maps to z^2 - d(v) z; there is
// none for max_weighted_indeg. `convex` tells whether every cost is convex.
struct SeparableForm {
  std::vector<VertexCost> costs;
  bool convex = true;
};
std::optional<SeparableForm> separable_form(const Objective& objective,
                                            const Multigraph& graph);

// Lexicographic comparison of sorted keys under dec_min and under the
// exact sum of n^z, n = a.size(); true when both comparisons agree.
bool decmin_equals_exp_key(std::span<const unsigned> a, std::span<const unsigned> b);
// Same for inc_max against the sum of n^-z.
bool incmax_equals_negexp_key(std::span<const unsigned> a, std::span<const unsigned> b);

}  // namespace indeg
