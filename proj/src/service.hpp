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
#include <optional>
#include <string>
#include <vector>

#include "flow_solver.hpp"
#include "io.hpp"
#include "subset_dp.hpp"

namespace indeg {

struct SolveOptions {
  std::uint64_t seed = 0;
  std::uint64_t trials = 100;
  // acyclic-greedy only: lowest-id, random, worst.
  std::string tie_break = "lowest-id";
  // cyclic-flow only.
  std::vector<FixedArc> fixed;
  unsigned dp_cap = kDefaultDpCap;
};

// Modes: cyclic-flow, acyclic-exact, acyclic-greedy, smallest-last, slope,
// combine-st, random, derandomized. Throws InvalidInput for an unknown mode
// and PreconditionError when the mode cannot handle the input.
Json solve(const Multigraph& graph, const Objective& objective, const std::string& mode,
           const SolveOptions& options);

// regime: "cyclic" or "acyclic".
Json oracle(const Multigraph& graph, const Objective& objective, const std::string& regime);

struct CompareResult {
  bool agree = false;
  Json report;
};

// Runs the mode and checks its guarantee against enumeration: equality for
// the exact modes, the proven bounds for the approximation modes.
CompareResult compare(const Multigraph& graph, const Objective& objective,
                      const std::string& mode, const SolveOptions& options);

// Re-evaluates the orientation (or order) of a report under `objective`.
ObjectiveKey reevaluate(const Multigraph& graph, const Objective& objective, const Json& report);

struct GenerateRequest {
  std::string family;  // fig4, gk, random, scheduling
  unsigned k = 2;
  std::size_t n = 6;
  std::size_t m = 8;
  std::uint64_t seed = 0;
  bool simple = false;
  std::optional<unsigned> max_degree;
  bool connected = false;
  std::size_t jobs = 3;
  std::size_t slots = 2;
};

struct Generated {
  std::string graph_text;
  // Scheduling only: the matching phi_sum objective.
  std::optional<Json> objective;
};

Generated generate(const GenerateRequest& request);

// Repeats `solve` and reports wall-clock statistics in milliseconds.
Json bench(const Multigraph& graph, const Objective& objective, const std::string& mode,
           const SolveOptions& options, unsigned repeat);

}  // namespace indeg
