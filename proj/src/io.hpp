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

#include <optional>
#include <string>
#include <string_view>

#include "flow_solver.hpp"
#include "graph.hpp"
#include "json.hpp"
#include "objectives.hpp"

namespace indeg {

using Json = nlohmann::ordered_json;

// Text form: a header line `n m [weighted] [loops]`, then m lines `u v [w]`.
// Blank lines and lines starting with '#' are skipped. Errors raise
// ParseError with a 1-based line and column.
Multigraph parse_graph_text(std::string_view text);
// {"n": 3, "edges": [[0,1], [1,2,"3/2"]], "allow_loops": false}
Multigraph graph_from_json(const Json& doc);
// Either form, chosen by the first non-blank character.
Multigraph parse_graph(std::string_view text);
std::string graph_to_text(const Multigraph& graph);

// k3, kN (complete), cN (cycle), pN (path), fig4, gk:N; nullopt otherwise.
std::optional<Multigraph> named_graph(std::string_view name);
// An existing file is read and parsed; otherwise the name must be a named
// graph.
Multigraph load_graph(const std::string& path_or_name);

// Bare names (square, dec_min, ...) or a JSON object:
//   {"kind":"square"}, {"kind":"table","values":[0,1,"5/2"]},
//   {"kind":"linear","a":2,"b":"1/2"}, {"kind":"exp_base","base":3},
//   {"kind":"phi_sum","spec":{...} | "per_vertex":[...],"f":[...],"g":[...]}.
// A builtin spec object may carry "f"/"g" directly.
Objective parse_objective(std::string_view text);
Json objective_to_json(const Objective& objective);
Json spec_to_json(const ConvexSpec& spec);

Json key_to_json(const ObjectiveKey& key);
Json rational_to_json(const Rational& value);
// Integer JSON numbers, decimal or p/q strings, and finite doubles (through
// their shortest decimal form).
Rational rational_from_json(const Json& value);

// `e:h,e:h,...`: edge e gets head h.
std::vector<FixedArc> parse_fixed_arcs(std::string_view text);

}  // namespace indeg
