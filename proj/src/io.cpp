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

#include "io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "errors.hpp"
#include "instances.hpp"

namespace indeg {
namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> split_line(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    out.push_back({line.substr(i, j - i), i + 1});
    i = j;
  }
  return out;
}

std::uint64_t parse_count(const Token& tok, std::size_t line, const char* what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
  if (ec != std::errc() || ptr != tok.text.data() + tok.text.size()) {
    throw ParseError(std::string("expected ") + what + ", found '" + std::string(tok.text) + "'",
                     line, tok.column);
  }
  return value;
}

Multigraph make_graph(std::size_t n, std::vector<Edge> edges,
                      std::optional<std::vector<Rational>> weights, bool loops) {
  return Multigraph::build(n, std::move(edges), std::move(weights), loops);
}

std::optional<unsigned> parse_suffix(std::string_view s) {
  if (s.empty() || s.size() > 6) return std::nullopt;
  unsigned value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

// Line and column of a byte offset, for JSON diagnostics.
std::pair<std::size_t, std::size_t> locate(std::string_view text, std::size_t offset) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    auto [line, column] = locate(text, e.byte > 0 ? e.byte - 1 : 0);
    std::string what = e.what();
    if (auto pos = what.find("; "); pos != std::string::npos) what = what.substr(pos + 2);
    throw ParseError("invalid JSON: " + what, line, column);
  }
}

std::vector<unsigned> unsigned_list(const Json& value, const char* name) {
  if (!value.is_array()) throw InvalidInput(std::string(name) + " must be an array");
  std::vector<unsigned> out;
  for (const Json& x : value) {
    if (!x.is_number_unsigned()) {
      throw InvalidInput(std::string(name) + " entries must be non-negative integers");
    }
    out.push_back(x.get<unsigned>());
  }
  return out;
}

ConvexSpec spec_from_json(const Json& doc);

ConvexSpec spec_from_name(std::string_view name) {
  if (name == "zero") return ConvexSpec::zero();
  if (name == "square") return ConvexSpec::square();
  if (name == "cube") return ConvexSpec::cube();
  if (name == "binom2") return ConvexSpec::binom2();
  if (name == "abs_balance") return ConvexSpec::abs_balance();
  throw InvalidInput("unknown convex function '" + std::string(name) + "'");
}

std::optional<ObjectiveKind> kind_from_name(std::string_view name) {
  for (ObjectiveKind k : {ObjectiveKind::kDecMin, ObjectiveKind::kIncMax, ObjectiveKind::kIncMin,
                          ObjectiveKind::kDecMax, ObjectiveKind::kRhoDeltaSum,
                          ObjectiveKind::kMaxWeightedIndeg, ObjectiveKind::kForbiddenSubpaths}) {
    if (name == to_string(k)) return k;
  }
  return std::nullopt;
}

ConvexSpec spec_from_json(const Json& doc) {
  if (doc.is_string()) return spec_from_name(doc.get<std::string>());
  if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string()) {
    throw InvalidInput("a convex function needs a \"kind\" string");
  }
  const std::string kind = doc["kind"].get<std::string>();
  if (kind == "linear") {
    return ConvexSpec::linear(rational_from_json(doc.value("a", Json(0))),
                              rational_from_json(doc.value("b", Json(0))));
  }
  if (kind == "exp_base" || kind == "neg_exp_base") {
    if (!doc.contains("base") || !doc["base"].is_number_unsigned()) {
      throw InvalidInput(kind + " needs an integer \"base\"");
    }
    BigInt base(static_cast<unsigned long>(doc["base"].get<std::uint64_t>()));
    return kind == "exp_base" ? ConvexSpec::exp_base(base) : ConvexSpec::neg_exp_base(base);
  }
  if (kind == "abs_balance" && doc.contains("d")) {
    return ConvexSpec::abs_balance(doc["d"].get<unsigned>());
  }
  if (kind == "table") {
    if (!doc.contains("values") || !doc["values"].is_array() || doc["values"].empty()) {
      throw InvalidInput("table needs a non-empty \"values\" array");
    }
    std::vector<Rational> values;
    for (const Json& v : doc["values"]) values.push_back(rational_from_json(v));
    const bool convex = doc.value("convex", true);
    ConvexSpec spec = ConvexSpec::table(std::move(values), convex);
    if (convex) validate_convex(spec, *spec.domain_max());
    return spec;
  }
  return spec_from_name(kind);
}

void read_bounds(const Json& doc, Objective& obj) {
  if (doc.contains("f")) obj.lower = unsigned_list(doc["f"], "f");
  if (doc.contains("g")) obj.upper = unsigned_list(doc["g"], "g");
}

Objective objective_from_json(const Json& doc) {
  if (doc.is_string()) {
    const std::string name = doc.get<std::string>();
    if (auto kind = kind_from_name(name)) return Objective::of(*kind);
    return Objective::phi_sum(spec_from_name(name));
  }
  if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string()) {
    throw InvalidInput("an objective needs a \"kind\" string");
  }
  const std::string kind = doc["kind"].get<std::string>();
  if (auto k = kind_from_name(kind)) return Objective::of(*k);
  Objective obj;
  if (kind == "phi_sum") {
    if (doc.contains("per_vertex")) {
      if (!doc["per_vertex"].is_array() || doc["per_vertex"].empty()) {
        throw InvalidInput("per_vertex must be a non-empty array");
      }
      std::vector<ConvexSpec> specs;
      for (const Json& s : doc["per_vertex"]) specs.push_back(spec_from_json(s));
      obj = Objective::phi_sum(std::move(specs));
    } else {
      obj = Objective::phi_sum(spec_from_json(doc.value("spec", Json("zero"))));
    }
  } else {
    obj = Objective::phi_sum(spec_from_json(doc));
  }
  read_bounds(doc, obj);
  return obj;
}

}  // namespace

Multigraph parse_graph_text(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  auto next_line = [&]() -> std::optional<std::vector<Token>> {
    while (pos <= text.size()) {
      if (pos == text.size()) {
        ++pos;
        ++line_no;
        return std::nullopt;
      }
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string_view line = text.substr(pos, end - pos);
      pos = end + 1;
      ++line_no;
      auto tokens = split_line(line);
      if (tokens.empty() || tokens.front().text.front() == '#') continue;
      return tokens;
    }
    return std::nullopt;
  };

  auto header = next_line();
  if (!header) throw ParseError("missing header line 'n m'", line_no, 1);
  if (header->size() < 2) {
    throw ParseError("header needs a vertex and an edge count", line_no,
                     header->back().column + header->back().text.size());
  }
  const std::size_t header_line = line_no;
  const auto n = parse_count((*header)[0], line_no, "a vertex count");
  const auto m = parse_count((*header)[1], line_no, "an edge count");
  if (n > (std::uint64_t{1} << 31)) throw ParseError("vertex count too large", line_no, 1);
  bool weighted = false;
  bool loops = false;
  for (std::size_t i = 2; i < header->size(); ++i) {
    const Token& tok = (*header)[i];
    if (tok.text == "weighted") {
      weighted = true;
    } else if (tok.text == "loops") {
      loops = true;
    } else {
      throw ParseError("unknown header flag '" + std::string(tok.text) + "'", header_line,
                       tok.column);
    }
  }

  std::vector<Edge> edges;
  std::vector<Rational> weights;
  for (std::uint64_t e = 0; e < m; ++e) {
    auto tokens = next_line();
    if (!tokens) {
      throw ParseError("expected " + std::to_string(m) + " edge lines, found " +
                           std::to_string(e),
                       line_no, 1);
    }
    const std::size_t want = weighted ? 3 : 2;
    if (tokens->size() != want) {
      const Token& where = tokens->size() > want ? (*tokens)[want] : tokens->back();
      throw ParseError("edge line needs " + std::string(weighted ? "'u v w'" : "'u v'"),
                       line_no,
                       tokens->size() > want ? where.column : where.column + where.text.size());
    }
    const auto u = parse_count((*tokens)[0], line_no, "a vertex id");
    const auto v = parse_count((*tokens)[1], line_no, "a vertex id");
    for (std::size_t i = 0; i < 2; ++i) {
      const auto x = i == 0 ? u : v;
      if (x >= n) {
        throw ParseError("vertex " + std::to_string(x) + " is outside 0.." +
                             std::to_string(n == 0 ? 0 : n - 1),
                         line_no, (*tokens)[i].column);
      }
    }
    if (u == v && !loops) {
      throw ParseError("loop at vertex " + std::to_string(u) +
                           " but the header does not allow loops",
                       line_no, (*tokens)[0].column);
    }
    if (weighted) {
      const Token& w = (*tokens)[2];
      try {
        weights.push_back(parse_rational(w.text));
      } catch (const InvalidInput& err) {
        throw ParseError(err.what(), line_no, w.column);
      }
      if (weights.back() < 0) throw ParseError("negative edge weight", line_no, w.column);
    }
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  if (auto extra = next_line()) {
    throw ParseError("unexpected content after " + std::to_string(m) + " edge lines", line_no,
                     extra->front().column);
  }
  return make_graph(static_cast<std::size_t>(n), std::move(edges),
                    weighted ? std::optional(std::move(weights)) : std::nullopt, loops);
}

Multigraph graph_from_json(const Json& doc) {
  if (!doc.is_object()) throw InvalidInput("graph JSON must be an object");
  if (!doc.contains("n") || !doc["n"].is_number_unsigned()) {
    throw InvalidInput("graph JSON needs a non-negative integer \"n\"");
  }
  const auto n = doc["n"].get<std::size_t>();
  const bool loops = doc.value("allow_loops", false);
  std::vector<Edge> edges;
  std::vector<Rational> weights;
  bool any_weight = false;
  bool all_weight = true;
  const Json empty = Json::array();
  const Json& list = doc.contains("edges") ? doc["edges"] : empty;
  if (!list.is_array()) throw InvalidInput("\"edges\" must be an array");
  for (std::size_t e = 0; e < list.size(); ++e) {
    const Json& item = list[e];
    if (!item.is_array() || item.size() < 2 || item.size() > 3 ||
        !item[0].is_number_unsigned() || !item[1].is_number_unsigned()) {
      throw InvalidInput("edge " + std::to_string(e) + " must be [u, v] or [u, v, w]");
    }
    edges.push_back({item[0].get<Vertex>(), item[1].get<Vertex>()});
    if (item.size() == 3) {
      any_weight = true;
      weights.push_back(rational_from_json(item[2]));
    } else {
      all_weight = false;
      weights.emplace_back(1);
    }
  }
  if (any_weight && !all_weight) {
    throw InvalidInput("either every edge has a weight or none does");
  }
  return make_graph(n, std::move(edges), any_weight ? std::optional(std::move(weights)) : std::nullopt,
                    loops);
}

Multigraph parse_graph(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    return graph_from_json(parse_json(text));
  }
  return parse_graph_text(text);
}

std::string graph_to_text(const Multigraph& graph) {
  std::ostringstream out;
  out << graph.vertex_count() << ' ' << graph.edge_count();
  if (graph.weighted()) out << " weighted";
  if (graph.allows_loops()) out << " loops";
  out << '\n';
  for (EdgeId e = 0; e < graph.edge_count(); ++e) {
    const Edge& edge = graph.edge(e);
    out << edge.u << ' ' << edge.v;
    if (graph.weighted()) {
      const Rational& w = graph.weight(e);
      out << ' ' << (is_integer(w) ? w.get_num().get_str() : to_string(w));
    }
    out << '\n';
  }
  return out.str();
}

std::optional<Multigraph> named_graph(std::string_view name) {
  if (name == "fig4") return fig4_graph();
  if (name.starts_with("gk:")) {
    if (auto k = parse_suffix(name.substr(3)); k && *k >= 1 && *k <= 1000) return gen_gk(*k);
    return std::nullopt;
  }
  if (name.size() < 2) return std::nullopt;
  auto size = parse_suffix(name.substr(1));
  if (!size || *size > 2000) return std::nullopt;
  const unsigned n = *size;
  std::vector<Edge> edges;
  switch (name.front()) {
    case 'k':
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
      }
      break;
    case 'c':
      if (n < 3) return std::nullopt;
      for (Vertex v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
      break;
    case 'p':
      for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
      break;
    default:
      return std::nullopt;
  }
  return Multigraph::build(n, std::move(edges));
}

Multigraph load_graph(const std::string& path_or_name) {
  std::ifstream in(path_or_name, std::ios::binary);
  if (in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
  }
  if (auto g = named_graph(path_or_name)) return std::move(*g);
  throw InvalidInput("cannot open '" + path_or_name + "' and it is not a named graph");
}

Objective parse_objective(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw InvalidInput("empty objective");
  if (text[first] == '{' || text[first] == '"') return objective_from_json(parse_json(text));
  const auto last = text.find_last_not_of(" \t\r\n");
  return objective_from_json(Json(std::string(text.substr(first, last - first + 1))));
}

Json spec_to_json(const ConvexSpec& spec) {
  Json out;
  out["kind"] = spec.name();
  switch (spec.kind()) {
    case ConvexSpec::Kind::kLinear:
      out["a"] = rational_to_json(spec.slope());
      out["b"] = rational_to_json(spec.intercept());
      break;
    case ConvexSpec::Kind::kExpBase:
    case ConvexSpec::Kind::kNegExpBase:
      out["base"] = spec.base().get_str();
      break;
    case ConvexSpec::Kind::kAbsBalance:
      if (spec.balance_degree()) out["d"] = *spec.balance_degree();
      break;
    case ConvexSpec::Kind::kTable: {
      Json values = Json::array();
      for (const Rational& v : spec.values()) values.push_back(rational_to_json(v));
      out["values"] = std::move(values);
      out["convex"] = spec.declared_convex();
      break;
    }
    default:
      break;
  }
  return out;
}

Json objective_to_json(const Objective& objective) {
  Json out;
  out["kind"] = to_string(objective.kind);
  if (objective.kind == ObjectiveKind::kPhiSum) {
    if (objective.specs.size() == 1) {
      out["spec"] = spec_to_json(objective.specs.front());
    } else {
      Json list = Json::array();
      for (const ConvexSpec& s : objective.specs) list.push_back(spec_to_json(s));
      out["per_vertex"] = std::move(list);
    }
    if (objective.lower) out["f"] = *objective.lower;
    if (objective.upper) out["g"] = *objective.upper;
  }
  return out;
}

Json rational_to_json(const Rational& value) { return to_string(value); }

Json key_to_json(const ObjectiveKey& key) {
  if (const auto* lifted = std::get_if<LiftedCost>(&key)) {
    Json out;
    out["penalty"] = lifted->penalty;
    out["base"] = to_string(lifted->base);
    return out;
  }
  if (const auto* sorted = std::get_if<SortedKey>(&key)) return Json(*sorted);
  return rational_to_json(std::get<Rational>(key));
}

Rational rational_from_json(const Json& value) {
  if (value.is_number_integer()) {
    return value.is_number_unsigned()
               ? Rational(BigInt(std::to_string(value.get<std::uint64_t>())))
               : Rational(BigInt(std::to_string(value.get<std::int64_t>())));
  }
  if (value.is_number_float()) {
    const double d = value.get<double>();
    if (!std::isfinite(d)) throw InvalidInput("non-finite number");
    return parse_rational(value.dump());
  }
  if (value.is_string()) return parse_rational(value.get<std::string>());
  throw InvalidInput("expected a number or a rational string, found " + value.dump());
}

std::vector<FixedArc> parse_fixed_arcs(std::string_view text) {
  std::vector<FixedArc> out;
  std::size_t column = 1;
  while (!text.empty()) {
    const auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    const auto colon = item.find(':');
    auto e = colon == std::string_view::npos ? std::nullopt : parse_suffix(item.substr(0, colon));
    auto h = colon == std::string_view::npos ? std::nullopt : parse_suffix(item.substr(colon + 1));
    if (!e || !h) {
      throw ParseError("fixed arcs are 'edge:head' pairs, found '" + std::string(item) + "'", 1,
                       column);
    }
    out.push_back({*e, *h});
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
    column += comma + 1;
  }
  return out;
}

}  // namespace indeg
