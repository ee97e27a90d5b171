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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "numeric.hpp"

namespace indeg {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
  Vertex u;
  Vertex v;

  bool is_loop() const { return u == v; }
  Vertex other(Vertex x) const { return x == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
  EdgeId edge;
  Vertex other;
};

// Undirected multigraph on vertices 0..n-1. Parallel edges keep separate ids
// (their input positions). A loop contributes 1 to the degree of its vertex,
// matching its contribution of exactly 1 to the left-degree in any ordering.
class Multigraph {
 public:
  Multigraph() = default;

  // Throws InvalidInput on out-of-range endpoints, negative weights, a weight
  // vector of the wrong length, or a loop when allow_loops is false.
  static Multigraph build(std::size_t n, std::vector<Edge> edges,
                          std::optional<std::vector<Rational>> weights = std::nullopt,
                          bool allow_loops = false);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }

  bool weighted() const { return weighted_; }
  // 1 for unweighted graphs.
  const Rational& weight(EdgeId e) const { return weights_[e]; }
  const std::vector<Rational>& weights() const { return weights_; }

  bool allows_loops() const { return allow_loops_; }
  bool has_loops() const { return loop_count_ > 0; }
  // No loops and no parallel edges.
  bool is_simple() const { return simple_; }
  bool is_connected() const;

  unsigned degree(Vertex v) const { return degree_[v]; }
  unsigned max_degree() const;
  // Sum of incident edge weights (loops once).
  const Rational& weighted_degree(Vertex v) const { return weighted_degree_[v]; }

  std::span<const Incidence> incident(Vertex v) const { return incidence_[v]; }
  // Distinct neighbours of v with edge multiplicities, sorted by neighbour id.
  // Loops are not listed.
  std::span<const std::pair<Vertex, unsigned>> neighbours(Vertex v) const {
    return neighbours_[v];
  }
  unsigned multiplicity(Vertex u, Vertex v) const;
  unsigned loops_at(Vertex v) const { return loops_[v]; }

  // Subgraph induced by `vertices`, relabelled 0..k-1 in the given order.
  // Edge ids are renumbered in increasing order of the original ids.
  Multigraph induced(std::span<const Vertex> vertices) const;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<Rational> weights_;
  bool weighted_ = false;
  bool allow_loops_ = false;
  bool simple_ = true;
  std::size_t loop_count_ = 0;
  std::vector<unsigned> degree_;
  std::vector<unsigned> loops_;
  std::vector<Rational> weighted_degree_;
  std::vector<std::vector<Incidence>> incidence_;
  std::vector<std::vector<std::pair<Vertex, unsigned>>> neighbours_;
};

// A permutation of all vertices; perm[i] is the vertex at position i.
class VertexOrder {
 public:
  VertexOrder() = default;
  // Throws InvalidInput unless perm is a permutation of 0..n-1.
  explicit VertexOrder(std::vector<Vertex> perm);

  static VertexOrder identity(std::size_t n);

  std::size_t size() const { return perm_.size(); }
  Vertex operator[](std::size_t i) const { return perm_[i]; }
  std::size_t position(Vertex v) const { return position_[v]; }
  const std::vector<Vertex>& vertices() const { return perm_; }
  auto begin() const { return perm_.begin(); }
  auto end() const { return perm_.end(); }
  VertexOrder reversed() const;

  friend bool operator==(const VertexOrder& a, const VertexOrder& b) {
    return a.perm_ == b.perm_;
  }

 private:
  std::vector<Vertex> perm_;
  std::vector<std::size_t> position_;
};

// Head vertex for every edge id.
class Orientation {
 public:
  Orientation() = default;
  // Throws InvalidInput if some head is not an endpoint of its edge, or if the
  // graph has loops.
  Orientation(const Multigraph& graph, std::vector<Vertex> heads);

  std::size_t size() const { return heads_.size(); }
  Vertex head(EdgeId e) const { return heads_[e]; }
  Vertex tail(const Multigraph& graph, EdgeId e) const {
    return graph.edge(e).other(heads_[e]);
  }
  const std::vector<Vertex>& heads() const { return heads_; }
  // Same orientation with edge e reversed.
  Orientation flipped(const Multigraph& graph, EdgeId e) const;
  Orientation reversed(const Multigraph& graph) const;

  friend bool operator==(const Orientation&, const Orientation&) = default;

 private:
  std::vector<Vertex> heads_;
};

struct DegreeVector {
  std::vector<unsigned> in;
  std::vector<unsigned> out;
  // Weighted indegree; equals `in` for unweighted graphs.
  std::vector<Rational> weighted_in;

  std::size_t size() const { return in.size(); }
};

DegreeVector degrees_of_order(const Multigraph& graph, const VertexOrder& order);
DegreeVector degrees_of_orientation(const Multigraph& graph,
                                    const Orientation& orientation);

// Directs every edge from the earlier to the later vertex.
Orientation orientation_of_order(const Multigraph& graph, const VertexOrder& order);

bool is_acyclic(const Multigraph& graph, const Orientation& orientation);
// Kahn's algorithm with lowest-id sources first; nullopt on a directed cycle.
std::optional<VertexOrder> topological_order(const Multigraph& graph,
                                             const Orientation& orientation);

// Block-cut tree of a connected loop-free multigraph. A block is a maximal
// biconnected subgraph; a single edge (or a bundle of parallel edges) between
// two vertices whose removal disconnects them forms a two-vertex block.
struct BlockTree {
  // Vertex lists sorted ascending; blocks sorted by their smallest vertex,
  // then lexicographically.
  std::vector<std::vector<Vertex>> blocks;
  std::vector<std::vector<EdgeId>> block_edges;
  std::vector<Vertex> cut_vertices;
  // For every block, the cut vertices it contains.
  std::vector<std::vector<Vertex>> cuts_of_block;
  // For every vertex, the blocks containing it.
  std::vector<std::vector<std::size_t>> blocks_of_vertex;

  bool is_cut_vertex(Vertex v) const { return blocks_of_vertex[v].size() > 1; }
  // A leaf of the tree: exactly one cut vertex.
  bool is_end_component(std::size_t b) const { return cuts_of_block[b].size() == 1; }
};

// Throws PreconditionError on disconnected input or a graph with loops.
BlockTree block_tree(const Multigraph& graph);

// s-t ordering of a biconnected graph (or a two-vertex graph): s first, t
// last, and every other vertex of degree >= 2 has a neighbour on each side.
// Throws InvalidInput for s == t or out-of-range terminals, and
// PreconditionError when the graph is not biconnected.
VertexOrder st_order(const Multigraph& block, Vertex s, Vertex t);

// True if s is first, t is last and every internal vertex of degree >= 2 has
// both a left and a right neighbour.
bool is_st_order(const Multigraph& block, const VertexOrder& order, Vertex s, Vertex t);

}  // namespace indeg
