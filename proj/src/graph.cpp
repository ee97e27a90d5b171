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

#include "graph.hpp"

#include <algorithm>
#include <functional>
#include <list>
#include <numeric>
#include <queue>
#include <string>

#include "errors.hpp"

namespace indeg {

Multigraph Multigraph::build(std::size_t n, std::vector<Edge> edges,
                             std::optional<std::vector<Rational>> weights,
                             bool allow_loops) {
  Multigraph g;
  g.n_ = n;
  g.allow_loops_ = allow_loops;
  if (weights) {
    if (weights->size() != edges.size()) {
      throw InvalidInput("expected " + std::to_string(edges.size()) +
                         " edge weights, got " + std::to_string(weights->size()));
    }
    for (std::size_t e = 0; e < weights->size(); ++e) {
      if (sgn((*weights)[e]) < 0) {
        throw InvalidInput("edge " + std::to_string(e) + " has a negative weight");
      }
    }
    g.weights_ = std::move(*weights);
    g.weighted_ = true;
  } else {
    g.weights_.assign(edges.size(), Rational(1));
  }

  g.degree_.assign(n, 0);
  g.loops_.assign(n, 0);
  g.weighted_degree_.assign(n, Rational(0));
  g.incidence_.assign(n, {});
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const Edge& edge = edges[e];
    if (edge.u >= n || edge.v >= n) {
      throw InvalidInput("edge " + std::to_string(e) + " (" + std::to_string(edge.u) +
                         "," + std::to_string(edge.v) + ") has an endpoint outside 0.." +
                         std::to_string(n == 0 ? 0 : n - 1));
    }
    const auto id = static_cast<EdgeId>(e);
    if (edge.is_loop()) {
      if (!allow_loops) {
        throw InvalidInput("edge " + std::to_string(e) + " is a loop at vertex " +
                           std::to_string(edge.u) + " but loops are not allowed");
      }
      ++g.loop_count_;
      ++g.degree_[edge.u];
      ++g.loops_[edge.u];
      g.weighted_degree_[edge.u] += g.weights_[e];
      g.incidence_[edge.u].push_back({id, edge.u});
      continue;
    }
    ++g.degree_[edge.u];
    ++g.degree_[edge.v];
    g.weighted_degree_[edge.u] += g.weights_[e];
    g.weighted_degree_[edge.v] += g.weights_[e];
    g.incidence_[edge.u].push_back({id, edge.v});
    g.incidence_[edge.v].push_back({id, edge.u});
  }
  g.edges_ = std::move(edges);

  g.neighbours_.assign(n, {});
  g.simple_ = g.loop_count_ == 0;
  for (Vertex v = 0; v < n; ++v) {
    std::vector<Vertex> others;
    for (const Incidence& inc : g.incidence_[v]) {
      if (inc.other != v) others.push_back(inc.other);
    }
    std::sort(others.begin(), others.end());
    for (std::size_t i = 0; i < others.size();) {
      std::size_t j = i;
      while (j < others.size() && others[j] == others[i]) ++j;
      g.neighbours_[v].emplace_back(others[i], static_cast<unsigned>(j - i));
      if (j - i > 1) g.simple_ = false;
      i = j;
    }
  }
  return g;
}

bool Multigraph::is_connected() const {
  if (n_ <= 1) return true;
  std::vector<bool> seen(n_, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (const auto& [w, mult] : neighbours_[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n_;
}

unsigned Multigraph::max_degree() const {
  return degree_.empty() ? 0 : *std::max_element(degree_.begin(), degree_.end());
}

unsigned Multigraph::multiplicity(Vertex u, Vertex v) const {
  if (u == v) return loops_[u];
  const auto& list = neighbours_[u];
  auto it = std::lower_bound(list.begin(), list.end(), v,
                             [](const auto& entry, Vertex x) { return entry.first < x; });
  return (it != list.end() && it->first == v) ? it->second : 0;
}

Multigraph Multigraph::induced(std::span<const Vertex> vertices) const {
  std::vector<std::int64_t> relabel(n_, -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= n_ || relabel[vertices[i]] >= 0) {
      throw InvalidInput("induced subgraph needs distinct in-range vertices");
    }
    relabel[vertices[i]] = static_cast<std::int64_t>(i);
  }
  std::vector<Edge> edges;
  std::vector<Rational> weights;
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const Edge& edge = edges_[e];
    if (relabel[edge.u] < 0 || relabel[edge.v] < 0) continue;
    edges.push_back({static_cast<Vertex>(relabel[edge.u]),
                     static_cast<Vertex>(relabel[edge.v])});
    weights.push_back(weights_[e]);
  }
  std::optional<std::vector<Rational>> w;
  if (weighted_) w = std::move(weights);
  return build(vertices.size(), std::move(edges), std::move(w), allow_loops_);
}

VertexOrder::VertexOrder(std::vector<Vertex> perm) : perm_(std::move(perm)) {
  position_.assign(perm_.size(), perm_.size());
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    Vertex v = perm_[i];
    if (v >= perm_.size() || position_[v] != perm_.size()) {
      throw InvalidInput("vertex order is not a permutation of 0.." +
                         std::to_string(perm_.size() == 0 ? 0 : perm_.size() - 1));
    }
    position_[v] = i;
  }
}

VertexOrder VertexOrder::identity(std::size_t n) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  return VertexOrder(std::move(perm));
}

VertexOrder VertexOrder::reversed() const {
  return VertexOrder(std::vector<Vertex>(perm_.rbegin(), perm_.rend()));
}

Orientation::Orientation(const Multigraph& graph, std::vector<Vertex> heads)
    : heads_(std::move(heads)) {
  if (graph.has_loops()) throw InvalidInput("graphs with loops cannot be oriented");
  if (heads_.size() != graph.edge_count()) {
    throw InvalidInput("orientation has " + std::to_string(heads_.size()) +
                       " heads for " + std::to_string(graph.edge_count()) + " edges");
  }
  for (std::size_t e = 0; e < heads_.size(); ++e) {
    const Edge& edge = graph.edge(static_cast<EdgeId>(e));
    if (heads_[e] != edge.u && heads_[e] != edge.v) {
      throw InvalidInput("head " + std::to_string(heads_[e]) + " of edge " +
                         std::to_string(e) + " is not an endpoint");
    }
  }
}

Orientation Orientation::flipped(const Multigraph& graph, EdgeId e) const {
  Orientation out = *this;
  out.heads_[e] = graph.edge(e).other(heads_[e]);
  return out;
}

Orientation Orientation::reversed(const Multigraph& graph) const {
  Orientation out = *this;
  for (std::size_t e = 0; e < heads_.size(); ++e) {
    out.heads_[e] = graph.edge(static_cast<EdgeId>(e)).other(heads_[e]);
  }
  return out;
}

namespace {

DegreeVector empty_degrees(std::size_t n) {
  DegreeVector d;
  d.in.assign(n, 0);
  d.out.assign(n, 0);
  d.weighted_in.assign(n, Rational(0));
  return d;
}

}  // namespace

DegreeVector degrees_of_order(const Multigraph& graph, const VertexOrder& order) {
  if (order.size() != graph.vertex_count()) {
    throw InvalidInput("order has " + std::to_string(order.size()) + " vertices, graph has " +
                       std::to_string(graph.vertex_count()));
  }
  DegreeVector d = empty_degrees(graph.vertex_count());
  for (std::size_t e = 0; e < graph.edge_count(); ++e) {
    const Edge& edge = graph.edge(static_cast<EdgeId>(e));
    Vertex later = edge.u;
    if (!edge.is_loop()) {
      Vertex earlier = edge.v;
      if (order.position(edge.u) < order.position(edge.v)) std::swap(later, earlier);
      ++d.out[earlier];
    }
    ++d.in[later];
    d.weighted_in[later] += graph.weight(static_cast<EdgeId>(e));
  }
  return d;
}

DegreeVector degrees_of_orientation(const Multigraph& graph,
                                    const Orientation& orientation) {
  if (orientation.size() != graph.edge_count()) {
    throw InvalidInput("orientation does not match the graph");
  }
  DegreeVector d = empty_degrees(graph.vertex_count());
  for (std::size_t e = 0; e < graph.edge_count(); ++e) {
    const auto id = static_cast<EdgeId>(e);
    Vertex head = orientation.head(id);
    ++d.in[head];
    ++d.out[orientation.tail(graph, id)];
    d.weighted_in[head] += graph.weight(id);
  }
  return d;
}

Orientation orientation_of_order(const Multigraph& graph, const VertexOrder& order) {
  if (graph.has_loops()) throw InvalidInput("graphs with loops cannot be oriented");
  if (order.size() != graph.vertex_count()) throw InvalidInput("order does not match the graph");
  std::vector<Vertex> heads(graph.edge_count());
  for (std::size_t e = 0; e < graph.edge_count(); ++e) {
    const Edge& edge = graph.edge(static_cast<EdgeId>(e));
    heads[e] = order.position(edge.u) < order.position(edge.v) ? edge.v : edge.u;
  }
  return Orientation(graph, std::move(heads));
}

std::optional<VertexOrder> topological_order(const Multigraph& graph,
                                             const Orientation& orientation) {
  const std::size_t n = graph.vertex_count();
  std::vector<unsigned> indeg(n, 0);
  std::vector<std::vector<Vertex>> out(n);
  for (std::size_t e = 0; e < graph.edge_count(); ++e) {
    const auto id = static_cast<EdgeId>(e);
    Vertex head = orientation.head(id);
    ++indeg[head];
    out[orientation.tail(graph, id)].push_back(head);
  }
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
  for (Vertex v = 0; v < n; ++v) {
    if (indeg[v] == 0) ready.push(v);
  }
  std::vector<Vertex> order;
  order.reserve(n);
  while (!ready.empty()) {
    Vertex v = ready.top();
    ready.pop();
    order.push_back(v);
    for (Vertex w : out[v]) {
      if (--indeg[w] == 0) ready.push(w);
    }
  }
  if (order.size() != n) return std::nullopt;
  return VertexOrder(std::move(order));
}

bool is_acyclic(const Multigraph& graph, const Orientation& orientation) {
  return topological_order(graph, orientation).has_value();
}

BlockTree block_tree(const Multigraph& graph) {
  if (graph.has_loops()) throw PreconditionError("block tree needs a loop-free graph");
  if (!graph.is_connected()) throw PreconditionError("block tree needs a connected graph");
  const std::size_t n = graph.vertex_count();

  constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> disc(n, kUnseen);
  std::vector<std::size_t> low(n, 0);
  std::vector<EdgeId> edge_stack;
  std::vector<std::vector<EdgeId>> raw_blocks;

  struct Frame {
    Vertex v;
    std::int64_t parent_edge;
    std::size_t next;
  };
  std::size_t time = 0;
  if (n > 0) {
    std::vector<Frame> stack;
    disc[0] = low[0] = time++;
    stack.push_back({0, -1, 0});
    while (!stack.empty()) {
      Frame& frame = stack.back();
      auto incident = graph.incident(frame.v);
      if (frame.next < incident.size()) {
        const Incidence inc = incident[frame.next++];
        if (static_cast<std::int64_t>(inc.edge) == frame.parent_edge) continue;
        if (disc[inc.other] == kUnseen) {
          edge_stack.push_back(inc.edge);
          disc[inc.other] = low[inc.other] = time++;
          stack.push_back({inc.other, inc.edge, 0});
        } else if (disc[inc.other] < disc[frame.v]) {
          edge_stack.push_back(inc.edge);
          low[frame.v] = std::min(low[frame.v], disc[inc.other]);
        }
        continue;
      }
      const Frame done = frame;
      stack.pop_back();
      if (stack.empty()) break;
      Vertex parent = stack.back().v;
      low[parent] = std::min(low[parent], low[done.v]);
      if (low[done.v] >= disc[parent]) {
        std::vector<EdgeId> block;
        while (true) {
          EdgeId e = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(e);
          if (static_cast<std::int64_t>(e) == done.parent_edge) break;
        }
        raw_blocks.push_back(std::move(block));
      }
    }
  }

  struct Raw {
    std::vector<Vertex> vertices;
    std::vector<EdgeId> edges;
  };
  std::vector<Raw> blocks;
  for (auto& edges : raw_blocks) {
    Raw raw;
    for (EdgeId e : edges) {
      raw.vertices.push_back(graph.edge(e).u);
      raw.vertices.push_back(graph.edge(e).v);
    }
    std::sort(raw.vertices.begin(), raw.vertices.end());
    raw.vertices.erase(std::unique(raw.vertices.begin(), raw.vertices.end()),
                       raw.vertices.end());
    std::sort(edges.begin(), edges.end());
    raw.edges = std::move(edges);
    blocks.push_back(std::move(raw));
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const Raw& a, const Raw& b) { return a.vertices < b.vertices; });

  BlockTree tree;
  tree.blocks_of_vertex.assign(n, {});
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (Vertex v : blocks[b].vertices) tree.blocks_of_vertex[v].push_back(b);
    tree.blocks.push_back(std::move(blocks[b].vertices));
    tree.block_edges.push_back(std::move(blocks[b].edges));
  }
  tree.cuts_of_block.assign(tree.blocks.size(), {});
  for (Vertex v = 0; v < n; ++v) {
    if (tree.blocks_of_vertex[v].size() > 1) {
      tree.cut_vertices.push_back(v);
      for (std::size_t b : tree.blocks_of_vertex[v]) tree.cuts_of_block[b].push_back(v);
    }
  }
  return tree;
}

VertexOrder st_order(const Multigraph& block, Vertex s, Vertex t) {
  const std::size_t n = block.vertex_count();
  if (s >= n || t >= n) throw InvalidInput("s-t terminals must be vertices of the block");
  if (s == t) throw InvalidInput("s-t ordering needs distinct terminals");
  if (n == 2) {
    if (block.multiplicity(s, t) == 0) {
      throw PreconditionError("two-vertex block without an edge");
    }
    return VertexOrder(std::vector<Vertex>{s, t});
  }
  BlockTree tree = block_tree(block);
  if (tree.blocks.size() != 1 || tree.blocks.front().size() != n) {
    throw PreconditionError("s-t ordering needs a biconnected graph");
  }

  // Simple adjacency plus a virtual s-t edge, with t first in s's list so
  // that t becomes the only child of s in the DFS tree.
  std::vector<std::vector<Vertex>> adj(n);
  for (Vertex v = 0; v < n; ++v) {
    for (const auto& [w, mult] : block.neighbours(v)) adj[v].push_back(w);
  }
  auto ensure = [&](Vertex a, Vertex b) {
    auto& list = adj[a];
    list.erase(std::remove(list.begin(), list.end(), b), list.end());
    list.insert(list.begin(), b);
  };
  ensure(s, t);
  ensure(t, s);

  constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> pre(n, kUnseen);
  std::vector<Vertex> parent(n, s);
  std::vector<Vertex> low(n);
  std::vector<Vertex> preorder;
  preorder.reserve(n);

  struct Frame {
    Vertex v;
    std::size_t next;
  };
  std::vector<Frame> stack{{s, 0}};
  pre[s] = 0;
  low[s] = s;
  preorder.push_back(s);
  while (!stack.empty()) {
    Frame& frame = stack.back();
    Vertex v = frame.v;
    if (frame.next < adj[v].size()) {
      Vertex w = adj[v][frame.next++];
      if (pre[w] == kUnseen) {
        pre[w] = preorder.size();
        preorder.push_back(w);
        parent[w] = v;
        low[w] = w;
        stack.push_back({w, 0});
      } else if (w != parent[v] && pre[w] < pre[low[v]]) {
        low[v] = w;
      }
      continue;
    }
    stack.pop_back();
    if (!stack.empty()) {
      Vertex p = stack.back().v;
      if (pre[low[v]] < pre[low[p]]) low[p] = low[v];
    }
  }

  std::list<Vertex> sequence{s, t};
  std::vector<std::list<Vertex>::iterator> where(n);
  where[s] = sequence.begin();
  where[t] = std::next(sequence.begin());
  // false encodes '-', true encodes '+'.
  std::vector<bool> sign(n, false);
  for (Vertex v : preorder) {
    if (v == s || v == t) continue;
    Vertex p = parent[v];
    if (!sign[low[v]]) {
      where[v] = sequence.insert(where[p], v);
      sign[p] = true;
    } else {
      where[v] = sequence.insert(std::next(where[p]), v);
      sign[p] = false;
    }
  }
  return VertexOrder(std::vector<Vertex>(sequence.begin(), sequence.end()));
}

bool is_st_order(const Multigraph& block, const VertexOrder& order, Vertex s, Vertex t) {
  const std::size_t n = block.vertex_count();
  if (order.size() != n || n < 2) return false;
  if (order[0] != s || order[n - 1] != t) return false;
  for (Vertex v = 0; v < n; ++v) {
    if (v == s || v == t || block.degree(v) < 2) continue;
    bool left = false;
    bool right = false;
    for (const auto& [w, mult] : block.neighbours(v)) {
      (order.position(w) < order.position(v) ? left : right) = true;
    }
    if (!left || !right) return false;
  }
  return true;
}

}  // namespace indeg
