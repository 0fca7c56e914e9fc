// Copyright 2026 The precthin Authors
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

// Undirected simple graphs, digraphs, orderings and partitions over opaque
// string vertex identifiers.
//
// Vertices are always kept in lexicographic order, so the integer index of a
// vertex is also its lexicographic rank. Every deterministic tie-break in the
// library relies on this.

#ifndef PRECTHIN_GRAPH_HPP_
#define PRECTHIN_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "precthin/expected.hpp"

namespace precthin {

using VertexId = std::string;
// Sorted, duplicate-free list of vertices.
using VertexSet = std::vector<VertexId>;
// A sequence of distinct vertices; the ground set is implied by context.
using Ordering = std::vector<VertexId>;
using Edge = std::pair<VertexId, VertexId>;

Ordering reversed(const Ordering& s);
// Sorts and removes duplicates.
VertexSet make_vertex_set(std::vector<VertexId> vs);

class Graph {
 public:
  Graph() = default;
  // Throws InvalidInput on duplicate vertices, self-loops or unknown edge
  // endpoints. Repeated edges collapse to one.
  Graph(std::vector<VertexId> vertices, const std::vector<Edge>& edges);

  // Builds a graph from vertices already sorted and unique and a symmetric
  // adjacency matrix in row-major order. No validation beyond sizes.
  static Graph from_adjacency(std::vector<VertexId> sorted_vertices,
                              std::vector<std::uint8_t> adjacency);

  std::size_t order() const { return names_.size(); }
  std::size_t size() const { return edge_count_; }
  const std::vector<VertexId>& vertices() const { return names_; }
  const VertexId& name(int v) const { return names_[static_cast<std::size_t>(v)]; }

  bool contains(const VertexId& v) const { return index_.count(v) != 0; }
  std::optional<int> find(const VertexId& v) const;
  // Throws InvalidInput for an unknown vertex.
  int index(const VertexId& v) const;

  bool adjacent(int u, int v) const {
    return adj_[static_cast<std::size_t>(u) * names_.size() +
                static_cast<std::size_t>(v)] != 0;
  }
  bool adjacent(const VertexId& u, const VertexId& v) const {
    return adjacent(index(u), index(v));
  }
  // Ascending neighbor indices.
  const std::vector<int>& neighbors(int v) const {
    return nbrs_[static_cast<std::size_t>(v)];
  }
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

  // Edges as (u, v) pairs with u < v, sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.names_ == b.names_ && a.adj_ == b.adj_;
  }

 private:
  void index_vertices();
  void rebuild_neighbors();

  std::vector<VertexId> names_;
  std::unordered_map<VertexId, int> index_;
  std::vector<std::uint8_t> adj_;
  std::vector<std::vector<int>> nbrs_;
  std::size_t edge_count_ = 0;
};

class Digraph {
 public:
  Digraph() = default;
  // Parallel arcs collapse; throws InvalidInput on unknown endpoints.
  Digraph(std::vector<VertexId> vertices,
          const std::vector<std::pair<VertexId, VertexId>>& arcs);

  std::size_t order() const { return names_.size(); }
  std::size_t arc_count() const;
  const std::vector<VertexId>& vertices() const { return names_; }
  const VertexId& name(int v) const { return names_[static_cast<std::size_t>(v)]; }
  int index(const VertexId& v) const;

  void add_arc(int from, int to);
  void add_arc(const VertexId& from, const VertexId& to) {
    add_arc(index(from), index(to));
  }
  bool has_arc(int from, int to) const;
  const std::vector<int>& successors(int v) const {
    return out_[static_cast<std::size_t>(v)];
  }
  std::vector<std::pair<VertexId, VertexId>> arcs() const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.names_ == b.names_ && a.out_ == b.out_;
  }

 private:
  std::vector<VertexId> names_;
  std::unordered_map<VertexId, int> index_;
  // Sorted successor lists.
  std::vector<std::vector<int>> out_;
};

// Ordered list of nonempty, pairwise disjoint vertex sets. Coverage of a
// particular graph is checked with check_partition_of().
class Partition {
 public:
  Partition() = default;
  // Each part is normalised to a VertexSet. Throws InvalidInput on an empty
  // part or a vertex that appears twice.
  explicit Partition(std::vector<std::vector<VertexId>> parts);

  std::size_t size() const { return parts_.size(); }
  const std::vector<VertexSet>& parts() const { return parts_; }
  const VertexSet& operator[](std::size_t i) const { return parts_[i]; }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<VertexSet> parts_;
};

// Throws InvalidInput unless p covers exactly V(g).
void check_partition_of(const Graph& g, const Partition& p);
// Throws InvalidInput unless s is a permutation of V(g).
void check_permutation_of(const Graph& g, const Ordering& s);
// Position of every vertex of g in s, indexed by vertex index. Assumes s has
// been checked.
std::vector<int> positions_in(const Graph& g, const Ordering& s);
// Part number of every vertex of g, indexed by vertex index.
std::vector<int> part_of(const Graph& g, const Partition& p);

// G[vs]. Throws InvalidInput if vs contains an unknown vertex.
Graph induced_subgraph(const Graph& g, std::span<const VertexId> vs);

struct CycleDetected {
  // v1, ..., vk with arcs v1->v2, ..., vk->v1.
  std::vector<VertexId> cycle;
};

// Kahn's algorithm, always emitting the lexicographically smallest available
// vertex.
Expected<Ordering, CycleDetected> topological_sort(const Digraph& d);

// Same contract over indices; on failure returns the cycle as indices in
// `cycle` and an empty optional.
std::optional<std::vector<int>> topological_sort_indices(
    const Digraph& d, std::vector<int>* cycle = nullptr);

// Kahn's algorithm over successor lists of vertices 0..n-1, always emitting
// the smallest available index.
std::optional<std::vector<int>> topological_sort_indices(
    const std::vector<std::vector<int>>& successors,
    std::vector<int>* cycle = nullptr);

// The empty graph counts as connected.
bool is_connected(const Graph& g);
// Connected components as vertex sets, ordered by smallest vertex.
std::vector<VertexSet> connected_components(const Graph& g);

}  // namespace precthin

#endif  // PRECTHIN_GRAPH_HPP_
