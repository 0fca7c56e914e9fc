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

// PQ trees over the maximal cliques of an interval graph, with precedence
// annotations on the children of each node.
//
// The leaves of the tree are the maximal cliques; the frontiers of all
// equivalent trees (any permutation of the children of a P node, reversal of
// the children of a Q node) are exactly the canonical clique orderings of the
// graph.
//
// A precedence constraint "u before v" is compatible with a frontier iff some
// canonical ordering sorted by last clique puts u before v, i.e. iff the last
// clique of u is not after the last clique of v. For every node X with
// children X_1..X_k this amounts to: whenever u is in X_i, v is not in X_i and
// v is in X_j, X_i must precede X_j. annotate() records those requirements as
// arcs among children (and as an orientation demand on Q nodes); resolve()
// rearranges the tree to satisfy them or reports why it cannot.

#ifndef PRECTHIN_PQ_TREE_HPP_
#define PRECTHIN_PQ_TREE_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "precthin/expected.hpp"
#include "precthin/graph.hpp"
#include "precthin/interval.hpp"

namespace precthin {

enum class NodeKind { leaf, p_node, q_node };

// Orientation demanded of a Q node's child sequence by its constraint arcs.
enum class Orientation { free, forward, reversed, conflict };

// Which end of a vertex's clique interval a precedence constraint compares.
// last_clique is the only sense needed for canonical orderings; proper
// canonical orderings are sorted by both ends, so the strong recognizers also
// annotate every constraint in the first_clique sense.
enum class ConstraintSense { last_clique, first_clique };

struct PrecedenceConstraint {
  VertexId before;
  VertexId after;

  friend auto operator<=>(const PrecedenceConstraint&,
                          const PrecedenceConstraint&) = default;
};

struct PQNode {
  NodeKind kind = NodeKind::leaf;
  int clique = -1;            // leaves only
  std::vector<int> children;  // node ids, left to right
  // Arcs between positions in `children`, sorted and unique.
  std::vector<std::pair<int, int>> constraint_arcs;
  Orientation orientation = Orientation::free;  // Q nodes only
};

struct Incompatible {
  int node = -1;
  // Child positions forming a directed cycle (P nodes); empty for Q nodes.
  std::vector<int> cycle;
  std::string reason;
};

class PQTree;
Expected<PQTree, Incompatible> resolve(const PQTree& t);

class PQTree {
 public:
  PQTree() = default;

  // Leaf labels: clique i is the label of leaf node i.
  const std::vector<VertexSet>& cliques() const { return cliques_; }
  // Vertex set of the underlying graph, sorted; vertex indices below refer to
  // positions in this list.
  const std::vector<VertexId>& vertices() const { return vertices_; }

  bool empty() const { return root_ < 0; }
  int root() const { return root_; }
  std::size_t node_count() const { return nodes_.size(); }
  const PQNode& node(int id) const { return nodes_[static_cast<std::size_t>(id)]; }

  // Whether vertex `v` belongs to some leaf below `node_id`.
  bool contains(int node_id, int v) const;
  // Whether vertex `v` belongs to every leaf below `node_id`.
  bool in_every_leaf(int node_id, int v) const;

  std::vector<int> frontier_indices() const;
  CliqueSequence frontier() const;
  bool has_constraints() const;

  // Annotates one constraint over vertex indices. Prefer the free function
  // annotate_constraint() for the VertexId interface.
  void annotate(int before, int after,
                ConstraintSense sense = ConstraintSense::last_clique);

  // The same tree with the children of the root in reverse order.
  PQTree with_root_reversed() const;

  // Leaf `Ci` (1-based clique index), `(P ...)`, `(Q ...)`.
  std::string to_sexpr() const;
  std::string to_dot() const;

  friend bool operator==(const PQTree& a, const PQTree& b) {
    return a.to_sexpr() == b.to_sexpr();
  }

 private:
  friend Expected<PQTree, NotInterval> build_pqtree(const Graph& g);
  friend Expected<PQTree, Incompatible> resolve(const PQTree& t);

  void compute_membership();
  void add_arc(int node_id, int from, int to);
  // Reorders the children of a node; new_order[i] is the old position of the
  // child placed at position i.
  void permute_children(int node_id, const std::vector<int>& new_order);

  std::vector<VertexSet> cliques_;
  std::vector<VertexId> vertices_;
  std::vector<PQNode> nodes_;
  int root_ = -1;
  // Row-major node x vertex tables.
  std::vector<std::uint8_t> contains_;
  std::vector<std::uint8_t> in_every_leaf_;
};

// Any construction is acceptable as long as the frontier contract holds; this
// one decomposes the clique-membership family into overlap components. Each
// component of two or more sets becomes a Q node over its atoms, the
// remaining sets become P nodes, and the components nest as a laminar family.
// Children are arranged deterministically: P children by smallest leaf, Q
// children oriented so the first child has the smaller smallest leaf.
Expected<PQTree, NotInterval> build_pqtree(const Graph& g);

// Every frontier of every equivalent tree, as clique-index sequences.
// Throws BudgetExceeded when there would be more than `limit` of them.
std::vector<std::vector<int>> enumerate_frontier_indices(
    const PQTree& t, std::size_t limit = 1'000'000);
std::vector<CliqueSequence> enumerate_frontiers(const PQTree& t,
                                                std::size_t limit = 1'000'000);

// Throws InvalidInput if a vertex of c is unknown to t or lies in no leaf.
PQTree annotate_constraint(const PQTree& t, const Graph& g,
                           const PrecedenceConstraint& c,
                           ConstraintSense sense = ConstraintSense::last_clique);

// Arranges every P node by a topological order of its arcs (ties broken by
// current position) and orients every Q node as demanded.
Expected<PQTree, Incompatible> resolve(const PQTree& t);

}  // namespace precthin

#endif  // PRECTHIN_PQ_TREE_HPP_
