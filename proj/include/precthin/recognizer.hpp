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

// Recognition of precedence (proper) k-thin graphs for a given partition:
// find an ordering in which every part is a contiguous block and which is
// (strongly) consistent with the partition.

#ifndef PRECTHIN_RECOGNIZER_HPP_
#define PRECTHIN_RECOGNIZER_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "precthin/graph.hpp"
#include "precthin/pq_tree.hpp"

namespace precthin {

enum class Answer { yes, no };

enum class FailureStage {
  none,
  non_interval_part,  // also used for parts that are not proper interval
  pq_incompatible,
  cycle_in_d,
  no_feasible_permutation,
};

std::string_view to_string(Answer a);
// NON_INTERVAL_PART, PQ_INCOMPATIBLE, ...
std::string_view to_string(FailureStage s);

// One rejected placement of a part.
struct Trial {
  // Part indices placed so far, ending with the rejected part (greedy search),
  // or the whole permutation tried (fixed-k searches).
  std::vector<int> part_order;
  int part = -1;
  FailureStage stage = FailureStage::none;
  std::string detail;
};

struct Certificate {
  Answer answer = Answer::no;
  Ordering witness;            // YES only
  std::vector<int> part_order;  // YES only, indices into the input partition
  FailureStage stage = FailureStage::none;  // NO only
  std::string reason;                       // NO only
  std::vector<Trial> trials;

  bool yes() const { return answer == Answer::yes; }
};

// Where the part under test sits relative to the witness part.
enum class Placement {
  // vi precedes vj: u < v whenever some w in vj has (u,w) not in E and
  // (v,w) in E.
  part_first,
  // vi follows vj (strong variant only): u < v whenever some w in vj has
  // (u,w) in E and (v,w) not in E.
  part_second,
};

// Ordering constraints on pairs of vi implied by the witnesses in vj, sorted.
// Throws InvalidInput if vi and vj intersect or mention unknown vertices.
std::vector<PrecedenceConstraint> precedence_relations(
    const Graph& g, const VertexSet& vi, const VertexSet& vj,
    Placement placement = Placement::part_first);

// Walks the frontier of t: for each clique C_i, the vertices of C_i that are
// simplicial in what is left of g get an arc to every vertex of C_{i+1}, and
// are then removed. d must be over V(g); throws InvalidInput if t is not a
// tree of g.
Digraph add_edges_from_pqtree(const Graph& g, const Digraph& d, const PQTree& t);

// Greedy part-by-part search: a part may go first when the constraints from
// all remaining parts fit some frontier of its PQ tree and the resulting
// precedence digraph is acyclic. Parts are tried in input order.
Certificate recognize_precedence_thin(const Graph& g, const Partition& p);

// Tries every permutation of the parts (at most kMaxFixedK of them).
Certificate recognize_precedence_proper_thin_fixed_k(const Graph& g,
                                                     const Partition& p);

// Same answer as the fixed-k search when every part induces a connected
// graph; each part then has only two clique orderings to try. Throws
// InvalidInput on a disconnected part.
Certificate recognize_precedence_proper_thin_connected(const Graph& g,
                                                       const Partition& p);

inline constexpr std::size_t kMaxFixedK = 8;

}  // namespace precthin

#endif  // PRECTHIN_RECOGNIZER_HPP_
