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

// Interval and proper interval machinery: maximal cliques, canonical vertex
// orderings and canonical clique orderings.

#ifndef PRECTHIN_INTERVAL_HPP_
#define PRECTHIN_INTERVAL_HPP_

#include <string>
#include <vector>

#include "precthin/expected.hpp"
#include "precthin/graph.hpp"

namespace precthin {

// Ordered list of maximal cliques. A canonical clique ordering has every
// vertex's cliques consecutive.
using CliqueSequence = std::vector<VertexSet>;

struct NotInterval {
  std::string reason;
};
struct NotProperInterval {
  std::string reason;
};

// Inclusion-maximal cliques, each sorted, listed in lexicographic order of
// their member lists. Bron-Kerbosch with pivoting; exponential in the worst
// case but fine for the graph sizes this library targets.
std::vector<VertexSet> maximal_cliques(const Graph& g);
// Same, as sorted vertex-index lists.
std::vector<std::vector<int>> maximal_clique_indices(const Graph& g);

// For every triple p < q < r of s: (p,r) in E implies (q,r) in E.
// Throws InvalidInput unless s is a permutation of V(g).
bool is_canonical_ordering(const Graph& g, const Ordering& s);
// For every triple p < q < r of s: (p,r) in E implies (p,q), (q,r) in E.
bool is_proper_canonical_ordering(const Graph& g, const Ordering& s);

// True iff every vertex occurs in a contiguous run of `sc`.
bool has_consecutive_cliques(const CliqueSequence& sc);

// A canonical clique ordering of g, or NotInterval. The choice is the frontier
// of build_pqtree(g) in its default arrangement.
Expected<CliqueSequence, NotInterval> recognize_interval(const Graph& g);
bool is_interval(const Graph& g);

// The lexicographically smallest proper canonical ordering, or
// NotProperInterval. Components are laid out by smallest vertex.
Expected<Ordering, NotProperInterval> recognize_proper_interval(const Graph& g);
bool is_proper_interval(const Graph& g);

// Emits, clique by clique, the simplicial vertices of the residual graph that
// lie in the current clique (in lexicographic order) and deletes them.
// Throws InvalidInput unless sc lists the maximal cliques of g in a canonical
// clique ordering.
Ordering canonical_from_clique_order(const Graph& g, const CliqueSequence& sc);

// True iff there is no pair u < v in s and i < j with v in C_i \ C_j and
// u in C_j.
bool ordered_according(const Graph& g, const Ordering& s,
                       const CliqueSequence& sc);

// Throws InvalidInput unless sc is a permutation of maximal_cliques(g).
void check_maximal_clique_sequence(const Graph& g, const CliqueSequence& sc);

}  // namespace precthin

#endif  // PRECTHIN_INTERVAL_HPP_
