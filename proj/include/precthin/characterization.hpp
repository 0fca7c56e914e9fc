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

// Pairwise characterization of precedence (strongly) consistent orderings
// through split completions and threshold orderings.

#ifndef PRECTHIN_CHARACTERIZATION_HPP_
#define PRECTHIN_CHARACTERIZATION_HPP_

#include "precthin/graph.hpp"

namespace precthin {

// g with v1 completed to a clique and every edge inside v2 removed.
struct SplitCompletion {
  Graph graph;
  VertexSet clique_side;
  VertexSet stable_side;
};

enum class Side { clique, stable };

// Throws InvalidInput unless (v1, v2) is a bipartition of V(g). Either side
// may be empty.
SplitCompletion split_completion(const Graph& g, const VertexSet& v1, const VertexSet& v2);

// Clique side: u before v implies N[u] is a subset of N[v]. Stable side: u
// before v implies N(u) is a subset of N(v). Neighbourhoods are taken in
// s.graph. Throws InvalidInput unless o permutes the chosen side.
bool is_threshold_ordering(const SplitCompletion& s, Side side, const Ordering& o);

// s1 is a clique-side threshold ordering of the split completion for
// (V(s1), V(s2)), and s1, s2 are canonical orderings of the graphs they
// induce. Throws InvalidInput unless (V(s1), V(s2)) bipartitions V(g).
bool in_accordance(const Graph& g, const Ordering& s1, const Ordering& s2);

// s1 (clique side) and the reversal of s2 (stable side) are threshold
// orderings, and s1, s2 are proper canonical orderings of their parts.
bool strongly_in_accordance(const Graph& g, const Ordering& s1, const Ordering& s2);

// Splits s into the blocks of p in the order they occur and checks every pair
// of blocks i < j against the graph induced by their union. With a single
// block this is the (proper) canonical check of s. Throws InvalidInput unless
// s permutes V(g) with every part of p contiguous.
bool check_characterization(const Graph& g, const Ordering& s, const Partition& p,
                            bool strong);

}  // namespace precthin

#endif  // PRECTHIN_CHARACTERIZATION_HPP_
