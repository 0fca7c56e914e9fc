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

// Consistency of a vertex ordering with a partition.
//
// (s, P) is consistent when for every p < q < r in s with p, q in the same
// part, (p,r) in E implies (q,r) in E. It is strongly consistent when the
// reversal of s is consistent too; for the original order that adds: for every
// p < q < r with q, r in the same part, (p,r) in E implies (p,q) in E.

#ifndef PRECTHIN_CONSISTENCY_HPP_
#define PRECTHIN_CONSISTENCY_HPP_

#include <vector>

#include "precthin/graph.hpp"

namespace precthin {

struct ViolationTriple {
  VertexId p;
  VertexId q;
  VertexId r;
  // false: p, q share a part, (p,r) in E, (q,r) not in E.
  // true:  q, r share a part, (p,r) in E, (p,q) not in E.
  bool mirrored = false;

  friend bool operator==(const ViolationTriple&, const ViolationTriple&) = default;
};

struct ConsistencyReport {
  bool consistent = true;
  bool strongly_consistent = true;
  // At most kMaxViolations witnesses, plain ones first.
  std::vector<ViolationTriple> violations;

  static constexpr std::size_t kMaxViolations = 10;
};

// G_s (strong = false): v < w adjacent iff some z > w has (z,v) in E and
// (z,w) not in E. The strong variant also joins v < w when some x < v has
// (x,w) in E and (x,v) not in E.
Graph build_conflict_graph(const Graph& g, const Ordering& s, bool strong);

// Throws InvalidInput unless s permutes V(g) and p partitions it.
ConsistencyReport verify(const Graph& g, const Ordering& s, const Partition& p);

// Every part occupies a contiguous block of s. Throws InvalidInput unless s
// and p have the same ground set.
bool verify_precedence(const Ordering& s, const Partition& p);

// Scans s once, opening a new part whenever the next vertex conflicts with a
// vertex of the current part. The parts are blocks of s, listed in order, and
// their number is the minimum over all partitions into blocks of s.
Partition greedy_min_precedence_partition(const Graph& g, const Ordering& s,
                                          bool strong);

}  // namespace precthin

#endif  // PRECTHIN_CONSISTENCY_HPP_
