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

// Exhaustive search, used as ground truth for the recognizers at small sizes.

#ifndef PRECTHIN_ORACLE_HPP_
#define PRECTHIN_ORACLE_HPP_

#include <cstdint>

#include "precthin/graph.hpp"
#include "precthin/recognizer.hpp"

namespace precthin {

struct OracleBudget {
  std::size_t max_vertices = 10;
  std::size_t max_parts = 10;
  std::uint64_t max_states = 100'000'000;  // search nodes visited
};

// Depth-first search over block orderings: once a part is started it must be
// finished before another starts, and vertices are tried in lexicographic
// order, so a YES witness is the lexicographically first feasible ordering.
// A prefix is abandoned as soon as the vertex just placed closes a violating
// triple. Throws BudgetExceeded when the instance or the search outgrows b.
Certificate brute_force_partitioned(const Graph& g, const Partition& p, bool strong,
                                    const OracleBudget& b = {});

// Minimum number of blocks over all vertex orderings, using the greedy
// partition for each ordering. 0 for the empty graph.
int brute_force_precedence_thinness(const Graph& g, bool strong,
                                    const OracleBudget& b = {});

}  // namespace precthin

#endif  // PRECTHIN_ORACLE_HPP_
