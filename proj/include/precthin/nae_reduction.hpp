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

// Encoding of not-all-equal 3-SAT as partitioned precedence proper thinness
// with parts of size at most two.
//
// Per variable i: singleton parts {x{i}T} and {x{i}F}. Per occurrence of
// variable i in clause j: part {x{i}_{j}T, x{i}_{j}F} joined by
// x{i}T - x{i}_{j}T and x{i}F - x{i}_{j}F. Per clause j: parts
// Y_k = {y{k}_{j}_1, y{k}_{j}_2} for k = 1..3 and a fixed 15-edge gadget
// between them and the occurrence parts. A literal's occurrence part is read
// as the ordered pair O = (F, T) for a positive literal and (T, F) for a
// negative one.

#ifndef PRECTHIN_NAE_REDUCTION_HPP_
#define PRECTHIN_NAE_REDUCTION_HPP_

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "precthin/expected.hpp"
#include "precthin/graph.hpp"

namespace precthin {

struct Literal {
  int variable = 1;  // 1-based
  bool positive = true;

  friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::array<Literal, 3>;

struct NAEFormula {
  int variable_count = 0;
  std::vector<Clause> clauses;
};

// Throws InvalidInput on a nonpositive variable count, an out-of-range
// variable or a clause that mentions a variable twice.
void validate(const NAEFormula& f);

// `p nae3 <vars> <clauses>` then one clause per line: three nonzero signed
// integers, optionally followed by 0. Lines starting with `c` are comments.
// Throws InvalidInput with a line number on malformed input.
NAEFormula parse_nae_dimacs(std::string_view text);

// Index 0 holds x1.
using Assignment = std::vector<bool>;

bool nae_satisfies(const NAEFormula& f, const Assignment& a);

struct Unsatisfiable {};

// First NAE-satisfying assignment counting x1 as the least significant bit,
// or Unsatisfiable. Throws BudgetExceeded above 24 variables.
Expected<Assignment, Unsatisfiable> nae_brute_force(const NAEFormula& f);

struct ReductionInstance {
  NAEFormula formula;
  Graph graph;
  Partition partition;
  // One tag per part: "X{i}^T", "X{i}^F", "X{i}_{j}" or "Y{k}_{j}".
  std::vector<std::string> part_roles;
};

ReductionInstance reduce(const NAEFormula& f);

// Vertex names used by reduce().
std::string variable_vertex(int i, bool truth);
std::string occurrence_vertex(int i, int j, bool truth);
std::string gadget_vertex(int k, int j, int element);

// The ordering of a NAE-satisfying assignment: the r variable vertices that
// come first, every clause's parts laid out by its truth pattern (clauses in
// index order), then the other r variable vertices. Throws InvalidInput when
// a does not NAE-satisfy the formula.
Ordering witness_from_assignment(const ReductionInstance& inst, const Assignment& a);

// x_i is true iff x{i}F precedes x{i}T in s.
Assignment decode_assignment(const ReductionInstance& inst, const Ordering& s);

}  // namespace precthin

#endif  // PRECTHIN_NAE_REDUCTION_HPP_
