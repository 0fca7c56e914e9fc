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

#include "precthin/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "precthin/consistency.hpp"
#include "precthin/errors.hpp"

namespace precthin {
namespace {

class BlockSearch {
 public:
  BlockSearch(const Graph& g, const Partition& p, bool strong, std::uint64_t max_states)
      : g_(g),
        owner_(part_of(g, p)),
        remaining_(p.size(), 0),
        used_(g.order(), 0),
        seen_adjacent_(p.size(), 0),
        strong_(strong),
        max_states_(max_states) {
    for (int o : owner_) ++remaining_[static_cast<std::size_t>(o)];
  }

  bool run() { return extend(); }
  const std::vector<int>& sequence() const { return seq_; }

 private:
  bool extend() {
    if (seq_.size() == g_.order()) return true;
    if (++states_ > max_states_) {
      throw BudgetExceeded("search exceeded " + std::to_string(max_states_) + " states");
    }
    const int n = static_cast<int>(g_.order());
    for (int v = 0; v < n; ++v) {
      if (used_[static_cast<std::size_t>(v)]) continue;
      const int part = owner_[static_cast<std::size_t>(v)];
      if (current_ >= 0 && part != current_) continue;
      if (!fits(v)) continue;
      const int saved = current_;
      used_[static_cast<std::size_t>(v)] = 1;
      seq_.push_back(v);
      current_ = --remaining_[static_cast<std::size_t>(part)] > 0 ? part : -1;
      if (extend()) return true;
      ++remaining_[static_cast<std::size_t>(part)];
      current_ = saved;
      seq_.pop_back();
      used_[static_cast<std::size_t>(v)] = 0;
    }
    return false;
  }

  // Checks every triple whose last element would be r.
  bool fits(int r) {
    std::fill(seen_adjacent_.begin(), seen_adjacent_.end(), 0);
    for (int x : seq_) {
      const auto part = static_cast<std::size_t>(owner_[static_cast<std::size_t>(x)]);
      if (g_.adjacent(x, r)) {
        seen_adjacent_[part] = 1;
      } else if (seen_adjacent_[part]) {
        return false;
      }
    }
    if (!strong_) return true;
    const int own = owner_[static_cast<std::size_t>(r)];
    for (std::size_t qi = 0; qi < seq_.size(); ++qi) {
      const int q = seq_[qi];
      if (owner_[static_cast<std::size_t>(q)] != own) continue;
      for (std::size_t pi = 0; pi < qi; ++pi) {
        const int p = seq_[pi];
        if (g_.adjacent(p, r) && !g_.adjacent(p, q)) return false;
      }
    }
    return true;
  }

  const Graph& g_;
  std::vector<int> owner_;
  std::vector<int> remaining_;
  std::vector<char> used_;
  std::vector<char> seen_adjacent_;
  std::vector<int> seq_;
  int current_ = -1;
  bool strong_;
  std::uint64_t max_states_;
  std::uint64_t states_ = 0;
};

}  // namespace

Certificate brute_force_partitioned(const Graph& g, const Partition& p, bool strong,
                                    const OracleBudget& b) {
  check_partition_of(g, p);
  if (g.order() > b.max_vertices) {
    throw BudgetExceeded("oracle limited to " + std::to_string(b.max_vertices) +
                         " vertices, got " + std::to_string(g.order()));
  }
  if (p.size() > b.max_parts) {
    throw BudgetExceeded("oracle limited to " + std::to_string(b.max_parts) +
                         " parts, got " + std::to_string(p.size()));
  }
  BlockSearch search(g, p, strong, b.max_states);
  Certificate c;
  if (!search.run()) {
    c.answer = Answer::no;
    c.stage = FailureStage::no_feasible_permutation;
    c.reason = strong ? "no ordering in blocks is strongly consistent with the partition"
                      : "no ordering in blocks is consistent with the partition";
    return c;
  }
  const auto owner = part_of(g, p);
  c.answer = Answer::yes;
  for (int v : search.sequence()) {
    c.witness.push_back(g.name(v));
    const int part = owner[static_cast<std::size_t>(v)];
    if (c.part_order.empty() || c.part_order.back() != part) c.part_order.push_back(part);
  }
  return c;
}

int brute_force_precedence_thinness(const Graph& g, bool strong, const OracleBudget& b) {
  if (g.order() > b.max_vertices) {
    throw BudgetExceeded("oracle limited to " + std::to_string(b.max_vertices) +
                         " vertices, got " + std::to_string(g.order()));
  }
  if (g.order() == 0) return 0;
  Ordering s = g.vertices();
  int best = std::numeric_limits<int>::max();
  std::uint64_t states = 0;
  do {
    if (++states > b.max_states) {
      throw BudgetExceeded("search exceeded " + std::to_string(b.max_states) + " states");
    }
    const int k = static_cast<int>(greedy_min_precedence_partition(g, s, strong).size());
    best = std::min(best, k);
  } while (best > 1 && std::next_permutation(s.begin(), s.end()));
  return best;
}

}  // namespace precthin
