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

#include "precthin/consistency.hpp"

#include <algorithm>
#include <map>

#include "precthin/errors.hpp"

namespace precthin {
namespace {

// Conflict matrix over positions of s: conflict[i][j] for i < j.
std::vector<std::vector<char>> conflicts(const Graph& g, const std::vector<int>& order,
                                         bool strong) {
  const std::size_t n = order.size();
  std::vector<std::vector<char>> c(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const int v = order[i];
      const int w = order[j];
      bool hit = false;
      for (std::size_t z = j + 1; z < n && !hit; ++z) {
        hit = g.adjacent(order[z], v) && !g.adjacent(order[z], w);
      }
      for (std::size_t x = 0; strong && x < i && !hit; ++x) {
        hit = g.adjacent(order[x], w) && !g.adjacent(order[x], v);
      }
      c[i][j] = c[j][i] = hit ? 1 : 0;
    }
  }
  return c;
}

std::vector<int> order_indices(const Graph& g, const Ordering& s) {
  check_permutation_of(g, s);
  std::vector<int> out;
  out.reserve(s.size());
  for (const auto& v : s) out.push_back(g.index(v));
  return out;
}

}  // namespace

Graph build_conflict_graph(const Graph& g, const Ordering& s, bool strong) {
  const auto order = order_indices(g, s);
  const auto c = conflicts(g, order, strong);
  const std::size_t n = order.size();
  std::vector<std::uint8_t> adj(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (c[i][j]) {
        adj[static_cast<std::size_t>(order[i]) * n + static_cast<std::size_t>(order[j])] = 1;
      }
    }
  }
  return Graph::from_adjacency(g.vertices(), std::move(adj));
}

ConsistencyReport verify(const Graph& g, const Ordering& s, const Partition& p) {
  const auto order = order_indices(g, s);
  check_partition_of(g, p);
  const auto owner = part_of(g, p);
  const std::size_t n = order.size();
  auto part = [&](std::size_t pos) { return owner[static_cast<std::size_t>(order[pos])]; };

  ConsistencyReport report;
  std::vector<ViolationTriple> plain;
  std::vector<ViolationTriple> mirrored;
  // Colouring check: a conflict edge inside one part, then a witness for it.
  const auto weak = conflicts(g, order, false);
  const auto strong = conflicts(g, order, true);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (part(i) != part(j)) continue;
      if (weak[i][j]) {
        report.consistent = false;
        for (std::size_t z = j + 1; z < n; ++z) {
          if (g.adjacent(order[z], order[i]) && !g.adjacent(order[z], order[j])) {
            plain.push_back({g.name(order[i]), g.name(order[j]), g.name(order[z]), false});
            break;
          }
        }
      }
      if (strong[i][j]) {
        report.strongly_consistent = false;
        for (std::size_t x = 0; x < i; ++x) {
          if (g.adjacent(order[x], order[j]) && !g.adjacent(order[x], order[i])) {
            mirrored.push_back({g.name(order[x]), g.name(order[i]), g.name(order[j]), true});
            break;
          }
        }
      }
    }
  }
  for (auto* list : {&plain, &mirrored}) {
    for (auto& t : *list) {
      if (report.violations.size() == ConsistencyReport::kMaxViolations) break;
      report.violations.push_back(std::move(t));
    }
  }
  return report;
}

bool verify_precedence(const Ordering& s, const Partition& p) {
  std::map<VertexId, std::size_t> owner;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (const auto& v : p[i]) owner.emplace(v, i);
  }
  if (owner.size() != s.size()) {
    throw InvalidInput("ordering and partition have different ground sets");
  }
  std::vector<char> closed(p.size(), 0);
  std::size_t current = p.size();
  std::map<VertexId, char> seen;
  for (const auto& v : s) {
    auto it = owner.find(v);
    if (it == owner.end() || seen[v]++) {
      throw InvalidInput("ordering and partition have different ground sets");
    }
    const std::size_t part = it->second;
    if (part == current) continue;
    if (closed[part]) return false;
    if (current < p.size()) closed[current] = 1;
    current = part;
  }
  return true;
}

Partition greedy_min_precedence_partition(const Graph& g, const Ordering& s,
                                          bool strong) {
  const auto order = order_indices(g, s);
  const auto c = conflicts(g, order, strong);
  std::vector<std::vector<VertexId>> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    bool clash = false;
    for (std::size_t j = start; j < i && !clash; ++j) clash = c[j][i] != 0;
    if (i == 0 || clash) {
      parts.emplace_back();
      start = i;
    }
    parts.back().push_back(g.name(order[i]));
  }
  return Partition(std::move(parts));
}

}  // namespace precthin
