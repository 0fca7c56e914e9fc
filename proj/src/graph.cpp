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

#include "precthin/graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include "precthin/errors.hpp"

namespace precthin {

Ordering reversed(const Ordering& s) { return Ordering(s.rbegin(), s.rend()); }

VertexSet make_vertex_set(std::vector<VertexId> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

// ---------------------------------------------------------------------------
// Graph

Graph::Graph(std::vector<VertexId> vertices, const std::vector<Edge>& edges)
    : names_(std::move(vertices)) {
  std::sort(names_.begin(), names_.end());
  if (std::adjacent_find(names_.begin(), names_.end()) != names_.end()) {
    throw InvalidInput("duplicate vertex '" +
                       *std::adjacent_find(names_.begin(), names_.end()) + "'");
  }
  index_vertices();
  const std::size_t n = names_.size();
  adj_.assign(n * n, 0);
  for (const auto& [a, b] : edges) {
    if (a == b) throw InvalidInput("self-loop on vertex '" + a + "'");
    const int u = index(a);
    const int v = index(b);
    adj_[static_cast<std::size_t>(u) * n + static_cast<std::size_t>(v)] = 1;
    adj_[static_cast<std::size_t>(v) * n + static_cast<std::size_t>(u)] = 1;
  }
  rebuild_neighbors();
}

Graph Graph::from_adjacency(std::vector<VertexId> sorted_vertices,
                            std::vector<std::uint8_t> adjacency) {
  Graph g;
  g.names_ = std::move(sorted_vertices);
  g.adj_ = std::move(adjacency);
  g.index_vertices();
  g.rebuild_neighbors();
  return g;
}

void Graph::index_vertices() {
  index_.clear();
  index_.reserve(names_.size());
  for (std::size_t i = 0; i < names_.size(); ++i) {
    index_.emplace(names_[i], static_cast<int>(i));
  }
}

void Graph::rebuild_neighbors() {
  const int n = static_cast<int>(names_.size());
  nbrs_.assign(names_.size(), {});
  edge_count_ = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (adjacent(u, v)) {
        nbrs_[static_cast<std::size_t>(u)].push_back(v);
        if (u < v) ++edge_count_;
      }
    }
  }
}

std::optional<int> Graph::find(const VertexId& v) const {
  auto it = index_.find(v);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int Graph::index(const VertexId& v) const {
  auto it = index_.find(v);
  if (it == index_.end()) throw InvalidInput("unknown vertex '" + v + "'");
  return it->second;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  const int n = static_cast<int>(order());
  for (int u = 0; u < n; ++u) {
    for (int v : neighbors(u)) {
      if (u < v) out.emplace_back(name(u), name(v));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Digraph

Digraph::Digraph(std::vector<VertexId> vertices,
                 const std::vector<std::pair<VertexId, VertexId>>& arcs)
    : names_(make_vertex_set(std::move(vertices))) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    index_.emplace(names_[i], static_cast<int>(i));
  }
  out_.assign(names_.size(), {});
  for (const auto& [a, b] : arcs) add_arc(a, b);
}

int Digraph::index(const VertexId& v) const {
  auto it = index_.find(v);
  if (it == index_.end()) throw InvalidInput("unknown vertex '" + v + "'");
  return it->second;
}

std::size_t Digraph::arc_count() const {
  std::size_t m = 0;
  for (const auto& o : out_) m += o.size();
  return m;
}

void Digraph::add_arc(int from, int to) {
  auto& succ = out_[static_cast<std::size_t>(from)];
  auto it = std::lower_bound(succ.begin(), succ.end(), to);
  if (it == succ.end() || *it != to) succ.insert(it, to);
}

bool Digraph::has_arc(int from, int to) const {
  const auto& succ = out_[static_cast<std::size_t>(from)];
  return std::binary_search(succ.begin(), succ.end(), to);
}

std::vector<std::pair<VertexId, VertexId>> Digraph::arcs() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (std::size_t u = 0; u < out_.size(); ++u) {
    for (int v : out_[u]) out.emplace_back(names_[u], name(v));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Partition and ordering helpers

Partition::Partition(std::vector<std::vector<VertexId>> parts) {
  std::vector<VertexId> seen;
  parts_.reserve(parts.size());
  for (auto& part : parts) {
    if (part.empty()) throw InvalidInput("partition has an empty part");
    VertexSet normal = make_vertex_set(part);
    if (normal.size() != part.size()) {
      throw InvalidInput("vertex repeated inside a part");
    }
    seen.insert(seen.end(), normal.begin(), normal.end());
    parts_.push_back(std::move(normal));
  }
  std::sort(seen.begin(), seen.end());
  auto dup = std::adjacent_find(seen.begin(), seen.end());
  if (dup != seen.end()) {
    throw InvalidInput("vertex '" + *dup + "' appears in two parts");
  }
}

void check_partition_of(const Graph& g, const Partition& p) {
  std::size_t covered = 0;
  for (const auto& part : p.parts()) {
    for (const auto& v : part) {
      if (!g.contains(v)) {
        throw InvalidInput("partition mentions unknown vertex '" + v + "'");
      }
    }
    covered += part.size();
  }
  if (covered != g.order()) {
    throw InvalidInput("partition does not cover every vertex");
  }
}

void check_permutation_of(const Graph& g, const Ordering& s) {
  if (s.size() != g.order()) {
    throw InvalidInput("ordering has " + std::to_string(s.size()) +
                       " vertices, graph has " + std::to_string(g.order()));
  }
  std::vector<char> seen(g.order(), 0);
  for (const auto& v : s) {
    auto i = g.find(v);
    if (!i) throw InvalidInput("ordering mentions unknown vertex '" + v + "'");
    if (seen[static_cast<std::size_t>(*i)]++) {
      throw InvalidInput("ordering repeats vertex '" + v + "'");
    }
  }
}

std::vector<int> positions_in(const Graph& g, const Ordering& s) {
  std::vector<int> pos(g.order(), -1);
  for (std::size_t i = 0; i < s.size(); ++i) {
    pos[static_cast<std::size_t>(g.index(s[i]))] = static_cast<int>(i);
  }
  return pos;
}

std::vector<int> part_of(const Graph& g, const Partition& p) {
  std::vector<int> owner(g.order(), -1);
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (const auto& v : p[i]) {
      owner[static_cast<std::size_t>(g.index(v))] = static_cast<int>(i);
    }
  }
  return owner;
}

Graph induced_subgraph(const Graph& g, std::span<const VertexId> vs) {
  std::vector<int> idx;
  idx.reserve(vs.size());
  for (const auto& v : vs) idx.push_back(g.index(v));
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  const std::size_t k = idx.size();
  std::vector<VertexId> names;
  names.reserve(k);
  for (int i : idx) names.push_back(g.name(i));
  std::vector<std::uint8_t> adj(k * k, 0);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      adj[a * k + b] = g.adjacent(idx[a], idx[b]) ? 1 : 0;
    }
  }
  return Graph::from_adjacency(std::move(names), std::move(adj));
}

// ---------------------------------------------------------------------------
// Traversals

std::optional<std::vector<int>> topological_sort_indices(
    const std::vector<std::vector<int>>& succ, std::vector<int>* cycle) {
  const int n = static_cast<int>(succ.size());
  std::vector<int> indegree(static_cast<std::size_t>(n), 0);
  for (const auto& out : succ) {
    for (int v : out) ++indegree[static_cast<std::size_t>(v)];
  }
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int u = 0; u < n; ++u) {
    if (indegree[static_cast<std::size_t>(u)] == 0) ready.push(u);
  }
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  while (!ready.empty()) {
    const int u = ready.top();
    ready.pop();
    order.push_back(u);
    for (int v : succ[static_cast<std::size_t>(u)]) {
      if (--indegree[static_cast<std::size_t>(v)] == 0) ready.push(v);
    }
  }
  if (static_cast<int>(order.size()) == n) return order;

  if (cycle != nullptr) {
    // Every unfinished vertex keeps an unfinished predecessor, so walking
    // backwards must revisit a vertex.
    std::vector<std::vector<int>> pred(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u) {
      if (indegree[static_cast<std::size_t>(u)] == 0) continue;
      for (int v : succ[static_cast<std::size_t>(u)]) {
        if (indegree[static_cast<std::size_t>(v)] != 0) {
          pred[static_cast<std::size_t>(v)].push_back(u);
        }
      }
    }
    int start = 0;
    while (indegree[static_cast<std::size_t>(start)] == 0) ++start;
    std::vector<int> seen_at(static_cast<std::size_t>(n), -1);
    std::vector<int> walk;
    int cur = start;
    while (seen_at[static_cast<std::size_t>(cur)] < 0) {
      seen_at[static_cast<std::size_t>(cur)] = static_cast<int>(walk.size());
      walk.push_back(cur);
      cur = pred[static_cast<std::size_t>(cur)].front();
    }
    std::vector<int> back(walk.begin() + seen_at[static_cast<std::size_t>(cur)],
                          walk.end());
    cycle->assign(back.rbegin(), back.rend());
  }
  return std::nullopt;
}

std::optional<std::vector<int>> topological_sort_indices(
    const Digraph& d, std::vector<int>* cycle) {
  std::vector<std::vector<int>> succ(d.order());
  for (std::size_t u = 0; u < d.order(); ++u) {
    succ[u] = d.successors(static_cast<int>(u));
  }
  return topological_sort_indices(succ, cycle);
}

Expected<Ordering, CycleDetected> topological_sort(const Digraph& d) {
  std::vector<int> cycle;
  auto order = topological_sort_indices(d, &cycle);
  if (!order) {
    CycleDetected out;
    for (int v : cycle) out.cycle.push_back(d.name(v));
    return out;
  }
  Ordering s;
  s.reserve(order->size());
  for (int v : *order) s.push_back(d.name(v));
  return s;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  const int n = static_cast<int>(g.order());
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<VertexSet> out;
  for (int s = 0; s < n; ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    const int id = static_cast<int>(out.size());
    std::vector<int> stack{s};
    comp[static_cast<std::size_t>(s)] = id;
    std::vector<int> members;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      members.push_back(u);
      for (int v : g.neighbors(u)) {
        if (comp[static_cast<std::size_t>(v)] < 0) {
          comp[static_cast<std::size_t>(v)] = id;
          stack.push_back(v);
        }
      }
    }
    std::sort(members.begin(), members.end());
    VertexSet names;
    for (int v : members) names.push_back(g.name(v));
    out.push_back(std::move(names));
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

}  // namespace precthin
