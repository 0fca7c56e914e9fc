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

#include "precthin/characterization.hpp"

#include <algorithm>

#include "precthin/consistency.hpp"
#include "precthin/errors.hpp"
#include "precthin/interval.hpp"

namespace precthin {
namespace {

void check_bipartition(const Graph& g, const VertexSet& v1, const VertexSet& v2) {
  std::vector<VertexId> all(v1.begin(), v1.end());
  all.insert(all.end(), v2.begin(), v2.end());
  std::sort(all.begin(), all.end());
  if (all != g.vertices()) {
    throw InvalidInput("the two sides do not bipartition the vertex set");
  }
}

bool nested_along(const Graph& h, const std::vector<int>& order, bool closed) {
  for (std::size_t a = 0; a < order.size(); ++a) {
    for (std::size_t b = a + 1; b < order.size(); ++b) {
      const int u = order[a];
      const int v = order[b];
      for (int w = 0; w < static_cast<int>(h.order()); ++w) {
        const bool in_u = h.adjacent(u, w) || (closed && w == u);
        const bool in_v = h.adjacent(v, w) || (closed && w == v);
        if (in_u && !in_v) return false;
      }
    }
  }
  return true;
}

}  // namespace

SplitCompletion split_completion(const Graph& g, const VertexSet& v1, const VertexSet& v2) {
  VertexSet a = make_vertex_set(v1);
  VertexSet b = make_vertex_set(v2);
  if (a.size() != v1.size() || b.size() != v2.size()) {
    throw InvalidInput("a side repeats a vertex");
  }
  check_bipartition(g, a, b);
  const std::size_t n = g.order();
  std::vector<char> on_clique_side(n, 0);
  for (const auto& v : a) on_clique_side[static_cast<std::size_t>(g.index(v))] = 1;
  std::vector<std::uint8_t> adj(n * n, 0);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (u == v) continue;
      bool edge = g.adjacent(static_cast<int>(u), static_cast<int>(v));
      if (on_clique_side[u] && on_clique_side[v]) edge = true;
      if (!on_clique_side[u] && !on_clique_side[v]) edge = false;
      adj[u * n + v] = edge ? 1 : 0;
    }
  }
  return {Graph::from_adjacency(g.vertices(), std::move(adj)), std::move(a), std::move(b)};
}

bool is_threshold_ordering(const SplitCompletion& s, Side side, const Ordering& o) {
  const VertexSet& ground = side == Side::clique ? s.clique_side : s.stable_side;
  if (make_vertex_set(o) != ground || o.size() != ground.size()) {
    throw InvalidInput("ordering does not permute the chosen side");
  }
  std::vector<int> order;
  for (const auto& v : o) order.push_back(s.graph.index(v));
  return nested_along(s.graph, order, side == Side::clique);
}

namespace {

bool accordance(const Graph& g, const Ordering& s1, const Ordering& s2, bool strong) {
  const VertexSet v1 = make_vertex_set(s1);
  const VertexSet v2 = make_vertex_set(s2);
  if (v1.size() != s1.size() || v2.size() != s2.size()) {
    throw InvalidInput("an ordering repeats a vertex");
  }
  const SplitCompletion sc = split_completion(g, v1, v2);
  if (!is_threshold_ordering(sc, Side::clique, s1)) return false;
  if (strong && !is_threshold_ordering(sc, Side::stable, reversed(s2))) return false;
  const Graph h1 = induced_subgraph(g, v1);
  const Graph h2 = induced_subgraph(g, v2);
  if (strong) {
    return is_proper_canonical_ordering(h1, s1) && is_proper_canonical_ordering(h2, s2);
  }
  return is_canonical_ordering(h1, s1) && is_canonical_ordering(h2, s2);
}

}  // namespace

bool in_accordance(const Graph& g, const Ordering& s1, const Ordering& s2) {
  return accordance(g, s1, s2, false);
}

bool strongly_in_accordance(const Graph& g, const Ordering& s1, const Ordering& s2) {
  return accordance(g, s1, s2, true);
}

bool check_characterization(const Graph& g, const Ordering& s, const Partition& p,
                            bool strong) {
  check_permutation_of(g, s);
  check_partition_of(g, p);
  if (!verify_precedence(s, p)) {
    throw InvalidInput("ordering does not keep every part contiguous");
  }
  const auto owner = part_of(g, p);
  std::vector<Ordering> blocks;
  int last = -1;
  for (const auto& v : s) {
    const int part = owner[static_cast<std::size_t>(g.index(v))];
    if (part != last) blocks.emplace_back();
    blocks.back().push_back(v);
    last = part;
  }
  if (blocks.size() == 1) {
    return strong ? is_proper_canonical_ordering(g, s) : is_canonical_ordering(g, s);
  }
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      std::vector<VertexId> both(blocks[i].begin(), blocks[i].end());
      both.insert(both.end(), blocks[j].begin(), blocks[j].end());
      const Graph h = induced_subgraph(g, both);
      const bool ok = strong ? strongly_in_accordance(h, blocks[i], blocks[j])
                             : in_accordance(h, blocks[i], blocks[j]);
      if (!ok) return false;
    }
  }
  return true;
}

}  // namespace precthin
