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

#include "precthin/interval.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

#include "precthin/errors.hpp"
#include "precthin/pq_tree.hpp"

namespace precthin {
namespace {

void bron_kerbosch(const Graph& g, std::vector<int>& r, std::vector<int> p,
                   std::vector<int> x, std::vector<std::vector<int>>& out) {
  if (p.empty()) {
    if (x.empty()) {
      std::vector<int> c = r;
      std::sort(c.begin(), c.end());
      out.push_back(std::move(c));
    }
    return;
  }
  // Pivot maximising |P ∩ N(u)|.
  int pivot = -1;
  std::size_t best = 0;
  for (const auto* side : {&p, &x}) {
    for (int u : *side) {
      std::size_t cnt = 0;
      for (int v : p) cnt += g.adjacent(u, v) ? 1 : 0;
      if (pivot < 0 || cnt > best) {
        pivot = u;
        best = cnt;
      }
    }
  }
  std::vector<int> candidates;
  for (int v : p) {
    if (!g.adjacent(pivot, v)) candidates.push_back(v);
  }
  for (int v : candidates) {
    std::vector<int> np;
    std::vector<int> nx;
    for (int w : p) {
      if (g.adjacent(v, w)) np.push_back(w);
    }
    for (int w : x) {
      if (g.adjacent(v, w)) nx.push_back(w);
    }
    r.push_back(v);
    bron_kerbosch(g, r, std::move(np), std::move(nx), out);
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), v));
    x.push_back(v);
  }
}

// Canonical condition over a sequence of vertex indices: every vertex r is
// adjacent to everything between its earliest earlier neighbour and itself.
bool canonical_indices(const Graph& g, const std::vector<int>& order) {
  const std::size_t n = order.size();
  for (std::size_t r = 0; r < n; ++r) {
    std::size_t p = 0;
    while (p < r && !g.adjacent(order[p], order[r])) ++p;
    for (std::size_t q = p + 1; q < r; ++q) {
      if (!g.adjacent(order[q], order[r])) return false;
    }
  }
  return true;
}

std::vector<int> indices_of(const Graph& g, const Ordering& s) {
  check_permutation_of(g, s);
  std::vector<int> out;
  out.reserve(s.size());
  for (const auto& v : s) out.push_back(g.index(v));
  return out;
}

// Sorts the vertices of a connected graph by (first clique, last clique, name)
// over the given clique sequence.
Ordering sort_by_clique_span(const Graph& g, const CliqueSequence& sc) {
  const std::size_t n = g.order();
  std::vector<int> first(n, -1);
  std::vector<int> last(n, -1);
  for (std::size_t i = 0; i < sc.size(); ++i) {
    for (const auto& v : sc[i]) {
      const auto u = static_cast<std::size_t>(g.index(v));
      if (first[u] < 0) first[u] = static_cast<int>(i);
      last[u] = static_cast<int>(i);
    }
  }
  std::vector<int> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = static_cast<int>(i);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    const auto ua = static_cast<std::size_t>(a);
    const auto ub = static_cast<std::size_t>(b);
    return std::tie(first[ua], last[ua], a) < std::tie(first[ub], last[ub], b);
  });
  Ordering s;
  s.reserve(n);
  for (int v : idx) s.push_back(g.name(v));
  return s;
}

}  // namespace

std::vector<std::vector<int>> maximal_clique_indices(const Graph& g) {
  std::vector<std::vector<int>> out;
  std::vector<int> r;
  std::vector<int> p(g.order());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = static_cast<int>(i);
  if (!p.empty()) bron_kerbosch(g, r, std::move(p), {}, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexSet> maximal_cliques(const Graph& g) {
  std::vector<VertexSet> out;
  for (const auto& c : maximal_clique_indices(g)) {
    VertexSet names;
    names.reserve(c.size());
    for (int v : c) names.push_back(g.name(v));
    out.push_back(std::move(names));
  }
  return out;
}

bool is_canonical_ordering(const Graph& g, const Ordering& s) {
  return canonical_indices(g, indices_of(g, s));
}

bool is_proper_canonical_ordering(const Graph& g, const Ordering& s) {
  auto order = indices_of(g, s);
  if (!canonical_indices(g, order)) return false;
  std::reverse(order.begin(), order.end());
  return canonical_indices(g, order);
}

bool has_consecutive_cliques(const CliqueSequence& sc) {
  std::map<VertexId, std::size_t> last_seen;
  for (std::size_t i = 0; i < sc.size(); ++i) {
    for (const auto& v : sc[i]) {
      auto it = last_seen.find(v);
      if (it != last_seen.end() && it->second + 1 != i) return false;
      last_seen[v] = i;
    }
  }
  return true;
}

Expected<CliqueSequence, NotInterval> recognize_interval(const Graph& g) {
  auto tree = build_pqtree(g);
  if (!tree) return tree.error();
  return tree->frontier();
}

bool is_interval(const Graph& g) { return recognize_interval(g).has_value(); }

Expected<Ordering, NotProperInterval> recognize_proper_interval(const Graph& g) {
  Ordering out;
  out.reserve(g.order());
  for (const auto& comp : connected_components(g)) {
    const Graph h = induced_subgraph(g, comp);
    auto sc = recognize_interval(h);
    if (!sc) {
      return NotProperInterval{"component containing '" + comp.front() +
                               "' is not an interval graph"};
    }
    CliqueSequence back(sc->rbegin(), sc->rend());
    Ordering a = sort_by_clique_span(h, *sc);
    Ordering b = sort_by_clique_span(h, back);
    const Ordering& best = std::min(a, b);
    if (!is_proper_canonical_ordering(h, best)) {
      return NotProperInterval{"component containing '" + comp.front() +
                               "' has no proper canonical ordering"};
    }
    out.insert(out.end(), best.begin(), best.end());
  }
  return out;
}

bool is_proper_interval(const Graph& g) {
  return recognize_proper_interval(g).has_value();
}

void check_maximal_clique_sequence(const Graph& g, const CliqueSequence& sc) {
  std::vector<VertexSet> given;
  given.reserve(sc.size());
  for (const auto& c : sc) given.push_back(make_vertex_set(c));
  std::sort(given.begin(), given.end());
  if (given != maximal_cliques(g)) {
    throw InvalidInput("clique sequence does not list the maximal cliques");
  }
}

Ordering canonical_from_clique_order(const Graph& g, const CliqueSequence& sc) {
  check_maximal_clique_sequence(g, sc);
  if (!has_consecutive_cliques(sc)) {
    throw InvalidInput("clique sequence is not a canonical clique ordering");
  }
  const std::size_t n = g.order();
  std::vector<char> alive(n, 1);
  Ordering out;
  out.reserve(n);
  for (const auto& clique : sc) {
    std::vector<int> batch;
    for (const auto& name : clique) {
      const int v = g.index(name);
      if (!alive[static_cast<std::size_t>(v)]) continue;
      std::vector<int> live;
      for (int w : g.neighbors(v)) {
        if (alive[static_cast<std::size_t>(w)]) live.push_back(w);
      }
      bool simplicial = true;
      for (std::size_t a = 0; a < live.size() && simplicial; ++a) {
        for (std::size_t b = a + 1; b < live.size(); ++b) {
          if (!g.adjacent(live[a], live[b])) {
            simplicial = false;
            break;
          }
        }
      }
      if (simplicial) batch.push_back(v);
    }
    std::sort(batch.begin(), batch.end());
    for (int v : batch) {
      alive[static_cast<std::size_t>(v)] = 0;
      out.push_back(g.name(v));
    }
  }
  if (out.size() != n) {
    throw std::logic_error("simplicial elimination left vertices behind");
  }
  return out;
}

bool ordered_according(const Graph& g, const Ordering& s,
                       const CliqueSequence& sc) {
  check_permutation_of(g, s);
  check_maximal_clique_sequence(g, sc);
  const auto pos = positions_in(g, s);
  const std::size_t n = g.order();
  std::vector<std::vector<char>> member(sc.size(), std::vector<char>(n, 0));
  for (std::size_t i = 0; i < sc.size(); ++i) {
    for (const auto& v : sc[i]) member[i][static_cast<std::size_t>(g.index(v))] = 1;
  }
  for (std::size_t i = 0; i < sc.size(); ++i) {
    for (std::size_t j = i + 1; j < sc.size(); ++j) {
      for (std::size_t v = 0; v < n; ++v) {
        if (!member[i][v] || member[j][v]) continue;
        for (std::size_t u = 0; u < n; ++u) {
          if (member[j][u] && pos[u] < pos[v]) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace precthin
