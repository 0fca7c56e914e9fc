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


#include "support/oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "precthin/instance_io.hpp"

namespace precthin::testing {
namespace {

int pair_bit(int n, int i, int j) {
  // Pairs (0,1), (0,2), ..., (0,n-1), (1,2), ...
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

std::vector<int> identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

std::uint64_t canonical_mask(int n, const std::vector<std::vector<bool>>& adj) {
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) deg[i] += adj[i][j] ? 1 : 0;
  }
  std::vector<int> order = identity(n);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return deg[a] > deg[b]; });
  std::vector<std::pair<int, int>> groups;  // [begin, end) in order
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && deg[order[j]] == deg[order[i]]) ++j;
    groups.emplace_back(i, j);
    i = j;
  }
  std::uint64_t best = ~std::uint64_t{0};
  std::function<void(std::size_t)> go = [&](std::size_t gi) {
    if (gi == groups.size()) {
      std::uint64_t m = 0;
      for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
          if (adj[order[a]][order[b]]) m |= std::uint64_t{1} << pair_bit(n, a, b);
        }
      }
      best = std::min(best, m);
      return;
    }
    auto [lo, hi] = groups[gi];
    std::sort(order.begin() + lo, order.begin() + hi);
    do {
      go(gi + 1);
    } while (std::next_permutation(order.begin() + lo, order.begin() + hi));
  };
  go(0);
  return best;
}

std::vector<std::vector<bool>> adjacency_of(int n, std::uint64_t mask) {
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if ((mask >> pair_bit(n, i, j)) & 1U) adj[i][j] = adj[j][i] = true;
    }
  }
  return adj;
}

}  // namespace

std::string vname(int i) {
  std::string s = std::to_string(i);
  if (s.size() < 2) s.insert(0, "0");
  return "v" + s;
}

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
  std::vector<VertexId> vs;
  for (int i = 0; i < n; ++i) vs.push_back(vname(i));
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if ((mask >> pair_bit(n, i, j)) & 1U) edges.emplace_back(vname(i), vname(j));
    }
  }
  return Graph(vs, edges);
}

Graph graph_from_edges(const std::vector<std::string>& vertices,
                       const std::vector<std::pair<std::string, std::string>>& edges) {
  return Graph(vertices, edges);
}

std::vector<std::uint64_t> isomorphism_classes(int n) {
  static std::map<int, std::vector<std::uint64_t>> cache;
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  std::vector<std::uint64_t> out;
  if (n <= 1) {
    out = {0};
  } else {
    std::set<std::uint64_t> found;
    for (std::uint64_t base : isomorphism_classes(n - 1)) {
      auto small = adjacency_of(n - 1, base);
      for (std::uint64_t nb = 0; nb < (std::uint64_t{1} << (n - 1)); ++nb) {
        std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
        for (int i = 0; i < n - 1; ++i) {
          for (int j = 0; j < n - 1; ++j) adj[i][j] = small[i][j];
          if ((nb >> i) & 1U) adj[i][n - 1] = adj[n - 1][i] = true;
        }
        found.insert(canonical_mask(n, adj));
      }
    }
    out.assign(found.begin(), found.end());
  }
  cache[n] = out;
  return out;
}

std::vector<Graph> nonisomorphic_graphs(int n) {
  std::vector<Graph> out;
  for (auto m : isomorphism_classes(n)) out.push_back(graph_from_edge_mask(n, m));
  return out;
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::uint64_t mask = 0;
  for (int b = 0; b < n * (n - 1) / 2; ++b) {
    if (coin(rng)) mask |= std::uint64_t{1} << b;
  }
  return graph_from_edge_mask(n, mask);
}

Partition random_partition(const Graph& g, int k, std::mt19937_64& rng) {
  const int n = static_cast<int>(g.order());
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) labels[i] = i < k ? i : static_cast<int>(rng() % k);
  std::shuffle(labels.begin(), labels.end(), rng);
  return partition_from_labels(g, labels);
}

std::vector<std::vector<int>> set_partitions(int n, int kmax) {
  std::vector<std::vector<int>> out;
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> go = [&](int i, int used) {
    if (i == n) {
      out.push_back(rgs);
      return;
    }
    for (int b = 0; b <= used && b < kmax; ++b) {
      rgs[i] = b;
      go(i + 1, std::max(used, b + 1));
    }
  };
  if (n == 0) return {{}};
  go(0, 0);
  return out;
}

Partition partition_from_labels(const Graph& g, const std::vector<int>& labels) {
  const int k = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
  std::vector<std::vector<VertexId>> parts(static_cast<std::size_t>(k));
  for (std::size_t v = 0; v < labels.size(); ++v) {
    parts[static_cast<std::size_t>(labels[v])].push_back(g.name(static_cast<int>(v)));
  }
  return Partition(std::move(parts));
}

Graph named_graph(std::string_view vertices, std::string_view edges) {
  std::vector<VertexId> vs;
  for (char c : vertices) vs.emplace_back(1, c);
  std::vector<Edge> es;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    if (edges[i] == ' ') continue;
    es.emplace_back(std::string(1, edges[i]), std::string(1, edges[i + 1]));
    ++i;
  }
  return Graph(vs, es);
}

Graph cycle_graph(int n) {
  std::uint64_t mask = 0;
  for (int i = 0; i < n; ++i) {
    int a = i;
    int b = (i + 1) % n;
    if (a > b) std::swap(a, b);
    mask |= std::uint64_t{1} << pair_bit(n, a, b);
  }
  return graph_from_edge_mask(n, mask);
}

Graph path_graph(int n) {
  std::uint64_t mask = 0;
  for (int i = 0; i + 1 < n; ++i) mask |= std::uint64_t{1} << pair_bit(n, i, i + 1);
  return graph_from_edge_mask(n, mask);
}

Graph complete_graph(int n) {
  const int m = n * (n - 1) / 2;
  return graph_from_edge_mask(n, m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1);
}

bool raw_consistent(const Graph& g, const Ordering& s, const Partition& p, bool strong) {
  const auto owner = part_of(g, p);
  std::vector<int> idx;
  for (const auto& v : s) idx.push_back(g.index(v));
  const std::size_t n = idx.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        const int p1 = idx[a], q = idx[b], r = idx[c];
        if (owner[p1] == owner[q] && g.adjacent(p1, r) && !g.adjacent(q, r)) return false;
        if (strong && owner[q] == owner[r] && g.adjacent(p1, r) && !g.adjacent(p1, q)) {
          return false;
        }
      }
    }
  }
  return true;
}

bool raw_contiguous(const Ordering& s, const Partition& p) {
  std::map<VertexId, std::size_t> owner;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (const auto& v : p[i]) owner[v] = i;
  }
  std::set<std::size_t> closed;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const std::size_t o = owner.at(s[i]);
    if (closed.count(o) != 0) return false;
    if (i + 1 < s.size() && owner.at(s[i + 1]) != o) closed.insert(o);
  }
  return true;
}

int raw_min_consecutive_blocks(const Graph& g, const Ordering& s, bool strong) {
  const int n = static_cast<int>(s.size());
  if (n == 0) return 0;
  int best = n;
  for (std::uint64_t cuts = 0; cuts < (std::uint64_t{1} << (n - 1)); ++cuts) {
    const int blocks = 1 + __builtin_popcountll(cuts);
    if (blocks >= best) continue;
    std::vector<std::vector<VertexId>> parts(1);
    for (int i = 0; i < n; ++i) {
      if (i > 0 && ((cuts >> (i - 1)) & 1U)) parts.emplace_back();
      parts.back().push_back(s[i]);
    }
    if (raw_consistent(g, s, Partition(parts), strong)) best = blocks;
  }
  return best;
}

bool raw_canonical(const Graph& g, const Ordering& s) {
  return raw_consistent(g, s, Partition({s}), false);
}

bool raw_proper_canonical(const Graph& g, const Ordering& s) {
  return raw_consistent(g, s, Partition({s}), true);
}

bool raw_interval(const Graph& g) {
  Ordering s = g.vertices();
  do {
    if (raw_canonical(g, s)) return true;
  } while (std::next_permutation(s.begin(), s.end()));
  return false;
}

bool raw_proper_interval(const Graph& g) {
  Ordering s = g.vertices();
  do {
    if (raw_proper_canonical(g, s)) return true;
  } while (std::next_permutation(s.begin(), s.end()));
  return false;
}

bool raw_partitioned(const Graph& g, const Partition& p, bool strong) {
  Ordering s = g.vertices();
  do {
    if (raw_contiguous(s, p) && raw_consistent(g, s, p, strong)) return true;
  } while (std::next_permutation(s.begin(), s.end()));
  return false;
}

std::vector<VertexSet> raw_maximal_cliques(const Graph& g) {
  const int n = static_cast<int>(g.order());
  std::vector<std::uint32_t> cliques;
  for (std::uint32_t m = 1; m < (1U << n); ++m) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      for (int b = a + 1; b < n && ok; ++b) {
        if (((m >> a) & 1U) && ((m >> b) & 1U) && !g.adjacent(a, b)) ok = false;
      }
    }
    if (ok) cliques.push_back(m);
  }
  std::vector<VertexSet> out;
  for (auto m : cliques) {
    bool maximal = true;
    for (auto o : cliques) {
      if (o != m && (o & m) == m) maximal = false;
    }
    if (!maximal) continue;
    VertexSet c;
    for (int v = 0; v < n; ++v) {
      if ((m >> v) & 1U) c.push_back(g.name(v));
    }
    out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::set<CliqueSequence> raw_clique_orders(const Graph& g) {
  const auto cliques = raw_maximal_cliques(g);
  std::set<CliqueSequence> out;
  std::vector<int> perm = identity(static_cast<int>(cliques.size()));
  do {
    bool ok = true;
    for (const auto& v : g.vertices()) {
      int first = -1, last = -1, count = 0;
      for (std::size_t i = 0; i < perm.size(); ++i) {
        const auto& c = cliques[perm[i]];
        if (std::binary_search(c.begin(), c.end(), v)) {
          if (first < 0) first = static_cast<int>(i);
          last = static_cast<int>(i);
          ++count;
        }
      }
      if (count > 0 && last - first + 1 != count) ok = false;
    }
    if (ok) {
      CliqueSequence sc;
      for (int i : perm) sc.push_back(cliques[i]);
      out.insert(sc);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

Graph clique_chain_graph(const std::string& suffix) {
  const std::vector<std::string> cliques = {"abc", "cd", "dl", "el", "fgl", "gjl", "hijl", "ijkl"};
  std::vector<VertexId> vs;
  for (char c = 'a'; c <= 'l'; ++c) vs.push_back(std::string(1, c) + suffix);
  std::vector<Edge> edges;
  for (const auto& c : cliques) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (std::size_t j = i + 1; j < c.size(); ++j) {
        edges.emplace_back(std::string(1, c[i]) + suffix, std::string(1, c[j]) + suffix);
      }
    }
  }
  return Graph(vs, edges);
}

PartitionedInstance three_copy_instance() {
  std::vector<VertexId> vs;
  std::vector<Edge> edges;
  std::vector<std::vector<VertexId>> parts;
  for (const std::string suffix : {"", "'", "''"}) {
    const Graph h = clique_chain_graph(suffix);
    vs.insert(vs.end(), h.vertices().begin(), h.vertices().end());
    const auto e = h.edges();
    edges.insert(edges.end(), e.begin(), e.end());
    parts.push_back(h.vertices());
  }
  for (const char* t : {"a'", "b'", "c'", "d'"}) edges.emplace_back("a", t);
  edges.emplace_back("f", "a''");
  return {Graph(vs, edges), Partition(parts)};
}

PartitionedInstance random_connected_parts_instance(int n, int k, double flip,
                                                    std::mt19937_64& rng) {
  std::uniform_real_distribution<double> gap(0.05, 0.95);
  std::vector<double> x(static_cast<std::size_t>(n), 0.0);
  for (int i = 1; i < n; ++i) x[i] = x[i - 1] + gap(rng);
  std::vector<int> block(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) block[i] = static_cast<int>(static_cast<long long>(i) * k / n);
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(vname(i));
  std::shuffle(names.begin(), names.end(), rng);
  std::bernoulli_distribution coin(flip);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      bool e = x[j] - x[i] < 1.0;
      if (block[i] != block[j] && coin(rng)) e = !e;
      if (e) edges.emplace_back(names[i], names[j]);
    }
  }
  std::vector<std::vector<VertexId>> parts(static_cast<std::size_t>(k));
  for (int i = 0; i < n; ++i) parts[block[i]].push_back(names[i]);
  std::vector<VertexId> vs = names;
  return {Graph(vs, edges), Partition(parts)};
}

std::string describe(const Graph& g, const Partition* p) {
  return write_instance_document(g, p);
}

}  // namespace precthin::testing
