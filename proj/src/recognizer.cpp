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

#include "precthin/recognizer.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <set>
#include <utility>

#include "precthin/errors.hpp"
#include "precthin/interval.hpp"

namespace precthin {
namespace {

using Arc = std::pair<int, int>;

struct PartContext {
  VertexSet vertices;
  std::vector<int> global;  // vertex indices in g, ascending
  Graph graph;              // induced subgraph; local index i is global[i]
  PQTree tree;
};

// A connected part has one clique order up to reversal; both are kept.
struct Oriented {
  std::vector<Arc> arcs;
  std::vector<int> first, last;  // clique positions per local vertex
};

struct PartOutcome {
  FailureStage stage = FailureStage::none;
  std::string detail;
  Ordering order;

  bool ok() const { return stage == FailureStage::none; }
};

std::string part_label(int i) { return "part " + std::to_string(i); }

std::string join_ints(const std::vector<int>& xs, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

std::vector<Arc> relations(const Graph& g, const std::vector<int>& vi,
                           const std::vector<int>& vj, Placement placement) {
  std::vector<Arc> out;
  const int n = static_cast<int>(vi.size());
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      for (int w : vj) {
        const bool aw = g.adjacent(vi[static_cast<std::size_t>(a)], w);
        const bool bw = g.adjacent(vi[static_cast<std::size_t>(b)], w);
        const bool hit = placement == Placement::part_first ? (!aw && bw) : (aw && !bw);
        if (hit) {
          out.emplace_back(a, b);
          break;
        }
      }
    }
  }
  return out;
}

bool simplicial_among(const Graph& h, int v, const std::vector<char>& alive) {
  const auto& nb = h.neighbors(v);
  for (std::size_t a = 0; a < nb.size(); ++a) {
    if (!alive[static_cast<std::size_t>(nb[a])]) continue;
    for (std::size_t b = a + 1; b < nb.size(); ++b) {
      if (alive[static_cast<std::size_t>(nb[b])] && !h.adjacent(nb[a], nb[b])) return false;
    }
  }
  return true;
}

// The arcs of the clique-walk over a clique sequence of local indices.
std::vector<Arc> clique_walk_arcs(const Graph& h, const std::vector<std::vector<int>>& sc) {
  std::vector<Arc> arcs;
  std::vector<char> alive(h.order(), 1);
  for (std::size_t i = 0; i < sc.size(); ++i) {
    std::vector<int> batch;
    for (int v : sc[i]) {
      if (alive[static_cast<std::size_t>(v)] && simplicial_among(h, v, alive)) {
        batch.push_back(v);
      }
    }
    if (i + 1 < sc.size()) {
      for (int v : batch) {
        for (int u : sc[i + 1]) arcs.emplace_back(v, u);
      }
    }
    for (int v : batch) alive[static_cast<std::size_t>(v)] = 0;
  }
  return arcs;
}

std::vector<std::vector<int>> local_frontier(const PQTree& t) {
  std::vector<std::vector<int>> out;
  const auto& names = t.vertices();
  for (const auto& clique : t.frontier()) {
    std::vector<int> c;
    for (const auto& v : clique) {
      c.push_back(static_cast<int>(std::lower_bound(names.begin(), names.end(), v) -
                                   names.begin()));
    }
    out.push_back(std::move(c));
  }
  return out;
}

// Arcs forcing a vertex order sorted by last clique of sc and, for proper
// orderings, also by first clique.
std::vector<Arc> frontier_arcs(const Graph& h, const PQTree& t, bool proper) {
  auto sc = local_frontier(t);
  auto arcs = clique_walk_arcs(h, sc);
  if (proper) {
    std::reverse(sc.begin(), sc.end());
    for (const auto& [a, b] : clique_walk_arcs(h, sc)) arcs.emplace_back(b, a);
  }
  return arcs;
}

PartOutcome sort_part(const PartContext& pc, const std::vector<Arc>& constraints,
                      const std::vector<Arc>& tree_arcs) {
  std::vector<std::vector<int>> succ(pc.graph.order());
  for (const auto* list : {&constraints, &tree_arcs}) {
    for (const auto& [a, b] : *list) succ[static_cast<std::size_t>(a)].push_back(b);
  }
  for (auto& s : succ) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  std::vector<int> cycle;
  auto order = topological_sort_indices(succ, &cycle);
  PartOutcome out;
  if (!order) {
    out.stage = FailureStage::cycle_in_d;
    out.detail = "precedence digraph has a cycle:";
    for (int v : cycle) out.detail += " " + pc.graph.name(v) + " ->";
    out.detail += " " + pc.graph.name(cycle.front());
    return out;
  }
  for (int v : *order) out.order.push_back(pc.graph.name(v));
  return out;
}

std::string describe(const PQTree& t, const Incompatible& why) {
  std::string where = why.node == t.root() ? "the root" : "an internal node";
  if (why.cycle.empty()) return "children of " + where + " (Q node) need both orientations";
  std::vector<int> one_based;
  for (int c : why.cycle) one_based.push_back(c + 1);
  one_based.push_back(why.cycle.front() + 1);
  return "cycle among the children of " + where + ": " + join_ints(one_based, " -> ");
}

// Annotate, resolve, then sort with the resolved frontier.
PartOutcome order_with_tree(const PartContext& pc, const std::vector<Arc>& constraints,
                            bool proper) {
  PQTree t = pc.tree;
  for (const auto& [u, v] : constraints) {
    t.annotate(u, v, ConstraintSense::last_clique);
    if (proper) t.annotate(u, v, ConstraintSense::first_clique);
  }
  auto resolved = resolve(t);
  if (!resolved) {
    PartOutcome out;
    out.stage = FailureStage::pq_incompatible;
    out.detail = describe(t, resolved.error());
    return out;
  }
  return sort_part(pc, constraints, frontier_arcs(pc.graph, *resolved, proper));
}

std::array<Oriented, 2> orientations(const PartContext& pc) {
  std::array<Oriented, 2> out;
  const PQTree reversed = pc.tree.with_root_reversed();
  const PQTree* trees[2] = {&pc.tree, &reversed};
  for (std::size_t o = 0; o < 2; ++o) {
    out[o].arcs = frontier_arcs(pc.graph, *trees[o], true);
    const auto sc = local_frontier(*trees[o]);
    out[o].first.assign(pc.graph.order(), -1);
    out[o].last.assign(pc.graph.order(), -1);
    for (std::size_t i = 0; i < sc.size(); ++i) {
      for (int v : sc[i]) {
        auto& f = out[o].first[static_cast<std::size_t>(v)];
        if (f < 0) f = static_cast<int>(i);
        out[o].last[static_cast<std::size_t>(v)] = static_cast<int>(i);
      }
    }
  }
  return out;
}

bool fits(const Oriented& o, const std::vector<Arc>& constraints) {
  for (const auto& [u, v] : constraints) {
    const auto a = static_cast<std::size_t>(u), b = static_cast<std::size_t>(v);
    if (o.first[a] > o.first[b] || o.last[a] > o.last[b]) return false;
  }
  return true;
}

PartOutcome order_with_both_orientations(const PartContext& pc,
                                         const std::array<Oriented, 2>& both,
                                         const std::vector<Arc>& constraints) {
  bool any_fit = false;
  for (const auto& o : both) {
    if (!fits(o, constraints)) continue;
    any_fit = true;
    auto out = sort_part(pc, constraints, o.arcs);
    if (out.ok()) return out;
  }
  PartOutcome out;
  out.stage = any_fit ? FailureStage::cycle_in_d : FailureStage::pq_incompatible;
  out.detail = any_fit ? "precedence digraph has a cycle for both orientations of the clique order"
                       : "constraints fit neither orientation of the clique order";
  return out;
}

std::vector<PartContext> prepare(const Graph& g, const Partition& p) {
  check_partition_of(g, p);
  std::vector<PartContext> parts;
  for (const auto& part : p.parts()) {
    PartContext pc;
    pc.vertices = part;
    for (const auto& v : part) pc.global.push_back(g.index(v));
    pc.graph = induced_subgraph(g, part);
    parts.push_back(std::move(pc));
  }
  return parts;
}

void merge(std::vector<Arc>& into, const std::vector<Arc>& more) {
  into.insert(into.end(), more.begin(), more.end());
}

void normalise(std::vector<Arc>& arcs) {
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
}

Certificate no_certificate(FailureStage stage, std::string reason, std::vector<Trial> trials) {
  Certificate c;
  c.answer = Answer::no;
  c.stage = stage;
  c.reason = std::move(reason);
  c.trials = std::move(trials);
  return c;
}

// Shared driver of the fixed-k searches.
template <typename PlacePart>
Certificate search_permutations(const Graph& g, const std::vector<PartContext>& parts,
                                PlacePart&& place) {
  const std::size_t k = parts.size();
  std::vector<std::vector<std::vector<Arc>>> first(k, std::vector<std::vector<Arc>>(k));
  std::vector<std::vector<std::vector<Arc>>> second(k, std::vector<std::vector<Arc>>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      first[i][j] = relations(g, parts[i].global, parts[j].global, Placement::part_first);
      second[i][j] = relations(g, parts[i].global, parts[j].global, Placement::part_second);
    }
  }
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Trial> trials;
  do {
    Ordering witness;
    bool feasible = true;
    for (std::size_t pos = 0; pos < k && feasible; ++pos) {
      const auto i = static_cast<std::size_t>(perm[pos]);
      std::vector<Arc> constraints;
      for (std::size_t q = 0; q < k; ++q) {
        if (q == pos) continue;
        const auto j = static_cast<std::size_t>(perm[q]);
        merge(constraints, q > pos ? first[i][j] : second[i][j]);
      }
      normalise(constraints);
      PartOutcome out = place(parts[i], constraints);
      if (!out.ok()) {
        trials.push_back({perm, perm[pos], out.stage, std::move(out.detail)});
        feasible = false;
      } else {
        witness.insert(witness.end(), out.order.begin(), out.order.end());
      }
    }
    if (feasible) {
      Certificate c;
      c.answer = Answer::yes;
      c.witness = std::move(witness);
      c.part_order = perm;
      c.trials = std::move(trials);
      return c;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return no_certificate(FailureStage::no_feasible_permutation,
                        "no permutation of the " + std::to_string(k) +
                            " parts admits a strongly consistent ordering",
                        std::move(trials));
}

std::optional<Certificate> reject_non_proper(const std::vector<PartContext>& parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (!is_proper_interval(parts[i].graph)) {
      return no_certificate(FailureStage::non_interval_part,
                            part_label(static_cast<int>(i)) +
                                " does not induce a proper interval graph",
                            {});
    }
  }
  return std::nullopt;
}

}  // namespace

std::string_view to_string(Answer a) { return a == Answer::yes ? "YES" : "NO"; }

std::string_view to_string(FailureStage s) {
  switch (s) {
    case FailureStage::none:
      return "NONE";
    case FailureStage::non_interval_part:
      return "NON_INTERVAL_PART";
    case FailureStage::pq_incompatible:
      return "PQ_INCOMPATIBLE";
    case FailureStage::cycle_in_d:
      return "CYCLE_IN_D";
    case FailureStage::no_feasible_permutation:
      return "NO_FEASIBLE_PERMUTATION";
  }
  return "NONE";
}

std::vector<PrecedenceConstraint> precedence_relations(const Graph& g,
                                                       const VertexSet& vi,
                                                       const VertexSet& vj,
                                                       Placement placement) {
  std::vector<int> a;
  std::vector<int> b;
  for (const auto& v : vi) a.push_back(g.index(v));
  for (const auto& v : vj) b.push_back(g.index(v));
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  for (int w : b) {
    if (std::binary_search(a.begin(), a.end(), w)) {
      throw InvalidInput("vertex '" + g.name(w) + "' lies in both vertex sets");
    }
  }
  std::vector<PrecedenceConstraint> out;
  for (const auto& [u, v] : relations(g, a, b, placement)) {
    out.push_back({g.name(a[static_cast<std::size_t>(u)]), g.name(a[static_cast<std::size_t>(v)])});
  }
  std::sort(out.begin(), out.end());
  return out;
}

Digraph add_edges_from_pqtree(const Graph& g, const Digraph& d, const PQTree& t) {
  if (t.vertices() != g.vertices()) {
    throw InvalidInput("PQ tree was built for a different graph");
  }
  const CliqueSequence sc = t.frontier();
  if (!has_consecutive_cliques(sc)) {
    throw InvalidInput("frontier is not a canonical clique ordering");
  }
  Digraph out = d;
  for (const auto& [a, b] : clique_walk_arcs(g, local_frontier(t))) {
    out.add_arc(g.name(a), g.name(b));
  }
  return out;
}

Certificate recognize_precedence_thin(const Graph& g, const Partition& p) {
  auto parts = prepare(g, p);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    auto tree = build_pqtree(parts[i].graph);
    if (!tree) {
      return no_certificate(FailureStage::non_interval_part,
                            part_label(static_cast<int>(i)) +
                                " does not induce an interval graph",
                            {});
    }
    parts[i].tree = std::move(tree).value();
  }

  std::vector<int> remaining(parts.size());
  std::iota(remaining.begin(), remaining.end(), 0);
  std::vector<int> placed;
  Ordering witness;
  std::vector<Trial> trials;
  while (!remaining.empty()) {
    std::optional<std::size_t> chosen;
    std::vector<FailureStage> stages;
    for (std::size_t r = 0; r < remaining.size() && !chosen; ++r) {
      const auto i = static_cast<std::size_t>(remaining[r]);
      std::vector<Arc> constraints;
      for (int j : remaining) {
        if (static_cast<std::size_t>(j) == i) continue;
        merge(constraints, relations(g, parts[i].global,
                                     parts[static_cast<std::size_t>(j)].global,
                                     Placement::part_first));
      }
      normalise(constraints);
      PartOutcome out = order_with_tree(parts[i], constraints, false);
      if (out.ok()) {
        chosen = r;
        witness.insert(witness.end(), out.order.begin(), out.order.end());
      } else {
        auto prefix = placed;
        prefix.push_back(static_cast<int>(i));
        stages.push_back(out.stage);
        trials.push_back({std::move(prefix), static_cast<int>(i), out.stage,
                          std::move(out.detail)});
      }
    }
    if (!chosen) {
      const bool uniform = std::all_of(stages.begin(), stages.end(),
                                       [&](FailureStage s) { return s == stages.front(); });
      std::string reason = "no remaining part can be placed next";
      if (!placed.empty()) reason += " after parts " + join_ints(placed, ",");
      return no_certificate(uniform ? stages.front() : FailureStage::no_feasible_permutation,
                            std::move(reason), std::move(trials));
    }
    placed.push_back(remaining[*chosen]);
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(*chosen));
  }
  Certificate c;
  c.answer = Answer::yes;
  c.witness = std::move(witness);
  c.part_order = std::move(placed);
  c.trials = std::move(trials);
  return c;
}

Certificate recognize_precedence_proper_thin_fixed_k(const Graph& g, const Partition& p) {
  if (p.size() > kMaxFixedK) {
    throw BudgetExceeded("fixed-k search supports at most " + std::to_string(kMaxFixedK) +
                         " parts, got " + std::to_string(p.size()));
  }
  auto parts = prepare(g, p);
  if (auto rejected = reject_non_proper(parts)) return *rejected;
  for (auto& pc : parts) pc.tree = build_pqtree(pc.graph).value();
  return search_permutations(g, parts, [](const PartContext& pc, const std::vector<Arc>& cs) {
    return order_with_tree(pc, cs, true);
  });
}

Certificate recognize_precedence_proper_thin_connected(const Graph& g, const Partition& p) {
  if (p.size() > kMaxFixedK) {
    throw BudgetExceeded("fixed-k search supports at most " + std::to_string(kMaxFixedK) +
                         " parts, got " + std::to_string(p.size()));
  }
  auto parts = prepare(g, p);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (!is_connected(parts[i].graph)) {
      throw InvalidInput(part_label(static_cast<int>(i)) + " does not induce a connected graph");
    }
  }
  if (auto rejected = reject_non_proper(parts)) return *rejected;
  std::vector<std::array<Oriented, 2>> oriented;
  for (auto& pc : parts) {
    pc.tree = build_pqtree(pc.graph).value();
    oriented.push_back(orientations(pc));
  }
  return search_permutations(g, parts, [&](const PartContext& pc, const std::vector<Arc>& cs) {
    return order_with_both_orientations(pc, oriented[static_cast<std::size_t>(&pc - parts.data())],
                                        cs);
  });
}

}  // namespace precthin
