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

#include "precthin/pq_tree.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "precthin/errors.hpp"

namespace precthin {
namespace {

using IndexSet = std::vector<int>;  // sorted clique indices

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> parent;
};

std::size_t intersection_size(const IndexSet& a, const IndexSet& b) {
  std::size_t n = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

bool overlaps(const IndexSet& a, const IndexSet& b) {
  const std::size_t n = intersection_size(a, b);
  return n > 0 && n < a.size() && n < b.size();
}

bool is_subset(const IndexSet& a, const IndexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Orders the atoms of one overlap component so that every set of the
// component is a run of consecutive atoms. Sets are added in an order where
// each overlaps one already placed, which forces the arrangement up to
// reversal at every step.
std::optional<std::vector<IndexSet>> arrange_component(
    const std::vector<const IndexSet*>& sets, std::size_t k) {
  const std::size_t m = sets.size();
  std::vector<char> placed(m, 0);
  std::vector<char> in_union(k, 0);
  std::vector<IndexSet> blocks{*sets[0]};
  placed[0] = 1;
  for (int e : *sets[0]) in_union[static_cast<std::size_t>(e)] = 1;

  for (std::size_t step = 1; step < m; ++step) {
    std::size_t next = m;
    for (std::size_t i = 0; i < m && next == m; ++i) {
      if (placed[i]) continue;
      for (std::size_t j = 0; j < m; ++j) {
        if (placed[j] && overlaps(*sets[i], *sets[j])) {
          next = i;
          break;
        }
      }
    }
    if (next == m) throw std::logic_error("overlap component is not connected");
    const IndexSet& s = *sets[next];
    placed[next] = 1;

    std::vector<char> in_s(k, 0);
    IndexSet fresh;
    for (int e : s) {
      in_s[static_cast<std::size_t>(e)] = 1;
      if (!in_union[static_cast<std::size_t>(e)]) fresh.push_back(e);
    }
    const std::size_t nb = blocks.size();
    std::vector<char> touched(nb, 0);
    std::vector<char> full(nb, 0);
    for (std::size_t b = 0; b < nb; ++b) {
      std::size_t cnt = 0;
      for (int e : blocks[b]) cnt += in_s[static_cast<std::size_t>(e)] ? 1 : 0;
      touched[b] = cnt > 0;
      full[b] = cnt == blocks[b].size();
    }
    std::size_t l = 0;
    while (l < nb && !touched[l]) ++l;
    if (l == nb) throw std::logic_error("set does not meet the placed union");
    std::size_t r = nb - 1;
    while (!touched[r]) --r;
    for (std::size_t b = l + 1; b < r; ++b) {
      if (!full[b]) return std::nullopt;
    }

    // Splits block b into its part outside s and its part inside s, with the
    // inside part toward the side given.
    auto split = [&](std::size_t b, bool inside_right) {
      IndexSet in;
      IndexSet out;
      for (int e : blocks[b]) (in_s[static_cast<std::size_t>(e)] ? in : out).push_back(e);
      blocks[b] = inside_right ? out : in;
      blocks.insert(blocks.begin() + static_cast<std::ptrdiff_t>(b) + 1,
                    inside_right ? in : out);
    };

    if (fresh.empty()) {
      if (l == r) {
        if (!full[l]) return std::nullopt;
        continue;
      }
      if (!full[r]) split(r, false);
      if (!full[l]) split(l, true);
      continue;
    }
    bool right_ok = r == nb - 1;
    for (std::size_t b = l + 1; b <= r && right_ok; ++b) right_ok = full[b];
    bool left_ok = l == 0;
    for (std::size_t b = l; b < r && left_ok; ++b) left_ok = full[b];
    if (right_ok) {
      if (!full[l]) split(l, true);
      blocks.push_back(fresh);
    } else if (left_ok) {
      if (!full[r]) split(r, false);
      blocks.insert(blocks.begin(), fresh);
    } else {
      return std::nullopt;
    }
    for (int e : fresh) in_union[static_cast<std::size_t>(e)] = 1;
  }

  // Every set must now be a run of whole blocks.
  std::vector<int> block_of(k, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (int e : blocks[b]) block_of[static_cast<std::size_t>(e)] = static_cast<int>(b);
  }
  for (const IndexSet* s : sets) {
    std::vector<int> bs;
    for (int e : *s) bs.push_back(block_of[static_cast<std::size_t>(e)]);
    std::sort(bs.begin(), bs.end());
    bs.erase(std::unique(bs.begin(), bs.end()), bs.end());
    std::size_t total = 0;
    for (int b : bs) total += blocks[static_cast<std::size_t>(b)].size();
    if (total != s->size() || bs.back() - bs.front() + 1 != static_cast<int>(bs.size())) {
      return std::nullopt;
    }
  }
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  return blocks;
}

struct Candidate {
  IndexSet elems;
  bool q = false;
  std::vector<IndexSet> blocks;  // Q only
};

std::size_t saturating_mul(std::size_t a, std::size_t b, std::size_t cap) {
  if (a == 0 || b == 0) return 0;
  if (a > cap / b) return cap + 1;
  return std::min(a * b, cap + 1);
}

std::size_t count_frontiers(const PQTree& t, int id, std::size_t cap) {
  const PQNode& x = t.node(id);
  if (x.kind == NodeKind::leaf) return 1;
  std::size_t total = 1;
  if (x.kind == NodeKind::q_node) {
    total = 2;
  } else {
    for (std::size_t i = 2; i <= x.children.size(); ++i) {
      total = saturating_mul(total, i, cap);
    }
  }
  for (int c : x.children) total = saturating_mul(total, count_frontiers(t, c, cap), cap);
  return total;
}

using Sequences = std::vector<std::vector<int>>;

Sequences frontiers_of(const PQTree& t, int id) {
  const PQNode& x = t.node(id);
  if (x.kind == NodeKind::leaf) return {{x.clique}};
  std::vector<Sequences> parts;
  parts.reserve(x.children.size());
  for (int c : x.children) parts.push_back(frontiers_of(t, c));

  std::vector<std::vector<int>> arrangements;
  std::vector<int> perm(x.children.size());
  std::iota(perm.begin(), perm.end(), 0);
  if (x.kind == NodeKind::q_node) {
    arrangements.push_back(perm);
    arrangements.emplace_back(perm.rbegin(), perm.rend());
  } else {
    do {
      arrangements.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  Sequences out;
  for (const auto& arr : arrangements) {
    Sequences acc{{}};
    for (int pos : arr) {
      Sequences next;
      for (const auto& prefix : acc) {
        for (const auto& tail : parts[static_cast<std::size_t>(pos)]) {
          auto seq = prefix;
          seq.insert(seq.end(), tail.begin(), tail.end());
          next.push_back(std::move(seq));
        }
      }
      acc = std::move(next);
    }
    out.insert(out.end(), acc.begin(), acc.end());
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Construction

Expected<PQTree, NotInterval> build_pqtree(const Graph& g) {
  PQTree t;
  t.vertices_ = g.vertices();
  const auto cliques = maximal_clique_indices(g);
  const std::size_t k = cliques.size();
  for (const auto& c : cliques) {
    VertexSet names;
    for (int v : c) names.push_back(g.name(v));
    t.cliques_.push_back(std::move(names));
  }
  for (std::size_t i = 0; i < k; ++i) {
    PQNode leaf;
    leaf.clique = static_cast<int>(i);
    t.nodes_.push_back(std::move(leaf));
  }
  if (k == 0) {
    t.compute_membership();
    return t;
  }
  if (k == 1) {
    t.root_ = 0;
    t.compute_membership();
    return t;
  }

  // Clique sets of the vertices, excluding the trivial ones.
  std::vector<IndexSet> family;
  for (std::size_t v = 0; v < g.order(); ++v) {
    IndexSet s;
    for (std::size_t i = 0; i < k; ++i) {
      if (std::binary_search(cliques[i].begin(), cliques[i].end(), static_cast<int>(v))) {
        s.push_back(static_cast<int>(i));
      }
    }
    if (s.size() >= 2 && s.size() < k) family.push_back(std::move(s));
  }
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());

  DisjointSets comps(family.size());
  for (std::size_t a = 0; a < family.size(); ++a) {
    for (std::size_t b = a + 1; b < family.size(); ++b) {
      if (overlaps(family[a], family[b])) comps.unite(a, b);
    }
  }
  std::map<std::size_t, std::vector<const IndexSet*>> grouped;
  for (std::size_t a = 0; a < family.size(); ++a) {
    grouped[comps.find(a)].push_back(&family[a]);
  }

  std::map<IndexSet, Candidate> candidates;
  auto add_candidate = [&](Candidate c) {
    auto it = candidates.find(c.elems);
    if (it == candidates.end()) {
      IndexSet key = c.elems;
      candidates.emplace(std::move(key), std::move(c));
    } else if (c.q) {
      it->second = std::move(c);
    }
  };
  for (const auto& [rep, sets] : grouped) {
    if (sets.size() == 1) {
      add_candidate({*sets.front(), false, {}});
      continue;
    }
    auto blocks = arrange_component(sets, k);
    if (!blocks) {
      return NotInterval{"maximal cliques admit no consecutive arrangement"};
    }
    IndexSet all;
    for (const auto& b : *blocks) all.insert(all.end(), b.begin(), b.end());
    std::sort(all.begin(), all.end());
    for (const auto& b : *blocks) {
      if (b.size() >= 2) add_candidate({b, false, {}});
    }
    add_candidate({std::move(all), true, std::move(*blocks)});
  }
  {
    IndexSet all(k);
    std::iota(all.begin(), all.end(), 0);
    add_candidate({std::move(all), false, {}});
  }

  std::vector<const Candidate*> order;
  for (const auto& [key, c] : candidates) order.push_back(&c);
  std::stable_sort(order.begin(), order.end(), [](const Candidate* a, const Candidate* b) {
    return a->elems.size() < b->elems.size();
  });
  const std::size_t base = k;
  std::map<IndexSet, int> node_of;
  for (std::size_t i = 0; i < order.size(); ++i) {
    PQNode x;
    x.kind = order[i]->q ? NodeKind::q_node : NodeKind::p_node;
    t.nodes_.push_back(std::move(x));
    node_of[order[i]->elems] = static_cast<int>(base + i);
  }
  for (std::size_t a = 0; a < order.size(); ++a) {
    for (std::size_t b = a + 1; b < order.size(); ++b) {
      const auto& x = order[a]->elems;
      const auto& y = order[b]->elems;
      if (intersection_size(x, y) > 0 && !is_subset(x, y) && !is_subset(y, x)) {
        throw std::logic_error("PQ node sets are not laminar");
      }
    }
  }

  // Parent: the smallest candidate strictly containing the node's set.
  std::vector<std::vector<int>> kids(t.nodes_.size());
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t c = 0; c < order.size(); ++c) {
      if (std::binary_search(order[c]->elems.begin(), order[c]->elems.end(),
                             static_cast<int>(i))) {
        kids[base + c].push_back(static_cast<int>(i));
        break;
      }
    }
  }
  for (std::size_t a = 0; a + 1 < order.size(); ++a) {
    for (std::size_t c = a + 1; c < order.size(); ++c) {
      if (order[c]->elems.size() > order[a]->elems.size() &&
          is_subset(order[a]->elems, order[c]->elems)) {
        kids[base + c].push_back(static_cast<int>(base + a));
        break;
      }
    }
  }
  for (std::size_t c = 0; c < order.size(); ++c) {
    PQNode& x = t.nodes_[base + c];
    if (!order[c]->q) {
      x.children = kids[base + c];
      continue;
    }
    for (const auto& b : order[c]->blocks) {
      x.children.push_back(b.size() == 1 ? b.front() : node_of.at(b));
    }
    auto expected = x.children;
    auto actual = kids[base + c];
    std::sort(expected.begin(), expected.end());
    std::sort(actual.begin(), actual.end());
    if (expected != actual) throw std::logic_error("Q node children mismatch");
  }
  t.root_ = static_cast<int>(t.nodes_.size()) - 1;

  // Deterministic arrangement, bottom-up: ids grow with set size, so children
  // always precede parents.
  std::vector<int> first_leaf(t.nodes_.size(), -1);
  for (std::size_t id = 0; id < t.nodes_.size(); ++id) {
    PQNode& x = t.nodes_[id];
    if (x.kind == NodeKind::leaf) {
      first_leaf[id] = x.clique;
      continue;
    }
    auto key = [&](int c) { return first_leaf[static_cast<std::size_t>(c)]; };
    if (x.kind == NodeKind::p_node) {
      std::sort(x.children.begin(), x.children.end(),
                [&](int a, int b) { return key(a) < key(b); });
    } else if (key(x.children.front()) > key(x.children.back())) {
      std::reverse(x.children.begin(), x.children.end());
    }
    first_leaf[id] = key(x.children.front());
  }
  t.compute_membership();
  return t;
}

void PQTree::compute_membership() {
  const std::size_t n = vertices_.size();
  contains_.assign(nodes_.size() * n, 0);
  in_every_leaf_.assign(nodes_.size() * n, 0);
  // Children always have smaller ids than their parent.
  for (std::size_t id = 0; id < nodes_.size(); ++id) {
    const PQNode& x = nodes_[id];
    std::uint8_t* c = &contains_[id * n];
    std::uint8_t* e = &in_every_leaf_[id * n];
    if (x.kind == NodeKind::leaf) {
      for (const auto& v : cliques_[static_cast<std::size_t>(x.clique)]) {
        const auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
        const auto vi = static_cast<std::size_t>(it - vertices_.begin());
        c[vi] = 1;
        e[vi] = 1;
      }
      continue;
    }
    std::fill(e, e + n, std::uint8_t{1});
    for (int child : x.children) {
      const std::size_t off = static_cast<std::size_t>(child) * n;
      for (std::size_t v = 0; v < n; ++v) {
        c[v] |= contains_[off + v];
        e[v] &= in_every_leaf_[off + v];
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Queries

bool PQTree::contains(int node_id, int v) const {
  return contains_[static_cast<std::size_t>(node_id) * vertices_.size() +
                   static_cast<std::size_t>(v)] != 0;
}

bool PQTree::in_every_leaf(int node_id, int v) const {
  return in_every_leaf_[static_cast<std::size_t>(node_id) * vertices_.size() +
                        static_cast<std::size_t>(v)] != 0;
}

std::vector<int> PQTree::frontier_indices() const {
  std::vector<int> out;
  if (root_ < 0) return out;
  std::vector<int> stack{root_};
  while (!stack.empty()) {
    const int id = stack.back();
    stack.pop_back();
    const PQNode& x = node(id);
    if (x.kind == NodeKind::leaf) {
      out.push_back(x.clique);
    } else {
      stack.insert(stack.end(), x.children.rbegin(), x.children.rend());
    }
  }
  return out;
}

CliqueSequence PQTree::frontier() const {
  CliqueSequence out;
  for (int c : frontier_indices()) out.push_back(cliques_[static_cast<std::size_t>(c)]);
  return out;
}

bool PQTree::has_constraints() const {
  return std::any_of(nodes_.begin(), nodes_.end(),
                     [](const PQNode& x) { return !x.constraint_arcs.empty(); });
}

std::string PQTree::to_sexpr() const {
  if (root_ < 0) return "()";
  std::string out;
  auto emit = [&](auto&& self, int id) -> void {
    const PQNode& x = node(id);
    if (x.kind == NodeKind::leaf) {
      out += "C" + std::to_string(x.clique + 1);
      return;
    }
    out += x.kind == NodeKind::p_node ? "(P" : "(Q";
    for (int c : x.children) {
      out += ' ';
      self(self, c);
    }
    out += ')';
  };
  emit(emit, root_);
  return out;
}

std::string PQTree::to_dot() const {
  std::ostringstream os;
  os << "digraph pqtree {\n";
  for (std::size_t id = 0; id < nodes_.size(); ++id) {
    const PQNode& x = nodes_[id];
    os << "  n" << id << " [label=\"";
    if (x.kind == NodeKind::leaf) {
      os << 'C' << x.clique + 1 << ':';
      for (const auto& v : cliques_[static_cast<std::size_t>(x.clique)]) os << ' ' << v;
      os << "\", shape=box];\n";
    } else {
      os << (x.kind == NodeKind::p_node ? 'P' : 'Q') << "\", shape="
         << (x.kind == NodeKind::p_node ? "circle" : "rectangle") << "];\n";
    }
  }
  for (std::size_t id = 0; id < nodes_.size(); ++id) {
    const PQNode& x = nodes_[id];
    for (int c : x.children) os << "  n" << id << " -> n" << c << ";\n";
    for (const auto& [a, b] : x.constraint_arcs) {
      os << "  n" << x.children[static_cast<std::size_t>(a)] << " -> n"
         << x.children[static_cast<std::size_t>(b)]
         << " [style=dashed, color=red, constraint=false];\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::vector<std::vector<int>> enumerate_frontier_indices(const PQTree& t,
                                                         std::size_t limit) {
  if (t.empty()) return {{}};
  if (count_frontiers(t, t.root(), limit) > limit) {
    throw BudgetExceeded("PQ tree has more than " + std::to_string(limit) +
                         " frontiers");
  }
  auto out = frontiers_of(t, t.root());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<CliqueSequence> enumerate_frontiers(const PQTree& t, std::size_t limit) {
  std::vector<CliqueSequence> out;
  for (const auto& seq : enumerate_frontier_indices(t, limit)) {
    CliqueSequence sc;
    for (int c : seq) sc.push_back(t.cliques()[static_cast<std::size_t>(c)]);
    out.push_back(std::move(sc));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Constraints

void PQTree::add_arc(int node_id, int from, int to) {
  PQNode& x = nodes_[static_cast<std::size_t>(node_id)];
  const std::pair<int, int> arc{from, to};
  auto it = std::lower_bound(x.constraint_arcs.begin(), x.constraint_arcs.end(), arc);
  if (it == x.constraint_arcs.end() || *it != arc) x.constraint_arcs.insert(it, arc);
  if (x.kind != NodeKind::q_node) return;
  const Orientation want = from < to ? Orientation::forward : Orientation::reversed;
  if (x.orientation == Orientation::free) {
    x.orientation = want;
  } else if (x.orientation != want) {
    x.orientation = Orientation::conflict;
  }
}

void PQTree::annotate(int before, int after, ConstraintSense sense) {
  const int u = before;
  const int v = after;
  for (std::size_t id = 0; id < nodes_.size(); ++id) {
    const PQNode& x = nodes_[id];
    if (x.kind == NodeKind::leaf) continue;
    const int xi = static_cast<int>(id);
    if (!contains(xi, u) || !contains(xi, v)) continue;
    const std::size_t k = x.children.size();
    if (sense == ConstraintSense::last_clique) {
      if (in_every_leaf(xi, v)) continue;
      for (std::size_t i = 0; i < k; ++i) {
        if (!contains(x.children[i], u) || contains(x.children[i], v)) continue;
        for (std::size_t j = 0; j < k; ++j) {
          if (contains(x.children[j], v)) {
            add_arc(xi, static_cast<int>(i), static_cast<int>(j));
          }
        }
      }
    } else {
      if (in_every_leaf(xi, u)) continue;
      for (std::size_t i = 0; i < k; ++i) {
        if (!contains(x.children[i], v) || contains(x.children[i], u)) continue;
        for (std::size_t j = 0; j < k; ++j) {
          if (contains(x.children[j], u)) {
            add_arc(xi, static_cast<int>(j), static_cast<int>(i));
          }
        }
      }
    }
  }
}

PQTree annotate_constraint(const PQTree& t, const Graph& g,
                           const PrecedenceConstraint& c, ConstraintSense sense) {
  if (c.before == c.after) {
    throw InvalidInput("constraint relates vertex '" + c.before + "' to itself");
  }
  if (g.vertices() != t.vertices()) {
    throw InvalidInput("PQ tree was built for a different graph");
  }
  const int u = g.index(c.before);
  const int v = g.index(c.after);
  for (int w : {u, v}) {
    if (t.empty() || !t.contains(t.root(), w)) {
      throw InvalidInput("vertex '" + g.name(w) + "' lies in no leaf");
    }
  }
  PQTree out = t;
  out.annotate(u, v, sense);
  return out;
}

void PQTree::permute_children(int node_id, const std::vector<int>& new_order) {
  PQNode& x = nodes_[static_cast<std::size_t>(node_id)];
  std::vector<int> new_pos(new_order.size());
  std::vector<int> children(new_order.size());
  for (std::size_t i = 0; i < new_order.size(); ++i) {
    new_pos[static_cast<std::size_t>(new_order[i])] = static_cast<int>(i);
    children[i] = x.children[static_cast<std::size_t>(new_order[i])];
  }
  x.children = std::move(children);
  for (auto& [a, b] : x.constraint_arcs) {
    a = new_pos[static_cast<std::size_t>(a)];
    b = new_pos[static_cast<std::size_t>(b)];
  }
  std::sort(x.constraint_arcs.begin(), x.constraint_arcs.end());
}

PQTree PQTree::with_root_reversed() const {
  PQTree out = *this;
  if (root_ < 0) return out;
  const std::size_t k = node(root_).children.size();
  std::vector<int> order(k);
  for (std::size_t i = 0; i < k; ++i) order[i] = static_cast<int>(k - 1 - i);
  out.permute_children(root_, order);
  Orientation& o = out.nodes_[static_cast<std::size_t>(root_)].orientation;
  if (o == Orientation::forward) {
    o = Orientation::reversed;
  } else if (o == Orientation::reversed) {
    o = Orientation::forward;
  }
  return out;
}

Expected<PQTree, Incompatible> resolve(const PQTree& t) {
  PQTree out = t;
  for (std::size_t id = 0; id < out.nodes_.size(); ++id) {
    const PQNode& x = out.nodes_[id];
    const int xi = static_cast<int>(id);
    const std::size_t k = x.children.size();
    if (x.kind == NodeKind::q_node) {
      if (x.orientation == Orientation::conflict) {
        // Opposing demands usually close a cycle among the arcs themselves.
        std::vector<std::vector<int>> succ(k);
        for (const auto& [a, b] : x.constraint_arcs) {
          succ[static_cast<std::size_t>(a)].push_back(b);
        }
        std::vector<int> cycle;
        if (!topological_sort_indices(succ, &cycle)) {
          return Incompatible{xi, std::move(cycle),
                              "constraint arcs among Q node children form a cycle"};
        }
        return Incompatible{xi, {}, "Q node children are required in both orientations"};
      }
      if (x.orientation == Orientation::reversed) {
        std::vector<int> order(k);
        for (std::size_t i = 0; i < k; ++i) order[i] = static_cast<int>(k - 1 - i);
        out.permute_children(xi, order);
        out.nodes_[id].orientation = Orientation::forward;
      }
    } else if (x.kind == NodeKind::p_node && !x.constraint_arcs.empty()) {
      std::vector<std::vector<int>> succ(k);
      for (const auto& [a, b] : x.constraint_arcs) {
        succ[static_cast<std::size_t>(a)].push_back(b);
      }
      std::vector<int> cycle;
      auto order = topological_sort_indices(succ, &cycle);
      if (!order) {
        return Incompatible{xi, std::move(cycle),
                            "constraint arcs among P node children form a cycle"};
      }
      out.permute_children(xi, *order);
    }
  }
  return out;
}

}  // namespace precthin
