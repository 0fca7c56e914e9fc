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


#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "precthin/errors.hpp"
#include "precthin/interval.hpp"
#include "precthin/pq_tree.hpp"
#include "support/oracles.hpp"

using namespace precthin;
using precthin::testing::named_graph;

namespace {

PQTree tree_of(const Graph& g) {
  auto t = build_pqtree(g);
  REQUIRE(t);
  return *t;
}

std::set<CliqueSequence> frontier_set(const PQTree& t) {
  const auto f = enumerate_frontiers(t);
  return {f.begin(), f.end()};
}

// Position of the first or last clique of v in sc.
int clique_pos(const CliqueSequence& sc, const VertexId& v, bool last) {
  int out = -1;
  for (std::size_t i = 0; i < sc.size(); ++i) {
    if (std::binary_search(sc[i].begin(), sc[i].end(), v)) {
      out = static_cast<int>(i);
      if (!last) break;
    }
  }
  return out;
}

bool satisfies(const CliqueSequence& sc, const std::vector<PrecedenceConstraint>& cs,
               ConstraintSense sense) {
  const bool last = sense == ConstraintSense::last_clique;
  for (const auto& c : cs) {
    if (clique_pos(sc, c.before, last) > clique_pos(sc, c.after, last)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("small trees") {
  const PQTree k3 = tree_of(named_graph("abc", "ab bc ac"));
  CHECK(k3.to_sexpr() == "C1");
  CHECK(enumerate_frontiers(k3).size() == 1);

  const PQTree three = tree_of(named_graph("abcdef", "ab cd ef"));
  CHECK(three.to_sexpr() == "(P C1 C2 C3)");
  CHECK(enumerate_frontiers(three).size() == 6);

  const PQTree q = tree_of(named_graph("abcd", "ab bc cd"));
  CHECK(q.to_sexpr() == "(Q C1 C2 C3)");
  const auto fq = enumerate_frontiers(q);
  REQUIRE(fq.size() == 2);
  CHECK(fq[0] == CliqueSequence(fq[1].rbegin(), fq[1].rend()));

  CHECK_FALSE(build_pqtree(named_graph("abcd", "ab bc cd da")));
  CHECK(tree_of(named_graph("", "")).empty());
}

TEST_CASE("clique chain tree") {
  const Graph gp = testing::clique_chain_graph("");
  const PQTree t = tree_of(gp);
  CHECK(t.to_sexpr() == "(Q C1 C2 C3 (P C4 (Q C5 C6 (P C7 C8))))");
  CHECK(frontier_set(t) == testing::raw_clique_orders(gp));
  CHECK(frontier_set(t).size() == 16);
  CHECK(t.to_dot().find("digraph") != std::string::npos);
}

TEST_CASE("frontiers match brute force on small interval graphs") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& g : testing::nonisomorphic_graphs(n)) {
      const auto t = build_pqtree(g);
      CHECK(bool(t) == testing::raw_interval(g));
      if (!t) continue;
      CHECK(frontier_set(*t) == testing::raw_clique_orders(g));
      CHECK(has_consecutive_cliques(t->frontier()));
    }
  }
}

TEST_CASE("frontier enumeration respects its budget") {
  const Graph g = named_graph("abcdefghijklmnop", "ab cd ef gh ij kl mn op");
  CHECK_THROWS_AS(enumerate_frontiers(tree_of(g), 1000), BudgetExceeded);
  CHECK(enumerate_frontiers(tree_of(g)).size() == 40320);
}

TEST_CASE("annotation and resolution on the clique chain") {
  const Graph gp = testing::clique_chain_graph("");
  const PQTree t = tree_of(gp);

  auto r0 = resolve(t);
  REQUIRE(r0);
  CHECK(*r0 == t);

  PQTree with_a = t;
  for (const auto& x : gp.vertices()) {
    if (x != "a") with_a = annotate_constraint(with_a, gp, {x, "a"});
  }
  auto ra = resolve(with_a);
  REQUIRE(ra);
  const CliqueSequence fa = ra->frontier();
  CHECK(clique_pos(fa, "a", true) == static_cast<int>(fa.size()) - 1);
  // a ties with b and c in the last batch; moving it to the end keeps the
  // ordering canonical and ordered according to the frontier.
  Ordering s = canonical_from_clique_order(gp, fa);
  s.erase(std::find(s.begin(), s.end(), "a"));
  s.push_back("a");
  CHECK(is_canonical_ordering(gp, s));
  CHECK(ordered_according(gp, s, fa));

  PQTree with_af = with_a;
  for (const auto& x : gp.vertices()) {
    if (x != "f") with_af = annotate_constraint(with_af, gp, {x, "f"});
  }
  const auto rf = resolve(with_af);
  REQUIRE_FALSE(rf);
  CHECK(rf.error().node == t.root());

  CHECK_THROWS_AS(annotate_constraint(t, gp, {"a", "zz"}), InvalidInput);
}

TEST_CASE("a vertex in every leaf leaves the tree unannotated") {
  const Graph g = named_graph("abcu", "ua ub uc");
  const PQTree t = tree_of(g);
  const PQTree a = annotate_constraint(t, g, {"a", "u"});
  CHECK_FALSE(a.has_constraints());
}

TEST_CASE("two-cycle at a P node is incompatible") {
  const Graph g = named_graph("abcdef", "ab cd ef");
  PQTree t = tree_of(g);
  t = annotate_constraint(t, g, {"a", "c"});
  t = annotate_constraint(t, g, {"c", "a"});
  const auto r = resolve(t);
  REQUIRE_FALSE(r);
  CHECK(r.error().cycle.size() == 2);
}

TEST_CASE("resolution agrees with a search over frontiers") {
  std::mt19937_64 rng(5);
  int resolved = 0;
  int rejected = 0;
  for (int n = 3; n <= 6; ++n) {
    for (const auto& g : testing::nonisomorphic_graphs(n)) {
      const auto base = build_pqtree(g);
      if (!base) continue;
      const auto frontiers = enumerate_frontiers(*base);
      for (auto sense : {ConstraintSense::last_clique, ConstraintSense::first_clique}) {
        for (int trial = 0; trial < 6; ++trial) {
          std::vector<PrecedenceConstraint> cs;
          PQTree t = *base;
          const int m = 1 + static_cast<int>(rng() % 3);
          for (int i = 0; i < m; ++i) {
            const auto& vs = g.vertices();
            const auto u = vs[rng() % vs.size()];
            const auto v = vs[rng() % vs.size()];
            if (u == v) continue;
            cs.push_back({u, v});
            t = annotate_constraint(t, g, cs.back(), sense);
          }
          const bool feasible = std::any_of(
              frontiers.begin(), frontiers.end(),
              [&](const CliqueSequence& sc) { return satisfies(sc, cs, sense); });
          const auto r = resolve(t);
          CHECK(bool(r) == feasible);
          if (r) {
            CHECK(satisfies(r->frontier(), cs, sense));
            ++resolved;
          } else {
            ++rejected;
          }
        }
      }
    }
  }
  CHECK(resolved > 0);
  CHECK(rejected > 0);
}
