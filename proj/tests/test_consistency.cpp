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

#include "precthin/consistency.hpp"
#include "precthin/errors.hpp"
#include "support/oracles.hpp"

using namespace precthin;
using precthin::testing::named_graph;

namespace {

Partition parts(std::vector<std::vector<VertexId>> v) { return Partition(std::move(v)); }

Graph raw_conflict_graph(const Graph& g, const Ordering& s, bool strong) {
  // v, w conflict when they cannot share a part: some third vertex closes a
  // violating triple with them.
  std::vector<Edge> edges;
  const std::size_t n = s.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      bool conflict = false;
      for (std::size_t c = b + 1; c < n && !conflict; ++c) {
        conflict = g.adjacent(s[a], s[c]) && !g.adjacent(s[b], s[c]);
      }
      for (std::size_t c = 0; c < a && strong && !conflict; ++c) {
        conflict = g.adjacent(s[c], s[b]) && !g.adjacent(s[c], s[a]);
      }
      if (conflict) edges.emplace_back(s[a], s[b]);
    }
  }
  return Graph(g.vertices(), edges);
}

}  // namespace

TEST_CASE("conflict graph") {
  const Graph e = named_graph("abcd", "");
  CHECK(build_conflict_graph(e, {"d", "a", "c", "b"}, true).size() == 0);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = testing::random_graph(1 + static_cast<int>(rng() % 7), 0.5, rng);
    Ordering s = g.vertices();
    std::shuffle(s.begin(), s.end(), rng);
    for (bool strong : {false, true}) {
      CHECK(build_conflict_graph(g, s, strong) == raw_conflict_graph(g, s, strong));
    }
  }
}

TEST_CASE("verify") {
  const Graph k4 = testing::complete_graph(4);
  const auto r = verify(k4, {"v03", "v01", "v00", "v02"}, parts({k4.vertices()}));
  CHECK(r.consistent);
  CHECK(r.strongly_consistent);
  CHECK(r.violations.empty());

  // C4: some bipartition and ordering is consistent but not strongly.
  const Graph c4 = named_graph("abcd", "ab bc cd da");
  bool found = false;
  Ordering s = c4.vertices();
  do {
    for (const auto& labels : testing::set_partitions(4, 2)) {
      const Partition p = testing::partition_from_labels(c4, labels);
      const auto rep = verify(c4, s, p);
      if (rep.consistent && !rep.strongly_consistent) {
        found = true;
        REQUIRE_FALSE(rep.violations.empty());
        CHECK(rep.violations.front().mirrored);
      }
    }
  } while (std::next_permutation(s.begin(), s.end()));
  CHECK(found);

  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const Graph g = testing::random_graph(n, 0.5, rng);
    const Partition p = testing::random_partition(g, 1 + static_cast<int>(rng() % n), rng);
    Ordering o = g.vertices();
    std::shuffle(o.begin(), o.end(), rng);
    const auto rep = verify(g, o, p);
    CHECK(rep.consistent == testing::raw_consistent(g, o, p, false));
    CHECK(rep.strongly_consistent == testing::raw_consistent(g, o, p, true));
    CHECK(verify_precedence(o, p) == testing::raw_contiguous(o, p));
    for (const auto& v : rep.violations) {
      const int pp = g.index(v.p), q = g.index(v.q), rr = g.index(v.r);
      if (v.mirrored) {
        CHECK((g.adjacent(pp, rr) && !g.adjacent(pp, q)));
      } else {
        CHECK((g.adjacent(pp, rr) && !g.adjacent(q, rr)));
      }
    }
  }
  CHECK_THROWS_AS(verify(c4, {"a", "b"}, parts({{"a", "b", "c", "d"}})), InvalidInput);
}

TEST_CASE("precedence") {
  CHECK(verify_precedence({"a", "b", "c"}, parts({{"a", "b"}, {"c"}})));
  CHECK_FALSE(verify_precedence({"a", "c", "b"}, parts({{"a", "b"}, {"c"}})));
  CHECK(verify_precedence({"c", "a", "b"}, parts({{"a"}, {"b"}, {"c"}})));
  CHECK_THROWS_AS(verify_precedence({"a", "b"}, parts({{"a"}, {"z"}})), InvalidInput);
}

TEST_CASE("greedy partition is minimum") {
  const Graph e = named_graph("abcd", "");
  CHECK(greedy_min_precedence_partition(e, {"c", "a", "d", "b"}, true).size() == 1);
  const Graph c4 = named_graph("abcd", "ab bc cd da");
  for (bool strong : {false, true}) {
    const Ordering s{"a", "b", "c", "d"};
    const Partition p = greedy_min_precedence_partition(c4, s, strong);
    CHECK(static_cast<int>(p.size()) == testing::raw_min_consecutive_blocks(c4, s, strong));
    CHECK(verify_precedence(s, p));
  }
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = testing::random_graph(1 + static_cast<int>(rng() % 8), 0.5, rng);
    Ordering s = g.vertices();
    std::shuffle(s.begin(), s.end(), rng);
    for (bool strong : {false, true}) {
      const Partition p = greedy_min_precedence_partition(g, s, strong);
      CHECK(static_cast<int>(p.size()) == testing::raw_min_consecutive_blocks(g, s, strong));
      CHECK(testing::raw_consistent(g, s, p, strong));
      CHECK(verify_precedence(s, p));
    }
  }
}
