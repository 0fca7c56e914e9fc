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


#include "support/gadget.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "support/oracles.hpp"

namespace precthin::testing {
namespace {

struct Edge4 {
  const char* o;
  int oe;
  const char* y;
  int ye;
};

// One line per pair of parts with edges between them.
constexpr std::array<Edge4, 15> kEdges{{
    {"O1", 2, "Y1", 1},
    {"O1", 1, "Y2", 1}, {"O1", 2, "Y2", 1},
    {"O2", 1, "Y1", 1}, {"O2", 1, "Y1", 2},
    {"O2", 2, "Y2", 1}, {"O2", 2, "Y2", 2},
    {"O2", 1, "Y3", 1}, {"O2", 1, "Y3", 2},
    {"O3", 1, "Y1", 2}, {"O3", 2, "Y1", 2},
    {"O3", 1, "Y2", 2}, {"O3", 2, "Y2", 2},
    {"O3", 2, "Y3", 1}, {"O3", 2, "Y3", 2},
}};

const std::array<std::string, 6> kParts{"O1", "O2", "O3", "Y1", "Y2", "Y3"};

std::string vertex(const std::string& part, int e) { return part + "." + std::to_string(e); }

enum class Ori { forward, reversed, free };
using Item = std::pair<std::string, Ori>;
using Pattern = std::vector<std::vector<Item>>;

Pattern reverse_pattern(const Pattern& p) {
  Pattern out;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    std::vector<Item> g;
    for (const auto& [name, o] : *it) {
      g.emplace_back(name, o == Ori::free ? Ori::free
                           : o == Ori::forward ? Ori::reversed
                                               : Ori::forward);
    }
    out.push_back(g);
  }
  return out;
}

std::set<GadgetConfig> expand(const Pattern& p) {
  std::set<GadgetConfig> out;
  std::vector<std::vector<Item>> groups = p;
  for (auto& g : groups) std::sort(g.begin(), g.end());
  std::function<void(std::size_t, std::vector<Item>&)> choose_orders =
      [&](std::size_t gi, std::vector<Item>& items) {
        if (gi == groups.size()) {
          std::vector<std::size_t> free;
          for (std::size_t i = 0; i < items.size(); ++i) {
            if (items[i].second == Ori::free) free.push_back(i);
          }
          for (std::uint32_t m = 0; m < (1U << free.size()); ++m) {
            GadgetConfig c;
            for (std::size_t i = 0; i < items.size(); ++i) {
              bool rev = items[i].second == Ori::reversed;
              const auto f = std::find(free.begin(), free.end(), i);
              if (f != free.end()) rev = ((m >> (f - free.begin())) & 1U) != 0;
              c.emplace_back(items[i].first, rev);
            }
            out.insert(c);
          }
          return;
        }
        auto g = groups[gi];
        do {
          const std::size_t mark = items.size();
          items.insert(items.end(), g.begin(), g.end());
          choose_orders(gi + 1, items);
          items.resize(mark);
        } while (std::next_permutation(g.begin(), g.end()));
      };
  std::vector<Item> items;
  choose_orders(0, items);
  return out;
}

}  // namespace

Graph isolated_gadget() {
  std::vector<VertexId> vs;
  for (const auto& p : kParts) {
    vs.push_back(vertex(p, 1));
    vs.push_back(vertex(p, 2));
  }
  std::vector<precthin::Edge> es;
  for (const auto& e : kEdges) es.emplace_back(vertex(e.o, e.oe), vertex(e.y, e.ye));
  return Graph(vs, es);
}

Partition isolated_gadget_parts() {
  std::vector<std::vector<VertexId>> ps;
  for (const auto& p : kParts) ps.push_back({vertex(p, 1), vertex(p, 2)});
  return Partition(ps);
}

Ordering config_ordering(const GadgetConfig& c) {
  Ordering s;
  for (const auto& [part, rev] : c) {
    s.push_back(vertex(part, rev ? 2 : 1));
    s.push_back(vertex(part, rev ? 1 : 2));
  }
  return s;
}

std::set<GadgetConfig> valid_gadget_configs() {
  const Graph g = isolated_gadget();
  const Partition p = isolated_gadget_parts();
  std::set<GadgetConfig> out;
  std::array<std::string, 6> order = kParts;
  std::sort(order.begin(), order.end());
  do {
    for (std::uint32_t m = 0; m < 64; ++m) {
      GadgetConfig c;
      for (std::size_t i = 0; i < 6; ++i) c.emplace_back(order[i], ((m >> i) & 1U) != 0);
      if (raw_consistent(g, config_ordering(c), p, true)) out.insert(c);
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

std::vector<std::set<GadgetConfig>> pattern_configs_by_case() {
  const auto F = Ori::forward;
  const auto R = Ori::reversed;
  const auto X = Ori::free;
  const Pattern a{{{"O1", F}}, {{"Y1", F}, {"Y3", X}}, {{"O2", F}}, {{"Y2", F}}, {{"O3", R}}};
  const Pattern b{{{"O1", F}}, {{"Y2", F}}, {{"O2", R}}, {{"Y1", F}, {"Y3", X}}, {{"O3", R}}};
  const Pattern c{{{"O1", F}}, {{"Y2", F}}, {{"O2", R}}, {{"Y1", F}}, {{"O3", F}}, {{"Y3", X}}};
  std::vector<std::set<GadgetConfig>> out;
  for (const Pattern* p : {&a, &b, &c}) out.push_back(expand(*p));
  for (const Pattern* p : {&a, &b, &c}) out.push_back(expand(reverse_pattern(*p)));
  return out;
}

std::set<GadgetConfig> pattern_configs() {
  std::set<GadgetConfig> out;
  for (const auto& s : pattern_configs_by_case()) out.insert(s.begin(), s.end());
  return out;
}

GadgetProjection project(const GadgetConfig& c) {
  GadgetProjection p{{}, false, false};
  std::size_t y3 = 0, o2 = 0, o3 = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].first == "Y3") {
      y3 = i;
      continue;
    }
    if (c[i].first == "O2") o2 = i;
    if (c[i].first == "O3") o3 = i;
    p.without_y3.push_back(c[i]);
  }
  p.y3_before_o2 = y3 < o2;
  p.y3_before_o3 = y3 < o3;
  return p;
}

}  // namespace precthin::testing
