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

#include "precthin/nae_reduction.hpp"

#include <charconv>
#include <sstream>

#include "precthin/errors.hpp"

namespace precthin {
namespace {

// Gadget edges as (literal k, element of O_k, gadget part, element of Y).
struct GadgetEdge {
  int o;
  int o_elem;
  int y;
  int y_elem;
};

constexpr std::array<GadgetEdge, 15> kGadget{{
    {1, 2, 1, 1}, {1, 1, 2, 1}, {1, 2, 2, 1}, {2, 1, 1, 2}, {2, 1, 1, 1},
    {2, 2, 2, 1}, {2, 2, 2, 2}, {2, 1, 3, 1}, {2, 1, 3, 2}, {3, 1, 1, 2},
    {3, 2, 1, 2}, {3, 1, 2, 2}, {3, 2, 2, 2}, {3, 2, 3, 1}, {3, 2, 3, 2},
}};

// Element 1 or 2 of O_kj for literal l in clause j.
std::string ordered_element(const Literal& l, int j, int elem) {
  const bool first_is_false = l.positive;
  const bool truth = elem == 1 ? !first_is_false : first_is_false;
  return occurrence_vertex(l.variable, j, truth);
}

bool literal_value(const Literal& l, const Assignment& a) {
  return a[static_cast<std::size_t>(l.variable - 1)] == l.positive;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

std::string variable_vertex(int i, bool truth) {
  return "x" + std::to_string(i) + (truth ? "T" : "F");
}

std::string occurrence_vertex(int i, int j, bool truth) {
  return "x" + std::to_string(i) + "_" + std::to_string(j) + (truth ? "T" : "F");
}

std::string gadget_vertex(int k, int j, int element) {
  return "y" + std::to_string(k) + "_" + std::to_string(j) + "_" + std::to_string(element);
}

void validate(const NAEFormula& f) {
  if (f.variable_count <= 0) throw InvalidInput("formula needs at least one variable");
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    const auto& c = f.clauses[j];
    for (std::size_t a = 0; a < 3; ++a) {
      if (c[a].variable < 1 || c[a].variable > f.variable_count) {
        throw InvalidInput("clause " + std::to_string(j + 1) + " mentions variable " +
                           std::to_string(c[a].variable) + " out of range");
      }
      for (std::size_t b = 0; b < a; ++b) {
        if (c[a].variable == c[b].variable) {
          throw InvalidInput("clause " + std::to_string(j + 1) + " repeats variable " +
                             std::to_string(c[a].variable));
        }
      }
    }
  }
}

NAEFormula parse_nae_dimacs(std::string_view text) {
  NAEFormula f;
  bool have_header = false;
  std::size_t declared = 0;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  auto fail = [&](const std::string& what) {
    throw InvalidInput("line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream tokens(line);
    if (line[0] == 'p') {
      if (have_header) fail("duplicate header");
      std::string p, kind;
      long long vars = -1;
      long long clauses = -1;
      std::string extra;
      if (!(tokens >> p >> kind >> vars >> clauses) || p != "p" || kind != "nae3" ||
          (tokens >> extra)) {
        fail("expected header 'p nae3 <variables> <clauses>'");
      }
      if (vars <= 0 || clauses < 0) fail("header counts out of range");
      f.variable_count = static_cast<int>(vars);
      declared = static_cast<std::size_t>(clauses);
      have_header = true;
      continue;
    }
    if (!have_header) fail("clause before the 'p nae3' header");
    std::vector<long long> lits;
    std::string tok;
    while (tokens >> tok) {
      long long v = 0;
      const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        fail("'" + tok + "' is not an integer");
      }
      lits.push_back(v);
    }
    if (!lits.empty() && lits.back() == 0) lits.pop_back();
    if (lits.size() != 3) fail("expected exactly three nonzero literals");
    Clause c;
    for (std::size_t a = 0; a < 3; ++a) {
      if (lits[a] == 0) fail("literal 0 inside a clause");
      const long long var = lits[a] < 0 ? -lits[a] : lits[a];
      if (var > f.variable_count) fail("variable " + std::to_string(var) + " out of range");
      c[a] = {static_cast<int>(var), lits[a] > 0};
    }
    f.clauses.push_back(c);
    try {
      validate(f);
    } catch (const InvalidInput& e) {
      fail(e.what());
    }
  }
  if (!have_header) throw InvalidInput("line 1: missing 'p nae3' header");
  if (f.clauses.size() != declared) {
    throw InvalidInput("line " + std::to_string(line_no) + ": header declares " +
                       std::to_string(declared) + " clauses, found " +
                       std::to_string(f.clauses.size()));
  }
  return f;
}

bool nae_satisfies(const NAEFormula& f, const Assignment& a) {
  if (a.size() != static_cast<std::size_t>(f.variable_count)) return false;
  for (const auto& c : f.clauses) {
    bool any_true = false;
    bool any_false = false;
    for (const auto& l : c) (literal_value(l, a) ? any_true : any_false) = true;
    if (!any_true || !any_false) return false;
  }
  return true;
}

Expected<Assignment, Unsatisfiable> nae_brute_force(const NAEFormula& f) {
  validate(f);
  if (f.variable_count > 24) {
    throw BudgetExceeded("brute force limited to 24 variables");
  }
  const auto r = static_cast<std::size_t>(f.variable_count);
  for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << r); ++bits) {
    Assignment a(r);
    for (std::size_t i = 0; i < r; ++i) a[i] = ((bits >> i) & 1U) != 0;
    if (nae_satisfies(f, a)) return a;
  }
  return Unsatisfiable{};
}

ReductionInstance reduce(const NAEFormula& f) {
  validate(f);
  ReductionInstance inst;
  inst.formula = f;
  std::vector<VertexId> vertices;
  std::vector<Edge> edges;
  std::vector<std::vector<VertexId>> parts;
  for (int i = 1; i <= f.variable_count; ++i) {
    for (bool truth : {true, false}) {
      vertices.push_back(variable_vertex(i, truth));
      parts.push_back({vertices.back()});
      inst.part_roles.push_back("X" + std::to_string(i) + (truth ? "^T" : "^F"));
    }
  }
  for (std::size_t jj = 0; jj < f.clauses.size(); ++jj) {
    const int j = static_cast<int>(jj) + 1;
    const Clause& c = f.clauses[jj];
    for (const auto& l : c) {
      const int i = l.variable;
      vertices.push_back(occurrence_vertex(i, j, true));
      vertices.push_back(occurrence_vertex(i, j, false));
      parts.push_back({occurrence_vertex(i, j, true), occurrence_vertex(i, j, false)});
      inst.part_roles.push_back("X" + std::to_string(i) + "_" + std::to_string(j));
      edges.emplace_back(variable_vertex(i, true), occurrence_vertex(i, j, true));
      edges.emplace_back(variable_vertex(i, false), occurrence_vertex(i, j, false));
    }
    for (int k = 1; k <= 3; ++k) {
      vertices.push_back(gadget_vertex(k, j, 1));
      vertices.push_back(gadget_vertex(k, j, 2));
      parts.push_back({gadget_vertex(k, j, 1), gadget_vertex(k, j, 2)});
      inst.part_roles.push_back("Y" + std::to_string(k) + "_" + std::to_string(j));
    }
    for (const auto& e : kGadget) {
      edges.emplace_back(ordered_element(c[static_cast<std::size_t>(e.o - 1)], j, e.o_elem),
                         gadget_vertex(e.y, j, e.y_elem));
    }
  }
  inst.graph = Graph(std::move(vertices), edges);
  inst.partition = Partition(std::move(parts));
  return inst;
}

Ordering witness_from_assignment(const ReductionInstance& inst, const Assignment& a) {
  const NAEFormula& f = inst.formula;
  if (!nae_satisfies(f, a)) {
    throw InvalidInput("assignment does not NAE-satisfy the formula");
  }
  Ordering s;
  for (int i = 1; i <= f.variable_count; ++i) {
    s.push_back(variable_vertex(i, !a[static_cast<std::size_t>(i - 1)]));
  }
  for (std::size_t jj = 0; jj < f.clauses.size(); ++jj) {
    const int j = static_cast<int>(jj) + 1;
    const Clause& c = f.clauses[jj];
    // 'O'/'o': O_k forward/reversed; 'Y'/'y': Y_k forward/reversed.
    auto put = [&](char kind, int k) {
      const bool forward = kind == 'O' || kind == 'Y';
      const bool literal = kind == 'O' || kind == 'o';
      for (int e : {1, 2}) {
        const int elem = forward ? e : 3 - e;
        s.push_back(literal ? ordered_element(c[static_cast<std::size_t>(k - 1)], j, elem)
                            : gadget_vertex(k, j, elem));
      }
    };
    const bool l1 = literal_value(c[0], a);
    const bool l2 = literal_value(c[1], a);
    const bool l3 = literal_value(c[2], a);
    const char* layout = nullptr;
    // Pairs of (kind, k).
    if (l1 && l2 && !l3) {
      layout = "O1Y1Y3O2Y2o3";
    } else if (l1 && !l2 && !l3) {
      layout = "O1Y2o2Y1Y3o3";
    } else if (l1 && !l2 && l3) {
      layout = "O1Y2o2Y1O3Y3";
    } else if (!l1 && !l2 && l3) {
      layout = "O3y2o2y1Y3o1";
    } else if (!l1 && l2 && l3) {
      layout = "O3y1Y3O2y2o1";
    } else {
      layout = "Y3o3y1O2y2o1";
    }
    for (const char* p = layout; *p != '\0'; p += 2) put(p[0], p[1] - '0');
  }
  for (int i = 1; i <= f.variable_count; ++i) {
    s.push_back(variable_vertex(i, a[static_cast<std::size_t>(i - 1)]));
  }
  return s;
}

Assignment decode_assignment(const ReductionInstance& inst, const Ordering& s) {
  const auto pos = positions_in(inst.graph, s);
  Assignment a(static_cast<std::size_t>(inst.formula.variable_count));
  for (int i = 1; i <= inst.formula.variable_count; ++i) {
    const auto f = pos[static_cast<std::size_t>(inst.graph.index(variable_vertex(i, false)))];
    const auto t = pos[static_cast<std::size_t>(inst.graph.index(variable_vertex(i, true)))];
    a[static_cast<std::size_t>(i - 1)] = f < t;
  }
  return a;
}

}  // namespace precthin
