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


#include "precthin/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>

#include "precthin/characterization.hpp"
#include "precthin/consistency.hpp"
#include "precthin/errors.hpp"
#include "precthin/instance_io.hpp"
#include "precthin/nae_reduction.hpp"
#include "precthin/oracle.hpp"
#include "precthin/pq_tree.hpp"
#include "precthin/recognizer.hpp"

namespace precthin::cli {
namespace {

using nlohmann::json;

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InvalidInput("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

json certificate_json(const Certificate& c) {
  json j;
  j["answer"] = std::string(to_string(c.answer));
  if (c.yes()) {
    j["witness"] = c.witness;
    j["part_order"] = c.part_order;
  } else {
    j["stage"] = std::string(to_string(c.stage));
    j["reason"] = c.reason;
  }
  json trials = json::array();
  for (const auto& t : c.trials) {
    trials.push_back({{"part_order", t.part_order},
                      {"part", t.part},
                      {"stage", std::string(to_string(t.stage))},
                      {"detail", t.detail}});
  }
  j["trials"] = std::move(trials);
  return j;
}

int emit(std::ostream& out, const json& j) {
  out << j.dump(2) << "\n";
  return j.value("answer", "YES") == "YES" ? kExitYes : kExitNo;
}

const Partition& need_partition(const InstanceDocument& d) {
  if (!d.partition) throw InvalidInput("document: this command needs a 'partition' field");
  return *d.partition;
}

Ordering need_order(const InstanceDocument& d, const std::string& flag) {
  if (!flag.empty()) {
    Ordering s = parse_order_list(flag);
    try {
      check_permutation_of(d.graph, s);
    } catch (const InvalidInput& e) {
      throw InvalidInput(std::string("--order: ") + e.what());
    }
    return s;
  }
  if (!d.order) throw InvalidInput("no ordering: pass --order or add an 'order' field");
  return *d.order;
}

struct Options {
  std::string input = "-";
  std::string order;
  std::string s1;
  std::string s2;
  bool strong = false;
  bool connected = false;
  bool dot = false;
  bool thinness = false;
  std::uint64_t seed = 0;
  OracleBudget budget;
};

int recognize_pt(const Options& o, std::istream& in, std::ostream& out) {
  const auto d = parse_instance_document(read_input(o.input, in));
  return emit(out, certificate_json(recognize_precedence_thin(d.graph, need_partition(d))));
}

int recognize_ppt(const Options& o, std::istream& in, std::ostream& out) {
  const auto d = parse_instance_document(read_input(o.input, in));
  const Partition& p = need_partition(d);
  const Certificate c = o.connected ? recognize_precedence_proper_thin_connected(d.graph, p)
                                    : recognize_precedence_proper_thin_fixed_k(d.graph, p);
  return emit(out, certificate_json(c));
}

int min_partition(const Options& o, std::istream& in, std::ostream& out) {
  const auto d = parse_instance_document(read_input(o.input, in));
  const Ordering s = need_order(d, o.order);
  const Partition p = greedy_min_precedence_partition(d.graph, s, o.strong);
  json j;
  j["answer"] = "YES";
  j["value"] = p.size();
  j["partition"] = p.parts();
  return emit(out, j);
}

int verify_cmd(const Options& o, std::istream& in, std::ostream& out) {
  const auto d = parse_instance_document(read_input(o.input, in));
  const Partition& p = need_partition(d);
  const Ordering s = need_order(d, o.order);
  const ConsistencyReport r = verify(d.graph, s, p);
  const bool precedence = verify_precedence(s, p);
  const bool ok = precedence && (o.strong ? r.strongly_consistent : r.consistent);
  json j;
  j["answer"] = ok ? "YES" : "NO";
  j["consistent"] = r.consistent;
  j["strongly_consistent"] = r.strongly_consistent;
  j["precedence"] = precedence;
  json v = json::array();
  for (const auto& t : r.violations) {
    v.push_back({{"p", t.p}, {"q", t.q}, {"r", t.r}, {"mirrored", t.mirrored}});
  }
  j["violations"] = std::move(v);
  return emit(out, j);
}

int pqtree_cmd(const Options& o, std::istream& in, std::ostream& out) {
  const auto d = parse_instance_document(read_input(o.input, in));
  const auto t = build_pqtree(d.graph);
  json j;
  if (!t) {
    j["answer"] = "NO";
    j["reason"] = t.error().reason;
    return emit(out, j);
  }
  j["answer"] = "YES";
  j["value"] = t->to_sexpr();
  j["frontier"] = t->frontier();
  if (o.dot) j["dot"] = t->to_dot();
  return emit(out, j);
}

int accordance_cmd(const Options& o, std::istream& in, std::ostream& out) {
  const auto d = parse_instance_document(read_input(o.input, in));
  const Ordering s1 = parse_order_list(o.s1);
  const Ordering s2 = parse_order_list(o.s2);
  const bool ok = o.strong ? strongly_in_accordance(d.graph, s1, s2)
                           : in_accordance(d.graph, s1, s2);
  json j;
  j["answer"] = ok ? "YES" : "NO";
  return emit(out, j);
}

int reduce_nae(const Options& o, std::istream& in, std::ostream& out) {
  const auto inst = reduce(parse_nae_dimacs(read_input(o.input, in)));
  out << write_instance_document(inst.graph, &inst.partition, inst.part_roles);
  return kExitYes;
}

int oracle_cmd(const Options& o, std::istream& in, std::ostream& out) {
  const auto d = parse_instance_document(read_input(o.input, in));
  if (o.thinness) {
    json j;
    j["answer"] = "YES";
    j["value"] = brute_force_precedence_thinness(d.graph, o.strong, o.budget);
    return emit(out, j);
  }
  return emit(out, certificate_json(
                       brute_force_partitioned(d.graph, need_partition(d), o.strong, o.budget)));
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Precedence thinness toolkit", "precthin"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--seed", o.seed, "Accepted for interface compatibility; unused");

  using Handler = std::function<int(const Options&, std::istream&, std::ostream&)>;
  std::vector<std::pair<CLI::App*, Handler>> commands;
  auto command = [&](const std::string& name, const std::string& help, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("input", o.input, "Input file, or - for standard input");
    commands.emplace_back(sub, std::move(h));
    return sub;
  };

  command("recognize-pt", "Decide partitioned precedence thinness", recognize_pt);
  command("recognize-ppt", "Decide partitioned precedence proper thinness", recognize_ppt)
      ->add_flag("--connected", o.connected, "Use the two-orientation search");
  auto* mp = command("min-partition", "Fewest blocks for a fixed ordering", min_partition);
  mp->add_option("--order", o.order, "Comma-separated vertex ordering");
  mp->add_flag("--strong", o.strong, "Require strong consistency");
  auto* vf = command("verify", "Check an ordering against the document's partition", verify_cmd);
  vf->add_option("--order", o.order, "Comma-separated vertex ordering");
  vf->add_flag("--strong", o.strong, "Require strong consistency");
  command("pqtree", "PQ tree of an interval graph", pqtree_cmd)
      ->add_flag("--dot", o.dot, "Also emit Graphviz text");
  auto* ac = command("accordance", "Test two orderings for accordance", accordance_cmd);
  ac->add_option("--s1", o.s1, "First ordering")->required();
  ac->add_option("--s2", o.s2, "Second ordering")->required();
  ac->add_flag("--strong", o.strong, "Strong accordance");
  command("reduce-nae", "Encode a NAE-3SAT formula", reduce_nae);
  auto* oc = command("oracle", "Exhaustive reference search", oracle_cmd);
  oc->add_flag("--strong", o.strong, "Proper variant");
  oc->add_flag("--thinness", o.thinness, "Minimum block count over all orderings");
  oc->add_option("--max-vertices", o.budget.max_vertices, "Vertex limit");
  oc->add_option("--max-parts", o.budget.max_parts, "Part limit");
  oc->add_option("--max-states", o.budget.max_states, "Search node limit");

  std::vector<std::string> reversed_args(args.rbegin(), args.rend());
  try {
    app.parse(reversed_args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitYes;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }

  try {
    for (const auto& [sub, handler] : commands) {
      if (sub->parsed()) return handler(o, in, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace precthin::cli
