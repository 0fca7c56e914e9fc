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

#include "precthin/instance_io.hpp"

#include <json.hpp>

#include "precthin/errors.hpp"

namespace precthin {
namespace {

using nlohmann::json;

std::vector<VertexId> string_list(const json& j, const std::string& where) {
  if (!j.is_array()) throw InvalidInput(where + ": expected an array of strings");
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) {
      throw InvalidInput(where + "[" + std::to_string(i) + "]: expected a string");
    }
    out.push_back(j[i].get<std::string>());
  }
  return out;
}

void rethrow_at(const std::string& where, const InvalidInput& e) {
  throw InvalidInput(where + ": " + e.what());
}

}  // namespace

InstanceDocument parse_instance_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // nlohmann reports "... at line L, column C: ...".
    std::string msg = e.what();
    const auto at = msg.find("at line");
    throw InvalidInput("malformed JSON " +
                       (at == std::string::npos ? "at byte " + std::to_string(e.byte)
                                                : msg.substr(at)));
  }
  if (!doc.is_object()) throw InvalidInput("document: expected a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "vertices" && key != "edges" && key != "partition" && key != "order" &&
        key != "part_roles") {
      throw InvalidInput("document: unknown field '" + key + "'");
    }
  }
  if (!doc.contains("vertices")) throw InvalidInput("document: missing field 'vertices'");
  auto vertices = string_list(doc["vertices"], "vertices");

  std::vector<Edge> edges;
  if (doc.contains("edges")) {
    const json& e = doc["edges"];
    if (!e.is_array()) throw InvalidInput("edges: expected an array of pairs");
    for (std::size_t i = 0; i < e.size(); ++i) {
      const std::string where = "edges[" + std::to_string(i) + "]";
      auto pair = string_list(e[i], where);
      if (pair.size() != 2) throw InvalidInput(where + ": expected two vertex ids");
      edges.emplace_back(pair[0], pair[1]);
    }
  }

  InstanceDocument out;
  try {
    out.graph = Graph(vertices, edges);
  } catch (const InvalidInput& ex) {
    rethrow_at("graph", ex);
  }
  if (doc.contains("partition")) {
    const json& p = doc["partition"];
    if (!p.is_array()) throw InvalidInput("partition: expected an array of arrays");
    std::vector<std::vector<VertexId>> parts;
    for (std::size_t i = 0; i < p.size(); ++i) {
      parts.push_back(string_list(p[i], "partition[" + std::to_string(i) + "]"));
    }
    try {
      Partition part(std::move(parts));
      check_partition_of(out.graph, part);
      out.partition = std::move(part);
    } catch (const InvalidInput& ex) {
      rethrow_at("partition", ex);
    }
  }
  if (doc.contains("order")) {
    auto order = string_list(doc["order"], "order");
    try {
      check_permutation_of(out.graph, order);
    } catch (const InvalidInput& ex) {
      rethrow_at("order", ex);
    }
    out.order = std::move(order);
  }
  return out;
}

std::string write_instance_document(const Graph& g, const Partition* p,
                                    const std::vector<std::string>& part_roles) {
  json doc;
  doc["vertices"] = g.vertices();
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  doc["edges"] = std::move(edges);
  if (p != nullptr) doc["partition"] = p->parts();
  if (!part_roles.empty()) doc["part_roles"] = part_roles;
  return doc.dump(2) + "\n";
}

Ordering parse_order_list(std::string_view csv) {
  Ordering out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    auto end = csv.find(',', start);
    if (end == std::string_view::npos) end = csv.size();
    std::string_view item = csv.substr(start, end - start);
    while (!item.empty() && (item.front() == ' ' || item.front() == '\t')) item.remove_prefix(1);
    while (!item.empty() && (item.back() == ' ' || item.back() == '\t')) item.remove_suffix(1);
    if (item.empty()) {
      if (csv.empty()) break;
      throw InvalidInput("empty item at position " + std::to_string(out.size() + 1) +
                         " of the ordering list");
    }
    out.emplace_back(item);
    start = end + 1;
  }
  return out;
}

}  // namespace precthin
