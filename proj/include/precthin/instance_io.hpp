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

// JSON instance documents:
//
//   {"vertices": ["a", "b"], "edges": [["a", "b"]],
//    "partition": [["a"], ["b"]], "order": ["a", "b"]}
//
// "partition" and "order" are optional.

#ifndef PRECTHIN_INSTANCE_IO_HPP_
#define PRECTHIN_INSTANCE_IO_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "precthin/graph.hpp"

namespace precthin {

struct InstanceDocument {
  Graph graph;
  std::optional<Partition> partition;
  std::optional<Ordering> order;
};

// Throws InvalidInput. Syntax errors name the line and column; schema errors
// name the offending field.
InstanceDocument parse_instance_document(std::string_view text);

// Sorted keys, two-space indent. part_roles is written when nonempty.
std::string write_instance_document(const Graph& g, const Partition* p,
                                    const std::vector<std::string>& part_roles = {});

// "a,b,c" -> {a, b, c}; surrounding blanks are trimmed. Throws InvalidInput
// on an empty item.
Ordering parse_order_list(std::string_view csv);

}  // namespace precthin

#endif  // PRECTHIN_INSTANCE_IO_HPP_
