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


// Command-line front end. Every subcommand reads one document (a path, or
// "-" for standard input) and writes one JSON object with sorted keys.
//
// Exit status: 0 for YES or success, 1 for NO, 2 for malformed input, a
// usage error or an exhausted budget.

#ifndef PRECTHIN_CLI_HPP_
#define PRECTHIN_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace precthin::cli {

inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitError = 2;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace precthin::cli

#endif  // PRECTHIN_CLI_HPP_
