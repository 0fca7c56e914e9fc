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

#ifndef PRECTHIN_ERRORS_HPP_
#define PRECTHIN_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace precthin {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on an argument does not hold (unknown vertex, ordering that
// is not a permutation, overlapping parts, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// A brute-force search or enumeration would exceed its configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace precthin

#endif  // PRECTHIN_ERRORS_HPP_
