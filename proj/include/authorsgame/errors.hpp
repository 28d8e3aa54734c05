// Copyright 2026 The authorsgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef AUTHORSGAME_ERRORS_HPP_
#define AUTHORSGAME_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace authorsgame {

// Malformed input: bad game documents, invalid profiles, violated
// preconditions. The CLI maps this to exit code 2.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exhaustive analysis would exceed the configured profile budget.
// The CLI maps this to exit code 3.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A numeric construction (bisection, grid scan, epsilon halving) found no
// admissible point at the configured resolution.
class SearchFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace authorsgame

#endif  // AUTHORSGAME_ERRORS_HPP_
