// Copyright 2026 The RankMC Authors.
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

#ifndef RANKMC_ERRORS_HPP_
#define RANKMC_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace rankmc {

// Invalid inputs: bad probabilities, dimension mismatches, items without
// observed comparisons, disconnected graphs, malformed data files.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Numerical failure inside a solver; carries the iteration at which the
// solve broke down (-1 when not applicable).
class SolverError : public std::runtime_error {
 public:
  explicit SolverError(const std::string& what, int iteration = -1)
      : std::runtime_error(what), iteration_(iteration) {}
  int iteration() const { return iteration_; }

 private:
  int iteration_;
};

}  // namespace rankmc

#endif  // RANKMC_ERRORS_HPP_
