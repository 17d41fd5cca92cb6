// Copyright 2026 The sgq Authors
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

#ifndef SGQ_ERRORS_HPP_
#define SGQ_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sgq {

enum class ErrorKind {
  kUnknownElement,
  kInvalidLattice,
  kInvalidProbability,
  kInfeasibleParameter,
  kInvalidPayoff,
  kDegenerateRepresentation,
  kDegenerateGame,
  kDegenerateOmega,
  kNoEigenequilibrium,
  kInvalidConfig,
};

// Stable kebab-case identifier, used verbatim in machine-readable output.
std::string_view to_string(ErrorKind kind);

// Thrown for every violated domain precondition. `details` carries named
// numeric context (e.g. the feasible interval for an infeasible parameter).
class DomainError : public std::domain_error {
 public:
  using Details = std::vector<std::pair<std::string, double>>;

  DomainError(ErrorKind kind, const std::string& message, Details details = {})
      : std::domain_error(message), kind_(kind), details_(std::move(details)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const Details& details() const noexcept { return details_; }

 private:
  ErrorKind kind_;
  Details details_;
};

}  // namespace sgq

#endif  // SGQ_ERRORS_HPP_
