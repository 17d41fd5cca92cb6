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

#include "sgq/errors.hpp"

namespace sgq {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kUnknownElement: return "unknown-element";
    case ErrorKind::kInvalidLattice: return "invalid-lattice";
    case ErrorKind::kInvalidProbability: return "invalid-probability";
    case ErrorKind::kInfeasibleParameter: return "infeasible-parameter";
    case ErrorKind::kInvalidPayoff: return "invalid-payoff";
    case ErrorKind::kDegenerateRepresentation: return "degenerate-representation";
    case ErrorKind::kDegenerateGame: return "degenerate-game";
    case ErrorKind::kDegenerateOmega: return "degenerate-omega";
    case ErrorKind::kNoEigenequilibrium: return "no-eigenequilibrium";
    case ErrorKind::kInvalidConfig: return "invalid-config";
  }
  return "unknown";
}

}  // namespace sgq
