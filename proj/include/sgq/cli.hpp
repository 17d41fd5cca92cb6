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

#ifndef SGQ_CLI_HPP_
#define SGQ_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace sgq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDomain = 2;

// Name of the environment variable holding the default simulation seed.
inline constexpr const char* kSeedEnv = "SGQ_SEED";

// Runs one command line (program name excluded). Results go to `out`;
// domain errors are written to `err` as {"error": {...}} and return 2,
// usage errors return 1.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sgq::cli

#endif  // SGQ_CLI_HPP_
