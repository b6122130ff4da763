// Copyright 2023 The Authors.
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

// The matroidcat command line: check, convert, hom, op, limits, greedy and
// paper-verify.

#ifndef MATROIDCAT_TOOLS_CLI_HPP_
#define MATROIDCAT_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace matroidcat::cli {

inline constexpr int kExitOk = 0;
// Validation failures, refuted checks and paper mismatches.
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name. "-" as an input path reads in.
int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace matroidcat::cli

#endif  // MATROIDCAT_TOOLS_CLI_HPP_
