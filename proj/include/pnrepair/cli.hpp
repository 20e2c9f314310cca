// Copyright 2026 The pnrepair Authors
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


#ifndef PNREPAIR_CLI_HPP_
#define PNREPAIR_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace pnrepair {

/// Exit codes of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;  // e.g. not implementable, nothing within budget
inline constexpr int kExitUsage = 2;     // bad arguments, unreadable or malformed input

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`; artifacts go to the --out path when given and are
/// appended to `out` otherwise.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pnrepair

#endif  // PNREPAIR_CLI_HPP_
