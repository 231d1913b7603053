// Copyright 2026 The alphabound Authors
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

#ifndef ALPHABOUND_TOOLS_CLI_HPP_
#define ALPHABOUND_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace alphabound::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;   // a soundness or witness check failed
inline constexpr int kUsageError = 2;    // bad arguments, unreadable or off-class input
inline constexpr int kBudgetExceeded = 3;

// Environment variable overriding the default exact-search node budget.
inline constexpr const char* kBudgetEnv = "ALPHABOUND_BUDGET";

// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace alphabound::cli

#endif  // ALPHABOUND_TOOLS_CLI_HPP_
