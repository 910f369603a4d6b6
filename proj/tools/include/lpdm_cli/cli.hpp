// Copyright 2026 The lpdm Authors.
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

#ifndef LPDM_CLI_CLI_HPP_
#define LPDM_CLI_CLI_HPP_

#include <string>
#include <vector>

namespace lpdm::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

struct CommandResult {
  int exit_code = kExitOk;
  std::string out;  // JSON payload, SVG or the selftest table
  std::string err;
};

// `args` excludes the program name.
CommandResult Run(const std::vector<std::string>& args);

}  // namespace lpdm::cli

#endif  // LPDM_CLI_CLI_HPP_
