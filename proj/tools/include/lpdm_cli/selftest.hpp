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

#ifndef LPDM_CLI_SELFTEST_HPP_
#define LPDM_CLI_SELFTEST_HPP_

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace lpdm::cli {

struct SelftestOptions {
  // Caps every exhaustive range; 6 runs each criterion at full size.
  int max_n = 6;
  std::uint64_t seed = 20260418;
};

struct CriterionReport {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

inline constexpr int kCriterionCount = 12;

CriterionReport RunCriterion(int id, const SelftestOptions& options);

// Runs all criteria in order, streaming one formatted line per criterion to
// `table` when given.
std::vector<CriterionReport> RunSelftest(const SelftestOptions& options, std::ostream* table);

std::string FormatReport(const CriterionReport& report);

}  // namespace lpdm::cli

#endif  // LPDM_CLI_SELFTEST_HPP_
