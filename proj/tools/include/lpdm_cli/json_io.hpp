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

#ifndef LPDM_CLI_JSON_IO_HPP_
#define LPDM_CLI_JSON_IO_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "lpdm/error.hpp"
#include "lpdm/delta_matroid.hpp"
#include "lpdm/matroid_spec.hpp"
#include "lpdm/numeric.hpp"
#include "lpdm/oracle.hpp"
#include "lpdm/permutation.hpp"
#include "lpdm/polytope.hpp"
#include "lpdm/triangulation.hpp"

namespace lpdm::cli {

using Json = nlohmann::ordered_json;

// Raised for unparsable or ill-typed JSON input.
class MalformedInput : public Error {
 public:
  explicit MalformedInput(const std::string& message) : Error("malformed_json", message) {}
};

Json ParseJson(std::string_view text);

// {"n": 5, "S": [3,4], "T": [2,3,5], "ground": [...]?}; S and T are labels.
LpdmSpec SpecFromJson(const Json& j);
Json SpecToJson(const LpdmSpec& m);

// {"n": 5, "S": [...]} for a single subset of [n].
Subset SubsetFromJson(const Json& j);
Json SubsetToJson(const Subset& s);

Json LabelsToJson(std::vector<int> labels);

// Sets as sorted label arrays, in canonical order.
Json FamilyToJson(const SetFamily& family);
// {"ground": [...], "sets": [[...], ...]}
Json FamilyWithGroundToJson(const SetFamily& family);
SetFamily FamilyFromJson(const Json& j);

Json TypeASpecToJson(const TypeALpmSpec& m);

Json HRepToJson(const HRep& h);

// Points are arrays of "p/q" strings; plain integers are accepted on input.
RationalPoint PointFromJson(const Json& j);
Json PointToJson(const RationalPoint& x);
Json RationalToJson(const Rational& r);

Permutation PermutationFromJson(const Json& j);
Json PermutationToJson(const Permutation& w);

Json SimplexToJson(const LatticeSimplex& s);
Json EhrhartToJson(const oracle::EhrhartTable& table);

// JSON number when it fits in 64 bits, decimal string otherwise.
Json CountToJson(const BigCount& c);

}  // namespace lpdm::cli

#endif  // LPDM_CLI_JSON_IO_HPP_
