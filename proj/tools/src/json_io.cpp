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

#include "lpdm_cli/json_io.hpp"

#include <algorithm>
#include <limits>

#include "lpdm/error.hpp"

namespace lpdm::cli {
namespace {

const Json& Field(const Json& j, const char* key) {
  if (!j.is_object()) throw MalformedInput("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw MalformedInput(std::string("missing field \"") + key + "\"");
  return *it;
}

int AsInt(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw MalformedInput(std::string(what) + " must be an integer");
  const auto v = j.get<long long>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
    throw MalformedInput(std::string(what) + " out of range");
  }
  return static_cast<int>(v);
}

std::vector<int> IntArray(const Json& j, const char* what) {
  if (!j.is_array()) throw MalformedInput(std::string(what) + " must be an array of integers");
  std::vector<int> out;
  for (const Json& e : j) out.push_back(AsInt(e, what));
  return out;
}

int GroundSize(const Json& j) {
  const int n = AsInt(Field(j, "n"), "n");
  if (n < 0 || n > kMaxGround) {
    throw ArgumentError("n must lie in [0, " + std::to_string(kMaxGround) + "]");
  }
  return n;
}

}  // namespace

Json ParseJson(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw MalformedInput(e.what());
  }
}

LpdmSpec SpecFromJson(const Json& j) {
  const int n = GroundSize(j);
  const std::vector<int> lower = IntArray(Field(j, "S"), "S");
  const std::vector<int> upper = IntArray(Field(j, "T"), "T");
  std::vector<int> ground = DefaultGround(n);
  if (j.contains("ground")) {
    ground = IntArray(j["ground"], "ground");
    if (static_cast<int>(ground.size()) != n) throw ArgumentError("ground must have n labels");
  }
  return LpdmSpec::FromLabels(std::move(ground), lower, upper);
}

Json SpecToJson(const LpdmSpec& m) {
  Json j;
  j["n"] = m.n();
  j["S"] = LabelsToJson(m.Labels(m.lower()));
  j["T"] = LabelsToJson(m.Labels(m.upper()));
  if (!m.HasDefaultGround()) j["ground"] = m.ground();
  return j;
}

Subset SubsetFromJson(const Json& j) {
  const int n = GroundSize(j);
  return Subset::FromMembers(n, IntArray(Field(j, "S"), "S"));
}

Json SubsetToJson(const Subset& s) { return LabelsToJson(s.members()); }

Json LabelsToJson(std::vector<int> labels) {
  std::sort(labels.begin(), labels.end());
  return Json(labels);
}

Json FamilyToJson(const SetFamily& family) {
  Json out = Json::array();
  for (const Subset& s : family.members()) out.push_back(LabelsToJson(family.Labels(s)));
  return out;
}

Json FamilyWithGroundToJson(const SetFamily& family) {
  Json j;
  j["ground"] = family.ground();
  j["sets"] = FamilyToJson(family);
  return j;
}

SetFamily FamilyFromJson(const Json& j) {
  const std::vector<int> ground = IntArray(Field(j, "ground"), "ground");
  const Json& sets = Field(j, "sets");
  if (!sets.is_array()) throw MalformedInput("sets must be an array");
  const int n = static_cast<int>(ground.size());
  if (n > kMaxGround) throw ArgumentError("ground too large");
  std::vector<Subset> members;
  for (const Json& set : sets) {
    Subset s(n);
    for (int label : IntArray(set, "set")) {
      const auto it = std::find(ground.begin(), ground.end(), label);
      if (it == ground.end()) throw ArgumentError("label " + std::to_string(label) + " not in ground");
      s = s.with(static_cast<int>(it - ground.begin()) + 1);
    }
    members.push_back(s);
  }
  return SetFamily(ground, std::move(members));
}

Json TypeASpecToJson(const TypeALpmSpec& m) {
  Json j;
  j["k"] = m.k;
  j["n"] = m.n();
  const SetFamily carrier(m.ground, {});
  j["S"] = LabelsToJson(carrier.Labels(m.lower));
  j["T"] = LabelsToJson(carrier.Labels(m.upper));
  if (m.ground != DefaultGround(m.n())) j["ground"] = m.ground;
  return j;
}

Json HRepToJson(const HRep& h) {
  Json j;
  j["a"] = h.lower;
  j["b"] = h.upper;
  return j;
}

RationalPoint PointFromJson(const Json& j) {
  if (!j.is_array()) throw MalformedInput("a point is an array of rationals");
  RationalPoint x;
  for (const Json& c : j) {
    if (c.is_number_integer()) {
      x.emplace_back(c.get<long long>());
    } else if (c.is_string()) {
      x.push_back(ParseRational(c.get<std::string>()));
    } else {
      throw MalformedInput("point coordinates must be integers or \"p/q\" strings");
    }
  }
  return x;
}

Json PointToJson(const RationalPoint& x) {
  Json out = Json::array();
  for (const Rational& c : x) out.push_back(FormatRational(c));
  return out;
}

Json RationalToJson(const Rational& r) { return FormatRational(r); }

Permutation PermutationFromJson(const Json& j) { return Permutation(IntArray(j, "permutation")); }

Json PermutationToJson(const Permutation& w) { return w.images(); }

Json SimplexToJson(const LatticeSimplex& s) {
  Json j;
  j["perm"] = PermutationToJson(s.label);
  j["vertices"] = s.vertices;
  return j;
}

Json EhrhartToJson(const oracle::EhrhartTable& table) {
  Json j;
  Json counts = Json::array();
  for (const BigCount& c : table.counts) counts.push_back(CountToJson(c));
  j["counts"] = counts;
  Json coefficients = Json::array();
  for (const Rational& c : table.coefficients) coefficients.push_back(FormatRational(c));
  j["coefficients"] = coefficients;
  j["volume"] = FormatRational(table.Volume());
  return j;
}

Json CountToJson(const BigCount& c) {
  if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max()) {
    return c.convert_to<long long>();
  }
  return c.str();
}

}  // namespace lpdm::cli
