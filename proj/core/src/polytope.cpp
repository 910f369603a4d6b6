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

#include "lpdm/polytope.hpp"

#include <algorithm>
#include <string>

#include "lpdm/delta_matroid.hpp"
#include "lpdm/error.hpp"
#include "lpdm/lattice_path.hpp"

namespace lpdm {

HRep MakeHRep(const LpdmSpec& m) {
  return HRep{m.n(), ProfileOf(m.lower()), ProfileOf(m.upper())};
}

bool Contains(const HRep& h, const RationalPoint& x) {
  if (static_cast<int>(x.size()) != h.n) {
    throw ArgumentError("point has " + std::to_string(x.size()) + " coordinates, expected " +
                        std::to_string(h.n));
  }
  Rational suffix = 0;
  for (int i = h.n; i >= 1; --i) {
    const auto idx = static_cast<std::size_t>(i - 1);
    if (x[idx] < 0 || x[idx] > 1) return false;
    suffix += x[idx];
    if (suffix < h.lower[idx] || suffix > h.upper[idx]) return false;
  }
  return true;
}

bool Contains(const HRep& h, const std::vector<int>& x) { return Contains(h, ToRational(x)); }

int Dimension(const LpdmSpec& m) {
  const Profile a = ProfileOf(m.lower());
  const Profile b = ProfileOf(m.upper());
  int tight = 0;
  for (std::size_t i = 0; i < a.size(); ++i) tight += a[i] == b[i];
  return m.n() - tight;
}

int DimensionFromPaths(const LpdmSpec& m) {
  const int shared = CountUpperIntersections(PathFromSubset(m.lower()), PathFromSubset(m.upper()));
  return m.n() - shared + 1;
}

bool IsLinked(const LpdmSpec& m) { return Dimension(m) == m.n(); }

std::optional<LpdmSpec> Intersect(const LpdmSpec& m1, const LpdmSpec& m2) {
  if (m1.ground() != m2.ground()) {
    throw ArgumentError("intersection needs matroids on the same ordered ground");
  }
  const HRep h1 = MakeHRep(m1);
  const HRep h2 = MakeHRep(m2);
  Profile lo(h1.lower.size());
  Profile hi(h1.upper.size());
  for (std::size_t i = 0; i < lo.size(); ++i) {
    lo[i] = std::max(h1.lower[i], h2.lower[i]);
    hi[i] = std::min(h1.upper[i], h2.upper[i]);
    if (lo[i] > hi[i]) return std::nullopt;
  }
  return LpdmSpec(SubsetFromProfile(lo), SubsetFromProfile(hi), m1.ground());
}

Facet ParseFacet(const std::string& text) {
  const auto eq = text.find('=');
  if (text.size() < 4 || eq == std::string::npos || (text[0] != 'x' && text[0] != 's')) {
    throw ArgumentError("bad facet '" + text + "'; expected x<i>=0, x<i>=1, s<i>=lower or s<i>=upper");
  }
  int index = 0;
  try {
    std::size_t used = 0;
    index = std::stoi(text.substr(1, eq - 1), &used);
    if (used != eq - 1) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw ArgumentError("bad facet index in '" + text + "'");
  }
  const std::string rhs = text.substr(eq + 1);
  if (text[0] == 'x' && rhs == "0") return {FacetKind::kCoordinateZero, index};
  if (text[0] == 'x' && rhs == "1") return {FacetKind::kCoordinateOne, index};
  if (text[0] == 's' && rhs == "lower") return {FacetKind::kSuffixLower, index};
  if (text[0] == 's' && rhs == "upper") return {FacetKind::kSuffixUpper, index};
  throw ArgumentError("bad facet '" + text + "'");
}

std::string FormatFacet(const Facet& facet) {
  const std::string i = std::to_string(facet.index);
  switch (facet.kind) {
    case FacetKind::kCoordinateZero: return "x" + i + "=0";
    case FacetKind::kCoordinateOne: return "x" + i + "=1";
    case FacetKind::kSuffixLower: return "s" + i + "=lower";
    case FacetKind::kSuffixUpper: return "s" + i + "=upper";
  }
  return {};
}

namespace {

std::vector<int> Slice(const std::vector<int>& v, int from, int to) {
  return {v.begin() + (from - 1), v.begin() + to};
}

// Splits a suffix face at position i into bounds on {1..i-1} and {i..n}.
FaceDecomposition SplitSuffixFace(const LpdmSpec& m, int i, int value, bool at_lower) {
  const HRep h = MakeHRep(m);
  const int n = m.n();
  auto a = [&](int j) { return h.lower[static_cast<std::size_t>(j - 1)]; };
  auto b = [&](int j) { return h.upper[static_cast<std::size_t>(j - 1)]; };

  Profile head_lo;
  Profile head_hi;
  for (int j = 1; j < i; ++j) {
    head_lo.push_back(std::max(a(j) - value, 0));
    head_hi.push_back(std::min(b(j) - value, i - j));
  }
  Profile tail_lo;
  Profile tail_hi;
  for (int j = i; j <= n; ++j) {
    if (at_lower) {
      tail_lo.push_back(a(j));
      tail_hi.push_back(std::min(b(j), value));
    } else {
      tail_lo.push_back(std::max(a(j), value - (j - i)));
      tail_hi.push_back(b(j));
    }
  }
  return FaceDecomposition{
      LpdmSpec(SubsetFromProfile(head_lo), SubsetFromProfile(head_hi), Slice(m.ground(), 1, i - 1)),
      LpdmSpec(SubsetFromProfile(tail_lo), SubsetFromProfile(tail_hi), Slice(m.ground(), i, n)),
  };
}

}  // namespace

FaceResult Face(const LpdmSpec& m, const Facet& facet) {
  const int n = m.n();
  const int i = facet.index;
  if (i < 1 || i > n) {
    throw ArgumentError("facet index " + std::to_string(i) + " outside [" + std::to_string(n) + "]");
  }
  const HRep h = MakeHRep(m);
  const auto idx = static_cast<std::size_t>(i - 1);
  std::vector<Subset> members;
  for (const Subset& f : GaleInterval(m.lower(), m.upper())) {
    const int suffix = ProfileOf(f)[idx];
    bool on_face = false;
    switch (facet.kind) {
      case FacetKind::kCoordinateZero: on_face = !f.contains(i); break;
      case FacetKind::kCoordinateOne: on_face = f.contains(i); break;
      case FacetKind::kSuffixLower: on_face = suffix == h.lower[idx]; break;
      case FacetKind::kSuffixUpper: on_face = suffix == h.upper[idx]; break;
    }
    if (on_face) members.push_back(f);
  }
  FaceResult result{SetFamily(m.ground(), std::move(members)), std::nullopt};
  if (result.family.empty()) return result;

  const int label = m.LabelAt(i);
  switch (facet.kind) {
    case FacetKind::kCoordinateOne:
      result.decomposition = FaceDecomposition{
          LpdmSpec(Subset::Full(1), Subset::Full(1), {label}), Contract(m, label)};
      break;
    case FacetKind::kCoordinateZero:
      result.decomposition = FaceDecomposition{
          LpdmSpec(Subset(1), Subset(1), {label}), Delete(m, label)};
      break;
    case FacetKind::kSuffixLower:
      result.decomposition = SplitSuffixFace(m, i, h.lower[idx], /*at_lower=*/true);
      break;
    case FacetKind::kSuffixUpper:
      result.decomposition = SplitSuffixFace(m, i, h.upper[idx], /*at_lower=*/false);
      break;
  }
  return result;
}

std::vector<std::vector<int>> VertexSet(const LpdmSpec& m) {
  std::vector<std::vector<int>> out;
  for (const Subset& f : GaleInterval(m.lower(), m.upper())) {
    std::vector<int> v(static_cast<std::size_t>(m.n()), 0);
    for (int e : f.members()) v[static_cast<std::size_t>(e - 1)] = 1;
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<RationalPoint> RationalVertexSet(const LpdmSpec& m) {
  std::vector<RationalPoint> out;
  for (const auto& v : VertexSet(m)) out.push_back(ToRational(v));
  return out;
}

RationalPoint ToRational(const std::vector<int>& x) {
  RationalPoint out;
  out.reserve(x.size());
  for (int v : x) out.emplace_back(v);
  return out;
}

}  // namespace lpdm
