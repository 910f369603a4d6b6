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

#ifndef LPDM_POLYTOPE_HPP_
#define LPDM_POLYTOPE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "lpdm/matroid_spec.hpp"
#include "lpdm/numeric.hpp"
#include "lpdm/order.hpp"

namespace lpdm {

/// Inequality description of the feasible polytope of Delta[S, T]:
///   0 <= x_i <= 1  and  lower_i <= x_i + ... + x_n <= upper_i,
/// with lower = profile(S) and upper = profile(T).
struct HRep {
  int n = 0;
  Profile lower;
  Profile upper;

  friend bool operator==(const HRep&, const HRep&) = default;
};

HRep MakeHRep(const LpdmSpec& m);

// ArgumentError on a dimension mismatch.
bool Contains(const HRep& h, const RationalPoint& x);
bool Contains(const HRep& h, const std::vector<int>& x);

// n minus the number of i with lower_i == upper_i.
int Dimension(const LpdmSpec& m);

// The same quantity from the bounding paths: n - k + 1 where k counts the
// lattice points the two paths share weakly above the antidiagonal.
int DimensionFromPaths(const LpdmSpec& m);

bool IsLinked(const LpdmSpec& m);

// Polytope of the intersection: max of the lower profiles, min of the upper
// ones. nullopt when the result is empty. ArgumentError unless both live on
// the same ground.
std::optional<LpdmSpec> Intersect(const LpdmSpec& m1, const LpdmSpec& m2);

enum class FacetKind {
  kCoordinateZero,  // x_i = 0
  kCoordinateOne,   // x_i = 1
  kSuffixLower,     // x_i + ... + x_n = |S_{>=i}|
  kSuffixUpper,     // x_i + ... + x_n = |T_{>=i}|
};

struct Facet {
  FacetKind kind = FacetKind::kCoordinateZero;
  int index = 1;  // position in [n]
};

// "x3=0", "x3=1", "s3=lower", "s3=upper". ArgumentError otherwise.
Facet ParseFacet(const std::string& text);
std::string FormatFacet(const Facet& facet);

/// A face as a direct sum of two delta matroids that are each lattice path
/// delta matroids on their own ordered grounds.
///
/// Coordinate faces split off the singleton {i}: a coloop Delta[{i},{i}]
/// plus the contraction by i, or a loop Delta[{},{}] plus the deletion of i.
/// Suffix faces split the ground into {1..i-1} and {i..n}.
struct FaceDecomposition {
  LpdmSpec first;
  LpdmSpec second;
};

struct FaceResult {
  SetFamily family;
  // Empty exactly when the face is empty.
  std::optional<FaceDecomposition> decomposition;
};

// ArgumentError if the facet index is outside [n].
FaceResult Face(const LpdmSpec& m, const Facet& facet);

// { e_F : F feasible }, in canonical order of F.
std::vector<std::vector<int>> VertexSet(const LpdmSpec& m);
std::vector<RationalPoint> RationalVertexSet(const LpdmSpec& m);

RationalPoint ToRational(const std::vector<int>& x);

}  // namespace lpdm

#endif  // LPDM_POLYTOPE_HPP_
