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

#ifndef LPDM_ORACLE_HPP_
#define LPDM_ORACLE_HPP_

#include <vector>

#include "lpdm/numeric.hpp"
#include "lpdm/polytope.hpp"
#include "lpdm/triangulation.hpp"

// Brute-force ground truth that shares no code path with the triangulation:
// lattice-point counting with Ehrhart interpolation, determinants, and an
// exact rational simplex method for convex-hull questions.
namespace lpdm::oracle {

// #{ x in {0..t}^n : t*lower_i <= x_i + ... + x_n <= t*upper_i }.
// Dynamic program over the running suffix sum.
BigCount CountLatticePoints(const HRep& h, int t);

struct EhrhartTable {
  std::vector<BigCount> counts;  // counts[t] for t = 0..n
  // Coefficients c_0..c_n of the interpolating polynomial in t.
  std::vector<Rational> coefficients;

  Rational Evaluate(int t) const;
  const Rational& Volume() const { return coefficients.back(); }
};

EhrhartTable ComputeEhrhart(const HRep& h);

// Leading Ehrhart coefficient: the Euclidean volume.
Rational EhrhartVolume(const HRep& h);

// |det(v_1 - v_0, ..., v_n - v_0)| / n!. DomainError if degenerate.
Rational SimplexVolume(const LatticeSimplex& s);
Rational SimplexVolume(const std::vector<RationalPoint>& vertices);

// Dimension of the affine hull of `points` (-1 when empty).
int AffineRank(const std::vector<RationalPoint>& points);

/// x in conv(V), decided by phase one of an exact simplex method on
/// sum lambda_v v = x, sum lambda_v = 1, lambda >= 0 (Bland's rule).
/// ArgumentError on an empty V or a dimension mismatch.
bool HullMembership(const std::vector<RationalPoint>& vertices, const RationalPoint& x);

/// conv(u, v) is an edge of conv(V): the midpoint of u and v is not in
/// conv(V \ {u, v}). Only valid when no vertex lies inside another pair's
/// segment, which holds for 0/1 polytopes.
bool IsEdge(const std::vector<RationalPoint>& vertices, std::size_t u, std::size_t v);

}  // namespace lpdm::oracle

#endif  // LPDM_ORACLE_HPP_
