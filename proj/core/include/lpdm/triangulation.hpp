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

#ifndef LPDM_TRIANGULATION_HPP_
#define LPDM_TRIANGULATION_HPP_

#include <vector>

#include "lpdm/matroid_spec.hpp"
#include "lpdm/numeric.hpp"
#include "lpdm/permutation.hpp"

// Stanley's triangulation of the unit cube, pushed through the coordinate
// reversal, and the snake-path cells it refines.
//
// The order simplex of w is { 0 <= x_{w(1)} <= ... <= x_{w(n)} <= 1 }. On it
// the inverse of the fractional prefix-sum map psi is affine, so the image
// phi(simplex) = reverse(psi^{-1}(simplex)) is again a lattice simplex. These
// images triangulate [0,1]^n unimodularly, and phi(simplex of w) sits inside
// the toric cell Delta[des(w), des(w) u {n}].
namespace lpdm {

struct LatticeSimplex {
  std::vector<std::vector<int>> vertices;  // n + 1 points of Z^n
  Permutation label;

  int dimension() const { return label.size(); }
};

// Coordinate i is the fractional part of x_1 + ... + x_i.
RationalPoint StanleyPsi(const RationalPoint& x);

LatticeSimplex PhiSimplex(const Permutation& w);

// The S subset of [n-1] whose cell Delta[S, S u {n}] contains PhiSimplex(w):
// { n - j : j a descent of w^{-1} }. This is neither the descent nor the
// ascent set of w once n >= 3 (w = 132 lands in the cell of {1}).
Subset SnakeLabel(const Permutation& w);

/// Unimodular triangulation of a linked toric interval Delta[S, S u {n}]:
/// one simplex per permutation w with SnakeLabel(w) = S, ordered by w.
/// There are as many as permutations with descent set S.
/// DomainError unless S is inside [n-1] and T = S u {n}.
std::vector<LatticeSimplex> TriangulateToric(const LpdmSpec& m);

bool IsToricInterval(const LpdmSpec& m);

/// Cells Delta[R, R u {n}] for R inside [n-1] with S <= R <= T \ {n}.
struct Subdivision {
  std::vector<LpdmSpec> cells;
};

// DomainError unless m is linked.
Subdivision Subdivide(const LpdmSpec& m);

// Euclidean volume of the feasible polytope: 0 when not full-dimensional,
// otherwise the sum of beta_n(R) / n! over the subdivision cells.
Rational Volume(const LpdmSpec& m);

}  // namespace lpdm

#endif  // LPDM_TRIANGULATION_HPP_
