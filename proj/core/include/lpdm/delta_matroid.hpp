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

#ifndef LPDM_DELTA_MATROID_HPP_
#define LPDM_DELTA_MATROID_HPP_

#include <optional>
#include <vector>

#include "lpdm/matroid_spec.hpp"
#include "lpdm/numeric.hpp"
#include "lpdm/subset.hpp"

namespace lpdm {

// The Gale interval [S, T] relabelled through the ground labels.
SetFamily FeasibleSets(const LpdmSpec& m);

struct ExchangeWitness {
  Subset first;
  Subset second;
  int element = 0;  // position in the ground set
};

struct ExchangeResult {
  bool holds = true;
  std::optional<ExchangeWitness> witness;
};

/// Symmetric exchange axiom: for all feasible A1, A2 and e in A1 ^ A2 there
/// is f in A1 ^ A2 with A1 ^ {e, f} feasible. The first violation found (in
/// canonical order) is returned as a witness. DomainError on an empty family.
ExchangeResult VerifyExchange(const SetFamily& family);

struct ElementClasses {
  Subset loops;
  Subset coloops;
};

// Read off the bounds: l is a coloop iff l in S n T and the profiles agree
// at l+1; l is a loop iff l is in neither bound and the profiles agree at l+1.
ElementClasses ClassifyElements(const LpdmSpec& m);

// Delta[[n] \ T, [n] \ S].
LpdmSpec Dual(const LpdmSpec& m);

/// Deletion of the element with label `label`, on the remaining labels.
///
/// If l is in S it is replaced by the next position above l that is not in
/// S; if l is in T it is replaced by the closest position below l that is not
/// in T (or simply dropped when there is none). DomainError if l is a
/// coloop, ArgumentError if the label is unknown.
LpdmSpec Delete(const LpdmSpec& m, int label);

// Contraction of `label`; the dual construction of Delete. DomainError if
// the element is a loop.
LpdmSpec Contract(const LpdmSpec& m, int label);

// All of m1's labels precede m2's. ArgumentError on a label collision.
// The concatenated interval equals the direct sum exactly when m2's feasible
// sets share one size or m1 = Delta[{}, E1]; DomainError otherwise (use
// DirectSumFamily for the family in that case).
LpdmSpec DirectSum(const LpdmSpec& m1, const LpdmSpec& m2);

/// The k-th homogeneous component: the feasible sets of size k, which form a
/// type A lattice path matroid. Its bounds come from clipping the profiles:
/// lower_i = max(|S_{>=i}|, k - i + 1) and upper_i = min(|T_{>=i}|, k).
/// Returns nullopt when there is no feasible set of size k.
std::optional<TypeALpmSpec> HomogeneousComponent(const LpdmSpec& m, int k);

// Bases of a type A lattice path matroid, in lexicographic order.
SetFamily TypeABases(const TypeALpmSpec& m);

// Label of position `pos` of [+-n] ordered -n < ... < -1 < 1 < ... < n.
int SignedLabel(int pos, int n);

/// Bases of the standard matroid envelope M[p, q] on [+-n]: every n-subset of
/// the 2n step positions lying between lab^A(p) and lab^A(q). The family's
/// ground carries the signed labels -n..-1, 1..n.
SetFamily EnvelopeBases(const LpdmSpec& m);

// True iff B (over the 2n positions) holds at most one of i, -i for each i.
bool IsAdmissible(const Subset& b);

// pi(e_B)_i = ((x_i - x_{-i}) + 1) / 2, with B a subset of the 2n positions.
RationalPoint EnvelopeProject(const Subset& b);

// { F \ {label} : F in family } on the ground without `label`.
SetFamily ProjectElement(const SetFamily& family, int label);

// { F1 u F2 } over the concatenated grounds; the grounds must be disjoint.
SetFamily DirectSumFamily(const SetFamily& first, const SetFamily& second);

}  // namespace lpdm

#endif  // LPDM_DELTA_MATROID_HPP_
