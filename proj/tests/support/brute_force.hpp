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

#ifndef LPDM_TESTS_SUPPORT_BRUTE_FORCE_HPP_
#define LPDM_TESTS_SUPPORT_BRUTE_FORCE_HPP_

#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "lpdm/matroid_spec.hpp"
#include "lpdm/numeric.hpp"
#include "lpdm/permutation.hpp"
#include "lpdm/subset.hpp"

// Test-only ground truth. Everything here works from definitions (sorted
// member comparisons, filters over all 2^n subsets, enumeration of n!
// permutations) and never calls the profile-based library routines it checks.
namespace lpdm::testing {

// Every pair S <= T on [n], by the pairwise definition of the Gale order.
std::vector<std::pair<Subset, Subset>> ComparablePairs(int n);

// Filter of all 2^n subsets by the pairwise definition.
std::vector<Subset> BruteInterval(const Subset& lower, const Subset& upper);

// {B : S <= B, rank(B) = rank(S) + 1} by scanning all subsets.
std::vector<Subset> BruteCovers(const Subset& s);

// Permutations of [n] with descent set exactly `descents`, by enumeration.
long BruteDescentCount(const Subset& descents, int n);

// Families as sets of label lists, so families on different orderings of
// the same labels compare equal.
using LabelFamily = std::set<std::vector<int>>;
LabelFamily ToLabels(const SetFamily& family);

// Feasible sets with `label` removed by definition.
LabelFamily DefinitionDelete(const SetFamily& family, int label);
LabelFamily DefinitionContract(const SetFamily& family, int label);

struct ScannedClasses {
  std::vector<int> loops;    // labels in no feasible set
  std::vector<int> coloops;  // labels in every feasible set
};
ScannedClasses ScanElements(const SetFamily& family);

// Random rational point; coordinates p/q with q in [1, max_den] and the
// value in [lo, hi].
RationalPoint RandomPoint(std::mt19937_64& rng, int n, int max_den, Rational lo, Rational hi);

// Random convex combination of `points` with small rational weights.
RationalPoint RandomConvexCombination(std::mt19937_64& rng, const std::vector<RationalPoint>& points);

}  // namespace lpdm::testing

#endif  // LPDM_TESTS_SUPPORT_BRUTE_FORCE_HPP_
