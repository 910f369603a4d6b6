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

#ifndef LPDM_ORDER_HPP_
#define LPDM_ORDER_HPP_

#include <vector>

#include "lpdm/numeric.hpp"
#include "lpdm/permutation.hpp"
#include "lpdm/subset.hpp"

// Type C_n Gale order on subsets of [n].
//
// A <= B iff |A_{>=i}| <= |B_{>=i}| for every i, where A_{>=i} is the set of
// members of A that are at least i. The poset is ranked by the element sum,
// and its covers either move one element i to i+1 or add the element 1.
namespace lpdm {

// (|S_{>=1}|, ..., |S_{>=n}|). Index 0 holds |S_{>=1}|.
using Profile = std::vector<int>;

Profile ProfileOf(const Subset& s);

// Inverse of ProfileOf. Throws ArgumentError if `profile` is not a valid
// profile (last entry in {0,1}, consecutive drops in {0,1}).
Subset SubsetFromProfile(const Profile& profile);
bool IsValidProfile(const Profile& profile);

bool GaleLeq(const Subset& a, const Subset& b);

// The pairwise form: |A| <= |B| and a_{j-i+1} <= b_{k-i+1} on the sorted
// members, compared from the top. Independent of ProfileOf.
bool GaleLeqByMembers(const Subset& a, const Subset& b);

int GaleRank(const Subset& s);

// All A with S <= A <= T, in canonical order. OrderError unless S <= T.
std::vector<Subset> GaleInterval(const Subset& lower, const Subset& upper);

// Upper covers of S in 2^[n].
std::vector<Subset> CoverSuccessors(const Subset& s);

// Saturated chains from `lower` to `upper`. OrderError unless lower <= upper.
BigCount CountMaximalChains(const Subset& lower, const Subset& upper);

// A saturated chain, listed bottom to top.
struct GaleChain {
  std::vector<Subset> steps;

  friend bool operator==(const GaleChain&, const GaleChain&) = default;
};

bool IsSaturatedChain(const GaleChain& chain);

// Every maximal chain of [lower, upper], lexicographic in the step sequence.
// Exponential; meant for small intervals.
std::vector<GaleChain> MaximalChains(const Subset& lower, const Subset& upper);

// Bijection between maximal chains of the toric interval [S, S u {n}]
// (S a subset of [n-1]) and permutations of [n] with descent set S.
//
// pi(l) is the 1-based step at which l-1 moves up to l, and pi(1) is the step
// at which 1 is added. DomainError if the chain is not a maximal chain of a
// toric interval.
Permutation ChainToPermutation(const GaleChain& chain);

// Inverse of ChainToPermutation. DomainError if DescentSet(w) != S.
GaleChain PermutationToChain(const Permutation& w, const Subset& descents);

}  // namespace lpdm

#endif  // LPDM_ORDER_HPP_
