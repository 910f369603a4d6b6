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

#ifndef LPDM_PERMUTATION_HPP_
#define LPDM_PERMUTATION_HPP_

#include <initializer_list>
#include <utility>
#include <vector>

#include "lpdm/numeric.hpp"
#include "lpdm/subset.hpp"

namespace lpdm {

/// A permutation of [n] in one-line notation (w(1), ..., w(n)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  Permutation(std::initializer_list<int> images)
      : Permutation(std::vector<int>(images)) {}

  static Permutation Identity(int n);

  int size() const { return static_cast<int>(images_.size()); }
  // 1-based: operator()(i) = w(i).
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& images() const { return images_; }

  Permutation Inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<int> images_;
};

// Descents {i : w(i) > w(i+1)} and ascents {i : w(i) < w(i+1)}, both as
// subsets of [n-1] stored over the ground set [n] of the permutation.
std::pair<Subset, Subset> DescentAscentSets(const Permutation& w);
Subset DescentSet(const Permutation& w);

// All n! permutations in lexicographic order.
std::vector<Permutation> AllPermutations(int n);

// Permutations of [n] whose descent set is exactly `descents`, in
// lexicographic order. Generated by pruned depth-first search, so the cost is
// proportional to the output rather than n!.
std::vector<Permutation> PermutationsWithDescentSet(const Subset& descents, int n);

/// beta_n(S): the number of permutations of [n] with descent set exactly S.
///
/// Inclusion-exclusion over U subset of S of the multinomial coefficient
/// n! / (u_1! (u_2-u_1)! ... (n-u_k)!) counting permutations whose descents
/// lie inside U. Members of S must lie in [n-1] (ArgumentError otherwise).
BigCount CountPermsWithDescentSet(const Subset& descents, int n);

}  // namespace lpdm

#endif  // LPDM_PERMUTATION_HPP_
