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

#ifndef LPDM_MATROID_SPEC_HPP_
#define LPDM_MATROID_SPEC_HPP_

#include <span>
#include <string>
#include <vector>

#include "lpdm/subset.hpp"

namespace lpdm {

/// The lattice path delta matroid Delta[S, T]: feasible sets are the Gale
/// interval [S, T].
///
/// Bounds are stored positionally over [n]; `ground` maps position i to its
/// label. Labels default to 1..n and travel with the matroid through
/// deletion, contraction and direct sums, so minors keep their original names.
class LpdmSpec {
 public:
  LpdmSpec() = default;
  // OrderError unless lower <= upper; ArgumentError on a ground-size mismatch.
  LpdmSpec(Subset lower, Subset upper);
  LpdmSpec(Subset lower, Subset upper, std::vector<int> ground);

  // Bounds given as labels of `ground`.
  static LpdmSpec FromLabels(std::vector<int> ground,
                             std::span<const int> lower_labels,
                             std::span<const int> upper_labels);

  int n() const { return lower_.n(); }
  const Subset& lower() const { return lower_; }
  const Subset& upper() const { return upper_; }
  const std::vector<int>& ground() const { return ground_; }
  bool HasDefaultGround() const;

  int LabelAt(int position) const { return ground_[static_cast<std::size_t>(position - 1)]; }
  // ArgumentError for an unknown label.
  int PositionOf(int label) const;
  std::vector<int> Labels(const Subset& s) const;
  Subset SubsetFromLabels(std::span<const int> labels) const;

  std::string ToString() const;

  friend bool operator==(const LpdmSpec&, const LpdmSpec&) = default;

 private:
  Subset lower_;
  Subset upper_;
  std::vector<int> ground_;
};

/// An ordinary (type A) lattice path matroid M[S, T] of rank k: bases are the
/// k-subsets B with S <= B <= T componentwise on sorted members.
struct TypeALpmSpec {
  int k = 0;
  Subset lower;
  Subset upper;
  std::vector<int> ground;

  int n() const { return lower.n(); }

  friend bool operator==(const TypeALpmSpec&, const TypeALpmSpec&) = default;
};

// Componentwise comparison of sorted members; false when sizes differ.
bool TypeAGaleLeq(const Subset& a, const Subset& b);

/// A family of subsets of an ordered ground set, members kept in canonical
/// positional order without duplicates.
class SetFamily {
 public:
  SetFamily() = default;
  SetFamily(std::vector<int> ground, std::vector<Subset> members);

  static SetFamily OverDefaultGround(int n, std::vector<Subset> members);

  int n() const { return static_cast<int>(ground_.size()); }
  const std::vector<int>& ground() const { return ground_; }
  const std::vector<Subset>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool Contains(const Subset& s) const;

  std::vector<int> Labels(const Subset& s) const;

  friend bool operator==(const SetFamily&, const SetFamily&) = default;

 private:
  std::vector<int> ground_;
  std::vector<Subset> members_;
};

std::vector<int> DefaultGround(int n);

}  // namespace lpdm

#endif  // LPDM_MATROID_SPEC_HPP_
