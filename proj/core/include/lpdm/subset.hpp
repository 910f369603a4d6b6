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

#ifndef LPDM_SUBSET_HPP_
#define LPDM_SUBSET_HPP_

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace lpdm {

// Largest ground set a Subset can index.
inline constexpr int kMaxGround = 63;

/// A subset of the linearly ordered ground set {1, ..., n}.
///
/// Bit i-1 of the mask records membership of i. Two subsets compare equal
/// only when both the ground size and the members agree.
class Subset {
 public:
  Subset() = default;

  // Empty subset of [n].
  explicit Subset(int n);

  static Subset FromBits(int n, std::uint64_t bits);
  static Subset FromMembers(int n, std::span<const int> members);
  static Subset FromMembers(int n, std::initializer_list<int> members) {
    return FromMembers(n, std::span<const int>(members.begin(), members.size()));
  }
  static Subset Full(int n);
  // {lo, lo+1, ..., hi} inside [n]; empty when lo > hi.
  static Subset Range(int n, int lo, int hi);

  int n() const { return n_; }
  std::uint64_t bits() const { return bits_; }
  int size() const;
  bool empty() const { return bits_ == 0; }
  bool contains(int element) const {
    return element >= 1 && element <= n_ && ((bits_ >> (element - 1)) & 1u);
  }

  std::vector<int> members() const;
  int min() const;  // 0 when empty
  int max() const;  // 0 when empty

  Subset with(int element) const;
  Subset without(int element) const;
  Subset complement() const;

  bool IsSubsetOf(const Subset& other) const;

  // Compact form "135" when n < 10, "{1,3,5}" otherwise; "{}" when empty.
  std::string ToString() const;

  friend bool operator==(const Subset&, const Subset&) = default;

 private:
  void CheckElement(int element) const;

  int n_ = 0;
  std::uint64_t bits_ = 0;
};

// Canonical order: by cardinality, then lexicographically on sorted members.
bool CanonicalLess(const Subset& a, const Subset& b);
void SortCanonical(std::vector<Subset>& subsets);

// Every subset of [n], in canonical order.
std::vector<Subset> AllSubsets(int n);

// Every k-element subset of [n], in lexicographic order.
std::vector<Subset> AllSubsetsOfSize(int n, int k);

struct SubsetHash {
  std::size_t operator()(const Subset& s) const noexcept {
    return std::hash<std::uint64_t>{}(s.bits() * 64 + static_cast<unsigned>(s.n()));
  }
};

}  // namespace lpdm

#endif  // LPDM_SUBSET_HPP_
