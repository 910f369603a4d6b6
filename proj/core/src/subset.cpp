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

#include "lpdm/subset.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "lpdm/error.hpp"

namespace lpdm {
namespace {

std::uint64_t LowMask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

void CheckGround(int n) {
  if (n < 0 || n > kMaxGround) {
    throw ArgumentError("ground size " + std::to_string(n) + " outside [0, " +
                        std::to_string(kMaxGround) + "]");
  }
}

}  // namespace

Subset::Subset(int n) : n_(n) { CheckGround(n); }

Subset Subset::FromBits(int n, std::uint64_t bits) {
  Subset s(n);
  if ((bits & ~LowMask(n)) != 0) {
    throw ArgumentError("mask has members outside [" + std::to_string(n) + "]");
  }
  s.bits_ = bits;
  return s;
}

Subset Subset::FromMembers(int n, std::span<const int> members) {
  Subset s(n);
  for (int m : members) {
    s.CheckElement(m);
    s.bits_ |= std::uint64_t{1} << (m - 1);
  }
  return s;
}

Subset Subset::Full(int n) {
  Subset s(n);
  s.bits_ = LowMask(n);
  return s;
}

Subset Subset::Range(int n, int lo, int hi) {
  Subset s(n);
  for (int i = std::max(lo, 1); i <= std::min(hi, n); ++i) {
    s.bits_ |= std::uint64_t{1} << (i - 1);
  }
  return s;
}

int Subset::size() const { return std::popcount(bits_); }

std::vector<int> Subset::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(std::countr_zero(b) + 1);
  }
  return out;
}

int Subset::min() const { return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1; }

int Subset::max() const { return bits_ == 0 ? 0 : 64 - std::countl_zero(bits_); }

Subset Subset::with(int element) const {
  CheckElement(element);
  Subset s = *this;
  s.bits_ |= std::uint64_t{1} << (element - 1);
  return s;
}

Subset Subset::without(int element) const {
  CheckElement(element);
  Subset s = *this;
  s.bits_ &= ~(std::uint64_t{1} << (element - 1));
  return s;
}

Subset Subset::complement() const {
  Subset s = *this;
  s.bits_ = ~bits_ & LowMask(n_);
  return s;
}

bool Subset::IsSubsetOf(const Subset& other) const {
  return n_ == other.n_ && (bits_ & ~other.bits_) == 0;
}

std::string Subset::ToString() const {
  if (bits_ == 0) return "{}";
  std::string out;
  const bool compact = n_ < 10;
  if (!compact) out += '{';
  bool first = true;
  for (int m : members()) {
    if (!compact && !first) out += ',';
    out += std::to_string(m);
    first = false;
  }
  if (!compact) out += '}';
  return out;
}

void Subset::CheckElement(int element) const {
  if (element < 1 || element > n_) {
    throw ArgumentError("element " + std::to_string(element) + " outside [" +
                        std::to_string(n_) + "]");
  }
}

bool CanonicalLess(const Subset& a, const Subset& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  // Same cardinality: the set whose smallest differing member is smaller
  // comes first.
  const std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return a.n() < b.n();
  const std::uint64_t lowest = diff & (~diff + 1);
  return (a.bits() & lowest) != 0;
}

void SortCanonical(std::vector<Subset>& subsets) {
  std::sort(subsets.begin(), subsets.end(), CanonicalLess);
}

std::vector<Subset> AllSubsets(int n) {
  CheckGround(n);
  if (n > 30) throw ArgumentError("refusing to enumerate 2^" + std::to_string(n) + " subsets");
  std::vector<Subset> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
    out.push_back(Subset::FromBits(n, b));
  }
  SortCanonical(out);
  return out;
}

std::vector<Subset> AllSubsetsOfSize(int n, int k) {
  CheckGround(n);
  std::vector<Subset> out;
  if (k < 0 || k > n) return out;
  std::vector<int> members(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) members[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    out.push_back(Subset::FromMembers(n, members));
    int i = k - 1;
    while (i >= 0 && members[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
    if (i < 0) break;
    ++members[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      members[static_cast<std::size_t>(j)] = members[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

}  // namespace lpdm
