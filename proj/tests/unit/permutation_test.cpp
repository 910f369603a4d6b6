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

#include <gtest/gtest.h>

#include <set>

#include "lpdm/error.hpp"
#include "lpdm/permutation.hpp"
#include "support/brute_force.hpp"

namespace lpdm {
namespace {

TEST(Permutation, Validation) {
  EXPECT_THROW(Permutation({1, 1, 2}), ArgumentError);
  EXPECT_THROW(Permutation({0, 1}), ArgumentError);
  EXPECT_NO_THROW(Permutation({2, 3, 1}));
}

TEST(Permutation, InverseAndCall) {
  const Permutation w{2, 3, 1};
  EXPECT_EQ(w(1), 2);
  EXPECT_EQ(w.Inverse(), (Permutation{3, 1, 2}));
  EXPECT_EQ(Permutation::Identity(3), (Permutation{1, 2, 3}));
}

TEST(DescentSet, Examples) {
  EXPECT_EQ(DescentSet(Permutation{3, 2, 5, 4, 6, 1}), Subset::FromMembers(6, {1, 3, 5}));
  const auto [des, asc] = DescentAscentSets(Permutation{2, 3, 1});
  EXPECT_EQ(des.members(), std::vector<int>{2});
  EXPECT_EQ(asc.members(), std::vector<int>{1});
}

TEST(CountPermsWithDescentSet, Examples) {
  EXPECT_EQ(CountPermsWithDescentSet(Subset::FromMembers(6, {1, 3, 5}), 6), 61);
  EXPECT_EQ(CountPermsWithDescentSet(Subset::FromMembers(3, {1}), 3), 2);
  EXPECT_EQ(CountPermsWithDescentSet(Subset(0), 0), 1);
}

TEST(CountPermsWithDescentSet, RejectsMemberN) {
  EXPECT_THROW(CountPermsWithDescentSet(Subset::FromMembers(3, {3}), 3), ArgumentError);
}

TEST(CountPermsWithDescentSet, MatchesEnumeration) {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& r : AllSubsets(n - 1)) {
      const Subset s = Subset::FromBits(n, r.bits());
      EXPECT_EQ(CountPermsWithDescentSet(s, n), testing::BruteDescentCount(s, n));
    }
  }
}

TEST(PermutationsWithDescentSet, ListsExactlyTheClass) {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& r : AllSubsets(n - 1)) {
      const Subset s = Subset::FromBits(n, r.bits());
      const auto perms = PermutationsWithDescentSet(s, n);
      EXPECT_EQ(BigCount(perms.size()), CountPermsWithDescentSet(s, n));
      EXPECT_TRUE(std::is_sorted(perms.begin(), perms.end()));
      for (const auto& w : perms) EXPECT_EQ(DescentSet(w), s);
    }
  }
}

TEST(AllPermutations, LexicographicAndComplete) {
  const auto perms = AllPermutations(4);
  EXPECT_EQ(perms.size(), 24u);
  EXPECT_TRUE(std::is_sorted(perms.begin(), perms.end()));
  EXPECT_EQ(std::set<Permutation>(perms.begin(), perms.end()).size(), 24u);
}

}  // namespace
}  // namespace lpdm
