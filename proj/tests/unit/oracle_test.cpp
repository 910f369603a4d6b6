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

#include <random>

#include "lpdm/delta_matroid.hpp"
#include "lpdm/error.hpp"
#include "lpdm/oracle.hpp"
#include "lpdm/parallel.hpp"
#include "lpdm/polytope.hpp"
#include "lpdm/triangulation.hpp"
#include "support/brute_force.hpp"

namespace lpdm {
namespace {

Subset S(int n, std::initializer_list<int> members) { return Subset::FromMembers(n, members); }

HRep H(int n, std::initializer_list<int> lower, std::initializer_list<int> upper) {
  return MakeHRep(LpdmSpec(S(n, lower), S(n, upper)));
}

HRep Cube(int n) { return MakeHRep(LpdmSpec(Subset(n), Subset::Full(n))); }

TEST(CountLatticePoints, Examples) {
  for (int n = 1; n <= 4; ++n) {
    for (int t = 0; t <= 4; ++t) {
      BigCount expected = 1;
      for (int i = 0; i < n; ++i) expected *= t + 1;
      EXPECT_EQ(oracle::CountLatticePoints(Cube(n), t), expected);
    }
  }
  EXPECT_EQ(oracle::CountLatticePoints(H(3, {1}, {1, 3}), 1), 5);
  for (int t = 0; t <= 5; ++t) EXPECT_EQ(oracle::CountLatticePoints(H(4, {2, 3}, {2, 3}), t), 1);
}

TEST(CountLatticePoints, UnitDilationCountsFeasibleSets) {
  for (int n = 0; n <= 6; ++n) {
    for (const auto& [s, t] : testing::ComparablePairs(n)) {
      const LpdmSpec m(s, t);
      EXPECT_EQ(oracle::CountLatticePoints(MakeHRep(m), 1), BigCount(FeasibleSets(m).size()));
    }
  }
}

TEST(Ehrhart, Examples) {
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(oracle::EhrhartVolume(Cube(n)), 1);
  EXPECT_EQ(oracle::EhrhartVolume(H(2, {1}, {1, 2})), Rational(1, 2));
  EXPECT_EQ(oracle::EhrhartVolume(H(3, {}, {1, 3})), Rational(1, 2));
  EXPECT_EQ(oracle::EhrhartVolume(H(3, {1}, {1, 3})), Rational(1, 3));
  EXPECT_EQ(oracle::EhrhartVolume(H(3, {2}, {2})), 0);
}

TEST(Ehrhart, PolynomialPredictsHigherDilations) {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& [s, t] : testing::ComparablePairs(n)) {
      const HRep h = MakeHRep(LpdmSpec(s, t));
      const oracle::EhrhartTable table = oracle::ComputeEhrhart(h);
      ASSERT_EQ(table.counts.size(), static_cast<std::size_t>(n + 1));
      EXPECT_EQ(table.counts[0], 1);
      for (int d = n + 1; d <= n + 2; ++d) {
        EXPECT_EQ(table.Evaluate(d), Rational(oracle::CountLatticePoints(h, d)));
      }
    }
  }
}

TEST(Ehrhart, AgreesWithTriangulationVolume) {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& [s, t] : testing::ComparablePairs(n)) {
      const LpdmSpec m(s, t);
      EXPECT_EQ(Volume(m), oracle::EhrhartVolume(MakeHRep(m))) << m.ToString();
    }
  }
}

TEST(SimplexVolume, Examples) {
  const std::vector<RationalPoint> standard{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  EXPECT_EQ(oracle::SimplexVolume(standard), Rational(1, 6));
  const std::vector<RationalPoint> doubled{{0, 0, 0}, {2, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  EXPECT_EQ(oracle::SimplexVolume(doubled), Rational(2, 6));
  const std::vector<RationalPoint> flat{{0, 0}, {1, 1}, {2, 2}};
  EXPECT_THROW(oracle::SimplexVolume(flat), DomainError);
}

TEST(AffineRank, Examples) {
  EXPECT_EQ(oracle::AffineRank({{0, 0}, {1, 1}, {2, 2}}), 1);
  EXPECT_EQ(oracle::AffineRank({{0, 0}, {1, 0}, {0, 1}}), 2);
  EXPECT_EQ(oracle::AffineRank({{Rational(1, 2), 3}}), 0);
}

TEST(HullMembership, Examples) {
  const std::vector<RationalPoint> tri{{0, 0}, {1, 0}, {0, 1}};
  EXPECT_TRUE(oracle::HullMembership(tri, tri[1]));
  EXPECT_TRUE(oracle::HullMembership(tri, {Rational(1, 3), Rational(1, 3)}));
  EXPECT_FALSE(oracle::HullMembership(tri, {Rational(2, 3), Rational(2, 3)}));
  EXPECT_THROW(oracle::HullMembership(tri, {0, 0, 0}), ArgumentError);
}

TEST(HullMembership, ZeroOnePointsMatchInterval) {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& [s, t] : testing::ComparablePairs(n)) {
      const LpdmSpec m(s, t);
      const auto vertices = RationalVertexSet(m);
      const SetFamily f = FeasibleSets(m);
      for (const Subset& a : AllSubsets(n)) {
        RationalPoint x(static_cast<std::size_t>(n), Rational(0));
        for (int i : a.members()) x[static_cast<std::size_t>(i - 1)] = 1;
        EXPECT_EQ(oracle::HullMembership(vertices, x), f.Contains(a)) << m.ToString() << " " << a.ToString();
      }
    }
  }
}

TEST(IsEdge, Examples) {
  const std::vector<RationalPoint> segment{{0, 0}, {1, 1}};
  EXPECT_TRUE(oracle::IsEdge(segment, 0, 1));
  const std::vector<RationalPoint> square{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  EXPECT_FALSE(oracle::IsEdge(square, 0, 3));
  EXPECT_TRUE(oracle::IsEdge(square, 0, 1));
}

TEST(ParallelFor, VisitsEveryIndexOnce) {
  std::vector<int> hits(1000, 0);
  ParallelFor(hits.size(), [&](std::size_t i) { hits[i] += 1; });
  EXPECT_EQ(std::count(hits.begin(), hits.end(), 1), 1000);
  EXPECT_GE(ThreadCount(), 1u);
}

}  // namespace
}  // namespace lpdm
