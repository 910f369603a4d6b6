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

#ifndef LPDM_LATTICE_PATH_HPP_
#define LPDM_LATTICE_PATH_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "lpdm/matroid_spec.hpp"
#include "lpdm/subset.hpp"

// Lattice paths from (0,0) to (n,n) written as words over {E, N}, with E the
// unit step (1,0) and N the unit step (0,1).
//
// A word is n-symmetric when it is invariant under reflection in the line
// y = n - x, i.e. step i and step 2n-i+1 always differ. Labelling the steps
// -n, ..., -1, 1, ..., n and keeping the positive labels of the E steps is a
// bijection between symmetric words and subsets of [n] that turns the
// "weakly below" order on paths into the type C_n Gale order.
namespace lpdm {

class PathWord {
 public:
  PathWord() = default;
  // ArgumentError unless the word is over {E, N} with equally many of each.
  explicit PathWord(std::string steps);

  int n() const { return static_cast<int>(steps_.size() / 2); }
  int length() const { return static_cast<int>(steps_.size()); }
  const std::string& str() const { return steps_; }
  char operator[](int i) const { return steps_[static_cast<std::size_t>(i)]; }

  // Number of N steps taken before the (x+1)-th E step, x in [0, n).
  std::vector<int> ColumnHeights() const;
  // The 2n+1 lattice points visited, starting at (0,0).
  std::vector<std::pair<int, int>> Points() const;

  friend bool operator==(const PathWord&, const PathWord&) = default;

 private:
  std::string steps_;
};

bool IsSymmetric(const PathWord& p);

// lab^L(p) intersected with [n]. DomainError for an asymmetric word.
Subset SubsetFromPath(const PathWord& p);

// Inverse of SubsetFromPath.
PathWord PathFromSubset(const Subset& s);

// Positions (1-based) of the E steps: lab^A(p) as a subset of [2n].
Subset TypeALabel(const PathWord& p);

// p weakly below q: every suffix of p has at most as many E steps as the
// corresponding suffix of q. ArgumentError on a length mismatch.
bool PathLeq(const PathWord& p, const PathWord& q);

// Lattice points shared by the two paths at step index >= n, i.e. weakly
// above the antidiagonal y = n - x. Includes (n, n).
int CountUpperIntersections(const PathWord& p, const PathWord& q);

struct Cell {
  int column = 0;
  int row = 0;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

// Unit cells between the lower path of S and the upper path of T, sorted by
// (column, row).
struct SkewBoxSet {
  int n = 0;
  std::vector<Cell> cells;

  bool Contains(Cell c) const;
  bool IsAntidiagonallySymmetric() const;
  bool HasTwoByTwoBlock() const;
};

// OrderError unless S <= T.
SkewBoxSet SkewBoxes(const Subset& lower, const Subset& upper);

// True iff the skew diagram of [S, T] has no 2x2 block of cells.
bool IsSnake(const Subset& lower, const Subset& upper);

// Type C_n Catalan matroid on [2n]: Delta[{}, {1, 3, ..., 2n-1}]. The upper
// bound is the staircase that starts with an E step, so the feasible sets
// correspond to symmetric Dyck paths and number C(2n, n).
LpdmSpec CatalanSpec(int n);

// Deterministic SVG drawing of the skew diagram of `m`: cells as squares, the
// two bounding paths as polylines and the antidiagonal dashed.
std::string RenderSkewDiagramSvg(const LpdmSpec& m);

}  // namespace lpdm

#endif  // LPDM_LATTICE_PATH_HPP_
