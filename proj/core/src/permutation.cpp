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

#include "lpdm/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "lpdm/error.hpp"

namespace lpdm {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = size();
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) {
      throw ArgumentError("not a permutation of [" + std::to_string(n) + "]");
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::Identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::Inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 1; i <= size(); ++i) inv[static_cast<std::size_t>((*this)(i) - 1)] = i;
  return Permutation(std::move(inv));
}

std::pair<Subset, Subset> DescentAscentSets(const Permutation& w) {
  Subset descents(w.size());
  Subset ascents(w.size());
  for (int i = 1; i < w.size(); ++i) {
    if (w(i) > w(i + 1)) {
      descents = descents.with(i);
    } else {
      ascents = ascents.with(i);
    }
  }
  return {descents, ascents};
}

Subset DescentSet(const Permutation& w) { return DescentAscentSets(w).first; }

std::vector<Permutation> AllPermutations(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

namespace {

void CheckDescentArgument(const Subset& descents, int n) {
  if (n < 0 || n > kMaxGround) throw ArgumentError("bad permutation size " + std::to_string(n));
  for (int m : descents.members()) {
    if (m >= n) {
      throw ArgumentError("descent position " + std::to_string(m) + " outside [" +
                          std::to_string(n - 1) + "]");
    }
  }
}

void ExtendWithDescents(const Subset& descents, int n, std::vector<int>& prefix,
                        std::vector<bool>& used, std::vector<Permutation>& out) {
  const int pos = static_cast<int>(prefix.size());
  if (pos == n) {
    out.emplace_back(prefix);
    return;
  }
  // Position pos+1 is being filled; the relation to position pos is fixed.
  const bool must_descend = pos >= 1 && descents.contains(pos);
  for (int v = 1; v <= n; ++v) {
    if (used[static_cast<std::size_t>(v - 1)]) continue;
    if (pos >= 1) {
      const int prev = prefix.back();
      if (must_descend ? v > prev : v < prev) continue;
    }
    // Prune: the ascending run that starts here must find enough larger
    // unused values, and a descending run enough smaller ones.
    int run_up = 0;
    for (int j = pos + 1; j < n && !descents.contains(j); ++j) ++run_up;
    int run_down = 0;
    for (int j = pos + 1; j < n && descents.contains(j); ++j) ++run_down;
    int larger = 0;
    int smaller = 0;
    for (int u = 1; u <= n; ++u) {
      if (used[static_cast<std::size_t>(u - 1)] || u == v) continue;
      (u > v ? larger : smaller) += 1;
    }
    if (larger < run_up || smaller < run_down) continue;
    used[static_cast<std::size_t>(v - 1)] = true;
    prefix.push_back(v);
    ExtendWithDescents(descents, n, prefix, used, out);
    prefix.pop_back();
    used[static_cast<std::size_t>(v - 1)] = false;
  }
}

}  // namespace

std::vector<Permutation> PermutationsWithDescentSet(const Subset& descents, int n) {
  CheckDescentArgument(descents, n);
  std::vector<Permutation> out;
  std::vector<int> prefix;
  prefix.reserve(static_cast<std::size_t>(n));
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  ExtendWithDescents(descents, n, prefix, used, out);
  return out;
}

BigCount CountPermsWithDescentSet(const Subset& descents, int n) {
  CheckDescentArgument(descents, n);
  const std::vector<int> members = descents.members();
  const std::size_t k = members.size();
  const BigCount n_factorial = Factorial(n);
  BigCount total = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    // Permutations whose descents lie inside U: increasing runs between the
    // cut points of U, counted by a multinomial coefficient.
    BigCount term = n_factorial;
    int previous = 0;
    int dropped = 0;
    for (std::size_t j = 0; j < k; ++j) {
      if ((mask >> j) & 1u) {
        term /= Factorial(members[j] - previous);
        previous = members[j];
      } else {
        ++dropped;
      }
    }
    term /= Factorial(n - previous);
    if (dropped % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

}  // namespace lpdm
