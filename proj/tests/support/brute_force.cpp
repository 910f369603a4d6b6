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

#include "support/brute_force.hpp"

#include <algorithm>

#include "lpdm/order.hpp"

namespace lpdm::testing {
namespace {

int Rank(const Subset& s) {
  int r = 0;
  for (int m : s.members()) r += m;
  return r;
}

std::vector<Subset> Everything(int n) {
  std::vector<Subset> out;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) out.push_back(Subset::FromBits(n, b));
  return out;
}

}  // namespace

std::vector<std::pair<Subset, Subset>> ComparablePairs(int n) {
  std::vector<std::pair<Subset, Subset>> out;
  const auto all = Everything(n);
  for (const Subset& s : all) {
    for (const Subset& t : all) {
      if (GaleLeqByMembers(s, t)) out.emplace_back(s, t);
    }
  }
  return out;
}

std::vector<Subset> BruteInterval(const Subset& lower, const Subset& upper) {
  std::vector<Subset> out;
  for (const Subset& a : Everything(lower.n())) {
    if (GaleLeqByMembers(lower, a) && GaleLeqByMembers(a, upper)) out.push_back(a);
  }
  SortCanonical(out);
  return out;
}

std::vector<Subset> BruteCovers(const Subset& s) {
  std::vector<Subset> out;
  for (const Subset& b : Everything(s.n())) {
    if (Rank(b) == Rank(s) + 1 && GaleLeqByMembers(s, b)) out.push_back(b);
  }
  SortCanonical(out);
  return out;
}

long BruteDescentCount(const Subset& descents, int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
  long count = 0;
  do {
    bool match = true;
    for (int i = 1; i < n && match; ++i) {
      const bool descent = w[static_cast<std::size_t>(i - 1)] > w[static_cast<std::size_t>(i)];
      match = descent == descents.contains(i);
    }
    count += match;
  } while (std::next_permutation(w.begin(), w.end()));
  return count;
}

LabelFamily ToLabels(const SetFamily& family) {
  LabelFamily out;
  for (const Subset& s : family.members()) {
    std::vector<int> labels = family.Labels(s);
    std::sort(labels.begin(), labels.end());
    out.insert(labels);
  }
  return out;
}

LabelFamily DefinitionDelete(const SetFamily& family, int label) {
  LabelFamily out;
  for (const auto& f : ToLabels(family)) {
    if (std::find(f.begin(), f.end(), label) == f.end()) out.insert(f);
  }
  return out;
}

LabelFamily DefinitionContract(const SetFamily& family, int label) {
  LabelFamily out;
  for (auto f : ToLabels(family)) {
    const auto it = std::find(f.begin(), f.end(), label);
    if (it == f.end()) continue;
    f.erase(it);
    out.insert(f);
  }
  return out;
}

ScannedClasses ScanElements(const SetFamily& family) {
  ScannedClasses out;
  const LabelFamily sets = ToLabels(family);
  for (int label : family.ground()) {
    bool in_all = true;
    bool in_none = true;
    for (const auto& f : sets) {
      const bool in = std::find(f.begin(), f.end(), label) != f.end();
      in_all = in_all && in;
      in_none = in_none && !in;
    }
    if (in_all) out.coloops.push_back(label);
    if (in_none) out.loops.push_back(label);
  }
  std::sort(out.loops.begin(), out.loops.end());
  std::sort(out.coloops.begin(), out.coloops.end());
  return out;
}

RationalPoint RandomPoint(std::mt19937_64& rng, int n, int max_den, Rational lo, Rational hi) {
  std::uniform_int_distribution<int> den_dist(1, max_den);
  RationalPoint x;
  for (int i = 0; i < n; ++i) {
    const int den = den_dist(rng);
    const Rational span = (hi - lo) * den;
    const long steps = static_cast<long>(boost::multiprecision::numerator(span) /
                                         boost::multiprecision::denominator(span));
    std::uniform_int_distribution<long> num_dist(0, steps);
    x.push_back(lo + Rational(num_dist(rng), den));
  }
  return x;
}

RationalPoint RandomConvexCombination(std::mt19937_64& rng, const std::vector<RationalPoint>& points) {
  std::uniform_int_distribution<int> weight(0, 4);
  std::vector<int> weights(points.size());
  int total = 0;
  for (auto& w : weights) total += (w = weight(rng));
  if (total == 0) {
    weights[0] = 1;
    total = 1;
  }
  RationalPoint x(points[0].size(), Rational(0));
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t k = 0; k < x.size(); ++k) x[k] += Rational(weights[i], total) * points[i][k];
  }
  return x;
}

}  // namespace lpdm::testing
