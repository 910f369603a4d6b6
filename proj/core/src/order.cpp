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

#include "lpdm/order.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "lpdm/error.hpp"

namespace lpdm {
namespace {

void CheckSameGround(const Subset& a, const Subset& b) {
  if (a.n() != b.n()) {
    throw ArgumentError("subsets live on different grounds [" + std::to_string(a.n()) +
                        "] and [" + std::to_string(b.n()) + "]");
  }
}

void CheckOrdered(const Subset& lower, const Subset& upper) {
  if (!GaleLeq(lower, upper)) {
    throw OrderError(lower.ToString() + " is not below " + upper.ToString() +
                     " in the Gale order");
  }
}

// Enumerates subsets by choosing membership of n, n-1, ..., 1 while keeping
// the running suffix count inside [lower_i, upper_i].
void EnumerateProfiles(const Profile& lower, const Profile& upper, int i, int suffix,
                       std::uint64_t bits, int n, std::vector<Subset>& out) {
  if (i == 0) {
    out.push_back(Subset::FromBits(n, bits));
    return;
  }
  const auto idx = static_cast<std::size_t>(i - 1);
  for (int take = 0; take <= 1; ++take) {
    const int count = suffix + take;
    if (count < lower[idx] || count > upper[idx]) continue;
    const std::uint64_t next = take ? bits | (std::uint64_t{1} << (i - 1)) : bits;
    EnumerateProfiles(lower, upper, i - 1, count, next, n, out);
  }
}

}  // namespace

Profile ProfileOf(const Subset& s) {
  Profile p(static_cast<std::size_t>(s.n()), 0);
  int running = 0;
  for (int i = s.n(); i >= 1; --i) {
    if (s.contains(i)) ++running;
    p[static_cast<std::size_t>(i - 1)] = running;
  }
  return p;
}

bool IsValidProfile(const Profile& profile) {
  int next = 0;
  for (auto it = profile.rbegin(); it != profile.rend(); ++it) {
    const int step = *it - next;
    if (step != 0 && step != 1) return false;
    next = *it;
  }
  return true;
}

Subset SubsetFromProfile(const Profile& profile) {
  if (!IsValidProfile(profile)) throw ArgumentError("invalid profile");
  const int n = static_cast<int>(profile.size());
  Subset s(n);
  for (int i = 1; i <= n; ++i) {
    const int here = profile[static_cast<std::size_t>(i - 1)];
    const int after = i < n ? profile[static_cast<std::size_t>(i)] : 0;
    if (here != after) s = s.with(i);
  }
  return s;
}

bool GaleLeq(const Subset& a, const Subset& b) {
  CheckSameGround(a, b);
  int count_a = 0;
  int count_b = 0;
  for (int i = a.n(); i >= 1; --i) {
    count_a += a.contains(i);
    count_b += b.contains(i);
    if (count_a > count_b) return false;
  }
  return true;
}

bool GaleLeqByMembers(const Subset& a, const Subset& b) {
  CheckSameGround(a, b);
  const std::vector<int> am = a.members();
  const std::vector<int> bm = b.members();
  const std::size_t j = am.size();
  const std::size_t k = bm.size();
  if (j > k) return false;
  for (std::size_t i = 1; i <= j; ++i) {
    if (am[j - i] > bm[k - i]) return false;
  }
  return true;
}

int GaleRank(const Subset& s) {
  int rank = 0;
  for (int m : s.members()) rank += m;
  return rank;
}

std::vector<Subset> GaleInterval(const Subset& lower, const Subset& upper) {
  CheckSameGround(lower, upper);
  CheckOrdered(lower, upper);
  std::vector<Subset> out;
  EnumerateProfiles(ProfileOf(lower), ProfileOf(upper), lower.n(), 0, 0, lower.n(), out);
  SortCanonical(out);
  return out;
}

std::vector<Subset> CoverSuccessors(const Subset& s) {
  std::vector<Subset> out;
  for (int i = 1; i < s.n(); ++i) {
    if (s.contains(i) && !s.contains(i + 1)) out.push_back(s.without(i).with(i + 1));
  }
  if (s.n() >= 1 && !s.contains(1)) out.push_back(s.with(1));
  SortCanonical(out);
  return out;
}

BigCount CountMaximalChains(const Subset& lower, const Subset& upper) {
  std::vector<Subset> elements = GaleInterval(lower, upper);
  std::stable_sort(elements.begin(), elements.end(), [](const Subset& a, const Subset& b) {
    return GaleRank(a) < GaleRank(b);
  });
  std::unordered_map<std::uint64_t, BigCount> chains;
  chains[lower.bits()] = 1;
  for (const Subset& a : elements) {
    const auto it = chains.find(a.bits());
    if (it == chains.end()) continue;
    const BigCount here = it->second;
    for (const Subset& b : CoverSuccessors(a)) {
      if (GaleLeq(b, upper)) chains[b.bits()] += here;
    }
  }
  return chains[upper.bits()];
}

bool IsSaturatedChain(const GaleChain& chain) {
  for (std::size_t k = 1; k < chain.steps.size(); ++k) {
    const Subset& a = chain.steps[k - 1];
    const Subset& b = chain.steps[k];
    if (a.n() != b.n() || GaleRank(b) != GaleRank(a) + 1 || !GaleLeq(a, b)) return false;
  }
  return true;
}

namespace {

void ExtendChains(const Subset& upper, GaleChain& current, std::vector<GaleChain>& out) {
  const Subset& top = current.steps.back();
  if (top == upper) {
    out.push_back(current);
    return;
  }
  for (const Subset& next : CoverSuccessors(top)) {
    if (!GaleLeq(next, upper)) continue;
    current.steps.push_back(next);
    ExtendChains(upper, current, out);
    current.steps.pop_back();
  }
}

}  // namespace

std::vector<GaleChain> MaximalChains(const Subset& lower, const Subset& upper) {
  CheckSameGround(lower, upper);
  CheckOrdered(lower, upper);
  std::vector<GaleChain> out;
  GaleChain current{{lower}};
  ExtendChains(upper, current, out);
  return out;
}

Permutation ChainToPermutation(const GaleChain& chain) {
  if (chain.steps.empty()) throw DomainError("empty chain");
  const int n = chain.steps.front().n();
  const Subset& bottom = chain.steps.front();
  if (static_cast<int>(chain.steps.size()) != n + 1 || bottom.contains(n) ||
      chain.steps.back() != bottom.with(n) || !IsSaturatedChain(chain)) {
    throw DomainError("not a maximal chain of a toric interval [S, S u {n}]");
  }
  std::vector<int> images(static_cast<std::size_t>(n), 0);
  for (int k = 1; k <= n; ++k) {
    const Subset& before = chain.steps[static_cast<std::size_t>(k - 1)];
    const Subset& after = chain.steps[static_cast<std::size_t>(k)];
    int moved_to = 0;
    if (after == before.with(1) && !before.contains(1)) {
      moved_to = 1;
    } else {
      for (int i = 1; i < n; ++i) {
        if (before.contains(i) && !before.contains(i + 1) &&
            after == before.without(i).with(i + 1)) {
          moved_to = i + 1;
          break;
        }
      }
    }
    if (moved_to == 0 || images[static_cast<std::size_t>(moved_to - 1)] != 0) {
      throw DomainError("chain step " + std::to_string(k) + " is not a toric move");
    }
    images[static_cast<std::size_t>(moved_to - 1)] = k;
  }
  return Permutation(std::move(images));
}

GaleChain PermutationToChain(const Permutation& w, const Subset& descents) {
  const int n = w.size();
  if (descents.n() != n) {
    throw ArgumentError("descent set must live on [" + std::to_string(n) + "]");
  }
  if (DescentSet(w) != descents) {
    throw DomainError("permutation does not have descent set " + descents.ToString());
  }
  const Permutation inverse = w.Inverse();
  GaleChain chain{{descents}};
  Subset current = descents;
  for (int k = 1; k <= n; ++k) {
    const int target = inverse(k);
    current = target == 1 ? current.with(1) : current.without(target - 1).with(target);
    chain.steps.push_back(current);
  }
  return chain;
}

}  // namespace lpdm
