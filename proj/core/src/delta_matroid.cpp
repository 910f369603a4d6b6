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

#include "lpdm/delta_matroid.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_set>

#include "lpdm/error.hpp"
#include "lpdm/lattice_path.hpp"
#include "lpdm/order.hpp"

namespace lpdm {
namespace {

// Removes position `pos` from `s` and shifts the higher positions down.
Subset DropPosition(const Subset& s, int pos) {
  const std::uint64_t below = s.bits() & ((std::uint64_t{1} << (pos - 1)) - 1);
  const std::uint64_t above = s.bits() >> pos;
  return Subset::FromBits(s.n() - 1, below | (above << (pos - 1)));
}

std::vector<int> DropLabel(const std::vector<int>& ground, int pos) {
  std::vector<int> out = ground;
  out.erase(out.begin() + (pos - 1));
  return out;
}

int ProfileAt(const Profile& p, int i) {
  return i >= 1 && i <= static_cast<int>(p.size()) ? p[static_cast<std::size_t>(i - 1)] : 0;
}

}  // namespace

SetFamily FeasibleSets(const LpdmSpec& m) {
  return SetFamily(m.ground(), GaleInterval(m.lower(), m.upper()));
}

ExchangeResult VerifyExchange(const SetFamily& family) {
  if (family.empty()) throw DomainError("exchange axiom needs a nonempty family");
  std::unordered_set<std::uint64_t> feasible;
  for (const Subset& s : family.members()) feasible.insert(s.bits());
  for (const Subset& a : family.members()) {
    for (const Subset& b : family.members()) {
      const std::uint64_t diff = a.bits() ^ b.bits();
      for (std::uint64_t es = diff; es != 0; es &= es - 1) {
        const std::uint64_t e = es & (~es + 1);
        bool repaired = false;
        for (std::uint64_t fs = diff; fs != 0 && !repaired; fs &= fs - 1) {
          const std::uint64_t f = fs & (~fs + 1);
          repaired = feasible.contains(a.bits() ^ (e | f));
        }
        if (!repaired) {
          const int element = std::countr_zero(e) + 1;
          return {false, ExchangeWitness{a, b, element}};
        }
      }
    }
  }
  return {true, std::nullopt};
}

ElementClasses ClassifyElements(const LpdmSpec& m) {
  const Profile a = ProfileOf(m.lower());
  const Profile b = ProfileOf(m.upper());
  ElementClasses out{Subset(m.n()), Subset(m.n())};
  for (int l = 1; l <= m.n(); ++l) {
    const bool tight_above = ProfileAt(a, l + 1) == ProfileAt(b, l + 1);
    if (!tight_above) continue;
    if (m.lower().contains(l) && m.upper().contains(l)) out.coloops = out.coloops.with(l);
    if (!m.lower().contains(l) && !m.upper().contains(l)) out.loops = out.loops.with(l);
  }
  return out;
}

LpdmSpec Dual(const LpdmSpec& m) {
  return LpdmSpec(m.upper().complement(), m.lower().complement(), m.ground());
}

LpdmSpec Delete(const LpdmSpec& m, int label) {
  const int l = m.PositionOf(label);
  if (ClassifyElements(m).coloops.contains(l)) {
    throw DomainError("cannot delete coloop " + std::to_string(label));
  }
  const int n = m.n();
  Subset lower = m.lower();
  if (lower.contains(l)) {
    int up = l + 1;
    while (up <= n && lower.contains(up)) ++up;
    if (up > n) throw DomainError("cannot delete coloop " + std::to_string(label));
    lower = lower.without(l).with(up);
  }
  Subset upper = m.upper();
  if (upper.contains(l)) {
    int down = l - 1;
    while (down >= 1 && upper.contains(down)) --down;
    upper = upper.without(l);
    if (down >= 1) upper = upper.with(down);
  }
  return LpdmSpec(DropPosition(lower, l), DropPosition(upper, l), DropLabel(m.ground(), l));
}

LpdmSpec Contract(const LpdmSpec& m, int label) {
  const int l = m.PositionOf(label);
  if (ClassifyElements(m).loops.contains(l)) {
    throw DomainError("cannot contract loop " + std::to_string(label));
  }
  Subset lower = m.lower();
  if (lower.contains(l)) {
    lower = lower.without(l);
  } else {
    int down = l - 1;
    while (down >= 1 && !lower.contains(down)) --down;
    if (down >= 1) lower = lower.without(down);
  }
  Subset upper = m.upper();
  if (upper.contains(l)) {
    upper = upper.without(l);
  } else {
    int up = l + 1;
    while (up <= m.n() && !upper.contains(up)) ++up;
    if (up > m.n()) throw DomainError("cannot contract loop " + std::to_string(label));
    upper = upper.without(up);
  }
  return LpdmSpec(DropPosition(lower, l), DropPosition(upper, l), DropLabel(m.ground(), l));
}

LpdmSpec DirectSum(const LpdmSpec& m1, const LpdmSpec& m2) {
  std::vector<int> ground = m1.ground();
  for (int label : m2.ground()) {
    if (std::find(m1.ground().begin(), m1.ground().end(), label) != m1.ground().end()) {
      throw ArgumentError("direct sum grounds share label " + std::to_string(label));
    }
    ground.push_back(label);
  }
  const int n = m1.n() + m2.n();
  if (n > kMaxGround) throw ArgumentError("direct sum ground too large");
  // Past the junction the concatenated interval lets mass move from m2 into
  // m1 unless m2 has constant size or m1 is unconstrained.
  const bool m1_free = m1.lower().empty() && m1.upper() == Subset::Full(m1.n());
  if (m2.lower().size() != m2.upper().size() && !m1_free) {
    throw DomainError(m1.ToString() + " + " + m2.ToString() +
                      " is not a lattice path delta matroid in concatenated order");
  }
  const auto join = [&](const Subset& a, const Subset& b) {
    return Subset::FromBits(n, a.bits() | (b.bits() << m1.n()));
  };
  return LpdmSpec(join(m1.lower(), m2.lower()), join(m1.upper(), m2.upper()),
                  std::move(ground));
}

std::optional<TypeALpmSpec> HomogeneousComponent(const LpdmSpec& m, int k) {
  const int n = m.n();
  if (k < 0 || k > n) return std::nullopt;
  const Profile a = ProfileOf(m.lower());
  const Profile b = ProfileOf(m.upper());
  Profile lo(static_cast<std::size_t>(n));
  Profile hi(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const auto idx = static_cast<std::size_t>(i - 1);
    lo[idx] = std::max(a[idx], k - i + 1);
    hi[idx] = std::min(b[idx], k);
    if (lo[idx] > hi[idx]) return std::nullopt;
  }
  if (n > 0 && (lo[0] != k || hi[0] != k)) return std::nullopt;
  return TypeALpmSpec{k, SubsetFromProfile(lo), SubsetFromProfile(hi), m.ground()};
}

SetFamily TypeABases(const TypeALpmSpec& m) {
  std::vector<Subset> bases;
  for (const Subset& s : AllSubsetsOfSize(m.n(), m.k)) {
    if (TypeAGaleLeq(m.lower, s) && TypeAGaleLeq(s, m.upper)) bases.push_back(s);
  }
  return SetFamily(m.ground, std::move(bases));
}

int SignedLabel(int pos, int n) { return pos <= n ? -(n - pos + 1) : pos - n; }

SetFamily EnvelopeBases(const LpdmSpec& m) {
  const int n = m.n();
  if (2 * n > kMaxGround) throw ArgumentError("envelope ground too large");
  const Subset lo = TypeALabel(PathFromSubset(m.lower()));
  const Subset hi = TypeALabel(PathFromSubset(m.upper()));
  std::vector<Subset> bases;
  for (const Subset& s : AllSubsetsOfSize(2 * n, n)) {
    if (TypeAGaleLeq(lo, s) && TypeAGaleLeq(s, hi)) bases.push_back(s);
  }
  std::vector<int> ground;
  for (int pos = 1; pos <= 2 * n; ++pos) ground.push_back(SignedLabel(pos, n));
  return SetFamily(std::move(ground), std::move(bases));
}

bool IsAdmissible(const Subset& b) {
  const int n = b.n() / 2;
  for (int i = 1; i <= n; ++i) {
    if (b.contains(n + i) && b.contains(n - i + 1)) return false;
  }
  return true;
}

RationalPoint EnvelopeProject(const Subset& b) {
  if (b.n() % 2 != 0) throw ArgumentError("envelope subsets live on an even ground");
  const int n = b.n() / 2;
  RationalPoint x;
  x.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const int diff = static_cast<int>(b.contains(n + i)) - static_cast<int>(b.contains(n - i + 1));
    x.emplace_back(diff + 1, 2);
  }
  return x;
}

SetFamily ProjectElement(const SetFamily& family, int label) {
  const auto it = std::find(family.ground().begin(), family.ground().end(), label);
  if (it == family.ground().end()) throw ArgumentError("unknown label " + std::to_string(label));
  const int pos = static_cast<int>(it - family.ground().begin()) + 1;
  std::vector<Subset> members;
  for (const Subset& s : family.members()) members.push_back(DropPosition(s, pos));
  return SetFamily(DropLabel(family.ground(), pos), std::move(members));
}

SetFamily DirectSumFamily(const SetFamily& first, const SetFamily& second) {
  std::vector<int> ground = first.ground();
  ground.insert(ground.end(), second.ground().begin(), second.ground().end());
  const int n = first.n() + second.n();
  if (n > kMaxGround) throw ArgumentError("direct sum ground too large");
  std::vector<Subset> members;
  for (const Subset& a : first.members()) {
    for (const Subset& b : second.members()) {
      members.push_back(Subset::FromBits(n, a.bits() | (b.bits() << first.n())));
    }
  }
  return SetFamily(std::move(ground), std::move(members));
}

}  // namespace lpdm
