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

#include "lpdm/triangulation.hpp"

#include <algorithm>
#include <string>

#include "lpdm/error.hpp"
#include "lpdm/order.hpp"
#include "lpdm/polytope.hpp"

namespace lpdm {
namespace {

BigCount Floor(const Rational& r) {
  const BigCount num = boost::multiprecision::numerator(r);
  const BigCount den = boost::multiprecision::denominator(r);
  BigCount q = num / den;
  if (num < 0 && q * den != num) q -= 1;
  return q;
}

}  // namespace

RationalPoint StanleyPsi(const RationalPoint& x) {
  RationalPoint out;
  out.reserve(x.size());
  Rational prefix = 0;
  for (const Rational& xi : x) {
    prefix += xi;
    out.push_back(prefix - Rational(Floor(prefix)));
  }
  return out;
}

LatticeSimplex PhiSimplex(const Permutation& w) {
  const int n = w.size();
  const Permutation inverse = w.Inverse();
  LatticeSimplex simplex{{}, w};
  simplex.vertices.reserve(static_cast<std::size_t>(n + 1));
  // Vertex k of the order simplex is the indicator of {w(n-k+1), ..., w(n)}.
  for (int k = 0; k <= n; ++k) {
    std::vector<int> x(static_cast<std::size_t>(n), 0);
    for (int j = n - k + 1; j <= n; ++j) x[static_cast<std::size_t>(w(j) - 1)] = 1;
    std::vector<int> y(static_cast<std::size_t>(n), 0);
    y[static_cast<std::size_t>(n - 1)] = x[0];
    for (int i = 1; i < n; ++i) {
      const int wrap = inverse(i + 1) < inverse(i) ? 1 : 0;
      y[static_cast<std::size_t>(n - i - 1)] =
          x[static_cast<std::size_t>(i)] - x[static_cast<std::size_t>(i - 1)] + wrap;
    }
    simplex.vertices.push_back(std::move(y));
  }
  return simplex;
}

Subset SnakeLabel(const Permutation& w) {
  const int n = w.size();
  Subset label(n);
  for (int j : DescentSet(w.Inverse()).members()) label = label.with(n - j);
  return label;
}

bool IsToricInterval(const LpdmSpec& m) {
  const int n = m.n();
  return n >= 1 && !m.lower().contains(n) && m.upper() == m.lower().with(n);
}

std::vector<LatticeSimplex> TriangulateToric(const LpdmSpec& m) {
  if (!IsToricInterval(m)) {
    throw DomainError(m.ToString() + " is not a linked toric interval [S, S u {n}]");
  }
  std::vector<LatticeSimplex> out;
  const int n = m.n();
  Subset mirrored(n);
  for (int s : m.lower().members()) mirrored = mirrored.with(n - s);
  std::vector<Permutation> perms;
  for (const Permutation& u : PermutationsWithDescentSet(mirrored, n)) perms.push_back(u.Inverse());
  std::sort(perms.begin(), perms.end());
  out.reserve(perms.size());
  for (const Permutation& w : perms) out.push_back(PhiSimplex(w));
  return out;
}

Subdivision Subdivide(const LpdmSpec& m) {
  const int n = m.n();
  if (n == 0 || !IsLinked(m)) throw DomainError(m.ToString() + " is not linked");
  const Subset top = m.upper().without(n);
  Subdivision out;
  std::vector<Subset> bottoms;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n - 1)); ++bits) {
    const Subset r = Subset::FromBits(n, bits);
    if (GaleLeq(m.lower(), r) && GaleLeq(r, top)) bottoms.push_back(r);
  }
  SortCanonical(bottoms);
  for (const Subset& r : bottoms) out.cells.emplace_back(r, r.with(n), m.ground());
  return out;
}

Rational Volume(const LpdmSpec& m) {
  if (m.n() == 0) return 1;
  if (!IsLinked(m)) return 0;
  BigCount simplices = 0;
  for (const LpdmSpec& cell : Subdivide(m).cells) {
    simplices += CountPermsWithDescentSet(cell.lower(), m.n());
  }
  return Rational(simplices, Factorial(m.n()));
}

}  // namespace lpdm
