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

#include "lpdm/oracle.hpp"

#include <algorithm>
#include <string>

#include "lpdm/error.hpp"

namespace lpdm::oracle {

BigCount CountLatticePoints(const HRep& h, int t) {
  if (t < 0) throw ArgumentError("dilation must be non-negative");
  const int n = h.n;
  const std::size_t width = static_cast<std::size_t>(n) * static_cast<std::size_t>(t) + 1;
  // ways[s]: choices of x_i..x_n with suffix sum s satisfying all bounds so far.
  std::vector<BigCount> ways(width, 0);
  ways[0] = 1;
  for (int i = n; i >= 1; --i) {
    const auto idx = static_cast<std::size_t>(i - 1);
    const long lo = static_cast<long>(t) * h.lower[idx];
    const long hi = static_cast<long>(t) * h.upper[idx];
    std::vector<BigCount> next(width, 0);
    for (std::size_t s = 0; s < width; ++s) {
      if (ways[s] == 0) continue;
      for (int v = 0; v <= t; ++v) {
        const std::size_t total = s + static_cast<std::size_t>(v);
        if (total >= width) break;
        if (static_cast<long>(total) < lo || static_cast<long>(total) > hi) continue;
        next[total] += ways[s];
      }
    }
    ways = std::move(next);
  }
  BigCount count = 0;
  for (const BigCount& w : ways) count += w;
  return count;
}

Rational EhrhartTable::Evaluate(int t) const {
  Rational value = 0;
  Rational power = 1;
  for (const Rational& c : coefficients) {
    value += c * power;
    power *= t;
  }
  return value;
}

EhrhartTable ComputeEhrhart(const HRep& h) {
  const int n = h.n;
  EhrhartTable table;
  for (int t = 0; t <= n; ++t) table.counts.push_back(CountLatticePoints(h, t));

  // Newton form on the falling-factorial basis: f(t) = sum_k D^k f(0) C(t, k).
  std::vector<BigCount> diffs = table.counts;
  std::vector<BigCount> leading;
  for (int k = 0; k <= n; ++k) {
    leading.push_back(diffs[0]);
    for (std::size_t j = 0; j + 1 < diffs.size(); ++j) diffs[j] = diffs[j + 1] - diffs[j];
    diffs.pop_back();
  }

  table.coefficients.assign(static_cast<std::size_t>(n + 1), Rational(0));
  std::vector<Rational> falling{Rational(1)};  // t (t-1) ... (t-k+1), low degree first
  for (int k = 0; k <= n; ++k) {
    const Rational scale = Rational(leading[static_cast<std::size_t>(k)], Factorial(k));
    for (std::size_t d = 0; d < falling.size(); ++d) table.coefficients[d] += scale * falling[d];
    std::vector<Rational> grown(falling.size() + 1, Rational(0));
    for (std::size_t d = 0; d < falling.size(); ++d) {
      grown[d + 1] += falling[d];
      grown[d] -= falling[d] * k;
    }
    falling = std::move(grown);
  }
  return table;
}

Rational EhrhartVolume(const HRep& h) { return ComputeEhrhart(h).Volume(); }

namespace {

// Row-reduces `rows` in place; returns the rank and the determinant of the
// leading square block when the matrix is square.
int Eliminate(std::vector<RationalPoint>& rows, Rational* determinant) {
  const std::size_t m = rows.size();
  const std::size_t cols = m == 0 ? 0 : rows[0].size();
  Rational det = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m; ++c) {
    std::size_t pivot = rank;
    while (pivot < m && rows[pivot][c] == 0) ++pivot;
    if (pivot == m) {
      det = 0;
      continue;
    }
    if (pivot != rank) {
      std::swap(rows[pivot], rows[rank]);
      det = -det;
    }
    det *= rows[rank][c];
    for (std::size_t r = rank + 1; r < m; ++r) {
      if (rows[r][c] == 0) continue;
      const Rational factor = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= factor * rows[rank][k];
    }
    ++rank;
  }
  if (determinant) *determinant = rank == m && m == cols ? det : Rational(0);
  return static_cast<int>(rank);
}

}  // namespace

Rational SimplexVolume(const std::vector<RationalPoint>& vertices) {
  if (vertices.empty()) throw DomainError("simplex without vertices");
  const std::size_t n = vertices[0].size();
  if (vertices.size() != n + 1) {
    throw DomainError("a simplex in dimension " + std::to_string(n) + " needs " +
                      std::to_string(n + 1) + " vertices");
  }
  std::vector<RationalPoint> edges;
  for (std::size_t i = 1; i <= n; ++i) {
    RationalPoint e(n);
    for (std::size_t k = 0; k < n; ++k) e[k] = vertices[i][k] - vertices[0][k];
    edges.push_back(std::move(e));
  }
  Rational det = 1;
  if (n > 0) Eliminate(edges, &det);
  if (det == 0) throw DomainError("degenerate simplex");
  return abs(det) / Rational(Factorial(static_cast<int>(n)));
}

Rational SimplexVolume(const LatticeSimplex& s) {
  std::vector<RationalPoint> vertices;
  for (const auto& v : s.vertices) vertices.push_back(ToRational(v));
  return SimplexVolume(vertices);
}

int AffineRank(const std::vector<RationalPoint>& points) {
  if (points.empty()) return -1;
  std::vector<RationalPoint> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    RationalPoint d(points[i].size());
    for (std::size_t k = 0; k < d.size(); ++k) d[k] = points[i][k] - points[0][k];
    diffs.push_back(std::move(d));
  }
  return Eliminate(diffs, nullptr);
}

bool HullMembership(const std::vector<RationalPoint>& vertices, const RationalPoint& x) {
  if (vertices.empty()) throw ArgumentError("hull of an empty point set");
  const std::size_t n = x.size();
  for (const auto& v : vertices) {
    if (v.size() != n) throw ArgumentError("point dimensions disagree");
  }
  const std::size_t vars = vertices.size();
  const std::size_t rows = n + 1;
  const std::size_t cols = vars + rows;  // lambdas, then one artificial per row

  // Tableau rows [A | I | b] with b >= 0, artificials basic.
  std::vector<RationalPoint> tab(rows, RationalPoint(cols + 1, Rational(0)));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t j = 0; j < vars; ++j) tab[r][j] = r < n ? vertices[j][r] : Rational(1);
    tab[r][cols] = r < n ? x[r] : Rational(1);
    if (tab[r][cols] < 0) {
      for (std::size_t j = 0; j < vars; ++j) tab[r][j] = -tab[r][j];
      tab[r][cols] = -tab[r][cols];
    }
    tab[r][vars + r] = 1;
  }
  std::vector<std::size_t> basis(rows);
  for (std::size_t r = 0; r < rows; ++r) basis[r] = vars + r;

  // Reduced costs of min sum(artificials); last entry is -objective.
  RationalPoint cost(cols + 1, Rational(0));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t j = 0; j < vars; ++j) cost[j] -= tab[r][j];
    cost[cols] -= tab[r][cols];
  }

  while (true) {
    std::size_t entering = cols;
    for (std::size_t j = 0; j < cols; ++j) {
      if (cost[j] < 0) {
        entering = j;
        break;
      }
    }
    if (entering == cols) break;

    std::size_t leaving = rows;
    Rational best_ratio;
    for (std::size_t r = 0; r < rows; ++r) {
      if (tab[r][entering] <= 0) continue;
      const Rational ratio = tab[r][cols] / tab[r][entering];
      if (leaving == rows || ratio < best_ratio ||
          (ratio == best_ratio && basis[r] < basis[leaving])) {
        leaving = r;
        best_ratio = ratio;
      }
    }
    // Phase one is bounded below by zero, so an entering column always has a
    // positive entry.
    if (leaving == rows) break;

    const Rational pivot = tab[leaving][entering];
    for (auto& entry : tab[leaving]) entry /= pivot;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == leaving || tab[r][entering] == 0) continue;
      const Rational factor = tab[r][entering];
      for (std::size_t k = 0; k <= cols; ++k) tab[r][k] -= factor * tab[leaving][k];
    }
    const Rational factor = cost[entering];
    for (std::size_t k = 0; k <= cols; ++k) cost[k] -= factor * tab[leaving][k];
    basis[leaving] = entering;
  }
  return cost[cols] == 0;
}

bool IsEdge(const std::vector<RationalPoint>& vertices, std::size_t u, std::size_t v) {
  if (u == v || u >= vertices.size() || v >= vertices.size()) {
    throw ArgumentError("edge endpoints must be two distinct vertices");
  }
  std::vector<RationalPoint> others;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i != u && i != v) others.push_back(vertices[i]);
  }
  if (others.empty()) return true;
  RationalPoint midpoint(vertices[u].size());
  for (std::size_t k = 0; k < midpoint.size(); ++k) {
    midpoint[k] = (vertices[u][k] + vertices[v][k]) / 2;
  }
  return !HullMembership(others, midpoint);
}

}  // namespace lpdm::oracle
