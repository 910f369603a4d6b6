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

#include "lpdm/lattice_path.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "lpdm/error.hpp"
#include "lpdm/order.hpp"

namespace lpdm {

PathWord::PathWord(std::string steps) : steps_(std::move(steps)) {
  const auto east = std::count(steps_.begin(), steps_.end(), 'E');
  const auto north = std::count(steps_.begin(), steps_.end(), 'N');
  if (east + north != static_cast<std::ptrdiff_t>(steps_.size())) {
    throw ArgumentError("path word '" + steps_ + "' has letters other than E and N");
  }
  if (east != north) {
    throw ArgumentError("path word '" + steps_ + "' is not balanced");
  }
}

std::vector<int> PathWord::ColumnHeights() const {
  std::vector<int> heights;
  int north = 0;
  for (char c : steps_) {
    if (c == 'N') {
      ++north;
    } else {
      heights.push_back(north);
    }
  }
  return heights;
}

std::vector<std::pair<int, int>> PathWord::Points() const {
  std::vector<std::pair<int, int>> points{{0, 0}};
  int x = 0;
  int y = 0;
  for (char c : steps_) {
    (c == 'E' ? x : y) += 1;
    points.emplace_back(x, y);
  }
  return points;
}

bool IsSymmetric(const PathWord& p) {
  const int n = p.n();
  for (int i = 0; i < n; ++i) {
    if (p[i] == p[2 * n - 1 - i]) return false;
  }
  return true;
}

Subset SubsetFromPath(const PathWord& p) {
  if (!IsSymmetric(p)) throw DomainError("path '" + p.str() + "' is not symmetric");
  const int n = p.n();
  Subset s(n);
  for (int i = 1; i <= n; ++i) {
    if (p[n + i - 1] == 'E') s = s.with(i);
  }
  return s;
}

PathWord PathFromSubset(const Subset& s) {
  const int n = s.n();
  std::string word(static_cast<std::size_t>(2 * n), 'N');
  for (int i = 1; i <= n; ++i) {
    const char c = s.contains(i) ? 'E' : 'N';
    word[static_cast<std::size_t>(n + i - 1)] = c;
    word[static_cast<std::size_t>(n - i)] = c == 'E' ? 'N' : 'E';
  }
  return PathWord(std::move(word));
}

Subset TypeALabel(const PathWord& p) {
  Subset s(p.length());
  for (int i = 0; i < p.length(); ++i) {
    if (p[i] == 'E') s = s.with(i + 1);
  }
  return s;
}

bool PathLeq(const PathWord& p, const PathWord& q) {
  if (p.length() != q.length()) throw ArgumentError("paths of different lengths");
  int east_p = 0;
  int east_q = 0;
  for (int k = p.length() - 1; k >= 0; --k) {
    east_p += p[k] == 'E';
    east_q += q[k] == 'E';
    if (east_p > east_q) return false;
  }
  return true;
}

int CountUpperIntersections(const PathWord& p, const PathWord& q) {
  if (p.length() != q.length()) throw ArgumentError("paths of different lengths");
  const auto pp = p.Points();
  const auto qp = q.Points();
  int count = 0;
  for (int t = p.n(); t <= p.length(); ++t) {
    if (pp[static_cast<std::size_t>(t)] == qp[static_cast<std::size_t>(t)]) ++count;
  }
  return count;
}

bool SkewBoxSet::Contains(Cell c) const {
  return std::binary_search(cells.begin(), cells.end(), c);
}

bool SkewBoxSet::IsAntidiagonallySymmetric() const {
  return std::all_of(cells.begin(), cells.end(), [&](const Cell& c) {
    return Contains(Cell{n - 1 - c.row, n - 1 - c.column});
  });
}

bool SkewBoxSet::HasTwoByTwoBlock() const {
  return std::any_of(cells.begin(), cells.end(), [&](const Cell& c) {
    return Contains({c.column + 1, c.row}) && Contains({c.column, c.row + 1}) &&
           Contains({c.column + 1, c.row + 1});
  });
}

SkewBoxSet SkewBoxes(const Subset& lower, const Subset& upper) {
  if (!GaleLeq(lower, upper)) {
    throw OrderError(lower.ToString() + " is not below " + upper.ToString() +
                     " in the Gale order");
  }
  const std::vector<int> low = PathFromSubset(lower).ColumnHeights();
  const std::vector<int> high = PathFromSubset(upper).ColumnHeights();
  SkewBoxSet boxes{lower.n(), {}};
  for (int x = 0; x < lower.n(); ++x) {
    for (int y = low[static_cast<std::size_t>(x)]; y < high[static_cast<std::size_t>(x)]; ++y) {
      boxes.cells.push_back({x, y});
    }
  }
  return boxes;
}

bool IsSnake(const Subset& lower, const Subset& upper) {
  return !SkewBoxes(lower, upper).HasTwoByTwoBlock();
}

LpdmSpec CatalanSpec(int n) {
  if (n < 1) throw ArgumentError("Catalan matroid needs n >= 1");
  const int ground = 2 * n;
  Subset upper(ground);
  for (int i = 1; i < ground; i += 2) upper = upper.with(i);
  return LpdmSpec(Subset(ground), upper);
}

std::string RenderSkewDiagramSvg(const LpdmSpec& m) {
  constexpr int kCell = 40;
  constexpr int kMargin = 20;
  const int n = m.n();
  const int size = n * kCell + 2 * kMargin;
  auto px = [&](int x) { return kMargin + x * kCell; };
  auto py = [&](int y) { return kMargin + (n - y) * kCell; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\""
      << size << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n";
  svg << "  <title>" << m.ToString() << "</title>\n";
  svg << "  <rect x=\"" << px(0) << "\" y=\"" << py(n) << "\" width=\"" << n * kCell
      << "\" height=\"" << n * kCell << "\" fill=\"none\" stroke=\"#cccccc\"/>\n";
  for (const Cell& c : SkewBoxes(m.lower(), m.upper()).cells) {
    svg << "  <rect x=\"" << px(c.column) << "\" y=\"" << py(c.row + 1) << "\" width=\""
        << kCell << "\" height=\"" << kCell
        << "\" fill=\"#9fd89f\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
  }
  auto polyline = [&](const PathWord& path, const char* color) {
    svg << "  <polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"3\" points=\"";
    bool first = true;
    for (const auto& [x, y] : path.Points()) {
      if (!first) svg << ' ';
      svg << px(x) << ',' << py(y);
      first = false;
    }
    svg << "\"/>\n";
  };
  polyline(PathFromSubset(m.lower()), "#1f4fbf");
  polyline(PathFromSubset(m.upper()), "#bf1f1f");
  svg << "  <line x1=\"" << px(0) << "\" y1=\"" << py(n) << "\" x2=\"" << px(n) << "\" y2=\""
      << py(0) << "\" stroke=\"#000000\" stroke-width=\"1.5\" stroke-dasharray=\"6,4\"/>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace lpdm
