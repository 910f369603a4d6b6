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

#include "lpdm_cli/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "lpdm/delta_matroid.hpp"
#include "lpdm/error.hpp"
#include "lpdm/lattice_path.hpp"
#include "lpdm/oracle.hpp"
#include "lpdm/order.hpp"
#include "lpdm/polytope.hpp"
#include "lpdm/triangulation.hpp"

namespace lpdm::cli {
namespace {

using Pairs = std::vector<std::pair<Subset, Subset>>;
using LabelSets = std::set<std::vector<int>>;

class Tally {
 public:
  void Expect(bool ok, const std::function<std::string()>& what) {
    ++checks_;
    if (ok) return;
    if (failures_++ == 0) first_ = what();
  }
  void Note(std::string note) { notes_.push_back(std::move(note)); }
  bool passed() const { return failures_ == 0; }

  std::string Detail() const {
    std::ostringstream out;
    out << checks_ << " checks";
    for (const auto& n : notes_) out << "; " << n;
    if (failures_ > 0) out << "; " << failures_ << " failed, first: " << first_;
    return out.str();
  }

 private:
  long checks_ = 0;
  long failures_ = 0;
  std::string first_;
  std::vector<std::string> notes_;
};

// Comparable pairs by the pairwise sorted-member form of the order.
Pairs ComparablePairs(int n) {
  std::vector<Subset> all;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) all.push_back(Subset::FromBits(n, b));
  SortCanonical(all);
  Pairs out;
  for (const Subset& s : all) {
    for (const Subset& t : all) {
      if (GaleLeqByMembers(s, t)) out.emplace_back(s, t);
    }
  }
  return out;
}

Subset S(int n, std::initializer_list<int> members) { return Subset::FromMembers(n, members); }

LabelSets ToLabels(const SetFamily& family) {
  LabelSets out;
  for (const Subset& s : family.members()) {
    auto labels = family.Labels(s);
    std::sort(labels.begin(), labels.end());
    out.insert(labels);
  }
  return out;
}

bool HasLabel(const std::vector<int>& set, int label) {
  return std::find(set.begin(), set.end(), label) != set.end();
}

RationalPoint Indicator(const Subset& s) {
  RationalPoint x(static_cast<std::size_t>(s.n()), Rational(0));
  for (int i : s.members()) x[static_cast<std::size_t>(i - 1)] = 1;
  return x;
}

RationalPoint RandomBoxPoint(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> den(1, 6);
  RationalPoint x;
  for (int i = 0; i < n; ++i) {
    const int q = den(rng);
    std::uniform_int_distribution<int> num(-q / 3, q + q / 3);
    x.emplace_back(num(rng), q);
  }
  return x;
}

RationalPoint RandomCombination(std::mt19937_64& rng, const std::vector<RationalPoint>& vertices) {
  std::uniform_int_distribution<int> weight(0, 5);
  std::vector<int> w(vertices.size());
  int total = 0;
  for (int& x : w) total += (x = weight(rng));
  if (total == 0) w[0] = total = 1;
  RationalPoint x(vertices[0].size(), Rational(0));
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += Rational(w[v], total) * vertices[v][i];
  }
  return x;
}

std::string Str(const LpdmSpec& m) { return m.ToString(); }

Tally ExchangeAxiom(const SelftestOptions& o) {
  Tally t;
  for (int n = 0; n <= std::min(5, o.max_n); ++n) {
    for (const auto& [s, u] : ComparablePairs(n)) {
      const LpdmSpec m(s, u);
      t.Expect(VerifyExchange(FeasibleSets(m)).holds, [&] { return Str(m); });
    }
  }
  return t;
}

Tally PolytopeMatchesHRep(const SelftestOptions& o) {
  Tally t;
  for (int n = 0; n <= std::min(6, o.max_n); ++n) {
    for (const auto& [s, u] : ComparablePairs(n)) {
      const LpdmSpec m(s, u);
      const HRep h = MakeHRep(m);
      for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
        const Subset a = Subset::FromBits(n, b);
        const bool in_interval = GaleLeqByMembers(s, a) && GaleLeqByMembers(a, u);
        t.Expect(Contains(h, Indicator(a)) == in_interval, [&] { return Str(m) + " at " + a.ToString(); });
      }
    }
  }
  std::mt19937_64 rng(o.seed);
  long inside = 0;
  long points = 0;
  for (int n = 1; n <= std::min(4, o.max_n); ++n) {
    for (const auto& [s, u] : ComparablePairs(n)) {
      const LpdmSpec m(s, u);
      const HRep h = MakeHRep(m);
      const auto vertices = RationalVertexSet(m);
      for (int k = 0; k < 200; ++k) {
        RationalPoint x;
        switch (k % 3) {
          case 0: x = RandomCombination(rng, vertices); break;
          case 1: x = RandomBoxPoint(rng, n); break;
          default: {
            // Halfway between a hull point and a random point: lands near facets.
            const RationalPoint a = RandomCombination(rng, vertices);
            const RationalPoint b = RandomBoxPoint(rng, n);
            for (int i = 0; i < n; ++i) {
              const auto idx = static_cast<std::size_t>(i);
              x.push_back((a[idx] + b[idx]) / 2);
            }
          }
        }
        const bool c = Contains(h, x);
        inside += c;
        ++points;
        t.Expect(c == oracle::HullMembership(vertices, x), [&] { return Str(m) + " at a random point"; });
      }
    }
  }
  t.Note(std::to_string(points) + " random points, " + std::to_string(inside) + " inside");
  return t;
}

Tally VolumeIdentity(const SelftestOptions& o) {
  Tally t;
  for (int n = 0; n <= std::min(5, o.max_n); ++n) {
    for (const auto& [s, u] : ComparablePairs(n)) {
      const LpdmSpec m(s, u);
      t.Expect(Volume(m) == oracle::EhrhartVolume(MakeHRep(m)), [&] { return Str(m); });
    }
  }
  if (o.max_n >= 6) {
    Pairs linked;
    for (const auto& p : ComparablePairs(6)) {
      if (IsLinked(LpdmSpec(p.first, p.second))) linked.push_back(p);
    }
    std::mt19937_64 rng(o.seed + 3);
    std::shuffle(linked.begin(), linked.end(), rng);
    linked.resize(std::min<std::size_t>(100, linked.size()));
    for (const auto& [s, u] : linked) {
      const LpdmSpec m(s, u);
      t.Expect(Volume(m) == oracle::EhrhartVolume(MakeHRep(m)), [&] { return Str(m); });
    }
    t.Note(std::to_string(linked.size()) + " random linked pairs at n=6");
  }
  return t;
}

Tally ToricTriangulation(const SelftestOptions& o) {
  Tally t;
  for (int n = 1; n <= std::min(6, o.max_n); ++n) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n - 1)); ++bits) {
      const Subset s = Subset::FromBits(n, bits);
      const LpdmSpec m(s, s.with(n));
      const auto simplices = TriangulateToric(m);
      const BigCount count(simplices.size());
      t.Expect(count == CountPermsWithDescentSet(s, n), [&] { return Str(m) + " simplex count"; });
      t.Expect(count == CountMaximalChains(s, s.with(n)), [&] { return Str(m) + " chain count"; });
      Rational total = 0;
      for (const auto& simplex : simplices) {
        const Rational v = oracle::SimplexVolume(simplex);
        t.Expect(v * Factorial(n) == 1, [&] { return Str(m) + " non-unimodular simplex"; });
        total += v;
      }
      t.Expect(total == oracle::EhrhartVolume(MakeHRep(m)), [&] { return Str(m) + " volume"; });
    }
  }
  if (o.max_n >= 3) {
    t.Expect(Volume(LpdmSpec(S(3, {1}), S(3, {1, 3}))) == Rational(1, 3), [] { return std::string("Delta[1,13]"); });
  }
  if (o.max_n >= 2) {
    t.Expect(Volume(LpdmSpec(S(2, {1}), S(2, {1, 2}))) == Rational(1, 2), [] { return std::string("Delta[1,12]"); });
  }
  return t;
}

Tally CubePartition(const SelftestOptions& o) {
  Tally t;
  for (int n = 1; n <= std::min(6, o.max_n); ++n) {
    Rational sum = 0;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n - 1)); ++bits) {
      sum += Rational(CountPermsWithDescentSet(Subset::FromBits(n, bits), n)) / Rational(Factorial(n));
    }
    t.Expect(sum == 1, [&] { return "beta sum at n=" + std::to_string(n); });
    Rational cells = 0;
    for (const LpdmSpec& cell : Subdivide(LpdmSpec(Subset(n), Subset::Full(n))).cells) cells += Volume(cell);
    t.Expect(cells == 1, [&] { return "cube subdivision at n=" + std::to_string(n); });
  }
  return t;
}

Tally CatalanCounts(const SelftestOptions& o) {
  Tally t;
  for (int n = 1; n <= std::min(5, o.max_n); ++n) {
    const std::size_t count = FeasibleSets(CatalanSpec(n)).size();
    t.Expect(BigCount(count) == Binomial(2 * n, n), [&] { return "n=" + std::to_string(n) + " gives " + std::to_string(count); });
  }
  return t;
}

Tally OperationCoherence(const SelftestOptions& o) {
  Tally t;
  for (int n = 1; n <= std::min(5, o.max_n); ++n) {
    for (const auto& [s, u] : ComparablePairs(n)) {
      const LpdmSpec m(s, u);
      const LabelSets sets = ToLabels(FeasibleSets(m));
      std::vector<int> loops;
      std::vector<int> coloops;
      for (int l = 1; l <= n; ++l) {
        const bool in_all = std::all_of(sets.begin(), sets.end(), [&](const auto& f) { return HasLabel(f, l); });
        const bool in_none = std::none_of(sets.begin(), sets.end(), [&](const auto& f) { return HasLabel(f, l); });
        if (in_all) coloops.push_back(l);
        if (in_none) loops.push_back(l);

        LabelSets deleted;
        LabelSets contracted;
        for (auto f : sets) {
          if (!HasLabel(f, l)) {
            deleted.insert(f);
          } else {
            f.erase(std::find(f.begin(), f.end(), l));
            contracted.insert(f);
          }
        }
        const std::string where = Str(m) + " element " + std::to_string(l);
        if (!in_all) {
          t.Expect(ToLabels(FeasibleSets(Delete(m, l))) == deleted, [&] { return where + " delete"; });
          t.Expect(Dual(Delete(m, l)) == Contract(Dual(m), l), [&] { return where + " duality"; });
        }
        if (!in_none) {
          t.Expect(ToLabels(FeasibleSets(Contract(m, l))) == contracted, [&] { return where + " contract"; });
        }
      }
      const ElementClasses c = ClassifyElements(m);
      t.Expect(c.loops.members() == loops && c.coloops.members() == coloops, [&] { return Str(m) + " classes"; });
    }
  }
  return t;
}

bool ElementwiseLeq(const Subset& a, const Subset& b) {
  const auto x = a.members();
  const auto y = b.members();
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > y[i]) return false;
  }
  return true;
}

Tally HomogeneousComponents(const SelftestOptions& o) {
  Tally t;
  for (int n = 0; n <= std::min(5, o.max_n); ++n) {
    for (const auto& [s, u] : ComparablePairs(n)) {
      const LpdmSpec m(s, u);
      const SetFamily f = FeasibleSets(m);
      for (int k = 0; k <= n; ++k) {
        std::vector<Subset> sized;
        for (const Subset& x : f.members()) {
          if (x.size() == k) sized.push_back(x);
        }
        const auto comp = HomogeneousComponent(m, k);
        const std::string where = Str(m) + " k=" + std::to_string(k);
        if (sized.empty()) {
          t.Expect(!comp.has_value(), [&] { return where + " should be empty"; });
          continue;
        }
        t.Expect(comp.has_value(), [&] { return where + " missing"; });
        if (!comp) continue;
        t.Expect(TypeABases(*comp) == SetFamily(m.ground(), sized), [&] { return where + " bases"; });
        // The size-k slice is itself a type-A interval between its extremes.
        std::vector<Subset> interval;
        for (const Subset& x : AllSubsetsOfSize(n, k)) {
          if (ElementwiseLeq(sized.front(), x) && ElementwiseLeq(x, sized.back())) interval.push_back(x);
        }
        t.Expect(interval == sized, [&] { return where + " not an interval"; });
      }
    }
  }
  if (o.max_n >= 6) {
    const LpdmSpec m(S(6, {1, 3, 5}), S(6, {2, 4, 5, 6}));
    const auto k3 = HomogeneousComponent(m, 3);
    const auto k4 = HomogeneousComponent(m, 4);
    t.Expect(k3 && k3->lower == S(6, {1, 3, 5}) && k3->upper == S(6, {4, 5, 6}), [] { return std::string("M[135,456]"); });
    t.Expect(k4 && k4->lower == S(6, {1, 2, 3, 5}) && k4->upper == S(6, {2, 4, 5, 6}), [] { return std::string("M[1235,2456]"); });
  }
  return t;
}

Tally EnvelopeProjection(const SelftestOptions& o) {
  Tally t;
  for (int n = 0; n <= std::min(4, o.max_n); ++n) {
    for (const auto& [s, u] : ComparablePairs(n)) {
      const LpdmSpec m(s, u);
      const HRep h = MakeHRep(m);
      const SetFamily envelope = EnvelopeBases(m);
      std::vector<Subset> images;
      for (const Subset& b : envelope.members()) {
        const RationalPoint x = EnvelopeProject(b);
        t.Expect(Contains(h, x), [&] { return Str(m) + " basis outside"; });
        if (!IsAdmissible(b)) continue;
        Subset f(n);
        for (int i = 1; i <= n; ++i) {
          if (x[static_cast<std::size_t>(i - 1)] == 1) f = f.with(i);
        }
        images.push_back(f);
      }
      SortCanonical(images);
      t.Expect(images == FeasibleSets(m).members(), [&] { return Str(m) + " admissible image"; });
    }
  }
  return t;
}

GaleChain Chain(int n, std::initializer_list<std::initializer_list<int>> steps) {
  GaleChain c;
  for (auto step : steps) c.steps.push_back(Subset::FromMembers(n, step));
  return c;
}

Tally ChainBijection(const SelftestOptions& o) {
  Tally t;
  const GaleChain forward = Chain(6, {{1, 3, 5}, {1, 3, 6}, {2, 3, 6}, {1, 2, 3, 6}, {1, 2, 4, 6}, {1, 3, 4, 6}, {1, 3, 5, 6}});
  t.Expect(ChainToPermutation(forward) == Permutation{3, 2, 5, 4, 6, 1}, [] { return std::string("forward example"); });
  const GaleChain backward = Chain(6, {{1, 3, 5}, {1, 4, 5}, {1, 4, 6}, {2, 4, 6}, {2, 5, 6}, {1, 2, 5, 6}, {1, 3, 5, 6}});
  t.Expect(PermutationToChain(Permutation{5, 3, 6, 1, 4, 2}, S(6, {1, 3, 5})) == backward,
           [] { return std::string("backward example"); });
  for (int n = 1; n <= std::min(5, o.max_n); ++n) {
    for (const Permutation& w : AllPermutations(n)) {
      const GaleChain c = PermutationToChain(w, DescentSet(w));
      t.Expect(IsSaturatedChain(c) && ChainToPermutation(c) == w, [&] { return "permutation round trip, n=" + std::to_string(n); });
    }
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n - 1)); ++bits) {
      const Subset s = Subset::FromBits(n, bits);
      for (const GaleChain& c : MaximalChains(s, s.with(n))) {
        t.Expect(PermutationToChain(ChainToPermutation(c), s) == c, [&] { return "chain round trip, S=" + s.ToString(); });
      }
    }
  }
  return t;
}

Tally EdgeDirections(const SelftestOptions& o) {
  Tally t;
  long edges = 0;
  for (int n = 1; n <= std::min(4, o.max_n); ++n) {
    for (const auto& [s, u] : ComparablePairs(n)) {
      const LpdmSpec m(s, u);
      const auto vertices = RationalVertexSet(m);
      for (std::size_t a = 0; a < vertices.size(); ++a) {
        for (std::size_t b = a + 1; b < vertices.size(); ++b) {
          if (!oracle::IsEdge(vertices, a, b)) continue;
          ++edges;
          int plus = 0;
          int minus = 0;
          for (std::size_t i = 0; i < vertices[a].size(); ++i) {
            const Rational d = vertices[b][i] - vertices[a][i];
            plus += d == 1;
            minus += d == -1;
          }
          const bool root = plus + minus == 1 || (plus == 1 && minus == 1);
          t.Expect(root, [&] { return Str(m) + " edge outside the type C roots"; });
        }
      }
    }
  }
  t.Note(std::to_string(edges) + " certified edges");
  return t;
}

Tally CorrectedExamples(const SelftestOptions&) {
  Tally t;
  const SetFamily small = FeasibleSets(LpdmSpec(S(5, {3, 4}), S(5, {2, 3, 5})));
  t.Expect(small.size() == 6, [] { return std::string("Delta[34,235] has 6 feasible sets"); });
  for (const Subset& bad : {S(5, {4, 5}), S(5, {1, 4, 5}), S(5, {2, 4, 5})}) {
    t.Expect(!small.Contains(bad), [&] { return bad.ToString() + " must not be feasible in Delta[34,235]"; });
  }
  const LpdmSpec example(S(5, {1, 3}), S(5, {2, 3, 5}));
  const SetFamily full = FeasibleSets(example);
  t.Expect(full.size() == 15 && full.Contains(S(5, {2, 3, 5})), [] { return std::string("Delta[13,235] has 15 sets including 235"); });
  t.Expect(Face(example, Facet{FacetKind::kCoordinateOne, 3}).family.size() == 9,
           [] { return std::string("x3=1 face of Delta[13,235] has 9 sets"); });
  // Simplex labels: the identity of [2] sits in the empty cell although its
  // ascent set is {1}; 132 has descent set {2} but sits in the cell of {1}.
  t.Expect(SnakeLabel(Permutation{1, 2}) == S(2, {}), [] { return std::string("label of 12"); });
  t.Expect(SnakeLabel(Permutation{1, 3, 2}) == S(3, {1}), [] { return std::string("label of 132"); });
  const HRep one = MakeHRep(LpdmSpec(S(3, {1}), S(3, {1, 3})));
  for (const auto& v : PhiSimplex(Permutation{1, 3, 2}).vertices) {
    t.Expect(Contains(one, v), [] { return std::string("phi(132) inside Delta[1,13]"); });
  }
  return t;
}

struct Criterion {
  const char* name;
  Tally (*run)(const SelftestOptions&);
};

const Criterion kCriteria[kCriterionCount] = {
    {"exchange axiom on every interval", ExchangeAxiom},
    {"polytope equals its H-description", PolytopeMatchesHRep},
    {"triangulation volume equals Ehrhart volume", VolumeIdentity},
    {"toric triangulation counts and unimodularity", ToricTriangulation},
    {"cube partition by descent classes", CubePartition},
    {"Catalan central binomial counts", CatalanCounts},
    {"deletion, contraction, duality, loops", OperationCoherence},
    {"homogeneous components are type-A intervals", HomogeneousComponents},
    {"envelope projects onto the polytope", EnvelopeProjection},
    {"chain and permutation bijection", ChainBijection},
    {"edge directions are type C roots", EdgeDirections},
    {"corrected example values", CorrectedExamples},
};

}  // namespace

CriterionReport RunCriterion(int id, const SelftestOptions& options) {
  if (id < 1 || id > kCriterionCount) throw ArgumentError("no criterion " + std::to_string(id));
  const Criterion& c = kCriteria[id - 1];
  CriterionReport report;
  report.id = id;
  report.name = c.name;
  const auto start = std::chrono::steady_clock::now();
  try {
    const Tally t = c.run(options);
    report.passed = t.passed();
    report.detail = t.Detail();
  } catch (const std::exception& e) {
    report.passed = false;
    report.detail = std::string("exception: ") + e.what();
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<CriterionReport> RunSelftest(const SelftestOptions& options, std::ostream* table) {
  std::vector<CriterionReport> out;
  for (int id = 1; id <= kCriterionCount; ++id) {
    out.push_back(RunCriterion(id, options));
    if (table) *table << FormatReport(out.back()) << '\n' << std::flush;
  }
  return out;
}

std::string FormatReport(const CriterionReport& r) {
  char head[96];
  std::snprintf(head, sizeof head, "%s %2d  %-46s %8.2fs  ", r.passed ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.seconds);
  return head + r.detail;
}

}  // namespace lpdm::cli
