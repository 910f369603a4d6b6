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

#include "lpdm_cli/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <list>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "lpdm/delta_matroid.hpp"
#include "lpdm/error.hpp"
#include "lpdm/lattice_path.hpp"
#include "lpdm/oracle.hpp"
#include "lpdm/order.hpp"
#include "lpdm/polytope.hpp"
#include "lpdm/triangulation.hpp"
#include "lpdm_cli/json_io.hpp"
#include "lpdm_cli/selftest.hpp"

namespace lpdm::cli {
namespace {

using Args = std::vector<std::string>;
using Action = std::function<std::optional<Json>(const Args&)>;

std::string ReadArgument(const std::string& arg) {
  if (arg != "-") return arg;
  return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
}

Json JsonArg(const Args& args, std::size_t i) { return ParseJson(ReadArgument(args.at(i))); }
LpdmSpec SpecArg(const Args& args, std::size_t i) { return SpecFromJson(JsonArg(args, i)); }

Json ErrorJson(const std::string& reason, const std::string& message) {
  Json j;
  j["status"] = "error";
  j["reason"] = reason;
  j["message"] = message;
  return j;
}

// Positional arguments of every leaf command live here so CLI11 can bind to
// stable addresses.
class Registry {
 public:
  Registry(CLI::App& root, Action& chosen, Args*& chosen_args) : root_(root), chosen_(chosen), chosen_args_(chosen_args) {}

  CLI::App* Group(const std::string& name, const std::string& help) {
    CLI::App* g = root_.add_subcommand(name, help);
    g->require_subcommand(1);
    return g;
  }

  CLI::App* Leaf(CLI::App* parent, const std::string& name, const std::string& help,
                 std::vector<std::string> positional, Action action) {
    CLI::App* leaf = parent->add_subcommand(name, help);
    Args& args = storage_.emplace_back();
    std::string names;
    for (const auto& p : positional) names += (names.empty() ? "" : " ") + p;
    if (!positional.empty()) {
      leaf->add_option("args", args, names)->expected(static_cast<int>(positional.size()))
          ->allow_extra_args(false)
          ->required();
    }
    leaf->callback([this, &args, action = std::move(action)] {
      chosen_ = action;
      chosen_args_ = &args;
    });
    return leaf;
  }

 private:
  CLI::App& root_;
  Action& chosen_;
  Args*& chosen_args_;
  std::list<Args> storage_;
};

}  // namespace

CommandResult Run(const std::vector<std::string>& argv) {
  CLI::App app{"Lattice path delta matroids of type C: orders, paths, polytopes, triangulations", "lpdm"};
  app.require_subcommand(1);
  bool envelope = false;
  app.add_flag("--envelope", envelope, "Wrap the payload as {status, payload, timing_ms}");

  Action chosen;
  Args* chosen_args = nullptr;
  Registry r(app, chosen, chosen_args);

  int element = 0;
  int k = 0;
  int t = 1;
  std::string facet;
  std::string svg_path;
  int max_n = 6;
  std::ostringstream text;  // non-JSON output
  int text_exit = kExitOk;

  // order
  CLI::App* order = r.Group("order", "Gale order of type C on subsets of [n]");
  r.Leaf(order, "leq", "Is S <= T? Input {\"n\",\"S\",\"T\"}", {"pair"}, [](const Args& a) -> std::optional<Json> {
    const Json j = JsonArg(a, 0);
    const Subset s = SubsetFromJson(j);
    Json tj = j;
    tj["S"] = j.at("T");
    return Json(GaleLeq(s, SubsetFromJson(tj)));
  });
  r.Leaf(order, "rank", "Sum of the members of S", {"subset"}, [](const Args& a) -> std::optional<Json> {
    return Json(GaleRank(SubsetFromJson(JsonArg(a, 0))));
  });
  r.Leaf(order, "interval", "All A with S <= A <= T, canonical order", {"spec"}, [](const Args& a) -> std::optional<Json> {
    return FamilyToJson(FeasibleSets(SpecArg(a, 0)));
  });
  r.Leaf(order, "chains", "Number of maximal chains from S to T", {"spec"}, [](const Args& a) -> std::optional<Json> {
    const LpdmSpec m = SpecArg(a, 0);
    return CountToJson(CountMaximalChains(m.lower(), m.upper()));
  });
  r.Leaf(order, "covers", "Upper covers of S", {"subset"}, [](const Args& a) -> std::optional<Json> {
    Json out = Json::array();
    for (const Subset& c : CoverSuccessors(SubsetFromJson(JsonArg(a, 0)))) out.push_back(SubsetToJson(c));
    return out;
  });

  // path
  CLI::App* path = r.Group("path", "Symmetric lattice paths");
  r.Leaf(path, "encode", "Path word of a subset {\"n\",\"S\"}", {"subset"}, [](const Args& a) -> std::optional<Json> {
    return Json(PathFromSubset(SubsetFromJson(JsonArg(a, 0))).str());
  });
  r.Leaf(path, "decode", "Subset of a symmetric word over {E,N}", {"word"}, [](const Args& a) -> std::optional<Json> {
    return SubsetToJson(SubsetFromPath(PathWord(ReadArgument(a.at(0)))));
  });
  r.Leaf(path, "leq", "Suffix-count order on words", {"p", "q"}, [](const Args& a) -> std::optional<Json> {
    return Json(PathLeq(PathWord(ReadArgument(a.at(0))), PathWord(ReadArgument(a.at(1)))));
  });

  // matroid
  CLI::App* matroid = r.Group("matroid", "Lattice path delta matroids");
  r.Leaf(matroid, "feasible", "Feasible sets", {"spec"}, [](const Args& a) -> std::optional<Json> {
    return FamilyToJson(FeasibleSets(SpecArg(a, 0)));
  });
  r.Leaf(matroid, "axiom", "Symmetric exchange check on a spec or {\"ground\",\"sets\"}", {"input"},
         [](const Args& a) -> std::optional<Json> {
           const Json j = JsonArg(a, 0);
           const SetFamily f = j.contains("sets") ? FamilyFromJson(j) : FeasibleSets(SpecFromJson(j));
           const ExchangeResult res = VerifyExchange(f);
           Json out;
           out["holds"] = res.holds;
           if (res.witness) {
             out["witness"] = {{"A1", LabelsToJson(f.Labels(res.witness->first))},
                               {"A2", LabelsToJson(f.Labels(res.witness->second))},
                               {"e", f.ground()[static_cast<std::size_t>(res.witness->element - 1)]}};
           }
           return out;
         });
  r.Leaf(matroid, "loops", "Loops and coloops", {"spec"}, [](const Args& a) -> std::optional<Json> {
    const LpdmSpec m = SpecArg(a, 0);
    const ElementClasses c = ClassifyElements(m);
    return Json{{"loops", LabelsToJson(m.Labels(c.loops))}, {"coloops", LabelsToJson(m.Labels(c.coloops))}};
  });
  r.Leaf(matroid, "dual", "Dual matroid", {"spec"}, [](const Args& a) -> std::optional<Json> {
    return SpecToJson(Dual(SpecArg(a, 0)));
  });
  r.Leaf(matroid, "delete", "Deletion of --element", {"spec"}, [&element](const Args& a) -> std::optional<Json> {
    return SpecToJson(Delete(SpecArg(a, 0), element));
  })->add_option("--element,-e", element, "Ground label")->required();
  r.Leaf(matroid, "contract", "Contraction of --element", {"spec"}, [&element](const Args& a) -> std::optional<Json> {
    return SpecToJson(Contract(SpecArg(a, 0), element));
  })->add_option("--element,-e", element, "Ground label")->required();
  r.Leaf(matroid, "sum", "Direct sum, first ground before second", {"spec1", "spec2"},
         [](const Args& a) -> std::optional<Json> { return SpecToJson(DirectSum(SpecArg(a, 0), SpecArg(a, 1))); });
  r.Leaf(matroid, "component", "Homogeneous component of rank --k", {"spec"}, [&k](const Args& a) -> std::optional<Json> {
    const auto comp = HomogeneousComponent(SpecArg(a, 0), k);
    return comp ? TypeASpecToJson(*comp) : Json(nullptr);
  })->add_option("--k,-k", k, "Rank")->required();
  r.Leaf(matroid, "envelope", "Bases of the enveloping matroid on [-n..n]", {"spec"}, [](const Args& a) -> std::optional<Json> {
    const SetFamily e = EnvelopeBases(SpecArg(a, 0));
    Json out = FamilyWithGroundToJson(e);
    out["admissible"] = std::count_if(e.members().begin(), e.members().end(), IsAdmissible);
    return out;
  });
  r.Leaf(matroid, "project", "Projection away from --element", {"spec"}, [&element](const Args& a) -> std::optional<Json> {
    return FamilyWithGroundToJson(ProjectElement(FeasibleSets(SpecArg(a, 0)), element));
  })->add_option("--element,-e", element, "Ground label")->required();

  // polytope
  CLI::App* polytope = r.Group("polytope", "Feasible polytopes");
  r.Leaf(polytope, "hrep", "Suffix-sum bounds a, b", {"spec"}, [](const Args& a) -> std::optional<Json> {
    return HRepToJson(MakeHRep(SpecArg(a, 0)));
  });
  r.Leaf(polytope, "dim", "Dimension", {"spec"}, [](const Args& a) -> std::optional<Json> {
    return Json(Dimension(SpecArg(a, 0)));
  });
  r.Leaf(polytope, "contains", "Membership of a rational point", {"spec", "point"}, [](const Args& a) -> std::optional<Json> {
    return Json(Contains(MakeHRep(SpecArg(a, 0)), PointFromJson(JsonArg(a, 1))));
  });
  r.Leaf(polytope, "intersect", "Intersection of two polytopes (null when empty)", {"spec1", "spec2"},
         [](const Args& a) -> std::optional<Json> {
           const auto m = Intersect(SpecArg(a, 0), SpecArg(a, 1));
           return m ? SpecToJson(*m) : Json(nullptr);
         });
  r.Leaf(polytope, "face", "Face cut out by --facet (x3=0, x3=1, s3=lower, s3=upper)", {"spec"},
         [&facet](const Args& a) -> std::optional<Json> {
           const Facet f = ParseFacet(facet);
           const FaceResult res = Face(SpecArg(a, 0), f);
           Json out;
           out["facet"] = FormatFacet(f);
           out["sets"] = FamilyToJson(res.family);
           out["decomposition"] = res.decomposition
                                      ? Json::array({SpecToJson(res.decomposition->first), SpecToJson(res.decomposition->second)})
                                      : Json(nullptr);
           return out;
         })
      ->add_option("--facet,-f", facet, "Facet descriptor")
      ->required();
  r.Leaf(polytope, "vertices", "0/1 vertices", {"spec"}, [](const Args& a) -> std::optional<Json> {
    return Json(VertexSet(SpecArg(a, 0)));
  });

  // tri
  CLI::App* tri = r.Group("tri", "Triangulations, subdivisions and volume");
  r.Leaf(tri, "simplices", "Unimodular triangulation of Delta[S, S u {n}]", {"spec"}, [](const Args& a) -> std::optional<Json> {
    Json out = Json::array();
    for (const auto& s : TriangulateToric(SpecArg(a, 0))) out.push_back(SimplexToJson(s));
    return out;
  });
  r.Leaf(tri, "label", "Cell label of the simplex of a permutation", {"perm"}, [](const Args& a) -> std::optional<Json> {
    return SubsetToJson(SnakeLabel(PermutationFromJson(JsonArg(a, 0))));
  });
  r.Leaf(tri, "subdivide", "Toric cells of a linked spec", {"spec"}, [](const Args& a) -> std::optional<Json> {
    Json out = Json::array();
    for (const auto& cell : Subdivide(SpecArg(a, 0)).cells) out.push_back(SpecToJson(cell));
    return out;
  });
  r.Leaf(tri, "volume", "Exact volume", {"spec"}, [](const Args& a) -> std::optional<Json> {
    return RationalToJson(Volume(SpecArg(a, 0)));
  });

  // oracle
  CLI::App* orc = r.Group("oracle", "Brute-force ground truth");
  r.Leaf(orc, "volume", "Volume by Ehrhart interpolation", {"spec"}, [](const Args& a) -> std::optional<Json> {
    return RationalToJson(oracle::EhrhartVolume(MakeHRep(SpecArg(a, 0))));
  });
  r.Leaf(orc, "ehrhart", "Counts at t = 0..n and the interpolating polynomial", {"spec"},
         [](const Args& a) -> std::optional<Json> { return EhrhartToJson(oracle::ComputeEhrhart(MakeHRep(SpecArg(a, 0)))); });
  r.Leaf(orc, "count", "Lattice points in the --t dilate", {"spec"}, [&t](const Args& a) -> std::optional<Json> {
    if (t < 0) throw ArgumentError("--t must be non-negative");
    return CountToJson(oracle::CountLatticePoints(MakeHRep(SpecArg(a, 0)), t));
  })->add_option("--t,-t", t, "Dilation factor")->required();
  r.Leaf(orc, "member", "Hull membership by exact LP", {"spec", "point"}, [](const Args& a) -> std::optional<Json> {
    return Json(oracle::HullMembership(RationalVertexSet(SpecArg(a, 0)), PointFromJson(JsonArg(a, 1))));
  });

  // catalan, render, selftest
  r.Leaf(&app, "catalan", "Type C Catalan delta matroid on [2n]", {"n"}, [](const Args& a) -> std::optional<Json> {
    int n = 0;
    try {
      n = std::stoi(a.at(0));
    } catch (const std::exception&) {
      throw ArgumentError("catalan expects an integer n");
    }
    if (n < 1 || 2 * n > kMaxGround) throw ArgumentError("catalan n out of range");
    const LpdmSpec m = CatalanSpec(n);
    return Json{{"spec", SpecToJson(m)}, {"feasible_count", FeasibleSets(m).size()}};
  });
  r.Leaf(&app, "render", "Skew diagram as SVG", {"spec"}, [&svg_path, &text](const Args& a) -> std::optional<Json> {
    const LpdmSpec m = SpecArg(a, 0);
    const std::string svg = RenderSkewDiagramSvg(m);
    if (svg_path.empty()) {
      text << svg;
      return std::nullopt;
    }
    std::ofstream file(svg_path, std::ios::binary);
    if (!(file << svg)) throw ArgumentError("cannot write " + svg_path);
    return Json{{"svg", svg_path}, {"cells", SkewBoxes(m.lower(), m.upper()).cells.size()}};
  })->add_option("--svg", svg_path, "Output file (stdout when omitted)");
  r.Leaf(&app, "selftest", "Acceptance suite; prints a PASS/FAIL table", {}, [&](const Args&) -> std::optional<Json> {
    if (max_n < 0) throw ArgumentError("--max-n must be non-negative");
    SelftestOptions options;
    options.max_n = max_n;
    bool all = true;
    for (const auto& report : RunSelftest(options, &text)) all = all && report.passed;
    text << (all ? "all criteria passed" : "some criteria FAILED") << " (max-n " << max_n << ")\n";
    text_exit = all ? kExitOk : kExitDomain;
    return std::nullopt;
  })->add_option("--max-n", max_n, "Upper bound on n for every exhaustive range");

  CommandResult result;
  try {
    std::vector<std::string> reversed(argv.rbegin(), argv.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    std::ostringstream out;
    std::ostringstream err;
    result.exit_code = app.exit(e, out, err);
    result.out = out.str();
    return result;
  } catch (const CLI::ParseError& e) {
    result.exit_code = kExitUsage;
    result.out = ErrorJson("usage_error", e.what()).dump() + "\n";
    return result;
  }

  const auto start = std::chrono::steady_clock::now();
  std::optional<Json> payload;
  try {
    payload = chosen(*chosen_args);
  } catch (const MalformedInput& e) {
    result.exit_code = kExitUsage;
    result.out = ErrorJson(e.reason(), e.what()).dump() + "\n";
    return result;
  } catch (const ArgumentError& e) {
    result.exit_code = kExitUsage;
    result.out = ErrorJson(e.reason(), e.what()).dump() + "\n";
    return result;
  } catch (const Error& e) {
    result.exit_code = kExitDomain;
    result.out = ErrorJson(e.reason(), e.what()).dump() + "\n";
    return result;
  } catch (const Json::exception& e) {
    result.exit_code = kExitUsage;
    result.out = ErrorJson("malformed_json", e.what()).dump() + "\n";
    return result;
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (!payload) {
    result.out = text.str();
    result.exit_code = text_exit;
    return result;
  }
  if (envelope) {
    Json wrapped;
    wrapped["status"] = "ok";
    wrapped["payload"] = *payload;
    wrapped["timing_ms"] = ms;
    payload = wrapped;
  }
  result.out = payload->dump() + "\n";
  return result;
}

}  // namespace lpdm::cli
