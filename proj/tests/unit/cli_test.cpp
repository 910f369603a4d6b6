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

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "lpdm_cli/cli.hpp"
#include "lpdm_cli/json_io.hpp"

namespace lpdm::cli {
namespace {

Json RunJson(const std::vector<std::string>& args, int expected_exit = kExitOk) {
  const CommandResult r = cli::Run(args);
  EXPECT_EQ(r.exit_code, expected_exit) << r.out;
  return ParseJson(r.out);
}

TEST(Cli, TriVolume) {
  const CommandResult r = cli::Run({"tri", "volume", R"({"n":3,"S":[1],"T":[1,3]})"});
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_EQ(r.out, "\"1/3\"\n");
}

TEST(Cli, CatalanTwo) {
  const Json j = RunJson({"catalan", "2"});
  EXPECT_EQ(j["feasible_count"], 6);
  EXPECT_EQ(j["spec"]["T"], Json::array({1, 3}));
  EXPECT_EQ(j["spec"]["n"], 4);
}

TEST(Cli, OrderChains) {
  EXPECT_EQ(RunJson({"order", "chains", R"({"S":[1,3,5],"T":[1,3,5,6],"n":6})"}), 61);
}

TEST(Cli, OrderQueries) {
  EXPECT_EQ(RunJson({"order", "leq", R"({"n":5,"S":[3,4],"T":[2,3,5]})"}), true);
  EXPECT_EQ(RunJson({"order", "rank", R"({"n":6,"S":[1,3,5]})"}), 9);
  EXPECT_EQ(RunJson({"order", "covers", R"({"n":3,"S":[2]})"}), Json::parse("[[3],[1,2]]"));
  EXPECT_EQ(RunJson({"order", "interval", R"({"n":4,"S":[],"T":[1,3]})"}),
            Json::parse("[[],[1],[2],[3],[1,2],[1,3]]"));
}

TEST(Cli, Paths) {
  EXPECT_EQ(RunJson({"path", "encode", R"({"n":5,"S":[2,3,4]})"}), "ENNNENEEEN");
  EXPECT_EQ(RunJson({"path", "decode", "ENNNENEEEN"}), Json::array({2, 3, 4}));
  EXPECT_EQ(RunJson({"path", "leq", "NENE", "ENEN"}), false);
}

TEST(Cli, MatroidOperations) {
  const std::string m = R"({"n":5,"S":[3,4],"T":[2,3,5]})";
  EXPECT_EQ(RunJson({"matroid", "feasible", m}).size(), 6u);
  EXPECT_EQ(RunJson({"matroid", "loops", m}), Json::parse(R"({"loops":[],"coloops":[3]})"));
  EXPECT_EQ(RunJson({"matroid", "dual", m}), Json::parse(R"({"n":5,"S":[1,4],"T":[1,2,5]})"));
  EXPECT_EQ(RunJson({"matroid", "delete", m, "--element", "5"}),
            Json::parse(R"({"n":4,"S":[3,4],"T":[2,3,4]})"));
  EXPECT_EQ(RunJson({"matroid", "contract", m, "-e", "5"}),
            Json::parse(R"({"n":4,"S":[3],"T":[2,3]})"));
  EXPECT_EQ(RunJson({"matroid", "project", m, "-e", "4"})["sets"],
            Json::parse("[[3],[1,3],[2,3],[3,5],[1,3,5],[2,3,5]]"));
  EXPECT_EQ(RunJson({"matroid", "axiom", m})["holds"], true);
  const Json bad = RunJson({"matroid", "axiom", R"({"ground":[1,2,3],"sets":[[1],[2,3]]})"});
  EXPECT_EQ(bad["holds"], false);
  EXPECT_TRUE(bad.contains("witness"));
}

TEST(Cli, ComponentAndEnvelope) {
  const Json k3 = RunJson({"matroid", "component", R"({"n":6,"S":[1,3,5],"T":[2,4,5,6]})", "--k", "3"});
  EXPECT_EQ(k3["S"], Json::array({1, 3, 5}));
  EXPECT_EQ(k3["T"], Json::array({4, 5, 6}));
  EXPECT_TRUE(RunJson({"matroid", "component", R"({"n":6,"S":[1,3,5],"T":[2,4,5,6]})", "--k", "1"}).is_null());
  const Json e = RunJson({"matroid", "envelope", R"({"n":1,"S":[],"T":[1]})"});
  EXPECT_EQ(e["ground"], Json::array({-1, 1}));
  EXPECT_EQ(e["sets"], Json::parse("[[-1],[1]]"));
}

TEST(Cli, DirectSum) {
  EXPECT_EQ(RunJson({"matroid", "sum", R"({"n":1,"S":[],"T":[1]})", R"({"n":1,"S":[2],"T":[2],"ground":[2]})"}),
            Json::parse(R"({"n":2,"S":[2],"T":[1,2]})"));
  const Json err = RunJson({"matroid", "sum", R"({"n":1,"S":[1],"T":[1]})", R"({"n":1,"S":[],"T":[2],"ground":[2]})"},
                           kExitDomain);
  EXPECT_EQ(err["reason"], "domain_error");
}

TEST(Cli, Polytope) {
  const std::string m = R"({"n":3,"S":[1],"T":[1,3]})";
  EXPECT_EQ(RunJson({"polytope", "hrep", m}), Json::parse(R"({"a":[1,0,0],"b":[2,1,1]})"));
  EXPECT_EQ(RunJson({"polytope", "dim", m}), 3);
  EXPECT_EQ(RunJson({"polytope", "contains", m, R"(["1/2","1/2","0"])"}), true);
  EXPECT_EQ(RunJson({"polytope", "contains", m, "[0,0,0]"}), false);
  EXPECT_EQ(RunJson({"polytope", "vertices", m}).size(), 5u);
  EXPECT_EQ(RunJson({"polytope", "intersect", R"({"n":2,"S":[],"T":[2]})", R"({"n":2,"S":[1],"T":[1,2]})"}),
            Json::parse(R"({"n":2,"S":[1],"T":[2]})"));
  EXPECT_TRUE(RunJson({"polytope", "intersect", R"({"n":2,"S":[1],"T":[1]})", R"({"n":2,"S":[2],"T":[2]})"}).is_null());
  const Json face = RunJson({"polytope", "face", R"({"n":5,"S":[1,3],"T":[2,3,5]})", "--facet", "x3=1"});
  EXPECT_EQ(face["sets"].size(), 9u);
  EXPECT_EQ(face["decomposition"].size(), 2u);
}

TEST(Cli, TriangulationAndOracle) {
  const Json simplices = RunJson({"tri", "simplices", R"({"n":3,"S":[1],"T":[1,3]})"});
  ASSERT_EQ(simplices.size(), 2u);
  EXPECT_EQ(simplices[0]["vertices"].size(), 4u);
  EXPECT_EQ(RunJson({"tri", "label", "[2,3,1]"}), Json::array({2}));
  EXPECT_EQ(RunJson({"tri", "subdivide", R"({"n":2,"S":[],"T":[1,2]})"}).size(), 2u);
  EXPECT_EQ(RunJson({"oracle", "volume", R"({"n":3,"S":[],"T":[1,3]})"}), "1/2");
  EXPECT_EQ(RunJson({"oracle", "count", R"({"n":3,"S":[1],"T":[1,3]})", "--t", "1"}), 5);
  EXPECT_EQ(RunJson({"oracle", "member", R"({"n":2,"S":[1],"T":[1,2]})", R"(["1/3","1/3"])"}), false);
  const Json table = RunJson({"oracle", "ehrhart", R"({"n":2,"S":[],"T":[1,2]})"});
  EXPECT_EQ(table["counts"], Json::array({1, 4, 9}));
  EXPECT_EQ(table["volume"], "1");
}

TEST(Cli, Envelope) {
  const Json j = RunJson({"--envelope", "polytope", "dim", R"({"n":2,"S":[1],"T":[1]})"});
  EXPECT_EQ(j["status"], "ok");
  EXPECT_EQ(j["payload"], 0);
  EXPECT_TRUE(j["timing_ms"].is_number());
}

TEST(Cli, Errors) {
  const Json malformed = RunJson({"polytope", "dim", "{not json"}, kExitUsage);
  EXPECT_EQ(malformed["status"], "error");
  EXPECT_EQ(malformed["reason"], "malformed_json");
  EXPECT_EQ(RunJson({"polytope", "dim", R"({"n":2,"S":[1]})"}, kExitUsage)["reason"], "malformed_json");
  EXPECT_EQ(RunJson({"matroid", "feasible", R"({"n":3,"S":[3],"T":[1,2]})"}, kExitDomain)["reason"], "order_error");
  EXPECT_EQ(RunJson({"matroid", "delete", R"({"n":5,"S":[3,4],"T":[2,3,5]})", "-e", "3"}, kExitDomain)["reason"],
            "domain_error");
  EXPECT_EQ(RunJson({"tri", "subdivide", R"({"n":2,"S":[1],"T":[1]})"}, kExitDomain)["reason"], "domain_error");
  EXPECT_EQ(RunJson({"polytope", "face", R"({"n":2,"S":[],"T":[1]})", "--facet", "z1=0"}, kExitUsage)["reason"],
            "argument_error");
  EXPECT_EQ(RunJson({"nonsense"}, kExitUsage)["reason"], "usage_error");
  EXPECT_EQ(RunJson({"order", "leq"}, kExitUsage)["reason"], "usage_error");
}

TEST(Cli, HelpExitsCleanly) {
  const CommandResult r = cli::Run({"--help"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("selftest"), std::string::npos);
}

TEST(Cli, DeterministicOutput) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"tri", "simplices", R"({"n":4,"S":[1,3],"T":[1,3,4]})"},
        std::vector<std::string>{"matroid", "envelope", R"({"n":3,"S":[1],"T":[2,3]})"},
        std::vector<std::string>{"order", "interval", R"({"n":5,"S":[1,3],"T":[2,3,5]})"}}) {
    EXPECT_EQ(cli::Run(args).out, cli::Run(args).out);
  }
}

TEST(Cli, RenderWritesSvg) {
  const auto file = std::filesystem::temp_directory_path() / "lpdm_cli_test.svg";
  const Json j = RunJson({"render", R"({"n":3,"S":[1],"T":[1,3]})", "--svg", file.string()});
  EXPECT_EQ(j["cells"], 5);
  std::ifstream in(file);
  std::stringstream content;
  content << in.rdbuf();
  EXPECT_NE(content.str().find("<svg"), std::string::npos);
  std::filesystem::remove(file);
}

TEST(Cli, SelftestSmall) {
  const CommandResult r = cli::Run({"selftest", "--max-n", "3"});
  EXPECT_EQ(r.exit_code, kExitOk) << r.out;
  EXPECT_NE(r.out.find("PASS 12"), std::string::npos);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

}  // namespace
}  // namespace lpdm::cli
