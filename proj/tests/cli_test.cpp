// Copyright 2026 The blvl Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.


#include "blvl/cli.hpp"
#include "blvl/model.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

namespace blvl {
namespace {

using testing::data_path;
using testing::read_text;

struct CliRun {
  int code;
  std::string out, err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "blvl");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp(const std::string& name) {
  return (std::filesystem::path(::testing::TempDir()) / ("blvl_cli_" + name)).string();
}

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

TEST(Cli, SolveOracle) {
  const CliRun r = run({"solve", "--method", "oracle", "-i", data_path("example2.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const BilevelSolution sol = parse_solution(r.out);
  EXPECT_EQ(sol.x(0), rat(3, 7));
  EXPECT_EQ(sol.y(0), rat(6, 7));
  EXPECT_EQ(sol.objective, rat(39, 7));
}

TEST(Cli, SolvePenaltyAuto) {
  const CliRun r = run({"solve", "--method", "penalty", "--kappa", "auto", "-i", data_path("example2.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const BilevelSolution sol = parse_solution(r.out);
  EXPECT_EQ(sol.objective, rat(39, 7));
  EXPECT_EQ(sol.kappa, rat(1));
  EXPECT_EQ(sol.epsilon, rat(0));
}

TEST(Cli, MethodsAgree) {
  for (const char* file : {"example2.json", "example2_negated.json", "example2_uncoupled.json"}) {
    std::vector<Rat> values;
    for (const char* method : {"oracle", "kkt", "penalty"})
      values.push_back(parse_solution(run({"solve", "--method", method, "-i", data_path(file)}).out).objective);
    EXPECT_EQ(values[0], values[1]) << file;
    EXPECT_EQ(values[0], values[2]) << file;
  }
}

TEST(Cli, InfeasibleExitCode) {
  for (const char* method : {"oracle", "kkt", "penalty"})
    EXPECT_EQ(run({"solve", "--method", method, "-i", data_path("infeasible.json")}).code, kExitInfeasible);
}

TEST(Cli, BoundednessExitCode) {
  BilevelInstance inst = testing::load("example2_uncoupled.json");
  inst.C = inst.C.topRows(1).eval();
  inst.D = inst.D.topRows(1).eval();
  inst.b = inst.b.head(1).eval();
  const std::string path = temp("open.json");
  write(path, serialize_instance(inst));
  EXPECT_EQ(run({"solve", "-i", path}).code, kExitUnboundedPolyhedron);
  EXPECT_EQ(run({"transform", "--stage", "milp", "-i", path}).code, kExitUnboundedPolyhedron);
}

TEST(Cli, UnboundedExitCode) {
  // min -x over x >= 0 with follower min y over 0 <= y <= 1: x runs off.
  BilevelInstance inst = BilevelInstance::zeros(1, 1, 1, 0, 2);
  inst.c(0) = -1;
  inst.G(0, 0) = 1;
  inst.D(0, 0) = 1;
  inst.D(1, 0) = -1;
  inst.b(1) = -1;
  inst.f(0) = 1;
  const std::string path = temp("unbounded.json");
  write(path, serialize_instance(inst));
  for (const char* method : {"oracle", "kkt", "penalty"})
    EXPECT_EQ(run({"solve", "--method", method, "-i", path}).code, kExitUnbounded) << method;
}

TEST(Cli, TransformStages) {
  const std::string out = temp("lift.json");
  ASSERT_EQ(run({"transform", "--stage", "lift", "-i", data_path("example2.json"), "-o", out}).code, kExitOk);
  const BilevelInstance lifted = parse_instance(read_text(out));
  EXPECT_EQ(lifted.l(), 6);
  EXPECT_EQ(lifted.m, 2);

  const CliRun penalty = run({"transform", "--stage", "penalty", "--kappa", "1", "-i", data_path("example2.json")});
  ASSERT_EQ(penalty.code, kExitOk);
  EXPECT_NE(penalty.out.find("\"big_m\""), std::string::npos);
  EXPECT_NE(penalty.out.find("\"objective\": {\"coefficients\":[\"1\",\"6\",\"1\","), std::string::npos);

  EXPECT_EQ(run({"transform", "--stage", "kkt", "-i", data_path("example2.json")}).code, kExitOk);
  EXPECT_NE(run({"transform", "--stage", "milp", "-i", data_path("example2.json")}).out.find("\"big_m\""),
            std::string::npos);
  EXPECT_EQ(run({"transform", "--stage", "penalty", "-i", data_path("example2.json")}).code, kExitUsage);
  EXPECT_EQ(run({"transform", "--stage", "bogus", "-i", data_path("example2.json")}).code, kExitUsage);
}

TEST(Cli, Sample) {
  const std::string out = temp("samples.csv");
  ASSERT_EQ(run({"sample", "--axis", "0", "--from", "0", "--to", "6", "--step", "1/100", "-i",
                 data_path("example2.json"), "-o", out})
                .code,
            kExitOk);
  const std::string text = read_text(out);
  EXPECT_NE(text.find("# interval 3/7 25/18\n# interval 35/12 39/7\n"), std::string::npos);
  const CliRun free = run({"sample", "--from", "0", "--to", "6", "--step", "1/100", "-i", data_path("example2_uncoupled.json")});
  EXPECT_NE(free.out.find("# interval 3/7 39/7\n"), std::string::npos);
  EXPECT_EQ(free.out.find("# interval 3/7 25/18"), std::string::npos);
  EXPECT_EQ(run({"sample", "--from", "6", "--to", "0", "--step", "1", "-i", data_path("example2.json")}).code,
            kExitUsage);
}

TEST(Cli, GenerateIsDeterministic) {
  const std::vector<std::string> args = {"generate", "--n", "1", "--m", "1", "--k", "1", "--l", "1", "--seed", "42"};
  const CliRun a = run(args), b = run(args);
  ASSERT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NO_THROW(parse_instance(a.out));
  const CliRun uncoupled = run({"generate", "--k", "0", "--seed", "3", "--solvable"});
  ASSERT_EQ(uncoupled.code, kExitOk);
  EXPECT_EQ(parse_instance(uncoupled.out).k(), 0);
}

TEST(Cli, Verify) {
  const std::string sol = temp("sol.json");
  write(sol, run({"solve", "-i", data_path("example2.json")}).out);
  EXPECT_EQ(run({"verify", "-i", data_path("example2.json"), "--solution", sol}).code, kExitOk);

  write(sol, R"({"method": "oracle", "x": ["2"], "y": ["4"], "objective": "26"})");
  CliRun r = run({"verify", "-i", data_path("example2.json"), "--solution", sol});
  EXPECT_EQ(r.code, kExitVerifyFailed);
  EXPECT_NE(r.out.find("coupling row 0"), std::string::npos);

  write(sol, R"({"method": "oracle", "x": ["3/7"], "y": ["6/7"], "objective": "40/7"})");
  r = run({"verify", "-i", data_path("example2.json"), "--solution", sol});
  EXPECT_EQ(r.code, kExitVerifyFailed);
  EXPECT_NE(r.out.find("objective mismatch"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"solve"}).code, kExitUsage);
  EXPECT_EQ(run({"solve", "-i", temp("missing.json")}).code, kExitUsage);
  const std::string bad = temp("bad.json");
  write(bad, "{ \"n\": 1 }");
  EXPECT_EQ(run({"solve", "-i", bad}).code, kExitUsage);
  EXPECT_EQ(run({"solve", "--method", "penalty", "--kappa", "x", "-i", data_path("example2.json")}).code, kExitUsage);
}

TEST(Cli, ExecutableExitCodes) {
  const std::string exe = BLVL_EXE;
  auto status = [&](const std::string& args) {
    const int raw = std::system((exe + " " + args + " > /dev/null 2>&1").c_str());
    return WEXITSTATUS(raw);
  };
  EXPECT_EQ(status("solve -i " + data_path("example2.json")), 0);
  EXPECT_EQ(status("solve -i " + data_path("infeasible.json")), 4);
  EXPECT_EQ(status("transform --stage penalty -i " + data_path("example2.json")), 2);
}

}  // namespace
}  // namespace blvl
