// Copyright 2026 The tightfree Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <fstream>
#include <sstream>

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "tightfree/cli.hpp"

namespace tightfree::cli {
namespace {

using ::testing::HasSubstr;
using ::testing::StartsWith;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string tmp(const std::string& name) {
  return std::string(TIGHTFREE_TEST_TMPDIR) + "/" + name;
}

void write(const std::string& path, const std::string& text) {
  std::ofstream(path) << text;
}

TEST(Cli, ConstructThenDetect) {
  const std::string path = tmp("construct.txt");
  const Outcome made = call({"construct", "--n", "16", "--k", "2", "--seed", "7",
                             "--out", path});
  ASSERT_EQ(made.code, kExitOk) << made.err;
  EXPECT_THAT(made.out, HasSubstr("verification: free"));
  const Outcome checked = call({"detect", "--in", path});
  EXPECT_EQ(checked.code, kExitOk);
  EXPECT_EQ(checked.out, "free\n");
  EXPECT_EQ(call({"detect", "--in", path, "--tripartite"}).code, kExitOk);
}

TEST(Cli, ConstructIsReproducible) {
  const Outcome a = call({"construct", "--n", "24", "--k", "2", "--seed", "0x2a",
                          "--quiet"});
  const Outcome b = call({"construct", "--n", "24", "--k", "2", "--seed", "42",
                          "--quiet"});
  ASSERT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_THAT(a.out, HasSubstr("\n3 72 "));
}

TEST(Cli, MachineReport) {
  const Outcome res = call({"construct", "--n", "16", "--k", "2", "--format",
                            "machine", "--out", tmp("m.txt")});
  ASSERT_EQ(res.code, kExitOk);
  EXPECT_THAT(res.out, StartsWith("format=1\n"));
  EXPECT_THAT(res.out, HasSubstr("\nseed=12648430\n"));
}

TEST(Cli, Extremal) {
  const Outcome res = call({"extremal", "--r", "2", "--n", "6"});
  EXPECT_EQ(res.code, kExitOk);
  EXPECT_THAT(res.out, StartsWith("value 5\n"));
}

TEST(Cli, DetectFindsWitness) {
  const std::string path = tmp("k4.txt");
  write(path, "3 4 4\n0 1 2\n0 1 3\n0 2 3\n1 2 3\n");
  const Outcome res = call({"detect", "--in", path});
  EXPECT_EQ(res.code, kExitCycleFound);
  EXPECT_THAT(res.out, StartsWith("cycle 4:"));
  EXPECT_EQ(call({"detect", "--in", path, "--brute-force"}).code, kExitCycleFound);
  EXPECT_EQ(call({"detect", "--in", path, "--min", "5"}).out, "free\n");
}

TEST(Cli, DetectBudget) {
  const std::string path = tmp("star.txt");
  write(path, "3 5 6\n0 1 2\n0 1 3\n0 1 4\n0 2 3\n0 2 4\n0 3 4\n");
  const Outcome res = call({"detect", "--in", path, "--budget", "1"});
  EXPECT_EQ(res.code, kExitAborted);
  EXPECT_THAT(res.out, StartsWith("aborted after"));
}

TEST(Cli, GirthPackLiftPipeline) {
  const std::string g = tmp("girth.txt");
  const std::string f = tmp("family.txt");
  const std::string l = tmp("lift.txt");
  ASSERT_EQ(call({"girth", "--n", "16", "--k", "2", "--out", g}).code, kExitOk);
  const Outcome packed = call({"pack", "--in", g, "--k", "2", "--out", f});
  ASSERT_EQ(packed.code, kExitOk) << packed.err;
  EXPECT_THAT(packed.out, HasSubstr("t: 8"));
  write(tmp("path.txt"), "2 4 3\n0 1\n1 2\n2 3\n");
  const Outcome lifted = call({"lift", "--in", tmp("path.txt"), "--m", "2",
                               "--out", l});
  ASSERT_EQ(lifted.code, kExitOk) << lifted.err;
  EXPECT_THAT(lifted.out, HasSubstr("edges: 6"));
}

TEST(Cli, Bench) {
  const Outcome res = call({"bench", "--n-values", "8", "--seeds", "1,2", "--k", "2"});
  ASSERT_EQ(res.code, kExitOk) << res.err;
  EXPECT_THAT(res.out, StartsWith("r,n,construction,"));
  EXPECT_THAT(res.out, HasSubstr("3,8,lifted,"));
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(call({"construct", "--n", "abc"}).code, kExitUsage);
  EXPECT_EQ(call({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(call({"construct", "--seed", "banana"}).code, kExitUsage);
  EXPECT_EQ(call({"detect", "--in", tmp("does-not-exist.txt")}).code, kExitIo);
  write(tmp("bad.txt"), "3 4 1\n0 1 5\n");
  const Outcome bad = call({"detect", "--in", tmp("bad.txt")});
  EXPECT_EQ(bad.code, kExitData);
  EXPECT_THAT(bad.err, HasSubstr("index out of range at line 2"));
  EXPECT_EQ(call({"girth", "--n", "16", "--k", "9"}).code, kExitData);
  EXPECT_EQ(call({"--help"}).code, kExitOk);
}

}  // namespace
}  // namespace tightfree::cli
