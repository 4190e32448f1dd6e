// Copyright 2026 The Authors.
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

#include "exmat/cli.h"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "exmat/io.h"

namespace exmat {
namespace {

const std::string kData = EXMAT_TEST_DATA;

struct Outcome {
  int code;
  std::string out;
  std::string err;
  io::Json doc() const { return io::Json::parse(out); }
};

Outcome Invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = cli::Run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string TempFile(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("exmat_cli_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

TEST(CliTest, SymmetricOnK4) {
  Outcome r = Invoke({"symmetric", kData + "/k4.json", "--b0", "12,23,34", "--b1", "13,14,24",
                   "--x", "12,23"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  io::Json doc = r.doc();
  EXPECT_TRUE(doc["valid"].get<bool>());
  EXPECT_EQ(doc["command"], "symmetric");
  EXPECT_EQ(doc["certificates"][0]["y"], io::Json::array({"13", "24"}));
  EXPECT_EQ(doc["input_digest"].get<std::string>().size(), 64u);
}

TEST(CliTest, SidecarBases) {
  const std::string bases = kData + "/k4_bases.json";
  for (const char* cmd : {"symmetric", "partition", "serial", "bijection"}) {
    Outcome r = Invoke({cmd, kData + "/k4.json", "--bases", bases});
    EXPECT_EQ(r.code, cli::kExitOk) << cmd << ": " << r.err;
    EXPECT_TRUE(r.doc()["valid"].get<bool>()) << cmd;
  }
  // Flags override the sidecar.
  Outcome r = Invoke({"symmetric", kData + "/k4.json", "--bases", bases, "--x", "34"});
  EXPECT_EQ(r.doc()["certificates"][0]["x"], io::Json::array({"34"}));
}

TEST(CliTest, BijectionListsEveryPair) {
  Outcome r = Invoke({"bijection", kData + "/u23.json", "--b0", "a,b", "--b1", "b,c"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  io::Json pairs = r.doc()["certificates"][0]["pairs"];
  EXPECT_EQ(pairs.size(), 4u);
  EXPECT_EQ(pairs[1], io::Json::parse(R"([["a"], ["c"]])"));
  Outcome limited =
      Invoke({"bijection", kData + "/u23.json", "--b0", "a,b", "--b1", "b,c", "--max-size", "1"});
  EXPECT_EQ(limited.doc()["certificates"][0]["pairs"].size(), 3u);
}

TEST(CliTest, CheckAxioms) {
  Outcome r = Invoke({"check-axioms", kData + "/u24.json"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_TRUE(r.doc()["valid"].get<bool>());
}

TEST(CliTest, VerifyCounterexample) {
  Outcome r = Invoke({"verify-counterexample", "--n", "12", "--k", "2"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  io::Json cert = r.doc()["certificates"][0];
  EXPECT_EQ(cert["expected_s1"], io::Json::array({"h0", "h1"}));
  EXPECT_EQ(cert["expected_s0"], io::Json::array({"e0", "e1"}));
  EXPECT_EQ(cert["limit_witness"], 2);
  EXPECT_EQ(Invoke({"verify-counterexample", "--n", "12", "--k", "9"}).code,
            cli::kExitPrecondition);
}

TEST(CliTest, Oracles) {
  Outcome bases = Invoke({"oracle", "bases", kData + "/k4.json"});
  EXPECT_EQ(bases.doc()["certificates"][0]["bases"].size(), 16u);
  Outcome ex = Invoke({"oracle", "exchange", kData + "/u24.json", "--b0", "a,b", "--b1", "c,d",
                    "--x", "a"});
  EXPECT_EQ(ex.doc()["certificates"][0]["ys"], io::Json::parse(R"([["c"], ["d"]])"));
  Outcome bij = Invoke({"oracle", "bijection", kData + "/k4.json", "--bases",
                     kData + "/k4_bases.json", "--k", "2"});
  EXPECT_EQ(bij.code, cli::kExitOk) << bij.err;
}

TEST(CliTest, RandomUsesSeedEnvironment) {
  setenv("EXMAT_SEED", "11", 1);
  Outcome a = Invoke({"random", "--kind", "gf2", "--size", "5"});
  Outcome b = Invoke({"random", "--kind", "gf2", "--size", "5", "--seed", "11"});
  unsetenv("EXMAT_SEED");
  ASSERT_EQ(a.code, cli::kExitOk);
  EXPECT_EQ(a.out, b.out);
  // The output is itself a canonical matroid file.
  EXPECT_EQ(io::SerializeMatroid(io::ParseMatroid(a.out)), a.out);
  setenv("EXMAT_SEED", "eleven", 1);
  EXPECT_EQ(Invoke({"random"}).code, cli::kExitParse);
  unsetenv("EXMAT_SEED");
}

TEST(CliTest, VerifyRoundTrip) {
  Outcome r = Invoke({"symmetric", kData + "/k4.json", "--b0", "12,23,34", "--b1", "13,14,24",
                   "--x", "12"});
  const std::string result = TempFile("result.json", r.out);
  EXPECT_EQ(Invoke({"verify", result, "--matroid", kData + "/k4.json"}).code, cli::kExitOk);
  EXPECT_EQ(Invoke({"verify", result, "--matroid", kData + "/u24.json"}).code,
            cli::kExitInvalid);

  io::Json doc = r.doc();
  doc["certificates"][0]["base_a"] = io::Json::array({"12", "13", "23"});
  const std::string tampered = TempFile("tampered.json", doc.dump());
  Outcome v = Invoke({"verify", tampered, "--matroid", kData + "/k4.json"});
  EXPECT_EQ(v.code, cli::kExitInvalid);
  EXPECT_FALSE(v.doc()["valid"].get<bool>());
}

TEST(CliTest, ExitCodes) {
  EXPECT_EQ(Invoke({}).code, cli::kExitParse);
  EXPECT_EQ(Invoke({"frobnicate"}).code, cli::kExitParse);
  EXPECT_EQ(Invoke({"check-axioms", kData + "/malformed.json"}).code, cli::kExitParse);
  EXPECT_EQ(Invoke({"check-axioms", kData + "/does-not-exist.json"}).code, cli::kExitParse);
  EXPECT_EQ(Invoke({"symmetric", kData + "/k4.json", "--b0", "12,23,34"}).code, cli::kExitParse);
  Outcome not_basis = Invoke({"symmetric", kData + "/k4.json", "--b0", "12,23,34", "--b1",
                           "13,14", "--x", "12"});
  EXPECT_EQ(not_basis.code, cli::kExitPrecondition);
  EXPECT_NE(not_basis.err.find("b1"), std::string::npos);
  EXPECT_TRUE(not_basis.out.empty());
  EXPECT_EQ(Invoke({"symmetric", kData + "/k4.json", "--b0", "12,23,34", "--b1", "13,14,24",
                 "--x", "99"})
                .code,
            cli::kExitPrecondition);
  EXPECT_EQ(Invoke({"partition", kData + "/k4.json", "--b0", "12,23,34", "--b1", "13,14,24",
                 "--classes", "12;23"})
                .code,
            cli::kExitPrecondition);
  EXPECT_EQ(Invoke({"--help"}).code, cli::kExitOk);
}

}  // namespace
}  // namespace exmat
