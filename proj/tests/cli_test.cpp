// Copyright 2026 The triangle-forge Authors
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

#include "tforge/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "tforge/triangle_io.hpp"
#include "tforge/verify.hpp"

namespace tforge::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(CliGenTest, DelannoyCsv) {
  const Result r = Invoke({"gen", "--construction", "delannoy", "--b", "1", "--c",
                        "1", "--d", "1", "--N", "4", "--format", "csv"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "1\n1,1\n1,3,1\n1,5,5,1\n1,7,13,7,1\n");
}

TEST(CliGenTest, PascalPreset) {
  const Result r = Invoke({"gen", "--construction", "pascal-preset", "--N", "2",
                        "--format", "csv"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "1\n1,1\n1,2,1\n");
}

TEST(CliGenTest, DelannoyAndBivariateCsvAreIdentical) {
  const std::vector<std::string> params = {"--b", "2", "--c", "1/2", "--d", "3",
                                           "--N", "9", "--format", "csv"};
  auto with = [&](const std::string& construction) {
    std::vector<std::string> args = {"gen", "--construction", construction};
    args.insert(args.end(), params.begin(), params.end());
    return Invoke(args);
  };
  const Result rec = with("delannoy");
  EXPECT_EQ(rec.code, kExitOk);
  EXPECT_EQ(rec.out, with("bivariate").out);
  EXPECT_EQ(rec.out, with("delannoy-conv").out);
}

TEST(CliGenTest, JsonRoundTripAndReverify) {
  const Result r = Invoke({"gen", "--construction", "convarray", "--a", "0:1,3,2",
                        "--q", "0:2,1", "--N", "6"});
  ASSERT_EQ(r.code, kExitOk);
  const Triangle t = triangle_from_json(r.out);
  EXPECT_EQ(to_json(t) + "\n", r.out);
  EXPECT_EQ(t.construction(), "convarray");
  EXPECT_EQ(t.params().at("a"), "0:1,3,2");
  EXPECT_EQ(t.depth(), 6);

  const auto path = std::filesystem::temp_directory_path() / "tforge_cli_rt.json";
  {
    std::ofstream f(path);
    f << r.out;
  }
  const Result v = Invoke({"verify", "--check", "rows-log-concave", "--input",
                        path.string()});
  EXPECT_EQ(v.code, kExitOk) << v.out << v.err;
  std::filesystem::remove(path);
}

TEST(CliGenTest, OutputFileAndPretty) {
  const auto path = std::filesystem::temp_directory_path() / "tforge_cli_out.csv";
  const Result r = Invoke({"gen", "--construction", "kurtz", "--u", "0:1,2,2,2",
                        "--v", "0:1,1,1,1", "--N", "3", "--format", "csv",
                        "--output", path.string()});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  std::stringstream buf;
  buf << f.rdbuf();
  EXPECT_EQ(buf.str(), "1\n1,2\n1,4,4\n1,6,12,8\n");
  std::filesystem::remove(path);

  const Result p = Invoke({"gen", "--construction", "pascal-preset", "--N", "2",
                        "--format", "pretty"});
  EXPECT_EQ(p.out, "   1\n  1 1\n 1 2 1\n");
}

TEST(CliUsageTest, ErrorsExitTwo) {
  EXPECT_EQ(Invoke({}).code, kExitUsage);
  EXPECT_EQ(Invoke({"gen", "--bogus"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"gen", "--construction", "nope", "--N", "2"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"gen", "--construction", "pascal-preset", "--N", "-1"}).code,
            kExitUsage);
  EXPECT_EQ(Invoke({"gen", "--construction", "pascal-preset"}).code, kExitUsage);
  const Result bad = Invoke({"gen", "--construction", "convarray", "--a", "0:1,x",
                          "--q", "0:1", "--N", "2"});
  EXPECT_EQ(bad.code, kExitUsage);
  EXPECT_NE(bad.err.find("malformed"), std::string::npos);
  EXPECT_EQ(Invoke({"gen", "--construction", "convarray", "--a", "0:1", "--N", "2"})
                .code,
            kExitUsage);
  EXPECT_EQ(Invoke({"tail", "--a", "0:1", "--b", "L1|0:1|R1", "--p", "0"}).code,
            kExitUsage);
  EXPECT_EQ(Invoke({"verify", "--check", "lemma31", "--a", "0:1,0,1", "--q", "0:1"})
                .code,
            kExitUsage);
}

TEST(CliUsageTest, DepthCap) {
  ::setenv("TRIANGLE_FORGE_MAX_N", "5", 1);
  EXPECT_EQ(Invoke({"gen", "--construction", "pascal-preset", "--N", "6"}).code,
            kExitUsage);
  EXPECT_EQ(Invoke({"gen", "--construction", "pascal-preset", "--N", "5"}).code,
            kExitOk);
  ::unsetenv("TRIANGLE_FORGE_MAX_N");
  EXPECT_EQ(Invoke({"gen", "--construction", "pascal-preset", "--N", "1001"}).code,
            kExitUsage);
}

TEST(CliVerifyTest, ExitCodes) {
  EXPECT_EQ(Invoke({"verify", "--check", "rows-log-concave", "--construction",
                 "delannoy", "--b", "2", "--c", "1/2", "--d", "3", "--N", "15"})
                .code,
            kExitOk);
  // A convex initial side breaks row log-concavity.
  const Result bad = Invoke({"verify", "--check", "rows-log-concave",
                          "--construction", "hoggar-preset", "--a", "0:1,0,0,5",
                          "--N", "4"});
  EXPECT_EQ(bad.code, kExitCheckFailed);
  EXPECT_NE(bad.out.find("\"passed\":false"), std::string::npos);
  EXPECT_EQ(Invoke({"verify", "--check", "lemma31", "--a", "0:1,2,1", "--q",
                 "0:1,1", "--Nk", "4", "--Nn", "4"})
                .code,
            kExitOk);
  const Result menon = Invoke({"verify", "--check", "menon", "--a", "-1:1,2,1",
                            "--b", "-1:1,3,2", "--format", "pretty"});
  EXPECT_EQ(menon.code, kExitOk);
  EXPECT_EQ(menon.out.rfind("menon-pairing: passed", 0), 0u);
  EXPECT_EQ(Invoke({"verify", "--check", "fact12", "--max-len", "4", "--bound", "2"})
                .code,
            kExitOk);
}

TEST(CliTailTest, Examples) {
  EXPECT_EQ(Invoke({"tail", "--a", "L0|0:1|R1/2", "--b", "L1|0:1|R1", "--p", "0"}).out,
            "finite 2\n");
  EXPECT_EQ(Invoke({"tail", "--a", "L1|0:1|R1", "--b", "L1|0:1|R1", "--p", "0"}).out,
            "divergent both\n");
  EXPECT_EQ(Invoke({"tail", "--a", "L0|0:1|R0", "--b", "L1|0:3|R1", "--p", "5"}).out,
            "finite 3\n");
}

TEST(CliConvSearchTest, Examples) {
  EXPECT_EQ(Invoke({"conv", "--a", "0:1,2,1", "--b", "0:1,1"}).out, "0:1,3,3,1\n");
  EXPECT_EQ(Invoke({"conv", "--a", "0:1,2,2", "--power", "2"}).out, "0:1,4,8,8,4\n");
  EXPECT_EQ(Invoke({"search", "--max-len", "1", "--bound", "3"}).out, "none\n");
  const Result s = Invoke({"search", "--max-len", "3", "--bound", "2"});
  EXPECT_EQ(s.code, kExitOk);
  EXPECT_EQ(s.out,
            R"({"a":"0:1,1","b":"0:1,1","conv":"0:1,2,1","index":1,"lhs":"4","rhs":"1"})"
            "\n");
}

}  // namespace
}  // namespace tforge::cli
