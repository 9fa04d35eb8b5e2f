// Copyright 2026 The trifourier Authors
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
//
#include "trifourier/cli/commands.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace trifourier::cli {
namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation run(std::vector<std::string> args) {
  args.insert(args.begin(), "trifourier");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string read_data(const std::string& name) {
  std::ifstream in(std::string(TRIFOURIER_TEST_DATA) + "/" + name);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

class TempFile {
 public:
  explicit TempFile(const std::string& contents)
      : path_(std::filesystem::temp_directory_path() /
              ("trifourier_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)) + ".json")) {
    std::ofstream(path_) << contents;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

TEST(Cli, FamilyTables) {
  const Invocation d2 = run({"family", "--dim", "2"});
  EXPECT_EQ(d2.code, 0);
  EXPECT_EQ(d2.out, "∅,<3>\n<1>\n<2>\n");
  EXPECT_EQ(run({"family", "--dim", "4"}).out, read_data("table_d4.txt"));
  const Invocation json = run({"family", "--dim", "4", "--format", "json"});
  EXPECT_EQ(nlohmann::json::parse(json.out).at("fibers").size(), 10U);
}

TEST(Cli, OutputIsStableAcrossRuns) {
  EXPECT_EQ(run({"family", "--dim", "6"}).out, run({"family", "--dim", "6"}).out);
  EXPECT_EQ(run({"matrix", "--dim", "4", "--format", "json"}).out, run({"matrix", "--dim", "4", "--format", "json"}).out);
}

TEST(Cli, Matrix) {
  EXPECT_EQ(run({"matrix", "--dim", "2", "--format", "csv"}).out, read_data("cob_d2.csv"));
  const auto zero = nlohmann::json::parse(run({"matrix", "--dim", "0"}).out);
  EXPECT_EQ(zero.at("entries"), nlohmann::json::parse(R"([["1"]])"));
}

TEST(Cli, Verify) {
  EXPECT_EQ(run({"verify", "--dim", "6", "--suite", "all"}).code, 0);
  EXPECT_EQ(run({"verify", "--dim", "8", "--suite", "counts"}).code, 0);
  EXPECT_EQ(run({"verify", "--dim", "4", "--suite", "tau"}).code, 0);
  const Invocation json = run({"verify", "--dim", "4", "--suite", "dihedral", "--format", "json"});
  EXPECT_EQ(json.code, 0);
  EXPECT_TRUE(nlohmann::json::accept(json.out));
}

TEST(Cli, UsageErrors) {
  const Invocation odd = run({"verify", "--dim", "3"});
  EXPECT_NE(odd.code, 0);
  EXPECT_NE(odd.err.find("even"), std::string::npos);
  EXPECT_NE(run({"verify", "--dim", "x"}).code, 0);
  EXPECT_NE(run({"verify", "--dim", "4", "--suite", "nope"}).code, 0);
  EXPECT_NE(run({"family"}).code, 0);
  EXPECT_NE(run({"nonabelian", "--group", "s6"}).code, 0);
  EXPECT_NE(run({"nonabelian", "--group", "s4", "--check", "newbasis"}).code, 0);
  EXPECT_NE(run({"verify-basis", "/nonexistent/basis.json"}).code, 0);
}

TEST(Cli, Nonabelian) {
  const Invocation traced = run({"nonabelian", "--group", "s5", "--check", "trace"});
  EXPECT_EQ(traced.code, 0);
  EXPECT_EQ(traced.out, "13\n");
  EXPECT_EQ(run({"nonabelian", "--group", "s5", "--check", "hyperplane"}).code, 0);
  EXPECT_EQ(run({"nonabelian", "--group", "s4", "--check", "involution"}).code, 0);
  const Invocation e = run({"nonabelian", "--group", "s3", "--variant", "e", "--check", "newbasis"});
  EXPECT_EQ(e.code, 0);
  EXPECT_NE(e.out.find("PASS sign-piece3: sign 1"), std::string::npos);
  const Invocation rows = run({"nonabelian", "--group", "s3", "--check", "matrix"});
  EXPECT_NE(rows.out.find("F(1,1) = 1/6 (1,1) + 1/3 (1,r) + 1/6 (1,ε)"), std::string::npos);
}

TEST(Cli, BasisFilesRoundTrip) {
  for (const char* variant : {"g2", "e"}) {
    const Invocation basis = run({"basis", "--variant", variant});
    ASSERT_EQ(basis.code, 0);
    const TempFile file(basis.out);
    EXPECT_EQ(run({"verify-basis", file.path()}).code, 0) << variant;
    EXPECT_EQ(run({"nonabelian", "--group", "s3", "--check", "newbasis", "--basis", file.path()}).code, 0);
  }
}

TEST(Cli, CorruptedBasisFilesFail) {
  auto doc = nlohmann::json::parse(run({"basis", "--variant", "g2"}).out);
  // Coefficient 2 on (1,eps) in hat(1,eps) gives determinant 2.
  for (auto& e : doc.at("expansions")) {
    if (e.at("label").at("rho") != "eps" || e.at("label").at("x") != "1") continue;
    for (auto& t : e.at("terms")) {
      if (t.at("rho") == "eps" && t.at("x") == "1") t["coeff_num"] = 2;
    }
  }
  const TempFile det2(doc.dump());
  const Invocation r = run({"verify-basis", det2.path()});
  EXPECT_NE(r.code, 0);
  EXPECT_NE(r.out.find("FAIL unimodular"), std::string::npos) << r.out;

  const TempFile broken("{\"group\": \"s3\", \"expansions\": [");
  EXPECT_NE(run({"verify-basis", broken.path()}).code, 0);
}

TEST(Cli, IdentityBasisForS4PinpointsAViolation) {
  nlohmann::json doc{{"group", "s4"}, {"variant", "identity"}, {"expansions", nlohmann::json::array()}};
  const auto pairs = nlohmann::json::parse(run({"nonabelian", "--group", "s4", "--check", "matrix", "--format", "json"}).out)
                         .at("pairs");
  for (const auto& p : pairs) {
    doc["expansions"].push_back({{"label", p}, {"terms", {{{"x", p.at("x")}, {"rho", p.at("rho")}, {"coeff_num", 1}}}}});
  }
  const TempFile file(doc.dump());
  const Invocation r = run({"verify-basis", file.path(), "--format", "json"});
  EXPECT_NE(r.code, 0);
  const auto report = nlohmann::json::parse(r.out);
  EXPECT_TRUE(report.contains("first_violation")) << r.out;
}

}  // namespace
}  // namespace trifourier::cli
