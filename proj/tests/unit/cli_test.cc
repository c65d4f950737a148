// Copyright 2026 The CodeQA Pipeline Authors.
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

#include "codeqa/cli.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace codeqa::cli {
namespace {

namespace fs = std::filesystem;

std::string Mini(const std::string& name) { return std::string(CODEQA_DATA_DIR) + "/mini/" + name; }

std::string Slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("codeqa_cli_" + std::string(
                                ::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  int Call(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    args.insert(args.begin(), "codeqa");
    return cli::Run(args, out_, err_);
  }

  std::vector<std::string> AllArgs(const fs::path& out_dir) {
    return {"all",           "--corpus",      Mini("corpus.jsonl"),
            "--raw-annotations", Mini("raw_annotations.jsonl"),
            "--annotations", Mini("annotations.jsonl"),
            "--out-dir",     out_dir.string()};
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(CliTest, AllSucceedsAndWritesEveryFile) {
  ASSERT_EQ(Call(AllArgs(dir_ / "a")), kOk) << err_.str();
  for (const char* name : {"records.jsonl", "selected.jsonl", "select_audit.jsonl",
                           "generated.jsonl", "postprocessed.jsonl", "train.jsonl", "dev.jsonl",
                           "test.jsonl", "summary.json", "stats.json"}) {
    EXPECT_TRUE(fs::exists(dir_ / "a" / name)) << name;
  }
  EXPECT_NE(out_.str().find("postprocess"), std::string::npos);
  EXPECT_NE(out_.str().find("question types"), std::string::npos);
}

TEST_F(CliTest, AllIsByteIdenticalAcrossRuns) {
  ASSERT_EQ(Call(AllArgs(dir_ / "a")), kOk) << err_.str();
  const std::string first_stdout = out_.str();
  ASSERT_EQ(Call(AllArgs(dir_ / "b")), kOk) << err_.str();
  EXPECT_EQ(out_.str(), first_stdout);
  for (const auto& entry : fs::directory_iterator(dir_ / "a")) {
    const fs::path other = dir_ / "b" / entry.path().filename();
    EXPECT_EQ(Slurp(entry.path()), Slurp(other)) << entry.path().filename();
  }
}

TEST_F(CliTest, SeedChangesTheSplit) {
  ASSERT_EQ(Call(AllArgs(dir_ / "a")), kOk);
  auto args = AllArgs(dir_ / "b");
  args.insert(args.begin(), {"--seed", "99"});
  ASSERT_EQ(Call(args), kOk) << err_.str();
  EXPECT_NE(Slurp(dir_ / "a" / "train.jsonl"), Slurp(dir_ / "b" / "train.jsonl"));
}

TEST_F(CliTest, GenerateWithoutAnnotationsListsIds) {
  std::ofstream(dir_ / "empty.jsonl") << "";
  ASSERT_EQ(Call({"ingest", "--corpus", Mini("corpus.jsonl"), "--out",
                  (dir_ / "records.jsonl").string()}),
            kOk)
      << err_.str();
  ASSERT_EQ(Call({"select", "--records", (dir_ / "records.jsonl").string(), "--raw-annotations",
                  Mini("raw_annotations.jsonl"), "--out", (dir_ / "selected.jsonl").string(),
                  "--audit", (dir_ / "audit.jsonl").string()}),
            kOk)
      << err_.str();
  EXPECT_EQ(Call({"generate", "--selected", (dir_ / "selected.jsonl").string(), "--annotations",
                  (dir_ / "empty.jsonl").string(), "--out", (dir_ / "gen.jsonl").string()}),
            kValidation);
  EXPECT_NE(err_.str().find("mini-01"), std::string::npos) << err_.str();
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(Call({"all", "--bogus-flag"}), kUsage);
  EXPECT_EQ(Call({}), kUsage);
  EXPECT_EQ(Call({"--help"}), kOk);
  EXPECT_EQ(Call({"--split", "8:1", "split", "--input", Mini("corpus.jsonl"), "--out-dir",
                  dir_.string()}),
            kUsage);
  EXPECT_EQ(Call({"--yes-ratio", "1.5", "postprocess", "--input", Mini("corpus.jsonl"), "--out",
                  (dir_ / "x").string()}),
            kUsage);
  EXPECT_EQ(Call({"ingest", "--corpus", (dir_ / "missing.jsonl").string(), "--out",
                  (dir_ / "r.jsonl").string()}),
            kIo);
  std::ofstream(dir_ / "garbage.jsonl") << "{not json\n";
  EXPECT_EQ(Call({"postprocess", "--input", (dir_ / "garbage.jsonl").string(), "--out",
                  (dir_ / "p.jsonl").string()}),
            kValidation);
}

TEST_F(CliTest, Categorize) {
  ASSERT_EQ(Call({"categorize", "For what purpose does the code validate the input?",
                  "Is the dialog open?", "Who wrote this?"}),
            kOk);
  EXPECT_EQ(out_.str(),
            "For what purpose\tFor what purpose does the code validate the input?\n"
            "Yes/No\tIs the dialog open?\n"
            "Other\tWho wrote this?\n");
}

TEST_F(CliTest, EvaluateGoldAgainstItself) {
  ASSERT_EQ(Call(AllArgs(dir_ / "a")), kOk);
  std::ifstream in(dir_ / "a" / "test.jsonl");
  std::ofstream pred(dir_ / "pred.jsonl");
  std::ofstream gold(dir_ / "gold.jsonl");
  std::ifstream post(dir_ / "a" / "postprocessed.jsonl");
  std::string line;
  int n = 0;
  while (std::getline(post, line)) {
    gold << line << "\n";
    const auto id_start = line.find("\"id\":\"") + 6;
    const std::string id = line.substr(id_start, line.find('"', id_start) - id_start);
    const auto ans_start = line.find("\"answer\":\"") + 10;
    const std::string ans = line.substr(ans_start, line.find('"', ans_start) - ans_start);
    pred << "{\"id\":\"" << id << "\",\"prediction\":\"" << ans << "\"}\n";
    ++n;
  }
  pred.close();
  gold.close();
  ASSERT_GT(n, 0);
  ASSERT_EQ(Call({"--json", "evaluate", "--pred", (dir_ / "pred.jsonl").string(), "--gold",
                  (dir_ / "gold.jsonl").string()}),
            kOk)
      << err_.str();
  EXPECT_NE(out_.str().find("\"em\": 100.0"), std::string::npos) << out_.str();
}

}  // namespace
}  // namespace codeqa::cli
