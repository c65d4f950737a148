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


#include "codeqa/metrics.h"

#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "codeqa/errors.h"
#include "codeqa/porter_stemmer.h"
#include "codeqa/text.h"

namespace codeqa::metrics {
namespace {

std::vector<std::vector<std::string>> ReadTsv(const std::string& name) {
  std::ifstream in(std::string(CODEQA_TEST_DATA_DIR) + "/" + name);
  EXPECT_TRUE(in) << name;
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cols;
    size_t start = 0;
    for (size_t tab; (tab = line.find('\t', start)) != std::string::npos;
         start = tab + 1) {
      cols.push_back(line.substr(start, tab - start));
    }
    cols.push_back(line.substr(start));
    rows.push_back(std::move(cols));
  }
  return rows;
}

// Longest common subsequence by trying every subsequence of `a`, longest
// first, and testing it against `b` greedily.
size_t BruteForceLcs(const std::string& a, const std::string& b) {
  size_t best = 0;
  for (unsigned mask = 0; mask < (1u << a.size()); ++mask) {
    size_t len = std::popcount(mask);
    if (len <= best) continue;
    size_t j = 0;
    bool ok = true;
    for (size_t i = 0; i < a.size() && ok; ++i) {
      if (!(mask >> i & 1)) continue;
      while (j < b.size() && b[j] != a[i]) ++j;
      if (j == b.size()) ok = false;
      else ++j;
    }
    if (ok) best = len;
  }
  return best;
}

std::vector<std::string> AllStrings(size_t max_len) {
  std::vector<std::string> out = {""};
  for (size_t i = 0; i < out.size(); ++i) {
    if (out[i].size() == max_len) continue;
    for (char c : {'a', 'b', 'c'}) out.push_back(out[i] + c);
  }
  return out;
}

TEST(LcsTest, MatchesBruteForceOnShortStrings) {
  std::vector<std::string> all = AllStrings(5);
  ASSERT_EQ(all.size(), 364u);
  for (const std::string& a : all) {
    std::vector<char> va(a.begin(), a.end());
    for (const std::string& b : all) {
      std::vector<char> vb(b.begin(), b.end());
      ASSERT_EQ(LcsLength(va, vb), BruteForceLcs(a, b)) << a << " / " << b;
    }
  }
}

TEST(LcsTest, Tokens) {
  EXPECT_EQ(LcsLength(MetricTokens("the page"), MetricTokens("page arguments")), 1u);
  EXPECT_EQ(LcsLength(MetricTokens("a b c d"), MetricTokens("a c")), 2u);
  EXPECT_EQ(LcsLength(std::vector<int>{}, std::vector<int>{1, 2}), 0u);
}

struct AnswerCase {
  const char* pred;
  const char* gold;
  double em;
  double f1;
};

TEST(ExactMatchF1Test, HandComputedCases) {
  const AnswerCase cases[] = {
      {"The given child.", "the given child", 1, 1},
      {"a log file", "a new log file", 0, 0.8},
      {"", "", 1, 1},
      {"given child", "the given child", 1, 1},
      {"in ascending order", "in asc order", 0, 2.0 / 3},
      {"in desc order", "in asc order", 0, 2.0 / 3},
      {"foo bar", "baz", 0, 0},
      {"", "something", 0, 0},
      {"something", "", 0, 0},
      {"the the", "", 1, 1},
      {"a b a", "a", 0, 0},
      {"x x y", "x y y", 0, 2.0 / 3},
      {"Don't stop.", "dont stop", 1, 1},
      {"page arguments from the request", "page arguments", 0, 2.0 / 3},
      {"data-set", "dataset", 1, 1},
  };
  for (const AnswerCase& c : cases) {
    EXPECT_EQ(ExactMatch(c.pred, c.gold), c.em) << c.pred << " / " << c.gold;
    EXPECT_DOUBLE_EQ(TokenF1(c.pred, c.gold), c.f1) << c.pred << " / " << c.gold;
  }
}

TEST(ExactMatchF1Test, Normalization) {
  EXPECT_EQ(NormalizeAnswer("The  Data, an index!"), "data index");
  EXPECT_EQ(NormalizeAnswer("theme"), "theme");
}

TEST(ExactMatchF1Test, EmNeverExceedsF1AndOverlapIsSymmetric) {
  std::mt19937 rng(5);
  const char* words[] = {"the", "a", "code", "file", "index", "child", "given", "new"};
  for (int trial = 0; trial < 500; ++trial) {
    std::string a, b;
    int la = rng() % 5, lb = rng() % 5;
    for (int i = 0; i < la; ++i) a += std::string(words[rng() % 8]) + " ";
    for (int i = 0; i < lb; ++i) b += std::string(words[rng() % 8]) + " ";
    EXPECT_LE(ExactMatch(a, b), TokenF1(a, b));
    EXPECT_DOUBLE_EQ(TokenF1(a, b), TokenF1(b, a));
    // Adding a gold token to the prediction cannot lower recall.
    std::vector<std::string> gold = SplitWhitespace(NormalizeAnswer(b));
    if (!gold.empty()) {
      std::string extended = a + " " + gold[rng() % gold.size()];
      auto recall = [&](const std::string& p) {
        double f = TokenF1(p, b);
        double n = SplitWhitespace(NormalizeAnswer(p)).size();
        if (f == 0) return 0.0;
        // F1 = 2PR/(P+R) with P = c/n and R = c/g gives c = F1(n+g)/2.
        return f * (n + gold.size()) / 2 / gold.size();
      };
      EXPECT_GE(recall(extended) + 1e-12, recall(a));
    }
  }
}

TEST(RougeLTest, Examples) {
  EXPECT_DOUBLE_EQ(RougeL("a b c", "a b c"), 1.0);
  EXPECT_DOUBLE_EQ(RougeL("the page", "page arguments"), 0.5);
  double b2 = 1.2 * 1.2;
  EXPECT_DOUBLE_EQ(RougeL("a b c d", "a c"), (1 + b2) * 0.5 / (1 + b2 * 0.5));
  EXPECT_NEAR(RougeL("a b c d", "a c"), 0.709, 1e-3);
  EXPECT_EQ(RougeL("x", "y"), 0.0);
  EXPECT_EQ(RougeL("", "y"), 0.0);
}

TEST(MeteorTest, Examples) {
  EXPECT_NEAR(Meteor("the given child", "the given child"), 1 - 0.5 / 27, 1e-12);
  EXPECT_EQ(Meteor("alpha", "beta"), 0.0);
  EXPECT_EQ(Meteor("", "beta"), 0.0);
  auto align = MeteorAlign({"creates", "file"}, {"created", "files"});
  ASSERT_EQ(align.size(), 2u);
  EXPECT_EQ(CountChunks(align), 1);
}

TEST(BleuTest, Examples) {
  EXPECT_DOUBLE_EQ(SentenceBleu("the given child", "the given child"), 1.0);
  EXPECT_DOUBLE_EQ(CorpusBleu({"a b c d e", "x y"}, {"a b c d e", "x y"}), 1.0);
  EXPECT_EQ(SentenceBleu("", "the given child"), 0.0);
  double partial = SentenceBleu("b a d c", "a b c d");
  EXPECT_GT(partial, 0.0);
  EXPECT_LT(partial, 1.0);
  EXPECT_THROW(CorpusBleu({"a"}, {}), UsageError);
}

TEST(ReferenceTest, BleuAndMeteorMatchFrozenValues) {
  auto rows = ReadTsv("metric_reference.tsv");
  ASSERT_EQ(rows.size(), 25u);
  for (const auto& r : rows) {
    ASSERT_EQ(r.size(), 4u);
    EXPECT_NEAR(SentenceBleu(r[0], r[1]), std::stod(r[2]), 1e-6) << r[0] << " / " << r[1];
    EXPECT_NEAR(Meteor(r[0], r[1]), std::stod(r[3]), 1e-4) << r[0] << " / " << r[1];
  }
}

TEST(ReferenceTest, PorterStemMatchesFrozenStems) {
  auto rows = ReadTsv("porter_reference.tsv");
  ASSERT_EQ(rows.size(), 400u);
  for (const auto& r : rows) EXPECT_EQ(PorterStem(r[0]), r[1]) << r[0];
}

QAPair Gold(std::string id, std::string answer) {
  QAPair p;
  p.id = std::move(id);
  p.answer = std::move(answer);
  return p;
}

TEST(EvaluateTest, PerfectAndMissing) {
  std::vector<QAPair> gold = {Gold("p1", "the given child"), Gold("p2", "Yes"),
                              Gold("p3", "a new log file")};
  MetricReport perfect = Evaluate(
      gold, {{"p1", "the given child"}, {"p2", "Yes"}, {"p3", "a new log file"}});
  EXPECT_DOUBLE_EQ(perfect.em, 100);
  EXPECT_DOUBLE_EQ(perfect.f1, 100);
  EXPECT_DOUBLE_EQ(perfect.rouge_l, 100);
  EXPECT_DOUBLE_EQ(perfect.bleu, 100);
  EXPECT_EQ(perfect.missing, 0);

  MetricReport partial = Evaluate(gold, {{"p1", "the given child"}});
  EXPECT_EQ(partial.missing, 2);
  EXPECT_NEAR(partial.em, 100.0 / 3, 1e-9);

  MetricReport empty = Evaluate(gold, {{"p1", ""}, {"p2", ""}, {"p3", ""}});
  EXPECT_EQ(empty.em, 0);
  EXPECT_EQ(empty.f1, 0);

  MetricReport no_yes_no = Evaluate(gold, {{"p1", "x"}}, {.exclude_yes_no = true});
  EXPECT_EQ(no_yes_no.pairs.size(), 2u);
  EXPECT_EQ(no_yes_no.excluded_yes_no, 1);
}

TEST(EvaluateTest, UnknownIdsAreListed) {
  std::vector<QAPair> gold = {Gold("p1", "x")};
  try {
    Evaluate(gold, {{"p9", "x"}, {"q2", "y"}});
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("p9, q2"), std::string::npos) << e.what();
  }
}

}  // namespace
}  // namespace codeqa::metrics
