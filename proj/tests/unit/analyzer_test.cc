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


#include "codeqa/analyzer.h"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "codeqa/record.h"
#include "codeqa/text.h"

namespace codeqa::analysis {
namespace {

QAPair Pair(std::string code_id, std::vector<std::string> code, std::string q,
            std::string a) {
  QAPair p;
  p.id = code_id + ":" + a;
  p.code_id = std::move(code_id);
  p.code_tokens = std::move(code);
  p.question = std::move(q);
  p.answer = std::move(a);
  return p;
}

const char* const kTableTwoQuestions[] = {
    "What will be associated with the index when it gets created?",
    "What does the code trim from the given string?",
    "What does the function try if the dialog is open and a stream is set?",
    "When does the code take a screenshot?",
    "Where does this method position the stream?",
    "How does the code create an instance of a class?",
    "Why does the code always return true?",
    "For what purpose does the function add and remove entries from the "
    "statements collection?",
};

TEST(CategorizeTest, Examples) {
  EXPECT_EQ(CategorizeQuestion("What does the code insert at the specified index?"), "What");
  EXPECT_EQ(CategorizeQuestion(kTableTwoQuestions[7]), "For what purpose");
  EXPECT_EQ(CategorizeQuestion("Do windows have a mode like linux cli example?"), "Yes/No");
  EXPECT_EQ(CategorizeQuestion("Will the aliases be associated?"), "Yes/No");
  EXPECT_EQ(CategorizeQuestion("Whom does the code notify?"), "Other");
  EXPECT_EQ(CategorizeQuestion("whatever it is?"), "Other");
  EXPECT_EQ(CategorizeQuestion("HOW does it work?"), "How");
  EXPECT_EQ(CategorizeQuestion(""), "Other");
  const char* expected[] = {"What", "What", "What", "When", "Where", "How", "Why",
                            "For what purpose"};
  for (int i = 0; i < 8; ++i) {
    EXPECT_EQ(CategorizeQuestion(kTableTwoQuestions[i]), expected[i]);
  }
}

TEST(StatsTest, CountsAndAverages) {
  std::vector<QAPair> pairs = {
      Pair("c1", {"int", "f", "(", ")"}, "What does the code do with nine tokens here?", "x y"),
      Pair("c1", {"int", "f", "(", ")"}, "Why?", "z"),
  };
  SplitStats s = ComputeSplitStats("train", pairs);
  EXPECT_EQ(s.pairs, 2u);
  EXPECT_EQ(s.unique_codes, 1u);
  EXPECT_EQ(s.unique_code_tokens, 4u);
  EXPECT_DOUBLE_EQ(s.avg_code_tokens, 4.0);
  EXPECT_DOUBLE_EQ(s.avg_question_tokens, 5.0);
  EXPECT_DOUBLE_EQ(s.avg_answer_tokens, 1.5);
  SplitStats one = ComputeSplitStats("dev", {pairs[0]});
  EXPECT_DOUBLE_EQ(one.avg_question_tokens, 9.0);
  SplitStats none = ComputeSplitStats("test", {});
  EXPECT_TRUE(none.empty);
  EXPECT_EQ(none.avg_answer_tokens, 0.0);
}

TEST(RepetitionTest, Examples) {
  std::vector<QAPair> train, eval;
  for (int i = 0; i < 20; ++i) {
    train.push_back(Pair("t", {}, "Q?", "train answer " + std::to_string(i)));
    eval.push_back(Pair("e", {}, "Q?", "eval answer " + std::to_string(i)));
  }
  EXPECT_DOUBLE_EQ(RepetitionRate(eval, train), 0.0);
  EXPECT_DOUBLE_EQ(RepetitionRate(train, train), 100.0);
  // Three eval answers reappear in training, modulo case and final period.
  eval[2].answer = "Train Answer 5.";
  eval[7].answer = "train answer 0";
  eval[11].answer = "train  answer 19";
  eval.push_back(Pair("e", {}, "Q?", "Yes"));
  train.push_back(Pair("t", {}, "Q?", "Yes"));

  std::set<std::string> oracle;
  for (const QAPair& p : train) oracle.insert(NormalizeForRepetition(p.answer));
  int hits = 0, counted = 0;
  for (const QAPair& p : eval) {
    if (p.answer == "Yes") continue;
    ++counted;
    hits += oracle.count(NormalizeForRepetition(p.answer));
  }
  EXPECT_EQ(hits, 3);
  EXPECT_DOUBLE_EQ(RepetitionRate(eval, train), 100.0 * hits / counted);
  EXPECT_DOUBLE_EQ(RepetitionRate(eval, train), 15.0);
}

TEST(SpanTest, Examples) {
  std::vector<std::string> code = ingest::TokenizeCode(
      "def get_page_args():\n"
      "    pages = {}\n"
      "    for arg in request.args:\n"
      "        re_match = re.findall(\"page_(.*)\", arg)\n"
      "        if re_match:\n"
      "            pages[re_match[0]] = int(request.args.get(arg))\n"
      "    return pages\n",
      ingest::Language::kPython);
  EXPECT_FALSE(IsSpan("page arguments", code));
  EXPECT_FALSE(IsExtractable("page arguments", code));
  EXPECT_TRUE(IsSpan("for arg in", code));
  EXPECT_TRUE(IsExtractable("for arg in", code));
  EXPECT_TRUE(IsSpan("Pages.", code));
  EXPECT_TRUE(IsExtractable("in arg for", code));
  EXPECT_FALSE(IsSpan("in arg for", code));
  EXPECT_FALSE(IsSpan("", code));
  EXPECT_FALSE(IsExtractable(".", code));
}

// Contiguous-run check by trying every start position.
bool BruteForceSpan(const std::vector<std::string>& answer,
                    const std::vector<std::string>& code) {
  if (answer.empty()) return false;
  for (size_t start = 0; start + answer.size() <= code.size(); ++start) {
    bool all = true;
    for (size_t k = 0; k < answer.size(); ++k) all = all && code[start + k] == answer[k];
    if (all) return true;
  }
  return false;
}

TEST(SpanTest, SyntheticCorpusMatchesOracle) {
  std::mt19937 rng(17);
  const char* vocab[] = {"get", "set", "page", "args", "list", "map", "index", "value"};
  std::vector<QAPair> pairs;
  for (int i = 0; i < 80; ++i) {
    std::vector<std::string> code;
    for (int k = 0; k < 12; ++k) code.push_back(vocab[rng() % 8]);
    std::vector<std::string> answer;
    if (i % 20 == 0) {
      answer.assign(code.begin() + 3, code.begin() + 6);
    } else {
      answer = {"none", vocab[rng() % 8]};
    }
    pairs.push_back(Pair("c" + std::to_string(i), code, "What?", Join(answer, " ")));
  }
  int oracle = 0;
  for (const QAPair& p : pairs) {
    oracle += BruteForceSpan(SplitWhitespace(p.answer), p.code_tokens);
  }
  EXPECT_EQ(oracle, 4);
  EXPECT_DOUBLE_EQ(SpanRate(pairs), 5.0);
  EXPECT_LE(SpanRate(pairs), ExtractionRate(pairs));
}

TEST(SpanTest, SpanRateNeverExceedsExtractionRate) {
  std::mt19937 rng(23);
  const char* vocab[] = {"a", "b", "c", "d", "e"};
  for (int corpus = 0; corpus < 50; ++corpus) {
    std::vector<QAPair> pairs;
    for (int i = 0; i < 30; ++i) {
      std::vector<std::string> code, answer;
      for (int k = 0; k < 6; ++k) code.push_back(vocab[rng() % 5]);
      for (int k = 0; k < static_cast<int>(rng() % 4); ++k) answer.push_back(vocab[rng() % 5]);
      pairs.push_back(Pair("c", code, "What?", Join(answer, " ")));
    }
    for (const QAPair& p : pairs) {
      if (IsSpan(p.answer, p.code_tokens)) {
        EXPECT_TRUE(IsExtractable(p.answer, p.code_tokens));
      }
    }
    EXPECT_LE(SpanRate(pairs), ExtractionRate(pairs));
  }
}

TEST(DistributionTest, SumsToOneHundred) {
  std::vector<QAPair> pairs;
  for (const char* q : kTableTwoQuestions) pairs.push_back(Pair("c", {}, q, "a"));
  pairs.push_back(Pair("c", {}, "Does it work?", "Yes"));
  pairs.push_back(Pair("c", {}, "Whom does it call?", "x"));
  double sum = 0;
  for (const auto& [type, pct] : QuestionTypeDistribution(pairs)) sum += pct;
  EXPECT_NEAR(sum, 100.0, 0.01);
  StatsReport r = BuildReport(pairs, {}, {});
  EXPECT_EQ(r.distribution.size(), QuestionTypes().size());
  EXPECT_TRUE(r.splits[1].empty);
  EXPECT_NE(ReportTable(r).find("dev split is empty"), std::string::npos);
}

}  // namespace
}  // namespace codeqa::analysis
