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


#include "codeqa/postprocessor.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "codeqa/errors.h"
#include "codeqa/random.h"

namespace codeqa::post {
namespace {

QAPair Pair(std::string id, std::string answer, std::string code_id = "c") {
  QAPair p;
  p.id = std::move(id);
  p.code_id = std::move(code_id);
  p.question = "Q?";
  p.answer = std::move(answer);
  return p;
}

std::vector<QAPair> Pool(int yes, int no, int wh = 0) {
  std::vector<QAPair> out;
  for (int i = 0; i < yes; ++i) out.push_back(Pair("y" + std::to_string(i), "Yes"));
  for (int i = 0; i < no; ++i) out.push_back(Pair("n" + std::to_string(i), "No"));
  for (int i = 0; i < wh; ++i) out.push_back(Pair("w" + std::to_string(i), "The file."));
  return out;
}

std::pair<int, int> CountYesNo(const std::vector<QAPair>& pairs) {
  int yes = 0, no = 0;
  for (const QAPair& p : pairs) {
    if (p.answer == "Yes") ++yes;
    if (p.answer == "No") ++no;
  }
  return {yes, no};
}

TEST(RngTest, EngineIsTheStandardOne) {
  std::mt19937_64 engine(5489u);
  engine.discard(9999);
  EXPECT_EQ(engine(), 9981545732273789042ull);
}

TEST(RngTest, BelowAndShuffle) {
  Rng rng(13);
  for (int i = 0; i < 1000; ++i) EXPECT_LT(rng.Below(7), 7u);
  std::vector<int> v(50);
  for (int i = 0; i < 50; ++i) v[i] = i;
  std::vector<int> shuffled = v;
  Rng(1).Shuffle(shuffled);
  EXPECT_NE(shuffled, v);
  std::vector<int> again = v;
  Rng(1).Shuffle(again);
  EXPECT_EQ(again, shuffled);
  std::sort(shuffled.begin(), shuffled.end());
  EXPECT_EQ(shuffled, v);
}

TEST(FilterTest, Examples) {
  FilterConfig c = FilterConfig::Default();
  EXPECT_EQ(AmbiguityReason("this method", c), "generic answer");
  EXPECT_EQ(AmbiguityReason("This method.", c), "generic answer");
  EXPECT_EQ(AmbiguityReason("It.", c), "pronoun-only answer");
  EXPECT_EQ(AmbiguityReason("them and it", c), std::nullopt);  // "and" is content here
  EXPECT_EQ(AmbiguityReason("these", c), "pronoun-only answer");
  EXPECT_EQ(AmbiguityReason("the given child", c), std::nullopt);
  EXPECT_EQ(AmbiguityReason("The given child.", c), std::nullopt);
  EXPECT_EQ(AmbiguityReason("No", c), std::nullopt);
  EXPECT_EQ(AmbiguityReason(" . ", c), "empty answer");

  FilterResult r = FilterAmbiguous({Pair("a", "it"), Pair("b", "the index"),
                                    Pair("c", "the code")},
                                   c);
  ASSERT_EQ(r.kept.size(), 1u);
  EXPECT_EQ(r.kept[0].id, "b");
  EXPECT_EQ(r.drops["pronoun-only answer"], 1);
  EXPECT_EQ(r.drops["generic answer"], 1);
}

TEST(FilterTest, ContentWordAnswersAreNeverDropped) {
  FilterConfig c = FilterConfig::Default();
  std::vector<std::string> pronouns(c.pronouns.begin(), c.pronouns.end());
  const char* content[] = {"index", "child", "stream", "value", "given", "request"};
  std::mt19937 rng(3);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<std::string> words;
    int n = 1 + rng() % 4;
    for (int i = 0; i < n; ++i) words.push_back(pronouns[rng() % pronouns.size()]);
    words.insert(words.begin() + rng() % (words.size() + 1), content[rng() % 6]);
    std::string answer;
    for (const std::string& w : words) answer += w + " ";
    EXPECT_EQ(AmbiguityReason(answer, c), std::nullopt) << answer;
  }
}

TEST(BalanceTest, ReachesTargetWithMinimalDeletions) {
  for (auto [yes, no] : {std::pair{90, 10}, {10, 90}, {50, 50}, {5, 5}, {0, 0}, {7, 0}}) {
    BalanceResult r = BalanceYesNo(Pool(yes, no, 4), 0.5, 13);
    auto [y, n] = CountYesNo(r.pairs);
    EXPECT_EQ(r.deleted, std::max(0, yes - no)) << yes << "/" << no;
    EXPECT_EQ(n, no);
    EXPECT_LE(y, n);
    EXPECT_EQ(r.pairs.size(), static_cast<size_t>(y + n + 4));
  }
}

TEST(BalanceTest, OtherRatiosAndErrors) {
  BalanceResult r = BalanceYesNo(Pool(30, 30), 0.25, 1);
  EXPECT_EQ(CountYesNo(r.pairs).first, 10);
  EXPECT_THROW(BalanceYesNo(Pool(1, 1), 0.0, 1), UsageError);
  EXPECT_THROW(BalanceYesNo(Pool(1, 1), 1.0, 1), UsageError);
}

TEST(BalanceTest, SeededAndOrderPreserving) {
  std::vector<QAPair> pool = Pool(40, 10, 5);
  BalanceResult a = BalanceYesNo(pool, 0.5, 99);
  BalanceResult b = BalanceYesNo(pool, 0.5, 99);
  EXPECT_EQ(a.pairs, b.pairs);
  std::vector<size_t> positions;
  for (const QAPair& p : a.pairs) {
    positions.push_back(std::find(pool.begin(), pool.end(), p) - pool.begin());
  }
  EXPECT_TRUE(std::is_sorted(positions.begin(), positions.end()));
}

TEST(SplitTest, RatiosAndSizes) {
  EXPECT_EQ(ParseRatios("8:1:1"), (std::vector<int>{8, 1, 1}));
  EXPECT_THROW(ParseRatios("8:1"), UsageError);
  EXPECT_THROW(ParseRatios("8:0:1"), UsageError);
  EXPECT_THROW(ParseRatios("8:x:1"), UsageError);
  EXPECT_EQ(SplitSizes(10, {8, 1, 1}), (std::vector<size_t>{8, 1, 1}));
  EXPECT_EQ(SplitSizes(100, {8, 1, 1}), (std::vector<size_t>{80, 10, 10}));
  EXPECT_EQ(SplitSizes(10000, {8, 1, 1}), (std::vector<size_t>{8000, 1000, 1000}));
  EXPECT_EQ(SplitSizes(11, {8, 1, 1}), (std::vector<size_t>{9, 1, 1}));
  EXPECT_EQ(SplitSizes(3, {1, 1, 1}), (std::vector<size_t>{1, 1, 1}));
}

TEST(SplitTest, SizesWithinOneOfExact) {
  for (size_t n = 3; n < 400; ++n) {
    auto sizes = SplitSizes(n, {8, 1, 1});
    EXPECT_EQ(sizes[0] + sizes[1] + sizes[2], n);
    EXPECT_LE(std::abs(static_cast<double>(sizes[0]) - n * 0.8), 1.0);
    EXPECT_LE(std::abs(static_cast<double>(sizes[1]) - n * 0.1), 1.0);
  }
}

TEST(SplitTest, PairLevel) {
  std::vector<QAPair> pairs;
  for (int i = 0; i < 100; ++i) pairs.push_back(Pair("p" + std::to_string(i), "x"));
  auto a = AssignSplits(pairs, {8, 1, 1}, 13, false);
  auto b = AssignSplits(pairs, {8, 1, 1}, 13, false);
  EXPECT_EQ(a, b);
  std::map<Split, int> sizes;
  for (size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].id, pairs[i].id);
    ++sizes[a[i].split];
  }
  EXPECT_EQ(sizes[Split::kTrain], 80);
  EXPECT_EQ(sizes[Split::kDev], 10);
  EXPECT_EQ(sizes[Split::kTest], 10);
  EXPECT_NE(AssignSplits(pairs, {8, 1, 1}, 14, false), a);
  EXPECT_THROW(AssignSplits({pairs[0], pairs[1]}, {8, 1, 1}, 1, false), ValidationError);
}

TEST(SplitTest, GroupByCodeKeepsCodesTogether) {
  std::mt19937 rng(8);
  std::vector<QAPair> pairs;
  for (int i = 0; i < 500; ++i) {
    pairs.push_back(Pair("p" + std::to_string(i), "x", "code" + std::to_string(rng() % 120)));
  }
  auto out = AssignSplits(pairs, {8, 1, 1}, 21, true);
  std::map<std::string, std::set<Split>> seen;
  std::map<Split, int> sizes;
  for (const QAPair& p : out) {
    seen[p.code_id].insert(p.split);
    ++sizes[p.split];
  }
  for (const auto& [code, splits] : seen) EXPECT_EQ(splits.size(), 1u) << code;
  EXPECT_GT(sizes[Split::kDev], 0);
  EXPECT_GT(sizes[Split::kTest], 0);
  EXPECT_EQ(out, AssignSplits(pairs, {8, 1, 1}, 21, true));
}

}  // namespace
}  // namespace codeqa::post
