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

#include <gtest/gtest.h>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "codeqa/annotation.h"
#include "codeqa/clause.h"
#include "codeqa/template_registry.h"
#include "codeqa/wh_generator.h"
#include "codeqa/yesno_generator.h"

namespace codeqa {
namespace {

using annotation::AnnotatedComment;
using annotation::SrlFrame;
using annotation::TokenSpan;

std::vector<AnnotatedComment> LoadAnnotations(const std::string& name) {
  std::ifstream in(std::string(CODEQA_TEST_DATA_DIR) + "/" + name);
  EXPECT_TRUE(in) << name;
  std::vector<AnnotatedComment> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) out.push_back(annotation::ParseAnnotation(line));
  }
  return out;
}

// Lowercase, drop punctuation, collapse spaces.
std::string Loose(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (std::ispunct(static_cast<unsigned char>(c))) continue;
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!out.empty() && out.back() != ' ') out += ' ';
      continue;
    }
    out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  if (!out.empty() && out.back() == ' ') out.pop_back();
  return out;
}

struct Expected {
  const char* id;
  const char* question;
  const char* answer;
};

const Expected kTemplateRows[] = {
    {"tpl-nsubj", "What will be associated with the index when it gets created?", "The aliases."},
    {"tpl-dobj", "What does the code trim from the given string?",
     "All occurrences of the supplied leading character."},
    {"tpl-xcomp", "What does the function try if the dialog is open and a stream is set?",
     "To request new data."},
    {"tpl-tmp", "When does the code take a screenshot?", "After every test."},
    {"tpl-loc", "Where does this method position the stream?",
     "At the first central directory record."},
    {"tpl-mnr", "How does the code create an instance of a class?",
     "Using the specified classloader."},
    {"tpl-cau", "Why does the code always return true?", "Since we wanna get all vars in scope."},
    {"tpl-prp", "For what purpose does the function add and remove entries from the statements "
               "collection?",
     "To munge wikibase rdf exports into a more queryable form."},
};

TEST(TemplateGolden, EveryRowIsGenerated) {
  const auto comments = LoadAnnotations("template_annotations.jsonl");
  ASSERT_EQ(comments.size(), 8u);
  const wh::TemplateRegistry registry = wh::TemplateRegistry::Default();
  for (const Expected& row : kTemplateRows) {
    auto it = std::find_if(comments.begin(), comments.end(),
                           [&](const AnnotatedComment& c) { return c.id == row.id; });
    ASSERT_NE(it, comments.end()) << row.id;
    const wh::WhResult result = wh::GenerateWh(*it, registry, {});
    bool found = false;
    for (const QAPair& p : result.pairs) {
      if (Loose(p.question) == Loose(row.question) && Loose(p.answer) == Loose(row.answer)) {
        found = true;
        EXPECT_EQ(p.question, row.question);
        EXPECT_EQ(p.answer, row.answer);
      }
    }
    EXPECT_TRUE(found) << row.id << ": " << row.question;
  }
}

TEST(TemplateGolden, QuestionsEndWithQuestionMark) {
  const wh::TemplateRegistry registry = wh::TemplateRegistry::Default();
  for (const AnnotatedComment& c : LoadAnnotations("template_annotations.jsonl")) {
    for (const QAPair& p : wh::GenerateWh(c, registry, {}).pairs) {
      EXPECT_EQ(p.question.back(), '?') << p.question;
      EXPECT_FALSE(p.answer.empty());
      EXPECT_TRUE(std::isupper(static_cast<unsigned char>(p.question[0]))) << p.question;
    }
  }
}

TEST(TemplateGolden, AnswerTokensComeFromTheComment) {
  const wh::TemplateRegistry registry = wh::TemplateRegistry::Default();
  for (const AnnotatedComment& c : LoadAnnotations("template_annotations.jsonl")) {
    std::string joined;
    for (const std::string& t : c.tokens) joined += Loose(t) + " ";
    for (const QAPair& p : wh::GenerateWh(c, registry, {}).pairs) {
      EXPECT_NE(joined.find(Loose(p.answer)), std::string::npos) << p.answer;
    }
  }
}

TEST(TemplateGolden, CapLimitsPairs) {
  const wh::TemplateRegistry registry = wh::TemplateRegistry::Default();
  for (const AnnotatedComment& c : LoadAnnotations("template_annotations.jsonl")) {
    const auto all = wh::GenerateWh(c, registry, {}).pairs.size();
    const auto one = wh::GenerateWh(c, registry, {.max_pairs_per_comment = 1});
    EXPECT_EQ(one.pairs.size(), std::min<size_t>(all, 1));
    EXPECT_EQ(one.capped, all - one.pairs.size());
  }
}

TEST(YesNo, NegationFlip) {
  for (const AnnotatedComment& c : LoadAnnotations("yesno_annotations.jsonl")) {
    if (c.id != "yn-03-negated-do") continue;
    const auto result = yesno::GenerateYesNo(c);
    ASSERT_EQ(result.pairs.size(), 1u);
    EXPECT_EQ(result.pairs[0].question, "Do windows have a mode like linux cli example?");
    EXPECT_EQ(result.pairs[0].answer, "No");
    return;
  }
  FAIL() << "yn-03-negated-do missing";
}

TEST(YesNo, OracleSetMatchesExactly) {
  std::ifstream in(std::string(CODEQA_TEST_DATA_DIR) + "/yesno_expected.tsv");
  ASSERT_TRUE(in);
  std::map<std::string, std::set<std::pair<std::string, std::string>>> expected;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const size_t a = line.find('\t');
    const size_t b = line.find('\t', a + 1);
    expected[line.substr(0, a)].insert({line.substr(a + 1, b - a - 1), line.substr(b + 1)});
  }
  const auto comments = LoadAnnotations("yesno_annotations.jsonl");
  ASSERT_EQ(comments.size(), 10u);
  ASSERT_EQ(expected.size(), 10u);
  for (const AnnotatedComment& c : comments) {
    std::set<std::pair<std::string, std::string>> got;
    for (const QAPair& p : yesno::GenerateYesNo(c).pairs) got.insert({p.question, p.answer});
    EXPECT_EQ(got, expected[c.id]) << c.id;
  }
}

TEST(YesNo, AnswersAreYesOrNo) {
  for (const AnnotatedComment& c : LoadAnnotations("yesno_annotations.jsonl")) {
    for (const QAPair& p : yesno::GenerateYesNo(c).pairs) {
      EXPECT_TRUE(p.answer == "Yes" || p.answer == "No") << p.answer;
      EXPECT_TRUE(IsYesNo(p));
    }
  }
}

// Random frames for the candidate guard and the object rule.

const std::vector<std::string> kRoleLabels = {
    "ARG0",     "ARG1",     "ARG2",     "ARG3",     "ARGM-TMP", "ARGM-LOC", "ARGM-MNR",
    "ARGM-CAU", "ARGM-PNC", "ARGM-PRP", "ARGM-DIR", "ARGM-ADV", "ARGM-EXT", "ARGM-MOD"};

SrlFrame RandomFrame(std::mt19937& gen, int n) {
  SrlFrame frame;
  frame.predicate_index = std::uniform_int_distribution<int>(0, n - 1)(gen);
  frame.tags.assign(n, "O");
  frame.tags[frame.predicate_index] = "B-V";
  std::uniform_int_distribution<int> coin(0, 2);
  std::uniform_int_distribution<size_t> pick(0, kRoleLabels.size() - 1);
  std::set<std::string> used;
  for (int i = 0; i < n;) {
    if (i == frame.predicate_index || coin(gen) == 0) {
      ++i;
      continue;
    }
    const std::string label = kRoleLabels[pick(gen)];
    if (!used.insert(label).second) {
      ++i;
      continue;
    }
    int len = std::uniform_int_distribution<int>(1, 3)(gen);
    frame.tags[i] = "B-" + label;
    int j = i + 1;
    while (j < n && j < i + len && j != frame.predicate_index) frame.tags[j++] = "I-" + label;
    i = j;
  }
  return frame;
}

AnnotatedComment CommentWith(std::vector<SrlFrame> frames, int n) {
  AnnotatedComment c;
  c.id = "synthetic";
  for (int i = 0; i < n; ++i) {
    c.tokens.push_back("w" + std::to_string(i));
    c.nodes.push_back({i, c.tokens.back(), c.tokens.back(), "NOUN", i == 0 ? -1 : 0,
                       i == 0 ? "root" : "dep"});
  }
  c.ner.assign(n, "O");
  c.frames = std::move(frames);
  return c;
}

// Spans per label read straight off the tags.
std::map<std::string, std::vector<std::pair<int, int>>> Spans(const SrlFrame& f) {
  std::map<std::string, std::vector<std::pair<int, int>>> out;
  const int n = static_cast<int>(f.tags.size());
  for (int i = 0; i < n; ++i) {
    if (f.tags[i].rfind("B-", 0) != 0) continue;
    const std::string label = f.tags[i].substr(2);
    int j = i + 1;
    while (j < n && f.tags[j] == "I-" + label) ++j;
    if (label != "V") out[label].push_back({i, j});
  }
  return out;
}

TEST(AlgorithmGuards, SrlCandidatesNeedCoreArgAndModifier) {
  const std::set<std::string> modifiers = {"ARGM-TMP", "ARGM-LOC", "ARGM-MNR",
                                           "ARGM-CAU", "ARGM-PNC", "ARGM-PRP"};
  const wh::TemplateRegistry registry = wh::TemplateRegistry::Default();
  std::mt19937 gen(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = std::uniform_int_distribution<int>(3, 12)(gen);
    const SrlFrame frame = RandomFrame(gen, n);
    const auto spans = Spans(frame);
    std::set<std::tuple<std::string, int, int>> expected;
    if (spans.contains("ARG0") || spans.contains("ARG1")) {
      for (const auto& [label, list] : spans) {
        if (!modifiers.contains(label)) continue;
        for (auto [b, e] : list) expected.insert({label, b, e});
      }
    }
    std::set<std::tuple<std::string, int, int>> got;
    for (const auto& cand : wh::SrlCandidates(CommentWith({frame}, n), registry)) {
      got.insert({cand.label, cand.span.begin, cand.span.end});
    }
    EXPECT_EQ(got, expected) << "trial " << trial;
  }
}

TEST(AlgorithmGuards, DependencyObjectFollowsAnswerMembership) {
  std::mt19937 gen(77);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = std::uniform_int_distribution<int>(3, 12)(gen);
    const SrlFrame frame = RandomFrame(gen, n);
    const auto spans = Spans(frame);
    const int head = std::uniform_int_distribution<int>(0, n - 1)(gen);
    auto inside = [&](const std::string& label) {
      if (!spans.contains(label)) return false;
      for (auto [b, e] : spans.at(label)) {
        if (head >= b && head < e) return true;
      }
      return false;
    };
    std::string expected;
    if (inside("ARG1")) {
      expected = "ARG1";
    } else if (!inside("ARG2") && spans.contains("ARG1") && spans.contains("ARG2")) {
      expected = "ARG1";
    } else if (spans.contains("ARG2")) {
      expected = "ARG2";
    }
    const std::string got = wh::ChooseObjectLabel(annotation::FrameArguments(frame), "ARG0",
                                                  head, wh::Heuristic::kDependency);
    EXPECT_EQ(got, expected) << "trial " << trial;
    ++checked;
  }
  EXPECT_EQ(checked, 200);
}

TEST(AlgorithmGuards, SemanticRoleObjectPrefersArg1) {
  annotation::FrameArgs args;
  args["ARG2"] = {TokenSpan{3, 4}};
  EXPECT_EQ(wh::ChooseObjectLabel(args, "ARG0", std::nullopt, wh::Heuristic::kSemanticRole),
            "ARG2");
  args["ARG1"] = {TokenSpan{1, 2}};
  EXPECT_EQ(wh::ChooseObjectLabel(args, "ARG0", std::nullopt, wh::Heuristic::kSemanticRole),
            "ARG1");
  // The subject's own label is never reused as the object.
  EXPECT_EQ(wh::ChooseObjectLabel(args, "ARG1", std::nullopt, wh::Heuristic::kSemanticRole),
            "ARG2");
}

}  // namespace
}  // namespace codeqa
