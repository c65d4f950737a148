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

#include "codeqa/record.h"

#include <gtest/gtest.h>

#include <sstream>

namespace codeqa::ingest {
namespace {

TEST(TokenizeCodeTest, JavaLiteralsAndComments) {
  const auto tokens = TokenizeCode(
      "int x = 0x1F; // note\nString s = \"a\\\"b\"; /* c */ x += 3.5e2f;",
      Language::kJava);
  const std::vector<std::string> expected = {"int", "x", "=", "_NUM", ";", "String", "s", "=",
                                             "STRING", ";", "x", "+=", "_NUM", ";"};
  EXPECT_EQ(tokens, expected);
}

TEST(TokenizeCodeTest, PythonPrefixesAndTripleQuotes) {
  const auto tokens = TokenizeCode(
      "def f(a):\n    \"\"\"doc \"x\" \"\"\"\n    return rb'\\x00' + a ** 2  # c\n",
      Language::kPython);
  const std::vector<std::string> expected = {"def", "f", "(", "a", ")", ":", "STRING",
                                             "return", "STRING", "+", "a", "**", "_NUM"};
  EXPECT_EQ(tokens, expected);
}

TEST(TokenizeCodeTest, OperatorsUseLongestMatch) {
  EXPECT_EQ(TokenizeCode("a >>>= b", Language::kJava),
            (std::vector<std::string>{"a", ">>>=", "b"}));
  EXPECT_EQ(TokenizeCode("x->y", Language::kJava),
            (std::vector<std::string>{"x", "->", "y"}));
}

TEST(TokenizeCodeTest, UnterminatedInputIsTotal) {
  EXPECT_EQ(TokenizeCode("\"abc", Language::kJava), std::vector<std::string>{"STRING"});
  EXPECT_EQ(TokenizeCode("/* open", Language::kJava), std::vector<std::string>{});
  EXPECT_EQ(TokenizeCode("", Language::kPython), std::vector<std::string>{});
}

TEST(CorpusReaderTest, TalliesErrorsAndSkipsBadLines) {
  std::istringstream in(
      "{\"id\":\"a\",\"language\":\"java\",\"code\":\"int x;\",\"comment\":\"c\"}\n"
      "\n"
      "{\"language\":\"java\",\"code\":\"y\"}\n"
      "not json\n"
      "{\"language\":\"python\",\"code\":\"y\",\"comment\":\"c\"}\n"
      "{\"id\":\"a\",\"language\":\"java\",\"code\":\"z\",\"comment\":\"c\"}\n"
      "{\"language\":\"java\",\"code\":\"z\",\"comment\":\"c\"}\n");
  CorpusReader reader(in, Language::kJava);
  std::vector<CodeCommentRecord> records;
  while (auto r = reader.Next()) records.push_back(*r);
  ASSERT_EQ(records.size(), 2u);
  EXPECT_EQ(records[0].code_tokens, (std::vector<std::string>{"int", "x", ";"}));
  EXPECT_EQ(records[1].id, "java-7");
  const LoadSummary& summary = reader.summary();
  EXPECT_EQ(summary.lines, 6u);
  EXPECT_EQ(summary.records, 2u);
  ASSERT_EQ(summary.errors.size(), 4u);
  EXPECT_EQ(summary.errors[0].line_number, 3u);
  EXPECT_NE(summary.errors[0].message.find("comment"), std::string::npos);
  EXPECT_EQ(summary.errors[3].line_number, 6u);
  EXPECT_NE(summary.errors[3].message.find("duplicate"), std::string::npos);
}

TEST(CorpusReaderTest, EmptyInput) {
  std::istringstream in("");
  CorpusReader reader(in, Language::kPython);
  EXPECT_FALSE(reader.Next().has_value());
  EXPECT_EQ(reader.summary().records, 0u);
}

TEST(CorpusReaderTest, SerializeRoundTrip) {
  CodeCommentRecord record{"p-1", Language::kPython, "x = 'a'", {"x", "=", "STRING"},
                           "Sets x."};
  std::istringstream in(SerializeRecord(record) + "\n");
  CorpusReader reader(in, Language::kPython);
  auto parsed = reader.Next();
  ASSERT_TRUE(parsed.has_value());
  EXPECT_EQ(*parsed, record);
}

}  // namespace
}  // namespace codeqa::ingest
