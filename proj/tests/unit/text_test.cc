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

#include "codeqa/text.h"

#include <gtest/gtest.h>

namespace codeqa {
namespace {

TEST(TextTest, Detokenize) {
  EXPECT_EQ(Detokenize({"What", "does", "it", "do", "?"}), "What does it do?");
  EXPECT_EQ(Detokenize({"do", "n't", "stop", ",", "please"}), "don't stop, please");
  EXPECT_EQ(Detokenize({"call", "(", "x", ")"}), "call (x)");
  EXPECT_EQ(Detokenize({}), "");
}

TEST(TextTest, StripTerminalPunctuation) {
  EXPECT_EQ(StripTerminalPunctuation("Returns true. "), "Returns true");
  EXPECT_EQ(StripTerminalPunctuation("?!"), "");
  EXPECT_EQ(StripTerminalPunctuation("a.b"), "a.b");
}

TEST(TextTest, ContainsWordRespectsBoundaries) {
  EXPECT_TRUE(ContainsWord("Fix this TODO soon", "todo"));
  EXPECT_FALSE(ContainsWord("todolist", "todo"));
  EXPECT_TRUE(ContainsWord("see @deprecated tag", "@deprecated"));
  EXPECT_FALSE(ContainsWord("", "x"));
}

TEST(TextTest, Casing) {
  EXPECT_TRUE(IsCapitalizedWord("The"));
  EXPECT_FALSE(IsCapitalizedWord("URL"));
  EXPECT_FALSE(IsCapitalizedWord("the"));
  EXPECT_EQ(SentenceCase("what is it"), "What is it");
  EXPECT_EQ(LowerFirst("Returns"), "returns");
  EXPECT_EQ(SentenceCase(""), "");
}

TEST(TextTest, Whitespace) {
  EXPECT_EQ(CollapseWhitespace("  a \t b\n"), "a b");
  EXPECT_EQ(SplitWhitespace(" a  b ").size(), 2u);
  EXPECT_EQ(Trim("  x "), "x");
  EXPECT_TRUE(StartsWithWord("For what purpose does", "for what purpose"));
  EXPECT_FALSE(StartsWithWord("Whatever", "what"));
}

}  // namespace
}  // namespace codeqa
