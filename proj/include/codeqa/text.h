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

#ifndef CODEQA_TEXT_H_
#define CODEQA_TEXT_H_

#include <string>
#include <string_view>
#include <vector>

namespace codeqa {

std::string ToLower(std::string_view s);
bool EqualsIgnoreCase(std::string_view a, std::string_view b);

std::vector<std::string> SplitWhitespace(std::string_view s);
std::string Join(const std::vector<std::string>& parts, std::string_view sep);
std::string CollapseWhitespace(std::string_view s);
std::string Trim(std::string_view s);

// True for tokens made only of ASCII punctuation, e.g. "." or "--".
bool IsPunctuationToken(std::string_view token);

// Joins tokens with single spaces, attaching closing punctuation and
// clitics ("n't", "'s") to the preceding token.
std::string Detokenize(const std::vector<std::string>& tokens);

// Uppercases the first character; the rest is left alone.
std::string SentenceCase(std::string s);

// Drops trailing ASCII punctuation and whitespace.
std::string StripTerminalPunctuation(std::string_view s);

// Case-insensitive match of `word` in `text` bounded by non-word characters
// (or the string ends) on both sides.
bool ContainsWord(std::string_view text, std::string_view word);

// Case-insensitive check that `text` begins with `prefix` followed by a
// non-word character or the end of the string.
bool StartsWithWord(std::string_view text, std::string_view prefix);

// "Word" means the first letter is uppercase and at least one of the
// remaining letters is lowercase, e.g. "The" but not "URL" or "the".
bool IsCapitalizedWord(std::string_view token);
std::string LowerFirst(std::string s);

}  // namespace codeqa

#endif  // CODEQA_TEXT_H_
