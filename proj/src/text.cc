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

#include <algorithm>
#include <cctype>

namespace codeqa {
namespace {

bool IsWordChar(char c) {
  unsigned char u = static_cast<unsigned char>(c);
  return std::isalnum(u) || c == '_' || u >= 0x80;
}

bool AttachesLeft(std::string_view tok) {
  static constexpr std::string_view kLeft[] = {
      ",", ".", ";", ":", "!", "?", ")", "]", "}", "%", "n't", "N'T",
      "'s", "'S", "'re", "'m", "'ve", "'d", "'ll", "..."};
  return std::find(std::begin(kLeft), std::end(kLeft), tok) != std::end(kLeft);
}

bool AttachesRight(std::string_view tok) {
  return tok == "(" || tok == "[" || tok == "{";
}

}  // namespace

std::string ToLower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

bool EqualsIgnoreCase(std::string_view a, std::string_view b) {
  return a.size() == b.size() && ToLower(a) == ToLower(b);
}

std::vector<std::string> SplitWhitespace(std::string_view s) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string Join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out.append(sep);
    out.append(parts[i]);
  }
  return out;
}

std::string CollapseWhitespace(std::string_view s) {
  return Join(SplitWhitespace(s), " ");
}

std::string Trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool IsPunctuationToken(std::string_view token) {
  if (token.empty()) return false;
  return std::all_of(token.begin(), token.end(), [](unsigned char c) {
    return std::ispunct(c) != 0;
  });
}

std::string Detokenize(const std::vector<std::string>& tokens) {
  std::string out;
  bool glue_next = true;
  for (const std::string& tok : tokens) {
    if (tok.empty()) continue;
    if (!glue_next && !AttachesLeft(tok)) out.push_back(' ');
    out.append(tok);
    glue_next = AttachesRight(tok);
  }
  return out;
}

std::string SentenceCase(std::string s) {
  if (!s.empty()) {
    s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  }
  return s;
}

std::string StripTerminalPunctuation(std::string_view s) {
  size_t e = s.size();
  while (e > 0) {
    unsigned char c = static_cast<unsigned char>(s[e - 1]);
    if (std::ispunct(c) || std::isspace(c)) {
      --e;
    } else {
      break;
    }
  }
  return std::string(s.substr(0, e));
}

bool ContainsWord(std::string_view text, std::string_view word) {
  if (word.empty()) return false;
  const std::string hay = ToLower(text);
  const std::string needle = ToLower(word);
  size_t pos = 0;
  while ((pos = hay.find(needle, pos)) != std::string::npos) {
    bool left_ok = pos == 0 || !IsWordChar(hay[pos - 1]) || !IsWordChar(needle.front());
    size_t end = pos + needle.size();
    bool right_ok =
        end == hay.size() || !IsWordChar(hay[end]) || !IsWordChar(needle.back());
    if (left_ok && right_ok) return true;
    ++pos;
  }
  return false;
}

bool StartsWithWord(std::string_view text, std::string_view prefix) {
  if (prefix.empty() || text.size() < prefix.size()) return false;
  if (!EqualsIgnoreCase(text.substr(0, prefix.size()), prefix)) return false;
  return text.size() == prefix.size() || !IsWordChar(text[prefix.size()]);
}

bool IsCapitalizedWord(std::string_view token) {
  if (token.empty()) return false;
  if (!std::isupper(static_cast<unsigned char>(token[0]))) return false;
  if (token.size() == 1) return true;
  return std::any_of(token.begin() + 1, token.end(), [](unsigned char c) {
    return std::islower(c) != 0;
  });
}

std::string LowerFirst(std::string s) {
  if (!s.empty()) {
    s[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(s[0])));
  }
  return s;
}

}  // namespace codeqa
