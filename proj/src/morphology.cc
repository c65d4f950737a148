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

#include "codeqa/morphology.h"

#include <array>
#include <cctype>

#include "codeqa/text.h"

namespace codeqa {
namespace {

template <size_t N>
bool InList(const std::array<std::string_view, N>& list, std::string_view form) {
  const std::string lower = ToLower(form);
  for (std::string_view item : list) {
    if (item == lower) return true;
  }
  return false;
}

bool IsVowel(char c) {
  return std::string_view("aeiou").find(static_cast<char>(
             std::tolower(static_cast<unsigned char>(c)))) != std::string_view::npos;
}

bool EndsWith(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

constexpr std::array<std::string_view, 15> kInvertible = {
    "be", "have", "do", "will", "would", "shall", "should", "can",
    "could", "may", "might", "must", "ought", "need", "dare"};

constexpr std::array<std::string_view, 32> kFiniteAux = {
    "am",  "is",    "are",   "was",    "were",  "'s",    "'re",   "'m",
    "has", "have",  "had",   "'ve",    "'d",    "do",    "does",  "did",
    "will", "would", "shall", "should", "can",  "could", "may",   "might",
    "must", "'ll",  "wo",    "ca",     "sha",   "ought", "gets",  "got"};

constexpr std::array<std::string_view, 8> kFiniteBe = {"am", "is", "are", "was",
                                                       "were", "'s", "'re", "'m"};

constexpr std::array<std::string_view, 4> kNegation = {"not", "n't", "never", "nt"};

constexpr std::array<std::string_view, 7> kPluralPronouns = {"i",   "you",   "we",   "they",
                                                             "these", "those", "both"};

constexpr std::array<std::string_view, 9> kWhWords = {"what", "when", "where", "why", "how",
                                                      "which", "who", "whom", "whose"};

}  // namespace

std::string ThirdPersonSingular(std::string_view lemma) {
  const std::string lower = ToLower(lemma);
  std::string out(lemma);
  if (lower.empty()) return out;
  if (lower == "be") return std::isupper(static_cast<unsigned char>(out[0])) ? "Is" : "is";
  if (lower == "have") return out.substr(0, 2) + "s";
  if (EndsWith(lower, "s") || EndsWith(lower, "x") || EndsWith(lower, "z") ||
      EndsWith(lower, "ch") || EndsWith(lower, "sh") ||
      (EndsWith(lower, "o") && lower.size() > 1 && !IsVowel(lower[lower.size() - 2]))) {
    return out + "es";
  }
  if (EndsWith(lower, "y") && lower.size() > 1 && !IsVowel(lower[lower.size() - 2])) {
    return out.substr(0, out.size() - 1) + "ies";
  }
  return out + "s";
}

bool IsInvertibleAuxLemma(std::string_view lemma) { return InList(kInvertible, lemma); }

bool IsFiniteAuxForm(std::string_view form) { return InList(kFiniteAux, form); }

bool IsFiniteBeForm(std::string_view form) { return InList(kFiniteBe, form); }

std::string NormalizeAux(std::string_view form) {
  const std::string lower = ToLower(form);
  if (lower == "wo" || lower == "'ll") return "will";
  if (lower == "ca") return "can";
  if (lower == "sha") return "shall";
  if (lower == "'re") return "are";
  if (lower == "'m") return "am";
  if (lower == "'s") return "is";
  if (lower == "'ve") return "have";
  if (lower == "'d") return "would";
  return lower;
}

bool IsNegationWord(std::string_view form) { return InList(kNegation, form); }

std::string NegationText(std::string_view form) {
  const std::string lower = ToLower(form);
  return lower == "n't" || lower == "nt" ? "not" : std::string(form);
}

bool IsPluralPronoun(std::string_view form) { return InList(kPluralPronouns, form); }

bool IsWhWord(std::string_view form) { return InList(kWhWords, form); }

}  // namespace codeqa
