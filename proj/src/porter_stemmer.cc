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


#include "codeqa/porter_stemmer.h"

#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "codeqa/text.h"

namespace codeqa::metrics {
namespace {

using Condition = std::function<bool(const std::string&)>;

struct Rule {
  std::string suffix;
  std::string replacement;
  Condition condition;  // empty means unconditional
};

bool IsVowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

bool EndsWith(const std::string& word, std::string_view suffix) {
  return word.size() >= suffix.size() &&
         word.compare(word.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string DropSuffix(const std::string& word, size_t n) {
  return word.substr(0, word.size() - n);
}

// A run of y's alternates starting from the letter before it.
bool IsConsonant(const std::string& word, int i) {
  if (IsVowel(word[i])) return false;
  if (word[i] == 'y') {
    bool negate = false;
    while (i > 0 && word[i] == 'y') {
      negate = !negate;
      --i;
    }
    return !IsVowel(word[i]) != negate;
  }
  return true;
}

// Measure and vowel tests use a slightly different y rule: a leading y is a
// consonant and every later y flips the previous flag.
std::vector<bool> ConsonantFlags(const std::string& word) {
  std::vector<bool> flags;
  flags.reserve(word.size());
  for (size_t i = 0; i < word.size(); ++i) {
    char c = word[i];
    if (IsVowel(c)) {
      flags.push_back(false);
    } else if (c == 'y') {
      flags.push_back(i == 0 ? true : !flags[i - 1]);
    } else {
      flags.push_back(true);
    }
  }
  return flags;
}

int Measure(const std::string& stem) {
  std::vector<bool> flags = ConsonantFlags(stem);
  int m = 0;
  for (size_t i = 1; i < flags.size(); ++i) {
    if (!flags[i - 1] && flags[i]) ++m;
  }
  return m;
}

bool PositiveMeasure(const std::string& stem) { return Measure(stem) > 0; }

bool ContainsVowel(const std::string& stem) {
  for (bool consonant : ConsonantFlags(stem)) {
    if (!consonant) return true;
  }
  return false;
}

bool EndsDoubleConsonant(const std::string& word) {
  int n = static_cast<int>(word.size());
  return n >= 2 && word[n - 1] == word[n - 2] && IsConsonant(word, n - 1);
}

bool EndsCvc(const std::string& word) {
  int n = static_cast<int>(word.size());
  if (n >= 3 && IsConsonant(word, n - 3) && !IsConsonant(word, n - 2) &&
      IsConsonant(word, n - 1) && word[n - 1] != 'w' && word[n - 1] != 'x' &&
      word[n - 1] != 'y') {
    return true;
  }
  return n == 2 && !IsConsonant(word, 0) && IsConsonant(word, 1);
}

// The first rule whose suffix matches decides; a failed condition leaves the
// word unchanged. The "*d" suffix stands for any double consonant.
std::string ApplyRules(const std::string& word, const std::vector<Rule>& rules) {
  for (const Rule& rule : rules) {
    if (rule.suffix == "*d" && EndsDoubleConsonant(word)) {
      std::string stem = DropSuffix(word, 2);
      if (!rule.condition || rule.condition(stem)) {
        return stem + rule.replacement;
      }
      return word;
    }
    if (EndsWith(word, rule.suffix)) {
      std::string stem = DropSuffix(word, rule.suffix.size());
      if (!rule.condition || rule.condition(stem)) {
        return stem + rule.replacement;
      }
      return word;
    }
  }
  return word;
}

std::string Step1a(const std::string& word) {
  if (EndsWith(word, "ies") && word.size() == 4) {
    return DropSuffix(word, 3) + "ie";
  }
  return ApplyRules(word, {{"sses", "ss", nullptr},
                           {"ies", "i", nullptr},
                           {"ss", "ss", nullptr},
                           {"s", "", nullptr}});
}

std::string Step1b(const std::string& word) {
  if (EndsWith(word, "ied")) {
    return DropSuffix(word, 3) + (word.size() == 4 ? "ie" : "i");
  }
  if (EndsWith(word, "eed")) {
    std::string stem = DropSuffix(word, 3);
    return Measure(stem) > 0 ? stem + "ee" : word;
  }
  std::string intermediate;
  bool found = false;
  for (std::string_view suffix : {"ed", "ing"}) {
    if (EndsWith(word, suffix)) {
      intermediate = DropSuffix(word, suffix.size());
      if (ContainsVowel(intermediate)) {
        found = true;
        break;
      }
    }
  }
  if (!found) return word;
  char last = intermediate.back();
  return ApplyRules(
      intermediate,
      {{"at", "ate", nullptr},
       {"bl", "ble", nullptr},
       {"iz", "ize", nullptr},
       {"*d", std::string(1, last),
        [last](const std::string&) {
          return last != 'l' && last != 's' && last != 'z';
        }},
       {"", "e", [](const std::string& stem) {
          return Measure(stem) == 1 && EndsCvc(stem);
        }}});
}

std::string Step1c(const std::string& word) {
  return ApplyRules(word, {{"y", "i", [](const std::string& stem) {
                              return stem.size() > 1 &&
                                     IsConsonant(stem, stem.size() - 1);
                            }}});
}

std::string Step2(const std::string& word) {
  if (EndsWith(word, "alli") && PositiveMeasure(DropSuffix(word, 4))) {
    return Step2(DropSuffix(word, 4) + "al");
  }
  const Condition pos = PositiveMeasure;
  std::vector<Rule> rules = {
      {"ational", "ate", pos}, {"tional", "tion", pos}, {"enci", "ence", pos},
      {"anci", "ance", pos},   {"izer", "ize", pos},    {"bli", "ble", pos},
      {"alli", "al", pos},     {"entli", "ent", pos},   {"eli", "e", pos},
      {"ousli", "ous", pos},   {"ization", "ize", pos}, {"ation", "ate", pos},
      {"ator", "ate", pos},    {"alism", "al", pos},    {"iveness", "ive", pos},
      {"fulness", "ful", pos}, {"ousness", "ous", pos}, {"aliti", "al", pos},
      {"iviti", "ive", pos},   {"biliti", "ble", pos},  {"fulli", "ful", pos},
      // The measure is taken on the word minus "ogi", not on the stem.
      {"logi", "log", [&word](const std::string&) {
         return PositiveMeasure(DropSuffix(word, 3));
       }}};
  return ApplyRules(word, rules);
}

std::string Step3(const std::string& word) {
  const Condition pos = PositiveMeasure;
  return ApplyRules(word, {{"icate", "ic", pos},
                           {"ative", "", pos},
                           {"alize", "al", pos},
                           {"iciti", "ic", pos},
                           {"ical", "ic", pos},
                           {"ful", "", pos},
                           {"ness", "", pos}});
}

std::string Step4(const std::string& word) {
  const Condition gt1 = [](const std::string& stem) {
    return Measure(stem) > 1;
  };
  return ApplyRules(
      word, {{"al", "", gt1},    {"ance", "", gt1},  {"ence", "", gt1},
             {"er", "", gt1},    {"ic", "", gt1},    {"able", "", gt1},
             {"ible", "", gt1},  {"ant", "", gt1},   {"ement", "", gt1},
             {"ment", "", gt1},  {"ent", "", gt1},
             {"ion", "",
              [](const std::string& stem) {
                return Measure(stem) > 1 &&
                       (stem.back() == 's' || stem.back() == 't');
              }},
             {"ou", "", gt1},    {"ism", "", gt1},   {"ate", "", gt1},
             {"iti", "", gt1},   {"ous", "", gt1},   {"ive", "", gt1},
             {"ize", "", gt1}});
}

std::string Step5a(const std::string& word) {
  if (EndsWith(word, "e")) {
    std::string stem = DropSuffix(word, 1);
    int m = Measure(stem);
    if (m > 1) return stem;
    if (m == 1 && !EndsCvc(stem)) return stem;
  }
  return word;
}

std::string Step5b(const std::string& word) {
  return ApplyRules(word, {{"ll", "l", [&word](const std::string&) {
                              return Measure(DropSuffix(word, 1)) > 1;
                            }}});
}

const std::unordered_map<std::string, std::string>& IrregularForms() {
  static const auto* pool = new std::unordered_map<std::string, std::string>{
      {"sky", "sky"},         {"skies", "sky"},       {"dying", "die"},
      {"lying", "lie"},       {"tying", "tie"},       {"news", "news"},
      {"innings", "inning"},  {"inning", "inning"},   {"outings", "outing"},
      {"outing", "outing"},   {"cannings", "canning"}, {"canning", "canning"},
      {"howe", "howe"},       {"proceed", "proceed"}, {"exceed", "exceed"},
      {"succeed", "succeed"}};
  return *pool;
}

}  // namespace

std::string PorterStem(std::string_view word) {
  std::string stem = ToLower(word);
  const auto& pool = IrregularForms();
  if (auto it = pool.find(stem); it != pool.end()) return it->second;
  if (word.size() <= 2) return stem;
  stem = Step1a(stem);
  stem = Step1b(stem);
  stem = Step1c(stem);
  stem = Step2(stem);
  stem = Step3(stem);
  stem = Step4(stem);
  stem = Step5a(stem);
  stem = Step5b(stem);
  return stem;
}

}  // namespace codeqa::metrics
