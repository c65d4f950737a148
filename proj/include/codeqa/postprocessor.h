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


#ifndef CODEQA_POSTPROCESSOR_H_
#define CODEQA_POSTPROCESSOR_H_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "codeqa/qa_pair.h"

namespace codeqa::post {

struct FilterConfig {
  std::set<std::string> pronouns;
  std::set<std::string> generic_phrases;

  static FilterConfig Default();
};

// Why an answer is too vague to keep, or nullopt to keep it. Pronoun-only
// answers are judged after dropping articles and punctuation; generic
// phrases ("this method") are matched on the lowercased answer without
// terminal punctuation.
std::optional<std::string> AmbiguityReason(std::string_view answer,
                                           const FilterConfig& config);

struct FilterResult {
  std::vector<QAPair> kept;
  std::map<std::string, int> drops;  // reason -> count
};
FilterResult FilterAmbiguous(const std::vector<QAPair>& pairs,
                             const FilterConfig& config);

struct BalanceResult {
  std::vector<QAPair> pairs;
  int deleted = 0;
};

// Deletes randomly chosen "Yes" pairs until yes / (yes + no) is at most
// `target_yes_ratio`, keeping as many as that allows. Everything else keeps
// its place. Throws UsageError unless 0 < ratio < 1.
BalanceResult BalanceYesNo(const std::vector<QAPair>& pairs,
                           double target_yes_ratio, uint64_t seed);

// "8:1:1" -> {8, 1, 1}. Three positive integers; UsageError otherwise.
std::vector<int> ParseRatios(std::string_view text);

// Largest-remainder apportionment of n items; ties go to the earlier part.
std::vector<size_t> SplitSizes(size_t n, const std::vector<int>& ratios);

// Seeded shuffle, then train/dev/test by `ratios`. Writes the split field
// and returns the pairs in input order. With `group_by_code` whole codes
// are shuffled and each lands in the split whose share holds its first
// pair. Throws ValidationError with fewer pairs than splits.
std::vector<QAPair> AssignSplits(std::vector<QAPair> pairs,
                                 const std::vector<int>& ratios, uint64_t seed,
                                 bool group_by_code);

}  // namespace codeqa::post

#endif  // CODEQA_POSTPROCESSOR_H_
