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


#ifndef CODEQA_ANALYZER_H_
#define CODEQA_ANALYZER_H_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "codeqa/qa_pair.h"

namespace codeqa::analysis {

// Question types in report order.
const std::vector<std::string>& QuestionTypes();

// Longest matching prefix among the wh types (so "For what purpose" wins
// over "What"), then "Yes/No" for a leading auxiliary or do-form, else
// "Other". Case-insensitive.
std::string CategorizeQuestion(std::string_view question);

struct SplitStats {
  std::string name;
  size_t pairs = 0;
  size_t unique_codes = 0;
  size_t unique_code_tokens = 0;
  size_t unique_question_tokens = 0;
  size_t unique_answer_tokens = 0;
  // Per unique code for code tokens, per pair for questions and answers.
  double avg_code_tokens = 0;
  double avg_question_tokens = 0;
  double avg_answer_tokens = 0;
  bool empty = true;
};

SplitStats ComputeSplitStats(std::string name, const std::vector<QAPair>& pairs);

// Lowercase, drop terminal punctuation, collapse whitespace.
std::string NormalizeForRepetition(std::string_view answer);

// Percent of non-yes/no answers in `eval` whose normalized text is also a
// training answer. 0 when `eval` has no such answers.
double RepetitionRate(const std::vector<QAPair>& eval,
                      const std::vector<QAPair>& train);

// Answer tokens are the lowercased whitespace tokens of the answer without
// terminal punctuation. An empty answer is neither a span nor extractable.
bool IsSpan(std::string_view answer, const std::vector<std::string>& code_tokens);
bool IsExtractable(std::string_view answer,
                   const std::vector<std::string>& code_tokens);
double SpanRate(const std::vector<QAPair>& pairs);
double ExtractionRate(const std::vector<QAPair>& pairs);

// (type, percent) for every type in QuestionTypes(), from the questions.
std::vector<std::pair<std::string, double>> QuestionTypeDistribution(
    const std::vector<QAPair>& pairs);

struct StatsReport {
  std::vector<SplitStats> splits;
  std::vector<std::pair<std::string, double>> distribution;
  double repetition_dev = 0;
  double repetition_test = 0;
  double span_rate = 0;
  double extraction_rate = 0;
};

StatsReport BuildReport(const std::vector<QAPair>& train,
                        const std::vector<QAPair>& dev,
                        const std::vector<QAPair>& test);
std::string ReportJson(const StatsReport& report);
std::string ReportTable(const StatsReport& report);

}  // namespace codeqa::analysis

#endif  // CODEQA_ANALYZER_H_
