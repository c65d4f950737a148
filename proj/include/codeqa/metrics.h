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


#ifndef CODEQA_METRICS_H_
#define CODEQA_METRICS_H_

#include <algorithm>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "codeqa/qa_pair.h"

namespace codeqa::metrics {

// Length of the longest common subsequence, O(|a|·|b|) time and O(|b|)
// memory.
template <typename T>
size_t LcsLength(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<size_t> row(b.size() + 1, 0);
  for (const T& x : a) {
    size_t diag = 0;
    for (size_t j = 1; j <= b.size(); ++j) {
      size_t up = row[j];
      row[j] = x == b[j - 1] ? diag + 1 : std::max(row[j], row[j - 1]);
      diag = up;
    }
  }
  return row[b.size()];
}

// Lowercased whitespace tokens. BLEU, ROUGE-L and METEOR all score these.
std::vector<std::string> MetricTokens(std::string_view text);

// Lowercase, drop ASCII punctuation, drop the articles a/an/the, collapse
// whitespace. Used by EM and F1 only.
std::string NormalizeAnswer(std::string_view text);

// Each score is in [0, 1].
double ExactMatch(std::string_view prediction, std::string_view gold);
double TokenF1(std::string_view prediction, std::string_view gold);

inline constexpr double kRougeBeta = 1.2;
double RougeL(std::string_view prediction, std::string_view gold,
              double beta = kRougeBeta);

struct MeteorParams {
  double alpha = 0.9;
  double beta = 3.0;
  double gamma = 0.5;
};

// Word alignment used by METEOR: exact matches first, then Porter-stem
// matches among the leftovers. Pairs are (prediction index, gold index)
// sorted by prediction index.
std::vector<std::pair<int, int>> MeteorAlign(
    const std::vector<std::string>& prediction,
    const std::vector<std::string>& gold);
int CountChunks(const std::vector<std::pair<int, int>>& alignment);
double Meteor(std::string_view prediction, std::string_view gold,
              const MeteorParams& params = {});

// BLEU-4 with uniform weights. Precisions for n > 1 get add-one smoothing
// on numerator and denominator; the brevity penalty is the usual one.
double SentenceBleu(std::string_view prediction, std::string_view gold);
// Mean sentence BLEU. Throws UsageError on a length mismatch.
double CorpusBleu(const std::vector<std::string>& predictions,
                  const std::vector<std::string>& golds);

struct PairScores {
  std::string id;
  bool missing = false;
  double bleu = 0;
  double rouge_l = 0;
  double meteor = 0;
  double em = 0;
  double f1 = 0;
};

struct MetricReport {
  std::vector<PairScores> pairs;
  int missing = 0;
  int excluded_yes_no = 0;
  // Means over `pairs`, times 100.
  double bleu = 0;
  double rouge_l = 0;
  double meteor = 0;
  double em = 0;
  double f1 = 0;
};

struct EvaluateOptions {
  bool exclude_yes_no = false;
};

// Scores predictions (pair id -> text) against gold pairs. Gold pairs
// without a prediction score 0 and are counted in `missing`. A prediction
// whose id is not a gold pair id is a ValidationError naming the ids.
MetricReport Evaluate(const std::vector<QAPair>& gold,
                      const std::map<std::string, std::string>& predictions,
                      const EvaluateOptions& options = {});

// Reads `{"id": ..., "prediction": ...}` lines. Duplicate ids are a
// ValidationError.
std::map<std::string, std::string> LoadPredictions(const std::string& path);

std::string ReportJson(const MetricReport& report, bool per_pair);
std::string ReportTable(const MetricReport& report);

}  // namespace codeqa::metrics

#endif  // CODEQA_METRICS_H_
