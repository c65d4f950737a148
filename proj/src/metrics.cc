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


#include "codeqa/metrics.h"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>

#include "codeqa/errors.h"
#include "codeqa/porter_stemmer.h"
#include "codeqa/text.h"
#include "json.hpp"

namespace codeqa::metrics {
namespace {

bool IsWordByte(unsigned char c) {
  return std::isalnum(c) || c == '_' || c >= 0x80;
}

std::vector<std::string> Ngrams(const std::vector<std::string>& tokens,
                                size_t n) {
  std::vector<std::string> grams;
  if (tokens.size() < n) return grams;
  for (size_t i = 0; i + n <= tokens.size(); ++i) {
    std::string g;
    for (size_t k = 0; k < n; ++k) {
      if (k) g += '\x1f';
      g += tokens[i + k];
    }
    grams.push_back(std::move(g));
  }
  return grams;
}

// Matches words right to left, each against the latest unused equal word
// on the other side. Matched entries are removed from both lists.
using Indexed = std::vector<std::pair<int, std::string>>;

void MatchEqual(Indexed& hyp, Indexed& ref,
                std::vector<std::pair<int, int>>& out) {
  std::unordered_map<std::string, std::vector<size_t>> positions;
  for (size_t j = 0; j < ref.size(); ++j) positions[ref[j].second].push_back(j);
  std::vector<bool> hyp_used(hyp.size()), ref_used(ref.size());
  for (size_t i = hyp.size(); i-- > 0;) {
    auto it = positions.find(hyp[i].second);
    if (it == positions.end() || it->second.empty()) continue;
    size_t j = it->second.back();
    it->second.pop_back();
    hyp_used[i] = true;
    ref_used[j] = true;
    out.emplace_back(hyp[i].first, ref[j].first);
  }
  Indexed hyp_left, ref_left;
  for (size_t i = 0; i < hyp.size(); ++i) {
    if (!hyp_used[i]) hyp_left.push_back(hyp[i]);
  }
  for (size_t j = 0; j < ref.size(); ++j) {
    if (!ref_used[j]) ref_left.push_back(ref[j]);
  }
  hyp = std::move(hyp_left);
  ref = std::move(ref_left);
}

Indexed Enumerate(const std::vector<std::string>& tokens) {
  Indexed out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    out.emplace_back(static_cast<int>(i), tokens[i]);
  }
  return out;
}

double Mean(const std::vector<PairScores>& pairs, double PairScores::*field) {
  if (pairs.empty()) return 0;
  double sum = 0;
  for (const PairScores& p : pairs) sum += p.*field;
  return 100.0 * sum / pairs.size();
}

}  // namespace

std::vector<std::string> MetricTokens(std::string_view text) {
  return SplitWhitespace(ToLower(text));
}

std::string NormalizeAnswer(std::string_view text) {
  std::string no_punct;
  for (char c : ToLower(text)) {
    if (!std::ispunct(static_cast<unsigned char>(c))) no_punct += c;
  }
  // Articles are whole word-character runs, so "a" inside "data" stays.
  std::string no_articles;
  size_t i = 0;
  while (i < no_punct.size()) {
    if (!IsWordByte(no_punct[i])) {
      no_articles += no_punct[i++];
      continue;
    }
    size_t j = i;
    while (j < no_punct.size() && IsWordByte(no_punct[j])) ++j;
    std::string_view run(no_punct.data() + i, j - i);
    no_articles += (run == "a" || run == "an" || run == "the") ? std::string(" ")
                                                              : std::string(run);
    i = j;
  }
  return Join(SplitWhitespace(no_articles), " ");
}

double ExactMatch(std::string_view prediction, std::string_view gold) {
  return NormalizeAnswer(prediction) == NormalizeAnswer(gold) ? 1.0 : 0.0;
}

double TokenF1(std::string_view prediction, std::string_view gold) {
  std::vector<std::string> pred = SplitWhitespace(NormalizeAnswer(prediction));
  std::vector<std::string> ref = SplitWhitespace(NormalizeAnswer(gold));
  if (pred.empty() || ref.empty()) return pred.empty() && ref.empty() ? 1.0 : 0.0;
  std::unordered_map<std::string, int> counts;
  for (const std::string& t : ref) ++counts[t];
  int same = 0;
  for (const std::string& t : pred) {
    auto it = counts.find(t);
    if (it != counts.end() && it->second > 0) {
      --it->second;
      ++same;
    }
  }
  if (same == 0) return 0.0;
  double precision = static_cast<double>(same) / pred.size();
  double recall = static_cast<double>(same) / ref.size();
  return 2 * precision * recall / (precision + recall);
}

double RougeL(std::string_view prediction, std::string_view gold, double beta) {
  std::vector<std::string> pred = MetricTokens(prediction);
  std::vector<std::string> ref = MetricTokens(gold);
  size_t lcs = LcsLength(pred, ref);
  if (lcs == 0) return 0.0;
  double precision = static_cast<double>(lcs) / pred.size();
  double recall = static_cast<double>(lcs) / ref.size();
  double b2 = beta * beta;
  return (1 + b2) * precision * recall / (recall + b2 * precision);
}

std::vector<std::pair<int, int>> MeteorAlign(
    const std::vector<std::string>& prediction,
    const std::vector<std::string>& gold) {
  Indexed hyp = Enumerate(prediction);
  Indexed ref = Enumerate(gold);
  std::vector<std::pair<int, int>> matches;
  MatchEqual(hyp, ref, matches);
  for (auto& [index, word] : hyp) word = PorterStem(word);
  for (auto& [index, word] : ref) word = PorterStem(word);
  MatchEqual(hyp, ref, matches);
  std::stable_sort(matches.begin(), matches.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  return matches;
}

int CountChunks(const std::vector<std::pair<int, int>>& alignment) {
  int chunks = 1;
  for (size_t i = 0; i + 1 < alignment.size(); ++i) {
    bool adjacent = alignment[i + 1].first == alignment[i].first + 1 &&
                    alignment[i + 1].second == alignment[i].second + 1;
    if (!adjacent) ++chunks;
  }
  return chunks;
}

double Meteor(std::string_view prediction, std::string_view gold,
              const MeteorParams& params) {
  std::vector<std::string> pred = MetricTokens(prediction);
  std::vector<std::string> ref = MetricTokens(gold);
  std::vector<std::pair<int, int>> matches = MeteorAlign(pred, ref);
  if (matches.empty() || pred.empty() || ref.empty()) return 0.0;
  double m = static_cast<double>(matches.size());
  double precision = m / pred.size();
  double recall = m / ref.size();
  double fmean = precision * recall /
                 (params.alpha * precision + (1 - params.alpha) * recall);
  double frag = CountChunks(matches) / m;
  double penalty = params.gamma * std::pow(frag, params.beta);
  return (1 - penalty) * fmean;
}

double SentenceBleu(std::string_view prediction, std::string_view gold) {
  std::vector<std::string> hyp = MetricTokens(prediction);
  std::vector<std::string> ref = MetricTokens(gold);
  constexpr int kMaxOrder = 4;
  double log_sum = 0;
  for (int n = 1; n <= kMaxOrder; ++n) {
    std::vector<std::string> hyp_grams = Ngrams(hyp, n);
    std::unordered_map<std::string, int> ref_counts;
    for (std::string& g : Ngrams(ref, n)) ++ref_counts[g];
    std::unordered_map<std::string, int> hyp_counts;
    for (const std::string& g : hyp_grams) ++hyp_counts[g];
    long numerator = 0;
    for (const auto& [gram, count] : hyp_counts) {
      auto it = ref_counts.find(gram);
      if (it != ref_counts.end()) numerator += std::min(count, it->second);
    }
    long denominator = static_cast<long>(hyp_grams.size());
    if (n == 1) {
      if (numerator == 0) return 0.0;
    } else {
      ++numerator;
      ++denominator;
    }
    log_sum += 0.25 * std::log(static_cast<double>(numerator) / denominator);
  }
  double bp = 1.0;
  if (hyp.size() <= ref.size()) {
    bp = std::exp(1.0 - static_cast<double>(ref.size()) / hyp.size());
  }
  return bp * std::exp(log_sum);
}

double CorpusBleu(const std::vector<std::string>& predictions,
                  const std::vector<std::string>& golds) {
  if (predictions.size() != golds.size()) {
    throw UsageError("BLEU needs as many predictions as references (" +
                     std::to_string(predictions.size()) + " vs " +
                     std::to_string(golds.size()) + ")");
  }
  if (predictions.empty()) return 0.0;
  double sum = 0;
  for (size_t i = 0; i < predictions.size(); ++i) {
    sum += SentenceBleu(predictions[i], golds[i]);
  }
  return sum / predictions.size();
}

MetricReport Evaluate(const std::vector<QAPair>& gold,
                      const std::map<std::string, std::string>& predictions,
                      const EvaluateOptions& options) {
  std::set<std::string> gold_ids;
  for (const QAPair& p : gold) gold_ids.insert(p.id);
  std::vector<std::string> unknown;
  for (const auto& [id, text] : predictions) {
    if (!gold_ids.count(id)) unknown.push_back(id);
  }
  if (!unknown.empty()) {
    throw ValidationError("predictions for unknown pair ids: " + Join(unknown, ", "));
  }

  MetricReport report;
  for (const QAPair& p : gold) {
    if (options.exclude_yes_no && IsYesNo(p)) {
      ++report.excluded_yes_no;
      continue;
    }
    PairScores s;
    s.id = p.id;
    auto it = predictions.find(p.id);
    if (it == predictions.end()) {
      s.missing = true;
      ++report.missing;
    } else {
      const std::string& pred = it->second;
      s.bleu = SentenceBleu(pred, p.answer);
      s.rouge_l = RougeL(pred, p.answer);
      s.meteor = Meteor(pred, p.answer);
      s.em = ExactMatch(pred, p.answer);
      s.f1 = TokenF1(pred, p.answer);
    }
    report.pairs.push_back(std::move(s));
  }
  report.bleu = Mean(report.pairs, &PairScores::bleu);
  report.rouge_l = Mean(report.pairs, &PairScores::rouge_l);
  report.meteor = Mean(report.pairs, &PairScores::meteor);
  report.em = Mean(report.pairs, &PairScores::em);
  report.f1 = Mean(report.pairs, &PairScores::f1);
  return report;
}

std::map<std::string, std::string> LoadPredictions(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::map<std::string, std::string> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    std::string where = path + ":" + std::to_string(line_no) + ": ";
    nlohmann::json obj = nlohmann::json::parse(line, nullptr, false);
    if (obj.is_discarded() || !obj.is_object() || !obj.contains("id") ||
        !obj.contains("prediction") || !obj["id"].is_string() ||
        !obj["prediction"].is_string()) {
      throw ValidationError(where + "expected {\"id\": str, \"prediction\": str}");
    }
    std::string id = obj["id"].get<std::string>();
    if (!out.emplace(id, obj["prediction"].get<std::string>()).second) {
      throw ValidationError(where + "duplicate prediction id " + id);
    }
  }
  return out;
}

std::string ReportJson(const MetricReport& report, bool per_pair) {
  nlohmann::ordered_json obj;
  obj["pairs"] = report.pairs.size();
  obj["missing"] = report.missing;
  obj["excluded_yes_no"] = report.excluded_yes_no;
  obj["bleu"] = report.bleu;
  obj["rouge_l"] = report.rouge_l;
  obj["meteor"] = report.meteor;
  obj["em"] = report.em;
  obj["f1"] = report.f1;
  if (per_pair) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const PairScores& s : report.pairs) {
      nlohmann::ordered_json row;
      row["id"] = s.id;
      row["missing"] = s.missing;
      row["bleu"] = s.bleu;
      row["rouge_l"] = s.rouge_l;
      row["meteor"] = s.meteor;
      row["em"] = s.em;
      row["f1"] = s.f1;
      rows.push_back(std::move(row));
    }
    obj["per_pair"] = std::move(rows);
  }
  return obj.dump(2);
}

std::string ReportTable(const MetricReport& report) {
  std::ostringstream out;
  char buf[128];
  out << "pairs " << report.pairs.size() << "  missing " << report.missing
      << "  excluded yes/no " << report.excluded_yes_no << "\n";
  out << "metric     score\n";
  auto row = [&](const char* name, double v) {
    std::snprintf(buf, sizeof buf, "%-9s %6.2f\n", name, v);
    out << buf;
  };
  row("BLEU", report.bleu);
  row("ROUGE-L", report.rouge_l);
  row("METEOR", report.meteor);
  row("EM", report.em);
  row("F1", report.f1);
  return out.str();
}

}  // namespace codeqa::metrics
