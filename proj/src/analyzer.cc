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


#include "codeqa/analyzer.h"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

#include "codeqa/text.h"
#include "json.hpp"

namespace codeqa::analysis {
namespace {

const char* const kWhTypes[] = {"For what purpose", "What", "How",
                                "Where",            "When", "Why"};

bool IsQuestionAux(std::string_view word) {
  static const std::set<std::string, std::less<>> kAux = {
      "is",    "are",    "was",  "were",   "am",  "do",    "does",
      "did",   "has",    "have", "had",    "will", "would", "can",
      "could", "shall",  "should", "may",  "might", "must"};
  return kAux.count(ToLower(word)) > 0;
}

std::vector<std::string> AnswerTokens(std::string_view answer) {
  return SplitWhitespace(ToLower(StripTerminalPunctuation(answer)));
}

std::vector<std::string> Lowered(const std::vector<std::string>& tokens) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const std::string& t : tokens) out.push_back(ToLower(t));
  return out;
}

double Percent(size_t part, size_t whole) {
  return whole == 0 ? 0.0 : 100.0 * part / whole;
}

}  // namespace

const std::vector<std::string>& QuestionTypes() {
  static const std::vector<std::string> kTypes = {
      "What", "How", "Where", "When", "Why", "For what purpose", "Yes/No", "Other"};
  return kTypes;
}

std::string CategorizeQuestion(std::string_view question) {
  std::string q = Trim(question);
  std::string best;
  for (const char* type : kWhTypes) {
    std::string_view t(type);
    if (t.size() > best.size() && StartsWithWord(q, t)) best = type;
  }
  if (!best.empty()) return best;
  std::vector<std::string> words = SplitWhitespace(q);
  if (!words.empty() && IsQuestionAux(words[0])) return "Yes/No";
  return "Other";
}

SplitStats ComputeSplitStats(std::string name, const std::vector<QAPair>& pairs) {
  SplitStats s;
  s.name = std::move(name);
  s.pairs = pairs.size();
  s.empty = pairs.empty();
  std::map<std::string, const QAPair*> codes;
  std::unordered_set<std::string> code_vocab, question_vocab, answer_vocab;
  size_t question_tokens = 0, answer_tokens = 0, code_tokens = 0;
  for (const QAPair& p : pairs) {
    codes.emplace(p.code_id, &p);
    for (const std::string& t : SplitWhitespace(p.question)) {
      question_vocab.insert(t);
      ++question_tokens;
    }
    for (const std::string& t : SplitWhitespace(p.answer)) {
      answer_vocab.insert(t);
      ++answer_tokens;
    }
  }
  for (const auto& [id, p] : codes) {
    code_tokens += p->code_tokens.size();
    code_vocab.insert(p->code_tokens.begin(), p->code_tokens.end());
  }
  s.unique_codes = codes.size();
  s.unique_code_tokens = code_vocab.size();
  s.unique_question_tokens = question_vocab.size();
  s.unique_answer_tokens = answer_vocab.size();
  if (!codes.empty()) s.avg_code_tokens = static_cast<double>(code_tokens) / codes.size();
  if (!pairs.empty()) {
    s.avg_question_tokens = static_cast<double>(question_tokens) / pairs.size();
    s.avg_answer_tokens = static_cast<double>(answer_tokens) / pairs.size();
  }
  return s;
}

std::string NormalizeForRepetition(std::string_view answer) {
  return CollapseWhitespace(StripTerminalPunctuation(ToLower(answer)));
}

double RepetitionRate(const std::vector<QAPair>& eval,
                      const std::vector<QAPair>& train) {
  std::unordered_set<std::string> seen;
  for (const QAPair& p : train) seen.insert(NormalizeForRepetition(p.answer));
  size_t total = 0, found = 0;
  for (const QAPair& p : eval) {
    if (IsYesNo(p)) continue;
    ++total;
    if (seen.count(NormalizeForRepetition(p.answer))) ++found;
  }
  return Percent(found, total);
}

bool IsSpan(std::string_view answer, const std::vector<std::string>& code_tokens) {
  std::vector<std::string> a = AnswerTokens(answer);
  if (a.empty()) return false;
  std::vector<std::string> code = Lowered(code_tokens);
  return std::search(code.begin(), code.end(), a.begin(), a.end()) != code.end();
}

bool IsExtractable(std::string_view answer,
                   const std::vector<std::string>& code_tokens) {
  std::vector<std::string> a = AnswerTokens(answer);
  if (a.empty()) return false;
  std::vector<std::string> lowered = Lowered(code_tokens);
  std::unordered_set<std::string> code(lowered.begin(), lowered.end());
  return std::all_of(a.begin(), a.end(),
                     [&](const std::string& t) { return code.count(t) > 0; });
}

double SpanRate(const std::vector<QAPair>& pairs) {
  size_t n = std::count_if(pairs.begin(), pairs.end(), [](const QAPair& p) {
    return IsSpan(p.answer, p.code_tokens);
  });
  return Percent(n, pairs.size());
}

double ExtractionRate(const std::vector<QAPair>& pairs) {
  size_t n = std::count_if(pairs.begin(), pairs.end(), [](const QAPair& p) {
    return IsExtractable(p.answer, p.code_tokens);
  });
  return Percent(n, pairs.size());
}

std::vector<std::pair<std::string, double>> QuestionTypeDistribution(
    const std::vector<QAPair>& pairs) {
  std::map<std::string, size_t> counts;
  for (const QAPair& p : pairs) ++counts[CategorizeQuestion(p.question)];
  std::vector<std::pair<std::string, double>> out;
  for (const std::string& type : QuestionTypes()) {
    out.emplace_back(type, Percent(counts[type], pairs.size()));
  }
  return out;
}

StatsReport BuildReport(const std::vector<QAPair>& train,
                        const std::vector<QAPair>& dev,
                        const std::vector<QAPair>& test) {
  StatsReport r;
  r.splits.push_back(ComputeSplitStats("train", train));
  r.splits.push_back(ComputeSplitStats("dev", dev));
  r.splits.push_back(ComputeSplitStats("test", test));
  std::vector<QAPair> all = train;
  all.insert(all.end(), dev.begin(), dev.end());
  all.insert(all.end(), test.begin(), test.end());
  r.distribution = QuestionTypeDistribution(all);
  r.repetition_dev = RepetitionRate(dev, train);
  r.repetition_test = RepetitionRate(test, train);
  r.span_rate = SpanRate(all);
  r.extraction_rate = ExtractionRate(all);
  return r;
}

std::string ReportJson(const StatsReport& report) {
  nlohmann::ordered_json obj;
  nlohmann::ordered_json splits = nlohmann::ordered_json::array();
  for (const SplitStats& s : report.splits) {
    nlohmann::ordered_json j;
    j["name"] = s.name;
    j["pairs"] = s.pairs;
    j["unique_codes"] = s.unique_codes;
    j["unique_code_tokens"] = s.unique_code_tokens;
    j["unique_question_tokens"] = s.unique_question_tokens;
    j["unique_answer_tokens"] = s.unique_answer_tokens;
    j["avg_code_tokens"] = s.avg_code_tokens;
    j["avg_question_tokens"] = s.avg_question_tokens;
    j["avg_answer_tokens"] = s.avg_answer_tokens;
    j["empty"] = s.empty;
    splits.push_back(std::move(j));
  }
  obj["splits"] = std::move(splits);
  nlohmann::ordered_json dist;
  for (const auto& [type, pct] : report.distribution) dist[type] = pct;
  obj["question_types"] = std::move(dist);
  obj["repetition_rate_dev"] = report.repetition_dev;
  obj["repetition_rate_test"] = report.repetition_test;
  obj["span_rate"] = report.span_rate;
  obj["extraction_rate"] = report.extraction_rate;
  return obj.dump(2);
}

std::string ReportTable(const StatsReport& report) {
  std::ostringstream out;
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-28s %10s %10s %10s\n", "", "train", "dev", "test");
  out << buf;
  auto row = [&](const char* label, auto get, const char* fmt) {
    std::snprintf(buf, sizeof buf, "%-28s", label);
    out << buf;
    for (const SplitStats& s : report.splits) {
      std::snprintf(buf, sizeof buf, fmt, get(s));
      out << buf;
    }
    out << "\n";
  };
  row("pairs", [](const SplitStats& s) { return s.pairs; }, " %10zu");
  row("unique codes", [](const SplitStats& s) { return s.unique_codes; }, " %10zu");
  row("unique code tokens", [](const SplitStats& s) { return s.unique_code_tokens; }, " %10zu");
  row("unique question tokens",
      [](const SplitStats& s) { return s.unique_question_tokens; }, " %10zu");
  row("unique answer tokens",
      [](const SplitStats& s) { return s.unique_answer_tokens; }, " %10zu");
  row("avg tokens per code", [](const SplitStats& s) { return s.avg_code_tokens; }, " %10.2f");
  row("avg tokens per question",
      [](const SplitStats& s) { return s.avg_question_tokens; }, " %10.2f");
  row("avg tokens per answer",
      [](const SplitStats& s) { return s.avg_answer_tokens; }, " %10.2f");
  for (const SplitStats& s : report.splits) {
    if (s.empty) out << "warning: " << s.name << " split is empty\n";
  }
  out << "\nquestion types\n";
  for (const auto& [type, pct] : report.distribution) {
    std::snprintf(buf, sizeof buf, "  %-18s %6.2f%%\n", type.c_str(), pct);
    out << buf;
  }
  std::snprintf(buf, sizeof buf,
                "\nrepetition rate  dev %.2f%%  test %.2f%%\n"
                "span rate        %.2f%%\nextraction rate  %.2f%%\n",
                report.repetition_dev, report.repetition_test, report.span_rate,
                report.extraction_rate);
  out << buf;
  return out.str();
}

}  // namespace codeqa::analysis
