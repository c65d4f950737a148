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

#ifndef CODEQA_QA_PAIR_H_
#define CODEQA_QA_PAIR_H_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace codeqa {

enum class Split { kUnassigned, kTrain, kDev, kTest };

std::string_view SplitName(Split split);
std::optional<Split> ParseSplit(std::string_view name);

struct QAPair {
  std::string id;
  std::string code_id;
  std::vector<std::string> code_tokens;
  std::string question;
  std::string answer;
  std::string qtype;
  std::string source;
  int answer_start = 0;
  Split split = Split::kUnassigned;

  bool operator==(const QAPair&) const = default;
};

// Every field, one JSON object, no trailing newline.
std::string SerializePair(const QAPair& pair);
// Throws ValidationError on a missing or mistyped field.
QAPair ParsePair(std::string_view line);

// Released dataset line: id, code_id, code_tokens, question, answer, qtype,
// source.
std::string SerializeDatasetLine(const QAPair& pair);

// "Yes" or "No", ignoring case and terminal punctuation.
bool IsYesNoAnswer(std::string_view answer);
inline bool IsYesNo(const QAPair& pair) { return IsYesNoAnswer(pair.answer); }

// One pair per line. Blank lines are skipped. Throws IoError when the file
// cannot be opened and ValidationError naming the line on a bad record.
std::vector<QAPair> LoadPairs(const std::string& path);

// A value or the reason it could not be produced.
template <typename T>
class Outcome {
 public:
  Outcome(T value) : value_(std::move(value)) {}  // NOLINT: implicit by design
  static Outcome Reject(std::string reason) { return Outcome(std::move(reason), 0); }

  bool ok() const { return value_.has_value(); }
  const T& value() const { return *value_; }
  T& value() { return *value_; }
  const std::string& reason() const { return reason_; }

 private:
  Outcome(std::string reason, int) : reason_(std::move(reason)) {}

  std::optional<T> value_;
  std::string reason_;
};

}  // namespace codeqa

#endif  // CODEQA_QA_PAIR_H_
