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

#include "codeqa/qa_pair.h"

#include <fstream>

#include "codeqa/errors.h"
#include "codeqa/text.h"
#include "json.hpp"

namespace codeqa {
namespace {

using nlohmann::ordered_json;

template <typename T>
T Field(const nlohmann::json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ValidationError(std::string("missing field '") + key + "'");
  try {
    return it->get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ValidationError(std::string("field '") + key + "' has the wrong type");
  }
}

}  // namespace

std::string_view SplitName(Split split) {
  switch (split) {
    case Split::kTrain:
      return "train";
    case Split::kDev:
      return "dev";
    case Split::kTest:
      return "test";
    case Split::kUnassigned:
      break;
  }
  return "unassigned";
}

std::optional<Split> ParseSplit(std::string_view name) {
  for (Split s : {Split::kUnassigned, Split::kTrain, Split::kDev, Split::kTest}) {
    if (SplitName(s) == name) return s;
  }
  return std::nullopt;
}

std::string SerializePair(const QAPair& pair) {
  ordered_json obj;
  obj["id"] = pair.id;
  obj["code_id"] = pair.code_id;
  obj["code_tokens"] = pair.code_tokens;
  obj["question"] = pair.question;
  obj["answer"] = pair.answer;
  obj["qtype"] = pair.qtype;
  obj["source"] = pair.source;
  obj["answer_start"] = pair.answer_start;
  obj["split"] = SplitName(pair.split);
  return obj.dump();
}

QAPair ParsePair(std::string_view line) {
  nlohmann::json obj = nlohmann::json::parse(line, nullptr, /*allow_exceptions=*/false);
  if (obj.is_discarded() || !obj.is_object()) throw ValidationError("line is not a JSON object");
  QAPair pair;
  pair.id = Field<std::string>(obj, "id");
  pair.code_id = Field<std::string>(obj, "code_id");
  pair.code_tokens = Field<std::vector<std::string>>(obj, "code_tokens");
  pair.question = Field<std::string>(obj, "question");
  pair.answer = Field<std::string>(obj, "answer");
  pair.qtype = Field<std::string>(obj, "qtype");
  pair.source = Field<std::string>(obj, "source");
  if (obj.contains("answer_start")) pair.answer_start = Field<int>(obj, "answer_start");
  if (obj.contains("split")) {
    std::optional<Split> split = ParseSplit(Field<std::string>(obj, "split"));
    if (!split) throw ValidationError("field 'split' has an unknown value");
    pair.split = *split;
  }
  return pair;
}

std::string SerializeDatasetLine(const QAPair& pair) {
  ordered_json obj;
  obj["id"] = pair.id;
  obj["code_id"] = pair.code_id;
  obj["code_tokens"] = pair.code_tokens;
  obj["question"] = pair.question;
  obj["answer"] = pair.answer;
  obj["qtype"] = pair.qtype;
  obj["source"] = pair.source;
  return obj.dump();
}

bool IsYesNoAnswer(std::string_view answer) {
  std::string a = ToLower(StripTerminalPunctuation(Trim(answer)));
  return a == "yes" || a == "no";
}

std::vector<QAPair> LoadPairs(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::vector<QAPair> pairs;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    try {
      pairs.push_back(ParsePair(line));
    } catch (const ValidationError& e) {
      throw ValidationError(path + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return pairs;
}

}  // namespace codeqa
