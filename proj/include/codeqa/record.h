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

#ifndef CODEQA_RECORD_H_
#define CODEQA_RECORD_H_

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace codeqa::ingest {

enum class Language { kJava, kPython };

std::string_view LanguageName(Language language);
std::optional<Language> ParseLanguage(std::string_view name);

// One source unit of a code-comment corpus.
//
// Numeric literals in `code_tokens` are the placeholder `_NUM` and string
// literals are `STRING`, matching the upstream summarization corpora.
struct CodeCommentRecord {
  std::string id;
  Language language = Language::kJava;
  std::string code;
  std::vector<std::string> code_tokens;
  std::string comment;

  bool operator==(const CodeCommentRecord&) const = default;
};

struct LineError {
  size_t line_number = 0;  // 1-based
  std::string message;
};

struct LoadSummary {
  size_t lines = 0;  // non-blank lines seen
  size_t records = 0;
  std::vector<LineError> errors;
};

// Streams records from line-delimited JSON. Malformed lines are skipped and
// recorded in summary() with their line number.
class CorpusReader {
 public:
  CorpusReader(std::istream& in, Language language);

  std::optional<CodeCommentRecord> Next();
  const LoadSummary& summary() const { return summary_; }

 private:
  std::optional<CodeCommentRecord> ParseLine(const std::string& line);

  std::istream& in_;
  Language language_;
  size_t line_number_ = 0;
  std::unordered_set<std::string> seen_ids_;
  LoadSummary summary_;
};

struct LoadedCorpus {
  std::vector<CodeCommentRecord> records;
  LoadSummary summary;
};

// Throws IoError if `path` cannot be opened.
LoadedCorpus LoadCorpus(const std::filesystem::path& path, Language language);

// Splits raw source on identifier, literal, operator and punctuation
// boundaries. Comments are skipped. Total over any input.
std::vector<std::string> TokenizeCode(std::string_view code, Language language);

// One JSON object, no trailing newline. Always includes code_tokens.
std::string SerializeRecord(const CodeCommentRecord& record);

}  // namespace codeqa::ingest

#endif  // CODEQA_RECORD_H_
