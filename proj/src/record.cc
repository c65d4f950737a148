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

#include "codeqa/record.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <istream>

#include "codeqa/errors.h"
#include "codeqa/text.h"
#include "json.hpp"

namespace codeqa::ingest {
namespace {

using nlohmann::json;

bool IsIdentStart(char c) {
  unsigned char u = static_cast<unsigned char>(c);
  return std::isalpha(u) || c == '_' || c == '$' || u >= 0x80;
}

bool IsIdentChar(char c) {
  return IsIdentStart(c) || std::isdigit(static_cast<unsigned char>(c));
}

bool IsDigit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

// Longest first.
constexpr std::array<std::string_view, 33> kOperators = {
    ">>>=", "<<=", ">>=", ">>>", "**=", "//=", "...", "->", "::", "==", "!=",
    "<=",   ">=",  "&&",  "||",  "++",  "--",  "+=",  "-=", "*=", "/=", "%=",
    "&=",   "|=",  "^=",  "<<",  ">>",  "**",  "//",  ":=", "@=", "<>", "=>"};

// Returns the length of a string literal starting at `i`, or 0.
size_t StringLiteralLength(std::string_view code, size_t i, Language language) {
  size_t j = i;
  if (language == Language::kPython) {
    // Optional prefix such as r, b, f, rb, Rb, u.
    size_t k = j;
    while (k < code.size() && k - j < 2 &&
           std::string_view("rRbBuUfF").find(code[k]) != std::string_view::npos) {
      ++k;
    }
    if (k < code.size() && (code[k] == '"' || code[k] == '\'')) j = k;
  }
  if (j >= code.size() || (code[j] != '"' && code[j] != '\'')) return 0;
  const char quote = code[j];
  const bool triple = code.substr(j, 3) == std::string(3, quote);
  if (triple) {
    size_t end = code.find(std::string(3, quote), j + 3);
    return end == std::string_view::npos ? code.size() - i : end + 3 - i;
  }
  size_t k = j + 1;
  while (k < code.size()) {
    if (code[k] == '\\') {
      k += 2;
      continue;
    }
    if (code[k] == quote) return k + 1 - i;
    if (code[k] == '\n') break;
    ++k;
  }
  return std::min(k, code.size()) - i;
}

size_t NumberLength(std::string_view code, size_t i) {
  size_t k = i;
  if (code.substr(k, 2) == "0x" || code.substr(k, 2) == "0X" ||
      code.substr(k, 2) == "0b" || code.substr(k, 2) == "0B") {
    k += 2;
    while (k < code.size() &&
           (std::isxdigit(static_cast<unsigned char>(code[k])) || code[k] == '_')) {
      ++k;
    }
  } else {
    while (k < code.size() && (IsDigit(code[k]) || code[k] == '_')) ++k;
    if (k < code.size() && code[k] == '.' &&
        (k + 1 >= code.size() || !IsIdentStart(code[k + 1]) ||
         code[k + 1] == 'e' || code[k + 1] == 'E')) {
      ++k;
      while (k < code.size() && (IsDigit(code[k]) || code[k] == '_')) ++k;
    }
    if (k < code.size() && (code[k] == 'e' || code[k] == 'E')) {
      size_t m = k + 1;
      if (m < code.size() && (code[m] == '+' || code[m] == '-')) ++m;
      if (m < code.size() && IsDigit(code[m])) {
        k = m;
        while (k < code.size() && IsDigit(code[k])) ++k;
      }
    }
  }
  if (k < code.size() &&
      std::string_view("lLfFdDjJ").find(code[k]) != std::string_view::npos) {
    ++k;
  }
  return k - i;
}

std::string RequireString(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ValidationError(std::string("missing field '") + key + "'");
  if (!it->is_string()) {
    throw ValidationError(std::string("field '") + key + "' is not a string");
  }
  return it->get<std::string>();
}

}  // namespace

std::string_view LanguageName(Language language) {
  return language == Language::kJava ? "java" : "python";
}

std::optional<Language> ParseLanguage(std::string_view name) {
  const std::string lower = ToLower(name);
  if (lower == "java") return Language::kJava;
  if (lower == "python") return Language::kPython;
  return std::nullopt;
}

std::vector<std::string> TokenizeCode(std::string_view code, Language language) {
  std::vector<std::string> tokens;
  size_t i = 0;
  while (i < code.size()) {
    const char c = code[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (language == Language::kJava && code.substr(i, 2) == "//") {
      size_t end = code.find('\n', i);
      i = end == std::string_view::npos ? code.size() : end;
      continue;
    }
    if (language == Language::kJava && code.substr(i, 2) == "/*") {
      size_t end = code.find("*/", i + 2);
      i = end == std::string_view::npos ? code.size() : end + 2;
      continue;
    }
    if (language == Language::kPython && c == '#') {
      size_t end = code.find('\n', i);
      i = end == std::string_view::npos ? code.size() : end;
      continue;
    }
    if (size_t n = StringLiteralLength(code, i, language); n > 0) {
      tokens.emplace_back("STRING");
      i += n;
      continue;
    }
    if (IsDigit(c) || (c == '.' && i + 1 < code.size() && IsDigit(code[i + 1]))) {
      tokens.emplace_back("_NUM");
      i += NumberLength(code, i);
      continue;
    }
    if (IsIdentStart(c)) {
      size_t j = i + 1;
      while (j < code.size() && IsIdentChar(code[j])) ++j;
      tokens.emplace_back(code.substr(i, j - i));
      i = j;
      continue;
    }
    std::string_view op;
    for (std::string_view candidate : kOperators) {
      if (code.substr(i, candidate.size()) == candidate) {
        op = candidate;
        break;
      }
    }
    if (op.empty()) op = code.substr(i, 1);
    tokens.emplace_back(op);
    i += op.size();
  }
  return tokens;
}

CorpusReader::CorpusReader(std::istream& in, Language language)
    : in_(in), language_(language) {}

std::optional<CodeCommentRecord> CorpusReader::Next() {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_number_;
    if (Trim(line).empty()) continue;
    ++summary_.lines;
    try {
      std::optional<CodeCommentRecord> record = ParseLine(line);
      if (record) {
        ++summary_.records;
        return record;
      }
    } catch (const ValidationError& e) {
      summary_.errors.push_back({line_number_, e.what()});
    }
  }
  return std::nullopt;
}

std::optional<CodeCommentRecord> CorpusReader::ParseLine(const std::string& line) {
  json obj = json::parse(line, nullptr, /*allow_exceptions=*/false);
  if (obj.is_discarded() || !obj.is_object()) {
    throw ValidationError("line is not a JSON object");
  }
  CodeCommentRecord record;
  const std::string language_name = RequireString(obj, "language");
  std::optional<Language> language = ParseLanguage(language_name);
  if (!language) throw ValidationError("unknown language '" + language_name + "'");
  if (*language != language_) {
    throw ValidationError("language '" + language_name + "' does not match corpus language '" +
                          std::string(LanguageName(language_)) + "'");
  }
  record.language = *language;
  record.code = RequireString(obj, "code");
  record.comment = RequireString(obj, "comment");

  if (auto it = obj.find("id"); it != obj.end() && !it->is_null()) {
    if (!it->is_string()) throw ValidationError("field 'id' is not a string");
    record.id = it->get<std::string>();
  } else {
    record.id = std::string(LanguageName(language_)) + "-" + std::to_string(line_number_);
  }
  if (record.id.empty()) throw ValidationError("field 'id' is empty");
  if (seen_ids_.contains(record.id)) {
    throw ValidationError("duplicate id '" + record.id + "'");
  }

  if (auto it = obj.find("code_tokens"); it != obj.end()) {
    if (!it->is_array()) throw ValidationError("field 'code_tokens' is not an array");
    for (const json& tok : *it) {
      if (!tok.is_string()) throw ValidationError("field 'code_tokens' holds a non-string");
      record.code_tokens.push_back(tok.get<std::string>());
    }
  } else {
    record.code_tokens = TokenizeCode(record.code, record.language);
  }
  if (!Trim(record.code).empty() && record.code_tokens.empty()) {
    throw ValidationError("non-empty code produced no tokens");
  }
  seen_ids_.insert(record.id);
  return record;
}

LoadedCorpus LoadCorpus(const std::filesystem::path& path, Language language) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open corpus file " + path.string());
  CorpusReader reader(in, language);
  LoadedCorpus corpus;
  while (std::optional<CodeCommentRecord> record = reader.Next()) {
    corpus.records.push_back(std::move(*record));
  }
  if (in.bad()) throw IoError("read failure on " + path.string());
  corpus.summary = reader.summary();
  return corpus;
}

std::string SerializeRecord(const CodeCommentRecord& record) {
  nlohmann::ordered_json obj = {{"id", record.id},
              {"language", LanguageName(record.language)},
              {"code", record.code},
              {"code_tokens", record.code_tokens},
              {"comment", record.comment}};
  return obj.dump();
}

}  // namespace codeqa::ingest
