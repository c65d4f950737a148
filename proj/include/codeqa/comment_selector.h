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

#ifndef CODEQA_COMMENT_SELECTOR_H_
#define CODEQA_COMMENT_SELECTOR_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "codeqa/annotation.h"
#include "codeqa/record.h"

namespace codeqa::selection {

// TODO, FIXME, license, licensed, copyright, ownership, @deprecated.
const std::vector<std::string>& DefaultNoiseKeywords();

// One keyword per line; blank lines and lines starting with '#' are skipped.
// Throws IoError.
std::vector<std::string> LoadNoiseKeywords(const std::filesystem::path& path);

// Case-insensitive whole-word match against any keyword.
bool IsNoisy(std::string_view comment, const std::vector<std::string>& keywords);

// True when the first root has no nominal or clausal subject dependent.
bool NeedsSubject(const annotation::AnnotatedComment& annotated);

struct Insertion {
  std::string text;
  bool inflected = false;
  // Set when the root is not a verb, so the prefix may not read as a clause.
  bool low_confidence = false;
};

// Prefixes "the code " and, when `inflect` is set, moves a base-form root verb
// (and verbs coordinated with it) to third-person singular. A capitalized
// first word that is not a proper noun is lowercased.
Insertion InsertSubject(std::string_view comment, const annotation::AnnotatedComment& annotated,
                        bool inflect);

enum class Disposition { kKept, kDroppedNoisy, kDroppedEmpty, kSubjectInserted };

std::string_view DispositionName(Disposition disposition);

struct SelectorConfig {
  std::vector<std::string> noise_keywords = DefaultNoiseKeywords();
  bool inflect_on_insert = true;
};

struct SelectedComment {
  ingest::CodeCommentRecord record;  // comment replaced by the selected text
  Disposition disposition = Disposition::kKept;
  bool low_confidence = false;
};

// `raw` may be null, in which case only the noise filter runs.
SelectedComment SelectComment(const ingest::CodeCommentRecord& record,
                              const annotation::AnnotatedComment* raw,
                              const SelectorConfig& config);

bool IsVerbTag(std::string_view pos);
bool IsProperNounTag(std::string_view pos);

}  // namespace codeqa::selection

#endif  // CODEQA_COMMENT_SELECTOR_H_
