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

#ifndef CODEQA_ANNOTATION_H_
#define CODEQA_ANNOTATION_H_

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "codeqa/errors.h"

namespace codeqa::annotation {

// Half-open token interval [begin, end).
struct TokenSpan {
  int begin = 0;
  int end = 0;

  int size() const { return end - begin; }
  bool empty() const { return end <= begin; }
  bool Contains(int index) const { return index >= begin && index < end; }
  bool Contains(const TokenSpan& other) const {
    return other.begin >= begin && other.end <= end;
  }
  bool Overlaps(const TokenSpan& other) const {
    return begin < other.end && other.begin < end;
  }

  auto operator<=>(const TokenSpan&) const = default;
};

struct DepNode {
  int index = 0;
  std::string form;
  std::string lemma;
  std::string upos;
  int head = -1;  // -1 marks a root
  std::string deprel;

  bool operator==(const DepNode&) const = default;
};

// Per-token BIO tags such as "B-ARG0", "I-ARG0", "B-V" and "O".
struct SrlFrame {
  int predicate_index = 0;
  std::vector<std::string> tags;

  bool operator==(const SrlFrame&) const = default;
};

struct AnnotatedComment {
  std::string id;
  std::vector<std::string> tokens;
  std::vector<DepNode> nodes;
  std::vector<SrlFrame> frames;
  std::vector<std::string> ner;

  int size() const { return static_cast<int>(tokens.size()); }
  // Dependents of `index` in token order.
  std::vector<int> Children(int index) const;
  // Dependents of `index` whose base relation (before any ':') is `deprel`.
  std::vector<int> ChildrenWith(int index, std::string_view deprel) const;
  std::vector<int> Roots() const;
  // Frame whose predicate is `index`, or nullptr.
  const SrlFrame* FrameFor(int index) const;

  bool operator==(const AnnotatedComment&) const = default;
};

class AnnotationError : public ValidationError {
 public:
  AnnotationError(std::string field_path, const std::string& message)
      : ValidationError(field_path + ": " + message), field_path_(std::move(field_path)) {}
  const std::string& field_path() const { return field_path_; }

 private:
  std::string field_path_;
};

// Parses and validates one interchange line. Throws AnnotationError.
AnnotatedComment ParseAnnotation(std::string_view line);

// One JSON object, no trailing newline.
std::string SerializeAnnotation(const AnnotatedComment& comment);

// Checks every structural invariant. Throws AnnotationError naming the first
// offending field.
void Validate(const AnnotatedComment& comment);

bool IsKnownSrlLabel(std::string_view label);
bool IsKnownDeprel(std::string_view deprel);
bool IsKnownPos(std::string_view pos);

// "ARG0" -> "A0", "ARGM-TMP" -> "TMP". Unknown labels pass through.
std::string ShortLabel(std::string_view label);
// Inverse of ShortLabel; full labels pass through.
std::string FullLabel(std::string_view label);

// The part of a relation label before any ':' subtype.
std::string_view BaseDeprel(std::string_view deprel);

using FrameArgs = std::map<std::string, std::vector<TokenSpan>>;

// Labeled spans of a frame in token order, V excluded.
FrameArgs FrameArguments(const SrlFrame& frame);

// Label covering `index` in the frame, or "" for O.
std::string LabelAt(const SrlFrame& frame, int index);

struct SubtreeResult {
  TokenSpan span;
  bool contiguous = true;
};

// Minimal span covering the yield of `index`; `contiguous` is false when the
// yield has gaps.
SubtreeResult SubtreeSpan(int index, const std::vector<DepNode>& nodes);

// Token indices of the yield of `index`, sorted.
std::vector<int> SubtreeIndices(int index, const std::vector<DepNode>& nodes);

}  // namespace codeqa::annotation

#endif  // CODEQA_ANNOTATION_H_
