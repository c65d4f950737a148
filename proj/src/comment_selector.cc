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

#include "codeqa/comment_selector.h"

#include <algorithm>
#include <fstream>
#include <optional>

#include "codeqa/errors.h"
#include "codeqa/morphology.h"
#include "codeqa/text.h"

namespace codeqa::selection {
namespace {

using annotation::AnnotatedComment;
using annotation::BaseDeprel;

constexpr std::string_view kPrefix = "the code ";

// Byte offsets of every token in `text`, found left to right. Returns
// nullopt when some token cannot be located, e.g. after parser-side quote
// normalization.
std::optional<std::vector<size_t>> TokenOffsets(std::string_view text,
                                                const std::vector<std::string>& tokens) {
  std::vector<size_t> offsets;
  size_t cursor = 0;
  for (const std::string& token : tokens) {
    const size_t at = text.find(token, cursor);
    if (at == std::string_view::npos) return std::nullopt;
    offsets.push_back(at);
    cursor = at + token.size();
  }
  return offsets;
}

bool IsBaseForm(const annotation::DepNode& node) {
  if (node.upos == "VB") return true;
  if (node.upos != "VERB") return false;
  return EqualsIgnoreCase(node.form, node.lemma);
}

}  // namespace

const std::vector<std::string>& DefaultNoiseKeywords() {
  static const auto* keywords = new std::vector<std::string>{
      "TODO", "FIXME", "license", "licensed", "copyright", "ownership", "@deprecated"};
  return *keywords;
}

std::vector<std::string> LoadNoiseKeywords(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open noise keyword file " + path.string());
  std::vector<std::string> keywords;
  std::string line;
  while (std::getline(in, line)) {
    std::string word = Trim(line);
    if (word.empty() || word[0] == '#') continue;
    keywords.push_back(std::move(word));
  }
  return keywords;
}

bool IsNoisy(std::string_view comment, const std::vector<std::string>& keywords) {
  for (const std::string& keyword : keywords) {
    if (ContainsWord(comment, keyword)) return true;
  }
  return false;
}

bool IsVerbTag(std::string_view pos) {
  return pos == "VERB" || pos == "AUX" || pos == "MD" || pos.starts_with("VB");
}

bool IsProperNounTag(std::string_view pos) { return pos == "PROPN" || pos.starts_with("NNP"); }

bool NeedsSubject(const AnnotatedComment& annotated) {
  const std::vector<int> roots = annotated.Roots();
  if (roots.empty()) return true;
  for (int child : annotated.Children(roots.front())) {
    const std::string_view rel = BaseDeprel(annotated.nodes[child].deprel);
    if (rel == "nsubj" || rel == "nsubjpass" || rel == "csubj" || rel == "csubjpass" ||
        rel == "expl") {
      return false;
    }
  }
  return true;
}

Insertion InsertSubject(std::string_view comment, const AnnotatedComment& annotated,
                        bool inflect) {
  Insertion result;
  std::string text = Trim(comment);
  const std::vector<int> roots = annotated.Roots();
  const int root = roots.empty() ? -1 : roots.front();
  result.low_confidence = root < 0 || !IsVerbTag(annotated.nodes[root].upos);

  std::optional<std::vector<size_t>> offsets = TokenOffsets(text, annotated.tokens);
  if (offsets && !annotated.nodes.empty()) {
    // Rewrite right to left so earlier offsets stay valid.
    std::vector<std::pair<int, std::string>> rewrites;
    const annotation::DepNode& first = annotated.nodes.front();
    std::string first_form = first.form;
    if (IsCapitalizedWord(first.form) && first.form != "I" && !IsProperNounTag(first.upos)) {
      first_form = LowerFirst(first.form);
      rewrites.push_back({0, first_form});
    }
    if (inflect && root >= 0) {
      std::vector<int> verbs = {root};
      for (int child : annotated.ChildrenWith(root, "conj")) {
        if (IsVerbTag(annotated.nodes[child].upos)) verbs.push_back(child);
      }
      for (int v : verbs) {
        const annotation::DepNode& node = annotated.nodes[v];
        // An auxiliary already carries tense ("Does not modify").
        const bool has_aux = !annotated.ChildrenWith(v, "aux").empty() ||
                             !annotated.ChildrenWith(v, "auxpass").empty();
        if (!IsBaseForm(node) || has_aux) continue;
        std::string form = v == 0 ? first_form : node.form;
        std::string inflected = ThirdPersonSingular(form);
        if (v == 0 && !rewrites.empty()) {
          rewrites.front().second = inflected;
        } else {
          rewrites.push_back({v, inflected});
        }
        result.inflected = true;
      }
    }
    std::sort(rewrites.begin(), rewrites.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    for (const auto& [index, replacement] : rewrites) {
      text.replace((*offsets)[index], annotated.tokens[index].size(), replacement);
    }
  }
  result.text = std::string(kPrefix) + text;
  return result;
}

std::string_view DispositionName(Disposition disposition) {
  switch (disposition) {
    case Disposition::kKept:
      return "kept";
    case Disposition::kDroppedNoisy:
      return "dropped-noisy";
    case Disposition::kDroppedEmpty:
      return "dropped-empty";
    case Disposition::kSubjectInserted:
      return "subject-inserted";
  }
  return "kept";
}

SelectedComment SelectComment(const ingest::CodeCommentRecord& record,
                              const AnnotatedComment* raw, const SelectorConfig& config) {
  SelectedComment selected{record, Disposition::kKept, false};
  if (Trim(record.comment).empty()) {
    selected.disposition = Disposition::kDroppedEmpty;
    return selected;
  }
  if (IsNoisy(record.comment, config.noise_keywords)) {
    selected.disposition = Disposition::kDroppedNoisy;
    return selected;
  }
  if (raw != nullptr && NeedsSubject(*raw)) {
    Insertion insertion = InsertSubject(record.comment, *raw, config.inflect_on_insert);
    selected.record.comment = insertion.text;
    selected.low_confidence = insertion.low_confidence;
    selected.disposition = Disposition::kSubjectInserted;
  }
  return selected;
}

}  // namespace codeqa::selection
