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

#include "codeqa/yesno_generator.h"

#include <algorithm>
#include <set>

#include "codeqa/clause.h"
#include "codeqa/morphology.h"
#include "codeqa/text.h"

namespace codeqa::yesno {
namespace {

using annotation::AnnotatedComment;
using annotation::BaseDeprel;
using annotation::SrlFrame;

bool NonFiniteUse(const AnnotatedComment& c, int v) {
  const annotation::DepNode& node = c.nodes[v];
  const std::string_view rel = BaseDeprel(node.deprel);
  const std::string form = ToLower(node.form);
  return wh::HasToMarker(c, v) || rel == "xcomp" || rel == "amod" || rel == "acl" ||
         node.upos == "VBG" || (form.size() > 4 && form.ends_with("ing"));
}

}  // namespace

bool IsFinitePredicate(const AnnotatedComment& c, const SrlFrame& frame) {
  const int p = frame.predicate_index;
  const std::string_view rel = BaseDeprel(c.nodes[p].deprel);
  if (rel == "aux" || rel == "auxpass") return false;
  const wh::VerbalGroup group = wh::BuildVerbalGroup(c, frame);
  if (wh::HasToMarker(c, group.anchor)) return false;
  if (group.IsVerbToken(group.conj_root) && group.conj_root != p &&
      NonFiniteUse(c, group.conj_root)) {
    return false;
  }
  if (!group.aux.empty()) return IsFiniteAuxForm(c.nodes[group.aux.front()].form);
  const annotation::DepNode& node = c.nodes[p];
  if (IsFiniteBeForm(node.form)) return true;
  if (NonFiniteUse(c, p)) return false;
  if (node.upos == "VBZ" || node.upos == "VBD" || node.upos == "VBP") return true;
  return node.upos == "VERB" || node.upos == "AUX";
}

std::vector<int> FinitePredicates(const AnnotatedComment& c) {
  std::vector<int> out;
  for (size_t f = 0; f < c.frames.size(); ++f) {
    if (IsFinitePredicate(c, c.frames[f])) out.push_back(static_cast<int>(f));
  }
  return out;
}

Outcome<QAPair> BuildYesNo(const SrlFrame& frame, const AnnotatedComment& c) {
  const wh::VerbalGroup group = wh::BuildVerbalGroup(c, frame);
  const annotation::FrameArgs args = annotation::FrameArguments(frame);
  const wh::SubjectChoice subject = wh::ChooseSubject(c, args, group);
  if (subject.span.empty()) return Outcome<QAPair>::Reject("missing subject");

  std::set<int> clause;
  for (int i = 0; i < c.size(); ++i) {
    const std::string label = annotation::LabelAt(frame, i);
    if (!label.empty() && !label.starts_with("R-")) clause.insert(i);
  }
  for (const auto* list : {&group.aux, &group.verbs, &group.neg}) clause.insert(list->begin(), list->end());
  for (int i = subject.span.begin; i < subject.span.end; ++i) clause.insert(i);

  std::vector<int> tokens(clause.begin(), clause.end());
  // Leading subordinators and trailing punctuation do not belong in a
  // standalone question.
  auto subordinator = [&](int i) {
    const std::string_view rel = BaseDeprel(c.nodes[i].deprel);
    return !subject.span.Contains(i) &&
           (rel == "mark" || rel == "cc" || rel == "punct" || IsWhWord(c.nodes[i].form));
  };
  while (!tokens.empty() && subordinator(tokens.front())) tokens.erase(tokens.begin());
  while (!tokens.empty() && IsPunctuationToken(c.tokens[tokens.back()])) tokens.pop_back();

  const wh::AuxPlan plan = wh::AuxConcord(group, c, subject.span);
  if (plan.main_aux.empty()) return Outcome<QAPair>::Reject("no auxiliary to front");

  std::vector<int> body;
  std::vector<int> tail;
  for (int i : tokens) {
    if (i == plan.main_aux_token) continue;
    if (std::binary_search(group.neg.begin(), group.neg.end(), i)) continue;
    if (plan.do_support && i < subject.span.begin) {
      tail.push_back(i);
    } else {
      body.push_back(i);
    }
  }
  body.insert(body.end(), tail.begin(), tail.end());

  std::vector<std::string> words = {plan.main_aux};
  for (int i : body) {
    auto it = plan.rewrites.find(i);
    words.push_back(it != plan.rewrites.end() ? it->second : wh::QuestionToken(c, i));
  }
  while (!words.empty() && IsPunctuationToken(words.back())) words.pop_back();
  if (words.size() < 2) return Outcome<QAPair>::Reject("empty question body");

  QAPair pair;
  pair.question = SentenceCase(Detokenize(words)) + "?";
  pair.answer = group.negated ? "No" : "Yes";
  pair.source = "yesno";
  pair.answer_start = frame.predicate_index;
  return pair;
}

YesNoResult GenerateYesNo(const AnnotatedComment& c) {
  YesNoResult result;
  std::set<std::pair<std::string, std::string>> seen;
  for (int f : FinitePredicates(c)) {
    ++result.candidates;
    Outcome<QAPair> pair = BuildYesNo(c.frames[f], c);
    if (!pair.ok()) {
      result.rejections.push_back({"yesno", c.frames[f].predicate_index, pair.reason()});
      continue;
    }
    if (!seen.insert({pair.value().question, pair.value().answer}).second) {
      ++result.duplicates;
      continue;
    }
    result.pairs.push_back(pair.value());
  }
  std::stable_sort(result.pairs.begin(), result.pairs.end(),
                   [](const QAPair& a, const QAPair& b) { return a.answer_start < b.answer_start; });
  return result;
}

}  // namespace codeqa::yesno
