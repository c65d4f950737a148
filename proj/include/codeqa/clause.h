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

#ifndef CODEQA_CLAUSE_H_
#define CODEQA_CLAUSE_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "codeqa/annotation.h"
#include "codeqa/qa_pair.h"

namespace codeqa::wh {

struct LabeledSpan {
  std::string label;
  annotation::TokenSpan span;

  bool operator==(const LabeledSpan&) const = default;
};

// The main verb with its auxiliaries, modals and negation.
struct VerbalGroup {
  int predicate = -1;
  // Clause head whose dependents carry the subject and auxiliaries: the
  // predicate itself, the nominal or adjectival head of a copula, or the
  // first conjunct of coordinated verbs.
  int anchor = -1;
  // First conjunct of the coordination containing the predicate; equals
  // `anchor` when there is none.
  int conj_root = -1;
  bool copular = false;
  // Main verb tokens in order, including coordinators between conjoined verbs
  // ("adds and removes"). Empty for copular clauses.
  std::vector<int> verbs;
  std::vector<int> coordinators;
  // Auxiliaries, copulas and modals, in token order.
  std::vector<int> aux;
  std::vector<int> neg;
  // Odd number of negation tokens.
  bool negated = false;

  bool IsVerbToken(int index) const;
};

VerbalGroup BuildVerbalGroup(const annotation::AnnotatedComment& annotated,
                             const annotation::SrlFrame& frame);

enum class Heuristic { kDependency, kSemanticRole };

struct ClauseParts {
  annotation::TokenSpan subj;  // empty when absent
  std::string subj_label;
  annotation::TokenSpan obj;
  std::string obj_label;
  std::vector<LabeledSpan> other_args;  // token order
  int verb_head = -1;
  std::vector<int> modals;
  bool negated = false;
  std::optional<int> main_aux;
  VerbalGroup group;
};

struct SubjectChoice {
  annotation::TokenSpan span;
  std::string label;
};

// The core argument that holds the syntactic subject of the clause head, or
// ARG0 when the subject is outside every core argument.
SubjectChoice ChooseSubject(const annotation::AnnotatedComment& annotated,
                            const annotation::FrameArgs& args, const VerbalGroup& group);

// Label of the argument used as object. Dependency answers: ARG1 when the
// answer head lies inside it, ARG1 when the head is outside both ARG1 and
// ARG2 and both exist, otherwise ARG2. Role answers: ARG1, else ARG2. The
// subject's label is never reused. Returns "" when nothing qualifies.
std::string ChooseObjectLabel(const annotation::FrameArgs& args, const std::string& subj_label,
                              std::optional<int> answer_head, Heuristic heuristic);

// Splits a frame into subject, object, remaining arguments and verbal group,
// with the answer carved out. Rejects frames with no ARG0/ARG1/ARG2 and
// answers that overlap both subject and object.
Outcome<ClauseParts> ExtractClause(const annotation::SrlFrame& frame,
                                   const annotation::AnnotatedComment& annotated,
                                   annotation::TokenSpan answer, std::optional<int> answer_head,
                                   Heuristic heuristic);

struct AuxPlan {
  bool do_support = false;
  std::string main_aux;     // fronted text
  int main_aux_token = -1;  // sentence token moved to the front, if any
  int carrier = -1;         // token whose tense moved into do-support
  std::map<int, std::string> rewrites;
};

// Picks the fronted auxiliary: an invertible auxiliary or modal when present,
// a main-verb "be", otherwise a synthesized do/does/did with the carrier
// reduced to its lemma.
AuxPlan AuxConcord(const VerbalGroup& group, const annotation::AnnotatedComment& annotated,
                   annotation::TokenSpan subject);

// "do", "does" or "did" for a verb that loses its tense to do-support.
std::string DoForm(const annotation::AnnotatedComment& annotated, int carrier,
                   annotation::TokenSpan subject);

// Surface text of a token inside a question: a capitalized sentence-initial
// common word is lowercased and "n't" becomes "not".
std::string QuestionToken(const annotation::AnnotatedComment& annotated, int index);

bool HasToMarker(const annotation::AnnotatedComment& annotated, int index);

// First token of `span` whose head lies outside it.
int SpanHead(const annotation::AnnotatedComment& annotated, annotation::TokenSpan span);

}  // namespace codeqa::wh

#endif  // CODEQA_CLAUSE_H_
