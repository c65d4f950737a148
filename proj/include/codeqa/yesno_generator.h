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

#ifndef CODEQA_YESNO_GENERATOR_H_
#define CODEQA_YESNO_GENERATOR_H_

#include <vector>

#include "codeqa/annotation.h"
#include "codeqa/qa_pair.h"
#include "codeqa/wh_generator.h"

namespace codeqa::yesno {

// True when the frame's verbal group is tensed: a finite auxiliary or copula,
// a finite form of "be", or a main verb that is not an infinitive, gerund,
// participle or modifier.
bool IsFinitePredicate(const annotation::AnnotatedComment& annotated,
                       const annotation::SrlFrame& frame);

// Indices into annotated.frames, in frame order.
std::vector<int> FinitePredicates(const annotation::AnnotatedComment& annotated);

// Inverts the frame's clause into a general question. An invertible
// auxiliary, modal or copula is fronted; otherwise do-support is added, the
// verb is lemmatized and clause-initial material moves to the end. Negation
// is removed from the question and flips the answer to "No".
Outcome<QAPair> BuildYesNo(const annotation::SrlFrame& frame,
                           const annotation::AnnotatedComment& annotated);

struct YesNoResult {
  std::vector<QAPair> pairs;
  std::vector<wh::Rejection> rejections;
  size_t candidates = 0;
  size_t duplicates = 0;
};

YesNoResult GenerateYesNo(const annotation::AnnotatedComment& annotated);

}  // namespace codeqa::yesno

#endif  // CODEQA_YESNO_GENERATOR_H_
