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

#ifndef CODEQA_WH_GENERATOR_H_
#define CODEQA_WH_GENERATOR_H_

#include <string>
#include <vector>

#include "codeqa/annotation.h"
#include "codeqa/clause.h"
#include "codeqa/qa_pair.h"
#include "codeqa/template_registry.h"

namespace codeqa::wh {

struct DpCandidate {
  int answer_node = -1;
  int frame_index = -1;  // frame whose predicate is the answer's head
  const Template* tmpl = nullptr;
};

// Nodes whose relation selects a dependency template and whose head is the
// predicate of some frame, in token order.
std::vector<DpCandidate> DpCandidates(const annotation::AnnotatedComment& annotated,
                                      const TemplateRegistry& registry);

struct SrlCandidate {
  int frame_index = -1;
  std::string label;
  annotation::TokenSpan span;
  const Template* tmpl = nullptr;
};

// One candidate per modifier span with a role template, for frames that have
// ARG0 or ARG1. Frame order, then token order.
std::vector<SrlCandidate> SrlCandidates(const annotation::AnnotatedComment& annotated,
                                        const TemplateRegistry& registry);

// Named-entity refinement for dependency templates: PERSON gives Who (subject)
// or Whom, TIME and DATE give When, LOC, LOCATION and GPE give Where. Role
// templates keep their own word.
std::string SelectWhWord(annotation::TokenSpan answer, const std::vector<std::string>& ner,
                         const Template& tmpl);

// Fills the template slots. The pair's question, answer and answer_start are
// set; identity fields are left to the caller.
Outcome<QAPair> Realize(const Template& tmpl, const ClauseParts& clause,
                        annotation::TokenSpan answer,
                        const annotation::AnnotatedComment& annotated);

struct GeneratorConfig {
  int max_pairs_per_comment = 8;
};

struct Rejection {
  std::string source;
  int answer_start = 0;
  std::string reason;
};

struct WhResult {
  std::vector<QAPair> pairs;
  std::vector<Rejection> rejections;
  size_t candidates = 0;
  size_t duplicates = 0;
  size_t capped = 0;
};

// Runs both heuristics over one comment, merges pairs produced by both as
// source "dp+srl", caps the count with templates taken round-robin, and sorts
// by (source, answer_start).
WhResult GenerateWh(const annotation::AnnotatedComment& annotated,
                    const TemplateRegistry& registry, const GeneratorConfig& config);

}  // namespace codeqa::wh

#endif  // CODEQA_WH_GENERATOR_H_
