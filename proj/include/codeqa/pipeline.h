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


#ifndef CODEQA_PIPELINE_H_
#define CODEQA_PIPELINE_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "codeqa/annotation.h"
#include "codeqa/comment_selector.h"
#include "codeqa/postprocessor.h"
#include "codeqa/qa_pair.h"
#include "codeqa/record.h"
#include "codeqa/template_registry.h"
#include "codeqa/wh_generator.h"

namespace codeqa::pipeline {

// Counts for one stage. Every input unit is either output or dropped for
// exactly one reason.
struct StageSummary {
  std::string stage;
  std::string unit;  // what is counted: "lines", "comments", "candidates", "pairs"
  size_t in = 0;
  size_t out = 0;
  std::map<std::string, size_t> drops;

  size_t dropped() const;
  bool Conserved() const { return in == out + dropped(); }
};

std::string SummaryJson(const std::vector<StageSummary>& stages);
std::string SummaryTable(const std::vector<StageSummary>& stages);

StageSummary IngestSummary(const ingest::LoadSummary& summary);

using AnnotationMap = std::map<std::string, annotation::AnnotatedComment>;

// Reads the annotation interchange file. Throws IoError, or ValidationError
// naming the line and field path of the first invalid record or a repeated
// id.
AnnotationMap LoadAnnotations(const std::string& path);

// True when the tokens spell `text` once whitespace is removed from both.
bool TokensMatchText(const annotation::AnnotatedComment& annotated,
                     std::string_view text);

struct SelectOutput {
  std::vector<selection::SelectedComment> kept;
  std::vector<selection::SelectedComment> audit;  // every input, in order
  StageSummary summary;
};

// With `raw` null only the noise filter runs. Otherwise every record must
// have a raw annotation; missing ids are a ValidationError listing them.
SelectOutput RunSelect(const std::vector<ingest::CodeCommentRecord>& records,
                       const AnnotationMap* raw,
                       const selection::SelectorConfig& config);

// One audit line: id, disposition, low_confidence, original and selected
// comment text.
std::string AuditLine(const selection::SelectedComment& selected,
                      const std::string& original_comment);

struct GenerateOutput {
  std::vector<QAPair> pairs;
  StageSummary summary;
};

// Wh and yes/no pairs for every selected comment, wh first. Pair ids are
// "<record id>:<n>"; qtype comes from the question. Throws ValidationError
// listing ids with no annotation, or whose tokens do not spell the selected
// comment.
GenerateOutput RunGenerate(const std::vector<ingest::CodeCommentRecord>& selected,
                           const AnnotationMap& annotations,
                           const wh::TemplateRegistry& registry,
                           const wh::GeneratorConfig& config);

struct PostprocessConfig {
  post::FilterConfig filter = post::FilterConfig::Default();
  double yes_ratio = 0.5;
  uint64_t seed = 13;
};

struct PostprocessOutput {
  std::vector<QAPair> pairs;
  StageSummary summary;
};

PostprocessOutput RunPostprocess(const std::vector<QAPair>& pairs,
                                 const PostprocessConfig& config);

struct SplitOutput {
  std::vector<QAPair> pairs;  // input order, split field set
  StageSummary summary;
};

SplitOutput RunSplit(const std::vector<QAPair>& pairs, const std::vector<int>& ratios,
                     uint64_t seed, bool group_by_code);

// Sidecar written by the annotator next to its output:
//   {"tool": str, "models": [{"task": str, "name": str, "version": str}], ...}
struct ModelInfo {
  std::string task;
  std::string name;
  std::string version;
};
struct AnnotatorManifest {
  std::string tool;
  std::vector<ModelInfo> models;
};
AnnotatorManifest ParseManifest(std::string_view text);
AnnotatorManifest LoadManifest(const std::string& path);

}  // namespace codeqa::pipeline

#endif  // CODEQA_PIPELINE_H_
