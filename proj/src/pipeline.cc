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


#include "codeqa/pipeline.h"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "codeqa/analyzer.h"
#include "codeqa/errors.h"
#include "codeqa/text.h"
#include "codeqa/yesno_generator.h"
#include "json.hpp"

namespace codeqa::pipeline {
namespace {

using nlohmann::ordered_json;

std::string WithoutWhitespace(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  }
  return out;
}

// Line errors quote the offending value; the summary groups by kind.
std::string IngestReason(const std::string& message) {
  for (const char* kind : {"duplicate id", "unknown language"}) {
    if (message.starts_with(kind)) return kind;
  }
  if (message.starts_with("language '")) return "language mismatch";
  return message;
}

std::string ListIds(const std::vector<std::string>& ids) {
  constexpr size_t kShown = 20;
  std::vector<std::string> head(ids.begin(), ids.begin() + std::min(ids.size(), kShown));
  std::string out = Join(head, ", ");
  if (ids.size() > kShown) out += ", ... (" + std::to_string(ids.size()) + " total)";
  return out;
}

}  // namespace

size_t StageSummary::dropped() const {
  size_t n = 0;
  for (const auto& [reason, count] : drops) n += count;
  return n;
}

std::string SummaryJson(const std::vector<StageSummary>& stages) {
  ordered_json arr = ordered_json::array();
  for (const StageSummary& s : stages) {
    ordered_json j;
    j["stage"] = s.stage;
    j["unit"] = s.unit;
    j["in"] = s.in;
    j["out"] = s.out;
    ordered_json drops = ordered_json::object();
    for (const auto& [reason, count] : s.drops) drops[reason] = count;
    j["drops"] = std::move(drops);
    j["conserved"] = s.Conserved();
    arr.push_back(std::move(j));
  }
  return arr.dump(2);
}

std::string SummaryTable(const std::vector<StageSummary>& stages) {
  std::ostringstream out;
  char buf[256];
  for (const StageSummary& s : stages) {
    std::snprintf(buf, sizeof buf, "%-12s %-10s in %6zu  out %6zu  dropped %6zu%s\n",
                  s.stage.c_str(), s.unit.c_str(), s.in, s.out, s.dropped(),
                  s.Conserved() ? "" : "  (counts do not add up)");
    out << buf;
    for (const auto& [reason, count] : s.drops) {
      std::snprintf(buf, sizeof buf, "    %-40s %6zu\n", reason.c_str(), count);
      out << buf;
    }
  }
  return out.str();
}

StageSummary IngestSummary(const ingest::LoadSummary& summary) {
  StageSummary s{"ingest", "lines", summary.lines, summary.records, {}};
  for (const ingest::LineError& e : summary.errors) ++s.drops[IngestReason(e.message)];
  return s;
}

AnnotationMap LoadAnnotations(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open annotation file " + path);
  AnnotationMap out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    const std::string where = path + ":" + std::to_string(line_no) + ": ";
    annotation::AnnotatedComment ann;
    try {
      ann = annotation::ParseAnnotation(line);
    } catch (const ValidationError& e) {
      throw ValidationError(where + e.what());
    }
    std::string id = ann.id;
    if (!out.emplace(id, std::move(ann)).second) {
      throw ValidationError(where + "duplicate annotation id " + id);
    }
  }
  return out;
}

bool TokensMatchText(const annotation::AnnotatedComment& annotated,
                     std::string_view text) {
  std::string joined;
  for (const std::string& t : annotated.tokens) joined += t;
  return WithoutWhitespace(joined) == WithoutWhitespace(text);
}

SelectOutput RunSelect(const std::vector<ingest::CodeCommentRecord>& records,
                       const AnnotationMap* raw,
                       const selection::SelectorConfig& config) {
  using selection::Disposition;
  SelectOutput out;
  out.summary = {"select", "comments", records.size(), 0, {}};
  std::vector<std::string> missing, mismatched;
  for (const ingest::CodeCommentRecord& r : records) {
    const annotation::AnnotatedComment* ann = nullptr;
    if (raw != nullptr) {
      selection::SelectedComment precheck = selection::SelectComment(r, nullptr, config);
      if (precheck.disposition == Disposition::kKept) {
        auto it = raw->find(r.id);
        if (it == raw->end()) {
          missing.push_back(r.id);
          continue;
        }
        if (!TokensMatchText(it->second, r.comment)) {
          mismatched.push_back(r.id);
          continue;
        }
        ann = &it->second;
      }
    }
    selection::SelectedComment s = selection::SelectComment(r, ann, config);
    switch (s.disposition) {
      case Disposition::kKept:
      case Disposition::kSubjectInserted:
        ++out.summary.out;
        out.kept.push_back(s);
        break;
      case Disposition::kDroppedNoisy:
      case Disposition::kDroppedEmpty:
        ++out.summary.drops[std::string(selection::DispositionName(s.disposition))];
        break;
    }
    out.audit.push_back(std::move(s));
  }
  if (!missing.empty()) {
    throw ValidationError("no raw annotation for " + std::to_string(missing.size()) +
                          " comment(s): " + ListIds(missing));
  }
  if (!mismatched.empty()) {
    throw ValidationError("raw annotation tokens do not match the comment for: " +
                          ListIds(mismatched));
  }
  return out;
}

std::string AuditLine(const selection::SelectedComment& selected,
                      const std::string& original_comment) {
  ordered_json j;
  j["id"] = selected.record.id;
  j["disposition"] = selection::DispositionName(selected.disposition);
  j["low_confidence"] = selected.low_confidence;
  j["original"] = original_comment;
  j["selected"] = selected.record.comment;
  return j.dump();
}

GenerateOutput RunGenerate(const std::vector<ingest::CodeCommentRecord>& selected,
                           const AnnotationMap& annotations,
                           const wh::TemplateRegistry& registry,
                           const wh::GeneratorConfig& config) {
  std::vector<std::string> missing, mismatched;
  for (const ingest::CodeCommentRecord& r : selected) {
    auto it = annotations.find(r.id);
    if (it == annotations.end()) {
      missing.push_back(r.id);
    } else if (!TokensMatchText(it->second, r.comment)) {
      mismatched.push_back(r.id);
    }
  }
  if (!missing.empty()) {
    throw ValidationError("no annotation for " + std::to_string(missing.size()) +
                          " selected comment(s): " + ListIds(missing));
  }
  if (!mismatched.empty()) {
    throw ValidationError("annotation tokens do not match the selected comment for: " +
                          ListIds(mismatched));
  }

  GenerateOutput out;
  out.summary = {"generate", "candidates", 0, 0, {}};
  for (const ingest::CodeCommentRecord& r : selected) {
    const annotation::AnnotatedComment& ann = annotations.at(r.id);
    wh::WhResult whr = wh::GenerateWh(ann, registry, config);
    yesno::YesNoResult ynr = yesno::GenerateYesNo(ann);
    out.summary.in += whr.candidates + ynr.candidates;
    for (const wh::Rejection& rej : whr.rejections) ++out.summary.drops[rej.reason];
    for (const wh::Rejection& rej : ynr.rejections) ++out.summary.drops[rej.reason];
    if (whr.duplicates + ynr.duplicates > 0) {
      out.summary.drops["duplicate pair"] += whr.duplicates + ynr.duplicates;
    }
    if (whr.capped > 0) out.summary.drops["over per-comment cap"] += whr.capped;

    std::vector<QAPair> pairs = std::move(whr.pairs);
    pairs.insert(pairs.end(), ynr.pairs.begin(), ynr.pairs.end());
    int n = 0;
    for (QAPair& p : pairs) {
      p.id = r.id + ":" + std::to_string(n++);
      p.code_id = r.id;
      p.code_tokens = r.code_tokens;
      p.qtype = analysis::CategorizeQuestion(p.question);
      p.split = Split::kUnassigned;
      out.pairs.push_back(std::move(p));
    }
  }
  out.summary.out = out.pairs.size();
  return out;
}

PostprocessOutput RunPostprocess(const std::vector<QAPair>& pairs,
                                 const PostprocessConfig& config) {
  PostprocessOutput out;
  out.summary = {"postprocess", "pairs", pairs.size(), 0, {}};
  post::FilterResult filtered = post::FilterAmbiguous(pairs, config.filter);
  for (const auto& [reason, count] : filtered.drops) out.summary.drops[reason] += count;
  post::BalanceResult balanced =
      post::BalanceYesNo(filtered.kept, config.yes_ratio, config.seed);
  if (balanced.deleted > 0) out.summary.drops["yes/no balancing"] += balanced.deleted;
  out.pairs = std::move(balanced.pairs);
  out.summary.out = out.pairs.size();
  return out;
}

SplitOutput RunSplit(const std::vector<QAPair>& pairs, const std::vector<int>& ratios,
                     uint64_t seed, bool group_by_code) {
  SplitOutput out;
  out.pairs = post::AssignSplits(pairs, ratios, seed, group_by_code);
  out.summary = {"split", "pairs", pairs.size(), out.pairs.size(), {}};
  return out;
}

AnnotatorManifest ParseManifest(std::string_view text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    throw ValidationError("manifest: not a JSON object");
  }
  AnnotatorManifest m;
  if (!j.contains("tool") || !j["tool"].is_string()) {
    throw ValidationError("manifest.tool: missing or not a string");
  }
  m.tool = j["tool"].get<std::string>();
  if (!j.contains("models") || !j["models"].is_array()) {
    throw ValidationError("manifest.models: missing or not an array");
  }
  for (size_t i = 0; i < j["models"].size(); ++i) {
    const nlohmann::json& model = j["models"][i];
    ModelInfo info;
    for (auto [key, field] : {std::pair{"task", &info.task}, {"name", &info.name},
                              {"version", &info.version}}) {
      if (!model.is_object() || !model.contains(key) || !model[key].is_string()) {
        throw ValidationError("manifest.models[" + std::to_string(i) + "]." + key +
                              ": missing or not a string");
      }
      *field = model[key].get<std::string>();
    }
    m.models.push_back(std::move(info));
  }
  return m;
}

AnnotatorManifest LoadManifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open manifest " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return ParseManifest(buf.str());
}

}  // namespace codeqa::pipeline
