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


#include "codeqa/cli.h"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "codeqa/analyzer.h"
#include "codeqa/errors.h"
#include "codeqa/metrics.h"
#include "codeqa/pipeline.h"
#include "codeqa/postprocessor.h"
#include "codeqa/record.h"
#include "codeqa/text.h"
#include "json.hpp"

namespace codeqa::cli {
namespace {

namespace fs = std::filesystem;

// Knobs shared by every subcommand; each has a config-file key of the same
// name.
struct Options {
  uint64_t seed = 13;
  std::string split = "8:1:1";
  double yes_ratio = 0.5;
  bool group_by_code = false;
  int max_pairs_per_comment = 8;
  std::string noise_keywords;
  std::string template_registry;
  bool inflect_on_insert = true;
  bool json = false;
  std::string language = "java";
};

struct Paths {
  std::string corpus, records, raw_annotations, annotations, manifest, selected, audit;
  std::string input, output, out_dir, dir, pred, gold;
  bool exclude_yes_no = false;
  bool per_pair = false;
  std::vector<std::string> questions;
};

void WriteLines(const fs::path& path, const std::vector<std::string>& lines) {
  if (path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  for (const std::string& line : lines) out << line << '\n';
  if (!out) throw IoError("write failure on " + path.string());
}

ingest::Language LanguageOf(const Options& o) {
  std::optional<ingest::Language> lang = ingest::ParseLanguage(o.language);
  if (!lang) throw UsageError("unknown language '" + o.language + "'");
  return *lang;
}

// Intermediate files are written by this tool, so any bad line is an error.
std::vector<ingest::CodeCommentRecord> LoadRecordsStrict(const std::string& path,
                                                         ingest::Language language) {
  ingest::LoadedCorpus corpus = ingest::LoadCorpus(path, language);
  if (!corpus.summary.errors.empty()) {
    const ingest::LineError& e = corpus.summary.errors.front();
    throw ValidationError(path + ":" + std::to_string(e.line_number) + ": " + e.message);
  }
  return std::move(corpus.records);
}

selection::SelectorConfig SelectorConfigOf(const Options& o) {
  selection::SelectorConfig c;
  if (!o.noise_keywords.empty()) c.noise_keywords = selection::LoadNoiseKeywords(o.noise_keywords);
  c.inflect_on_insert = o.inflect_on_insert;
  return c;
}

wh::TemplateRegistry RegistryOf(const Options& o) {
  return o.template_registry.empty() ? wh::TemplateRegistry::Default()
                                     : wh::TemplateRegistry::Load(o.template_registry);
}

void PrintSummary(const std::vector<pipeline::StageSummary>& stages, const Options& o,
                  std::ostream& out) {
  out << (o.json ? pipeline::SummaryJson(stages) + "\n" : pipeline::SummaryTable(stages));
}

struct StageFiles {
  std::vector<ingest::CodeCommentRecord> records;
  pipeline::StageSummary summary;
};

StageFiles DoIngest(const std::string& corpus, const std::string& out_path,
                    const Options& o) {
  ingest::LoadedCorpus loaded = ingest::LoadCorpus(corpus, LanguageOf(o));
  std::vector<std::string> lines;
  for (const auto& r : loaded.records) lines.push_back(ingest::SerializeRecord(r));
  WriteLines(out_path, lines);
  return {std::move(loaded.records), pipeline::IngestSummary(loaded.summary)};
}

StageFiles DoSelect(const std::vector<ingest::CodeCommentRecord>& records,
                    const std::string& raw_path, const std::string& out_path,
                    const std::string& audit_path, const Options& o) {
  std::optional<pipeline::AnnotationMap> raw;
  if (!raw_path.empty()) raw = pipeline::LoadAnnotations(raw_path);
  pipeline::SelectOutput sel =
      pipeline::RunSelect(records, raw ? &*raw : nullptr, SelectorConfigOf(o));
  std::vector<std::string> lines, audit;
  for (const auto& s : sel.kept) lines.push_back(ingest::SerializeRecord(s.record));
  for (size_t i = 0; i < sel.audit.size(); ++i) {
    audit.push_back(pipeline::AuditLine(sel.audit[i], records[i].comment));
  }
  WriteLines(out_path, lines);
  WriteLines(audit_path, audit);
  std::vector<ingest::CodeCommentRecord> kept;
  for (auto& s : sel.kept) kept.push_back(std::move(s.record));
  return {std::move(kept), sel.summary};
}

pipeline::GenerateOutput DoGenerate(const std::vector<ingest::CodeCommentRecord>& selected,
                                    const std::string& annotations_path,
                                    const std::string& manifest_path,
                                    const std::string& out_path, const Options& o,
                                    std::ostream& err) {
  if (!manifest_path.empty()) {
    pipeline::AnnotatorManifest m = pipeline::LoadManifest(manifest_path);
    std::vector<std::string> models;
    for (const auto& info : m.models) models.push_back(info.task + "=" + info.name + "@" + info.version);
    err << "annotations from " << m.tool << " (" << Join(models, ", ") << ")\n";
  }
  pipeline::AnnotationMap annotations = pipeline::LoadAnnotations(annotations_path);
  wh::GeneratorConfig config;
  config.max_pairs_per_comment = o.max_pairs_per_comment;
  pipeline::GenerateOutput gen =
      pipeline::RunGenerate(selected, annotations, RegistryOf(o), config);
  std::vector<std::string> lines;
  for (const QAPair& p : gen.pairs) lines.push_back(SerializePair(p));
  WriteLines(out_path, lines);
  return gen;
}

pipeline::PostprocessOutput DoPostprocess(const std::vector<QAPair>& pairs,
                                          const std::string& out_path, const Options& o) {
  pipeline::PostprocessConfig config;
  config.yes_ratio = o.yes_ratio;
  config.seed = o.seed;
  pipeline::PostprocessOutput post = pipeline::RunPostprocess(pairs, config);
  std::vector<std::string> lines;
  for (const QAPair& p : post.pairs) lines.push_back(SerializePair(p));
  WriteLines(out_path, lines);
  return post;
}

pipeline::SplitOutput DoSplit(const std::vector<QAPair>& pairs, const std::string& out_dir,
                              const Options& o) {
  pipeline::SplitOutput split =
      pipeline::RunSplit(pairs, post::ParseRatios(o.split), o.seed, o.group_by_code);
  for (Split s : {Split::kTrain, Split::kDev, Split::kTest}) {
    std::vector<std::string> lines;
    for (const QAPair& p : split.pairs) {
      if (p.split == s) lines.push_back(SerializeDatasetLine(p));
    }
    WriteLines(fs::path(out_dir) / (std::string(SplitName(s)) + ".jsonl"), lines);
  }
  return split;
}

analysis::StatsReport DoStats(const std::string& dir) {
  auto load = [&](const char* name) {
    return LoadPairs((fs::path(dir) / (std::string(name) + ".jsonl")).string());
  };
  return analysis::BuildReport(load("train"), load("dev"), load("test"));
}

// Rejects bad global options before any file is touched.
void CheckOptions(const Options& o) {
  LanguageOf(o);
  if (post::ParseRatios(o.split).size() != 3) throw UsageError("split needs three ratios");
  if (!(o.yes_ratio > 0.0 && o.yes_ratio < 1.0)) {
    throw UsageError("yes ratio must be strictly between 0 and 1");
  }
  if (o.max_pairs_per_comment < 0) throw UsageError("max pairs per comment must not be negative");
}

int Dispatch(CLI::App& app, const Options& o, const Paths& p, std::ostream& out,
             std::ostream& err) {
  CheckOptions(o);
  auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front();
  if (sub == nullptr) {
    err << app.help();
    return kUsage;
  }
  const std::string name = sub->get_name();

  if (name == "ingest") {
    StageFiles r = DoIngest(p.corpus, p.output, o);
    PrintSummary({r.summary}, o, out);
  } else if (name == "select") {
    auto records = LoadRecordsStrict(p.records, LanguageOf(o));
    StageFiles r = DoSelect(records, p.raw_annotations, p.output, p.audit, o);
    PrintSummary({r.summary}, o, out);
  } else if (name == "generate") {
    auto selected = LoadRecordsStrict(p.selected, LanguageOf(o));
    auto gen = DoGenerate(selected, p.annotations, p.manifest, p.output, o, err);
    PrintSummary({gen.summary}, o, out);
  } else if (name == "postprocess") {
    auto post = DoPostprocess(LoadPairs(p.input), p.output, o);
    PrintSummary({post.summary}, o, out);
  } else if (name == "split") {
    auto split = DoSplit(LoadPairs(p.input), p.out_dir, o);
    PrintSummary({split.summary}, o, out);
  } else if (name == "stats") {
    analysis::StatsReport report = DoStats(p.dir);
    out << (o.json ? analysis::ReportJson(report) + "\n" : analysis::ReportTable(report));
  } else if (name == "evaluate") {
    metrics::MetricReport report = metrics::Evaluate(
        LoadPairs(p.gold), metrics::LoadPredictions(p.pred), {.exclude_yes_no = p.exclude_yes_no});
    out << (o.json ? metrics::ReportJson(report, p.per_pair) + "\n"
                   : metrics::ReportTable(report));
  } else if (name == "categorize") {
    std::vector<std::string> questions = p.questions;
    if (questions.empty()) {
      for (std::string line; std::getline(std::cin, line);) {
        if (!Trim(line).empty()) questions.push_back(line);
      }
    }
    for (const std::string& q : questions) {
      std::string type = analysis::CategorizeQuestion(q);
      if (o.json) {
        nlohmann::ordered_json j;
        j["question"] = q;
        j["qtype"] = type;
        out << j.dump() << "\n";
      } else {
        out << type << "\t" << q << "\n";
      }
    }
  } else if (name == "all") {
    const fs::path dir = p.out_dir;
    StageFiles ingested = DoIngest(p.corpus, (dir / "records.jsonl").string(), o);
    StageFiles selected = DoSelect(ingested.records, p.raw_annotations,
                                   (dir / "selected.jsonl").string(),
                                   (dir / "select_audit.jsonl").string(), o);
    auto gen = DoGenerate(selected.records, p.annotations, p.manifest,
                          (dir / "generated.jsonl").string(), o, err);
    auto post = DoPostprocess(gen.pairs, (dir / "postprocessed.jsonl").string(), o);
    auto split = DoSplit(post.pairs, dir.string(), o);
    std::vector<pipeline::StageSummary> stages = {ingested.summary, selected.summary,
                                                  gen.summary, post.summary, split.summary};
    WriteLines(dir / "summary.json", {pipeline::SummaryJson(stages)});
    analysis::StatsReport report = DoStats(dir.string());
    WriteLines(dir / "stats.json", {analysis::ReportJson(report)});
    PrintSummary(stages, o, out);
    if (!o.json) out << "\n" << analysis::ReportTable(report);
  }
  return kOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Builds code QA datasets from code comments and scores answers.", "codeqa"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value file; keys are the long flag names");

  Options o;
  Paths p;
  app.add_option("--seed", o.seed, "Seed for shuffling and balancing")->capture_default_str();
  app.add_option("--split", o.split, "train:dev:test ratio")->capture_default_str();
  app.add_option("--yes-ratio", o.yes_ratio, "Largest share of Yes among yes/no pairs")
      ->capture_default_str();
  app.add_flag("--group-by-code", o.group_by_code, "Keep all pairs of a code in one split");
  app.add_option("--max-pairs-per-comment", o.max_pairs_per_comment,
                 "Cap on wh pairs per comment")
      ->capture_default_str();
  app.add_option("--noise-keywords", o.noise_keywords, "Keyword file, one per line");
  app.add_option("--template-registry", o.template_registry, "Template registry JSON");
  app.add_flag("--inflect-on-insert,!--no-inflect-on-insert", o.inflect_on_insert,
               "Inflect a base-form root verb when inserting a subject (default on)");
  app.add_flag("--json", o.json, "Machine-readable output");
  app.add_option("--language", o.language, "java or python")->capture_default_str();

  auto* ingest = app.add_subcommand("ingest", "Load and tokenize a corpus");
  ingest->add_option("--corpus", p.corpus, "Corpus JSONL")->required();
  ingest->add_option("--out", p.output, "Records JSONL")->required();

  auto* select = app.add_subcommand("select", "Filter noisy comments, insert subjects");
  select->add_option("--records", p.records, "Records JSONL")->required();
  select->add_option("--raw-annotations", p.raw_annotations,
                     "Annotations of the original comments; enables subject insertion");
  select->add_option("--out", p.output, "Selected comments JSONL")->required();
  select->add_option("--audit", p.audit, "Per-record disposition JSONL")->required();

  auto* generate = app.add_subcommand("generate", "Generate wh and yes/no pairs");
  generate->add_option("--selected", p.selected, "Selected comments JSONL")->required();
  generate->add_option("--annotations", p.annotations, "Annotations of the selected comments")
      ->required();
  generate->add_option("--manifest", p.manifest, "Annotator manifest JSON");
  generate->add_option("--out", p.output, "Generated pairs JSONL")->required();

  auto* postprocess = app.add_subcommand("postprocess", "Drop ambiguous pairs, balance yes/no");
  postprocess->add_option("--input", p.input, "Pairs JSONL")->required();
  postprocess->add_option("--out", p.output, "Pairs JSONL")->required();

  auto* split = app.add_subcommand("split", "Write train/dev/test files");
  split->add_option("--input", p.input, "Pairs JSONL")->required();
  split->add_option("--out-dir", p.out_dir, "Directory for train/dev/test.jsonl")->required();

  auto* stats = app.add_subcommand("stats", "Dataset statistics");
  stats->add_option("--dir", p.dir, "Directory holding train/dev/test.jsonl")->required();

  auto* evaluate = app.add_subcommand("evaluate", "Score predictions");
  evaluate->add_option("--pred", p.pred, "Predictions JSONL with id and prediction")->required();
  evaluate->add_option("--gold", p.gold, "Gold pairs JSONL")->required();
  evaluate->add_flag("--exclude-yes-no", p.exclude_yes_no, "Leave yes/no pairs out");
  evaluate->add_flag("--per-pair", p.per_pair, "Include per-pair scores in JSON output");

  auto* categorize = app.add_subcommand("categorize", "Question type of each question");
  categorize->add_option("questions", p.questions, "Questions; read from stdin if none");

  auto* all = app.add_subcommand("all", "Run every stage");
  all->add_option("--corpus", p.corpus, "Corpus JSONL")->required();
  all->add_option("--raw-annotations", p.raw_annotations, "Annotations of the original comments");
  all->add_option("--annotations", p.annotations, "Annotations of the selected comments")
      ->required();
  all->add_option("--manifest", p.manifest, "Annotator manifest JSON");
  all->add_option("--out-dir", p.out_dir, "Output directory")->required();

  std::vector<std::string> argv(args.rbegin(), args.rend());
  if (!argv.empty()) argv.pop_back();  // program name
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::FileError& e) {
    err << "error: " << e.what() << "\n";
    return kIo;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    return Dispatch(app, o, p, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return kValidation;
  } catch (const nlohmann::json::exception& e) {
    err << "validation error: " << e.what() << "\n";
    return kValidation;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << "\n";
    return kIo;
  }
}

}  // namespace codeqa::cli
