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

#include "codeqa/annotation.h"

#include <algorithm>
#include <set>

#include "json.hpp"

namespace codeqa::annotation {
namespace {

using nlohmann::json;

const std::set<std::string, std::less<>>& SrlBaseLabels() {
  static const auto* labels = new std::set<std::string, std::less<>>{
      "ARG0",     "ARG1",     "ARG2",     "ARG3",     "ARG4",     "ARG5",
      "ARGA",     "ARGM-ADJ", "ARGM-ADV", "ARGM-CAU", "ARGM-COM", "ARGM-DIR",
      "ARGM-DIS", "ARGM-DSP", "ARGM-EXT", "ARGM-GOL", "ARGM-LOC", "ARGM-LVB",
      "ARGM-MNR", "ARGM-MOD", "ARGM-NEG", "ARGM-PNC", "ARGM-PRD", "ARGM-PRP",
      "ARGM-PRR", "ARGM-PRX", "ARGM-REC", "ARGM-TMP", "V"};
  return *labels;
}

// Universal Dependencies v1 and v2 plus the Stanford basic set.
const std::set<std::string, std::less<>>& Deprels() {
  static const auto* labels = new std::set<std::string, std::less<>>{
      "acl",       "acomp",    "advcl",     "advmod",   "agent",    "amod",
      "appos",     "attr",     "aux",       "auxpass",  "case",     "cc",
      "ccomp",     "clf",      "compound",  "conj",     "cop",      "csubj",
      "csubjpass", "dative",   "dep",       "det",      "discourse", "dislocated",
      "dobj",      "expl",     "fixed",     "flat",     "foreign",  "goeswith",
      "iobj",      "list",     "mark",      "mwe",      "name",     "neg",
      "nmod",      "nn",       "npadvmod",  "nsubj",    "nsubjpass", "num",
      "nummod",    "obj",      "obl",       "oprd",     "orphan",   "parataxis",
      "pcomp",     "pobj",     "poss",      "possessive", "preconj", "predet",
      "prep",      "prt",      "punct",     "quantmod", "relcl",    "remnant",
      "reparandum", "root",    "ROOT",      "vocative", "xcomp",    "infmod",
      "partmod",   "rcmod",    "tmod",      "number",   "meta",     "intj"};
  return *labels;
}

const std::set<std::string, std::less<>>& PosTags() {
  static const auto* tags = new std::set<std::string, std::less<>>{
      // Universal POS.
      "ADJ", "ADP", "ADV", "AUX", "CCONJ", "CONJ", "DET", "INTJ", "NOUN", "NUM",
      "PART", "PRON", "PROPN", "PUNCT", "SCONJ", "SYM", "VERB", "X", "SPACE",
      // Penn Treebank.
      "CC", "CD", "DT", "EX", "FW", "IN", "JJ", "JJR", "JJS", "LS", "MD", "NN",
      "NNS", "NNP", "NNPS", "PDT", "POS", "PRP", "PRP$", "RB", "RBR", "RBS",
      "RP", "TO", "UH", "VB", "VBD", "VBG", "VBN", "VBP", "VBZ", "WDT", "WP",
      "WP$", "WRB", "HYPH", "NFP", "ADD", "AFX", "XX", "_SP", ",", ".", ":",
      "``", "''", "-LRB-", "-RRB-", "$", "#"};
  return *tags;
}

std::string Path(std::string_view field, size_t index) {
  return std::string(field) + "[" + std::to_string(index) + "]";
}

template <typename T>
std::vector<T> ReadArray(const json& obj, const char* key, const char* type_name) {
  auto it = obj.find(key);
  if (it == obj.end()) throw AnnotationError(key, "missing field");
  if (!it->is_array()) throw AnnotationError(key, "expected an array");
  std::vector<T> out;
  out.reserve(it->size());
  for (size_t i = 0; i < it->size(); ++i) {
    const json& v = (*it)[i];
    if constexpr (std::is_same_v<T, int>) {
      if (!v.is_number_integer()) throw AnnotationError(Path(key, i), "expected an integer");
    } else {
      if (!v.is_string()) throw AnnotationError(Path(key, i), "expected a string");
    }
    (void)type_name;
    out.push_back(v.get<T>());
  }
  return out;
}

// Splits "B-ARG0" into ('B', "ARG0"); "O" gives ('O', "").
std::pair<char, std::string_view> SplitBio(std::string_view tag) {
  if (tag == "O") return {'O', {}};
  if (tag.size() >= 3 && (tag[0] == 'B' || tag[0] == 'I') && tag[1] == '-') {
    return {tag[0], tag.substr(2)};
  }
  return {'?', tag};
}

void ValidateBio(const std::vector<std::string>& tags, std::string_view field,
                 bool srl_labels) {
  std::string_view previous;
  for (size_t i = 0; i < tags.size(); ++i) {
    auto [prefix, label] = SplitBio(tags[i]);
    if (prefix == '?') throw AnnotationError(Path(field, i), "malformed BIO tag '" + tags[i] + "'");
    if (prefix == 'I' && label != previous) {
      throw AnnotationError(Path(field, i), "malformed BIO: '" + tags[i] + "' has no opening B-" +
                                                std::string(label));
    }
    if (srl_labels && prefix != 'O' && !IsKnownSrlLabel(label)) {
      throw AnnotationError(Path(field, i), "unknown label '" + std::string(label) + "'");
    }
    if (!srl_labels && prefix != 'O' && label.empty()) {
      throw AnnotationError(Path(field, i), "malformed BIO tag '" + tags[i] + "'");
    }
    previous = label;
  }
}

}  // namespace

std::vector<int> AnnotatedComment::Children(int index) const {
  std::vector<int> out;
  for (const DepNode& node : nodes) {
    if (node.head == index) out.push_back(node.index);
  }
  return out;
}

std::vector<int> AnnotatedComment::ChildrenWith(int index, std::string_view deprel) const {
  std::vector<int> out;
  for (const DepNode& node : nodes) {
    if (node.head == index && BaseDeprel(node.deprel) == deprel) out.push_back(node.index);
  }
  return out;
}

std::vector<int> AnnotatedComment::Roots() const { return Children(-1); }

const SrlFrame* AnnotatedComment::FrameFor(int index) const {
  for (const SrlFrame& frame : frames) {
    if (frame.predicate_index == index) return &frame;
  }
  return nullptr;
}

bool IsKnownSrlLabel(std::string_view label) {
  if (label.starts_with("R-") || label.starts_with("C-")) label.remove_prefix(2);
  return SrlBaseLabels().contains(label);
}

bool IsKnownDeprel(std::string_view deprel) {
  return Deprels().contains(BaseDeprel(deprel));
}

bool IsKnownPos(std::string_view pos) { return PosTags().contains(pos); }

std::string_view BaseDeprel(std::string_view deprel) {
  return deprel.substr(0, deprel.find(':'));
}

std::string ShortLabel(std::string_view label) {
  std::string prefix;
  if (label.starts_with("R-") || label.starts_with("C-")) {
    prefix = std::string(label.substr(0, 2));
    label.remove_prefix(2);
  }
  if (label.starts_with("ARGM-")) return prefix + std::string(label.substr(5));
  if (label.starts_with("ARG")) return prefix + "A" + std::string(label.substr(3));
  return prefix + std::string(label);
}

std::string FullLabel(std::string_view label) {
  std::string prefix;
  if (label.starts_with("R-") || label.starts_with("C-")) {
    prefix = std::string(label.substr(0, 2));
    label.remove_prefix(2);
  }
  if (label.starts_with("ARG") || label == "V") return prefix + std::string(label);
  if (label.size() >= 2 && label[0] == 'A' &&
      std::all_of(label.begin() + 1, label.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    return prefix + "ARG" + std::string(label.substr(1));
  }
  if (label == "AA") return prefix + "ARGA";
  const std::string candidate = "ARGM-" + std::string(label);
  if (SrlBaseLabels().contains(candidate)) return prefix + candidate;
  return prefix + std::string(label);
}

void Validate(const AnnotatedComment& c) {
  const size_t n = c.tokens.size();
  if (c.id.empty()) throw AnnotationError("id", "empty id");
  if (n == 0) throw AnnotationError("tokens", "empty token list");
  if (c.nodes.size() != n) throw AnnotationError("heads", "length mismatch with tokens");
  if (c.ner.size() != n) throw AnnotationError("ner", "length mismatch with tokens");
  bool has_root = false;
  for (size_t i = 0; i < n; ++i) {
    const DepNode& node = c.nodes[i];
    if (node.index != static_cast<int>(i)) throw AnnotationError(Path("nodes", i), "index out of order");
    if (node.form != c.tokens[i]) throw AnnotationError(Path("tokens", i), "node form differs from token");
    if (node.form.empty()) throw AnnotationError(Path("tokens", i), "empty token");
    if (node.head == -1) {
      has_root = true;
    } else if (node.head < 0 || node.head >= static_cast<int>(n) ||
               node.head == static_cast<int>(i)) {
      throw AnnotationError(Path("heads", i), "head out of range");
    }
    if (!IsKnownDeprel(node.deprel)) {
      throw AnnotationError(Path("deprels", i), "unknown label '" + node.deprel + "'");
    }
    if (!IsKnownPos(node.upos)) {
      throw AnnotationError(Path("pos", i), "unknown label '" + node.upos + "'");
    }
  }
  if (!has_root) throw AnnotationError("heads", "no root node");
  // Walk up from every node; a path longer than n means a cycle.
  for (size_t i = 0; i < n; ++i) {
    int cursor = static_cast<int>(i);
    size_t steps = 0;
    while (cursor != -1) {
      cursor = c.nodes[cursor].head;
      if (++steps > n) throw AnnotationError(Path("heads", i), "cyclic dependency graph");
    }
  }
  ValidateBio(c.ner, "ner", /*srl_labels=*/false);
  for (size_t f = 0; f < c.frames.size(); ++f) {
    const SrlFrame& frame = c.frames[f];
    const std::string base = Path("srl", f);
    if (frame.tags.size() != n) throw AnnotationError(base + ".tags", "length mismatch with tokens");
    if (frame.predicate_index < 0 || frame.predicate_index >= static_cast<int>(n)) {
      throw AnnotationError(base + ".predicate", "predicate out of range");
    }
    ValidateBio(frame.tags, base + ".tags", /*srl_labels=*/true);
    if (SplitBio(frame.tags[frame.predicate_index]).second != "V") {
      throw AnnotationError(base + ".tags", "predicate token is not labeled V");
    }
  }
}

AnnotatedComment ParseAnnotation(std::string_view line) {
  json obj = json::parse(line, nullptr, /*allow_exceptions=*/false);
  if (obj.is_discarded()) throw AnnotationError("$", "malformed JSON");
  if (!obj.is_object()) throw AnnotationError("$", "expected an object");
  AnnotatedComment c;
  auto id = obj.find("id");
  if (id == obj.end()) throw AnnotationError("id", "missing field");
  if (!id->is_string()) throw AnnotationError("id", "expected a string");
  c.id = id->get<std::string>();
  c.tokens = ReadArray<std::string>(obj, "tokens", "string");
  const auto lemmas = ReadArray<std::string>(obj, "lemmas", "string");
  const auto pos = ReadArray<std::string>(obj, "pos", "string");
  const auto heads = ReadArray<int>(obj, "heads", "int");
  const auto deprels = ReadArray<std::string>(obj, "deprels", "string");
  c.ner = ReadArray<std::string>(obj, "ner", "string");
  const size_t n = c.tokens.size();
  for (auto [field, size] : {std::pair{"lemmas", lemmas.size()}, {"pos", pos.size()},
                             {"heads", heads.size()}, {"deprels", deprels.size()}}) {
    if (size != n) throw AnnotationError(field, "length mismatch with tokens");
  }
  for (size_t i = 0; i < n; ++i) {
    c.nodes.push_back({static_cast<int>(i), c.tokens[i], lemmas[i], pos[i], heads[i], deprels[i]});
  }
  auto srl = obj.find("srl");
  if (srl == obj.end()) throw AnnotationError("srl", "missing field");
  if (!srl->is_array()) throw AnnotationError("srl", "expected an array");
  for (size_t f = 0; f < srl->size(); ++f) {
    const json& entry = (*srl)[f];
    const std::string base = Path("srl", f);
    if (!entry.is_object()) throw AnnotationError(base, "expected an object");
    auto pred = entry.find("predicate");
    if (pred == entry.end() || !pred->is_number_integer()) {
      throw AnnotationError(base + ".predicate", "expected an integer");
    }
    SrlFrame frame;
    frame.predicate_index = pred->get<int>();
    auto tags = entry.find("tags");
    if (tags == entry.end() || !tags->is_array()) {
      throw AnnotationError(base + ".tags", "expected an array");
    }
    for (size_t i = 0; i < tags->size(); ++i) {
      if (!(*tags)[i].is_string()) {
        throw AnnotationError(base + ".tags" + Path("", i), "expected a string");
      }
      frame.tags.push_back((*tags)[i].get<std::string>());
    }
    c.frames.push_back(std::move(frame));
  }
  Validate(c);
  return c;
}

std::string SerializeAnnotation(const AnnotatedComment& c) {
  nlohmann::ordered_json obj;
  obj["id"] = c.id;
  obj["tokens"] = c.tokens;
  nlohmann::ordered_json lemmas = nlohmann::ordered_json::array(), pos = lemmas,
                         heads = lemmas, deprels = lemmas;
  for (const DepNode& node : c.nodes) {
    lemmas.push_back(node.lemma);
    pos.push_back(node.upos);
    heads.push_back(node.head);
    deprels.push_back(node.deprel);
  }
  obj["lemmas"] = lemmas;
  obj["pos"] = pos;
  obj["heads"] = heads;
  obj["deprels"] = deprels;
  nlohmann::ordered_json srl = nlohmann::ordered_json::array();
  for (const SrlFrame& frame : c.frames) {
    srl.push_back({{"predicate", frame.predicate_index}, {"tags", frame.tags}});
  }
  obj["srl"] = srl;
  obj["ner"] = c.ner;
  return obj.dump();
}

FrameArgs FrameArguments(const SrlFrame& frame) {
  FrameArgs args;
  const int n = static_cast<int>(frame.tags.size());
  int i = 0;
  while (i < n) {
    auto [prefix, label] = SplitBio(frame.tags[i]);
    if (prefix == 'O' || prefix == '?') {
      ++i;
      continue;
    }
    int j = i + 1;
    while (j < n && frame.tags[j].starts_with("I-") &&
           std::string_view(frame.tags[j]).substr(2) == label) {
      ++j;
    }
    if (label != "V") args[std::string(label)].push_back({i, j});
    i = j;
  }
  return args;
}

std::string LabelAt(const SrlFrame& frame, int index) {
  if (index < 0 || index >= static_cast<int>(frame.tags.size())) return "";
  return std::string(SplitBio(frame.tags[index]).second);
}

std::vector<int> SubtreeIndices(int index, const std::vector<DepNode>& nodes) {
  std::vector<int> out;
  for (const DepNode& node : nodes) {
    int cursor = node.index;
    size_t steps = 0;
    while (cursor != -1 && cursor != index && steps++ <= nodes.size()) {
      cursor = nodes[cursor].head;
    }
    if (cursor == index) out.push_back(node.index);
  }
  return out;
}

SubtreeResult SubtreeSpan(int index, const std::vector<DepNode>& nodes) {
  const std::vector<int> yield = SubtreeIndices(index, nodes);
  SubtreeResult result;
  result.span = {yield.front(), yield.back() + 1};
  result.contiguous = result.span.size() == static_cast<int>(yield.size());
  return result;
}

}  // namespace codeqa::annotation
