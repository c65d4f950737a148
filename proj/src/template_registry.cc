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

#include "codeqa/template_registry.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "codeqa/annotation.h"
#include "codeqa/errors.h"
#include "json.hpp"

namespace codeqa::wh {
namespace {

// Kept in sync with data/templates.json.
constexpr char kDefaultTemplates[] = R"json([
  {"key": "nsubj", "kind": "dp", "wh": "What",
   "slots": ["wh", "mainAux", "otherAux", "verb", "obj", "modifiers"],
   "labels": ["nsubj", "nsubjpass"]},
  {"key": "dobj", "kind": "dp", "wh": "What",
   "slots": ["wh", "mainAux", "nsubj", "otherAux", "verb", "modifiers"],
   "labels": ["dobj", "obj"]},
  {"key": "xcomp", "kind": "dp", "wh": "What",
   "slots": ["wh", "mainAux", "nsubj", "verb", "modifiers"],
   "labels": ["xcomp"]},
  {"key": "TMP", "kind": "srl", "wh": "When",
   "slots": ["wh", "mainAux", "nsubj", "otherAux", "verb", "obj", "modifiers"],
   "labels": ["ARGM-TMP"]},
  {"key": "LOC", "kind": "srl", "wh": "Where",
   "slots": ["wh", "mainAux", "nsubj", "otherAux", "verb", "obj", "modifiers"],
   "labels": ["ARGM-LOC"]},
  {"key": "MNR", "kind": "srl", "wh": "How",
   "slots": ["wh", "mainAux", "nsubj", "otherAux", "verb", "obj", "modifiers"],
   "labels": ["ARGM-MNR"]},
  {"key": "CAU", "kind": "srl", "wh": "Why",
   "slots": ["wh", "mainAux", "nsubj", "otherAux", "verb", "obj", "modifiers"],
   "labels": ["ARGM-CAU"]},
  {"key": "PNC_PRP", "kind": "srl", "wh": "For what purpose",
   "slots": ["wh", "mainAux", "nsubj", "otherAux", "verb", "obj", "modifiers"],
   "labels": ["ARGM-PNC", "ARGM-PRP"]}
]
)json";

Slot ParseSlot(const std::string& name) {
  if (name == "wh") return Slot::kWh;
  if (name == "mainAux") return Slot::kMainAux;
  if (name == "nsubj") return Slot::kNsubj;
  if (name == "otherAux") return Slot::kOtherAux;
  if (name == "verb") return Slot::kVerb;
  if (name == "obj") return Slot::kObj;
  if (name == "modifiers") return Slot::kModifiers;
  throw ValidationError("unknown template slot '" + name + "'");
}

}  // namespace

bool Template::Has(Slot slot) const {
  return std::find(slots.begin(), slots.end(), slot) != slots.end();
}

TemplateRegistry TemplateRegistry::Default() { return Parse(kDefaultTemplates); }

TemplateRegistry TemplateRegistry::Parse(std::string_view json_text) {
  nlohmann::json doc = nlohmann::json::parse(json_text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_array()) {
    throw ValidationError("template registry must be a JSON array");
  }
  TemplateRegistry registry;
  for (size_t i = 0; i < doc.size(); ++i) {
    const nlohmann::json& entry = doc[i];
    const std::string where = "template " + std::to_string(i);
    try {
      Template t;
      t.key = entry.at("key").get<std::string>();
      const std::string kind = entry.at("kind").get<std::string>();
      if (kind == "dp") {
        t.kind = TemplateKind::kDependency;
      } else if (kind == "srl") {
        t.kind = TemplateKind::kSemanticRole;
      } else {
        throw ValidationError(where + ": kind must be 'dp' or 'srl'");
      }
      t.wh_word = entry.at("wh").get<std::string>();
      for (const auto& s : entry.at("slots")) t.slots.push_back(ParseSlot(s.get<std::string>()));
      for (const auto& l : entry.at("labels")) {
        std::string label = l.get<std::string>();
        if (t.kind == TemplateKind::kSemanticRole) {
          label = annotation::FullLabel(label);
          if (!annotation::IsKnownSrlLabel(label)) {
            throw ValidationError(where + ": unknown role label '" + label + "'");
          }
        }
        t.labels.push_back(std::move(label));
      }
      if (t.key.empty() || t.wh_word.empty() || t.labels.empty() || !t.Has(Slot::kWh)) {
        throw ValidationError(where + ": needs a key, a wh word, labels and a wh slot");
      }
      if (registry.Find(t.key) != nullptr) {
        throw ValidationError(where + ": duplicate key '" + t.key + "'");
      }
      registry.templates_.push_back(std::move(t));
    } catch (const nlohmann::json::exception& e) {
      throw ValidationError(where + ": " + e.what());
    }
  }
  return registry;
}

TemplateRegistry TemplateRegistry::Load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open template registry " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return Parse(buffer.str());
}

const Template* TemplateRegistry::Find(std::string_view key) const {
  for (const Template& t : templates_) {
    if (t.key == key) return &t;
  }
  return nullptr;
}

const Template* TemplateRegistry::ForDeprel(std::string_view deprel) const {
  for (const Template& t : templates_) {
    if (t.kind != TemplateKind::kDependency) continue;
    for (const std::string& label : t.labels) {
      if (label == deprel || label == annotation::BaseDeprel(deprel)) return &t;
    }
  }
  return nullptr;
}

const Template* TemplateRegistry::ForSrlLabel(std::string_view label) const {
  for (const Template& t : templates_) {
    if (t.kind != TemplateKind::kSemanticRole) continue;
    if (std::find(t.labels.begin(), t.labels.end(), label) != t.labels.end()) return &t;
  }
  return nullptr;
}

int TemplateRegistry::Rank(std::string_view key) const {
  for (size_t i = 0; i < templates_.size(); ++i) {
    if (templates_[i].key == key) return static_cast<int>(i);
  }
  return static_cast<int>(templates_.size());
}

}  // namespace codeqa::wh
