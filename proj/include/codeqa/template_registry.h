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

#ifndef CODEQA_TEMPLATE_REGISTRY_H_
#define CODEQA_TEMPLATE_REGISTRY_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace codeqa::wh {

enum class Slot { kWh, kMainAux, kNsubj, kOtherAux, kVerb, kObj, kModifiers };

enum class TemplateKind { kDependency, kSemanticRole };

struct Template {
  std::string key;
  TemplateKind kind = TemplateKind::kDependency;
  std::string wh_word;
  std::vector<Slot> slots;
  // Relation labels (dp) or full PropBank labels (srl) that select this
  // template. Relation labels match on their base before any ':'.
  std::vector<std::string> labels;

  bool Has(Slot slot) const;
};

class TemplateRegistry {
 public:
  // The eight built-in templates.
  static TemplateRegistry Default();
  // Throws ValidationError on malformed content.
  static TemplateRegistry Parse(std::string_view json_text);
  // Throws IoError or ValidationError.
  static TemplateRegistry Load(const std::filesystem::path& path);

  const std::vector<Template>& templates() const { return templates_; }
  const Template* Find(std::string_view key) const;
  const Template* ForDeprel(std::string_view deprel) const;
  const Template* ForSrlLabel(std::string_view label) const;
  // Position of a template in registry order, used for round-robin capping.
  int Rank(std::string_view key) const;

 private:
  std::vector<Template> templates_;
};

}  // namespace codeqa::wh

#endif  // CODEQA_TEMPLATE_REGISTRY_H_
