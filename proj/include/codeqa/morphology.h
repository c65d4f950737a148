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

#ifndef CODEQA_MORPHOLOGY_H_
#define CODEQA_MORPHOLOGY_H_

#include <string>
#include <string_view>

namespace codeqa {

// Present-tense third-person singular of a verb lemma: "attach" ->
// "attaches", "try" -> "tries", "be" -> "is". Letter case of the input is
// kept for the shared prefix.
std::string ThirdPersonSingular(std::string_view lemma);

// Lemmas that invert with the subject in questions: be, have, do and the
// modals.
bool IsInvertibleAuxLemma(std::string_view lemma);

// Surface forms that carry tense on their own ("is", "did", "'ll", "ca").
bool IsFiniteAuxForm(std::string_view form);

// Forms of "be" that are finite.
bool IsFiniteBeForm(std::string_view form);

// Expands clitic and contracted auxiliaries for sentence-initial use:
// "wo" -> "will", "ca" -> "can", "'re" -> "are". Other forms are lowercased.
std::string NormalizeAux(std::string_view form);

// "not", "n't", "never" and friends.
bool IsNegationWord(std::string_view form);

// Renders a negation token for a question body: "n't" becomes "not".
std::string NegationText(std::string_view form);

// Personal and demonstrative pronouns that take plural agreement.
bool IsPluralPronoun(std::string_view form);

bool IsWhWord(std::string_view form);

}  // namespace codeqa

#endif  // CODEQA_MORPHOLOGY_H_
