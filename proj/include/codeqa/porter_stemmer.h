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


#ifndef CODEQA_PORTER_STEMMER_H_
#define CODEQA_PORTER_STEMMER_H_

#include <string>
#include <string_view>

namespace codeqa::metrics {

// Porter stemmer with the NLTK extensions (irregular-form table, the
// two-letter cvc rule, "alli"/"fulli"/"logi" in step 2). Input is
// lowercased first. Only ASCII letters are treated as letters.
std::string PorterStem(std::string_view word);

}  // namespace codeqa::metrics

#endif  // CODEQA_PORTER_STEMMER_H_
