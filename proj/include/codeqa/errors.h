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

#ifndef CODEQA_ERRORS_H_
#define CODEQA_ERRORS_H_

#include <stdexcept>
#include <string>

namespace codeqa {

// Unreadable or unwritable files. Fatal for the stage that hits it.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input that violates a documented schema or precondition.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller misuse, e.g. mismatched argument lengths.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace codeqa

#endif  // CODEQA_ERRORS_H_
