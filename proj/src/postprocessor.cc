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


#include "codeqa/postprocessor.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numeric>

#include "codeqa/errors.h"
#include "codeqa/random.h"
#include "codeqa/text.h"

namespace codeqa::post {
namespace {

std::string StripOuterPunctuation(std::string_view token) {
  size_t b = 0, e = token.size();
  while (b < e && std::ispunct(static_cast<unsigned char>(token[b]))) ++b;
  while (e > b && std::ispunct(static_cast<unsigned char>(token[e - 1]))) --e;
  return std::string(token.substr(b, e - b));
}

bool IsArticle(std::string_view w) { return w == "a" || w == "an" || w == "the"; }

}  // namespace

FilterConfig FilterConfig::Default() {
  FilterConfig c;
  c.pronouns = {"it",   "this",  "that",   "these", "those",  "he",
                "she",  "they",  "them",   "one",   "i",      "me",
                "you",  "we",    "us",     "him",   "her",    "its",
                "itself", "themselves", "himself", "herself"};
  c.generic_phrases = {"this method", "the code", "this function",
                       "the function", "this class"};
  return c;
}

std::optional<std::string> AmbiguityReason(std::string_view answer,
                                           const FilterConfig& config) {
  std::string flat = CollapseWhitespace(StripTerminalPunctuation(ToLower(answer)));
  if (config.generic_phrases.count(flat)) return "generic answer";
  std::vector<std::string> words;
  for (const std::string& t : SplitWhitespace(flat)) {
    std::string w = StripOuterPunctuation(t);
    if (!w.empty() && !IsArticle(w)) words.push_back(std::move(w));
  }
  if (words.empty()) return "empty answer";
  bool all_pronouns = std::all_of(words.begin(), words.end(), [&](const std::string& w) {
    return config.pronouns.count(w) > 0;
  });
  if (all_pronouns) return "pronoun-only answer";
  return std::nullopt;
}

FilterResult FilterAmbiguous(const std::vector<QAPair>& pairs,
                             const FilterConfig& config) {
  FilterResult result;
  for (const QAPair& p : pairs) {
    if (std::optional<std::string> reason = AmbiguityReason(p.answer, config)) {
      ++result.drops[*reason];
    } else {
      result.kept.push_back(p);
    }
  }
  return result;
}

BalanceResult BalanceYesNo(const std::vector<QAPair>& pairs,
                           double target_yes_ratio, uint64_t seed) {
  if (!(target_yes_ratio > 0 && target_yes_ratio < 1)) {
    throw UsageError("yes ratio must be strictly between 0 and 1");
  }
  std::vector<size_t> yes;
  size_t no = 0;
  for (size_t i = 0; i < pairs.size(); ++i) {
    if (!IsYesNo(pairs[i])) continue;
    if (ToLower(StripTerminalPunctuation(Trim(pairs[i].answer))) == "yes") {
      yes.push_back(i);
    } else {
      ++no;
    }
  }
  // Largest yes count with yes / (yes + no) <= r. The epsilon absorbs
  // rounding in r / (1 - r) for ratios such as 0.5.
  const double bound = target_yes_ratio * no / (1 - target_yes_ratio);
  const size_t keep = static_cast<size_t>(std::floor(bound + 1e-9));
  BalanceResult result;
  if (yes.size() <= keep) {
    result.pairs = pairs;
    return result;
  }
  Rng rng(seed);
  rng.Shuffle(yes);
  std::vector<bool> drop(pairs.size(), false);
  for (size_t k = keep; k < yes.size(); ++k) drop[yes[k]] = true;
  for (size_t i = 0; i < pairs.size(); ++i) {
    if (drop[i]) {
      ++result.deleted;
    } else {
      result.pairs.push_back(pairs[i]);
    }
  }
  return result;
}

std::vector<int> ParseRatios(std::string_view text) {
  std::vector<int> out;
  size_t start = 0;
  while (true) {
    size_t colon = text.find(':', start);
    std::string_view part = text.substr(start, colon == std::string_view::npos
                                                   ? std::string_view::npos
                                                   : colon - start);
    int value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size() ||
        value <= 0) {
      throw UsageError("bad split ratio '" + std::string(text) +
                       "': expected three positive integers like 8:1:1");
    }
    out.push_back(value);
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  if (out.size() != 3) {
    throw UsageError("bad split ratio '" + std::string(text) +
                     "': expected three parts (train:dev:test)");
  }
  return out;
}

std::vector<size_t> SplitSizes(size_t n, const std::vector<int>& ratios) {
  const uint64_t total = std::accumulate(ratios.begin(), ratios.end(), uint64_t{0});
  std::vector<size_t> sizes(ratios.size());
  std::vector<uint64_t> remainders(ratios.size());
  size_t assigned = 0;
  for (size_t i = 0; i < ratios.size(); ++i) {
    uint64_t scaled = static_cast<uint64_t>(n) * ratios[i];
    sizes[i] = scaled / total;
    remainders[i] = scaled % total;
    assigned += sizes[i];
  }
  std::vector<size_t> order(ratios.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return remainders[a] > remainders[b]; });
  for (size_t k = 0; assigned < n; ++k, ++assigned) ++sizes[order[k]];
  return sizes;
}

std::vector<QAPair> AssignSplits(std::vector<QAPair> pairs,
                                 const std::vector<int>& ratios, uint64_t seed,
                                 bool group_by_code) {
  static constexpr Split kSplits[] = {Split::kTrain, Split::kDev, Split::kTest};
  if (ratios.size() != 3) throw UsageError("split needs three ratios");
  if (pairs.size() < ratios.size()) {
    throw ValidationError("cannot split " + std::to_string(pairs.size()) +
                          " pairs into " + std::to_string(ratios.size()) + " sets");
  }
  const std::vector<size_t> sizes = SplitSizes(pairs.size(), ratios);
  // Split k owns positions [starts[k], starts[k + 1]).
  std::vector<size_t> starts = {0};
  for (size_t s : sizes) starts.push_back(starts.back() + s);
  auto split_at = [&](size_t position) {
    size_t k = 0;
    while (k + 1 < sizes.size() && position >= starts[k + 1]) ++k;
    return kSplits[k];
  };

  Rng rng(seed);
  if (!group_by_code) {
    std::vector<size_t> order(pairs.size());
    std::iota(order.begin(), order.end(), 0);
    rng.Shuffle(order);
    for (size_t pos = 0; pos < order.size(); ++pos) {
      pairs[order[pos]].split = split_at(pos);
    }
    return pairs;
  }

  std::map<std::string, size_t> counts;
  for (const QAPair& p : pairs) ++counts[p.code_id];
  std::vector<std::string> codes;
  for (const auto& [code, n] : counts) codes.push_back(code);
  rng.Shuffle(codes);
  std::map<std::string, Split> code_split;
  size_t position = 0;
  for (const std::string& code : codes) {
    code_split[code] = split_at(position);
    position += counts[code];
  }
  for (QAPair& p : pairs) p.split = code_split[p.code_id];
  return pairs;
}

}  // namespace codeqa::post
