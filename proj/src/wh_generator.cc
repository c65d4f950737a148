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

#include "codeqa/wh_generator.h"

#include <algorithm>
#include <map>
#include <set>

#include "codeqa/comment_selector.h"
#include "codeqa/morphology.h"
#include "codeqa/text.h"

namespace codeqa::wh {
namespace {

using annotation::AnnotatedComment;
using annotation::TokenSpan;

std::string EntityType(const std::string& tag) {
  if (tag.size() > 2 && (tag[0] == 'B' || tag[0] == 'I') && tag[1] == '-') return tag.substr(2);
  return "";
}

std::vector<int> Range(TokenSpan span) {
  std::vector<int> out;
  for (int i = span.begin; i < span.end; ++i) out.push_back(i);
  return out;
}

bool AllPunctuation(const AnnotatedComment& c, TokenSpan span) {
  for (int i = span.begin; i < span.end; ++i) {
    if (!IsPunctuationToken(c.tokens[i])) return false;
  }
  return true;
}

std::string AnswerText(const AnnotatedComment& c, TokenSpan span) {
  std::vector<std::string> words(c.tokens.begin() + span.begin, c.tokens.begin() + span.end);
  return StripTerminalPunctuation(Detokenize(words));
}

// Singular counterpart of a plural finite auxiliary, or "".
std::string SingularAux(std::string_view form) {
  const std::string lower = ToLower(form);
  if (lower == "are" || lower == "'re") return "is";
  if (lower == "were") return "was";
  if (lower == "have" || lower == "'ve") return "has";
  if (lower == "do") return "does";
  return "";
}

struct Generated {
  QAPair pair;
  int rank = 0;
  size_t order = 0;
};

}  // namespace

std::vector<DpCandidate> DpCandidates(const AnnotatedComment& c,
                                      const TemplateRegistry& registry) {
  std::vector<DpCandidate> out;
  for (const annotation::DepNode& node : c.nodes) {
    if (node.head < 0) continue;
    const Template* tmpl = registry.ForDeprel(node.deprel);
    if (tmpl == nullptr) continue;
    for (size_t f = 0; f < c.frames.size(); ++f) {
      if (c.frames[f].predicate_index == node.head) {
        out.push_back({node.index, static_cast<int>(f), tmpl});
        break;
      }
    }
  }
  return out;
}

std::vector<SrlCandidate> SrlCandidates(const AnnotatedComment& c,
                                        const TemplateRegistry& registry) {
  std::vector<SrlCandidate> out;
  for (size_t f = 0; f < c.frames.size(); ++f) {
    const annotation::FrameArgs args = annotation::FrameArguments(c.frames[f]);
    if (!args.contains("ARG0") && !args.contains("ARG1")) continue;
    std::vector<SrlCandidate> local;
    for (const auto& [label, spans] : args) {
      const Template* tmpl = registry.ForSrlLabel(label);
      if (tmpl == nullptr) continue;
      for (const TokenSpan& span : spans) local.push_back({static_cast<int>(f), label, span, tmpl});
    }
    std::sort(local.begin(), local.end(), [](const SrlCandidate& a, const SrlCandidate& b) {
      return a.span < b.span;
    });
    out.insert(out.end(), local.begin(), local.end());
  }
  return out;
}

std::string SelectWhWord(TokenSpan answer, const std::vector<std::string>& ner,
                         const Template& tmpl) {
  if (tmpl.kind != TemplateKind::kDependency) return tmpl.wh_word;
  std::set<std::string> types;
  for (int i = answer.begin; i < answer.end && i < static_cast<int>(ner.size()); ++i) {
    const std::string type = EntityType(ner[i]);
    if (!type.empty()) types.insert(type);
  }
  if (types.size() != 1) return tmpl.wh_word;
  const std::string type = ToLower(*types.begin());
  if (type == "person" || type == "per") return tmpl.key == "nsubj" ? "Who" : "Whom";
  if (type == "time" || type == "date") return "When";
  if (type == "loc" || type == "location" || type == "gpe") return "Where";
  return tmpl.wh_word;
}

Outcome<QAPair> Realize(const Template& tmpl, const ClauseParts& clause, TokenSpan answer,
                        const AnnotatedComment& c) {
  const bool subject_question = !tmpl.Has(Slot::kNsubj);
  const VerbalGroup& group = clause.group;
  if (subject_question && !clause.subj.empty()) {
    return Outcome<QAPair>::Reject("subject remains in a subject question");
  }
  if (!subject_question && clause.subj.empty()) {
    return Outcome<QAPair>::Reject("missing subject");
  }
  if (group.verbs.empty() && group.aux.empty()) return Outcome<QAPair>::Reject("no verbal group");

  AuxPlan plan;
  if (!subject_question) {
    plan = AuxConcord(group, c, clause.subj);
    if (plan.main_aux.empty()) return Outcome<QAPair>::Reject("no auxiliary to front");
  }
  std::vector<int> verbs;
  for (int v : group.verbs) {
    if (v != plan.main_aux_token) verbs.push_back(v);
  }
  const int boundary = !verbs.empty() ? verbs.front()
                       : !group.aux.empty() ? group.aux.back() + 1
                                            : group.anchor;
  const int left = subject_question ? answer.end : clause.subj.end;
  const int clause_start = subject_question ? answer.begin : clause.subj.begin;

  // Auxiliaries, negation and adverbials that sit between subject and verb.
  std::vector<int> middle;
  std::set<int> aux_tokens;
  for (int a : group.aux) {
    if (a == plan.main_aux_token) continue;
    middle.push_back(a);
    aux_tokens.insert(a);
  }
  for (int n : group.neg) middle.push_back(n);
  std::vector<TokenSpan> modifiers;
  std::vector<TokenSpan> fronted;
  std::vector<TokenSpan> args;
  for (const LabeledSpan& arg : clause.other_args) args.push_back(arg.span);
  if (!tmpl.Has(Slot::kObj) && !clause.obj.empty()) args.push_back(clause.obj);
  std::sort(args.begin(), args.end());
  for (const TokenSpan& span : args) {
    if (AllPunctuation(c, span) || span.Overlaps(answer)) continue;
    if (span.begin >= left && span.end <= boundary) {
      for (int i : Range(span)) middle.push_back(i);
    } else if (span.end <= clause_start) {
      fronted.push_back(span);
    } else {
      modifiers.push_back(span);
    }
  }
  std::sort(middle.begin(), middle.end());
  middle.erase(std::unique(middle.begin(), middle.end()), middle.end());
  std::erase_if(middle, [&](int i) { return answer.Contains(i) || clause.subj.Contains(i); });

  std::vector<int> other_aux_slot;
  std::vector<int> verb_slot;
  size_t split = 0;
  if (tmpl.Has(Slot::kOtherAux)) {
    for (size_t k = 0; k < middle.size(); ++k) {
      if (aux_tokens.contains(middle[k])) split = k + 1;
    }
  }
  other_aux_slot.assign(middle.begin(), middle.begin() + split);
  verb_slot.assign(middle.begin() + split, middle.end());
  verb_slot.insert(verb_slot.end(), verbs.begin(), verbs.end());
  modifiers.insert(modifiers.end(), fronted.begin(), fronted.end());
  if (subject_question) {
    // "What" agrees as a singular subject.
    std::vector<int> verbal = other_aux_slot;
    verbal.insert(verbal.end(), verb_slot.begin(), verb_slot.end());
    for (int i : verbal) {
      if (std::binary_search(group.neg.begin(), group.neg.end(), i)) continue;
      if (aux_tokens.contains(i)) {
        const std::string singular = SingularAux(c.nodes[i].form);
        if (!singular.empty()) plan.rewrites[i] = singular;
        break;
      }
      if (group.IsVerbToken(i)) {
        for (int v : group.verbs) {
          const annotation::DepNode& node = c.nodes[v];
          if (selection::IsVerbTag(node.upos) && EqualsIgnoreCase(node.form, node.lemma) &&
              !HasToMarker(c, v)) {
            plan.rewrites[v] = ThirdPersonSingular(QuestionToken(c, v));
          }
        }
        break;
      }
    }
  }

  auto render = [&](int i) {
    auto it = plan.rewrites.find(i);
    return it != plan.rewrites.end() ? it->second : QuestionToken(c, i);
  };
  std::vector<std::string> words;
  auto emit = [&](const std::vector<int>& tokens) {
    for (int i : tokens) words.push_back(render(i));
  };
  for (Slot slot : tmpl.slots) {
    switch (slot) {
      case Slot::kWh:
        words.push_back(SelectWhWord(answer, c.ner, tmpl));
        break;
      case Slot::kMainAux:
        if (!plan.main_aux.empty()) words.push_back(plan.main_aux);
        break;
      case Slot::kNsubj:
        emit(Range(clause.subj));
        break;
      case Slot::kOtherAux:
        emit(other_aux_slot);
        break;
      case Slot::kVerb:
        emit(verb_slot);
        break;
      case Slot::kObj:
        emit(Range(clause.obj));
        break;
      case Slot::kModifiers:
        for (const TokenSpan& span : modifiers) emit(Range(span));
        break;
    }
  }
  while (!words.empty() && IsPunctuationToken(words.back())) words.pop_back();
  if (words.size() < 2) return Outcome<QAPair>::Reject("empty question body");

  const std::string answer_text = AnswerText(c, answer);
  if (answer_text.empty()) return Outcome<QAPair>::Reject("empty answer");
  QAPair pair;
  pair.question = SentenceCase(Detokenize(words)) + "?";
  if (ContainsWord(pair.question, answer_text)) {
    return Outcome<QAPair>::Reject("answer text appears in the question");
  }
  pair.answer = SentenceCase(answer_text) + ".";
  pair.answer_start = answer.begin;
  return pair;
}

WhResult GenerateWh(const AnnotatedComment& c, const TemplateRegistry& registry,
                    const GeneratorConfig& config) {
  WhResult result;
  std::vector<Generated> generated;
  auto attempt = [&](const Template& tmpl, const annotation::SrlFrame& frame, TokenSpan answer,
                     std::optional<int> head, Heuristic heuristic, const std::string& source) {
    ++result.candidates;
    Outcome<ClauseParts> clause = ExtractClause(frame, c, answer, head, heuristic);
    if (!clause.ok()) {
      result.rejections.push_back({source, answer.begin, clause.reason()});
      return;
    }
    Outcome<QAPair> pair = Realize(tmpl, clause.value(), answer, c);
    if (!pair.ok()) {
      result.rejections.push_back({source, answer.begin, pair.reason()});
      return;
    }
    pair.value().source = source;
    generated.push_back({pair.value(), registry.Rank(tmpl.key), generated.size()});
  };

  for (const DpCandidate& cand : DpCandidates(c, registry)) {
    const std::string source = "dp:" + cand.tmpl->key;
    const annotation::SubtreeResult subtree = annotation::SubtreeSpan(cand.answer_node, c.nodes);
    if (!subtree.contiguous) {
      ++result.candidates;
      result.rejections.push_back({source, subtree.span.begin, "discontiguous answer"});
      continue;
    }
    attempt(*cand.tmpl, c.frames[cand.frame_index], subtree.span, cand.answer_node,
            Heuristic::kDependency, source);
  }
  for (const SrlCandidate& cand : SrlCandidates(c, registry)) {
    attempt(*cand.tmpl, c.frames[cand.frame_index], cand.span, std::nullopt,
            Heuristic::kSemanticRole, "srl:" + annotation::ShortLabel(cand.label));
  }

  // Merge identical pairs; a pair found by both heuristics is marked as such.
  std::vector<Generated> unique;
  std::map<std::pair<std::string, std::string>, size_t> seen;
  for (Generated& g : generated) {
    auto key = std::make_pair(g.pair.question, g.pair.answer);
    auto it = seen.find(key);
    if (it == seen.end()) {
      seen.emplace(key, unique.size());
      unique.push_back(std::move(g));
      continue;
    }
    ++result.duplicates;
    QAPair& kept = unique[it->second].pair;
    const bool kept_dp = kept.source.starts_with("dp:");
    const bool new_dp = g.pair.source.starts_with("dp:");
    if (kept.source != "dp+srl" && kept_dp != new_dp) kept.source = "dp+srl";
  }

  // Round-robin over templates in registry order until the cap is reached.
  std::map<int, std::vector<Generated*>> by_rank;
  for (Generated& g : unique) by_rank[g.rank].push_back(&g);
  std::vector<Generated*> chosen;
  const size_t cap = config.max_pairs_per_comment > 0
                         ? static_cast<size_t>(config.max_pairs_per_comment)
                         : unique.size();
  for (size_t round = 0; chosen.size() < cap; ++round) {
    bool any = false;
    for (auto& [rank, list] : by_rank) {
      if (round < list.size() && chosen.size() < cap) {
        chosen.push_back(list[round]);
        any = true;
      }
    }
    if (!any) break;
  }
  result.capped = unique.size() - chosen.size();
  std::sort(chosen.begin(), chosen.end(), [](const Generated* a, const Generated* b) {
    return std::tie(a->pair.source, a->pair.answer_start, a->order) <
           std::tie(b->pair.source, b->pair.answer_start, b->order);
  });
  for (const Generated* g : chosen) result.pairs.push_back(g->pair);
  return result;
}

}  // namespace codeqa::wh
