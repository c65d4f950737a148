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

#include "codeqa/clause.h"

#include <algorithm>
#include <set>

#include "codeqa/comment_selector.h"
#include "codeqa/morphology.h"
#include "codeqa/text.h"

namespace codeqa::wh {
namespace {

using annotation::AnnotatedComment;
using annotation::BaseDeprel;
using annotation::FrameArgs;
using annotation::SrlFrame;
using annotation::TokenSpan;
using selection::IsVerbTag;

std::string_view Rel(const AnnotatedComment& c, int i) { return BaseDeprel(c.nodes[i].deprel); }

bool IsAuxRel(std::string_view rel) { return rel == "aux" || rel == "auxpass"; }

bool IsSubjectRel(std::string_view rel) {
  return rel == "nsubj" || rel == "nsubjpass" || rel == "csubj" || rel == "csubjpass";
}

bool IsCoreLabel(std::string_view label) {
  return label.size() == 4 && label.starts_with("ARG") && label[3] >= '0' && label[3] <= '5';
}

int ConjRoot(const AnnotatedComment& c, int index) {
  int r = index;
  while (Rel(c, r) == "conj" && c.nodes[r].head >= 0 && IsVerbTag(c.nodes[r].upos) &&
         IsVerbTag(c.nodes[c.nodes[r].head].upos)) {
    r = c.nodes[r].head;
  }
  return r;
}

// Tokens strictly between a and b are all coordinators or punctuation.
bool LinkedByCoordination(const AnnotatedComment& c, int a, int b) {
  for (int i = a + 1; i < b; ++i) {
    const std::string_view rel = Rel(c, i);
    if (rel != "cc" && rel != "punct") return false;
  }
  return true;
}

void AddAll(std::vector<int>& out, const std::vector<int>& more) {
  out.insert(out.end(), more.begin(), more.end());
}

void SortUnique(std::vector<int>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::vector<int> AuxChildren(const AnnotatedComment& c, int head, bool include_cop) {
  std::vector<int> out;
  for (int child : c.Children(head)) {
    const std::string_view rel = Rel(c, child);
    if (child < head && (IsAuxRel(rel) || (include_cop && rel == "cop")) &&
        !EqualsIgnoreCase(c.nodes[child].form, "to")) {
      out.push_back(child);
    }
  }
  return out;
}

std::vector<int> NegChildren(const AnnotatedComment& c, int head) {
  std::vector<int> out;
  for (int child : c.Children(head)) {
    const std::string_view rel = Rel(c, child);
    if (rel == "neg" || (rel == "advmod" && IsNegationWord(c.nodes[child].form))) {
      out.push_back(child);
    }
  }
  return out;
}

std::vector<int> SpanTokens(const std::vector<TokenSpan>& spans) {
  std::vector<int> out;
  for (const TokenSpan& span : spans) {
    for (int i = span.begin; i < span.end; ++i) out.push_back(i);
  }
  return out;
}

bool IsPluralNoun(const annotation::DepNode& node) {
  if (node.upos == "NNS" || node.upos == "NNPS") return true;
  if (IsPluralPronoun(node.form)) return true;
  if (node.upos != "NOUN" && node.upos != "PROPN") return false;
  const std::string form = ToLower(node.form);
  return form != ToLower(node.lemma) && !form.empty() && form.back() == 's';
}

}  // namespace

bool VerbalGroup::IsVerbToken(int index) const {
  return std::find(verbs.begin(), verbs.end(), index) != verbs.end();
}

VerbalGroup BuildVerbalGroup(const AnnotatedComment& c, const SrlFrame& frame) {
  VerbalGroup g;
  const int p = frame.predicate_index;
  g.predicate = p;
  const FrameArgs args = annotation::FrameArguments(frame);
  if (Rel(c, p) == "cop" && c.nodes[p].head >= 0) {
    g.copular = true;
    g.anchor = c.nodes[p].head;
    g.conj_root = g.anchor;
    g.aux = AuxChildren(c, g.anchor, /*include_cop=*/true);
    if (std::find(g.aux.begin(), g.aux.end(), p) == g.aux.end()) g.aux.push_back(p);
    g.neg = NegChildren(c, g.anchor);
  } else {
    g.anchor = p;
    g.conj_root = ConjRoot(c, p);
    std::vector<int> chain = {g.conj_root};
    for (int child : c.ChildrenWith(g.conj_root, "conj")) {
      if (IsVerbTag(c.nodes[child].upos)) chain.push_back(child);
    }
    std::sort(chain.begin(), chain.end());
    const auto at = std::find(chain.begin(), chain.end(), p);
    size_t lo = at == chain.end() ? 0 : static_cast<size_t>(at - chain.begin());
    size_t hi = lo;
    if (at == chain.end()) chain = {p};
    while (lo > 0 && LinkedByCoordination(c, chain[lo - 1], chain[lo])) --lo;
    while (hi + 1 < chain.size() && LinkedByCoordination(c, chain[hi], chain[hi + 1])) ++hi;
    for (size_t k = lo; k <= hi; ++k) {
      g.verbs.push_back(chain[k]);
      if (k < hi) {
        for (int i = chain[k] + 1; i < chain[k + 1]; ++i) g.coordinators.push_back(i);
      }
    }
    const bool shares_root = std::find(g.verbs.begin(), g.verbs.end(), g.conj_root) != g.verbs.end();
    g.aux = AuxChildren(c, p, /*include_cop=*/false);
    g.neg = NegChildren(c, p);
    if (shares_root && g.conj_root != p) {
      if (g.aux.empty()) g.aux = AuxChildren(c, g.conj_root, /*include_cop=*/false);
      AddAll(g.neg, NegChildren(c, g.conj_root));
    }
    AddAll(g.verbs, g.coordinators);
    SortUnique(g.verbs);
  }
  if (auto it = args.find("ARGM-MOD"); it != args.end()) AddAll(g.aux, SpanTokens(it->second));
  if (auto it = args.find("ARGM-NEG"); it != args.end()) AddAll(g.neg, SpanTokens(it->second));
  SortUnique(g.aux);
  SortUnique(g.neg);
  // A token cannot be both; negation wins ("not" tagged as a modal slip).
  std::erase_if(g.aux, [&](int i) { return std::binary_search(g.neg.begin(), g.neg.end(), i); });
  g.negated = g.neg.size() % 2 == 1;
  return g;
}

SubjectChoice ChooseSubject(const AnnotatedComment& c, const FrameArgs& args,
                            const VerbalGroup& group) {
  std::vector<int> subjects;
  for (int head : {group.anchor, group.conj_root}) {
    for (int child : c.Children(head)) {
      if (IsSubjectRel(Rel(c, child))) subjects.push_back(child);
    }
    if (!subjects.empty()) break;
  }
  for (int s : subjects) {
    for (const auto& [label, spans] : args) {
      if (!IsCoreLabel(label)) continue;
      for (const TokenSpan& span : spans) {
        if (span.Contains(s)) return {span, label};
      }
    }
  }
  if (auto it = args.find("ARG0"); it != args.end()) return {it->second.front(), "ARG0"};
  return {};
}

std::string ChooseObjectLabel(const FrameArgs& args, const std::string& subj_label,
                              std::optional<int> answer_head, Heuristic heuristic) {
  auto present = [&](const std::string& label) {
    return label != subj_label && args.contains(label);
  };
  auto inside = [&](const std::string& label) {
    if (!answer_head || !args.contains(label)) return false;
    for (const TokenSpan& span : args.at(label)) {
      if (span.Contains(*answer_head)) return true;
    }
    return false;
  };
  if (heuristic == Heuristic::kDependency) {
    const bool in_a1 = inside("ARG1");
    const bool in_a2 = inside("ARG2");
    if (in_a1 && present("ARG1")) return "ARG1";
    if (!in_a1 && !in_a2 && present("ARG1") && present("ARG2")) return "ARG1";
    return present("ARG2") ? "ARG2" : "";
  }
  if (present("ARG1")) return "ARG1";
  return present("ARG2") ? "ARG2" : "";
}

Outcome<ClauseParts> ExtractClause(const SrlFrame& frame, const AnnotatedComment& c,
                                   TokenSpan answer, std::optional<int> answer_head,
                                   Heuristic heuristic) {
  const FrameArgs args = annotation::FrameArguments(frame);
  if (!args.contains("ARG0") && !args.contains("ARG1") && !args.contains("ARG2")) {
    return Outcome<ClauseParts>::Reject("no clause core");
  }
  ClauseParts parts;
  parts.group = BuildVerbalGroup(c, frame);
  parts.verb_head = frame.predicate_index;
  parts.negated = parts.group.negated;
  if (auto it = args.find("ARGM-MOD"); it != args.end()) parts.modals = SpanTokens(it->second);

  const SubjectChoice subject = ChooseSubject(c, args, parts.group);
  parts.subj = subject.span;
  parts.subj_label = subject.label;
  parts.obj_label = ChooseObjectLabel(args, parts.subj_label, answer_head, heuristic);
  if (!parts.obj_label.empty()) parts.obj = args.at(parts.obj_label).front();

  const bool hits_subj = !parts.subj.empty() && parts.subj.Overlaps(answer);
  const bool hits_obj = !parts.obj.empty() && parts.obj.Overlaps(answer);
  if (hits_subj && hits_obj) {
    return Outcome<ClauseParts>::Reject("answer overlaps subject and object");
  }
  const TokenSpan subj_span = parts.subj;
  const TokenSpan obj_span = parts.obj;
  if (hits_subj) parts.subj = {};
  if (hits_obj) parts.obj = {};

  for (const auto& [label, spans] : args) {
    if (label == "ARGM-MOD" || label == "ARGM-NEG" || label.starts_with("R-")) continue;
    for (const TokenSpan& span : spans) {
      if (label == subject.label && span == subj_span) continue;
      if (label == parts.obj_label && span == obj_span) continue;
      if (span.Overlaps(answer)) continue;
      parts.other_args.push_back({label, span});
    }
  }
  std::sort(parts.other_args.begin(), parts.other_args.end(),
            [](const LabeledSpan& a, const LabeledSpan& b) { return a.span < b.span; });

  if (!parts.group.aux.empty() && IsInvertibleAuxLemma(c.nodes[parts.group.aux.front()].lemma)) {
    parts.main_aux = parts.group.aux.front();
  }
  return parts;
}

int SpanHead(const AnnotatedComment& c, TokenSpan span) {
  for (int i = span.begin; i < span.end; ++i) {
    if (!span.Contains(c.nodes[i].head)) return i;
  }
  return span.empty() ? -1 : span.begin;
}

bool HasToMarker(const AnnotatedComment& c, int index) {
  for (int child : c.Children(index)) {
    const std::string_view rel = Rel(c, child);
    if ((rel == "mark" || rel == "aux") && EqualsIgnoreCase(c.nodes[child].form, "to")) {
      return true;
    }
  }
  return false;
}

std::string DoForm(const AnnotatedComment& c, int carrier, TokenSpan subject) {
  const annotation::DepNode& node = c.nodes[carrier];
  if (node.upos == "VBZ") return "does";
  if (node.upos == "VBD") return "did";
  if (node.upos == "VBP") return "do";
  const std::string form = ToLower(node.form);
  const std::string lemma = ToLower(node.lemma);
  const std::string_view rel = Rel(c, carrier);
  const bool non_finite = node.upos == "VB" || node.upos == "VBG" || node.upos == "VBN" ||
                          HasToMarker(c, carrier) || rel == "xcomp" || rel == "amod" ||
                          rel == "acl" || (form.size() > 4 && form.ends_with("ing"));
  if (!non_finite) {
    if (form == lemma) return "do";
    if (form == ThirdPersonSingular(lemma)) return "does";
    return "did";
  }
  if (subject.empty()) return "does";
  return IsPluralNoun(c.nodes[SpanHead(c, subject)]) ? "do" : "does";
}

AuxPlan AuxConcord(const VerbalGroup& group, const AnnotatedComment& c, TokenSpan subject) {
  AuxPlan plan;
  if (!group.aux.empty()) {
    const int first = group.aux.front();
    if (IsInvertibleAuxLemma(c.nodes[first].lemma) || IsInvertibleAuxLemma(c.nodes[first].form)) {
      plan.main_aux = NormalizeAux(c.nodes[first].form);
      plan.main_aux_token = first;
      return plan;
    }
    plan.carrier = first;
  } else if (!group.verbs.empty() && EqualsIgnoreCase(c.nodes[group.verbs.front()].lemma, "be")) {
    plan.main_aux = NormalizeAux(c.nodes[group.verbs.front()].form);
    plan.main_aux_token = group.verbs.front();
    return plan;
  } else if (!group.verbs.empty()) {
    plan.carrier = group.verbs.front();
  } else {
    return plan;
  }
  plan.do_support = true;
  plan.main_aux = DoForm(c, plan.carrier, subject);
  plan.rewrites[plan.carrier] = ToLower(c.nodes[plan.carrier].lemma);
  if (group.IsVerbToken(plan.carrier)) {
    for (int v : group.verbs) {
      if (std::find(group.coordinators.begin(), group.coordinators.end(), v) ==
          group.coordinators.end()) {
        plan.rewrites[v] = ToLower(c.nodes[v].lemma);
      }
    }
  }
  return plan;
}

std::string QuestionToken(const AnnotatedComment& c, int index) {
  const annotation::DepNode& node = c.nodes[index];
  const std::string lower = ToLower(node.form);
  if (lower == "n't" || lower == "nt") return "not";
  if (lower == "wo" || lower == "ca" || lower == "sha") return NormalizeAux(node.form);
  if (index == 0 && IsCapitalizedWord(node.form) && node.form != "I" &&
      !selection::IsProperNounTag(node.upos)) {
    return LowerFirst(node.form);
  }
  return node.form;
}

}  // namespace codeqa::wh
