#!/usr/bin/env python3
# Copyright 2026 The CodeQA Pipeline Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Expands hand-written gold blocks into corpus and annotation JSONL files.

Block layout:

  # id: mini-01
  # language: java
  # code: public int size() { return count; }
  # comment: Returns the size.
  0  Returns  return  VERB  -1  root   O  V
  1  the      the     DET    2  det    O  A1
  2  size     size    NOUN   0  obj    O  *
  3  .        .       PUNCT  0  punct  O  -

Columns after `ner` hold one role column per frame: "-" is outside, a label
opens a span, "*" continues it, "V" marks the predicate. Labels may use the
short spelling (A0, TMP). NER uses BIO tags directly.

A block whose root has no subject gets a second annotation with "the code"
prepended, matching what the select stage writes. Noisy and empty comments may
omit the token rows; they only produce a corpus record. Blocks without an id
line are treated as comments.
"""

import argparse
import json
import sys

SUBJECT_RELS = {"nsubj", "nsubjpass", "csubj", "csubjpass", "expl"}
ARGM = {"ADJ", "ADV", "CAU", "COM", "DIR", "DIS", "DSP", "EXT", "GOL", "LOC",
        "LVB", "MNR", "MOD", "NEG", "PNC", "PRD", "PRP", "PRR", "PRX", "REC",
        "TMP"}


def full_label(label):
    prefix = ""
    if label[:2] in ("R-", "C-"):
        prefix, label = label[:2], label[2:]
    if label.startswith("ARG") or label == "V":
        return prefix + label
    if len(label) >= 2 and label[0] == "A" and label[1:].isdigit():
        return prefix + "ARG" + label[1:]
    if label in ARGM:
        return prefix + "ARGM-" + label
    raise ValueError("unknown role label " + label)


def third_person_singular(lemma):
    lower = lemma.lower()
    if lower == "be":
        return "Is" if lemma[0].isupper() else "is"
    if lower == "have":
        return lemma[:2] + "s"
    if (lower.endswith(("s", "x", "z", "ch", "sh")) or
            (lower.endswith("o") and len(lower) > 1 and lower[-2] not in "aeiou")):
        return lemma + "es"
    if lower.endswith("y") and len(lower) > 1 and lower[-2] not in "aeiou":
        return lemma[:-1] + "ies"
    return lemma + "s"


def is_capitalized(word):
    if not word or not word[0].isupper():
        return False
    if len(word) == 1:
        return True
    return any(c.islower() for c in word[1:])


def is_verb_tag(pos):
    return pos in ("VERB", "AUX", "MD") or pos.startswith("VB")


def parse_blocks(text):
    blocks = []
    block = None
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            if block:
                blocks.append(block)
                block = None
            continue
        if block is None:
            block = {"meta": {}, "rows": []}
        if line.startswith("#"):
            key, _, value = line[1:].partition(":")
            block["meta"][key.strip()] = value.strip()
        else:
            block["rows"].append(line.split())
    if block:
        blocks.append(block)
    # A block without an id is a free-form comment.
    return [b for b in blocks if "id" in b["meta"]]


def frames_from_columns(rows):
    width = {len(r) for r in rows}
    if len(width) != 1:
        raise ValueError("ragged rows: " + str(width))
    nframes = width.pop() - 7
    frames = []
    for f in range(nframes):
        col = [r[7 + f] for r in rows]
        tags = []
        predicate = None
        previous = None
        for i, cell in enumerate(col):
            if cell == "-":
                tags.append("O")
                previous = None
            elif cell == "*":
                if previous is None:
                    raise ValueError("continuation without span at token %d" % i)
                tags.append("I-" + previous)
            else:
                label = full_label(cell)
                if label == "V":
                    predicate = i
                tags.append("B-" + label)
                previous = label
        if predicate is None:
            raise ValueError("frame %d has no V" % f)
        frames.append({"predicate": predicate, "tags": tags})
    return frames


def annotation(block):
    rows = block["rows"]
    for i, r in enumerate(rows):
        if int(r[0]) != i:
            raise ValueError("%s: token index %s out of order" % (block["meta"]["id"], r[0]))
    return {
        "id": block["meta"]["id"],
        "tokens": [r[1] for r in rows],
        "lemmas": [r[2] for r in rows],
        "pos": [r[3] for r in rows],
        "heads": [int(r[4]) for r in rows],
        "deprels": [r[5] for r in rows],
        "srl": frames_from_columns(rows),
        "ner": [r[6] for r in rows],
    }


def needs_subject(ann):
    roots = [i for i, h in enumerate(ann["heads"]) if h == -1]
    root = roots[0]
    for i, h in enumerate(ann["heads"]):
        if h == root and ann["deprels"][i].split(":")[0] in SUBJECT_RELS:
            return False
    return True


def insert_subject(ann, comment):
    """Mirrors the select stage: prefix, lowercase, inflect."""
    ann = json.loads(json.dumps(ann))
    root = ann["heads"].index(-1)
    tokens = ann["tokens"]
    if is_capitalized(tokens[0]) and tokens[0] != "I" and ann["pos"][0] not in (
            "PROPN", "NNP", "NNPS"):
        tokens[0] = tokens[0][0].lower() + tokens[0][1:]
    verbs = [root] + [i for i, h in enumerate(ann["heads"])
                      if h == root and ann["deprels"][i] == "conj" and
                      is_verb_tag(ann["pos"][i])]
    for v in verbs:
        pos = ann["pos"][v]
        base = pos == "VB" or (pos == "VERB" and tokens[v].lower() == ann["lemmas"][v].lower())
        has_aux = any(h == v and ann["deprels"][i].split(":")[0] in ("aux", "auxpass")
                      for i, h in enumerate(ann["heads"]))
        if base and not has_aux:
            tokens[v] = third_person_singular(tokens[v])
    # Rebuild the text exactly as the selector does.
    text = comment.strip()
    cursor = 0
    pieces = []
    for original, new in zip(ann_original_tokens(ann), tokens):
        at = text.index(original, cursor)
        pieces.append(text[cursor:at])
        pieces.append(new)
        cursor = at + len(original)
    pieces.append(text[cursor:])
    new_text = "the code " + "".join(pieces)

    n = len(tokens)
    shift = lambda h: -1 if h == -1 else h + 2
    ann["tokens"] = ["the", "code"] + tokens
    ann["lemmas"] = ["the", "code"] + ann["lemmas"]
    ann["pos"] = ["DET", "NOUN"] + ann["pos"]
    ann["heads"] = [1, root + 2] + [shift(h) for h in ann["heads"]]
    ann["deprels"] = ["det", "nsubj"] + ann["deprels"]
    ann["ner"] = ["O", "O"] + ann["ner"]
    frames = []
    for frame in ann["srl"]:
        tags = ["O", "O"] + frame["tags"]
        pred = frame["predicate"]
        if pred in verbs and not any(t.endswith("-ARG0") for t in frame["tags"]):
            tags[0], tags[1] = "B-ARG0", "I-ARG0"
        frames.append({"predicate": pred + 2, "tags": tags})
    ann["srl"] = frames
    del ann["_original"]
    assert len(ann["tokens"]) == n + 2
    return ann, new_text


def ann_original_tokens(ann):
    return ann["_original"]


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("gold")
    parser.add_argument("--corpus", help="corpus JSONL to write")
    parser.add_argument("--raw", help="annotations of the comments as written")
    parser.add_argument("--annotations", required=True,
                        help="annotations of the selected comments")
    args = parser.parse_args()

    with open(args.gold, encoding="utf-8") as f:
        blocks = parse_blocks(f.read())
    corpus, raw, selected = [], [], []
    for block in blocks:
        meta = block["meta"]
        comment = meta["comment"]
        record = {"id": meta["id"], "language": meta.get("language", "java"),
                  "code": meta.get("code", ""), "comment": comment}
        if not block["rows"]:
            # The select stage drops these before any annotation is needed.
            if meta.get("noisy") != "yes" and comment.strip():
                sys.exit("%s: only noisy or empty comments may omit tokens" % meta["id"])
            corpus.append(record)
            continue
        ann = annotation(block)
        if "".join(ann["tokens"]) != "".join(comment.split()):
            sys.exit("%s: tokens do not spell the comment" % meta["id"])
        corpus.append(record)
        raw.append(ann)
        if meta.get("noisy") == "yes":
            continue
        if needs_subject(ann):
            ann = dict(ann, _original=list(ann["tokens"]))
            inserted, _ = insert_subject(ann, comment)
            selected.append(inserted)
        else:
            selected.append(ann)

    def dump(path, items):
        with open(path, "w", encoding="utf-8") as f:
            for item in items:
                f.write(json.dumps(item, ensure_ascii=False, separators=(",", ":")) + "\n")

    if args.corpus:
        dump(args.corpus, corpus)
    if args.raw:
        dump(args.raw, raw)
    dump(args.annotations, selected)


if __name__ == "__main__":
    main()
