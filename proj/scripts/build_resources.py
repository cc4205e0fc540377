#!/usr/bin/env python3
"""Regenerate the bundled lexicon and lemma resources under data/.

Inputs are the published wheels (download with `pip download --no-deps`):

  vaderSentiment-3.3.2   -> data/lexicons/vader_lexicon.txt
  NRCLex-4.1.0           -> data/lexicons/nrc_emotion_lexicon.txt
  spacy-lookups-data     -> data/resources/lemma_table.tsv  (WordNet 3.0 tables)

Usage: build_resources.py --vader WHL --nrc WHL --lookups WHL [--out DATA_DIR]
"""

import argparse
import gzip
import json
import pathlib
import zipfile

CATEGORIES = ["anger", "anticipation", "disgust", "fear", "joy",
              "negative", "positive", "sadness", "surprise", "trust"]

NOUN_RULES = [("s", ""), ("ses", "s"), ("ves", "f"), ("xes", "x"), ("zes", "z"),
              ("ches", "ch"), ("shes", "sh"), ("men", "man"), ("ies", "y")]
VERB_RULES = [("s", ""), ("ies", "y"), ("es", "e"), ("es", ""), ("ed", "e"),
              ("ed", ""), ("ing", "e"), ("ing", "")]
GUARD_SUFFIXES = ("s", "ed", "ing")


def build_vader(whl, out):
    z = zipfile.ZipFile(whl)
    text = z.read("vaderSentiment/vader_lexicon.txt").decode("utf-8")
    entries = {}
    for line in text.replace("\r", "").split("\n"):
        if not line:
            continue
        cols = line.split("\t")
        token = cols[0]
        # Upper-case keys can never match (lookup is on the lower-cased word).
        if token != token.lower():
            continue
        # Later duplicates win, as in a plain dict load.
        entries.pop(token, None)
        entries[token] = "\t".join(cols[1:4])
    with open(out, "w", encoding="utf-8", newline="\n") as f:
        for token, rest in entries.items():
            f.write(f"{token}\t{rest}\n")
    return len(entries)


def build_nrc(whl, out):
    z = zipfile.ZipFile(whl)
    data = json.loads(z.read("nrclex/data/nrc_en.json").decode("utf-8"))
    with open(out, "w", encoding="utf-8", newline="\n") as f:
        for word in sorted(data):
            tags = set(data[word])
            for cat in CATEGORIES:
                f.write(f"{word}\t{cat}\t{1 if cat in tags else 0}\n")
    return len(data)


def load_lookup(z, name):
    return json.loads(gzip.decompress(z.read(f"spacy_lookups_data/data/{name}.json.gz")))


def is_word(w):
    return w.isascii() and w.isalpha() and w.islower()


def morphy(form, exc, index, rules):
    """Shortest candidate lemma, following the WordNet lemmatizer's choice."""
    if form in exc:
        candidates = [form] + exc[form]
    else:
        candidates = [form] + [form[: len(form) - len(old)] + new
                               for old, new in rules if form.endswith(old)]
    found = [c for c in dict.fromkeys(candidates) if c in index]
    return min(found, key=len) if found else None


def fallback(form):
    """Mirror of the runtime suffix fallback; used only to decide guards."""
    n = len(form)
    if form.endswith("ies") and n - 3 >= 2:
        return form[:-3] + "y"
    if form.endswith(("sses", "xes", "zes", "ches", "shes")) and n - 2 >= 3:
        return form[:-2]
    if form.endswith("s") and not form.endswith(("ss", "us", "is")) and n - 1 >= 3:
        return form[:-1]
    for suf in ("ing", "ed"):
        if form.endswith(suf) and n - len(suf) >= 3:
            stem = form[: n - len(suf)]
            if len(stem) >= 4 and stem[-1] == stem[-2] and stem[-1] not in "aeiouslz":
                stem = stem[:-1]
            return stem
    return form


def build_lemmas(whl, out):
    z = zipfile.ZipFile(whl)
    index = load_lookup(z, "en_lemma_index")
    exc = load_lookup(z, "en_lemma_exc")
    nouns = {w for w in index["noun"] if is_word(w)}
    verbs = {w for w in index["verb"] if is_word(w)}
    known = set()
    for pos in ("noun", "verb", "adj", "adv"):
        known.update(w for w in index[pos] if is_word(w))

    table = {}

    # Noun inflections take precedence.
    surface = set(k for k in exc["noun"] if is_word(k))
    for n in nouns:
        surface.update([n + "s", n + "es"])
        if n.endswith("y"):
            surface.add(n[:-1] + "ies")
        if n.endswith("f"):
            surface.add(n[:-1] + "ves")
    for form in sorted(surface):
        lemma = morphy(form, exc["noun"], nouns, NOUN_RULES)
        if lemma is None or lemma == form or not is_word(lemma):
            continue
        # WordNet letter/abbreviation senses ("us" -> "u", "was" -> "wa").
        if len(lemma) < 3 and form not in exc["noun"]:
            continue
        table[form] = lemma

    # Known base words that the suffix fallback would otherwise mangle.
    for w in sorted(known):
        if w not in table and w.endswith(GUARD_SUFFIXES) and fallback(w) != w:
            table[w] = w

    # Verb inflections for forms not already claimed.
    vsurface = set(k for k in exc["verb"] if is_word(k))
    for v in verbs:
        vsurface.update([v + "s", v + "es", v + "ed", v + "d", v + "ing"])
        if v.endswith("e"):
            vsurface.add(v[:-1] + "ing")
        if v.endswith("y"):
            vsurface.update([v[:-1] + "ies", v[:-1] + "ied"])
    for form in sorted(vsurface):
        if form in table or form in known:
            continue
        lemma = morphy(form, exc["verb"], verbs, VERB_RULES)
        if lemma is None or lemma == form or not is_word(lemma) or len(lemma) < 2:
            continue
        table[form] = lemma

    with open(out, "w", encoding="utf-8", newline="\n") as f:
        f.write("# inflected<TAB>lemma; derived from WordNet 3.0 (Princeton University)\n")
        for form in sorted(table):
            f.write(f"{form}\t{table[form]}\n")
    return len(table)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--vader", required=True)
    ap.add_argument("--nrc", required=True)
    ap.add_argument("--lookups", required=True)
    ap.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent / "data"))
    args = ap.parse_args()
    out = pathlib.Path(args.out)
    print("vader entries:", build_vader(args.vader, out / "lexicons" / "vader_lexicon.txt"))
    print("nrc words:", build_nrc(args.nrc, out / "lexicons" / "nrc_emotion_lexicon.txt"))
    print("lemma entries:", build_lemmas(args.lookups, out / "resources" / "lemma_table.tsv"))


if __name__ == "__main__":
    main()
