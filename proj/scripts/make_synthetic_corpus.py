#!/usr/bin/env python3
"""Writes a small deterministic manifesto corpus used by the tests.

Twelve documents (two parties, six elections) are assembled from pools of
positive, negative and neutral sentences in varying proportions, with the
typographic noise real extracted text carries: curly quotes, dashes, URLs,
hard line breaks and abbreviations.
"""

import argparse
import json
import pathlib
import random

POSITIVE = [
    "We will build a stronger and fairer economy that rewards hard work.",
    "Our schools are improving, and every child deserves a great start in life.",
    "Together we can create new jobs and real opportunity in every region.",
    "We are proud of our record and confident about the future of this country.",
    "Mr. Smith opened a wonderful new hospital that will help thousands of patients.",
    "We will protect the NHS and give nurses the support they deserve.",
    "Families will benefit from lower taxes and better public services.",
    "This is a hopeful plan to grow the economy and improve living standards.",
    "We believe in a safe, secure and prosperous Britain for everyone.",
    "Our investment in science will deliver success and growth for decades.",
    "Communities will enjoy cleaner streets, safer parks and brighter futures.",
    "We celebrate the achievements of volunteers who help their neighbours.",
    "“This is a great opportunity,” said Dr. Jones — and we agree.",
    "Pensioners will receive a fair and generous increase every year.",
    "We will encourage innovation, trust and free enterprise.",
]

NEGATIVE = [
    "Crime has risen and too many families live in fear.",
    "The government has failed to tackle poverty and homelessness.",
    "Waiting lists are a disgrace, and patients suffer needless pain.",
    "Their reckless policies caused a terrible crisis in our economy.",
    "We will fight the injustice and corruption that damage public trust.",
    "Violent attacks on our streets are a tragedy for victims.",
    "Unemployment is a waste of talent and destroys communities.",
    "Years of neglect have left schools in a shocking state of decay.",
    "The threat of terrorism and war remains a serious danger.",
    "Rising bills are a burden and people are angry about the cost of living.",
    "Broken promises have caused anger, sadness and disappointment.",
    "Pollution kills thousands and harms the health of our children.",
]

NEUTRAL = [
    "Parliament will review the legislation in the next session.",
    "The report is available at https://example.org/manifesto/annex.pdf for reference.",
    "Local councils manage roads, housing and planning applications.",
    "The budget will be published each spring, e.g. in March.",
    "We will publish a white paper on transport within the first year.",
    "Applications are processed by the department in Whitehall.",
    "The U.K. has four nations with devolved administrations.",
    "Elections to the Scottish Parliament take place every five years.",
    "Details are set out in the annex (see www.example.org/costings).",
    "The commission will consist of nine members appointed by St. Andrews.",
]

# party, year, status, share of positive, share of negative, sentence count
DOCUMENTS = [
    ("labour", 2001, "incumbent", 0.62, 0.16, 90),
    ("labour", 2005, "incumbent", 0.60, 0.20, 80),
    ("labour", 2010, "incumbent", 0.66, 0.14, 100),
    ("labour", 2015, "opposition", 0.48, 0.32, 85),
    ("labour", 2017, "opposition", 0.42, 0.36, 95),
    ("labour", 2019, "opposition", 0.38, 0.42, 105),
    ("conservative", 2001, "opposition", 0.40, 0.38, 70),
    ("conservative", 2005, "opposition", 0.45, 0.33, 60),
    ("conservative", 2010, "opposition", 0.52, 0.28, 75),
    ("conservative", 2015, "incumbent", 0.72, 0.10, 65),
    ("conservative", 2017, "incumbent", 0.68, 0.12, 110),
    ("conservative", 2019, "incumbent", 0.64, 0.18, 95),
]


def compose(rng, pos, neg, total):
    n_pos = round(pos * total)
    n_neg = round(neg * total)
    n_neu = total - n_pos - n_neg
    sentences = (
        [rng.choice(POSITIVE) for _ in range(n_pos)]
        + [rng.choice(NEGATIVE) for _ in range(n_neg)]
        + [rng.choice(NEUTRAL) for _ in range(n_neu)]
    )
    rng.shuffle(sentences)
    lines, para = [], []
    for s in sentences:
        para.append(s)
        if len(para) == 4 or rng.random() < 0.15:
            text = " ".join(para)
            # wrap at roughly 72 columns like extracted PDF text
            words, line = text.split(" "), ""
            for w in words:
                if len(line) + len(w) + 1 > 72:
                    lines.append(line)
                    line = w
                else:
                    line = f"{line} {w}" if line else w
            lines.append(line)
            lines.append("")
            para = []
    if para:
        lines.append(" ".join(para))
    return "\n".join(lines) + "\n"


def main():
    here = pathlib.Path(__file__).resolve().parent.parent
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=pathlib.Path,
                    default=here / "tests" / "data" / "synthetic_corpus")
    ap.add_argument("--seed", type=int, default=2019)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    args.out.mkdir(parents=True, exist_ok=True)
    manifest = []
    for party, year, status, pos, neg, total in DOCUMENTS:
        name = f"{party}_{year}.txt"
        (args.out / name).write_text(compose(rng, pos, neg, total), encoding="utf-8")
        manifest.append({"party": party, "year": year, "gov_status": status, "path": name})
    (args.out / "manifest.json").write_text(json.dumps(manifest, indent=2) + "\n")


if __name__ == "__main__":
    main()
