"""Regenerate the bundled lexicon from the vaderSentiment distribution (MIT licensed).

    pip install vaderSentiment
    python scripts/build_lexicon.py src/interview_sentiment/data/lexicon.tsv

Tokens that VADER lists both as a booster and in its valence lexicon keep their
valence; negators override any valence entry, so the three tables stay disjoint.
Multi-word boosters are skipped because scoring is single-token.
"""

import argparse
import math
from importlib import metadata, resources
from pathlib import Path

from vaderSentiment import vaderSentiment as vs

HEADER = """\
# token<TAB>class<TAB>value
# Derived from the VADER sentiment lexicon (vaderSentiment {version}), MIT License,
# Copyright (c) 2016 C.J. Hutto. Regenerate with scripts/build_lexicon.py.
"""


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("out", type=Path)
    args = ap.parse_args()

    text = (resources.files("vaderSentiment") / "vader_lexicon.txt").read_text(encoding="utf-8")
    valence = {}
    for line in text.splitlines():
        if not line.strip():
            continue
        token, value = line.split("\t")[:2]
        token = token.strip().lower()
        if not token or any(ch.isspace() for ch in token) or token in valence:
            continue
        value = float(value)
        if math.isfinite(value):
            valence[token] = value

    negators = {n.lower() for n in vs.NEGATE}
    boosters = {b.lower(): v for b, v in vs.BOOSTER_DICT.items() if " " not in b}
    dropped_valence = sorted(negators & valence.keys())
    for token in dropped_valence:
        del valence[token]
    dropped_boosters = sorted((boosters.keys() & valence.keys()) | (boosters.keys() & negators))
    for token in dropped_boosters:
        del boosters[token]

    version = metadata.version("vaderSentiment")
    with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(HEADER.format(version=version))
        for token in sorted(negators):
            fh.write(f"{token}\tnegator\t0\n")
        for token in sorted(boosters):
            fh.write(f"{token}\tbooster\t{boosters[token]}\n")
        for token in sorted(valence):
            fh.write(f"{token}\tvalence\t{valence[token]}\n")
    print(f"{len(valence)} valence, {len(negators)} negators, {len(boosters)} boosters -> {args.out}")
    print("valence entries overridden by negators:", ", ".join(dropped_valence) or "none")
    print("boosters dropped (already valence/negator):", ", ".join(dropped_boosters) or "none")


if __name__ == "__main__":
    main()
