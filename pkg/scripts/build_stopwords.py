"""Regenerate the bundled stopword list from scikit-learn's English stop words.

    python scripts/build_stopwords.py src/interview_sentiment/data/stopwords.txt

A few conversational fillers common in transcribed speech are appended.
"""

import sys

from sklearn.feature_extraction.text import ENGLISH_STOP_WORDS

FILLERS = {"um", "uh", "umm", "uhm", "yeah", "like", "just", "kind", "sort", "really", "okay", "ok",
           "mm", "hmm", "mm-hmm", "gonna", "wanna", "got", "know", "think", "guess", "lot", "things",
           "thing", "stuff", "it's", "i'm", "don't", "didn't", "that's", "there's", "i've", "i'd"}


def main(out):
    words = sorted({w.lower() for w in ENGLISH_STOP_WORDS} | FILLERS)
    with open(out, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("# one token per line; scikit-learn ENGLISH_STOP_WORDS plus speech fillers\n")
        fh.writelines(w + "\n" for w in words)
    print(f"{len(words)} stopwords -> {out}")


if __name__ == "__main__":
    main(sys.argv[1])
