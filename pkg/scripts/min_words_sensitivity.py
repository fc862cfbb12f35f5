"""How the short-answer threshold moves per-answer and per-interview labels.

    python scripts/min_words_sensitivity.py --config tests/fixtures/corpus/run.conf --max 8

For every threshold from 1 to ``--max`` prints the corpus-wide answer label
totals and the cohort-level document label tallies.
"""

import argparse
import dataclasses
from pathlib import Path

from interview_sentiment.cli import load_inputs, run_pipeline
from interview_sentiment.config import load_config
from interview_sentiment.pipeline import SentimentCounts, summarize_cohorts


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--config", type=Path, required=True)
    ap.add_argument("--max", type=int, default=8)
    args = ap.parse_args(argv)

    base = load_config(args.config)
    inputs = load_inputs(base)
    print("min_words,answers,neg,pos,neutral,error,cohort,doc_pos,doc_neg,doc_neutral,doc_error")
    for k in range(1, args.max + 1):
        cfg = dataclasses.replace(base, min_words=k)
        reports = run_pipeline(cfg, inputs)
        totals = SentimentCounts.tally(la.coarse for r in reports for la in r.answers)
        head = f"{k},{totals.total},{totals.neg},{totals.pos},{totals.neutral},{totals.error}"
        for s in summarize_cohorts(reports, inputs.metadata):
            print(f"{head},{s.cohort.value},{s.pos},{s.neg},{s.neutral},{s.error}")


if __name__ == "__main__":
    main()
