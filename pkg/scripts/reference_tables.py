"""Cohort arithmetic and per-line count checks on the reference roster and count table.

    python scripts/reference_tables.py

Feeds the document-level labels of the two migrant rosters through
``summarize_cohorts`` and summarizes the per-answer count table, including
how many interviews have more negative than positive answers and which rows
are entirely Error.
"""

from interview_sentiment.ingest import Cohort, Gender, ParticipantRecord
from interview_sentiment.pipeline import InterviewReport, SentimentCounts, summarize_cohorts
from interview_sentiment.sentiment import CoarseLabel

# (pseudonym, cohort, document label)
ROSTER = [
    ("Mike", "International", "Neutral"),
    ("Veronica", "International", "Neutral"),
    ("Mario", "International", "Neutral"),
    ("Jane (Philippines)", "International", "Neutral"),
    ("Peter", "International", "Negative"),
    ("Nick", "International", "Neutral"),
    ("Sarah", "International", "Negative"),
    ("Jane (Cameroon)", "International", "Neutral"),
    ("Amy", "International", "Neutral"),
    ("Camellia", "International", "Neutral"),
    ("Amira", "International", "Positive"),
    ("Bridget", "InterProvincial", "Neutral"),
    ("Patrick", "InterProvincial", "Neutral"),
    ("Layla", "InterProvincial", "Negative"),
    ("Joe", "InterProvincial", "Neutral"),
    ("J.J.", "InterProvincial", "Neutral"),
    ("Ria", "InterProvincial", "Negative"),
    ("Laura", "InterProvincial", "Neutral"),
    ("Sam", "InterProvincial", "Neutral"),
]

# name: (neg, pos, neutral, error)
LINE_COUNTS = {
    "Amira": (0, 0, 0, 145),
    "Ria": (122, 42, 44, 0),
    "Bridget": (79, 27, 40, 0),
    "Nick": (33, 24, 41, 0),
    "Amy": (113, 45, 59, 0),
    "Jane (Cameroon)": (108, 30, 39, 39),
    "Sarah": (35, 13, 29, 0),
    "Layla": (91, 28, 50, 0),
    "Veronica": (0, 0, 0, 86),
    "J.J.": (50, 35, 62, 0),
    "Laura": (0, 0, 0, 211),
    "Mario": (0, 0, 0, 204),
    "Patrick": (0, 0, 0, 177),
    "Sam": (58, 28, 31, 0),
    "Peter": (0, 0, 0, 223),
    "Mike": (72, 34, 55, 0),
    "Camellia": (102, 47, 75, 0),
    "Jane (Philippines)": (162, 51, 93, 0),
    "Joe": (0, 0, 0, 171),
}


def main():
    meta, reports = [], []
    for i, (name, cohort, label) in enumerate(ROSTER):
        pid = f"p{i:02d}"
        meta.append(ParticipantRecord(pid, name, Gender.UNSPECIFIED, "", "", Cohort(cohort)))
        neg, pos, neu, err = LINE_COUNTS[name]
        counts = SentimentCounts(neg=neg, pos=pos, neutral=neu, error=err)
        reports.append(InterviewReport(pid, name, CoarseLabel(label), counts, ()))

    print("cohort           n  pos  neg  neutral  error")
    for s in summarize_cohorts(reports, meta):
        print(f"{s.cohort.value:15s} {s.n:2d} {s.pos:4d} {s.neg:4d} {s.neutral:8d} {s.error:6d}")

    scored = [r for r in reports if r.counts.error < r.counts.total]
    all_error = [r.pseudonym for r in reports if r.counts.error == r.counts.total]
    print()
    print(f"interviews with per-line scores: {len(scored)}")
    print(f"  negative lines exceed positive: {sum(r.neg_exceeds_pos for r in scored)}")
    print(f"interviews whose every line is Error: {len(all_error)} ({', '.join(all_error)})")
    partial = [r.pseudonym for r in scored if r.counts.error]
    print(f"interviews with some Error lines: {', '.join(partial) or 'none'}")


if __name__ == "__main__":
    main()
