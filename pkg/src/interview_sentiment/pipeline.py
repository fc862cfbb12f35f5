"""Per-answer and whole-interview analysis, cohort summaries and report rendering."""

from __future__ import annotations

import csv
import enum
import io
import json
from collections import Counter
from dataclasses import dataclass

from interview_sentiment.errors import MissingMetadata
from interview_sentiment.ingest import (
    Answer,
    Cohort,
    ParticipantRecord,
    Transcript,
    filter_short_answers,
    strip_questions,
)
from interview_sentiment.sentiment import (
    FINE_CUT,
    NEUTRAL_BAND,
    CoarseLabel,
    FineLabel,
    Lexicon,
    SentimentScore,
    classify,
    classify_fine,
    score_tokens,
    tokenize,
)

REPLACEMENT_CHAR = "\ufffd"
COUNTS_HEADER = ("name", "neg_count", "pos_count", "neutral_count", "error_count")
ROSTER_HEADER = ("no", "gender", "name", "origin", "reason", "sentiment")
COHORT_HEADER = ("cohort", "n", "pos", "neg", "neutral", "error")
REPORT_SCHEMA_VERSION = 1


class DocumentMode(str, enum.Enum):
    CONCATENATED_ANSWERS = "ConcatenatedAnswers"
    RAW_TRANSCRIPT = "RawTranscript"


@dataclass(frozen=True)
class LabeledAnswer:
    answer: Answer
    score: SentimentScore | None
    coarse: CoarseLabel
    fine: FineLabel | None


@dataclass(frozen=True)
class SentimentCounts:
    neg: int = 0
    pos: int = 0
    neutral: int = 0
    error: int = 0

    @property
    def total(self) -> int:
        return self.neg + self.pos + self.neutral + self.error

    @classmethod
    def tally(cls, labels) -> SentimentCounts:
        c = Counter(labels)
        return cls(
            neg=c[CoarseLabel.NEGATIVE],
            pos=c[CoarseLabel.POSITIVE],
            neutral=c[CoarseLabel.NEUTRAL],
            error=c[CoarseLabel.ERROR],
        )


@dataclass(frozen=True)
class InterviewReport:
    transcript_id: str
    pseudonym: str
    document_label: CoarseLabel
    counts: SentimentCounts
    answers: tuple[LabeledAnswer, ...]
    document_score: SentimentScore | None = None

    @property
    def neg_exceeds_pos(self) -> bool:
        return self.counts.neg > self.counts.pos


@dataclass(frozen=True)
class CohortSummary:
    cohort: Cohort
    n: int
    pos: int
    neg: int
    neutral: int
    error: int


def _undecodable(text: str) -> bool:
    return not text.replace(REPLACEMENT_CHAR, "").strip()


def analyze_answer(
    a: Answer,
    lex: Lexicon,
    neutral_band: float = NEUTRAL_BAND,
    fine_cut: float = FINE_CUT,
) -> LabeledAnswer:
    """Score one answer. Answers with no usable tokens are labeled Error."""
    tokenized = tokenize(a.text)
    if not tokenized.tokens or _undecodable(a.text):
        return LabeledAnswer(a, None, CoarseLabel.ERROR, None)
    score = score_tokens(tokenized, lex)
    return LabeledAnswer(a, score, classify(score, neutral_band), classify_fine(score, neutral_band, fine_cut))


def analyze_document(
    t: Transcript,
    lex: Lexicon,
    min_words: int = 3,
    *,
    mode: DocumentMode = DocumentMode.CONCATENATED_ANSWERS,
    neutral_band: float = NEUTRAL_BAND,
    fine_cut: float = FINE_CUT,
) -> InterviewReport:
    """Whole-interview label plus per-answer labels for one transcript.

    The document label scores the filtered answers joined by single spaces
    (or, in ``RawTranscript`` mode, every turn including questions). An
    interview with nothing left to score gets ``Error`` and zero counts.
    """
    answers = filter_short_answers(strip_questions(t), min_words)
    labeled = tuple(analyze_answer(a, lex, neutral_band, fine_cut) for a in answers)
    counts = SentimentCounts.tally(la.coarse for la in labeled)
    pseudonym = t.participant.pseudonym if t.participant else t.id

    if mode is DocumentMode.RAW_TRANSCRIPT:
        document_text = " ".join(turn.text for turn in t.turns)
    else:
        document_text = " ".join(a.text for a in answers)
    tokenized = tokenize(document_text)
    if not answers or not tokenized.tokens:
        return InterviewReport(t.id, pseudonym, CoarseLabel.ERROR, counts, labeled, None)
    doc_score = score_tokens(tokenized, lex)
    return InterviewReport(t.id, pseudonym, classify(doc_score, neutral_band), counts, labeled, doc_score)


def summarize_cohorts(
    reports: list[InterviewReport], meta: list[ParticipantRecord]
) -> list[CohortSummary]:
    by_id = {m.id: m for m in meta}
    labels: dict[Cohort, list[CoarseLabel]] = {}
    for r in reports:
        record = by_id.get(r.transcript_id)
        if record is None:
            raise MissingMetadata(f"no metadata record for transcript {r.transcript_id!r}")
        labels.setdefault(record.cohort, []).append(r.document_label)

    summaries = []
    for cohort in Cohort:
        if cohort not in labels:
            continue
        c = SentimentCounts.tally(labels[cohort])
        summaries.append(CohortSummary(cohort, c.total, c.pos, c.neg, c.neutral, c.error))
    return summaries


def filter_subjective(answers: list[LabeledAnswer]) -> list[LabeledAnswer]:
    """Answers carrying polarity; Neutral and Error are discarded."""
    return [a for a in answers if a.coarse in (CoarseLabel.POSITIVE, CoarseLabel.NEGATIVE)]


# -- rendering ---------------------------------------------------------------


def _csv_text(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def display_names(reports: list[InterviewReport], meta: list[ParticipantRecord]) -> dict[str, str]:
    """Pseudonym per transcript, disambiguated with the origin when pseudonyms repeat.

    Two participants called Jane become ``Jane (Cameroon)`` and
    ``Jane (Philippines)``, taking the origin up to its first comma.
    """
    by_id = {m.id: m for m in meta}
    seen = Counter(r.pseudonym for r in reports)
    names = {}
    for r in reports:
        name = r.pseudonym
        record = by_id.get(r.transcript_id)
        if seen[name] > 1 and record is not None and record.origin:
            name = f"{name} ({record.origin.split(',')[0].strip()})"
        names[r.transcript_id] = name
    return names


def render_counts_csv(reports: list[InterviewReport], meta: list[ParticipantRecord] = ()) -> str:
    names = display_names(reports, list(meta))
    ordered = sorted(reports, key=lambda r: r.transcript_id)
    rows = [
        (names[r.transcript_id], r.counts.neg, r.counts.pos, r.counts.neutral, r.counts.error)
        for r in ordered
    ]
    return _csv_text(COUNTS_HEADER, rows)


def render_roster_csv(reports: list[InterviewReport], meta: list[ParticipantRecord]) -> str:
    by_id = {m.id: m for m in meta}
    rows = []
    for cohort in Cohort:
        members = sorted(
            (r for r in reports if r.transcript_id in by_id and by_id[r.transcript_id].cohort is cohort),
            key=lambda r: r.transcript_id,
        )
        for no, r in enumerate(members, start=1):
            m = by_id[r.transcript_id]
            rows.append((no, m.gender.value, m.pseudonym, m.origin, m.reason, r.document_label.value))
    return _csv_text(ROSTER_HEADER, rows)


def render_cohort_csv(summaries: list[CohortSummary]) -> str:
    rows = [(s.cohort.value, s.n, s.pos, s.neg, s.neutral, s.error) for s in summaries]
    return _csv_text(COHORT_HEADER, rows)


def _score_json(score: SentimentScore | None):
    return None if score is None else score.as_dict()


def report_to_json(
    reports: list[InterviewReport],
    meta: list[ParticipantRecord],
    summaries: list[CohortSummary],
) -> str:
    by_id = {m.id: m for m in meta}
    names = display_names(reports, meta)
    interviews = []
    for r in sorted(reports, key=lambda r: r.transcript_id):
        record = by_id.get(r.transcript_id)
        interviews.append(
            {
                "transcript_id": r.transcript_id,
                "name": names[r.transcript_id],
                "cohort": record.cohort.value if record else None,
                "document_label": r.document_label.value,
                "document_score": _score_json(r.document_score),
                "counts": {"neg": r.counts.neg, "pos": r.counts.pos, "neutral": r.counts.neutral, "error": r.counts.error},
                "neg_exceeds_pos": r.neg_exceeds_pos,
                "answers": [
                    {
                        "turn_index": la.answer.turn_index,
                        "text": la.answer.text,
                        "word_count": la.answer.word_count,
                        "coarse": la.coarse.value,
                        "fine": la.fine.value if la.fine else None,
                        "score": _score_json(la.score),
                    }
                    for la in r.answers
                ],
            }
        )
    cohorts = [
        {"cohort": s.cohort.value, "n": s.n, "pos": s.pos, "neg": s.neg, "neutral": s.neutral, "error": s.error}
        for s in summaries
    ]
    doc = {"schema_version": REPORT_SCHEMA_VERSION, "interviews": interviews, "cohorts": cohorts}
    return json.dumps(doc, indent=2, ensure_ascii=False, sort_keys=True) + "\n"
