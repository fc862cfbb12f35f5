"""Transcript and participant-metadata parsing, plus answer preprocessing.

Transcript files are line oriented::

    I: So how did you end up in the city?
    R: I came for school, mostly.
    R: And my sister already lived here.

Consecutive lines from the same speaker are merged into one turn.
"""

from __future__ import annotations

import csv
import enum
import io
from dataclasses import dataclass

from interview_sentiment.errors import (
    DecodeError,
    DuplicateId,
    EmptyTranscript,
    FormatError,
)


class Speaker(str, enum.Enum):
    INTERVIEWER = "Interviewer"
    RESPONDENT = "Respondent"


class Gender(str, enum.Enum):
    M = "M"
    F = "F"
    UNSPECIFIED = "Unspecified"


class Cohort(str, enum.Enum):
    INTERNATIONAL = "International"
    INTER_PROVINCIAL = "InterProvincial"
    NON_MIGRANT = "NonMigrant"


SPEAKER_PREFIXES = {"I": Speaker.INTERVIEWER, "R": Speaker.RESPONDENT}
METADATA_HEADER = ("id", "pseudonym", "gender", "origin", "reason", "cohort")


@dataclass(frozen=True)
class Turn:
    speaker: Speaker
    text: str
    index: int


@dataclass(frozen=True)
class ParticipantRecord:
    id: str
    pseudonym: str
    gender: Gender
    origin: str
    reason: str
    cohort: Cohort


@dataclass(frozen=True)
class Transcript:
    id: str
    turns: tuple[Turn, ...]
    participant: ParticipantRecord | None = None

    def with_participant(self, participant: ParticipantRecord) -> Transcript:
        return Transcript(self.id, self.turns, participant)


@dataclass(frozen=True)
class Answer:
    transcript_id: str
    turn_index: int
    text: str
    word_count: int


def count_words(text: str) -> int:
    """Number of maximal non-whitespace runs; attached punctuation counts with its word."""
    return len(text.split())


def _decode(raw: bytes, source: str | None) -> str:
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise DecodeError(f"{source or 'input'}: invalid UTF-8 at byte {exc.start}") from exc
    if text.startswith("\ufeff"):
        text = text[1:]
    return text.replace("\r\n", "\n").replace("\r", "\n")


def parse_transcript(raw: bytes, id: str) -> Transcript:
    """Parse ``I:``/``R:`` prefixed lines into a :class:`Transcript`.

    Blank lines are skipped. Raises :class:`FormatError` (with the 1-based line
    number) on an unknown prefix or an empty turn, :class:`DecodeError` on bad
    UTF-8 and :class:`EmptyTranscript` when no respondent turn is present.
    """
    text = _decode(raw, id)
    # (speaker, [fragments]) before turns are frozen
    pending: list[tuple[Speaker, list[str]]] = []
    for lineno, line in enumerate(text.split("\n"), start=1):
        stripped = line.strip()
        if not stripped:
            continue
        prefix, sep, body = stripped.partition(":")
        speaker = SPEAKER_PREFIXES.get(prefix.strip()) if sep else None
        if speaker is None:
            raise FormatError("line has no recognized speaker prefix (expected 'I:' or 'R:')", lineno, id)
        body = body.strip()
        if not body:
            raise FormatError("empty turn text", lineno, id)
        if pending and pending[-1][0] is speaker:
            pending[-1][1].append(body)
        else:
            pending.append((speaker, [body]))

    if not pending:
        raise EmptyTranscript(f"{id}: transcript has no turns")
    turns = tuple(Turn(speaker, " ".join(parts), i) for i, (speaker, parts) in enumerate(pending))
    if not any(t.speaker is Speaker.RESPONDENT for t in turns):
        raise EmptyTranscript(f"{id}: transcript has no respondent turns")
    return Transcript(id, turns)


def serialize_transcript(t: Transcript) -> str:
    """Inverse of :func:`parse_transcript`: one line per turn."""
    prefix = {v: k for k, v in SPEAKER_PREFIXES.items()}
    return "".join(f"{prefix[turn.speaker]}: {turn.text}\n" for turn in t.turns)


def _parse_gender(value: str) -> Gender:
    try:
        return Gender(value.strip())
    except ValueError:
        return Gender.UNSPECIFIED


def load_metadata(raw: bytes, source: str | None = None) -> list[ParticipantRecord]:
    text = _decode(raw, source)
    reader = csv.reader(io.StringIO(text))
    try:
        header = [h.strip() for h in next(reader)]
    except StopIteration:
        raise FormatError("metadata file is empty (header required)", 1, source) from None
    missing = [col for col in METADATA_HEADER if col not in header]
    if missing:
        raise FormatError(f"missing column(s): {', '.join(missing)}", 1, source)
    col = {name: header.index(name) for name in METADATA_HEADER}

    records: list[ParticipantRecord] = []
    seen: set[str] = set()
    for row in reader:
        lineno = reader.line_num
        if not any(cell.strip() for cell in row):
            continue
        if len(row) != len(header):
            raise FormatError(f"expected {len(header)} fields, got {len(row)}", lineno, source)
        pid = row[col["id"]].strip()
        if not pid:
            raise FormatError("empty id", lineno, source)
        if pid in seen:
            raise DuplicateId(f"{source or 'metadata'}:{lineno}: duplicate id {pid!r}")
        seen.add(pid)
        try:
            cohort = Cohort(row[col["cohort"]].strip())
        except ValueError:
            allowed = ", ".join(c.value for c in Cohort)
            raise FormatError(
                f"unknown cohort {row[col['cohort']]!r} (expected one of {allowed})", lineno, source
            ) from None
        records.append(
            ParticipantRecord(
                id=pid,
                pseudonym=row[col["pseudonym"]].strip(),
                gender=_parse_gender(row[col["gender"]]),
                origin=row[col["origin"]].strip(),
                reason=row[col["reason"]].strip(),
                cohort=cohort,
            )
        )
    return records


def strip_questions(t: Transcript) -> list[Answer]:
    """Keep respondent turns only; interviewer text never reaches an Answer."""
    return [
        Answer(t.id, turn.index, turn.text, count_words(turn.text))
        for turn in t.turns
        if turn.speaker is Speaker.RESPONDENT
    ]


def filter_short_answers(answers: list[Answer], min_words: int = 3) -> list[Answer]:
    if min_words < 1:
        raise ValueError(f"min_words must be >= 1, got {min_words}")
    return [a for a in answers if a.word_count >= min_words]
