"""Sentiment and topic analysis for speaker-tagged interview transcripts."""

from interview_sentiment.errors import (
    AlignmentError,
    AnalysisError,
    ConfigError,
    DecodeError,
    DuplicateId,
    DuplicateToken,
    EmptyCorpus,
    EmptyTranscript,
    FormatError,
    InvalidHyperparameter,
    MissingMetadata,
    NonFiniteValue,
    TopicOutOfRange,
)
from interview_sentiment.ingest import (
    Answer,
    Cohort,
    Gender,
    ParticipantRecord,
    Speaker,
    Transcript,
    Turn,
    filter_short_answers,
    load_metadata,
    parse_transcript,
    serialize_transcript,
    strip_questions,
)
from interview_sentiment.sentiment import (
    CoarseLabel,
    FineLabel,
    Lexicon,
    SentimentScore,
    classify,
    classify_fine,
    load_lexicon,
    score_text,
    tokenize,
)

__version__ = "0.1.0"
