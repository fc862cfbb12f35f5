"""Exception hierarchy. Every input problem is an ``AnalysisError``."""

from __future__ import annotations


class AnalysisError(Exception):
    """Base class for all recoverable input and configuration errors."""


class FormatError(AnalysisError, ValueError):
    def __init__(self, message: str, line: int | None = None, source: str | None = None):
        self.line = line
        self.source = source
        where = ""
        if source is not None:
            where = f"{source}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}" if where else message)
        self.message = message


class DecodeError(AnalysisError, ValueError):
    pass


class EmptyTranscript(AnalysisError, ValueError):
    pass


class DuplicateId(AnalysisError, ValueError):
    pass


class DuplicateToken(AnalysisError, ValueError):
    pass


class NonFiniteValue(AnalysisError, ValueError):
    pass


class MissingMetadata(AnalysisError, KeyError):
    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "missing metadata"


class EmptyCorpus(AnalysisError, ValueError):
    """No documents survive preprocessing; the CLI maps this to exit status 2."""


class InvalidHyperparameter(AnalysisError, ValueError):
    pass


class TopicOutOfRange(AnalysisError, IndexError):
    pass


class AlignmentError(AnalysisError, ValueError):
    pass


class ConfigError(AnalysisError, ValueError):
    pass
