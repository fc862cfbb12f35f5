"""Run configuration: a flat ``key = value`` file plus command-line overrides.

Grammar, one setting per line::

    # comment
    transcript_dir = transcripts      # relative paths resolve against the config file
    metadata_path  = metadata.csv
    min_words      = 3

Blank lines and ``#`` comments (whole-line or trailing) are ignored; keys
are case-sensitive; unknown or repeated keys are errors. ``lexicon_path``
and ``stopword_path`` default to the bundled data files, ``lda_alpha`` to
``50 / lda_k``.
"""

from __future__ import annotations

import dataclasses
import os
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from interview_sentiment.errors import ConfigError
from interview_sentiment.pipeline import DocumentMode
from interview_sentiment.sentiment import FINE_CUT, NEUTRAL_BAND
from interview_sentiment.topics import DEFAULT_BETA, DEFAULT_ITERATIONS, DEFAULT_K, default_alpha

BUNDLED_PREFIX = "bundled:"


def bundled_path(name: str) -> Path:
    return Path(str(resources.files("interview_sentiment") / "data" / name))


@dataclass(frozen=True)
class Thresholds:
    neutral_band: float = NEUTRAL_BAND
    fine_cut: float = FINE_CUT


@dataclass(frozen=True)
class LdaConfig:
    K: int = DEFAULT_K
    alpha: float | None = None
    beta: float = DEFAULT_BETA
    iterations: int = DEFAULT_ITERATIONS
    seed: int = 0
    top_n: int = 10
    trace: bool = False

    @property
    def effective_alpha(self) -> float:
        return default_alpha(self.K) if self.alpha is None else self.alpha


@dataclass(frozen=True)
class RunConfig:
    transcript_dir: Path
    metadata_path: Path
    output_dir: Path
    lexicon_path: Path = field(default_factory=lambda: bundled_path("lexicon.tsv"))
    stopword_path: Path = field(default_factory=lambda: bundled_path("stopwords.txt"))
    min_words: int = 3
    thresholds: Thresholds = Thresholds()
    lda: LdaConfig = LdaConfig()
    document_mode: DocumentMode = DocumentMode.CONCATENATED_ANSWERS
    base_dir: Path = Path(".")

    def validate(self) -> None:
        if self.min_words < 1:
            raise ConfigError(f"min_words must be >= 1, got {self.min_words}")
        if not self.thresholds.neutral_band > 0:
            raise ConfigError(f"neutral_band must be > 0, got {self.thresholds.neutral_band}")
        if not self.thresholds.fine_cut > self.thresholds.neutral_band:
            raise ConfigError(
                f"fine_cut ({self.thresholds.fine_cut}) must exceed neutral_band ({self.thresholds.neutral_band})"
            )
        if self.lda.top_n < 1:
            raise ConfigError(f"top_n must be >= 1, got {self.lda.top_n}")

    def display_path(self, path: Path) -> str:
        """Path as recorded in manifests: bundled files by name, others relative to the config file."""
        for name in ("lexicon.tsv", "stopwords.txt"):
            if path == bundled_path(name):
                return BUNDLED_PREFIX + name
        try:
            return Path(os.path.relpath(path, self.base_dir)).as_posix()
        except ValueError:
            return path.as_posix()

    def manifest(self) -> dict:
        return {
            "transcript_dir": self.display_path(self.transcript_dir),
            "metadata_path": self.display_path(self.metadata_path),
            "lexicon_path": self.display_path(self.lexicon_path),
            "stopword_path": self.display_path(self.stopword_path),
            "min_words": self.min_words,
            "neutral_band": self.thresholds.neutral_band,
            "fine_cut": self.thresholds.fine_cut,
            "document_mode": self.document_mode.value,
            "lda_k": self.lda.K,
            "lda_alpha": self.lda.effective_alpha,
            "lda_beta": self.lda.beta,
            "lda_iterations": self.lda.iterations,
            "lda_seed": self.lda.seed,
            "top_n": self.lda.top_n,
            "lda_trace": self.lda.trace,
        }


def _parse_bool(text: str) -> bool:
    lowered = text.lower()
    if lowered in ("1", "true", "yes", "on"):
        return True
    if lowered in ("0", "false", "no", "off"):
        return False
    raise ValueError(f"not a boolean: {text!r}")


# key -> (section, attribute, parser); section None means a top-level field
_KEYS = {
    "transcript_dir": (None, "transcript_dir", Path),
    "metadata_path": (None, "metadata_path", Path),
    "output_dir": (None, "output_dir", Path),
    "lexicon_path": (None, "lexicon_path", Path),
    "stopword_path": (None, "stopword_path", Path),
    "min_words": (None, "min_words", int),
    "document_mode": (None, "document_mode", DocumentMode),
    "neutral_band": ("thresholds", "neutral_band", float),
    "fine_cut": ("thresholds", "fine_cut", float),
    "lda_k": ("lda", "K", int),
    "lda_alpha": ("lda", "alpha", float),
    "lda_beta": ("lda", "beta", float),
    "lda_iterations": ("lda", "iterations", int),
    "lda_seed": ("lda", "seed", int),
    "top_n": ("lda", "top_n", int),
    "lda_trace": ("lda", "trace", _parse_bool),
}
_REQUIRED = ("transcript_dir", "metadata_path", "output_dir")
_PATH_KEYS = {k for k, (_, _, parse) in _KEYS.items() if parse is Path}


def parse_config_text(text: str, base_dir: Path, source: str = "config") -> dict[str, object]:
    values: dict[str, object] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not sep or not key:
            raise ConfigError(f"{source}:{lineno}: expected 'key = value'")
        if key not in _KEYS:
            raise ConfigError(f"{source}:{lineno}: unknown key {key!r}")
        if key in values:
            raise ConfigError(f"{source}:{lineno}: duplicate key {key!r}")
        try:
            parsed = _KEYS[key][2](value)
        except ValueError as exc:
            raise ConfigError(f"{source}:{lineno}: bad value for {key}: {exc}") from None
        if key in _PATH_KEYS:
            parsed = (base_dir / parsed).resolve()
        values[key] = parsed
    return values


def build_config(values: dict[str, object], base_dir: Path) -> RunConfig:
    missing = [k for k in _REQUIRED if k not in values]
    if missing:
        raise ConfigError(f"missing required key(s): {', '.join(missing)}")
    top: dict[str, object] = {"base_dir": base_dir}
    sections: dict[str, dict[str, object]] = {"thresholds": {}, "lda": {}}
    for key, value in values.items():
        section, attr, _ = _KEYS[key]
        if section is None:
            top[attr] = value
        else:
            sections[section][attr] = value
    cfg = RunConfig(
        **top,
        thresholds=dataclasses.replace(Thresholds(), **sections["thresholds"]),
        lda=dataclasses.replace(LdaConfig(), **sections["lda"]),
    )
    cfg.validate()
    return cfg


def load_config(path: Path, overrides: dict[str, object] | None = None) -> RunConfig:
    """Read a config file; ``overrides`` (already parsed, paths absolute) win over file values."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc.strerror}") from None
    base_dir = path.resolve().parent
    values = parse_config_text(text, base_dir, str(path))
    for key, value in (overrides or {}).items():
        if value is not None:
            values[key] = value
    return build_config(values, base_dir)
