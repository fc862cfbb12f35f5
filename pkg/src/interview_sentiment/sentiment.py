"""Rule-based valence-lexicon sentiment scoring.

Each lexicon hit contributes its valence, adjusted by three local rules
applied in order:

1. a negator among the three preceding tokens multiplies the valence by
   ``NEGATION_SCALAR``;
2. every booster among the three preceding tokens adds its increment in the
   direction of the (possibly negated) valence, decayed by ``BOOSTER_DECAY``
   for each position beyond the adjacent one;
3. an ALL-CAPS valence token gains ``CAPS_INCREMENT`` in its own direction.

Adjusted valences are summed, trailing exclamation marks push the sum
further from zero, and the sum is squashed into (-1, 1) by
``raw / sqrt(raw**2 + NORMALIZATION_ALPHA)``.
"""

from __future__ import annotations

import enum
import math
import unicodedata
from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping, NamedTuple

from interview_sentiment.errors import DuplicateToken, FormatError, NonFiniteValue

NEGATION_SCALAR = -0.74
BOOSTER_DECAY = 0.95
CAPS_INCREMENT = 0.733
EXCLAMATION_INCREMENT = 0.292
MAX_EXCLAMATIONS = 3
WINDOW = 3
NORMALIZATION_ALPHA = 15.0

NEUTRAL_BAND = 0.05
FINE_CUT = 0.6


class CoarseLabel(str, enum.Enum):
    NEGATIVE = "Negative"
    NEUTRAL = "Neutral"
    POSITIVE = "Positive"
    ERROR = "Error"


class FineLabel(str, enum.Enum):
    VERY_NEGATIVE = "VeryNegative"
    SOMEWHAT_NEGATIVE = "SomewhatNegative"
    NEUTRAL = "Neutral"
    SOMEWHAT_POSITIVE = "SomewhatPositive"
    VERY_POSITIVE = "VeryPositive"


@dataclass(frozen=True)
class Lexicon:
    """Immutable token tables. A token may belong to at most one table."""

    entries: Mapping[str, float]
    negators: frozenset[str] = frozenset()
    boosters: Mapping[str, float] = MappingProxyType({})

    def __post_init__(self) -> None:
        entries = {k.lower(): float(v) for k, v in self.entries.items()}
        boosters = {k.lower(): float(v) for k, v in self.boosters.items()}
        negators = frozenset(n.lower() for n in self.negators)
        for name, table in (("valence", entries), ("booster", boosters)):
            for token, value in table.items():
                if not math.isfinite(value):
                    raise NonFiniteValue(f"{name} value for {token!r} is not finite: {value}")
        overlap = (entries.keys() & boosters.keys()) | (entries.keys() & negators) | (boosters.keys() & negators)
        if overlap:
            raise DuplicateToken(f"token(s) in more than one table: {', '.join(sorted(overlap))}")
        object.__setattr__(self, "entries", MappingProxyType(entries))
        object.__setattr__(self, "boosters", MappingProxyType(boosters))
        object.__setattr__(self, "negators", negators)

    def __len__(self) -> int:
        return len(self.entries) + len(self.negators) + len(self.boosters)


def load_lexicon(raw: bytes, source: str | None = None) -> Lexicon:
    """Read ``token<TAB>class<TAB>value`` rows; class is valence, negator or booster."""
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise FormatError(f"invalid UTF-8 at byte {exc.start}", None, source) from exc

    entries: dict[str, float] = {}
    negators: set[str] = set()
    boosters: dict[str, float] = {}
    seen: dict[str, int] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        fields = line.rstrip("\r\n").split("\t")
        if len(fields) != 3:
            raise FormatError(f"expected 3 tab-separated fields, got {len(fields)}", lineno, source)
        token, kind, value_text = (f.strip() for f in fields)
        token = token.lower()
        if not token:
            raise FormatError("empty token", lineno, source)
        try:
            value = float(value_text)
        except ValueError:
            raise FormatError(f"value {value_text!r} is not a number", lineno, source) from None
        if not math.isfinite(value):
            raise NonFiniteValue(f"{source or 'lexicon'}:{lineno}: value for {token!r} is not finite")
        if token in seen:
            raise DuplicateToken(
                f"{source or 'lexicon'}:{lineno}: token {token!r} already defined on line {seen[token]}"
            )
        seen[token] = lineno
        if kind == "valence":
            entries[token] = value
        elif kind == "negator":
            negators.add(token)
        elif kind == "booster":
            boosters[token] = value
        else:
            raise FormatError(f"unknown class {kind!r} (expected valence, negator or booster)", lineno, source)
    return Lexicon(entries, frozenset(negators), boosters)


class Token(NamedTuple):
    text: str
    caps: bool


class TokenizedText(NamedTuple):
    tokens: list[Token]
    exclamations: int

    @property
    def words(self) -> list[str]:
        return [t.text for t in self.tokens]


def _strip_trailing_punct(word: str) -> str:
    end = len(word)
    while end and unicodedata.category(word[end - 1]).startswith("P"):
        end -= 1
    return word[:end]


def tokenize(text: str) -> TokenizedText:
    """Whitespace split with trailing punctuation removed from each token.

    Tokens that were pure punctuation disappear. ``caps`` records whether the
    original token was ALL-CAPS; ``exclamations`` counts the ``!`` run ending
    the whole text, capped at ``MAX_EXCLAMATIONS``.
    """
    tokens = []
    for word in text.split():
        core = _strip_trailing_punct(word)
        if core:
            tokens.append(Token(core.lower(), core.isupper()))
    tail = text.rstrip()
    bangs = len(tail) - len(tail.rstrip("!"))
    return TokenizedText(tokens, min(bangs, MAX_EXCLAMATIONS))


@dataclass(frozen=True)
class SentimentScore:
    raw: float
    compound: float
    pos_share: float
    neg_share: float
    neu_share: float

    def as_dict(self) -> dict[str, float]:
        return {
            "raw": self.raw,
            "compound": self.compound,
            "pos_share": self.pos_share,
            "neg_share": self.neg_share,
            "neu_share": self.neu_share,
        }


def normalize(raw: float, alpha: float = NORMALIZATION_ALPHA) -> float:
    return raw / math.sqrt(raw * raw + alpha)


def _sign(x: float) -> float:
    return (x > 0) - (x < 0)


def adjusted_valences(tokens: list[Token], lex: Lexicon) -> list[float]:
    """Per-token adjusted valence; zero for tokens absent from the lexicon."""
    words = [t.text for t in tokens]
    is_negator = [w in lex.negators for w in words]
    boost = [lex.boosters.get(w, 0.0) for w in words]

    out = [0.0] * len(tokens)
    for i, tok in enumerate(tokens):
        v = lex.entries.get(tok.text)
        if v is None:
            continue
        lo = max(0, i - WINDOW)
        if any(is_negator[lo:i]):
            v *= NEGATION_SCALAR
        direction = _sign(v)
        for j in range(lo, i):
            if boost[j]:
                v += direction * boost[j] * BOOSTER_DECAY ** (i - j - 1)
        if tok.caps:
            v += _sign(v) * CAPS_INCREMENT
        out[i] = v
    return out


def score_tokens(tokenized: TokenizedText, lex: Lexicon) -> SentimentScore:
    valences = adjusted_valences(tokenized.tokens, lex)
    raw = math.fsum(valences)
    raw += _sign(raw) * EXCLAMATION_INCREMENT * tokenized.exclamations
    n = len(valences)
    if n == 0:
        return SentimentScore(0.0, 0.0, 0.0, 0.0, 1.0)
    pos = sum(1 for v in valences if v > 0)
    neg = sum(1 for v in valences if v < 0)
    return SentimentScore(
        raw=raw,
        compound=normalize(raw),
        pos_share=pos / n,
        neg_share=neg / n,
        neu_share=(n - pos - neg) / n,
    )


def score_text(text: str, lex: Lexicon) -> SentimentScore:
    return score_tokens(tokenize(text), lex)


def classify(score: SentimentScore, neutral_band: float = NEUTRAL_BAND) -> CoarseLabel:
    c = score.compound
    if c >= neutral_band:
        return CoarseLabel.POSITIVE
    if c <= -neutral_band:
        return CoarseLabel.NEGATIVE
    return CoarseLabel.NEUTRAL


def classify_fine(
    score: SentimentScore, neutral_band: float = NEUTRAL_BAND, fine_cut: float = FINE_CUT
) -> FineLabel:
    c = score.compound
    if c >= fine_cut:
        return FineLabel.VERY_POSITIVE
    if c >= neutral_band:
        return FineLabel.SOMEWHAT_POSITIVE
    if c <= -fine_cut:
        return FineLabel.VERY_NEGATIVE
    if c <= -neutral_band:
        return FineLabel.SOMEWHAT_NEGATIVE
    return FineLabel.NEUTRAL
