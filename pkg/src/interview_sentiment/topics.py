"""LDA topic model fitted by collapsed Gibbs sampling, and topic-stratified sentiment."""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from typing import Callable, Iterable

import numba
import numpy as np

from interview_sentiment.errors import (
    AlignmentError,
    DecodeError,
    EmptyCorpus,
    InvalidHyperparameter,
    TopicOutOfRange,
)
from interview_sentiment.pipeline import LabeledAnswer
from interview_sentiment.sentiment import CoarseLabel, tokenize

DEFAULT_K = 5
DEFAULT_BETA = 0.01
DEFAULT_ITERATIONS = 500


def default_alpha(k: int) -> float:
    return 50.0 / k


@dataclass(frozen=True)
class CorpusMatrix:
    vocab: tuple[str, ...]
    docs: tuple[tuple[int, ...], ...]
    doc_refs: tuple[tuple[str, int], ...]

    @property
    def n_tokens(self) -> int:
        return sum(len(d) for d in self.docs)


def load_stopwords(raw: bytes) -> frozenset[str]:
    """One token per line; ``#`` starts a comment line."""
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise DecodeError(f"stopword file: invalid UTF-8 at byte {exc.start}") from exc
    words = set()
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            words.add(line.lower())
    return frozenset(words)


def build_corpus(answers: Iterable[LabeledAnswer], stopwords: Iterable[str]) -> CorpusMatrix:
    """Token-id documents over a vocabulary in first-seen order.

    Stopwords and one-character tokens are dropped; so are documents left empty.
    """
    stop = {s.lower() for s in stopwords}
    vocab: dict[str, int] = {}
    docs, refs = [], []
    for la in answers:
        ids = []
        for word in tokenize(la.answer.text).words:
            if len(word) < 2 or word in stop:
                continue
            ids.append(vocab.setdefault(word, len(vocab)))
        if ids:
            docs.append(tuple(ids))
            refs.append((la.answer.transcript_id, la.answer.turn_index))
    if not docs:
        raise EmptyCorpus("no documents left after stopword removal")
    return CorpusMatrix(tuple(vocab), tuple(docs), tuple(refs))


@dataclass
class TopicModel:
    K: int
    alpha: float
    beta: float
    vocab_size: int
    doc_of: np.ndarray  # document id per token position
    word_of: np.ndarray  # vocabulary id per token position
    assignments: np.ndarray  # topic id per token position
    n_dk: np.ndarray
    n_kw: np.ndarray
    n_k: np.ndarray
    seed: int
    iterations: int

    @property
    def n_docs(self) -> int:
        return self.n_dk.shape[0]

    def topic_word(self) -> np.ndarray:
        """Smoothed topic-word distributions, one row per topic."""
        return (self.n_kw + self.beta) / (self.n_k[:, None] + self.vocab_size * self.beta)

    def doc_topic(self) -> np.ndarray:
        lengths = self.n_dk.sum(axis=1, keepdims=True)
        return (self.n_dk + self.alpha) / (lengths + self.K * self.alpha)

    def dominant_topics(self) -> np.ndarray:
        # argmax returns the first maximum, i.e. the lowest topic id on ties
        return np.argmax(self.n_dk, axis=1)

    def recount(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Count matrices rebuilt from ``assignments`` alone."""
        return count_matrices(self.doc_of, self.word_of, self.assignments, self.n_docs, self.K, self.vocab_size)

    def log_likelihood(self) -> float:
        """log p(w | z), summed over tokens, under the smoothed topic-word estimate."""
        phi = self.topic_word()
        return float(np.log(phi[self.assignments, self.word_of]).sum())

    def perplexity(self) -> float:
        theta = self.doc_topic()
        phi = self.topic_word()
        p = np.einsum("ik,ki->i", theta[self.doc_of], phi[:, self.word_of])
        return float(math.exp(-np.log(p).sum() / len(self.word_of)))


def count_matrices(doc_of, word_of, z, n_docs, K, V):
    n_dk = np.zeros((n_docs, K), dtype=np.int64)
    n_kw = np.zeros((K, V), dtype=np.int64)
    np.add.at(n_dk, (doc_of, z), 1)
    np.add.at(n_kw, (z, word_of), 1)
    return n_dk, n_kw, n_kw.sum(axis=1)


@numba.njit(cache=True)
def _gibbs_sweep(doc_of, word_of, z, n_dk, n_kw, n_k, alpha, beta, uniforms, p):
    K = n_kw.shape[0]
    v_beta = n_kw.shape[1] * beta
    p_min = np.inf
    p_max = 0.0
    for i in range(z.shape[0]):
        d = doc_of[i]
        w = word_of[i]
        k = z[i]
        n_dk[d, k] -= 1
        n_kw[k, w] -= 1
        n_k[k] -= 1
        total = 0.0
        for t in range(K):
            pt = (n_dk[d, t] + alpha) * (n_kw[t, w] + beta) / (n_k[t] + v_beta)
            if pt < p_min:
                p_min = pt
            if pt > p_max:
                p_max = pt
            total += pt
            p[t] = total
        target = uniforms[i] * total
        k = K - 1
        for t in range(K):
            if target < p[t]:
                k = t
                break
        z[i] = k
        n_dk[d, k] += 1
        n_kw[k, w] += 1
        n_k[k] += 1
    return p_min, p_max


SweepCallback = Callable[[int, TopicModel, float, float], None]


def fit_lda(
    c: CorpusMatrix,
    K: int = DEFAULT_K,
    alpha: float | None = None,
    beta: float = DEFAULT_BETA,
    iterations: int = DEFAULT_ITERATIONS,
    seed: int = 0,
    on_sweep: SweepCallback | None = None,
) -> TopicModel:
    """Collapsed Gibbs sampling for LDA.

    Topics start uniformly at random. Each sweep visits every token in corpus
    order, removes it from the counts and resamples its topic with weight
    ``(n_dk + alpha) * (n_kw + beta) / (n_k + V * beta)``. Uniform draws come
    from ``numpy.random.default_rng(seed)``, one per token per sweep, so a
    fixed seed reproduces the assignments exactly.

    ``on_sweep(sweep, model, p_min, p_max)`` is called after every sweep with
    the extreme unnormalized weights seen during it.
    """
    if alpha is None:
        alpha = default_alpha(K)
    if K < 2:
        raise InvalidHyperparameter(f"K must be >= 2, got {K}")
    if not (alpha > 0 and math.isfinite(alpha)):
        raise InvalidHyperparameter(f"alpha must be positive and finite, got {alpha}")
    if not (beta > 0 and math.isfinite(beta)):
        raise InvalidHyperparameter(f"beta must be positive and finite, got {beta}")
    if iterations < 1:
        raise InvalidHyperparameter(f"iterations must be >= 1, got {iterations}")
    if not c.docs or c.n_tokens == 0:
        raise EmptyCorpus("cannot fit a topic model on an empty corpus")

    doc_of = np.repeat(np.arange(len(c.docs), dtype=np.int64), [len(d) for d in c.docs])
    word_of = np.fromiter((w for d in c.docs for w in d), dtype=np.int64, count=c.n_tokens)
    rng = np.random.default_rng(seed)
    z = rng.integers(0, K, size=len(word_of), dtype=np.int64)
    n_dk, n_kw, n_k = count_matrices(doc_of, word_of, z, len(c.docs), K, len(c.vocab))
    model = TopicModel(K, float(alpha), float(beta), len(c.vocab), doc_of, word_of, z, n_dk, n_kw, n_k, seed, 0)

    scratch = np.empty(K, dtype=np.float64)
    for sweep in range(1, iterations + 1):
        uniforms = rng.random(len(word_of))
        p_min, p_max = _gibbs_sweep(doc_of, word_of, z, n_dk, n_kw, n_k, model.alpha, model.beta, uniforms, scratch)
        model.iterations = sweep
        if on_sweep is not None:
            on_sweep(sweep, model, p_min, p_max)
    return model


def top_words(m: TopicModel, k: int, n: int, vocab: tuple[str, ...] | None = None) -> list:
    """The ``n`` highest-weight words of topic ``k``; ties keep vocabulary order.

    Returns vocabulary ids, or tokens when ``vocab`` is given.
    """
    if not 0 <= k < m.K:
        raise TopicOutOfRange(f"topic {k} out of range for K={m.K}")
    weights = m.n_kw[k] + m.beta
    # stable sort on negated weight keeps lower vocabulary ids first among equals
    order = np.argsort(-weights, kind="stable")[: max(n, 0)]
    ids = [int(i) for i in order]
    return [vocab[i] for i in ids] if vocab is not None else ids


@dataclass(frozen=True)
class TopicSentiment:
    topic: int
    pos: int
    neg: int


def topic_sentiment(m: TopicModel, c: CorpusMatrix, answers: list[LabeledAnswer]) -> list[TopicSentiment]:
    """Positive/negative tallies per dominant topic, for topics that own any document."""
    if not c.docs:
        return []
    if m.n_docs != len(c.docs):
        raise AlignmentError(f"model has {m.n_docs} documents, corpus has {len(c.docs)}")
    by_ref = {(a.answer.transcript_id, a.answer.turn_index): a for a in answers}
    dominant = m.dominant_topics()
    pos = [0] * m.K
    neg = [0] * m.K
    for ref, topic in zip(c.doc_refs, dominant):
        la = by_ref.get(ref)
        if la is None:
            raise AlignmentError(f"no labeled answer for document {ref}")
        if la.coarse is CoarseLabel.POSITIVE:
            pos[topic] += 1
        elif la.coarse is CoarseLabel.NEGATIVE:
            neg[topic] += 1
        else:
            raise AlignmentError(f"document {ref} is {la.coarse.value}; expected a subjective answer")
    return [TopicSentiment(k, pos[k], neg[k]) for k in range(m.K) if pos[k] + neg[k]]


def render_top_words_csv(m: TopicModel, vocab: tuple[str, ...], n: int) -> str:
    phi = m.topic_word()
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(("topic", "rank", "token", "weight"))
    for k in range(m.K):
        for rank, w in enumerate(top_words(m, k, n), start=1):
            writer.writerow((k, rank, vocab[w], f"{phi[k, w]:.6f}"))
    return buf.getvalue()


def render_topic_sentiment_csv(rows: list[TopicSentiment]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(("topic", "pos", "neg"))
    writer.writerows((r.topic, r.pos, r.neg) for r in rows)
    return buf.getvalue()
