"""Batch command line: ``analyze``, ``topics`` and ``validate``.

Exit status is 0 on success, 1 for input or configuration errors and 2 when
the corpus is empty or degenerate (no transcripts, no subjective answers).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import logging
import os
import shutil
import sys
import tempfile
from dataclasses import dataclass
from pathlib import Path

from interview_sentiment import __version__
from interview_sentiment.config import RunConfig, load_config
from interview_sentiment.errors import AnalysisError, EmptyCorpus, FormatError, MissingMetadata
from interview_sentiment.ingest import ParticipantRecord, Transcript, load_metadata, parse_transcript
from interview_sentiment.pipeline import (
    InterviewReport,
    analyze_document,
    filter_subjective,
    render_cohort_csv,
    render_counts_csv,
    render_roster_csv,
    report_to_json,
    summarize_cohorts,
)
from interview_sentiment.sentiment import Lexicon, load_lexicon
from interview_sentiment.topics import (
    build_corpus,
    fit_lda,
    load_stopwords,
    render_top_words_csv,
    render_topic_sentiment_csv,
    topic_sentiment,
)

log = logging.getLogger("interview_sentiment")

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_EMPTY = 2

TRANSCRIPT_SUFFIX = ".txt"


@dataclass
class Inputs:
    transcripts: list[Transcript]
    metadata: list[ParticipantRecord]
    lexicon: Lexicon
    digests: dict[str, str]


def _read(path: Path, what: str) -> bytes:
    try:
        return path.read_bytes()
    except OSError as exc:
        raise AnalysisError(f"cannot read {what} {path}: {exc.strerror}") from None


def transcript_files(cfg: RunConfig) -> list[Path]:
    if not cfg.transcript_dir.is_dir():
        raise AnalysisError(f"transcript directory not found: {cfg.transcript_dir}")
    return sorted(p for p in cfg.transcript_dir.iterdir() if p.is_file() and p.suffix == TRANSCRIPT_SUFFIX)


def _digest(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def load_inputs(cfg: RunConfig) -> Inputs:
    """Parse every configured input, attaching metadata to transcripts.

    Raises :class:`EmptyCorpus` if the transcript directory has no files.
    """
    digests = {}
    meta_raw = _read(cfg.metadata_path, "metadata file")
    digests[cfg.display_path(cfg.metadata_path)] = _digest(meta_raw)
    metadata = load_metadata(meta_raw, str(cfg.metadata_path))
    lex_raw = _read(cfg.lexicon_path, "lexicon")
    digests[cfg.display_path(cfg.lexicon_path)] = _digest(lex_raw)
    lexicon = load_lexicon(lex_raw, str(cfg.lexicon_path))

    files = transcript_files(cfg)
    if not files:
        raise EmptyCorpus(f"no *{TRANSCRIPT_SUFFIX} transcripts in {cfg.transcript_dir}")
    by_id = {m.id: m for m in metadata}
    transcripts = []
    for path in files:
        raw = _read(path, "transcript")
        digests[cfg.display_path(path)] = _digest(raw)
        t = parse_transcript(raw, path.stem)
        if t.id not in by_id:
            raise MissingMetadata(f"transcript {path.name}: no metadata record with id {t.id!r}")
        transcripts.append(t.with_participant(by_id[t.id]))
    return Inputs(transcripts, metadata, lexicon, dict(sorted(digests.items())))


def run_pipeline(cfg: RunConfig, inputs: Inputs) -> list[InterviewReport]:
    return [
        analyze_document(
            t,
            inputs.lexicon,
            cfg.min_words,
            mode=cfg.document_mode,
            neutral_band=cfg.thresholds.neutral_band,
            fine_cut=cfg.thresholds.fine_cut,
        )
        for t in sorted(inputs.transcripts, key=lambda t: t.id)
    ]


def write_outputs(out_dir: Path, files: dict[str, str]) -> None:
    """Write every file to a scratch directory first, then move them into place."""
    out_dir.mkdir(parents=True, exist_ok=True)
    scratch = Path(tempfile.mkdtemp(prefix=".partial-", dir=out_dir))
    try:
        for name, content in files.items():
            with open(scratch / name, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(content)
        for name in files:
            os.replace(scratch / name, out_dir / name)
    finally:
        shutil.rmtree(scratch, ignore_errors=True)


def _manifest(command: str, cfg: RunConfig, inputs: Inputs, outputs, extra=None) -> str:
    doc = {
        "command": command,
        "version": __version__,
        "config": cfg.manifest(),
        "inputs": inputs.digests,
        "outputs": sorted(outputs),
    }
    if extra:
        doc.update(extra)
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def cmd_analyze(cfg: RunConfig) -> int:
    inputs = load_inputs(cfg)
    reports = run_pipeline(cfg, inputs)
    summaries = summarize_cohorts(reports, inputs.metadata)
    files = {
        "counts.csv": render_counts_csv(reports, inputs.metadata),
        "roster.csv": render_roster_csv(reports, inputs.metadata),
        "cohorts.csv": render_cohort_csv(summaries),
        "report.json": report_to_json(reports, inputs.metadata, summaries),
    }
    files["analyze_manifest.json"] = _manifest("analyze", cfg, inputs, files)
    write_outputs(cfg.output_dir, files)
    log.info("analyzed %d transcripts -> %s", len(reports), cfg.output_dir)
    return EXIT_OK


def cmd_topics(cfg: RunConfig) -> int:
    inputs = load_inputs(cfg)
    stop_raw = _read(cfg.stopword_path, "stopword file")
    inputs.digests[cfg.display_path(cfg.stopword_path)] = _digest(stop_raw)
    inputs.digests = dict(sorted(inputs.digests.items()))
    stopwords = load_stopwords(stop_raw)

    reports = run_pipeline(cfg, inputs)
    subjective = filter_subjective([la for r in reports for la in r.answers])
    if not subjective:
        raise EmptyCorpus("no subjective (Positive or Negative) answers to model")
    corpus = build_corpus(subjective, stopwords)

    trace_rows = []

    def record(sweep, model, p_min, p_max):
        trace_rows.append(f"{sweep},{model.log_likelihood():.6f},{model.perplexity():.6f}\n")

    lda = cfg.lda
    model = fit_lda(
        corpus,
        K=lda.K,
        alpha=lda.effective_alpha,
        beta=lda.beta,
        iterations=lda.iterations,
        seed=lda.seed,
        on_sweep=record if lda.trace else None,
    )
    files = {
        "topic_words.csv": render_top_words_csv(model, corpus.vocab, lda.top_n),
        "topic_sentiment.csv": render_topic_sentiment_csv(topic_sentiment(model, corpus, subjective)),
    }
    if lda.trace:
        files["lda_trace.csv"] = "sweep,log_likelihood,perplexity\n" + "".join(trace_rows)
    corpus_info = {"corpus": {"documents": len(corpus.docs), "tokens": corpus.n_tokens, "vocabulary": len(corpus.vocab)}}
    files["topics_manifest.json"] = _manifest("topics", cfg, inputs, files, corpus_info)
    write_outputs(cfg.output_dir, files)
    log.info("fitted K=%d topics over %d answers -> %s", lda.K, len(corpus.docs), cfg.output_dir)
    return EXIT_OK


def _diagnostic(exc: Exception) -> tuple[str, str]:
    """(line suffix, message) for one validation failure."""
    if isinstance(exc, FormatError):
        return (f":{exc.line}" if exc.line is not None else ""), exc.message
    return "", str(exc)


def cmd_validate(cfg: RunConfig, out=None) -> int:
    """Check every input independently and print one diagnostic line per file."""
    out = out or sys.stdout
    ok = True

    def report(status: str, path: Path, message: str, line: str = "") -> None:
        print(f"{status:7s} {cfg.display_path(path)}{line}: {message}", file=out)

    def fail(path: Path, exc: Exception) -> None:
        nonlocal ok
        ok = False
        line, message = _diagnostic(exc)
        report("ERROR", path, message, line)

    metadata: list[ParticipantRecord] = []
    try:
        metadata = load_metadata(_read(cfg.metadata_path, "metadata file"))
        report("OK", cfg.metadata_path, f"{len(metadata)} participant records")
    except AnalysisError as exc:
        fail(cfg.metadata_path, exc)
    try:
        lexicon = load_lexicon(_read(cfg.lexicon_path, "lexicon"))
        report("OK", cfg.lexicon_path, f"{len(lexicon)} lexicon entries")
    except AnalysisError as exc:
        fail(cfg.lexicon_path, exc)
    try:
        stopwords = load_stopwords(_read(cfg.stopword_path, "stopword file"))
        report("OK", cfg.stopword_path, f"{len(stopwords)} stopwords")
    except AnalysisError as exc:
        fail(cfg.stopword_path, exc)

    try:
        files = transcript_files(cfg)
    except AnalysisError as exc:
        fail(cfg.transcript_dir, exc)
        return EXIT_INPUT
    if not files:
        report("WARNING", cfg.transcript_dir, "no transcripts found")
    known = {m.id for m in metadata}
    ids = set()
    for path in files:
        try:
            t = parse_transcript(_read(path, "transcript"), path.stem)
        except AnalysisError as exc:
            fail(path, exc)
            continue
        ids.add(t.id)
        if metadata and t.id not in known:
            fail(path, MissingMetadata(f"no metadata record with id {t.id!r}"))
        else:
            report("OK", path, f"{len(t.turns)} turns")
    for pid in sorted(known - ids):
        report("WARNING", cfg.metadata_path, f"metadata id {pid!r} has no transcript")
    return EXIT_OK if ok else EXIT_INPUT


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="interview-sentiment", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="per-answer and per-interview sentiment reports")
    p.add_argument("--config", required=True, type=Path)
    p.add_argument("--min-words", type=int)
    p.add_argument("--lexicon", type=Path)
    p.add_argument("--out", type=Path)

    p = sub.add_parser("topics", help="LDA topics over subjective answers, stratified by sentiment")
    p.add_argument("--config", required=True, type=Path)
    p.add_argument("--k", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--iterations", type=int)
    p.add_argument("--out", type=Path)

    p = sub.add_parser("validate", help="parse all inputs and report problems; writes nothing")
    p.add_argument("--config", required=True, type=Path)
    return parser


def _overrides(args: argparse.Namespace) -> dict[str, object]:
    def absolute(p):
        return None if p is None else p.resolve()

    return {
        "min_words": getattr(args, "min_words", None),
        "lexicon_path": absolute(getattr(args, "lexicon", None)),
        "output_dir": absolute(getattr(args, "out", None)),
        "lda_k": getattr(args, "k", None),
        "lda_seed": getattr(args, "seed", None),
        "lda_iterations": getattr(args, "iterations", None),
    }


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(message)s",
        stream=sys.stderr,
    )
    try:
        cfg = load_config(args.config, _overrides(args))
        if args.command == "analyze":
            return cmd_analyze(cfg)
        if args.command == "topics":
            return cmd_topics(cfg)
        return cmd_validate(cfg)
    except EmptyCorpus as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EMPTY
    except AnalysisError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
