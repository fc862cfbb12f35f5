import filecmp
import json
import shutil
from pathlib import Path

import pytest

from interview_sentiment.cli import main
from interview_sentiment.config import load_config, parse_config_text
from interview_sentiment.errors import ConfigError
from interview_sentiment.pipeline import DocumentMode

from conftest import CORPUS, GOLDEN


@pytest.fixture
def corpus(tmp_path):
    """Writable copy of the fixture corpus."""
    dst = tmp_path / "corpus"
    shutil.copytree(CORPUS, dst, ignore=shutil.ignore_patterns("out"))
    return dst


def _run(*args):
    return main([str(a) for a in args])


def tree(path: Path):
    return sorted(p.relative_to(path).as_posix() for p in path.rglob("*"))


# -- config ------------------------------------------------------------------


def test_config_defaults_and_relative_paths(fixture_config):
    cfg = load_config(fixture_config)
    assert cfg.transcript_dir == (CORPUS / "transcripts").resolve()
    assert cfg.min_words == 3
    assert cfg.thresholds.neutral_band == 0.05 and cfg.thresholds.fine_cut == 0.6
    assert cfg.lda.K == 2 and cfg.lda.effective_alpha == 0.1
    assert cfg.document_mode is DocumentMode.CONCATENATED_ANSWERS


def test_config_overrides_win(fixture_config):
    cfg = load_config(fixture_config, {"min_words": 5, "lda_seed": 99, "lda_k": None})
    assert cfg.min_words == 5 and cfg.lda.seed == 99 and cfg.lda.K == 2


def test_config_alpha_default_tracks_k(tmp_path):
    p = tmp_path / "c.conf"
    p.write_text("transcript_dir = t\nmetadata_path = m.csv\noutput_dir = o\nlda_k = 4\n")
    cfg = load_config(p)
    assert cfg.lda.effective_alpha == 12.5
    assert cfg.lexicon_path.name == "lexicon.tsv"
    assert cfg.manifest()["lexicon_path"] == "bundled:lexicon.tsv"


@pytest.mark.parametrize(
    "text",
    [
        "transcript_dir = t\nmetadata_path = m\n",
        "transcript_dir = t\nmetadata_path = m\noutput_dir = o\ncolour = blue\n",
        "transcript_dir = t\nmetadata_path = m\noutput_dir = o\nmin_words = three\n",
        "transcript_dir = t\nmetadata_path = m\noutput_dir = o\nmin_words = 0\n",
        "transcript_dir = t\nmetadata_path = m\noutput_dir = o\nneutral_band = 0.5\nfine_cut = 0.4\n",
        "transcript_dir = t\nmetadata_path = m\noutput_dir = o\noutput_dir = p\n",
        "transcript_dir t\n",
    ],
)
def test_config_errors(tmp_path, text):
    p = tmp_path / "c.conf"
    p.write_text(text)
    with pytest.raises(ConfigError):
        load_config(p)


def test_config_trailing_comments(tmp_path):
    values = parse_config_text("min_words = 4  # stricter\n", tmp_path)
    assert values == {"min_words": 4}


# -- analyze -----------------------------------------------------------------


def test_analyze_golden_files(corpus, tmp_path):
    out = tmp_path / "out"
    assert _run("analyze", "--config", corpus / "run.conf", "--out", out) == 0
    for name in ("counts.csv", "roster.csv", "cohorts.csv"):
        assert (out / name).read_bytes() == (GOLDEN / name).read_bytes(), name
    assert tree(out) == ["analyze_manifest.json", "cohorts.csv", "counts.csv", "report.json", "roster.csv"]


def test_report_json_schema(corpus, tmp_path):
    out = tmp_path / "out"
    _run("analyze", "--config", corpus / "run.conf", "--out", out)
    doc = json.loads((out / "report.json").read_text())
    assert doc["schema_version"] == 1
    assert len(doc["interviews"]) == 19
    jane = next(i for i in doc["interviews"] if i["name"] == "Jane (Cameroon)")
    assert jane["counts"] == {"neg": 1, "pos": 1, "neutral": 2, "error": 1}
    errors = [a for a in jane["answers"] if a["coarse"] == "Error"]
    assert len(errors) == 1 and errors[0]["score"] is None and errors[0]["fine"] is None
    for interview in doc["interviews"]:
        assert sum(interview["counts"].values()) == len(interview["answers"])
        assert interview["neg_exceeds_pos"] == (interview["counts"]["neg"] > interview["counts"]["pos"])


def test_analyze_min_words_flag_is_recorded(corpus, tmp_path):
    out = tmp_path / "out"
    assert _run("analyze", "--config", corpus / "run.conf", "--out", out, "--min-words", "1") == 0
    manifest = json.loads((out / "analyze_manifest.json").read_text())
    assert manifest["config"]["min_words"] == 1
    # short answers now count, so the counts differ from the golden file
    assert (out / "counts.csv").read_bytes() != (GOLDEN / "counts.csv").read_bytes()


def test_analyze_lexicon_flag(corpus, tmp_path):
    lex = tmp_path / "empty.tsv"
    lex.write_text("# nothing\n")
    out = tmp_path / "out"
    assert _run("analyze", "--config", corpus / "run.conf", "--out", out, "--lexicon", lex) == 0
    assert "Positive" not in (out / "roster.csv").read_text()


def test_analyze_missing_metadata_file(corpus, tmp_path, capsys):
    (corpus / "metadata.csv").unlink()
    out = tmp_path / "out"
    assert _run("analyze", "--config", corpus / "run.conf", "--out", out) == 1
    assert "metadata.csv" in capsys.readouterr().err
    assert not out.exists() or tree(out) == []


def test_analyze_transcript_without_metadata(corpus, tmp_path, capsys):
    (corpus / "transcripts" / "t99.txt").write_text("R: who am I then\n")
    assert _run("analyze", "--config", corpus / "run.conf", "--out", tmp_path / "o") == 1
    assert "t99" in capsys.readouterr().err


def test_analyze_malformed_transcript(corpus, tmp_path, capsys):
    (corpus / "transcripts" / "t05.txt").write_text("I: hello\nQ: what?\n")
    assert _run("analyze", "--config", corpus / "run.conf", "--out", tmp_path / "o") == 1
    err = capsys.readouterr().err
    assert "t05" in err and ":2:" in err


def test_analyze_no_transcripts(corpus, tmp_path):
    for p in (corpus / "transcripts").glob("*.txt"):
        p.unlink()
    out = tmp_path / "out"
    assert _run("analyze", "--config", corpus / "run.conf", "--out", out) == 2
    assert not out.exists()


# -- topics ------------------------------------------------------------------


def test_topics_golden_files(corpus, tmp_path):
    out = tmp_path / "out"
    assert _run("topics", "--config", corpus / "run.conf", "--out", out) == 0
    for name in ("topic_words.csv", "topic_sentiment.csv"):
        assert (out / name).read_bytes() == (GOLDEN / name).read_bytes(), name
    manifest = json.loads((out / "topics_manifest.json").read_text())
    assert manifest["config"]["lda_seed"] == 1
    assert manifest["config"]["lda_alpha"] == 0.1


def test_golden_topics_separate_themes():
    """The pinned fixture run splits school talk from winter/work talk."""
    rows = [line.split(",") for line in (GOLDEN / "topic_words.csv").read_text().splitlines()[1:]]
    words = {k: {r[2] for r in rows if r[0] == k} for k in ("0", "1")}
    winter = "0" if "winter" in words["0"] else "1"
    school = "1" if winter == "0" else "0"
    assert {"snow", "cold"} <= words[winter]
    assert {"classes", "campus"} & words[school]
    sentiment = {r.split(",")[0]: r.split(",")[1:] for r in (GOLDEN / "topic_sentiment.csv").read_text().splitlines()[1:]}
    pos_w, neg_w = map(int, sentiment[winter])
    pos_s, neg_s = map(int, sentiment[school])
    assert neg_w > pos_w and pos_s > neg_s


def test_topics_seed_flag(corpus, tmp_path):
    out = tmp_path / "out"
    assert _run("topics", "--config", corpus / "run.conf", "--out", out, "--seed", "5", "--k", "3", "--iterations", "50") == 0
    manifest = json.loads((out / "topics_manifest.json").read_text())
    assert (manifest["config"]["lda_seed"], manifest["config"]["lda_k"], manifest["config"]["lda_iterations"]) == (5, 3, 50)
    lines = (out / "topic_sentiment.csv").read_text().splitlines()[1:]
    assert sum(int(x) for line in lines for x in line.split(",")[1:]) == manifest["corpus"]["documents"]


def test_topics_all_neutral_corpus(tmp_path):
    d = tmp_path / "c"
    (d / "transcripts").mkdir(parents=True)
    (d / "transcripts" / "a.txt").write_text("I: q?\nR: we took the bus downtown\n")
    (d / "metadata.csv").write_text("id,pseudonym,gender,origin,reason,cohort\na,A,F,X,School,International\n")
    (d / "lex.tsv").write_text("happy\tvalence\t2\n")
    (d / "run.conf").write_text("transcript_dir = transcripts\nmetadata_path = metadata.csv\nlexicon_path = lex.tsv\noutput_dir = out\n")
    assert _run("topics", "--config", d / "run.conf") == 2
    assert not (d / "out").exists() or tree(d / "out") == []


def test_topics_trace(corpus, tmp_path):
    with open(corpus / "run.conf", "a") as fh:
        fh.write("lda_trace = true\n")
    out = tmp_path / "out"
    assert _run("topics", "--config", corpus / "run.conf", "--out", out, "--iterations", "10") == 0
    lines = (out / "lda_trace.csv").read_text().splitlines()
    assert lines[0] == "sweep,log_likelihood,perplexity" and len(lines) == 11


def test_end_to_end_determinism(corpus, tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    for out in (a, b):
        assert _run("analyze", "--config", corpus / "run.conf", "--out", out) == 0
        assert _run("topics", "--config", corpus / "run.conf", "--out", out) == 0
    assert tree(a) == tree(b)
    match, mismatch, errors = filecmp.cmpfiles(a, b, tree(a), shallow=False)
    assert not mismatch and not errors


# -- validate ----------------------------------------------------------------


def test_validate_ok(corpus, capsys):
    assert _run("validate", "--config", corpus / "run.conf") == 0
    out = capsys.readouterr().out
    assert out.count("OK") == 22
    assert not (corpus / "out").exists()


def test_validate_reports_bad_file(corpus, capsys):
    (corpus / "transcripts" / "t07.txt").write_bytes(b"R: fine\nZ: oops\n")
    assert _run("validate", "--config", corpus / "run.conf") == 1
    out = capsys.readouterr().out
    assert "ERROR" in out and "t07.txt" in out and ":2:" in out
    assert out.count("OK") == 21


def test_validate_metadata_without_transcript_warns(corpus, capsys):
    (corpus / "transcripts" / "t19.txt").unlink()
    assert _run("validate", "--config", corpus / "run.conf") == 0
    assert "WARNING" in capsys.readouterr().out


def test_validate_bad_lexicon(corpus, capsys):
    (corpus / "lexicon.tsv").write_text("good\tvalence\n")
    assert _run("validate", "--config", corpus / "run.conf") == 1
    assert "lexicon.tsv" in capsys.readouterr().out
