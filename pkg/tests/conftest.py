from pathlib import Path

import pytest

from interview_sentiment.sentiment import Lexicon

FIXTURES = Path(__file__).parent / "fixtures"
CORPUS = FIXTURES / "corpus"
GOLDEN = FIXTURES / "golden"


@pytest.fixture
def good_lex():
    return Lexicon({"good": 1.9}, frozenset({"not"}))


@pytest.fixture
def fixture_lex():
    from interview_sentiment.sentiment import load_lexicon

    return load_lexicon((CORPUS / "lexicon.tsv").read_bytes())


@pytest.fixture
def fixture_config():
    return CORPUS / "run.conf"


# -- acceptance reporting ----------------------------------------------------

_ACCEPTANCE = []


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): an exit criterion, summarized at the end")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker and (report.when == "call" or (report.when == "setup" and report.outcome != "passed")):
        number, title = marker.args
        _ACCEPTANCE.append((number, title, report.outcome, report.duration))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, outcome, duration in sorted(_ACCEPTANCE):
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"AC{number} {status}  {title}  ({duration:.2f}s)")
