from pathlib import Path

import pytest

from tweetcast.census import fixture_path, load_fixture_table
from tweetcast.corpus import default_specs
from tweetcast.lexicon import afinn111

DATA = Path(__file__).parent / "data"

# filled by test_acceptance, printed at the end of the session
ACCEPTANCE: dict[str, str] = {}


@pytest.fixture(scope="session")
def lexicon():
    return afinn111()


@pytest.fixture(scope="session")
def specs():
    return default_specs()


@pytest.fixture(scope="session")
def table():
    return load_fixture_table()


@pytest.fixture
def tweets10():
    return (DATA / "tweets10.jsonl").read_text(encoding="utf-8")


@pytest.fixture
def fixture():
    return fixture_path


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=lambda k: int(k.split()[0][2:])):
        terminalreporter.write_line(ACCEPTANCE[key])
