from importlib import resources

import pytest

from helpgen.deriv import read_corpus
from helpgen.polarity import OperatorLexicon
from helpgen.taxonomy import Taxonomy


@pytest.fixture(scope="session")
def lexicon():
    return OperatorLexicon.load()


@pytest.fixture(scope="session")
def tax():
    return Taxonomy.load()


@pytest.fixture(scope="session")
def corpus():
    with resources.files("helpgen.data").joinpath("corpus.jsonl").open("rb") as f:
        return read_corpus(f)


@pytest.fixture(scope="session")
def by_id(corpus):
    return {s.id: s for s in corpus}


ACCEPTANCE = pytest.StashKey[list]()


@pytest.fixture
def acceptance(request):
    """Collects one (criterion, description, passed) line per acceptance check."""
    return request.config.stash.setdefault(ACCEPTANCE, [])


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(ACCEPTANCE, [])
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for n, text, ok in sorted(lines):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {n}: {text}")
