import pytest

from gdnbasis.algebra import Alphabet
from gdnbasis.groebner import RelationSet
from gdnbasis.parse import load_session
from pathlib import Path

DATA = Path(__file__).resolve().parent.parent / "data"


@pytest.fixture(scope="session")
def A():
    return Alphabet(["a"])


@pytest.fixture(scope="session")
def AB():
    return Alphabet(["a", "b"])


@pytest.fixture(scope="session")
def circ_S():
    return load_session(str(DATA / "circ.gdn")).relation_set()


@pytest.fixture(scope="session")
def nov4():
    """Four-dimensional Novikov algebra: e2 o e1 = e3, e3 o e1 = e4."""
    return load_session(str(DATA / "novikov4.gdn")).relation_set()


@pytest.fixture
def data_dir():
    return DATA


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
