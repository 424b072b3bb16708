import pytest

from cayleynorm.cayley import build
from cayleynorm.graphcore import Graph
from cayleynorm.transgraph import TranspositionSet


def tset(n, *pairs):
    return TranspositionSet.from_pairs(n, pairs)


def cayley_of(graph):
    return build(TranspositionSet.from_graph(graph))


@pytest.fixture(scope="session")
def c4_cayley():
    return cayley_of(Graph.cycle(4))


@pytest.fixture(scope="session")
def path5_cayley():
    return cayley_of(Graph.path(5))


@pytest.fixture(scope="session")
def k5_cayley():
    return cayley_of(Graph.complete(5))


ACCEPTANCE_RESULTS = []


def record_acceptance(number, passed, message, seconds):
    ACCEPTANCE_RESULTS.append((number, passed, message, seconds))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, passed, message, seconds in sorted(ACCEPTANCE_RESULTS):
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[{number:>2}] {status}  {message}  ({seconds:.2f}s)")
