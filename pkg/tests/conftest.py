from __future__ import annotations

from pathlib import Path

import pytest

from chordal_grundy import from_edges
from chordal_grundy.dimacs import read_dimacs
from chordal_grundy.generators import complete, cycle, path, star

DATA = Path(__file__).parent / "data"

# vertex names of the six-vertex worked example, in id order
NAMES = "abcdef"

_acceptance_results: list[tuple[str, str]] = []


@pytest.fixture
def worked_example():
    return read_dimacs(str(DATA / "worked_example.col"))


@pytest.fixture
def worked_example_tree():
    return read_dimacs(str(DATA / "worked_example_tree.col"))


@pytest.fixture
def p3():
    return path(3)


@pytest.fixture
def p4():
    return path(4)


@pytest.fixture
def k4():
    return complete(4)


@pytest.fixture
def c4():
    return cycle(4)


@pytest.fixture
def c5():
    return cycle(5)


@pytest.fixture
def star5():
    return star(5)


@pytest.fixture
def edgeless4():
    return from_edges(4, [])


def pytest_runtest_makereport(item, call):
    if call.when == "call" and item.get_closest_marker("acceptance"):
        outcome = "PASS" if call.excinfo is None else "FAIL"
        _acceptance_results.append((outcome, item.name))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    for outcome, name in _acceptance_results:
        terminalreporter.write_line(f"{outcome}  {name}")
