from __future__ import annotations

import itertools

import hypothesis
import hypothesis.strategies as st
import pytest

from strongdiff.graph import Graph
from strongdiff.families.trees import prufer_decode

hypothesis.settings.register_profile("default", deadline=None, max_examples=60)
hypothesis.settings.register_profile("fast", deadline=None, max_examples=10)
hypothesis.settings.load_profile("default")

# (criterion, passed, detail) lines collected by test_acceptance.py
ACCEPTANCE: list[tuple[str, bool, str]] = []
# running totals of witnesses re-validated by the acceptance suites
WITNESS_TALLY = {"checked": 0, "failed": 0}


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 9) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [p for p, k in zip(pairs, keep) if k])


@st.composite
def trees(draw, min_n: int = 1, max_n: int = 12) -> Graph:
    n = draw(st.integers(min_n, max_n))
    seq = draw(st.lists(st.integers(0, n - 1), min_size=max(n - 2, 0), max_size=max(n - 2, 0)))
    return prufer_decode(seq, n)


@st.composite
def graphs_with_set(draw, max_n: int = 9) -> tuple[Graph, int]:
    g = draw(graphs(max_n=max_n))
    mask = draw(st.integers(0, (1 << g.n) - 1))
    return g, mask


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {name}: {detail}")


@pytest.fixture
def record():
    def _record(name: str, passed: bool, detail: str) -> None:
        ACCEPTANCE.append((name, passed, detail))
        print(f"{'PASS' if passed else 'FAIL'}  {name}: {detail}")

    return _record
