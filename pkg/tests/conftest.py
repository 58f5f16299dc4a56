import pytest

from hyperbetti import Hypergraph

# filled by the acceptance suite; echoed after the run so the per-criterion
# pass/fail lines survive output capturing
ACCEPTANCE_RESULTS: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_RESULTS:
            terminalreporter.write_line(line)

# the running example: A={1,2,3}, B={2,3,4}, C={4,5}, D={6}
H0_INCIDENCES = [
    ("A", 1), ("A", 2), ("A", 3),
    ("B", 2), ("B", 3), ("B", 4),
    ("C", 4), ("C", 5),
    ("D", 6),
]

H0_HIF = b"""{
  "incidences": [
    {"edge": "A", "node": "1"}, {"edge": "A", "node": "2"}, {"edge": "A", "node": "3"},
    {"edge": "B", "node": "2"}, {"edge": "B", "node": "3"}, {"edge": "B", "node": "4"},
    {"edge": "C", "node": "4"}, {"edge": "C", "node": "5"},
    {"edge": "D", "node": "6"}
  ]
}
"""

HOLLOW_TRIANGLE = [("ab", "a"), ("ab", "b"), ("bc", "b"), ("bc", "c"), ("ac", "a"), ("ac", "c")]


@pytest.fixture
def h0() -> Hypergraph:
    return Hypergraph(H0_INCIDENCES, name="H0")


@pytest.fixture
def hollow_triangle() -> Hypergraph:
    return Hypergraph(HOLLOW_TRIANGLE)
