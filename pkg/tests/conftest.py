import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hypertutte import Hypergraph, Multigraph, build_bipartite  # noqa: E402
from hypertutte.corpus import generate_corpus  # noqa: E402

# criterion number -> (title, passed, summary); filled by test_acceptance
ACCEPTANCE: dict[int, tuple[str, bool, str]] = {}

CORPUS_SEED = 20240611
SMALL_CORPUS_SEED = 777


@pytest.fixture
def tri():
    return Hypergraph.build(["v1", "v2", "v3"], {"a": ["v1", "v2"], "b": ["v2", "v3"], "c": ["v1", "v3"]})


@pytest.fixture
def one():
    return Hypergraph.build(["v1", "v2", "v3"], {"e": ["v1", "v2", "v3"]})


@pytest.fixture
def parallel():
    return Hypergraph.build(["v1", "v2", "v3"], {"e1": ["v1", "v2", "v3"], "e2": ["v1", "v2", "v3"]})


@pytest.fixture
def triangle_graph():
    return Multigraph.build(["v1", "v2", "v3"], [("v1", "v2"), ("v2", "v3"), ("v3", "v1")])


@pytest.fixture(scope="session")
def corpus():
    """Hypergraphs with |V| <= 7 and |E| <= 6, paired with their incidence graphs."""
    return [(H, build_bipartite(H)) for H in generate_corpus(200, CORPUS_SEED, 7, 6)]


@pytest.fixture(scope="session")
def small_corpus():
    """Hypergraphs with |V| <= 6 and |E| <= 5."""
    return [(H, build_bipartite(H)) for H in generate_corpus(200, SMALL_CORPUS_SEED, 6, 5)]


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        title, ok, summary = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k} [{'PASS' if ok else 'FAIL'}] {title}: {summary}")
