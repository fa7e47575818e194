from pathlib import Path

import pytest

import wtoll as w

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def corpus():
    """Every connected graph on 1..7 vertices, one per isomorphism class."""
    lines = (DATA / "connected_upto7.g6").read_text().splitlines()
    graphs = [w.parse_graph6(line) for line in lines]
    assert len(graphs) == 996
    return graphs


@pytest.fixture(scope="session")
def corpus_small(corpus):
    """The n <= 5 slice (31 graphs), for tests that recheck with oracles."""
    return [g for g in corpus if g.n <= 5]
