import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from widthlab.graphs import (
    Graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    enumerate_graphs,
    path_graph,
    star,
)


@pytest.fixture(scope="session")
def small_graphs():
    """All graphs on 1..5 vertices, one per isomorphism class."""
    out = []
    for n in range(1, 6):
        out.extend(enumerate_graphs(n))
    return out


@pytest.fixture(scope="session")
def zoo():
    return {
        "K1": complete_graph(1),
        "K2": complete_graph(2),
        "K3": complete_graph(3),
        "K4": complete_graph(4),
        "K5": complete_graph(5),
        "P3": path_graph(3),
        "P4": path_graph(4),
        "P5": path_graph(5),
        "C4": cycle_graph(4),
        "C5": cycle_graph(5),
        "C7": cycle_graph(7),
        "K33": complete_bipartite(3, 3),
        "star5": star(5),
        "null": Graph(0, ()),
    }
