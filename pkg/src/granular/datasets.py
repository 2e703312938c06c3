"""Small worked networks used in docs and golden tests."""

from __future__ import annotations

from .graph import DistanceMatrix, Graph
from .zerodiv import gamma_boolean, gamma_zn

CUSTOMER_LABELS = ("c1", "c2", "c3", "c4", "c5", "c6", "c7")
CUSTOMER_ROWS = (
    (0, 3, 2, 1, 2, 2, 3),
    (3, 0, 1, 2, 1, 3, 2),
    (2, 1, 0, 1, 2, 2, 1),
    (1, 2, 1, 0, 1, 1, 2),
    (2, 1, 2, 1, 0, 2, 1),
    (2, 3, 2, 1, 2, 0, 3),
    (3, 2, 1, 2, 1, 3, 0),
)

# opinion vectors over (taxation, healthcare, education)
POLITICAL_OPINIONS = {
    "David": "101",
    "Sarah": "010",
    "Emily": "110",
    "Maria": "001",
    "John": "100",
    "Jessica": "011",
}

# collaboration network of Gamma(Z_12): person -> ring element
COLLABORATION_ELEMENTS = {
    "Herry": 2,
    "Alice": 6,
    "Mark": 3,
    "Bob": 4,
    "Ella": 9,
    "Zoe": 8,
    "Jia": 10,
}


def customer_matrix() -> DistanceMatrix:
    return DistanceMatrix(CUSTOMER_LABELS, CUSTOMER_ROWS)


def _relabel(g: Graph, names: dict[str, str]) -> Graph:
    return Graph(tuple(names[lab] for lab in g.labels), g.adjacency)


def political_network() -> Graph:
    """Gamma(Z_2^3) with each opinion vector replaced by its holder's name."""
    g, _ = gamma_boolean(3)
    by_word = {w: name for name, w in POLITICAL_OPINIONS.items()}
    return _relabel(g, by_word)


def collaboration_network() -> Graph:
    """Gamma(Z_12) with ring elements replaced by employee names."""
    g, _ = gamma_zn(12)
    by_element = {str(e): name for name, e in COLLABORATION_ELEMENTS.items()}
    return _relabel(g, by_element)


def coworker_path() -> Graph:
    """Five coworkers joined in a path of past collaborations."""
    return Graph.from_edges(
        ("Sarah", "John", "Emily", "Michael", "Ania"),
        [(0, 1), (1, 2), (2, 3), (3, 4)],
    )
