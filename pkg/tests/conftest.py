import sys
from pathlib import Path

import pytest

from curvecone import Surface, build_complex

sys.path.insert(0, str(Path(__file__).parent))

_CACHE = {}


def complex_for(genus, marked):
    key = (genus, marked)
    if key not in _CACHE:
        _CACHE[key] = build_complex(Surface(genus, marked))
    return _CACHE[key]


@pytest.fixture(scope="session")
def s12():
    return complex_for(1, 2)


@pytest.fixture(scope="session")
def s2():
    return complex_for(2, 0)


@pytest.fixture(scope="session")
def s05():
    return complex_for(0, 5)


@pytest.fixture(scope="session")
def s11():
    return complex_for(1, 1)


@pytest.fixture(scope="session")
def s04():
    return complex_for(0, 4)


def orbit_by_structure(cx, vertices, edges):
    """Find an orbit by its canonical decorated-graph content."""
    for o in cx.orbits:
        decs = tuple((d.piece_genus, d.piece_marked) for d in o.graph.vertices)
        if decs == tuple(vertices) and o.graph.edges == tuple(edges):
            return o
    raise AssertionError(f"no orbit with vertices {vertices} edges {edges}")
