import itertools

import pytest
from hypothesis import strategies as st

from signed_arboricity.core import SignedGraph
from signed_arboricity.oracle import rotation_from_faces
from signed_arboricity.planar import NearTriangulation

K4_FACES = [(0, 1, 2), (0, 3, 1), (0, 2, 3), (1, 3, 2)]
# apexes 0 and 5 over the equator 1-2-3-4
OCTAHEDRON_FACES = [
    (0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 1),
    (5, 2, 1), (5, 3, 2), (5, 4, 3), (5, 1, 4),
]


def edges_of(faces):
    return sorted({tuple(sorted((f[k], f[(k + 1) % len(f)]))) for f in faces for k in range(len(f))})


def plane(faces, n, outer, signs=None):
    """NearTriangulation from oriented faces; ``signs`` maps edges to -1 where negative."""
    signs = signs or {}
    g = SignedGraph.from_edges(n, [(u, v, signs.get((u, v), 1)) for u, v in edges_of(faces)])
    return NearTriangulation(g, rotation_from_faces(faces, n).with_outer(outer))


def triangle(s_xy=1, s_yz=1, s_zx=1):
    return SignedGraph.from_edges(3, [(0, 1, s_xy), (1, 2, s_yz), (0, 2, s_zx)])


def complete(n, sign=1):
    return SignedGraph.from_edges(n, [(u, v, sign) for u, v in itertools.combinations(range(n), 2)])


@pytest.fixture
def k4():
    return plane(K4_FACES, 4, (0, 1, 2))


@pytest.fixture
def octahedron():
    return plane(OCTAHEDRON_FACES, 6, (0, 1, 2))


@st.composite
def signed_graphs(draw, min_vertices=1, max_vertices=7):
    n = draw(st.integers(min_vertices, max_vertices))
    pairs = list(itertools.combinations(range(n), 2))
    choice = draw(st.lists(st.sampled_from((0, 1, -1)), min_size=len(pairs), max_size=len(pairs)))
    return SignedGraph.from_edges(n, [(u, v, s) for (u, v), s in zip(pairs, choice) if s])


@st.composite
def colored_graphs(draw, max_vertices=7, max_n=5):
    g = draw(signed_graphs(max_vertices=max_vertices))
    n = draw(st.integers(1, max_n))
    k = n // 2
    values = ([0] if n % 2 else []) + [x for i in range(1, k + 1) for x in (i, -i)]
    colors = draw(st.lists(st.sampled_from(values), min_size=g.vertex_count, max_size=g.vertex_count))
    return g, n, dict(enumerate(colors))


# one line per acceptance criterion, echoed at the end of the run
ACCEPTANCE: list[str] = []


def record(criterion: str, passed: bool, detail: str) -> str:
    line = f"[{'PASS' if passed else 'FAIL'}] {criterion}: {detail}"
    ACCEPTANCE.append(line)
    print(line)
    return line


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)
