"""Switching, switching equivalence and balance of signed graphs."""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping

from .core import Coloring, Edge, SignedGraph, edge_key
from .errors import UnknownVertex


def switch_set(g: SignedGraph, s: Iterable[int]) -> SignedGraph:
    """Negate every edge with exactly one end in ``s``."""
    s = set(s)
    for v in s:
        if v not in g:
            raise UnknownVertex(v)
    signs = {(u, v): (-sg if (u in s) != (v in s) else sg) for u, v, sg in g.signed_edges()}
    return SignedGraph(g.vertices, signs)


def switch_vertex(g: SignedGraph, u: int) -> SignedGraph:
    return switch_set(g, [u])


def transfer_coloring(c: Coloring, s: Iterable[int]) -> Coloring:
    """Negate the colors on ``s``.

    A tree-coloring of ``g`` becomes a tree-coloring of ``switch_set(g, s)``.
    """
    s = set(s)
    return Coloring(c.n, {v: -x if v in s else x for v, x in c.colors.items()})


@dataclass(frozen=True)
class BalanceResult:
    """Outcome of :func:`is_balanced`.

    On success ``potential`` maps each vertex to +1/-1 with
    ``sign(uv) == potential[u] * potential[v]`` on every edge.  On failure
    ``witness`` is a cycle with an odd number of negative edges.
    """

    balanced: bool
    potential: Mapping[int, int] | None = None
    witness: list[int] | None = None

    def __bool__(self) -> bool:
        return self.balanced


def _tree_path(parent: Mapping[int, int | None], depth: Mapping[int, int], u: int, w: int) -> list[int]:
    """Vertices on the BFS-tree path from u to w."""
    left, right = [u], [w]
    a, b = u, w
    while depth[a] > depth[b]:
        a = parent[a]
        left.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        right.append(b)
    while a != b:
        a, b = parent[a], parent[b]
        left.append(a)
        right.append(b)
    return left + right[-2::-1]


def is_balanced(g: SignedGraph) -> BalanceResult:
    """Decide balance by propagating a potential along BFS trees.

    Each component is rooted at its least vertex with potential +1.  The
    witness for an unbalanced graph is the fundamental cycle of the first
    violating non-tree edge met in BFS order.
    """
    theta: dict[int, int] = {}
    parent: dict[int, int | None] = {}
    depth: dict[int, int] = {}
    for comp in g.components():
        root = comp[0]
        theta[root], parent[root], depth[root] = 1, None, 0
        queue = deque([root])
        order = []
        while queue:
            u = queue.popleft()
            order.append(u)
            for w in g.neighbors(u):
                if w not in theta:
                    theta[w] = theta[u] * g.sign(u, w)
                    parent[w], depth[w] = u, depth[u] + 1
                    queue.append(w)
        for u in order:
            for w in g.neighbors(u):
                if g.sign(u, w) != theta[u] * theta[w]:
                    return BalanceResult(False, witness=_tree_path(parent, depth, u, w))
    return BalanceResult(True, potential=theta)


def negative_count(g: SignedGraph, cycle: list[int]) -> int:
    return sum(1 for a, b in zip(cycle, cycle[1:] + cycle[:1]) if g.sign(a, b) < 0)


def signature_from_potential(edges: Iterable[Edge], theta: Mapping[int, int], vertices: Iterable[int] | None = None) -> SignedGraph:
    """Signed graph with ``sign(uv) = theta[u] * theta[v]``; always balanced.

    The vertex set defaults to the keys of ``theta``.
    """
    verts = set(theta) if vertices is None else set(vertices)
    signs = {edge_key(u, v): theta[u] * theta[v] for u, v in edges}
    return SignedGraph(verts, signs)


def switching_orbit_sample(g: SignedGraph, count: int, seed: int) -> list[SignedGraph]:
    """``count`` graphs switching equivalent to ``g``, each from a random vertex set."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        s = [v for v in g.vertices if rng.random() < 0.5]
        out.append(switch_set(g, s))
    return out
