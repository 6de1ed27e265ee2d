"""Exhaustive vertex-arboricity oracles and random instance generators.

The oracles are deliberately naive: they exist to cross-check the
constructive colorings on small graphs and never call into
:mod:`signed_arboricity.color`.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .color import WAGNER_EDGES
from .core import ColorDomain, Coloring, Edge, RollbackDSU, SignedGraph, edge_key, in_class, is_signed_tree_coloring
from .errors import Exhausted, OracleCapExceeded
from .planar import RotationSystem
from .switch import signature_from_potential

MAX_VERTICES = 12
MAX_COLORS = 8


@dataclass(frozen=True)
class OracleResult:
    va: int
    witness: Coloring
    colorings_checked: int


def _check_caps(vertex_count: int, n_max: int, max_vertices: int) -> None:
    if vertex_count > max_vertices:
        raise OracleCapExceeded(f"{vertex_count} vertices exceeds the oracle cap of {max_vertices}")
    if n_max < 1 or n_max > MAX_COLORS:
        raise OracleCapExceeded(f"n_max must lie in 1..{MAX_COLORS}, got {n_max}")


def _search_pruned(g: SignedGraph, n: int) -> tuple[dict[int, int] | None, int]:
    values = ColorDomain(n).values
    order = list(g.vertices)
    rank = {v: k for k, v in enumerate(order)}
    earlier = [[(w, g.sign(v, w)) for w in g.neighbors(v) if rank[w] < rank[v]] for v in order]
    dsu = RollbackDSU(order)
    colors: dict[int, int] = {}
    checked = 0

    def place(k: int) -> bool:
        nonlocal checked
        if k == len(order):
            return True
        v = order[k]
        # global negation preserves tree-colorings, so the first vertex may stay non-negative
        cands = [x for x in values if x >= 0] if k == 0 else values
        for x in cands:
            checked += 1
            mark = dsu.mark()
            if all(not in_class(x, colors[w], s) or dsu.union(v, w) for w, s in earlier[k]):
                colors[v] = x
                if place(k + 1):
                    return True
                del colors[v]
            dsu.rollback(mark)
        return False

    return (dict(colors) if place(0) else None), checked


def _search_exhaustive(g: SignedGraph, n: int) -> tuple[dict[int, int] | None, int]:
    values = ColorDomain(n).values
    checked = 0
    for combo in itertools.product(values, repeat=g.vertex_count):
        checked += 1
        colors = dict(zip(g.vertices, combo))
        if is_signed_tree_coloring(g, colors):
            return colors, checked
    return None, checked


def oracle_va(g: SignedGraph, n_max: int = 4, *, prune: bool = True, max_vertices: int = MAX_VERTICES) -> OracleResult:
    """Signed vertex arboricity by exhaustive search over M_1, M_2, ..., M_{n_max}.

    With ``prune=False`` every coloring in ``M_n^V`` is generated and handed
    to the checker; this is the slow, independent cross-check of the pruned
    search.  ``colorings_checked`` counts partial assignments tried (pruned)
    or complete colorings examined (exhaustive).
    """
    _check_caps(g.vertex_count, n_max, max_vertices)
    search = _search_pruned if prune else _search_exhaustive
    total = 0
    for n in range(1, n_max + 1):
        colors, checked = search(g, n)
        total += checked
        if colors is not None:
            return OracleResult(n, Coloring(n, colors), total)
    raise Exhausted(f"no signed tree-coloring with at most {n_max} colors")


def oracle_va_unsigned(edges: Iterable[Edge], k_max: int, vertex_count: int | None = None, *, max_vertices: int = MAX_VERTICES) -> int:
    """Least k such that the vertices split into k induced forests."""
    edges = [edge_key(u, v) for u, v in edges]
    if vertex_count is None:
        vertex_count = 1 + max((max(e) for e in edges), default=-1)
    _check_caps(vertex_count, k_max, max_vertices)
    adj: dict[int, set[int]] = {v: set() for v in range(vertex_count)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    part: dict[int, int] = {}

    def closes_cycle(v: int, k: int) -> bool:
        # v closes a cycle iff two of its class-k neighbours are already connected within class k
        mates = [w for w in adj[v] if part.get(w) == k]
        seen: set[int] = set()
        for m in mates:
            if m in seen:
                return True
            stack, comp = [m], {m}
            while stack:
                u = stack.pop()
                for w in adj[u]:
                    if part.get(w) == k and w not in comp:
                        comp.add(w)
                        stack.append(w)
            seen |= comp
        return False

    def place(v: int, k_total: int, used: int) -> bool:
        if v == vertex_count:
            return True
        for k in range(min(used + 1, k_total)):
            if not closes_cycle(v, k):
                part[v] = k
                if place(v + 1, k_total, max(used, k + 1)):
                    return True
                del part[v]
        return False

    for k in range(1, k_max + 1):
        part.clear()
        if place(0, k, 0):
            return k
    raise Exhausted(f"vertex arboricity exceeds {k_max}")


# -- generators ------------------------------------------------------------------


def rotation_from_faces(faces: Sequence[Sequence[int]], vertex_count: int) -> RotationSystem:
    """Rotation system of a plane graph given by all of its faces, consistently oriented."""
    succ: dict[int, dict[int, int]] = {v: {} for v in range(vertex_count)}
    for f in faces:
        for k, v in enumerate(f):
            succ[v][f[(k + 1) % len(f)]] = f[k - 1]
    rotation = {}
    for v in range(vertex_count):
        start = min(succ[v])
        seq = [start]
        while succ[v][seq[-1]] != start:
            seq.append(succ[v][seq[-1]])
        rotation[v] = tuple(seq)
    return RotationSystem(rotation)


def generate_triangulation(vertex_count: int, flips: int, seed: int) -> tuple[list[Edge], RotationSystem]:
    """Random triangulation: stack vertices into random faces of K3, then flip random edges.

    A flip is skipped when it would create a parallel edge; at most
    ``10 * flips`` attempts are made.  The outer face is the first face of the
    final face list.
    """
    if vertex_count < 3:
        raise ValueError("a triangulation needs at least three vertices")
    rng = random.Random(seed)
    # oriented faces, all with the same orientation
    faces: list[tuple[int, int, int]] = [(0, 1, 2), (0, 2, 1)]
    for w in range(3, vertex_count):
        a, b, c = faces.pop(rng.randrange(len(faces)))
        faces += [(a, b, w), (b, c, w), (c, a, w)]

    done = attempts = 0
    while done < flips and attempts < 10 * flips and vertex_count > 3:
        attempts += 1
        edges = sorted({edge_key(f[k], f[(k + 1) % 3]) for f in faces for k in range(3)})
        u, v = edges[rng.randrange(len(edges))]
        # faces (a, b, c) and (b, a, d) on either side of the edge
        left = right = None
        for idx, f in enumerate(faces):
            for k in range(3):
                if (f[k], f[(k + 1) % 3]) == (u, v):
                    left = (idx, f[(k + 2) % 3])
                elif (f[k], f[(k + 1) % 3]) == (v, u):
                    right = (idx, f[(k + 2) % 3])
        c, d = left[1], right[1]
        if c == d or edge_key(c, d) in edges:
            continue
        for idx in sorted((left[0], right[0]), reverse=True):
            faces.pop(idx)
        faces += [(u, d, c), (d, v, c)]
        done += 1

    rot = rotation_from_faces(faces, vertex_count)
    edges = sorted({edge_key(f[k], f[(k + 1) % 3]) for f in faces for k in range(3)})
    return edges, rot.with_outer(faces[0])


def generate_balanced(edges: Iterable[Edge], seed: int, vertex_count: int | None = None) -> SignedGraph:
    """Balanced signature from a uniformly random vertex potential."""
    edges = [edge_key(u, v) for u, v in edges]
    if vertex_count is None:
        vertex_count = 1 + max((max(e) for e in edges), default=-1)
    rng = random.Random(seed)
    theta = {v: rng.choice((1, -1)) for v in range(vertex_count)}
    return signature_from_potential(edges, theta)


def random_signed_graph(vertex_count: int, edge_count: int, seed: int) -> SignedGraph:
    """Uniform random simple graph with the given size and independent random signs."""
    rng = random.Random(seed)
    pairs = list(itertools.combinations(range(vertex_count), 2))
    chosen = rng.sample(pairs, min(edge_count, len(pairs)))
    return SignedGraph.from_edges(vertex_count, [(u, v, rng.choice((1, -1))) for u, v in sorted(chosen)])


def generate_k5_free(pieces: int, seed: int, *, min_piece: int = 4, max_piece: int = 7, wagner_rate: float = 0.3) -> tuple[int, list[Edge]]:
    """Clique-sum of random triangulations and Wagner graphs.

    Each new piece is glued onto a random edge of the current graph, or, for
    triangulation pieces, onto a random triangle with probability 1/2.
    Returns ``(vertex_count, edges)``.
    """
    rng = random.Random(seed)
    edges: set[Edge] = set()
    count = 0

    def new_piece() -> tuple[str, int, list[Edge]]:
        if rng.random() < wagner_rate:
            return "wagner", 8, list(WAGNER_EDGES)
        size = rng.randint(min_piece, max_piece)
        e, _ = generate_triangulation(size, rng.randint(0, 2 * size), rng.randrange(2**31))
        return "triangulation", size, e

    for p in range(pieces):
        kind, size, piece = new_piece()
        if p == 0:
            edges.update(piece)
            count = size
            continue
        triangles = sorted(
            (a, b, c) for a, b in edges for c in range(b + 1, count)
            if edge_key(a, c) in edges and edge_key(b, c) in edges
        )
        piece_adj: dict[int, set[int]] = {}
        for u, v in piece:
            piece_adj.setdefault(u, set()).add(v)
            piece_adj.setdefault(v, set()).add(u)
        if kind == "triangulation" and triangles and rng.random() < 0.5:
            host = triangles[rng.randrange(len(triangles))]
            local = sorted((a, b, c) for a, b in piece for c in piece_adj[b] if c > b and c in piece_adj[a])
            glue = local[rng.randrange(len(local))]
        else:
            host = sorted(edges)[rng.randrange(len(edges))]
            glue = piece[rng.randrange(len(piece))]
        if rng.random() < 0.5:
            host = host[::-1]
        mapping = dict(zip(glue, host))
        for v in range(size):
            if v not in mapping:
                mapping[v] = count
                count += 1
        edges.update(edge_key(mapping[u], mapping[v]) for u, v in piece)
    return count, sorted(edges)
