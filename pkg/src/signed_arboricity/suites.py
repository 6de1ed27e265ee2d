"""Seeded property suites run by ``signed-arboricity property``.

Each suite draws ``count`` instances from per-case seeds derived from the
run seed, and returns one :class:`Case` per instance.  A failing case keeps
the offending graph so the CLI can dump it for replay.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

from .color import WAGNER_EDGES, pin_outer, tree_color_near_triangulation, tree_color_wagner, uniform_lists, wagner_graph
from .core import SignedGraph, is_signed_tree_coloring, va_upper_check
from .errors import SignedGraphError
from .k5 import decompose, va_signed_upper3
from .oracle import (
    generate_balanced,
    generate_k5_free,
    generate_triangulation,
    oracle_va,
    oracle_va_unsigned,
    random_signed_graph,
)
from .planar import NearTriangulation, RotationSystem
from .switch import switching_orbit_sample


@dataclass
class Case:
    index: int
    seed: int
    passed: bool
    detail: str = ""
    graph: SignedGraph | None = field(default=None, repr=False)
    rotation: RotationSystem | None = field(default=None, repr=False)


def small_signed_graph(seed: int, balanced_share: float = 0.5) -> SignedGraph:
    """At most 8 vertices and 14 edges, at least as many edges as vertices when room allows."""
    rng = random.Random(seed)
    n = rng.randint(4, 8)
    m = rng.randint(n, min(14, n * (n - 1) // 2))
    g = random_signed_graph(n, m, seed)
    if rng.random() < balanced_share:
        g = generate_balanced(g.edges(), seed, n)
    return g


def _switching(seed: int) -> tuple[bool, str, SignedGraph, None]:
    g = small_signed_graph(seed)
    va = oracle_va(g, 4).va
    orbit = [oracle_va(h, 4).va for h in switching_orbit_sample(g, 3, seed)]
    return all(v == va for v in orbit), f"va={va} orbit={orbit}", g, None


def _allpositive(seed: int) -> tuple[bool, str, SignedGraph, None]:
    g = small_signed_graph(seed).all_positive()
    signed = oracle_va(g, 4).va
    unsigned = oracle_va_unsigned(g.edges(), 4, g.vertex_count)
    return signed == unsigned, f"signed={signed} unsigned={unsigned}", g, None


def _triangulation(seed: int) -> tuple[bool, str, SignedGraph, RotationSystem]:
    rng = random.Random(seed)
    n = rng.randint(4, 14)
    edges, rot = generate_triangulation(n, rng.randint(0, 3 * n), seed)
    g = generate_balanced(edges, seed, n)
    nt = NearTriangulation(g, rot)
    lists = uniform_lists(g.vertices, 3)
    for v in nt.outer[:2]:
        lists[v] = frozenset([rng.choice((-1, 0, 1))])
    c = tree_color_near_triangulation(nt, pin_outer(nt, lists))
    ok = va_upper_check(g, c, 3)
    detail = f"|V|={n}"
    if ok and n <= 10:
        va = oracle_va(g, 3).va
        ok = va <= 3
        detail += f" oracle va={va}"
    return ok, detail, g, rot


def _k5(seed: int) -> tuple[bool, str, SignedGraph, None]:
    rng = random.Random(seed)
    n, edges = generate_k5_free(rng.randint(1, 5), seed)
    g = generate_balanced(edges, seed, n)
    d = decompose(g)
    c = va_signed_upper3(g, d)
    kinds = sorted(leaf.kind for leaf in d.leaves)
    return va_upper_check(g, c, 3) and d.reconstructs(g), f"|V|={n} leaves={kinds}", g, None


def _wagner(seed: int) -> tuple[bool, str, SignedGraph, None]:
    rng = random.Random(seed)
    w = wagner_graph([rng.choice((1, -1)) for _ in WAGNER_EDGES])
    u, v = WAGNER_EDGES[rng.randrange(len(WAGNER_EDGES))]
    pool = list(range(-3, 4))
    lists = {x: frozenset(rng.sample(pool, 3)) for x in w.vertices}
    alpha, beta = rng.choice(pool), rng.choice(pool)
    c = tree_color_wagner(w, (u, v, alpha, beta), lists)
    ok = is_signed_tree_coloring(w, c) and c[u] == alpha and c[v] == beta
    ok = ok and all(c[x] in lists[x] for x in w.vertices if x not in (u, v))
    return ok, f"pin={u}-{v} ({alpha}, {beta})", w, None


SUITES: dict[str, Callable[[int], tuple]] = {
    "switching": _switching,
    "allpositive": _allpositive,
    "triangulation": _triangulation,
    "k5": _k5,
    "wagner": _wagner,
}


def run_suite(name: str, count: int, seed: int) -> list[Case]:
    check = SUITES[name]
    rng = random.Random(seed)
    cases = []
    for index in range(count):
        case_seed = rng.randrange(2**31)
        try:
            ok, detail, g, rot = check(case_seed)
            cases.append(Case(index, case_seed, ok, detail, None if ok else g, None if ok else rot))
        except SignedGraphError as exc:
            cases.append(Case(index, case_seed, False, f"{type(exc).__name__}: {exc}"))
    return cases
