"""Signed graphs, the signed color sets M_n, class subgraphs and tree-coloring checks.

A signed graph carries a sign in {+1, -1} on every edge.  A coloring maps
vertices into

    M_n = {+-1, ..., +-k}        if n = 2k
    M_n = {0, +-1, ..., +-k}     if n = 2k + 1

and the class subgraph of a value ``i`` collects the vertices colored ``i``
or ``-i`` together with every edge ``uv`` with ``c(u) == sign(uv) * c(v)``
whose endpoints lie in that class.  That single equation covers positive
edges (equal colors) and negative edges (opposite colors), and for ``i = 0``
it admits every edge between two 0-colored vertices regardless of sign.

A coloring is a signed tree-coloring when every class subgraph is a forest.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .errors import InvalidClass, InvalidColoring, InvalidGraph, UnknownVertex

Edge = tuple[int, int]


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def color_order_key(value: int) -> tuple[int, bool]:
    """Sort key for the canonical color order: 0, 1, -1, 2, -2, ..."""
    return (abs(value), value < 0)


def canonical_order(values: Iterable[int]) -> list[int]:
    return sorted(set(values), key=color_order_key)


class SignedGraph:
    """A simple undirected graph with a sign on every edge.

    Graphs read from files use the vertices ``0..vertex_count-1``; subgraphs
    produced by :meth:`subgraph` keep the labels of their parent so that
    colorings of pieces can be compared and merged directly.

    Instances are treated as immutable.
    """

    __slots__ = ("_vertices", "_signs", "_adj")

    def __init__(self, vertices: Iterable[int], signs: Mapping[Edge, int]):
        vs = tuple(sorted(set(int(v) for v in vertices)))
        vset = set(vs)
        norm: dict[Edge, int] = {}
        adj: dict[int, set[int]] = {v: set() for v in vs}
        for (u, v), s in signs.items():
            u, v = int(u), int(v)
            if u == v:
                raise InvalidGraph(f"self-loop at vertex {u}")
            if u not in vset or v not in vset:
                raise InvalidGraph(f"edge ({u}, {v}) uses an unknown vertex")
            if s not in (1, -1):
                raise InvalidGraph(f"edge ({u}, {v}) has sign {s!r}, expected +1 or -1")
            key = edge_key(u, v)
            if key in norm:
                raise InvalidGraph(f"parallel edge {key}")
            norm[key] = int(s)
            adj[u].add(v)
            adj[v].add(u)
        self._vertices = vs
        self._signs = norm
        self._adj = {v: tuple(sorted(nb)) for v, nb in adj.items()}

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable) -> "SignedGraph":
        """Build a graph on ``0..vertex_count-1``.

        ``edges`` holds ``(u, v)`` pairs (taken as positive) or ``(u, v, sign)``
        triples.
        """
        if vertex_count < 0:
            raise InvalidGraph("vertex_count must be non-negative")
        signs: dict[Edge, int] = {}
        for e in edges:
            if len(e) == 2:
                u, v, s = e[0], e[1], 1
            elif len(e) == 3:
                u, v, s = e
            else:
                raise InvalidGraph(f"bad edge entry {e!r}")
            key = edge_key(int(u), int(v))
            if key in signs:
                raise InvalidGraph(f"parallel edge {key}")
            signs[key] = s
        return cls(range(vertex_count), signs)

    # -- basic queries -------------------------------------------------

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._vertices

    @property
    def vertex_count(self) -> int:
        return len(self._vertices)

    @property
    def edge_count(self) -> int:
        return len(self._signs)

    @property
    def signs(self) -> Mapping[Edge, int]:
        return dict(self._signs)

    def edges(self) -> list[Edge]:
        return sorted(self._signs)

    def signed_edges(self) -> list[tuple[int, int, int]]:
        return [(u, v, self._signs[(u, v)]) for u, v in sorted(self._signs)]

    def __contains__(self, v: object) -> bool:
        return v in self._adj

    def _require(self, v: int) -> None:
        if v not in self._adj:
            raise UnknownVertex(v)

    def has_edge(self, u: int, v: int) -> bool:
        return edge_key(u, v) in self._signs

    def sign(self, u: int, v: int) -> int:
        try:
            return self._signs[edge_key(u, v)]
        except KeyError:
            raise InvalidGraph(f"no edge between {u} and {v}") from None

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._require(v)
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    # -- derived graphs --------------------------------------------------

    def subgraph(self, vertices: Iterable[int]) -> "SignedGraph":
        """Induced subgraph, keeping vertex labels and signs."""
        keep = set(vertices)
        for v in keep:
            self._require(v)
        signs = {e: s for e, s in self._signs.items() if e[0] in keep and e[1] in keep}
        return SignedGraph(keep, signs)

    def union(self, other: "SignedGraph") -> "SignedGraph":
        signs = dict(self._signs)
        for e, s in other._signs.items():
            if signs.get(e, s) != s:
                raise InvalidGraph(f"edge {e} carries different signs in the two graphs")
            signs[e] = s
        return SignedGraph(set(self._vertices) | set(other._vertices), signs)

    def with_signs(self, signs: Mapping[Edge, int]) -> "SignedGraph":
        return SignedGraph(self._vertices, {edge_key(*e): s for e, s in signs.items()})

    def all_positive(self) -> "SignedGraph":
        return SignedGraph(self._vertices, {e: 1 for e in self._signs})

    def components(self) -> list[list[int]]:
        """Connected components, each listed in BFS order from its least vertex."""
        seen: set[int] = set()
        comps = []
        for root in self._vertices:
            if root in seen:
                continue
            seen.add(root)
            order = [root]
            queue = deque([root])
            while queue:
                u = queue.popleft()
                for w in self._adj[u]:
                    if w not in seen:
                        seen.add(w)
                        order.append(w)
                        queue.append(w)
            comps.append(order)
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    # -- dunder ------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SignedGraph):
            return NotImplemented
        return self._vertices == other._vertices and self._signs == other._signs

    def __hash__(self) -> int:
        return hash((self._vertices, frozenset(self._signs.items())))

    def __repr__(self) -> str:
        neg = sum(1 for s in self._signs.values() if s < 0)
        return f"SignedGraph(|V|={self.vertex_count}, |E|={self.edge_count}, negative={neg})"


class ColorDomain:
    """The color set M_n, iterated in canonical order (0 first, then 1, -1, 2, -2, ...)."""

    __slots__ = ("n", "values")

    def __init__(self, n: int):
        if n < 1:
            raise InvalidColoring(f"color domain size must be positive, got {n}")
        k = n // 2
        values = [0] if n % 2 else []
        for i in range(1, k + 1):
            values += [i, -i]
        self.n = n
        self.values = tuple(values)

    @property
    def has_zero(self) -> bool:
        return self.n % 2 == 1

    @property
    def max_abs(self) -> int:
        return self.n // 2

    def __contains__(self, value: object) -> bool:
        return isinstance(value, int) and abs(value) <= self.max_abs and (value != 0 or self.has_zero)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ColorDomain) and other.n == self.n

    def __hash__(self) -> int:
        return hash(self.n)

    def __repr__(self) -> str:
        return f"ColorDomain(n={self.n}, values={list(self.values)})"


def smallest_domain(values: Iterable[int]) -> int:
    """Least n with every value in M_n."""
    values = list(values)
    if not values:
        return 1
    k = max(abs(v) for v in values)
    if k == 0:
        return 1
    return 2 * k + (1 if 0 in values else 0)


@dataclass(frozen=True)
class Coloring:
    n: int
    colors: Mapping[int, int]

    def __post_init__(self):
        dom = ColorDomain(self.n)
        colors = {int(v): int(x) for v, x in self.colors.items()}
        for v, x in colors.items():
            if x not in dom:
                raise InvalidColoring(f"color {x} of vertex {v} is not in M_{self.n}")
        object.__setattr__(self, "colors", colors)

    @classmethod
    def fit(cls, colors: Mapping[int, int]) -> "Coloring":
        """Wrap an assignment in the smallest domain that contains it."""
        return cls(smallest_domain(colors.values()), colors)

    @property
    def domain(self) -> ColorDomain:
        return ColorDomain(self.n)

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    def __len__(self) -> int:
        return len(self.colors)

    def used_classes(self) -> list[int]:
        return sorted({abs(x) for x in self.colors.values()})

    def negated(self) -> "Coloring":
        return Coloring(self.n, {v: -x for v, x in self.colors.items()})

    def restrict(self, vertices: Iterable[int]) -> "Coloring":
        return Coloring(self.n, {v: self.colors[v] for v in vertices})

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.colors.items())))


def _assignment(c) -> Mapping[int, int]:
    return c.colors if isinstance(c, Coloring) else c


def _require_total(g: SignedGraph, colors: Mapping[int, int]) -> None:
    missing = [v for v in g.vertices if v not in colors]
    if missing:
        raise InvalidColoring(f"coloring misses vertices {missing[:5]}")


def in_class(cu: int, cv: int, sign: int) -> bool:
    """Whether an edge with endpoint colors ``cu``, ``cv`` lies in a class subgraph."""
    return cu == sign * cv


@dataclass(frozen=True)
class ClassSubgraph:
    class_value: int
    vertices: frozenset
    edges: frozenset


def class_subgraph(g: SignedGraph, c, i: int) -> ClassSubgraph:
    """The class subgraph for the color pair ``{i, -i}``; ``i`` and ``-i`` give the same result."""
    colors = _assignment(c)
    _require_total(g, colors)
    i = abs(i)
    if isinstance(c, Coloring):
        dom = c.domain
        if i > dom.max_abs or (i == 0 and not dom.has_zero):
            raise InvalidClass(f"class {i} is not representable in M_{dom.n}")
    verts = frozenset(v for v in g.vertices if abs(colors[v]) == i)
    edges = frozenset(
        (u, v)
        for u, v, s in g.signed_edges()
        if abs(colors[u]) == i and in_class(colors[u], colors[v], s)
    )
    return ClassSubgraph(i, verts, edges)


class DisjointSet:
    """Union-find with path halving; elements are arbitrary hashables."""

    def __init__(self, elements: Iterable = ()):
        self.parent = {x: x for x in elements}

    def find(self, x):
        parent = self.parent
        if x not in parent:
            parent[x] = x
            return x
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a, b) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[rb] = ra
        return True


class RollbackDSU:
    """Union-find with undo, for depth-first searches.

    No path compression, so every :meth:`union` can be reverted in O(1) by
    :meth:`rollback`.
    """

    def __init__(self, elements: Iterable[int]):
        self.parent = {x: x for x in elements}
        self.size = {x: 1 for x in self.parent}
        self.history: list = []

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self.history.append((ra, rb))
        return True

    def mark(self) -> int:
        return len(self.history)

    def rollback(self, mark: int) -> None:
        while len(self.history) > mark:
            ra, rb = self.history.pop()
            self.parent[rb] = rb
            self.size[ra] -= self.size[rb]


def is_forest(vertices: Iterable[int], edges: Iterable[Edge]) -> bool:
    dsu = DisjointSet(vertices)
    return all(dsu.union(u, v) for u, v in edges)


def find_cycle(vertices: Iterable[int], edges: Iterable[Edge]) -> list[int] | None:
    """Return some cycle as a vertex list, or None for a forest."""
    adj: dict[int, list[int]] = {v: [] for v in vertices}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    parent: dict[int, int | None] = {}
    for root in sorted(adj):
        if root in parent:
            continue
        parent[root] = None
        stack = [root]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w == parent[u]:
                    continue
                if w in parent:
                    # back edge u-w closes a cycle through their common ancestor
                    path_u = [u]
                    while path_u[-1] != root:
                        path_u.append(parent[path_u[-1]])
                    path_w = [w]
                    seen = set(path_u)
                    while path_w[-1] not in seen:
                        path_w.append(parent[path_w[-1]])
                    meet = path_w[-1]
                    cycle = path_u[: path_u.index(meet) + 1]
                    return cycle + path_w[-2::-1]
                parent[w] = u
                stack.append(w)
    return None


def is_signed_tree_coloring(g: SignedGraph, c) -> bool:
    colors = _assignment(c)
    _require_total(g, colors)
    # An included edge joins two vertices of the same class, so one union-find
    # over all classes never merges components of different classes.
    dsu = DisjointSet(g.vertices)
    for u, v, s in g.signed_edges():
        if in_class(colors[u], colors[v], s) and not dsu.union(u, v):
            return False
    return True


def class_cycle(g: SignedGraph, c) -> tuple[int, list[int]] | None:
    """First class (by value) whose subgraph has a cycle, with that cycle."""
    colors = _assignment(c)
    for i in sorted({abs(x) for x in colors.values()}):
        sub = class_subgraph(g, colors, i)
        cyc = find_cycle(sub.vertices, sub.edges)
        if cyc is not None:
            return i, cyc
    return None


def is_proper_signed_coloring(g: SignedGraph, c) -> bool:
    colors = _assignment(c)
    _require_total(g, colors)
    return not any(in_class(colors[u], colors[v], s) for u, v, s in g.signed_edges())


def va_upper_check(g: SignedGraph, c, n: int) -> bool:
    """True iff ``c`` is a signed tree-coloring with values in M_n, so va(g) <= n."""
    colors = _assignment(c)
    dom = ColorDomain(n)
    if any(v not in colors or colors[v] not in dom for v in g.vertices):
        return False
    return is_signed_tree_coloring(g, colors)
