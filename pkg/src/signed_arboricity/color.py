"""Constructive list tree-colorings of signed graphs.

* :func:`tree_color_near_triangulation` -- balanced near-triangulation with two
  adjacent outer vertices precolored, lists of size >= 2 on the rest of the
  outer cycle and >= 3 inside.  Chords split the instance in two; otherwise the
  last outer vertex is peeled off as an ear.
* :func:`tree_color_triangle_rooted` -- same, but a whole triangle precolored.
* :func:`tree_color_wagner` -- the Wagner graph with one edge precolored.
* :func:`combine_colorings` -- glue two colorings along a shared K2 or K3.

Every public routine re-runs the tree-coloring checker on its output and raises
:class:`ColoringDefect` if it fails.
"""

from __future__ import annotations

from collections import deque
from typing import Callable, Iterable, Mapping, Sequence

from .core import (
    ColorDomain,
    Coloring,
    RollbackDSU,
    SignedGraph,
    canonical_order,
    in_class,
    is_signed_tree_coloring,
    smallest_domain,
)
from .errors import (
    BadPin,
    ColoringDefect,
    ColoringsDisagree,
    InvalidColoring,
    InvalidGraph,
    InvalidLists,
    NotBalanced,
    NotNearTriangulation,
    NotWagner,
    PrecolorInvalid,
    SharedCliqueMismatch,
)
from .planar import NearTriangulation, RotationSystem, ear_neighbors, find_chord
from .switch import is_balanced

ListAssignment = dict[int, frozenset[int]]


def normalize_lists(lists: Mapping[int, Iterable[int]]) -> ListAssignment:
    return {int(v): frozenset(int(x) for x in vals) for v, vals in lists.items()}


def uniform_lists(vertices: Iterable[int], n: int) -> ListAssignment:
    """Every vertex gets the full color set M_n."""
    values = frozenset(ColorDomain(n).values)
    return {v: values for v in vertices}


def _only(values: frozenset[int]) -> int:
    (x,) = values
    return x


def require_balanced(g: SignedGraph) -> None:
    res = is_balanced(g)
    if not res:
        raise NotBalanced(witness=res.witness)


def _certify(g: SignedGraph, colors: Mapping[int, int], lists: Mapping[int, frozenset[int]] | None, n: int | None = None) -> Coloring:
    if lists is not None:
        for v in g.vertices:
            if colors.get(v) not in lists[v]:
                raise ColoringDefect(f"vertex {v} got color {colors.get(v)} outside its list")
    if not is_signed_tree_coloring(g, colors):
        raise ColoringDefect("constructed coloring is not a signed tree-coloring")
    if n is not None and all(x in ColorDomain(n) for x in colors.values()):
        return Coloring(n, colors)
    return Coloring.fit(colors)


def _reach(g: SignedGraph, allowed: set[int], seeds: Iterable[int]) -> set[int]:
    seen = {s for s in seeds if s in allowed}
    queue = deque(seen)
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if w in allowed and w not in seen:
                seen.add(w)
                queue.append(w)
    return seen


# -- near-triangulations ------------------------------------------------------


def _check_nt_lists(vertices: Iterable[int], outer: Sequence[int], lists: Mapping[int, frozenset[int]]) -> None:
    outer_set = set(outer)
    for v in vertices:
        if v not in lists or not lists[v]:
            raise InvalidLists(f"vertex {v} has no list")
    for v in outer[:2]:
        if len(lists[v]) != 1:
            raise InvalidLists(f"outer vertex {v} must be precolored (list of size 1)")
    for v in outer[2:]:
        if len(lists[v]) < 2:
            raise InvalidLists(f"outer vertex {v} needs a list of size >= 2")
    for v in vertices:
        if v not in outer_set and len(lists[v]) < 3:
            raise InvalidLists(f"interior vertex {v} needs a list of size >= 3")


def _color_near_triangulation(
    g: SignedGraph,
    rot: RotationSystem,
    vertices: set[int],
    outer: list[int],
    lists: Mapping[int, frozenset[int]],
    observer: Callable[[set[int], list[int]], None] | None = None,
) -> dict[int, int]:
    """Color the sub-instance induced by ``vertices`` with outer cycle ``outer``.

    ``outer[0]`` and ``outer[1]`` carry singleton lists.  Ears are removed in a
    loop; only chord splits recurse.  ``observer`` sees every sub-instance.
    """
    vertices = set(vertices)
    outer = list(outer)
    lists = dict(lists)
    ears: list[tuple[int, int]] = []
    colors: dict[int, int] = {}

    while True:
        if observer is not None:
            observer(set(vertices), list(outer))
        n = len(outer)
        if n == 2:
            if vertices != set(outer):
                raise NotNearTriangulation("two-vertex instance with interior vertices")
            colors[outer[0]] = _only(lists[outer[0]])
            colors[outer[1]] = _only(lists[outer[1]])
            break

        chord = find_chord(outer, g)
        if chord is not None:
            i, j = chord[0] - 1, chord[1] - 1
            vi, vj = outer[i], outer[j]
            if i == 0:
                first = outer[: j + 1]
                second = [vi, vj] + outer[j + 1 :]
            else:
                first = outer[: i + 1] + outer[j:]
                second = [vj] + outer[i:j]
            open_first = [v for v in first if v not in (vi, vj)]
            side = _reach(g, vertices - {vi, vj}, open_first)
            if any(v in side for v in second[2:]):
                raise NotNearTriangulation(f"chord {vi}-{vj} does not separate the instance")
            first_colors = _color_near_triangulation(g, rot, side | {vi, vj}, first, lists, observer)
            pinned = dict(lists)
            pinned[vi] = frozenset([first_colors[vi]])
            pinned[vj] = frozenset([first_colors[vj]])
            colors.update(first_colors)
            colors.update(_color_near_triangulation(g, rot, vertices - side, second, pinned, observer))
            break

        v_n, v_1 = outer[-1], outer[0]
        around = ear_neighbors(v_n, rot, outer, vertices)
        inner = around[1:-1]
        if any(u in outer for u in inner):
            raise NotNearTriangulation(f"ear {v_n} has an outer neighbour inside its fan")
        forbidden = _only(lists[v_1]) * g.sign(v_1, v_n)
        choices = [x for x in canonical_order(lists[v_n]) if x != forbidden]
        if not choices:
            raise InvalidLists(f"no admissible color left for outer vertex {v_n}")
        gamma = choices[0]
        for u in inner:
            lists[u] = lists[u] - {gamma * g.sign(v_n, u)}
        ears.append((v_n, gamma))
        vertices.discard(v_n)
        outer = outer[:-1] + inner[::-1]

    for v, gamma in ears:
        colors[v] = gamma
    return colors


def tree_color_near_triangulation(
    nt: NearTriangulation,
    lists: Mapping[int, Iterable[int]],
    observer: Callable[[set[int], list[int]], None] | None = None,
) -> Coloring:
    """List tree-coloring of a balanced near-triangulation.

    The first two vertices of ``nt.outer`` must have singleton lists.
    ``observer(vertices, outer)`` is called on every sub-instance visited.
    """
    g = nt.graph
    require_balanced(g)
    lists = normalize_lists(lists)
    outer = list(nt.outer)
    _check_nt_lists(g.vertices, outer, lists)
    colors = _color_near_triangulation(g, nt.embedding, set(g.vertices), outer, lists, observer)
    return _certify(g, colors, lists)


def pin_outer(nt: NearTriangulation, lists: Mapping[int, Iterable[int]]) -> ListAssignment:
    """Shrink the lists of the first two outer vertices to their canonically first value."""
    out = normalize_lists(lists)
    for v in nt.outer[:2]:
        out[v] = frozenset([canonical_order(out[v])[0]])
    return out


# -- triangle-rooted variant -----------------------------------------------------


def triangle_precolor_ok(signs: Sequence[int], colors: Sequence[int]) -> bool:
    """Whether precoloring a bare triangle leaves every class subgraph acyclic.

    ``signs`` are the signs of ``xy, yz, zx`` and ``colors`` those of ``x, y, z``.
    """
    s_xy, s_yz, s_zx = signs
    a, b, c = colors
    return not (in_class(a, b, s_xy) and in_class(b, c, s_yz) and in_class(c, a, s_zx))


def _color_triangle_rooted(
    g: SignedGraph,
    rot: RotationSystem,
    vertices: set[int],
    outer: list[int],
    tri: tuple[int, int, int],
    lists: Mapping[int, frozenset[int]],
) -> dict[int, int]:
    x, y, z = tri
    tset = set(tri)
    rest = vertices - tset
    outer_rest = set(outer) - tset
    inside: set[int] = set()
    outside: set[int] = set()
    remaining = set(rest)
    while remaining:
        comp = _reach(g, rest, [min(remaining)])
        remaining -= comp
        (outside if comp & outer_rest else inside).update(comp)

    if inside and outside:
        colors = _color_triangle_rooted(g, rot, inside | tset, [x, y, z], tri, lists)
        colors.update(_color_triangle_rooted(g, rot, outside | tset, outer, tri, lists))
        return colors
    if outside:
        # T is an inner face; only a triangular outer face can trade places with it
        if len(outer) != 3:
            raise NotNearTriangulation("triangle is an inner face but the outer face is not a triangle")

    gamma = _only(lists[z])
    around = ear_neighbors(z, rot, [x, y, z], vertices)
    inner = around[1:-1]
    reduced = dict(lists)
    for u in inner:
        reduced[u] = lists[u] - {gamma * g.sign(z, u)}
    colors = _color_near_triangulation(g, rot, vertices - {z}, [x, y] + inner[::-1], reduced)
    colors[z] = gamma
    return colors


def tree_color_triangle_rooted(
    nt: NearTriangulation,
    tri: Sequence[int],
    precolor: Sequence[int],
    lists: Mapping[int, Iterable[int]],
) -> Coloring:
    """Extend a tree-coloring of triangle ``tri = (x, y, z)`` to the whole near-triangulation.

    Every vertex off the triangle needs a list of size at least 3.  If the
    triangle is an inner face, the outer face must itself be a triangle so that
    the two can swap roles.
    """
    g = nt.graph
    require_balanced(g)
    x, y, z = tri
    if len({x, y, z}) != 3 or not (g.has_edge(x, y) and g.has_edge(y, z) and g.has_edge(z, x)):
        raise PrecolorInvalid(f"{tuple(tri)} is not a triangle of the graph")
    signs = (g.sign(x, y), g.sign(y, z), g.sign(z, x))
    if not triangle_precolor_ok(signs, precolor):
        raise PrecolorInvalid(f"precolor {tuple(precolor)} makes the triangle a monochromatic cycle")
    lists = normalize_lists(lists)
    for v, col in zip((x, y, z), precolor):
        lists[v] = frozenset([int(col)])
    for v in g.vertices:
        if v not in (x, y, z) and len(lists.get(v, ())) < 3:
            raise InvalidLists(f"vertex {v} needs a list of size >= 3")
    colors = _color_triangle_rooted(g, nt.embedding, set(g.vertices), list(nt.outer), (x, y, z), lists)
    return _certify(g, colors, lists)


# -- Wagner graph ---------------------------------------------------------------

WAGNER_EDGES = tuple(sorted({(i, (i + 1) % 8) if i < (i + 1) % 8 else ((i + 1) % 8, i) for i in range(8)} | {(i, i + 4) for i in range(4)}))


def wagner_graph(signs: Sequence[int] | None = None) -> SignedGraph:
    """The Wagner graph on 0..7: the 8-cycle plus the four long diagonals ``i, i+4``."""
    if signs is None:
        signs = [1] * len(WAGNER_EDGES)
    return SignedGraph.from_edges(8, [(u, v, s) for (u, v), s in zip(WAGNER_EDGES, signs)])


def _is_wagner_labeling(g: SignedGraph, lab: Sequence[int]) -> bool:
    if len(lab) != 8 or set(lab) != set(g.vertices) or g.edge_count != 12:
        return False
    return all(g.has_edge(lab[u], lab[v]) for u, v in WAGNER_EDGES)


def find_wagner_labeling(g: SignedGraph) -> tuple[int, ...] | None:
    """Vertices of ``g`` listed as v_1..v_8 of the canonical Wagner graph, or None."""
    if g.vertex_count != 8 or g.edge_count != 12 or any(g.degree(v) != 3 for v in g.vertices):
        return None
    start = g.vertices[0]

    def extend(path: list[int]):
        if len(path) == 8:
            if g.has_edge(path[-1], path[0]) and _is_wagner_labeling(g, path):
                return tuple(path)
            return None
        for w in g.neighbors(path[-1]):
            if w not in path:
                found = extend(path + [w])
                if found:
                    return found
        return None

    return extend([start])


def _backtrack(g: SignedGraph, order: Sequence[int], lists: Mapping[int, frozenset[int]]) -> dict[int, int] | None:
    dsu = RollbackDSU(g.vertices)
    colors: dict[int, int] = {}

    def place(k: int) -> bool:
        if k == len(order):
            return True
        v = order[k]
        for x in canonical_order(lists[v]):
            mark = dsu.mark()
            ok = True
            for w in g.neighbors(v):
                if w in colors and in_class(x, colors[w], g.sign(v, w)) and not dsu.union(v, w):
                    ok = False
                    break
            if ok:
                colors[v] = x
                if place(k + 1):
                    return True
                del colors[v]
            dsu.rollback(mark)
        return False

    return colors if place(0) else None


def tree_color_wagner(
    w: SignedGraph,
    pinned: Sequence[int],
    lists: Mapping[int, Iterable[int]],
    labeling: Sequence[int] | None = None,
) -> Coloring:
    """List tree-coloring of a signed Wagner graph with one edge precolored.

    ``pinned = (v_i, v_j, alpha, beta)``.  The remaining vertices are colored
    by backtracking around the 8-cycle starting next to the pinned edge.
    """
    if labeling is None:
        labeling = find_wagner_labeling(w)
        if labeling is None:
            raise NotWagner("graph is not isomorphic to the Wagner graph")
    elif not _is_wagner_labeling(w, labeling):
        raise NotWagner("labeling does not map the Wagner graph onto the input")
    vi, vj, alpha, beta = pinned
    if vi not in w or vj not in w or not w.has_edge(vi, vj):
        raise BadPin(f"{vi}-{vj} is not an edge of the Wagner graph")
    lists = normalize_lists(lists)
    lists[vi] = frozenset([int(alpha)])
    lists[vj] = frozenset([int(beta)])
    for v in w.vertices:
        if v not in (vi, vj) and len(lists.get(v, ())) < 3:
            raise InvalidLists(f"vertex {v} needs a list of size >= 3")

    lab = list(labeling)
    p = lab.index(vi)
    step = -1 if lab[(p - 1) % 8] == vj else 1
    order = [vi, vj] + [lab[(p + step * k) % 8] for k in range(1, 8) if lab[(p + step * k) % 8] != vj]
    colors = _backtrack(w, order, lists)
    if colors is None:
        raise ColoringDefect("no list tree-coloring of the Wagner graph found")
    return _certify(w, colors, lists)


# -- clique sums ---------------------------------------------------------------


def combine_colorings(g1: SignedGraph, c1: Coloring, g2: SignedGraph, c2: Coloring) -> Coloring:
    """Union of two tree-colorings of balanced graphs meeting in a K2 or K3."""
    for g in (g1, g2):
        require_balanced(g)
    for g, c in ((g1, c1), (g2, c2)):
        if not is_signed_tree_coloring(g, c):
            raise InvalidColoring("input coloring is not a signed tree-coloring of its graph")
    shared = sorted(set(g1.vertices) & set(g2.vertices))
    if len(shared) not in (2, 3):
        raise SharedCliqueMismatch(f"graphs share {len(shared)} vertices, expected 2 or 3")
    for a in shared:
        for b in shared:
            if a < b:
                if not (g1.has_edge(a, b) and g2.has_edge(a, b)):
                    raise SharedCliqueMismatch(f"shared vertices {shared} do not span a clique in both graphs")
                if g1.sign(a, b) != g2.sign(a, b):
                    raise SharedCliqueMismatch(f"edge {a}-{b} has different signs")
    for v in shared:
        if c1[v] != c2[v]:
            raise ColoringsDisagree(f"vertex {v}: {c1[v]} vs {c2[v]}")
    try:
        union = g1.union(g2)
    except InvalidGraph as exc:
        raise SharedCliqueMismatch(str(exc)) from None
    colors = dict(c1.colors)
    colors.update(c2.colors)
    n = max(c1.n, c2.n)
    if not all(x in ColorDomain(n) for x in colors.values()):
        n = smallest_domain(colors.values())
    return _certify(union, colors, None, n)
