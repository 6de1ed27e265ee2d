"""Clique-sum decomposition of edge-maximal K5-minor-free graphs and the 3-list tree-coloring pipeline.

Such graphs are glued together from planar triangulations and Wagner graphs
along shared edges and triangles.  :func:`decompose` recovers the pieces by
repeatedly cutting along a separating clique of size 2 or 3;
:func:`tree_color_k5_free` colors one piece, then walks the join tree coloring
each neighbouring piece with its shared clique precolored and merging.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .color import (
    ListAssignment,
    require_balanced,
    canonical_order,
    combine_colorings,
    find_wagner_labeling,
    normalize_lists,
    tree_color_near_triangulation,
    tree_color_triangle_rooted,
    tree_color_wagner,
    triangle_precolor_ok,
    uniform_lists,
)
from .core import Coloring, SignedGraph, is_signed_tree_coloring
from .errors import ColoringDefect, InvalidGraph, ListTooSmall, NonPlanar, NotDecomposable
from .planar import NearTriangulation, RotationSystem, faces_with_edge, is_triangulation, planar_embed, trace_faces

TRIANGULATION = "triangulation"
WAGNER = "wagner"


@dataclass(frozen=True)
class Leaf:
    vertices: tuple[int, ...]
    kind: str
    rotation: RotationSystem | None = None
    wagner_map: tuple[int, ...] | None = None


@dataclass(frozen=True)
class Join:
    a: int
    b: int
    shared: tuple[int, ...]


@dataclass
class DecompositionTree:
    leaves: list[Leaf] = field(default_factory=list)
    joins: list[Join] = field(default_factory=list)

    def leaf_graph(self, g: SignedGraph, k: int) -> SignedGraph:
        return g.subgraph(self.leaves[k].vertices)

    def reconstructs(self, g: SignedGraph) -> bool:
        verts: set[int] = set()
        signs = {}
        for leaf in self.leaves:
            sub = g.subgraph(leaf.vertices)
            verts |= set(sub.vertices)
            signs.update(sub.signs)
        return verts == set(g.vertices) and signs == dict(g.signs)


def _separates(g: SignedGraph, vertices: set[int], cut: Sequence[int]) -> list[set[int]]:
    """Components of ``g[vertices] - cut``."""
    rest = vertices - set(cut)
    comps = []
    while rest:
        root = min(rest)
        comp = {root}
        stack = [root]
        while stack:
            u = stack.pop()
            for w in g.neighbors(u):
                if w in rest and w not in comp:
                    comp.add(w)
                    stack.append(w)
        rest -= comp
        comps.append(comp)
    return comps


def _find_clique_separator(g: SignedGraph, vertices: set[int]) -> tuple[tuple[int, ...], list[set[int]]] | None:
    """Smallest separating clique of size 2 or 3 (edges first, then triangles)."""
    edges = sorted((u, v) for u in vertices for v in g.neighbors(u) if v in vertices and u < v)
    for u, v in edges:
        comps = _separates(g, vertices, (u, v))
        if len(comps) > 1:
            return (u, v), comps
    for u, v in edges:
        for w in g.neighbors(v):
            if w > v and w in vertices and g.has_edge(u, w):
                comps = _separates(g, vertices, (u, v, w))
                if len(comps) > 1:
                    return (u, v, w), comps
    return None


def _classify(g: SignedGraph, vertices: set[int]) -> Leaf:
    sub = g.subgraph(vertices)
    verts = tuple(sorted(vertices))
    if len(verts) <= 2:
        # only reachable when the whole input is K1 or K2
        return Leaf(verts, TRIANGULATION)
    lab = find_wagner_labeling(sub)
    if lab is not None:
        return Leaf(verts, WAGNER, wagner_map=lab)
    try:
        rot = planar_embed(sub)
    except (NonPlanar, InvalidGraph):
        raise NotDecomposable(f"piece on {list(verts)} is neither planar nor the Wagner graph") from None
    if not is_triangulation(sub, rot):
        raise NotDecomposable(f"piece on {list(verts)} is planar but not a triangulation")
    return Leaf(verts, TRIANGULATION, rotation=rot)


def decompose(g: SignedGraph) -> DecompositionTree:
    """Split ``g`` along separating K2s and K3s into triangulation and Wagner pieces."""
    if g.vertex_count == 0:
        raise NotDecomposable("empty graph")
    if not g.is_connected():
        raise NotDecomposable("graph is disconnected")
    tree = DecompositionTree()

    def build(vertices: set[int]) -> list[int]:
        found = _find_clique_separator(g, vertices)
        if found is None:
            tree.leaves.append(_classify(g, vertices))
            return [len(tree.leaves) - 1]
        cut, comps = found
        groups = [build(comp | set(cut)) for comp in comps]
        anchors = []
        for group in groups:
            holder = next((k for k in group if set(cut) <= set(tree.leaves[k].vertices)), None)
            if holder is None:
                raise NotDecomposable(f"no piece contains the separating clique {list(cut)}")
            anchors.append(holder)
        for other in anchors[1:]:
            tree.joins.append(Join(anchors[0], other, tuple(cut)))
        return [k for group in groups for k in group]

    build(set(g.vertices))
    return tree


def _first_value(values: Iterable[int]) -> int:
    return canonical_order(values)[0]


def _color_leaf(
    g: SignedGraph,
    leaf: Leaf,
    lists: ListAssignment,
    shared: Sequence[int],
    precolor: Mapping[int, int],
) -> Coloring:
    sub = g.subgraph(leaf.vertices)
    if leaf.kind == WAGNER:
        if len(shared) == 3:
            raise NotDecomposable("Wagner piece cannot share a triangle")
        if shared:
            x, y = shared
            pins = (x, y, precolor[x], precolor[y])
        else:
            x, y = leaf.wagner_map[0], leaf.wagner_map[1]
            pins = (x, y, _first_value(lists[x]), _first_value(lists[y]))
        return tree_color_wagner(sub, pins, lists, leaf.wagner_map)

    if len(leaf.vertices) <= 2:
        colors = {v: precolor[v] if v in precolor else _first_value(lists[v]) for v in leaf.vertices}
        return Coloring.fit(colors)

    rot = leaf.rotation if leaf.rotation is not None else planar_embed(sub)
    faces = trace_faces(sub, rot)
    if len(shared) == 3:
        x, y, z = shared
        pre = (precolor[x], precolor[y], precolor[z])
        if not triangle_precolor_ok((sub.sign(x, y), sub.sign(y, z), sub.sign(z, x)), pre):
            raise ColoringDefect(f"shared triangle {list(shared)} arrives with an invalid precolor")
        nt = NearTriangulation(sub, rot.with_outer(faces[0]))
        return tree_color_triangle_rooted(nt, (x, y, z), pre, lists)

    if shared:
        x, y = shared
        face = faces_with_edge(faces, x, y)[0]
        (z,) = set(face) - {x, y}
        outer = (x, y, z)
        local = dict(lists)
        local[x] = frozenset([precolor[x]])
        local[y] = frozenset([precolor[y]])
    else:
        outer = rot.outer_face or faces[0]
        local = dict(lists)
        for v in outer[:2]:
            local[v] = frozenset([_first_value(lists[v])])
    nt = NearTriangulation(sub, rot.with_outer(outer))
    return tree_color_near_triangulation(nt, local)


def tree_color_k5_free(
    g: SignedGraph,
    lists: Mapping[int, Iterable[int]],
    d: DecompositionTree | None = None,
) -> Coloring:
    """List tree-coloring of a balanced edge-maximal K5-minor-free graph with lists of size >= 3."""
    require_balanced(g)
    lists = normalize_lists(lists)
    for v in g.vertices:
        if len(lists.get(v, ())) < 3:
            raise ListTooSmall(f"vertex {v} needs a list of size >= 3")
    if d is None:
        d = decompose(g)
    if not d.leaves:
        raise NotDecomposable("decomposition has no pieces")

    adjacency: dict[int, list[Join]] = {k: [] for k in range(len(d.leaves))}
    for j in d.joins:
        adjacency[j.a].append(j)
        adjacency[j.b].append(Join(j.b, j.a, j.shared))

    colored_graph = g.subgraph(d.leaves[0].vertices)
    coloring = _color_leaf(g, d.leaves[0], lists, (), {})
    done = {0}
    stack = [0]
    while stack:
        k = stack.pop()
        for j in reversed(adjacency[k]):
            if j.b in done:
                continue
            leaf = d.leaves[j.b]
            part_graph = g.subgraph(leaf.vertices)
            part = _color_leaf(g, leaf, lists, j.shared, coloring.colors)
            coloring = combine_colorings(colored_graph, coloring, part_graph, part)
            colored_graph = colored_graph.union(part_graph)
            done.add(j.b)
            stack.append(j.b)
    if len(done) != len(d.leaves) or set(colored_graph.vertices) != set(g.vertices):
        raise NotDecomposable("join tree does not connect every piece")
    if not is_signed_tree_coloring(g, coloring):
        raise ColoringDefect("pipeline output is not a signed tree-coloring")
    return coloring


def va_signed_upper3(g: SignedGraph, d: DecompositionTree | None = None) -> Coloring:
    """A signed tree-3-coloring (values in {-1, 0, 1}) of a balanced edge-maximal K5-minor-free graph."""
    c = tree_color_k5_free(g, uniform_lists(g.vertices, 3), d)
    return Coloring(3, c.colors)
