"""Rotation systems, face tracing and the near-triangulation queries used by the colorers.

A rotation system lists the neighbours of each vertex in cyclic order.  Faces
are traced by following the dart ``u -> v`` with ``v -> w`` where ``w`` is the
neighbour preceding ``u`` in the rotation at ``v``.  Nothing here depends on
whether rotations are clockwise or counter-clockwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import networkx as nx

from .core import SignedGraph
from .errors import InvalidGraph, MalformedRotation, NonPlanar, NotNearTriangulation, NotOnOuterFace


@dataclass(frozen=True)
class RotationSystem:
    rotation: Mapping[int, tuple[int, ...]]
    outer_face: tuple[int, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "rotation", {int(v): tuple(int(w) for w in nb) for v, nb in self.rotation.items()})
        if self.outer_face is not None:
            object.__setattr__(self, "outer_face", tuple(int(v) for v in self.outer_face))

    def with_outer(self, outer: Sequence[int]) -> "RotationSystem":
        return RotationSystem(self.rotation, tuple(outer))

    def restricted(self, vertices: Iterable[int]) -> "RotationSystem":
        """Rotation of the induced subgraph; still planar, outer face dropped."""
        keep = set(vertices)
        return RotationSystem({v: tuple(w for w in nb if w in keep) for v, nb in self.rotation.items() if v in keep})


def _check_rotation(g: SignedGraph, r: RotationSystem) -> None:
    for v in g.vertices:
        rot = r.rotation.get(v, ())
        if sorted(rot) != list(g.neighbors(v)):
            raise MalformedRotation(f"rotation at {v} is not a permutation of its neighbours")
    extra = set(r.rotation) - set(g.vertices)
    if any(r.rotation[v] for v in extra):
        raise MalformedRotation(f"rotation mentions unknown vertices {sorted(extra)[:5]}")


def trace_faces(g: SignedGraph, r: RotationSystem) -> list[tuple[int, ...]]:
    """All faces of the embedding, each as the cyclic sequence of dart tails.

    Raises MalformedRotation if a rotation is not a permutation of the
    neighbourhood or if some component violates Euler's formula (the
    rotation then describes a surface of higher genus).
    """
    _check_rotation(g, r)
    pos = {v: {w: k for k, w in enumerate(r.rotation[v])} for v in g.vertices}
    seen: set[tuple[int, int]] = set()
    faces = []
    for u in g.vertices:
        for v in r.rotation[u]:
            if (u, v) in seen:
                continue
            face = []
            a, b = u, v
            while (a, b) not in seen:
                seen.add((a, b))
                face.append(a)
                rot_b = r.rotation[b]
                a, b = b, rot_b[(pos[b][a] - 1) % len(rot_b)]
            faces.append(tuple(face))

    comp_of = {}
    comps = g.components()
    for k, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = k
    face_count = [0] * len(comps)
    for f in faces:
        face_count[comp_of[f[0]]] += 1
    edge_count = [0] * len(comps)
    for u, _ in g.edges():
        edge_count[comp_of[u]] += 1
    for k, comp in enumerate(comps):
        if edge_count[k] and len(comp) - edge_count[k] + face_count[k] != 2:
            raise MalformedRotation("rotation system is not planar (Euler's formula fails)")
    return faces


def same_cycle(a: Sequence[int], b: Sequence[int]) -> bool:
    """Equality of cyclic sequences up to rotation and reversal."""
    if len(a) != len(b):
        return False
    if not a:
        return True
    a = list(a)
    for cand in (list(b), list(b)[::-1]):
        if a[0] not in cand:
            return False
        k = cand.index(a[0])
        if cand[k:] + cand[:k] == a:
            return True
    return False


def _is_triangle(face: Sequence[int]) -> bool:
    return len(face) == 3 and len(set(face)) == 3


@dataclass(frozen=True)
class Verdict:
    ok: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def validate_near_triangulation(g: SignedGraph, r: RotationSystem) -> Verdict:
    if g.vertex_count < 3:
        return Verdict(False, "fewer than three vertices")
    if not g.is_connected():
        return Verdict(False, "graph is disconnected")
    try:
        faces = trace_faces(g, r)
    except MalformedRotation as exc:
        return Verdict(False, str(exc))
    outer = r.outer_face
    if outer is None:
        return Verdict(False, "no outer face designated")
    if len(outer) < 3 or len(set(outer)) != len(outer):
        return Verdict(False, f"outer face {list(outer)} is not a simple cycle")
    matched = False
    for f in faces:
        if not matched and same_cycle(f, outer):
            matched = True
            continue
        if not _is_triangle(f):
            return Verdict(False, f"inner face {list(f)} is not a triangle")
    if not matched:
        return Verdict(False, f"outer face {list(outer)} is not a face of the embedding")
    return Verdict(True)


def is_triangulation(g: SignedGraph, r: RotationSystem) -> bool:
    if g.vertex_count < 3 or not g.is_connected():
        return False
    try:
        faces = trace_faces(g, r)
    except MalformedRotation:
        return False
    return all(_is_triangle(f) for f in faces)


@dataclass(frozen=True)
class NearTriangulation:
    """A plane graph whose faces, except possibly the outer one, are triangles."""

    graph: SignedGraph
    embedding: RotationSystem
    faces: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        verdict = validate_near_triangulation(self.graph, self.embedding)
        if not verdict:
            raise NotNearTriangulation(verdict.reason)
        object.__setattr__(self, "faces", tuple(trace_faces(self.graph, self.embedding)))

    @property
    def outer(self) -> tuple[int, ...]:
        return self.embedding.outer_face


def find_chord(outer: Sequence[int], g: SignedGraph) -> tuple[int, int] | None:
    """Positions ``(i, j)``, counted from 1 as in ``v_1 .. v_n``, of an edge joining non-consecutive outer vertices.

    Among all such edges the one minimising ``(j - i, i)`` is returned.
    """
    n = len(outer)
    pos = {v: k for k, v in enumerate(outer)}
    best = None
    for v, a in pos.items():
        for w in g.neighbors(v):
            b = pos.get(w)
            if b is None or b <= a:
                continue
            d = b - a
            if 2 <= d <= n - 2 and (best is None or (d, a) < best):
                best = (d, a)
    if best is None:
        return None
    d, i = best
    return i + 1, i + d + 1


def ear_neighbors(v_n: int, r: RotationSystem, outer: Sequence[int], vertices: Iterable[int] | None = None) -> list[int]:
    """Neighbours of outer vertex ``v_n`` in cyclic order, from its successor to its predecessor on ``outer``.

    For ``v_n = outer[-1]`` this is ``[outer[0], u_1, ..., u_t, outer[-2]]``.
    ``vertices`` restricts the rotation to a sub-instance.
    """
    if v_n not in outer:
        raise NotOnOuterFace(v_n)
    n = len(outer)
    k = list(outer).index(v_n)
    first, last = outer[(k + 1) % n], outer[k - 1]
    keep = None if vertices is None else set(vertices)
    rot = [w for w in r.rotation[v_n] if keep is None or w in keep]
    if first not in rot or last not in rot:
        raise NotNearTriangulation(f"vertex {v_n} is not adjacent to its outer-face neighbours")
    s = rot.index(first)
    seq = rot[s:] + rot[:s]
    if len(seq) > 2 and seq[1] == last:
        seq = [seq[0]] + seq[:0:-1]
    if seq[-1] != last:
        raise NotNearTriangulation(f"outer neighbours of {v_n} are not consecutive in its rotation")
    return seq


def planar_embed(g: SignedGraph) -> RotationSystem:
    """A planar rotation system for a connected graph; outer face is the first traced face."""
    if not g.is_connected():
        raise InvalidGraph("planar_embed needs a connected graph")
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges())
    planar, emb = nx.check_planarity(h)
    if not planar:
        raise NonPlanar("graph is not planar")
    rot = RotationSystem({v: tuple(emb.neighbors_cw_order(v)) for v in g.vertices})
    faces = trace_faces(g, rot)
    return rot.with_outer(faces[0]) if faces else rot


def faces_with_edge(faces: Iterable[Sequence[int]], x: int, y: int) -> list[tuple[int, ...]]:
    return [tuple(f) for f in faces if x in f and y in f]
