"""JSON encodings of graphs, colorings, list assignments and decompositions.

Graph::

    {"vertex_count": 4, "edges": [[0, 1, 1], [1, 2, -1], ...],
     "rotation": [[1, 2, 3], ...],      # optional, cyclic neighbours per vertex
     "outer_face": [0, 1, 2]}           # optional

Coloring::

    {"n": 3, "colors": [0, 1, -1, 0]}   # indexed by vertex

Lists::

    {"0": [0], "1": [1], "2": [-1, 0, 1], ...}

Decomposition::

    {"leaves": [{"vertices": [...], "kind": "triangulation",
                 "rotation": {"3": [...], ...}, "outer_face": [...]},
                {"vertices": [...], "kind": "wagner", "wagner_map": [...]}],
     "joins": [{"leaves": [0, 1], "shared": [2, 5]}]}
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Mapping

from .core import Coloring, SignedGraph
from .errors import FormatError, SignedGraphError
from .k5 import DecompositionTree, Join, Leaf
from .planar import RotationSystem


def _require(d: Any, key: str, kind: type | tuple) -> Any:
    if not isinstance(d, dict) or key not in d:
        raise FormatError(f"missing field {key!r}")
    value = d[key]
    if not isinstance(value, kind) or isinstance(value, bool):
        raise FormatError(f"field {key!r} has the wrong type")
    return value


def _int_list(value: Any, what: str) -> list[int]:
    if not isinstance(value, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in value):
        raise FormatError(f"{what} must be a list of integers")
    return value


def _labels_are_range(g: SignedGraph) -> bool:
    return g.vertices == tuple(range(g.vertex_count))


def graph_to_dict(g: SignedGraph, rotation: RotationSystem | None = None) -> dict:
    if not _labels_are_range(g):
        raise FormatError("only graphs on 0..vertex_count-1 can be written")
    out: dict[str, Any] = {"vertex_count": g.vertex_count, "edges": [list(e) for e in g.signed_edges()]}
    if rotation is not None:
        out["rotation"] = [list(rotation.rotation.get(v, ())) for v in range(g.vertex_count)]
        if rotation.outer_face is not None:
            out["outer_face"] = list(rotation.outer_face)
    return out


def graph_from_dict(d: Any) -> tuple[SignedGraph, RotationSystem | None]:
    n = _require(d, "vertex_count", int)
    raw = _require(d, "edges", list)
    edges = []
    for e in raw:
        e = _int_list(e, "edge")
        if len(e) != 3:
            raise FormatError(f"edge {e} must be [u, v, sign]")
        edges.append(tuple(e))
    try:
        g = SignedGraph.from_edges(n, edges)
    except SignedGraphError as exc:
        raise FormatError(str(exc)) from None
    rotation = None
    if "rotation" in d:
        rot = _require(d, "rotation", list)
        if len(rot) != n:
            raise FormatError("rotation needs one list per vertex")
        outer = None
        if "outer_face" in d:
            outer = _int_list(d["outer_face"], "outer_face")
        rotation = RotationSystem({v: tuple(_int_list(r, "rotation entry")) for v, r in enumerate(rot)}, outer)
    elif "outer_face" in d:
        raise FormatError("outer_face given without rotation")
    return g, rotation


def coloring_to_dict(c: Coloring) -> dict:
    verts = sorted(c.colors)
    if verts != list(range(len(verts))):
        raise FormatError("only colorings of 0..n-1 can be written")
    return {"n": c.n, "colors": [c.colors[v] for v in verts]}


def coloring_from_dict(d: Any) -> Coloring:
    n = _require(d, "n", int)
    colors = _int_list(_require(d, "colors", list), "colors")
    try:
        return Coloring(n, dict(enumerate(colors)))
    except SignedGraphError as exc:
        raise FormatError(str(exc)) from None


def lists_to_dict(lists: Mapping[int, Any]) -> dict:
    return {str(v): sorted(vals) for v, vals in sorted(lists.items())}


def lists_from_dict(d: Any) -> dict[int, frozenset[int]]:
    if not isinstance(d, dict):
        raise FormatError("lists must be a JSON object")
    out = {}
    for k, vals in d.items():
        try:
            v = int(k)
        except ValueError:
            raise FormatError(f"bad vertex key {k!r}") from None
        vals = _int_list(vals, f"list of vertex {k}")
        if not vals:
            raise FormatError(f"empty list at vertex {k}")
        out[v] = frozenset(vals)
    return out


def decomposition_to_dict(d: DecompositionTree) -> dict:
    leaves = []
    for leaf in d.leaves:
        item: dict[str, Any] = {"vertices": list(leaf.vertices), "kind": leaf.kind}
        if leaf.rotation is not None:
            item["rotation"] = {str(v): list(nb) for v, nb in sorted(leaf.rotation.rotation.items())}
            if leaf.rotation.outer_face is not None:
                item["outer_face"] = list(leaf.rotation.outer_face)
        if leaf.wagner_map is not None:
            item["wagner_map"] = list(leaf.wagner_map)
        leaves.append(item)
    joins = [{"leaves": [j.a, j.b], "shared": list(j.shared)} for j in d.joins]
    return {"leaves": leaves, "joins": joins}


def decomposition_from_dict(data: Any) -> DecompositionTree:
    tree = DecompositionTree()
    for item in _require(data, "leaves", list):
        verts = tuple(_int_list(_require(item, "vertices", list), "leaf vertices"))
        kind = _require(item, "kind", str)
        if kind not in ("triangulation", "wagner"):
            raise FormatError(f"unknown leaf kind {kind!r}")
        rotation = None
        if "rotation" in item:
            rot = _require(item, "rotation", dict)
            outer = _int_list(item["outer_face"], "outer_face") if "outer_face" in item else None
            rotation = RotationSystem({int(v): tuple(_int_list(nb, "rotation entry")) for v, nb in rot.items()}, outer)
        wmap = tuple(_int_list(item["wagner_map"], "wagner_map")) if "wagner_map" in item else None
        tree.leaves.append(Leaf(verts, kind, rotation, wmap))
    for item in _require(data, "joins", list):
        pair = _int_list(_require(item, "leaves", list), "join leaves")
        shared = _int_list(_require(item, "shared", list), "join shared")
        if len(pair) != 2 or len(shared) not in (2, 3):
            raise FormatError("a join needs two leaves and a shared K2 or K3")
        if not all(0 <= k < len(tree.leaves) for k in pair):
            raise FormatError("join refers to a missing leaf")
        tree.joins.append(Join(pair[0], pair[1], tuple(shared)))
    return tree


def load_json(path: str | Path) -> Any:
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc})") from None
    except OSError as exc:
        raise FormatError(f"{path}: {exc.strerror}") from None


def dump_json(obj: Any, path: str | Path | None = None) -> str:
    text = json.dumps(obj, indent=2)
    if path is not None:
        Path(path).write_text(text + "\n")
    return text
