import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from signed_arboricity.color import tree_color_near_triangulation, uniform_lists
from signed_arboricity.core import SignedGraph
from signed_arboricity.errors import MalformedRotation, NonPlanar, NotNearTriangulation, NotOnOuterFace
from signed_arboricity.oracle import generate_triangulation, rotation_from_faces
from signed_arboricity.planar import (
    NearTriangulation,
    RotationSystem,
    ear_neighbors,
    find_chord,
    is_triangulation,
    planar_embed,
    same_cycle,
    trace_faces,
    validate_near_triangulation,
)

from conftest import K4_FACES, OCTAHEDRON_FACES, complete, edges_of

TRIANGLE_FACES = [(0, 1, 2), (0, 2, 1)]
C4_FACES = [(0, 1, 2, 3), (0, 3, 2, 1)]
# hub 0 inside the rim 1..5
WHEEL_FACES = [(0, k, k % 5 + 1) for k in range(1, 6)] + [(1, 5, 4, 3, 2)]
# v_n = 3 with faces 3-0-1 and 3-1-2 inside the outer cycle 0, 2, 3 ... a fan on outer (0, 2, 3)
FAN_FACES = [(3, 0, 1), (3, 1, 2), (0, 2, 1), (0, 3, 2)]


def graph(faces, n):
    return SignedGraph.from_edges(n, [(u, v, 1) for u, v in edges_of(faces)])


def embedded(faces, n, outer=None):
    rot = rotation_from_faces(faces, n)
    return graph(faces, n), (rot if outer is None else rot.with_outer(outer))


class TestTraceFaces:
    def test_triangle(self):
        g, rot = embedded(TRIANGLE_FACES, 3)
        assert [len(f) for f in trace_faces(g, rot)] == [3, 3]

    def test_four_cycle(self):
        g, rot = embedded(C4_FACES, 4)
        assert [len(f) for f in trace_faces(g, rot)] == [4, 4]

    def test_k4(self):
        g, rot = embedded(K4_FACES, 4)
        faces = trace_faces(g, rot)
        assert len(faces) == 4 and all(len(f) == 3 for f in faces)

    def test_faces_match_input(self):
        g, rot = embedded(OCTAHEDRON_FACES, 6)
        faces = trace_faces(g, rot)
        assert len(faces) == 8
        for f in OCTAHEDRON_FACES:
            assert any(same_cycle(f, t) for t in faces)

    def test_non_permutation_rotation(self):
        g = graph(TRIANGLE_FACES, 3)
        with pytest.raises(MalformedRotation):
            trace_faces(g, RotationSystem({0: (1,), 1: (0, 2), 2: (0, 1)}))

    def test_non_planar_rotation_fails_euler(self):
        # K4 with one vertex's rotation reversed is a torus embedding
        g, rot = embedded(K4_FACES, 4)
        bad = dict(rot.rotation)
        bad[0] = bad[0][::-1]
        with pytest.raises(MalformedRotation):
            trace_faces(g, RotationSystem(bad))

    @settings(max_examples=40)
    @given(st.integers(3, 16), st.integers(0, 40), st.integers(0, 2**16))
    def test_face_lengths_sum_to_twice_edges(self, n, flips, seed):
        edges, rot = generate_triangulation(n, flips, seed)
        g = SignedGraph.from_edges(n, [(u, v, 1) for u, v in edges])
        faces = trace_faces(g, rot)
        assert sum(len(f) for f in faces) == 2 * g.edge_count
        assert g.vertex_count - g.edge_count + len(faces) == 2
        assert g.edge_count == 3 * n - 6 or n == 3


class TestValidation:
    def test_k4_any_outer_face(self):
        g, rot = embedded(K4_FACES, 4)
        for f in K4_FACES:
            assert validate_near_triangulation(g, rot.with_outer(f))

    def test_four_cycle_rejected(self):
        g, rot = embedded(C4_FACES, 4, (0, 1, 2, 3))
        verdict = validate_near_triangulation(g, rot)
        assert not verdict and "not a triangle" in verdict.reason

    def test_octahedron(self, octahedron):
        assert validate_near_triangulation(octahedron.graph, octahedron.embedding)

    def test_wheel_with_rim_outer(self):
        g, rot = embedded(WHEEL_FACES, 6, (1, 2, 3, 4, 5))
        assert validate_near_triangulation(g, rot)
        assert not is_triangulation(g, rot)

    def test_outer_not_a_face(self):
        g, rot = embedded(K4_FACES, 4, (0, 1, 3))
        # 0, 1, 3 in this order is a face only with the opposite orientation, which still counts
        assert validate_near_triangulation(g, rot)
        g, rot = embedded(OCTAHEDRON_FACES, 6, (1, 2, 3, 4))
        assert not validate_near_triangulation(g, rot)

    def test_constructor_raises(self):
        g, rot = embedded(C4_FACES, 4, (0, 1, 2, 3))
        with pytest.raises(NotNearTriangulation):
            NearTriangulation(g, rot)

    def test_is_triangulation(self):
        assert is_triangulation(*embedded(K4_FACES, 4))
        assert is_triangulation(*embedded(TRIANGLE_FACES, 3))
        assert not is_triangulation(*embedded(C4_FACES, 4))


class TestChord:
    def test_four_cycle_with_diagonal(self):
        g = SignedGraph.from_edges(4, [(0, 1, 1), (1, 2, 1), (2, 3, 1), (0, 3, 1), (0, 2, 1)])
        assert find_chord([0, 1, 2, 3], g) == (1, 3)

    def test_triangle(self):
        assert find_chord([0, 1, 2], complete(3)) is None

    def test_wheel(self):
        g = graph(WHEEL_FACES, 6)
        assert find_chord([1, 2, 3, 4, 5], g) is None

    def test_tie_break(self):
        # outer 0..5 with chords 0-2 and 3-5 and 1-4: shortest span first, then smallest start
        g = SignedGraph.from_edges(
            6, [(k, (k + 1) % 6, 1) for k in range(6)] + [(3, 5, 1), (0, 2, 1), (1, 4, 1)]
        )
        assert find_chord(list(range(6)), g) == (1, 3)

    @given(st.integers(4, 9), st.data())
    def test_none_means_no_pair_is_an_edge(self, n, data):
        pairs = [(i, j) for i in range(n) for j in range(i + 2, n) if not (i == 0 and j == n - 1)]
        chosen = data.draw(st.lists(st.sampled_from(pairs), unique=True, max_size=3))
        g = SignedGraph.from_edges(n, [(k, (k + 1) % n, 1) for k in range(n)] + [(i, j, 1) for i, j in chosen])
        found = find_chord(list(range(n)), g)
        if found is None:
            assert not chosen
        else:
            i, j = found
            assert g.has_edge(i - 1, j - 1) and 2 <= j - i <= n - 2
            assert (j - i, i) == min((b - a, a + 1) for a, b in chosen)


class TestEarNeighbors:
    def test_triangle(self):
        _, rot = embedded(TRIANGLE_FACES, 3)
        assert ear_neighbors(2, rot, [0, 1, 2]) == [0, 1]

    def test_fan(self):
        g, rot = embedded(FAN_FACES, 4, (0, 2, 3))
        assert validate_near_triangulation(g, rot)
        assert ear_neighbors(3, rot, [0, 2, 3]) == [0, 1, 2]

    def test_octahedron(self, octahedron):
        around = ear_neighbors(2, octahedron.embedding, [0, 1, 2])
        assert around == [0, 3, 5, 1]
        assert len(around) - 2 == 2

    def test_orientation_does_not_matter(self, octahedron):
        assert ear_neighbors(2, octahedron.embedding, [1, 0, 2]) == [1, 5, 3, 0]

    def test_not_on_outer_face(self, octahedron):
        with pytest.raises(NotOnOuterFace):
            ear_neighbors(5, octahedron.embedding, [0, 1, 2])


class TestPlanarEmbed:
    def test_k4(self):
        g = complete(4)
        assert len(trace_faces(g, planar_embed(g))) == 4

    def test_c4(self):
        g = graph(C4_FACES, 4)
        assert len(trace_faces(g, planar_embed(g))) == 2

    def test_k5(self):
        with pytest.raises(NonPlanar):
            planar_embed(complete(5))

    def test_outer_is_a_face(self):
        g = graph(OCTAHEDRON_FACES, 6)
        rot = planar_embed(g)
        assert validate_near_triangulation(g, rot)


class TestSubInstances:
    @settings(max_examples=40, deadline=None)
    @given(st.integers(4, 14), st.integers(0, 40), st.integers(0, 2**16))
    def test_every_sub_instance_validates(self, n, flips, seed):
        edges, rot = generate_triangulation(n, flips, seed)
        g = SignedGraph.from_edges(n, [(u, v, 1) for u, v in edges])
        # delete a vertex so the outer face is its link cycle, giving chords to split on
        victim = random.Random(seed).randrange(n)
        keep = [v for v in g.vertices if v != victim]
        link = list(rot.rotation[victim])
        sub = g.subgraph(keep)
        sub_rot = rot.restricted(keep).with_outer(link)
        if len(link) < 3 or not validate_near_triangulation(sub, sub_rot):
            return
        nt = NearTriangulation(sub, sub_rot)
        seen = []

        def check(vertices, outer):
            seen.append(len(outer))
            if len(outer) > 2:
                part = sub.subgraph(vertices)
                NearTriangulation(part, sub_rot.restricted(vertices).with_outer(outer))

        lists = uniform_lists(sub.vertices, 3)
        lists[link[0]] = frozenset([0])
        lists[link[1]] = frozenset([1])
        tree_color_near_triangulation(nt, lists, observer=check)
        assert 2 in seen
