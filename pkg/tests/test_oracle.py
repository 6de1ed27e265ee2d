import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from signed_arboricity.core import ColorDomain, SignedGraph, is_signed_tree_coloring
from signed_arboricity.errors import Exhausted, OracleCapExceeded
from signed_arboricity.oracle import (
    MAX_VERTICES,
    generate_balanced,
    generate_k5_free,
    generate_triangulation,
    oracle_va,
    oracle_va_unsigned,
    random_signed_graph,
)
from signed_arboricity.planar import is_triangulation
from signed_arboricity.switch import is_balanced

from conftest import complete, signed_graphs, triangle


def independent_unsigned_va(n, edges):
    """Brute force over all vertex partitions, checking acyclicity by edge counting per component."""
    def acyclic(part):
        inner = [(u, v) for u, v in edges if u in part and v in part]
        # a graph is a forest iff |E| = |V| - #components
        parent = {v: v for v in part}

        def find(x):
            while parent[x] != x:
                x = parent[x]
            return x

        comps = len(part)
        for u, v in inner:
            a, b = find(u), find(v)
            if a != b:
                parent[a] = b
                comps -= 1
        return len(inner) == len(part) - comps

    for k in range(1, n + 1):
        for labels in itertools.product(range(k), repeat=n):
            if all(acyclic({v for v in range(n) if labels[v] == c}) for c in range(k)):
                return k
    return 0


class TestSanityValues:
    def test_all_positive_triangle(self):
        assert oracle_va(triangle()).va == 2

    def test_k5(self):
        assert oracle_va(complete(5)).va == 3

    def test_two_negative_edges(self):
        assert oracle_va(triangle(1, -1, -1)).va == 2

    def test_one_negative_edge(self):
        # x, y, z all colored 0 puts every edge in class 0, so one color is not enough
        assert oracle_va(triangle(-1, 1, 1)).va == 2

    def test_forest_needs_one(self):
        assert oracle_va(SignedGraph.from_edges(3, [(0, 1, -1), (1, 2, 1)])).va == 1

    @pytest.mark.parametrize("n", range(1, 8))
    def test_complete_graphs(self, n):
        assert oracle_va(complete(n)).va == math.ceil(n / 2)

    @pytest.mark.parametrize("prune", [True, False])
    def test_unpruned_agrees(self, prune):
        assert oracle_va(complete(5), prune=prune).va == 3
        assert oracle_va(triangle(1, -1, -1), prune=prune).va == 2


class TestWitness:
    @settings(max_examples=60, deadline=None)
    @given(signed_graphs(max_vertices=7))
    def test_witness_is_valid_and_minimal(self, g):
        result = oracle_va(g, 4)
        assert result.witness.n == result.va
        assert set(result.witness.colors) == set(g.vertices)
        assert all(x in ColorDomain(result.va) for x in result.witness.colors.values())
        assert is_signed_tree_coloring(g, result.witness)
        assert result.colorings_checked >= 1

    @settings(max_examples=30, deadline=None)
    @given(signed_graphs(max_vertices=5))
    def test_pruned_matches_exhaustive(self, g):
        assert oracle_va(g, 4).va == oracle_va(g, 4, prune=False).va

    @settings(max_examples=20, deadline=None)
    @given(signed_graphs(max_vertices=5))
    def test_nothing_smaller_works(self, g):
        va = oracle_va(g, 4).va
        if va > 1:
            with pytest.raises(Exhausted):
                oracle_va(g, va - 1, prune=False)

    @settings(max_examples=40, deadline=None)
    @given(signed_graphs(max_vertices=6), st.data())
    def test_monotone_under_edge_deletion(self, g, data):
        if not g.edge_count:
            return
        u, v = data.draw(st.sampled_from(g.edges()))
        h = SignedGraph(g.vertices, {e: s for e, s in g.signs.items() if e != (u, v)})
        assert oracle_va(h, 4).va <= oracle_va(g, 4).va


class TestUnsigned:
    @settings(max_examples=40, deadline=None)
    @given(st.integers(1, 6), st.data())
    def test_matches_partition_brute_force(self, n, data):
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        edges = data.draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
        assert oracle_va_unsigned(edges, 4, n) == independent_unsigned_va(n, edges)

    @pytest.mark.parametrize("n", range(1, 8))
    def test_complete(self, n):
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
        assert oracle_va_unsigned(edges, 4, n) == math.ceil(n / 2)

    def test_exhausted(self):
        edges = [(u, v) for u in range(7) for v in range(u + 1, 7)]
        with pytest.raises(Exhausted):
            oracle_va_unsigned(edges, 3, 7)


class TestCaps:
    def test_vertex_cap(self):
        g = SignedGraph.from_edges(MAX_VERTICES + 1, [])
        with pytest.raises(OracleCapExceeded):
            oracle_va(g)

    def test_raised_cap(self):
        g = SignedGraph.from_edges(13, [])
        assert oracle_va(g, max_vertices=13).va == 1

    def test_color_cap(self):
        with pytest.raises(OracleCapExceeded):
            oracle_va(triangle(), 9)
        with pytest.raises(OracleCapExceeded):
            oracle_va(triangle(), 0)

    def test_exhausted(self):
        with pytest.raises(Exhausted):
            oracle_va(complete(5), 2)


class TestGenerators:
    @settings(max_examples=40, deadline=None)
    @given(st.integers(3, 20), st.integers(0, 60), st.integers(0, 2**20))
    def test_triangulation(self, n, flips, seed):
        edges, rot = generate_triangulation(n, flips, seed)
        g = SignedGraph.from_edges(n, [(u, v, 1) for u, v in edges])
        assert g.edge_count == 3 * n - 6 or n == 3
        assert is_triangulation(g, rot)

    def test_triangulation_is_seeded(self):
        assert generate_triangulation(10, 12, 7)[0] == generate_triangulation(10, 12, 7)[0]

    @given(st.integers(0, 2**20))
    def test_balanced(self, seed):
        edges, _ = generate_triangulation(8, 8, seed)
        assert is_balanced(generate_balanced(edges, seed, 8))

    def test_random_signed_graph_size(self):
        g = random_signed_graph(6, 9, 1)
        assert g.vertex_count == 6 and g.edge_count == 9

    @settings(max_examples=20, deadline=None)
    @given(st.integers(1, 5), st.integers(0, 2**20))
    def test_k5_free_is_connected(self, pieces, seed):
        n, edges = generate_k5_free(pieces, seed)
        assert SignedGraph.from_edges(n, [(u, v, 1) for u, v in edges]).is_connected()
