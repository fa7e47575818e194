import pytest
from hypothesis import given, settings

import wtoll as w
from wtoll import DisconnectedGraphError
from wtoll.atoms import brute_force_atoms

from _strategies import connected_graphs


def triangle_chain(k):
    """k triangles glued in a path at cut vertices 2, 4, 6, ..."""
    edges = []
    for t in range(k):
        a, b, c = 2 * t, 2 * t + 1, 2 * t + 2
        edges += [(a, b), (a, c), (b, c)]
    return w.Graph(2 * k + 1, edges)


class TestIsPrime:
    def test_chordless_cycle(self):
        assert w.is_prime(w.cycle_graph(5))

    def test_path_reducible(self):
        assert not w.is_prime(w.path_graph(4))

    def test_complete(self):
        assert w.is_prime(w.complete_graph(4))
        assert w.is_prime(w.complete_graph(1))

    def test_rejects_disconnected(self):
        with pytest.raises(DisconnectedGraphError):
            w.is_prime(w.Graph(3, [(0, 1)]))


class TestDecompose:
    def test_p4(self):
        d = w.decompose(w.path_graph(4))
        assert [sorted(a) for a in d.atoms] == [[0, 1], [1, 2], [2, 3]]

    def test_c5_single_atom(self):
        d = w.decompose(w.cycle_graph(5))
        assert [sorted(a) for a in d.atoms] == [[0, 1, 2, 3, 4]]

    def test_bowtie_shared_vertex(self):
        d = w.decompose(w.bowtie_graph())
        assert [sorted(a) for a in d.atoms] == [[0, 1, 2], [2, 3, 4]]
        assert d.shared == (frozenset({2}), frozenset({2}))
        assert d.exclusive == (frozenset({0, 1}), frozenset({3, 4}))

    def test_rejects_disconnected(self):
        with pytest.raises(DisconnectedGraphError):
            w.decompose(w.Graph(4, [(0, 1), (2, 3)]))

    def test_matches_enumeration_corpus(self, corpus):
        for g in corpus:
            assert [sorted(a) for a in w.decompose(g).atoms] == [
                sorted(a) for a in brute_force_atoms(g)
            ]

    @given(connected_graphs(max_n=8))
    @settings(max_examples=60, deadline=None)
    def test_matches_enumeration_random(self, g):
        assert [sorted(a) for a in w.decompose(g).atoms] == [
            sorted(a) for a in brute_force_atoms(g)
        ]

    @given(connected_graphs(max_n=9))
    @settings(max_examples=60, deadline=None)
    def test_structural_invariants(self, g):
        d = w.decompose(g)
        assert frozenset().union(*d.atoms) == frozenset(range(g.n))
        for i in range(len(d.atoms)):
            assert d.atoms[i] == d.shared[i] | d.exclusive[i]
            for j in range(i + 1, len(d.atoms)):
                assert w.is_clique(g, d.atoms[i] & d.atoms[j])
                assert not (d.exclusive[i] & d.exclusive[j])
        if len(d.atoms) >= 2:
            assert len(w.extremal_atoms(d)) >= 2
        assert w.is_prime(g) == (len(d.atoms) == 1)


class TestExtremalAtoms:
    def test_p4_end_atoms(self):
        d = w.decompose(w.path_graph(4))
        assert w.extremal_atoms(d) == [0, 2]

    def test_bowtie_both(self):
        d = w.decompose(w.bowtie_graph())
        assert w.extremal_atoms(d) == [0, 1]

    def test_triangle_chain_ends(self):
        d = w.decompose(triangle_chain(4))
        idxs = w.extremal_atoms(d)
        assert [sorted(d.atoms[i]) for i in idxs] == [[0, 1, 2], [6, 7, 8]]

    def test_partner_dominates_intersections(self):
        d = w.decompose(triangle_chain(3))
        for i in w.extremal_atoms(d):
            j = d.partner[i]
            assert d.shared[i] == d.atoms[i] & d.atoms[j]

    def test_requires_two_atoms(self):
        d = w.decompose(w.cycle_graph(5))
        with pytest.raises(ValueError):
            w.extremal_atoms(d)


class TestBruteForceAtoms:
    def test_cap(self):
        with pytest.raises(w.CapExceededError):
            brute_force_atoms(w.path_graph(13))

    def test_star(self):
        assert [sorted(a) for a in brute_force_atoms(w.star_graph(4))] == [
            [0, 1], [0, 2], [0, 3]
        ]
