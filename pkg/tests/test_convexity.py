import pytest

import wtoll as w
from wtoll import CapExceededError
from wtoll.convexity import reduction_edge_list


class TestWtcExact:
    def test_complete_drops_one(self):
        res = w.wtc_exact(w.complete_graph(6))
        assert res.value == 5
        assert len(res.witness) == 5

    def test_c5_prime_fast_path(self):
        res = w.wtc_exact(w.cycle_graph(5))
        assert (res.value, res.case_tag) == (2, "PRIME_MAX_CLIQUE")

    def test_p4_exhaustive(self):
        res = w.wtc_exact(w.path_graph(4))
        assert (res.value, res.witness, res.case_tag) == (3, {0, 1, 2}, "EXHAUSTIVE")

    def test_witness_proper_and_convex(self, corpus):
        for g in corpus:
            if g.n < 2:
                continue
            res = w.wtc_exact(g)
            assert len(res.witness) == res.value < g.n
            assert w.is_convex(g, res.witness)

    def test_fast_path_matches_exhaustive(self, corpus):
        from itertools import combinations

        for g in corpus:
            if g.n < 2 or w.is_complete(g) or not w.is_prime(g):
                continue
            best = next(
                size
                for size in range(g.n - 1, 0, -1)
                if any(w.is_convex(g, s) for s in combinations(range(g.n), size))
            )
            assert w.wtc_exact(g).value == best

    def test_cap_refusal_mentions_hardness(self):
        with pytest.raises(CapExceededError, match="NP-hard"):
            w.wtc_exact(w.path_graph(17))

    def test_cap_override(self):
        assert w.wtc_exact(w.path_graph(17), cap=17).value == 16

    def test_rejects_tiny(self):
        with pytest.raises(ValueError):
            w.wtc_exact(w.complete_graph(1))


class TestCliqueReduction:
    def test_p3(self):
        r = w.clique_reduction(w.path_graph(3), 3)
        assert (r.g_prime.n, r.g_prime.m) == (4, 4)
        assert r.added == {3: (0, 2)}
        assert r.k_prime == 3

    def test_k3_unchanged(self):
        r = w.clique_reduction(w.complete_graph(3), 3)
        assert r.g_prime == w.complete_graph(3)
        assert r.added == {}

    def test_c4(self):
        r = w.clique_reduction(w.cycle_graph(4), 3)
        assert (r.g_prime.n, r.g_prime.m) == (6, 8)
        assert w.is_prime(r.g_prime)

    def test_added_vertices_have_degree_two(self):
        r = w.clique_reduction(w.path_graph(5), 4)
        for x, (u, v) in r.added.items():
            assert r.g_prime.neighbors(x) == {u, v}
            assert not r.g_prime.has_edge(u, v)

    def test_vertex_count_formula(self):
        g = w.star_graph(5)
        nonadjacent = sum(
            1 for u in range(g.n) for v in range(u + 1, g.n) if not g.has_edge(u, v)
        )
        r = w.clique_reduction(g, 3)
        assert r.g_prime.n == g.n + nonadjacent

    def test_rejects_small_k(self):
        with pytest.raises(ValueError, match="k >= 3"):
            w.clique_reduction(w.path_graph(3), 2)

    def test_rejects_tiny_graph(self):
        with pytest.raises(ValueError):
            w.clique_reduction(w.complete_graph(1), 3)

    def test_serialization_roundtrip_with_comment_map(self):
        r = w.clique_reduction(w.path_graph(3), 3)
        text = reduction_edge_list(r)
        assert "added 3 for pair (0, 2)" in text
        assert w.parse_edge_list(text) == r.g_prime

    def test_clique_equivalence_spot(self):
        g = w.cycle_graph(6)
        r = w.clique_reduction(g, 3)
        assert (len(w.max_clique(r.g_prime)) >= 3) == (len(w.max_clique(g)) >= 3)
