from fractions import Fraction

import pytest

from conftest import random_tree
from zagreb.errors import DomainError
from zagreb.extremal import Index, class_params, is_admissible
from zagreb.indices import pi1, pi2_edge
from zagreb.oracle import enumerate_free_trees
from zagreb.transform import (
    degree_shift_ratio,
    edge_rotating_capacity,
    f_ratio,
    g_ratio,
    leaf_reattach,
    leaf_reattach_chain,
    leaf_reattach_ratio,
    pair_shift_ratio,
)
from zagreb.trees import Tree, degree_sequence_of, max_degree_count


class TestRatioFunctions:
    def test_f_values(self):
        assert f_ratio(1, 1) == 0.5
        assert f_ratio(2, 1) == pytest.approx(2 / 3)
        assert f_ratio(2, 1) > f_ratio(1, 1)

    def test_f_bounded_and_increasing(self):
        for m in (1, 2, 5):
            xs = [0.1 + 0.05 * i for i in range(1000)]
            values = [f_ratio(x, m) for x in xs]
            assert all(0 < v < 1 for v in values)
            assert all(a < b for a, b in zip(values, values[1:]))

    def test_g_values(self):
        assert g_ratio(3, 1) == pytest.approx(27 / 256)
        assert g_ratio(1, 1) == pytest.approx(1 / 4)
        assert g_ratio(4, 1) < g_ratio(3, 1)

    def test_g_decreasing(self):
        for m in (1, 2, 5):
            xs = [0.5 + 0.05 * i for i in range(1000)]
            values = [g_ratio(x, m) for x in xs]
            assert all(a > b for a, b in zip(values, values[1:]))

    def test_domain(self):
        with pytest.raises(DomainError):
            f_ratio(0, 1)
        with pytest.raises(DomainError):
            g_ratio(1, 0)


class TestCapacity:
    def test_star(self):
        assert edge_rotating_capacity(Tree.from_edges(5, [(0, i) for i in range(1, 5)])) == 0

    def test_path(self):
        assert edge_rotating_capacity(Tree.from_edges(5, [(i, i + 1) for i in range(4)])) == 0

    def test_spider(self):
        t = Tree.from_edges(5, [(0, 1), (0, 2), (0, 3), (3, 4)])
        assert edge_rotating_capacity(t) == 1

    def test_capacity_at_least_k_below_max_delta(self):
        # trees whose max degree is below the class ceiling have capacity >= k
        for n in range(4, 11):
            for t in enumerate_free_trees(n):
                delta, k = max_degree_count(t)
                if is_admissible(n, k) and delta < class_params(n, k).delta:
                    assert edge_rotating_capacity(t) >= k


class TestLeafReattach:
    def hub_tree(self):
        # hub 0 with degree 5, one leg extended: pendent z1=7 via u1=5
        return Tree.from_edges(
            8, [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (5, 6), (6, 7)]
        )

    def test_degree_bookkeeping(self):
        t = self.hub_tree()
        result = leaf_reattach(t, u=0, u2=1, z1=7)
        assert result.n == t.n and len(list(result.edges())) == t.n - 1
        assert result.degree(0) == t.degree(0) - 1
        assert result.degree(7) == 2
        for v in range(t.n):
            if v not in (0, 7):
                assert result.degree(v) == t.degree(v)

    def test_exact_index_ratios(self):
        t = self.hub_tree()
        result = leaf_reattach(t, u=0, u2=1, z1=7)
        delta = 5
        r1 = Fraction(pi1(degree_sequence_of(result)).exact, pi1(degree_sequence_of(t)).exact)
        r2 = Fraction(pi2_edge(result).exact, pi2_edge(t).exact)
        assert r1 == leaf_reattach_ratio(delta, Index.PI1) == Fraction(4 * 16, 25)
        assert r2 == leaf_reattach_ratio(delta, Index.PI2) == Fraction(4 * 4**4, 5**5)
        assert r1 > 1 > r2

    def test_precondition_violations(self):
        t = self.hub_tree()
        with pytest.raises(DomainError):  # u not max degree
            leaf_reattach(t, u=5, u2=6, z1=4)
        with pytest.raises(DomainError):  # z1 not pendent
            leaf_reattach(t, u=0, u2=1, z1=6)
        with pytest.raises(DomainError):  # z1 sits in u2's branch
            leaf_reattach(t, u=0, u2=5, z1=7)
        with pytest.raises(DomainError):  # u2 not adjacent to u
            leaf_reattach(t, u=0, u2=7, z1=4)

    def test_z1_may_equal_u1(self):
        t = self.hub_tree()
        result = leaf_reattach(t, u=0, u2=5, z1=1)
        assert result.degree(0) == 4 and result.degree(1) == 2

    def test_chain_removes_old_max_degree(self, rng):
        for _ in range(20):
            t = random_tree(rng, rng.randint(9, 24))
            delta0, k0 = max_degree_count(t)
            if delta0 < 4:
                continue
            trees, moves = leaf_reattach_chain(t)
            assert len(trees) == len(moves) == k0
            final = trees[-1]
            assert all(final.degree(v) < delta0 for v in range(final.n))
            # pi1 strictly increases and pi2 strictly decreases along the chain
            chain = [t, *trees]
            for a, b in zip(chain, chain[1:]):
                assert pi1(degree_sequence_of(b)).exact > pi1(degree_sequence_of(a)).exact
                assert pi2_edge(b).exact < pi2_edge(a).exact

    def test_chain_needs_delta_4(self):
        with pytest.raises(DomainError):
            leaf_reattach_chain(Tree.from_edges(4, [(0, 1), (1, 2), (2, 3)]))


class TestDegreeShiftRatios:
    def test_examples(self):
        assert degree_shift_ratio(4, 2, Index.PI1) == Fraction(25, 64)
        assert degree_shift_ratio(4, 2, Index.PI2) == Fraction(3125, 1024)
        assert degree_shift_ratio(3, 2, Index.PI1) == Fraction(4, 9)

    def test_window_exhaustive(self):
        for delta in range(3, 31):
            for d_i in range(2, delta):
                assert degree_shift_ratio(delta, d_i, Index.PI1) < 1
                assert degree_shift_ratio(delta, d_i, Index.PI2) > 1

    def test_window_enforced(self):
        with pytest.raises(DomainError):
            degree_shift_ratio(4, 1, Index.PI1)
        with pytest.raises(DomainError):
            degree_shift_ratio(4, 4, Index.PI1)

    def test_pair_shift_exhaustive(self):
        for i in range(2, 31):
            for j in range(i, 31):
                assert pair_shift_ratio(i, j, Index.PI1) < 1
                assert pair_shift_ratio(i, j, Index.PI2) > 1
