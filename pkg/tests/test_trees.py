import pytest

from conftest import random_tree
from zagreb.errors import DomainError, NotATreeError
from zagreb.trees import (
    DegreeSequence,
    Tree,
    degree_sequence_of,
    is_tree_sequence,
    max_degree_count,
)


def path(n):
    return Tree.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star(n):
    return Tree.from_edges(n, [(0, i) for i in range(1, n)])


class TestConstruction:
    def test_path_and_star(self):
        assert path(4).adj == ((1,), (0, 2), (1, 3), (2,))
        assert star(4).degree(0) == 3

    def test_self_loop_rejected(self):
        with pytest.raises(NotATreeError, match="self-loop"):
            Tree.from_edges(2, [(0, 0)])

    def test_duplicate_edge_rejected(self):
        with pytest.raises(NotATreeError, match="duplicate"):
            Tree.from_edges(3, [(0, 1), (1, 0), (1, 2)])

    def test_disconnected_rejected(self):
        with pytest.raises(NotATreeError, match="disconnected"):
            Tree.from_edges(4, [(0, 1), (2, 3)])

    def test_cycle_rejected(self):
        with pytest.raises(NotATreeError, match="edges"):
            Tree.from_edges(3, [(0, 1), (1, 2), (2, 0)])

    def test_out_of_range_rejected(self):
        with pytest.raises(NotATreeError, match="out of range"):
            Tree.from_edges(2, [(0, 2)])

    def test_edge_sum_invariant_random(self, rng):
        for _ in range(50):
            t = random_tree(rng, rng.randint(2, 40))
            degs = [t.degree(v) for v in range(t.n)]
            assert sum(degs) == 2 * (t.n - 1)
            assert len(list(t.edges())) == t.n - 1


class TestDegreeSequence:
    def test_path_on_4(self):
        assert degree_sequence_of(path(4)).degrees == (2, 2, 1, 1)

    def test_star_on_5(self):
        assert degree_sequence_of(star(5)).degrees == (4, 1, 1, 1, 1)

    def test_single_centre_of_degree_4(self):
        # one degree-4 hub with a lengthened leg
        t = Tree.from_edges(6, [(0, 1), (0, 2), (0, 3), (0, 4), (4, 5)])
        degs = degree_sequence_of(t).degrees
        assert degs.count(4) == 1
        assert degs[0] == 4

    def test_relabel_invariance(self, rng):
        for _ in range(25):
            n = rng.randint(2, 30)
            t = random_tree(rng, n)
            perm = list(range(n))
            rng.shuffle(perm)
            assert degree_sequence_of(t.relabel(perm)) == degree_sequence_of(t)

    def test_must_be_sorted(self):
        with pytest.raises(DomainError):
            DegreeSequence((1, 2))
        assert DegreeSequence.of([1, 2]).degrees == (2, 1)

    def test_single_vertex(self):
        assert degree_sequence_of(Tree.from_edges(1, [])).degrees == (0,)


class TestIsTreeSequence:
    def test_examples(self):
        assert is_tree_sequence([2, 2, 1, 1])
        assert not is_tree_sequence([3, 3, 1, 1])
        assert is_tree_sequence([5, 5, 1, 1, 1, 1, 1, 1, 1, 1])

    def test_rejects_nonpositive(self):
        with pytest.raises(DomainError):
            is_tree_sequence([2, 1, 0, 1])
        with pytest.raises(DomainError):
            is_tree_sequence([])


class TestMaxDegreeCount:
    def test_path_on_6(self):
        assert max_degree_count(path(6)) == (2, 4)

    def test_star_on_6(self):
        assert max_degree_count(star(6)) == (5, 1)

    def test_double_star(self):
        t = Tree.from_edges(6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)])
        assert max_degree_count(t) == (3, 2)
