import pytest

from zagreb.errors import DomainError
from zagreb.extremal import (
    Goal,
    Index,
    class_params,
    extremal_spec,
    is_admissible,
    realize,
)
from zagreb.indices import pi1, pi2_vertex
from zagreb.oracle import enumerate_free_trees
from zagreb.trees import DegreeSequence, degree_sequence_of, max_degree_count


class TestClassParams:
    @pytest.mark.parametrize(
        "n,k,delta,r,p,mu",
        [
            (11, 2, 5, 1, 0, 2),
            (10, 2, 5, 0, 0, 1),
            (10, 3, 3, 2, 2, 1),
        ],
    )
    def test_examples(self, n, k, delta, r, p, mu):
        cp = class_params(n, k)
        assert (cp.delta, cp.r, cp.p, cp.mu) == (delta, r, p, mu)

    def test_invariants_over_grid(self):
        for n in range(4, 40):
            for k in range(1, (n - 2) // 2 + 1):
                cp = class_params(n, k)
                assert 0 <= cp.r < k
                assert 1 <= cp.mu <= cp.delta - 2
                assert cp.mu == cp.r - cp.p * (cp.delta - 2) + 1
                # degree sum of the balanced extremal sequence
                total = cp.k * cp.delta + cp.p * (cp.delta - 1) + cp.mu + (n - cp.k - cp.p - 1)
                assert total == 2 * (n - 1)

    def test_path_class(self):
        cp = class_params(9, 7)
        assert cp.is_path and cp.delta == 2 and cp.p == 0 and cp.mu == 1

    def test_inadmissible(self):
        with pytest.raises(DomainError):
            class_params(8, 4)


class TestAdmissibility:
    def test_examples(self):
        assert is_admissible(10, 4)
        assert not is_admissible(8, 4)
        assert is_admissible(9, 7)

    def test_witness_for_10_4(self):
        spec = extremal_spec(10, 4, Index.PI1, Goal.MIN)
        t = realize(spec.sequence)
        assert max_degree_count(t) == (3, 4)

    def test_8_4_empty_by_enumeration(self):
        # none of the 23 trees on 8 vertices has exactly 4 max-degree vertices
        trees = list(enumerate_free_trees(8))
        assert len(trees) == 23
        assert all(max_degree_count(t)[1] != 4 for t in trees)

    def test_precondition(self):
        with pytest.raises(DomainError):
            is_admissible(1, 1)
        with pytest.raises(DomainError):
            is_admissible(10, 0)


class TestExtremalSpec:
    def test_class_11_2(self):
        expected = {
            (Index.PI1, Goal.MIN): ((5, 5, 2) + (1,) * 8, 2500),
            (Index.PI1, Goal.MAX): ((3, 3, 2, 2, 2, 2, 2, 1, 1, 1, 1), 82944),
            (Index.PI2, Goal.MIN): ((3, 3, 2, 2, 2, 2, 2, 1, 1, 1, 1), 746496),
            (Index.PI2, Goal.MAX): ((5, 5, 2) + (1,) * 8, 39062500),
        }
        for (index, goal), (seq, bound) in expected.items():
            spec = extremal_spec(11, 2, index, goal)
            assert spec.sequence.degrees == seq
            assert spec.bound.exact == bound

    def test_bound_equals_index_of_sequence(self):
        for n in range(4, 30):
            for k in [*range(1, (n - 2) // 2 + 1), n - 2]:
                for index in Index:
                    for goal in Goal:
                        spec = extremal_spec(n, k, index, goal)
                        evaluate = pi1 if index is Index.PI1 else pi2_vertex
                        assert evaluate(spec.sequence).exact == spec.bound.exact
                        assert sum(spec.sequence.degrees) == 2 * (n - 1)

    def test_path_case_all_equal(self):
        for n in range(4, 12):
            bounds = {
                extremal_spec(n, n - 2, i, g).bound.exact for i in Index for g in Goal
            }
            assert bounds == {4 ** (n - 2)}
            seq = extremal_spec(n, n - 2, Index.PI1, Goal.MAX).sequence.degrees
            assert seq == (2,) * (n - 2) + (1, 1)

    def test_delta3_classes_collapse(self):
        # when the class forces delta = 3 the min and max sequences coincide
        for n in range(8, 30):
            for k in range(1, (n - 2) // 2 + 1):
                if class_params(n, k).delta != 3:
                    continue
                lo = extremal_spec(n, k, Index.PI1, Goal.MIN)
                hi = extremal_spec(n, k, Index.PI1, Goal.MAX)
                assert lo.sequence == hi.sequence
                assert lo.bound.exact == hi.bound.exact

    def test_exactly_k_max_entries(self):
        for n in range(4, 25):
            for k in [*range(1, (n - 2) // 2 + 1), n - 2]:
                for index, goal in ((Index.PI1, Goal.MIN), (Index.PI1, Goal.MAX)):
                    seq = extremal_spec(n, k, index, goal).sequence.degrees
                    assert seq.count(seq[0]) == k

    def test_monotone_in_k(self):
        # max-pi1 bound strictly decreasing, min-pi2 strictly increasing in k
        for n in range(6, 41):
            ks = range(1, (n - 2) // 2 + 1)
            maxes = [extremal_spec(n, k, Index.PI1, Goal.MAX).bound.exact for k in ks]
            mins = [extremal_spec(n, k, Index.PI2, Goal.MIN).bound.exact for k in ks]
            assert all(a > b for a, b in zip(maxes, maxes[1:]))
            assert all(a < b for a, b in zip(mins, mins[1:]))


class TestRealize:
    def test_unique_small_trees(self):
        assert sorted(realize(DegreeSequence((2, 2, 1, 1))).edges()) == [(0, 1), (0, 2), (1, 3)]
        star = realize(DegreeSequence((4, 1, 1, 1, 1)))
        assert star.degree(0) == 4

    def test_reproduces_sequence(self):
        d = DegreeSequence((3, 3, 2, 2, 2, 2, 2, 1, 1, 1, 1))
        t = realize(d)
        assert degree_sequence_of(t) == d
        assert max_degree_count(t) == (3, 2)

    def test_deterministic(self):
        d = DegreeSequence((4, 3, 2, 2, 1, 1, 1, 1, 1))
        assert realize(d) == realize(d)

    def test_rejects_non_tree_sequence(self):
        with pytest.raises(DomainError):
            realize(DegreeSequence((3, 3, 1, 1)))

    def test_witnesses_land_in_their_class(self):
        for n in range(4, 20):
            for k in [*range(1, (n - 2) // 2 + 1), n - 2]:
                spec = extremal_spec(n, k, Index.PI2, Goal.MAX)
                t = realize(spec.sequence)
                assert max_degree_count(t) == (spec.params.delta, k)
