import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chevalley.combinatorics import (GrassmannianParams, covers, dual_partition,
                                     enumerate_partitions, is_valid_partition,
                                     quantum_target)
from chevalley.errors import InstanceTooLargeError

from oracles import covers_by_filter

small_params = st.integers(2, 9).flatmap(
    lambda n: st.integers(1, n - 1).map(lambda k: GrassmannianParams(k, n)))


def partitions_of(params):
    return st.sampled_from(enumerate_partitions(params))


class TestParams:
    def test_derived_quantities(self):
        p = GrassmannianParams(2, 5)
        assert (p.dim, p.rank, p.fano_index) == (6, 10, 5)

    @pytest.mark.parametrize("k,n", [(0, 4), (4, 4), (5, 3), (-1, 2)])
    def test_invalid(self, k, n):
        with pytest.raises(ValueError):
            GrassmannianParams(k, n)


class TestEnumerate:
    def test_gr24_order(self):
        p = GrassmannianParams(2, 4)
        assert enumerate_partitions(p) == [
            (0, 0), (1, 0), (2, 0), (1, 1), (2, 1), (2, 2)]

    def test_gr12(self):
        assert enumerate_partitions(GrassmannianParams(1, 2)) == [(0,), (1,)]

    def test_gr36_count(self):
        assert len(enumerate_partitions(GrassmannianParams(3, 6))) == 20

    @given(small_params)
    def test_count_is_rank(self, p):
        parts = enumerate_partitions(p)
        assert len(parts) == p.rank
        assert len(set(parts)) == p.rank
        assert all(is_valid_partition(lam, p) for lam in parts)

    def test_rank_cap(self):
        with pytest.raises(InstanceTooLargeError):
            enumerate_partitions(GrassmannianParams(10, 30), rank_cap=1000)


class TestCovers:
    def test_examples(self):
        p = GrassmannianParams(2, 4)
        assert set(covers((1, 0), p)) == {(2, 0), (1, 1)}
        assert covers((2, 2), p) == []
        p36 = GrassmannianParams(3, 6)
        assert set(covers((2, 1, 0), p36)) == {(3, 1, 0), (2, 2, 0), (2, 1, 1)}

    @given(small_params, st.data())
    @settings(max_examples=40, deadline=None)
    def test_matches_brute_force(self, p, data):
        lam = data.draw(partitions_of(p))
        assert sorted(covers(lam, p)) == sorted(covers_by_filter(lam, p))


class TestQuantumTarget:
    def test_examples(self):
        assert quantum_target((2, 1), GrassmannianParams(2, 4)) == (0, 0)
        assert quantum_target((1, 1), GrassmannianParams(2, 4)) is None
        assert quantum_target((3, 3), GrassmannianParams(2, 5)) == (2, 0)

    @given(small_params, st.data())
    @settings(max_examples=60, deadline=None)
    def test_existence_and_weight(self, p, data):
        lam = data.draw(partitions_of(p))
        star = quantum_target(lam, p)
        exists = lam[0] == p.box_width and lam[-1] > 0
        assert (star is not None) == exists
        if star is not None:
            assert is_valid_partition(star, p)
            assert sum(star) == sum(lam) - (p.n - 1)


class TestDuality:
    def test_examples(self):
        assert dual_partition((0, 0), GrassmannianParams(2, 4)) == (0, 0)
        assert dual_partition((2, 0), GrassmannianParams(2, 4)) == (1, 1)
        assert dual_partition((3, 1), GrassmannianParams(2, 5)) == (2, 1, 1)

    @given(small_params, st.data())
    @settings(max_examples=60, deadline=None)
    def test_involution(self, p, data):
        lam = data.draw(partitions_of(p))
        mu = dual_partition(lam, p)
        assert is_valid_partition(mu, p.dual())
        assert dual_partition(mu, p.dual()) == lam

    @given(small_params)
    @settings(max_examples=30, deadline=None)
    def test_bijection(self, p):
        images = {dual_partition(lam, p) for lam in enumerate_partitions(p)}
        assert images == set(enumerate_partitions(p.dual()))

    @given(small_params, st.data())
    @settings(max_examples=40, deadline=None)
    def test_covers_commute_with_duality(self, p, data):
        lam = data.draw(partitions_of(p))
        q = p.dual()
        dual_covers = {dual_partition(mu, p) for mu in covers(lam, p)}
        assert dual_covers == set(covers(dual_partition(lam, p), q))
        star = quantum_target(lam, p)
        dual_star = quantum_target(dual_partition(lam, p), q)
        if star is None:
            assert dual_star is None
        else:
            assert dual_star == dual_partition(star, p)
