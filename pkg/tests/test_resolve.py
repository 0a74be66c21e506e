from itertools import combinations

import pytest
from hypothesis import given, settings

from fracdim import config
from fracdim.errors import EqualVertices, SizeLimit
from fracdim.generators import complete, complete_bipartite, cycle, johnson, path
from fracdim.graph import cartesian_product, distance_matrix
from fracdim.resolve import (
    check_lemma_3_1,
    check_lemma_3_3,
    distance_vectors_distinct,
    find_twins,
    is_resolving_set,
    members,
    metric_dimension,
    metric_dimension_bruteforce,
    minimal_rows,
    r_min,
    r_set,
    resolution_system,
    to_mask,
)
from fracdim.verify import enumerate_connected_labeled_graphs, is_odd_cycle_graph, is_path_graph

from conftest import brute_dim, connected_graphs, floyd_warshall, naive_rset


class TestRSet:
    def test_complete_graph(self):
        dm = distance_matrix(complete(6))
        for x, y in combinations(range(6), 2):
            assert members(r_set(dm, x, y)) == [x, y]

    def test_c4_antipodal(self):
        assert members(r_set(distance_matrix(cycle(4)), 0, 2)) == [0, 2]

    def test_c6_distance_two(self):
        assert r_set(distance_matrix(cycle(6)), 0, 2).bit_count() == 4

    def test_equal_vertices(self):
        with pytest.raises(EqualVertices):
            r_set(distance_matrix(path(3)), 1, 1)


def test_resolution_system_examples():
    k3 = resolution_system(complete(3))
    assert len(k3.pairs) == 3
    assert all(rs.bit_count() == 2 for rs in k3.rsets)
    assert len(k3.distinct_rsets) == 3

    p3 = resolution_system(path(3))
    assert len(p3.pairs) == 3
    assert members(p3.rset(0, 2)) == [0, 2]

    c5 = resolution_system(cycle(5))
    assert len(c5.pairs) == 10
    assert {rs.bit_count() for rs in c5.rsets} == {4}
    assert sum(m for _, m in c5.distinct_rsets) == 10


@settings(max_examples=60, deadline=None)
@given(connected_graphs(max_n=8))
def test_rsets_match_naive(g):
    sys = resolution_system(g)
    d = floyd_warshall(g)
    assert len(sys.pairs) == g.n * (g.n - 1) // 2
    for (x, y), rs in zip(sys.pairs, sys.rsets):
        assert set(members(rs)) == naive_rset(d, x, y)
        assert rs >> x & 1 and rs >> y & 1
        assert sys.rset(y, x) == rs


def test_r_min_examples():
    assert r_min(complete(7))[0] == 2
    assert r_min(cycle(7))[0] == 6
    assert r_min(cartesian_product(complete(2), cycle(5))) == (6, (0, 6))
    # lexicographically least witness
    assert r_min(path(4)) == (3, (0, 2))


def test_is_resolving_set_examples():
    sys = resolution_system(path(6))
    assert is_resolving_set(sys, [0])
    assert is_resolving_set(sys, [5])
    k4 = resolution_system(complete(4))
    assert not any(is_resolving_set(k4, w) for w in combinations(range(4), 2))
    assert is_resolving_set(k4, range(4))
    assert is_resolving_set(k4, to_mask([0, 1, 2]))


@settings(max_examples=80, deadline=None)
@given(connected_graphs(max_n=7))
def test_resolving_iff_distinct_vectors(g):
    sys = resolution_system(g)
    dm = distance_matrix(g)
    for k in (1, 2):
        for w in combinations(range(g.n), k):
            assert is_resolving_set(sys, w) == distance_vectors_distinct(dm, w)


class TestMetricDimension:
    @pytest.mark.parametrize("n", range(2, 9))
    def test_paths(self, n):
        assert metric_dimension(path(n)) == (1, [0])

    @pytest.mark.parametrize("n", range(2, 8))
    def test_complete(self, n):
        k, w = metric_dimension(complete(n))
        assert k == n - 1 == brute_dim(complete(n))
        assert w == list(range(n - 1))

    def test_johnson_5_2(self):
        g = johnson(5, 2)
        sys = resolution_system(g)
        assert not any(is_resolving_set(sys, w) for w in combinations(range(10), 2))
        assert any(is_resolving_set(sys, w) for w in combinations(range(10), 3))
        assert metric_dimension(g)[0] == 3

    def test_cycles(self):
        assert all(metric_dimension(cycle(n))[0] == 2 for n in range(3, 12))

    def test_witness_is_lex_least(self):
        for g in [cycle(6), johnson(5, 2), complete_bipartite(2, 3), cartesian_product(path(3), complete(2))]:
            assert metric_dimension(g) == metric_dimension_bruteforce(g)

    @pytest.mark.parametrize("n", range(2, 6))
    def test_exhaustive_small(self, n):
        for g in enumerate_connected_labeled_graphs(n):
            assert metric_dimension(g) == metric_dimension_bruteforce(g)

    @pytest.mark.slow
    def test_exhaustive_six(self):
        for g in enumerate_connected_labeled_graphs(6):
            assert metric_dimension(g) == metric_dimension_bruteforce(g)

    @settings(max_examples=150, deadline=None)
    @given(connected_graphs(min_n=6, max_n=7))
    def test_random_seven(self, g):
        k, w = metric_dimension(g)
        assert k == brute_dim(g)
        assert (k, w) == metric_dimension_bruteforce(g)

    def test_size_limit(self):
        saved = config.limits.metric_dim_n
        try:
            config.configure(metric_dim_n=5)
            with pytest.raises(SizeLimit):
                metric_dimension(path(6))
        finally:
            config.configure(metric_dim_n=saved)


def test_minimal_rows():
    rows = [0b011, 0b111, 0b110, 0b011]
    assert minimal_rows(rows) == [0b011, 0b110]


@pytest.mark.parametrize("g", [complete(4), cycle(5), path(5), johnson(5, 2), complete_bipartite(2, 3)])
def test_lemma_3_1(g):
    assert check_lemma_3_1(g)


def test_lemma_3_1_size_limit():
    with pytest.raises(SizeLimit):
        check_lemma_3_1(path(13))


def test_lemma_3_3_examples():
    assert check_lemma_3_3(complete(4)) == (True, True)
    assert check_lemma_3_3(cycle(5)) == (False, False)
    assert check_lemma_3_3(cycle(6)) == (False, False)


class TestTwins:
    def test_complete(self):
        assert find_twins(distance_matrix(complete(4))) == list(combinations(range(4), 2))

    def test_path(self):
        assert find_twins(distance_matrix(path(4))) == []

    def test_k23(self, k23):
        assert find_twins(distance_matrix(k23)) == [(0, 1), (2, 3), (2, 4), (3, 4)]

    @settings(max_examples=60, deadline=None)
    @given(connected_graphs(max_n=7))
    def test_twin_rset_is_the_pair(self, g):
        sys = resolution_system(g)
        for u, v in find_twins(distance_matrix(g)):
            assert members(sys.rset(u, v)) == [u, v]


def _lemma_3_2_sweep(n):
    for g in enumerate_connected_labeled_graphs(n):
        r, _ = r_min(g)
        assert r >= 2
        assert (r == n - 1) == (is_path_graph(g) or is_odd_cycle_graph(g)), g.name


@pytest.mark.parametrize("n", range(3, 7))
def test_lemma_3_2_exhaustive(n):
    _lemma_3_2_sweep(n)


@pytest.mark.slow
def test_lemma_3_2_exhaustive_seven():
    config.configure(sweep_n=7)
    try:
        _lemma_3_2_sweep(7)
    finally:
        config.configure(sweep_n=6)
