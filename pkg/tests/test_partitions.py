import pytest
from hypothesis import given, strategies as st

from edcolor.coloring import validate
from edcolor.graph import GraphClassSpec, build
from edcolor.partitions import (
    EquitablePair,
    bipartite_coloring,
    chi_ed_complete_bipartite,
    equitable_pair_fast,
    equitable_partitions,
    equitable_partitions_by_filter,
    integer_partitions,
    min_equitable_pair,
)
from edcolor.solver import CHI_D, CHI_ED, exhaustive_oracle, solve


def pentagonal_count(n: int) -> int:
    """p(n) by Euler's pentagonal recurrence."""
    p = [1] + [0] * n
    for m in range(1, n + 1):
        k, total = 1, 0
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[m - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = total
    return p[n]


def test_integer_partitions_examples():
    assert integer_partitions(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert integer_partitions(1) == [(1,)]
    assert len(integer_partitions(7)) == 15


@pytest.mark.parametrize("n", range(1, 41, 3))
def test_partition_count_matches_pentagonal_recurrence(n):
    parts = integer_partitions(n)
    assert len(parts) == len(set(parts)) == pentagonal_count(n)
    assert all(sum(p) == n and list(p) == sorted(p, reverse=True) for p in parts)


@pytest.mark.parametrize("n", [0, 41])
def test_partition_cap(n):
    with pytest.raises(ValueError):
        integer_partitions(n)
    with pytest.raises(ValueError):
        equitable_partitions(n)


def test_equitable_partitions_examples():
    assert set(equitable_partitions(4)) == {(4,), (2, 2), (2, 1, 1), (1, 1, 1, 1)}
    assert [p for p in equitable_partitions(5) if len(p) == 2] == [(3, 2)]
    assert len(equitable_partitions(6)) == 6


@pytest.mark.parametrize("n", range(1, 31))
def test_equitable_partitions_direct_equals_filter(n):
    direct = equitable_partitions(n)
    assert len(direct) == n
    assert sorted(direct) == sorted(equitable_partitions_by_filter(n))


def test_min_equitable_pair_examples():
    assert min_equitable_pair(2, 4) == EquitablePair((2,), (2, 2))
    assert min_equitable_pair(2, 4).color_count == 3
    assert min_equitable_pair(2, 2) == EquitablePair((2,), (2,))
    assert min_equitable_pair(1, 5) == EquitablePair((1,), (2, 2, 1))
    assert min_equitable_pair(2, 7) == EquitablePair((2,), (3, 2, 2))
    assert min_equitable_pair(2, 7).color_count == 4


def test_equitable_pair_rejects_spread():
    with pytest.raises(ValueError):
        EquitablePair((3,), (1,))


def test_chi_ed_complete_bipartite_examples():
    assert chi_ed_complete_bipartite(2, 2) == 2
    assert chi_ed_complete_bipartite(3, 3) == 2
    assert [chi_ed_complete_bipartite(2, 4 + 3 * i) for i in range(3)] == [3, 4, 5]


@pytest.mark.parametrize("a", range(1, 13))
def test_fast_path_matches_enumeration(a):
    for b in range(1, 13):
        assert equitable_pair_fast(a, b).color_count == min_equitable_pair(a, b).color_count


@given(st.integers(1, 60), st.integers(1, 60))
def test_symmetry_and_floor(a, b):
    value = chi_ed_complete_bipartite(a, b)
    assert value == chi_ed_complete_bipartite(b, a)
    assert value >= 2


@pytest.mark.parametrize("a,b", [(a, b) for a in range(1, 10) for b in range(1, 10) if a + b <= 10])
def test_reduction_matches_solver(a, b):
    g = build(GraphClassSpec("complete-bipartite", (a, b)))
    assert chi_ed_complete_bipartite(a, b) == exhaustive_oracle(g, CHI_ED) == solve(g, CHI_ED).value
    assert solve(g, CHI_D).value == 2
    coloring = bipartite_coloring(a, b)
    assert coloring.k == chi_ed_complete_bipartite(a, b)
    assert validate(g, coloring).equitable_dominator
