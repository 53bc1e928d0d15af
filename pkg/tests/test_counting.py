import math
from fractions import Fraction

import pytest

from wpnlab.census import graph_from_edge_mask
from wpnlab.counting import (
    PowBellBound,
    SetPartition,
    UniformPartitionSampler,
    bell,
    c2l_lower_bound,
    component_count,
    f_star,
    growth_bounds_hold,
    iter_set_partitions,
    labeled_cograph_count,
    le_times_log2,
    partition_stats,
    sample_uniform_partition,
    vertices_in_blocks_larger_than,
)
from wpnlab.families import FamilySpec, member


def test_bell_spot_values():
    assert [bell(n) for n in range(8)] == [1, 1, 2, 5, 15, 52, 203, 877]
    with pytest.raises(ValueError):
        bell(-1)


def test_bell_matches_enumeration():
    for n in range(9):
        assert bell(n) == sum(1 for _ in iter_set_partitions(n))


def test_bell_cross_recurrence():
    # B_{n+1} = sum_k C(n,k) B_k
    for n in range(30):
        assert bell(n + 1) == sum(math.comb(n, k) * bell(k) for k in range(n + 1))


def _all_labeled(n):
    for mask in range(1 << (n * (n - 1) // 2)):
        yield graph_from_edge_mask(n, mask)


_COMPONENT_FAMILY = {
    1: "stars-triangles-co",
    2: "stars-cliques-co",
    3: "split-join-components-co",
}


@pytest.mark.parametrize("i", [1, 2, 3])
def test_component_count_matches_oracle(i):
    """c_i(s) = labeled connected graphs allowed as a complement component,
    brute-forced for s <= 5."""
    fam = FamilySpec.named(_COMPONENT_FAMILY[i])
    for s in range(1, 6):
        oracle = sum(1 for g in _all_labeled(s)
                     if g.is_connected() and member(fam, g.complement()))
        assert component_count(i, s) == oracle, (i, s)


@pytest.mark.parametrize("i", [1, 2, 3])
def test_f_star_matches_brute_force(i):
    fam = FamilySpec.named(_COMPONENT_FAMILY[i])
    for n in range(6):
        oracle = sum(1 for g in _all_labeled(n) if member(fam, g))
        assert f_star(i, n) == oracle, (i, n)


def test_f_star_spot_values():
    assert f_star(1, 4) == 30
    assert f_star(3, 4) == 37


def test_f_star_sandwich_and_monotone():
    for i in (1, 2, 3):
        prev = 0
        for n in range(60):
            assert bell(n) <= f_star(i, n) <= 2 ** n * bell(n)
            assert f_star(i, n) >= prev
            prev = f_star(i, n)


def test_growth_bounds():
    assert all(growth_bounds_hold(i, n) for i in (1, 2, 3)
               for n in range(8, 60))


def test_labeled_cograph_count():
    assert labeled_cograph_count(3) == 8
    assert labeled_cograph_count(4) == 52
    for n in range(6):
        oracle = sum(1 for g in _all_labeled(n)
                     if member(FamilySpec.named("cograph"), g))
        assert labeled_cograph_count(n) == oracle
    assert all(labeled_cograph_count(n) < (2 * n) ** (2 * n)
               for n in range(1, 101))


def test_c2l_lower_bound():
    b = c2l_lower_bound(3, 4)
    assert b.is_integral() and b.exact_value() == 4
    b = c2l_lower_bound(8, 4)
    assert b.exponent == Fraction(56, 3) and b.bell_factor == bell(3)
    assert not b.is_integral()
    with pytest.raises(ValueError):
        b.exact_value()
    # 2^(56/3) * 5 is about 2.4e6
    assert b.le_int(2_500_000) and not b.le_int(2_000_000)
    assert b.ge_int(2_000_000)
    # vacuous census cross-check: every graph on 6 vertices is C8-free
    assert c2l_lower_bound(6, 4).le_int(2 ** 15)
    with pytest.raises(ValueError):
        c2l_lower_bound(5, 3)


def test_le_times_log2_exact():
    # log2(8) = 3 exactly: borderline cases on both sides
    assert le_times_log2(3, 1, 8)
    assert not le_times_log2(4, 1, 8)
    assert le_times_log2(30, 10, 8)
    # 11*log2(500) ~ 98.62
    assert not le_times_log2(100, 11, 500)
    assert le_times_log2(98, 11, 500)


def test_set_partition_validation():
    SetPartition(3, ((0, 1), (2,)))
    with pytest.raises(ValueError):
        SetPartition(3, ((0, 1), ()))
    with pytest.raises(ValueError):
        SetPartition(3, ((0, 1), (1, 2)))
    with pytest.raises(ValueError):
        SetPartition(4, ((0, 1), (2,)))


def test_partition_stats():
    p = SetPartition(6, ((0, 1, 2), (3,), (4, 5)))
    st = partition_stats(p)
    assert st.blocks == 3 and st.nonsingleton_blocks == 2
    assert vertices_in_blocks_larger_than(p, 2) == 3
    assert vertices_in_blocks_larger_than(p, 1) == 5


def test_sampler_determinism_and_bounds():
    a = [sample_uniform_partition(7, 123).blocks for _ in range(3)]
    assert a[0] == a[1] == a[2]
    s1 = UniformPartitionSampler(7, 9)
    s2 = UniformPartitionSampler(7, 9)
    assert [s1.sample() for _ in range(10)] == [s2.sample() for _ in range(10)]
    with pytest.raises(ValueError):
        UniformPartitionSampler(0, 1)
    with pytest.raises(ValueError):
        UniformPartitionSampler(2001, 1)


def test_sampler_n1_and_n2():
    assert sample_uniform_partition(1, 5).blocks == ((0,),)
    s = UniformPartitionSampler(2, 31)
    together = sum(1 for _ in range(40000) if len(s.sample().blocks) == 1)
    assert abs(together / 40000 - 0.5) < 0.01


def test_expected_block_identity_by_enumeration():
    # E[#blocks] = B_{n+1}/B_n - 1, exactly, via exhaustive enumeration
    for n in range(1, 9):
        total_blocks = sum(len(p) for p in iter_set_partitions(n))
        assert Fraction(total_blocks, bell(n)) == Fraction(bell(n + 1), bell(n)) - 1
