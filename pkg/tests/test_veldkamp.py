from collections import Counter
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from nearhex.geometry import (
    GQ_FULL, QuadLabel, classify_gq_subset, is_geometric_hyperplane,
    is_gq_hyperplane, layer_slice, popcount,
)
from nearhex.veldkamp import (
    NHYPERPLANES, Hyperplane, Quadruple, SetPartition, ZeroSum,
    all_quadruples, all_set_partitions, canonical_line,
    enumerate_veldkamp_lines, gq_hyperplanes,
    gq_rank_of_ovoids, gq_veldkamp_lines, hyperplane_from_quadruple,
    hyperplanes_from_quadruples, partition_of_gq_hyperplane, partition_sum,
    point_table, quadruple_from_hyperplane, quadruple_points, type_table,
    veldkamp_sum, veldkamp_sum_points,
)

import oracle

coords = st.integers(1, NHYPERPLANES)


def P(*S):
    return SetPartition(frozenset(S))


# --- GQ(2,2) level ----------------------------------------------------------

def test_gq_hyperplanes_match_oracle():
    assert sorted(gq_hyperplanes()) == sorted(
        s for s in oracle.gq_hyperplanes() if s != GQ_FULL)


def test_partition_labels():
    assert classify_gq_subset(P(1).hyperplane()) is QuadLabel.OVOID
    assert classify_gq_subset(P(1, 2).hyperplane()) is QuadLabel.PERP
    assert classify_gq_subset(P(1, 2, 3).hyperplane()) is QuadLabel.GRID
    assert len(all_set_partitions()) == 31


def test_partition_sum_examples():
    # e1 + e2 is the perp of the duad 12; e1 + e2 + e3 is a grid
    assert partition_sum(P(1), P(2)) == P(1, 2)
    assert partition_sum(P(1, 2), P(3)) == P(1, 2, 3)
    assert partition_sum(P(1, 2, 3), P(1, 4)) == P(1, 5, 6)


def test_partition_sum_self_is_zero():
    with pytest.raises(ZeroSum):
        partition_sum(P(1, 2), P(3, 4, 5, 6))


def test_partition_and_veldkamp_sum_agree():
    # all pairs of the 31 GQ(2,2) hyperplanes
    parts = all_set_partitions()
    for p, q in combinations(parts, 2):
        pts = veldkamp_sum_points(p.hyperplane(), q.hyperplane(), GQ_FULL)
        assert partition_sum(p, q).hyperplane() == pts
        assert partition_of_gq_hyperplane(pts) == partition_sum(p, q)


def test_gq_involution_exhaustive():
    hs = gq_hyperplanes()
    for a, b in combinations(hs, 2):
        c = veldkamp_sum_points(a, b, GQ_FULL)
        assert is_gq_hyperplane(c)
        assert veldkamp_sum_points(c, b, GQ_FULL) == a


def test_gq_lines_and_rank():
    assert len(gq_veldkamp_lines()) == 31 * 30 // 6
    assert gq_rank_of_ovoids() == 5


# --- the near hexagon ------------------------------------------------------

def test_all_hyperplanes():
    P_ = point_table()
    ours = sorted(int(P_[c]) for c in range(1, NHYPERPLANES + 1))
    assert len(set(ours)) == NHYPERPLANES
    assert all(is_geometric_hyperplane(s) for s in ours)
    assert ours == oracle.hyperplanes()


def test_quadruple_enumeration():
    assert len(all_quadruples()) == 4 ** 6 - 4
    span = {int(x) for x in point_table()[1:]}
    assert hyperplanes_from_quadruples() == span
    assert (4 ** 6 - 4) // 4 == 1023


def test_quadruple_routes_agree():
    for q in all_quadruples():
        c = hyperplane_from_quadruple(q)
        assert int(point_table()[c]) == quadruple_points(q)


def test_quadruple_round_trip():
    for c in range(1, NHYPERPLANES + 1):
        q = quadruple_from_hyperplane(c)
        assert hyperplane_from_quadruple(q) == c
        assert q == q.canonical()


def test_v4_invariance():
    for q in all_quadruples()[::7]:
        for k in (1, 2, 3):
            moved = Quadruple(tuple(p ^ k for p in q.parts))
            assert hyperplane_from_quadruple(moved) == hyperplane_from_quadruple(q)


def test_quadruple_validation():
    with pytest.raises(ValueError):
        Quadruple((0,) * 6)
    with pytest.raises(ValueError):
        Quadruple.from_sets({1, 2}, {2, 3, 4, 5, 6})
    with pytest.raises(ValueError):
        Quadruple.from_sets({1, 2}, {3, 4})


def test_top_deep():
    # C = D = empty: A+B covers everything on the first layer
    h = Hyperplane.from_quadruple(Quadruple.from_sets({1, 2, 3}, {4, 5, 6}))
    assert h.layer(0) == GQ_FULL
    assert classify_gq_subset(h.layer(1)) is QuadLabel.GRID
    assert h.layer(1) == h.layer(2)


def test_type_counts():
    types = Counter(type_table()[1:].tolist())
    assert [types[k] for k in range(8)] == [30, 45, 18, 270, 90, 120, 360, 90]


def test_layer_traces_are_gq_hyperplanes():
    for h in (Hyperplane(c) for c in range(1, NHYPERPLANES + 1, 5)):
        for k in range(3):
            s = h.layer(k)
            assert s == GQ_FULL or is_gq_hyperplane(s)


def test_zero_sum():
    h = Hyperplane(5)
    with pytest.raises(ZeroSum):
        h + h
    with pytest.raises(ValueError):
        Hyperplane(0)
    with pytest.raises(ValueError):
        Hyperplane(1024)


def test_line_count():
    lines = enumerate_veldkamp_lines()
    assert len(lines) == 174251 == 1023 * 1022 // 6
    assert all((r[0] ^ r[1]) == r[2] for r in lines[::997].tolist())


@settings(max_examples=10_000, deadline=None)
@given(coords, coords)
def test_involution(a, b):
    if a == b:
        return
    h1, h2 = Hyperplane(a), Hyperplane(b)
    s = veldkamp_sum(h1, h2)
    assert s.points == veldkamp_sum_points(h1.points, h2.points)
    assert veldkamp_sum(s, h2) == h1


@given(coords, coords)
def test_line_is_closed(a, b):
    if a == b:
        return
    x, y, z = canonical_line(a, b)
    P_ = point_table()
    # any two of the three meet in the common core
    core = int(P_[x]) & int(P_[y])
    assert core == int(P_[x]) & int(P_[z]) == int(P_[y]) & int(P_[z])
    assert popcount(core) > 0


@given(coords)
def test_hyperplane_from_points(c):
    h = Hyperplane(c)
    assert Hyperplane.from_points(h.points) == h
    assert Hyperplane.from_quadruple(h.quadruple) == h
    assert layer_slice(h.points, 0) == h.layer(0)
