from itertools import combinations

import numpy as np
import pytest

from nearhex.geometry import (
    DUAD_INDEX, GQ_FULL, GQ_GRIDS, GQ_LINES, GQ_OVOIDS, GQ_PERPS, NH_LINES,
    NH_LINE_KINDS, NH_LINES_THROUGH, LineKind, QuadLabel, bits, build_gq,
    build_near_hexagon, classify_gq_subset, gperp_center, gq_label_table,
    is_geometric_hyperplane, is_gq_hyperplane, lines_inside, mask_of,
    nh_distances, nh_point, point_order, popcount, singular_hyperplane,
    triad_centers, type_one_line, LABEL_CODE,
)

import oracle


def D(a, b):
    return DUAD_INDEX[(a, b)]


def gmask(*duads):
    return mask_of(D(*d) for d in duads)


def test_gq_counts():
    points, lines = build_gq()
    assert len(points) == 15
    assert len(lines) == 15
    for p in range(15):
        assert sum(L >> p & 1 for L in GQ_LINES) == 3


def test_gq_lines_are_disjoint_duads():
    assert gmask((1, 2), (3, 4), (5, 6)) in GQ_LINES
    assert gmask((1, 2), (1, 3), (4, 5)) not in GQ_LINES


def test_gq_matches_oracle():
    ours = sorted(tuple(bits(L)) for L in GQ_LINES)
    assert ours == sorted(oracle.GQ_LINES)


def test_near_hexagon_counts():
    points, lines = build_near_hexagon()
    assert len(points) == 45 and len(lines) == 60
    assert len(NH_LINES) == 60
    assert all(len(t) == 4 for t in NH_LINES_THROUGH)
    assert NH_LINE_KINDS.count(LineKind.TYPE_ONE) == 15
    assert sorted(NH_LINES) == sorted(oracle.LINES)


def test_near_polygon_axiom():
    # every point has a unique nearest point on every line
    d = nh_distances()
    for x in range(45):
        for L in NH_LINES:
            ds = [d[x][p] for p in bits(L)]
            assert ds.count(min(ds)) == 1


def test_diameter():
    assert int(np.max(nh_distances())) == 3


def test_type_one_line():
    q = D(1, 2)
    assert type_one_line(q) == mask_of(nh_point(l, q) for l in range(3))


def test_singular_hyperplane_is_hyperplane():
    for x in range(45):
        s = singular_hyperplane(x)
        assert is_geometric_hyperplane(s)
        # x, its 8 neighbours, and 8 + 2 * 6 points at distance 2
        assert popcount(s) == 1 + 8 + 20


def test_hyperplane_predicate_rejects():
    assert not is_geometric_hyperplane((1 << 45) - 1)
    assert not is_geometric_hyperplane(0)
    assert not is_geometric_hyperplane(1)


def test_gq_hyperplane_census():
    hs = [s for s in range(1 << 15) if is_gq_hyperplane(s)]
    assert len(hs) == 31
    labels = [classify_gq_subset(s) for s in hs]
    assert labels.count(QuadLabel.PERP) == 15
    assert labels.count(QuadLabel.GRID) == 10
    assert labels.count(QuadLabel.OVOID) == 6
    assert len(GQ_PERPS) == 15 and len(GQ_GRIDS) == 10 and len(GQ_OVOIDS) == 6


def test_triads():
    # a star {12, 13, 14} has the single centre 56
    star = gmask((1, 2), (1, 3), (1, 4))
    assert triad_centers(star) == gmask((5, 6))
    assert classify_gq_subset(star) is QuadLabel.UNITR
    # a triangle {12, 13, 23} is centred by every duad of {4, 5, 6}
    tri = gmask((1, 2), (1, 3), (2, 3))
    assert triad_centers(tri) == gmask((4, 5), (4, 6), (5, 6))
    assert classify_gq_subset(tri) is QuadLabel.TRITR


def test_triad_errors():
    with pytest.raises(ValueError):
        triad_centers(gmask((1, 2), (3, 4), (5, 6)))   # a line
    with pytest.raises(ValueError):
        triad_centers(gmask((1, 2), (1, 3)))


def test_triad_center_count_census():
    # 80 triads: 60 unicentric and 20 tricentric
    counts = {1: 0, 3: 0}
    for t in combinations(range(15), 3):
        if any(not set(oracle.DUADS[a]) & set(oracle.DUADS[b])
               for a, b in combinations(t, 2)):
            continue
        counts[popcount(triad_centers(mask_of(t)))] += 1
    assert counts == {1: 60, 3: 20}


def test_gperp():
    c = D(1, 2)
    grid = next(G for G in GQ_GRIDS if G >> c & 1)
    s = 0
    for L in GQ_LINES:
        if L >> c & 1 and L & grid == L:
            s |= L
    assert popcount(s) == 5
    assert gperp_center(s) == c
    assert classify_gq_subset(s) is QuadLabel.GPERP
    assert gperp_center(GQ_OVOIDS[0]) is None


def test_point_order():
    grid_layer = GQ_GRIDS[0]
    core = grid_layer | grid_layer << 15 | grid_layer << 30
    for p in bits(core):
        assert point_order(core, p) == 3
    assert lines_inside(core) == 27
    with pytest.raises(ValueError):
        point_order(core, bits((1 << 45) - 1 ^ core)[0])


def test_label_table_total():
    table = gq_label_table()
    assert len(table) == 1 << 15
    assert table[GQ_FULL] == LABEL_CODE[QuadLabel.FULL]
    assert table[0] == LABEL_CODE[QuadLabel.EMPTY]
    for s in (GQ_GRIDS[3], GQ_PERPS[7], GQ_OVOIDS[2], GQ_LINES[0], 1 << 4):
        assert QuadLabel(list(QuadLabel)[table[s]]) is classify_gq_subset(s)
