import numpy as np
from hypothesis import given, settings, strategies as st

from nearhex.group import (
    GENERATORS, IDENTITY, ORDER, GroupElement, act_on_coords, build_group,
    conjugacy_class, conjugacy_class_reps, coord_action_table, coord_perm,
    cycle_type, hyperplane_orbit, preserves_lines, stabilizer_order,
)
from nearhex.veldkamp import (
    NHYPERPLANES, hyperplane_from_quadruple, quadruple_from_hyperplane,
    type_table,
)

import oracle

G = build_group()
elements = st.integers(0, ORDER - 1).map(lambda i: G[i])
coords = st.integers(1, NHYPERPLANES)


def test_order():
    assert len(G) == ORDER == 4320
    assert len(set(G)) == ORDER


def test_point_action_matches_oracle():
    for g in G[::97]:
        assert list(g.point_perm) == oracle.point_perm(g.sigma6, g.sigma3)


def test_generators_preserve_lines():
    assert all(preserves_lines(g) for g in GENERATORS)


@given(elements, elements)
def test_homomorphism(g, h):
    gh = g * h
    pp = tuple(g.point_perm[i] for i in h.point_perm)
    assert gh.point_perm == pp
    assert (g * g.inverse()) == IDENTITY


def test_classes():
    reps = conjugacy_class_reps()
    assert len(reps) == 33
    assert sum(c.size for c in reps) == ORDER
    sizes = [c.size for c in reps]
    assert sizes[:11] == [1, 15, 45, 15, 40, 40, 90, 90, 120, 144, 120]
    for c in reps:
        assert cycle_type(c.representative.sigma6) == c.cycle_type6


def test_class_sizes_by_conjugation():
    for c in conjugacy_class_reps()[::4]:
        assert len(conjugacy_class(c.representative)) == c.size


def test_class_names():
    names = [c.name for c in conjugacy_class_reps()]
    assert names[0] == "id"
    assert "(1 2)" in names
    assert "(1 2 3)(4 5 6)" in names
    assert "(1 2 3)(7 8)" in names
    assert "(7 8 9)" in names


@settings(max_examples=50, deadline=None)
@given(elements)
def test_coord_action_is_linear(g):
    perm = coord_perm(g)
    for a, b in ((1, 2), (5, 700), (1023, 17), (300, 301)):
        assert perm[a ^ b] == perm[a] ^ perm[b]
    assert sorted(perm[1:].tolist()) == list(range(1, NHYPERPLANES + 1))


@settings(max_examples=50, deadline=None)
@given(elements, coords)
def test_coord_perm_matches_point_action(g, c):
    assert coord_perm(g)[c] == act_on_coords(g, c)


def test_action_table():
    t = coord_action_table()
    assert t.shape == (ORDER, NHYPERPLANES + 1)
    i = G.index(GENERATORS[1])
    assert (t[i] == coord_perm(GENERATORS[1])).all()


@settings(max_examples=100, deadline=None)
@given(elements, coords)
def test_quadruple_action(g, c):
    # relabelling the quadruple agrees with moving the points
    q = quadruple_from_hyperplane(c)
    assert hyperplane_from_quadruple(g.apply_quadruple(q)) == act_on_coords(g, c)


@settings(max_examples=100, deadline=None)
@given(elements, coords)
def test_type_is_invariant(g, c):
    tt = type_table()
    assert tt[coord_perm(g)[c]] == tt[c]


def test_orbits_and_stabilizers():
    tt = type_table()
    want = {0: (30, 144), 1: (45, 96), 2: (18, 240), 3: (270, 16),
            4: (90, 48), 5: (120, 36), 6: (360, 12), 7: (90, 48)}
    for k, (size, stab) in want.items():
        c = int(np.flatnonzero(tt == k)[0])
        orb = hyperplane_orbit(c)
        assert len(orb) == size
        assert all(tt[x] == k for x in orb)
        assert stabilizer_order(c) == stab
        assert size * stab == ORDER


def test_element_str():
    g = GroupElement((1, 0, 2, 3, 4, 5), (1, 0, 2))
    assert str(g) == "(1 2)(7 8)"
    assert str(IDENTITY) == "id"
