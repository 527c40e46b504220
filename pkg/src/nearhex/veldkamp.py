"""
Hyperplanes of L3 x GQ(2,2) as an F2 vector space.

A hyperplane is identified with its 10-bit coordinate vector over the basis
e_1..e_10, where e_i = e_i (x) f_1 and e_{i+5} = e_i (x) f_2 for i = 1..5.
The lift of e_i (x) f_j is the hyperplane that is deep on layer j-1 and
equals the ovoid e_i on the two other layers.

Internally point sets are handled through their complements: the Veldkamp
sum is XOR of complements, so the complement map is linear in coordinates.
The zero vector is the full point set and is not a hyperplane.
"""

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product

import numpy as np

from .geometry import (
    DUADS, GQ_FULL, NH_FULL, GQ_OVOIDS, GQ_PERPS, GQ_GRIDS, layer_slice,
)

NCOORDS = 10
NHYPERPLANES = (1 << NCOORDS) - 1
NLINES = NHYPERPLANES * (NHYPERPLANES - 1) // 6
ELEMENTS = frozenset(range(1, 7))

HTYPE_NAMES = ("H1", "H2", "H3", "H4", "H5", "H6", "H7", "H8")
# nonzero part sizes of the quadruple, largest first
HTYPE_OF_SHAPE = {
    (3, 3): 0, (4, 2): 1, (5, 1): 2, (2, 2, 1, 1): 3,
    (2, 2, 2): 4, (3, 1, 1, 1): 5, (3, 2, 1): 6, (4, 1, 1): 7,
}


class ZeroSum(ValueError):
    """Sum of a hyperplane with itself: the full point set."""


# ---------------------------------------------------------------------------
# GQ(2,2) level: the 5-dimensional space spanned by the ovoids

def crossing_mask(S):
    "duads split by S"
    S = set(S)
    m = 0
    for i, (a, b) in enumerate(DUADS):
        if (a in S) != (b in S):
            m |= 1 << i
    return m


def partition_comp(S):
    """
    Complement of the GQ hyperplane sum_{i in S} e_i.

    The hyperplane is the set of duads split by S when |S| is odd (ovoids,
    grids) and the unsplit ones when |S| is even (perps, the full quad).
    """
    m = crossing_mask(S)
    return m if len(S) % 2 == 0 else GQ_FULL ^ m


GQ_BASIS_COMP = tuple(GQ_FULL ^ GQ_OVOIDS[i] for i in range(5))


def gq_comp_from_coords(a):
    "complement mask of the GQ hyperplane with 5-bit coordinates a"
    m = 0
    for i in range(5):
        if a >> i & 1:
            m ^= GQ_BASIS_COMP[i]
    return m


GQ_COMP = tuple(gq_comp_from_coords(a) for a in range(32))
GQ_COORDS_OF_COMP = {m: a for a, m in enumerate(GQ_COMP)}


def gq_hyperplane(a):
    "points of the GQ hyperplane with nonzero 5-bit coordinates a"
    if not 0 < a < 32:
        raise ValueError("GQ hyperplane coordinates must be in 1..31")
    return GQ_FULL ^ GQ_COMP[a]


def gq_hyperplanes():
    "the 31 GQ(2,2) hyperplanes, indexed by coordinates 1..31"
    return [gq_hyperplane(a) for a in range(1, 32)]


def gq_coords(points):
    "5-bit coordinates of a GQ hyperplane (0 for the full quad)"
    return GQ_COORDS_OF_COMP[GQ_FULL ^ points]


def gq_veldkamp_lines():
    "the 155 lines of the GQ(2,2) Veldkamp space, as sorted coordinate triples"
    return [(a, b, a ^ b) for a in range(1, 32) for b in range(a + 1, 32)
            if (a ^ b) > b]


def ovoid_basis():
    """
    The six ovoids e_1..e_6 (15-bit masks) and the ten basis hyperplanes of
    the near hexagon (45-bit masks, coordinate vectors 1, 2, 4, ..., 512).
    """
    return GQ_OVOIDS, tuple(hyperplane_points(1 << i) for i in range(NCOORDS))


# ---------------------------------------------------------------------------
# set partitions {S|T}

@dataclass(frozen=True, order=True)
class SetPartition:
    """Two-block partition {S|T} of {1..6}; canonical with 1 in S."""
    S: frozenset

    def __post_init__(self):
        S = frozenset(self.S)
        if not S or S == ELEMENTS or not S <= ELEMENTS:
            raise ValueError("not a nontrivial partition: %s" % sorted(S))
        if 1 not in S:
            S = ELEMENTS - S
        object.__setattr__(self, "S", S)

    @property
    def T(self):
        return ELEMENTS - self.S

    @property
    def shape(self):
        return tuple(sorted((len(self.S), len(self.T)), reverse=True))

    def hyperplane(self):
        "the GQ hyperplane sum_{i in S} e_i"
        return GQ_FULL ^ partition_comp(self.S)

    def __str__(self):
        return "{%s|%s}" % ("".join(map(str, sorted(self.S))),
                            "".join(map(str, sorted(self.T))))


def all_set_partitions():
    out = set()
    for m in range(1, 63):
        out.add(SetPartition(frozenset(i + 1 for i in range(6) if m >> i & 1)))
    return sorted(out, key=lambda p: (sorted(p.S), str(p)))


def partition_sum(p1, p2):
    "{A|B} + {C|D} = {(A&C)|(B&D) | (A&D)|(B&C)}"
    if p1 == p2:
        raise ZeroSum("a partition summed with itself")
    A, B, C, D = p1.S, p1.T, p2.S, p2.T
    return SetPartition((A & C) | (B & D))


def partition_of_gq_hyperplane(points):
    "inverse of SetPartition.hyperplane"
    S = _set_of_comp().get(GQ_FULL ^ points)
    if S is None or len(S) == 6:
        raise ValueError("not a GQ(2,2) hyperplane")
    return SetPartition(S)


@lru_cache(maxsize=None)
def _partition_table():
    # sets containing 1, keyed implicitly by their crossing masks
    return tuple(frozenset({1} | {i + 2 for i in range(5) if m >> i & 1})
                 for m in range(32))


@lru_cache(maxsize=None)
def _set_of_comp():
    return {partition_comp(S): S for S in _partition_table()}


# ---------------------------------------------------------------------------
# near hexagon level

def layer_comps(c):
    "complement masks of the three layers of the hyperplane with coords c"
    a, b = c & 31, c >> 5
    ca, cb = GQ_COMP[a], GQ_COMP[b]
    return cb, ca, ca ^ cb


def coords_from_layer_comps(l0, l1, l2):
    if l0 ^ l1 ^ l2:
        raise ValueError("layers do not sum to zero")
    return GQ_COORDS_OF_COMP[l1] | GQ_COORDS_OF_COMP[l0] << 5


def hyperplane_points(c):
    "45-bit point set of the hyperplane with coordinates c (1..1023)"
    if not 0 < c <= NHYPERPLANES:
        raise ValueError("coordinates must be in 1..1023, got %r" % c)
    comp = 0
    for layer, lc in enumerate(layer_comps(c)):
        comp |= lc << (15 * layer)
    return NH_FULL ^ comp


@lru_cache(maxsize=None)
def point_table():
    "uint64 array: point masks of all coordinate vectors (index 0 = full set)"
    t = np.zeros(NHYPERPLANES + 1, dtype=np.uint64)
    t[0] = NH_FULL
    for c in range(1, NHYPERPLANES + 1):
        t[c] = hyperplane_points(c)
    return t


@lru_cache(maxsize=None)
def coords_of_points():
    "dict: 45-bit point mask -> coordinates"
    return {int(m): c for c, m in enumerate(point_table()) if c}


def coords_from_points(points):
    try:
        return coords_of_points()[points]
    except KeyError:
        raise ValueError("not a hyperplane of L3 x GQ(2,2)") from None


# ---------------------------------------------------------------------------
# quadruples (A, B, C, D)

V4 = (0, 1, 2, 3)


@dataclass(frozen=True)
class Quadruple:
    """
    Ordered quadruple of pairwise disjoint sets covering {1..6}, stored as the
    part index (0..3 for A..D) of each element 1..6.
    """
    parts: tuple

    def __post_init__(self):
        if len(self.parts) != 6 or any(p not in (0, 1, 2, 3) for p in self.parts):
            raise ValueError("bad part assignment %r" % (self.parts,))
        if len(set(self.parts)) < 2:
            raise ValueError("three of the four sets are empty")

    @classmethod
    def from_sets(cls, A, B, C=(), D=()):
        sets = [set(A), set(B), set(C), set(D)]
        seen = set()
        for s in sets:
            if seen & s:
                raise ValueError("sets are not pairwise disjoint")
            seen |= s
        if seen != ELEMENTS:
            raise ValueError("sets do not cover {1..6}")
        return cls(tuple(next(k for k in range(4) if i in sets[k])
                         for i in range(1, 7)))

    def sets(self):
        return tuple(frozenset(i + 1 for i in range(6) if self.parts[i] == k)
                     for k in range(4))

    def canonical(self):
        "least image under the Klein four-group (element 1 ends up in A)"
        return min((Quadruple(tuple(p ^ k for p in self.parts)) for k in V4),
                   key=lambda q: q.parts)

    def shape(self):
        sizes = [len(s) for s in self.sets() if s]
        return tuple(sorted(sizes, reverse=True))

    def __str__(self):
        return "(%s)" % ",".join("".join(map(str, sorted(s))) or "-"
                                 for s in self.sets())


def all_quadruples():
    "the 4**6 - 4 ordered quadruples with at most two empty sets"
    return [Quadruple(p) for p in product(range(4), repeat=6)
            if len(set(p)) >= 2]


def _quadruple_layer_comps(q):
    A = {i + 1 for i in range(6) if q.parts[i] == 0}
    comps = []
    for k in (1, 2, 3):
        X = A | {i + 1 for i in range(6) if q.parts[i] == k}
        comps.append(partition_comp(X))
    return comps


def hyperplane_from_quadruple(q):
    "coordinates of the hyperplane with layers {A+B|C+D}, {A+C|B+D}, {A+D|B+C}"
    return coords_from_layer_comps(*_quadruple_layer_comps(q))


def quadruple_points(q):
    "45-bit point set of a quadruple, built layer by layer without coordinates"
    pts = 0
    for layer, lc in enumerate(_quadruple_layer_comps(q)):
        pts |= (GQ_FULL ^ lc) << (15 * layer)
    return pts


def quadruple_from_hyperplane(c):
    "canonical quadruple of the hyperplane with coordinates c"
    sets = [_set_of_comp()[lc] for lc in layer_comps(c)]
    # with 1 in each of A+B, A+C, A+D the membership pattern is odd
    pattern = {(1, 1, 1): 0, (1, 0, 0): 1, (0, 1, 0): 2, (0, 0, 1): 3}
    parts = tuple(pattern[tuple(int(i in X) for X in sets)]
                  for i in range(1, 7))
    return Quadruple(parts)


@lru_cache(maxsize=None)
def type_table():
    "int8 array: H-type index (0..7) of every coordinate vector (index 0 unused)"
    t = np.full(NHYPERPLANES + 1, -1, dtype=np.int8)
    for c in range(1, NHYPERPLANES + 1):
        t[c] = HTYPE_OF_SHAPE[quadruple_from_hyperplane(c).shape()]
    return t


def hyperplane_type(c):
    "'H1'..'H8' for the hyperplane with coordinates c"
    return HTYPE_NAMES[type_table()[c]]


@dataclass(frozen=True, order=True)
class Hyperplane:
    """A hyperplane of L3 x GQ(2,2), keyed by its coordinate vector."""
    coords: int

    def __post_init__(self):
        if not 0 < self.coords <= NHYPERPLANES:
            raise ValueError("coordinates must be in 1..1023, got %r"
                             % self.coords)

    @cached_property
    def points(self):
        return hyperplane_points(self.coords)

    @cached_property
    def quadruple(self):
        return quadruple_from_hyperplane(self.coords)

    @property
    def type(self):
        return hyperplane_type(self.coords)

    def layer(self, k):
        "15-bit trace on layer k (GQ_FULL when the layer is deep)"
        return layer_slice(self.points, k)

    def __add__(self, other):
        return veldkamp_sum(self, other)

    @classmethod
    def from_points(cls, points):
        return cls(coords_from_points(points))

    @classmethod
    def from_quadruple(cls, q):
        return cls(hyperplane_from_quadruple(q))


def veldkamp_sum(h1, h2):
    "complement of the symmetric difference; XOR in coordinates"
    if h1.coords == h2.coords:
        raise ZeroSum("a hyperplane summed with itself")
    return Hyperplane(h1.coords ^ h2.coords)


def veldkamp_sum_points(s1, s2, full=NH_FULL):
    "the same sum on raw point sets"
    s = full ^ (s1 ^ s2)
    if s == full:
        raise ZeroSum("sum is the whole point set")
    return s


def enumerate_hyperplanes():
    "all 1023 hyperplanes, by coordinates"
    return [Hyperplane(c) for c in range(1, NHYPERPLANES + 1)]


def hyperplanes_from_quadruples():
    "set of point masks obtained from all valid quadruples"
    return {quadruple_points(q) for q in all_quadruples()}


@lru_cache(maxsize=None)
def enumerate_veldkamp_lines():
    """
    All Veldkamp lines {h1, h2, h1^h2}, as an (174251, 3) int16 array of
    sorted coordinate triples in lexicographic order.
    """
    c = np.arange(1, NHYPERPLANES + 1, dtype=np.int32)
    h1, h2 = np.meshgrid(c, c, indexing="ij")
    h3 = h1 ^ h2
    keep = (h1 < h2) & (h2 < h3)
    out = np.stack([h1[keep], h2[keep], h3[keep]], axis=1).astype(np.int16)
    out.setflags(write=False)
    return out


@lru_cache(maxsize=None)
def line_index_table():
    """
    int32 array of shape (1024, 1024): index of the line through two distinct
    hyperplanes, or -1.
    """
    lines = enumerate_veldkamp_lines().astype(np.int64)
    t = np.full((NHYPERPLANES + 1, NHYPERPLANES + 1), -1, dtype=np.int32)
    idx = np.arange(len(lines), dtype=np.int32)
    for i, j in ((0, 1), (0, 2), (1, 2)):
        t[lines[:, i], lines[:, j]] = idx
        t[lines[:, j], lines[:, i]] = idx
    t.setflags(write=False)
    return t


def canonical_line(h1, h2):
    "sorted triple of the line through two distinct coordinate vectors"
    if h1 == h2:
        raise ZeroSum("a Veldkamp line needs two distinct hyperplanes")
    return tuple(sorted((h1, h2, h1 ^ h2)))


def gq_hyperplane_census():
    "counts of perps, grids and ovoids among the 31 GQ(2,2) hyperplanes"
    hs = gq_hyperplanes()
    return {
        "perp": sum(h in GQ_PERPS for h in hs),
        "grid": sum(h in GQ_GRIDS for h in hs),
        "ovoid": sum(h in GQ_OVOIDS for h in hs),
    }


def gq_rank_of_ovoids():
    "F2 rank of the six ovoid complements (as 15-bit vectors)"
    rows = [GQ_FULL ^ o for o in GQ_OVOIDS]
    rank = 0
    for bit in range(15):
        k = next((k for k, r in enumerate(rows) if r >> bit & 1), None)
        if k is None:
            continue
        piv = rows.pop(k)
        rows = [r ^ piv if r >> bit & 1 else r for r in rows]
        rank += 1
    return rank
