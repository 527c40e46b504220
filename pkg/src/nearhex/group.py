"""
The automorphism group S6 x S3 of L3 x GQ(2,2).

S6 relabels {1..6} and so permutes duads diagonally on every layer; S3
permutes the three layers.  All 4320 elements are materialized, together
with their induced permutations of the 1023 hyperplane coordinate vectors.

Permutations are tuples ``p`` with ``p[i]`` the image of ``i``.  Elements of
{1..6} are 0-based inside ``sigma6``; the paper-style labels 7, 8, 9 of the
layer factor stand for layers 0, 1, 2.
"""

from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import factorial

import numpy as np

from .geometry import DUADS, DUAD_INDEX, NH_WIDTH, NH_LINES, bits, mask_of
from .veldkamp import (
    NCOORDS, NHYPERPLANES, GQ_COMP, GQ_COORDS_OF_COMP, Quadruple,
    coords_from_points, enumerate_veldkamp_lines, hyperplane_points,
)

ORDER = factorial(6) * factorial(3)

# Table 2 order of the cycle types
PARTITIONS6 = (
    (1, 1, 1, 1, 1, 1), (2, 1, 1, 1, 1), (2, 2, 1, 1), (2, 2, 2), (3, 1, 1, 1),
    (3, 3), (4, 1, 1), (4, 2), (3, 2, 1), (5, 1), (6,),
)
PARTITIONS3 = ((1, 1, 1), (2, 1), (3,))


def compose(p, q):
    "p after q"
    return tuple(p[i] for i in q)


def inverse(p):
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def cycle_type(p):
    seen = set()
    lengths = []
    for i in range(len(p)):
        if i in seen:
            continue
        n = 0
        j = i
        while j not in seen:
            seen.add(j)
            j = p[j]
            n += 1
        lengths.append(n)
    return tuple(sorted(lengths, reverse=True))


def perm_from_cycle_type(shape, n):
    "consecutive cycles (0 1 ..)(..) with the given lengths"
    p = list(range(n))
    start = 0
    for k in shape:
        for i in range(k):
            p[start + i] = start + (i + 1) % k
        start += k
    return tuple(p)


def cycles_str(p, offset=1):
    "cycle notation, fixed points dropped, elements shifted by offset"
    seen = set()
    parts = []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            continue
        cyc = []
        j = i
        while j not in seen:
            seen.add(j)
            cyc.append(str(j + offset))
            j = p[j]
        parts.append("(%s)" % " ".join(cyc))
    return "".join(parts)


def duad_perm(sigma6):
    "the permutation of the 15 duad ranks induced by sigma6"
    return tuple(
        DUAD_INDEX[tuple(sorted((sigma6[a - 1] + 1, sigma6[b - 1] + 1)))]
        for a, b in DUADS)


@dataclass(frozen=True)
class GroupElement:
    sigma6: tuple
    sigma3: tuple

    @cached_property
    def point_perm(self):
        dp = duad_perm(self.sigma6)
        return tuple(15 * self.sigma3[p // 15] + dp[p % 15]
                     for p in range(NH_WIDTH))

    def __mul__(self, other):
        return GroupElement(compose(self.sigma6, other.sigma6),
                            compose(self.sigma3, other.sigma3))

    def inverse(self):
        return GroupElement(inverse(self.sigma6), inverse(self.sigma3))

    def apply_points(self, mask):
        "image of a 45-bit point set"
        pp = self.point_perm
        return mask_of(pp[i] for i in bits(mask))

    def apply_gq(self, mask):
        "image of a 15-bit set under the S6 part"
        dp = duad_perm(self.sigma6)
        return mask_of(dp[i] for i in bits(mask))

    def apply_quadruple(self, q):
        """
        S6 relabels the elements; a layer permutation moves the partner of A
        in layer l (B, C, D for l = 0, 1, 2) to layer sigma3[l].
        """
        parts = [0] * 6
        for i, k in enumerate(q.parts):
            j = self.sigma6[i]
            parts[j] = 0 if k == 0 else 1 + self.sigma3[k - 1]
        return Quadruple(tuple(parts))

    def __str__(self):
        s = cycles_str(self.sigma6) + cycles_str(self.sigma3, offset=7)
        return s or "id"


IDENTITY = GroupElement(tuple(range(6)), tuple(range(3)))

GENERATORS = (
    GroupElement((1, 0, 2, 3, 4, 5), (0, 1, 2)),
    GroupElement((1, 2, 3, 4, 5, 0), (0, 1, 2)),
    GroupElement(tuple(range(6)), (1, 0, 2)),
    GroupElement(tuple(range(6)), (1, 2, 0)),
)


def mulclose(gens):
    els = {IDENTITY}
    bdy = [IDENTITY]
    while bdy:
        nxt = []
        for g in gens:
            for h in bdy:
                k = g * h
                if k not in els:
                    els.add(k)
                    nxt.append(k)
        bdy = nxt
    return els


@lru_cache(maxsize=None)
def build_group():
    "all 4320 elements, sorted"
    return tuple(sorted(mulclose(GENERATORS),
                        key=lambda g: (g.sigma3, g.sigma6)))


@lru_cache(maxsize=None)
def group_index():
    return {g: i for i, g in enumerate(build_group())}


def preserves_lines(g):
    lines = set(NH_LINES)
    return all(g.apply_points(L) in lines for L in NH_LINES)


# ---------------------------------------------------------------------------
# action on hyperplane coordinates

def act_on_coords(g, c):
    "image of the hyperplane with coordinates c, via the point action"
    return coords_from_points(g.apply_points(hyperplane_points(c)))


def act_on_hyperplane(g, h):
    return type(h)(act_on_coords(g, h.coords))


def coord_perm(g):
    """
    int16 array of length 1024 giving the image of every coordinate vector.

    Built from the images of the 10 basis vectors, using linearity.
    """
    basis = [act_on_coords(g, 1 << i) for i in range(NCOORDS)]
    out = np.zeros(NHYPERPLANES + 1, dtype=np.int16)
    for c in range(1, NHYPERPLANES + 1):
        low = c & -c
        out[c] = out[c ^ low] ^ basis[low.bit_length() - 1]
    return out


@lru_cache(maxsize=None)
def coord_action_table():
    "int16 array (4320, 1024): row i is coord_perm(build_group()[i])"
    G = build_group()
    basis = np.array([[act_on_coords(g, 1 << i) for i in range(NCOORDS)]
                      for g in G], dtype=np.int16)
    out = np.zeros((len(G), NHYPERPLANES + 1), dtype=np.int16)
    for c in range(1, NHYPERPLANES + 1):
        low = c & -c
        out[:, c] = out[:, c ^ low] ^ basis[:, low.bit_length() - 1]
    out.setflags(write=False)
    return out


def act_on_line(g, line, perm=None):
    "image of a Veldkamp line (triple of coordinates), re-sorted"
    if perm is None:
        perm = coord_perm(g)
    return tuple(sorted(int(perm[c]) for c in line))


def line_perm(perm):
    "permutation of the 174251 line indices induced by a coordinate permutation"
    from .veldkamp import line_index_table
    lines = enumerate_veldkamp_lines()
    img = perm[lines[:, :2].astype(np.int64)].astype(np.int64)
    return line_index_table()[img[:, 0], img[:, 1]]


def hyperplane_orbit(c):
    "sorted orbit of a coordinate vector"
    return sorted(set(int(x) for x in coord_action_table()[:, c]))


def stabilizer_order(h):
    c = getattr(h, "coords", h)
    return int(np.count_nonzero(coord_action_table()[:, c] == c))


# ---------------------------------------------------------------------------
# conjugacy classes

def _class_size(shape, n):
    "size of the conjugacy class of S_n with the given cycle type"
    counts = {}
    for k in shape:
        counts[k] = counts.get(k, 0) + 1
    denom = 1
    for k, m in counts.items():
        denom *= k ** m * factorial(m)
    return factorial(n) // denom


@dataclass(frozen=True)
class ConjClass:
    cycle_type6: tuple
    cycle_type3: tuple
    representative: GroupElement
    size: int

    @property
    def name(self):
        return str(self.representative)


@lru_cache(maxsize=None)
def conjugacy_class_reps():
    """
    The 33 classes of S6 x S3 in Table 2 order: layer part id, (7 8),
    (7 8 9), each with the 11 cycle types of S6.
    """
    out = []
    for t3 in PARTITIONS3:
        for t6 in PARTITIONS6:
            rep = GroupElement(perm_from_cycle_type(t6, 6),
                               perm_from_cycle_type(t3, 3))
            size = _class_size(t6, 6) * _class_size(t3, 3)
            out.append(ConjClass(t6, t3, rep, size))
    return tuple(out)


def conjugacy_class(g):
    "the set of conjugates of g, computed in the materialized group"
    return {h * g * h.inverse() for h in build_group()}


def gq_class_reps():
    "the 11 classes of S6 as (representative sigma6, size)"
    return tuple((perm_from_cycle_type(t, 6), _class_size(t, 6))
                 for t in PARTITIONS6)


def gq_coord_perm(sigma6):
    "permutation of the 32 GQ hyperplane coordinates under sigma6"
    dp = duad_perm(sigma6)
    out = np.zeros(32, dtype=np.int16)
    for a in range(32):
        comp = GQ_COMP[a]
        out[a] = GQ_COORDS_OF_COMP[mask_of(dp[i] for i in bits(comp))]
    return out
