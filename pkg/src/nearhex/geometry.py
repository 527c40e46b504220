"""
The generalized quadrangle GQ(2,2) in the duad model and the product
near hexagon L3 x GQ(2,2).

Point sets are plain Python ints used as bitmasks.  A GQ(2,2) set is a
15-bit mask indexed by duad rank; a near-hexagon set is a 45-bit mask with
point id ``15*layer + duad_rank``.

Duads are ranked lexicographically: {1,2}=0, {1,3}=1, ..., {5,6}=14.
"""

from enum import Enum
from functools import lru_cache
from itertools import combinations

import numpy as np

GQ_WIDTH = 15
NH_WIDTH = 45
NLAYERS = 3
GQ_FULL = (1 << GQ_WIDTH) - 1
NH_FULL = (1 << NH_WIDTH) - 1

DUADS = tuple(combinations(range(1, 7), 2))
DUAD_INDEX = {d: i for i, d in enumerate(DUADS)}


def bits(mask):
    "indices of the set bits of mask, ascending"
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def popcount(mask):
    return bin(mask).count("1")


def mask_of(indices):
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def duad_rank(a, b):
    "rank of the duad {a, b} (elements in 1..6, any order)"
    if a == b:
        raise ValueError("a duad needs two distinct elements")
    return DUAD_INDEX[(min(a, b), max(a, b))]


def nh_point(layer, gq):
    return 15 * layer + gq


def nh_layer(p):
    return p // 15


def nh_gq(p):
    return p % 15


# ---------------------------------------------------------------------------
# GQ(2,2)

def gq_collinear(i, j):
    "distinct duads are collinear iff disjoint"
    return i != j and not set(DUADS[i]) & set(DUADS[j])


def _build_gq_lines():
    lines = set()
    for i, j in combinations(range(15), 2):
        if not gq_collinear(i, j):
            continue
        rest = set(range(1, 7)) - set(DUADS[i]) - set(DUADS[j])
        k = DUAD_INDEX[tuple(sorted(rest))]
        lines.add(mask_of((i, j, k)))
    return tuple(sorted(lines))


GQ_LINES = _build_gq_lines()

GQ_NEIGHBOURS = tuple(
    mask_of(j for j in range(15) if gq_collinear(i, j)) for i in range(15))

GQ_LINES_THROUGH = tuple(
    tuple(L for L in GQ_LINES if L >> i & 1) for i in range(15))


def build_gq():
    """
    The duad model of GQ(2,2).

    Returns ``(points, lines)``: the 15 duads in rank order and the 15 lines,
    each a sorted tuple of three duad ranks.
    """
    return DUADS, tuple(tuple(bits(L)) for L in GQ_LINES)


def gq_perp(i):
    "x-perp of GQ point i: the point and its 6 neighbours"
    return GQ_NEIGHBOURS[i] | (1 << i)


def gq_ovoid(k):
    "the ovoid e_k: all duads containing k (k in 1..6)"
    return mask_of(i for i, d in enumerate(DUADS) if k in d)


def gq_grid(triple):
    "the grid {{a,b}: a in triple, b not in triple}"
    t = set(triple)
    return mask_of(i for i, (a, b) in enumerate(DUADS) if (a in t) != (b in t))


GQ_PERPS = tuple(gq_perp(i) for i in range(15))
GQ_OVOIDS = tuple(gq_ovoid(k) for k in range(1, 7))
GQ_GRIDS = tuple(sorted({gq_grid(t) for t in combinations(range(1, 7), 3)}))


# ---------------------------------------------------------------------------
# L3 x GQ(2,2)

class LineKind(Enum):
    TYPE_ONE = 1
    TYPE_TWO = 2


def _build_nh_lines():
    lines = []
    for q in range(15):
        lines.append((LineKind.TYPE_ONE,
                      mask_of(15 * l + q for l in range(NLAYERS))))
    for l in range(NLAYERS):
        for L in GQ_LINES:
            lines.append((LineKind.TYPE_TWO, L << (15 * l)))
    return tuple(lines)


NH_LINE_KINDS = tuple(k for k, _ in _build_nh_lines())
NH_LINES = tuple(m for _, m in _build_nh_lines())
NH_LINES_THROUGH = tuple(
    tuple(L for L in NH_LINES if L >> p & 1) for p in range(NH_WIDTH))


def type_one_line(q):
    "the type-one line over GQ point q"
    return NH_LINES[q]


def build_near_hexagon():
    """
    Points and lines of L3 x GQ(2,2).

    Returns ``(points, lines)`` where points are ``(layer, duad_rank)`` pairs
    in id order and lines are ``(LineKind, (p, q, r))`` with 15 type-one
    lines first, then 45 type-two lines layer by layer.
    """
    points = tuple((p // 15, p % 15) for p in range(NH_WIDTH))
    lines = tuple((k, tuple(bits(m))) for k, m in zip(NH_LINE_KINDS, NH_LINES))
    return points, lines


def nh_collinear(p, q):
    "the product rule: same layer and collinear duads, or same duad"
    if p == q:
        return False
    if nh_layer(p) == nh_layer(q):
        return gq_collinear(nh_gq(p), nh_gq(q))
    return nh_gq(p) == nh_gq(q)


@lru_cache(maxsize=None)
def nh_distances():
    "45x45 matrix of point-graph distances (BFS from every point)"
    adj = [[q for q in range(NH_WIDTH) if nh_collinear(p, q)]
           for p in range(NH_WIDTH)]
    dist = np.full((NH_WIDTH, NH_WIDTH), -1, dtype=np.int8)
    for s in range(NH_WIDTH):
        dist[s, s] = 0
        frontier = [s]
        while frontier:
            nxt = []
            for p in frontier:
                for q in adj[p]:
                    if dist[s, q] < 0:
                        dist[s, q] = dist[s, p] + 1
                        nxt.append(q)
            frontier = nxt
    return dist


def singular_hyperplane(x):
    "points at non-maximal distance (<= 2) from x"
    d = nh_distances()[x]
    return mask_of(int(q) for q in np.flatnonzero(d <= 2))


def is_geometric_hyperplane(s):
    "proper subset of the 45 points meeting every line in 1 or 3 points"
    if s < 0 or s >= NH_FULL:
        return False
    for L in NH_LINES:
        k = popcount(s & L)
        if k != 1 and k != 3:
            return False
    return True


def is_gq_hyperplane(s):
    if s < 0 or s >= GQ_FULL:
        return False
    return all(popcount(s & L) in (1, 3) for L in GQ_LINES)


def layer_slice(s, layer):
    "the 15-bit trace of a 45-bit set on one GQ(2,2) layer"
    return (s >> (15 * layer)) & GQ_FULL


def point_order(core, p):
    "number of lines through p lying entirely in core"
    if not core >> p & 1:
        raise ValueError("point %d is not in the set" % p)
    return sum(1 for L in NH_LINES_THROUGH[p] if core & L == L)


def lines_inside(s):
    "number of near-hexagon lines contained in s"
    return sum(1 for L in NH_LINES if s & L == L)


# ---------------------------------------------------------------------------
# subsets of one GQ(2,2) quad

class QuadLabel(str, Enum):
    FULL = "full"
    GRID = "grid"
    PERP = "perp"
    OVOID = "ovoid"
    GPERP = "g-perp"
    LINE = "line"
    TRITR = "tritr"
    UNITR = "unitr"
    POINT = "point"
    EMPTY = "empty"
    OTHER = "other"

    def __str__(self):
        return self.value


def _pairwise_noncollinear(s):
    pts = bits(s)
    return all(not gq_collinear(i, j) for i, j in combinations(pts, 2))


def triad_centers(s):
    """
    Common neighbours of a triad (three pairwise non-collinear GQ points).

    GQ(2,2) triads have either 1 or 3 centres.
    """
    if popcount(s) != 3 or not _pairwise_noncollinear(s):
        raise ValueError("not a triad: %s" % [DUADS[i] for i in bits(s)])
    c = GQ_FULL
    for i in bits(s):
        c &= GQ_NEIGHBOURS[i]
    return c


def gperp_center(s):
    """
    Centre of a g-perp: the perp-set of a point inside a grid, i.e. two
    concurrent lines.  Returns the centre's duad rank or None.
    """
    if popcount(s) != 5:
        return None
    for c in bits(s):
        if gq_perp(c) & s != s:
            continue
        for G in GQ_GRIDS:
            if G & s == s and gq_perp(c) & G == s:
                return c
    return None


def classify_gq_subset(s):
    "label the shape of a subset of one GQ(2,2) quad"
    n = popcount(s)
    if n == 15:
        return QuadLabel.FULL
    if n == 0:
        return QuadLabel.EMPTY
    if n == 1:
        return QuadLabel.POINT
    if n == 9 and s in GQ_GRIDS:
        return QuadLabel.GRID
    if n == 7 and s in GQ_PERPS:
        return QuadLabel.PERP
    if n == 5:
        if _pairwise_noncollinear(s):
            return QuadLabel.OVOID
        if gperp_center(s) is not None:
            return QuadLabel.GPERP
        return QuadLabel.OTHER
    if n == 3:
        if s in GQ_LINES:
            return QuadLabel.LINE
        if _pairwise_noncollinear(s):
            return (QuadLabel.TRITR if popcount(triad_centers(s)) == 3
                    else QuadLabel.UNITR)
    return QuadLabel.OTHER


QUAD_LABELS = tuple(QuadLabel)
LABEL_CODE = {lab: i for i, lab in enumerate(QUAD_LABELS)}


@lru_cache(maxsize=None)
def gq_label_table():
    "label code for every 15-bit subset, as an int8 array of length 2**15"
    table = np.full(1 << GQ_WIDTH, LABEL_CODE[QuadLabel.OTHER], dtype=np.int8)
    # only these sizes can carry a non-Other label
    for s in range(1 << GQ_WIDTH):
        if popcount(s) in (0, 1, 3, 5, 7, 9, 15):
            table[s] = LABEL_CODE[classify_gq_subset(s)]
    return table
