"""
Orbits of Veldkamp lines under S6 x S3.

Two independent routes to the orbit count: direct enumeration (connected
components of the generator action on the 174251 lines) and Burnside's
lemma over the 33 conjugacy classes, with the fixed lines of each class
split into

    (1) all three hyperplanes fixed,
    (2) one fixed and the other two swapped,
    (3) the three hyperplanes permuted cyclically.

Each orbit is described by the core of its lines (the points common to the
three hyperplanes) through a ``CoreProfile``.
"""

from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .geometry import (
    GQ_FULL, GQ_LINES, GQ_LINES_THROUGH, GQ_OVOIDS, NH_LINES, NH_WIDTH,
    QUAD_LABELS, bits, classify_gq_subset, gperp_center, gq_collinear,
    gq_label_table, layer_slice, lines_inside, point_order, popcount,
    triad_centers,
)
from .group import (
    GENERATORS, ORDER, ConjClass, coord_perm, conjugacy_class_reps,
    gq_class_reps, gq_coord_perm, line_perm,
)
from .tables import ERRATA, table3_rows
from .veldkamp import (
    HTYPE_NAMES, NHYPERPLANES, enumerate_veldkamp_lines, gq_veldkamp_lines,
    hyperplane_type, point_table, type_table,
)

ORDER_MAX = 4


# ---------------------------------------------------------------------------
# Burnside

@dataclass(frozen=True)
class FixDecomposition:
    conj_class: ConjClass
    fix1: int
    fix2: int
    fix3: int
    fixed_points: int        # fixed hyperplanes, 2**d - 1
    fix1_scan: int           # fix1 recounted over all lines
    scanned_total: int       # all lines fixed setwise, by direct scan

    @property
    def total(self):
        return self.fix1 + self.fix2 + self.fix3

    @property
    def product(self):
        return self.conj_class.size * self.total


def fix_decomposition(c):
    """
    Fixed Veldkamp lines of a class representative, split by how the
    representative moves the three hyperplanes of the line.
    """
    perm = coord_perm(c.representative).astype(np.int64)
    h = np.arange(1, NHYPERPLANES + 1)
    fixed = perm[h] == h
    nfix = int(fixed.sum())
    # fixed hyperplanes plus zero form a subspace of size 2**d
    fix1 = nfix * (nfix - 1) // 6

    # a moved h whose partner h + g(h) is fixed; each line is seen twice
    moved = h[~fixed]
    partner = moved ^ perm[moved]
    fix2 = int(np.count_nonzero(perm[partner] == partner)) // 2

    lines = enumerate_veldkamp_lines().astype(np.int64)
    img = perm[lines]
    setwise = (np.sort(img, axis=1) == lines).all(axis=1)
    nfixed = (img == lines).sum(axis=1)
    fix3 = int(np.count_nonzero(setwise & (nfixed == 0)))
    fix1_scan = int(np.count_nonzero(setwise & (nfixed == 3)))
    return FixDecomposition(c, fix1, fix2, fix3, nfix, fix1_scan,
                            int(np.count_nonzero(setwise)))


def fix_table(threads=1):
    "fix_decomposition for all 33 classes, in Table 2 order"
    reps = conjugacy_class_reps()
    if threads == 1:
        return [fix_decomposition(c) for c in reps]
    from concurrent.futures import ThreadPoolExecutor
    with ThreadPoolExecutor(max_workers=threads or None) as ex:
        return list(ex.map(fix_decomposition, reps))


def _gq_fixed_counts(sigma6):
    perm = gq_coord_perm(sigma6)
    hyper = sum(1 for a in range(1, 32) if perm[a] == a)
    lines = sum(1 for L in gq_veldkamp_lines()
                if tuple(sorted(int(perm[a]) for a in L)) == L)
    return hyper, lines


BURNSIDE_ACTIONS = ("gq_hyperplanes", "gq_lines", "nh_hyperplanes", "nh_lines")


def burnside_sum(action):
    "(sum over classes of |class| * |fixed set|, group order)"
    if action not in BURNSIDE_ACTIONS:
        raise ValueError("unknown action %r" % action)
    if action.startswith("gq"):
        k = 0 if action == "gq_hyperplanes" else 1
        total = sum(size * _gq_fixed_counts(s6)[k]
                    for s6, size in gq_class_reps())
        return total, 720
    if action == "nh_hyperplanes":
        total = 0
        for c in conjugacy_class_reps():
            perm = coord_perm(c.representative)
            nfix = int(np.count_nonzero(
                perm[1:] == np.arange(1, NHYPERPLANES + 1)))
            total += c.size * nfix
        return total, ORDER
    return sum(f.product for f in fix_table()), ORDER


def burnside_count(action):
    "number of orbits of the named action by Burnside's lemma"
    total, order = burnside_sum(action)
    if total % order:
        raise ArithmeticError("Burnside sum %d not divisible by %d"
                              % (total, order))
    return total // order


# ---------------------------------------------------------------------------
# cores and profiles

@dataclass(frozen=True)
class CoreProfile:
    pt: int
    ln: int
    orders: tuple            # number of core points of order 0..4
    composition: tuple       # number of member hyperplanes of type H1..H8
    quad_labels: tuple       # sorted labels of the three layer traces
    layer_labels: tuple = field(default=(), compare=False)

    @property
    def key(self):
        return (self.pt, self.ln, self.orders, self.composition,
                tuple(str(x) for x in self.quad_labels))

    def composition_str(self):
        return " ".join("%dx%s" % (n, HTYPE_NAMES[k])
                        for k, n in enumerate(self.composition) if n)


def _sorted_labels(labels):
    return tuple(sorted(labels, key=lambda x: str(x)))


def core_of_line(line):
    "points common to the three hyperplanes of a line"
    P = point_table()
    a, b, c = (int(P[h]) for h in line)
    core = a & b & c
    assert a & b == core and a & c == core and b & c == core
    return core


def core_profile(line):
    "profile of one line, computed point by point"
    core = core_of_line(line)
    orders = [0] * (ORDER_MAX + 1)
    for p in bits(core):
        orders[point_order(core, p)] += 1
    comp = [0] * 8
    for h in line:
        comp[HTYPE_NAMES.index(hyperplane_type(h))] += 1
    labels = tuple(classify_gq_subset(layer_slice(core, l)) for l in range(3))
    return CoreProfile(popcount(core), lines_inside(core), tuple(orders),
                       tuple(comp), _sorted_labels(labels), labels)


@dataclass(frozen=True)
class ProfileArrays:
    """Profiles of all lines, column by column (row i = line i)."""
    core: np.ndarray         # uint64
    pt: np.ndarray
    ln: np.ndarray
    orders: np.ndarray       # (n, 5)
    composition: np.ndarray  # (n, 8)
    labels: np.ndarray       # (n, 3) label codes, layer order

    def profile(self, i):
        labels = tuple(QUAD_LABELS[k] for k in self.labels[i])
        return CoreProfile(int(self.pt[i]), int(self.ln[i]),
                           tuple(int(x) for x in self.orders[i]),
                           tuple(int(x) for x in self.composition[i]),
                           _sorted_labels(labels), labels)


@lru_cache(maxsize=None)
def line_profiles():
    "vectorized core profiles of all 174251 lines"
    lines = enumerate_veldkamp_lines().astype(np.int64)
    P = point_table()
    core = P[lines[:, 0]] & P[lines[:, 1]] & P[lines[:, 2]]
    pt = np.bitwise_count(core).astype(np.int16)

    Lm = np.array(NH_LINES, dtype=np.uint64)
    inside = (core[:, None] & Lm[None, :]) == Lm[None, :]
    ln = inside.sum(axis=1).astype(np.int16)
    inc = np.array([[(L >> p) & 1 for p in range(NH_WIDTH)] for L in NH_LINES],
                   dtype=np.int8)
    order = inside.astype(np.int8) @ inc
    shifts = np.arange(NH_WIDTH, dtype=np.uint64)
    member = ((core[:, None] >> shifts) & np.uint64(1)).astype(bool)
    orders = np.stack([(member & (order == k)).sum(axis=1)
                       for k in range(ORDER_MAX + 1)], axis=1).astype(np.int16)

    tt = type_table().astype(np.int64)[lines]
    comp = np.stack([(tt == k).sum(axis=1) for k in range(8)],
                    axis=1).astype(np.int16)

    table = gq_label_table()
    labels = np.stack(
        [table[((core >> np.uint64(15 * l)) & np.uint64(GQ_FULL)).astype(np.int64)]
         for l in range(3)], axis=1)
    return ProfileArrays(core, pt, ln, orders, comp, labels)


def _profile_keys(arr):
    "per-line hashable profile key rows (layer labels sorted)"
    lab = np.sort(arr.labels, axis=1)
    return np.concatenate([arr.pt[:, None], arr.ln[:, None], arr.orders,
                           arr.composition, lab.astype(np.int16)], axis=1)


# ---------------------------------------------------------------------------
# orbits

@dataclass
class OrbitRecord:
    orbit_id: int
    size: int
    profile: CoreProfile
    representative: tuple
    table3_row: int = None
    discriminator_note: str = None

    @property
    def stabilizer_order(self):
        return ORDER // self.size


@lru_cache(maxsize=None)
def orbit_labels():
    """
    Orbit label of every line (index into enumerate_veldkamp_lines()),
    from the connected components of the generator action.
    """
    n = len(enumerate_veldkamp_lines())
    src = np.tile(np.arange(n), len(GENERATORS))
    dst = np.concatenate([line_perm(coord_perm(g)) for g in GENERATORS])
    if (dst < 0).any():
        raise AssertionError("a generator maps a line to a non-line")
    graph = coo_matrix((np.ones(len(src), dtype=np.int8), (src, dst)),
                       shape=(n, n))
    _, comp = connected_components(graph, directed=True, connection="weak")
    return comp


def report_sort_key(profile):
    return (-profile.pt, -profile.ln, profile.orders, profile.composition,
            tuple(str(x) for x in profile.quad_labels))


@lru_cache(maxsize=None)
def _enumerate_orbits():
    comp = orbit_labels()
    arr = line_profiles()
    lines = enumerate_veldkamp_lines()
    sizes = np.bincount(comp)
    # first line of each component is its representative
    _, first = np.unique(comp, return_index=True)
    recs = []
    for k, i in enumerate(first):
        recs.append((arr.profile(i), int(sizes[k]),
                     tuple(int(x) for x in lines[i])))
    recs.sort(key=lambda r: (report_sort_key(r[0]), r[2]))
    out = [OrbitRecord(j + 1, size, prof, rep)
           for j, (prof, size, rep) in enumerate(recs)]
    _assign_rows(out)
    return tuple(out)


def enumerate_orbits():
    "all orbits of Veldkamp lines, in report order, with Table 3 rows attached"
    return list(_enumerate_orbits())


def orbit_of_line(line):
    "the OrbitRecord containing the line (a triple of coordinates)"
    from .veldkamp import line_index_table
    a, b = sorted(line)[:2]
    i = line_index_table()[a, b]
    comp = orbit_labels()
    rep_of = {rec.representative: rec for rec in _enumerate_orbits()}
    lines = enumerate_veldkamp_lines()
    j = int(np.flatnonzero(comp == comp[i])[0])
    return rep_of[tuple(int(x) for x in lines[j])]


def profile_invariance_violations():
    "number of orbits whose lines do not all share one profile key"
    comp = orbit_labels()
    keys = _profile_keys(line_profiles())
    order = np.argsort(comp, kind="stable")
    comp_s, keys_s = comp[order], keys[order]
    starts = np.flatnonzero(np.r_[True, comp_s[1:] != comp_s[:-1]])
    first = np.repeat(keys_s[starts], np.diff(np.r_[starts, len(comp_s)]),
                      axis=0)
    bad = ~(keys_s == first).all(axis=1)
    return len(np.unique(comp_s[bad]))


def profile_collisions(orbits):
    "groups (lists of OrbitRecords) sharing one profile key, size >= 2"
    groups = defaultdict(list)
    for rec in orbits:
        groups[rec.profile.key].append(rec)
    return [g for g in groups.values() if len(g) > 1]


# ---------------------------------------------------------------------------
# footnote discriminators

class FootnoteMismatch(ValueError):
    """The core does not have the shape a footnote talks about."""


# footnote -> (layer labels it applies to, row when the predicate holds,
# row when it fails)
FOOTNOTES = {
    1: (("g-perp", "g-perp", "g-perp"), 25, 26),
    2: (("g-perp", "unitr", "unitr"), 77, 76),
    3: (("g-perp", "unitr", "unitr"), 86, 87),
    4: (("g-perp", "unitr", "unitr"), 88, 89),
    5: (("line", "unitr", "unitr"), 114, 113),
    6: (("g-perp", "point", "unitr"), 120, 119),
    7: (("unitr", "unitr", "unitr"), 133, 134),
    8: (("point", "unitr", "unitr"), 143, 144),
    9: (("point", "tritr", "unitr"), 147, 148),
    10: (("point", "unitr", "unitr"), 149, 150),
    11: (("point", "unitr", "unitr"), 150, 151),
}
STAR, DAGGER = "star", "dagger"
SPLIT_NOTES = {
    STAR: (("g-perp", "g-perp", "unitr"), 50),
    DAGGER: (("point", "unitr", "unitr"), 149),
}


def _parts(core):
    "layer -> (label, 15-bit trace)"
    out = []
    for l in range(3):
        s = layer_slice(core, l)
        out.append((str(classify_gq_subset(s)), s))
    return out


def _center(label, s):
    "the distinguished GQ point of a layer trace"
    if label == "g-perp":
        return gperp_center(s)
    if label == "unitr":
        return bits(triad_centers(s))[0]
    if label == "point":
        return bits(s)[0]
    raise ValueError(label)


def _of(parts, label):
    return [(l, s) for l, (lab, s) in enumerate(parts) if lab == label]


def _gperp_lines(s):
    "the two GQ lines inside a g-perp"
    return [L for L in GQ_LINES if L & s == L]


def _same_grid_quad(u, v):
    "points over GQ points u, v on different layers share an L3 x line grid"
    return u == v or gq_collinear(u, v)


def layer_signature(line, layer):
    "sorted (H-type, trace label) of the three hyperplanes on one layer"
    P = point_table()
    return tuple(sorted(
        (hyperplane_type(h), str(classify_gq_subset(layer_slice(int(P[h]), layer))))
        for h in line))


def discriminate(core, footnote, line=None):
    """
    Evaluate the geometric predicate of a Table 3 footnote on a core.

    Numbered footnotes return the sibling row the core belongs to.  The two
    split notes (STAR, DAGGER) name which of two like components the
    relevant type-one line hits; they need the line, since the components
    are told apart by the hyperplanes' traces on their layers.
    """
    parts = _parts(core)
    labels = tuple(sorted(lab for lab, _ in parts))
    if footnote in SPLIT_NOTES:
        want, _ = SPLIT_NOTES[footnote]
    elif footnote in FOOTNOTES:
        want, yes, no = FOOTNOTES[footnote]
    else:
        raise ValueError("unknown footnote %r" % (footnote,))
    if labels != want:
        raise FootnoteMismatch("footnote %s is about %s cores, got %s"
                               % (footnote, want, labels))

    if footnote == 1:
        cs = [gperp_center(s) for _, s in parts]
        hit = any(a == b for a, b in combinations(cs, 2))
    elif footnote == 2:
        (_, g), = _of(parts, "g-perp")
        us = [_center("unitr", s) for _, s in _of(parts, "unitr")]
        hit = gperp_center(g) in us
    elif footnote in (3, 8):
        u1, u2 = [_center("unitr", s) for _, s in _of(parts, "unitr")]
        hit = u1 == u2
    elif footnote == 4:
        (_, g), = _of(parts, "g-perp")
        us = [_center("unitr", s) for _, s in _of(parts, "unitr")]
        hit = any(L >> u & 1 for L in _gperp_lines(g) for u in us)
    elif footnote == 5:
        proj = 0
        for _, s in _of(parts, "unitr"):
            proj |= s
        hit = popcount(proj) == 5 and proj in GQ_OVOIDS
    elif footnote == 6:
        (_, p), = _of(parts, "point")
        (_, g), = _of(parts, "g-perp")
        c = gperp_center(g)
        p = bits(p)[0]
        hit = any(L >> c & 1 for L in GQ_LINES_THROUGH[p])
    elif footnote == 7:
        tri = [(s, _center("unitr", s)) for _, s in parts]
        hit = False
        for i, (s, _) in enumerate(tri):
            others = [c for j, (_, c) in enumerate(tri) if j != i]
            if others[0] != others[1] and all(s >> c & 1 for c in others):
                hit = True
    elif footnote == 9:
        (_, p), = _of(parts, "point")
        (_, t), = _of(parts, "tritr")
        hit = bool(triad_centers(t) & p)
    elif footnote == 10:
        (_, p), = _of(parts, "point")
        us = [_center("unitr", s) for _, s in _of(parts, "unitr")]
        hit = bits(p)[0] in us
    elif footnote == 11:
        u1, u2 = [_center("unitr", s) for _, s in _of(parts, "unitr")]
        hit = _same_grid_quad(u1, u2)
    else:
        if line is None:
            raise ValueError("note %s needs the line" % footnote)
        if footnote == STAR:
            (_, t), = _of(parts, "unitr")
            target = _center("unitr", t)
            role = "g-perp"
        else:
            (_, p), = _of(parts, "point")
            target = bits(p)[0]
            role = "unitr"
        hits = [l for l, s in _of(parts, role) if _center(role, s) == target]
        if len(hits) != 1:
            raise FootnoteMismatch("expected exactly one %s hit, got %d"
                                   % (role, len(hits)))
        return layer_signature(line, hits[0])
    return yes if hit else no


# ---------------------------------------------------------------------------
# Table 3 row assignment

def _rows_by_key():
    out = defaultdict(list)
    for row in table3_rows(corrected=True):
        out[row.key].append(row)
    return out


def _assign_rows(orbits):
    by_key = _rows_by_key()
    for rec in orbits:
        rows = by_key.get(rec.profile.key, [])
        if not rows:
            continue
        if len(rows) == 1:
            rec.table3_row = rows[0].tp
            if rows[0].split:
                rec.discriminator_note = rows[0].split
            elif rows[0].tp in ERRATA:
                rec.discriminator_note = "erratum"
            continue
        core = core_of_line(rec.representative)
        notes = sorted({n for r in rows for n in r.notes})
        row = None
        # 10 then 11 for the 149/150/151 group
        for n in notes:
            row = discriminate(core, n)
            rec.discriminator_note = str(n)
            if row in {r.tp for r in rows} and not (n == 10 and row == 150):
                break
        rec.table3_row = row
