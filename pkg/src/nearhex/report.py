"""
Tables 1-3 as rows, their text/CSV/JSON serializations, and the
verification run against the embedded published values.
"""

import csv
import io
import json
from collections import Counter
from dataclasses import dataclass

import numpy as np

from . import tables
from .classify import (
    burnside_count, core_profile, enumerate_orbits, fix_table, orbit_of_line,
    profile_collisions, profile_invariance_violations,
)
from .geometry import (
    GQ_LINES, GQ_NEIGHBOURS, NH_LINES, NH_LINES_THROUGH,
    is_geometric_hyperplane,
)
from .group import ORDER, build_group, conjugacy_class_reps, stabilizer_order
from .veldkamp import (
    HTYPE_NAMES, HTYPE_OF_SHAPE, NHYPERPLANES, canonical_line,
    gq_hyperplane_census, hyperplanes_from_quadruples, point_table, type_table,
)

SCHEMA_VERSION = 1
FORMATS = ("text", "csv", "json")

TABLE1_FIELDS = ("name", "partition", "orbit_size", "stabilizer_order")
TABLE2_FIELDS = ("conjugacy_class", "fix1", "fix2", "fix3", "class_size",
                 "product")
TABLE3_FIELDS = (
    "orbit", "type", "size", "pt", "ln", "o0", "o1", "o2", "o3", "o4",
    "H1", "H2", "H3", "H4", "H5", "H6", "H7", "H8", "first", "second",
    "third", "collision_group", "note",
)


def _partition_str(p):
    return "(%s)" % " ".join(map(str, p))


# ---------------------------------------------------------------------------
# rows

def table1_rows():
    types = type_table()[1:]
    rows = []
    for k, name in enumerate(HTYPE_NAMES):
        members = np.flatnonzero(types == k) + 1
        partition = next(s for s, t in HTYPE_OF_SHAPE.items() if t == k)
        rows.append({
            "name": name,
            "partition": _partition_str(partition),
            "orbit_size": int(len(members)),
            "stabilizer_order": stabilizer_order(int(members[0])),
        })
    return rows


def table2_rows(threads=1):
    rows = []
    for f in fix_table(threads):
        rows.append({
            "conjugacy_class": f.conj_class.name,
            "fix1": f.fix1, "fix2": f.fix2, "fix3": f.fix3,
            "class_size": f.conj_class.size, "product": f.product,
        })
    return rows


def table3_rows():
    orbits = enumerate_orbits()
    group_of = {}
    groups = sorted(profile_collisions(orbits),
                    key=lambda g: min(r.orbit_id for r in g))
    for gid, g in enumerate(groups, 1):
        for rec in g:
            group_of[rec.orbit_id] = gid
    rows = []
    for rec in orbits:
        p = rec.profile
        labels = [str(x) for x in p.layer_labels]
        row = {"orbit": rec.orbit_id, "type": rec.table3_row, "size": rec.size,
               "pt": p.pt, "ln": p.ln}
        row.update({"o%d" % k: n for k, n in enumerate(p.orders)})
        row.update({HTYPE_NAMES[k]: n for k, n in enumerate(p.composition)})
        row.update({"first": labels[0], "second": labels[1],
                    "third": labels[2],
                    "collision_group": group_of.get(rec.orbit_id),
                    "note": rec.discriminator_note})
        rows.append(row)
    return rows


TABLES = {1: (table1_rows, TABLE1_FIELDS), 2: (table2_rows, TABLE2_FIELDS),
          3: (table3_rows, TABLE3_FIELDS)}


def table_rows(which, threads=1):
    if which not in TABLES:
        raise ValueError("unknown table %r" % (which,))
    fn, fields = TABLES[which]
    rows = fn(threads) if which == 2 else fn()
    return rows, fields


# ---------------------------------------------------------------------------
# serialization

def _cell(v):
    return "" if v is None else str(v)


def serialize(rows, fields, fmt, title=""):
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(fields)
        for r in rows:
            w.writerow([_cell(r[f]) for f in fields])
        return buf.getvalue()
    if fmt == "json":
        doc = {"schema": SCHEMA_VERSION, "table": title, "fields": list(fields),
               "rows": [{f: r[f] for f in fields} for r in rows]}
        return json.dumps(doc, indent=1) + "\n"
    if fmt == "text":
        cells = [list(fields)] + [[_cell(r[f]) for f in fields] for r in rows]
        widths = [max(len(row[i]) for row in cells) for i in range(len(fields))]
        lines = ["  ".join(c.rjust(w) for c, w in zip(row, widths))
                 for row in cells]
        head = [title, ""] if title else []
        return "\n".join(head + lines) + "\n"
    raise ValueError("unknown format %r" % (fmt,))


TITLES = {
    1: "Table 1: hyperplane types",
    2: "Table 2: fixed Veldkamp lines per conjugacy class",
    3: "Table 3: orbits of Veldkamp lines",
}


def render_table(which, fmt="text", threads=1):
    rows, fields = table_rows(which, threads)
    out = serialize(rows, fields, fmt, TITLES[which])
    if which == 2 and fmt == "text":
        out += "total %d = %d x %d\n" % (
            sum(r["product"] for r in rows), ORDER,
            sum(r["product"] for r in rows) // ORDER)
    return out


def check_json_schema(text, fields):
    "the versioned JSON layout: schema, table, fields, rows in field order"
    doc = json.loads(text)
    if list(doc) != ["schema", "table", "fields", "rows"]:
        return False
    if doc["schema"] != SCHEMA_VERSION or doc["fields"] != list(fields):
        return False
    return all(list(r) == list(fields) for r in doc["rows"])


# ---------------------------------------------------------------------------
# build / verify

@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""

    def line(self):
        return "%s %s%s" % ("PASS" if self.ok else "FAIL", self.name,
                            (": " + self.detail) if self.detail else "")


def load_constants(path=None):
    consts = dict(tables.CONSTANTS)
    if path:
        with open(path) as f:
            consts.update(json.load(f))
    return consts


def _eq(name, got, want):
    if got == want:
        return Check(name, True)
    if isinstance(got, dict) and isinstance(want, dict):
        diff = ", ".join("%s computed %r expected %r" % (k, got.get(k), want.get(k))
                         for k in want if got.get(k) != want.get(k))
        return Check(name, False, diff)
    return Check(name, False, "computed %r, expected %r" % (got, want))


def structure_checks(consts):
    nlines = len(NH_LINES)
    per_point = {len(t) for t in NH_LINES_THROUGH}
    gq_per_point = {sum(1 for L in GQ_LINES if L >> i & 1) for i in range(15)}
    P = point_table()
    hyper_ok = all(is_geometric_hyperplane(int(P[c]))
                   for c in range(1, NHYPERPLANES + 1))
    return [
        _eq("gq_points", len(GQ_NEIGHBOURS), consts["gq_points"]),
        _eq("gq_lines", len(GQ_LINES), consts["gq_lines"]),
        _eq("gq_lines_per_point", gq_per_point, {3}),
        _eq("nh_points", len(NH_LINES_THROUGH), consts["nh_points"]),
        _eq("nh_lines", nlines, consts["nh_lines"]),
        _eq("nh_lines_per_point", per_point, {4}),
        _eq("hyperplanes", NHYPERPLANES, consts["hyperplanes"]),
        Check("hyperplane_predicate", hyper_ok),
        _eq("group_order", len(build_group()), consts["group_order"]),
    ]


def build_summary(check=False, fixture=None):
    consts = load_constants(fixture)
    head = "%d points, %d lines, %d hyperplanes, |G|=%d" % (
        len(NH_LINES_THROUGH), len(NH_LINES), NHYPERPLANES, len(build_group()))
    if not check:
        return head, []
    failed = [c for c in structure_checks(consts) if not c.ok]
    return head + (", OK" if not failed else ", FAILED"), failed


def verify(fixture=None, threads=1):
    "every computed quantity against the published values"
    consts = load_constants(fixture)
    checks = structure_checks(consts)

    P = point_table()
    from_quads = hyperplanes_from_quadruples()
    span = {int(x) for x in P[1:]}
    checks.append(Check("quadruple_enumeration", from_quads == span
                        and (4 ** 6 - 4) // 4 == consts["hyperplanes"]))
    checks.append(_eq("gq_hyperplane_census", gq_hyperplane_census(),
                      {"perp": 15, "grid": 10, "ovoid": 6}))

    t1 = table1_rows()
    for got, row in zip(t1, tables.TABLE1):
        want = {"name": row[0], "partition": _partition_str(row[1]),
                "orbit_size": row[2], "stabilizer_order": row[4]}
        checks.append(_eq("table1 %s" % row[0], got, want))
        checks.append(_eq("table1 %s orbit x stabilizer" % row[0],
                          got["orbit_size"] * got["stabilizer_order"], ORDER))

    reps = conjugacy_class_reps()
    checks.append(_eq("conjugacy_classes", len(reps),
                      consts["conjugacy_classes"]))
    checks.append(_eq("class_sizes_sum", sum(c.size for c in reps), ORDER))

    t2 = table2_rows(threads)
    for got, row in zip(t2, tables.TABLE2):
        want = dict(zip(TABLE2_FIELDS, row))
        checks.append(_eq("table2 %s" % row[0], got, want))
    total = sum(r["product"] for r in t2)
    checks.append(_eq("burnside_total", total, consts["burnside_total"]))

    orbits = enumerate_orbits()
    checks.append(_eq("line_orbits", len(orbits), consts["line_orbits"]))
    checks.append(_eq("orbit_size_sum", sum(o.size for o in orbits),
                      consts["veldkamp_lines"]))
    checks.append(_eq("burnside_agrees_with_orbits", total // ORDER,
                      len(orbits)))
    for action, key in (("gq_hyperplanes", "gq_hyperplane_orbits"),
                        ("gq_lines", "gq_line_orbits"),
                        ("nh_hyperplanes", "hyperplane_orbits")):
        checks.append(_eq("burnside %s" % action, burnside_count(action),
                          consts[key]))

    got = Counter(o.profile.key for o in orbits)
    want = Counter()
    for row in tables.table3_rows():
        want[row.key] += row.multiplicity
    extra = got - want
    missing = want - got
    checks.append(Check("table3_profiles", not extra and not missing,
                        "" if not (extra or missing) else
                        "%d computed profiles unmatched, %d printed rows unmatched"
                        % (sum(extra.values()), sum(missing.values()))))
    checks.append(_eq("profile_invariance", profile_invariance_violations(), 0))

    for which in (1, 3):
        rows, fields = table_rows(which)
        text = serialize(rows, fields, "json", TITLES[which])
        checks.append(Check("json_schema table%d" % which,
                            check_json_schema(text, fields)))
    return checks


def orbit_of(h1, h2):
    "inspection view of the line through two hyperplanes"
    if not (0 < h1 <= NHYPERPLANES and 0 < h2 <= NHYPERPLANES):
        raise ValueError("hyperplane ids must be in 1..1023")
    if h1 == h2:
        raise ValueError("hyperplane ids must differ")
    line = canonical_line(h1, h2)
    rec = orbit_of_line(line)
    prof = core_profile(line)
    return {
        "line": list(line),
        "types": [HTYPE_NAMES[type_table()[h]] for h in line],
        "pt": prof.pt, "ln": prof.ln, "orders": list(prof.orders),
        "composition": prof.composition_str(),
        "layers": [str(x) for x in prof.layer_labels],
        "orbit": rec.orbit_id, "orbit_size": rec.size,
        "table3_row": rec.table3_row, "note": rec.discriminator_note,
    }
