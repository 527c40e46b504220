"""
Command-line front end.

    nearhex build [--check]
    nearhex table {1,2,3}
    nearhex burnside
    nearhex classify
    nearhex verify
    nearhex orbit-of H1 H2

Global options: --format {text,csv,json}, --out PATH, --threads N (0 = auto).
Exit codes: 0 success, 1 verification mismatch, 2 usage error.
"""

import argparse
import json
import sys

from . import report

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


def _common(suppress):
    p = argparse.ArgumentParser(add_help=False)
    kw = {"default": argparse.SUPPRESS} if suppress else {}
    p.add_argument("--format", choices=report.FORMATS,
                   **(kw or {"default": "text"}))
    p.add_argument("--out", metavar="PATH", **(kw or {"default": None}))
    p.add_argument("--threads", type=int, metavar="N",
                   **(kw or {"default": 1}))
    return p


def make_parser():
    parser = argparse.ArgumentParser(
        prog="nearhex", parents=[_common(False)],
        description="Veldkamp lines of the near hexagon L3 x GQ(2,2)")
    sub = parser.add_subparsers(dest="command", required=True)
    common = _common(True)

    p = sub.add_parser("build", parents=[common],
                       help="construct the geometry and the group")
    p.add_argument("--check", action="store_true",
                   help="run the structural invariants")
    p.add_argument("--fixture", metavar="JSON",
                   help="override expected constants (testing)")

    p = sub.add_parser("table", parents=[common], help="emit Table 1, 2 or 3")
    p.add_argument("which", type=int, choices=(1, 2, 3))

    sub.add_parser("burnside", parents=[common],
                   help="orbit counts by Burnside's lemma")
    sub.add_parser("classify", parents=[common],
                   help="orbit enumeration summary and profile collisions")

    p = sub.add_parser("verify", parents=[common],
                       help="compare everything with the published values")
    p.add_argument("--fixture", metavar="JSON",
                   help="override expected constants (testing)")

    p = sub.add_parser("orbit-of", parents=[common],
                       help="inspect the line through two hyperplanes")
    p.add_argument("h1", type=int)
    p.add_argument("h2", type=int)
    return parser


def _emit(text, out):
    if out:
        with open(out, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def _burnside_text(fmt):
    from .classify import BURNSIDE_ACTIONS, burnside_sum
    rows = []
    for action in BURNSIDE_ACTIONS:
        total, order = burnside_sum(action)
        rows.append({"action": action, "sum": total, "group_order": order,
                     "orbits": total // order})
    return report.serialize(rows, ("action", "sum", "group_order", "orbits"),
                            fmt, "Burnside counts")


def _classify_text(fmt):
    from .classify import enumerate_orbits, profile_collisions
    orbits = enumerate_orbits()
    rows = []
    for gid, group in enumerate(sorted(profile_collisions(orbits),
                                       key=lambda g: g[0].orbit_id), 1):
        for rec in group:
            rows.append({"group": gid, "orbit": rec.orbit_id,
                         "size": rec.size, "type": rec.table3_row,
                         "note": rec.discriminator_note})
    head = "%d orbits, %d lines\n" % (len(orbits),
                                     sum(o.size for o in orbits))
    body = report.serialize(rows, ("group", "orbit", "size", "type", "note"),
                            fmt, "Profile collisions")
    return (head + body) if fmt == "text" else body


def main(argv=None):
    parser = make_parser()
    args = parser.parse_args(argv)
    fmt, out, threads = args.format, args.out, args.threads
    if threads < 0:
        parser.error("--threads must be >= 0")

    if args.command == "build":
        head, failed = report.build_summary(args.check, args.fixture)
        text = head + "\n" + "".join(c.line() + "\n" for c in failed)
        _emit(text, out)
        return EXIT_MISMATCH if failed else EXIT_OK

    if args.command == "table":
        _emit(report.render_table(args.which, fmt, threads), out)
        return EXIT_OK

    if args.command == "burnside":
        _emit(_burnside_text(fmt), out)
        return EXIT_OK

    if args.command == "classify":
        _emit(_classify_text(fmt), out)
        return EXIT_OK

    if args.command == "verify":
        checks = report.verify(args.fixture, threads)
        failed = [c for c in checks if not c.ok]
        if fmt == "json":
            text = json.dumps([{"check": c.name, "ok": c.ok,
                                "detail": c.detail} for c in checks],
                              indent=1) + "\n"
        else:
            text = "".join(c.line() + "\n" for c in checks)
            text += "%d/%d checks passed\n" % (len(checks) - len(failed),
                                               len(checks))
        _emit(text, out)
        return EXIT_MISMATCH if failed else EXIT_OK

    if args.command == "orbit-of":
        try:
            view = report.orbit_of(args.h1, args.h2)
        except ValueError as e:
            parser.print_usage(sys.stderr)
            print("nearhex orbit-of: error: %s" % e, file=sys.stderr)
            return EXIT_USAGE
        if fmt == "json":
            text = json.dumps(view, indent=1) + "\n"
        else:
            text = "".join("%s: %s\n" % (k, v) for k, v in view.items())
        _emit(text, out)
        return EXIT_OK
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
