import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

# criterion number -> (ok, detail), filled in by test_acceptance
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line("criterion %2d: %s%s" % (
            n, "PASS" if ok else "FAIL", "  " + detail if detail else ""))
