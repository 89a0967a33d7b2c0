"""Acceptance suite: one PASS/FAIL line per criterion.

Run as ``python tests/test_acceptance.py`` for the bare report, or through
pytest, where the lines are repeated in the terminal summary.
"""

import sys

import pytest

from growthlab.experiments import PRESETS, run_preset

RESULTS: dict[int, str] = {}

# clause (b) of the small-cancellation scan does not hold as stated; see README
KNOWN_FAILING = {"smallcanc"}


def report_line(num, name, rep):
    status = "PASS" if rep.ok else "FAIL"
    line = f"CRITERION {num:2d} [{name}]: {status}"
    for a in rep.failures():
        line += f"\n    failed: {a.name}  witness={a.witness}"
    return line


def _cases():
    for name, (num, _) in sorted(PRESETS.items(), key=lambda kv: kv[1][0]):
        marks = [pytest.mark.xfail(strict=True, reason="criterion does not hold as stated")] \
            if name in KNOWN_FAILING else []
        yield pytest.param(num, name, id=f"c{num:02d}-{name}", marks=marks)


@pytest.mark.parametrize("num,name", list(_cases()))
def test_criterion(num, name):
    rep = run_preset(name, seed=0)
    line = report_line(num, name, rep)
    RESULTS[num] = line
    print(line)
    assert rep.ok, line


def main() -> int:
    bad = 0
    for name, (num, _) in sorted(PRESETS.items(), key=lambda kv: kv[1][0]):
        rep = run_preset(name, seed=0)
        print(report_line(num, name, rep), flush=True)
        bad += not rep.ok
    print(f"{len(PRESETS) - bad}/{len(PRESETS)} criteria pass")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
