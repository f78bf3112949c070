"""Acceptance gate: every top-level criterion runs as its own test, with
one pass/fail line and a wall-clock bound."""

import time

import pytest

from growth import checks

CRITERIA = [
    ("1-figure-growth", checks.check_figure_growth, 1.0),
    ("2-figure-wall", checks.check_figure_wall, 1.0),
    ("3-counts", checks.check_counts, 10.0),
    ("4-decgd-counts", checks.check_decgd_counts, 30.0),
    ("5-conic-exactness", checks.check_conic_g24, 1.0),
    ("6-six-point-cycle", checks.check_six_point, 60.0),
    ("7-flag6-example", checks.check_flag6, 1.0),
    ("8-cover-topology-r4", checks.check_cover_r4, 1.0),
    ("9-property-suites", checks.check_properties, 300.0),
]


@pytest.mark.parametrize("name,fn,bound",
                         CRITERIA, ids=[c[0] for c in CRITERIA])
def test_criterion(name, fn, bound):
    start = time.monotonic()
    ok, detail = fn()
    elapsed = time.monotonic() - start
    print(f"{'PASS' if ok else 'FAIL'} {name} ({elapsed:.2f}s): {detail}")
    assert ok, f"{name}: {detail}"
    assert elapsed < bound, f"{name} took {elapsed:.2f}s, bound {bound}s"
