"""Verification machinery: grids, summation by parts, serialization.

Everything the constructors produce can be checked against independent
brute force, cell by cell, with exact comparison. This script runs a
medium grid, the summation-by-parts sweep, the two classical weighted
corollaries, and a JSON round trip.
"""

import time

from harmonic_sums import (
    GridSpec,
    LinearArg,
    build_closed_form,
    corollary_check,
    parse_closed_form,
    render,
    sbp_check,
    sum_f,
    verify_grid,
)

print("Grid verification (closed forms vs. literal double sums):")
offsets = tuple(LinearArg(a, b) for a in range(2) for b in range(2))
start = time.perf_counter()
for family in ("F", "G"):
    spec = GridSpec(family, (0, 4), (1, 3), offsets, (0, 20))
    report = verify_grid(spec, build_closed_form)
    print(
        f"  family {family}: {report.total} cells, {report.passed} passed, "
        f"{report.failed} failed"
    )
    assert report.all_passed
print(f"  elapsed: {time.perf_counter() - start:.2f}s, all comparisons exact")
print()

print("Summation by parts: sum [(k+1)^w - k^w] H_k^(m) telescopes against")
print("(n+1)^w H_n^(m) - H_n^(m-w), for positive and negative w alike:")
for m in range(-2, 4):
    row = []
    for w in range(-3, 4):
        ok = all(sbp_check(m, w, n).all_passed for n in range(31))
        row.append("ok" if ok else "FAIL")
        assert ok
    print(f"  m = {m:+d}: w = -3..3 -> {' '.join(row)}")
print()

print("Classical weighted corollaries:")
for which in ("inv_k", "inv_k_plus_1"):
    start_n = 1 if which == "inv_k" else 0
    ok = all(corollary_check(which, n).all_passed for n in range(start_n, 101))
    print(f"  {which}: n = {start_n}..100: {'all pass' if ok else 'FAIL'}")
    assert ok
print()

print("JSON serialization round-trips bit-exactly:")
cf = sum_f(4, 3)
text = render(cf, "json")
assert parse_closed_form(text) == cf
print(f"  sum k^4 H_k^(3) -> {len(text)} bytes of JSON -> identical closed form")
