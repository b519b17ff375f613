#!/usr/bin/env python3
"""Benchmark the compiled triangle-scan core against the numpy fallback.

Runs the exhaustive minimum-cost scan for a sweep of doubled areas and radii
through both backends, checks that every result (cost and witness) matches,
and prints a timing table.  Usage:

    python benchmarks/bench_kernels.py
"""

from __future__ import annotations

import time

from jmokit import _scan_py
from jmokit.scan import ball_points

try:
    from jmokit import _scan_c
except ImportError:
    _scan_c = None


CASES = [
    # (doubled_area, radius): radius two above the move lower bound, plus
    # a few deliberately larger radii where pruning helps less
    (4, 6),
    (25, 12),
    (60, 17),
    (101, 22),
    (143, 26),
]


def run(impl, doubled_area: int, radius: int):
    cost, px, py = ball_points(radius)
    t0 = time.perf_counter()
    result = impl.scan(cost, px, py, doubled_area, 2 * radius)
    return result, time.perf_counter() - t0


def main() -> None:
    if _scan_c is None:
        print("compiled core not built; timing the numpy fallback only\n")
    header = f"{'D':>5} {'radius':>6} {'points':>7} {'numpy (s)':>10}"
    if _scan_c is not None:
        header += f" {'compiled (s)':>12} {'speedup':>8} {'match':>6}"
    print(header)
    for doubled_area, radius in CASES:
        n_points = 2 * radius * radius + 2 * radius + 1
        res_py, t_py = run(_scan_py, doubled_area, radius)
        row = f"{doubled_area:>5} {radius:>6} {n_points:>7} {t_py:>10.4f}"
        if _scan_c is not None:
            res_c, t_c = run(_scan_c, doubled_area, radius)
            match = "yes" if res_c == res_py else "NO"
            row += f" {t_c:>12.4f} {t_py / t_c:>7.1f}x {match:>6}"
            if res_c != res_py:
                raise SystemExit(
                    f"backend mismatch at D={doubled_area}, radius={radius}: "
                    f"{res_c} vs {res_py}"
                )
        print(row)


if __name__ == "__main__":
    main()
