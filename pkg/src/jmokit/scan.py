"""Minimum-cost lattice-triangle scan with backend selection.

The scan enumerates all triangles whose three vertices have L1 norm at most
radius and whose total L1 cost is within a cap, and reports the cheapest one
with a prescribed doubled area.  The compiled core (_scan_c, Cython) is used
when it was built; otherwise the numpy fallback (_scan_py) is selected at
import.  Setting JMOKIT_PURE=1 forces the fallback.  Both backends implement
the identical contract, including the tie-breaking rule for the witness, so
swapping them never changes a result (benchmarks/bench_kernels.py checks and
times both).
"""

from __future__ import annotations

import os

import numpy as np

from .kernel import LatticePoint

if os.environ.get("JMOKIT_PURE"):
    from . import _scan_py as _impl

    BACKEND = "python"
else:
    try:
        from . import _scan_c as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        from . import _scan_py as _impl

        BACKEND = "python"


def backend_name() -> str:
    return BACKEND


def ball_points(radius: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """All lattice points with L1 norm <= radius, sorted by (cost, x, y)."""
    pts = sorted(
        (abs(x) + abs(y), x, y)
        for x in range(-radius, radius + 1)
        for y in range(-(radius - abs(x)), radius - abs(x) + 1)
    )
    cost = np.array([p[0] for p in pts], dtype=np.int64)
    px = np.array([p[1] for p in pts], dtype=np.int64)
    py = np.array([p[2] for p in pts], dtype=np.int64)
    return cost, px, py


def min_cost_triangle(
    doubled_area: int, radius: int, cost_cap: int
) -> tuple[int, tuple[LatticePoint, LatticePoint, LatticePoint]] | None:
    """Cheapest triangle with the given doubled area, or None.

    Vertices are restricted to the L1 ball of the given radius and the total
    cost to cost_cap.  The witness is canonical: lexicographically first
    index triple, over points sorted by (cost, x, y), among all minimum-cost
    matches.
    """
    if doubled_area < 1:
        raise ValueError("doubled_area must be >= 1")
    if radius < 1:
        raise ValueError("radius must be >= 1")
    cost, px, py = ball_points(radius)
    hit = _impl.scan(cost, px, py, doubled_area, cost_cap)
    if hit is None:
        return None
    best, i, j, k = hit
    pins = tuple(
        LatticePoint(int(px[idx]), int(py[idx])) for idx in (i, j, k)
    )
    return int(best), pins
