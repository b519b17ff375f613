"""Pure-Python (numpy) fallback for the lattice-triangle scan.

Implements exactly the same contract as the compiled core in _scan_c: given
points sorted by (cost, x, y), find the cheapest index triple i <= j <= k
whose triangle has the target doubled area, total cost within cost_cap,
and among equally cheap triples return the lexicographically first.
"""

from __future__ import annotations

import numpy as np


def scan(cost: np.ndarray, px: np.ndarray, py: np.ndarray,
         target: int, cost_cap: int):
    """Return (best_cost, i, j, k) or None.  Arrays must be int64, sorted."""
    n = len(cost)
    best = -1
    # pass 1: minimum total cost among matching triples
    for i in range(n):
        ci = int(cost[i])
        if 3 * ci > cost_cap:
            break
        if best >= 0 and 3 * ci >= best:
            break
        dx = px[i:] - px[i]
        dy = py[i:] - py[i]
        cross = dx[:, None] * dy[None, :] - dy[:, None] * dx[None, :]
        tot = ci + cost[i:, None] + cost[None, i:]
        mask = np.triu(np.abs(cross) == target) & (tot <= cost_cap)
        if best >= 0:
            mask &= tot < best
        if mask.any():
            best = int(tot[mask].min())
    if best < 0:
        return None
    # pass 2: lexicographically first (i, j, k) achieving the minimum
    for i in range(n):
        ci = int(cost[i])
        if 3 * ci > best:
            break
        dx = px[i:] - px[i]
        dy = py[i:] - py[i]
        cross = dx[:, None] * dy[None, :] - dy[:, None] * dx[None, :]
        tot = ci + cost[i:, None] + cost[None, i:]
        mask = np.triu(np.abs(cross) == target) & (tot == best)
        hits = np.argwhere(mask)
        if len(hits):
            j, k = hits[0]  # argwhere rows come out in (j, k) lex order
            return best, i, i + int(j), i + int(k)
    raise AssertionError("scan pass 2 lost the minimum found in pass 1")
