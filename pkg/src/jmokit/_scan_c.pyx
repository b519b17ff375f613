# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled core for the exhaustive lattice-triangle scan.

Same contract as _scan_py.scan: points sorted by (cost, x, y); return
(best_cost, i, j, k) with i <= j <= k for the cheapest triple whose
triangle has the target doubled area and whose total cost is within
cost_cap, lexicographically first among ties, or None.  The loops rely on
the cost-sorted order for all pruning, so the result is identical to the
fallback's.
"""


def scan(long long[::1] cost, long long[::1] px, long long[::1] py,
         long long target, long long cost_cap):
    cdef Py_ssize_t n = cost.shape[0]
    cdef Py_ssize_t i, j, k
    cdef Py_ssize_t bi = -1, bj = -1, bk = -1
    cdef long long best = -1
    cdef long long ci, cij, tot, ux, uy, cross

    for i in range(n):
        ci = cost[i]
        if 3 * ci > cost_cap:
            break
        if best >= 0 and 3 * ci >= best:
            break
        for j in range(i, n):
            cij = ci + cost[j]
            if cij + cost[j] > cost_cap:
                break
            if best >= 0 and cij + cost[j] >= best:
                break
            ux = px[j] - px[i]
            uy = py[j] - py[i]
            for k in range(j, n):
                tot = cij + cost[k]
                if tot > cost_cap:
                    break
                if best >= 0 and tot >= best:
                    break
                cross = ux * (py[k] - py[i]) - uy * (px[k] - px[i])
                if cross == target or -cross == target:
                    best = tot
                    bi = i
                    bj = j
                    bk = k
                    break  # later k in this (i, j) cost at least as much

    if best < 0:
        return None
    return best, bi, bj, bk
