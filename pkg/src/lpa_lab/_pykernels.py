"""Pure-Python kernels on arbitrary-precision integers.

The compiled module ``_kernels`` implements the same algorithms step for step
on checked 64-bit integers; both must return identical results.
"""

from __future__ import annotations


def _argmin_abs(values):
    best, best_k = 0, -1
    for k, x in values:
        if x and (best_k < 0 or abs(x) < best):
            best, best_k = abs(x), k
    return best_k


def snf(rows: list[list[int]]) -> tuple[list[list[int]], list[list[int]], list[list[int]]]:
    """Smith normal form ``P @ M @ Q == D`` by pivot-minimising row/column reduction."""
    n, m = len(rows), len(rows[0])
    a = [list(r) for r in rows]
    p = [[int(i == j) for j in range(n)] for i in range(n)]
    q = [[int(i == j) for j in range(m)] for i in range(m)]

    def swap_rows(i, k):
        a[i], a[k] = a[k], a[i]
        p[i], p[k] = p[k], p[i]

    def swap_cols(j, k):
        for row in a:
            row[j], row[k] = row[k], row[j]
        for row in q:
            row[j], row[k] = row[k], row[j]

    for t in range(min(n, m)):
        piv_i = piv_j = -1
        best = 0
        for i in range(t, n):
            for j in range(t, m):
                x = a[i][j]
                if x and (piv_i < 0 or abs(x) < best):
                    best, piv_i, piv_j = abs(x), i, j
        if piv_i < 0:
            break
        if piv_i != t:
            swap_rows(t, piv_i)
        if piv_j != t:
            swap_cols(t, piv_j)
        while True:
            d = a[t][t]
            for i in range(t + 1, n):
                if a[i][t]:
                    f = a[i][t] // d
                    ai, at, pi, pt = a[i], a[t], p[i], p[t]
                    for j in range(t, m):
                        ai[j] -= f * at[j]
                    for j in range(n):
                        pi[j] -= f * pt[j]
            k = _argmin_abs((i, a[i][t]) for i in range(t + 1, n))
            if k >= 0:
                swap_rows(t, k)
                continue
            for j in range(t + 1, m):
                if a[t][j]:
                    f = a[t][j] // d
                    for i in range(t, n):
                        a[i][j] -= f * a[i][t]
                    for row in q:
                        row[j] -= f * row[t]
            k = _argmin_abs((j, a[t][j]) for j in range(t + 1, m))
            if k >= 0:
                swap_cols(t, k)
                continue
            bad = -1
            for i in range(t + 1, n):
                if any(a[i][j] % d for j in range(t + 1, m)):
                    bad = i
                    break
            if bad >= 0:
                for j in range(t, m):
                    a[t][j] += a[bad][j]
                for j in range(n):
                    p[t][j] += p[bad][j]
                continue
            break
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            p[t] = [-x for x in p[t]]
    return p, a, q


def det(rows: list[list[int]]) -> int:
    """Bareiss fraction-free elimination."""
    n = len(rows)
    a = [list(r) for r in rows]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def hs_scan(n: int, reach: list[int], out_masks: list[int], nonsink: int) -> list[int]:
    """Every vertex mask that is hereditary and saturated, in increasing order."""
    found = []
    for mask in range(1 << n):
        ok = True
        for v in range(n):
            if mask >> v & 1:
                if reach[v] & ~mask:
                    ok = False
                    break
            elif nonsink >> v & 1 and not out_masks[v] & ~mask:
                ok = False
                break
        if ok:
            found.append(mask)
    return found
