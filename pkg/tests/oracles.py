"""Slow, independent reference computations used only by the tests."""

from __future__ import annotations

import itertools
import math
from functools import lru_cache, reduce


# -- matrices -------------------------------------------------------------------


def cofactor_det(m) -> int:
    n = len(m)
    if n == 1:
        return m[0][0]
    total = 0
    for j in range(n):
        if m[0][j]:
            minor = [row[:j] + row[j + 1:] for row in m[1:]]
            total += (-1) ** j * m[0][j] * cofactor_det(minor)
    return total


def minors_gcd(m, k: int) -> int:
    rows, cols = len(m), len(m[0])
    g = 0
    for ri in itertools.combinations(range(rows), k):
        for ci in itertools.combinations(range(cols), k):
            g = math.gcd(g, cofactor_det([[m[i][j] for j in ci] for i in ri]))
    return g


def invariant_factors(m) -> list[int]:
    """Diagonal of the Smith form from determinantal divisors; zeros trailing."""
    r = min(len(m), len(m[0]))
    out, prev = [], 1
    for k in range(1, r + 1):
        dk = minors_gcd(m, k)
        if dk == 0:
            out += [0] * (r - k + 1)
            break
        out.append(dk // prev)
        prev = dk
    return out


def matmul(a, b):
    return [[sum(x * y for x, y in zip(row, col)) for col in zip(*b)] for row in a]


def adjugate(m):
    n = len(m)
    if n == 1:
        return [[1]]
    return [
        [(-1) ** (i + j) * cofactor_det([r[:i] + r[i + 1:] for k, r in enumerate(m) if k != j]) for j in range(n)]
        for i in range(n)
    ]


# -- graphs ---------------------------------------------------------------------


def out_deg(a, v):
    return sum(a[v])


def simple_cycles(a):
    """Every simple cycle as a tuple of vertices starting at its least member."""
    n = len(a)
    found = set()

    def walk(start, path):
        v = path[-1]
        for w in range(n):
            if not a[v][w]:
                continue
            if w == start:
                found.add(tuple(path))
            elif w > start and w not in path:
                walk(start, path + [w])

    for s in range(n):
        walk(s, [s])
    return found


def reachable(a, v):
    seen, todo = {v}, [v]
    while todo:
        x = todo.pop()
        for y in range(len(a)):
            if a[x][y] and y not in seen:
                seen.add(y)
                todo.append(y)
    return seen


def on_cycle_vertices(a):
    return {v for c in simple_cycles(a) for v in c}


def line_points(a):
    cyc = on_cycle_vertices(a)
    return {v for v in range(len(a)) if all(out_deg(a, w) <= 1 and w not in cyc for w in reachable(a, v))}


def no_exit_cycle_vertices(a):
    out = set()
    for c in simple_cycles(a):
        if all(out_deg(a, v) == 1 for v in c):
            out |= set(c)
    return out


def _has_exit(a, c):
    # an exit is an edge leaving the cycle's vertex set or a parallel/extra edge
    succ = {c[i]: c[(i + 1) % len(c)] for i in range(len(c))}
    return any(out_deg(a, v) > 1 or a[v][succ[v]] > 1 for v in c)


def extreme_cycle_vertices(a):
    out = set()
    for c in simple_cycles(a):
        if not _has_exit(a, c):
            continue
        reach = set().union(*(reachable(a, v) for v in c))
        if all(any(u in reachable(a, w) for u in c) for w in reach):
            out |= set(c)
    return out


def hereditary_saturated(a):
    n = len(a)
    out = []
    for bits in range(1 << n):
        h = {v for v in range(n) if bits >> v & 1}
        hereditary = all(w in h for v in h for w in range(n) if a[v][w])
        saturated = all(
            v in h for v in range(n) if out_deg(a, v) and all(w in h for w in range(n) if a[v][w])
        )
        if hereditary and saturated:
            out.append(frozenset(h))
    return sorted(out, key=lambda s: (len(s), sorted(s)))


def undirected_connected(a):
    n = len(a)
    seen, todo = {0}, [0]
    while todo:
        x = todo.pop()
        for y in range(n):
            if (a[x][y] or a[y][x]) and y not in seen:
                seen.add(y)
                todo.append(y)
    return len(seen) == n


def canonical(a):
    n = len(a)
    return min(tuple(a[p][q] for p in perm for q in perm) for perm in itertools.permutations(range(n)))


# -- lattices and groups --------------------------------------------------------


def n_prime(a):
    n = len(a)
    return [[a[i][j] - (i == j and any(a[i])) for j in range(n)] for i in range(n)]


def unit_order_brute(a, kmax=40, coef=40):
    """Least k <= kmax with k * (1,...,1) an integer combination of the rows of N', else None.

    Two vertices only; coefficient search in [-coef, coef]^2.
    """
    npr = n_prime(a)
    (p, q), (r, s) = npr
    sums = {(x * p + y * r, x * q + y * s) for x in range(-coef, coef + 1) for y in range(-coef, coef + 1)}
    for k in range(1, kmax + 1):
        if (k, k) in sums:
            return k
    return None


def unit_order_adjugate(a):
    """For nonsingular N': least k with k*1 in the row lattice, from the adjugate."""
    npr = n_prime(a)
    d = cofactor_det(npr)
    assert d
    # x N' = k 1  <=>  x = k 1 adj(N') / d
    adj = adjugate(npr)
    row = [sum(adj[i][j] for i in range(len(adj))) for j in range(len(adj))]
    return abs(d) // math.gcd(d, reduce(math.gcd, row, 0))


def group_elements(torsion):
    return list(itertools.product(*(range(d) for d in torsion)))


@lru_cache(maxsize=None)
def torsion_automorphisms(torsion):
    """All automorphisms of prod Z_d, as tuples of generator images (brute force)."""
    elems = group_elements(torsion)
    k = len(torsion)
    out = []
    for images in itertools.product(elems, repeat=k):
        # relations: d_i * image_i == 0
        if any(any((d * c) % m for c, m in zip(img, torsion)) for d, img in zip(torsion, images)):
            continue
        mapped = {
            tuple(sum(x[i] * images[i][j] for i in range(k)) % torsion[j] for j in range(k)) for x in elems
        }
        if len(mapped) == len(elems):
            out.append(images)
    return out


def pointed_iso_brute(torsion, free_rank, a, b) -> bool:
    """Is there an automorphism of T x Z^free_rank (free_rank <= 1) sending a to b?"""
    k = len(torsion)
    ta, fa = a[:k], a[k:]
    tb, fb = b[:k], b[k:]
    for images in torsion_automorphisms(torsion) if k else [()]:
        base = tuple(sum(ta[i] * images[i][j] for i in range(k)) % torsion[j] for j in range(k))
        if free_rank == 0:
            if base == tuple(tb):
                return True
            continue
        for sign in (1, -1):
            if sign * fa[0] != fb[0]:
                continue
            for tau in group_elements(torsion):
                img = tuple((base[j] + fa[0] * tau[j]) % torsion[j] for j in range(k))
                if img == tuple(tb):
                    return True
    return False
