# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels on checked 64-bit integers.

Mirrors ``_pykernels`` exactly.  Any arithmetic step that would leave the
signed 64-bit range raises ``Overflow`` instead of wrapping.
"""

from libc.stdlib cimport malloc, free

from .errors import Overflow

cdef extern from *:
    """
    static inline int lpa_mul(long long a, long long b, long long *r) { return __builtin_mul_overflow(a, b, r); }
    static inline int lpa_add(long long a, long long b, long long *r) { return __builtin_add_overflow(a, b, r); }
    static inline int lpa_sub(long long a, long long b, long long *r) { return __builtin_sub_overflow(a, b, r); }
    """
    int lpa_mul(long long a, long long b, long long *r) nogil
    int lpa_add(long long a, long long b, long long *r) nogil
    int lpa_sub(long long a, long long b, long long *r) nogil

cdef long long LLMIN = -9223372036854775807 - 1


cdef inline long long cabs(long long x) except? -1:
    if x == LLMIN:
        raise Overflow("absolute value out of 64-bit range")
    return -x if x < 0 else x


cdef inline long long floordiv(long long a, long long b) except? -1:
    cdef long long q
    if b == -1 and a == LLMIN:
        raise Overflow("quotient out of 64-bit range")
    q = a // b
    return q


cdef inline long long fms(long long x, long long f, long long y) except? -1:
    """x - f * y, checked."""
    cdef long long prod, res
    if lpa_mul(f, y, &prod) or lpa_sub(x, prod, &res):
        raise Overflow("intermediate value out of 64-bit range")
    return res


cdef inline long long cadd(long long x, long long y) except? -1:
    cdef long long res
    if lpa_add(x, y, &res):
        raise Overflow("intermediate value out of 64-bit range")
    return res


cdef inline long long cneg(long long x) except? -1:
    cdef long long res
    if lpa_sub(0, x, &res):
        raise Overflow("negation out of 64-bit range")
    return res


cdef long long *_alloc(Py_ssize_t k) except NULL:
    cdef long long *buf = <long long *> malloc(max(k, 1) * sizeof(long long))
    if buf == NULL:
        raise MemoryError()
    return buf


cdef list _to_list(long long *buf, Py_ssize_t r, Py_ssize_t c):
    return [[buf[i * c + j] for j in range(c)] for i in range(r)]


cdef void _swap_rows(long long *buf, Py_ssize_t cols, Py_ssize_t i, Py_ssize_t k) noexcept:
    cdef Py_ssize_t j
    cdef long long tmp
    for j in range(cols):
        tmp = buf[i * cols + j]
        buf[i * cols + j] = buf[k * cols + j]
        buf[k * cols + j] = tmp


cdef void _swap_cols(long long *buf, Py_ssize_t rows, Py_ssize_t cols, Py_ssize_t j, Py_ssize_t k) noexcept:
    cdef Py_ssize_t i
    cdef long long tmp
    for i in range(rows):
        tmp = buf[i * cols + j]
        buf[i * cols + j] = buf[i * cols + k]
        buf[i * cols + k] = tmp


def snf(rows):
    cdef Py_ssize_t n = len(rows), m = len(rows[0])
    cdef Py_ssize_t i, j, k, t, piv_i, piv_j, bad
    cdef long long d, f, x, best
    cdef long long *a = _alloc(n * m)
    cdef long long *p = NULL
    cdef long long *q = NULL
    try:
        p = _alloc(n * n)
        q = _alloc(m * m)
        for i in range(n):
            for j in range(m):
                a[i * m + j] = rows[i][j]
        for i in range(n):
            for j in range(n):
                p[i * n + j] = 1 if i == j else 0
        for i in range(m):
            for j in range(m):
                q[i * m + j] = 1 if i == j else 0
        for t in range(min(n, m)):
            piv_i = -1
            piv_j = -1
            best = 0
            for i in range(t, n):
                for j in range(t, m):
                    x = a[i * m + j]
                    if x != 0 and (piv_i < 0 or cabs(x) < best):
                        best = cabs(x)
                        piv_i = i
                        piv_j = j
            if piv_i < 0:
                break
            if piv_i != t:
                _swap_rows(a, m, t, piv_i)
                _swap_rows(p, n, t, piv_i)
            if piv_j != t:
                _swap_cols(a, n, m, t, piv_j)
                _swap_cols(q, m, m, t, piv_j)
            while True:
                d = a[t * m + t]
                for i in range(t + 1, n):
                    if a[i * m + t] != 0:
                        f = floordiv(a[i * m + t], d)
                        for j in range(t, m):
                            a[i * m + j] = fms(a[i * m + j], f, a[t * m + j])
                        for j in range(n):
                            p[i * n + j] = fms(p[i * n + j], f, p[t * n + j])
                k = -1
                best = 0
                for i in range(t + 1, n):
                    x = a[i * m + t]
                    if x != 0 and (k < 0 or cabs(x) < best):
                        best = cabs(x)
                        k = i
                if k >= 0:
                    _swap_rows(a, m, t, k)
                    _swap_rows(p, n, t, k)
                    continue
                for j in range(t + 1, m):
                    if a[t * m + j] != 0:
                        f = floordiv(a[t * m + j], d)
                        for i in range(t, n):
                            a[i * m + j] = fms(a[i * m + j], f, a[i * m + t])
                        for i in range(m):
                            q[i * m + j] = fms(q[i * m + j], f, q[i * m + t])
                k = -1
                best = 0
                for j in range(t + 1, m):
                    x = a[t * m + j]
                    if x != 0 and (k < 0 or cabs(x) < best):
                        best = cabs(x)
                        k = j
                if k >= 0:
                    _swap_cols(a, n, m, t, k)
                    _swap_cols(q, m, m, t, k)
                    continue
                bad = -1
                for i in range(t + 1, n):
                    for j in range(t + 1, m):
                        if a[i * m + j] % d != 0:
                            bad = i
                            break
                    if bad >= 0:
                        break
                if bad >= 0:
                    for j in range(t, m):
                        a[t * m + j] = cadd(a[t * m + j], a[bad * m + j])
                    for j in range(n):
                        p[t * n + j] = cadd(p[t * n + j], p[bad * n + j])
                    continue
                break
            if a[t * m + t] < 0:
                for j in range(m):
                    a[t * m + j] = cneg(a[t * m + j])
                for j in range(n):
                    p[t * n + j] = cneg(p[t * n + j])
        return _to_list(p, n, n), _to_list(a, n, m), _to_list(q, m, m)
    finally:
        free(a)
        if p != NULL:
            free(p)
        if q != NULL:
            free(q)


def det(rows):
    cdef Py_ssize_t n = len(rows)
    cdef Py_ssize_t i, j, k
    cdef long long sign = 1, prev = 1, x, y, num
    cdef long long *a = _alloc(n * n)
    try:
        for i in range(n):
            for j in range(n):
                a[i * n + j] = rows[i][j]
        for k in range(n - 1):
            if a[k * n + k] == 0:
                for i in range(k + 1, n):
                    if a[i * n + k] != 0:
                        _swap_rows(a, n, k, i)
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    if lpa_mul(a[i * n + j], a[k * n + k], &x) or lpa_mul(a[i * n + k], a[k * n + j], &y):
                        raise Overflow("determinant intermediate out of 64-bit range")
                    if lpa_sub(x, y, &num):
                        raise Overflow("determinant intermediate out of 64-bit range")
                    a[i * n + j] = floordiv(num, prev)
            prev = a[k * n + k]
        x = a[(n - 1) * n + n - 1]
        return x if sign > 0 else cneg(x)
    finally:
        free(a)


def hs_scan(int n, reach, out_masks, unsigned long long nonsink):
    cdef unsigned long long mask, full
    cdef unsigned long long rch[64]
    cdef unsigned long long outm[64]
    cdef int v
    cdef bint ok
    if n > 62:
        raise Overflow("vertex masks exceed 64 bits")
    for v in range(n):
        rch[v] = reach[v]
        outm[v] = out_masks[v]
    found = []
    full = (<unsigned long long> 1) << n
    mask = 0
    while mask < full:
        ok = True
        for v in range(n):
            if (mask >> v) & 1:
                if rch[v] & ~mask:
                    ok = False
                    break
            elif (nonsink >> v) & 1 and not (outm[v] & ~mask):
                ok = False
                break
        if ok:
            found.append(mask)
        mask += 1
    return found
