# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled finite-field kernels; mirror of ``_pykernels``."""

from libc.stdlib cimport malloc, free
from libc.string cimport memcpy, memset

ctypedef long long i64


cdef inline void _mul(const i64[::1] t, int n, i64 p, const i64* x, const i64* y,
                      i64* out) noexcept nogil:
    cdef int i, j, k
    cdef i64 c, xi
    cdef Py_ssize_t base
    memset(out, 0, n * sizeof(i64))
    for i in range(n):
        xi = x[i]
        if xi == 0:
            continue
        for j in range(n):
            if y[j] == 0:
                continue
            c = xi * y[j] % p
            base = (i * n + j) * n
            for k in range(n):
                out[k] += c * t[base + k]
    for k in range(n):
        out[k] %= p


cdef inline bint _eq(const i64* a, const i64* b, int n) noexcept nogil:
    cdef int k
    for k in range(n):
        if a[k] != b[k]:
            return False
    return True


cdef inline bint _next(i64* x, int n, i64 p) noexcept nogil:
    # lexicographic odometer; False once the counter wraps to zero
    cdef int k = n - 1
    while k >= 0:
        x[k] += 1
        if x[k] < p:
            return True
        x[k] = 0
        k -= 1
    return False


cdef bint _powers_agree(const i64[::1] t, int n, i64 p, const i64* x, int degree,
                        i64* pw, i64* tmp) noexcept nogil:
    # pw holds powers 1..degree, each n wide, at offset k*n
    cdef int k, i
    memcpy(pw + n, x, n * sizeof(i64))
    for k in range(2, degree + 1):
        _mul(t, n, p, pw + n, pw + (k - 1) * n, pw + k * n)
        for i in range(2, k):
            _mul(t, n, p, pw + i * n, pw + (k - i) * n, tmp)
            if not _eq(tmp, pw + k * n, n):
                return False
    return True


def _check(table, int n, i64 p):
    if n <= 0:
        raise ValueError("dimension must be positive")
    if p >= (1 << 20):
        raise ValueError("modulus too large for the compiled kernels")
    if len(table) != n * n * n:
        raise ValueError("table must have n**3 entries")


def multiply(const i64[::1] table, int n, i64 p, x, y):
    _check(table, n, p)
    cdef i64* buf = <i64*> malloc(3 * n * sizeof(i64))
    cdef int k
    try:
        for k in range(n):
            buf[k] = x[k]
            buf[n + k] = y[k]
        _mul(table, n, p, buf, buf + n, buf + 2 * n)
        return tuple(buf[2 * n + k] for k in range(n))
    finally:
        free(buf)


def enumerate_idempotents(const i64[::1] table, int n, i64 p):
    _check(table, n, p)
    cdef i64* x = <i64*> malloc(2 * n * sizeof(i64))
    cdef i64* sq = x + n
    cdef int k
    out = []
    try:
        memset(x, 0, n * sizeof(i64))
        while True:
            _mul(table, n, p, x, x, sq)
            if _eq(x, sq, n):
                out.append(tuple(x[k] for k in range(n)))
            if not _next(x, n, p):
                break
        return out
    finally:
        free(x)


def power_witness(const i64[::1] table, int n, i64 p, x, int degree):
    _check(table, n, p)
    cdef i64* buf = <i64*> malloc((degree + 3) * n * sizeof(i64))
    cdef i64* xv = buf + (degree + 1) * n
    cdef int k
    try:
        for k in range(n):
            xv[k] = x[k] % p
        return bool(_powers_agree(table, n, p, xv, degree, buf, xv + n))
    finally:
        free(buf)


def first_power_failure(const i64[::1] table, int n, i64 p, int degree):
    _check(table, n, p)
    cdef i64* buf = <i64*> malloc((degree + 3) * n * sizeof(i64))
    cdef i64* x = buf + (degree + 1) * n
    cdef i64* tmp = x + n
    cdef int k
    cdef bint found = False
    try:
        memset(x, 0, n * sizeof(i64))
        with nogil:
            while True:
                if not _powers_agree(table, n, p, x, degree, buf, tmp):
                    found = True
                    break
                if not _next(x, n, p):
                    break
        if found:
            return tuple(x[k] for k in range(n))
        return None
    finally:
        free(buf)


def first_flexible_failure(const i64[::1] table, int n, i64 p):
    _check(table, n, p)
    cdef i64* buf = <i64*> malloc(6 * n * sizeof(i64))
    cdef i64* x = buf
    cdef i64* y = buf + n
    cdef i64* u = buf + 2 * n
    cdef i64* v = buf + 3 * n
    cdef i64* lhs = buf + 4 * n
    cdef i64* rhs = buf + 5 * n
    cdef int k
    cdef bint found = False
    try:
        memset(x, 0, n * sizeof(i64))
        with nogil:
            while not found:
                memset(y, 0, n * sizeof(i64))
                while True:
                    _mul(table, n, p, x, y, u)
                    _mul(table, n, p, u, x, lhs)
                    _mul(table, n, p, y, x, v)
                    _mul(table, n, p, x, v, rhs)
                    if not _eq(lhs, rhs, n):
                        found = True
                        break
                    if not _next(y, n, p):
                        break
                if found or not _next(x, n, p):
                    break
        if found:
            return tuple(x[k] for k in range(n)), tuple(y[k] for k in range(n))
        return None
    finally:
        free(buf)


def first_ncj_failure(const i64[::1] table, int n, i64 p):
    _check(table, n, p)
    cdef i64* buf = <i64*> malloc(7 * n * sizeof(i64))
    cdef i64* x = buf
    cdef i64* w = buf + n
    cdef i64* x2 = buf + 2 * n
    cdef i64* u = buf + 3 * n
    cdef i64* v = buf + 4 * n
    cdef i64* lhs = buf + 5 * n
    cdef i64* rhs = buf + 6 * n
    cdef int k
    cdef bint found = False
    try:
        memset(x, 0, n * sizeof(i64))
        with nogil:
            while not found:
                _mul(table, n, p, x, x, x2)
                memset(w, 0, n * sizeof(i64))
                while True:
                    _mul(table, n, p, x2, w, u)
                    _mul(table, n, p, u, x, lhs)
                    _mul(table, n, p, w, x, v)
                    _mul(table, n, p, x2, v, rhs)
                    if not _eq(lhs, rhs, n):
                        found = True
                        break
                    if not _next(w, n, p):
                        break
                if found or not _next(x, n, p):
                    break
        if found:
            return tuple(x[k] for k in range(n)), tuple(w[k] for k in range(n))
        return None
    finally:
        free(buf)
