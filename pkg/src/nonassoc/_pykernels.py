"""Pure-Python finite-field kernels.

Same signatures and results as the compiled ``_kernels`` module.  ``table``
is a flat sequence of residues with ``e_i e_j = sum_k table[(i*n+j)*n+k] e_k``;
vectors are tuples of ints in ``[0, p)``.  Exhaustive scans walk GF(p)^n in
lexicographic order so every "first" result is the lexicographic minimum.
"""

from itertools import product


def _sparse(table, n):
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            base = (i * n + j) * n
            row.append([(k, table[base + k]) for k in range(n) if table[base + k]])
        rows.append(row)
    return rows


def _mul(sp, n, p, x, y):
    out = [0] * n
    for i in range(n):
        xi = x[i]
        if not xi:
            continue
        row = sp[i]
        for j in range(n):
            yj = y[j]
            if not yj:
                continue
            c = xi * yj
            for k, t in row[j]:
                out[k] += c * t
    return tuple(v % p for v in out)


def multiply(table, n, p, x, y):
    return _mul(_sparse(table, n), n, p, x, y)


def enumerate_idempotents(table, n, p):
    sp = _sparse(table, n)
    return [x for x in product(range(p), repeat=n) if _mul(sp, n, p, x, x) == x]


def _powers_agree(sp, n, p, x, degree):
    # every split i + (k-i) must give the same degree-k power
    pw = [None, x]
    for k in range(2, degree + 1):
        v = _mul(sp, n, p, pw[1], pw[k - 1])
        for i in range(2, k):
            if _mul(sp, n, p, pw[i], pw[k - i]) != v:
                return False
        pw.append(v)
    return True


def power_witness(table, n, p, x, degree):
    return _powers_agree(_sparse(table, n), n, p, tuple(x), degree)


def first_power_failure(table, n, p, degree):
    sp = _sparse(table, n)
    for x in product(range(p), repeat=n):
        if not _powers_agree(sp, n, p, x, degree):
            return x
    return None


def first_flexible_failure(table, n, p):
    """First pair (x, y) with (xy)x != x(yx)."""
    sp = _sparse(table, n)
    vecs = list(product(range(p), repeat=n))
    for x in vecs:
        for y in vecs:
            if _mul(sp, n, p, _mul(sp, n, p, x, y), x) != _mul(sp, n, p, x, _mul(sp, n, p, y, x)):
                return x, y
    return None


def first_ncj_failure(table, n, p):
    """First pair (x, w) with (x^2 w) x != x^2 (w x)."""
    sp = _sparse(table, n)
    vecs = list(product(range(p), repeat=n))
    for x in vecs:
        x2 = _mul(sp, n, p, x, x)
        for w in vecs:
            lhs = _mul(sp, n, p, _mul(sp, n, p, x2, w), x)
            rhs = _mul(sp, n, p, x2, _mul(sp, n, p, w, x))
            if lhs != rhs:
                return x, w
    return None
