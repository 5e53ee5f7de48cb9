"""Dense exact linear algebra over a :class:`~nonassoc.field.Field`.

Vectors are plain tuples of field scalars.  :class:`Matrix` is an immutable
row-major grid; the free functions (:func:`rref`, :func:`kernel`, ...) never
mutate their arguments.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Iterable, Sequence

from .field import Field, QQ, Scalar


class Matrix:
    """Immutable ``rows x cols`` matrix over ``field``."""

    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field: Field, data: Iterable[Iterable], cols: int | None = None):
        rows = tuple(tuple(field(x) for x in row) for row in data)
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged matrix rows")
        self.field = field
        self.rows = len(rows)
        self.cols = cols
        self.data = rows

    @classmethod
    def _raw(cls, field, rows, cols):
        m = object.__new__(cls)
        m.field = field
        m.data = rows
        m.rows = len(rows)
        m.cols = cols
        return m

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        one, zero = field.one, field.zero
        return cls._raw(field, tuple(tuple(one if i == j else zero for j in range(n))
                                     for i in range(n)), n)

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> "Matrix":
        z = field.zero
        return cls._raw(field, tuple((z,) * cols for _ in range(rows)), cols)

    @classmethod
    def diag(cls, field: Field, values: Sequence) -> "Matrix":
        n = len(values)
        z = field.zero
        return cls._raw(field, tuple(tuple(field(values[i]) if i == j else z for j in range(n))
                                     for i in range(n)), n)

    @classmethod
    def from_columns(cls, field: Field, columns: Sequence[Sequence], rows: int) -> "Matrix":
        return cls(field, [[col[i] for col in columns] for i in range(rows)], cols=len(columns))

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    @property
    def shape(self):
        return self.rows, self.cols

    def column(self, j: int) -> tuple:
        return tuple(row[j] for row in self.data)

    def columns(self) -> list[tuple]:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> "Matrix":
        if not self.rows:
            return Matrix.zeros(self.field, self.cols, 0)
        return Matrix._raw(self.field, tuple(zip(*self.data)), self.rows)

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.data for x in row)

    def _check_shape(self, other):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_shape(other)
        return Matrix._raw(self.field, tuple(tuple(x + y for x, y in zip(r, s))
                                             for r, s in zip(self.data, other.data)), self.cols)

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_shape(other)
        return Matrix._raw(self.field, tuple(tuple(x - y for x, y in zip(r, s))
                                             for r, s in zip(self.data, other.data)), self.cols)

    def __neg__(self):
        return Matrix._raw(self.field, tuple(tuple(-x for x in r) for r in self.data), self.cols)

    def __mul__(self, c):
        if isinstance(c, Matrix):
            return NotImplemented
        c = self.field(c)
        return Matrix._raw(self.field, tuple(tuple(c * x for x in r) for r in self.data), self.cols)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
            cols = other.columns()
            zero = self.field.zero
            out = []
            for r in self.data:
                out.append(tuple(sum((x * y for x, y in zip(r, c) if x and y), zero) for c in cols))
            return Matrix._raw(self.field, tuple(out), other.cols)
        return self.apply(other)

    def apply(self, v: Sequence) -> tuple:
        if len(v) != self.cols:
            raise ValueError("vector length does not match matrix")
        zero = self.field.zero
        return tuple(sum((x * y for x, y in zip(r, v) if x and y), zero) for r in self.data)

    def shift(self, c) -> "Matrix":
        """``self - c*I`` for a square matrix."""
        c = self.field(c)
        return Matrix._raw(self.field, tuple(tuple(x - c if i == j else x for j, x in enumerate(r))
                                             for i, r in enumerate(self.data)), self.cols)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.data == other.data

    def __hash__(self):
        return hash(self.data)

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self.data)
        return f"Matrix[{self.rows}x{self.cols}]({body})"

    def to_json(self):
        return [[str(x) for x in r] for r in self.data]


@dataclass(frozen=True)
class Polynomial:
    """Univariate polynomial, coefficients lowest degree first, trimmed."""

    field: Field
    coeffs: tuple

    def __post_init__(self):
        c = [self.field(x) for x in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def from_roots(cls, field: Field, roots: Iterable) -> "Polynomial":
        p = cls(field, (1,))
        for r in roots:
            p = p * cls(field, (-field(r), 1))
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def __call__(self, x):
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if not self.coeffs or not other.coeffs:
            return Polynomial(self.field, ())
        out = [self.field.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(self.field, tuple(out))

    def divide_linear(self, r) -> tuple["Polynomial", Scalar]:
        """Synthetic division by ``t - r``; returns (quotient, remainder)."""
        if not self.coeffs:
            return self, self.field.zero
        out = []
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * r + c
            out.append(acc)
        rem = out.pop()
        return Polynomial(self.field, tuple(reversed(out))), rem

    def at_matrix(self, m: Matrix) -> Matrix:
        """Horner evaluation with ``m`` substituted for ``t``."""
        acc = Matrix.zeros(m.field, m.rows, m.cols)
        for c in reversed(self.coeffs):
            acc = (acc @ m).shift(-c)
        return acc

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1 and self.field.characteristic == 0:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}" if mono else str(c))
        return " + ".join(terms).replace("+ -", "- ")


def rref(m: Matrix) -> tuple[Matrix, list[int], int]:
    """Reduced row echelon form, pivot columns and rank."""
    rows = [list(r) for r in m.data]
    pivots: list[int] = []
    r = 0
    for c in range(m.cols):
        if r == m.rows:
            break
        piv = next((i for i in range(r, m.rows) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = m.field.one / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        rows[r][c] = m.field.one
        for i in range(m.rows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return Matrix._raw(m.field, tuple(tuple(row) for row in rows), m.cols), pivots, len(pivots)


def kernel(m: Matrix) -> list[tuple]:
    """Basis of ``{v : m v = 0}``, one vector per free column."""
    red, pivots, rank = rref(m)
    field = m.field
    free = [c for c in range(m.cols) if c not in pivots]
    basis = []
    for f in free:
        v = [field.zero] * m.cols
        v[f] = field.one
        for i, p in enumerate(pivots):
            v[p] = -red.data[i][f]
        basis.append(tuple(v))
    return basis


def row_basis(field: Field, vectors: Sequence[Sequence], length: int) -> list[tuple]:
    """Canonical (rref) basis of the span of ``vectors``."""
    if not vectors:
        return []
    red, _, rank = rref(Matrix(field, vectors, cols=length))
    return list(red.data[:rank])


def column_space(m: Matrix) -> list[tuple]:
    """Canonical basis of the image of ``m``."""
    return row_basis(m.field, m.columns(), m.rows)


def intersect_spans(field: Field, u: Sequence[Sequence], v: Sequence[Sequence]) -> list[tuple]:
    """Canonical basis of span(u) ∩ span(v).

    Solves ``sum a_i u_i - sum b_j v_j = 0`` and maps the kernel back
    through the ``u`` coefficients.
    """
    if not u or not v:
        return []
    n = len(u[0])
    if any(len(x) != n for x in list(u) + list(v)):
        raise ValueError("vectors of different lengths")
    cols = [tuple(x) for x in u] + [tuple(-y for y in w) for w in v]
    sys = Matrix.from_columns(field, cols, n)
    out = []
    for sol in kernel(sys):
        vec = [field.zero] * n
        for coef, basis_vec in zip(sol[: len(u)], u):
            if coef:
                vec = [a + coef * b for a, b in zip(vec, basis_vec)]
        out.append(vec)
    return row_basis(field, out, n)


def solve_in_span(field: Field, basis: Sequence[Sequence], target: Sequence) -> tuple | None:
    """Coefficients ``c`` with ``sum c_i basis_i = target``, or None."""
    n = len(target)
    if not basis:
        return () if all(x == 0 for x in target) else None
    aug = Matrix.from_columns(field, list(basis) + [tuple(target)], n)
    red, pivots, _ = rref(aug)
    k = len(basis)
    if k in pivots:
        return None
    coeffs = [field.zero] * k
    for i, p in enumerate(pivots):
        coeffs[p] = red.data[i][k]
    return tuple(coeffs)


def rank(m: Matrix) -> int:
    return rref(m)[2]


def char_poly(m: Matrix) -> Polynomial:
    """Monic ``det(tI - m)`` via similarity reduction to upper Hessenberg form."""
    if m.rows != m.cols:
        raise ValueError("characteristic polynomial of a non-square matrix")
    n = m.rows
    field = m.field
    h = [list(r) for r in m.data]
    for j in range(n - 2):
        piv = next((i for i in range(j + 1, n) if h[i][j] != 0), None)
        if piv is None:
            continue
        if piv != j + 1:
            h[piv], h[j + 1] = h[j + 1], h[piv]
            for row in h:
                row[piv], row[j + 1] = row[j + 1], row[piv]
        for i in range(j + 2, n):
            if h[i][j] == 0:
                continue
            u = h[i][j] / h[j + 1][j]
            h[i] = [x - u * y for x, y in zip(h[i], h[j + 1])]
            for row in h:
                row[j + 1] += u * row[i]
    # p_k: char poly of the leading k x k block
    polys = [Polynomial(field, (1,))]
    for k in range(n):
        acc = polys[k] * Polynomial(field, (-h[k][k], 1))
        prod = field.one
        for i in range(k - 1, -1, -1):
            prod = prod * h[i + 1][i]
            if prod == 0:
                break
            c = prod * h[i][k]
            if c != 0:
                acc = _poly_sub(acc, _poly_scale(polys[i], c))
        polys.append(acc)
    return polys[n]


def _poly_scale(p: Polynomial, c) -> Polynomial:
    return Polynomial(p.field, tuple(c * x for x in p.coeffs))


def _poly_sub(p: Polynomial, q: Polynomial) -> Polynomial:
    n = max(len(p.coeffs), len(q.coeffs))
    z = p.field.zero
    a = p.coeffs + (z,) * (n - len(p.coeffs))
    b = q.coeffs + (z,) * (n - len(q.coeffs))
    return Polynomial(p.field, tuple(x - y for x, y in zip(a, b)))


def _divisors(k: int) -> list[int]:
    k = abs(k)
    small, large = [], []
    for d in range(1, isqrt(k) + 1):
        if k % d == 0:
            small.append(d)
            if d != k // d:
                large.append(k // d)
    return small + large[::-1]


def rational_roots(p: Polynomial) -> tuple[list, Polynomial]:
    """Field roots of ``p`` with multiplicity, plus the root-free residual.

    Over Q candidates come from the rational root theorem applied to the
    integer-cleared polynomial; over GF(p) every residue is tried.
    """
    if p.is_zero():
        raise ValueError("roots of the zero polynomial")
    field = p.field
    roots: list = []
    residual = p
    if field.characteristic == 0:
        candidates = _rational_candidates(p)
    else:
        candidates = list(field.elements())
    for r in candidates:
        while residual.degree >= 1:
            q, rem = residual.divide_linear(r)
            if rem != 0:
                break
            roots.append(r)
            residual = q
    # normalize residual to be monic so "1" means fully split
    if residual.leading != 1:
        residual = _poly_scale(residual, field.one / residual.leading)
    return roots, residual


def _rational_candidates(p: Polynomial) -> list[Fraction]:
    coeffs = list(p.coeffs)
    den = 1
    for c in coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    cands = []
    if ints[0] == 0:
        cands.append(QQ(0))
    # strip the t^k factor before applying the rational root theorem
    while ints and ints[0] == 0:
        ints.pop(0)
    if len(ints) <= 1:
        return cands
    seen = set()
    for num in _divisors(ints[0]):
        for d in _divisors(ints[-1]):
            for s in (1, -1):
                r = Fraction(s * num, d)
                if r not in seen:
                    seen.add(r)
                    cands.append(r)
    return sorted(cands, key=lambda r: (abs(r), r))
