"""Finite-dimensional algebras given by structure constants.

``A.table[i][j]`` is the coordinate vector of ``e_i * e_j``.  Nothing is
assumed about the product beyond bilinearity: no associativity, no
commutativity, no unit.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import kernels
from .errors import (
    AlgebraFormatError,
    FieldError,
    FieldNotFinite,
    MismatchedAlgebras,
    SearchSpaceTooLarge,
)
from .field import Field, PrimeField, field_from_json
from .linalg import Matrix, intersect_spans, kernel, row_basis, solve_in_span

DEFAULT_ENUMERATION_CAP = 10**7


class Algebra:
    """An ``n``-dimensional algebra over ``field`` with named basis."""

    def __init__(self, field: Field, basis_names: Sequence[str], products):
        names = list(basis_names)
        n = len(names)
        if n == 0:
            raise ValueError("an algebra needs dimension at least 1")
        if len(set(names)) != n or any(not isinstance(s, str) or not s for s in names):
            raise ValueError("basis names must be distinct nonempty strings")
        zero = (field.zero,) * n
        table = [[zero] * n for _ in range(n)]
        if isinstance(products, dict):
            items = products.items()
        else:
            items = (((i, j), products[i][j]) for i in range(n) for j in range(n))
        for (i, j), vec in items:
            if not (0 <= i < n and 0 <= j < n):
                raise IndexError(f"product index {(i, j)} out of range")
            vec = field.vector(vec)
            if len(vec) != n:
                raise ValueError(f"product e{i}*e{j} has {len(vec)} coordinates, expected {n}")
            table[i][j] = vec
        self.field = field
        self.basis_names = tuple(names)
        self.dim = n
        self.table = tuple(tuple(row) for row in table)
        self._index = {s: i for i, s in enumerate(names)}
        # sparse form of the table, used by multiply
        self._sparse = [[tuple((k, c) for k, c in enumerate(self.table[i][j]) if c != 0)
                         for j in range(n)] for i in range(n)]
        self._int_table = None

    # -- constructors / accessors -------------------------------------------

    def element(self, coords: Iterable) -> "Element":
        return Element(self, self.field.vector(coords))

    def basis(self, i: int | str) -> "Element":
        if isinstance(i, str):
            i = self._index[i]
        return Element(self, tuple(self.field.one if k == i else self.field.zero
                                   for k in range(self.dim)))

    def __getitem__(self, name: str) -> "Element":
        return self.basis(name)

    @property
    def zero(self) -> "Element":
        return Element(self, (self.field.zero,) * self.dim)

    def basis_elements(self) -> list["Element"]:
        return [self.basis(i) for i in range(self.dim)]

    def index(self, name: str) -> int:
        return self._index[name]

    def parse(self, expr: str) -> "Element":
        return parse_element(self, expr)

    def is_commutative(self) -> bool:
        return all(self.table[i][j] == self.table[j][i]
                   for i in range(self.dim) for j in range(i + 1, self.dim))

    def int_table(self):
        """Flat ``n*n*n`` residue table for the finite-field kernels."""
        if not isinstance(self.field, PrimeField):
            raise FieldNotFinite("integer tables exist only over GF(p)")
        if self._int_table is None:
            self._int_table = kernels.pack_table(
                [int(c) for row in self.table for vec in row for c in vec])
        return self._int_table

    def __eq__(self, other):
        if not isinstance(other, Algebra):
            return NotImplemented
        return (self.field == other.field and self.basis_names == other.basis_names
                and self.table == other.table)

    def __hash__(self):
        return hash((self.field, self.basis_names, self.table))

    def __repr__(self):
        return f"Algebra({self.field!r}, dim={self.dim}, basis={list(self.basis_names)})"

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        products = {}
        for i in range(self.dim):
            for j in range(self.dim):
                vec = self.table[i][j]
                if any(c != 0 for c in vec):
                    products[f"{i},{j}"] = [self.field.format(c) for c in vec]
        return {"field": self.field.to_json(), "basis": list(self.basis_names),
                "products": products}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)

    @classmethod
    def from_json(cls, doc) -> "Algebra":
        return load_algebra_json(doc)


@dataclass(frozen=True, eq=False)
class Element:
    algebra: Algebra
    coords: tuple

    def _same(self, other: "Element"):
        if other.algebra is not self.algebra and other.algebra != self.algebra:
            raise MismatchedAlgebras("elements belong to different algebras")

    def __add__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        self._same(other)
        return Element(self.algebra, tuple(x + y for x, y in zip(self.coords, other.coords)))

    def __sub__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        self._same(other)
        return Element(self.algebra, tuple(x - y for x, y in zip(self.coords, other.coords)))

    def __neg__(self):
        return Element(self.algebra, tuple(-x for x in self.coords))

    def __mul__(self, other):
        if isinstance(other, Element):
            return multiply(self, other)
        c = self.algebra.field(other)
        return Element(self.algebra, tuple(c * x for x in self.coords))

    def __rmul__(self, c):
        c = self.algebra.field(c)
        return Element(self.algebra, tuple(c * x for x in self.coords))

    def __truediv__(self, c):
        c = self.algebra.field.one / self.algebra.field(c)
        return Element(self.algebra, tuple(c * x for x in self.coords))

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.coords == other.coords and self.algebra == other.algebra

    def __hash__(self):
        return hash(self.coords)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __bool__(self):
        return not self.is_zero()

    def __str__(self):
        return format_vector(self.algebra, self.coords)

    def __repr__(self):
        return f"Element({self})"

    def to_json(self):
        return [self.algebra.field.format(c) for c in self.coords]


def format_vector(algebra: Algebra, coords: Sequence) -> str:
    """Render coordinates as a linear combination of basis names."""
    parts = []
    char = algebra.field.characteristic
    for name, c in zip(algebra.basis_names, coords):
        if c == 0:
            continue
        neg = char == 0 and c < 0
        mag = -c if neg else c
        term = name if mag == 1 else f"{mag}*{name}"
        parts.append(("-", term) if neg else ("+", term))
    if not parts:
        return "0"
    sign, term = parts[0]
    out = ("-" if sign == "-" else "") + term
    for sign, term in parts[1:]:
        out += f" {sign} {term}"
    return out


_TERM_RE = re.compile(r"\s*([+-])?\s*(?:(\d+(?:\s*/\s*\d+)?)\s*\*?\s*)?([A-Za-z_][\w']*)?\s*")


def parse_element(algebra: Algebra, expr: str) -> Element:
    """Parse ``"a + 2/3*b - x"`` into an element of ``algebra``."""
    text = expr.strip()
    if not text:
        raise ValueError("empty element expression")
    coords = [algebra.field.zero] * algebra.dim
    pos = 0
    first = True
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if not m or m.end() == pos or (m.group(2) is None and m.group(3) is None):
            raise ValueError(f"cannot parse element expression at {text[pos:]!r}")
        sign, scalar, name = m.groups()
        if sign is None and not first:
            raise ValueError(f"missing operator before {text[pos:]!r}")
        c = algebra.field.parse(scalar.replace(" ", "")) if scalar else algebra.field.one
        if sign == "-":
            c = -c
        if name is None:
            raise ValueError(f"scalar {scalar!r} without a basis name")
        if name not in algebra._index:
            raise KeyError(f"unknown basis name {name!r}")
        k = algebra._index[name]
        coords[k] = coords[k] + c
        pos = m.end()
        first = False
    return Element(algebra, tuple(coords))


# -- products and operators ---------------------------------------------------

def multiply(x: Element, y: Element) -> Element:
    x._same(y)
    A = x.algebra
    out = [A.field.zero] * A.dim
    sparse = A._sparse
    for i, xi in enumerate(x.coords):
        if xi == 0:
            continue
        row = sparse[i]
        for j, yj in enumerate(y.coords):
            if yj == 0:
                continue
            c = xi * yj
            for k, t in row[j]:
                out[k] = out[k] + c * t
    return Element(A, tuple(out))


def multiply_vectors(A: Algebra, x: Sequence, y: Sequence) -> tuple:
    return multiply(Element(A, tuple(x)), Element(A, tuple(y))).coords


def left_op(a: Element) -> Matrix:
    """Matrix of ``L_a : x -> a*x`` acting on coordinate columns."""
    A = a.algebra
    cols = [multiply(a, e).coords for e in A.basis_elements()]
    return Matrix.from_columns(A.field, cols, A.dim)


def right_op(a: Element) -> Matrix:
    """Matrix of ``R_a : x -> x*a``."""
    A = a.algebra
    cols = [multiply(e, a).coords for e in A.basis_elements()]
    return Matrix.from_columns(A.field, cols, A.dim)


def is_idempotent(a: Element) -> bool:
    return multiply(a, a) == a


def symmetrize(A: Algebra) -> Algebra:
    """The algebra on the same space with ``x o y = (xy + yx)/2``."""
    half = A.field.one / A.field(2)
    n = A.dim
    table = [[tuple(half * (u + v) for u, v in zip(A.table[i][j], A.table[j][i]))
              for j in range(n)] for i in range(n)]
    return Algebra(A.field, A.basis_names, table)


# -- subspaces ------------------------------------------------------------------

class Subspace:
    """Subspace of an algebra, stored by its canonical rref basis."""

    __slots__ = ("algebra", "basis")

    def __init__(self, algebra: Algebra, vectors: Iterable[Sequence] = ()):
        vecs = [tuple(v.coords) if isinstance(v, Element) else tuple(v) for v in vectors]
        self.algebra = algebra
        self.basis = tuple(row_basis(algebra.field, vecs, algebra.dim))

    @classmethod
    def whole(cls, A: Algebra) -> "Subspace":
        return cls(A, [e.coords for e in A.basis_elements()])

    @classmethod
    def zero(cls, A: Algebra) -> "Subspace":
        return cls(A, [])

    @property
    def dim(self) -> int:
        return len(self.basis)

    def elements(self) -> list[Element]:
        return [Element(self.algebra, v) for v in self.basis]

    def coordinates(self, x) -> tuple | None:
        """Coefficients of ``x`` in the stored basis, or None if ``x`` is outside."""
        vec = x.coords if isinstance(x, Element) else tuple(x)
        return solve_in_span(self.algebra.field, self.basis, vec)

    def __contains__(self, x) -> bool:
        return self.coordinates(x) is not None

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(v in self for v in other.basis)

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace(self.algebra, self.basis + other.basis)

    def __and__(self, other: "Subspace") -> "Subspace":
        return Subspace(self.algebra,
                        intersect_spans(self.algebra.field, self.basis, other.basis))

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.basis == other.basis

    def __hash__(self):
        return hash(self.basis)

    def __bool__(self):
        return bool(self.basis)

    def __str__(self):
        if not self.basis:
            return "0"
        return "span{ " + ", ".join(format_vector(self.algebra, v) for v in self.basis) + " }"

    __repr__ = __str__

    def to_json(self):
        return [[self.algebra.field.format(c) for c in v] for v in self.basis]


def image(m: Matrix, A: Algebra) -> Subspace:
    return Subspace(A, m.columns())


def null_space(m: Matrix, A: Algebra) -> Subspace:
    return Subspace(A, kernel(m))


def subalgebra_closure(gens: Sequence[Element]) -> Subspace:
    """Smallest product-closed subspace containing ``gens``."""
    if not gens:
        raise ValueError("subalgebra_closure needs at least one generator")
    A = gens[0].algebra
    space = Subspace(A, gens)
    # each round either stops or raises the dimension; dim(A) rounds suffice
    for _ in range(A.dim + 1):
        basis = space.elements()
        new = [multiply(u, v).coords for u in basis for v in basis]
        grown = Subspace(A, list(space.basis) + new)
        if grown.dim == space.dim:
            return space
        space = grown
    return space


def is_closed(space: Subspace) -> bool:
    basis = space.elements()
    return all(multiply(u, v) in space for u in basis for v in basis)


def center(A: Algebra) -> Subspace:
    """``{x : x e_j = e_j x for every basis vector e_j}``."""
    rows = []
    for e in A.basis_elements():
        rows.extend((right_op(e) - left_op(e)).data)
    return Subspace(A, kernel(Matrix(A.field, rows, cols=A.dim)))


def enumerate_idempotents(A: Algebra, cap: int = DEFAULT_ENUMERATION_CAP) -> list[Element]:
    """Every ``x`` with ``x*x = x``, in lexicographic coordinate order."""
    if not isinstance(A.field, PrimeField):
        raise FieldNotFinite("idempotent enumeration needs a finite field")
    size = A.field.p ** A.dim
    if size > cap:
        raise SearchSpaceTooLarge(f"{A.field.p}^{A.dim} = {size} vectors exceeds cap {cap}")
    hits = kernels.enumerate_idempotents(A.int_table(), A.dim, A.field.p)
    return [A.element(v) for v in hits]


def change_basis(A: Algebra, new_basis: Sequence[Element], names: Sequence[str] | None = None) -> Algebra:
    """Structure constants of ``A`` relative to another basis of the same space."""
    vecs = [b.coords for b in new_basis]
    if len(vecs) != A.dim or len(row_basis(A.field, vecs, A.dim)) != A.dim:
        raise ValueError("new basis must have dim(A) independent vectors")
    table = []
    for u in new_basis:
        row = []
        for v in new_basis:
            c = solve_in_span(A.field, vecs, multiply(u, v).coords)
            row.append(c)
        table.append(row)
    return Algebra(A.field, names or [f"f{i}" for i in range(A.dim)], table)


def restrict(space: Subspace, names: Sequence[str] | None = None) -> Algebra:
    """The subalgebra ``space`` as an algebra in its own right (rref basis)."""
    A = space.algebra
    if not is_closed(space):
        raise ValueError("subspace is not closed under multiplication")
    basis = list(space.basis)
    table = [[solve_in_span(A.field, basis, multiply_vectors(A, u, v)) for v in basis]
             for u in basis]
    return Algebra(A.field, names or [f"f{i}" for i in range(len(basis))], table)


# -- JSON -------------------------------------------------------------------------

def load_algebra_json(doc) -> Algebra:
    """Validate and build an :class:`Algebra` from the JSON document model."""
    if not isinstance(doc, dict):
        raise AlgebraFormatError("top level must be an object")
    extra = set(doc) - {"field", "basis", "products"}
    if extra:
        raise AlgebraFormatError(f"unknown keys {sorted(extra)}")
    for key in ("field", "basis", "products"):
        if key not in doc:
            raise AlgebraFormatError("missing key", key)
    try:
        field = field_from_json(doc["field"])
    except FieldError as exc:
        raise AlgebraFormatError(str(exc), "field") from None
    basis = doc["basis"]
    if not isinstance(basis, list) or not basis:
        raise AlgebraFormatError("must be a nonempty list of names", "basis")
    for k, name in enumerate(basis):
        if not isinstance(name, str) or not name:
            raise AlgebraFormatError("basis names must be nonempty strings", f"basis[{k}]")
    if len(set(basis)) != len(basis):
        raise AlgebraFormatError("basis names must be distinct", "basis")
    n = len(basis)
    products = doc["products"]
    if not isinstance(products, dict):
        raise AlgebraFormatError("must be an object", "products")
    table = {}
    for key, vec in products.items():
        path = f'products["{key}"]'
        m = re.fullmatch(r"\s*(\d+)\s*,\s*(\d+)\s*", key)
        if not m:
            raise AlgebraFormatError('key must look like "i,j"', path)
        i, j = int(m.group(1)), int(m.group(2))
        if i >= n or j >= n:
            raise AlgebraFormatError(f"index out of range for dimension {n}", path)
        if (i, j) in table:
            raise AlgebraFormatError("duplicate product entry", path)
        if not isinstance(vec, list) or len(vec) != n:
            raise AlgebraFormatError(f"must be a list of {n} scalar strings", path)
        coords = []
        for k, s in enumerate(vec):
            if not isinstance(s, str):
                raise AlgebraFormatError("scalars must be strings", f"{path}[{k}]")
            try:
                coords.append(field.parse(s))
            except (ValueError, ZeroDivisionError) as exc:
                raise AlgebraFormatError(str(exc), f"{path}[{k}]") from None
        table[(i, j)] = coords
    return Algebra(field, basis, table)


def loads(text: str) -> Algebra:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise AlgebraFormatError(f"invalid JSON: {exc.msg} (line {exc.lineno}, column {exc.colno})") from None
    return load_algebra_json(doc)


def load(path) -> Algebra:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())
