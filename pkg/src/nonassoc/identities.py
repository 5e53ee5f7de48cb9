"""Polynomial identities checked by full linearization on basis tuples.

Each check evaluates a hand-derived multilinear form on every ordered tuple
of basis indices.  When a form does not vanish, the report carries the
lexicographically least failing tuple and a concrete element witness that
violates the un-linearized identity.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from enum import Enum
from itertools import permutations, product
from typing import Callable, Sequence

from . import kernels
from .algebra import Algebra, Element, is_idempotent, left_op, multiply, right_op
from .errors import CharacteristicTooSmall, FieldNotFinite, NotIdempotent
from .field import PrimeField


class Identity(str, Enum):
    FLEXIBLE = "Flexible"
    FLEXIBLE_AT_IDEMPOTENT = "FlexibleAtIdempotent"
    POWER_ASSOCIATIVE = "PowerAssociativeCriterion"
    NONCOMMUTATIVE_JORDAN = "NoncommutativeJordan"
    COMMUTATIVE = "Commutative"


@dataclass
class IdentityReport:
    identity: Identity
    holds: bool
    counterexample: tuple | None = None
    witness: dict[str, Element] = dc_field(default_factory=dict)
    detail: str = ""

    def __bool__(self):
        return self.holds

    def to_json(self) -> dict:
        doc = {"identity": self.identity.value, "holds": self.holds,
               "counterexample": list(self.counterexample) if self.counterexample is not None else None}
        if self.witness:
            doc["witness"] = {k: v.to_json() for k, v in self.witness.items()}
        if self.detail:
            doc["detail"] = self.detail
        return doc


# -- vector helpers -------------------------------------------------------------

def _add(u, v):
    return tuple(x + y for x, y in zip(u, v))


def _sub(u, v):
    return tuple(x - y for x, y in zip(u, v))


def _is_zero(u):
    return all(x == 0 for x in u)


class _Products:
    """Memoized products of basis monomials in a fixed algebra."""

    def __init__(self, A: Algebra):
        self.A = A
        self._cache: dict = {}

    def mul(self, u, v):
        key = (u, v)
        hit = self._cache.get(key)
        if hit is None:
            hit = multiply(Element(self.A, u), Element(self.A, v)).coords
            self._cache[key] = hit
        return hit


def _check_char(A: Algebra):
    if A.field.characteristic == 3:
        raise CharacteristicTooSmall("this check needs characteristic 0 or p >= 5")


def _find_point(A: Algebra, indices: Sequence[int], violates: Callable[[Element], bool],
                top: int = 5) -> Element | None:
    """Search small integer combinations of the given basis vectors.

    The forms checked here have degree at most 4 in each variable, so a grid
    of 5 values per coordinate always contains a non-root of a nonzero form.
    """
    idx = sorted(set(indices))
    F = A.field
    values = range(top) if F.characteristic else range(1, top + 1)
    for coeffs in product(values, repeat=len(idx)):
        coords = [F.zero] * A.dim
        for i, c in zip(idx, coeffs):
            coords[i] = F(c)
        x = Element(A, tuple(coords))
        if violates(x):
            return x
    return None


# -- identities -------------------------------------------------------------------

def flexible_defect(x: Element, y: Element) -> Element:
    return (x * y) * x - x * (y * x)


def is_commutative(A: Algebra) -> IdentityReport:
    for i in range(A.dim):
        for j in range(i + 1, A.dim):
            if A.table[i][j] != A.table[j][i]:
                return IdentityReport(Identity.COMMUTATIVE, False, (i, j),
                                      {"x": A.basis(i), "y": A.basis(j)})
    return IdentityReport(Identity.COMMUTATIVE, True)


def _ordered_triples(n):
    """Diagonal triples (i, j, i) first, then the rest, each lexicographic."""
    diag = [(i, j, i) for i in range(n) for j in range(n)]
    rest = [t for t in product(range(n), repeat=3) if t[0] != t[2]]
    return diag + rest


def is_flexible(A: Algebra) -> IdentityReport:
    """``(xy)z + (zy)x = x(yz) + z(yx)`` on all ordered basis triples."""
    P = _Products(A)
    e = [A.basis(i).coords for i in range(A.dim)]
    for i, j, k in _ordered_triples(A.dim):
        lhs = _add(P.mul(P.mul(e[i], e[j]), e[k]), P.mul(P.mul(e[k], e[j]), e[i]))
        rhs = _add(P.mul(e[i], P.mul(e[j], e[k])), P.mul(e[k], P.mul(e[j], e[i])))
        if lhs != rhs:
            x = A.basis(i) if i == k else A.basis(i) + A.basis(k)
            y = A.basis(j)
            assert not flexible_defect(x, y).is_zero()
            return IdentityReport(Identity.FLEXIBLE, False, (i, j, k), {"x": x, "y": y},
                                  f"({x})({y})({x}) differs between associations")
    return IdentityReport(Identity.FLEXIBLE, True)


def is_flexible_idempotent(A: Algebra, a: Element) -> IdentityReport:
    """``L_a R_a = R_a L_a`` and ``(xa)x = x(ax)`` for every x."""
    if not is_idempotent(a):
        raise NotIdempotent(f"{a} is not idempotent")
    L, R = left_op(a), right_op(a)
    comm = L @ R - R @ L
    for j in range(A.dim):
        if any(comm[k, j] != 0 for k in range(A.dim)):
            return IdentityReport(Identity.FLEXIBLE_AT_IDEMPOTENT, False, (j,),
                                  {"x": A.basis(j)}, "L_a R_a != R_a L_a")
    e = A.basis_elements()
    pairs = [(i, i) for i in range(A.dim)] + [(i, k) for i in range(A.dim)
                                              for k in range(A.dim) if i != k]
    for i, k in pairs:
        y, z = e[i], e[k]
        if (y * a) * z + (z * a) * y != y * (a * z) + z * (a * y):
            x = y if i == k else y + z
            assert not flexible_defect(x, a).is_zero()
            return IdentityReport(Identity.FLEXIBLE_AT_IDEMPOTENT, False, (i, k), {"x": x},
                                  f"(xa)x != x(ax) at x = {x}")
    return IdentityReport(Identity.FLEXIBLE_AT_IDEMPOTENT, True)


def _cubic_defect(x: Element) -> Element:
    return (x * x) * x - x * (x * x)


def _quartic_defect(x: Element) -> Element:
    x2 = x * x
    return x2 * x2 - (x2 * x) * x


def is_power_associative(A: Algebra) -> IdentityReport:
    """Degree-4 criterion: ``x^2 x = x x^2`` and ``x^2 x^2 = (x^2 x) x``.

    Both identities are checked through their full linearizations (sum over
    all slot permutations) on ordered basis tuples.
    """
    _check_char(A)
    P = _Products(A)
    n = A.dim
    e = [A.basis(i).coords for i in range(n)]

    def cubic(t):
        acc = (A.field.zero,) * n
        for s in permutations(t):
            u, v, w = (e[k] for k in s)
            acc = _add(acc, _sub(P.mul(P.mul(u, v), w), P.mul(u, P.mul(v, w))))
        return acc

    for t in product(range(n), repeat=3):
        if not _is_zero(cubic(t)):
            x = _find_point(A, t, lambda x: not _cubic_defect(x).is_zero())
            return IdentityReport(Identity.POWER_ASSOCIATIVE, False, t,
                                  {"x": x} if x is not None else {}, "x^2 x != x x^2")

    memo: dict = {}

    def quartic(t):
        key = tuple(sorted(t))
        if key not in memo:
            acc = (A.field.zero,) * n
            for s in set(permutations(key)):
                u, v, w, z = (e[k] for k in s)
                uv = P.mul(u, v)
                term = _sub(P.mul(uv, P.mul(w, z)), P.mul(P.mul(uv, w), z))
                # each distinct arrangement stands for this many permutations
                acc = _add(acc, tuple(c * _perm_weight(key) for c in term))
            memo[key] = acc
        return memo[key]

    for t in product(range(n), repeat=4):
        if not _is_zero(quartic(t)):
            x = _find_point(A, t, lambda x: not _quartic_defect(x).is_zero())
            return IdentityReport(Identity.POWER_ASSOCIATIVE, False, t,
                                  {"x": x} if x is not None else {}, "x^2 x^2 != (x^2 x) x")
    return IdentityReport(Identity.POWER_ASSOCIATIVE, True,
                          detail="degree <= 4 criterion on linearized identities")


def _perm_weight(key):
    w = 1
    for k in set(key):
        for m in range(2, key.count(k) + 1):
            w *= m
    return w


def _ncj_defect(x: Element, w: Element) -> Element:
    x2 = x * x
    return (x2 * w) * x - x2 * (w * x)


def is_noncommutative_jordan(A: Algebra) -> IdentityReport:
    """Flexible, and ``(x^2 w) x = x^2 (w x)`` via its linearization in x."""
    _check_char(A)
    flex = is_flexible(A)
    if not flex.holds:
        return IdentityReport(Identity.NONCOMMUTATIVE_JORDAN, False, flex.counterexample,
                              flex.witness, "not flexible: " + flex.detail)
    P = _Products(A)
    n = A.dim
    e = [A.basis(i).coords for i in range(n)]
    memo: dict = {}

    def form(i, j, k, l):
        key = (tuple(sorted((i, j, k))), l)
        if key not in memo:
            acc = (A.field.zero,) * n
            w = e[l]
            for s in permutations((i, j, k)):
                u, v, x = (e[m] for m in s)
                uv = P.mul(u, v)
                acc = _add(acc, _sub(P.mul(P.mul(uv, w), x), P.mul(uv, P.mul(w, x))))
            memo[key] = acc
        return memo[key]

    for i, j, k, l in product(range(n), repeat=4):
        if not _is_zero(form(i, j, k, l)):
            w = A.basis(l)
            x = _find_point(A, (i, j, k), lambda x: not _ncj_defect(x, w).is_zero())
            wit = {"x": x, "w": w} if x is not None else {"w": w}
            return IdentityReport(Identity.NONCOMMUTATIVE_JORDAN, False, (i, j, k, l), wit,
                                  "(x^2 w) x != x^2 (w x)")
    return IdentityReport(Identity.NONCOMMUTATIVE_JORDAN, True)


# -- witness semantics ------------------------------------------------------------

def power_witness_check(x: Element, d: int) -> bool:
    """True iff for every k <= d all bracketings of the k-th power of x agree.

    ``P_1 = {x}`` and ``P_k = {u v : u in P_i, v in P_j, i + j = k}``.
    """
    if d < 2:
        raise ValueError("degree must be at least 2")
    powers: list[set] = [set(), {x.coords}]
    A = x.algebra
    for k in range(2, d + 1):
        level = set()
        for i in range(1, k):
            for u in powers[i]:
                for v in powers[k - i]:
                    level.add(multiply(Element(A, u), Element(A, v)).coords)
        if len(level) != 1:
            return False
        powers.append(level)
    return True


def power_associativity_oracle(A: Algebra, degree: int = 6) -> Element | None:
    """First element (lexicographic) whose powers up to ``degree`` disagree.

    Exhaustive over GF(p)^n; runs in the finite-field kernels.
    """
    if not isinstance(A.field, PrimeField):
        raise FieldNotFinite("the exhaustive oracle needs a finite field")
    hit = kernels.first_power_failure(A.int_table(), A.dim, A.field.p, degree)
    return None if hit is None else A.element(hit)


def flexible_oracle(A: Algebra) -> tuple[Element, Element] | None:
    if not isinstance(A.field, PrimeField):
        raise FieldNotFinite("the exhaustive oracle needs a finite field")
    hit = kernels.first_flexible_failure(A.int_table(), A.dim, A.field.p)
    return None if hit is None else (A.element(hit[0]), A.element(hit[1]))


def noncommutative_jordan_oracle(A: Algebra) -> tuple[Element, Element] | None:
    """First pair (x, w) with ``(x^2 w) x != x^2 (w x)``, by exhaustion."""
    if not isinstance(A.field, PrimeField):
        raise FieldNotFinite("the exhaustive oracle needs a finite field")
    hit = kernels.first_ncj_failure(A.int_table(), A.dim, A.field.p)
    return None if hit is None else (A.element(hit[0]), A.element(hit[1]))


CHECKS = {
    "flexible": is_flexible,
    "power-associative": is_power_associative,
    "noncommutative-jordan": is_noncommutative_jordan,
    "commutative": is_commutative,
}
