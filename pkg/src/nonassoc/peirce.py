"""Eigenspaces of idempotents and the fusion rules among them."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from enum import Enum
from typing import Sequence

from .algebra import (Algebra, Element, Subspace, image, is_idempotent, left_op, multiply,
                      null_space, right_op)
from .errors import (BadCharacteristic, ComponentsNotDirectSum, NotFlexibleIdempotent,
                     NotIdempotent, NotSemisimple, ZeroElement)
from .linalg import Matrix, Polynomial, char_poly, rational_roots, row_basis, solve_in_span


class Side(str, Enum):
    LEFT = "left"
    RIGHT = "right"


def _require_idempotent(a: Element):
    if a.is_zero():
        raise ZeroElement("the zero idempotent is not analyzed")
    if not is_idempotent(a):
        raise NotIdempotent(f"{a} is not idempotent")


def operator(a: Element, side: Side | str) -> Matrix:
    return left_op(a) if Side(side) is Side.LEFT else right_op(a)


def _eigen_order(values):
    # 1 first, then 0, then the rest in discovery order
    return sorted(values, key=lambda v: (v != 1, v != 0))


@dataclass
class EigenData:
    idempotent: Element
    side: Side
    eigenvalues: list
    eigenspaces: dict
    residual: Polynomial

    def space(self, lam) -> Subspace:
        lam = self.idempotent.algebra.field(lam)
        if lam in self.eigenspaces:
            return self.eigenspaces[lam]
        return Subspace.zero(self.idempotent.algebra)

    def to_json(self):
        F = self.idempotent.algebra.field
        return {"side": self.side.value,
                "eigenvalues": [F.format(v) for v in self.eigenvalues],
                "eigenspaces": {F.format(k): v.to_json() for k, v in self.eigenspaces.items()},
                "residual": [F.format(c) for c in self.residual.coeffs]}


def eigen_data(a: Element, side: Side | str) -> EigenData:
    """Field eigenvalues of ``L_a`` or ``R_a`` and their eigenspaces."""
    _require_idempotent(a)
    side = Side(side)
    X = operator(a, side)
    roots, residual = rational_roots(char_poly(X))
    distinct = _eigen_order(list(dict.fromkeys(roots)))
    A = a.algebra
    spaces = {lam: null_space(X.shift(lam), A) for lam in distinct}
    return EigenData(a, side, distinct, spaces, residual)


def bi_eigenspace(a: Element, lam, delta) -> Subspace:
    """``A_{lam,delta}(a) = A_lam(L_a) ∩ A_delta(R_a)``."""
    _require_idempotent(a)
    A = a.algebra
    lam, delta = A.field(lam), A.field(delta)
    left = null_space(left_op(a).shift(lam), A)
    right = null_space(right_op(a).shift(delta), A)
    return left & right


def bi_spaces(a: Element, left: EigenData | None = None,
              right: EigenData | None = None) -> dict:
    """All nonzero bi-eigenspaces, keyed by ``(lam, delta)``."""
    left = left or eigen_data(a, Side.LEFT)
    right = right or eigen_data(a, Side.RIGHT)
    out = {}
    for lam in left.eigenvalues:
        for delta in right.eigenvalues:
            s = left.eigenspaces[lam] & right.eigenspaces[delta]
            if s:
                out[(lam, delta)] = s
    return out


def circle_eigenspace(a: Element, lam) -> Subspace:
    """``{x : ax + xa = 2 lam x}``; ``lam = 1/2`` gives the circle-half space."""
    A = a.algebra
    lam = A.field(lam)
    return null_space((left_op(a) + right_op(a)).shift(2 * lam), A)


def circle_half(a: Element) -> Subspace:
    A = a.algebra
    return null_space((left_op(a) + right_op(a)).shift(1), A)


def eigenvalue_pairing_check(A: Algebra, a: Element) -> bool:
    """Every nonzero ``A_{lam,delta}`` has ``delta = lam`` or ``delta = 1 - lam``."""
    from .identities import is_flexible_idempotent

    if not is_flexible_idempotent(A, a).holds:
        raise NotFlexibleIdempotent(f"{a} is not a flexible idempotent")
    return all(delta == lam or delta == 1 - lam for lam, delta in bi_spaces(a))


def is_direct_sum(A: Algebra, spaces: Sequence[Subspace]) -> bool:
    """True iff the spaces are independent and together span ``A``."""
    total = sum(s.dim for s in spaces)
    vecs = [v for s in spaces for v in s.basis]
    return total == A.dim and len(row_basis(A.field, vecs, A.dim)) == A.dim


@dataclass
class PeirceReport:
    idempotent: Element
    left: EigenData
    right: EigenData
    bi_spaces: dict
    one_one: Subspace
    zero_zero: Subspace
    circle_half: Subspace
    direct_sum: bool
    image_checks: dict = dc_field(default_factory=dict)

    @property
    def dims(self) -> tuple[int, int, int]:
        return self.one_one.dim, self.zero_zero.dim, self.circle_half.dim

    @property
    def images_match(self) -> bool:
        return all(self.image_checks.values())

    def components(self) -> list[tuple[str, Subspace]]:
        return [("A_{1,1}", self.one_one), ("A_{0,0}", self.zero_zero),
                ("A°_{1/2}", self.circle_half)]

    def to_json(self):
        F = self.idempotent.algebra.field
        return {
            "idempotent": self.idempotent.to_json(),
            "left": self.left.to_json(),
            "right": self.right.to_json(),
            "bi_spaces": {f"{F.format(l)},{F.format(d)}": s.to_json()
                          for (l, d), s in self.bi_spaces.items()},
            "A_11": self.one_one.to_json(),
            "A_00": self.zero_zero.to_json(),
            "circle_half": self.circle_half.to_json(),
            "direct_sum": self.direct_sum,
            "image_checks": self.image_checks,
        }


def albert_decomposition(A: Algebra, a: Element) -> PeirceReport:
    """Split ``A`` as ``A_{1,1} + A_{0,0} + A°_{1/2}`` and certify the pieces.

    The components are kernels; the operator images
    ``X_a(L_a+R_a-1)A``, ``(X_a-1)(L_a+R_a-1)A`` and ``(L_a+R_a)(L_a+R_a-2)A``
    are computed separately and compared to them for ``X`` in ``{L, R}``.
    The direct-sum flag is a computed fact, not an assumption: it is False
    for algebras where the decomposition does not hold.
    """
    if A.field.characteristic == 3:
        raise BadCharacteristic("the Albert decomposition needs characteristic 0 or p >= 5")
    _require_idempotent(a)
    left, right = eigen_data(a, Side.LEFT), eigen_data(a, Side.RIGHT)
    one_one = left.space(1) & right.space(1)
    zero_zero = left.space(0) & right.space(0)
    half = circle_half(a)
    L, R = left_op(a), right_op(a)
    S = L + R
    T = S.shift(1)
    checks = {}
    for name, X in (("L", L), ("R", R)):
        checks[f"A_11 = {name}(L+R-1)A"] = image(X @ T, A) == one_one
        checks[f"A_00 = ({name}-1)(L+R-1)A"] = image(X.shift(1) @ T, A) == zero_zero
    checks["A°_1/2 = (L+R)(L+R-2)A"] = image(S @ S.shift(2), A) == half
    return PeirceReport(a, left, right, bi_spaces(a, left, right), one_one, zero_zero, half,
                        is_direct_sum(A, [one_one, zero_zero, half]), checks)


def stability_check(A: Algebra, a: Element, report: PeirceReport | None = None) -> bool:
    """``(A_{1,1}+A_{0,0}) A°_{1/2}`` and ``A°_{1/2} (A_{1,1}+A_{0,0})`` lie in ``A°_{1/2}``."""
    report = report or albert_decomposition(A, a)
    plus = (report.one_one + report.zero_zero).elements()
    half = report.circle_half
    for u in plus:
        for v in half.elements():
            if multiply(u, v) not in half or multiply(v, u) not in half:
                return False
    return True


def semisimple_degree(a: Element, side: Side | str) -> tuple[int, list] | None:
    """Smallest ``t`` with ``prod (X_a - lam_i) = 0`` over distinct field eigenvalues.

    None when ``X_a`` is not diagonalizable over the ground field.
    """
    data = eigen_data(a, side)
    if data.residual.degree > 0:
        return None
    X = operator(a, data.side)
    prod = Matrix.identity(X.field, X.rows)
    for lam in data.eigenvalues:
        prod = prod @ X.shift(lam)
    if not prod.is_zero():
        return None
    return len(data.eigenvalues), data.eigenvalues


@dataclass
class VandermondeSplit:
    eigenvalues: list
    components: list
    sums_to_y: bool
    in_eigenspaces: bool
    span_identity: bool

    @property
    def certified(self) -> bool:
        return self.sums_to_y and self.in_eigenspaces and self.span_identity


def vandermonde_components(a: Element, y: Element, side: Side | str) -> VandermondeSplit:
    """Split ``y`` into eigencomponents with Lagrange projectors in ``X_a``.

    Also certifies that ``span{X_a^i y : i < t}`` equals the span of the
    nonzero components.
    """
    side = Side(side)
    sd = semisimple_degree(a, side)
    if sd is None:
        raise NotSemisimple(f"{a} is not {side.value} semisimple over the ground field")
    t, lams = sd
    A = a.algebra
    X = operator(a, side)
    comps = []
    for j, lj in enumerate(lams):
        P = Matrix.identity(A.field, A.dim)
        for k, lk in enumerate(lams):
            if k != j:
                P = (P @ X.shift(lk)) * (A.field.one / (lj - lk))
        comps.append(Element(A, P.apply(y.coords)))
    total = A.zero
    for c in comps:
        total = total + c
    in_spaces = all(X.apply(c.coords) == tuple(lam * v for v in c.coords)
                    for lam, c in zip(lams, comps))
    krylov = [y.coords]
    for _ in range(t - 1):
        krylov.append(X.apply(krylov[-1]))
    span_ok = Subspace(A, krylov) == Subspace(A, [c for c in comps if not c.is_zero()])
    return VandermondeSplit(lams, comps, total == y, in_spaces, span_ok)


@dataclass
class OperatorLemmaReport:
    squares_agree: bool          # L^2 - L = R^2 - R
    commutator_form: bool        # R(R+L-1) = L(R+L-1)
    annihilators: dict           # "(X-1)Y(L+R-1)" -> bool
    flexible_idempotent: bool
    power_associative: bool | None

    @property
    def annihilators_hold(self) -> bool:
        return all(self.annihilators.values())

    @property
    def required_hold(self) -> bool:
        ok = True
        if self.flexible_idempotent:
            ok = ok and self.squares_agree and self.commutator_form
            if self.power_associative:
                ok = ok and self.annihilators_hold
        return ok

    def to_json(self):
        return {"L^2-L = R^2-R": self.squares_agree,
                "R(R+L-1) = L(R+L-1)": self.commutator_form,
                "annihilators": self.annihilators,
                "flexible_idempotent": self.flexible_idempotent,
                "power_associative": self.power_associative,
                "required_hold": self.required_hold}


def operator_lemma_check(A: Algebra, a: Element) -> OperatorLemmaReport:
    """Evaluate the three operator identities of a flexible idempotent as matrices.

    The annihilator identities are only required when ``A`` passes the
    power-associativity criterion and the characteristic is not 3.
    """
    from .identities import is_flexible_idempotent, is_power_associative

    _require_idempotent(a)
    L, R = left_op(a), right_op(a)
    T = (L + R).shift(1)
    squares = (L @ L - L) == (R @ R - R)
    comm = (R @ T) == (L @ T)
    ann = {}
    for xn, X in (("L", L), ("R", R)):
        for yn, Y in (("L", L), ("R", R)):
            ann[f"({xn}-1){yn}(L+R-1)"] = (X.shift(1) @ Y @ T).is_zero()
    pa = None if A.field.characteristic == 3 else is_power_associative(A).holds
    return OperatorLemmaReport(squares, comm, ann, is_flexible_idempotent(A, a).holds, pa)


# -- fusion tables ------------------------------------------------------------------

@dataclass
class FusionTable:
    labels: list
    cells: dict   # (label, label) -> frozenset of labels

    def __getitem__(self, key) -> frozenset:
        return self.cells[key]

    def render(self) -> str:
        def cell(s):
            return "0" if not s else "+".join(l for l in self.labels if l in s)

        width = max([len(l) for l in self.labels] +
                    [len(cell(s)) for s in self.cells.values()]) + 2
        lines = [" " * width + "".join(l.ljust(width) for l in self.labels)]
        for r in self.labels:
            lines.append(r.ljust(width) + "".join(cell(self.cells[(r, c)]).ljust(width)
                                                   for c in self.labels))
        return "\n".join(line.rstrip() for line in lines)

    def diff(self, expected: dict) -> dict:
        """Cells whose computed label set differs from ``expected``.

        ``expected`` maps label pairs to iterables of labels; computed cells
        that are strictly smaller than the expectation still count as
        satisfying a containment, so they are reported separately.
        """
        out = {}
        for key, want in expected.items():
            want = frozenset(want)
            got = self.cells[key]
            if got != want:
                out[key] = {"computed": sorted(got), "expected": sorted(want),
                            "contained": got <= want}
        return out

    def to_json(self):
        return {"labels": self.labels,
                "cells": {f"{r}*{c}": sorted(v) for (r, c), v in self.cells.items()}}


def fusion_table(A: Algebra, components: Sequence[tuple[str, Subspace]]) -> FusionTable:
    """Minimal target labels for every ordered pair of components.

    Products of spanning vectors are expanded in the combined basis; since
    the components form a direct sum the expansion is unique, and the union
    of supports is the least set of labels containing the product.
    """
    labels = [lab for lab, _ in components]
    spaces = [s for _, s in components]
    if len(set(labels)) != len(labels):
        raise ValueError("component labels must be distinct")
    if not is_direct_sum(A, spaces):
        raise ComponentsNotDirectSum("components do not form a direct sum decomposition of A")
    basis, owner = [], []
    for lab, s in components:
        basis.extend(s.basis)
        owner.extend([lab] * s.dim)
    cells = {}
    for l1, s1 in components:
        for l2, s2 in components:
            hit = set()
            for u in s1.elements():
                for v in s2.elements():
                    coeffs = solve_in_span(A.field, basis, multiply(u, v).coords)
                    hit.update(owner[k] for k, c in enumerate(coeffs) if c != 0)
            cells[(l1, l2)] = frozenset(hit)
    return FusionTable(labels, cells)


def flexible_bi_decomposition(a: Element) -> tuple[list[tuple[str, Subspace]], bool]:
    """Components ``A_{lam,lam}`` and ``A_{lam,1-lam}`` over left eigenvalues, and
    whether they exhaust ``A`` as a direct sum."""
    A = a.algebra
    left = eigen_data(a, Side.LEFT)
    F = A.field
    comps = []
    seen = set()
    for lam in left.eigenvalues:
        for delta in (lam, 1 - lam):
            if (lam, delta) in seen:
                continue
            seen.add((lam, delta))
            s = bi_eigenspace(a, lam, delta)
            if s:
                comps.append((f"A_{{{F.format(lam)},{F.format(delta)}}}", s))
    return comps, is_direct_sum(A, [s for _, s in comps])
