"""Left, right and two-sided axes: detection, gradings and decompositions.

An axis is an idempotent ``a`` whose multiplication operator has spectrum
inside ``{1, 0, lam}`` with ``A_1 = Fa``, and whose eigenspaces multiply
according to a Z2 grading (plus part ``A_0 + A_1``, minus part ``A_lam``).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from enum import Enum

from .algebra import (Algebra, Element, Subspace, center, enumerate_idempotents, is_idempotent,
                      left_op, multiply, right_op)
from .algebra import DEFAULT_ENUMERATION_CAP
from .errors import NotAnAxis, NotEigenvector, NotIdempotent, ZeroElement
from .linalg import Matrix
from .peirce import Side, eigen_data, fusion_table, is_direct_sum, operator


class Reason(str, Enum):
    OK = "ok"
    IRRATIONAL_SPECTRUM = "eigenvalues outside the field"
    NOT_PRIMITIVE_SPECTRUM = "not primitive spectrum"
    NOT_ABSOLUTELY_PRIMITIVE = "not absolutely primitive"
    ANNIHILATOR_FAILS = "cubic annihilator fails"
    GRADING_FAILS = "Z2 fusion rules fail"
    OPERATORS_DONT_COMMUTE = "L_a and R_a do not commute"
    NOT_DIRECT_SUM = "bi-components are not a direct sum"
    Z2XZ2_FAILS = "Z2xZ2 fusion rules fail"


class Grading(str, Enum):
    NONE = "None"
    Z2_LEFT = "Z2Left"
    Z2_RIGHT = "Z2Right"
    Z2XZ2 = "Z2xZ2"
    Z2_JORDAN = "Z2Jordan"


@dataclass
class OneSidedAxis:
    side: Side
    ok: bool
    type: object = None          # lam, or None when degenerate / failed
    degenerate: bool = False     # A_lam = 0; any lam outside {0,1} fits
    reason: Reason = Reason.OK
    spaces: dict = dc_field(default_factory=dict)   # "1", "0", "lam" -> Subspace


def _placeholder(F):
    # a scalar outside {0, 1} in every field of characteristic != 2
    return F(-1)


def _graded_ok(pairs_plus, pairs_minus, plus: Subspace, minus: Subspace) -> bool:
    for u in pairs_plus:
        for v in pairs_plus:
            if multiply(u, v) not in plus:
                return False
        for v in pairs_minus:
            if multiply(u, v) not in minus or multiply(v, u) not in minus:
                return False
    for u in pairs_minus:
        for v in pairs_minus:
            if multiply(u, v) not in plus:
                return False
    return True


def detect_one_sided_axis(A: Algebra, a: Element, side: Side | str) -> OneSidedAxis:
    """Check the three clauses of a one-sided axis for ``X_a``, ``X`` = L or R."""
    side = Side(side)
    if a.is_zero():
        raise ZeroElement("the zero element is not an axis")
    if not is_idempotent(a):
        raise NotIdempotent(f"{a} is not idempotent")
    data = eigen_data(a, side)
    if data.residual.degree > 0:
        return OneSidedAxis(side, False, reason=Reason.IRRATIONAL_SPECTRUM)
    others = [v for v in data.eigenvalues if v != 0 and v != 1]
    if len(others) > 1:
        return OneSidedAxis(side, False, reason=Reason.NOT_PRIMITIVE_SPECTRUM)
    one = data.space(1)
    zero = data.space(0)
    if one != Subspace(A, [a]):
        return OneSidedAxis(side, False, reason=Reason.NOT_ABSOLUTELY_PRIMITIVE,
                            spaces={"1": one, "0": zero})
    X = operator(a, side)
    degenerate = not others
    lam = others[0] if others else None
    # with no third eigenvalue the cubic vanishes for some lam iff (X-1)X does
    core = X.shift(1) @ X
    annihilator = core if degenerate else X.shift(lam) @ core
    if not annihilator.is_zero():
        return OneSidedAxis(side, False, lam, degenerate, Reason.ANNIHILATOR_FAILS)
    minus = data.space(lam) if lam is not None else Subspace.zero(A)
    plus = zero + one
    spaces = {"1": one, "0": zero, "lam": minus}
    if not _graded_ok(plus.elements(), minus.elements(), plus, minus):
        return OneSidedAxis(side, False, lam, degenerate, Reason.GRADING_FAILS, spaces)
    return OneSidedAxis(side, True, lam, degenerate, Reason.OK, spaces)


def detect_left_axis(A: Algebra, a: Element) -> OneSidedAxis:
    return detect_one_sided_axis(A, a, Side.LEFT)


def detect_right_axis(A: Algebra, a: Element) -> OneSidedAxis:
    return detect_one_sided_axis(A, a, Side.RIGHT)


_SIGNS = {"A_{1,1}": (1, 1), "A_{0,0}": (1, 1), "A_{0,delta}": (1, -1),
          "A_{lam,0}": (-1, 1), "A_{lam,delta}": (-1, -1)}


@dataclass
class AxisReport:
    element: Element
    left: OneSidedAxis
    right: OneSidedAxis
    commute: bool
    two_sided: bool
    jordan: bool
    grading_verified: Grading
    components: dict = dc_field(default_factory=dict)
    vanishing: dict = dc_field(default_factory=dict)
    reasons: list = dc_field(default_factory=list)

    @property
    def left_type(self):
        return self.left.type if self.left.ok else None

    @property
    def right_type(self):
        return self.right.type if self.right.ok else None

    @property
    def degenerate(self) -> bool:
        return self.left.degenerate or self.right.degenerate

    @property
    def lam(self):
        """Left type, or a stand-in outside {0,1} when the minus part is zero."""
        if self.left.type is not None:
            return self.left.type
        return _placeholder(self.element.algebra.field)

    @property
    def delta(self):
        if self.right.type is not None:
            return self.right.type
        return _placeholder(self.element.algebra.field)

    def component(self, label: str) -> Subspace:
        return self.components.get(label) or Subspace.zero(self.element.algebra)

    def require(self):
        if not self.two_sided:
            raise NotAnAxis(f"{self.element} is not an axis: "
                            + ", ".join(r.value for r in self.reasons))
        return self

    def to_json(self):
        F = self.element.algebra.field

        def fmt(v):
            return None if v is None else F.format(v)

        return {
            "element": self.element.to_json(),
            "left_type": fmt(self.left_type),
            "right_type": fmt(self.right_type),
            "two_sided": self.two_sided,
            "jordan": self.jordan,
            "degenerate": self.degenerate,
            "grading_verified": self.grading_verified.value,
            "components": {k: v.to_json() for k, v in self.components.items()},
            "reasons": [r.value for r in self.reasons],
        }


def detect_axis(A: Algebra, a: Element) -> AxisReport:
    """Full two-sided axis analysis of a nonzero idempotent."""
    left = detect_left_axis(A, a)
    right = detect_right_axis(A, a)
    L, R = left_op(a), right_op(a)
    commute = (L @ R) == (R @ L)
    reasons = []
    for r in (left.reason, right.reason):
        if r is not Reason.OK and r not in reasons:
            reasons.append(r)
    if not commute:
        reasons.append(Reason.OPERATORS_DONT_COMMUTE)
    base = AxisReport(a, left, right, commute, False, False, Grading.NONE, reasons=reasons)
    if not (left.ok and right.ok and commute):
        if left.ok and not right.ok:
            base.grading_verified = Grading.Z2_LEFT
        elif right.ok and not left.ok:
            base.grading_verified = Grading.Z2_RIGHT
        return base

    def bi(l_key, r_key):
        return left.spaces[l_key] & right.spaces[r_key]

    comps = {
        "A_{1,1}": bi("1", "1"),
        "A_{0,0}": bi("0", "0"),
        "A_{0,delta}": bi("0", "lam"),
        "A_{lam,0}": bi("lam", "0"),
        "A_{lam,delta}": bi("lam", "lam"),
    }
    base.components = comps
    base.vanishing = {
        "A_{0,1}": not bi("0", "1"), "A_{lam,1}": not bi("lam", "1"),
        "A_{1,0}": not bi("1", "0"), "A_{1,delta}": not bi("1", "lam"),
    }
    if not is_direct_sum(A, list(comps.values())):
        reasons.append(Reason.NOT_DIRECT_SUM)
        return base
    table = fusion_table(A, list(comps.items()))
    for (l1, l2), targets in table.cells.items():
        s1, s2 = _SIGNS[l1], _SIGNS[l2]
        want = (s1[0] * s2[0], s1[1] * s2[1])
        if any(_SIGNS[t] != want for t in targets):
            reasons.append(Reason.Z2XZ2_FAILS)
            return base
    base.two_sided = True
    base.jordan = not comps["A_{lam,0}"] and not comps["A_{0,delta}"]
    base.grading_verified = Grading.Z2_JORDAN if base.jordan else Grading.Z2XZ2
    return base


def enumerate_axes(A: Algebra, cap: int = DEFAULT_ENUMERATION_CAP,
                   include_failures: bool = False) -> list[AxisReport]:
    """Axis reports for the nonzero idempotents of a finite-field algebra."""
    out = []
    for e in enumerate_idempotents(A, cap):
        if e.is_zero():
            continue
        rep = detect_axis(A, e)
        if rep.two_sided or include_failures:
            out.append(rep)
    return out


# -- decompositions ---------------------------------------------------------------

def projectors(X: Matrix, lam) -> dict:
    """Projections onto the 1-, 0- and lam-eigenspaces as polynomials in X."""
    F = X.field
    one = F.one
    return {
        "1": (X @ X.shift(lam)) * (one / (1 - lam)),
        "0": (X.shift(lam) @ X.shift(1)) * (one / lam),
        "lam": (X @ X.shift(1)) * (one / (lam * (lam - 1))),
    }


def partition_of_unity(report: AxisReport, side: Side | str = Side.LEFT) -> bool:
    """The three projectors sum to the identity."""
    side = Side(side)
    a = report.element
    lam = report.lam if side is Side.LEFT else report.delta
    P = projectors(operator(a, side), lam)
    total = P["1"] + P["0"] + P["lam"]
    return total == Matrix.identity(total.field, total.rows)


@dataclass
class Decomposition:
    x: Element
    alpha: object
    parts: dict                 # (gamma, rho) label -> Element
    checks: dict = dc_field(default_factory=dict)

    @property
    def certified(self) -> bool:
        return all(self.checks.values())

    def reassemble(self) -> Element:
        total = self.x.algebra.zero
        for v in self.parts.values():
            total = total + v
        return total

    def to_json(self):
        F = self.x.algebra.field
        return {"x": self.x.to_json(), "alpha": F.format(self.alpha),
                "parts": {k: v.to_json() for k, v in self.parts.items()},
                "checks": self.checks}


def decompose(report: AxisReport, x: Element) -> Decomposition:
    """``x = alpha a + x_{0,0} + x_{0,delta} + x_{lam,0} + x_{lam,delta}``.

    Left projectors in ``L_a`` split ``x``; right projectors in ``R_a``
    refine each piece.  The result is checked against eigenspace membership
    and against the closed forms ``x_lam = (ax - alpha a)/lam`` and
    ``x_{lam,delta} = ((ax)a - alpha a)/(lam delta)``.
    """
    report.require()
    a = report.element
    A = a.algebra
    F = A.field
    lam, delta = report.lam, report.delta
    L, R = left_op(a), right_op(a)
    PL = projectors(L, lam)
    PR = projectors(R, delta)
    left_parts = {k: Element(A, P.apply(x.coords)) for k, P in PL.items()}
    fine = {}
    for lk, xl in left_parts.items():
        for rk, P in PR.items():
            fine[(lk, rk)] = Element(A, P.apply(xl.coords))
    coeffs = Subspace(A, [a]).coordinates(fine[("1", "1")])
    alpha = None
    if coeffs is not None:
        # stored basis of span{a} is a scaled copy of a
        basis_vec = Subspace(A, [a]).basis[0]
        k = next(i for i, c in enumerate(a.coords) if c != 0)
        alpha = coeffs[0] * basis_vec[k] / a.coords[k]
    labels = {("0", "0"): "x_{0,0}", ("0", "lam"): "x_{0,delta}",
              ("lam", "0"): "x_{lam,0}", ("lam", "lam"): "x_{lam,delta}"}
    parts = {"alpha*a": (alpha if alpha is not None else F.zero) * a}
    parts.update({name: fine[key] for key, name in labels.items()})

    checks = {}
    checks["x_{1,1} in Fa"] = alpha is not None
    checks["vanishing mixed parts"] = all(fine[k].is_zero() for k in
                                          [("1", "0"), ("1", "lam"), ("0", "1"), ("lam", "1")])
    left_ev = {"1": F.one, "0": F.zero, "lam": lam}
    right_ev = {"1": F.one, "0": F.zero, "lam": delta}
    checks["parts in bi-eigenspaces"] = all(
        a * v == left_ev[lk] * v and v * a == right_ev[rk] * v
        for (lk, rk), v in fine.items())
    dec_total = A.zero
    for v in parts.values():
        dec_total = dec_total + v
    checks["round trip"] = dec_total == x
    if alpha is not None:
        x_lam = fine[("lam", "0")] + fine[("lam", "lam")]
        ax = a * x
        checks["x_lam closed form"] = (ax - alpha * a) / lam == x_lam
        checks["x_{lam,delta} closed form"] = ((ax * a) - alpha * a) / (lam * delta) == \
            fine[("lam", "lam")]
        checks["a(ax) = alpha(1-lam)a + lam ax"] = a * ax == alpha * (1 - lam) * a + lam * ax
    return Decomposition(x, alpha, parts, checks)


def v_a_span_check(report: AxisReport, x: Element) -> bool:
    """``span{a, x, ax, xa, (ax)a}`` equals ``span{a}`` plus the nonzero parts of x."""
    report.require()
    a = report.element
    A = a.algebra
    lhs = Subspace(A, [a, x, a * x, x * a, (a * x) * a])
    dec = decompose(report, x)
    rhs = Subspace(A, [a] + [v for k, v in dec.parts.items() if k != "alpha*a"])
    return lhs == rhs


@dataclass
class CenterTest:
    in_center: bool
    jordan: bool
    lam_delta_zero: bool
    lam_equals_delta: bool
    criterion_i: bool      # Jordan type with A_{lam,delta} = 0
    criterion_ii: bool | None   # for Jordan axes: A_{lam,delta} = 0 or lam = delta

    @property
    def criterion_i_consistent(self) -> bool:
        return self.in_center == self.criterion_i

    @property
    def criterion_ii_consistent(self) -> bool | None:
        return None if self.criterion_ii is None else self.in_center == self.criterion_ii

    @property
    def consistent(self) -> bool:
        return self.criterion_i_consistent and self.criterion_ii_consistent is not False

    def to_json(self):
        return {"in_center": self.in_center, "jordan": self.jordan,
                "lam_delta_zero": self.lam_delta_zero, "lam_equals_delta": self.lam_equals_delta,
                "criterion_i": self.criterion_i, "criterion_ii": self.criterion_ii,
                "criterion_i_consistent": self.criterion_i_consistent,
                "criterion_ii_consistent": self.criterion_ii_consistent}


def axis_center_test(A: Algebra, report: AxisReport) -> CenterTest:
    """Membership of the axis in C(A) against the center criteria for axes.

    Criterion (i): ``a`` central iff Jordan type with ``A_{lam,delta} = 0``.
    Criterion (ii), for Jordan axes: central iff ``A_{lam,delta} = 0`` or
    ``lam = delta``.  Both sides are computed independently.
    """
    report.require()
    a = report.element
    in_center = a in center(A)
    ld_zero = not report.component("A_{lam,delta}")
    lam_eq = report.left.type == report.right.type
    crit_i = report.jordan and ld_zero
    crit_ii = (ld_zero or lam_eq) if report.jordan else None
    return CenterTest(in_center, report.jordan, ld_zero, lam_eq, crit_i, crit_ii)


def eigen_idempotent_test(A: Algebra, report: AxisReport, b: Element) -> bool:
    """For an idempotent ``b != a`` that is a left eigenvector of ``a``: ``ab = 0``.

    Returns whether ``ab = 0``; for a genuine left axis this cannot fail, so
    False means the axis report is wrong.
    """
    a = report.element
    if not report.left.ok:
        raise NotAnAxis(f"{a} is not a left axis")
    if not is_idempotent(b):
        raise NotIdempotent(f"{b} is not idempotent")
    if b == a:
        raise ValueError("b must differ from a")
    ab = a * b
    if not Subspace(A, [b]).contains_subspace(Subspace(A, [ab])):
        raise NotEigenvector(f"{b} is not a left eigenvector of {a}")
    return ab.is_zero()


def double_product_check(report: AxisReport) -> bool:
    """``a(ay) = alpha_y (1-lam) a + lam ay`` for every basis vector y."""
    report.require()
    a = report.element
    lam = report.lam
    for y in a.algebra.basis_elements():
        dec = decompose(report, y)
        if a * (a * y) != dec.alpha * (1 - lam) * a + lam * (a * y):
            return False
    return True


def grading_soundness(report: AxisReport) -> bool:
    """All 25 ordered component products land in the component dictated by signs."""
    report.require()
    A = report.element.algebra
    table = fusion_table(A, list(report.components.items()))
    for (l1, l2), targets in table.cells.items():
        s1, s2 = _SIGNS[l1], _SIGNS[l2]
        want = (s1[0] * s2[0], s1[1] * s2[1])
        if any(_SIGNS[t] != want for t in targets):
            return False
    return True
