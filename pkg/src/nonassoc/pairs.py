"""Subalgebras generated by two axes.

Spanning sets for ``<a, b>``, the structure identities satisfied by a pair
of non-central axes in a flexible algebra, and the classifier that places
such a pair into one of three outcomes: orthogonal, or isomorphic to one of
the two small flexible models, with an explicit checked isomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from enum import Enum

from .algebra import Algebra, Element, Subspace, center, is_idempotent, subalgebra_closure
from .axes import AxisReport, decompose, detect_axis
from .errors import (CentralAxis, NotAnAxis, NotCommuting, NotFlexible, PreconditionFailed,
                     SameAxis)
from .fixtures import exflex1, exflex2
from .identities import is_flexible
from .linalg import Matrix, rank


def _axis(A: Algebra, e: Element | AxisReport) -> AxisReport:
    return e if isinstance(e, AxisReport) else detect_axis(A, e)


def _soft_axis(A: Algebra, e: Element) -> AxisReport | None:
    if e.is_zero() or not is_idempotent(e):
        return None
    return detect_axis(A, e)


# -- spanning sets -------------------------------------------------------------------

@dataclass
class SpanClosureReport:
    a_is_axis: bool
    b_is_axis: bool
    v: Subspace                   # span{a, b, ab, ba}
    v_prime: Subspace             # v plus aba, bab in both association orders
    orders_agree: dict
    closures: dict                # "aV'", "bV'", "V'a", "V'b" -> bool
    square_in_v: bool             # (ab)(ab) - a(b(ab)) in V

    @property
    def dim(self) -> int:
        return self.v_prime.dim

    @property
    def holds(self) -> bool:
        return all(self.closures.values()) and self.square_in_v

    def to_json(self):
        return {"a_is_axis": self.a_is_axis, "b_is_axis": self.b_is_axis,
                "dim_V": self.v.dim, "dim_V_prime": self.dim,
                "V_prime": self.v_prime.to_json(), "orders_agree": self.orders_agree,
                "closures": self.closures, "square_in_V": self.square_in_v,
                "holds": self.holds}


def pair_span_closure_check(A: Algebra, a: Element, b: Element,
                            strict: bool = True) -> SpanClosureReport:
    """``V' = span{a, b, ab, ba, aba, bab}`` and its closure under ``L_a, L_b, R_a, R_b``.

    Both parenthesizations of ``aba`` and ``bab`` are adjoined.  With
    ``strict`` the two generators must be axes; otherwise their axis status
    is only reported and the spans are computed regardless.
    """
    ra, rb = _soft_axis(A, a), _soft_axis(A, b)
    a_ok = bool(ra and ra.two_sided)
    b_ok = bool(rb and rb.two_sided)
    if strict and not (a_ok and b_ok):
        bad = a if not a_ok else b
        raise NotAnAxis(f"{bad} is not an axis")
    ab, ba = a * b, b * a
    aba = ((ab * a), (a * ba))
    bab = ((ba * b), (b * ab))
    V = Subspace(A, [a, b, ab, ba])
    Vp = Subspace(A, [a, b, ab, ba, *aba, *bab])
    gens = Vp.elements()
    closures = {
        "aV'": all(a * v in Vp for v in gens),
        "bV'": all(b * v in Vp for v in gens),
        "V'a": all(v * a in Vp for v in gens),
        "V'b": all(v * b in Vp for v in gens),
    }
    square = (ab * ab) - a * (b * ab)
    return SpanClosureReport(a_ok, b_ok, V, Vp,
                             {"aba": aba[0] == aba[1], "bab": bab[0] == bab[1]},
                             closures, square in V)


@dataclass
class JordanPairSpan:
    holds: bool
    path: str          # which hypothesis put ba in span{a, b, ab}
    span: Subspace

    def __bool__(self):
        return self.holds

    def to_json(self):
        return {"holds": self.holds, "path": self.path, "span": self.span.to_json()}


def jordan_pair_span(A: Algebra, a: Element, b: Element) -> JordanPairSpan:
    """Whether ``A = span{a, b, ab}`` for an algebra generated by ``a`` and ``b``.

    Requires that one generator be a Jordan-type axis, or directly that
    ``ba`` lie in ``span{a, b, ab}``.
    """
    if subalgebra_closure([a, b]) != Subspace.whole(A):
        raise PreconditionFailed("A is not generated by a and b")
    V = Subspace(A, [a, b, a * b])
    reports = [_soft_axis(A, e) for e in (a, b)]
    if any(r is not None and r.two_sided and r.jordan for r in reports):
        path = "Jordan-type axis"
    elif b * a in V:
        path = "ba in span{a, b, ab}"
    else:
        raise PreconditionFailed("neither generator is a Jordan-type axis and ba is not in "
                                 "span{a, b, ab}")
    closed = all(u * v in V for u in V.elements() for v in V.elements())
    return JordanPairSpan(V.dim == A.dim and closed, path, V)


# -- flexible pairs ------------------------------------------------------------------

def _require_flexible(A: Algebra):
    rep = is_flexible(A)
    if not rep.holds:
        raise NotFlexible(f"algebra is not flexible: {rep.detail}")


def _non_central(rep: AxisReport):
    rep.require()
    if rep.left.type == rep.right.type or rep.element in center(rep.element.algebra):
        raise CentralAxis(f"{rep.element} is a central axis")


@dataclass
class PairIdentities:
    alpha: object
    alpha_a: object
    b_zero: Element               # b_0, the A_0(a) part of b
    b_ld: Element                 # b_{lam,delta}
    lam: object
    delta: object
    checks: dict = dc_field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return all(v for v in self.checks.values() if v is not None)

    def to_json(self):
        F = self.b_zero.algebra.field
        return {"alpha_b": F.format(self.alpha), "alpha_a": F.format(self.alpha_a),
                "lambda": F.format(self.lam), "delta": F.format(self.delta),
                "b_0": self.b_zero.to_json(), "b_lam_delta": self.b_ld.to_json(),
                "checks": self.checks}


def flexible_pair_identities(A: Algebra, a: Element | AxisReport,
                             b: Element | AxisReport) -> PairIdentities:
    """Decompose ``b`` along ``a`` and check the identities tying the pieces together.

    ``b = alpha a + b_0 + b_{lam,delta}``; the checks cover ``(ab)^2 = alpha ab``,
    ``(ba)^2 = alpha ba``, ``b_0^2 = (alpha - alpha^2) a + b_0``,
    ``delta b_ld b_0 = lam b_0 b_ld``, the action of ``b_0`` and ``b`` on ``b_ld``,
    and ``alpha_a = alpha_b`` whenever ``ab != 0``.
    """
    _require_flexible(A)
    ra, rb = _axis(A, a), _axis(A, b)
    _non_central(ra)
    _non_central(rb)
    a, b = ra.element, rb.element
    lam, delta = ra.lam, ra.delta
    one = A.field.one
    dec = decompose(ra, b)
    alpha = dec.alpha
    b0 = dec.parts["x_{0,0}"] + dec.parts["x_{0,delta}"] + dec.parts["x_{lam,0}"]
    bld = dec.parts["x_{lam,delta}"]
    alpha_a = decompose(rb, a).alpha
    ab, ba = a * b, b * a
    checks = {
        "lambda + delta = 1": lam + delta == one,
        "b_0 in A_{0,0}": dec.parts["x_{0,delta}"].is_zero() and dec.parts["x_{lam,0}"].is_zero(),
        "b_ld^2 = 0": (bld * bld).is_zero(),
        "(ab)^2 = alpha ab": ab * ab == alpha * ab,
        "(ba)^2 = alpha ba": ba * ba == alpha * ba,
        "alpha_a = alpha_b": (alpha_a == alpha) if not ab.is_zero() else None,
        "b_0^2 = (alpha - alpha^2) a + b_0": b0 * b0 == (alpha - alpha * alpha) * a + b0,
        "(1 - alpha) b_ld = b_0 b_ld + b_ld b_0": (one - alpha) * bld == b0 * bld + bld * b0,
        "delta b_ld b_0 = lam b_0 b_ld": delta * (bld * b0) == lam * (b0 * bld),
        "b_0 b_ld = delta (1 - alpha) b_ld": b0 * bld == delta * (one - alpha) * bld,
        "b_ld b_0 = lam (1 - alpha) b_ld": bld * b0 == lam * (one - alpha) * bld,
        "b b_ld = (alpha (lam - delta) + delta) b_ld":
            b * bld == (alpha * (lam - delta) + delta) * bld,
        "b_ld b = (alpha (delta - lam) + lam) b_ld":
            bld * b == (alpha * (delta - lam) + lam) * bld,
    }
    return PairIdentities(alpha, alpha_a, b0, bld, lam, delta, checks)


class Outcome(str, Enum):
    ORTHOGONAL = "Orthogonal"
    MODEL1 = "Model1"
    MODEL2 = "Model2"
    NOT_COVERED = "NotCovered"


@dataclass
class PairClassification:
    a: Element
    b: Element
    outcome: Outcome
    lam: object = None
    alpha: object = None
    witness: Matrix | None = None
    model: str | None = None
    checks: dict = dc_field(default_factory=dict)
    reason: str | None = None

    def __str__(self):
        F = self.a.algebra.field
        if self.outcome in (Outcome.MODEL1, Outcome.MODEL2):
            return f"{self.outcome.value}({F.format(self.lam)})"
        if self.outcome is Outcome.NOT_COVERED:
            return f"NotCovered({self.reason})"
        return self.outcome.value

    def to_json(self):
        F = self.a.algebra.field
        return {
            "a": self.a.to_json(), "b": self.b.to_json(),
            "outcome": self.outcome.value,
            "lambda": None if self.lam is None else F.format(self.lam),
            "alpha": None if self.alpha is None else F.format(self.alpha),
            "model": self.model,
            "witness": None if self.witness is None else self.witness.to_json(),
            "checks": self.checks,
            "reason": self.reason,
        }


def is_isomorphism_onto(model: Algebra, A: Algebra, images: list[Element],
                        target: Subspace) -> bool:
    """Linear map sending model basis ``i`` to ``images[i]``: injective, onto
    ``target``, and multiplicative on every ordered pair of model basis vectors."""
    if len(images) != model.dim:
        return False
    if rank(Matrix.from_columns(A.field, [e.coords for e in images], A.dim)) != model.dim:
        return False
    if Subspace(A, images) != target:
        return False

    def phi(u: Element) -> Element:
        out = A.zero
        for c, img in zip(u.coords, images):
            if c != 0:
                out = out + c * img
        return out

    for i, ei in enumerate(model.basis_elements()):
        for j, ej in enumerate(model.basis_elements()):
            if phi(ei * ej) != images[i] * images[j]:
                return False
    return True


def classify_pair(A: Algebra, a: Element | AxisReport,
                  b: Element | AxisReport) -> PairClassification:
    """Orthogonal, Model1(lam), Model2(lam), or NotCovered for two axes of a flexible algebra."""
    _require_flexible(A)
    ra, rb = _axis(A, a), _axis(A, b)
    ra.require()
    rb.require()
    a, b = ra.element, rb.element
    if a == b:
        raise SameAxis("a and b must be distinct axes")
    _non_central(ra)
    _non_central(rb)
    F = A.field
    ab, ba = a * b, b * a
    if ab.is_zero() and ba.is_zero():
        return PairClassification(a, b, Outcome.ORTHOGONAL,
                                  checks={"ab = 0": True, "ba = 0": True})
    lam, delta = ra.lam, ra.delta
    lam_b = rb.lam
    ident = flexible_pair_identities(A, ra, rb)
    alpha = ident.alpha
    generated = subalgebra_closure([a, b])
    aba_agree = ab * a == a * ba
    checks = {"lambda + delta = 1": lam + delta == F.one, "aba association-free": aba_agree}
    if not checks["lambda + delta = 1"]:
        return PairClassification(a, b, Outcome.NOT_COVERED, lam, alpha, checks=checks,
                                  reason="lambda + delta != 1 for a non-central axis")
    if alpha == F.one:
        model = exflex1(F, lam).algebra
        images = [a, b]
        outcome, name = Outcome.MODEL1, "ExFlex1"
        checks["lambda' = lambda"] = lam_b == lam
    elif alpha == F.zero:
        model = exflex2(F, lam).algebra
        images = [a, b, ident.b_ld]
        outcome, name = Outcome.MODEL2, "ExFlex2"
        checks["lambda' = 1 - lambda"] = lam_b == F.one - lam
    else:
        pre = {"flexible": True, "a non-central": True, "b non-central": True,
               "distinct": a != b}
        return PairClassification(a, b, Outcome.NOT_COVERED, lam, alpha, checks={**checks, **pre},
                                  reason=f"alpha = {F.format(alpha)} is neither 0 nor 1 "
                                         "although every precondition holds")
    checks["span equals <a,b>"] = Subspace(A, images) == generated
    checks["isomorphism"] = is_isomorphism_onto(model, A, images, generated)
    witness = Matrix.from_columns(F, [e.coords for e in images], A.dim)
    if not checks["isomorphism"]:
        return PairClassification(a, b, Outcome.NOT_COVERED, lam, alpha, None, name, checks,
                                  reason=f"map from {name} is not an isomorphism")
    return PairClassification(a, b, outcome, lam, alpha, witness, name, checks)


@dataclass
class CommutingPairReport:
    ab_zero: bool
    lam_equals_delta: bool
    b_is_axis: bool
    a_jordan: bool
    a_central: bool

    @property
    def dichotomy(self) -> bool:
        return self.ab_zero or self.lam_equals_delta

    @property
    def jordan_dichotomy(self) -> bool | None:
        return (self.a_central or self.ab_zero) if self.a_jordan else None

    @property
    def holds(self) -> bool:
        return self.dichotomy and self.jordan_dichotomy is not False

    def to_json(self):
        return {"ab_zero": self.ab_zero, "lam_equals_delta": self.lam_equals_delta,
                "b_is_axis": self.b_is_axis, "a_jordan": self.a_jordan,
                "a_central": self.a_central, "dichotomy": self.dichotomy,
                "jordan_dichotomy": self.jordan_dichotomy, "holds": self.holds}


def commuting_pair_test(A: Algebra, a: Element | AxisReport, b: Element) -> CommutingPairReport:
    """For ``ab = ba``: either ``ab = 0`` or ``lam = delta``; and for Jordan ``a``,
    either ``a`` is central or ``ab = 0``.

    The dichotomy is a theorem when ``b`` is also an axis; ``b_is_axis``
    records whether that hypothesis is met.
    """
    ra = _axis(A, a).require()
    a = ra.element
    ab = a * b
    if ab != b * a:
        raise NotCommuting(f"{a} and {b} do not commute")
    rb = _soft_axis(A, b)
    return CommutingPairReport(
        ab_zero=ab.is_zero(),
        lam_equals_delta=ra.left.type == ra.right.type,
        b_is_axis=bool(rb and rb.two_sided),
        a_jordan=ra.jordan,
        a_central=a in center(A),
    )
