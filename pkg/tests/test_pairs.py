import random

import pytest
from hypothesis import given, settings, strategies as st

from nonassoc import GF, QQ, Subspace
from nonassoc import fixtures as fx
from nonassoc.algebra import restrict, subalgebra_closure, symmetrize
from nonassoc.axes import detect_axis, enumerate_axes
from nonassoc.errors import (CentralAxis, NotAnAxis, NotCommuting, NotFlexible,
                             PreconditionFailed, SameAxis)
from nonassoc.identities import is_flexible
from nonassoc.linalg import Matrix
from nonassoc.pairs import (Outcome, classify_pair, commuting_pair_test, flexible_pair_identities,
                            is_isomorphism_onto, jordan_pair_span, pair_span_closure_check)

from conftest import structured_gf5


class TestSpanClosure:
    def test_exflex1(self, exflex1_q):
        rep = pair_span_closure_check(exflex1_q.algebra, exflex1_q["a"], exflex1_q["b"])
        assert rep.dim == 2 and rep.holds
        assert rep.orders_agree == {"aba": True, "bab": True}

    def test_exflex2(self, exflex2_q):
        rep = pair_span_closure_check(exflex2_q.algebra, exflex2_q["a"], exflex2_q["b"])
        assert rep.v_prime == Subspace.whole(exflex2_q.algebra) and rep.holds

    def test_orthogonal(self):
        f = fx.orthogonal_pair(QQ)
        rep = pair_span_closure_check(f.algebra, f["a"], f["b"])
        assert rep.v_prime == Subspace(f.algebra, [f["a"], f["b"]]) and rep.holds

    def test_ex31ii_needs_lenient_mode(self):
        f = fx.ex31ii(QQ, 2)
        with pytest.raises(NotAnAxis):
            pair_span_closure_check(f.algebra, f["a"], f["b"])
        rep = pair_span_closure_check(f.algebra, f["a"], f["b"], strict=False)
        assert rep.a_is_axis and not rep.b_is_axis
        assert rep.dim == 5 and all(rep.closures.values())
        assert not rep.square_in_v

    def test_json(self, exflex1_q):
        doc = pair_span_closure_check(exflex1_q.algebra, exflex1_q["a"], exflex1_q["b"]).to_json()
        assert doc["dim_V_prime"] == 2 and doc["holds"]


class TestJordanPairSpan:
    def test_exflex2(self, exflex2_q):
        res = jordan_pair_span(exflex2_q.algebra, exflex2_q["a"], exflex2_q["b"])
        assert res and res.path == "Jordan-type axis" and res.span.dim == 3

    def test_exflex1(self, exflex1_q):
        assert jordan_pair_span(exflex1_q.algebra, exflex1_q["a"], exflex1_q["b"])

    def test_ex31i_restricted(self):
        f = fx.ex31i(QQ, 2, 3)
        with pytest.raises(PreconditionFailed):
            jordan_pair_span(f.algebra, f["a"], f["b"])
        sub = subalgebra_closure([f["a"], f["b"]])
        assert sub.dim == 2
        B = restrict(sub, ["a", "b"])
        res = jordan_pair_span(B, B["a"], B["b"])
        assert (B["b"] * B["a"]).is_zero()
        assert res.path == "ba in span{a, b, ab}" and res.holds


class TestPairIdentities:
    def test_exflex1(self, exflex1_q):
        a, b = exflex1_q["a"], exflex1_q["b"]
        rep = flexible_pair_identities(exflex1_q.algebra, a, b)
        assert rep.alpha == 1 and rep.b_ld == b - a
        assert (a * b) * (a * b) == a * b
        assert rep.holds

    def test_exflex2(self, exflex2_q):
        a, b, x = exflex2_q["a"], exflex2_q["b"], exflex2_q["x"]
        rep = flexible_pair_identities(exflex2_q.algebra, a, b)
        assert rep.alpha == 0 and rep.b_zero == b - x and rep.b_ld == x
        assert rep.b_zero * rep.b_zero == rep.b_zero
        assert rep.holds

    def test_orthogonal(self):
        f = fx.orthogonal_pair(QQ)
        rep = flexible_pair_identities(f.algebra, f["a"], f["b"])
        assert rep.alpha == 0 and rep.checks["alpha_a = alpha_b"] is None and rep.holds

    def test_preconditions(self):
        f = fx.ex31i(QQ)
        with pytest.raises(NotFlexible):
            flexible_pair_identities(f.algebra, f["a"], f["b"])
        S = symmetrize(fx.exflex1(QQ).algebra)
        with pytest.raises(CentralAxis):
            flexible_pair_identities(S, S["a"], S["b"])


class TestClassify:
    def test_model1(self, exflex1_q):
        A = exflex1_q.algebra
        res = classify_pair(A, exflex1_q["a"], exflex1_q["b"])
        assert res.outcome is Outcome.MODEL1 and str(res) == "Model1(2)"
        assert res.witness == Matrix.identity(QQ, 2)
        assert all(res.checks.values())

    def test_model2(self, exflex2_q):
        res = classify_pair(exflex2_q.algebra, exflex2_q["a"], exflex2_q["b"])
        assert res.outcome is Outcome.MODEL2 and str(res) == "Model2(2)"
        assert res.witness == Matrix.identity(QQ, 3)
        assert res.checks["lambda' = 1 - lambda"] and res.checks["isomorphism"]

    def test_model2_reversed(self, exflex2_q):
        res = classify_pair(exflex2_q.algebra, exflex2_q["b"], exflex2_q["a"])
        assert res.outcome is Outcome.MODEL2 and res.lam == -1

    def test_orthogonal(self):
        f = fx.orthogonal_pair(QQ)
        res = classify_pair(f.algebra, f["a"], f["b"])
        assert res.outcome is Outcome.ORTHOGONAL and res.witness is None
        assert str(res) == "Orthogonal"

    def test_model1_other_pair_gf7(self):
        F = GF(7)
        f = fx.exflex1(F, 2)
        a, b = f["a"], f["b"]
        c = F(3) * a + F(5) * b
        res = classify_pair(f.algebra, a, c)
        assert res.outcome is Outcome.MODEL1

    def test_errors(self, exflex1_q):
        A = exflex1_q.algebra
        with pytest.raises(SameAxis):
            classify_pair(A, exflex1_q["a"], exflex1_q["a"])
        with pytest.raises(NotFlexible):
            f = fx.ex31i(QQ)
            classify_pair(f.algebra, f["a"], f["b"])
        S = symmetrize(A)
        with pytest.raises(CentralAxis):
            classify_pair(S, S["a"], S["b"])

    def test_json(self, exflex2_q):
        doc = classify_pair(exflex2_q.algebra, exflex2_q["a"], exflex2_q["b"]).to_json()
        assert doc["outcome"] == "Model2" and doc["lambda"] == "2" and doc["alpha"] == "0"
        assert doc["witness"] == [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]


class TestIsomorphism:
    def test_identity(self, exflex2_q):
        A = exflex2_q.algebra
        assert is_isomorphism_onto(A, A, A.basis_elements(), Subspace.whole(A))

    def test_swap_is_not_a_homomorphism(self, exflex2_q):
        A = exflex2_q.algebra
        a, b, x = exflex2_q["a"], exflex2_q["b"], exflex2_q["x"]
        assert not is_isomorphism_onto(A, A, [b, a, x], Subspace.whole(A))

    def test_not_injective(self, exflex1_q):
        A = exflex1_q.algebra
        a = exflex1_q["a"]
        assert not is_isomorphism_onto(A, A, [a, a], Subspace.whole(A))


class TestCommutingPair:
    def test_orthogonal(self):
        f = fx.orthogonal_pair(QQ)
        rep = commuting_pair_test(f.algebra, f["a"], f["b"])
        assert rep.ab_zero and rep.holds and rep.b_is_axis

    def test_central_axis_equal_types(self):
        S = symmetrize(fx.exflex2(QQ).algebra)
        a, b = S["a"], S["b"]
        rep = detect_axis(S, a)
        assert rep.two_sided and rep.left_type == rep.right_type == QQ(1) / 2
        assert rep.component("A_{lam,delta}") == Subspace(S, [S["x"]])
        res = commuting_pair_test(S, a, b)
        assert not res.ab_zero and res.lam_equals_delta
        assert res.a_central and res.holds

    def test_not_commuting(self, exflex1_q):
        with pytest.raises(NotCommuting):
            commuting_pair_test(exflex1_q.algebra, exflex1_q["a"], exflex1_q["b"])

    def test_exhaustive_gf5_commutative(self):
        S = symmetrize(fx.exflex2(GF(5), 2).algebra)
        axes = enumerate_axes(S)
        assert axes
        for ra in axes:
            for rb in axes:
                if ra.element != rb.element:
                    assert commuting_pair_test(S, ra, rb.element).holds


def test_flexible_fixture_axes_have_jordan_type():
    for name in ("ExFlex1", "ExFlex2", "OrthogonalPair", "MatrixAlgebra"):
        A = fx.build(name, GF(7)).algebra
        assert is_flexible(A).holds
        for rep in enumerate_axes(A):
            assert rep.jordan
            lam, delta = rep.lam, rep.delta
            if lam == delta:
                continue
            assert lam + delta == 1
            for v in rep.component("A_{lam,delta}").elements():
                assert (v * v).is_zero()


def test_model_fixtures_satisfy_action_identities():
    for name in ("ExFlex1", "ExFlex2"):
        f = fx.build(name, QQ)
        rep = flexible_pair_identities(f.algebra, f["a"], f["b"])
        assert rep.checks["b b_ld = (alpha (lam - delta) + delta) b_ld"]
        assert rep.checks["b_ld b = (alpha (delta - lam) + lam) b_ld"]


# -- properties ------------------------------------------------------------------------

@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32))
def test_classification_on_structured_algebras(seed):
    A = structured_gf5(random.Random(seed))
    if not is_flexible(A).holds:
        return
    axes = [r for r in enumerate_axes(A) if r.left.type != r.right.type]
    for ra in axes[:6]:
        for rb in axes[:6]:
            if ra.element == rb.element:
                continue
            res = classify_pair(A, ra, rb)
            assert res.outcome is not Outcome.NOT_COVERED, res.reason
            if res.outcome is Outcome.ORTHOGONAL:
                assert (ra.element * rb.element).is_zero()
            else:
                span = pair_span_closure_check(A, ra.element, rb.element)
                assert span.v_prime == subalgebra_closure([ra.element, rb.element])
                assert all(res.checks.values())
