"""Parameterized constructors for the algebras used as golden inputs.

Each constructor returns a :class:`Fixture`: the algebra plus its
distinguished elements by name.  Parameters are validated before any table
is built.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Callable

from .algebra import Algebra, Element, is_idempotent, left_op, right_op
from .errors import BadParameters
from .field import QQ, Field
from .linalg import kernel


@dataclass
class Fixture:
    name: str
    algebra: Algebra
    elements: dict[str, Element]
    params: dict = dc_field(default_factory=dict)

    def __getitem__(self, key: str) -> Element:
        return self.elements[key]


def _require(cond: bool, message: str):
    if not cond:
        raise BadParameters(message)


def _not01(F: Field, name: str, value):
    _require(value != 0, f"{name} != 0 violated")
    _require(value != 1, f"{name} != 1 violated")


def _table(F: Field, names: list[str], rules: dict[tuple[str, str], dict[str, object]]):
    index = {s: i for i, s in enumerate(names)}
    products = {}
    for (u, v), combo in rules.items():
        vec = [F.zero] * len(names)
        for s, c in combo.items():
            vec[index[s]] += F(c)
        products[(index[u], index[v])] = vec
    return Algebra(F, names, products)


def _elements(A: Algebra) -> dict[str, Element]:
    return {s: A.basis(s) for s in A.basis_names}


def ex31i(F: Field = QQ, lam=2, delta=3) -> Fixture:
    """Three-dimensional algebra with a two-sided axis that is not of Jordan type."""
    lam, delta = F(lam), F(delta)
    _not01(F, "lambda", lam)
    _not01(F, "delta", delta)
    A = _table(F, ["a", "b", "c"], {
        ("a", "a"): {"a": 1},
        ("b", "b"): {"a": 1},
        ("c", "c"): {"a": 1},
        ("a", "b"): {"b": lam},
        ("c", "a"): {"c": delta},
    })
    return Fixture("Ex31i", A, _elements(A), {"lambda": lam, "delta": delta})


def ex31ii(F: Field = QQ, lam=2) -> Fixture:
    """Five-dimensional non-flexible example; ``b = a+x+y+y'+z`` is idempotent."""
    lam = F(lam)
    delta = 1 - lam
    _not01(F, "lambda", lam)
    _require(lam != delta, "lambda != delta violated (lambda = 1/2)")
    A = _table(F, ["a", "x", "y", "y'", "z"], {
        ("a", "a"): {"a": 1},
        ("a", "y"): {"y": lam},
        ("y'", "a"): {"y'": delta},
        ("a", "z"): {"z": lam},
        ("z", "a"): {"z": delta},
        ("y", "y"): {"x": -1},
        ("y", "z"): {"y'": lam},
        ("y'", "y'"): {"x": 1},
        ("y'", "z"): {"y": delta},
    })
    el = _elements(A)
    el["b"] = el["a"] + el["x"] + el["y"] + el["y'"] + el["z"]
    return Fixture("Ex31ii", A, el, {"lambda": lam, "delta": delta})


def exflex1(F: Field = QQ, lam=2) -> Fixture:
    """Two-dimensional flexible algebra spanned by two axes of the same type."""
    lam = F(lam)
    delta = 1 - lam
    _not01(F, "lambda", lam)
    _require(lam != delta, "lambda != delta violated (lambda = 1/2)")
    A = _table(F, ["a", "b"], {
        ("a", "a"): {"a": 1},
        ("b", "b"): {"b": 1},
        ("a", "b"): {"a": delta, "b": lam},
        ("b", "a"): {"a": lam, "b": delta},
    })
    return Fixture("ExFlex1", A, _elements(A), {"lambda": lam, "delta": delta})


def exflex2(F: Field = QQ, lam=2) -> Fixture:
    """Three-dimensional flexible algebra with axes of opposite types."""
    lam = F(lam)
    delta = 1 - lam
    _not01(F, "lambda", lam)
    _require(lam != delta, "lambda != delta violated (lambda = 1/2)")
    A = _table(F, ["a", "b", "x"], {
        ("a", "a"): {"a": 1},
        ("b", "b"): {"b": 1},
        ("a", "b"): {"x": lam},
        ("a", "x"): {"x": lam},
        ("x", "b"): {"x": lam},
        ("b", "a"): {"x": delta},
        ("x", "a"): {"x": delta},
        ("b", "x"): {"x": delta},
    })
    return Fixture("ExFlex2", A, _elements(A), {"lambda": lam, "delta": delta})


def matrix_algebra(F: Field = QQ, size: int = 2) -> Fixture:
    """Full matrix algebra on the matrix units ``e_ij`` (named ``e11``, ``e12``, ...)."""
    _require(isinstance(size, int) and 1 <= size <= 9, "1 <= size <= 9 violated")
    names = [f"e{i + 1}{j + 1}" for i in range(size) for j in range(size)]
    rules = {}
    for i in range(size):
        for j in range(size):
            for k in range(size):
                rules[(f"e{i + 1}{j + 1}", f"e{j + 1}{k + 1}")] = {f"e{i + 1}{k + 1}": 1}
    A = _table(F, names, rules)
    el = _elements(A)
    el["1"] = A.element([1 if i == j else 0 for i in range(size) for j in range(size)])
    return Fixture("MatrixAlgebra", A, el, {"size": size})


def remark_b(F: Field = QQ, gamma=0) -> Fixture:
    """Two-dimensional ``B = Fa + Fv`` with ``av = v, va = gamma a, v^2 = gamma v``."""
    gamma = F(gamma)
    A = _table(F, ["a", "v"], {
        ("a", "a"): {"a": 1},
        ("a", "v"): {"v": 1},
        ("v", "a"): {"a": gamma},
        ("v", "v"): {"v": gamma},
    })
    return Fixture("RemarkB", A, _elements(A), {"gamma": gamma})


def orthogonal_pair(F: Field = QQ, lam=2) -> Fixture:
    """Direct sum of two copies of the two-axis flexible algebra.

    ``a`` and ``b`` come from different blocks, so they are orthogonal,
    non-central axes of a flexible algebra.
    """
    lam = F(lam)
    delta = 1 - lam
    _not01(F, "lambda", lam)
    _require(lam != delta, "lambda != delta violated (lambda = 1/2)")
    A = _table(F, ["a", "c", "b", "d"], {
        ("a", "a"): {"a": 1}, ("c", "c"): {"c": 1},
        ("a", "c"): {"a": delta, "c": lam}, ("c", "a"): {"a": lam, "c": delta},
        ("b", "b"): {"b": 1}, ("d", "d"): {"d": 1},
        ("b", "d"): {"b": delta, "d": lam}, ("d", "b"): {"b": lam, "d": delta},
    })
    return Fixture("OrthogonalPair", A, _elements(A), {"lambda": lam, "delta": delta})


@dataclass(frozen=True)
class FixtureInfo:
    name: str
    build: Callable[..., Fixture]
    params: tuple[str, ...]
    constraints: str


FIXTURES: dict[str, FixtureInfo] = {
    info.name: info for info in [
        FixtureInfo("Ex31i", ex31i, ("lam", "delta"), "lambda, delta not in {0, 1}"),
        FixtureInfo("Ex31ii", ex31ii, ("lam",),
                    "delta = 1 - lambda; lambda, delta not in {0, 1}; lambda != delta"),
        FixtureInfo("ExFlex1", exflex1, ("lam",),
                    "delta = 1 - lambda; lambda, delta not in {0, 1}; lambda != delta"),
        FixtureInfo("ExFlex2", exflex2, ("lam",),
                    "delta = 1 - lambda; lambda, delta not in {0, 1}; lambda != delta"),
        FixtureInfo("MatrixAlgebra", matrix_algebra, ("size",), "1 <= size <= 9"),
        FixtureInfo("RemarkB", remark_b, ("gamma",), "any gamma"),
        FixtureInfo("OrthogonalPair", orthogonal_pair, ("lam",),
                    "delta = 1 - lambda; lambda, delta not in {0, 1}; lambda != delta"),
    ]
}


def build(name: str, F: Field = QQ, **params) -> Fixture:
    try:
        info = FIXTURES[name]
    except KeyError:
        raise BadParameters(f"unknown fixture {name!r}; known: {', '.join(FIXTURES)}") from None
    unknown = set(params) - set(info.params)
    if unknown:
        raise BadParameters(f"{name} takes parameters {info.params}, got {sorted(unknown)}")
    return info.build(F, **params)


def remark_algebra_check(gamma, F: Field = QQ) -> dict:
    """Flexibility and the one-sided 1-eigenspaces of ``a`` in :func:`remark_b`."""
    from .identities import is_flexible
    from .algebra import Subspace

    fx = remark_b(F, gamma)
    A, a, v = fx.algebra, fx["a"], fx["v"]
    gamma = fx.params["gamma"]
    flexible = is_flexible(A).holds
    left_one = Subspace(A, kernel(left_op(a).shift(1)))
    right_one = Subspace(A, kernel(right_op(a).shift(1)))
    # the (1,0)-eigenvector of a: v itself when gamma = 0, else a - v/gamma
    d = v if gamma == 0 else a - v / gamma
    d_is_10 = (a * d == d) and (d * a).is_zero() and not d.is_zero()
    return {
        "gamma": gamma,
        "idempotent": is_idempotent(a),
        "flexible": flexible,
        "left_one_is_B": left_one == Subspace.whole(A),
        "right_one_is_Fa": right_one == Subspace(A, [a]),
        "one_zero_eigenvector": d,
        "one_zero_eigenvector_ok": d_is_10,
        "holds": flexible and left_one == Subspace.whole(A) and right_one == Subspace(A, [a])
        and d_is_10,
    }
