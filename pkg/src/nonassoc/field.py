"""Exact scalar fields: the rationals and prime fields GF(p), p odd.

Rational scalars are plain :class:`fractions.Fraction` values.  Residues mod
``p`` are :class:`Mod` instances, which support the same arithmetic
operators, so the linear algebra above this layer is written once against
``+ - * /`` and ``==``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import total_ordering
from itertools import product
from typing import Iterator, Union

from .errors import FieldError

_SCALAR_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@total_ordering
class Mod:
    """Residue class mod a prime, kept in canonical form ``0 <= value < p``."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _lift(self, other):
        if isinstance(other, Mod):
            if other.p != self.p:
                raise FieldError(f"cannot mix GF({self.p}) and GF({other.p})")
            return other.value
        if isinstance(other, int):
            return other % self.p
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p) % self.p
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return Mod(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return Mod(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return Mod(o - self.value, self.p)

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return Mod(self.value * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        if o == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.p})")
        return Mod(self.value * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        if self.value == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.p})")
        return Mod(o * pow(self.value, -1, self.p), self.p)

    def __neg__(self):
        return Mod(-self.value, self.p)

    def __pos__(self):
        return self

    def __pow__(self, k: int):
        if k < 0:
            return Mod(pow(self.value, -1, self.p), self.p) ** (-k)
        return Mod(pow(self.value, k, self.p), self.p)

    def __eq__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return False
        return self.value == o

    def __lt__(self, other):
        # ordering by canonical representative; used only for deterministic sorting
        return self.value < self._lift(other)

    def __hash__(self):
        # agrees with the canonical integer representative, as __eq__ does
        return hash(self.value)

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"Mod({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


Scalar = Union[Fraction, Mod]


class Field:
    """Common interface of :class:`Rationals` and :class:`PrimeField`."""

    characteristic: int

    @property
    def is_finite(self) -> bool:
        return self.characteristic != 0

    @property
    def zero(self) -> Scalar:
        return self(0)

    @property
    def one(self) -> Scalar:
        return self(1)

    def __call__(self, x) -> Scalar:
        raise NotImplementedError

    def parse(self, text: str) -> Scalar:
        """Read ``"3"``, ``"-7/2"`` and the like into the field."""
        m = _SCALAR_RE.match(str(text))
        if not m:
            raise ValueError(f"not a scalar literal: {text!r}")
        num = int(m.group(1))
        den = int(m.group(2)) if m.group(2) else 1
        if den == 0:
            raise ValueError(f"zero denominator in {text!r}")
        return self(Fraction(num, den))

    def format(self, x: Scalar) -> str:
        return str(self(x))

    def vector(self, values) -> tuple:
        return tuple(self(v) for v in values)


class Rationals(Field):
    characteristic = 0

    def __call__(self, x) -> Fraction:
        if isinstance(x, Mod):
            raise FieldError("cannot coerce a residue into Q")
        if isinstance(x, str):
            return self.parse(x)
        return Fraction(x)

    def to_json(self):
        return "Q"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"


class PrimeField(Field):
    def __init__(self, p: int):
        if not isinstance(p, int) or isinstance(p, bool) or not _is_prime(p):
            raise FieldError(f"modulus must be a prime, got {p!r}")
        if p == 2:
            raise FieldError("characteristic 2 is not supported")
        self.p = p
        self.characteristic = p

    def __call__(self, x) -> Mod:
        if isinstance(x, Mod):
            if x.p != self.p:
                raise FieldError(f"cannot coerce GF({x.p}) element into GF({self.p})")
            return x
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"{x} has no image in GF({self.p})")
            return Mod(x.numerator * pow(x.denominator, -1, self.p), self.p)
        return Mod(int(x), self.p)

    def elements(self) -> Iterator[Mod]:
        for v in range(self.p):
            yield Mod(v, self.p)

    def vectors(self, n: int) -> Iterator[tuple]:
        """All of GF(p)^n in lexicographic order of canonical residues."""
        for coords in product(range(self.p), repeat=n):
            yield tuple(Mod(c, self.p) for c in coords)

    def to_json(self):
        return {"prime": self.p}

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = Rationals()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_json(spec) -> Field:
    if spec == "Q":
        return QQ
    if isinstance(spec, dict) and set(spec) == {"prime"}:
        return PrimeField(spec["prime"])
    raise FieldError(f'field must be "Q" or {{"prime": p}}, got {spec!r}')
