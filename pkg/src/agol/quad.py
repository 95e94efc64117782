"""Exact arithmetic in real quadratic fields.

Every weight, eigenvalue and ratio in the package is an element
``(a + b*sqrt(d)) / c`` of some field Q(sqrt(d)).  Rationals are the special
case ``d == 0`` and silently adopt the field of the other operand.

Comparisons are decided with integer arithmetic only::

    >>> x = QuadExt(-1, 1, 2, 5)
    >>> x > Fraction(1, 2)
    True
    >>> x * x + x
    QuadExt(1, 0, 1, 0)
"""

from __future__ import annotations

import enum
import json
import re
from decimal import Decimal, localcontext
from fractions import Fraction
from math import gcd, isqrt
from numbers import Rational

from .errors import DivisionByZero, FieldMismatch

__all__ = [
    "Ordering",
    "QuadExt",
    "cmp",
    "is_quadratic_irrational",
    "squarefree_part",
    "qsqrt",
]


class Ordering(enum.IntEnum):
    LT = -1
    EQ = 0
    GT = 1


def squarefree_part(n: int) -> tuple[int, int]:
    """Split ``n >= 0`` as ``k**2 * m`` with ``m`` squarefree; return ``(k, m)``.

    Trial division; the discriminants met here are small.
    """
    if n < 0:
        raise ValueError("negative radicand")
    if n == 0:
        return 0, 0
    k, m = 1, 1
    rest = n
    p = 2
    while p * p <= rest:
        e = 0
        while rest % p == 0:
            rest //= p
            e += 1
        k *= p ** (e // 2)
        if e % 2:
            m *= p
        p += 1 if p == 2 else 2
    m *= rest
    return k, m


def _sign_of(a: int, b: int, d: int) -> int:
    """Sign of ``a + b*sqrt(d)`` for squarefree ``d >= 2``."""
    if b == 0:
        return (a > 0) - (a < 0)
    if a >= 0 and b > 0:
        return 1
    if a <= 0 and b < 0:
        return -1
    # a and b have opposite signs: compare a**2 against b**2 * d
    lhs, rhs = a * a, b * b * d
    if lhs == rhs:  # impossible for squarefree d >= 2 with b != 0
        return 0
    bigger_a = lhs > rhs
    if a > 0:
        return 1 if bigger_a else -1
    return -1 if bigger_a else 1


class QuadExt:
    """An immutable element ``(a + b*sqrt(d)) / c`` of a real quadratic field."""

    __slots__ = ("_a", "_b", "_c", "_d")

    def __init__(self, a: int = 0, b: int = 0, c: int = 1, d: int = 0):
        for v in (a, b, c, d):
            if not isinstance(v, int) or isinstance(v, bool):
                raise TypeError(f"QuadExt fields must be int, got {type(v).__name__}")
        if c == 0:
            raise DivisionByZero("zero denominator")
        if d < 0:
            raise ValueError("only real quadratic fields are supported")
        if d > 1:
            k, d = squarefree_part(d)
            b *= k
        if d == 1:
            a, b, d = a + b, 0, 0
        if b == 0 or d == 0:
            b, d = 0, 0
        if c < 0:
            a, b, c = -a, -b, -c
        g = gcd(gcd(a, b), c)
        if g > 1:
            a, b, c = a // g, b // g, c // g
        if a == 0 and b == 0:
            c = 1
        self._a, self._b, self._c, self._d = a, b, c, d

    # -- accessors -----------------------------------------------------
    a = property(lambda self: self._a)
    b = property(lambda self: self._b)
    c = property(lambda self: self._c)
    d = property(lambda self: self._d)

    def fields(self) -> tuple[int, int, int, int]:
        return (self._a, self._b, self._c, self._d)

    @classmethod
    def coerce(cls, value) -> "QuadExt":
        if isinstance(value, QuadExt):
            return value
        if isinstance(value, bool):
            raise TypeError("refusing to coerce bool")
        if isinstance(value, int):
            return cls(value)
        if isinstance(value, Rational):
            return cls(int(value.numerator), 0, int(value.denominator))
        raise TypeError(f"cannot coerce {type(value).__name__} to QuadExt")

    def is_rational(self) -> bool:
        return self._d == 0

    def to_fraction(self) -> Fraction:
        if self._d:
            raise ValueError(f"{self} is irrational")
        return Fraction(self._a, self._c)

    # -- field alignment -----------------------------------------------
    def _common_d(self, other: "QuadExt") -> int:
        if self._d and other._d and self._d != other._d:
            raise FieldMismatch(f"Q(sqrt({self._d})) vs Q(sqrt({other._d}))")
        return self._d or other._d

    # -- arithmetic ------------------------------------------------------
    def __add__(self, other):
        try:
            o = QuadExt.coerce(other)
        except TypeError:
            return NotImplemented
        d = self._common_d(o)
        return QuadExt(
            self._a * o._c + o._a * self._c,
            self._b * o._c + o._b * self._c,
            self._c * o._c,
            d,
        )

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self._a, -self._b, self._c, self._d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        try:
            o = QuadExt.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        try:
            o = QuadExt.coerce(other)
        except TypeError:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        try:
            o = QuadExt.coerce(other)
        except TypeError:
            return NotImplemented
        d = self._common_d(o)
        return QuadExt(
            self._a * o._a + self._b * o._b * d,
            self._a * o._b + self._b * o._a,
            self._c * o._c,
            d,
        )

    __rmul__ = __mul__

    def inverse(self) -> "QuadExt":
        """Reciprocal by rationalising with the Galois conjugate."""
        if self._a == 0 and self._b == 0:
            raise DivisionByZero("division by zero in QuadExt")
        norm = self._a * self._a - self._b * self._b * self._d
        return QuadExt(self._c * self._a, -self._c * self._b, norm, self._d)

    def __truediv__(self, other):
        try:
            o = QuadExt.coerce(other)
        except TypeError:
            return NotImplemented
        self._common_d(o)
        return self * o.inverse()

    def __rtruediv__(self, other):
        try:
            o = QuadExt.coerce(other)
        except TypeError:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else self.inverse()
        result = QuadExt(1, 0, 1, self._d)
        n = abs(n)
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> "QuadExt":
        return QuadExt(self._a, -self._b, self._c, self._d)

    def sign(self) -> int:
        if self._d == 0:
            return (self._a > 0) - (self._a < 0)
        return _sign_of(self._a, self._b, self._d)

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def minimal_polynomial(self) -> tuple[int, ...]:
        """Primitive integer coefficients, highest degree first."""
        a, b, c, d = self.fields()
        if b == 0:
            return (c, -a)
        coeffs = (c * c, -2 * a * c, a * a - b * b * d)
        g = gcd(gcd(*coeffs[:2]), coeffs[2])
        return tuple(x // g for x in coeffs)

    # -- comparison ------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, QuadExt):
            return self.fields() == other.fields()
        try:
            o = QuadExt.coerce(other)
        except TypeError:
            return NotImplemented
        return self.fields() == o.fields()

    def __hash__(self):
        if self._d == 0:
            return hash(Fraction(self._a, self._c))
        return hash(self.fields())

    def _cmp(self, other) -> int:
        o = QuadExt.coerce(other)
        self._common_d(o)
        return (self - o).sign()

    def __lt__(self, other):
        try:
            return self._cmp(other) < 0
        except TypeError:
            return NotImplemented

    def __le__(self, other):
        try:
            return self._cmp(other) <= 0
        except TypeError:
            return NotImplemented

    def __gt__(self, other):
        try:
            return self._cmp(other) > 0
        except TypeError:
            return NotImplemented

    def __ge__(self, other):
        try:
            return self._cmp(other) >= 0
        except TypeError:
            return NotImplemented

    def __bool__(self):
        return bool(self._a or self._b)

    # -- approximations (display only) -------------------------------------
    def to_decimal(self, digits: int = 30) -> Decimal:
        with localcontext() as ctx:
            # cancellation between a and b*sqrt(d) can eat every digit of the operands
            ctx.prec = digits + 10 + len(str(abs(self._a))) + len(str(abs(self._b)))
            root = Decimal(self._d).sqrt() if self._d else Decimal(0)
            val = (Decimal(self._a) + Decimal(self._b) * root) / Decimal(self._c)
        return val

    def __float__(self):
        return float(self.to_decimal(30))

    # -- rendering -------------------------------------------------------
    def __repr__(self):
        return f"QuadExt({self._a}, {self._b}, {self._c}, {self._d})"

    def __str__(self):
        a, b, c, d = self.fields()
        if b == 0:
            return str(a) if c == 1 else f"{a}/{c}"
        if abs(b) == 1:
            rad = f"√{d}"
        else:
            rad = f"{abs(b)}√{d}"
        if a == 0:
            num = rad if b > 0 else f"-{rad}"
            two_terms = False
        else:
            num = f"{a}{'+' if b > 0 else '-'}{rad}"
            two_terms = True
        if c == 1:
            return num
        return f"({num})/{c}" if two_terms else f"{num}/{c}"

    _TEXT = re.compile(
        r"""^\(?\s*(?P<a>[+-]?\d+)?\s*
            (?:(?P<bs>[+-])?\s*(?P<b>\d+)?\s*√\s*(?P<d>\d+))?\s*\)?
            (?:\s*/\s*(?P<c>\d+))?$""",
        re.VERBOSE,
    )

    @classmethod
    def parse(cls, text: str) -> "QuadExt":
        """Inverse of :meth:`__str__`; also accepts ``sqrt`` for ``√``."""
        s = text.strip().replace("sqrt", "√").replace(" ", "")
        m = cls._TEXT.match(s)
        if not m or (m.group("a") is None and m.group("d") is None):
            raise ValueError(f"cannot parse {text!r} as a quadratic number")
        a = int(m.group("a") or 0)
        b = 0
        d = 0
        if m.group("d") is not None:
            b = int(m.group("b") or 1)
            if m.group("bs") == "-":
                b = -b
            d = int(m.group("d"))
        c = int(m.group("c") or 1)
        return cls(a, b, c, d)

    def to_json(self) -> dict:
        return {"a": self._a, "b": self._b, "c": self._c, "d": self._d}

    @classmethod
    def from_json(cls, obj) -> "QuadExt":
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(int(obj["a"]), int(obj["b"]), int(obj["c"]), int(obj["d"]))


def cmp(x, y) -> Ordering:
    """Exact three-way comparison of two field elements."""
    return Ordering(QuadExt.coerce(x)._cmp(y))


def is_quadratic_irrational(x) -> bool:
    x = QuadExt.coerce(x)
    return x.b != 0 and x.d not in (0, 1)


def qsqrt(n: int) -> QuadExt:
    """Exact square root of a nonnegative integer."""
    r = isqrt(n)
    if r * r == n:
        return QuadExt(r)
    return QuadExt(0, 1, 1, n)
