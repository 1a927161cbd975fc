"""Trapezoidal ordered fuzzy numbers with exact rational coordinates.

Every scalar is a :class:`fractions.Fraction`. The revised sum branches on
``q < r`` versus ``q == r``, so nothing here ever touches a float.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from numbers import Rational
from typing import Union

ExactNumber = Fraction
Quadruple = tuple[Fraction, Fraction, Fraction, Fraction]
NumberLike = Union[int, str, Decimal, Rational]


def exact(value: NumberLike) -> Fraction:
    """Convert ``value`` to an exact rational.

    Accepts ints, rationals, :class:`~decimal.Decimal` and text such as
    ``"12"``, ``"0.25"`` or ``"-7/3"``. Floats and bools are refused since
    they either carry binary rounding or are almost certainly a mistake.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"refusing inexact or boolean coordinate {value!r}")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, Decimal):
        if not value.is_finite():
            raise ValueError(f"non-finite coordinate {value!r}")
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"cannot parse {value!r} as an exact number") from exc
    raise TypeError(f"unsupported coordinate type {type(value).__name__}")


def format_exact(x: Fraction) -> Union[int, str]:
    """Integral values come back as ``int``, anything else as ``"num/den"``."""
    if x.denominator == 1:
        return x.numerator
    return f"{x.numerator}/{x.denominator}"


class Orientation(enum.Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    NONE = "none"


class SumFailure(ValueError):
    """Raised when a quadruple cannot be turned into a TrOFN.

    ``kind`` is ``"NonMonotonicQuadruple"`` for malformed input and
    ``"NonexistentKosinskiSum"`` when the component-wise sum of two valid
    numbers is not a membership function. ``quadruple`` is the offender.
    """

    kind = "SumFailure"

    def __init__(self, quadruple, message: str | None = None):
        self.quadruple: Quadruple = tuple(exact(v) for v in quadruple)
        shown = ", ".join(str(format_exact(v)) for v in self.quadruple)
        super().__init__(message or f"{self.kind}: ({shown})")


class NonMonotonicQuadruple(SumFailure):
    kind = "NonMonotonicQuadruple"


class NonexistentKosinskiSum(SumFailure):
    kind = "NonexistentKosinskiSum"


def is_nondecreasing(a, b, c, d) -> bool:
    return a <= b <= c <= d


def is_nonincreasing(a, b, c, d) -> bool:
    return a >= b >= c >= d


def is_proper_fn_quadruple(a, b, c, d) -> bool:
    """Whether the trapezoid relation on ``(a, b, c, d)`` is a fuzzy number.

    The piecewise relation defines a normal, quasi-concave membership
    function exactly when the quadruple is monotonic in either direction.
    This doubles as the existence test for the Kosiński sum.
    """
    a, b, c, d = (exact(v) for v in (a, b, c, d))
    return is_nondecreasing(a, b, c, d) or is_nonincreasing(a, b, c, d)


@dataclass(frozen=True, order=True)
class TrOFN:
    """Trapezoidal ordered fuzzy number ``Tr(a, b, c, d)``.

    The quadruple must be monotonic. Its direction carries the orientation,
    so ``Tr(1, 2, 3, 4)`` and ``Tr(4, 3, 2, 1)`` share a membership graph
    but compare unequal. Ordering is lexicographic on ``(a, b, c, d)``.
    """

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __post_init__(self):
        coords = tuple(exact(v) for v in (self.a, self.b, self.c, self.d))
        for name, value in zip("abcd", coords):
            object.__setattr__(self, name, value)
        if not is_proper_fn_quadruple(*coords):
            raise NonMonotonicQuadruple(coords)

    @classmethod
    def triangular(cls, a, b, c) -> "TrOFN":
        return cls(a, b, b, c)

    @classmethod
    def crisp(cls, t) -> "TrOFN":
        return cls(t, t, t, t)

    @property
    def quadruple(self) -> Quadruple:
        return (self.a, self.b, self.c, self.d)

    @property
    def orientation(self) -> Orientation:
        return orientation(self)

    @property
    def is_crisp(self) -> bool:
        return self.a == self.d

    def __iter__(self):
        return iter(self.quadruple)

    def __str__(self):
        return "Tr(%s)" % ", ".join(str(format_exact(v)) for v in self.quadruple)

    def __repr__(self):
        return "TrOFN(%s)" % ", ".join(repr(format_exact(v)) for v in self.quadruple)


def make_trofn(a, b, c, d) -> TrOFN:
    """Validating constructor; raises :class:`NonMonotonicQuadruple`."""
    return TrOFN(a, b, c, d)


def make_tofn(a, b, c) -> TrOFN:
    """Triangular ordered fuzzy number ``T(a, b, c) = Tr(a, b, b, c)``."""
    return TrOFN(a, b, b, c)


def orientation(x: TrOFN) -> Orientation:
    if x.a < x.d:
        return Orientation.POSITIVE
    if x.a > x.d:
        return Orientation.NEGATIVE
    return Orientation.NONE


def membership(x: TrOFN, t: NumberLike) -> Fraction:
    """Membership degree of ``t`` in ``x``.

    Half-open edges follow the direction of the quadruple. For a
    nonincreasing ``x`` the rising edge is ``]b, a]`` and the falling edge
    ``[d, c[``. A degenerate edge (``a == b`` or ``c == d``) is empty, so its
    endpoint lands on the plateau and gets degree 1.
    """
    t = exact(t)
    a, b, c, d = x.quadruple
    if a <= d:
        if t < a or t > d:
            return Fraction(0)
        if t < b:
            return (t - a) / (b - a)
        if t <= c:
            return Fraction(1)
        return (t - d) / (c - d)
    if t > a or t < d:
        return Fraction(0)
    if t > b:
        return (t - a) / (b - a)
    if t >= c:
        return Fraction(1)
    return (t - d) / (c - d)


def _componentwise(x: TrOFN, y: TrOFN) -> Quadruple:
    return (x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d)


def kosinski_sum(x: TrOFN, y: TrOFN) -> TrOFN:
    """Component-wise sum; raises :class:`NonexistentKosinskiSum` if it is
    not a valid trapezoid (e.g. ``Tr(1,3,7,8) ⊕ Tr(5,4,4,2)``)."""
    quad = _componentwise(x, y)
    if not is_proper_fn_quadruple(*quad):
        raise NonexistentKosinskiSum(quad)
    return TrOFN(*quad)


def dubois_prade_sum(x: TrOFN, y: TrOFN) -> TrOFN:
    """Classical trapezoidal fuzzy number addition.

    Only defined for nondecreasing operands; a negatively oriented operand
    raises ``ValueError``.
    """
    for operand in (x, y):
        if orientation(operand) is Orientation.NEGATIVE:
            raise ValueError(f"{operand} is negatively oriented, not a trapezoidal fuzzy number")
    return TrOFN(*_componentwise(x, y))


def revised_sum(x: TrOFN, y: TrOFN) -> TrOFN:
    """Total sum of two TrOFN.

    With ``p, q, r, s`` the component-wise sums, returns
    ``Tr(min(p, q), q, r, max(r, s))`` if ``q < r`` or (``q == r`` and
    ``p <= s``), and ``Tr(max(p, q), q, r, min(r, s))`` otherwise.
    Agrees with :func:`kosinski_sum` wherever that exists.
    """
    p, q, r, s = _componentwise(x, y)
    if q < r or (q == r and p <= s):
        return TrOFN(min(p, q), q, r, max(r, s))
    return TrOFN(max(p, q), q, r, min(r, s))
