"""Exact arithmetic in the rational function field ℚ(q).

A :class:`RatQ` is stored as ``q**shift * num / den`` where ``num`` and
``den`` are integer polynomials in ``q`` with nonzero constant terms, coprime
(including integer content), and ``den`` has a positive leading coefficient.
That form is unique, so equality and hashing are structural.

Integer polynomial products and gcds are delegated to FLINT's ``fmpz_poly``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

import flint

from qhowe.errors import PoleError, QDivisionByZero

_ZERO = flint.fmpz_poly([])
_ONE = flint.fmpz_poly([1])


def _valuation(p: flint.fmpz_poly) -> int:
    """Largest ``v`` with ``q**v`` dividing ``p`` (``p`` nonzero)."""
    v = 0
    while p[v] == 0:
        v += 1
    return v


def _poly_key(p: flint.fmpz_poly) -> tuple[int, ...]:
    return tuple(int(c) for c in p.coeffs())


class QPoly:
    """An integer polynomial in ``q``; immutable.

    Thin wrapper around ``flint.fmpz_poly`` exposing a sparse view
    ``exponent -> coefficient``.
    """

    __slots__ = ("_p",)

    def __init__(self, coefficients: Union[Mapping[int, int], Iterable[int], flint.fmpz_poly] = ()):
        if isinstance(coefficients, flint.fmpz_poly):
            self._p = coefficients
        elif isinstance(coefficients, Mapping):
            top = max((e for e, c in coefficients.items() if c), default=-1)
            dense = [0] * (top + 1)
            for e, c in coefficients.items():
                if e < 0:
                    raise ValueError("QPoly exponents must be nonnegative")
                dense[e] += int(c)
            self._p = flint.fmpz_poly(dense)
        else:
            self._p = flint.fmpz_poly([int(c) for c in coefficients])

    @property
    def coefficients(self) -> dict[int, int]:
        return {e: int(c) for e, c in enumerate(self._p.coeffs()) if c != 0}

    def degree(self) -> int:
        return self._p.degree()

    def is_zero(self) -> bool:
        return self._p.is_zero()

    def __call__(self, x):
        return self._p(x)

    def __add__(self, other: QPoly) -> QPoly:
        return QPoly(self._p + other._p)

    def __sub__(self, other: QPoly) -> QPoly:
        return QPoly(self._p - other._p)

    def __mul__(self, other: QPoly) -> QPoly:
        return QPoly(self._p * other._p)

    def __neg__(self) -> QPoly:
        return QPoly(-self._p)

    def gcd(self, other: QPoly) -> QPoly:
        return QPoly(self._p.gcd(other._p))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QPoly):
            return NotImplemented
        return self._p == other._p

    def __hash__(self) -> int:
        return hash(_poly_key(self._p))

    def __repr__(self) -> str:
        return f"QPoly({self.coefficients})"


RatLike = Union["RatQ", int, Fraction]


class RatQ:
    """An element of ℚ(q) in canonical form (see module docstring)."""

    __slots__ = ("shift", "_num", "_den", "_key")

    def __init__(self, value: RatLike = 0):
        if isinstance(value, RatQ):
            self.shift, self._num, self._den, self._key = value.shift, value._num, value._den, value._key
            return
        if isinstance(value, Fraction):
            num, den = value.numerator, value.denominator
        elif isinstance(value, int):
            num, den = value, 1
        else:
            raise TypeError(f"cannot convert {type(value).__name__} to RatQ")
        self.shift = 0
        self._num = flint.fmpz_poly([num]) if num else _ZERO
        self._den = flint.fmpz_poly([den])
        self._key = None

    # -- construction -----------------------------------------------------

    @classmethod
    def _raw(cls, shift: int, num, den) -> RatQ:
        obj = object.__new__(cls)
        obj.shift = shift
        obj._num = num
        obj._den = den
        obj._key = None
        return obj

    @classmethod
    def _laurent(cls, shift: int, num) -> RatQ:
        """Canonicalise ``q**shift * num`` (denominator one)."""
        if num.is_zero():
            return ZERO
        v = _valuation(num)
        if v:
            num = num.right_shift(v)
        return cls._raw(shift + v, num, _ONE)

    @classmethod
    def _make(cls, shift: int, num, den) -> RatQ:
        if num.is_zero():
            return ZERO
        if den.is_zero():
            raise QDivisionByZero()
        v = _valuation(num)
        if v:
            num = num.right_shift(v)
            shift += v
        v = _valuation(den)
        if v:
            den = den.right_shift(v)
            shift -= v
        if not den.is_one():
            g = num.gcd(den)
            if not g.is_one():
                num = num // g
                den = den // g
            if den.leading_coefficient() < 0:
                num, den = -num, -den
        return cls._raw(shift, num, den)

    @classmethod
    def q(cls, power: int = 1) -> RatQ:
        """The monomial ``q**power``."""
        return cls._raw(power, _ONE, _ONE)

    @classmethod
    def from_parts(cls, shift: int, num: QPoly, den: QPoly) -> RatQ:
        return cls._make(shift, num._p, den._p)

    @classmethod
    def laurent(cls, coefficients: Mapping[int, int]) -> RatQ:
        """Build a Laurent polynomial from ``{exponent: integer}``."""
        items = {e: c for e, c in coefficients.items() if c}
        if not items:
            return ZERO
        low = min(items)
        return cls._laurent(low, QPoly({e - low: c for e, c in items.items()})._p)

    # -- accessors ------------------------------------------------------

    @property
    def numerator(self) -> QPoly:
        return QPoly(self._num)

    @property
    def denominator(self) -> QPoly:
        return QPoly(self._den)

    def is_zero(self) -> bool:
        return self._num.is_zero()

    def is_one(self) -> bool:
        return self.shift == 0 and self._num.is_one() and self._den.is_one()

    def is_laurent(self) -> bool:
        return self._den.is_one()

    def is_monomial(self) -> bool:
        """True for ``c * q**k`` with ``c`` a nonzero rational."""
        return not self.is_zero() and self._num.degree() == 0 and self._den.degree() == 0

    def laurent_coefficients(self) -> dict[int, int]:
        if not self._den.is_one():
            raise ValueError("not a Laurent polynomial")
        return {self.shift + e: int(c) for e, c in enumerate(self._num.coeffs()) if c != 0}

    def key(self) -> tuple:
        if self._key is None:
            self._key = (self.shift, _poly_key(self._num), _poly_key(self._den))
        return self._key

    # -- arithmetic -----------------------------------------------------

    @staticmethod
    def _coerce(other) -> RatQ:
        if isinstance(other, RatQ):
            return other
        if isinstance(other, (int, Fraction)):
            return RatQ(other)
        return NotImplemented

    def __add__(self, other: RatLike) -> RatQ:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self._num.is_zero():
            return other
        if other._num.is_zero():
            return self
        s = min(self.shift, other.shift)
        a = self._num.left_shift(self.shift - s) if self.shift > s else self._num
        b = other._num.left_shift(other.shift - s) if other.shift > s else other._num
        if self._den.is_one() and other._den.is_one():
            return RatQ._laurent(s, a + b)
        if self._den == other._den:
            return RatQ._make(s, a + b, self._den)
        return RatQ._make(s, a * other._den + b * self._den, self._den * other._den)

    __radd__ = __add__

    def __neg__(self) -> RatQ:
        if self._num.is_zero():
            return self
        return RatQ._raw(self.shift, -self._num, self._den)

    def __sub__(self, other: RatLike) -> RatQ:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: RatLike) -> RatQ:
        return (-self) + other

    def __mul__(self, other: RatLike) -> RatQ:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self._num.is_zero() or other._num.is_zero():
            return ZERO
        shift = self.shift + other.shift
        if self._den.is_one() and other._den.is_one():
            return RatQ._raw(shift, self._num * other._num, _ONE)
        n1, d1, n2, d2 = self._num, self._den, other._num, other._den
        g = n1.gcd(d2)
        if not g.is_one():
            n1, d2 = n1 // g, d2 // g
        g = n2.gcd(d1)
        if not g.is_one():
            n2, d1 = n2 // g, d1 // g
        num, den = n1 * n2, d1 * d2
        if den.leading_coefficient() < 0:
            num, den = -num, -den
        return RatQ._raw(shift, num, den)

    __rmul__ = __mul__

    def inverse(self) -> RatQ:
        if self._num.is_zero():
            raise QDivisionByZero()
        num, den = self._den, self._num
        if den.leading_coefficient() < 0:
            num, den = -num, -den
        return RatQ._raw(-self.shift, num, den)

    def __truediv__(self, other: RatLike) -> RatQ:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: RatLike) -> RatQ:
        return self.inverse() * other

    def __pow__(self, n: int) -> RatQ:
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        if n == 0:
            return ONE
        if self._num.is_zero():
            return ZERO
        return RatQ._raw(self.shift * n, self._num ** n, self._den ** n)

    def substitute_power(self, p: int) -> RatQ:
        """Return the value with ``q`` replaced by ``q**p`` (``p >= 1``)."""
        if p == 1 or self.is_zero():
            return self
        if p < 1:
            raise ValueError("substitution power must be positive")
        return RatQ._make(self.shift * p, self._num.inflate(p), self._den.inflate(p))

    # -- comparison -----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = RatQ(other)
        if not isinstance(other, RatQ):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __bool__(self) -> bool:
        return not self._num.is_zero()

    # -- evaluation -----------------------------------------------------

    def evaluate(self, q0: Union[int, Fraction]) -> Fraction:
        """Exact value at the rational point ``q = q0``.

        Raises :class:`PoleError` when the reduced denominator vanishes there.
        """
        q0 = Fraction(q0)
        if self._num.is_zero():
            return Fraction(0)
        x = flint.fmpq(q0.numerator, q0.denominator)
        den = self._den(x)
        if den == 0 or (q0 == 0 and self.shift < 0):
            raise PoleError()
        value = self._num(x) / den
        result = Fraction(int(value.p), int(value.q))
        if self.shift:
            result *= q0 ** self.shift
        return result

    # -- text / json ----------------------------------------------------

    def __str__(self) -> str:
        return format_ratq(self)

    def __repr__(self) -> str:
        return f"RatQ({format_ratq(self)!r})"

    def to_json(self) -> dict:
        return {
            "shift": self.shift,
            "num": [[e, int(c)] for e, c in enumerate(self._num.coeffs()) if c != 0],
            "den": [[e, int(c)] for e, c in enumerate(self._den.coeffs()) if c != 0],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> RatQ:
        num = QPoly({int(e): int(c) for e, c in data["num"]})
        den = QPoly({int(e): int(c) for e, c in data["den"]})
        return cls._make(int(data["shift"]), num._p, den._p)

    @classmethod
    def parse(cls, text: str) -> RatQ:
        from qhowe.expr import parse_scalar

        return parse_scalar(text)


ZERO = RatQ._raw(0, _ZERO, _ONE)
ONE = RatQ._raw(0, _ONE, _ONE)
Q = RatQ.q(1)


def _format_laurent(shift: int, poly, compact: bool) -> str:
    plus, minus = ("+", "-") if compact else (" + ", " - ")
    terms = [(shift + e, int(c)) for e, c in enumerate(poly.coeffs()) if c != 0]
    terms.sort(key=lambda t: -t[0])
    out = []
    for i, (e, c) in enumerate(terms):
        if e == 0:
            body = str(abs(c))
        else:
            mono = "q" if e == 1 else f"q^{e}"
            body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
        if i == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((minus if c < 0 else plus) + body)
    return "".join(out) if out else "0"


def format_ratq(a: RatQ) -> str:
    """Canonical text: Laurent polynomials as ``q^2 + 1 + q^-2``; proper
    fractions as ``N/(D)`` with the denominator balanced around ``q**0``."""
    if a._num.is_zero():
        return "0"
    if a._den.is_one():
        return _format_laurent(a.shift, a._num, compact=False)
    t = a._den.degree() // 2
    num = _format_laurent(a.shift - t, a._num, compact=True)
    den = _format_laurent(-t, a._den, compact=True)
    if a._num.length() > 1:
        num = f"({num})"
    if a._den.length() > 1:
        den = f"({den})"
    return f"{num}/{den}"


def as_ratq(value: RatLike) -> RatQ:
    return value if isinstance(value, RatQ) else RatQ(value)
