"""Elements of W_q(2) ⊗ C_{s,q} and their normal-ordered products.

Within one factor the rewrite rules are

    gamma mu -> q mu gamma,    d gamma -> q gamma d,
    d mu -> q mu d + gamma^-1, mu d -> {gamma}_q

The last rule is what the two signed relations ``d mu - q^{+-1} mu d =
gamma^{-+1}`` imply jointly, so a normal factor monomial ``mu^a gamma^g d^b``
never has both ``a`` and ``b`` positive. Pushing ``d^b`` through ``mu^c`` is
memoised per exponent pair, and products of general factor monomials are
assembled from it.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product as cartesian
from typing import Iterable, Mapping, Union

from qhowe.errors import NotInvertibleError
from qhowe.qarith import ONE, ZERO, RatQ, as_ratq, quantum_int
from qhowe.qweyl.monomial import (
    IDENTITY,
    NormalMonomial,
    format_monomial,
    generator_monomial,
)

FactorMono = tuple[int, int, int]
FactorTerms = tuple[tuple[FactorMono, RatQ], ...]


@lru_cache(maxsize=None)
def _d_power_past_mu_power(b: int, c: int) -> FactorTerms:
    """Normal form of ``d^b mu^c`` within one factor."""
    if b == 0 or c == 0:
        return (((c, 0, b), ONE),)
    acc: dict[FactorMono, RatQ] = {}
    # d * (mu^a gamma^g d^k) = q^(a+g) mu^a gamma^g d^(k+1) + [a] mu^(a-1) gamma^(g-1) d^k
    for (a, g, k), coeff in _d_power_past_mu_power(b - 1, c):
        key = (a, g, k + 1)
        acc[key] = acc.get(key, ZERO) + coeff * RatQ.q(a + g)
        if a:
            key = (a - 1, g - 1, k)
            acc[key] = acc.get(key, ZERO) + coeff * quantum_int(a)
    return tuple((k, v) for k, v in acc.items() if v)


_INV_Q_MINUS_INV = (RatQ.q(1) - RatQ.q(-1)).inverse()


@lru_cache(maxsize=None)
def _reduce_factor(mono: FactorMono) -> FactorTerms:
    """Eliminate ``mu ... d`` pairs: ``mu^a g^k d^b = q^-k mu^(a-1) g^k {gamma} d^(b-1)``."""
    a, g, b = mono
    if a == 0 or b == 0:
        return ((mono, ONE),)
    acc: dict[FactorMono, RatQ] = {}
    scale = RatQ.q(-g) * _INV_Q_MINUS_INV
    for shift, sign in ((1, scale), (-1, -scale)):
        for m, c in _reduce_factor((a - 1, g + shift, b - 1)):
            acc[m] = acc.get(m, ZERO) + sign * c
    return tuple((m, c) for m, c in acc.items() if c)


@lru_cache(maxsize=1 << 16)
def factor_product(left: FactorMono, right: FactorMono) -> FactorTerms:
    """Normal form of ``(mu^a gamma^g d^b)(mu^c gamma^h d^e)``."""
    a, g, b = left
    c, h, e = right
    acc: dict[FactorMono, RatQ] = {}
    for (a2, g2, b2), coeff in _d_power_past_mu_power(b, c):
        power = g * a2 + h * b2
        coeff = coeff * RatQ.q(power) if power else coeff
        for m, c2 in _reduce_factor((a + a2, g + g2 + h, b2 + e)):
            acc[m] = acc.get(m, ZERO) + coeff * c2
    return tuple((m, v) for m, v in acc.items() if v)


@lru_cache(maxsize=1 << 16)
def monomial_product(left: NormalMonomial, right: NormalMonomial) -> tuple[tuple[NormalMonomial, RatQ], ...]:
    parts = [factor_product(left.factor(i), right.factor(i)) for i in range(3)]
    out = []
    for (f0, c0), (f1, c1), (f2, c2) in cartesian(*parts):
        out.append((NormalMonomial.from_factors(f0, f1, f2), c0 * c1 * c2))
    return tuple(out)


Scalar = Union[RatQ, int, Fraction]


class AlgebraElement:
    """Finite ℚ(q)-linear combination of normal monomials; immutable."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[NormalMonomial, Scalar] | None = None):
        clean: dict[NormalMonomial, RatQ] = {}
        for m, c in (terms or {}).items():
            c = as_ratq(c)
            if c:
                clean[NormalMonomial(*m)] = c
        self.terms: dict[NormalMonomial, RatQ] = clean

    @classmethod
    def _from_clean(cls, terms: dict) -> AlgebraElement:
        obj = object.__new__(cls)
        obj.terms = terms
        return obj

    @classmethod
    def scalar(cls, c: Scalar) -> AlgebraElement:
        return cls({IDENTITY: c})

    @classmethod
    def monomial(cls, m: NormalMonomial, c: Scalar = 1) -> AlgebraElement:
        return cls({m: c})

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_scalar(self) -> bool:
        return all(m == IDENTITY for m in self.terms)

    def scalar_value(self) -> RatQ:
        if not self.is_scalar():
            raise ValueError("element is not a scalar")
        return self.terms.get(IDENTITY, ZERO)

    def single_term(self) -> tuple[NormalMonomial, RatQ]:
        if len(self.terms) != 1:
            raise ValueError("element is not a single term")
        return next(iter(self.terms.items()))

    def is_invertible_monomial(self) -> bool:
        return len(self.terms) == 1 and next(iter(self.terms)).is_grouplike()

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(other) -> AlgebraElement:
        if isinstance(other, AlgebraElement):
            return other
        if isinstance(other, (RatQ, int, Fraction)):
            return AlgebraElement.scalar(other)
        return NotImplemented

    def __add__(self, other) -> AlgebraElement:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m)
            if v is None:
                out[m] = c
            else:
                v = v + c
                if v:
                    out[m] = v
                else:
                    del out[m]
        return AlgebraElement._from_clean(out)

    __radd__ = __add__

    def __neg__(self) -> AlgebraElement:
        return AlgebraElement._from_clean({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> AlgebraElement:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> AlgebraElement:
        return (-self) + other

    def scale(self, c: Scalar) -> AlgebraElement:
        c = as_ratq(c)
        if not c:
            return ZERO_ELEMENT
        return AlgebraElement._from_clean({m: v * c for m, v in self.terms.items()})

    def __mul__(self, other) -> AlgebraElement:
        if isinstance(other, (RatQ, int, Fraction)):
            return self.scale(other)
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return multiply(self, other)

    def __rmul__(self, other) -> AlgebraElement:
        if isinstance(other, (RatQ, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other) -> AlgebraElement:
        if isinstance(other, AlgebraElement):
            if not other.is_scalar():
                raise NotInvertibleError("can only divide by a scalar")
            other = other.scalar_value()
        return self.scale(as_ratq(other).inverse())

    def inverse(self) -> AlgebraElement:
        if not self.is_invertible_monomial():
            raise NotInvertibleError(f"{self} is not an invertible monomial")
        m, c = self.single_term()
        return AlgebraElement._from_clean({m.inverse(): c.inverse()})

    def __pow__(self, n: int) -> AlgebraElement:
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        out = ONE_ELEMENT
        for _ in range(n):
            out = out * self
        return out

    # -- comparison / display ----------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (RatQ, int, Fraction)):
            other = AlgebraElement.scalar(other)
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __str__(self) -> str:
        return format_element(self)

    def __repr__(self) -> str:
        return f"AlgebraElement({format_element(self)!r})"

    def to_json(self) -> list:
        return [[list(m), c.to_json()] for m, c in sorted(self.terms.items(), reverse=True)]


ZERO_ELEMENT = AlgebraElement()
ONE_ELEMENT = AlgebraElement.scalar(1)


def multiply(A: AlgebraElement, B: AlgebraElement) -> AlgebraElement:
    acc: dict[NormalMonomial, RatQ] = {}
    for ma, ca in A.terms.items():
        for mb, cb in B.terms.items():
            cab = ca * cb
            for m, c in monomial_product(ma, mb):
                v = acc.get(m)
                acc[m] = cab * c if v is None else v + cab * c
    return AlgebraElement._from_clean({m: c for m, c in acc.items() if c})


def generator(name: str, power: int = 1) -> AlgebraElement:
    """A generator (ASCII or Unicode name) raised to ``power``; negative powers
    only for the group-likes ``g1``, ``g2``, ``w``."""
    return AlgebraElement.monomial(generator_monomial(name, power))


def commutator(A: AlgebraElement, B: AlgebraElement) -> AlgebraElement:
    return A * B - B * A


def twisted_commutator(A: AlgebraElement, B: AlgebraElement, v: Scalar) -> AlgebraElement:
    """``[A, B]_v = AB - v BA``."""
    return A * B - (B * A).scale(v)


def brace(A: AlgebraElement, base: int = 1) -> AlgebraElement:
    """``{A}_{q^base} = (A - A^-1) / (q^base - q^-base)`` for an invertible monomial ``A``."""
    if not A.is_invertible_monomial():
        raise NotInvertibleError("brace needs a single group-like monomial with nonzero coefficient")
    return (A - A.inverse()).scale((RatQ.q(base) - RatQ.q(-base)).inverse())


_FACTOR_OF = {1: ("d1", "g1"), 2: ("d2", "g2"), 3: ("nab", "w")}  # 3: spinor factor


def gamma_integer(j: int, m: int) -> AlgebraElement:
    """``[m]_{gamma_j} = gamma_j^(m-1) + gamma_j^(m-3) + ... + gamma_j^(1-m)``."""
    g = _FACTOR_OF[j][1]
    out = ZERO_ELEMENT
    for i in range(m):
        out = out + generator(g, m - 1 - 2 * i)
    return out


@lru_cache(maxsize=None)
def shifted_derivative(j: int, m: int) -> AlgebraElement:
    """``d_{j,q^m} = d_j [m]_{gamma_j} / [m]_q``; ``m = 1`` is plain ``d_j``.

    ``j = 3`` addresses the spinor factor (``nab``, ``w``).
    """
    if j not in _FACTOR_OF:
        raise ValueError("shifted derivatives are indexed by j in {1, 2, 3}")
    if m < 1:
        raise ValueError("m must be a positive integer")
    return (generator(_FACTOR_OF[j][0]) * gamma_integer(j, m)).scale(quantum_int(m).inverse())


def _format_coefficient(c: RatQ) -> str:
    text = str(c)
    body = text[1:] if text.startswith("-") else text
    if " " in body or "/" in body:
        return f"({text})"
    return text


def format_element(A: AlgebraElement) -> str:
    """Terms in descending monomial order, e.g. ``(q + q^-1) mu1 g1^-1 d2``."""
    if not A.terms:
        return "0"
    pieces = []
    for i, (m, c) in enumerate(sorted(A.terms.items(), reverse=True)):
        neg = False
        coeff = _format_coefficient(c)
        if coeff.startswith("-"):
            neg, coeff = True, coeff[1:]
        mono = format_monomial(m)
        if m == IDENTITY:
            body = coeff
        elif coeff == "1":
            body = mono
        else:
            body = f"{coeff} {mono}"
        if i == 0:
            pieces.append(("-" if neg else "") + body)
        else:
            pieces.append((" - " if neg else " + ") + body)
    return "".join(pieces)


def sum_elements(items: Iterable[AlgebraElement]) -> AlgebraElement:
    out = ZERO_ELEMENT
    for x in items:
        out = out + x
    return out
