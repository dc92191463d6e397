"""Quantum integers, factorials, binomials and the divided-difference calculus."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Union

from qhowe.errors import PreconditionError
from qhowe.qarith.field import ONE, ZERO, RatLike, RatQ, as_ratq


@lru_cache(maxsize=None)
def quantum_int(z: int, base: int = 1) -> RatQ:
    """``[z]`` evaluated at ``q**base``: ``q^(b(z-1)) + q^(b(z-3)) + ... + q^(b(1-z))``."""
    if z == 0:
        return ZERO
    if z < 0:
        return -quantum_int(-z, base)
    return RatQ.laurent({base * (z - 1 - 2 * i): 1 for i in range(z)})


@lru_cache(maxsize=None)
def quantum_factorial(n: int, base: int = 1) -> RatQ:
    if n < 0:
        raise PreconditionError("quantum factorial needs n >= 0")
    if n == 0:
        return ONE
    return quantum_factorial(n - 1, base) * quantum_int(n, base)


@lru_cache(maxsize=None)
def quantum_binomial(n: int, m: int, base: int = 1) -> RatQ:
    """Gaussian binomial ``[n over m]``; zero when ``m`` is outside ``0..n``."""
    if n < 0:
        raise PreconditionError("quantum binomial needs n >= 0")
    if m < 0 or m > n:
        return ZERO
    return quantum_factorial(n, base) / (quantum_factorial(m, base) * quantum_factorial(n - m, base))


@lru_cache(maxsize=None)
def quantum_odd_double_factorial(b: int) -> RatQ:
    """``[2b+1]!! = [1][3]...[2b+1]``."""
    if b < 0:
        raise PreconditionError("odd double factorial needs b >= 0")
    if b == 0:
        return ONE
    return quantum_odd_double_factorial(b - 1) * quantum_int(2 * b + 1)


@lru_cache(maxsize=None)
def quantum_falling(a: int, k: int) -> RatQ:
    """``[a][a-1]...[a-k+1]`` (empty product is one)."""
    out = ONE
    for i in range(k):
        out = out * quantum_int(a - i)
    return out


def ratq_eval(a: RatQ, q0: Union[int, Fraction]) -> Fraction:
    return a.evaluate(q0)


class UniPoly:
    """Polynomial in one commuting variable ``x`` over ℚ(q)."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Mapping[int, RatLike] | None = None):
        coeffs = {}
        for e, c in (coefficients or {}).items():
            if e < 0:
                raise ValueError("UniPoly exponents must be nonnegative")
            c = as_ratq(c)
            if c:
                coeffs[e] = c
        self.coefficients: dict[int, RatQ] = coeffs

    @classmethod
    def monomial(cls, m: int, coeff: RatLike = 1) -> UniPoly:
        return cls({m: coeff})

    def degree(self) -> int:
        return max(self.coefficients, default=-1)

    def __add__(self, other: UniPoly) -> UniPoly:
        out = dict(self.coefficients)
        for e, c in other.coefficients.items():
            out[e] = out.get(e, ZERO) + c
        return UniPoly(out)

    def __neg__(self) -> UniPoly:
        return UniPoly({e: -c for e, c in self.coefficients.items()})

    def __sub__(self, other: UniPoly) -> UniPoly:
        return self + (-other)

    def __mul__(self, other: Union[UniPoly, RatLike]) -> UniPoly:
        if not isinstance(other, UniPoly):
            c = as_ratq(other)
            return UniPoly({e: v * c for e, v in self.coefficients.items()})
        out: dict[int, RatQ] = {}
        for e1, c1 in self.coefficients.items():
            for e2, c2 in other.coefficients.items():
                out[e1 + e2] = out.get(e1 + e2, ZERO) + c1 * c2
        return UniPoly(out)

    __rmul__ = __mul__

    def dilate(self, factor: RatQ) -> UniPoly:
        """``phi(x) -> phi(factor * x)``."""
        return UniPoly({e: c * factor ** e for e, c in self.coefficients.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __repr__(self) -> str:
        terms = " + ".join(f"({c})*x^{e}" for e, c in sorted(self.coefficients.items(), reverse=True))
        return f"UniPoly({terms or '0'})"


_Q2_MINUS_ONE = RatQ.q(2) - 1


def _divided_difference_once(phi: UniPoly) -> UniPoly:
    # (phi(q^2 x) - phi(x)) / ((q^2 - 1) x); the x^0 part of the numerator vanishes
    numerator = phi.dilate(RatQ.q(2)) - phi
    return UniPoly({e - 1: c / _Q2_MINUS_ONE for e, c in numerator.coefficients.items() if e > 0})


def divided_difference(phi: UniPoly, order: int = 1) -> UniPoly:
    if order < 0:
        raise PreconditionError("order must be nonnegative")
    for _ in range(order):
        phi = _divided_difference_once(phi)
    return phi


def divided_difference_closed_form(m: int, j: int) -> UniPoly:
    """Closed form of ``delta_q^j (x^m)`` for ``0 <= j <= m``."""
    if not 0 <= j <= m:
        raise PreconditionError("need 0 <= j <= m")
    coeff = RatQ.q(m * j - j * (j + 1) // 2) * quantum_factorial(m) / quantum_factorial(m - j)
    return UniPoly.monomial(m - j, coeff)


def check_twisted_leibniz(phi: UniPoly, psi: UniPoly) -> bool:
    lhs = divided_difference(phi * psi)
    rhs = phi.dilate(RatQ.q(2)) * divided_difference(psi) + divided_difference(phi) * psi
    return lhs == rhs


def check_q_binomial_theorem(n: int) -> bool:
    """``prod_{l=1..n} (1 + q^{2l} x) == sum_l [n over l] q^{(n+1)l} x^l``."""
    if n < 0:
        raise PreconditionError("n must be nonnegative")
    lhs = UniPoly({0: 1})
    for ell in range(1, n + 1):
        lhs = lhs * UniPoly({0: 1, 1: RatQ.q(2 * ell)})
    rhs = UniPoly({ell: quantum_binomial(n, ell) * RatQ.q((n + 1) * ell) for ell in range(n + 1)})
    return lhs == rhs


def alternating_binomial_sum(N: int, n: int, j: int) -> RatQ:
    if not (N >= n >= 1 and 0 <= j < n):
        raise PreconditionError(f"need N >= n >= 1 and 0 <= j < n, got N={N}, n={n}, j={j}")
    total = ZERO
    for ell in range(n + 1):
        term = quantum_binomial(n, ell) * quantum_binomial(N + ell, j) * RatQ.q(ell * (j - (n - 1)))
        total = total - term if ell % 2 else total + term
    return total


def check_alternating_binomial_identity(N: int, n: int, j: int) -> bool:
    return alternating_binomial_sum(N, n, j).is_zero()


def product(values: Iterable[RatQ]) -> RatQ:
    out = ONE
    for v in values:
        out = out * v
    return out
