"""Action of W_q(2) ⊗ C_{s,q} on polynomial spinors.

A factor monomial ``mu^a gamma^g d^b`` sends ``x^n`` to
``[n][n-1]...[n-b+1] q^(g(n-b)) x^(n-b+a)`` (zero when ``b > n``).
"""

from __future__ import annotations

from functools import lru_cache
from typing import Optional

from qhowe.qarith import ONE, RatQ, quantum_falling
from qhowe.qweyl import AlgebraElement, NormalMonomial
from qhowe.spinor.vector import Key, SpinorVector


@lru_cache(maxsize=1 << 16)
def _factor_action(mono: tuple[int, int, int], n: int) -> Optional[tuple[int, RatQ]]:
    a, g, b = mono
    if b > n:
        return None
    coeff = quantum_falling(n, b) if b else ONE
    if g:
        coeff = coeff * RatQ.q(g * (n - b))
    return n - b + a, coeff


@lru_cache(maxsize=1 << 18)
def monomial_action(m: NormalMonomial, key: Key) -> Optional[tuple[Key, RatQ]]:
    out_key = []
    coeff = ONE
    for i in range(3):
        r = _factor_action(m.factor(i), key[i])
        if r is None:
            return None
        out_key.append(r[0])
        coeff = coeff * r[1]
    return tuple(out_key), coeff


def apply(A: AlgebraElement, v: SpinorVector) -> SpinorVector:
    acc: dict[Key, RatQ] = {}
    for m, cm in A.terms.items():
        for key, cv in v.terms.items():
            r = monomial_action(m, key)
            if r is None:
                continue
            k2, c = r
            prev = acc.get(k2)
            term = cm * cv * c
            acc[k2] = term if prev is None else prev + term
    return SpinorVector._from_clean({k: c for k, c in acc.items() if c})


def apply_power(A: AlgebraElement, v: SpinorVector, n: int) -> SpinorVector:
    for _ in range(n):
        if v.is_zero():
            break
        v = apply(A, v)
    return v


ZERO_VECTOR = SpinorVector()
ONE_VECTOR = SpinorVector({(0, 0, 0): 1})

__all__ = ["apply", "apply_power", "monomial_action", "ZERO_VECTOR", "ONE_VECTOR"]
