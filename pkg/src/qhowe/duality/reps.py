"""The four quantum sl2 triples, adjoint actions, and the raising symmetries."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from qhowe.qarith import RatQ, quantum_int
from qhowe.qweyl import (
    ONE_ELEMENT,
    ZERO_ELEMENT,
    AlgebraElement,
    brace,
    generator,
    shifted_derivative,
)

q = RatQ.q


@dataclass(frozen=True)
class Sl2Triple:
    """Images ``E, F, K`` of ``e, f, k`` satisfying the U_{q^p}(sl2) relations."""

    E: AlgebraElement
    F: AlgebraElement
    K: AlgebraElement
    param_exponent: int = 1
    name: str = ""

    def __post_init__(self):
        if not self.K.is_invertible_monomial():
            raise ValueError("K must be an invertible group-like monomial")

    @property
    def K_inv(self) -> AlgebraElement:
        return self.K.inverse()


def _g(name: str, power: int = 1) -> AlgebraElement:
    return generator(name, power)


def dq2(j: int) -> AlgebraElement:
    """The shifted derivative ``d_{j,q^2}``."""
    return shifted_derivative(j, 2)


_INV_2 = quantum_int(2).inverse()


@lru_cache(maxsize=None)
def build_sigma_w() -> Sl2Triple:
    K = _g("g1", 2) * _g("g2", -2)
    E = _g("mu1") * dq2(2)
    F = _g("mu2") * dq2(1)
    return Sl2Triple(E, F, K, 2, "sigma_w")


@lru_cache(maxsize=None)
def build_sigma_s() -> Sl2Triple:
    K = _g("w", 2).scale(q(1))
    E = (_g("nu") ** 2).scale(_INV_2)
    F = (_g("nab") ** 2).scale(-_INV_2)
    return Sl2Triple(E, F, K, 2, "sigma_s")


@lru_cache(maxsize=None)
def build_sigma_delta() -> Sl2Triple:
    """Diagonal action on polynomial spinors (explicit operator formulas)."""
    K = (_g("g1", 2) * _g("g2", -2) * _g("w", 2)).scale(q(1))
    E = (_g("w", 2) * _g("mu1") * dq2(2)).scale(q(1)) + (_g("nu") ** 2).scale(_INV_2)
    F = _g("mu2") * dq2(1) - (_g("g1", -2) * _g("g2", 2) * _g("nab") ** 2).scale(_INV_2)
    return Sl2Triple(E, F, K, 2, "sigma_delta")


@lru_cache(maxsize=None)
def build_sigma_dual() -> Sl2Triple:
    """The dual partner: ``F`` is the q-symplectic Dirac operator."""
    K = (_g("g1", 2) * _g("g2", 2)).scale(q(2))
    E = ((_g("g2", 2) * _g("w") * _g("mu1") * _g("nab")).scale(q(2)) + _g("mu2") * _g("nu")).scale(quantum_int(2))
    F = dq2(1) * _g("nu") - _g("g1", -2) * _g("w") * dq2(2) * _g("nab")
    return Sl2Triple(E, F, K, 1, "sigma")


def trivial_triple() -> Sl2Triple:
    return Sl2Triple(ZERO_ELEMENT, ZERO_ELEMENT, ONE_ELEMENT, 1, "trivial")


# -- adjoint actions ---------------------------------------------------------

def adjoint(x: str, t: Sl2Triple, A: AlgebraElement) -> AlgebraElement:
    """Left adjoint action of ``x`` in ``{'e', 'f', 'k', 'k^-1'}`` through ``t``."""
    if x == "e":
        return (t.E * A - A * t.E) * t.K_inv
    if x == "f":
        return t.F * A - t.K_inv * A * t.K * t.F
    if x == "k":
        return t.K * A * t.K_inv
    if x in ("k^-1", "k-1", "kinv"):
        return t.K_inv * A * t.K
    raise ValueError(f"unknown adjoint generator {x!r}")


@lru_cache(maxsize=None)
def ad_F_powers_of_mu1() -> tuple[AlgebraElement, AlgebraElement, AlgebraElement]:
    """``ad_F(mu1)``, ``ad_F^2(mu1)``, ``ad_F^3(mu1)`` for the dual triple."""
    t = build_sigma_dual()
    a1 = adjoint("f", t, _g("mu1"))
    a2 = adjoint("f", t, a1)
    a3 = adjoint("f", t, a2)
    return a1, a2, a3


def raising_symmetry(X: AlgebraElement) -> AlgebraElement:
    """``[2] X {K}{q^-1 K} + [2] E ad_F(X) {q^-1 K} + E^2 ad_F^2(X)``."""
    t = build_sigma_dual()
    two = quantum_int(2)
    k0 = brace(t.K)
    k1 = brace(t.K.scale(q(-1)))
    ad1 = adjoint("f", t, X)
    ad2 = adjoint("f", t, ad1)
    return (X * k0 * k1).scale(two) + (t.E * ad1 * k1).scale(two) + t.E * t.E * ad2


@lru_cache(maxsize=None)
def build_Z1() -> AlgebraElement:
    return raising_symmetry(_g("mu1"))


@lru_cache(maxsize=None)
def build_Z2() -> AlgebraElement:
    return adjoint("f", build_sigma_delta(), build_Z1())


def lowering_symmetries() -> dict[str, AlgebraElement]:
    return {"dq2_2": dq2(2), "g2^-2 dq2_1": _g("g2", -2) * dq2(1)}
