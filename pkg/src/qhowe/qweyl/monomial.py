"""Normal-ordered monomials of W_q(2) ⊗ C_{s,q}.

The algebra is a tensor product of three rank-one q-Weyl factors: the
``x1`` factor (mu1, g1, d1), the ``x2`` factor (mu2, g2, d2) and the spinor
factor (nu, w, nab). Generators of different factors commute, so a normal
monomial is a triple of factor monomials ``mu^a gamma^g d^b``.
"""

from __future__ import annotations

from typing import NamedTuple

from qhowe.errors import NotInvertibleError


class NormalMonomial(NamedTuple):
    m1: int = 0
    m2: int = 0
    nu: int = 0
    g1: int = 0
    g2: int = 0
    w: int = 0
    d1: int = 0
    d2: int = 0
    nab: int = 0

    def factor(self, index: int) -> tuple[int, int, int]:
        """``(mult, group, deriv)`` exponents of factor 0 (x1), 1 (x2) or 2 (spinor)."""
        return (self[index], self[3 + index], self[6 + index])

    def factors(self) -> tuple[tuple[int, int, int], ...]:
        return (self.factor(0), self.factor(1), self.factor(2))

    @classmethod
    def from_factors(cls, f0, f1, f2) -> NormalMonomial:
        return cls(f0[0], f1[0], f2[0], f0[1], f1[1], f2[1], f0[2], f1[2], f2[2])

    def is_grouplike(self) -> bool:
        return not (self.m1 or self.m2 or self.nu or self.d1 or self.d2 or self.nab)

    def inverse(self) -> NormalMonomial:
        if not self.is_grouplike():
            raise NotInvertibleError(f"monomial {format_monomial(self)} is not invertible")
        return NormalMonomial(g1=-self.g1, g2=-self.g2, w=-self.w)

    def degree_shift(self) -> int:
        """Change of the x-polynomial degree under the action."""
        return self.m1 + self.m2 - self.d1 - self.d2


IDENTITY = NormalMonomial()

# canonical ASCII names, in normal order
FIELD_NAMES = ("mu1", "mu2", "nu", "g1", "g2", "w", "d1", "d2", "nab")
FIELD_INDEX = {name: i for i, name in enumerate(FIELD_NAMES)}
INVERTIBLE = frozenset({"g1", "g2", "w"})

ALIASES = {
    "μ1": "mu1", "μ₁": "mu1", "μ2": "mu2", "μ₂": "mu2",
    "ν": "nu",
    "γ1": "g1", "γ₁": "g1", "γ2": "g2", "γ₂": "g2",
    "ω": "w",
    "∂1": "d1", "∂₁": "d1", "∂2": "d2", "∂₂": "d2",
    "∇": "nab",
}


def canonical_name(name: str) -> str:
    name = ALIASES.get(name, name)
    if name not in FIELD_INDEX:
        raise KeyError(name)
    return name


def generator_monomial(name: str, power: int = 1) -> NormalMonomial:
    name = canonical_name(name)
    if power < 0 and name not in INVERTIBLE:
        raise NotInvertibleError(f"{name} is not invertible")
    exps = [0] * 9
    exps[FIELD_INDEX[name]] = power
    return NormalMonomial(*exps)


def format_monomial(m: NormalMonomial) -> str:
    parts = []
    for name, e in zip(FIELD_NAMES, m):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return " ".join(parts) if parts else "1"
