"""Polynomial symplectic spinors ``x1^a x2^b ⊗ y^c`` with ℚ(q) coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

from qhowe.qarith import ZERO, RatQ, as_ratq

Key = tuple[int, int, int]
Scalar = Union[RatQ, int, Fraction]


class SpinorVector:
    """Finitely supported map ``(a, b, c) -> RatQ``; immutable."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Key, Scalar] | None = None):
        clean: dict[Key, RatQ] = {}
        for key, c in (terms or {}).items():
            a, b, cc = key
            if min(a, b, cc) < 0:
                raise ValueError(f"negative exponent in {key}")
            c = as_ratq(c)
            if c:
                clean[(a, b, cc)] = clean.get((a, b, cc), ZERO) + c
        self.terms: dict[Key, RatQ] = {k: v for k, v in clean.items() if v}

    @classmethod
    def _from_clean(cls, terms: dict) -> SpinorVector:
        obj = object.__new__(cls)
        obj.terms = terms
        return obj

    @classmethod
    def monomial(cls, a: int, b: int, c: int, coeff: Scalar = 1) -> SpinorVector:
        return cls({(a, b, c): coeff})

    def __iter__(self) -> Iterator[tuple[Key, RatQ]]:
        return iter(sorted(self.terms.items(), reverse=True))

    def __len__(self) -> int:
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coefficient(self, a: int, b: int, c: int) -> RatQ:
        return self.terms.get((a, b, c), ZERO)

    def __add__(self, other: SpinorVector) -> SpinorVector:
        if not isinstance(other, SpinorVector):
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k)
            if v is None:
                out[k] = c
            else:
                v = v + c
                if v:
                    out[k] = v
                else:
                    del out[k]
        return SpinorVector._from_clean(out)

    def __neg__(self) -> SpinorVector:
        return SpinorVector._from_clean({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: SpinorVector) -> SpinorVector:
        if not isinstance(other, SpinorVector):
            return NotImplemented
        return self + (-other)

    def scale(self, c: Scalar) -> SpinorVector:
        c = as_ratq(c)
        if not c:
            return SpinorVector()
        return SpinorVector._from_clean({k: v * c for k, v in self.terms.items()})

    def __mul__(self, c: Scalar) -> SpinorVector:
        if isinstance(c, (RatQ, int, Fraction)):
            return self.scale(c)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SpinorVector):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    # -- gradings ------------------------------------------------------------

    def degrees(self) -> set[int]:
        return {a + b for a, b, _ in self.terms}

    def homogeneous_degree(self) -> int | None:
        """The common ``a + b`` of all terms, or None if zero or inhomogeneous."""
        degs = self.degrees()
        return degs.pop() if len(degs) == 1 else None

    def is_homogeneous(self, d: int | None = None) -> bool:
        degs = self.degrees()
        if d is None:
            return len(degs) <= 1
        return degs <= {d}

    def filter(self, predicate) -> SpinorVector:
        return SpinorVector._from_clean({k: c for k, c in self.terms.items() if predicate(k)})

    def __str__(self) -> str:
        from qhowe.spinor.text import format_spinor

        return format_spinor(self)

    def __repr__(self) -> str:
        return f"SpinorVector({str(self)!r})"

    def to_json(self) -> list:
        return [[a, b, c, v.to_json()] for (a, b, c), v in self]

    @classmethod
    def from_json(cls, data: Iterable) -> SpinorVector:
        return cls({(int(a), int(b), int(c)): RatQ.from_json(v) for a, b, c, v in data})


def weight_exponent(a: int, b: int, c: int) -> int:
    """``e`` such that the diagonal ``K`` acts on ``x1^a x2^b ⊗ y^c`` by ``q^e``."""
    return 2 * (a - b + c) + 1


def degree_component(v: SpinorVector, d: int) -> SpinorVector:
    return v.filter(lambda k: k[0] + k[1] == d)


def weight_component(v: SpinorVector, e: int) -> SpinorVector:
    return v.filter(lambda k: weight_exponent(*k) == e)


def parity_component(v: SpinorVector, sign: str) -> SpinorVector:
    """``+`` keeps even powers of ``y``, ``-`` keeps odd powers."""
    if sign not in ("+", "-"):
        raise ValueError("sign must be '+' or '-'")
    parity = 0 if sign == "+" else 1
    return v.filter(lambda k: k[2] % 2 == parity)
