"""The equivariant projection onto monogenics and the Fischer decomposition."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from qhowe.duality.reps import build_sigma_dual
from qhowe.errors import DecompositionError, PreconditionError
from qhowe.qarith import RatQ, quantum_factorial, solve_exact
from qhowe.spinor import SpinorVector, apply, apply_power, weight_exponent
from qhowe.spinor.vector import Key


@lru_cache(maxsize=None)
def projection_coefficient(d: int, j: int) -> RatQ:
    """``[2d-j]! / ([j]! [2d]!)``."""
    return quantum_factorial(2 * d - j) / (quantum_factorial(j) * quantum_factorial(2 * d))


def _require_homogeneous(v: SpinorVector, d: int | None = None) -> int:
    if v.is_zero():
        if d is None:
            raise PreconditionError("cannot infer the degree of the zero vector")
        return d
    deg = v.homogeneous_degree()
    if deg is None:
        raise PreconditionError(f"input is not homogeneous (degrees {sorted(v.degrees())})")
    if d is not None and deg != d:
        raise PreconditionError(f"input has degree {deg}, expected {d}")
    return deg


def project(d: int, v: SpinorVector) -> SpinorVector:
    """``Π_d v = Σ_j c_j E^j F^j v``."""
    if d < 0:
        raise PreconditionError("degree must be nonnegative")
    _require_homogeneous(v, d)
    t = build_sigma_dual()
    out = v
    w = v
    for j in range(1, d + 1):
        w = apply(t.F, w)
        if w.is_zero():
            break
        out = out + apply_power(t.E, w, j).scale(projection_coefficient(d, j))
    return out


def _e_image(key: Key) -> SpinorVector:
    return apply(build_sigma_dual().E, SpinorVector({key: 1}))


def candidate_support(r: SpinorVector, degree: int) -> list[Key]:
    """Degree-``degree`` monomials sharing a ``K_Δ`` weight with ``r``'s support.

    ``E`` preserves that weight, so any preimage lives here.
    """
    weights = {weight_exponent(*k) for k in r.terms}
    out = []
    for e in sorted(weights):
        s = (e - 1) // 2  # a - b + c
        for a in range(degree + 1):
            b = degree - a
            c = s - a + b
            if c >= 0:
                out.append((a, b, c))
    return out


@dataclass(frozen=True)
class Preimage:
    vector: SpinorVector
    unique: bool


def e_preimage(r: SpinorVector, degree: int) -> Preimage:
    """The ``u`` of the given degree with ``E u = r``; raises if none exists."""
    if r.is_zero():
        return Preimage(SpinorVector(), True)
    cols = candidate_support(r, degree)
    images = [_e_image(k) for k in cols]
    rows: dict[Key, int] = {}
    for img in [r, *images]:
        for k in img.terms:
            rows.setdefault(k, len(rows))
    zero = RatQ(0)
    matrix = [[zero] * len(cols) for _ in rows]
    for j, img in enumerate(images):
        for k, c in img.terms.items():
            matrix[rows[k]][j] = c
    rhs = [zero] * len(rows)
    for k, c in r.terms.items():
        rhs[rows[k]] = c
    if not cols:
        raise DecompositionError()
    sol = solve_exact(matrix, rhs)
    return Preimage(SpinorVector(dict(zip(cols, sol.values))), sol.unique)


@dataclass(frozen=True)
class FischerComponents:
    """``v = Σ_k E^k m_{d-k}``; ``components[k]`` is ``m_{d-k}``."""

    degree: int
    components: tuple[SpinorVector, ...]
    preimages_unique: bool = field(default=True, compare=False)

    def component(self, k: int) -> SpinorVector:
        """``m_k``, the monogenic piece of degree ``k``."""
        return self.components[self.degree - k]

    def reconstruct(self) -> SpinorVector:
        E = build_sigma_dual().E
        out = SpinorVector()
        for k, m in enumerate(self.components):
            out = out + apply_power(E, m, k)
        return out

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "components": [
                {"k": self.degree - i, "m": m.to_json(), "text": str(m)} for i, m in enumerate(self.components)
            ],
        }


def fischer_decompose(v: SpinorVector, d: int | None = None) -> FischerComponents:
    d = _require_homogeneous(v, d)
    comps = []
    unique = True
    cur = v
    for k in range(d, -1, -1):
        m = project(k, cur)
        comps.append(m)
        rem = cur - m
        if k == 0:
            if rem:
                raise DecompositionError()
            break
        pre = e_preimage(rem, k - 1)
        unique = unique and pre.unique
        cur = pre.vector
    return FischerComponents(d, tuple(comps), unique)
