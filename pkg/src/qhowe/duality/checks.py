"""Exact verification routines for the duality constructions."""

from __future__ import annotations

import random
from typing import Iterable, Sequence

from qhowe.duality.monogenics import monogenic_spanning_set, p_minus, p_plus
from qhowe.duality.projection import fischer_decompose, project
from qhowe.duality.reps import (
    Sl2Triple,
    ad_F_powers_of_mu1,
    adjoint,
    build_sigma_delta,
    build_sigma_dual,
    build_Z1,
    build_Z2,
    dq2,
)
from qhowe.errors import PreconditionError
from qhowe.qarith import RatQ, product, quantum_factorial, quantum_int
from qhowe.qweyl import AlgebraElement, brace, commutator, generator
from qhowe.report import Report
from qhowe.spinor import SpinorVector, apply, apply_power

q = RatQ.q


def check_sl2_relations(t: Sl2Triple) -> Report:
    p = t.param_exponent
    Kinv = t.K_inv
    report = Report(f"U_(q^{p})(sl2) relations for {t.name or 'triple'}")
    report.record("K K^-1 = 1 = K^-1 K", (t.K * Kinv - 1) + (Kinv * t.K - 1), triple=t.name, p=p)
    report.record("K E K^-1 = q^(2p) E", t.K * t.E * Kinv - t.E.scale(q(2 * p)), triple=t.name, p=p)
    report.record("K F K^-1 = q^(-2p) F", t.K * t.F * Kinv - t.F.scale(q(-2 * p)), triple=t.name, p=p)
    report.record("[E, F] = {K}_(q^p)", commutator(t.E, t.F) - brace(t.K, p), triple=t.name, p=p)
    return report


def check_commuting_pair() -> Report:
    a = build_sigma_delta()
    b = build_sigma_dual()
    report = Report("sigma_delta commutes with sigma")
    left = {"E_delta": a.E, "F_delta": a.F, "K_delta": a.K}
    right = {"E": b.E, "F": b.F, "K": b.K}
    for ln, x in left.items():
        for rn, y in right.items():
            report.record(f"[{ln}, {rn}] = 0", commutator(x, y))
    report.record("K_delta E K_delta^-1 = E", a.K * b.E * a.K_inv - b.E)
    report.record("K_delta F K_delta^-1 = F", a.K * b.F * a.K_inv - b.F)
    report.record("K E_delta K^-1 = E_delta", b.K * a.E * b.K_inv - a.E)
    report.record("K F_delta K^-1 = F_delta", b.K * a.F * b.K_inv - a.F)
    return report


def check_fe_power_lemma(
    d: int,
    r: int,
    probes: Sequence[SpinorVector],
    vectors: Iterable[SpinorVector] = (),
) -> Report:
    """``[E^d, F] = E^(d-1) [d] {q^(d-1) K}`` on ``vectors`` (and the probes), and
    ``F^r E^d m = (-1)^r [d]!/[d-r]! E^(d-r) Π_l {q^(d-l) K} m`` on probes in ``ker F``."""
    if d < 1 or not 0 <= r <= d:
        raise PreconditionError("need d >= 1 and 0 <= r <= d")
    t = build_sigma_dual()
    for m in probes:
        if apply(t.F, m):
            raise PreconditionError("probe is not annihilated by F")
    report = Report(f"F/E power identities, d={d}, r={r}")
    bracket_coeff = quantum_int(d)
    shifted = brace(t.K.scale(q(d - 1)))
    for i, v in enumerate([*probes, *vectors]):
        lhs = apply_power(t.E, apply(t.F, v), d) - apply(t.F, apply_power(t.E, v, d))
        rhs = apply_power(t.E, apply(shifted, v), d - 1).scale(bracket_coeff)
        report.record("[E^d, F] = E^(d-1) [d] {q^(d-1) K}", lhs - rhs, d=d, vector=i)
    coeff = quantum_factorial(d) / quantum_factorial(d - r)
    if r % 2:
        coeff = -coeff
    for i, m in enumerate(probes):
        lhs = apply_power(t.F, apply_power(t.E, m, d), r)
        w = m
        for ell in range(1, r + 1):
            w = apply(brace(t.K.scale(q(d - ell))), w)
        rhs = apply_power(t.E, w, d - r).scale(coeff)
        report.record("F^r E^d m = (-1)^r [d]!/[d-r]! E^(d-r) prod {q^(d-l) K} m", lhs - rhs, d=d, r=r, probe=i)
    return report


# -- adjoint table -----------------------------------------------------------

def adjoint_table() -> list[tuple[str, str, AlgebraElement, AlgebraElement]]:
    """Rows ``(x, label, A, expected ad_x(A))`` for the diagonal action."""
    mu1 = generator("mu1")
    g1mu2 = generator("g1", 2) * generator("mu2")
    d2 = dq2(2)
    g2d1 = generator("g2", -2) * dq2(1)
    cols = [("mu1", mu1), ("g1^2 mu2", g1mu2), ("dq2_2", d2), ("g2^-2 dq2_1", g2d1)]
    expected = {
        "k": [mu1.scale(q(2)), g1mu2.scale(q(-2)), d2.scale(q(2)), g2d1.scale(q(-2))],
        "e": [AlgebraElement.scalar(0), mu1, AlgebraElement.scalar(0), d2.scale(-q(2))],
        "f": [g1mu2, AlgebraElement.scalar(0), g2d1.scale(-q(-2)), AlgebraElement.scalar(0)],
    }
    rows = []
    for x in ("k", "e", "f"):
        for (label, A), want in zip(cols, expected[x]):
            rows.append((x, label, A, want))
    return rows


def check_adjoint_table() -> Report:
    t = build_sigma_delta()
    report = Report("adjoint action of the diagonal triple")
    for x, label, A, want in adjoint_table():
        report.record(f"ad_{x.upper()}_delta({label})", adjoint(x, t, A) - want)
    return report


def check_ad_F_powers() -> Report:
    a1, a2, a3 = ad_F_powers_of_mu1()
    two = q(2) - 1
    expected2 = (generator("g1", 2) * dq2(1) * generator("nu", 2)).scale(two) - generator("w", 2) * dq2(2)
    report = Report("ad_F powers of mu1")
    report.record("ad_F(mu1) = g1^2 nu", a1 - generator("g1", 2) * generator("nu"))
    report.record("ad_F^2(mu1) = (q^2-1) g1^2 dq2_1 nu^2 - w^2 dq2_2", a2 - expected2)
    report.record("ad_F^3(mu1) = 0", a3)
    return report


# -- symmetries --------------------------------------------------------------

def symmetry_operators() -> dict[str, tuple[AlgebraElement, int]]:
    """Name -> (operator, degree shift)."""
    return {
        "dq2_2": (dq2(2), -1),
        "g2^-2 dq2_1": (generator("g2", -2) * dq2(1), -1),
        "Z1": (build_Z1(), 1),
        "Z2": (build_Z2(), 1),
    }


def check_symmetries(d_max: int, n_max: int) -> Report:
    F = build_sigma_dual().F
    ops = symmetry_operators()
    report = Report(f"generalized symmetries, d <= {d_max}, n <= {n_max}")
    for d in range(d_max + 1):
        for i, m in enumerate(monogenic_spanning_set(d, n_max)):
            for name, (T, shift) in ops.items():
                img = apply(T, m)
                report.record(f"F {name} m = 0", apply(F, img), d=d, probe=i)
                ok = img.is_zero() or img.is_homogeneous(d + shift)
                report.record(
                    f"{name} m has degree d{shift:+d}", None if ok else f"degrees {sorted(img.degrees())}",
                    passed=ok, d=d, probe=i,
                )
    return report


def check_z1_projection(d_max: int, n_max: int) -> Report:
    """``Z1 m = [2][2d+2][2d+1] Π_{d+1}(mu1 m)`` on monogenics."""
    Z1 = build_Z1()
    mu1 = generator("mu1")
    report = Report("Z1 versus projected multiplication")
    for d in range(d_max + 1):
        c = product([quantum_int(2), quantum_int(2 * d + 2), quantum_int(2 * d + 1)])
        for i, m in enumerate(monogenic_spanning_set(d, n_max)):
            report.record("Z1 m = [2][2d+2][2d+1] Pi(mu1 m)", apply(Z1, m) - project(d + 1, apply(mu1, m)).scale(c), d=d, probe=i)
    return report


# -- projector / Fischer -------------------------------------------------------

def check_projector(d_max: int, n_max: int, rng: random.Random, samples: int = 20) -> Report:
    from qhowe.sampling import random_homogeneous_vector

    t = build_sigma_dual()
    report = Report(f"projection onto monogenics, d <= {d_max}")
    for d in range(d_max + 1):
        for i, m in enumerate(monogenic_spanning_set(d, n_max)):
            report.record("Pi m = m", project(d, m) - m, d=d, probe=i)
        for j in range(1, d + 1):
            for i, m in enumerate(monogenic_spanning_set(d - j, min(n_max, 3))):
                report.record("Pi E^j m = 0", project(d, apply_power(t.E, m, j)), d=d, j=j, probe=i)
        for i in range(samples):
            v = random_homogeneous_vector(rng, d)
            pv = project(d, v)
            report.record("Pi Pi v = Pi v", project(d, pv) - pv, d=d, sample=i)
            report.record("F Pi v = 0", apply(t.F, pv), d=d, sample=i)
    return report


def check_fischer(d_max: int, rng: random.Random, samples: int = 20, c_max: int = 6) -> Report:
    from qhowe.sampling import random_homogeneous_vector

    F = build_sigma_dual().F
    report = Report(f"Fischer decomposition, d <= {d_max}")
    for d in range(d_max + 1):
        for i in range(samples):
            v = random_homogeneous_vector(rng, d, c_max)
            fc = fischer_decompose(v)
            report.record("reconstruction = input", fc.reconstruct() - v, d=d, sample=i)
            bad = [k for k, m in enumerate(fc.components) if apply(F, m)]
            report.record("components in ker F", f"components {bad}" if bad else None, d=d, sample=i)
            report.record("E-preimages unique", None if fc.preimages_unique else "rank deficient", passed=fc.preimages_unique, d=d, sample=i)
    return report


def check_generators(d_max: int) -> Report:
    from qhowe.duality.monogenics import check_monogenic_generators

    return check_monogenic_generators(d_max)


__all__ = [
    "adjoint_table",
    "check_ad_F_powers",
    "check_adjoint_table",
    "check_commuting_pair",
    "check_fe_power_lemma",
    "check_fischer",
    "check_generators",
    "check_projector",
    "check_sl2_relations",
    "check_symmetries",
    "check_z1_projection",
    "symmetry_operators",
    "p_plus",
    "p_minus",
]
