"""Named verification suites driven by the ``verify`` subcommand."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Callable

from qhowe.duality import checks
from qhowe.duality.monogenics import check_monogenic_generators, check_weight_multiplicities, monogenic_spanning_set
from qhowe.duality.projection import projection_coefficient
from qhowe.duality.reps import build_sigma_delta, build_sigma_dual, build_sigma_s, build_sigma_w, trivial_triple
from qhowe.qarith import (
    UniPoly,
    check_alternating_binomial_identity,
    check_q_binomial_theorem,
    check_twisted_leibniz,
    divided_difference,
    divided_difference_closed_form,
    quantum_binomial,
    quantum_factorial,
    quantum_int,
    ratq_eval,
)
from qhowe.qweyl import check_defining_relations, check_weyl_identities
from qhowe.report import Report
from qhowe.sampling import DEFAULT_SEED, random_ratq


@dataclass(frozen=True)
class Bounds:
    d_max: int = 6
    n_max: int = 4
    m_max: int = 3
    seed: int = DEFAULT_SEED

    def rng(self, salt: str) -> random.Random:
        # one independent stream per suite keeps suites reproducible in isolation
        return random.Random(f"{self.seed}:{salt}")


def suite_weyl(b: Bounds) -> Report:
    report = Report("weyl")
    report.extend(check_defining_relations())
    report.extend(check_weyl_identities(max(1, b.m_max)))
    return report


def suite_sl2(b: Bounds) -> Report:
    report = Report("sl2")
    for t in (build_sigma_w(), build_sigma_s(), build_sigma_delta(), build_sigma_dual(), trivial_triple()):
        report.extend(checks.check_sl2_relations(t))
    return report


def suite_pair(b: Bounds) -> Report:
    report = Report("pair")
    report.extend(checks.check_commuting_pair())
    rng = b.rng("pair")
    from qhowe.sampling import random_vector

    vectors = [random_vector(rng) for _ in range(3)]
    for d in range(1, min(b.d_max, 4) + 1):
        probes = monogenic_spanning_set(min(d, 2), min(b.n_max, 2))
        for r in range(d + 1):
            report.extend(checks.check_fe_power_lemma(d, r, probes, vectors if r == 0 else ()))
    return report


def suite_adjoint(b: Bounds) -> Report:
    report = Report("adjoint")
    report.extend(checks.check_adjoint_table())
    report.extend(checks.check_ad_F_powers())
    return report


def suite_projector(b: Bounds) -> Report:
    report = Report("projector")
    report.extend(check_monogenic_generators(max(b.d_max, 10)))
    report.extend(checks.check_projector(b.d_max, b.n_max, b.rng("projector")))
    for d in range(b.d_max + 1):
        report.extend(check_weight_multiplicities(d, range(-2 * d - 7, 2 * d + 12)))
    return report


def suite_fischer(b: Bounds) -> Report:
    report = Report("fischer")
    report.extend(checks.check_fischer(min(b.d_max, 5), b.rng("fischer")))
    report.record(
        "decompose p+(d) = (p+(d), 0, ..., 0)",
        passed=_fischer_trivial_case(b.d_max),
    )
    return report


def _fischer_trivial_case(d_max: int) -> bool:
    from qhowe.duality.monogenics import p_plus
    from qhowe.duality.projection import fischer_decompose

    for d in range(d_max + 1):
        fc = fischer_decompose(p_plus(d))
        if fc.components[0] != p_plus(d) or any(m for m in fc.components[1:]):
            return False
    return True


def suite_symmetries(b: Bounds) -> Report:
    report = Report("symmetries")
    report.extend(checks.check_ad_F_powers())
    report.extend(checks.check_symmetries(b.d_max, b.n_max))
    report.extend(checks.check_z1_projection(min(b.d_max, 4), min(b.n_max, 3)))
    return report


def suite_qcalculus(b: Bounds) -> Report:
    report = Report("qcalculus")
    for n in range(13):
        report.record("q-binomial theorem", passed=check_q_binomial_theorem(n), n=n)
    for N in range(1, 11):
        for n in range(1, N + 1):
            for j in range(n):
                report.record("alternating binomial identity", passed=check_alternating_binomial_identity(N, n, j), N=N, n=n, j=j)
    for m in range(7):
        for j in range(m + 1):
            x_m = UniPoly.monomial(m)
            report.record("divided difference closed form", passed=divided_difference(x_m, j) == divided_difference_closed_form(m, j), m=m, j=j)
    rng = b.rng("qcalculus")
    for i in range(10):
        phi = UniPoly({e: random_ratq(rng) for e in range(rng.randint(0, 3) + 1)})
        psi = UniPoly({e: random_ratq(rng) for e in range(rng.randint(0, 3) + 1)})
        report.record("twisted Leibniz rule", passed=check_twisted_leibniz(phi, psi), sample=i)
    report.extend(classical_limit_report())
    return report


def classical_limit_report() -> Report:
    report = Report("classical limit at q = 1")
    for n in range(10):
        report.record("[n] -> n", passed=ratq_eval(quantum_int(n), 1) == n, n=n)
        report.record("[n]! -> n!", passed=ratq_eval(quantum_factorial(n), 1) == factorial(n), n=n)
        for m in range(n + 1):
            report.record("[n over m] -> C(n, m)", passed=ratq_eval(quantum_binomial(n, m), 1) == comb(n, m), n=n, m=m)
    report.record("Pi_1 coefficient 1/[2] -> 1/2", passed=ratq_eval(projection_coefficient(1, 1), 1) == Fraction(1, 2))
    for d in range(1, 5):
        for j in range(d + 1):
            classical = Fraction(factorial(2 * d - j), factorial(j) * factorial(2 * d))
            report.record("Pi_d coefficient -> classical", passed=ratq_eval(projection_coefficient(d, j), 1) == classical, d=d, j=j)
    return report


SUITES: dict[str, Callable[[Bounds], Report]] = {
    "weyl": suite_weyl,
    "sl2": suite_sl2,
    "pair": suite_pair,
    "adjoint": suite_adjoint,
    "projector": suite_projector,
    "fischer": suite_fischer,
    "symmetries": suite_symmetries,
    "qcalculus": suite_qcalculus,
}


def run_suite(name: str, bounds: Bounds | None = None) -> Report:
    bounds = bounds or Bounds()
    if name == "all":
        report = Report("all")
        for fn in SUITES.values():
            report.extend(fn(bounds))
        return report
    try:
        fn = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}") from None
    return fn(bounds)


__all__ = ["Bounds", "SUITES", "classical_limit_report", "run_suite"]
