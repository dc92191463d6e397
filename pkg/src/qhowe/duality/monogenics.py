"""Lowest-weight monogenic spinors and spanning sets of ``ker F``."""

from __future__ import annotations

from collections import Counter

from qhowe.duality.reps import build_sigma_delta
from qhowe.errors import PreconditionError
from qhowe.qarith import RatQ, quantum_binomial, quantum_int, quantum_odd_double_factorial
from qhowe.report import Report
from qhowe.spinor import SpinorVector, apply

q = RatQ.q


def _check_degree(d: int) -> None:
    if not isinstance(d, int) or d < 0:
        raise PreconditionError(f"degree must be a nonnegative integer, got {d!r}")


def p_plus(d: int) -> SpinorVector:
    """``x2^d ⊗ 1``."""
    _check_degree(d)
    return SpinorVector.monomial(0, d, 0)


def p_minus_coefficient(d: int, b: int) -> RatQ:
    """Closed-form coefficient of ``x1^(d-b) x2^b ⊗ y^(2b+1)`` in ``p_-(d)``."""
    return quantum_binomial(d, b, 2) * q(2 * b * (d - b - 1)) / quantum_odd_double_factorial(b)


def p_minus(d: int) -> SpinorVector:
    _check_degree(d)
    return SpinorVector({(d - b, b, 2 * b + 1): p_minus_coefficient(d, b) for b in range(d + 1)})


def p_minus_by_recurrence(d: int) -> SpinorVector:
    """``c_b = [d-b+1]_{q^2} / ([b]_{q^2} [2b+1]) * q^(2d-4b) * c_{b-1}``, ``c_0 = 1``."""
    _check_degree(d)
    coeffs = {(d, 0, 1): RatQ(1)}
    c = RatQ(1)
    for b in range(1, d + 1):
        c = c * quantum_int(d - b + 1, 2) * q(2 * d - 4 * b) / (quantum_int(b, 2) * quantum_int(2 * b + 1))
        coeffs[(d - b, b, 2 * b + 1)] = c
    return SpinorVector(coeffs)


def monogenic_spanning_set(d: int, n_max: int) -> list[SpinorVector]:
    """Nonzero vectors ``E_Δ^n p_±(d)`` for ``0 <= n <= n_max``."""
    _check_degree(d)
    E = build_sigma_delta().E
    out = []
    for seed in (p_plus(d), p_minus(d)):
        v = seed
        for _ in range(n_max + 1):
            if v.is_zero():
                break
            out.append(v)
            v = apply(E, v)
    return out


# -- weight bookkeeping ------------------------------------------------------

def lowest_weight_exponents(d: int, parity: str) -> list[int]:
    """Lowest ``K_Δ`` exponents of the irreducible summands of the ``±`` part."""
    _check_degree(d)
    base = {"+": 1, "-": 3}[parity]
    return [base - 2 * d + 4 * i for i in range(d + 1)]


def predicted_multiplicity(d: int, parity: str, e: int) -> int:
    return sum(1 for low in lowest_weight_exponents(d, parity) if low <= e and (e - low) % 4 == 0)


def counted_multiplicities(d: int, parity: str, c_max: int) -> Counter:
    """Monomials ``(a, b, c)`` with ``a + b = d``, ``c <= c_max`` of given parity, by weight."""
    counts: Counter = Counter()
    want = 0 if parity == "+" else 1
    for a in range(d + 1):
        b = d - a
        for c in range(want, c_max + 1, 2):
            counts[2 * (a - b + c) + 1] += 1
    return counts


def check_weight_multiplicities(d: int, e_window: range | list[int]) -> Report:
    _check_degree(d)
    window = [e for e in e_window if e % 2]
    report = Report(f"weight multiplicities, d={d}")
    if not window:
        return report
    # monomials with weight <= max(window) have c bounded by this
    c_max = max(0, (max(window) - 1) // 2 + d)
    for parity in "+-":
        counts = counted_multiplicities(d, parity, c_max)
        for e in window:
            predicted = predicted_multiplicity(d, parity, e)
            found = counts.get(e, 0)
            report.record(
                "weight multiplicity",
                f"counted {found}, predicted {predicted}",
                passed=found == predicted,
                d=d,
                part=parity,
                e=e,
            )
    return report


def check_monogenic_generators(d_max: int) -> Report:
    """``F`` and ``F_Δ`` annihilate ``p_±(d)``; closed form agrees with the recurrence."""
    from qhowe.duality.reps import build_sigma_dual

    F = build_sigma_dual().F
    Fd = build_sigma_delta().F
    report = Report("monogenic generators")
    for d in range(d_max + 1):
        for name, v in (("p+", p_plus(d)), ("p-", p_minus(d))):
            report.record(f"F {name} = 0", apply(F, v), d=d)
            report.record(f"F_delta {name} = 0", apply(Fd, v), d=d)
        report.record("p- closed form = recurrence", p_minus(d) - p_minus_by_recurrence(d), d=d)
    return report
