"""Exact checks of the basic q-Weyl commutation identities.

Indices ``i, j`` range over the three rank-one factors (``3`` is the spinor
factor with ``nu``, ``w``, ``nab``); mixed identities use distinct pairs.
"""

from __future__ import annotations

from itertools import permutations

from qhowe.qarith import RatQ, quantum_int
from qhowe.qweyl.algebra import (
    AlgebraElement,
    brace,
    generator,
    shifted_derivative,
    twisted_commutator,
)
from qhowe.report import Report

q = RatQ.q
FACTORS = {1: ("mu1", "g1", "d1"), 2: ("mu2", "g2", "d2"), 3: ("nu", "w", "nab")}


def _mu(j: int) -> AlgebraElement:
    return generator(FACTORS[j][0])


def _g(j: int, power: int = 1) -> AlgebraElement:
    return generator(FACTORS[j][1], power)


def _d(j: int) -> AlgebraElement:
    return generator(FACTORS[j][2])


def _dq(j: int, m: int) -> AlgebraElement:
    return shifted_derivative(j, m)


def single_factor_identities(j: int, m: int, s: int) -> dict[str, tuple[AlgebraElement, AlgebraElement]]:
    """(lhs, rhs) pairs for one factor; ``s = ±1`` selects the sign."""
    two = quantum_int(2)
    out = {
        "[d_j, mu_j^2]_{q^(2s)} = q^s [2] g_j^(-s) mu_j": (
            twisted_commutator(_d(j), _mu(j) ** 2, q(2 * s)),
            (_g(j, -s) * _mu(j)).scale(q(s) * two),
        ),
        "[d_j^2, mu_j]_{q^(2s)} = [2] g_j^(-s) d_j": (
            twisted_commutator(_d(j) ** 2, _mu(j), q(2 * s)),
            (_g(j, -s) * _d(j)).scale(two),
        ),
    }
    if m >= 1:
        out[f"[d_(j,q^{m}), mu_j]_(q^(ms)) = g_j^(-ms)"] = (
            twisted_commutator(_dq(j, m), _mu(j), q(m * s)),
            _g(j, -m * s),
        )
    return out


def pair_identities(i: int, j: int, m: int, s: int) -> dict[str, tuple[AlgebraElement, AlgebraElement]]:
    """(lhs, rhs) pairs for distinct factors ``i != j``."""
    two_inv = quantum_int(2).inverse()
    pref = (q(1) - q(-1)).inverse() * s
    gi, gj = (lambda p: _g(i, p)), (lambda p: _g(j, p))
    out = {}
    if s == 1:
        out[f"[mu_i d_(j,q^{m}), mu_j d_(i,q^{m})] = {{(g_i g_j^-1)^{m}}}_(q^{m})"] = (
            twisted_commutator(_mu(i) * _dq(j, m), _mu(j) * _dq(i, m), RatQ(1)),
            brace(gi(m) * gj(-m), m),
        )
        out[f"[d_(i,q^{m}) d_(j,q^{m}), mu_i mu_j] = {{(q g_i g_j)^{m}}}_(q^{m})"] = (
            twisted_commutator(_dq(i, m) * _dq(j, m), _mu(i) * _mu(j), RatQ(1)),
            brace((gi(m) * gj(m)).scale(q(m)), m),
        )
    rhs6 = (
        (gi(2 * s) * gj(-s)).scale(q(s))
        - (gi(2 * s) * gj(s)).scale(q(2 * s) * two_inv)
        - (gi(-2 * s) * gj(s)).scale(two_inv)
    ).scale(pref)
    out["[mu_i d_j, mu_j d_(i,q^2)]_(q^s)"] = (
        twisted_commutator(_mu(i) * _d(j), _mu(j) * _dq(i, 2), q(s)),
        rhs6,
    )
    # last term read with plain gamma_j
    rhs7 = (
        (gi(2 * s) * gj(s)).scale(q(2 * s) * two_inv)
        + (gi(-2 * s) * gj(s)).scale(two_inv)
        - (gi(-2 * s) * gj(-s)).scale(q(-s))
    ).scale(pref)
    out["[d_(i,q^2) d_j, mu_i mu_j]_(q^s)"] = (
        twisted_commutator(_dq(i, 2) * _d(j), _mu(i) * _mu(j), q(s)),
        rhs7,
    )
    return out


def check_weyl_identities(m_max: int = 3) -> Report:
    if m_max < 1:
        raise ValueError("m_max must be a positive integer")
    report = Report(f"q-Weyl identities, m <= {m_max}")
    for m in range(1, m_max + 1):
        for s in (1, -1):
            for j in FACTORS:
                ids = single_factor_identities(j, m, s) if m == 1 else {
                    k: v for k, v in single_factor_identities(j, m, s).items() if k.startswith("[d_(j")
                }
                for name, (lhs, rhs) in ids.items():
                    report.record(name, lhs - rhs, j=j, m=m, sign="+" if s > 0 else "-")
            for i, j in permutations(FACTORS, 2):
                ids = pair_identities(i, j, m, s)
                if m > 1:
                    # the mixed identities do not depend on m
                    ids = {k: v for k, v in ids.items() if "q^" + str(m) in k}
                for name, (lhs, rhs) in ids.items():
                    report.record(name, lhs - rhs, i=i, j=j, m=m, sign="+" if s > 0 else "-")
    return report


def check_defining_relations() -> Report:
    """Generator relations, with both signs of the mixed relation and tensor commutativity."""
    report = Report("defining relations")
    one = AlgebraElement.scalar(1)
    for j in FACTORS:
        mu, d = _mu(j), _d(j)
        report.record("g_j g_j^-1 = 1", _g(j) * _g(j, -1) - one, j=j)
        report.record("g_j mu_j g_j^-1 = q mu_j", _g(j) * mu * _g(j, -1) - mu.scale(q(1)), j=j)
        report.record("g_j d_j g_j^-1 = q^-1 d_j", _g(j) * d * _g(j, -1) - d.scale(q(-1)), j=j)
        report.record("[d_j, mu_j]_q = g_j^-1", twisted_commutator(d, mu, q(1)) - _g(j, -1), j=j)
        report.record("[d_j, mu_j]_(q^-1) = g_j", twisted_commutator(d, mu, q(-1)) - _g(j), j=j)
        report.record("mu_j d_j = {g_j}_q", mu * d - brace(_g(j)), j=j)
    for i, j in permutations(FACTORS, 2):
        for x in FACTORS[i]:
            for y in FACTORS[j]:
                a, b = generator(x), generator(y)
                report.record(f"[{x}, {y}] = 0", a * b - b * a)
    return report
