"""Exact ℚ(q) arithmetic and q-combinatorics."""

from qhowe.qarith.field import ONE, Q, ZERO, QPoly, RatQ, as_ratq, format_ratq
from qhowe.qarith.qcalc import (
    UniPoly,
    alternating_binomial_sum,
    check_alternating_binomial_identity,
    check_q_binomial_theorem,
    check_twisted_leibniz,
    divided_difference,
    divided_difference_closed_form,
    product,
    quantum_binomial,
    quantum_factorial,
    quantum_falling,
    quantum_int,
    quantum_odd_double_factorial,
    ratq_eval,
)
from qhowe.qarith.linalg import solve_exact

__all__ = [
    "ONE",
    "Q",
    "ZERO",
    "QPoly",
    "RatQ",
    "UniPoly",
    "alternating_binomial_sum",
    "as_ratq",
    "check_alternating_binomial_identity",
    "check_q_binomial_theorem",
    "check_twisted_leibniz",
    "divided_difference",
    "divided_difference_closed_form",
    "format_ratq",
    "product",
    "quantum_binomial",
    "quantum_factorial",
    "quantum_falling",
    "quantum_int",
    "quantum_odd_double_factorial",
    "ratq_eval",
    "solve_exact",
]
