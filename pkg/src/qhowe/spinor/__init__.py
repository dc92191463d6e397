"""Polynomial symplectic spinors and the operator action on them."""

from qhowe.spinor.action import ONE_VECTOR, ZERO_VECTOR, apply, apply_power
from qhowe.spinor.vector import (
    SpinorVector,
    degree_component,
    parity_component,
    weight_component,
    weight_exponent,
)

__all__ = [
    "ONE_VECTOR",
    "ZERO_VECTOR",
    "SpinorVector",
    "apply",
    "apply_power",
    "degree_component",
    "parity_component",
    "weight_component",
    "weight_exponent",
]
