"""The operator algebra W_q(2) ⊗ C_{s,q}: normal forms, products, named constructions."""

from qhowe.qweyl.algebra import (
    ONE_ELEMENT,
    ZERO_ELEMENT,
    AlgebraElement,
    brace,
    commutator,
    format_element,
    gamma_integer,
    generator,
    multiply,
    shifted_derivative,
    sum_elements,
    twisted_commutator,
)
from qhowe.qweyl.identities import check_defining_relations, check_weyl_identities
from qhowe.qweyl.monomial import IDENTITY, NormalMonomial, format_monomial

__all__ = [
    "IDENTITY",
    "ONE_ELEMENT",
    "ZERO_ELEMENT",
    "AlgebraElement",
    "NormalMonomial",
    "brace",
    "check_defining_relations",
    "check_weyl_identities",
    "commutator",
    "format_element",
    "format_monomial",
    "gamma_integer",
    "generator",
    "multiply",
    "shifted_derivative",
    "sum_elements",
    "twisted_commutator",
]
