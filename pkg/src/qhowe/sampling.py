"""Seeded random inputs for randomized checks."""

from __future__ import annotations

import random

from qhowe.qarith import RatQ
from qhowe.qweyl import AlgebraElement, NormalMonomial
from qhowe.spinor import SpinorVector

DEFAULT_SEED = 20240611


def random_ratq(rng: random.Random, max_coeff: int = 3, max_shift: int = 3) -> RatQ:
    """Small nonzero Laurent polynomial, occasionally divided by ``[2]`` or ``[3]``."""
    from qhowe.qarith import quantum_int

    terms = {}
    for _ in range(rng.randint(1, 2)):
        c = rng.randint(-max_coeff, max_coeff) or 1
        terms[rng.randint(-max_shift, max_shift)] = c
    x = RatQ.laurent(terms)
    if not x:
        x = RatQ(1)
    roll = rng.random()
    if roll < 0.2:
        x = x / quantum_int(2)
    elif roll < 0.3:
        x = x / quantum_int(3)
    return x


def random_homogeneous_vector(rng: random.Random, d: int, c_max: int = 6, n_terms: int = 4) -> SpinorVector:
    terms = {}
    for _ in range(n_terms):
        a = rng.randint(0, d)
        terms[(a, d - a, rng.randint(0, c_max))] = random_ratq(rng)
    v = SpinorVector(terms)
    return v if v else SpinorVector({(d, 0, 0): 1})


def random_vector(rng: random.Random, max_exp: int = 3, n_terms: int = 3) -> SpinorVector:
    terms = {
        (rng.randint(0, max_exp), rng.randint(0, max_exp), rng.randint(0, max_exp)): random_ratq(rng)
        for _ in range(n_terms)
    }
    return SpinorVector(terms)


def random_monomial(rng: random.Random, max_exp: int = 3) -> NormalMonomial:
    exps = []
    for i in range(9):
        if 3 <= i <= 5:
            exps.append(rng.randint(-max_exp, max_exp))
        else:
            exps.append(rng.randint(0, max_exp))
    return NormalMonomial(*exps)


def random_element(rng: random.Random, max_exp: int = 2, n_terms: int = 2) -> AlgebraElement:
    out = AlgebraElement.scalar(0)
    for _ in range(n_terms):
        out = out + AlgebraElement.monomial(random_monomial(rng, max_exp), random_ratq(rng))
    return out
