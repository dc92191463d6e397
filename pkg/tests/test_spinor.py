from __future__ import annotations

import json
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import act_element, specialize_vector
from qhowe.expr import parse_spinor
from qhowe.qarith import RatQ, quantum_int
from qhowe.qweyl import generator, shifted_derivative
from qhowe.sampling import random_element, random_vector
from qhowe.spinor import (
    ONE_VECTOR,
    SpinorVector,
    apply,
    apply_power,
    degree_component,
    parity_component,
    weight_component,
    weight_exponent,
)

q = RatQ.q
g = generator

keys = st.tuples(st.integers(0, 4), st.integers(0, 4), st.integers(0, 5))
vectors = st.dictionaries(keys, st.integers(-4, 4).filter(bool), max_size=5).map(SpinorVector)


class TestVector:
    def test_zero_terms_dropped(self):
        v = SpinorVector({(1, 0, 0): 1, (0, 1, 0): 0})
        assert len(v) == 1 and v.coefficient(0, 1, 0) == 0

    def test_negative_exponent_rejected(self):
        with pytest.raises(ValueError):
            SpinorVector({(-1, 0, 0): 1})

    @given(vectors, vectors)
    def test_group_laws(self, a, b):
        assert a + b == b + a
        assert (a - a).is_zero()
        assert a.scale(2) == a + a

    def test_degrees(self):
        v = SpinorVector({(1, 2, 0): 1, (0, 3, 5): 2, (1, 0, 1): 1})
        assert v.degrees() == {3, 1}
        assert not v.is_homogeneous()
        assert degree_component(v, 3) == SpinorVector({(1, 2, 0): 1, (0, 3, 5): 2})
        assert degree_component(v, 3).homogeneous_degree() == 3

    def test_parity_and_weight(self):
        v = SpinorVector({(1, 0, 1): 1, (0, 1, 3): 1, (1, 0, 2): 1})
        assert parity_component(v, "+") == SpinorVector({(1, 0, 2): 1})
        assert parity_component(v, "-") == SpinorVector({(1, 0, 1): 1, (0, 1, 3): 1})
        assert weight_exponent(1, 0, 1) == 5 == weight_exponent(0, 1, 3)
        assert weight_component(v, 5) == parity_component(v, "-")

    def test_rendering(self):
        v = SpinorVector({(1, 0, 1): 1, (0, 1, 3): q(-2) / quantum_int(3)})
        assert str(v) == "x1 y + (q^-2/(q^2+1+q^-2)) x2 y^3"
        assert str(SpinorVector()) == "0"
        assert str(SpinorVector({(0, 0, 0): -2, (2, 0, 0): q(1) + q(-1)})) == "(q + q^-1) x1^2 - 2"

    @given(vectors)
    def test_text_round_trip(self, v):
        assert parse_spinor(str(v)) == v

    def test_json_round_trip(self):
        v = SpinorVector({(1, 0, 1): q(-2) / quantum_int(3), (0, 0, 0): 7})
        assert SpinorVector.from_json(json.loads(json.dumps(v.to_json()))) == v


class TestAction:
    @pytest.mark.parametrize("n", range(0, 6))
    def test_generators_on_monomials(self, n):
        x = SpinorVector.monomial(n, 0, 0)
        assert apply(g("mu1"), x) == SpinorVector.monomial(n + 1, 0, 0)
        assert apply(g("g1"), x) == x.scale(q(n))
        assert apply(g("d1"), x) == (SpinorVector.monomial(n - 1, 0, 0, quantum_int(n)) if n else SpinorVector())

    def test_spinor_factor(self):
        y3 = SpinorVector.monomial(0, 0, 3)
        assert apply(g("nab"), y3) == SpinorVector.monomial(0, 0, 2, quantum_int(3))
        assert apply(g("w", -1), y3) == y3.scale(q(-3))

    def test_shifted_derivative(self):
        x = SpinorVector.monomial(0, 4, 0)
        assert apply(shifted_derivative(2, 2), x) == SpinorVector.monomial(0, 3, 0, quantum_int(4, 2))

    def test_apply_power(self):
        x = SpinorVector.monomial(0, 3, 0)
        assert apply_power(g("d2"), x, 3) == ONE_VECTOR.scale(quantum_int(3) * quantum_int(2))
        assert apply_power(g("d2"), x, 4).is_zero()

    @pytest.mark.parametrize("seed", range(40))
    def test_module_property(self, seed):
        rng = random.Random(seed)
        A, B = random_element(rng), random_element(rng)
        v = random_vector(rng)
        assert apply(A * B, v) == apply(A, apply(B, v))

    @pytest.mark.parametrize("seed", range(10))
    def test_against_direct_action(self, seed):
        rng = random.Random(1000 + seed)
        A = random_element(rng)
        v = SpinorVector({(1, 2, 0): 1, (0, 1, 3): 2})
        point = Fraction(5, 3)
        got = specialize_vector(apply(A, v), point)
        assert got == act_element(A, specialize_vector(v, point), point)
