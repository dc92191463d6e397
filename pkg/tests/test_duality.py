from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qhowe.duality import (
    adjoint,
    build_sigma_delta,
    build_sigma_dual,
    build_sigma_s,
    build_sigma_w,
    build_Z1,
    build_Z2,
    check_ad_F_powers,
    check_adjoint_table,
    check_commuting_pair,
    check_fe_power_lemma,
    check_fischer,
    check_monogenic_generators,
    check_projector,
    check_sl2_relations,
    check_symmetries,
    check_weight_multiplicities,
    check_z1_projection,
    e_preimage,
    fischer_decompose,
    lowest_weight_exponents,
    monogenic_spanning_set,
    p_minus,
    p_minus_by_recurrence,
    p_plus,
    predicted_multiplicity,
    project,
    projection_coefficient,
    raising_symmetry,
    trivial_triple,
)
from qhowe.duality.monogenics import counted_multiplicities
from qhowe.duality.named import NAMED_OPERATORS, named_operator
from qhowe.duality.reps import ad_F_powers_of_mu1, dq2, lowering_symmetries
from qhowe.errors import DecompositionError, PreconditionError
from qhowe.qarith import RatQ, quantum_int
from qhowe.qweyl import ONE_ELEMENT, brace, commutator, generator
from qhowe.sampling import random_homogeneous_vector
from qhowe.spinor import ONE_VECTOR, SpinorVector, apply, apply_power, weight_exponent

q = RatQ.q
g = generator
SIGMA = build_sigma_dual()
DELTA = build_sigma_delta()


def rng(salt):
    return random.Random(f"duality:{salt}")


class TestTriples:
    @pytest.mark.parametrize(
        "triple, p",
        [(build_sigma_w(), 2), (build_sigma_s(), 2), (build_sigma_delta(), 2), (build_sigma_dual(), 1), (trivial_triple(), 1)],
        ids=["w", "s", "delta", "dual", "trivial"],
    )
    def test_relations(self, triple, p):
        assert triple.param_exponent == p
        report = check_sl2_relations(triple)
        assert report.passed, report.render()

    def test_oscillator_lowest_vector(self):
        s = build_sigma_s()
        assert apply(s.F, ONE_VECTOR).is_zero()
        assert apply(s.K, ONE_VECTOR) == ONE_VECTOR.scale(q(1))

    @pytest.mark.parametrize("d", range(6))
    def test_w_lowest_vector(self, d):
        w = build_sigma_w()
        x = SpinorVector.monomial(0, d, 0)
        assert apply(w.F, x).is_zero()
        assert apply(w.K, x) == x.scale(q(-2 * d))

    def test_bracket_of_dual_triple(self):
        K = (g("g1") * g("g2")).scale(q(1)) ** 2
        assert SIGMA.K == K
        assert commutator(SIGMA.E, SIGMA.F) == brace(K)
        assert SIGMA.K * SIGMA.E * SIGMA.K_inv == SIGMA.E.scale(q(2))

    def test_dual_f_is_the_dirac_operator(self):
        expected = dq2(1) * g("nu") - g("g1", -2) * g("w") * dq2(2) * g("nab")
        assert SIGMA.F == expected

    def test_k_must_be_group_like(self):
        from qhowe.duality import Sl2Triple

        with pytest.raises(ValueError):
            Sl2Triple(ONE_ELEMENT, ONE_ELEMENT, g("mu1"))

    def test_commuting_pair(self):
        assert check_commuting_pair().passed

    def test_named_operators(self):
        assert named_operator("F") == SIGMA.F
        assert named_operator("Kd") == DELTA.K
        assert len(NAMED_OPERATORS) == len(set(NAMED_OPERATORS))
        with pytest.raises(KeyError):
            named_operator("nope")


class TestFEPowerLemma:
    def test_degree_one_reduces_to_the_bracket(self):
        probes = monogenic_spanning_set(1, 1)
        vectors = [random_homogeneous_vector(rng("fe"), 2) for _ in range(3)]
        assert check_fe_power_lemma(1, 1, probes, vectors).passed

    def test_r_zero(self):
        assert check_fe_power_lemma(2, 0, [p_plus(1)]).passed

    def test_three_two_on_p_plus(self):
        assert check_fe_power_lemma(3, 2, [p_plus(2)]).passed

    @pytest.mark.parametrize("d", range(1, 5))
    def test_all_r(self, d):
        probes = monogenic_spanning_set(1, 1)
        for r in range(d + 1):
            assert check_fe_power_lemma(d, r, probes).passed

    def test_rejects_non_monogenic_probe(self):
        with pytest.raises(PreconditionError):
            check_fe_power_lemma(2, 1, [SpinorVector.monomial(1, 0, 0)])

    def test_rejects_bad_indices(self):
        with pytest.raises(PreconditionError):
            check_fe_power_lemma(2, 3, [])
        with pytest.raises(PreconditionError):
            check_fe_power_lemma(0, 0, [])


class TestMonogenics:
    def test_p_minus_zero(self):
        assert p_minus(0) == SpinorVector.monomial(0, 0, 1)
        assert apply(SIGMA.F, p_minus(0)).is_zero()

    def test_p_minus_one(self):
        expected = SpinorVector({(1, 0, 1): 1, (0, 1, 3): q(-2) / quantum_int(3)})
        assert p_minus(1) == expected
        assert str(p_minus(1)) == "x1 y + (q^-2/(q^2+1+q^-2)) x2 y^3"

    @pytest.mark.parametrize("d", range(11))
    def test_recurrence(self, d):
        assert p_minus(d) == p_minus_by_recurrence(d)

    def test_generators_report(self):
        assert check_monogenic_generators(10).passed

    def test_negative_degree(self):
        with pytest.raises(PreconditionError):
            p_plus(-1)

    @pytest.mark.parametrize("d", range(4))
    def test_spanning_set(self, d):
        vs = monogenic_spanning_set(d, 3)
        assert vs[0] == p_plus(d)
        assert len(vs) == 8
        for v in vs:
            assert v.is_homogeneous(d)
            assert apply(SIGMA.F, v).is_zero()

    @pytest.mark.parametrize("d", range(4))
    @pytest.mark.parametrize("n", range(4))
    def test_spanning_set_weights(self, d, n):
        v = apply_power(DELTA.E, p_plus(d), n)
        assert {weight_exponent(*k) for k in v.terms} == {1 - 2 * d + 4 * n}
        assert apply(DELTA.K, v) == v.scale(q(1 - 2 * d + 4 * n))

    def test_spanning_set_at_zero(self):
        assert monogenic_spanning_set(2, 0) == [p_plus(2), p_minus(2)]


class TestWeights:
    @pytest.mark.parametrize("d", range(5))
    def test_even_bottom(self, d):
        assert predicted_multiplicity(d, "+", 1 - 2 * d) == 1
        assert counted_multiplicities(d, "+", 3)[1 - 2 * d] == 1

    def test_odd_example(self):
        assert predicted_multiplicity(1, "-", 5) == 2
        assert counted_multiplicities(1, "-", 5)[5] == 2

    def test_below_bottom(self):
        assert predicted_multiplicity(3, "+", 1 - 6 - 4) == 0
        assert predicted_multiplicity(3, "-", 3 - 6 - 2) == 0

    def test_exponents(self):
        assert lowest_weight_exponents(2, "+") == [-3, 1, 5]
        assert lowest_weight_exponents(2, "-") == [-1, 3, 7]

    @pytest.mark.parametrize("d", range(7))
    def test_report(self, d):
        assert check_weight_multiplicities(d, range(-2 * d - 7, 2 * d + 12)).passed


class TestProjection:
    def test_coefficients(self):
        assert projection_coefficient(1, 1) == quantum_int(2).inverse()
        assert projection_coefficient(3, 0) == 1

    def test_pi_zero_is_identity(self):
        v = SpinorVector({(0, 0, 3): q(2), (0, 0, 0): 1})
        assert project(0, v) == v

    def test_pi_one(self):
        v = SpinorVector({(1, 0, 1): 1, (0, 1, 0): q(-1), (1, 0, 4): 3})
        expected = v + apply(SIGMA.E * SIGMA.F, v).scale(quantum_int(2).inverse())
        assert project(1, v) == expected

    @pytest.mark.parametrize("d", range(6))
    def test_fixes_p_plus(self, d):
        assert project(d, p_plus(d)) == p_plus(d)
        assert project(d, p_minus(d)) == p_minus(d)

    @settings(max_examples=25)
    @given(st.integers(0, 4), st.integers(0, 10**6))
    def test_idempotent_and_monogenic(self, d, seed):
        v = random_homogeneous_vector(random.Random(seed), d, 5)
        pv = project(d, v)
        assert project(d, pv) == pv
        assert apply(SIGMA.F, pv).is_zero()

    @settings(max_examples=15)
    @given(st.integers(0, 3), st.integers(0, 10**6))
    def test_equivariance(self, d, seed):
        v = random_homogeneous_vector(random.Random(seed), d, 4)
        for X in (DELTA.E, DELTA.F, DELTA.K):
            assert project(d, apply(X, v)) == apply(X, project(d, v))

    @pytest.mark.parametrize("d", range(1, 4))
    def test_kills_e_images(self, d):
        for j in range(1, d + 1):
            for m in monogenic_spanning_set(d - j, 2):
                assert project(d, apply_power(SIGMA.E, m, j)).is_zero()

    def test_rejects_inhomogeneous(self):
        with pytest.raises(PreconditionError):
            project(1, SpinorVector({(1, 0, 0): 1, (0, 0, 0): 1}))
        with pytest.raises(PreconditionError):
            project(2, SpinorVector.monomial(1, 0, 0))

    def test_zero_vector(self):
        assert project(3, SpinorVector()).is_zero()

    def test_report(self):
        assert check_projector(3, 2, rng("proj"), samples=4).passed


class TestFischer:
    @pytest.mark.parametrize("d", range(5))
    def test_monogenic_input(self, d):
        fc = fischer_decompose(p_plus(d))
        assert fc.components[0] == p_plus(d)
        assert all(m.is_zero() for m in fc.components[1:])

    def test_e_image_of_p_minus(self):
        v = apply(SIGMA.E, p_minus(0))
        fc = fischer_decompose(v)
        assert fc.degree == 1
        assert fc.component(1).is_zero()
        assert fc.component(0) == p_minus(0)

    def test_x1_y(self):
        v = SpinorVector.monomial(1, 0, 1)
        fc = fischer_decompose(v)
        assert fc.component(1) == project(1, v)
        assert fc.reconstruct() == v
        assert fc.component(0) == SpinorVector.monomial(0, 0, 2, -quantum_int(2).inverse())

    @settings(max_examples=20)
    @given(st.integers(0, 3), st.integers(0, 10**6))
    def test_round_trip(self, d, seed):
        v = random_homogeneous_vector(random.Random(seed), d, 4)
        fc = fischer_decompose(v)
        assert fc.reconstruct() == v
        assert fc.preimages_unique
        for m in fc.components:
            assert apply(SIGMA.F, m).is_zero()

    def test_degree_three_small_spinor_degree(self):
        r = rng("fischer3")
        for _ in range(5):
            v = random_homogeneous_vector(r, 3, 4)
            assert fischer_decompose(v).reconstruct() == v

    def test_json(self):
        fc = fischer_decompose(SpinorVector.monomial(1, 0, 1))
        data = fc.to_json()
        assert data["degree"] == 1 and [c["k"] for c in data["components"]] == [1, 0]

    def test_preimage_of_non_image_fails(self):
        # 1 (degree 0) is not an E-image of anything of degree -1
        with pytest.raises(DecompositionError):
            e_preimage(SpinorVector.monomial(0, 0, 0), 0)

    def test_preimage(self):
        u = SpinorVector({(1, 0, 2): 1, (0, 1, 0): q(3)})
        pre = e_preimage(apply(SIGMA.E, u), 1)
        assert pre.unique and pre.vector == u

    def test_inhomogeneous(self):
        with pytest.raises(PreconditionError):
            fischer_decompose(SpinorVector({(1, 0, 0): 1, (0, 0, 0): 1}))

    def test_report(self):
        assert check_fischer(3, rng("fischer"), samples=4, c_max=5).passed


class TestSymmetries:
    def test_ad_f_powers(self):
        a1, a2, a3 = ad_F_powers_of_mu1()
        assert a1 == g("g1", 2) * g("nu")
        assert a3.is_zero()
        assert check_ad_F_powers().passed

    def test_ad_f_mu1_modulo_the_ideal(self):
        a1, _, _ = ad_F_powers_of_mu1()
        for m in monogenic_spanning_set(2, 2):
            assert apply(SIGMA.F * g("mu1") - a1, m).is_zero()

    def test_adjoint_table(self):
        assert check_adjoint_table().passed
        assert adjoint("f", DELTA, g("mu1")) == g("g1", 2) * g("mu2")
        assert adjoint("k", DELTA, g("mu1")) == g("mu1").scale(q(2))
        assert adjoint("e", DELTA, dq2(2)).is_zero()
        assert adjoint("f", DELTA, dq2(2)) == (g("g2", -2) * dq2(1)).scale(-q(-2))

    def test_adjoint_k_inverse(self):
        assert adjoint("k^-1", DELTA, g("mu1")) == g("mu1").scale(q(-2))
        with pytest.raises(ValueError):
            adjoint("h", DELTA, g("mu1"))

    def test_z2_is_the_raising_symmetry_of_g1sq_mu2(self):
        assert build_Z2() == raising_symmetry(g("g1", 2) * g("mu2"))

    def test_z2_leading_term(self):
        K = SIGMA.K
        lead = (g("g1", 2) * g("mu2") * brace(K) * brace(K.scale(q(-1)))).scale(quantum_int(2))
        X = g("g1", 2) * g("mu2")
        ad1 = adjoint("f", SIGMA, X)
        ad2 = adjoint("f", SIGMA, ad1)
        tail = (SIGMA.E * ad1 * brace(K.scale(q(-1)))).scale(quantum_int(2)) + SIGMA.E * SIGMA.E * ad2
        assert build_Z2() - lead == tail
        assert not lead.is_zero() and not tail.is_zero()

    def test_z1_on_one(self):
        img = apply(build_Z1(), ONE_VECTOR)
        assert img.is_homogeneous(1) and apply(SIGMA.F, img).is_zero()

    def test_z1_relation(self):
        assert check_z1_projection(3, 2).passed

    @pytest.mark.parametrize("d", range(1, 6))
    def test_lowering_on_p_plus(self, d):
        ops = lowering_symmetries()
        assert apply(ops["dq2_2"], p_plus(d)) == p_plus(d - 1).scale(quantum_int(d, 2))
        assert apply(ops["g2^-2 dq2_1"], p_plus(d)).is_zero()

    def test_report(self):
        assert check_symmetries(3, 2).passed
