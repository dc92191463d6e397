from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import act_element, act_word
from qhowe.errors import NotInvertibleError
from qhowe.expr import parse_operator
from qhowe.qarith import RatQ, quantum_int
from qhowe.qweyl import (
    IDENTITY,
    ONE_ELEMENT,
    AlgebraElement,
    NormalMonomial,
    brace,
    check_defining_relations,
    check_weyl_identities,
    commutator,
    format_element,
    generator,
    multiply,
    shifted_derivative,
    twisted_commutator,
)
from qhowe.qweyl.identities import pair_identities
from qhowe.qweyl.monomial import FIELD_NAMES
from qhowe.qweyl.words import letter, normalize_word, normalize_words, word_from_monomial

q = RatQ.q
g = generator

NAMES = list(FIELD_NAMES)
INVERTIBLE = {"g1", "g2", "w"}


@st.composite
def words(draw, max_len=6):
    n = draw(st.integers(0, max_len))
    out = []
    for _ in range(n):
        name = draw(st.sampled_from(NAMES))
        sign = draw(st.sampled_from([1, -1])) if name in INVERTIBLE else 1
        out.append((name, sign))
    return out


@st.composite
def monomials(draw, max_exp=3):
    exps = []
    for i, name in enumerate(NAMES):
        lo = -max_exp if name in INVERTIBLE else 0
        exps.append(draw(st.integers(lo, max_exp)))
    a = NormalMonomial(*exps)
    # normal monomials never contain mu_j and d_j together
    fixed = list(a)
    for j in range(3):
        if fixed[j] and fixed[6 + j]:
            fixed[6 + j] = 0
    return NormalMonomial(*fixed)


@st.composite
def elements(draw):
    terms = draw(st.lists(monomials(2), min_size=1, max_size=3))
    coeffs = draw(st.lists(st.integers(-3, 3).filter(bool), min_size=len(terms), max_size=len(terms)))
    shifts = draw(st.lists(st.integers(-2, 2), min_size=len(terms), max_size=len(terms)))
    return AlgebraElement({m: q(s) * c for m, c, s in zip(terms, coeffs, shifts)})


def word_product(word):
    out = ONE_ELEMENT
    for name, sign in word:
        out = out * g(name, sign)
    return out


# -- the defining relations ------------------------------------------------------------

class TestRelations:
    def test_report_passes(self):
        assert check_defining_relations().passed

    @pytest.mark.parametrize("j", ["1", "2"])
    def test_both_signs_give_the_same_consequence(self, j):
        mu, d, gg = g("mu" + j), g("d" + j), g("g" + j)
        upper = twisted_commutator(d, mu, q(1))
        lower = twisted_commutator(d, mu, q(-1))
        assert upper == gg.inverse() and lower == gg
        # solving either relation for mu d gives {gamma}_q
        from_upper = (d * mu - gg.inverse()).scale(q(-1))
        from_lower = (d * mu - gg).scale(q(1))
        assert from_upper == from_lower == mu * d == brace(gg)

    def test_spinor_factor_relations(self):
        assert twisted_commutator(g("nab"), g("nu"), q(1)) == g("w", -1)
        assert twisted_commutator(g("nab"), g("nu"), q(-1)) == g("w")

    def test_gamma_conjugation(self):
        assert g("g1") * g("mu1") * g("g1", -1) == g("mu1").scale(q(1))
        assert g("g2") * g("d2") * g("g2", -1) == g("d2").scale(q(-1))

    @pytest.mark.parametrize("x", ["mu1", "mu2", "g1", "g2", "d1", "d2"])
    @pytest.mark.parametrize("y", ["nu", "w", "nab"])
    def test_tensor_factors_commute(self, x, y):
        assert commutator(g(x), g(y)).is_zero()

    def test_normal_monomials_never_pair_mu_with_d(self):
        A = g("d1") * g("mu1") ** 3 * g("d1") ** 2
        for m in A.terms:
            for j in range(3):
                assert not (m[j] and m[6 + j])

    def test_normal_form_of_d_mu(self):
        expected = (g("g1").scale(q(1)) - g("g1", -1).scale(q(-1))).scale((q(1) - q(-1)).inverse())
        assert g("d1") * g("mu1") == expected


# -- products ------------------------------------------------------------------

class TestProducts:
    @given(monomials(), monomials(), monomials())
    def test_associativity_of_monomials(self, a, b, c):
        A, B, C = (AlgebraElement.monomial(x) for x in (a, b, c))
        assert multiply(multiply(A, B), C) == multiply(A, multiply(B, C))

    @given(elements(), elements(), elements())
    def test_distributivity(self, A, B, C):
        assert A * (B + C) == A * B + A * C
        assert (A + B) * C == A * C + B * C

    @given(elements())
    def test_identity(self, A):
        assert A * ONE_ELEMENT == A == ONE_ELEMENT * A

    @given(monomials())
    def test_normal_monomial_is_its_own_word(self, m):
        assert normalize_word(word_from_monomial(m)) == AlgebraElement.monomial(m)

    def test_invertible_monomials(self):
        x = g("g1", 2) * g("w", -1)
        assert x * x.inverse() == ONE_ELEMENT
        with pytest.raises(NotInvertibleError):
            g("mu1").inverse()
        with pytest.raises(NotInvertibleError):
            g("d2") ** -1
        assert g("g2") ** -2 == g("g2", -2)

    def test_identity_monomial(self):
        assert AlgebraElement.monomial(IDENTITY) == ONE_ELEMENT


# -- confluence: every rewrite order gives the same answer ---------------------------------

class TestConfluence:
    @given(words(), st.integers(0, 10_000))
    def test_strategies_agree(self, word, seed):
        letters = [letter(n, s) for n, s in word]
        left = normalize_word(letters, "leftmost")
        right = normalize_word(letters, "rightmost")
        rnd = normalize_word(letters, "random", random.Random(seed))
        assert left == right == rnd

    @given(words())
    def test_words_agree_with_products(self, word):
        letters = [letter(n, s) for n, s in word]
        assert normalize_word(letters) == word_product(word)

    def test_linear_combination(self):
        w1 = (letter("d1"), letter("mu1"))
        w2 = (letter("mu1"), letter("d1"))
        got = normalize_words({w1: RatQ(1), w2: -q(1)})
        assert got == g("g1", -1)


# -- faithfulness: normal forms act like the words they came from ----------------------------

POINT = Fraction(3, 2)


class TestAgainstDirectAction:
    @given(words(max_len=5))
    def test_word_action(self, word):
        vec = {(2, 1, 3): Fraction(1), (0, 2, 1): Fraction(-2, 3), (1, 0, 0): Fraction(5)}
        direct = act_word(word, vec, POINT)
        via_normal_form = act_element(word_product(word), vec, POINT)
        assert direct == via_normal_form

    def test_shifted_derivative_on_monomials(self):
        D = shifted_derivative(1, 2)
        for n in range(6):
            got = act_element(D, {(n, 0, 0): Fraction(1)}, POINT)
            expected = {} if n == 0 else {(n - 1, 0, 0): (POINT ** (2 * n) - POINT ** (-2 * n)) / (POINT**2 - POINT**-2)}
            assert got == expected


# -- named constructions ------------------------------------------------------------

class TestConstructions:
    def test_shifted_derivative(self):
        assert shifted_derivative(1, 1) == g("d1")
        expected = (g("d1") * (g("g1") + g("g1", -1))).scale(quantum_int(2).inverse())
        assert shifted_derivative(1, 2) == expected

    @pytest.mark.parametrize("m", [1, 2, 3, 4])
    def test_shifted_derivative_relation(self, m):
        for s in (1, -1):
            lhs = twisted_commutator(shifted_derivative(2, m), g("mu2"), q(m * s))
            assert lhs == g("g2", -m * s)

    def test_brace(self):
        assert brace(g("g1")) == g("mu1") * g("d1")
        assert brace(ONE_ELEMENT).is_zero()
        with pytest.raises(NotInvertibleError):
            brace(g("mu1"))

    def test_brace_in_q_squared(self):
        K = g("g1", 2)
        expected = (K - K.inverse()).scale((q(2) - q(-2)).inverse())
        assert brace(K, 2) == expected

    def test_square_commutator(self):
        lhs = twisted_commutator(g("d1"), g("mu1") ** 2, q(2))
        assert lhs == (g("g1", -1) * g("mu1")).scale(q(1) * quantum_int(2))
        assert lhs == parse_operator("tcomm(d1, mu1^2, q^2)")

    def test_mixed_brace_at_m1(self):
        lhs = commutator(g("mu1") * g("d2"), g("mu2") * g("d1"))
        assert lhs == brace(g("g1") * g("g2", -1))


class TestIdentities:
    def test_all_pass(self):
        report = check_weyl_identities(3)
        assert report.passed, report.render()

    def test_small_bound(self):
        assert check_weyl_identities(1).passed

    def test_barred_gamma_read_as_plain_gamma(self):
        # the last mixed identity holds with gamma_j in its final term
        for s in (1, -1):
            ids = pair_identities(1, 2, 1, s)
            lhs, rhs = ids["[d_(i,q^2) d_j, mu_i mu_j]_(q^s)"]
            assert lhs == rhs

    def test_barred_gamma_inverse_reading_fails(self):
        # reading the bar as an inversion of gamma_j breaks the identity
        from qhowe.qweyl.identities import _dq, _g, _mu

        i, j, s = 1, 2, 1
        pref = (q(1) - q(-1)).inverse() * s
        two_inv = quantum_int(2).inverse()
        alt = (
            (_g(i, 2) * _g(j, 1)).scale(q(2) * two_inv)
            + (_g(i, -2) * _g(j, 1)).scale(two_inv)
            - (_g(i, -2) * _g(j, 1)).scale(q(-1))
        ).scale(pref)
        lhs = twisted_commutator(_dq(i, 2) * _dq(j, 1), _mu(i) * _mu(j), q(s))
        assert lhs != alt

    def test_invalid_bound(self):
        with pytest.raises(ValueError):
            check_weyl_identities(0)


class TestRendering:
    @given(elements())
    def test_print_parse_round_trip(self, A):
        assert parse_operator(format_element(A)) == A

    def test_examples(self):
        assert format_element(AlgebraElement()) == "0"
        assert format_element(twisted_commutator(g("d1"), g("mu1") ** 2, q(2))) == "(q + q^-1) mu1 g1^-1"
        assert format_element(g("g2", -2)) == "g2^-2"

    def test_json(self):
        data = (g("mu1") * g("w", -1)).scale(q(2)).to_json()
        assert isinstance(data, list) and len(data) == 1
