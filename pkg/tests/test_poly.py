"""Exact polynomial arithmetic: worked examples plus algebraic laws."""

from fractions import Fraction

import pytest
from hypothesis import given

from conftest import fractions_small, poly2s
from transurf.poly import Poly2, antiderivative, proportional_ratio

U = Poly2.var_u()
V = Poly2.var_v()


class TestRingOps:
    def test_addition_cancellation(self):
        assert (U + V) + (U - V) == 2 * U

    def test_difference_of_squares(self):
        assert (U + V) * (U - V) == U * U - V * V

    @given(poly2s)
    def test_zero_absorbs(self, p):
        assert (Poly2.zero() * p).is_zero
        assert (0 * p).is_zero

    @given(poly2s, poly2s)
    def test_addition_commutes(self, p, q):
        assert p + q == q + p

    @given(poly2s, poly2s, poly2s)
    def test_addition_associates(self, p, q, r):
        assert (p + q) + r == p + (q + r)

    @given(poly2s, poly2s)
    def test_multiplication_commutes(self, p, q):
        assert p * q == q * p

    @given(poly2s, poly2s, poly2s)
    def test_multiplication_associates(self, p, q, r):
        assert (p * q) * r == p * (q * r)

    @given(poly2s, poly2s, poly2s)
    def test_distributivity(self, p, q, r):
        assert p * (q + r) == p * q + p * r

    @given(poly2s)
    def test_subtraction_inverts_addition(self, p):
        assert (p - p).is_zero

    def test_scalar_arithmetic(self):
        p = Fraction(1, 2) * U + 3
        assert p.coefficient(1, 0) == Fraction(1, 2)
        assert p.coefficient(0, 0) == 3
        assert (p / Fraction(1, 2)) == U + 6

    def test_power(self):
        assert (U + V) ** 2 == U * U + 2 * U * V + V * V
        assert (U + V) ** 0 == Poly2.const(1)
        with pytest.raises(ValueError):
            (U + V) ** -1


class TestDiff:
    def test_power_rule(self):
        p = Poly2.monomial(1, 3, 2)  # u^3 v^2
        assert p.diff("u") == Poly2.monomial(3, 2, 2)

    def test_constant_derivative(self):
        assert Poly2.const(Fraction(7, 3)).diff("u").is_zero

    @given(poly2s, poly2s)
    def test_leibniz(self, p, q):
        assert (p * q).diff("u") == p.diff("u") * q + p * q.diff("u")
        assert (p * q).diff("v") == p.diff("v") * q + p * q.diff("v")

    @given(poly2s)
    def test_partials_commute(self, p):
        assert p.diff("u").diff("v") == p.diff("v").diff("u")

    @given(poly2s)
    def test_degree_drops_by_one(self, p):
        if p.depends_on("u"):
            assert p.diff("u").degree("u") == p.degree("u") - 1
        else:
            assert p.diff("u").is_zero


class TestEval:
    def test_sum_of_squares(self):
        assert (U * U + V * V).eval(1, 1) == 2

    def test_delta_at_one_one(self):
        alpha, beta = 2 * U, 2 * V
        delta = 1 + alpha * alpha + beta * beta
        assert delta.eval(1, 1) == 9

    def test_zero_everywhere(self):
        assert Poly2.zero().eval(Fraction(22, 7), -3) == 0

    @given(poly2s, poly2s, fractions_small, fractions_small)
    def test_eval_is_ring_homomorphism(self, p, q, x, y):
        assert (p * q).eval(x, y) == p.eval(x, y) * q.eval(x, y)
        assert (p + q).eval(x, y) == p.eval(x, y) + q.eval(x, y)


class TestIsZero:
    def test_binomial_identity(self):
        lhs = (U + V) ** 2 - U * U - 2 * U * V - V * V
        assert lhs.is_zero

    def test_nonzero_monomial(self):
        assert not Poly2.monomial(64, 1, 1).is_zero

    def test_canonical_form_drops_zeros(self):
        p = Poly2({(1, 0): Fraction(0), (0, 1): 1})
        assert (1, 0) not in p.terms


class TestHelpers:
    def test_proportional_ratio(self):
        p = 6 * U * V + 3 * V
        q = 2 * U * V + V
        assert proportional_ratio(p, q) == 3
        assert proportional_ratio(p, q + U) is None
        assert proportional_ratio(p, 2 * U * V + 2 * V) is None
        with pytest.raises(ValueError):
            proportional_ratio(p, Poly2.zero())

    def test_antiderivative(self):
        p = 3 * U * U + 2 * U  # -> u^3 + u^2
        assert antiderivative(p, "u") == U**3 + U**2

    @given(poly2s)
    def test_antiderivative_inverts_diff(self, p):
        assert antiderivative(p, "u").diff("u") == p

    def test_str_round_trip_is_readable(self):
        p = U**2 - V + Poly2.const(Fraction(-1, 2))
        assert str(p) == "u^2 - v - 1/2"

    def test_rejects_negative_exponents(self):
        with pytest.raises(ValueError):
            Poly2({(-1, 0): 1})
