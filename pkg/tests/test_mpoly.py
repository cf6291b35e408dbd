"""Sparse multivariate polynomials and dense-in-x polynomial stacks."""

import json
import random
from fractions import Fraction

import pytest

from alcurves.errors import DenominatorDivisibleByP, VariableMismatch
from alcurves.mpoly import (
    MPoly,
    XPoly,
    align_variables,
    coeff_of_x,
    mpoly_pow,
    reduce_mod_p,
)


def _cubic_f(p=3):
    """x * (x - 1) * (x - z) as a dense-in-x polynomial over F_p[z]."""
    variables = ("z",)
    x = XPoly.x_monomial(variables, p, 1)
    one = XPoly.one(variables, p)
    z = XPoly(variables, p, (MPoly.variable(variables, p, "z"),))
    return x * (x - one) * (x - z)


def _quintic_f(p=3):
    variables = ("z1", "z2", "z3")
    x = XPoly.x_monomial(variables, p, 1)
    one = XPoly.one(variables, p)
    factors = x * (x - one)
    for name in variables:
        factors = factors * (x - XPoly(variables, p, (MPoly.variable(variables, p, name),)))
    return factors


class TestMPolyBasics:
    def test_construction_normalizes(self):
        m = MPoly(("z",), 5, {(1,): 7, (0,): -1})
        assert m.terms == {(1,): 2, (0,): 4}

    def test_rational_mode(self):
        m = MPoly(("z",), 0, {(2,): Fraction(1, 3), (0,): 2})
        assert m.terms[(2,)] == Fraction(1, 3)
        assert isinstance(m.terms[(0,)], Fraction)

    def test_zero_coefficients_dropped(self):
        assert MPoly(("z",), 3, {(1,): 3}).is_zero()

    def test_immutability(self):
        m = MPoly(("z",), 3, {(1,): 1})
        with pytest.raises(AttributeError):
            m.p = 5

    def test_duplicate_variables_rejected(self):
        with pytest.raises(ValueError):
            MPoly(("z", "z"), 3, {})

    def test_arithmetic(self):
        z = MPoly.variable(("z",), 7, "z")
        poly = (z + 1) * (z + 2)
        assert poly == MPoly(("z",), 7, {(2,): 1, (1,): 3, (0,): 2})
        assert poly - poly == MPoly.zero(("z",), 7)
        assert (z + 1) ** 2 == z * z + 2 * z + 1

    def test_pow_matches_repeated_multiplication(self):
        rng = random.Random(777)
        z1 = MPoly.variable(("z1", "z2"), 5, "z1")
        z2 = MPoly.variable(("z1", "z2"), 5, "z2")
        base = 2 * z1 * z2 + z1 + 3
        acc = MPoly.const(("z1", "z2"), 5, 1)
        for k in range(0, 7):
            assert base**k == acc
            acc = acc * base
        del rng

    def test_canonical_terms_order(self):
        poly = MPoly(("a", "b"), 7, {(0, 2): 1, (1, 0): 2, (1, 1): 3, (0, 0): 4})
        exps = [e for e, _ in poly.canonical_terms()]
        assert exps == [(1, 1), (1, 0), (0, 2), (0, 0)]

    def test_terms_json_round_trip(self):
        poly = MPoly(("a", "b"), 0, {(1, 2): Fraction(3, 4), (0, 0): -2})
        blob = poly.to_terms_json()
        assert blob == [
            {"exponents": [1, 2], "coefficient": "3/4"},
            {"exponents": [0, 0], "coefficient": -2},
        ]
        assert MPoly.from_terms_json(("a", "b"), 0, blob) == poly
        # JSON text is stable
        assert json.dumps(blob) == json.dumps(poly.to_terms_json())


class TestMPolySubstitution:
    def test_rename(self):
        poly = MPoly(("z",), 5, {(2,): 3})
        out = poly.substitute({"z": "w"})
        assert out == MPoly(("w",), 5, {(2,): 3})

    def test_numeric_specialization(self):
        z = MPoly.variable(("z",), 7, "z")
        poly = z**2 + 3 * z + 1
        assert poly.substitute({"z": 2}).constant_value() == (4 + 6 + 1) % 7

    def test_polynomial_value(self):
        z = MPoly.variable(("z",), 5, "z")
        w = MPoly.variable(("w",), 5, "w")
        out = (z**2).substitute({"z": w + 1})
        assert out == MPoly(("w",), 5, {(2,): 1, (1,): 2, (0,): 1})

    def test_unknown_variable_rejected(self):
        poly = MPoly(("z",), 5, {(1,): 1})
        with pytest.raises(VariableMismatch):
            poly.substitute({"q": 3})

    def test_partial_substitution_keeps_remaining(self):
        poly = MPoly(("a", "b"), 7, {(1, 1): 2, (0, 1): 3})
        out = poly.substitute({"a": 2})
        assert out == MPoly(("b",), 7, {(1,): 0 + (4 + 3) % 7})

    def test_evaluate_matches_substitute(self):
        rng = random.Random(808)
        variables = ("z1", "z2")
        for _ in range(50):
            poly = MPoly(
                variables,
                11,
                {
                    (rng.randint(0, 3), rng.randint(0, 3)): rng.randint(0, 10)
                    for _ in range(5)
                },
            )
            point = {"z1": rng.randint(0, 10), "z2": rng.randint(0, 10)}
            full = poly.substitute(point)
            assert full.is_constant()
            assert poly.evaluate(point) == full.constant_value()


class TestReduction:
    def test_truncation_polynomial_reduces_mod_3(self):
        variables = ("z1", "z2", "z3")
        terms = {
            (0, 0, 0): Fraction(1),
            (1, 0, 0): Fraction(3, 20),
            (0, 1, 0): Fraction(3, 20),
            (0, 0, 1): Fraction(3, 20),
            (1, 1, 0): Fraction(1, 32),
            (1, 0, 1): Fraction(1, 32),
            (0, 1, 1): Fraction(1, 32),
            (1, 1, 1): Fraction(1, 128),
        }
        poly = MPoly(variables, 0, terms)
        reduced = reduce_mod_p(poly, 3)
        assert reduced == MPoly(
            variables,
            3,
            {
                (0, 0, 0): 1,
                (1, 1, 0): 2,
                (1, 0, 1): 2,
                (0, 1, 1): 2,
                (1, 1, 1): 2,
            },
        )

    def test_reduction_failure_names_the_monomial(self):
        poly = MPoly(("z",), 0, {(1,): Fraction(1, 2)})
        with pytest.raises(DenominatorDivisibleByP) as info:
            poly.reduce_mod(2)
        assert "z" in str(info.value)

    def test_reduction_is_multiplicative(self):
        rng = random.Random(909)
        variables = ("u", "v")
        for _ in range(40):
            def draw():
                return MPoly(
                    variables,
                    0,
                    {
                        (rng.randint(0, 2), rng.randint(0, 2)): Fraction(
                            rng.randint(-9, 9), rng.choice([1, 2, 4, 5])
                        )
                        for _ in range(4)
                    },
                )
            a, b = draw(), draw()
            assert (a * b).reduce_mod(3) == a.reduce_mod(3) * b.reduce_mod(3)
            assert (a + b).reduce_mod(3) == a.reduce_mod(3) + b.reduce_mod(3)


class TestExponentScale:
    def test_matches_frobenius_power(self):
        # Over F_p, g(z)^p has the same coefficients attached to z^(p*e).
        for p in (3, 5):
            z = MPoly.variable(("z",), p, "z")
            g = 2 * z**2 + z + 1
            assert g**p == g.exponent_scale(p)

    def test_zero_scale(self):
        z = MPoly.variable(("z",), 5, "z")
        assert (z**3).exponent_scale(0) == MPoly.const(("z",), 5, 1)


class TestAlignVariables:
    def test_embedding(self):
        poly = MPoly(("z",), 5, {(2,): 3})
        out = align_variables(poly, ("w", "z"))
        assert out == MPoly(("w", "z"), 5, {(0, 2): 3})

    def test_dropping_unused(self):
        poly = MPoly(("w", "z"), 5, {(0, 2): 3})
        assert align_variables(poly, ("z",)) == MPoly(("z",), 5, {(2,): 3})

    def test_dropping_used_variable_rejected(self):
        poly = MPoly(("w", "z"), 5, {(1, 2): 3})
        with pytest.raises(VariableMismatch):
            align_variables(poly, ("z",))


class TestXPoly:
    def test_cubic_expansion(self):
        f = _cubic_f()
        z = MPoly.variable(("z",), 3, "z")
        assert f.degree() == 3
        assert f.coeff(3) == MPoly.const(("z",), 3, 1)
        assert f.coeff(2) == 2 + 2 * z
        assert f.coeff(1) == z
        assert f.coeff(0).is_zero()
        assert f.coeff(17).is_zero()

    def test_power_zero_is_one(self):
        f = _cubic_f()
        assert mpoly_pow(f, 0) == XPoly.one(("z",), 3)

    def test_quintic_coefficient(self):
        f = _quintic_f()
        z1 = MPoly.variable(("z1", "z2", "z3"), 3, "z1")
        z2 = MPoly.variable(("z1", "z2", "z3"), 3, "z2")
        z3 = MPoly.variable(("z1", "z2", "z3"), 3, "z3")
        assert coeff_of_x(f, 4) == 2 + 2 * z1 + 2 * z2 + 2 * z3

    def test_pow_additivity(self):
        rng = random.Random(1234)
        f = _cubic_f(5)
        for _ in range(10):
            m = rng.randint(0, 6)
            n = rng.randint(0, 6)
            assert mpoly_pow(f, m) * mpoly_pow(f, n) == mpoly_pow(f, m + n)

    def test_coefficient_reassembly(self):
        f = mpoly_pow(_cubic_f(5), 3)
        rebuilt = XPoly.zero(("z",), 5)
        for e in range(f.degree() + 1):
            rebuilt = rebuilt + XPoly.x_monomial(("z",), 5, e, coeff=1).scale(f.coeff(e))
        assert rebuilt == f

    def test_derivative(self):
        f = _cubic_f()
        z = MPoly.variable(("z",), 3, "z")
        df = f.derivative()
        # d/dx (x^3 + (2 + 2z) x^2 + z x) = 3x^2 + 2(2 + 2z)x + z = (1 + z)x + z mod 3
        assert df.coeff(2).is_zero()
        assert df.coeff(1) == 1 + z
        assert df.coeff(0) == z

    def test_shift(self):
        f = _cubic_f()
        assert f.shift(2).degree() == 5
        assert f.shift(2).coeff(3) == f.coeff(1)

    def test_json_round_trip(self):
        f = mpoly_pow(_cubic_f(7), 2)
        blob = f.to_json()
        assert XPoly.from_json(("z",), 7, blob) == f
        assert json.dumps(blob) == json.dumps(f.to_json())

    def test_str_rendering(self):
        f = _cubic_f(0)
        assert str(f) == "x^3 + (-z - 1)*x^2 + z*x"

    def test_substitute_matches_mpoly(self):
        f = mpoly_pow(_cubic_f(5), 2)
        g = f.substitute({"z": 3})
        for e in range(f.degree() + 1):
            assert g.coeff(e).constant_value() == f.coeff(e).evaluate({"z": 3})

    def test_kernel_and_dict_paths_agree(self):
        rng = random.Random(555)
        variables = ("z1", "z2")
        for _ in range(20):
            def draw():
                coeffs = []
                for _ in range(rng.randint(1, 4)):
                    coeffs.append(
                        MPoly(
                            variables,
                            7,
                            {
                                (rng.randint(0, 2), rng.randint(0, 2)): rng.randint(0, 6)
                                for _ in range(3)
                            },
                        )
                    )
                return XPoly(variables, 7, coeffs)
            a, b = draw(), draw()
            # rational-coefficient mirror exercises the dictionary path
            a0 = XPoly(variables, 0, tuple(
                MPoly(variables, 0, dict(c.terms)) for c in a.coeffs
            ))
            b0 = XPoly(variables, 0, tuple(
                MPoly(variables, 0, dict(c.terms)) for c in b.coeffs
            ))
            lifted = a0 * b0
            reduced = XPoly(
                variables, 7, tuple(c.reduce_mod(7) for c in lifted.coeffs)
            )
            assert reduced == a * b
