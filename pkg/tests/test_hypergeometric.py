"""Truncated series route: coefficients, truncations, and the dual-path identity."""

import math
import random
from fractions import Fraction
from math import comb

import pytest

from alcurves.cartier import cartier_manin, gamma_coeffs
from alcurves.curve import validate
from alcurves.differentials import MODEL_CTILDE
from alcurves.errors import (
    NegativeDPrime,
    NotNormalized,
    PochhammerZeroDenominator,
)
from alcurves.exactmath import double_factorial, pochhammer, rat_to_fp
from alcurves.hypergeometric import (
    ALParams,
    TruncationSpec,
    al_coefficient,
    binomial_pochhammer_identity,
    classical_Hp,
    gamma_via_hgm,
    lemma66_check,
    separable_deformation,
    series_entry_params,
    truncated_series,
)
from alcurves.mpoly import MPoly


def _triple_cover(p):
    return validate(p, 3, (1, 2, 2), (0, 1, "z"))


def _quintic(p=3):
    return validate(p, 2, (1, 1, 1, 1, 1), (0, 1, "z1", "z2", "z3"))


def _elliptic(p):
    return validate(p, 2, (1, 1, 1), (0, 1, "z"))


class TestALCoefficient:
    def test_constant_term(self):
        params = ALParams(Fraction(3, 2), (Fraction(1, 2),) * 3, Fraction(2))
        assert al_coefficient(params, (0, 0, 0)) == 1

    def test_gauss_coefficients_match_central_binomials(self):
        params = ALParams(Fraction(1, 2), (Fraction(1, 2),), Fraction(1))
        for k in range(0, 9):
            assert al_coefficient(params, (k,)) == Fraction(comb(2 * k, k) ** 2, 16**k)

    def test_three_variable_values(self):
        params = ALParams(Fraction(3, 2), (Fraction(1, 2),) * 3, Fraction(5))
        assert al_coefficient(params, (1, 0, 0)) == Fraction(3, 20)
        assert al_coefficient(params, (1, 1, 0)) == Fraction(1, 32)
        assert al_coefficient(params, (1, 1, 1)) == Fraction(1, 128)

    def test_index_validation(self):
        params = ALParams(Fraction(1, 2), (Fraction(1, 2),), Fraction(1))
        with pytest.raises(ValueError):
            al_coefficient(params, (1, 2))
        with pytest.raises(ValueError):
            al_coefficient(params, (-1,))

    def test_nonpositive_integer_lower_parameter_rejected(self):
        with pytest.raises(PochhammerZeroDenominator):
            ALParams(Fraction(1, 2), (Fraction(1, 2),), Fraction(0))
        with pytest.raises(PochhammerZeroDenominator):
            ALParams(Fraction(1, 2), (Fraction(1, 2),), Fraction(-3))


class TestTruncationSpec:
    def test_window_and_caps(self):
        trunc = TruncationSpec(3, (1, 1, 1, 1))
        assert trunc.selects((1, 1, 0)) is True
        assert trunc.selects((1, 1, 1)) is True
        assert trunc.selects((1, 0, 0)) is False  # below sigma - taus[0]
        assert trunc.selects((2, 1, 0)) is False  # exceeds a per-variable cap

    def test_full_window(self):
        trunc = TruncationSpec(3, (3, 1, 1, 1))
        assert trunc.selects((0, 0, 0)) is True
        assert trunc.selects((1, 1, 1)) is True
        assert trunc.selects((1, 1, 2)) is False


class TestTruncatedSeries:
    def test_genus_two_fixture_polynomials(self):
        variables = ("z1", "z2", "z3")
        golden = {
            1: {(0, 0, 0): 1, (1, 0, 0): Fraction(3, 20), (1, 1, 0): Fraction(1, 32), (1, 1, 1): Fraction(1, 128)},
            2: {(0, 0, 0): 1, (1, 0, 0): Fraction(1, 16), (1, 1, 0): Fraction(3, 320), (1, 1, 1): Fraction(1, 512)},
        }
        for j in (1, 2):
            params = ALParams(Fraction(5, 2) - j, (Fraction(1, 2),) * 3, Fraction(6 - j))
            poly = truncated_series(params, TruncationSpec(3, (3, 1, 1, 1)), variables)
            want = {}
            for (e1, e2, e3), value in golden[j].items():
                for exps in {(e1, e2, e3), (e2, e3, e1), (e3, e1, e2), (e1, e3, e2), (e3, e2, e1), (e2, e1, e3)}:
                    want[exps] = Fraction(value)
            assert poly == MPoly(variables, 0, want)

    def test_empty_window_gives_zero(self):
        params = ALParams(Fraction(1, 2), (Fraction(1, 2),), Fraction(1))
        assert truncated_series(params, TruncationSpec(-1, (0, 0)), ("z",)).is_zero()

    def test_monotone_in_window(self):
        params = ALParams(Fraction(3, 2), (Fraction(1, 2),) * 2, Fraction(2))
        small = truncated_series(params, TruncationSpec(2, (2, 1, 1)), ("u", "v"))
        large = truncated_series(params, TruncationSpec(3, (3, 2, 2)), ("u", "v"))
        for exps, coeff in small.terms.items():
            assert large.terms.get(exps) == coeff


class TestSeparableDeformation:
    def test_slot_layout(self):
        deform = separable_deformation(_triple_cover(7))
        assert deform.group_sizes == (1, 2)
        assert deform.slot_vars == ("t1_1", "t2_1", "t2_2")
        assert deform.collapse == {"t1_1": 1, "t2_1": "z", "t2_2": "z"}

    def test_quintic_layout(self):
        deform = separable_deformation(_quintic(3))
        assert deform.group_sizes == (0, 1, 1, 1)
        assert deform.slot_vars == ("t2_1", "t3_1", "t4_1")

    def test_repeated_unit_point(self):
        spec = validate(7, 3, (1, 2, 1), (0, 1, "z"))
        deform = separable_deformation(spec)
        assert deform.group_sizes == (1, 1)
        assert deform.slot_vars == ("t1_1", "t2_1")
        assert deform.collapse == {"t1_1": 1, "t2_1": "z"}

    def test_requires_normalized(self):
        with pytest.raises(NotNormalized):
            separable_deformation(validate(7, 3, (1, 2, 2), (0, 2, "z")))


class TestSeriesEntryParams:
    def test_triple_cover_values(self):
        params = series_entry_params(_triple_cover(7), 1, 0, 1)
        assert (params.m_prime, params.n_prime) == (1, 2)
        assert params.d_prime == 2 * 5 - 7 + 1
        assert params.a_prime == Fraction(2, 3)
        assert params.c_prime == Fraction(4, 3)

    def test_residue_class_of_a_prime(self):
        for p in (5, 7, 11):
            spec = _triple_cover(p)
            for s in (1, 2):
                n_prime = gamma_coeffs(spec, s).n_prime
                for j in range(1, p + 1):
                    for l in range(0, (n_prime * 5 + j) // p):
                        params = series_entry_params(spec, s, l, j)
                        base = Fraction(s * 5, 3) - j
                        assert (params.a_prime - base) % p == 0
                        assert 0 < params.a_prime <= p
                        assert params.c_prime == params.a_prime + 1 - Fraction(s, 3)

    def test_negative_window_rejected(self):
        with pytest.raises(NegativeDPrime):
            series_entry_params(_elliptic(5), 1, 1, 3)

    def test_prefactor_double_factorial_form(self):
        # hyperelliptic genus 2 at p=3: the Pochhammer prefactor collapses to
        # a ratio of double factorials indexed by the matrix position.
        spec = _quintic(3)
        g, p = 2, 3
        golden = {
            (1, 1): Fraction(64, 35),
            (1, 2): Fraction(128, 35),
            (2, 1): Fraction(1),
            (2, 2): Fraction(2),
        }
        for i in (1, 2):
            for j in (1, 2):
                params = series_entry_params(spec, 1, i - 1, j)
                ratio = pochhammer(params.c_prime, params.d_prime) / pochhammer(
                    params.a_prime, params.d_prime
                )
                assert ratio == golden[(i, j)]
                m1 = p * (2 * g - 2 * i + 1)
                expected = Fraction(
                    double_factorial(m1 - 1), double_factorial(m1 - 2)
                ) * Fraction(
                    double_factorial(2 * g - 2 * j - 1), double_factorial(2 * g - 2 * j)
                )
                assert ratio == expected


class TestGammaViaSeries:
    def test_routes_agree_on_triple_cover(self):
        for p in (5, 7):
            spec = _triple_cover(p)
            for s in (1, 2):
                data = gamma_coeffs(spec, s)
                for j in range(1, p + 1):
                    for l in range(0, (data.n_prime * 5 + j) // p):
                        expect = data.gamma((l + 1) * p - j)
                        assert gamma_via_hgm(spec, s, l, j) == expect
                        assert gamma_via_hgm(spec, s, l, j, method="literal") == expect

    def test_routes_agree_on_quintic(self):
        spec = _quintic(3)
        data = gamma_coeffs(spec, 1)
        for j in range(1, 4):
            for l in range(0, (5 + j) // 3):
                expect = data.gamma((l + 1) * 3 - j)
                assert gamma_via_hgm(spec, 1, l, j) == expect
                assert gamma_via_hgm(spec, 1, l, j, method="literal") == expect

    def test_grouped_is_default(self):
        spec = _triple_cover(7)
        assert gamma_via_hgm(spec, 1, 0, 1) == gamma_via_hgm(spec, 1, 0, 1, method="grouped")
        with pytest.raises(ValueError):
            gamma_via_hgm(spec, 1, 0, 1, method="unknown")

    def test_elliptic_entries_recover_classical_polynomial(self):
        for p in (3, 5, 7, 11, 13):
            spec = _elliptic(p)
            sign = (-1) ** ((p - 1) // 2)
            assert gamma_via_hgm(spec, 1, 0, 1) == classical_Hp(p).scale(sign)

    def test_shift_representative_of_a_prime_is_immaterial(self):
        # recompute the literal windowed series with a' and c' both moved by p;
        # the reductions mod p must agree coefficient by coefficient.
        for p, s, l, j in [(7, 1, 0, 1), (7, 2, 1, 3), (5, 2, 0, 2), (5, 1, 0, 4)]:
            spec = _triple_cover(p)
            params = series_entry_params(spec, s, l, j)
            deform = separable_deformation(spec)
            b = Fraction(s, spec.N)
            nslots = sum(deform.group_sizes)
            trunc = TruncationSpec(params.d_prime, (params.n_prime,) * (nslots + 1))
            outputs = []
            for shift in (0, p):
                al = ALParams(params.a_prime + shift, (b,) * nslots, params.c_prime + shift)
                series = truncated_series(al, trunc, deform.slot_vars)
                prefactor = pochhammer(params.c_prime + shift, params.d_prime) / pochhammer(
                    params.a_prime + shift, params.d_prime
                )
                outputs.append(series.scale(prefactor).reduce_mod(p))
            assert outputs[0] == outputs[1]


class TestClassicalHasse:
    def test_small_primes_frozen(self):
        assert classical_Hp(3) == MPoly(("z",), 3, {(0,): 1, (1,): 1})
        assert classical_Hp(5) == MPoly(("z",), 5, {(0,): 1, (1,): 4, (2,): 1})
        assert classical_Hp(7) == MPoly(("z",), 7, {(0,): 1, (1,): 2, (2,): 2, (3,): 1})

    def test_structure(self):
        for p in (3, 5, 7, 11, 13, 17):
            hp = classical_Hp(p)
            m = (p - 1) // 2
            assert hp.degree_in("z") == m
            assert hp.terms[(0,)] == 1
            assert hp.terms[(m,)] == 1
            for i in range(0, m + 1):
                assert hp.terms.get((i,), 0) == comb(m, i) ** 2 % p

    def test_rejects_non_odd_prime(self):
        with pytest.raises(ValueError):
            classical_Hp(2)
        with pytest.raises(ValueError):
            classical_Hp(9)


class TestIdentitySuite:
    def test_binomial_pochhammer_random(self):
        rng = random.Random(1618)
        for _ in range(200):
            b = Fraction(rng.randint(-30, 30), rng.randint(1, 12))
            d = rng.randint(0, 10)
            assert binomial_pochhammer_identity(b, d) is True

    def test_prefactor_ratio_identity_from_curves(self):
        # admissible tuples have first multiplicity 1 (separable at the unit
        # branch point); curves may carry higher multiplicities elsewhere.
        rng = random.Random(2718)
        cases = 0
        curve_pool = [
            _quintic(3),
            _elliptic(11),
            validate(7, 3, (2, 1, 2), (0, 1, "z")),
            validate(13, 3, (2, 1, 2), (0, 1, "z")),
            validate(7, 5, (1, 1, 1), (0, 1, "z")),
            validate(11, 4, (1, 1, 3), (0, 1, "z")),
            validate(5, 2, (1, 1, 1, 1, 2), (0, 1, "z1", "z2", "z3")),
        ]
        while cases < 200:
            spec = rng.choice(curve_pool)
            assert spec.exponents[1] == 1
            p = spec.p
            s = rng.randint(1, spec.N - 1)
            n_prime = gamma_coeffs(spec, s).n_prime
            j = rng.randint(1, p)
            l_hi = (n_prime * spec.exponent_sum + j) // p - 1
            if l_hi < 0:
                continue
            l = rng.randint(0, l_hi)
            params = series_entry_params(spec, s, l, j)
            d_1 = rng.randint(0, min(params.d_prime, p - 1))
            assert lemma66_check(
                s, spec.N, spec.exponents[1], d_1,
                params.d_prime, params.a_prime, params.c_prime, p,
            ) is True
            cases += 1

    def test_first_multiplicity_above_one_breaks_identity(self):
        # (s*A_1/N; d_1) differs from (s/N; d_1) mod p once A_1 > 1, so the
        # hypothesis on the first multiplicity is essential, not decorative.
        spec = _triple_cover(5)
        params = series_entry_params(spec, 1, 1, 3)
        assert lemma66_check(
            1, 3, spec.exponents[1], 1,
            params.d_prime, params.a_prime, params.c_prime, 5,
        ) is False
        assert lemma66_check(
            1, 3, 1, 1,
            params.d_prime, params.a_prime, params.c_prime, 5,
        ) is True

    def test_lemma66_range_validation(self):
        with pytest.raises(ValueError):
            lemma66_check(1, 2, 1, 5, 3, Fraction(3, 2), Fraction(2), 3)
        with pytest.raises(ValueError):
            lemma66_check(1, 2, 1, 3, 3, Fraction(3, 2), Fraction(2), 3)
