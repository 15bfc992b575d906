"""
Tests for the derivation bilinear form, Gram matrices and norm bounds.
"""

import math

import numpy as np
import pytest

from hardyderiv.core.circle.grid import lp_norm
from hardyderiv.core.circle.poly import AnalyticPoly
from hardyderiv.core.derivations.form import (
    DerivationForm,
    b_factorization_residual,
    b_functional,
    bilinear_eval,
    exp_trick_residual,
    extract_symbol,
    leibniz_residual,
    unit_vanishing_residual,
)
from hardyderiv.core.derivations.gram import GramMatrix, gram_matrix, rank_and_singular_values
from hardyderiv.core.derivations.norms import (
    fejer_tail_bound,
    monomial_upper_bound,
    norm_lower_bound_mc,
    norm_upper_bound,
)
from hardyderiv.core.errors import InputError, PreconditionError
from hardyderiv.core.hardy.symbols import SymbolH1, fejer_truncate, random_poly, random_symbol, sample_rng

Z = AnalyticPoly.monomial(1)
ONE = AnalyticPoly.one()


class TestBilinearForm:
    """D_h(f)(g) = 2*pi * sum u_n conj(h_n)."""

    def test_dz_is_two_pi_f_prime_g_at_zero(self):
        D = DerivationForm(SymbolH1.monomial(1))
        assert bilinear_eval(D, Z, ONE) == pytest.approx(2 * math.pi)

    def test_z_squared_example(self):
        D = DerivationForm(SymbolH1.monomial(2))
        assert bilinear_eval(D, Z, Z) == pytest.approx(math.pi)

    def test_constants_are_killed(self):
        D = DerivationForm(random_symbol(6, seed=1))
        assert bilinear_eval(D, AnalyticPoly.constant(3.0), Z) == 0
        assert unit_vanishing_residual(D, random_poly(sample_rng(1, 0), 5)) == 0.0

    def test_zero_symbol(self):
        assert bilinear_eval(DerivationForm(SymbolH1.zero()), Z, Z) == 0

    def test_conjugate_linear_in_symbol(self):
        h = random_symbol(5, seed=3)
        f, g = random_poly(sample_rng(3, 1), 4), random_poly(sample_rng(3, 2), 4)
        c = 2.0 - 1.5j
        scaled = bilinear_eval(DerivationForm(h).scaled(c), f, g)
        assert scaled == pytest.approx(np.conj(c) * bilinear_eval(DerivationForm(h), f, g))

    def test_additive_in_symbol(self):
        D1 = DerivationForm(random_symbol(4, seed=5, index=0))
        D2 = DerivationForm(random_symbol(4, seed=5, index=1))
        f, g = random_poly(sample_rng(5, 2), 3), random_poly(sample_rng(5, 3), 3)
        assert (D1 + D2)(f, g) == pytest.approx(D1(f, g) + D2(f, g))

    def test_b_functional(self):
        D = DerivationForm(SymbolH1.monomial(3, 2.0))
        assert b_functional(D, AnalyticPoly.monomial(3)) == pytest.approx(4 * math.pi)


class TestIdentities:
    """Factorization, Leibniz and exponential identities."""

    def test_b_factorization(self):
        for i in range(10):
            rng = sample_rng(8, i)
            D = DerivationForm(random_symbol(12, seed=8, index=i))
            f, g = random_poly(rng, 12), random_poly(rng, 12)
            assert b_factorization_residual(D, f, g) <= 1e-12 * (1 + abs(D(f, g)))

    def test_leibniz(self):
        for i in range(10):
            rng = sample_rng(9, i)
            D = DerivationForm(random_symbol(12, seed=9, index=i))
            f, g, k = (random_poly(rng, 6) for _ in range(3))
            scale = 1 + abs(D(f * g, k)) + abs(D(f, g * k)) + abs(D(g, f * k))
            assert leibniz_residual(D, f, g, k) <= 1e-10 * scale

    def test_exp_trick(self):
        rng = sample_rng(10, 0)
        D = DerivationForm(random_symbol(8, seed=10))
        a = random_poly(rng, 4)
        a = a / lp_norm(a, 2)
        g = random_poly(rng, 4)
        assert exp_trick_residual(D, a, g, 40) <= 1e-8 * (1 + abs(D(a, g)))

    def test_exp_trick_rejects_large_exponent(self):
        D = DerivationForm(SymbolH1.monomial(1))
        with pytest.raises(PreconditionError) as excinfo:
            exp_trick_residual(D, AnalyticPoly.monomial(1, 3.0), ONE)
        assert excinfo.value.details["limit"] == 2.0


class TestSymbolExtraction:
    """extract_symbol inverts h -> D_h."""

    def test_round_trip(self):
        for i in range(5):
            h = random_symbol(3 + 4 * i, seed=12, index=i, decay=1.0)
            recovered = extract_symbol(DerivationForm(h), h.degree)
            np.testing.assert_allclose(recovered.poly.coeffs, h.poly.coeffs, atol=1e-12)

    def test_round_trip_through_gram_matrix(self):
        h = random_symbol(6, seed=13, decay=1.0)
        M = gram_matrix(DerivationForm(h), 8)
        recovered = extract_symbol(M.as_evaluator(), 6)
        np.testing.assert_allclose(recovered.poly.coeffs, h.poly.coeffs, atol=1e-12)

    def test_plain_callable(self):
        recovered = extract_symbol(lambda f, g: 2 * math.pi * f.coefficient(2), 3)
        np.testing.assert_allclose(recovered.poly.coeffs, [0, 0, 1, 0], atol=1e-15)

    def test_degree_must_be_positive(self):
        with pytest.raises(PreconditionError):
            extract_symbol(DerivationForm(SymbolH1.monomial(1)), 0)


class TestGramMatrix:
    """Finite sections of D on monomials."""

    @pytest.mark.parametrize("n", [1, 2, 5, 8])
    def test_monomial_symbol_rank(self, n):
        rank, values = rank_and_singular_values(gram_matrix(DerivationForm(SymbolH1.monomial(n)), 12), 1e-10)
        assert rank == n
        assert len(values) == 13

    def test_entries_match_bilinear_form(self):
        D = DerivationForm(random_symbol(7, seed=14))
        M = gram_matrix(D, 5)
        for j in range(6):
            for k in range(6):
                expected = D(AnalyticPoly.monomial(j), AnalyticPoly.monomial(k))
                assert M.entries[j, k] == pytest.approx(expected, abs=1e-14)

    def test_kills_high_multiples(self):
        n = 3
        D = DerivationForm(SymbolH1.monomial(n))
        for i in range(5):
            rng = sample_rng(15, i)
            p, q = random_poly(rng, 6), random_poly(rng, 6)
            assert abs(D(p.shifted(n + 2), q)) <= 1e-12

    def test_evaluator_rejects_high_degree(self):
        M = gram_matrix(DerivationForm(SymbolH1.monomial(1)), 4)
        with pytest.raises(PreconditionError):
            M.as_evaluator()(AnalyticPoly.monomial(5), ONE)

    def test_dict_round_trip(self):
        M = gram_matrix(DerivationForm(random_symbol(4, seed=16)), 4)
        again = GramMatrix.from_dict(M.to_dict())
        np.testing.assert_array_equal(again.entries, M.entries)

    def test_from_dict_malformed(self):
        with pytest.raises(InputError):
            GramMatrix.from_dict({"N": 2})

    @pytest.mark.parametrize(
        "data",
        [
            {"N": 3, "entries": [[[1, 0]]]},
            {"N": 1, "entries": [[[1, 0], [0, 0]], [[0, 0]]]},
            {"N": "two", "entries": [[[0, 0]]]},
            {"N": 1, "entries": 5},
        ],
    )
    def test_from_dict_wrong_shape(self, data):
        with pytest.raises(InputError):
            GramMatrix.from_dict(data)

    def test_invalid_order_and_tolerance(self):
        D = DerivationForm(SymbolH1.monomial(1))
        with pytest.raises(PreconditionError):
            gram_matrix(D, 0)
        with pytest.raises(PreconditionError):
            rank_and_singular_values(gram_matrix(D, 2), 0.0)

    def test_zero_symbol_rank(self):
        rank, _ = rank_and_singular_values(gram_matrix(DerivationForm(SymbolH1.zero()), 4), 1e-10)
        assert rank == 0


class TestNormBounds:
    """Upper bound, sampled lower bound and tail bounds."""

    def test_dz_norm(self):
        D = DerivationForm(SymbolH1.monomial(1))
        assert norm_upper_bound(D) == pytest.approx(2 * math.pi)
        assert norm_lower_bound_mc(D, 20, 0, 6) == pytest.approx(2 * math.pi, rel=1e-12)

    def test_z_squared_upper_bound(self):
        D = DerivationForm(SymbolH1.monomial(2))
        assert norm_upper_bound(D) == pytest.approx(32 * math.pi ** 2, rel=1e-10)

    def test_zero_symbol(self):
        D = DerivationForm(SymbolH1.zero())
        assert norm_upper_bound(D) == 0.0
        assert norm_lower_bound_mc(D, 5, 0, 4) == 0.0

    def test_sandwich(self):
        for i in range(4):
            h = random_symbol(10, seed=17, index=i)
            D = DerivationForm(h)
            upper = norm_upper_bound(D)
            assert norm_lower_bound_mc(D, 30, 17, 10) <= upper * (1 + 1e-6)
            assert lp_norm(h.poly, 1) <= 2 * math.e * upper * (1 + 1e-6)

    def test_lower_bound_needs_samples(self):
        with pytest.raises(PreconditionError):
            norm_lower_bound_mc(DerivationForm(SymbolH1.monomial(1)), 0, 0, 3)

    def test_monomial_upper_bound_cached(self):
        assert monomial_upper_bound(4) == norm_upper_bound(DerivationForm(SymbolH1.monomial(4)))

    def test_tail_reaches_zero_and_decreases(self):
        D = DerivationForm(random_symbol(9, seed=18))
        tails = [fejer_tail_bound(D, N) for N in range(12)]
        assert all(b <= a + 1e-12 for a, b in zip(tails, tails[1:]))
        assert tails[9] == 0.0
        assert tails[0] > 0.0

    def test_fejer_scheme(self):
        D = DerivationForm(random_symbol(5, seed=19))
        assert fejer_tail_bound(D, 3, "fejer") > 0.0
        assert fejer_tail_bound(D, 0, "fejer") == pytest.approx(norm_upper_bound(D), rel=1e-12)

    def test_fejer_scheme_bounds_the_truncated_tail(self):
        h = SymbolH1.from_coeffs([1.0, 0.0, 1.0])
        D = DerivationForm(h)
        tail = DerivationForm(h - fejer_truncate(h, 1))
        assert fejer_tail_bound(D, 1, scheme="fejer") == pytest.approx(norm_upper_bound(tail), rel=1e-12)
        assert fejer_tail_bound(D, 1) < fejer_tail_bound(D, 1, scheme="fejer")

    def test_unknown_scheme_and_negative_order(self):
        D = DerivationForm(SymbolH1.monomial(2))
        with pytest.raises(PreconditionError):
            fejer_tail_bound(D, 2, "cesaro")
        with pytest.raises(PreconditionError):
            fejer_tail_bound(D, -1)
