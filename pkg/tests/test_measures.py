"""
Tests for radial quadrature rules and disc measures.
"""

import math

import numpy as np
import pytest

from hardyderiv.core.circle.poly import AnalyticPoly
from hardyderiv.core.errors import InputError, PreconditionError
from hardyderiv.core.hardy.symbols import random_poly, sample_rng
from hardyderiv.core.measures import (
    DiscMeasure,
    MeasureComponent,
    MeasureKind,
    carleson_radial_rule,
    lambda_inner_closed,
    lambda_inner_quad,
    lambda_moment,
    lambda_moment_quad,
    lambda_norm_squared,
    l2_norm_measure,
    log_weight_rule,
    measure_mass_quadrature,
    measure_scale_sum,
)


class TestQuadratureRules:
    """Gauss rules for the radial weights."""

    def test_log_weight_rule_is_a_probability_rule(self):
        nodes, weights = log_weight_rule(12)
        assert weights.sum() == pytest.approx(1.0, rel=1e-13)
        assert np.all(nodes > 0) and np.all(nodes < 1)
        assert np.all(weights > 0)

    def test_log_weight_rule_is_read_only(self):
        nodes, _ = log_weight_rule(5)
        with pytest.raises(ValueError):
            nodes[0] = 0.5

    def test_log_weight_rule_single_node(self):
        nodes, weights = log_weight_rule(1)
        # integral of rho * log(1/rho) over [0, 1] is 1/4
        assert nodes[0] == pytest.approx(0.25, rel=1e-12)
        assert weights[0] == pytest.approx(1.0, rel=1e-12)

    def test_rule_size_must_be_positive(self):
        with pytest.raises(PreconditionError):
            log_weight_rule(0)
        with pytest.raises(PreconditionError):
            carleson_radial_rule(0)

    def test_carleson_rule_mass(self):
        nodes, weights = carleson_radial_rule(10)
        assert weights.sum() == pytest.approx(1.0 / 12.0, rel=1e-13)
        assert np.all(nodes > 0) and np.all(nodes < 1)

    def test_carleson_rule_first_moment(self):
        nodes, weights = carleson_radial_rule(6)
        # integral of r^2 (1 - r)^2 over [0, 1]
        assert np.sum(weights * nodes) == pytest.approx(1.0 / 30.0, rel=1e-12)


class TestLambdaMoments:
    """Moments of the Littlewood-Paley weight."""

    def test_closed_form(self):
        assert lambda_moment(0) == pytest.approx(2 * math.pi)
        assert lambda_moment(3) == pytest.approx(2 * math.pi / 16)

    def test_negative_index(self):
        with pytest.raises(PreconditionError):
            lambda_moment(-1)

    @pytest.mark.parametrize("n", [0, 1, 7, 20, 32])
    def test_quadrature_matches_closed_form(self, n):
        assert lambda_moment_quad(n, 33) == pytest.approx(lambda_moment(n), rel=1e-10)

    def test_norm_squared(self):
        p = AnalyticPoly([1.0, 2.0])
        assert lambda_norm_squared(p) == pytest.approx(2 * math.pi * (1 + 4 / 4))


class TestLittlewoodPaley:
    """<u', v'>_Lambda in closed form and by quadrature."""

    def test_closed_form_is_boundary_pairing(self):
        u = AnalyticPoly([5.0, 1.0, 2j])
        v = AnalyticPoly([-1.0, 3.0, 1.0])
        assert lambda_inner_closed(u, v) == pytest.approx(2 * math.pi * (3.0 + 2j))

    def test_constants_pair_to_zero(self):
        assert lambda_inner_closed(AnalyticPoly.constant(2.0), AnalyticPoly.monomial(1)) == 0

    def test_quadrature_agrees(self):
        for i in range(5):
            rng = sample_rng(21, i)
            u, v = random_poly(rng, 5), random_poly(rng, 5)
            closed = lambda_inner_closed(u, v)
            quad = lambda_inner_quad(u, v, 48, 64)
            assert abs(quad - closed) <= 1e-10 * (1 + abs(closed))

    def test_quadrature_size_precondition(self):
        u = AnalyticPoly.monomial(3)
        with pytest.raises(PreconditionError) as excinfo:
            lambda_inner_quad(u, u, 8, 64)
        assert excinfo.value.details["required"] == 28


class TestDiscMeasure:
    """Masses, norms and combination of disc measures."""

    def test_component_masses(self):
        k = AnalyticPoly([3.0, 1.0, 2j])
        assert DiscMeasure.arclength().total_mass() == pytest.approx(2 * math.pi)
        assert DiscMeasure.boundary(AnalyticPoly([1.0, 2.0])).total_mass() == pytest.approx(10 * math.pi)
        assert DiscMeasure.interior(k).total_mass() == pytest.approx(2 * math.pi * 5.0)

    def test_interior_constant_density_has_no_mass(self):
        mu = DiscMeasure.interior(AnalyticPoly.constant(4.0))
        assert mu.total_mass() == 0.0
        assert mu.is_zero()

    def test_negative_weight_rejected(self):
        with pytest.raises(PreconditionError):
            MeasureComponent(MeasureKind.ARCLENGTH, -1.0)
        with pytest.raises(PreconditionError):
            measure_scale_sum([(-2.0, DiscMeasure.arclength())])

    def test_scale_sum_flattens_in_order(self):
        k = AnalyticPoly([0.0, 1.0])
        mu = measure_scale_sum([(2.0, DiscMeasure.arclength()), (3.0, DiscMeasure.boundary(k))])
        assert [c.kind for c in mu.components] == [MeasureKind.ARCLENGTH, MeasureKind.BOUNDARY]
        assert mu.total_mass() == pytest.approx(2 * 2 * math.pi + 3 * 2 * math.pi)
        assert mu.scaled(0.5).total_mass() == pytest.approx(mu.total_mass() / 2)

    def test_norm_of_one_is_root_mass(self):
        k = AnalyticPoly([1.0, 0.5, -0.25j])
        mu = measure_scale_sum([(1.0, DiscMeasure.boundary(k)), (2.0, DiscMeasure.interior(k))])
        assert l2_norm_measure(AnalyticPoly.one(), mu) ** 2 == pytest.approx(mu.total_mass(), rel=1e-12)

    def test_closed_and_quadrature_norms_agree(self):
        for i in range(4):
            rng = sample_rng(22, i)
            f, k = random_poly(rng, 3), random_poly(rng, 3)
            mu = measure_scale_sum(
                [
                    (2.0, DiscMeasure.arclength()),
                    (1.5, DiscMeasure.boundary(k)),
                    (0.7, DiscMeasure.interior(k)),
                ]
            )
            closed = l2_norm_measure(f, mu)
            quad = l2_norm_measure(f, mu, method="quadrature")
            assert quad == pytest.approx(closed, rel=1e-10)

    def test_unknown_norm_method(self):
        with pytest.raises(PreconditionError):
            l2_norm_measure(AnalyticPoly.one(), DiscMeasure.arclength(), method="montecarlo")

    def test_mass_by_quadrature(self):
        k = random_poly(sample_rng(23, 0), 6)
        mu = measure_scale_sum([(1.0, DiscMeasure.boundary(k)), (4.0, DiscMeasure.interior(k))])
        assert measure_mass_quadrature(mu) == pytest.approx(mu.total_mass(), rel=1e-10)

    def test_dict_round_trip(self):
        k = AnalyticPoly([0.0, 1.0, 1j])
        mu = measure_scale_sum([(1.0, DiscMeasure.arclength()), (2.0, DiscMeasure.interior(k))])
        again = DiscMeasure.from_dict(mu.to_dict())
        assert again.total_mass() == mu.total_mass()
        assert again.components[1].kind is MeasureKind.INTERIOR

    def test_from_dict_rejects_unknown_kind(self):
        with pytest.raises(InputError):
            DiscMeasure.from_dict({"components": [{"kind": "volume", "weight": 1.0}]})
