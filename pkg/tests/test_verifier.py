"""Inequality checks, limit proxies, the explicit growth constant, and the
asymptotic-ratio theorems with their sharpness cases."""

import json
import math

import numpy as np
import pytest

from conftest import catalog_suite, suite_ids
from dilatox.catalog import linear, log_singular, radial_stretch
from dilatox.errors import ConfigError
from dilatox.functionals import dilatation_grid
from dilatox.quadrature import QuadratureConfig
from dilatox.verifier import (
    LimitProxy,
    RadiusLadder,
    check_lemma1,
    check_lemma2,
    check_lemma3,
    check_lemma4,
    check_length_area,
    growth_constant,
    margins_to_csv,
    reports_to_json,
    theorem1_bound,
    theorem3_bound,
    theorem5_bound,
    theorem6_bracket,
    theorem7_area_derivative,
    tolerance,
)


class TestInfrastructure:
    def test_tolerance_scales(self):
        assert tolerance(0.0, 0.0) == pytest.approx(1e-9)
        assert tolerance(2.0, 1.0) == pytest.approx(1e-9 + 2e-6)
        assert tolerance(math.inf, 1.0) == pytest.approx(1e-9)

    def test_growth_constant_hand_values(self):
        # c_4 = 2^{3/2} / 2^{1/2} = 2 and c_3 = 2^2 / 1 = 4
        assert growth_constant(4.0) == pytest.approx(2.0)
        assert growth_constant(3.0) == pytest.approx(4.0)
        with pytest.raises(ConfigError):
            growth_constant(2.0)

    def test_ladder_geometry(self):
        lad = RadiusLadder(r_max=0.4, rho=0.5, count=4, tail=3)
        np.testing.assert_allclose(lad.radii(), [0.4, 0.2, 0.1, 0.05])
        np.testing.assert_allclose(lad.tail_radii(), [0.2, 0.1, 0.05])

    def test_ladder_validation(self):
        with pytest.raises(ConfigError):
            RadiusLadder(rho=1.5)
        with pytest.raises(ConfigError):
            RadiusLadder(count=2, tail=3)
        lad = RadiusLadder(r_max=0.5, rho=0.1, count=10)
        with pytest.raises(ConfigError):
            lad.validate_against(QuadratureConfig())  # deepest rung below r_min

    def test_limit_proxy_tail_semantics(self):
        vals = [3.0, 1.0, 2.0]
        assert LimitProxy.from_tail("liminf", vals).value == 1.0
        assert LimitProxy.from_tail("limsup", vals).value == 3.0
        assert LimitProxy.from_tail("limsup", vals).tail_spread == pytest.approx(2.0)


def _applicable(p: float) -> bool:
    return True


class TestLemmaChecks:
    @pytest.mark.parametrize("entry", catalog_suite(), ids=suite_ids())
    @pytest.mark.parametrize("p", [1.5, 2.0, 3.0])
    def test_lemma1_holds_on_catalog(self, entry, p, ladder, cfg):
        rep = check_lemma1(entry.model, p, ladder, cfg)
        assert rep.holds, rep.margins

    @pytest.mark.parametrize("entry", catalog_suite(), ids=suite_ids())
    def test_length_area_holds_on_catalog(self, entry, ladder, cfg):
        rep = check_length_area(entry.model, 3.0, 0.1, 0.8, cfg)
        assert rep.holds, rep.margins

    @pytest.mark.parametrize("entry", catalog_suite(), ids=suite_ids())
    def test_lemma2_holds_on_catalog(self, entry, ladder, cfg):
        rep = check_lemma2(entry.model, 3.0, ladder, cfg)
        assert rep.holds, rep.margins

    @pytest.mark.parametrize("entry", catalog_suite(), ids=suite_ids())
    def test_lemma3_holds_on_catalog(self, entry, cfg):
        def q_fn(rr, th, _m=entry.model):
            return dilatation_grid(_m, np.asarray(rr, dtype=float), th, 3.0)

        rep = check_lemma3(q_fn, 3.0, 0.1, cfg)
        assert rep.holds, rep.margins

    @pytest.mark.parametrize("entry", catalog_suite(), ids=suite_ids())
    def test_lemma4_holds_on_catalog(self, entry, ladder, cfg):
        rep = check_lemma4(entry.model, 1.5, ladder, cfg)
        assert rep.holds, rep.margins

    def test_conformal_saturation(self, ladder, cfg):
        ident = next(e for e in catalog_suite() if e.model.label == "identity")
        for rep in (check_lemma1(ident.model, 3.0, ladder, cfg),
                    check_lemma4(ident.model, 1.5, ladder, cfg)):
            assert max(abs(m) for m in rep.margins) <= 1e-6

    def test_lemma2_rejects_low_order(self, ladder, cfg):
        with pytest.raises(ConfigError):
            check_lemma2(linear(0.5).model, 1.5, ladder, cfg)

    def test_lemma4_rejects_high_order(self, ladder, cfg):
        with pytest.raises(ConfigError):
            check_lemma4(linear(0.5).model, 3.0, ladder, cfg)


class TestTheorem1:
    def test_linear_sharp_within_factor(self, ladder, cfg):
        res = theorem1_bound(linear(0.25).model, 4.0, ladder, cfg)
        assert res.report.holds
        # disc mean of the constant dilatation is |k|^2 = 1/16, bound c_4/4 = 1/2
        assert res.k.value == pytest.approx(0.0625, rel=1e-9)
        assert res.bound == pytest.approx(0.5, rel=1e-9)
        assert res.attained == pytest.approx(0.25, rel=1e-9)

    def test_divergent_mean_is_vacuous(self, ladder, cfg):
        res = theorem1_bound(log_singular(3.0).model, 3.0, ladder, cfg)
        assert "divergent-mean" in res.report.notes
        assert "vacuous" in res.report.notes
        assert res.report.holds
        assert math.isinf(res.bound)

    def test_vanishing_ratio_covered_by_proxy_spread(self, ladder, cfg):
        # both sides of the limit inequality decay to 0 for the stretching map;
        # the finite-radius comparison is inconclusive and must be absorbed by
        # the proxies' tail spreads rather than reported as a violation
        res = theorem1_bound(radial_stretch(1.5).model, 3.0, ladder, cfg)
        assert res.report.holds
        assert "proxy-slack" in res.report.notes

    def test_monotone_tightening_linear(self, cfg):
        bounds = []
        for count in (10, 15, 20):
            lad = RadiusLadder(count=count)
            bounds.append(theorem1_bound(linear(0.5).model, 4.0, lad, cfg).bound)
        assert abs(bounds[0] - bounds[2]) <= 1e-9  # constant mean: flat bound


class TestTailTheorems:
    @pytest.mark.parametrize("k", [0.25, 0.5, 0.9])
    def test_theorem3_linear_sharpness(self, k, cfg):
        lad = RadiusLadder(r_max=0.01, rho=0.5, count=12, tail=5)
        deep = QuadratureConfig(r_min=1e-6)
        res = theorem3_bound(linear(k).model, 4.0, lad, deep)
        assert res.report.holds
        assert res.k0.value == pytest.approx(1.0 / (2.0 * k * k), rel=1e-6)
        assert res.bound == pytest.approx(k, abs=1e-4)

    @pytest.mark.parametrize("k", [0.25, 0.5, 0.9])
    def test_theorem5_linear_sharpness(self, k, ladder, cfg):
        res = theorem5_bound(linear(k).model, 1.5, ladder, cfg)
        assert res.report.holds
        assert res.k0.value == pytest.approx(2.0 * math.sqrt(k), rel=1e-6)
        assert res.bound == pytest.approx(k, abs=1e-4)

    def test_theorem3_rejects_low_order(self, ladder, cfg):
        with pytest.raises(ConfigError):
            theorem3_bound(linear(0.5).model, 1.5, ladder, cfg)

    def test_theorem5_rejects_high_order(self, ladder, cfg):
        with pytest.raises(ConfigError):
            theorem5_bound(linear(0.5).model, 3.0, ladder, cfg)


class TestTheorem6:
    def test_linear_bracket_collapses(self, cfg):
        lad = RadiusLadder(r_max=0.01, rho=0.5, count=8, tail=5)
        deep = QuadratureConfig(r_min=1e-5)
        res = theorem6_bracket(linear(0.5).model, 1.5, lad, deep)
        assert res.report.holds
        assert res.lower == pytest.approx(0.5, abs=1e-4)
        assert res.upper == pytest.approx(0.5, abs=1e-4)
        assert res.a_proxy.value == pytest.approx(0.5, abs=1e-9)

    def test_remark_relation_equality_case(self, cfg):
        # for the linear map the relation between the two tail constants is an
        # equality: k1 = sqrt(2), k2 = 2 at k = 0.5, p = 1.5
        lad = RadiusLadder(r_max=0.01, rho=0.5, count=8, tail=5)
        deep = QuadratureConfig(r_min=1e-5)
        res = theorem6_bracket(linear(0.5).model, 1.5, lad, deep)
        assert res.k1.value == pytest.approx(math.sqrt(2.0), rel=1e-8)
        assert res.k2.value == pytest.approx(2.0, rel=1e-4)
        rhs = 0.5 ** 0.5 / (0.5 ** 1.5 * res.k2.value ** 0.5)
        assert res.k1.value <= rhs + 1e-6

    def test_uncertified_limit_is_vacuous(self, ladder, cfg):
        # |f(z)|/|z| -> 0 for the stretching map, too slowly for the ladder to
        # certify a single limit; the bracket must then be vacuous, not violated
        res = theorem6_bracket(radial_stretch(1.5).model, 1.5, ladder, cfg)
        assert res.report.holds
        assert "no-single-limit" in res.report.notes
        assert "vacuous" in res.report.notes


class TestTheorem7:
    def test_linear_area_derivative(self, ladder, cfg):
        res = theorem7_area_derivative(linear(0.5).model, 1.5, 4.0, ladder, cfg)
        assert res.report.holds
        for proxy in (res.limit_lower, res.limit_upper, res.area_ratio):
            assert proxy.value == pytest.approx(0.25, abs=1e-3)

    def test_radial_stretch_zero_derivative(self, ladder, cfg):
        res = theorem7_area_derivative(radial_stretch(1.0).model, 1.5, 3.0, ladder, cfg)
        assert res.report.holds
        for proxy in (res.limit_lower, res.limit_upper, res.area_ratio):
            assert abs(proxy.value) <= 1e-3

    def test_order_constraints(self, ladder, cfg):
        with pytest.raises(ConfigError):
            theorem7_area_derivative(linear(0.5).model, 2.5, 4.0, ladder, cfg)


class TestSerialization:
    def test_reports_json_deterministic(self, ladder, cfg):
        rep = check_lemma2(linear(0.5).model, 3.0, ladder, cfg)
        a = reports_to_json([rep])
        b = reports_to_json([check_lemma2(linear(0.5).model, 3.0, ladder, cfg)])
        assert a == b
        doc = json.loads(a)
        assert doc[0]["check_id"] == "lemma2"
        assert doc[0]["holds"] is True

    def test_margins_csv_roundtrip(self, tmp_path, ladder, cfg):
        rep = check_lemma2(linear(0.5).model, 3.0, ladder, cfg)
        path = tmp_path / "margins.csv"
        margins_to_csv([rep], path)
        lines = path.read_text().strip().splitlines()
        assert lines[0] == "check_id,p,r,margin"
        assert len(lines) == 1 + len(rep.radii)
        r_back = float(lines[1].split(",")[2])
        assert r_back == rep.radii[0]
