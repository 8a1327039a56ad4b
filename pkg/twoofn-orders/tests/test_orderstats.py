# -------------------------------------------------------------------------
# Copyright (c) twoofn-orders contributors. All rights reserved.
# Licensed under the MIT License. See License.txt in the project root for
# license information.
# --------------------------------------------------------------------------

import pytest
import logging
import numpy as np
from twoofn import constant, els, orderstats, copula
from twoofn.baseline import create_baseline
from twoofn.els import ELSConfig
from twoofn.common.errors import ShapeNotUnit, DegenerateDenominator, GridBelowLocation
from twoofn.models.grid import GridSpec
from twoofn.models.reports import HOLDS, FAILS, ST, RH, X_LE_Y, Y_LE_X

logging.basicConfig(level=logging.INFO)


@pytest.fixture
def loglog():
    return create_baseline("Loglog")


@pytest.fixture
def power():
    return create_baseline("PowerCap", a=0.2, c=100)


@pytest.fixture
def scale_pair(power):
    return (ELSConfig(4, (5, 9, 10), 4, power), ELSConfig(4, (7, 10, 12), 4, power))


@pytest.fixture
def rh_pair(loglog):
    return (ELSConfig(4, (2, 5, 9), 1, loglog), ELSConfig(4, (3, 6, 7), 1, loglog))


@pytest.fixture
def mixed(loglog):
    return ELSConfig((0.0, 1.0, 2.0), (1.0, 2.0, 3.0), (0.8, 1.0, 2.0), loglog)


@pytest.mark.describe("cdf_second_largest_indep()")
class TestCdfSecondLargestIndep(object):
    @pytest.mark.it("Equals F_1 + F_2 - F_1 F_2 for two components")
    def test_two_components(self, loglog):
        cfg = ELSConfig((1.0, 2.0), (1.0, 3.0), (0.5, 2.0), loglog)
        xs = np.linspace(2.01, 40.0, 200)
        f = els.component_cdfs(cfg, xs)
        expected = f[0] + f[1] - f[0] * f[1]
        assert np.max(np.abs(orderstats.cdf_second_largest_indep(cfg, xs) - expected)) <= 1e-14

    @pytest.mark.it("Equals 3F^2 - 2F^3 for three identical components")
    def test_homogeneous(self, loglog):
        cfg = ELSConfig(0, 1, 1, loglog, n=3)
        assert orderstats.cdf_second_largest_indep(cfg, 1.0) == pytest.approx(0.5, abs=1e-15)
        xs = np.linspace(0.1, 20.0, 50)
        f = xs / (1.0 + xs)
        assert np.allclose(
            orderstats.cdf_second_largest_indep(cfg, xs), 3 * f ** 2 - 2 * f ** 3, atol=1e-14
        )

    @pytest.mark.it("Returns 0 at and below the largest location")
    @pytest.mark.parametrize("x", [pytest.param(2.0, id="At"), pytest.param(1.5, id="Below")])
    def test_below_location(self, mixed, x):
        assert orderstats.cdf_second_largest_indep(mixed, x) == 0.0

    @pytest.mark.it("Is nondecreasing and lies above the distribution function of the maximum")
    def test_monotone_and_sandwich(self, mixed, scale_pair):
        for cfg in (mixed,) + scale_pair:
            xs = np.linspace(cfg.max_location + 1e-3, cfg.max_location + 200.0, 1000)
            values = orderstats.cdf_second_largest_indep(cfg, xs)
            assert np.all(np.diff(values) >= -constant.CDF_MONOTONE_TOLERANCE)
            assert np.all(orderstats.cdf_max(cfg, xs) <= values + 1e-15)
            assert np.all((values >= 0.0) & (values <= 1.0))

    @pytest.mark.it("Reaches 1 at the upper end of a bounded support")
    def test_upper_end(self, scale_pair):
        cfg = scale_pair[0]
        assert orderstats.cdf_second_largest_indep(cfg, cfg.system_upper()) == pytest.approx(1.0)

    @pytest.mark.it("Refuses configurations with a generator")
    def test_generator(self, mixed):
        coupled = mixed.replace(generator=copula.create_generator("Clayton", theta=1.0))
        with pytest.raises(ValueError):
            orderstats.cdf_second_largest_indep(coupled, 3.0)

    @pytest.mark.it("Keeps F_X above F_Y for scale vectors ordered by weak supermajorization")
    def test_scale_ordered_pair(self, scale_pair):
        cfgX, cfgY = scale_pair
        xs = np.linspace(4.001, 100.0, 2000)
        diff = orderstats.cdf_second_largest_indep(cfgX, xs) - orderstats.cdf_second_largest_indep(
            cfgY, xs
        )
        assert np.all(diff >= -1e-9)


@pytest.mark.describe("cdf_second_largest()")
class TestCdfSecondLargest(object):
    @pytest.mark.it("Dispatches to the copula formula when a generator is configured")
    def test_dispatch(self, mixed):
        coupled = mixed.replace(generator=copula.Independence())
        xs = np.linspace(2.5, 30.0, 20)
        assert np.allclose(
            orderstats.cdf_second_largest(coupled, xs),
            orderstats.cdf_second_largest(mixed, xs),
            atol=1e-12,
        )


@pytest.mark.describe("rh_second_largest()")
class TestRhSecondLargest(object):
    @pytest.mark.it("Evaluates the two-component log-logistic case by hand")
    @pytest.mark.parametrize(
        "method",
        [
            pytest.param(orderstats.CLOSED_FORM, id="Closed form"),
            pytest.param(orderstats.NUMERIC_LOGDERIV, id="Numeric"),
        ],
    )
    def test_two_components(self, loglog, method):
        cfg = ELSConfig(0, 1, 1, loglog, n=2)
        assert orderstats.cdf_second_largest_indep(cfg, 1.0) == pytest.approx(0.75)
        assert orderstats.rh_second_largest(cfg, 1.0, method) == pytest.approx(1.0 / 3, rel=1e-6)
        assert orderstats.pdf_second_largest_indep(cfg, 1.0) == pytest.approx(0.25)

    @pytest.mark.it("Agrees between the closed form and the numeric log-derivative")
    def test_methods_agree(self, rh_pair):
        for cfg in rh_pair:
            closed = orderstats.rh_second_largest(cfg, 10.0, orderstats.CLOSED_FORM)
            numeric = orderstats.rh_second_largest(cfg, 10.0, orderstats.NUMERIC_LOGDERIV)
            assert numeric == pytest.approx(closed, rel=1e-6)
        xs = np.linspace(4.5, 80.0, 100)
        closed = orderstats.rh_second_largest(rh_pair[0], xs, orderstats.CLOSED_FORM)
        numeric = orderstats.rh_second_largest(rh_pair[0], xs, orderstats.NUMERIC_LOGDERIV)
        assert np.allclose(numeric, closed, rtol=1e-6)

    @pytest.mark.it("Defaults to the closed form for unit shapes and the numeric form otherwise")
    def test_default_method(self, rh_pair, mixed):
        cfg = rh_pair[0]
        assert orderstats.rh_second_largest(cfg, 10.0) == orderstats.rh_second_largest(
            cfg, 10.0, orderstats.CLOSED_FORM
        )
        assert orderstats.rh_second_largest(mixed, 6.0) == orderstats.rh_second_largest(
            mixed, 6.0, orderstats.NUMERIC_LOGDERIV
        )

    @pytest.mark.it("Keeps rh_X below rh_Y for majorized scales under the log-logistic baseline")
    def test_rh_ordered_pair(self, rh_pair):
        xs = np.linspace(4.01, 100.0, 500)
        diff = orderstats.rh_second_largest(rh_pair[0], xs) - orderstats.rh_second_largest(
            rh_pair[1], xs
        )
        assert np.all(diff < 0)

    @pytest.mark.it("Raises ShapeNotUnit for the closed form with shapes other than 1")
    def test_shape_not_unit(self, mixed):
        with pytest.raises(ShapeNotUnit):
            orderstats.rh_second_largest(mixed, 6.0, orderstats.CLOSED_FORM)

    @pytest.mark.it("Raises DegenerateDenominator where the distribution function vanishes")
    def test_degenerate(self, rh_pair):
        with pytest.raises(DegenerateDenominator):
            orderstats.rh_second_largest(rh_pair[0], 4.0)
        values = orderstats.rh_second_largest(rh_pair[0], np.array([3.0, 4.0, 5.0]))
        assert np.isnan(values[0]) and np.isnan(values[1])
        assert np.isfinite(values[2])

    @pytest.mark.it("Raises ValueError for an unknown method")
    def test_unknown_method(self, rh_pair):
        with pytest.raises(ValueError):
            orderstats.rh_second_largest(rh_pair[0], 10.0, "symbolic")


@pytest.mark.describe("scale_partials()")
class TestScalePartials(object):
    @pytest.mark.it("Matches central differences in each scale parameter")
    def test_finite_differences(self, loglog):
        cfg = ELSConfig(1.0, (1.0, 2.0, 3.0), 2.0, loglog)
        x = 4.0
        partials = orderstats.scale_partials(cfg, x)
        step = 1e-6
        for i in range(cfg.n):
            up = cfg.theta.copy()
            down = cfg.theta.copy()
            up[i] += step
            down[i] -= step
            numeric = (
                orderstats.cdf_second_largest_indep(cfg.replace(theta=up), x)
                - orderstats.cdf_second_largest_indep(cfg.replace(theta=down), x)
            ) / (2 * step)
            assert partials[i] == pytest.approx(numeric, rel=1e-5)
        assert np.all(partials < 0)

    @pytest.mark.it("Requires a common location and a common shape")
    def test_heterogeneous(self, mixed):
        with pytest.raises(ValueError):
            orderstats.scale_partials(mixed, 6.0)


@pytest.mark.describe("default_order_grid()")
class TestDefaultOrderGrid(object):
    @pytest.mark.it("Runs from above the largest location to the later support end")
    def test_bounded(self, scale_pair):
        grid = orderstats.default_order_grid(*scale_pair)
        assert grid.lo == pytest.approx(5.0)
        assert grid.hi == 1004.0

    @pytest.mark.it("Stops where every component of an unbounded baseline has nearly failed")
    def test_unbounded(self, rh_pair):
        grid = orderstats.default_order_grid(*rh_pair, points=256)
        assert grid.points == 256
        assert grid.hi == pytest.approx(4.0 + 9.0 * 999.0)
        assert orderstats.cdf_second_largest(rh_pair[0], grid.hi) > 0.999


@pytest.mark.describe("argument_limit()")
class TestArgumentLimit(object):
    @pytest.mark.it("Uses the smallest location and scale of both systems")
    def test_bounded(self, scale_pair):
        assert orderstats.argument_limit(*scale_pair) == 4.0 + 100.0 * 5.0

    @pytest.mark.it("Is infinite for unbounded baselines")
    def test_unbounded(self, rh_pair):
        assert orderstats.argument_limit(*rh_pair) == np.inf

    @pytest.mark.it("Lies below the later system support end")
    def test_below_support_end(self, scale_pair):
        limit = orderstats.argument_limit(*scale_pair)
        assert limit < orderstats.default_order_grid(*scale_pair).hi


@pytest.mark.describe("check_cdf_monotone()")
class TestCheckCdfMonotone(object):
    @pytest.mark.it("Certifies the computed distribution functions as nondecreasing")
    def test_holds(self, scale_pair, mixed):
        coupled = mixed.replace(generator=copula.create_generator("Clayton", theta=2.0))
        for cfg, grid in [
            (scale_pair[0], GridSpec(4.001, 1004, 2048)),
            (mixed, GridSpec(2.001, 200, 2048)),
            (coupled, GridSpec(2.001, 200, 2048)),
        ]:
            report = orderstats.check_cdf_monotone(cfg, grid)
            assert report.holds
            assert report.worst_violation <= constant.CDF_MONOTONE_TOLERANCE
            assert report.location is None

    @pytest.mark.it("Reports the largest drop and where it ends")
    def test_fails(self, mocker, scale_pair):
        mocker.patch.object(
            orderstats, "cdf_second_largest", side_effect=lambda cfg, xs: np.exp(-xs)
        )
        grid = GridSpec(5.0, 6.0, 3)
        report = orderstats.check_cdf_monotone(scale_pair[0], grid)
        assert not report.holds
        assert report.worst_violation == pytest.approx(np.exp(-5.0) - np.exp(-5.5))
        assert report.location == 5.5

    @pytest.mark.it("Warns during an st check when a distribution function decreases")
    def test_check_order_warns(self, mocker, scale_pair):
        mocker.patch.object(
            orderstats, "cdf_second_largest", side_effect=lambda cfg, xs: np.exp(-xs)
        )
        warning = mocker.patch.object(orderstats.logger, "warning")
        orderstats.check_order(*scale_pair, order=ST, grid=GridSpec(4.001, 100, 64))
        assert warning.call_count > 0
        assert "drops by" in warning.call_args[0][0]


@pytest.mark.describe("check_order()")
class TestCheckOrder(object):
    @pytest.mark.it("Certifies the st order of the scale-ordered pair")
    def test_st_holds(self, scale_pair):
        report = orderstats.check_order(*scale_pair, order=ST, grid=GridSpec(4.001, 100, 1024))
        assert report.verdict == HOLDS
        assert report.refined_verdict == HOLDS
        assert report.order == ST
        assert report.direction == X_LE_Y
        assert report.max_violation <= 1e-9
        assert report.crossing_x is None

    @pytest.mark.it("Reports the reverse direction as failing with a witness")
    def test_reverse_direction(self, scale_pair):
        report = orderstats.check_order(
            *scale_pair, order=ST, grid=GridSpec(4.001, 100, 1024), direction=Y_LE_X
        )
        assert report.verdict == FAILS
        assert report.direction == Y_LE_X
        assert report.max_violation > 1e-9
        assert 4.001 <= report.violation_x <= 100

    @pytest.mark.it("Certifies the rh order of the majorized log-logistic pair")
    def test_rh_holds(self, rh_pair):
        report = orderstats.check_order(*rh_pair, order=RH, grid=GridSpec(4.001, 100, 1024))
        assert report.verdict == HOLDS
        assert report.order == RH

    @pytest.mark.it("Holds with zero violation when both systems are the same")
    @pytest.mark.parametrize("order", [ST, RH])
    def test_reflexive(self, rh_pair, order):
        report = orderstats.check_order(
            rh_pair[0], rh_pair[0], order=order, grid=GridSpec(4.001, 50, 256)
        )
        assert report.verdict == HOLDS
        assert report.max_violation == 0.0
        assert report.violation_x is None

    @pytest.mark.it("Locates the crossing of distribution functions that cross")
    def test_crossing(self):
        extended = create_baseline("PowerCapExtended", a=0.001, c=10)
        cfgX = ELSConfig((3, 4, 5), (3, 0.1, 0.02), 3, extended)
        cfgY = ELSConfig((3, 4, 5), (2, 0.03, 0.01), 3, extended)
        report = orderstats.check_order(cfgX, cfgY, order=ST, grid=GridSpec(5.001, 10))
        assert report.verdict == FAILS
        assert 5.6 < report.crossing_x < 6.2

    @pytest.mark.it("Implies the st order whenever the rh order holds")
    def test_rh_implies_st(self, rh_pair):
        grid = GridSpec(4.001, 100, 512)
        assert orderstats.check_order(*rh_pair, order=RH, grid=grid).holds
        assert orderstats.check_order(*rh_pair, order=ST, grid=grid).holds

    @pytest.mark.it("Stops the rh grid short of a bounded support end")
    def test_bounded_rh_grid(self, power):
        cfg = ELSConfig(1, (1, 2, 3), 1, power)
        report = orderstats.check_order(cfg, cfg, order=RH, grid=GridSpec(1.001, 300, 128))
        assert report.grid.hi < cfg.system_upper()
        assert report.grid.hi > 200.0

    @pytest.mark.it("Raises GridBelowLocation for a grid starting at a location")
    @pytest.mark.parametrize("lo", [pytest.param(4.0, id="At"), pytest.param(1.0, id="Below")])
    def test_grid_below_location(self, scale_pair, lo):
        with pytest.raises(GridBelowLocation):
            orderstats.check_order(*scale_pair, order=ST, grid=GridSpec(lo, 100, 64))

    @pytest.mark.it("Raises ValueError for an unknown order or direction")
    def test_invalid(self, scale_pair):
        grid = GridSpec(4.001, 100, 64)
        with pytest.raises(ValueError):
            orderstats.check_order(*scale_pair, order="lr", grid=grid)
        with pytest.raises(ValueError):
            orderstats.check_order(*scale_pair, order=ST, grid=grid, direction="X>=Y")


@pytest.mark.describe("write_order_csv()")
class TestWriteOrderCsv(object):
    @pytest.mark.it("Writes one row per grid point under the order's header")
    @pytest.mark.parametrize(
        "order, header",
        [
            pytest.param(ST, "x,F_X,F_Y,diff", id="st"),
            pytest.param(RH, "x,rh_X,rh_Y,diff", id="rh"),
        ],
    )
    def test_csv(self, tmp_path, rh_pair, order, header):
        path = str(tmp_path / "order.csv")
        orderstats.write_order_csv(path, rh_pair[0], rh_pair[1], order, GridSpec(4.5, 20, 16))
        with open(path) as f:
            lines = f.read().splitlines()
        assert lines[0] == header
        assert len(lines) == 17
        x, value_x, value_y, diff = [float(v) for v in lines[1].split(",")]
        assert x == 4.5
        assert diff == pytest.approx(value_x - value_y, abs=1e-15)


@pytest.mark.slow
@pytest.mark.describe("mc_cdf_second_largest()")
class TestMonteCarlo(object):
    @pytest.mark.it("Agrees with the closed form within 3.5 standard errors")
    def test_against_closed_form(self, scale_pair):
        cfg = scale_pair[0]
        estimate = orderstats.mc_cdf_second_largest(cfg, 60.0, 10 ** 6, 11)
        assert estimate.within(orderstats.cdf_second_largest_indep(cfg, 60.0))

    @pytest.mark.it("Estimates 0.5 for three identical log-logistic components at 1")
    def test_homogeneous(self, loglog):
        cfg = ELSConfig(0, 1, 1, loglog, n=3)
        estimate = orderstats.mc_cdf_second_largest(cfg, 1.0, 10 ** 6, 5)
        assert estimate.within(0.5)

    @pytest.mark.it("Returns 0 at and below the largest location")
    def test_below_location(self, scale_pair):
        assert orderstats.mc_cdf_second_largest(scale_pair[0], 4.0, 1000, 1).estimate == 0.0

    @pytest.mark.it("Stays within the DKW bound over a 32-point grid")
    def test_sup_distance(self, mixed):
        xs = np.linspace(2.1, 40.0, 32)
        distance = orderstats.mc_sup_distance(mixed, xs, 10 ** 6, 3)
        assert distance <= orderstats.dkw_bound(10 ** 6)
