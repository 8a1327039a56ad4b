# -------------------------------------------------------------------------
# Copyright (c) twoofn-orders contributors. All rights reserved.
# Licensed under the MIT License. See License.txt in the project root for
# license information.
# --------------------------------------------------------------------------

import pytest
import logging
from twoofn import baseline, copula
from twoofn.common.errors import DegenerateDenominator
from twoofn.els import ELSConfig
from twoofn.majorization import MAJ, WEAK_SUPER, RECIP
from twoofn.models.grid import GridSpec
from twoofn.models.reports import HypothesisResult
from twoofn.theorems import hypotheses as h
from twoofn.theorems.fixtures import get_fixture

logging.basicConfig(level=logging.INFO)


@pytest.fixture
def scales():
    """Ex3_1: weakly supermajorized scales under a power baseline"""
    fixture = get_fixture("Ex3_1")
    return fixture.cfgX, fixture.cfgY


@pytest.fixture
def homogeneous_pair():
    fixture = get_fixture("Remark_r1")
    return fixture.cfgX, fixture.cfgY


@pytest.fixture
def loglog():
    return baseline.create_baseline("Loglog")


@pytest.mark.describe("vector()")
class TestVector(object):
    @pytest.mark.it("Looks up a parameter vector by field and side")
    def test_lookup(self, scales):
        assert h.vector(scales[0], scales[1], "theta_Y").tolist() == [7.0, 10.0, 12.0]
        assert h.vector(scales[0], scales[1], "lambda_X").tolist() == [4.0, 4.0, 4.0]

    @pytest.mark.it("Raises ValueError for an unknown reference")
    @pytest.mark.parametrize("ref", ["theta_Z", "scale_X", "theta"])
    def test_unknown(self, scales, ref):
        with pytest.raises(ValueError):
            h.vector(scales[0], scales[1], ref)


@pytest.mark.describe("Hypothesis")
class TestHypothesis(object):
    @pytest.mark.it("Returns a HypothesisResult with the check's outcome and detail")
    def test_evaluate(self, scales):
        hypothesis = h.Hypothesis("always", lambda x, y, cache: (True, "fine"), "always true")
        result = hypothesis.evaluate(*scales)
        assert isinstance(result, HypothesisResult)
        assert result.name == "always"
        assert result.passed
        assert result.detail == "fine"

    @pytest.mark.it("Counts an uncertifiable check as a failed hypothesis")
    def test_not_certified(self, scales):
        def check(cfgX, cfgY, cache):
            raise DegenerateDenominator("psi' vanishes")

        result = h.Hypothesis("ratio", check, "ratio").evaluate(*scales)
        assert not result.passed
        assert result.detail.startswith("not certified")


@pytest.mark.describe("Parameter hypotheses")
class TestParameterHypotheses(object):
    @pytest.mark.it("Checks for one common scalar across both configurations")
    def test_common_scalar(self, scales):
        cfgX, cfgY = scales
        assert h.common_scalar("lambda").evaluate(cfgX, cfgY).passed
        assert h.common_scalar("alpha").evaluate(cfgX, cfgY).passed
        assert not h.common_scalar("theta").evaluate(cfgX, cfgY).passed
        shifted = cfgY.replace(lam=5.0)
        result = h.common_scalar("lambda").evaluate(cfgX, shifted)
        assert result.name == "lambda_common"
        assert not result.passed

    @pytest.mark.it("Checks for equal vectors")
    def test_equal_vectors(self, scales):
        cfgX, cfgY = scales
        assert h.equal_vectors("lambda").evaluate(cfgX, cfgY).passed
        assert not h.equal_vectors("theta").evaluate(cfgX, cfgY).passed

    @pytest.mark.it("Checks for unit shapes on both sides")
    def test_unit_shape(self, scales, homogeneous_pair):
        assert not h.unit_shape().evaluate(*scales).passed
        assert h.unit_shape().evaluate(*homogeneous_pair).passed

    @pytest.mark.it("Checks that a vector is constant")
    def test_homogeneous(self, homogeneous_pair):
        assert h.homogeneous("theta_Y").evaluate(*homogeneous_pair).passed
        assert not h.homogeneous("theta_X").evaluate(*homogeneous_pair).passed

    @pytest.mark.it("Checks that vectors share a cone")
    def test_cone(self, scales):
        assert h.cone("theta_X", "theta_Y").evaluate(*scales).passed
        opposite = get_fixture("CEx3_1")
        result = h.cone("lambda_X", "theta_X").evaluate(opposite.cfgX, opposite.cfgY)
        assert not result.passed
        assert "neither" in result.detail

    @pytest.mark.it("Checks the preorder premise and names the failing partial sum")
    def test_preorder(self, scales):
        assert h.preorder(WEAK_SUPER, "theta_X", "theta_Y").evaluate(*scales).passed
        reversed_premise = h.preorder(WEAK_SUPER, "theta_Y", "theta_X").evaluate(*scales)
        assert reversed_premise.name == "premise"
        assert not reversed_premise.passed
        assert reversed_premise.detail.endswith("at k=1")

    @pytest.mark.it("Compares reciprocals when asked")
    def test_reciprocal(self, loglog):
        cfgX = ELSConfig(1.0, (1.0, 3.0), 1.0, loglog)
        cfgY = ELSConfig(1.0, (2.0, 2.0), 1.0, loglog)
        assert h.preorder(MAJ, "theta_X", "theta_Y").evaluate(cfgX, cfgY).passed
        assert h.preorder(RECIP, "theta_X", "theta_Y").evaluate(cfgX, cfgY).passed
        assert not h.preorder(RECIP, "theta_Y", "theta_X").evaluate(cfgX, cfgY).passed
        # (1, 1/3) and (1/2, 1/2) have different totals
        result = h.preorder(MAJ, "theta_X", "theta_Y", reciprocal=True).evaluate(cfgX, cfgY)
        assert not result.passed
        assert result.detail.endswith("at k=2")

    @pytest.mark.it("Compares n times a common value with the sum of another vector")
    def test_sum_bound(self, homogeneous_pair):
        cfgX, cfgY = homogeneous_pair
        assert h.sum_bound("theta_Y", "theta_X", at_least=True).evaluate(cfgX, cfgY).passed
        assert h.sum_bound("theta_Y", "theta_X", at_least=False).evaluate(cfgX, cfgY).passed
        smaller = cfgY.replace(theta=1.5)
        assert not h.sum_bound("theta_Y", "theta_X").evaluate(cfgX, smaller).passed
        assert h.sum_bound("theta_Y", "theta_X", at_least=False).evaluate(cfgX, smaller).passed


@pytest.mark.describe("Structural hypotheses")
class TestStructuralHypotheses(object):
    @pytest.mark.it("Checks for a shared baseline")
    def test_common_baseline(self, scales, loglog):
        cfgX, cfgY = scales
        assert h.common_baseline().evaluate(cfgX, cfgY).passed
        assert not h.common_baseline().evaluate(cfgX, cfgY.replace(baseline=loglog)).passed

    @pytest.mark.it("Treats a missing generator as independence")
    def test_independent(self, scales):
        cfgX, cfgY = scales
        assert h.independent().evaluate(cfgX, cfgY).passed
        assert h.independent().evaluate(cfgX, cfgY.replace(generator=copula.Independence())).passed
        coupled = cfgY.replace(generator=copula.create_generator("Clayton", theta=1.0))
        assert not h.independent().evaluate(cfgX, coupled).passed
        assert h.generator_of(cfgX) == copula.Independence()

    @pytest.mark.it("Checks for a shared generator")
    def test_common_generator(self, scales):
        cfgX, cfgY = scales
        assert h.common_generator().evaluate(cfgX, cfgY).passed
        barnett = copula.create_generator("GumbelBarnett", a=0.5)
        assert not h.common_generator().evaluate(cfgX, cfgY.replace(generator=barnett)).passed
        assert h.common_generator().evaluate(
            cfgX.replace(generator=barnett), cfgY.replace(generator=barnett)
        ).passed


@pytest.mark.describe("Baseline and generator hypotheses")
class TestCertifiedHypotheses(object):
    @pytest.mark.it("Certifies the monotonicity of a derived baseline function")
    def test_baseline_monotone(self, scales):
        # w^2 rh_b(w) = a w for the power baseline
        hypothesis = h.baseline_monotone(baseline.W2_REV_HAZARD, baseline.INCREASING)
        result = hypothesis.evaluate(*scales)
        assert result.name == "w2_rev_hazard_increasing"
        assert result.passed

    @pytest.mark.it("Fails the monotonicity when the grid takes an argument past a bounded support")
    @pytest.mark.parametrize(
        "hi, passed",
        [
            pytest.param(100.0, True, id="Inside the support"),
            pytest.param(504.0, True, id="At the support end of the smallest scale"),
            pytest.param(600.0, False, id="Past the support end"),
        ],
    )
    def test_baseline_monotone_support_end(self, scales, hi, passed):
        # lambda = 4, smallest theta = 5 and c = 100: arguments stay in (0, 100] up to x = 504
        hypothesis = h.baseline_monotone(baseline.W2_REV_HAZARD, baseline.INCREASING)
        result = hypothesis.evaluate(scales[0], scales[1], grid=GridSpec(4.001, hi))
        assert result.passed == passed
        if not passed:
            assert "past the support end" in result.detail

    @pytest.mark.it("Ignores the grid for unbounded baselines")
    def test_baseline_monotone_unbounded(self, homogeneous_pair):
        hypothesis = h.baseline_monotone(baseline.W2_REV_HAZARD, baseline.INCREASING)
        result = hypothesis.evaluate(*homogeneous_pair, grid=GridSpec(1.001, 1e6))
        assert result.passed

    @pytest.mark.it("Certifies a condition block of the baseline")
    def test_baseline_block(self, homogeneous_pair):
        result = h.baseline_block(baseline.C1).evaluate(*homogeneous_pair)
        assert result.name == "C1"
        assert result.passed

    @pytest.mark.it("Passes log-concavity when either generator is log-concave")
    def test_logconcave(self, scales):
        cfgX, cfgY = scales
        hougaard = copula.create_generator("GumbelHougaard", a=2.5)
        barnett = copula.create_generator("GumbelBarnett", a=0.5)
        both_convex = (cfgX.replace(generator=hougaard), cfgY.replace(generator=hougaard))
        assert not h.logconcave_either().evaluate(*both_convex).passed
        mixed = (cfgX.replace(generator=hougaard), cfgY.replace(generator=barnett))
        assert h.logconcave_either().evaluate(*mixed).passed

    @pytest.mark.it("Certifies the additivity of the generator composition")
    def test_additivity(self, scales):
        cfgX, cfgY = scales
        # Gumbel-Barnett with a_1 > a_2 composes super-additively
        pair = (
            cfgX.replace(generator=copula.create_generator("GumbelBarnett", a=0.8)),
            cfgY.replace(generator=copula.create_generator("GumbelBarnett", a=0.3)),
        )
        assert h.additivity(copula.SUPER).evaluate(*pair).passed
        result = h.additivity(copula.SUB).evaluate(*pair)
        assert result.name == "subadditive"
        assert not result.passed

    @pytest.mark.it("Certifies that psi / psi' increases")
    def test_psi_ratio(self, scales):
        cfgX, cfgY = scales
        barnett = copula.create_generator("GumbelBarnett", a=0.5)
        hougaard = copula.create_generator("GumbelHougaard", a=2.0)
        common = (cfgX.replace(generator=barnett), cfgY.replace(generator=barnett))
        assert h.psi_ratio_increasing().evaluate(*common).passed
        common = (cfgX.replace(generator=hougaard), cfgY.replace(generator=hougaard))
        assert not h.psi_ratio_increasing().evaluate(*common).passed


@pytest.mark.describe("ConditionCache")
class TestConditionCache(object):
    @pytest.mark.it("Certifies each baseline block once")
    def test_memo(self, mocker, loglog):
        spy = mocker.spy(baseline, "check_condition_block")
        cache = h.ConditionCache()
        first = cache.block(loglog, baseline.C1)
        second = cache.block(baseline.create_baseline("Loglog"), baseline.C1)
        assert first is second
        assert spy.call_count == 1
        assert len(cache) == 1
        cache.block(loglog, baseline.C2)
        assert len(cache) == 2
