# -------------------------------------------------------------------------
# Copyright (c) twoofn-orders contributors. All rights reserved.
# Licensed under the MIT License. See License.txt in the project root for
# license information.
# --------------------------------------------------------------------------

import pytest
import logging
from twoofn import constant
from twoofn.models.grid import GridSpec
from twoofn.models import reports
from twoofn.models.reports import (
    ConditionReport,
    OrderCheckReport,
    PreorderVerdict,
    HypothesisResult,
    TheoremVerdict,
    SuiteReport,
    MonteCarloEstimate,
)

logging.basicConfig(level=logging.INFO)

GRID = GridSpec(1.0, 2.0, 11)


def order_report(verdict, order=reports.ST, crossing_x=None):
    violation = 0.0 if verdict == reports.HOLDS else 0.25
    return OrderCheckReport(order, verdict, violation, 1.5, crossing_x, GRID)


def verdict(passes, conclusion, companion=None, flags=()):
    results = [HypothesisResult("h{}".format(i), p, "") for i, p in enumerate(passes)]
    return TheoremVerdict("T3_1", results, order_report(conclusion), companion, flags)


@pytest.mark.describe("ConditionReport")
class TestConditionReport(object):
    @pytest.mark.it("Aggregates sub-condition reports, keeping the worst violation")
    def test_aggregate(self):
        details = [
            ConditionReport("a", True),
            ConditionReport("b", False, 0.1, 2.0),
            ConditionReport("c", False, 0.3, 3.0),
        ]
        report = ConditionReport.aggregate("C1", details)
        assert not report.holds
        assert report.worst_violation == pytest.approx(0.3)
        assert report.location == 3.0
        assert report.detail("b") is details[1]
        with pytest.raises(KeyError):
            report.detail("z")

    @pytest.mark.it("Holds as an aggregate when every sub-condition holds")
    def test_aggregate_holds(self):
        report = ConditionReport.aggregate(
            "C2", [ConditionReport("a", True), ConditionReport("b", True)]
        )
        assert report.holds
        assert bool(report)
        assert report.worst_violation == 0.0
        assert report.location is None


@pytest.mark.describe("OrderCheckReport")
class TestOrderCheckReport(object):
    @pytest.mark.it("Exposes holds and fails according to the verdict")
    @pytest.mark.parametrize(
        "value, holds, fails",
        [
            pytest.param(reports.HOLDS, True, False, id="Holds"),
            pytest.param(reports.FAILS, False, True, id="Fails"),
            pytest.param(reports.INCONCLUSIVE, False, False, id="Inconclusive"),
        ],
    )
    def test_flags(self, value, holds, fails):
        report = order_report(value)
        assert report.holds == holds
        assert report.fails == fails

    @pytest.mark.it("Relabels its direction without changing the evidence")
    def test_with_direction(self):
        report = order_report(reports.FAILS).with_direction(reports.Y_LE_X)
        assert report.direction == reports.Y_LE_X
        assert report.verdict == reports.FAILS
        assert report.max_violation == 0.25

    @pytest.mark.it("Mentions the crossing point in its summary")
    def test_summary(self):
        summary = order_report(reports.FAILS, crossing_x=5.8).summary()
        assert "FAILS" in summary
        assert "5.800" in summary


@pytest.mark.describe("PreorderVerdict")
class TestPreorderVerdict(object):
    @pytest.mark.it("Requires a witness for a failing verdict")
    def test_requires_witness(self):
        with pytest.raises(ValueError):
            PreorderVerdict("maj", False)
        assert PreorderVerdict("maj", False, 2).witness_k == 2
        assert bool(PreorderVerdict("maj", True))


@pytest.mark.describe("TheoremVerdict")
class TestTheoremVerdict(object):
    @pytest.mark.it("Is inconsistent only when every hypothesis passes and the conclusion fails")
    @pytest.mark.parametrize(
        "passes, conclusion, consistent",
        [
            pytest.param([True, True], reports.HOLDS, True, id="All pass, holds"),
            pytest.param([True, True], reports.FAILS, False, id="All pass, fails"),
            pytest.param([True, False], reports.FAILS, True, id="Failed hypothesis, fails"),
            pytest.param([True, True], reports.INCONCLUSIVE, True, id="Inconclusive"),
        ],
    )
    def test_consistency(self, passes, conclusion, consistent):
        assert verdict(passes, conclusion).consistent == consistent

    @pytest.mark.it("Lists the failed hypotheses in checklist order")
    def test_failed(self):
        v = verdict([False, True, False], reports.FAILS)
        assert v.failed_hypotheses() == ["h0", "h2"]
        assert v.hypothesis("h1").passed
        with pytest.raises(KeyError):
            v.hypothesis("nope")

    @pytest.mark.it("Writes a single-line record with every checklist entry and the conclusion")
    def test_record(self):
        companion = order_report(reports.HOLDS)
        record = verdict(
            [True, False], reports.HOLDS, companion, flags=("location-zero extension",)
        ).to_record()
        assert "\n" not in record
        assert record.startswith("T3_1 h0=pass h1=fail conclusion=st:holds")
        assert "companion=st:holds" in record
        assert "flag=location-zero-extension" in record
        assert record.endswith("consistent=true")


@pytest.mark.describe("SuiteReport")
class TestSuiteReport(object):
    @pytest.mark.it("Counts consistent and inconclusive trials and reports inconsistencies")
    def test_counts(self):
        verdicts = [
            verdict([True], reports.HOLDS),
            verdict([True], reports.FAILS),
            verdict([True], reports.INCONCLUSIVE),
        ]
        suite = SuiteReport("T3_1", 7, verdicts, 4, ["d0", "d1", "d2"])
        assert suite.trials == 3
        assert suite.consistent_count == 2
        assert suite.inconclusive_count == 1
        assert not suite.consistent
        assert [(index, dump) for index, _, dump in suite.inconsistencies] == [(1, "d1")]
        assert suite.to_record() == (
            "T3_1 suite seed=7 trials=3 consistent=2/3 inconclusive=1 rejected=4"
        )


@pytest.mark.describe("MonteCarloEstimate")
class TestMonteCarloEstimate(object):
    @pytest.mark.it("Computes the binomial standard error")
    def test_stderr(self):
        estimate = MonteCarloEstimate(0.5, 10000, 0)
        assert estimate.stderr == pytest.approx(0.005)

    @pytest.mark.it("Accepts values within the given number of standard errors")
    def test_within(self):
        estimate = MonteCarloEstimate(0.5, 10000, 0)
        assert estimate.within(0.51, 3.0)
        assert not estimate.within(0.52, 3.0)

    @pytest.mark.it("Accepts values within the Monte Carlo acceptance band by default")
    def test_within_default(self):
        estimate = MonteCarloEstimate(0.5, 10000, 0)
        assert constant.MC_ACCEPT_STDERRS == 3.5
        assert estimate.within(0.517)
        assert not estimate.within(0.518)

    @pytest.mark.it("Allows a 1/samples slack when the standard error is zero")
    def test_zero_stderr(self):
        estimate = MonteCarloEstimate(0.0, 1000, 0)
        assert estimate.stderr == 0.0
        assert estimate.within(0.0005, 3.0)
        assert not estimate.within(0.01, 3.0)
