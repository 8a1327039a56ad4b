# -------------------------------------------------------------------------
# Copyright (c) twoofn-orders contributors. All rights reserved.
# Licensed under the MIT License. See License.txt in the project root for
# license information.
# --------------------------------------------------------------------------
"""This module contains the report objects returned by condition, order and theorem checks.
"""

import math
from twoofn import constant

HOLDS = "holds"
FAILS = "fails"
INCONCLUSIVE = "inconclusive"

ST = "st"
RH = "rh"

X_LE_Y = "X<=Y"
Y_LE_X = "Y<=X"


def _fmt(value):
    if value is None:
        return "none"
    return "{:.6e}".format(value)


class ConditionReport(object):
    """The outcome of certifying a monotonicity, convexity or generator condition on a grid.

    :ivar str name: Name of the certified condition.
    :ivar bool holds: Whether the condition holds at every certified point.
    :ivar float worst_violation: Largest violation found (0 when the condition holds strictly).
    :ivar location: Point of the worst violation, or None.
    :ivar tuple details: Reports of the sub-conditions, for aggregate checks.
    :ivar tuple flags: Free-form remarks such as boundary cases.
    """

    def __init__(self, name, holds, worst_violation=0.0, location=None, details=(), flags=()):
        self._name = name
        self._holds = bool(holds)
        self._worst_violation = float(worst_violation)
        self._location = location
        self._details = tuple(details)
        self._flags = tuple(flags)

    @classmethod
    def aggregate(cls, name, details, flags=()):
        """Factory method combining sub-condition reports; holds only if all of them hold."""
        details = tuple(details)
        worst = None
        for detail in details:
            if detail.holds:
                continue
            if worst is None or detail.worst_violation > worst.worst_violation:
                worst = detail
        return cls(
            name,
            all(detail.holds for detail in details),
            worst.worst_violation if worst is not None else 0.0,
            worst.location if worst is not None else None,
            details,
            flags,
        )

    @property
    def name(self):
        return self._name

    @property
    def holds(self):
        return self._holds

    @property
    def worst_violation(self):
        return self._worst_violation

    @property
    def location(self):
        return self._location

    @property
    def details(self):
        return self._details

    @property
    def flags(self):
        return self._flags

    def detail(self, name):
        """Return the sub-condition report with the given name"""
        for detail in self._details:
            if detail.name == name:
                return detail
        raise KeyError(name)

    def __bool__(self):
        return self._holds

    __nonzero__ = __bool__

    def __repr__(self):
        return "ConditionReport({}: {}, worst_violation={})".format(
            self._name, HOLDS if self._holds else FAILS, _fmt(self._worst_violation)
        )


class OrderCheckReport(object):
    """Evidence for a grid-based usual stochastic (st) or reversed hazard rate (rh) comparison.

    Verdicts are grid-certified: "holds" means no grid point of the base grid or of its
    refinement violates the order beyond tolerance.

    :ivar str order: "st" or "rh".
    :ivar str verdict: "holds", "fails" or "inconclusive".
    :ivar float max_violation: Largest violation found, 0 if none.
    :ivar violation_x: Grid point of the largest violation, or None.
    :ivar crossing_x: First sign change of the difference, located by bisection, or None.
    :ivar grid: The GridSpec the verdict was computed on.
    :ivar str direction: "X<=Y" or "Y<=X", the ordering that was tested.
    """

    def __init__(
        self,
        order,
        verdict,
        max_violation,
        violation_x,
        crossing_x,
        grid,
        direction=X_LE_Y,
        refined_verdict=None,
    ):
        self._order = order
        self._verdict = verdict
        self._max_violation = float(max_violation)
        self._violation_x = violation_x
        self._crossing_x = crossing_x
        self._grid = grid
        self._direction = direction
        self._refined_verdict = refined_verdict

    @property
    def order(self):
        return self._order

    @property
    def verdict(self):
        return self._verdict

    @property
    def max_violation(self):
        return self._max_violation

    @property
    def violation_x(self):
        return self._violation_x

    @property
    def crossing_x(self):
        return self._crossing_x

    @property
    def grid(self):
        return self._grid

    @property
    def direction(self):
        return self._direction

    @property
    def refined_verdict(self):
        return self._refined_verdict

    @property
    def holds(self):
        return self._verdict == HOLDS

    @property
    def fails(self):
        return self._verdict == FAILS

    def with_direction(self, direction):
        """Return a copy of this report labelled with another direction"""
        return OrderCheckReport(
            self._order,
            self._verdict,
            self._max_violation,
            self._violation_x,
            self._crossing_x,
            self._grid,
            direction,
            self._refined_verdict,
        )

    def summary(self):
        """Return a short human-readable description of the verdict"""
        text = "conclusion {}: {} (direction {})".format(
            self._order, self._verdict.upper(), self._direction
        )
        if self._crossing_x is not None:
            text += "; crossing≈{:.3f}".format(self._crossing_x)
        return text

    def __repr__(self):
        return "OrderCheckReport({} {} {}, max_violation={})".format(
            self._order, self._direction, self._verdict, _fmt(self._max_violation)
        )


class PreorderVerdict(object):
    """The outcome of a majorization-type comparison "x ⪰ y".

    :ivar str relation: "maj", "weak_sub", "weak_super" or "recip".
    :ivar bool holds: Whether the relation holds.
    :ivar witness_k: 1-based number of summed terms of the first violated partial-sum
        inequality (n for a total-sum mismatch), or None when the relation holds.
    """

    def __init__(self, relation, holds, witness_k=None):
        if not holds and witness_k is None:
            raise ValueError("A failing PreorderVerdict needs a witness")
        self._relation = relation
        self._holds = bool(holds)
        self._witness_k = witness_k

    @property
    def relation(self):
        return self._relation

    @property
    def holds(self):
        return self._holds

    @property
    def witness_k(self):
        return self._witness_k

    def __bool__(self):
        return self._holds

    __nonzero__ = __bool__

    def __repr__(self):
        return "PreorderVerdict({}, holds={}, witness_k={})".format(
            self._relation, self._holds, self._witness_k
        )


class HypothesisResult(object):
    """One entry of a theorem's hypothesis checklist.

    :ivar str name: Name of the hypothesis.
    :ivar bool passed: Whether it is satisfied by the compared configurations.
    :ivar str detail: Short explanation, shown in full reports.
    """

    def __init__(self, name, passed, detail=""):
        self.name = name
        self.passed = bool(passed)
        self.detail = detail

    def __repr__(self):
        return "{}={}".format(self.name, "pass" if self.passed else "fail")


class TheoremVerdict(object):
    """The per-theorem record: hypothesis checklist, conclusion test and consistency flag.

    :ivar str theorem: Theorem identifier, e.g. "T3_1".
    :ivar list hypothesis_results: HypothesisResult entries in checklist order.
    :ivar conclusion_report: OrderCheckReport for the theorem's conclusion.
    :ivar bool consistent: False only when every hypothesis passes and the conclusion fails.
    :ivar companion_report: st report on the same grid when an rh conclusion holds, else None.
    :ivar tuple flags: Remarks such as configuration extensions.
    """

    def __init__(
        self, theorem, hypothesis_results, conclusion_report, companion_report=None, flags=()
    ):
        self._theorem = theorem
        self._hypothesis_results = list(hypothesis_results)
        self._conclusion_report = conclusion_report
        self._companion_report = companion_report
        self._flags = tuple(flags)

    @property
    def theorem(self):
        return self._theorem

    @property
    def hypothesis_results(self):
        return list(self._hypothesis_results)

    @property
    def conclusion_report(self):
        return self._conclusion_report

    @property
    def companion_report(self):
        return self._companion_report

    @property
    def flags(self):
        return self._flags

    @property
    def hypotheses_hold(self):
        return all(result.passed for result in self._hypothesis_results)

    @property
    def consistent(self):
        return not (self.hypotheses_hold and self._conclusion_report.fails)

    def hypothesis(self, name):
        """Return the HypothesisResult with the given name"""
        for result in self._hypothesis_results:
            if result.name == name:
                return result
        raise KeyError(name)

    def failed_hypotheses(self):
        return [result.name for result in self._hypothesis_results if not result.passed]

    def to_record(self):
        """Return the verdict as a single line of text"""
        fields = [self._theorem]
        fields.extend(
            "{}={}".format(result.name, "pass" if result.passed else "fail")
            for result in self._hypothesis_results
        )
        report = self._conclusion_report
        fields.append("conclusion={}:{}".format(report.order, report.verdict))
        fields.append("direction={}".format(report.direction))
        fields.append("max_violation={}".format(_fmt(report.max_violation)))
        if report.crossing_x is not None:
            fields.append("crossing_x={}".format(_fmt(report.crossing_x)))
        if self._companion_report is not None:
            fields.append("companion=st:{}".format(self._companion_report.verdict))
        for flag in self._flags:
            fields.append("flag={}".format(flag.replace(" ", "-")))
        fields.append("consistent={}".format("true" if self.consistent else "false"))
        return " ".join(fields)

    def summary(self):
        """Return the one-line verdict printed by the command line"""
        checklist = "; ".join(
            "{}={}".format(result.name, "PASS" if result.passed else "FAIL")
            for result in self._hypothesis_results
        )
        return "{} hypotheses: {}; {}; {}".format(
            self._theorem,
            checklist,
            self._conclusion_report.summary(),
            "consistent" if self.consistent else "INCONSISTENT",
        )

    def __repr__(self):
        return "TheoremVerdict({})".format(self.to_record())


class SuiteReport(object):
    """The outcome of a randomized property suite for one theorem.

    :ivar str theorem: Theorem identifier.
    :ivar int trials: Number of hypothesis-satisfying pairs checked.
    :ivar int seed: Seed the suite was run with.
    :ivar int rejected: Number of rejected candidate pairs.
    :ivar list verdicts: TheoremVerdict per trial.
    """

    def __init__(self, theorem, seed, verdicts, rejected, dumps=None):
        self._theorem = theorem
        self._seed = seed
        self._verdicts = list(verdicts)
        self._rejected = rejected
        self._dumps = list(dumps or [])

    @property
    def theorem(self):
        return self._theorem

    @property
    def seed(self):
        return self._seed

    @property
    def trials(self):
        return len(self._verdicts)

    @property
    def rejected(self):
        return self._rejected

    @property
    def verdicts(self):
        return list(self._verdicts)

    @property
    def consistent_count(self):
        return sum(1 for verdict in self._verdicts if verdict.consistent)

    @property
    def inconsistencies(self):
        return [
            (index, verdict, self._dumps[index] if index < len(self._dumps) else None)
            for index, verdict in enumerate(self._verdicts)
            if not verdict.consistent
        ]

    @property
    def inconclusive_count(self):
        return sum(
            1 for verdict in self._verdicts if verdict.conclusion_report.verdict == INCONCLUSIVE
        )

    @property
    def consistent(self):
        return self.consistent_count == self.trials

    def to_record(self):
        """Return the suite outcome as a single line of text"""
        return "{} suite seed={} trials={} consistent={}/{} inconclusive={} rejected={}".format(
            self._theorem,
            self._seed,
            self.trials,
            self.consistent_count,
            self.trials,
            self.inconclusive_count,
            self._rejected,
        )


class MonteCarloEstimate(object):
    """An empirical probability with its binomial standard error.

    :ivar float estimate: Fraction of samples satisfying the event.
    :ivar float stderr: sqrt(p(1-p)/samples).
    :ivar int samples: Number of samples drawn.
    :ivar int seed: Seed of the random stream.
    """

    def __init__(self, estimate, samples, seed):
        self.estimate = float(estimate)
        self.samples = int(samples)
        self.seed = seed
        self.stderr = math.sqrt(self.estimate * (1.0 - self.estimate) / self.samples)

    def within(self, value, stderrs=constant.MC_ACCEPT_STDERRS):
        """Return True if value lies within the given number of standard errors.

        When the standard error is zero the estimate must equal value up to 1/samples.
        """
        allowance = max(stderrs * self.stderr, 1.0 / self.samples)
        return abs(self.estimate - value) <= allowance

    def __repr__(self):
        return "MonteCarloEstimate({:.6f} +/- {:.2e}, n={})".format(
            self.estimate, self.stderr, self.samples
        )
