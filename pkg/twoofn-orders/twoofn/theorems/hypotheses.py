# -------------------------------------------------------------------------
# Copyright (c) twoofn-orders contributors. All rights reserved.
# Licensed under the MIT License. See License.txt in the project root for
# license information.
# --------------------------------------------------------------------------
"""This module contains the named hypothesis predicates that theorem checklists are built
from. Each factory returns a Hypothesis evaluated on a pair of configurations (X, Y).

Vectors are referred to as "<field>_<side>", e.g. "theta_X" or "lambda_Y"; the fields are
lambda, theta and alpha.
"""

import logging
import numpy as np
from twoofn import baseline, copula, majorization, orderstats
from twoofn.common.errors import OrderingError
from twoofn.models.reports import HypothesisResult

logger = logging.getLogger(__name__)

X = "X"
Y = "Y"

_fields = {"lambda": "lam", "theta": "theta", "alpha": "alpha"}


def _split(ref):
    field, side = ref.rsplit("_", 1)
    if field not in _fields or side not in (X, Y):
        raise ValueError("Invalid vector reference {}".format(ref))
    return field, side


def vector(cfgX, cfgY, ref):
    """Return the parameter vector named by a reference such as "theta_Y"."""
    field, side = _split(ref)
    cfg = cfgX if side == X else cfgY
    return getattr(cfg, _fields[field])


def generator_of(cfg):
    """The configuration's generator, with independence for configurations without one"""
    return cfg.generator if cfg.generator is not None else copula.Independence()


def _fmt_vector(v):
    return "(" + ",".join("{:g}".format(value) for value in v) + ")"


class ConditionCache(object):
    """Memo of baseline and generator certifications shared by the checks of one run.

    Certifying a baseline block or a generator property costs a full grid evaluation, and
    suites evaluate the same baseline many times.
    """

    def __init__(self):
        self._reports = {}

    def _get(self, key, compute):
        try:
            return self._reports[key]
        except KeyError:
            report = compute()
            self._reports[key] = report
            return report

    def monotone(self, b, kind, direction):
        return self._get(
            ("monotone", b, kind, direction),
            lambda: baseline.check_monotone(
                baseline.DerivedFunction(kind, b), direction, baseline.default_grid(b)
            ),
        )

    def block(self, b, block):
        return self._get(("block", b, block), lambda: baseline.check_condition_block(b, block))

    def logconcave(self, g):
        return self._get(("logconcave", g), lambda: copula.check_generator_logconcave(g))

    def psi_ratio(self, g):
        return self._get(
            ("psi_ratio", g), lambda: copula.check_psi_over_psiprime_increasing(g)
        )

    def additivity(self, g1, g2, mode):
        return self._get(
            ("additivity", g1, g2, mode),
            lambda: copula.check_phi2_psi1_additivity(g1, g2, mode),
        )

    def __len__(self):
        return len(self._reports)


class Hypothesis(object):
    """A named predicate on a pair of configurations.

    :ivar str name: Name used in checklists and verdict records.
    :ivar str description: Statement of the hypothesis.
    """

    def __init__(self, name, check, description, uses_grid=False):
        """
        :param str name: Checklist name.
        :param check: Callable (cfgX, cfgY, cache) returning (passed, detail), or
            (cfgX, cfgY, cache, grid) when uses_grid is set.
        :param str description: Statement of the hypothesis.
        :param bool uses_grid: Whether the predicate depends on the comparison grid.
        """
        self._name = name
        self._check = check
        self._description = description
        self._uses_grid = uses_grid

    @property
    def name(self):
        return self._name

    @property
    def description(self):
        return self._description

    def evaluate(self, cfgX, cfgY, cache=None, grid=None):
        """Evaluate the predicate; certification errors count as a failed hypothesis.

        :param grid: GridSpec of the comparison, or None when no comparison is planned.
        :returns: HypothesisResult
        """
        cache = cache if cache is not None else ConditionCache()
        try:
            if self._uses_grid:
                passed, detail = self._check(cfgX, cfgY, cache, grid)
            else:
                passed, detail = self._check(cfgX, cfgY, cache)
        except OrderingError as e:
            logger.debug("Hypothesis {} could not be certified: {}".format(self._name, e))
            passed, detail = False, "not certified: {}".format(e)
        return HypothesisResult(self._name, passed, detail)

    def __repr__(self):
        return "Hypothesis({}: {})".format(self._name, self._description)


def common_scalar(field):
    """Both configurations share one value of the field, repeated over all components"""

    def check(cfgX, cfgY, cache):
        x = vector(cfgX, cfgY, field + "_X")
        y = vector(cfgX, cfgY, field + "_Y")
        passed = bool(np.all(x == x[0]) and np.all(y == x[0]))
        return passed, "{}_X={} {}_Y={}".format(field, _fmt_vector(x), field, _fmt_vector(y))

    return Hypothesis(
        "{}_common".format(field), check, "{} of X and Y equal one common scalar".format(field)
    )


def equal_vectors(field):
    """Both configurations share the same vector for the field"""

    def check(cfgX, cfgY, cache):
        x = vector(cfgX, cfgY, field + "_X")
        y = vector(cfgX, cfgY, field + "_Y")
        return bool(np.array_equal(x, y)), "{}_X={} {}_Y={}".format(
            field, _fmt_vector(x), field, _fmt_vector(y)
        )

    return Hypothesis(
        "{}_equal".format(field), check, "{} of X equals {} of Y".format(field, field)
    )


def unit_shape():
    def check(cfgX, cfgY, cache):
        return cfgX.unit_shape and cfgY.unit_shape, "alpha_X={} alpha_Y={}".format(
            _fmt_vector(cfgX.alpha), _fmt_vector(cfgY.alpha)
        )

    return Hypothesis("alpha_unit", check, "all shape parameters equal 1")


def homogeneous(ref):
    """The referenced vector has identical entries"""

    def check(cfgX, cfgY, cache):
        v = vector(cfgX, cfgY, ref)
        return bool(np.all(v == v[0])), "{}={}".format(ref, _fmt_vector(v))

    return Hypothesis("homogeneous_{}".format(ref), check, "{} is a constant vector".format(ref))


def cone(*refs):
    """The referenced vectors lie jointly in D_plus or jointly in E_plus"""

    def check(cfgX, cfgY, cache):
        shared = majorization.joint_cone(*[vector(cfgX, cfgY, ref) for ref in refs])
        return shared != majorization.NEITHER, "joint cone of {}: {}".format(
            ",".join(refs), shared
        )

    return Hypothesis("cone", check, "{} lie jointly in one cone".format(", ".join(refs)))


def preorder(relation, dominant, dominated, reciprocal=False):
    """The dominant vector dominates the dominated one in the given relation.

    With reciprocal=True the relation compares the reciprocals of both vectors.
    """

    def check(cfgX, cfgY, cache):
        x = vector(cfgX, cfgY, dominant)
        y = vector(cfgX, cfgY, dominated)
        if reciprocal:
            x, y = 1.0 / x, 1.0 / y
        verdict = majorization.check_preorder(x, y, relation)
        detail = "{} {}".format(relation, "holds" if verdict.holds else "fails")
        if not verdict.holds:
            detail += " at k={}".format(verdict.witness_k)
        return verdict.holds, detail

    template = "1/{} dominates 1/{} ({})" if reciprocal else "{} dominates {} ({})"
    return Hypothesis("premise", check, template.format(dominant, dominated, relation))


def sum_bound(homogeneous_ref, other_ref, at_least=True):
    """n times the common value of a homogeneous vector bounds the sum of another vector.

    at_least=True asks for n * v >= sum(other), otherwise n * v <= sum(other).
    """

    def check(cfgX, cfgY, cache):
        common = vector(cfgX, cfgY, homogeneous_ref)
        other = vector(cfgX, cfgY, other_ref)
        total = common.size * float(np.mean(common))
        slack = 1e-12 * max(abs(total), float(np.sum(np.abs(other))))
        if at_least:
            passed = total >= float(np.sum(other)) - slack
        else:
            passed = total <= float(np.sum(other)) + slack
        return passed, "n*mean({})={:g} sum({})={:g}".format(
            homogeneous_ref, total, other_ref, float(np.sum(other))
        )

    relation = ">=" if at_least else "<="
    return Hypothesis(
        "premise",
        check,
        "n * {} {} sum of {}".format(homogeneous_ref, relation, other_ref),
    )


def common_baseline():
    def check(cfgX, cfgY, cache):
        return cfgX.baseline == cfgY.baseline, "{!r} vs {!r}".format(cfgX.baseline, cfgY.baseline)

    return Hypothesis("common_baseline", check, "X and Y share the baseline distribution")


def _baselines(cfgX, cfgY):
    if cfgX.baseline == cfgY.baseline:
        return [cfgX.baseline]
    return [cfgX.baseline, cfgY.baseline]


def baseline_monotone(kind, direction):
    """A derived baseline function is monotone on the certification grid.

    A bounded baseline's reversed hazard drops to 0 past its support end, so with a grid the
    hypothesis also fails when some baseline argument (x - lambda_i) / theta_i on the grid
    leaves the support.
    """

    def check(cfgX, cfgY, cache, grid):
        if grid is not None:
            limit = orderstats.argument_limit(cfgX, cfgY)
            if grid.hi > limit:
                return False, (
                    "grid end {:g} takes a baseline argument past the support end; "
                    "certified only up to x={:g}".format(grid.hi, limit)
                )
        reports = [cache.monotone(b, kind, direction) for b in _baselines(cfgX, cfgY)]
        failed = [r for r in reports if not r.holds]
        if failed:
            return False, "worst violation {:.3e} at w={}".format(
                failed[0].worst_violation, failed[0].location
            )
        return True, "certified on {} baseline(s)".format(len(reports))

    return Hypothesis(
        "{}_{}".format(kind, direction),
        check,
        "{} of the baseline is {}".format(kind, direction),
        uses_grid=True,
    )


def baseline_block(block):
    """The baseline satisfies one of the condition bundles C1-C4"""

    def check(cfgX, cfgY, cache):
        reports = [cache.block(b, block) for b in _baselines(cfgX, cfgY)]
        failed = [
            detail.name for report in reports for detail in report.details if not detail.holds
        ]
        if failed:
            return False, "failed: {}".format(", ".join(failed))
        return True, "all subconditions hold"

    return Hypothesis(block, check, "the baseline satisfies {}".format(block))


def independent():
    def check(cfgX, cfgY, cache):
        passed = all(
            isinstance(generator_of(cfg), copula.Independence) for cfg in (cfgX, cfgY)
        )
        return passed, "generators {!r}, {!r}".format(cfgX.generator, cfgY.generator)

    return Hypothesis("independent", check, "components of X and of Y are independent")


def common_generator():
    def check(cfgX, cfgY, cache):
        return generator_of(cfgX) == generator_of(cfgY), "{!r} vs {!r}".format(
            generator_of(cfgX), generator_of(cfgY)
        )

    return Hypothesis("common_generator", check, "X and Y share the Archimedean generator")


def logconcave_either():
    """psi_1 or psi_2 is log-concave"""

    def check(cfgX, cfgY, cache):
        reports = [cache.logconcave(generator_of(cfg)) for cfg in (cfgX, cfgY)]
        return any(r.holds for r in reports), "psi_1 {}, psi_2 {}".format(
            "log-concave" if reports[0].holds else "not log-concave",
            "log-concave" if reports[1].holds else "not log-concave",
        )

    return Hypothesis("logconcave", check, "psi_1 or psi_2 is log-concave")


def additivity(mode):
    """phi_2(psi_1(x)) is super- or sub-additive, with psi_1 from X and psi_2 from Y"""

    def check(cfgX, cfgY, cache):
        report = cache.additivity(generator_of(cfgX), generator_of(cfgY), mode)
        if report.holds:
            return True, "certified on random pairs"
        return False, "violated at (x, y)={}".format(report.location)

    return Hypothesis(
        "{}additive".format(mode), check, "phi_2(psi_1) is {}-additive".format(mode)
    )


def psi_ratio_increasing():
    """psi / psi' of the common generator is increasing"""

    def check(cfgX, cfgY, cache):
        reports = [cache.psi_ratio(generator_of(cfg)) for cfg in (cfgX, cfgY)]
        failed = [r for r in reports if not r.holds]
        if failed:
            return False, "decreases at x={}".format(failed[0].location)
        return True, "certified on the generator grid"

    return Hypothesis("psi_ratio_increasing", check, "psi/psi' is increasing")
