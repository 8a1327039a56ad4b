# -------------------------------------------------------------------------
# Copyright (c) twoofn-orders contributors. All rights reserved.
# Licensed under the MIT License. See License.txt in the project root for
# license information.
# --------------------------------------------------------------------------
"""This module contains the majorization-type vector preorders, cone membership and a
finite-difference certifier for Schur-convexity and reciprocal-majorization monotonicity.

All preorders compare order statistics, ascending: x_{1:n} <= ... <= x_{n:n}. A call with
arguments (x, y) tests "x dominates y", i.e. y is majorized (weakly sub-, weakly super- or
reciprocally majorized) by x.
"""

import logging
import numpy as np
from twoofn import constant, sampling
from twoofn.common.errors import LengthMismatch, EvaluationFailure
from twoofn.models.reports import ConditionReport, PreorderVerdict

logger = logging.getLogger(__name__)

D_PLUS = "D_plus"
E_PLUS = "E_plus"
BOTH = "both"
NEITHER = "neither"

MAJ = "maj"
WEAK_SUB = "weak_sub"
WEAK_SUPER = "weak_super"
RECIP = "recip"
RELATIONS = [MAJ, WEAK_SUB, WEAK_SUPER, RECIP]

CONVEX = "convex"
CONCAVE = "concave"
INCREASING = "increasing"
DECREASING = "decreasing"


def _vector(values):
    return np.array(values, dtype=float, ndmin=1)


def _cones(v):
    v = _vector(v)
    if np.any(v <= 0):
        return set()
    steps = np.diff(v)
    cones = set()
    if np.all(steps <= 0):
        cones.add(D_PLUS)
    if np.all(steps >= 0):
        cones.add(E_PLUS)
    return cones


def _cone_name(cones):
    if cones == {D_PLUS, E_PLUS}:
        return BOTH
    if cones:
        return cones.pop()
    return NEITHER


def cone_membership(v):
    """Classify a vector as "D_plus" (nonincreasing, positive), "E_plus" (nondecreasing,
    positive), "both" (constant) or "neither".
    """
    return _cone_name(_cones(v))


def joint_cone(*vectors):
    """Return the cone shared by all vectors: "D_plus", "E_plus", "both" or "neither"."""
    shared = {D_PLUS, E_PLUS}
    for v in vectors:
        shared &= _cones(v)
    return _cone_name(shared)


def _first_violation(left, right, tolerance):
    """1-based index of the first k with left[k] > right[k] + tolerance, or None"""
    bad = np.flatnonzero(left > right + tolerance)
    return int(bad[0]) + 1 if bad.size else None


def check_preorder(x, y, relation):
    """Test whether x dominates y in the given relation.

    maj: every ascending partial sum of x is at most that of y, totals equal.
    weak_super: every ascending partial sum of x is at most that of y.
    weak_sub: every descending tail sum of x is at least that of y.
    recip: every partial sum of 1/x_{i:n} is at least that of 1/y_{i:n}.

    Comparisons allow 1e-12 times the larger total.

    :returns: PreorderVerdict whose witness_k is the 1-based index of the first violated
        inequality (n when only the totals differ).
    :raises: LengthMismatch if x and y have different lengths.
    """
    x = np.sort(_vector(x))
    y = np.sort(_vector(y))
    if x.size != y.size:
        raise LengthMismatch(
            "Cannot compare vectors of lengths {} and {}".format(x.size, y.size)
        )
    n = x.size
    if relation == RECIP:
        x_sums = np.cumsum(1.0 / x)
        y_sums = np.cumsum(1.0 / y)
    else:
        x_sums = np.cumsum(x)
        y_sums = np.cumsum(y)
    tolerance = constant.PARTIAL_SUM_RELATIVE_TOLERANCE * max(abs(x_sums[-1]), abs(y_sums[-1]))

    if relation == MAJ:
        witness = _first_violation(x_sums[:-1], y_sums[:-1], tolerance)
        if witness is None and abs(x_sums[-1] - y_sums[-1]) > tolerance:
            witness = n
    elif relation == WEAK_SUPER:
        witness = _first_violation(x_sums, y_sums, tolerance)
    elif relation == WEAK_SUB:
        x_tails = np.cumsum(x[::-1])[::-1]
        y_tails = np.cumsum(y[::-1])[::-1]
        witness = _first_violation(y_tails, x_tails, tolerance)
    elif relation == RECIP:
        witness = _first_violation(y_sums, x_sums, tolerance)
    else:
        raise ValueError("Invalid preorder relation {}".format(relation))
    return PreorderVerdict(relation, witness is None, witness)


def _evaluate(f, point):
    try:
        return float(f(point))
    except EvaluationFailure:
        raise
    except Exception as e:
        raise EvaluationFailure(
            "Evaluation failed at {}".format(point.tolist()), point=point.tolist(), cause=e
        )


def partials(f, z, step=constant.SCHUR_STEP):
    """Central-difference partial derivatives of f at z with steps step * z_k"""
    z = _vector(z)
    result = np.empty(z.size)
    for k in range(z.size):
        h = step * abs(z[k]) if z[k] != 0 else step
        up = z.copy()
        down = z.copy()
        up[k] += h
        down[k] -= h
        result[k] = (_evaluate(f, up) - _evaluate(f, down)) / (2.0 * h)
    return result


def _tolerance(values):
    return max(constant.SCHUR_RELATIVE_TOLERANCE * float(np.max(np.abs(values))), 1e-12)


def _required_trend(cone, mode):
    """Trend in k the partials must have for Schur-convexity/concavity on a cone"""
    if cone == D_PLUS:
        return DECREASING if mode == CONVEX else INCREASING
    if cone == E_PLUS:
        return INCREASING if mode == CONVEX else DECREASING
    raise ValueError("Invalid cone {}".format(cone))


def schur_certify(f, cone, mode, base_points, step=constant.SCHUR_STEP):
    """Certify Schur-convexity or Schur-concavity of f on a cone at sample points.

    On D_plus, f is Schur-convex iff its partials decrease in k; on E_plus iff they increase.
    The reverse trends give Schur-concavity.

    :param f: Callable taking a numpy vector and returning a float.
    :param str cone: "D_plus" or "E_plus".
    :param str mode: "convex" or "concave".
    :param base_points: Points strictly inside the cone.
    :returns: ConditionReport with the worst violating point as location.
    :raises: EvaluationFailure if f fails at a perturbed point.
    """
    if mode not in (CONVEX, CONCAVE):
        raise ValueError("Invalid Schur mode {}".format(mode))
    trend = _required_trend(cone, mode)
    name = "schur-{} on {}".format(mode, cone)
    worst_violation = 0.0
    location = None
    holds = True
    for z in base_points:
        z = _vector(z)
        grads = partials(f, z, step)
        steps = np.diff(grads)
        if trend == DECREASING:
            steps = -steps
        violation = max(0.0, -float(np.min(steps)))
        if violation > _tolerance(grads):
            holds = False
        if violation > worst_violation:
            worst_violation = violation
            location = tuple(z.tolist())
    report = ConditionReport(name, holds, worst_violation, location)
    logger.debug("{!r} over {} base points".format(report, len(base_points)))
    return report


def certify_monotone(f, direction, base_points, step=constant.SCHUR_STEP):
    """Certify that f is increasing (or decreasing) in every coordinate at sample points"""
    if direction not in (INCREASING, DECREASING):
        raise ValueError("Invalid direction {}".format(direction))
    sign = 1.0 if direction == INCREASING else -1.0
    worst_violation = 0.0
    location = None
    holds = True
    for z in base_points:
        z = _vector(z)
        grads = sign * partials(f, z, step)
        violation = max(0.0, -float(np.min(grads)))
        if violation > _tolerance(grads):
            holds = False
        if violation > worst_violation:
            worst_violation = violation
            location = tuple(z.tolist())
    return ConditionReport(direction, holds, worst_violation, location)


def recip_certify(f, base_points, cone=E_PLUS, mode=CONVEX, step=constant.SCHUR_STEP):
    """Certify that x dominating y reciprocally implies f(x) >= f(y) (mode "convex") or
    f(x) <= f(y) (mode "concave").

    With g(a) = f(1/a): g must be Schur-convex and increasing in each a_i (Schur-concave
    and decreasing for the other mode). Base points are vectors a inside the cone.

    :returns: ConditionReport aggregating the Schur and monotonicity sub-reports.
    """

    def reciprocal(a):
        return f(1.0 / a)

    schur = schur_certify(reciprocal, cone, mode, base_points, step)
    direction = INCREASING if mode == CONVEX else DECREASING
    monotone = certify_monotone(reciprocal, direction, base_points, step)
    return ConditionReport.aggregate("reciprocal-{}".format(mode), [schur, monotone])


def cone_points(n, cone, count=constant.SCHUR_BASE_POINTS, seed=0, low=0.5, high=10.0):
    """Draw `count` points with distinct coordinates strictly inside a cone"""
    rng = sampling.stream(seed)
    points = []
    for _ in range(count):
        values = np.sort(rng.uniform(low, high, n))
        while np.any(np.diff(values) <= 1e-3 * high):
            values = np.sort(rng.uniform(low, high, n))
        points.append(values[::-1] if cone == D_PLUS else values)
    return points
