# -------------------------------------------------------------------------
# Copyright (c) twoofn-orders contributors. All rights reserved.
# Licensed under the MIT License. See License.txt in the project root for
# license information.
# --------------------------------------------------------------------------
"""This module contains the baseline distributions of the location-scale model and the
derived scalar functions (hazard, reversed hazard and their compositions) whose shape
gates the ordering theorems.
"""

import abc
import logging
import numpy as np
import six
from twoofn import constant
from twoofn.common.errors import OutOfSupport, DegenerateDenominator
from twoofn.models.grid import GridSpec
from twoofn.models.reports import ConditionReport

logger = logging.getLogger(__name__)

__all__ = [
    "Baseline",
    "PowerCap",
    "PowerCapExtended",
    "Loglog",
    "ShiftedWeibullExp",
    "DerivedFunction",
    "register_family",
    "create_baseline",
    "registered_families",
    "eval_baseline",
    "default_grid",
    "check_monotone",
    "check_convex",
    "check_condition_block",
]

CDF = "cdf"
PDF = "pdf"
HAZARD = "hazard"
REV_HAZARD = "rev_hazard"

INCREASING = "increasing"
DECREASING = "decreasing"
CONVEX = "convex"

# Derived function kinds. h is the ratio of reversed hazard to hazard, D a derivative in w.
H_RATIO = "h_ratio"
W2_REV_HAZARD = "w2_rev_hazard"
W_REV_HAZARD = "w_rev_hazard"
W2_D_W_REV_HAZARD = "w2_d_w_rev_hazard"
D_H_RATIO = "d_h_ratio"
W_D_H_RATIO = "w_d_h_ratio"
W2_D_H_RATIO = "w2_d_h_ratio"
W2_D_W_D_H_RATIO = "w2_d_w_d_h_ratio"
D2_H_RATIO = "d2_h_ratio"

DERIVED_KINDS = [
    REV_HAZARD,
    HAZARD,
    H_RATIO,
    W2_REV_HAZARD,
    W_REV_HAZARD,
    W2_D_W_REV_HAZARD,
    D_H_RATIO,
    W_D_H_RATIO,
    W2_D_H_RATIO,
    W2_D_W_D_H_RATIO,
    D2_H_RATIO,
]

C1 = "C1"
C2 = "C2"
C3 = "C3"
C4 = "C4"

condition_blocks = {
    C1: [
        (W2_D_W_REV_HAZARD, DECREASING),
        (H_RATIO, DECREASING),
        (W2_D_H_RATIO, DECREASING),
        (W2_D_W_D_H_RATIO, DECREASING),
    ],
    C2: [
        (REV_HAZARD, CONVEX),
        (H_RATIO, DECREASING),
        (H_RATIO, CONVEX),
        (D2_H_RATIO, INCREASING),
    ],
    C3: [
        (W_REV_HAZARD, DECREASING),
        (W2_D_W_REV_HAZARD, DECREASING),
        (H_RATIO, DECREASING),
        (W_D_H_RATIO, DECREASING),
        (W2_D_H_RATIO, DECREASING),
        (W2_D_W_D_H_RATIO, DECREASING),
    ],
    C4: [
        (W_REV_HAZARD, DECREASING),
        (H_RATIO, DECREASING),
        (W_D_H_RATIO, DECREASING),
        (W2_D_H_RATIO, INCREASING),
        (W2_D_W_REV_HAZARD, INCREASING),
        (W2_D_W_D_H_RATIO, INCREASING),
    ],
}


def _scalar_or_array(w, values):
    if np.ndim(w) == 0:
        return float(values)
    return values


@six.add_metaclass(abc.ABCMeta)
class Baseline(object):
    """A univariate baseline distribution F_b with closed-form CDF, density and quantile.

    Subclasses implement `_cdf`, `_pdf` and `_quantile` for points strictly inside the
    support; this class handles the support boundaries.

    :ivar str family: Registry name of the family.
    :ivar dict params: Family parameters.
    :ivar tuple support: (lower, upper) support endpoints, possibly infinite.
    :ivar bool proper: False for formulas that do not define a distribution everywhere.
    """

    family = None
    proper = True
    _closed_forms = {}

    def __init__(self, **params):
        self._params = dict((key, float(value)) for key, value in params.items())

    @property
    def params(self):
        return dict(self._params)

    @property
    def support(self):
        return (self.lower, self.upper)

    @property
    @abc.abstractmethod
    def lower(self):
        pass

    @property
    @abc.abstractmethod
    def upper(self):
        pass

    @abc.abstractmethod
    def _cdf(self, w):
        pass

    @abc.abstractmethod
    def _pdf(self, w):
        pass

    @abc.abstractmethod
    def _quantile(self, u):
        pass

    def certification_upper(self):
        """Return the right end of the default certification grid"""
        if np.isfinite(self.upper):
            return self.upper
        return float(self._quantile(np.asarray(0.999)))

    def cdf(self, w):
        """F_b(w); 0 below the support, 1 above it (for proper families)"""
        w = np.asarray(w, dtype=float)
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            inside = (w > self.lower) & (w < self.upper)
            values = np.where(inside, self._cdf(np.where(inside, w, self._interior_point())), 0.0)
            values = np.where(w >= self.upper, 1.0, values)
        return _scalar_or_array(w, values)

    def pdf(self, w):
        """f_b(w); 0 outside the support"""
        w = np.asarray(w, dtype=float)
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            inside = (w >= self.lower) & (w <= self.upper)
            values = np.where(inside, self._pdf(np.where(inside, w, self._interior_point())), 0.0)
        return _scalar_or_array(w, values)

    def quantile(self, u):
        """F_b^{-1}(u) for u in [0, 1]"""
        u = np.asarray(u, dtype=float)
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            values = np.where(u <= 0.0, self.lower, self._quantile(np.clip(u, 0.0, 1.0)))
        return _scalar_or_array(u, values)

    def rev_hazard(self, w):
        """Reversed hazard rate f_b / F_b"""
        w = np.asarray(w, dtype=float)
        with np.errstate(divide="ignore", invalid="ignore"):
            values = self.pdf(w) / self.cdf(w)
        return _scalar_or_array(w, values)

    def hazard(self, w):
        """Hazard rate f_b / (1 - F_b)"""
        w = np.asarray(w, dtype=float)
        with np.errstate(divide="ignore", invalid="ignore"):
            values = self.pdf(w) / (1.0 - self.cdf(w))
        return _scalar_or_array(w, values)

    def h_ratio(self, w):
        """Ratio of reversed hazard to hazard, (1 - F_b) / F_b"""
        w = np.asarray(w, dtype=float)
        with np.errstate(divide="ignore", invalid="ignore"):
            cdf = self.cdf(w)
            values = (1.0 - cdf) / cdf
        return _scalar_or_array(w, values)

    def closed_form(self, kind):
        """Return the closed-form evaluator for a derived function kind, or None"""
        return self._closed_forms.get(kind)

    def contains(self, w):
        """Return True if w lies in the closed support"""
        return bool(self.lower <= w <= self.upper)

    def _interior_point(self):
        if np.isfinite(self.upper):
            return 0.5 * (self.lower + self.upper)
        return self.lower + 1.0

    def key(self):
        return (self.family,) + tuple(sorted(self._params.items()))

    def __eq__(self, other):
        return isinstance(other, Baseline) and self.key() == other.key()

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        params = ";".join("{}={!r}".format(k, v) for k, v in sorted(self._params.items()))
        return "family={}{}".format(self.family, ";" + params if params else "")


class PowerCap(Baseline):
    """F_b(x) = (x/c)^a on (0, c]."""

    family = "PowerCap"

    def __init__(self, a, c):
        if not (a > 0 and c > 0):
            raise ValueError("Invalid PowerCap baseline - a and c must be positive")
        super(PowerCap, self).__init__(a=a, c=c)
        self._a = float(a)
        self._c = float(c)

    @property
    def a(self):
        return self._a

    @property
    def c(self):
        return self._c

    @property
    def lower(self):
        return 0.0

    @property
    def upper(self):
        return self._c

    def _cdf(self, w):
        return (w / self._c) ** self._a

    def _pdf(self, w):
        return self._a * w ** (self._a - 1.0) / self._c ** self._a

    def _quantile(self, u):
        return self._c * u ** (1.0 / self._a)


class PowerCapExtended(PowerCap):
    """The power law (x/c)^a continued past c without saturation.

    This is not a distribution beyond c; values above 1 are kept so that plots drawn
    from the raw formula can be reproduced.
    """

    family = "PowerCapExtended"
    proper = False

    @property
    def upper(self):
        return np.inf

    def certification_upper(self):
        return self._c

    def cdf(self, w):
        w = np.asarray(w, dtype=float)
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            values = np.where(w > 0.0, (np.maximum(w, 0.0) / self._c) ** self._a, 0.0)
        return _scalar_or_array(w, values)


class Loglog(Baseline):
    """F_b(x) = x / (1 + x) on (0, inf)."""

    family = "Loglog"

    def __init__(self):
        super(Loglog, self).__init__()

    @property
    def lower(self):
        return 0.0

    @property
    def upper(self):
        return np.inf

    def _cdf(self, w):
        return w / (1.0 + w)

    def _pdf(self, w):
        return 1.0 / (1.0 + w) ** 2

    def _quantile(self, u):
        return u / (1.0 - u)


class ShiftedWeibullExp(Baseline):
    """F_b(x) = 1 - exp(1 - x^a) on [1, inf)."""

    family = "ShiftedWeibullExp"

    def __init__(self, a):
        if not a > 0:
            raise ValueError("Invalid ShiftedWeibullExp baseline - a must be positive")
        super(ShiftedWeibullExp, self).__init__(a=a)
        self._a = float(a)

    @property
    def a(self):
        return self._a

    @property
    def lower(self):
        return 1.0

    @property
    def upper(self):
        return np.inf

    def _cdf(self, w):
        return -np.expm1(1.0 - w ** self._a)

    def _pdf(self, w):
        return self._a * w ** (self._a - 1.0) * np.exp(1.0 - w ** self._a)

    def _quantile(self, u):
        return (1.0 - np.log1p(-u)) ** (1.0 / self._a)

    def hazard(self, w):
        w = np.asarray(w, dtype=float)
        values = np.where(w >= 1.0, self._a * np.maximum(w, 1.0) ** (self._a - 1.0), 0.0)
        return _scalar_or_array(w, values)

    def h_ratio(self, w):
        w = np.asarray(w, dtype=float)
        with np.errstate(divide="ignore", over="ignore"):
            values = 1.0 / np.expm1(np.maximum(w, 1.0) ** self._a - 1.0)
        return _scalar_or_array(w, values)


def _power_forms(b):
    a = b.a
    c = b.c

    def t_pow(w):
        return (w / c) ** (-a)

    return {
        REV_HAZARD: lambda w: a / w,
        HAZARD: lambda w: a / (w * ((c / w) ** a - 1.0)),
        H_RATIO: lambda w: t_pow(w) - 1.0,
        W2_REV_HAZARD: lambda w: a * w,
        W_REV_HAZARD: lambda w: np.full_like(w, a),
        W2_D_W_REV_HAZARD: lambda w: np.zeros_like(w),
        D_H_RATIO: lambda w: -a * t_pow(w) / w,
        W_D_H_RATIO: lambda w: -a * t_pow(w),
        W2_D_H_RATIO: lambda w: -a * w * t_pow(w),
        W2_D_W_D_H_RATIO: lambda w: a * a * w * t_pow(w),
        D2_H_RATIO: lambda w: a * (a + 1.0) * t_pow(w) / (w * w),
    }


def _loglog_forms(b):
    return {
        REV_HAZARD: lambda w: 1.0 / (w * (1.0 + w)),
        HAZARD: lambda w: 1.0 / (1.0 + w),
        H_RATIO: lambda w: 1.0 / w,
        W2_REV_HAZARD: lambda w: w / (1.0 + w),
        W_REV_HAZARD: lambda w: 1.0 / (1.0 + w),
        W2_D_W_REV_HAZARD: lambda w: -(w * w) / (1.0 + w) ** 2,
        D_H_RATIO: lambda w: -1.0 / (w * w),
        W_D_H_RATIO: lambda w: -1.0 / w,
        W2_D_H_RATIO: lambda w: np.full_like(w, -1.0),
        W2_D_W_D_H_RATIO: lambda w: np.ones_like(w),
        D2_H_RATIO: lambda w: 2.0 / w ** 3,
    }


_closed_form_tables = {
    PowerCap.family: _power_forms,
    Loglog.family: _loglog_forms,
}

_families = {}


def register_family(name, cls, closed_forms=None):
    """Add a baseline family to the registry.

    :param str name: Registry name used in scenario files.
    :param cls: Baseline subclass; its constructor takes the family parameters as keywords.
    :param closed_forms: Optional callable mapping an instance to a {kind: function} table.
    """
    if not (isinstance(cls, type) and issubclass(cls, Baseline)):
        raise TypeError("Baseline families must subclass Baseline")
    logger.debug("Registering baseline family {}".format(name))
    _families[name] = cls
    if closed_forms is not None:
        _closed_form_tables[name] = closed_forms


def registered_families():
    return sorted(_families.keys())


def create_baseline(family, **params):
    """Return a Baseline of the named family.

    :raises: ValueError if the family is unknown or the parameters are invalid.
    """
    try:
        cls = _families[family]
    except KeyError:
        raise ValueError("Invalid baseline - unknown family {}".format(family))
    try:
        baseline = cls(**dict((k, float(v)) for k, v in params.items()))
    except TypeError:
        raise ValueError(
            "Invalid baseline - wrong parameters {} for family {}".format(sorted(params), family)
        )
    table = _closed_form_tables.get(family)
    if table is None and cls.family in _closed_form_tables and cls.proper:
        table = _closed_form_tables[cls.family]
    baseline._closed_forms = table(baseline) if table else {}
    return baseline


register_family(PowerCap.family, PowerCap)
register_family(PowerCapExtended.family, PowerCapExtended, _power_forms)
register_family(Loglog.family, Loglog)
register_family(ShiftedWeibullExp.family, ShiftedWeibullExp)


def eval_baseline(b, which, w):
    """Evaluate a baseline function at a single point.

    :param b: Baseline instance.
    :param str which: One of "cdf", "pdf", "hazard", "rev_hazard".
    :param float w: Evaluation point.
    :raises: OutOfSupport if w lies outside the support.
    :raises: DegenerateDenominator if F_b(w) = 0 (rev_hazard) or F_b(w) = 1 (hazard).
    """
    w = float(w)
    if not b.contains(w):
        raise OutOfSupport("{} is outside the support {} of {!r}".format(w, b.support, b))
    if which == CDF:
        return float(b.cdf(w))
    if which == PDF:
        return float(b.pdf(w))
    cdf = float(b.cdf(w))
    if which == REV_HAZARD:
        if cdf <= constant.DENOMINATOR_TOLERANCE:
            raise DegenerateDenominator("F_b({}) = 0, reversed hazard undefined".format(w))
        return float(b.pdf(w)) / cdf
    if which == HAZARD:
        if 1.0 - cdf <= constant.DENOMINATOR_TOLERANCE:
            raise DegenerateDenominator("F_b({}) = 1, hazard undefined".format(w))
        return float(b.pdf(w)) / (1.0 - cdf)
    raise ValueError("Invalid baseline function {}".format(which))


def default_grid(b, points=constant.DEFAULT_GRID_POINTS):
    """Return the certification grid of a baseline: its support (or up to the 0.999
    quantile when unbounded) inset from both ends.
    """
    upper = b.certification_upper()
    span = upper - b.lower
    inset = constant.GRID_INSET * span
    return GridSpec(b.lower + inset, upper - inset, points)


class DerivedFunction(object):
    """A scalar function derived from a baseline, such as w^2 times the reversed hazard.

    Closed forms are used where the family provides them; otherwise derivatives are
    central finite differences with the grid spacing as step.

    :ivar str kind: One of the derived kinds, e.g. "w2_rev_hazard".
    :ivar baseline: The Baseline the function is derived from.
    """

    def __init__(self, kind, baseline):
        if kind not in DERIVED_KINDS:
            raise ValueError("Invalid derived function {}".format(kind))
        self._kind = kind
        self._baseline = baseline

    @property
    def kind(self):
        return self._kind

    @property
    def baseline(self):
        return self._baseline

    def on_grid(self, w):
        """Evaluate on an increasing, evenly spaced array of points"""
        w = np.asarray(w, dtype=float)
        closed = self._baseline.closed_form(self._kind)
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            if closed is not None:
                return np.asarray(closed(w), dtype=float)
            return self._numeric(w)

    def __call__(self, w):
        """Evaluate at a single interior point"""
        w = float(w)
        closed = self._baseline.closed_form(self._kind)
        if closed is not None:
            with np.errstate(divide="ignore", invalid="ignore"):
                return float(closed(np.asarray([w]))[0])
        b = self._baseline
        room = min(w - b.lower, b.upper - w)
        step = min(1e-4 * max(abs(w), 1e-3), room / 3.0)
        local = w + step * np.arange(-2.0, 3.0)
        return float(self.on_grid(local)[2])

    def _numeric(self, w):
        b = self._baseline

        def d(values):
            return np.gradient(values, w, edge_order=2)

        if self._kind == REV_HAZARD:
            return b.rev_hazard(w)
        if self._kind == HAZARD:
            return b.hazard(w)
        h = b.h_ratio(w)
        if self._kind == H_RATIO:
            return h
        rev = b.rev_hazard(w)
        if self._kind == W2_REV_HAZARD:
            return w * w * rev
        if self._kind == W_REV_HAZARD:
            return w * rev
        if self._kind == W2_D_W_REV_HAZARD:
            return w * w * d(w * rev)
        dh = d(h)
        if self._kind == D_H_RATIO:
            return dh
        if self._kind == W_D_H_RATIO:
            return w * dh
        if self._kind == W2_D_H_RATIO:
            return w * w * dh
        if self._kind == W2_D_W_D_H_RATIO:
            return w * w * d(w * dh)
        return d(dh)

    def __repr__(self):
        return "DerivedFunction({}, {!r})".format(self._kind, self._baseline)


def _validate_condition_grid(b, grid):
    if grid.points < constant.MIN_CONDITION_GRID_POINTS:
        raise ValueError(
            "Invalid Grid - condition checks need at least {} points".format(
                constant.MIN_CONDITION_GRID_POINTS
            )
        )
    if not (grid.lo > b.lower and grid.hi < b.upper):
        raise OutOfSupport(
            "Grid {!r} is not inside the support interior {} of {!r}".format(grid, b.support, b)
        )


def _non_finite_report(name, w, values):
    bad = np.flatnonzero(~np.isfinite(values))
    return ConditionReport(name, False, np.inf, float(w[bad[0]]))


def _sign_report(name, w, steps, tolerance, locations):
    """Report for a sequence of differences that must all be >= -tolerance"""
    violation = -steps
    worst = int(np.argmax(violation))
    worst_violation = max(0.0, float(violation[worst]))
    holds = worst_violation <= tolerance
    return ConditionReport(
        name, holds, worst_violation, None if worst_violation == 0.0 else float(locations[worst])
    )


def check_monotone(fn, direction, grid):
    """Certify that a derived function is monotone on a grid.

    Consecutive differences must all have the stated sign within -1e-10; constant
    functions count as both increasing and decreasing.

    :param fn: DerivedFunction to check.
    :param str direction: "increasing" or "decreasing".
    :param grid: GridSpec inside the baseline's support interior, at least 64 points.
    :returns: ConditionReport
    """
    _validate_condition_grid(fn.baseline, grid)
    name = "{} {}".format(fn.kind, direction)
    w = grid.values()
    values = fn.on_grid(w)
    if not np.all(np.isfinite(values)):
        return _non_finite_report(name, w, values)
    steps = np.diff(values)
    if direction == DECREASING:
        steps = -steps
    elif direction != INCREASING:
        raise ValueError("Invalid direction {}".format(direction))
    report = _sign_report(name, w, steps, constant.MONOTONE_TOLERANCE, w[1:])
    logger.debug("{!r}: {} on {!r}".format(fn, report, grid))
    return report


def check_convex(fn, grid):
    """Certify that a derived function is convex on a grid (second differences >= -1e-10)."""
    _validate_condition_grid(fn.baseline, grid)
    name = "{} {}".format(fn.kind, CONVEX)
    w = grid.values()
    values = fn.on_grid(w)
    if not np.all(np.isfinite(values)):
        return _non_finite_report(name, w, values)
    second = values[2:] - 2.0 * values[1:-1] + values[:-2]
    return _sign_report(name, w, second, constant.CONVEX_TOLERANCE, w[1:-1])


def check_condition_block(b, block, grid=None):
    """Certify one of the condition bundles C1-C4 for a baseline.

    :param b: Baseline to check.
    :param str block: "C1", "C2", "C3" or "C4".
    :param grid: GridSpec; defaults to the baseline's certification grid.
    :returns: ConditionReport whose details hold the per-subcondition verdicts.
    """
    try:
        subconditions = condition_blocks[block]
    except KeyError:
        raise ValueError("Invalid condition block {}".format(block))
    grid = grid or default_grid(b)
    details = []
    for kind, check in subconditions:
        fn = DerivedFunction(kind, b)
        if check == CONVEX:
            details.append(check_convex(fn, grid))
        else:
            details.append(check_monotone(fn, check, grid))
    report = ConditionReport.aggregate(block, details)
    logger.info("Condition {} for {!r}: {}".format(block, b, "holds" if report.holds else "fails"))
    return report
