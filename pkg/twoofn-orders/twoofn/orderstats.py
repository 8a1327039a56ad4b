# -------------------------------------------------------------------------
# Copyright (c) twoofn-orders contributors. All rights reserved.
# Licensed under the MIT License. See License.txt in the project root for
# license information.
# --------------------------------------------------------------------------
"""This module contains the distribution function and reversed hazard rate of the
second-largest order statistic (the lifetime of a 2-out-of-n system), the grid-based
st/rh order checks and the Monte Carlo oracle for independent components.
"""

import csv
import logging
import numpy as np
from scipy import optimize
from twoofn import constant, copula, els, sampling
from twoofn.common.errors import ShapeNotUnit, DegenerateDenominator, GridBelowLocation
from twoofn.models.grid import GridSpec
from twoofn.models.reports import (
    ConditionReport,
    OrderCheckReport,
    HOLDS,
    FAILS,
    INCONCLUSIVE,
    ST,
    RH,
    X_LE_Y,
    Y_LE_X,
)

logger = logging.getLogger(__name__)

CLOSED_FORM = "closed_form"
NUMERIC_LOGDERIV = "numeric_logderiv"

csv_headers = {ST: ["x", "F_X", "F_Y", "diff"], RH: ["x", "rh_X", "rh_Y", "diff"]}


def _finish(x, cfg, values):
    """Zero below the largest location, clamp proper configurations, unwrap scalars"""
    x = np.asarray(x, dtype=float)
    values = np.where(np.atleast_1d(x) <= cfg.max_location, 0.0, values)
    if cfg.baseline.proper:
        values = np.clip(values, 0.0, 1.0)
    return float(values[0]) if x.ndim == 0 else values


def _require_independent(cfg):
    if not cfg.independent:
        raise ValueError(
            "Configuration has a {} generator; use the dependent formula".format(
                cfg.generator.family
            )
        )


def cdf_second_largest_indep(cfg, x):
    """Return P(X_{n-1:n} <= x) for independent components.

    Sum over l of the product of F_k for k != l, minus (n - 1) times the product of all F_k.
    Returns 0 for x at or below the largest location.

    :param cfg: ELSConfig without a generator.
    :param x: Point or array of points.
    """
    _require_independent(cfg)
    cdfs = np.atleast_2d(els.component_cdfs(cfg, np.atleast_1d(x)))
    n = cfg.n
    leave_one_out = np.stack([np.prod(np.delete(cdfs, l, axis=0), axis=0) for l in range(n)])
    values = np.sum(leave_one_out, axis=0) - (n - 1) * np.prod(cdfs, axis=0)
    return _finish(x, cfg, values)


def cdf_max(cfg, x):
    """Return P(X_{n:n} <= x): the product of the component CDFs, or the copula of them."""
    x_arr = np.atleast_1d(np.asarray(x, dtype=float))
    if cfg.independent:
        values = np.prod(els.component_cdfs(cfg, x_arr), axis=0)
    else:
        g = cfg.generator
        phis = g.phi_of_log(els.component_log_cdfs(cfg, x_arr))
        values = np.exp(g.log_psi(np.sum(phis, axis=0)))
    return _finish(x, cfg, values)


def cdf_second_largest(cfg, x):
    """Return P(X_{n-1:n} <= x) using the independent or the copula formula as configured"""
    if cfg.independent:
        return cdf_second_largest_indep(cfg, x)
    return copula.cdf_second_largest_dep(cfg, x)


def _closed_form_rh(cfg, xs):
    """Reversed hazard rate for unit shapes; nan where some component CDF vanishes"""
    b = cfg.baseline
    w = (xs[np.newaxis, :] - cfg.lam[:, np.newaxis]) / cfg.theta[:, np.newaxis]
    inv_theta = 1.0 / cfg.theta[:, np.newaxis]
    with np.errstate(divide="ignore", invalid="ignore"):
        cdf = np.asarray(b.cdf(w))
        pdf = np.asarray(b.pdf(w))
        rev = np.where(cdf > 0.0, pdf / cdf, np.nan)
        saturated = w >= b.upper
        rev = np.where(saturated, 0.0, rev)
        h = np.where(saturated, 0.0, (1.0 - cdf) / cdf)
        dh = np.where(saturated, 0.0, -rev / cdf)
        values = np.sum(inv_theta * rev, axis=0) + np.sum(inv_theta * dh, axis=0) / (
            np.sum(h, axis=0) + 1.0
        )
    degenerate = np.any(cdf <= constant.DENOMINATOR_TOLERANCE, axis=0)
    return np.where(degenerate, np.nan, values)


def _numeric_rh(cfg, xs):
    """Central difference of log F_{n-1:n}; nan where the CDF vanishes"""
    step = 1e-4 * (xs - cfg.max_location)
    with np.errstate(divide="ignore", invalid="ignore"):
        upper = np.log(cdf_second_largest(cfg, xs + step))
        lower = np.log(cdf_second_largest(cfg, xs - step))
        values = (upper - lower) / (2.0 * step)
    return np.where(np.isfinite(values), values, np.nan)


def rh_second_largest(cfg, x, method=None):
    """Return the reversed hazard rate of X_{n-1:n}.

    :param str method: "closed_form" (unit shapes, independent components only) or
        "numeric_logderiv" (any configuration). By default the closed form is used when
        it applies.
    :returns: float for scalar x, otherwise an array with nan where the CDF vanishes.
    :raises: ShapeNotUnit if the closed form is requested with a shape other than 1.
    :raises: DegenerateDenominator for a scalar x where F_{n-1:n}(x) = 0.
    """
    if method is None:
        method = CLOSED_FORM if cfg.unit_shape and cfg.independent else NUMERIC_LOGDERIV
    xs = np.atleast_1d(np.asarray(x, dtype=float))
    if method == CLOSED_FORM:
        _require_independent(cfg)
        if not cfg.unit_shape:
            raise ShapeNotUnit(
                "Closed-form reversed hazard needs alpha = 1, got {}".format(cfg.alpha.tolist())
            )
        values = _closed_form_rh(cfg, xs)
    elif method == NUMERIC_LOGDERIV:
        values = _numeric_rh(cfg, xs)
    else:
        raise ValueError("Invalid reversed hazard method {}".format(method))
    values = np.where(xs <= cfg.max_location, np.nan, values)
    if np.ndim(x) == 0:
        if not np.isfinite(values[0]):
            raise DegenerateDenominator("F_(n-1:n)({}) = 0, reversed hazard undefined".format(x))
        return float(values[0])
    return values


def rh_second_largest_indep(cfg, x, method=CLOSED_FORM):
    """Return the reversed hazard rate of X_{n-1:n} for independent components"""
    _require_independent(cfg)
    return rh_second_largest(cfg, x, method)


def pdf_second_largest_indep(cfg, x):
    """Return the density of X_{n-1:n} for independent components with unit shapes"""
    rh = rh_second_largest_indep(cfg, x, CLOSED_FORM)
    return rh * cdf_second_largest_indep(cfg, x)


def scale_partials(cfg, x):
    """Analytic partial derivatives of P(X_{n-1:n} <= x) with respect to each theta_i.

    Requires common location and common shape. With d_k = F_b(w_k) ** alpha and
    w_k = (x - lambda) / theta_k, the partial is
    -alpha * w_i**2 * rev_hazard_b(w_i) / (x - lambda) times
    (sum_{l != i} prod_{k != l} d_k - (n - 1) prod d).
    """
    _require_independent(cfg)
    if np.ptp(cfg.lam) != 0 or np.ptp(cfg.alpha) != 0:
        raise ValueError("Scale partials need a common location and a common shape")
    lam = cfg.lam[0]
    alpha = cfg.alpha[0]
    w = (x - lam) / cfg.theta
    d = np.asarray(cfg.baseline.cdf(w)) ** alpha
    rev = np.asarray(cfg.baseline.rev_hazard(w))
    n = cfg.n
    all_but = np.array([np.prod(np.delete(d, l)) for l in range(n)])
    partials = np.empty(n)
    for i in range(n):
        bracket = np.sum(np.delete(all_but, i)) - (n - 1) * np.prod(d)
        partials[i] = -alpha * w[i] ** 2 * rev[i] / (x - lam) * bracket
    return partials


def default_order_grid(cfgX, cfgY, points=constant.DEFAULT_GRID_POINTS):
    """A comparison grid from just above the largest location to where both systems have
    failed: the support end for bounded baselines, otherwise the point where every
    component has reached its 0.999 quantile.
    """
    location = max(cfgX.max_location, cfgY.max_location)
    ends = []
    for cfg in (cfgX, cfgY):
        if np.isfinite(cfg.baseline.upper):
            ends.append(cfg.system_upper())
        else:
            level = 0.999 ** (1.0 / float(np.min(cfg.alpha)))
            reach = float(cfg.baseline.quantile(level))
            ends.append(float(np.max(cfg.lam + cfg.theta * reach)))
    hi = max(ends)
    return GridSpec(location + 1e-3 * (hi - location), hi, points)


def argument_limit(cfgX, cfgY):
    """The largest x at which every baseline argument (x - lambda_i) / theta_i of both
    systems stays inside a bounded baseline support; inf when both baselines are unbounded.

    The bound uses the smallest location and the smallest scale over both systems, so it
    also covers the scale vectors between theta_X and theta_Y.
    """
    lam = min(float(np.min(cfgX.lam)), float(np.min(cfgY.lam)))
    theta = min(float(np.min(cfgX.theta)), float(np.min(cfgY.theta)))
    upper = min(cfgX.baseline.upper, cfgY.baseline.upper)
    if not np.isfinite(upper):
        return np.inf
    return lam + upper * theta


def _order_values(cfg, order, xs):
    if order == ST:
        return np.asarray(cdf_second_largest(cfg, xs))
    if order == RH:
        return np.asarray(rh_second_largest(cfg, xs))
    raise ValueError("Invalid order {}".format(order))


def order_grid(cfgX, cfgY, order, grid):
    """The grid an order is compared on: the rh order stops short of a bounded support end.

    :raises: GridBelowLocation if the grid starts at or below a location parameter.
    """
    _check_grid(cfgX, cfgY, grid)
    if order == RH:
        return _rh_grid(cfgX, cfgY, grid)
    return grid


def order_table(cfgX, cfgY, order, grid):
    """Return (xs, values_X, values_Y, diff) on order_grid(), diff = values_X - values_Y"""
    xs = order_grid(cfgX, cfgY, order, grid).values()
    values_x = _order_values(cfgX, order, xs)
    values_y = _order_values(cfgY, order, xs)
    return xs, values_x, values_y, values_x - values_y


def write_order_csv(path, cfgX, cfgY, order, grid):
    """Write the order table to a CSV file with the header x,F_X,F_Y,diff or x,rh_X,rh_Y,diff

    :returns: The GridSpec of the written rows.
    """
    written = order_grid(cfgX, cfgY, order, grid)
    xs, values_x, values_y, diff = order_table(cfgX, cfgY, order, written)
    with open(path, "w") as csv_file:
        writer = csv.writer(csv_file, lineterminator="\n")
        writer.writerow(csv_headers[order])
        for row in zip(xs, values_x, values_y, diff):
            writer.writerow([repr(float(value)) for value in row])
    logger.info("Wrote {} rows of {} data to {}".format(len(xs), order, path))
    return written


def _check_grid(cfgX, cfgY, grid):
    location = max(cfgX.max_location, cfgY.max_location)
    if grid.lo <= location:
        raise GridBelowLocation(
            "Grid starts at {} which is not above the largest location {}".format(grid.lo, location)
        )


def _violations(order, values_x, values_y):
    """Return (violation per point, tolerance); the order holds where violation <= tolerance"""
    if order == ST:
        return values_y - values_x, constant.ST_TOLERANCE
    scale = np.nanmax(np.abs(np.concatenate([values_x, values_y]))) if values_x.size else 0.0
    if not np.isfinite(scale):
        scale = 0.0
    return values_x - values_y, constant.RH_RELATIVE_TOLERANCE * scale


def _cdf_monotone_report(xs, values):
    drops = np.asarray(values[:-1]) - np.asarray(values[1:])
    drops = np.where(np.isfinite(drops), drops, 0.0)
    if drops.size == 0:
        return ConditionReport("cdf nondecreasing", True)
    worst = int(np.argmax(drops))
    worst_drop = max(0.0, float(drops[worst]))
    holds = worst_drop <= constant.CDF_MONOTONE_TOLERANCE
    return ConditionReport(
        "cdf nondecreasing", holds, worst_drop, None if holds else float(xs[worst + 1])
    )


def check_cdf_monotone(cfg, grid):
    """Certify that the computed P(X_{n-1:n} <= x) is nondecreasing on a grid.

    :returns: ConditionReport with the largest drop between neighbouring grid points.
    """
    xs = grid.values()
    return _cdf_monotone_report(xs, np.asarray(cdf_second_largest(cfg, xs)))


def _evaluate(cfgX, cfgY, order, grid):
    xs = grid.values()
    values_x = _order_values(cfgX, order, xs)
    values_y = _order_values(cfgY, order, xs)
    if order == ST:
        for name, values in (("X", values_x), ("Y", values_y)):
            report = _cdf_monotone_report(xs, values)
            if not report.holds:
                logger.warning(
                    "F_{} drops by {:.3e} near x={} on {!r}".format(
                        name, report.worst_violation, report.location, grid
                    )
                )
    usable = np.isfinite(values_x) & np.isfinite(values_y)
    if not np.all(usable):
        logger.debug("Skipping {} grid points with undefined values".format(np.sum(~usable)))
    violation, tolerance = _violations(order, values_x[usable], values_y[usable])
    return xs[usable], violation, tolerance


def _verdict(violation, tolerance):
    if violation.size == 0:
        return HOLDS, 0.0, None
    worst = int(np.argmax(violation))
    max_violation = max(0.0, float(violation[worst]))
    return (HOLDS if max_violation <= tolerance else FAILS), max_violation, worst


def _crossing(cfgX, cfgY, order, xs, violation, tolerance, grid):
    """Leftmost sign change of the violation, refined by bisection"""
    signs = np.where(np.abs(violation) > tolerance, np.sign(violation), 0.0)
    nonzero = np.flatnonzero(signs)
    if nonzero.size < 2:
        return None
    changes = np.flatnonzero(signs[nonzero[1:]] != signs[nonzero[:-1]])
    if changes.size == 0:
        return None
    left = xs[nonzero[changes[0]]]
    right = xs[nonzero[changes[0] + 1]]

    def difference(x):
        xx = np.array([x])
        return float(_order_values(cfgX, order, xx)[0] - _order_values(cfgY, order, xx)[0])

    width = constant.CROSSING_WIDTH * (grid.hi - grid.lo)
    try:
        crossing = optimize.bisect(difference, left, right, xtol=width)
    except ValueError:
        crossing = 0.5 * (left + right)
    logger.debug("Sign change between {} and {}, bisected to {}".format(left, right, crossing))
    return float(crossing)


def _rh_grid(cfgX, cfgY, grid):
    if not (np.isfinite(cfgX.baseline.upper) and np.isfinite(cfgY.baseline.upper)):
        return grid
    upper = max(cfgX.system_upper(), cfgY.system_upper())
    stop = upper - constant.BOUNDED_RH_STOP * (upper - grid.lo)
    if grid.hi <= stop:
        return grid
    logger.debug("Stopping rh grid at {} below the support end {}".format(stop, upper))
    return grid.with_bounds(hi=stop)


def check_order(cfgX, cfgY, order, grid, direction=X_LE_Y):
    """Check X_{n-1:n} <= Y_{n-1:n} (or the reverse) in the st or rh order on a grid.

    st holds when F_X >= F_Y - 1e-9 at every grid point; rh holds when
    r_X <= r_Y + 1e-7 * max|r|. The check is repeated on a grid of twice the density and
    a verdict that changes is reported as inconclusive.

    :param cfgX: ELSConfig of X.
    :param cfgY: ELSConfig of Y.
    :param str order: "st" or "rh".
    :param grid: GridSpec starting above every location parameter.
    :param str direction: "X<=Y" or "Y<=X".
    :returns: OrderCheckReport
    :raises: GridBelowLocation if the grid starts at or below a location parameter.
    """
    if direction == Y_LE_X:
        return check_order(cfgY, cfgX, order, grid, X_LE_Y).with_direction(Y_LE_X)
    if direction != X_LE_Y:
        raise ValueError("Invalid direction {}".format(direction))
    grid = order_grid(cfgX, cfgY, order, grid)

    xs, violation, tolerance = _evaluate(cfgX, cfgY, order, grid)
    verdict, max_violation, worst = _verdict(violation, tolerance)

    refined_xs, refined_violation, refined_tolerance = _evaluate(
        cfgX, cfgY, order, grid.refined()
    )
    refined_verdict, refined_max, refined_worst = _verdict(refined_violation, refined_tolerance)
    if refined_verdict != verdict:
        logger.debug("Verdict changed from {} to {} on refinement".format(verdict, refined_verdict))
        final = INCONCLUSIVE
    else:
        final = verdict

    if refined_max > max_violation:
        max_violation, violation_x = refined_max, float(refined_xs[refined_worst])
    else:
        violation_x = float(xs[worst]) if worst is not None and max_violation > 0 else None

    crossing_x = _crossing(cfgX, cfgY, order, xs, violation, tolerance, grid)
    report = OrderCheckReport(
        order, final, max_violation, violation_x, crossing_x, grid, X_LE_Y, refined_verdict
    )
    logger.debug("{!r}".format(report))
    return report


def mc_cdf_second_largest(cfg, x, samples, seed):
    """Empirical P(X_{n-1:n} <= x) from `samples` independent draws of the n components.

    :returns: MonteCarloEstimate, deterministic given (seed, samples).
    """
    _require_independent(cfg)
    return sampling.estimates(cfg, [x], samples, seed)[0]


def mc_sup_distance(cfg, xs, samples, seed):
    """Largest distance between the empirical and the exact second-largest CDF over xs"""
    if cfg.independent:
        found = sampling.estimates(cfg, xs, samples, seed)
    else:
        found = sampling.estimates(cfg, xs, samples, seed, copula.frailty_uniforms(cfg.generator))
    exact = np.atleast_1d(cdf_second_largest(cfg, np.asarray(xs, dtype=float)))
    return float(np.max(np.abs(np.array([e.estimate for e in found]) - exact)))


dkw_bound = sampling.dkw_bound
