# -------------------------------------------------------------------------
# Copyright (c) twoofn-orders contributors. All rights reserved.
# Licensed under the MIT License. See License.txt in the project root for
# license information.
# --------------------------------------------------------------------------
"""This module contains the random-configuration policies used by property suites.

A policy draws a candidate pair (X, Y) for one theorem. Vectors are drawn sorted into a
random cone and the theorem's preorder premise is built in by construction:

* weak supermajorization: nondecreasing nonnegative increments added to the ascending
  order statistics of the dominating vector;
* majorization: the convex combination t * v + (1 - t) * mean(v);
* reciprocal majorization: the same combination, then scaled down.

The suite still verifies every hypothesis after drawing, so a policy only needs to make
acceptance likely.
"""

import logging
import numpy as np
from twoofn import baseline, constant, copula, majorization, orderstats
from twoofn.els import ELSConfig
from . import registry

logger = logging.getLogger(__name__)

DEFAULT = "default"
ZERO_LOCATION = "zero-location"

SUITE_GRID_POINTS = 512

_LOCATION_RANGE = (0.5, 5.0)
_SCALE_RANGE = (1.0, 10.0)
_SHAPE_RANGE = (0.5, 5.0)
_POWER_EXPONENT_RANGE = (0.05, 1.0)
_POWER_CAP = 100.0
_BARNETT_RANGE = (0.05, 1.0)


def _cone(rng):
    return majorization.E_PLUS if rng.random() < 0.5 else majorization.D_PLUS


def _in_cone(values, cone):
    values = np.sort(values)
    return values[::-1] if cone == majorization.D_PLUS else values


def cone_vector(rng, n, cone, low, high):
    """Uniform entries in [low, high] sorted into the cone"""
    return _in_cone(rng.uniform(low, high, n), cone)


def weakly_supermajorized(rng, v, cone):
    """A vector in the same cone whose ascending partial sums dominate those of v"""
    increments = np.sort(rng.uniform(0.0, 0.5 * float(np.mean(v)), v.size))
    return _in_cone(np.sort(v) + increments, cone)


def majorized(rng, v):
    """t * v + (1 - t) * mean(v): majorized by v and in the same cone"""
    t = rng.random()
    return t * v + (1.0 - t) * float(np.mean(v))


def reciprocally_dominated(rng, v):
    """Shrink towards the mean, then scale down: the reciprocals of v dominate the
    reciprocals of the result in the reciprocal order.
    """
    return rng.uniform(0.5, 1.0) * majorized(rng, v)


class Policy(object):
    """Draws candidate configuration pairs for a theorem.

    :ivar str theorem: Registry id the policy serves.
    :ivar str variant: "default" or a named special case such as "zero-location".
    """

    def __init__(self, theorem, draw, variant=DEFAULT):
        """
        :param str theorem: Registry id.
        :param draw: Callable (rng, n) returning (cfgX, cfgY).
        :param str variant: Name of the special case the draw covers.
        """
        self.theorem = theorem
        self.variant = variant
        self._draw = draw

    def draw(self, rng, n=3):
        """Return a candidate pair (cfgX, cfgY) of n-component configurations"""
        return self._draw(rng, n)

    def grid(self, cfgX, cfgY, points=SUITE_GRID_POINTS):
        """The conclusion grid of a drawn pair.

        With a bounded baseline the grid ends before any baseline argument leaves the
        support, which is where the baseline conditions are certified.
        """
        grid = orderstats.default_order_grid(cfgX, cfgY, points)
        limit = orderstats.argument_limit(cfgX, cfgY) * (1.0 - constant.GRID_INSET)
        if grid.hi <= limit:
            return grid
        logger.debug("Ending the suite grid at {} inside the baseline support".format(limit))
        return grid.with_bounds(hi=limit)

    def __repr__(self):
        return "Policy({}, {})".format(self.theorem, self.variant)


def _power(rng):
    return baseline.create_baseline(
        "PowerCap", a=rng.uniform(*_POWER_EXPONENT_RANGE), c=_POWER_CAP
    )


def _loglog(rng):
    return baseline.create_baseline("Loglog")


def _barnett_pair(rng, mode):
    a1, a2 = np.sort(rng.uniform(*_BARNETT_RANGE, size=2))
    if mode == copula.SUPER:
        a1, a2 = a2, a1
    return (
        copula.create_generator("GumbelBarnett", a=a1),
        copula.create_generator("GumbelBarnett", a=a2),
    )


def _common_generator(rng):
    if rng.random() < 0.25:
        return copula.Independence()
    return copula.create_generator("GumbelBarnett", a=rng.uniform(*_BARNETT_RANGE))


def _scales(rng, n, premise_on_x, location_vector):
    """Scales in one cone, with the weak supermajorization premise built in.

    premise_on_x=True gives theta_X dominating theta_Y, otherwise theta_Y dominating theta_X.
    """
    cone = _cone(rng)
    dominating = cone_vector(rng, n, cone, *_SCALE_RANGE)
    dominated = weakly_supermajorized(rng, dominating, cone)
    lam = cone_vector(rng, n, cone, *_LOCATION_RANGE) if location_vector else rng.uniform(
        *_LOCATION_RANGE
    )
    if premise_on_x:
        return lam, dominating, dominated
    return lam, dominated, dominating


def _independent_scales(premise_on_x, location_vector):
    def draw(rng, n):
        lam, theta_x, theta_y = _scales(rng, n, premise_on_x, location_vector)
        alpha = rng.uniform(*_SHAPE_RANGE)
        b = _power(rng)
        return ELSConfig(lam, theta_x, alpha, b, n=n), ELSConfig(lam, theta_y, alpha, b, n=n)

    return draw


def _dependent_scales(mode, location_vector):
    def draw(rng, n):
        lam, theta_x, theta_y = _scales(rng, n, mode == copula.SUB, location_vector)
        alpha = rng.uniform(*_SHAPE_RANGE)
        b = _power(rng)
        g1, g2 = _barnett_pair(rng, mode)
        return (
            ELSConfig(lam, theta_x, alpha, b, g1, n=n),
            ELSConfig(lam, theta_y, alpha, b, g2, n=n),
        )

    return draw


def _common_generator_scales(location_vector):
    def draw(rng, n):
        lam, theta_x, theta_y = _scales(rng, n, True, location_vector)
        alpha = rng.uniform(*_SHAPE_RANGE)
        b = _power(rng)
        g = _common_generator(rng)
        return ELSConfig(lam, theta_x, alpha, b, g, n=n), ELSConfig(lam, theta_y, alpha, b, g, n=n)

    return draw


def _shapes(premise_on_x, generator, zero_location=False):
    def draw(rng, n):
        cone = _cone(rng)
        dominating = cone_vector(rng, n, cone, *_SHAPE_RANGE)
        dominated = weakly_supermajorized(rng, dominating, cone)
        alpha_x, alpha_y = (dominating, dominated) if premise_on_x else (dominated, dominating)
        if zero_location:
            lam, theta = 0.0, 1.0
        else:
            lam, theta = rng.uniform(*_LOCATION_RANGE), rng.uniform(*_SCALE_RANGE)
        b = _power(rng)
        g = _common_generator(rng) if generator else None
        return ELSConfig(lam, theta, alpha_x, b, g, n=n), ELSConfig(lam, theta, alpha_y, b, g, n=n)

    return draw


def _rh_scales(relation, location_vector):
    def draw(rng, n):
        cone = _cone(rng)
        theta_x = cone_vector(rng, n, cone, *_SCALE_RANGE)
        if relation == majorization.MAJ:
            theta_y = majorized(rng, theta_x)
        elif relation == majorization.RECIP:
            theta_y = reciprocally_dominated(rng, theta_x)
        else:
            theta_y = weakly_supermajorized(rng, theta_x, cone)
        lam = cone_vector(rng, n, cone, *_LOCATION_RANGE) if location_vector else rng.uniform(
            *_LOCATION_RANGE
        )
        b = _loglog(rng)
        return ELSConfig(lam, theta_x, 1.0, b, n=n), ELSConfig(lam, theta_y, 1.0, b, n=n)

    return draw


def _rh_locations(rng, n):
    cone = _cone(rng)
    lam_x = cone_vector(rng, n, cone, *_LOCATION_RANGE)
    lam_y = majorized(rng, lam_x)
    theta = rng.uniform(*_SCALE_RANGE)
    b = _loglog(rng)
    return ELSConfig(lam_x, theta, 1.0, b, n=n), ELSConfig(lam_y, theta, 1.0, b, n=n)


def _homogeneous(scale_side, at_least, location_vector, rh):
    """Corollary pairs: one side has a common scale bounded against the other's sum"""

    def draw(rng, n):
        cone = _cone(rng)
        varied = cone_vector(rng, n, cone, *_SCALE_RANGE)
        factor = 1.0 + rng.uniform(0.0, 0.5) if at_least else 1.0 - rng.uniform(0.0, 0.5)
        common = np.full(n, float(np.mean(varied)) * factor)
        lam = cone_vector(rng, n, cone, *_LOCATION_RANGE) if location_vector else rng.uniform(
            *_LOCATION_RANGE
        )
        if rh:
            alpha, b = 1.0, _loglog(rng)
        else:
            alpha, b = rng.uniform(*_SHAPE_RANGE), _power(rng)
        theta_x, theta_y = (common, varied) if scale_side == "X" else (varied, common)
        return ELSConfig(lam, theta_x, alpha, b, n=n), ELSConfig(lam, theta_y, alpha, b, n=n)

    return draw


_draws = {
    ("T3_1", DEFAULT): _independent_scales(premise_on_x=True, location_vector=False),
    ("T3_2", DEFAULT): _independent_scales(premise_on_x=False, location_vector=True),
    ("T3_3", DEFAULT): _shapes(premise_on_x=True, generator=False),
    ("T3_4", DEFAULT): _rh_scales(majorization.MAJ, location_vector=False),
    ("T3_5", DEFAULT): _rh_locations,
    ("T3_6", DEFAULT): _rh_scales(majorization.WEAK_SUPER, location_vector=False),
    ("T3_7", DEFAULT): _rh_scales(majorization.RECIP, location_vector=True),
    ("T3_8i", DEFAULT): _dependent_scales(copula.SUB, location_vector=False),
    ("T3_8ii", DEFAULT): _dependent_scales(copula.SUPER, location_vector=False),
    ("T3_9i", DEFAULT): _dependent_scales(copula.SUB, location_vector=True),
    ("T3_9ii", DEFAULT): _dependent_scales(copula.SUPER, location_vector=True),
    ("T3_10", DEFAULT): _common_generator_scales(location_vector=False),
    ("T3_11", DEFAULT): _common_generator_scales(location_vector=True),
    ("T3_12", DEFAULT): _shapes(premise_on_x=False, generator=True),
    ("T3_12", ZERO_LOCATION): _shapes(premise_on_x=False, generator=True, zero_location=True),
    ("C3_1", DEFAULT): _homogeneous("Y", at_least=True, location_vector=False, rh=False),
    ("C3_2", DEFAULT): _homogeneous("X", at_least=True, location_vector=True, rh=False),
    ("C3_6", DEFAULT): _homogeneous("Y", at_least=True, location_vector=False, rh=True),
    ("C3_7", DEFAULT): _homogeneous("Y", at_least=False, location_vector=True, rh=True),
}


def policy_variants(theorem_id):
    theorem_id = registry.resolve(theorem_id).id
    return sorted(variant for (tid, variant) in _draws if tid == theorem_id)


def policy_for(theorem_id, variant=DEFAULT):
    """Return the Policy drawing candidates for a theorem.

    :raises: ValueError if no policy of that variant exists.
    """
    theorem_id = registry.resolve(theorem_id).id
    try:
        draw = _draws[(theorem_id, variant)]
    except KeyError:
        raise ValueError(
            "Invalid policy - no {} policy for {}".format(variant, theorem_id)
        )
    return Policy(theorem_id, draw, variant)
