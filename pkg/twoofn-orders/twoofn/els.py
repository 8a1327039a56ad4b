# -------------------------------------------------------------------------
# Copyright (c) twoofn-orders contributors. All rights reserved.
# Licensed under the MIT License. See License.txt in the project root for
# license information.
# --------------------------------------------------------------------------
"""This module contains the exponentiated location-scale (ELS) configuration of a set of
component lifetimes, the component distribution functions and inverse-transform sampling.

Component i has the distribution function [F_b((x - lambda_i) / theta_i)] ** alpha_i.
"""

import logging
import numpy as np
from twoofn.common.errors import OutOfSupport, InvalidProbability, LengthMismatch

logger = logging.getLogger(__name__)

LOCATION_ZERO = "location-zero extension"


def _as_vector(values, field, n):
    vector = np.array(values, dtype=float, ndmin=1)
    if vector.ndim != 1:
        raise ValueError("Invalid ELSConfig - {} must be a vector".format(field))
    if vector.size == 1 and n is not None and n > 1:
        vector = np.repeat(vector, n)
    if not np.all(np.isfinite(vector)):
        raise ValueError("Invalid ELSConfig - {} must be finite".format(field))
    vector.setflags(write=False)
    return vector


class ELSConfig(object):
    """The parameters of n component lifetimes under the ELS model.

    Scalars given for lam, theta or alpha are repeated to length n.

    :ivar lam: Location vector (numpy array, read only), entries >= 0.
    :ivar theta: Scale vector, entries > 0.
    :ivar alpha: Shape vector, entries > 0.
    :ivar baseline: The Baseline distribution F_b.
    :ivar generator: Archimedean Generator coupling the components, or None for independence.
    :ivar int n: Number of components.
    :ivar tuple flags: Remarks about the configuration, such as a zero location.
    """

    def __init__(self, lam, theta, alpha, baseline, generator=None, n=None):
        """Initializer for an ELSConfig.

        :raises: LengthMismatch if the vectors do not share a length of at least 2.
        :raises: ValueError if a parameter is out of range.
        """
        if n is None:
            lengths = [np.size(v) for v in (lam, theta, alpha) if np.size(v) > 1]
            n = lengths[0] if lengths else None
        if n is None or n < 2:
            raise LengthMismatch("Invalid ELSConfig - at least 2 components are required")
        self._lam = _as_vector(lam, "lambda", n)
        self._theta = _as_vector(theta, "theta", n)
        self._alpha = _as_vector(alpha, "alpha", n)
        if not (self._lam.size == self._theta.size == self._alpha.size == n):
            raise LengthMismatch(
                "Invalid ELSConfig - lambda, theta and alpha have lengths {}, {}, {}".format(
                    self._lam.size, self._theta.size, self._alpha.size
                )
            )
        if np.any(self._lam < 0):
            raise ValueError("Invalid ELSConfig - lambda must be nonnegative")
        if np.any(self._theta <= 0):
            raise ValueError("Invalid ELSConfig - theta must be positive")
        if np.any(self._alpha <= 0):
            raise ValueError("Invalid ELSConfig - alpha must be positive")
        self._baseline = baseline
        self._generator = generator
        self._n = int(n)

    @property
    def lam(self):
        return self._lam

    @property
    def theta(self):
        return self._theta

    @property
    def alpha(self):
        return self._alpha

    @property
    def baseline(self):
        return self._baseline

    @property
    def generator(self):
        return self._generator

    @property
    def n(self):
        return self._n

    @property
    def independent(self):
        return self._generator is None

    @property
    def max_location(self):
        return float(np.max(self._lam))

    @property
    def unit_shape(self):
        return bool(np.all(self._alpha == 1.0))

    @property
    def flags(self):
        flags = []
        if np.any(self._lam == 0):
            flags.append(LOCATION_ZERO)
        if not self._baseline.proper:
            flags.append("improper baseline {}".format(self._baseline.family))
        return tuple(flags)

    def component_upper(self):
        """Return the right support endpoint of every component"""
        return self._lam + self._theta * self._baseline.upper

    def system_upper(self):
        """Return the right support endpoint of the second-largest order statistic"""
        return float(np.sort(self.component_upper())[-2])

    def replace(self, **changes):
        """Return a copy with some of lam, theta, alpha, baseline, generator replaced"""
        fields = {
            "lam": self._lam,
            "theta": self._theta,
            "alpha": self._alpha,
            "baseline": self._baseline,
            "generator": self._generator,
        }
        fields.update(changes)
        return ELSConfig(n=self._n, **fields)

    def as_dict(self):
        return {
            "lambda": self._lam.tolist(),
            "theta": self._theta.tolist(),
            "alpha": self._alpha.tolist(),
            "baseline": repr(self._baseline),
            "generator": repr(self._generator) if self._generator is not None else None,
        }

    def __eq__(self, other):
        return (
            isinstance(other, ELSConfig)
            and np.array_equal(self._lam, other._lam)
            and np.array_equal(self._theta, other._theta)
            and np.array_equal(self._alpha, other._alpha)
            and self._baseline == other._baseline
            and self._generator == other._generator
        )

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(
            (
                tuple(self._lam),
                tuple(self._theta),
                tuple(self._alpha),
                self._baseline,
                self._generator,
            )
        )

    def __repr__(self):
        return "ELSConfig(lambda={}, theta={}, alpha={}, baseline={!r}, generator={!r})".format(
            self._lam.tolist(),
            self._theta.tolist(),
            self._alpha.tolist(),
            self._baseline,
            self._generator,
        )


def _check_index(cfg, i):
    if not 0 <= i < cfg.n:
        raise IndexError("Component index {} out of range for n={}".format(i, cfg.n))


def component_cdf(cfg, i, x, strict=False):
    """Return F_i(x) = [F_b((x - lambda_i) / theta_i)] ** alpha_i for component i (0-based).

    Values are 0 for x <= lambda_i and 1 above the component's support.

    :param bool strict: Raise OutOfSupport above the support instead of returning 1.
    :raises: IndexError for an invalid component index.
    """
    _check_index(cfg, i)
    x = float(x)
    if x <= cfg.lam[i]:
        return 0.0
    w = (x - cfg.lam[i]) / cfg.theta[i]
    if w > cfg.baseline.upper:
        if strict:
            raise OutOfSupport(
                "{} maps to {} above the baseline support {}".format(x, w, cfg.baseline.support)
            )
        return 1.0
    value = float(cfg.baseline.cdf(w)) ** cfg.alpha[i]
    if cfg.baseline.proper:
        value = min(max(value, 0.0), 1.0)
    return value


def component_cdfs(cfg, x):
    """Return all component distribution functions at the points x.

    :returns: Array of shape (n,) for scalar x, (n, len(x)) otherwise.
    """
    x = np.asarray(x, dtype=float)
    xs = np.atleast_1d(x)
    w = (xs[np.newaxis, :] - cfg.lam[:, np.newaxis]) / cfg.theta[:, np.newaxis]
    with np.errstate(invalid="ignore", over="ignore"):
        values = np.asarray(cfg.baseline.cdf(w)) ** cfg.alpha[:, np.newaxis]
    values = np.where(xs[np.newaxis, :] <= cfg.lam[:, np.newaxis], 0.0, values)
    if cfg.baseline.proper:
        values = np.clip(values, 0.0, 1.0)
    return values[:, 0] if x.ndim == 0 else values


def component_log_cdfs(cfg, x):
    """Return log F_i at the points x, -inf where F_i vanishes.

    Same shapes as component_cdfs.
    """
    x = np.asarray(x, dtype=float)
    xs = np.atleast_1d(x)
    w = (xs[np.newaxis, :] - cfg.lam[:, np.newaxis]) / cfg.theta[:, np.newaxis]
    with np.errstate(divide="ignore", invalid="ignore"):
        values = cfg.alpha[:, np.newaxis] * np.log(np.asarray(cfg.baseline.cdf(w)))
    values = np.where(xs[np.newaxis, :] <= cfg.lam[:, np.newaxis], -np.inf, values)
    if cfg.baseline.proper:
        values = np.minimum(values, 0.0)
    return values[:, 0] if x.ndim == 0 else values


def sample_component(cfg, i, u):
    """Inverse-transform draw for component i: lambda_i + theta_i * F_b^-1(u ** (1 / alpha_i)).

    :raises: InvalidProbability if u is not in (0, 1).
    """
    _check_index(cfg, i)
    u = float(u)
    if not 0.0 < u < 1.0:
        raise InvalidProbability("Uniform draw {} is not in (0, 1)".format(u))
    return float(
        cfg.lam[i] + cfg.theta[i] * cfg.baseline.quantile(u ** (1.0 / cfg.alpha[i]))
    )


def sample_components(cfg, u):
    """Map a (samples, n) array of uniforms to component lifetimes column by column."""
    u = np.asarray(u, dtype=float)
    if u.ndim != 2 or u.shape[1] != cfg.n:
        raise LengthMismatch("Expected uniforms of shape (samples, {})".format(cfg.n))
    if np.any((u <= 0.0) | (u >= 1.0)):
        raise InvalidProbability("Uniform draws must lie in (0, 1)")
    quantiles = np.asarray(cfg.baseline.quantile(u ** (1.0 / cfg.alpha)))
    return cfg.lam + cfg.theta * quantiles
