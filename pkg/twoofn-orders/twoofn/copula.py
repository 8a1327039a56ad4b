# -------------------------------------------------------------------------
# Copyright (c) twoofn-orders contributors. All rights reserved.
# Licensed under the MIT License. See License.txt in the project root for
# license information.
# --------------------------------------------------------------------------
"""This module contains the Archimedean generators coupling dependent components, the
second-largest distribution function under such a copula, generator property checks and
the frailty sampler used as the dependent Monte Carlo oracle.

A generator psi is decreasing and convex with psi(0) = 1 and psi(inf) = 0; phi is its
inverse and the copula is C(v) = psi(sum phi(v_i)). Evaluations go through the log domain
(`log_psi`, `phi_of_log`) so that distribution functions near 0 or 1 keep their precision.
"""

import abc
import logging
import numpy as np
import six
from twoofn import constant, els, sampling
from twoofn.common.errors import UnsupportedGenerator, DegenerateDenominator, GeneratorDomain
from twoofn.models.grid import GridSpec
from twoofn.models.reports import ConditionReport

logger = logging.getLogger(__name__)

SUPER = "super"
SUB = "sub"

LOGCONCAVE = "log-concave"
LOGCONVEX = "log-convex"


def _probabilities(g, v):
    v = np.asarray(v, dtype=float)
    if np.any(v < 0.0) or np.any(v > 1.0):
        raise GeneratorDomain(
            "{} generator inverse needs probabilities in [0, 1], got {}".format(
                g.family, v[(v < 0.0) | (v > 1.0)].tolist()
            )
        )
    return v


@six.add_metaclass(abc.ABCMeta)
class Generator(object):
    """An Archimedean generator psi with its inverse phi and derivative.

    :ivar str family: Registry name of the family.
    :ivar dict params: Family parameters.
    """

    family = None
    supports_frailty = False

    def __init__(self, **params):
        self._params = dict((key, float(value)) for key, value in params.items())

    @property
    def params(self):
        return dict(self._params)

    @abc.abstractmethod
    def log_psi(self, x):
        """log psi(x)"""
        pass

    @abc.abstractmethod
    def phi_of_log(self, log_v):
        """phi(v) given log v; +inf for log v = -inf"""
        pass

    @abc.abstractmethod
    def psi_prime(self, x):
        pass

    @abc.abstractmethod
    def psi_over_psi_prime(self, x):
        """psi(x) / psi'(x) in closed form"""
        pass

    def psi(self, x):
        with np.errstate(over="ignore", under="ignore"):
            return np.exp(self.log_psi(np.asarray(x, dtype=float)))

    def phi(self, v):
        """The inverse of psi on [0, 1]; phi(0) = inf.

        :raises: GeneratorDomain if some v lies outside [0, 1].
        """
        v = _probabilities(self, v)
        with np.errstate(divide="ignore"):
            return self.phi_of_log(np.log(v))

    def sample_frailty(self, rng, size):
        """Draw the mixing variable whose Laplace transform is psi"""
        raise UnsupportedGenerator("No frailty sampler for the {} generator".format(self.family))

    @property
    def logconcavity_boundary(self):
        """True for parameters at which log psi is linear (both log-concave and log-convex)"""
        return False

    def key(self):
        return (self.family,) + tuple(sorted(self._params.items()))

    def __eq__(self, other):
        return isinstance(other, Generator) and self.key() == other.key()

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        params = ";".join("{}={!r}".format(k, v) for k, v in sorted(self._params.items()))
        return "family={}{}".format(self.family, ";" + params if params else "")


class Independence(Generator):
    """psi(x) = exp(-x); the copula is the product of its arguments."""

    family = "Independence"
    supports_frailty = True

    def log_psi(self, x):
        return -np.asarray(x, dtype=float)

    def phi_of_log(self, log_v):
        return -np.asarray(log_v, dtype=float)

    def psi_prime(self, x):
        return -np.exp(-np.asarray(x, dtype=float))

    def psi_over_psi_prime(self, x):
        return np.full_like(np.asarray(x, dtype=float), -1.0)

    def sample_frailty(self, rng, size):
        return np.ones(size)

    @property
    def logconcavity_boundary(self):
        return True


class GumbelHougaard(Generator):
    """psi(x) = exp(-x ** (1 / a)) for a >= 1."""

    family = "GumbelHougaard"

    def __init__(self, a):
        if not a >= 1:
            raise ValueError("Invalid GumbelHougaard generator - a must be at least 1")
        super(GumbelHougaard, self).__init__(a=a)
        self._a = float(a)

    @property
    def a(self):
        return self._a

    def log_psi(self, x):
        return -np.asarray(x, dtype=float) ** (1.0 / self._a)

    def phi_of_log(self, log_v):
        return (-np.asarray(log_v, dtype=float)) ** self._a

    def psi_prime(self, x):
        x = np.asarray(x, dtype=float)
        with np.errstate(divide="ignore"):
            return -(1.0 / self._a) * x ** (1.0 / self._a - 1.0) * self.psi(x)

    def psi_over_psi_prime(self, x):
        return -self._a * np.asarray(x, dtype=float) ** (1.0 - 1.0 / self._a)

    @property
    def logconcavity_boundary(self):
        return self._a == 1.0


class GumbelBarnett(Generator):
    """psi(x) = exp((1 - e ** x) / a) for a in (0, 1]."""

    family = "GumbelBarnett"

    def __init__(self, a):
        if not 0 < a <= 1:
            raise ValueError("Invalid GumbelBarnett generator - a must be in (0, 1]")
        super(GumbelBarnett, self).__init__(a=a)
        self._a = float(a)

    @property
    def a(self):
        return self._a

    def log_psi(self, x):
        with np.errstate(over="ignore"):
            return -np.expm1(np.asarray(x, dtype=float)) / self._a

    def phi_of_log(self, log_v):
        return np.log1p(-self._a * np.asarray(log_v, dtype=float))

    def psi_prime(self, x):
        x = np.asarray(x, dtype=float)
        with np.errstate(over="ignore", invalid="ignore"):
            return -(np.exp(x) / self._a) * self.psi(x)

    def psi_over_psi_prime(self, x):
        return -self._a * np.exp(-np.asarray(x, dtype=float))


class Clayton(Generator):
    """psi(x) = (1 + x) ** (-1 / theta) for theta > 0, with a gamma frailty sampler."""

    family = "Clayton"
    supports_frailty = True

    def __init__(self, theta):
        if not theta > 0:
            raise ValueError("Invalid Clayton generator - theta must be positive")
        super(Clayton, self).__init__(theta=theta)
        self._theta = float(theta)

    @property
    def theta(self):
        return self._theta

    def log_psi(self, x):
        return -np.log1p(np.asarray(x, dtype=float)) / self._theta

    def phi_of_log(self, log_v):
        with np.errstate(over="ignore"):
            return np.expm1(-self._theta * np.asarray(log_v, dtype=float))

    def psi_prime(self, x):
        return -(1.0 / self._theta) * (1.0 + np.asarray(x, dtype=float)) ** (
            -1.0 / self._theta - 1.0
        )

    def psi_over_psi_prime(self, x):
        return -self._theta * (1.0 + np.asarray(x, dtype=float))

    def sample_frailty(self, rng, size):
        return rng.gamma(1.0 / self._theta, 1.0, size)


_generators = {}


def register_generator(name, cls):
    """Add a generator family to the registry"""
    if not (isinstance(cls, type) and issubclass(cls, Generator)):
        raise TypeError("Generator families must subclass Generator")
    logger.debug("Registering generator family {}".format(name))
    _generators[name] = cls


def registered_generators():
    return sorted(_generators.keys())


def create_generator(family, **params):
    """Return a Generator of the named family.

    :raises: ValueError if the family is unknown or the parameters are invalid.
    """
    try:
        cls = _generators[family]
    except KeyError:
        raise ValueError("Invalid generator - unknown family {}".format(family))
    try:
        return cls(**dict((k, float(v)) for k, v in params.items()))
    except TypeError:
        raise ValueError(
            "Invalid generator - wrong parameters {} for family {}".format(sorted(params), family)
        )


register_generator(Independence.family, Independence)
register_generator(GumbelHougaard.family, GumbelHougaard)
register_generator(GumbelBarnett.family, GumbelBarnett)
register_generator(Clayton.family, Clayton)


def cdf_second_largest_dep(cfg, x):
    """Return P(X_{n-1:n} <= x) for components coupled by the configuration's generator.

    Sum over l of psi(sum_{k != l} phi(F_k)) minus (n - 1) psi(sum_k phi(F_k)). A vanishing
    F_k has phi = inf, so every term containing it vanishes; the result is 0 for x at or
    below the largest location.
    """
    g = cfg.generator
    if g is None:
        raise ValueError("Configuration has no generator; use the independent formula")
    x_arr = np.atleast_1d(np.asarray(x, dtype=float))
    phis = g.phi_of_log(els.component_log_cdfs(cfg, x_arr))
    n = cfg.n
    with np.errstate(invalid="ignore", over="ignore", under="ignore"):
        leave_one_out = np.stack([np.sum(np.delete(phis, l, axis=0), axis=0) for l in range(n)])
        values = np.sum(g.psi(leave_one_out), axis=0) - (n - 1) * g.psi(np.sum(phis, axis=0))
    values = np.where(x_arr <= cfg.max_location, 0.0, values)
    values = np.clip(values, 0.0, 1.0)
    return float(values[0]) if np.ndim(x) == 0 else values


def copula_value(g, v):
    """Return C_psi(v) = psi(sum phi(v_i)) for a probability vector or a (samples, n) array"""
    return g.psi(np.sum(g.phi(v), axis=-1))


def compare_copulas(g1, g2, v):
    """Return (C_psi1(v), C_psi2(v)) at a probability vector"""
    return float(copula_value(g1, v)), float(copula_value(g2, v))


def default_generator_grid(g, points=constant.DEFAULT_GRID_POINTS):
    """Certification grid for a generator: from 1e-3 to phi(1e-12), capped at 1e3"""
    return GridSpec(1e-3, min(float(g.phi(1e-12)), 1e3), points)


def _second_difference_report(name, xs, values, sign, flags=()):
    """Report for sign * second differences >= -tolerance"""
    second = sign * (values[2:] - 2.0 * values[1:-1] + values[:-2])
    worst = int(np.argmin(second))
    worst_violation = max(0.0, -float(second[worst]))
    return ConditionReport(
        name,
        worst_violation <= constant.CONVEX_TOLERANCE,
        worst_violation,
        float(xs[worst + 1]) if worst_violation > 0 else None,
        flags=flags,
    )


def _boundary_flags(g):
    if g.logconcavity_boundary:
        return ("boundary: log psi is linear",)
    return ()


def check_generator_logconcave(g, grid=None):
    """Certify that log psi has second differences <= 1e-10 on the grid"""
    grid = grid or default_generator_grid(g)
    xs = grid.values()
    report = _second_difference_report(LOGCONCAVE, xs, g.log_psi(xs), -1.0, _boundary_flags(g))
    logger.debug("{!r} {!r}".format(g, report))
    return report


def check_generator_logconvex(g, grid=None):
    """Certify that log psi has second differences >= -1e-10 on the grid"""
    grid = grid or default_generator_grid(g)
    xs = grid.values()
    return _second_difference_report(LOGCONVEX, xs, g.log_psi(xs), 1.0, _boundary_flags(g))


def check_generator(g, grid=None):
    """Certify the generator axioms on a grid: psi(0) = 1, psi nonincreasing and convex,
    and phi(psi(x)) = x wherever psi(x) >= 1e-200.
    """
    grid = grid or default_generator_grid(g)
    xs = grid.values()
    psi = g.psi(xs)
    origin = abs(float(g.psi(0.0)) - 1.0)
    details = [ConditionReport("psi(0)=1", origin <= constant.ROUND_TRIP_TOLERANCE, origin, 0.0)]

    increase = np.diff(psi)
    worst = int(np.argmax(increase))
    worst_increase = max(0.0, float(increase[worst]))
    details.append(
        ConditionReport(
            "nonincreasing",
            worst_increase <= constant.MONOTONE_TOLERANCE,
            worst_increase,
            float(xs[worst + 1]) if worst_increase > 0 else None,
        )
    )
    details.append(_second_difference_report("convex", xs, psi, 1.0))

    kept = psi >= 1e-200
    error = np.abs(g.phi(psi[kept]) - xs[kept]) / np.maximum(1.0, xs[kept])
    worst = int(np.argmax(error)) if error.size else 0
    worst_error = float(error[worst]) if error.size else 0.0
    details.append(
        ConditionReport(
            "round trip",
            worst_error <= constant.ROUND_TRIP_TOLERANCE,
            worst_error,
            float(xs[kept][worst]) if error.size else None,
        )
    )
    return ConditionReport.aggregate("generator {!r}".format(g), details)


def check_psi_over_psiprime_increasing(g, grid=None):
    """Certify that psi / psi' is nondecreasing on the grid (differences >= -1e-10).

    :raises: DegenerateDenominator if |psi'| < 1e-300 at a grid point.
    """
    grid = grid or default_generator_grid(g)
    xs = grid.values()
    prime = np.abs(g.psi_prime(xs))
    small = np.flatnonzero(prime < constant.PSI_PRIME_FLOOR)
    if small.size:
        raise DegenerateDenominator(
            "psi' of {!r} vanishes at {}".format(g, float(xs[small[0]]))
        )
    steps = np.diff(g.psi_over_psi_prime(xs))
    worst = int(np.argmin(steps))
    worst_violation = max(0.0, -float(steps[worst]))
    return ConditionReport(
        "psi/psi' increasing",
        worst_violation <= constant.MONOTONE_TOLERANCE,
        worst_violation,
        float(xs[worst + 1]) if worst_violation > 0 else None,
    )


def _as_gumbel_hougaard_a(g):
    if isinstance(g, Independence):
        return 1.0
    if isinstance(g, GumbelHougaard):
        return g.a
    return None


def _gumbel_barnett_composition(ratio):
    def compose(x):
        x = np.asarray(x, dtype=float)
        small = np.minimum(x, 30.0)
        large = np.maximum(x, 30.0)
        with np.errstate(over="ignore"):
            near = np.log1p(ratio * np.expm1(small))
            far = large + np.log(ratio) + np.log1p((1.0 - ratio) / ratio * np.exp(-large))
        return np.where(x <= 30.0, near, far)

    return compose


def compose_phi_psi(g2, g1):
    """Return the function phi_2(psi_1(x)).

    Same-family pairs use closed forms: the identity for equal generators,
    x ** (a2 / a1) for Gumbel-Hougaard (with independence as a = 1) and
    log(1 + (a2 / a1) (e ** x - 1)) for Gumbel-Barnett. Other pairs are evaluated in the
    log domain.
    """
    if g1 == g2:
        return lambda x: np.asarray(x, dtype=float)
    a1 = _as_gumbel_hougaard_a(g1)
    a2 = _as_gumbel_hougaard_a(g2)
    if a1 is not None and a2 is not None:
        return lambda x: np.asarray(x, dtype=float) ** (a2 / a1)
    if isinstance(g1, GumbelBarnett) and isinstance(g2, GumbelBarnett):
        return _gumbel_barnett_composition(g2.a / g1.a)
    return lambda x: g2.phi_of_log(g1.log_psi(x))


def expected_additivity(g1, g2):
    """Return the set of modes ("super", "sub") that phi_2(psi_1) is known to satisfy for
    registry pairs, or None when no closed-form answer is recorded.
    """
    if g1 == g2:
        return {SUPER, SUB}
    a1 = _as_gumbel_hougaard_a(g1)
    a2 = _as_gumbel_hougaard_a(g2)
    if a1 is not None and a2 is not None:
        if a1 == a2:
            return {SUPER, SUB}
        return {SUPER} if a2 > a1 else {SUB}
    if isinstance(g1, GumbelBarnett) and isinstance(g2, GumbelBarnett):
        return {SUPER} if g1.a > g2.a else {SUB}
    return None


def check_phi2_psi1_additivity(g1, g2, mode, trials=10000, seed=0):
    """Randomized certification that phi_2(psi_1) is super-additive (f(x+y) >= f(x)+f(y))
    or sub-additive (f(x+y) <= f(x)+f(y)).

    Pairs (x, y) are drawn log-uniformly in [1e-4, 1e4]; each inequality is allowed a
    slack of 1e-9 * max(1, |f(x+y)|).

    :returns: ConditionReport whose location is the worst (x, y) pair.
    """
    if mode not in (SUPER, SUB):
        raise ValueError("Invalid additivity mode {}".format(mode))
    rng = sampling.stream(seed)
    low, high = np.log10(constant.ADDITIVITY_RANGE)
    x = 10.0 ** rng.uniform(low, high, trials)
    y = 10.0 ** rng.uniform(low, high, trials)
    f = compose_phi_psi(g2, g1)
    together = f(x + y)
    apart = f(x) + f(y)
    gap = apart - together if mode == SUPER else together - apart
    excess = gap - constant.ADDITIVITY_TOLERANCE * np.maximum(1.0, np.abs(together))
    excess = np.where(np.isfinite(excess), excess, np.inf)
    worst = int(np.argmax(excess))
    holds = bool(excess[worst] <= 0.0)
    report = ConditionReport(
        "{}-additive".format(mode),
        holds,
        max(0.0, float(gap[worst])) if not holds else 0.0,
        None if holds else (float(x[worst]), float(y[worst])),
    )
    logger.debug("phi2(psi1) for {!r}, {!r}: {!r}".format(g2, g1, report))
    return report


def frailty_uniforms(g):
    """Return a uniform drawer (rng, samples, n) sampling the copula by the frailty
    construction V_i = psi(E_i / M).

    :raises: UnsupportedGenerator for families without a frailty sampler.
    """
    if not g.supports_frailty:
        raise UnsupportedGenerator(
            "No frailty sampler for the {} generator".format(g.family)
        )

    def draw(rng, samples, n):
        frailty = g.sample_frailty(rng, samples)
        exponentials = rng.standard_exponential((samples, n))
        return g.psi(exponentials / frailty[:, np.newaxis])

    return draw


def mc_cdf_second_largest_dep(cfg, x, samples, seed):
    """Empirical P(X_{n-1:n} <= x) with components sampled through the generator's frailty.

    :returns: MonteCarloEstimate, deterministic given (seed, samples).
    :raises: UnsupportedGenerator for generators without a frailty sampler.
    """
    g = cfg.generator
    if g is None:
        raise ValueError("Configuration has no generator")
    return sampling.estimates(cfg, [x], samples, seed, frailty_uniforms(g))[0]
