# -------------------------------------------------------------------------
# Copyright (c) twoofn-orders contributors. All rights reserved.
# Licensed under the MIT License. See License.txt in the project root for
# license information.
# --------------------------------------------------------------------------
"""This module contains the compiled-in fixture configurations: the worked examples and
counterexamples of the ordering theorems, each bound to the theorem it illustrates and
to the plot data it reproduces.
"""

import logging
from twoofn import baseline, copula, orderstats
from twoofn.els import ELSConfig
from twoofn.models.grid import GridSpec
from twoofn.models.reports import HOLDS, FAILS
from . import registry

logger = logging.getLogger(__name__)


class Fixture(object):
    """A named pair of configurations with the theorem it is checked against.

    :ivar str name: Fixture name, e.g. "Ex3_1".
    :ivar str theorem: Registry id of the theorem.
    :ivar cfgX: ELSConfig of X.
    :ivar cfgY: ELSConfig of Y.
    :ivar grid: GridSpec of the conclusion check and of the CSV.
    :ivar str description: What the fixture shows.
    :ivar dict expected: Known outcome: "conclusion" (holds/fails), "failed" (names of the
        hypotheses that fail) and optionally "crossing" as a (low, high) interval.
    """

    def __init__(self, name, theorem, cfgX, cfgY, grid, description, expected):
        self.name = name
        self.theorem = theorem
        self.cfgX = cfgX
        self.cfgY = cfgY
        self.grid = grid
        self.description = description
        self.expected = expected

    @property
    def order(self):
        return registry.resolve(self.theorem).order

    @property
    def direction(self):
        return registry.resolve(self.theorem).direction

    @property
    def csv_name(self):
        return "{}.csv".format(self.name)

    def __repr__(self):
        return "Fixture({}: {} on {!r})".format(self.name, self.theorem, self.grid)


def _build_fixtures():
    power = baseline.create_baseline("PowerCap", a=0.2, c=100)
    loglog = baseline.create_baseline("Loglog")
    fixtures = [
        Fixture(
            "Ex3_1",
            "T3_1",
            ELSConfig(4, (5, 9, 10), 4, power),
            ELSConfig(4, (7, 10, 12), 4, power),
            GridSpec(4.001, 100),
            "weakly supermajorized scales under a power baseline: F_X stays above F_Y",
            {"conclusion": HOLDS, "failed": []},
        ),
        Fixture(
            "Ex3_2",
            "T3_4",
            ELSConfig(4, (2, 5, 9), 1, loglog),
            ELSConfig(4, (3, 6, 7), 1, loglog),
            GridSpec(4.001, 100),
            "majorized scales under a log-logistic baseline: rh_X - rh_Y is negative",
            {"conclusion": HOLDS, "failed": []},
        ),
    ]

    power_ex = baseline.create_baseline("PowerCap", a=0.05, c=100)
    fixtures.append(
        Fixture(
            "Ex3_3i",
            "T3_9i",
            ELSConfig(
                (4, 6, 8), (5, 9, 10), 4, power_ex, copula.create_generator("GumbelBarnett", a=0.1)
            ),
            ELSConfig(
                (4, 6, 8), (7, 10, 12), 4, power_ex, copula.create_generator("GumbelBarnett", a=0.5)
            ),
            GridSpec(8.001, 100),
            "Gumbel-Barnett copulas with a_1 < a_2: X is smaller in the st order",
            {"conclusion": HOLDS, "failed": []},
        )
    )
    power_ex2 = baseline.create_baseline("PowerCap", a=0.02, c=100)
    fixtures.append(
        Fixture(
            "Ex3_3ii",
            "T3_9ii",
            ELSConfig(
                (2, 4, 6), (7, 9, 11), 4, power_ex2, copula.create_generator("GumbelBarnett", a=0.9)
            ),
            ELSConfig(
                (2, 4, 6), (2, 3, 5), 4, power_ex2, copula.create_generator("GumbelBarnett", a=0.7)
            ),
            GridSpec(6.001, 100),
            "Gumbel-Barnett copulas with a_1 >= a_2: Y is smaller in the st order",
            {"conclusion": HOLDS, "failed": []},
        )
    )

    extended = baseline.create_baseline("PowerCapExtended", a=0.001, c=10)
    fixtures.append(
        Fixture(
            "CEx3_1",
            "T3_2",
            ELSConfig((3, 4, 5), (3, 0.1, 0.02), 3, extended),
            ELSConfig((3, 4, 5), (2, 0.03, 0.01), 3, extended),
            GridSpec(5.001, 10),
            "locations and scales in opposite cones: the distribution functions cross",
            {"conclusion": FAILS, "failed": ["cone"], "crossing": (5.6, 6.2)},
        )
    )

    weibull = baseline.create_baseline("ShiftedWeibullExp", a=0.5)
    fixtures.append(
        Fixture(
            "CEx3_2",
            "T3_8i",
            ELSConfig(
                5,
                (2.5, 6.5, 3.1),
                0.1,
                weibull,
                copula.create_generator("GumbelHougaard", a=2.5),
            ),
            ELSConfig(
                5,
                (4.5, 6.5, 7.5),
                0.1,
                weibull,
                copula.create_generator("GumbelHougaard", a=1.0001),
            ),
            GridSpec(5.001, 100),
            "log-convex generators and a decreasing w^2 rh_b: the st order breaks down",
            {
                "conclusion": FAILS,
                "failed": ["logconcave", "cone", "w2_rev_hazard_increasing"],
            },
        )
    )
    fixtures.append(
        Fixture(
            "CEx3_3",
            "T3_12",
            ELSConfig(3, 3, (2.5, 10.5, 3.1), weibull, copula.Independence()),
            ELSConfig(3, 3, (0.5, 6.5, 7.5), weibull, copula.Independence()),
            GridSpec(3.001, 50),
            "shape vectors outside a common cone: the distribution functions cross",
            {"conclusion": FAILS, "failed": ["cone", "premise"]},
        )
    )
    fixtures.append(
        Fixture(
            "Remark_r1",
            "T3_4",
            ELSConfig(1, (1, 2, 3), 1, loglog),
            ELSConfig(1, (2, 2, 2), 1, loglog),
            GridSpec(1.001, 100),
            "the log-logistic baseline satisfies C1, so majorized scales are rh ordered",
            {"conclusion": HOLDS, "failed": []},
        )
    )
    return dict((fixture.name, fixture) for fixture in fixtures)


_fixtures = _build_fixtures()


def fixture_names():
    return sorted(_fixtures.keys())


def get_fixture(name):
    """Return the Fixture with the given name.

    :raises: ValueError for an unknown name.
    """
    try:
        return _fixtures[name]
    except KeyError:
        raise ValueError(
            "Invalid fixture - unknown name {}; known fixtures are {}".format(
                name, ", ".join(fixture_names())
            )
        )


def run_fixture(name, csv_path=None, grid=None, cache=None):
    """Run the theorem check of a fixture and optionally write its plot data.

    :param str name: Fixture name.
    :param str csv_path: Where to write the CSV of the conclusion order, or None.
    :param grid: GridSpec overriding the fixture's grid.
    :returns: TheoremVerdict
    """
    fixture = get_fixture(name)
    grid = grid or fixture.grid
    logger.info("Running fixture {} against {}".format(fixture.name, fixture.theorem))
    verdict = registry.run_theorem(fixture.theorem, fixture.cfgX, fixture.cfgY, grid, cache)
    if csv_path is not None:
        orderstats.write_order_csv(csv_path, fixture.cfgX, fixture.cfgY, fixture.order, grid)
    return verdict
