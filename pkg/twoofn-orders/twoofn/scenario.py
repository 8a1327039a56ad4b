# -------------------------------------------------------------------------
# Copyright (c) twoofn-orders contributors. All rights reserved.
# Licensed under the MIT License. See License.txt in the project root for
# license information.
# --------------------------------------------------------------------------
"""This module turns scenario files, compact spec strings and fixtures into Scenario
objects: two configurations with the theorem, order, grid and outputs to use.
"""

import logging
import numpy as np
from twoofn import baseline, copula, orderstats
from twoofn.common import scenario_file
from twoofn.common.errors import ScenarioError, LengthMismatch
from twoofn.common.scenario_file import ScenarioFile, SpecString, parse_vector
from twoofn.els import ELSConfig
from twoofn.models.grid import GridSpec
from twoofn.models.reports import ST, RH
from twoofn.theorems import registry, fixtures

logger = logging.getLogger(__name__)

CSV = "csv"
REPORT = "report"

_vector_rules = {
    "lambda": (lambda v: v >= 0, "must be nonnegative"),
    "theta": (lambda v: v > 0, "must be positive"),
    "alpha": (lambda v: v > 0, "must be positive"),
}


class Scenario(object):
    """Two configurations to compare, with the checks and outputs requested for them.

    :ivar str name: Scenario name.
    :ivar cfgX: ELSConfig of X.
    :ivar cfgY: ELSConfig of Y.
    :ivar theorem: Registry id of the theorem to check, or None.
    :ivar str order: "st" or "rh".
    :ivar grid: GridSpec of the comparison.
    :ivar dict outputs: Output paths keyed by kind ("csv", "report").
    """

    def __init__(self, name, cfgX, cfgY, theorem=None, order=None, grid=None, outputs=None):
        self.name = name
        self.cfgX = cfgX
        self.cfgY = cfgY
        self.theorem = registry.resolve(theorem).id if theorem else None
        if order is None:
            order = registry.resolve(theorem).order if theorem else ST
        if order not in (ST, RH):
            raise ScenarioError("Invalid Scenario - unknown order {}".format(order), field="order")
        self.order = order
        self.grid = grid or orderstats.default_order_grid(cfgX, cfgY)
        self.outputs = dict(outputs or {})

    def replace(self, **changes):
        """Return a copy with some of cfgX, cfgY, theorem, order, grid, outputs replaced"""
        fields = {
            "name": self.name,
            "cfgX": self.cfgX,
            "cfgY": self.cfgY,
            "theorem": self.theorem,
            "order": self.order,
            "grid": self.grid,
            "outputs": self.outputs,
        }
        fields.update(changes)
        return Scenario(**fields)

    def with_baseline(self, b):
        """Return a copy with the baseline of both configurations replaced"""
        return self.replace(cfgX=self.cfgX.replace(baseline=b), cfgY=self.cfgY.replace(baseline=b))

    def __repr__(self):
        return "Scenario({}: X={!r} Y={!r} theorem={} order={} grid={!r})".format(
            self.name, self.cfgX, self.cfgY, self.theorem, self.order, self.grid
        )


def _number(section, key, line):
    try:
        return float(section[key])
    except ValueError:
        raise ScenarioError(
            "Invalid Scenario - {} is not a number: {!r}".format(key, section[key]),
            line=line,
            field=key,
        )


def _params(section, line_of, keys):
    params = {}
    for key in keys:
        if key in section and key != scenario_file.FAMILY:
            params[key] = _number(section, key, line_of(key))
    return params


def baseline_from_spec(spec, line_of=lambda key: None):
    """Create a Baseline from a scenario section or a SpecString.

    :raises: ScenarioError if the family or parameters are invalid.
    """
    family = spec[scenario_file.FAMILY]
    params = _params(spec, line_of, scenario_file._valid_keys[scenario_file.BASELINE])
    try:
        return baseline.create_baseline(family, **params)
    except ValueError as e:
        raise ScenarioError(str(e), line=line_of(scenario_file.FAMILY), field="baseline")


def generator_from_spec(spec, line_of=lambda key: None):
    """Create a Generator from a scenario section or a SpecString.

    :raises: ScenarioError if the family or parameters are invalid.
    """
    family = spec[scenario_file.FAMILY]
    params = _params(spec, line_of, scenario_file._valid_keys[scenario_file.GENERATOR])
    try:
        return copula.create_generator(family, **params)
    except ValueError as e:
        raise ScenarioError(str(e), line=line_of(scenario_file.FAMILY), field="generator")


def parse_baseline_spec(text):
    """Create a Baseline from a compact string such as "family=PowerCap;a=0.2;c=100" """
    return baseline_from_spec(SpecString(text, scenario_file.BASELINE))


def parse_generator_spec(text):
    """Create a Generator from a compact string such as "family=GumbelBarnett;a=0.5" """
    return generator_from_spec(SpecString(text, scenario_file.GENERATOR))


def _vector(vectors, key, default=None):
    if key not in vectors:
        if default is not None:
            return default
        raise ScenarioError(
            "Invalid Scenario - Missing {} in [vectors]".format(key),
            line=vectors.line,
            field=key,
        )
    line = vectors.line_of(key)
    values = parse_vector(vectors[key], field=key, line=line)
    field = key.rsplit("_", 1)[0]
    rule, reason = _vector_rules[field]
    if not all(rule(value) for value in values) or not np.all(np.isfinite(values)):
        raise ScenarioError(
            "Invalid Scenario - {} {}: {}".format(key, reason, vectors[key]), line=line, field=key
        )
    return values


def _generators(sections):
    if scenario_file.GENERATOR in sections:
        section = sections[scenario_file.GENERATOR]
        g = generator_from_spec(section, section.line_of)
        return g, g
    found = []
    for name in (scenario_file.GENERATOR_X, scenario_file.GENERATOR_Y):
        section = sections.get(name)
        found.append(generator_from_spec(section, section.line_of) if section else None)
    return tuple(found)


def _grid(sections):
    section = sections.get(scenario_file.GRID)
    if section is None:
        return None
    for key in ("lo", "hi"):
        if key not in section:
            raise ScenarioError(
                "Invalid Scenario - Missing {} in [grid]".format(key), line=section.line, field=key
            )
    lo = _number(section, "lo", section.line_of("lo"))
    hi = _number(section, "hi", section.line_of("hi"))
    points = section.get("points", None)
    try:
        if points is None:
            return GridSpec(lo, hi)
        return GridSpec(lo, hi, int(points))
    except ValueError as e:
        raise ScenarioError(str(e), line=section.line, field="grid")


def _config(vectors, side, b, g, defaults=None):
    defaults = defaults or {}
    values = dict(
        (field, _vector(vectors, "{}_{}".format(field, side), defaults.get(field)))
        for field in ("lambda", "theta", "alpha")
    )
    try:
        return ELSConfig(values["lambda"], values["theta"], values["alpha"], b, g)
    except (LengthMismatch, ValueError) as e:
        raise ScenarioError(str(e), line=vectors.line, field="vectors")


def scenario_from_file(parsed):
    """Build a Scenario from a parsed ScenarioFile.

    Y's vectors default to X's where omitted.

    :raises: ScenarioError naming the line and field of any invalid entry.
    """
    vectors = parsed[scenario_file.VECTORS]
    base = parsed[scenario_file.BASELINE]
    b = baseline_from_spec(base, base.line_of)
    g_x, g_y = _generators(parsed)
    x_values = dict(
        (field, _vector(vectors, "{}_X".format(field))) for field in ("lambda", "theta", "alpha")
    )
    cfgX = _config(vectors, "X", b, g_x)
    cfgY = _config(vectors, "Y", b, g_y, x_values)

    header = parsed.get(scenario_file.SCENARIO)
    name = header.get("name", parsed.source) if header else parsed.source
    theorem = header.get("theorem") if header else None
    order = header.get("order") if header else None
    try:
        theorem = registry.resolve(theorem).id if theorem else None
    except ValueError as e:
        raise ScenarioError(str(e), line=header.line_of("theorem"), field="theorem")

    outputs = parsed.get(scenario_file.OUTPUTS)
    scenario = Scenario(
        name,
        cfgX,
        cfgY,
        theorem,
        order,
        _grid(parsed),
        outputs.as_dict() if outputs else None,
    )
    logger.info("Loaded scenario {} from {}".format(scenario.name, parsed.source))
    return scenario


def parse_scenario(text, source="<string>"):
    """Parse scenario file text into a Scenario"""
    return scenario_from_file(ScenarioFile(text, source))


def load_scenario(path):
    """Read and parse the scenario file at path"""
    return scenario_from_file(ScenarioFile.from_path(path))


def scenario_from_fixture(name):
    """Return the Scenario of a compiled-in fixture"""
    fixture = fixtures.get_fixture(name)
    return Scenario(
        fixture.name, fixture.cfgX, fixture.cfgY, fixture.theorem, fixture.order, fixture.grid
    )
