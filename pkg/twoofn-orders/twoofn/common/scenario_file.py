# -------------------------------------------------------------------------
# Copyright (c) twoofn-orders contributors. All rights reserved.
# Licensed under the MIT License. See License.txt in the project root for
# license information.
# --------------------------------------------------------------------------
"""This module contains tools for working with scenario files and compact spec strings"""

from .errors import ScenarioError

__all__ = ["ScenarioFile", "SpecString", "parse_vector"]

SPEC_DELIMITER = ";"
SPEC_VAL_SEPARATOR = "="
FILE_VAL_SEPARATOR = "="
COMMENT = "#"
VECTOR_DELIMITER = ","

SCENARIO = "scenario"
BASELINE = "baseline"
GENERATOR = "generator"
GENERATOR_X = "generator.X"
GENERATOR_Y = "generator.Y"
VECTORS = "vectors"
GRID = "grid"
OUTPUTS = "outputs"

FAMILY = "family"

_valid_keys = {
    SCENARIO: ["name", "theorem", "order", "description"],
    BASELINE: [FAMILY, "a", "c"],
    GENERATOR: [FAMILY, "a", "theta"],
    GENERATOR_X: [FAMILY, "a", "theta"],
    GENERATOR_Y: [FAMILY, "a", "theta"],
    VECTORS: ["lambda_X", "theta_X", "alpha_X", "lambda_Y", "theta_Y", "alpha_Y"],
    GRID: ["lo", "hi", "points"],
    OUTPUTS: ["csv", "report"],
}

_required_sections = [BASELINE, VECTORS]


def parse_vector(text, field=None, line=None):
    """Return a list of floats from a comma separated value

    :param str text: The raw value, e.g. "5, 9, 10"
    :param str field: Field name used in error messages
    :param int line: Line number used in error messages
    :raises: ScenarioError if any entry is not a number
    """
    entries = [entry.strip() for entry in text.split(VECTOR_DELIMITER)]
    try:
        return [float(entry) for entry in entries]
    except ValueError:
        raise ScenarioError(
            "Invalid Scenario - {} is not a list of numbers: {!r}".format(field, text),
            line=line,
            field=field,
        )


def _parse_spec_string(spec_string, section):
    """Return a dictionary of values contained in a compact key=value;key=value string
    """
    args = [arg for arg in spec_string.split(SPEC_DELIMITER) if arg.strip()]
    try:
        pairs = [arg.split(SPEC_VAL_SEPARATOR, 1) for arg in args]
        d = dict((key.strip(), value.strip()) for key, value in pairs)
    except ValueError:
        raise ScenarioError("Invalid {} spec - Unable to parse".format(section), field=section)
    if not args or len(args) != len(d):
        # various errors related to incorrect parsing - duplicate args, bad syntax, etc.
        raise ScenarioError("Invalid {} spec - Unable to parse".format(section), field=section)
    for key in d:
        if key not in _valid_keys[section]:
            raise ScenarioError(
                "Invalid {} spec - Invalid Key {}".format(section, key), field=key
            )
    if FAMILY not in d:
        raise ScenarioError("Invalid {} spec - Missing family".format(section), field=FAMILY)
    return d


class SpecString(object):
    """Key/value mappings for a baseline or generator given on one line.
    Uses the same syntax as dictionary
    """

    def __init__(self, spec_string, section=BASELINE):
        """Initializer for SpecString

        :param str spec_string: String such as "family=PowerCap;a=0.2;c=100"
        :param str section: Either "baseline" or "generator"
        :raises: ScenarioError if provided spec_string is invalid
        """
        self._dict = _parse_spec_string(spec_string, section)
        self._strrep = spec_string

    def __getitem__(self, key):
        return self._dict[key]

    def __contains__(self, key):
        return key in self._dict

    def __repr__(self):
        return self._strrep

    def get(self, key, default=None):
        """Return the value for key if key is in the dictionary, else default

        :param str key: The key to retrieve a value for
        :param str default: The default value returned if a key is not found
        :returns: The value for the given key
        """
        return self._dict.get(key, default)

    def as_dict(self):
        return dict(self._dict)


class ScenarioSection(object):
    """Key/value mappings of one section of a scenario file, remembering source lines
    """

    def __init__(self, name, line):
        self._name = name
        self._line = line
        self._dict = {}
        self._lines = {}

    @property
    def name(self):
        return self._name

    @property
    def line(self):
        return self._line

    def _add(self, key, value, line):
        if key not in _valid_keys[self._name]:
            raise ScenarioError(
                "Invalid Scenario - Invalid Key {} in [{}]".format(key, self._name),
                line=line,
                field=key,
            )
        if key in self._dict:
            raise ScenarioError(
                "Invalid Scenario - Duplicate Key {} in [{}]".format(key, self._name),
                line=line,
                field=key,
            )
        self._dict[key] = value
        self._lines[key] = line

    def __getitem__(self, key):
        return self._dict[key]

    def __contains__(self, key):
        return key in self._dict

    def get(self, key, default=None):
        return self._dict.get(key, default)

    def line_of(self, key):
        """Return the source line of key, or the section header line if key is absent"""
        return self._lines.get(key, self._line)

    def keys(self):
        return list(self._dict.keys())

    def as_dict(self):
        return dict(self._dict)


def _parse_scenario_text(text):
    """Return a dictionary of ScenarioSection objects contained in scenario file text
    """
    sections = {}
    current = None
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split(COMMENT, 1)[0].strip()
        if not line:
            continue
        if line.startswith("[") and line.endswith("]"):
            name = line[1:-1].strip()
            if name not in _valid_keys:
                raise ScenarioError(
                    "Invalid Scenario - Unknown section [{}]".format(name), line=number, field=name
                )
            if name in sections:
                raise ScenarioError(
                    "Invalid Scenario - Duplicate section [{}]".format(name),
                    line=number,
                    field=name,
                )
            current = ScenarioSection(name, number)
            sections[name] = current
            continue
        if current is None:
            raise ScenarioError("Invalid Scenario - Value outside of a section", line=number)
        if FILE_VAL_SEPARATOR not in line:
            raise ScenarioError("Invalid Scenario - Unable to parse {!r}".format(raw), line=number)
        key, value = line.split(FILE_VAL_SEPARATOR, 1)
        current._add(key.strip(), value.strip(), number)
    _validate_sections(sections)
    return sections


def _validate_sections(sections):
    """Raise ScenarioError if an incorrect combination of sections was given
    """
    for name in _required_sections:
        if name not in sections:
            raise ScenarioError("Invalid Scenario - Missing section [{}]".format(name), field=name)
    if FAMILY not in sections[BASELINE]:
        raise ScenarioError(
            "Invalid Scenario - Missing family in [baseline]",
            line=sections[BASELINE].line,
            field=FAMILY,
        )
    if GENERATOR in sections and (GENERATOR_X in sections or GENERATOR_Y in sections):
        raise ScenarioError(
            "Invalid Scenario - [generator] cannot be combined with [generator.X]/[generator.Y]",
            line=sections[GENERATOR].line,
            field=GENERATOR,
        )


class ScenarioFile(object):
    """The parsed sections of a scenario file.
    Uses the same syntax as dictionary, keyed by section name
    """

    def __init__(self, text, source="<string>"):
        """Initializer for ScenarioFile

        :param str text: Contents of a scenario file
        :param str source: Where the text came from, used in log and error messages
        :raises: ScenarioError if provided text is invalid
        """
        self._sections = _parse_scenario_text(text)
        self._source = source

    @classmethod
    def from_path(cls, path):
        """Read and parse the scenario file at path"""
        try:
            with open(path, "r") as fh:
                text = fh.read()
        except (IOError, OSError) as e:
            raise ScenarioError("Invalid Scenario - Cannot read {}: {}".format(path, e))
        return cls(text, source=path)

    @property
    def source(self):
        return self._source

    def __getitem__(self, section):
        return self._sections[section]

    def __contains__(self, section):
        return section in self._sections

    def get(self, section, default=None):
        return self._sections.get(section, default)
