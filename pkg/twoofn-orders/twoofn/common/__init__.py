"""Common twoofn helpers

This package provides the error hierarchy, scenario file parsing and worker thread
management shared by the numeric modules.
"""

from .errors import *  # noqa: F401, F403
from .scenario_file import ScenarioFile, SpecString, parse_vector  # noqa: F401
