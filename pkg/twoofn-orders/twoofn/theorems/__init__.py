"""twoofn theorem registry

This package provides the ordering theorems as executable hypothesis checklists, the
fixture configurations that illustrate them and the randomized property suites.
"""

from .registry import TheoremSpec, run_theorem, resolve, theorem_ids, register_theorem
from .fixtures import Fixture, run_fixture, get_fixture, fixture_names
from .policies import Policy, policy_for, policy_variants
from .suite import PropertySuite, property_suite

__all__ = [
    "TheoremSpec",
    "run_theorem",
    "resolve",
    "theorem_ids",
    "register_theorem",
    "Fixture",
    "run_fixture",
    "get_fixture",
    "fixture_names",
    "Policy",
    "policy_for",
    "policy_variants",
    "PropertySuite",
    "property_suite",
]
