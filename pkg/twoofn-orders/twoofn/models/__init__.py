"""twoofn models

This package provides the grid and report objects returned by the twoofn checks.
"""

from .grid import GridSpec
from .reports import (
    ConditionReport,
    OrderCheckReport,
    PreorderVerdict,
    HypothesisResult,
    TheoremVerdict,
    SuiteReport,
    MonteCarloEstimate,
)

__all__ = [
    "GridSpec",
    "ConditionReport",
    "OrderCheckReport",
    "PreorderVerdict",
    "HypothesisResult",
    "TheoremVerdict",
    "SuiteReport",
    "MonteCarloEstimate",
]
