"""twoofn: stochastic comparisons of 2-out-of-n system lifetimes

This library evaluates the lifetime distribution of 2-out-of-n systems whose components
follow exponentiated location-scale models, either independent or coupled through an
Archimedean copula, and checks usual stochastic and reversed hazard rate orderings between
two such systems against the sufficient conditions known for them.
"""

from .constant import VERSION as __version__  # noqa: F401
from .baseline import create_baseline, registered_families
from .copula import create_generator, registered_generators
from .els import ELSConfig
from .orderstats import cdf_second_largest, rh_second_largest, check_order
from .models import *  # noqa: F401, F403
from .common.errors import *  # noqa: F401, F403
from . import models
from . import theorems

__all__ = [
    "create_baseline",
    "registered_families",
    "create_generator",
    "registered_generators",
    "ELSConfig",
    "cdf_second_largest",
    "rh_second_largest",
    "check_order",
    "theorems",
] + models.__all__
