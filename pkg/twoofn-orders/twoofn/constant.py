# -------------------------------------------------------------------------
# Copyright (c) twoofn-orders contributors. All rights reserved.
# Licensed under the MIT License. See License.txt in the project root for
# license information.
# --------------------------------------------------------------------------
"""This module defines constants for use across the twoofn package
"""

VERSION = "0.3.0"

# Grids
DEFAULT_GRID_POINTS = 4096
MIN_CONDITION_GRID_POINTS = 64
GRID_INSET = 1e-6
BOUNDED_RH_STOP = 1e-4
CROSSING_WIDTH = 1e-3

# Verdict tolerances
ST_TOLERANCE = 1e-9
RH_RELATIVE_TOLERANCE = 1e-7
MONOTONE_TOLERANCE = 1e-10
CONVEX_TOLERANCE = 1e-10
DENOMINATOR_TOLERANCE = 1e-15
PSI_PRIME_FLOOR = 1e-300
CDF_MONOTONE_TOLERANCE = 1e-12

# Majorization
PARTIAL_SUM_RELATIVE_TOLERANCE = 1e-12
SCHUR_BASE_POINTS = 32
SCHUR_STEP = 1e-5
SCHUR_RELATIVE_TOLERANCE = 1e-6

# Generators
ADDITIVITY_TOLERANCE = 1e-9
ADDITIVITY_RANGE = (1e-4, 1e4)
ROUND_TRIP_TOLERANCE = 1e-10

# Monte Carlo
MC_ACCEPT_STDERRS = 3.5
DKW_FAILURE_PROBABILITY = 1e-6
MC_CHUNK_SIZE = 1 << 17

# Property suites
REJECTION_LIMIT = 100000
