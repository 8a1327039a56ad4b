# -------------------------------------------------------------------------
# Copyright (c) twoofn-orders contributors. All rights reserved.
# Licensed under the MIT License. See License.txt in the project root for
# license information.
# --------------------------------------------------------------------------
"""This module contains the evaluation grid model.
"""

import numpy as np
from twoofn import constant

LINEAR = "linear"


class GridSpec(object):
    """An evenly spaced set of evaluation points.

    :ivar float lo: The first grid point.
    :ivar float hi: The last grid point.
    :ivar int points: Number of grid points.
    :ivar str spacing: Point spacing; only "linear" is supported.
    """

    def __init__(self, lo, hi, points=constant.DEFAULT_GRID_POINTS, spacing=LINEAR):
        """Initializer for a GridSpec.

        :param float lo: The first grid point.
        :param float hi: The last grid point, greater than lo.
        :param int points: Number of grid points, at least 2.
        :param str spacing: Point spacing; only "linear" is supported.
        :raises: ValueError if the bounds or point count are invalid.
        """
        lo = float(lo)
        hi = float(hi)
        if not (np.isfinite(lo) and np.isfinite(hi)):
            raise ValueError("Invalid Grid - bounds must be finite")
        if not lo < hi:
            raise ValueError("Invalid Grid - lo must be smaller than hi")
        if int(points) != points or points < 2:
            raise ValueError("Invalid Grid - points must be an integer of at least 2")
        if spacing != LINEAR:
            raise ValueError("Invalid Grid - unsupported spacing {}".format(spacing))
        self._lo = lo
        self._hi = hi
        self._points = int(points)
        self._spacing = spacing

    @classmethod
    def parse(cls, text):
        """Factory method for creating a GridSpec from "lo:hi" or "lo:hi:points".

        :param str text: Grid description.
        :raises: ValueError if the text cannot be parsed.
        """
        parts = text.split(":")
        if len(parts) not in (2, 3):
            raise ValueError("Invalid Grid - expected lo:hi[:points], got {!r}".format(text))
        try:
            lo = float(parts[0])
            hi = float(parts[1])
            points = int(parts[2]) if len(parts) == 3 else constant.DEFAULT_GRID_POINTS
        except ValueError:
            raise ValueError("Invalid Grid - expected lo:hi[:points], got {!r}".format(text))
        return cls(lo, hi, points)

    @property
    def lo(self):
        return self._lo

    @property
    def hi(self):
        return self._hi

    @property
    def points(self):
        return self._points

    @property
    def spacing(self):
        return self._spacing

    @property
    def step(self):
        return (self._hi - self._lo) / (self._points - 1)

    def values(self):
        """Return the grid points as a numpy array"""
        return np.linspace(self._lo, self._hi, self._points)

    def refined(self):
        """Return a grid over the same range with twice the point density"""
        return GridSpec(self._lo, self._hi, 2 * self._points - 1, self._spacing)

    def with_bounds(self, lo=None, hi=None):
        """Return a copy with some bounds replaced and the point count kept"""
        return GridSpec(
            self._lo if lo is None else lo, self._hi if hi is None else hi, self._points
        )

    def __eq__(self, other):
        return isinstance(other, GridSpec) and (self._lo, self._hi, self._points) == (
            other._lo,
            other._hi,
            other._points,
        )

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self._lo, self._hi, self._points))

    def __repr__(self):
        return "{!r}:{!r}:{}".format(self._lo, self._hi, self._points)
