# -*- coding: utf-8 -*-

# This file is part of VbDist.
#
# VbDist is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# VbDist is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with VbDist. If not, see <http://www.gnu.org/licenses/>.

""" Various definitions, errors and constants that can be used throughout the program.

"""

# Minimum number of nodes per axis. The second order stencils need two neighbours on each side.
MIN_NODES = 8

# Number of node layers at each end of a non-periodic axis that belong to the boundary.
BOUNDARY_LAYERS = 2

# Size limits of distributions, distributional sections and smoothing operators
MAX_ATOMS = 64
MAX_TERMS = 64
MAX_PAIRS = 16
MAX_DERIV_ORDER = 2

DEFAULT_SMOOTHNESS_CONSTANT = 10.0

# Tolerances used when validating the objects on construction.
PROJECTOR_TOL = 1e-10
RANK_TOL = 1e-8
NORMALIZATION_TOL = 1e-10


class VbDistError(Exception):
    """ Base class for all errors raised by VbDist.
    """
    pass


class InvalidInputError(VbDistError, ValueError):
    """ Exception raised when a precondition on the input is violated.
    """
    pass


class BoundaryLayerError(InvalidInputError):
    """ Raised when a derivative is requested inside the boundary layer of a non-periodic axis.
    """
    pass


class FiberError(VbDistError, ValueError):
    """ Raised when values leave the range of a projector field, or when a morphism does not
        respect the fibers of its source and target.
    """
    pass


class BundleMismatchError(VbDistError, ValueError):
    """ Raised when objects live on incompatible bases or bundles.
    """
    pass


class ConsistencyError(VbDistError):
    """ Raised when a structural invariant is violated (e.g. a non-idempotent projector).
    """
    pass
