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

""" Vector-bundle valued distributions on discretized manifolds.

    The package represents distributional sections of a vector bundle in three interconvertible
    forms (tensor, coordinate and hom) and splits vector valued smoothing operators into a smooth
    kernel section times a scalar smoothing operator.

    This is the top level module and should not be imported by sub modules.
"""

from typing import TYPE_CHECKING

if not TYPE_CHECKING:

    # IMPORTANT: do not do any imports here that (indirectly) import numpy.
    # The info module is imported by setup.py, which must work before numpy is installed.

    from .info import VERSION as __version__
