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

""" Typed configuration items and the run configuration of the command line program.
"""
