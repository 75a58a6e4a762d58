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

""" Version and other info for this program
"""
import sys

# We bypass the argparse mechanism in main.py because this import is executed before main.main()
DEBUGGING = ('-d' in sys.argv or '--debugging-mode' in sys.argv)

VERSION = '0.1.0'
REPO_NAME = "vbdist"
SCRIPT_NAME = "vbdist"
PACKAGE_NAME = "vbdist"
PROJECT_NAME = "VbDist"
SHORT_DESCRIPTION = "Vector-bundle valued distributions and smoothing operators on discretized manifolds."
PROJECT_URL = "https://github.com/vbdist/vbdist"
AUTHOR = "VbDist developers"
EMAIL = "vbdist@users.noreply.github.com"
ORGANIZATION_NAME = "vbdist"

EXIT_CODE_SUCCESS = 0
EXIT_CODE_ERROR = 1         # One or more invariants failed
EXIT_CODE_COMMAND_ARGS = 2  # Usage or parse error

DEFAULT_SEED = 0x5EED
DEFAULT_RESOLUTION = 128

KEY_PROGRAM = '_program'
KEY_VERSION = '_version'
