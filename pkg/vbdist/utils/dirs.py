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

r""" Default log directories under the different platforms.

    Log files are stored in a subdirectory of the baseLocalDataLocation. This is: ::

        Windows -> C:\Users\<user>\AppData\Local
        OS-X    -> ~/Library/Application Support
        Linux   -> ~/.local/share

    The VBDIST_LOG_DIR environment variable overrides the location.
"""

import logging
import os
import os.path
import platform

from vbdist.info import ORGANIZATION_NAME, SCRIPT_NAME

logger  = logging.getLogger(__name__)


def normRealPath(path: str) -> str:
    """ Returns the normalized real path.

        If the path is empty or None, it is returned as-is. This is to prevent expanding to the
        current directory in case of undefined paths.
    """
    if path:
        return os.path.normpath(os.path.realpath(path))
    else:
        return path


def ensureDirectoryExists(dirName: str) -> None:
    """ Creates a directory if it doesn't yet exist.
    """
    if not os.path.exists(dirName):
        logger.info("Creating directory: {}".format(normRealPath(dirName)))
        os.makedirs(dirName)


def homeDirectory() -> str:
    """ Returns the user's home directory.
    """
    return os.path.expanduser("~")


def baseLocalDataLocation() -> str:
    r""" Gets the base directory for local (not roaming) application data of the user.

        See the module doc string at the top for details.
    """
    sysName = platform.system()

    if sysName == "Darwin":
        dataDir = os.path.join(homeDirectory(), 'Library', 'Application Support')
    elif sysName == "Linux":
        dataDir = os.path.join(homeDirectory(), '.local', 'share')
    elif sysName == "Windows":
        dataDir = os.environ.get("LOCALAPPDATA", os.path.join(homeDirectory(), 'AppData', 'Local'))
    else:
        raise AssertionError("Unknown Operating System: {}".format(sysName))

    assert dataDir, "No baseLocalDataLocation found."
    return normRealPath(dataDir)


def vbdistLogDirectory() -> str:
    r""" Returns the directory where VbDist can store its log files.
    """
    envDir = os.environ.get("VBDIST_LOG_DIR", "")
    if envDir:
        return normRealPath(envDir)
    return os.path.join(baseLocalDataLocation(), ORGANIZATION_NAME, SCRIPT_NAME, 'logs')
