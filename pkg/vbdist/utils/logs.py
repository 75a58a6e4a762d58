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

""" Logging configuration and helpers.

    Logging is configured from a JSON file in logging.config.dictConfig format. The string
    @logDir@ in the file is replaced by the VbDist log directory (see utils/dirs.py). Handlers
    whose name contains 'stream' are considered screen handlers: the --log-level option of the
    command line program only changes their level, so the log file always gets all messages.
"""
import json
import logging
import logging.config
import os.path

from typing import Any, Dict, List, Optional, Union

from vbdist.utils.defs import InvalidInputError
from vbdist.utils.dirs import ensureDirectoryExists, normRealPath, vbdistLogDirectory
from vbdist.utils.misc import replaceStringsInDict

logger = logging.getLogger(__name__)

THIS_MODULE_DIR = os.path.dirname(os.path.realpath(__file__))
DEFAULT_LOG_CONFIG = os.path.join(THIS_MODULE_DIR, "default_logging.json")

LOG_DIR_PLACEHOLDER = "@logDir@"
LOG_LEVEL_NAMES = ('debug', 'info', 'warning', 'error', 'critical')


def levelNumber(level: Union[str, int]) -> int:
    """ Converts a level name (case insensitive) or number to a level number.
    """
    if isinstance(level, int) and not isinstance(level, bool):
        return level
    if isinstance(level, str) and level.lower() in LOG_LEVEL_NAMES:
        return getattr(logging, level.upper())
    raise InvalidInputError("Unknown log level {!r}. Expected one of: {}"
                            .format(level, ", ".join(LOG_LEVEL_NAMES)))


def findStreamHandlers() -> List[logging.Handler]:
    """ Returns the handlers of the root logger that have 'stream' in their name.
    """
    return [handler for handler in logging.getLogger().handlers
            if handler.name and 'stream' in handler.name.lower()]


def loadLogConfig(configFileName: str, logDir: str) -> Dict[str, Any]:
    """ Reads a JSON logging configuration and fills in the log directory.

        Creates the log directory if the configuration refers to it.
    """
    try:
        with open(configFileName, 'r', encoding='utf-8') as stream:
            configDict = json.load(stream)
    except OSError as ex:
        raise InvalidInputError("Unable to read log config {!r}: {}"
                                .format(configFileName, ex)) from ex
    except ValueError as ex:
        raise InvalidInputError("Malformed log config {!r}: {}"
                                .format(configFileName, ex)) from ex

    if not isinstance(configDict, dict):
        raise InvalidInputError("Log config {!r} should contain a JSON object"
                                .format(configFileName))

    if LOG_DIR_PLACEHOLDER in json.dumps(configDict):
        ensureDirectoryExists(logDir)

    return replaceStringsInDict(configDict, LOG_DIR_PLACEHOLDER, logDir)


def initLogging(configFileName: Optional[str] = None, streamLogLevel: Optional[str] = None) -> None:
    """ Configures logging.

        Args:
            configFileName: JSON file with the log config. If None, utils/default_logging.json
                is used.
            streamLogLevel: if given, overrides the level of the stream handlers in the config.
    """
    configFileName = configFileName or DEFAULT_LOG_CONFIG
    logDir = vbdistLogDirectory()
    configDict = loadLogConfig(configFileName, logDir)

    try:
        logging.config.dictConfig(configDict)
    except (ValueError, TypeError, AttributeError, ImportError) as ex:
        raise InvalidInputError("Invalid log config {!r}: {}".format(configFileName, ex)) from ex

    if streamLogLevel:
        levelNr = levelNumber(streamLogLevel)
        for handler in findStreamHandlers():
            handler.setLevel(levelNr)

    logger.info("Initialized logging from: '{}'".format(normRealPath(configFileName)))
    logger.info("Log directory: '{}'".format(logDir))


def logDictionary(dictionary: Dict[Any, Any],
                  msg: str = '',
                  logger: Optional[logging.Logger] = None,
                  level: Union[str, int] = 'debug',
                  itemPrefix: str = '    ') -> None:
    """ Logs every item of the dictionary on its own line, keys aligned and sorted.

        Args:
            dictionary: The dictionary to be logged.
            msg: An optional message that is logged before the contents.
            logger: The logger to log to. If not set, the 'vbdist' logger is used.
            level: Level name or number. Default: 'debug'.
            itemPrefix: String that will be prefixed to each line.
    """
    levelNr = levelNumber(level)
    logger = logger or logging.getLogger('vbdist')

    if msg:
        logger.log(levelNr, "Logging dictionary: {}".format(msg))

    if not dictionary:
        logger.log(levelNr, "{}<empty dictionary>".format(itemPrefix))
        return

    keys = sorted(str(key) for key in dictionary)
    values = {str(key): value for key, value in dictionary.items()}
    maxKeyLen = max(len(key) for key in keys)
    for key in keys:
        logger.log(levelNr, "{0}{1:<{2}s} = {3}".format(itemPrefix, key, maxKeyLen, values[key]))
