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

""" Miscellaneous routines.
"""
import logging
import re

from typing import TypeVar, List, Any, Dict, Tuple

from vbdist.utils.cls import isAString
from vbdist.utils.defs import InvalidInputError

logger = logging.getLogger(__name__)


def stringToIdentifier(s: str, white_space_becomes: str = '_') -> str:
    """ Takes a string and makes it suitable for use as an identifier.

        Translates to lower case.
        Replaces white space by the white_space_becomes character (default=underscore).
        Removes and punctuation.
    """
    s = s.lower()
    s = re.sub(r"\s+", white_space_becomes, s)
    s = re.sub(r"-", "_", s)
    s = re.sub(r"[^A-Za-z0-9_]", "", s)
    return s


T = TypeVar('T', Dict[Any, Any], List[Any], str)
def replaceStringsInDict(obj: T, old: str, new: str) -> T:
    """ Recursively searches for a string in a dict and replaces a string by another.
    """
    if isinstance(obj, dict):
        return {key: replaceStringsInDict(value, old, new) for key, value in obj.items()}
    elif isinstance(obj, list):
        return [replaceStringsInDict(value, old, new) for value in obj]
    elif isAString(obj):
        return obj.replace(old, new)
    else:
        return obj


def parseFloatList(text: str) -> List[float]:
    """ Parses a comma separated list of floats, e.g. '0.4,0.2,0.1'.

        An empty string gives an empty list.
    """
    text = text.strip()
    if not text:
        return []
    try:
        return [float(part) for part in text.split(',')]
    except ValueError as ex:
        raise InvalidInputError("Invalid list of numbers {!r}: {}".format(text, ex)) from ex


def parseNameValue(text: str) -> Tuple[str, float]:
    """ Parses a 'NAME=VALUE' string where VALUE is a float.
    """
    name, sep, value = text.partition('=')
    if not sep or not name.strip():
        raise InvalidInputError("Expected NAME=VALUE, got: {!r}".format(text))
    try:
        return name.strip(), float(value)
    except ValueError as ex:
        raise InvalidInputError("Invalid value in {!r}: {}".format(text, ex)) from ex


def formatFloat(value: float) -> str:
    """ Formats a float with 17 significant digits so that it round trips.
    """
    return "{:.17g}".format(value)
