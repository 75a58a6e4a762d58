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

""" Typed configuration items that form a tree.

    Every node has a name and a full path that is a slash-separated string of the node names
    leading from the root to the node, e.g. 'tolerances/stencil'. The root node is not included
    in the path.

    Each item stores its data in one type. The _enforceDataType method converts (and validates) the
    data when it is set, so invalid values are rejected at the moment they enter the tree. The
    default data is kept so that items can be reset and so that only the non-default values need
    to be reported.
"""
from __future__ import annotations

import logging
import math

from typing import Any, Dict, List, Optional, Sequence

from vbdist.utils.cls import checkIsAMapping, checkType, isAString
from vbdist.utils.defs import InvalidInputError

logger = logging.getLogger(__name__)


class AbstractConfigItem():
    """ Node of a configuration tree. Abstract class.

        Descendants must implement _enforceDataType, which ensures that the data is stored
        internally in the correct type.
    """
    def __init__(self, nodeName: str, defaultData: Any):
        """ Constructor

            :param nodeName: name of this node (used to construct the node path).
                May not be empty and may not contain slashes.
            :param defaultData: default data to which the data can be reset.
        """
        checkType(nodeName, str)
        assert nodeName, "nodeName may not be empty"
        assert '/' not in nodeName, "nodeName may not contain slashes"
        self._nodeName = nodeName
        self._parentItem: Optional[AbstractConfigItem] = None
        self._childItems: List[AbstractConfigItem] = []
        self._defaultData = self._enforceDataType(defaultData)
        self._data = self._defaultData


    def __str__(self) -> str:
        return "<{}: {}>".format(type(self).__name__, self.nodePath)

    def __repr__(self) -> str:
        return "<{}: {!r} = {!r}>".format(type(self).__name__, self.nodePath, self._data)


    @property
    def nodeName(self) -> str:
        """ The node name. Is used to construct the nodePath. """
        return self._nodeName

    @property
    def nodePath(self) -> str:
        """ The sequence of nodeNames from the root to this node. Separated by slashes. """
        if self._parentItem is None:
            return ''  # the root is not included in the path
        parentPath = self._parentItem.nodePath
        return parentPath + '/' + self._nodeName if parentPath else self._nodeName

    @property
    def parentItem(self) -> Optional[AbstractConfigItem]:
        """ The parent item. """
        return self._parentItem

    @property
    def childItems(self) -> List[AbstractConfigItem]:
        """ List of child items. """
        return self._childItems


    def insertChild(self, childItem: AbstractConfigItem) -> AbstractConfigItem:
        """ Appends a child item. Returns the child so that calls may be chained.
        """
        checkType(childItem, AbstractConfigItem)
        assert childItem.parentItem is None, "childItem already has a parent: {}".format(childItem)
        childItem._parentItem = self
        self._childItems.append(childItem)
        return childItem


    def childByNodeName(self, nodeName: str) -> AbstractConfigItem:
        """ Gets the first (direct) child that has the nodeName.
        """
        for child in self._childItems:
            if child.nodeName == nodeName:
                return child
        raise IndexError("No child item found having nodeName: {}".format(nodeName))


    def findByNodePath(self, nodePath: str) -> AbstractConfigItem:
        """ Recursively searches for the descendant having the nodePath. Starts at self.
        """
        item = self
        for part in nodePath.split('/'):
            if part:  # Two consecutive slashes. Just go one level deeper.
                item = item.childByNodeName(part)
        return item


    @property
    def data(self) -> Any:
        """ The data of this item. """
        return self._data

    @data.setter
    def data(self, data: Any) -> None:
        """ Sets the data of this item. Converts it to the correct type first.
        """
        self._data = self._enforceDataType(data)

    @property
    def defaultData(self) -> Any:
        """ The default data of this item. """
        return self._defaultData

    @property
    def configValue(self) -> Any:
        """ The configuration value of this item. By default the same as the data. """
        return self._data


    def _enforceDataType(self, data: Any) -> Any:
        """ Converts data to the type of this item. Raises InvalidInputError for invalid data.
        """
        raise NotImplementedError()


    def resetToDefault(self, resetChildren: bool = True) -> None:
        """ Resets the data to the default data. By default the children will be reset as well.
        """
        self._data = self._defaultData
        if resetChildren:
            for child in self._childItems:
                child.resetToDefault(resetChildren=True)


    def logBranch(self, indent: int = 0, level: int = logging.DEBUG) -> None:
        """ Logs the item and all descendants, one line per child.
        """
        logger.log(level, indent * "    " + "{} ({})".format(self, self.configValue))
        for child in self._childItems:
            child.logBranch(indent + 1, level=level)


    def marshall(self) -> Any:
        """ Recursively retrieves the values as a dictionary.

            Leaves give their data; groups give a dictionary of their children.
        """
        if self._childItems:
            return {child.nodeName: child.marshall() for child in self._childItems}
        return self._data


    def getNonDefaultsDict(self) -> Dict[str, Any]:
        """ Returns a flat dictionary (node path -> data) of all items that differ from their
            default value.
        """
        result = {}
        if self._data != self._defaultData:
            result[self.nodePath] = self._data
        for child in self._childItems:
            result.update(child.getNonDefaultsDict())
        return result


    def setValuesFromDict(self, dct: Dict[str, Any]) -> None:
        """ Sets the data of the descendants from a (nested) dictionary.

            Raises InvalidInputError for unknown names.
        """
        checkIsAMapping(dct)
        for childName, childCfg in dct.items():
            try:
                child = self.childByNodeName(childName)
            except IndexError:
                raise InvalidInputError("Unknown configuration item {!r} in {!r}"
                                        .format(childName, self.nodePath or '/'))
            if isinstance(childCfg, dict):
                child.setValuesFromDict(childCfg)
            else:
                child.data = childCfg



class GroupConfigItem(AbstractConfigItem):
    """ Config item that only stores None. It is used to group other items.
    """
    def __init__(self, nodeName: str):
        super().__init__(nodeName, None)

    def _enforceDataType(self, data: Any) -> Any:
        """ Passes the data as is; no conversion. """
        return data



class IntConfigItem(AbstractConfigItem):
    """ Config item to store an integer, optionally with a minimum and maximum value.
    """
    def __init__(self, nodeName: str, defaultData: int = 0,
                 minValue: Optional[int] = None, maxValue: Optional[int] = None):
        """ Constructor.

            :param minValue: minimum data allowed (use None for no minimum)
            :param maxValue: maximum data allowed (use None for no maximum)
        """
        self.minValue = minValue
        self.maxValue = maxValue
        super().__init__(nodeName, defaultData)

    def _enforceDataType(self, data: Any) -> int:
        """ Converts to int so that this item always stores that type. Checks the range.
        """
        if isinstance(data, bool) or (isinstance(data, float) and not data.is_integer()):
            raise InvalidInputError("{}: expected an integer, got: {!r}".format(self._nodeName, data))
        try:
            value = int(data, 0) if isAString(data) else int(data)
        except (TypeError, ValueError) as ex:
            raise InvalidInputError("{}: expected an integer, got: {!r}"
                                    .format(self._nodeName, data)) from ex
        if self.minValue is not None and value < self.minValue:
            raise InvalidInputError("{}: value {} is smaller than the minimum {}"
                                    .format(self._nodeName, value, self.minValue))
        if self.maxValue is not None and value > self.maxValue:
            raise InvalidInputError("{}: value {} is larger than the maximum {}"
                                    .format(self._nodeName, value, self.maxValue))
        return value



class FloatConfigItem(AbstractConfigItem):
    """ Config item to store a floating point number.
    """
    def __init__(self, nodeName: str, defaultData: float = 0.0,
                 minValue: Optional[float] = None, maxValue: Optional[float] = None,
                 positive: bool = False):
        """ Constructor.

            :param minValue: minimum data allowed (use None for no minimum)
            :param maxValue: maximum data allowed (use None for no maximum)
            :param positive: if True the value must be strictly larger than zero.
        """
        self.minValue = minValue
        self.maxValue = maxValue
        self.positive = positive
        super().__init__(nodeName, defaultData)

    def _enforceDataType(self, data: Any) -> float:
        """ Converts to float so that this item always stores that type.

            Raises an InvalidInputError for NaNs, infinities and values out of range.
        """
        try:
            value = float(data)
        except (TypeError, ValueError) as ex:
            raise InvalidInputError("{}: expected a number, got: {!r}"
                                    .format(self._nodeName, data)) from ex
        if not math.isfinite(value):
            raise InvalidInputError("{}: value must be finite, got: {}".format(self._nodeName, value))
        if self.positive and value <= 0:
            raise InvalidInputError("{}: value must be positive, got: {}"
                                    .format(self._nodeName, value))
        if self.minValue is not None and value < self.minValue:
            raise InvalidInputError("{}: value {} is smaller than the minimum {}"
                                    .format(self._nodeName, value, self.minValue))
        if self.maxValue is not None and value > self.maxValue:
            raise InvalidInputError("{}: value {} is larger than the maximum {}"
                                    .format(self._nodeName, value, self.maxValue))
        return value



class ChoiceConfigItem(AbstractConfigItem):
    """ Config item to store a choice between strings.

        The data is the index of the choice; the configValue is the chosen string. The data may be
        set by index or by value.
    """
    def __init__(self, nodeName: str, configValues: Sequence[str], defaultData: int = 0):
        """ Constructor.

            :param configValues: the possible choices.
            :param defaultData: the default index. Use -1 to select the last item.
        """
        self._configValues = list(configValues)
        assert self._configValues, "configValues may not be empty"
        super().__init__(nodeName, defaultData)

    @property
    def configValues(self) -> List[str]:
        """ The possible choices. """
        return list(self._configValues)

    def _enforceDataType(self, data: Any) -> int:
        """ Converts to an index so that this item always stores that type.
        """
        if isAString(data):
            if data not in self._configValues:
                raise InvalidInputError("{}: {!r} is not one of {}"
                                        .format(self._nodeName, data, self._configValues))
            return self._configValues.index(data)
        idx = int(data)
        if idx < 0:
            idx += len(self._configValues)
        if not 0 <= idx < len(self._configValues):
            raise InvalidInputError("{}: index should be >= 0 and < {}. Got {}"
                                    .format(self._nodeName, len(self._configValues), idx))
        return idx

    @property
    def configValue(self) -> str:
        """ The currently selected choice. """
        return self._configValues[self._data]

    def marshall(self) -> Any:
        """ Choices are marshalled by value. """
        return self.configValue



class StringConfigItem(AbstractConfigItem):
    """ Config item to store a string.
    """
    def __init__(self, nodeName: str, defaultData: str = ''):
        super().__init__(nodeName, defaultData)

    def _enforceDataType(self, data: Any) -> str:
        """ Converts to str so that this item always stores that type. """
        return str(data)
