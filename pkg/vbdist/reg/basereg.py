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

""" Classes for registering functions that are imported on first use.
"""
from __future__ import annotations

import logging
import traceback

from typing import Any, Callable, Dict, List, Optional

from vbdist.utils.cls import importSymbol, typeName
from vbdist.utils.misc import stringToIdentifier

logger = logging.getLogger(__name__)


def nameToIdentifier(fullName: str) -> str:
    """ Constructs the regItem identifier given its full name
    """
    return stringToIdentifier(fullName, white_space_becomes='')


class BaseRegItem():
    """ Represents a function that is registered in the registry.

        Each registry item (RegItem) can import its function. If the import fails, the exception
        info is put into the exception property. The underlying function is not imported by
        default; use tryImportFunction or getFunction() for this.
    """
    FIELDS = ['name', 'absFunctionName']

    def __init__(self, **kwargs: str):
        """ Constructor.

            The keyword arguments set the fields. Fields that are not given become empty strings.

            name: full name, comprising of group and name, separated by a slash.
                Can contain spaces. E.g.: 'vdist/round trip'. Must be unique when spaces are
                removed and converted to lower case.
            absFunctionName: absolute name of the underlying function. Must include the full
                path of packages and module. E.g.: 'vbdist.suites.vdistsuite.roundTrip'
        """
        self._data: Dict[str, str] = {}
        for key, value in kwargs.items():
            if key not in self.FIELDS:
                raise ValueError("Key '{}' not in field names: {}".format(key, self.FIELDS))
            self._data[key] = value

        for key in self.FIELDS:
            if key not in self._data:
                self._data[key] = ''

        self._func: Optional[Callable[..., Any]] = None  # Not yet imported.
        self._triedImport = False
        self._exception: Optional[Exception] = None  # Any exception that occurs during import


    def __repr__(self) -> str:
        return "<{}: {!r}>".format(typeName(self), self.name)


    @property
    def data(self) -> Dict[str, str]:
        """ The data dictionary
        """
        return self._data


    @property
    def identifier(self) -> str:
        """ Identifier. Should be unique.

            Is the name with white space removed.
        """
        return nameToIdentifier(self._data['name'])


    @property
    def name(self) -> str:
        """ Name of the registered function.
        """
        return self._data['name']


    @property
    def absFunctionName(self) -> str:
        """ Absolute name of the underlying function.
        """
        return self._data['absFunctionName']


    @property
    def group(self) -> str:
        """ The name minus the last part. Used to group the items in reports.
        """
        return self.name.rpartition('/')[0]


    @property
    def triedImport(self) -> bool:
        """ Returns True if the function has been imported (either successfully or not)
        """
        return self._triedImport


    @property
    def successfullyImported(self) -> Optional[bool]:
        """ Returns True if the import was a success, False if an exception was raised.
            Returns None if the function was not yet imported.
        """
        if self.triedImport:
            return self.exception is None
        else:
            return None


    @property
    def exception(self) -> Optional[Exception]:
        """ The exception that occurred during the import.
            Returns None if the import was successful.
        """
        return self._exception


    def tryImportFunction(self) -> None:
        """ Tries to import the registered function.
            Will set the exception property if an error occurred.
        """
        logger.debug("Importing: {}".format(self.absFunctionName))
        self._triedImport = True
        self._exception = None
        self._func = None
        try:
            self._func = importSymbol(self.absFunctionName)
        except Exception as ex:
            self._exception = ex
            logger.warning("Unable to import {!r}: {}".format(self.absFunctionName, ex))
            logger.debug("Traceback: {}".format(traceback.format_exc()))


    def getFunction(self, tryImport: bool = True) -> Optional[Callable[..., Any]]:
        """ Gets the underlying function. Tries to import if tryImport is True (the default).
            Returns None if the import has failed (the exception property will contain the reason)
        """
        if not self.triedImport and tryImport:
            self.tryImportFunction()

        return self._func


    def marshall(self) -> Dict[str, str]:
        """ Returns a dictionary with the fields of this item.
        """
        return {field: str(self._data[field]) for field in self.FIELDS}



class BaseRegistry():
    """ Class that maintains the collection of registered functions.

        The BaseRegistry can only store items of one type (ITEM_CLASS). Descendants will
        store their own type. For instance the InvariantRegistry will store InvariantRegItem
        items.
    """
    ITEM_CLASS = BaseRegItem

    def __init__(self):
        """ Constructor
        """
        self._items: List[BaseRegItem] = []


    def __str__(self) -> str:
        return self.registryName


    @property
    def registryName(self) -> str:
        """ Human readable name for this registry. Please override.
        """
        raise NotImplementedError()


    @property
    def items(self) -> List[BaseRegItem]:
        """ The registered items.
        """
        return self._items


    def clear(self) -> None:
        """ Empties the registry
        """
        self._items = []


    def registerItem(self, item: BaseRegItem) -> None:
        """ Adds a registry item. Raises a ValueError if the identifier is already in use.
        """
        if not isinstance(item, self.ITEM_CLASS):
            raise TypeError("Expected {}, got: {}".format(self.ITEM_CLASS.__name__, typeName(item)))
        if self.getItemById(item.identifier) is not None:
            raise ValueError("Item already registered: {!r}".format(item.identifier))
        logger.debug("Registering {!r} in {}".format(item.name, self))
        self._items.append(item)


    def resetToDefaults(self) -> None:
        """ Replaces the items by the default items.
        """
        self.clear()
        for item in self.getDefaultItems():
            self.registerItem(item)


    def getItemById(self, identifier: str) -> Optional[BaseRegItem]:
        """ Gets a registered item given its identifier. Returns None if not found.
        """
        for item in self._items:
            if item.identifier == identifier:
                return item

        return None


    def marshall(self) -> List[Dict[str, str]]:
        """ Returns a list with a dictionary per item.
        """
        return [item.marshall() for item in self.items]


    def getDefaultItems(self) -> List[BaseRegItem]:
        """ Returns a list with the default items of the registry.
            Descendants should override it.
        """
        raise NotImplementedError
