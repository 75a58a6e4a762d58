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

""" The configuration of a single run of the command line program.
"""
from __future__ import annotations

import logging

from typing import Any, Dict, Optional

from vbdist.config.configitems import (ChoiceConfigItem, FloatConfigItem, GroupConfigItem,
                                       IntConfigItem, StringConfigItem)
from vbdist.info import DEFAULT_RESOLUTION, DEFAULT_SEED
from vbdist.utils.defs import (DEFAULT_SMOOTHNESS_CONSTANT, MIN_NODES, NORMALIZATION_TOL,
                               PROJECTOR_TOL, RANK_TOL, InvalidInputError)

logger = logging.getLogger(__name__)

# Named tolerances and their defaults. The ratio tolerance is the allowed distance of successive
# convergence error ratios from 4.
DEFAULT_TOLERANCES = {
    'exact': 1e-12,
    'linear': 1e-13,
    'stencil': 1e-8,
    'oracle': 1e-9,
    'projector': PROJECTOR_TOL,
    'rank': RANK_TOL,
    'normalization': NORMALIZATION_TOL,
    'ratio': 0.8,
}

FIELD_CHOICES = ['real', 'complex']


class RunConfig():
    """ Settings of a run: seed, resolution, field, tolerances, output directory and scene file.

        The settings are stored in a tree of config items, so that values are validated when they
        are set and so that the settings that differ from the defaults can be reported.
    """
    def __init__(self):
        self._root = GroupConfigItem('run')
        self._seedItem = self._root.insertChild(
            IntConfigItem('seed', DEFAULT_SEED, minValue=0, maxValue=2 ** 64 - 1))
        self._resolutionItem = self._root.insertChild(
            IntConfigItem('resolution', DEFAULT_RESOLUTION, minValue=MIN_NODES))
        self._fieldItem = self._root.insertChild(ChoiceConfigItem('field', FIELD_CHOICES))
        self._smoothnessItem = self._root.insertChild(
            FloatConfigItem('smoothnessConstant', DEFAULT_SMOOTHNESS_CONSTANT, positive=True))

        self._tolerancesItem = self._root.insertChild(GroupConfigItem('tolerances'))
        for name, value in DEFAULT_TOLERANCES.items():
            self._tolerancesItem.insertChild(FloatConfigItem(name, value, positive=True))

        self._outputDirItem = self._root.insertChild(StringConfigItem('outputDir', '.'))
        self._sceneItem = self._root.insertChild(StringConfigItem('scene', ''))


    def __repr__(self) -> str:
        return "<RunConfig: {}>".format(self.getNonDefaultsDict())


    @property
    def seed(self) -> int:
        """ Seed of all random generators. """
        return self._seedItem.configValue

    @seed.setter
    def seed(self, value: Any) -> None:
        self._seedItem.data = value

    @property
    def resolution(self) -> int:
        """ Number of nodes per axis. """
        return self._resolutionItem.configValue

    @resolution.setter
    def resolution(self, value: Any) -> None:
        self._resolutionItem.data = value

    @property
    def field(self) -> str:
        """ 'real' or 'complex'. """
        return self._fieldItem.configValue

    @field.setter
    def field(self, value: Any) -> None:
        self._fieldItem.data = value

    @property
    def isComplex(self) -> bool:
        """ True if random test data is complex valued. """
        return self.field == 'complex'

    @property
    def smoothnessConstant(self) -> float:
        """ Constant of the adjacent node smoothness bound. """
        return self._smoothnessItem.configValue

    @smoothnessConstant.setter
    def smoothnessConstant(self, value: Any) -> None:
        self._smoothnessItem.data = value

    @property
    def outputDir(self) -> str:
        """ Directory where the output files are written. """
        return self._outputDirItem.configValue

    @outputDir.setter
    def outputDir(self, value: Any) -> None:
        self._outputDirItem.data = value

    @property
    def scene(self) -> Optional[str]:
        """ Path of the scene file, or None if no scene is given. """
        return self._sceneItem.configValue or None

    @scene.setter
    def scene(self, value: Optional[str]) -> None:
        self._sceneItem.data = value or ''


    def tolerance(self, name: str) -> float:
        """ Returns the named tolerance. Raises InvalidInputError for unknown names.
        """
        return self._toleranceItem(name).configValue


    def setTolerance(self, name: str, value: Any) -> None:
        """ Overrides the named tolerance. Raises InvalidInputError for unknown names or
            non-positive values.
        """
        self._toleranceItem(name).data = value


    def _toleranceItem(self, name: str) -> FloatConfigItem:
        item: Any = None
        if name and '/' not in name:
            nodePath = '{}/{}'.format(self._tolerancesItem.nodeName, name)
            try:
                item = self._root.findByNodePath(nodePath)
            except IndexError:
                pass
        if not isinstance(item, FloatConfigItem):
            raise InvalidInputError("Unknown tolerance {!r}. Known tolerances: {}"
                                    .format(name, ', '.join(DEFAULT_TOLERANCES)))
        return item


    @property
    def tolerances(self) -> Dict[str, float]:
        """ All named tolerances. """
        return {name: self.tolerance(name) for name in DEFAULT_TOLERANCES}


    def marshall(self) -> Dict[str, Any]:
        """ The configuration as a nested dictionary. """
        return self._root.marshall()


    def getNonDefaultsDict(self) -> Dict[str, Any]:
        """ The settings that differ from their defaults, by node path. """
        return self._root.getNonDefaultsDict()


    def setValuesFromDict(self, dct: Dict[str, Any]) -> None:
        """ Sets values from a (nested) dictionary, e.g. the 'config' entry of a scene file.
        """
        self._root.setValuesFromDict(dct)


    def logConfig(self, level: int = logging.DEBUG) -> None:
        """ Logs all settings. """
        self._root.logBranch(level=level)
