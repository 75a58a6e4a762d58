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

""" The context in which the invariant suites run.
"""
from __future__ import annotations

import logging

from typing import Dict, List, Optional

import numpy as np

from vbdist.bundles import ProjectorBundle, complement, mobius, tensor, trivialBundle, whitneySum
from vbdist.config.runconfig import RunConfig
from vbdist.geometry import DiscreteManifold, makeCircle, makeInterval
from vbdist.testdata import makeGenerator

logger = logging.getLogger(__name__)

# Number of seeded inputs per battery.
BATTERY_SIZE = 20


class CheckContext():
    """ Shares the run configuration, the manifolds and the test bundles between the suites.

        Manifolds and bundles are created once. Every suite asks for its own random generator,
        identified by a label, so that its data does not depend on the other suites.
    """
    def __init__(self, config: Optional[RunConfig] = None):
        self._config = RunConfig() if config is None else config
        self._circles: Dict[int, DiscreteManifold] = {}
        self._testBundles: Optional[List[ProjectorBundle]] = None

    def __repr__(self) -> str:
        return "<CheckContext: seed={}, resolution={}>".format(self.seed, self.resolution)

    @property
    def config(self) -> RunConfig:
        """ The run configuration. """
        return self._config

    @property
    def seed(self) -> int:
        """ The run seed. """
        return self._config.seed

    @property
    def resolution(self) -> int:
        """ Number of nodes of the default circle. """
        return self._config.resolution

    @property
    def isComplex(self) -> bool:
        """ True if the random test data is complex valued. """
        return self._config.isComplex

    @property
    def batterySize(self) -> int:
        """ Number of random test densities used to compare distributions. """
        return BATTERY_SIZE


    def generator(self, label: str) -> np.random.Generator:
        """ A random generator for the battery with the given label. """
        return makeGenerator(self.seed, label=label)


    def circle(self, nNodes: Optional[int] = None) -> DiscreteManifold:
        """ The circle with nNodes nodes (default: the configured resolution). """
        nNodes = self.resolution if nNodes is None else nNodes
        if nNodes not in self._circles:
            self._circles[nNodes] = makeCircle(nNodes)
        return self._circles[nNodes]


    def interval(self) -> DiscreteManifold:
        """ The interval with the configured resolution. """
        return makeInterval(self.resolution)


    def testBundles(self) -> List[ProjectorBundle]:
        """ trivial(1), trivial(2), mobius, mobius + complement(mobius), mobius + mobius and
            mobius (x) mobius on the default circle.
        """
        if self._testBundles is None:
            m = self.circle()
            mob = mobius(m)
            self._testBundles = [trivialBundle(m, 1), trivialBundle(m, 2), mob,
                                 whitneySum(mob, complement(mob)), whitneySum(mob, mob),
                                 tensor(mob, mob)]
        return self._testBundles
