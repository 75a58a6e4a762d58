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

""" Invariant registry.

    Every invariant is a function that takes a CheckContext and returns the maximum deviation it
    measured. The registry item names the function and the tolerance the deviation is compared
    with.
"""
from __future__ import annotations

import logging
import math
import traceback

from dataclasses import dataclass, asdict
from typing import Any, Dict, List, Optional

from vbdist.reg.basereg import BaseRegItem, BaseRegistry

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class InvariantResult:
    """ Outcome of running one invariant.

        The deviation is None if the invariant could not be evaluated; the error then holds the
        reason.
    """
    name: str
    deviation: Optional[float]
    toleranceName: str
    tolerance: float
    passed: bool
    error: str = ''

    def asDict(self) -> Dict[str, Any]:
        """ The result as a dictionary for the JSON report. """
        return asdict(self)



class InvariantRegItem(BaseRegItem):
    """ Registers an invariant function together with the name of its tolerance.
    """
    FIELDS = BaseRegItem.FIELDS + ['toleranceName']

    def __init__(self, name: str = '', absFunctionName: str = '', toleranceName: str = ''):
        """ Constructor.

            :param name: group and name separated by a slash. E.g. 'vdist/round trip'
            :param absFunctionName: e.g. 'vbdist.suites.vdistsuite.roundTrip'
            :param toleranceName: name of the RunConfig tolerance, e.g. 'stencil'.
        """
        super().__init__(name=name, absFunctionName=absFunctionName, toleranceName=toleranceName)


    @property
    def toleranceName(self) -> str:
        """ Name of the tolerance the deviation is compared with. """
        return self._data['toleranceName']


    def run(self, ctx: Any) -> InvariantResult:
        """ Runs the invariant function in the context and compares the result with the tolerance.

            Import errors and exceptions raised by the function are reported as failures.
        """
        tolerance = ctx.config.tolerance(self.toleranceName)
        func = self.getFunction()
        if func is None:
            return InvariantResult(self.name, None, self.toleranceName, tolerance, False,
                                   error="Import failed: {}".format(self.exception))
        try:
            deviation = float(func(ctx))
        except Exception as ex:
            logger.warning("Invariant {!r} raised: {}".format(self.name, ex))
            logger.debug("Traceback: {}".format(traceback.format_exc()))
            return InvariantResult(self.name, None, self.toleranceName, tolerance, False,
                                   error="{}: {}".format(type(ex).__name__, ex))

        if not math.isfinite(deviation):
            return InvariantResult(self.name, None, self.toleranceName, tolerance, False,
                                   error="Deviation is not finite: {}".format(deviation))

        passed = deviation <= tolerance
        if passed:
            logger.info("Invariant {!r} passed: {:.3g} <= {:.3g} ({})"
                        .format(self.name, deviation, tolerance, self.toleranceName))
        else:
            logger.warning("Invariant {!r} failed: {:.3g} > {:.3g} ({})"
                           .format(self.name, deviation, tolerance, self.toleranceName))
        return InvariantResult(self.name, deviation, self.toleranceName, tolerance, passed)



class InvariantRegistry(BaseRegistry):
    """ Registry of the invariants that the check command runs.
    """
    ITEM_CLASS = InvariantRegItem

    def __init__(self, resetToDefaults: bool = True):
        super().__init__()
        if resetToDefaults:
            self.resetToDefaults()

    @property
    def registryName(self) -> str:
        """ Human readable name for this registry.
        """
        return "Invariant registry"


    def runAll(self, ctx: Any) -> List[InvariantResult]:
        """ Runs every registered invariant in registration order.
        """
        return [item.run(ctx) for item in self.items]  # type: ignore


    def getDefaultItems(self) -> List[BaseRegItem]:
        """ Returns a list with the default invariants.
        """
        items = [
            InvariantRegItem('geometry/quad linearity',
                             'vbdist.suites.geometrysuite.quadLinearity', 'linear'),
            InvariantRegItem('geometry/product quadrature',
                             'vbdist.suites.geometrysuite.productQuadrature', 'exact'),
            InvariantRegItem('geometry/derivative of constants',
                             'vbdist.suites.geometrysuite.derivOfConstants', 'exact'),
            InvariantRegItem('geometry/derivative convergence',
                             'vbdist.suites.geometrysuite.derivConvergence', 'ratio'),

            InvariantRegItem('bundles/functoriality',
                             'vbdist.suites.bundlesuite.functoriality', 'exact'),
            InvariantRegItem('bundles/additivity',
                             'vbdist.suites.bundlesuite.additivity', 'exact'),
            InvariantRegItem('bundles/complement sum',
                             'vbdist.suites.bundlesuite.complementSum', 'exact'),

            InvariantRegItem('sections/module axioms',
                             'vbdist.suites.sectionsuite.moduleAxioms', 'linear'),
            InvariantRegItem('sections/pushforward linearity',
                             'vbdist.suites.sectionsuite.pushforwardLinearity', 'exact'),
            InvariantRegItem('sections/generator expansion',
                             'vbdist.suites.sectionsuite.generatorExpansion', 'exact'),
            InvariantRegItem('sections/fiberwise tensor naturality',
                             'vbdist.suites.sectionsuite.fiberwiseTensorNaturality', 'exact'),

            InvariantRegItem('distributions/pairing bilinearity',
                             'vbdist.suites.distributionsuite.pairingBilinearity', 'linear'),
            InvariantRegItem('distributions/leibniz adjoint',
                             'vbdist.suites.distributionsuite.leibnizAdjoint', 'stencil'),
            InvariantRegItem('distributions/module associativity',
                             'vbdist.suites.distributionsuite.moduleAssociativity', 'stencil'),

            InvariantRegItem('vdist/round trip',
                             'vbdist.suites.vdistsuite.roundTrip', 'stencil'),
            InvariantRegItem('vdist/reduction formula',
                             'vbdist.suites.vdistsuite.reductionFormula', 'stencil'),
            InvariantRegItem('vdist/nu linearity',
                             'vbdist.suites.vdistsuite.nuLinearity', 'stencil'),
            InvariantRegItem('vdist/balancedness',
                             'vbdist.suites.vdistsuite.balancedness', 'stencil'),
            InvariantRegItem('vdist/naturality',
                             'vbdist.suites.vdistsuite.naturality', 'stencil'),
            InvariantRegItem('vdist/biproduct',
                             'vbdist.suites.vdistsuite.biproduct', 'exact'),
            InvariantRegItem('vdist/hom generator expansion',
                             'vbdist.suites.vdistsuite.homGeneratorExpansion', 'stencil'),

            InvariantRegItem('smoothing/scalar linearity',
                             'vbdist.suites.smoothingsuite.scalarLinearity', 'linear'),
            InvariantRegItem('smoothing/oracle equivalence',
                             'vbdist.suites.smoothingsuite.oracleEquivalence', 'oracle'),
            InvariantRegItem('smoothing/balanced move',
                             'vbdist.suites.smoothingsuite.balancedMove', 'stencil'),
            InvariantRegItem('smoothing/target module',
                             'vbdist.suites.smoothingsuite.targetModule', 'projector'),
            InvariantRegItem('smoothing/output smoothness',
                             'vbdist.suites.smoothingsuite.outputSmoothness', 'exact'),
            InvariantRegItem('smoothing/delta slice',
                             'vbdist.suites.smoothingsuite.deltaSlice', 'exact'),
            InvariantRegItem('smoothing/mollifier normalization',
                             'vbdist.suites.smoothingsuite.mollifierNormalization', 'normalization'),
            InvariantRegItem('smoothing/convergence ratios',
                             'vbdist.suites.smoothingsuite.convergenceRatios', 'ratio'),
            InvariantRegItem('smoothing/operator hom round trip',
                             'vbdist.suites.smoothingsuite.operatorHomRoundTrip', 'oracle'),
        ]
        return items  # type: ignore
