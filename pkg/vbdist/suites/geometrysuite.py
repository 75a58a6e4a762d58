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

""" Invariants of the grids: quadrature and finite differences.
"""
import logging

import numpy as np

from vbdist.geometry import deriv, makeCircle, product, quad
from vbdist.suites.context import CheckContext
from vbdist.testdata import randomSmoothValues

logger = logging.getLogger(__name__)


def quadLinearity(ctx: CheckContext) -> float:
    """ quad(αf + βg) − α·quad(f) − β·quad(g) on the circle and on the interval.
    """
    rng = ctx.generator('quadLinearity')
    deviation = 0.0
    for m in (ctx.circle(), ctx.interval()):
        for _ in range(ctx.batterySize):
            f = randomSmoothValues(m, rng, isComplex=ctx.isComplex)
            g = randomSmoothValues(m, rng, isComplex=ctx.isComplex)
            alpha, beta = rng.standard_normal(2)
            lhs = quad(m, alpha * f + beta * g)
            rhs = alpha * quad(m, f) + beta * quad(m, g)
            deviation = max(deviation, float(abs(lhs - rhs)))
    return deviation


def productQuadrature(ctx: CheckContext) -> float:
    """ quad over M × N of f(x)·g(y) equals quad_M(f)·quad_N(g).
    """
    rng = ctx.generator('productQuadrature')
    m, n = ctx.circle(), ctx.interval()
    mn = product(m, n)
    deviation = 0.0
    for _ in range(ctx.batterySize):
        f = randomSmoothValues(m, rng)
        g = randomSmoothValues(n, rng)
        lhs = quad(mn, np.outer(f, g).ravel())
        deviation = max(deviation, float(abs(lhs - quad(m, f) * quad(n, g))))
    return deviation


def derivOfConstants(ctx: CheckContext) -> float:
    """ Derivatives of order 1 and 2 of a constant function vanish exactly.

        Covers all nodes of the circle and the nodes of the interval outside its boundary layer.
    """
    deviation = 0.0
    for m in (ctx.circle(), ctx.interval()):
        for value in (3.0, 0.1):
            constant = np.full(m.nNodes, value)
            for node in range(m.nNodes):
                if m.inBoundaryLayer(node):
                    continue
                for order in (1, 2):
                    deviation = max(deviation, float(abs(deriv(m, constant, node, order))))
    return deviation


def derivConvergence(ctx: CheckContext) -> float:
    """ Halving the grid spacing divides the stencil error for sin by about 4.

        Returns the largest distance of the error ratio from 4, for both derivative orders.
    """
    n = ctx.resolution
    deviation = 0.0
    for order, exact in ((1, np.cos), (2, lambda x: -np.sin(x))):
        errors = []
        for m in (makeCircle(n), makeCircle(2 * n)):
            x = m.coordinate(0)
            values = np.sin(x)
            approx = np.array([deriv(m, values, node, order) for node in range(m.nNodes)])
            errors.append(float(np.max(np.abs(approx - exact(x)))))
        ratio = errors[0] / errors[1]
        logger.debug("derivConvergence: order {}, errors {}, ratio {:.4f}".format(order, errors, ratio))
        deviation = max(deviation, abs(ratio - 4.0))
    return deviation
