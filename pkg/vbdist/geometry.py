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

""" Discretized manifolds with quadrature and finite differences.

    A DiscreteManifold is a uniform grid with one or two axes. Periodic axes carry angles in
    [0, 2π); non-periodic axes carry coordinates in [0, 1]. Quadrature is the trapezoid rule, which
    is spectrally accurate on periodic axes. Derivatives use central three point stencils.

    Product manifolds order their nodes lexicographically over the nodes of the factors, i.e. the
    node (i, j) of circle(n) x circle(m) has flat index i * m + j. This is the C-order of numpy.

    On non-periodic axes the first and last BOUNDARY_LAYERS nodes form the boundary layer. Test
    densities vanish there (compact support) and derivatives may not be taken there.
"""
from __future__ import annotations

import logging

from dataclasses import dataclass
from typing import Any, Callable, Optional, Sequence, Tuple, Union

import numpy as np

from vbdist.utils.cls import asNumberArray, checkArrayShape, checkType, readOnly
from vbdist.utils.defs import (BOUNDARY_LAYERS, MAX_DERIV_ORDER, MIN_NODES, BoundaryLayerError,
                               BundleMismatchError, InvalidInputError)

logger = logging.getLogger(__name__)

TWO_PI = 2.0 * np.pi


@dataclass(frozen=True)
class Axis:
    """ One uniform axis of a grid.
    """
    nNodes: int
    periodic: bool

    @property
    def spacing(self) -> float:
        """ Distance h between adjacent nodes. """
        if self.periodic:
            return TWO_PI / self.nNodes
        else:
            return 1.0 / (self.nNodes - 1)

    @property
    def coordinates(self) -> np.ndarray:
        """ Node coordinates along this axis. """
        if self.periodic:
            return np.arange(self.nNodes) * self.spacing
        else:
            return np.linspace(0.0, 1.0, self.nNodes)

    @property
    def weights(self) -> np.ndarray:
        """ Trapezoid weights along this axis. """
        weights = np.full(self.nNodes, self.spacing)
        if not self.periodic:
            weights[0] = weights[-1] = 0.5 * self.spacing
        return weights

    @property
    def label(self) -> str:
        """ Short description, e.g. 'circle(8)'. """
        return "{}({})".format('circle' if self.periodic else 'interval', self.nNodes)


class DiscreteManifold():
    """ A grid of nodes with quadrature weights. Stand-in for a smooth manifold.

        Immutable after construction. Use makeCircle, makeInterval and product to create one.
    """
    def __init__(self, axes: Sequence[Axis]):
        """ Constructor

            :param axes: one or two Axis objects.
        """
        axes = tuple(axes)
        if not 1 <= len(axes) <= 2:
            raise InvalidInputError("Only 1 or 2 dimensional manifolds are supported, got {}"
                                    .format(len(axes)))
        for axis in axes:
            checkType(axis, Axis)
            if axis.nNodes < MIN_NODES:
                raise InvalidInputError("At least {} nodes per axis are required, got: {}"
                                        .format(MIN_NODES, axis.nNodes))
        self._axes = axes

        grids = np.meshgrid(*[axis.coordinates for axis in axes], indexing='ij')
        self._nodes = readOnly(np.stack([grid.ravel() for grid in grids], axis=-1))

        weights = axes[0].weights
        for axis in axes[1:]:
            weights = np.outer(weights, axis.weights).ravel()
        self._weights = readOnly(weights)


    def __repr__(self) -> str:
        return "<DiscreteManifold: {}>".format(self.label)


    def __eq__(self, other: Any) -> bool:
        return isinstance(other, DiscreteManifold) and self._axes == other._axes


    def __hash__(self) -> int:
        return hash(self._axes)


    @property
    def axes(self) -> Tuple[Axis, ...]:
        """ The axes of the grid. """
        return self._axes

    @property
    def dim(self) -> int:
        """ Number of axes (1 or 2). """
        return len(self._axes)

    @property
    def shape(self) -> Tuple[int, ...]:
        """ Number of nodes per axis. """
        return tuple(axis.nNodes for axis in self._axes)

    @property
    def nNodes(self) -> int:
        """ Total number of nodes. """
        return len(self._weights)

    @property
    def nodes(self) -> np.ndarray:
        """ Node coordinates, array of shape (nNodes, dim). """
        return self._nodes

    @property
    def weights(self) -> np.ndarray:
        """ Quadrature weight per node. """
        return self._weights

    @property
    def periodic(self) -> Tuple[bool, ...]:
        """ Per axis flag. """
        return tuple(axis.periodic for axis in self._axes)

    @property
    def spacing(self) -> Tuple[float, ...]:
        """ Per axis node distance h. """
        return tuple(axis.spacing for axis in self._axes)

    @property
    def label(self) -> str:
        """ Short description, e.g. 'circle(8) x interval(11)'. """
        return " x ".join(axis.label for axis in self._axes)


    def coordinate(self, axis: int = 0) -> np.ndarray:
        """ Returns the coordinate along the axis for every node.
        """
        return self._nodes[:, axis]


    def multiIndex(self, node: int) -> Tuple[int, ...]:
        """ Returns the per-axis indices of a flat node index.
        """
        if not 0 <= node < self.nNodes:
            raise InvalidInputError("Node {} out of range [0, {})".format(node, self.nNodes))
        return tuple(int(i) for i in np.unravel_index(node, self.shape))


    def flatIndex(self, multiIndex: Sequence[int]) -> int:
        """ Returns the flat node index of per-axis indices. Periodic indices wrap around.
        """
        wrapped = []
        for idx, axis in zip(multiIndex, self._axes):
            if axis.periodic:
                idx = idx % axis.nNodes
            elif not 0 <= idx < axis.nNodes:
                raise InvalidInputError("Index {} out of range on axis {}".format(idx, axis.label))
            wrapped.append(idx)
        return int(np.ravel_multi_index(tuple(wrapped), self.shape))


    def inBoundaryLayer(self, node: int, axis: Optional[int] = None) -> bool:
        """ Returns True if the node lies in the boundary layer of a non-periodic axis.

            If axis is given, only that axis is considered.
        """
        multiIndex = self.multiIndex(node)
        axisNumbers = range(self.dim) if axis is None else [axis]
        for nr in axisNumbers:
            ax = self._axes[nr]
            idx = multiIndex[nr]
            if not ax.periodic and (idx < BOUNDARY_LAYERS or idx >= ax.nNodes - BOUNDARY_LAYERS):
                return True
        return False


    def boundaryMask(self) -> np.ndarray:
        """ Boolean array that is True for the nodes in a boundary layer.
        """
        masks = []
        for ax in self._axes:
            mask = np.zeros(ax.nNodes, dtype=bool)
            if not ax.periodic:
                mask[:BOUNDARY_LAYERS] = True
                mask[-BOUNDARY_LAYERS:] = True
            masks.append(mask)
        grids = np.meshgrid(*masks, indexing='ij')
        return np.logical_or.reduce([grid.ravel() for grid in grids])



def makeCircle(n: int) -> DiscreteManifold:
    """ Periodic 1-D grid on [0, 2π) with n nodes and weights 2π/n.
    """
    return DiscreteManifold([Axis(int(n), periodic=True)])


def makeInterval(n: int) -> DiscreteManifold:
    """ Non-periodic 1-D grid on [0, 1] with n nodes and trapezoid weights.
    """
    return DiscreteManifold([Axis(int(n), periodic=False)])


def product(m1: DiscreteManifold, m2: DiscreteManifold) -> DiscreteManifold:
    """ Product manifold with lexicographic node order and multiplied weights.
    """
    checkType(m1, DiscreteManifold)
    checkType(m2, DiscreteManifold)
    return DiscreteManifold(m1.axes + m2.axes)


def checkSameBase(m1: DiscreteManifold, m2: DiscreteManifold) -> None:
    """ Raises a BundleMismatchError if the manifolds differ.
    """
    if m1 != m2:
        raise BundleMismatchError("Base mismatch: {} != {}".format(m1.label, m2.label))


#################
# Grid function #
#################


class GridFunction():
    """ One real or complex value per node. Houses smooth functions on the manifold.
    """
    def __init__(self, base: DiscreteManifold, values: Any):
        checkType(base, DiscreteManifold)
        values = asNumberArray(values)
        if values.ndim == 0:
            values = np.full(base.nNodes, values)
        checkArrayShape(values, (base.nNodes, ), name='values')
        self._base = base
        self._values = readOnly(values.copy())


    @classmethod
    def fromFunction(cls, base: DiscreteManifold, func: Callable[..., Any]) -> GridFunction:
        """ Evaluates func on the node coordinates, one coordinate array per axis.
        """
        return cls(base, func(*[base.coordinate(axis) for axis in range(base.dim)]))


    @classmethod
    def constant(cls, base: DiscreteManifold, value: complex = 1.0) -> GridFunction:
        """ The constant function. """
        return cls(base, np.full(base.nNodes, value))


    def __repr__(self) -> str:
        return "<GridFunction on {}>".format(self._base.label)

    @property
    def base(self) -> DiscreteManifold:
        """ The manifold the function lives on. """
        return self._base

    @property
    def values(self) -> np.ndarray:
        """ Read-only array of node values. """
        return self._values


    # Let numpy scalars and arrays defer to the reflected operators below.
    __array_ufunc__ = None

    def _otherValues(self, other: Any) -> Any:
        """ Returns the values of other for use in arithmetic, or None for foreign types.
        """
        if isinstance(other, GridFunction):
            checkSameBase(self._base, other.base)
            return other.values
        if isinstance(other, (int, float, complex, np.number, np.ndarray)):
            return other
        return None

    def __add__(self, other: Any) -> GridFunction:
        values = self._otherValues(other)
        if values is None:
            return NotImplemented
        return GridFunction(self._base, self._values + values)

    __radd__ = __add__

    def __sub__(self, other: Any) -> GridFunction:
        values = self._otherValues(other)
        if values is None:
            return NotImplemented
        return GridFunction(self._base, self._values - values)

    def __rsub__(self, other: Any) -> GridFunction:
        return (-self) + other

    def __mul__(self, other: Any) -> GridFunction:
        values = self._otherValues(other)
        if values is None:
            return NotImplemented
        return GridFunction(self._base, self._values * values)

    __rmul__ = __mul__

    def __neg__(self) -> GridFunction:
        return GridFunction(self._base, -self._values)



class TestDensity():
    """ Density coefficient per node (against the canonical volume weight).

        Houses compactly supported densities: on non-periodic axes the values must vanish on the
        boundary layers.
    """
    __test__ = False  # Not a test case, despite the name.
    __array_ufunc__ = None

    def __init__(self, base: DiscreteManifold, values: Any):
        checkType(base, DiscreteManifold)
        values = asNumberArray(values)
        checkArrayShape(values, (base.nNodes, ), name='values')
        if np.any(values[base.boundaryMask()] != 0):
            raise InvalidInputError("Test density must vanish on the boundary layers")
        self._base = base
        self._values = readOnly(values.copy())


    @classmethod
    def compactified(cls, func: Union[GridFunction, TestDensity]) -> TestDensity:
        """ Creates a test density from a function by zeroing its boundary layers.
        """
        values = np.array(func.values)
        values[func.base.boundaryMask()] = 0
        return cls(func.base, values)


    def __repr__(self) -> str:
        return "<TestDensity on {}>".format(self._base.label)

    @property
    def base(self) -> DiscreteManifold:
        """ The manifold the density lives on. """
        return self._base

    @property
    def values(self) -> np.ndarray:
        """ Read-only array of density coefficients. """
        return self._values


    def __mul__(self, other: Any) -> TestDensity:
        """ Multiplication by a smooth function or scalar keeps compact support.
        """
        if isinstance(other, GridFunction):
            checkSameBase(self._base, other.base)
            other = other.values
        return TestDensity(self._base, self._values * other)

    __rmul__ = __mul__

    def __add__(self, other: TestDensity) -> TestDensity:
        checkType(other, TestDensity)
        checkSameBase(self._base, other.base)
        return TestDensity(self._base, self._values + other.values)


##############
# Quadrature #
##############

FunctionLike = Union[GridFunction, TestDensity, np.ndarray]


def _valuesOf(m: DiscreteManifold, f: FunctionLike) -> np.ndarray:
    """ Returns the node values of f, checking the base if f carries one.
    """
    if isinstance(f, (GridFunction, TestDensity)):
        checkSameBase(m, f.base)
        return f.values
    values = np.asarray(f)
    if values.shape[0] != m.nNodes:
        raise InvalidInputError("Expected {} node values, got shape {}"
                                .format(m.nNodes, values.shape))
    return values


def quad(m: DiscreteManifold, f: FunctionLike) -> Any:
    """ Trapezoid quadrature: Σ_x weight(x)·f(x).

        Arrays with trailing dimensions are integrated along the first (node) axis.
    """
    return np.tensordot(m.weights, _valuesOf(m, f), axes=1)


###########
# Stencil #
###########

_STENCILS = {
    0: (np.array([0]), np.array([1.0]), 0),
    1: (np.array([-1, 1]), np.array([-0.5, 0.5]), 1),
    2: (np.array([-1, 0, 1]), np.array([1.0, -2.0, 1.0]), 2),
}


def stencil(m: DiscreteManifold, node: int, order: int, axis: int = 0) -> Tuple[np.ndarray, np.ndarray]:
    """ Returns (node indices, coefficients) of the central difference of the given order.

        The derivative at the node is Σ coefficients * values[indices]. Periodic axes wrap around.

        Raises BoundaryLayerError for order ≥ 1 inside the boundary layer of a non-periodic axis.
    """
    if order not in _STENCILS:
        raise InvalidInputError("Derivative order must be in 0..{}, got: {}"
                                .format(MAX_DERIV_ORDER, order))
    if not 0 <= axis < m.dim:
        raise InvalidInputError("Axis {} out of range for {}".format(axis, m.label))

    offsets, coeffs, power = _STENCILS[order]
    if order >= 1 and m.inBoundaryLayer(node, axis=axis):
        raise BoundaryLayerError("Derivative of order {} at node {} lies in the boundary layer of {}"
                                 .format(order, node, m.label))

    base = list(m.multiIndex(node))
    indices = []
    for offset in offsets:
        idx = list(base)
        idx[axis] += int(offset)
        indices.append(m.flatIndex(idx))

    return np.array(indices), coeffs / m.spacing[axis] ** power


def deriv(m: DiscreteManifold, f: FunctionLike, node: int, order: int, axis: int = 0) -> Any:
    """ Central finite difference of f at the node, O(h²) accurate.

        Order 0 returns the value itself. Arrays with trailing dimensions are differentiated along
        the first (node) axis.

        The differences are taken before scaling by the spacing, so constants have derivative 0
        exactly.
    """
    values = _valuesOf(m, f)
    indices, _ = stencil(m, node, order, axis=axis)
    h = m.spacing[axis]
    if order == 0:
        return values[indices[0]]
    elif order == 1:
        return (values[indices[1]] - values[indices[0]]) * (0.5 / h)
    else:
        center = values[indices[1]]
        return ((values[indices[2]] - center) + (values[indices[0]] - center)) / h ** 2


##############
# Smoothness #
##############

def smoothnessRatio(m: DiscreteManifold, values: np.ndarray) -> float:
    """ Largest |v(x_{k+1}) − v(x_k)| / h over adjacent nodes along all axes.

        The values array has the nodes along its first axis and may have trailing dimensions.
        Periodic axes include the wrap-around pair.
    """
    values = np.asarray(values)
    if values.size == 0:
        return 0.0
    grid = values.reshape(m.shape + values.shape[1:])
    ratio = 0.0
    for nr, axis in enumerate(m.axes):
        if axis.periodic:
            diffs = np.roll(grid, -1, axis=nr) - grid
        else:
            diffs = np.diff(grid, axis=nr)
        ratio = max(ratio, float(np.max(np.abs(diffs))) / axis.spacing)
    return ratio


def isSmooth(m: DiscreteManifold, values: np.ndarray, constant: float) -> bool:
    """ Returns True if adjacent node values differ by at most constant·h.
    """
    return smoothnessRatio(m, values) <= constant
