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

""" Scalar distributions as finite sums of atoms.

    An atom is either a Regular atom, the distribution given by a grid function f, which pairs with
    a test density w as quad(f·w), or a PointMass(node p, order k, weight c), which pairs as
    c·(−1)^k·D^k w(p).

    Distributions are kept in canonical form: at most one Regular atom, point masses merged by
    (node, order) and sorted, zero weights dropped.

    Multiplication by a smooth function g uses a discrete Leibniz rule. The point mass c·δ^(k)_p
    becomes Σ_j C(k,j)·(−1)^j·D^j g(p)·c·δ^(k−j)_p plus order 0 correction masses on the stencil
    nodes of p. The corrections absorb the difference between the discrete derivative of the
    product g·w and the discrete product rule, so that ⟨g·u, w⟩ = ⟨u, g·w⟩ holds to rounding at
    every resolution.
"""
from __future__ import annotations

import logging

from dataclasses import dataclass
from math import comb
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from vbdist.geometry import (DiscreteManifold, GridFunction, TestDensity, checkSameBase, deriv,
                             quad, stencil)
from vbdist.utils.cls import checkType
from vbdist.utils.defs import (MAX_ATOMS, MAX_DERIV_ORDER, BoundaryLayerError, ConsistencyError,
                               InvalidInputError)

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Regular:
    """ The distribution w ↦ quad(f·w) of a grid function f. """
    function: GridFunction


@dataclass(frozen=True)
class PointMass:
    """ The distribution w ↦ weight·(−1)^order·D^order w(node). """
    node: int
    order: int
    weight: complex


Atom = Union[Regular, PointMass]


class ScalarDistribution():
    """ An element of D′(M): a finite sum of atoms in canonical form.
    """
    __array_ufunc__ = None

    def __init__(self, base: DiscreteManifold, atoms: Iterable[Atom] = ()):
        """ Constructor

            :param base: the manifold the distribution lives on.
            :param atoms: Regular and PointMass atoms. They are brought in canonical form.
        """
        checkType(base, DiscreteManifold)
        self._base = base

        regularValues: Optional[np.ndarray] = None
        masses: Dict[Tuple[int, int], complex] = {}
        for atom in atoms:
            if isinstance(atom, Regular):
                checkSameBase(base, atom.function.base)
                if regularValues is None:
                    regularValues = np.array(atom.function.values)
                else:
                    regularValues = regularValues + atom.function.values
            elif isinstance(atom, PointMass):
                self._checkPointMass(atom)
                key = (int(atom.node), int(atom.order))
                masses[key] = masses.get(key, 0.0) + atom.weight
            else:
                raise TypeError("Unexpected atom: {!r}".format(atom))

        canonical: List[Atom] = []
        if regularValues is not None and np.any(regularValues != 0):
            canonical.append(Regular(GridFunction(base, regularValues)))
        for (node, order), weight in sorted(masses.items()):
            if weight != 0:
                canonical.append(PointMass(node, order, _simplify(weight)))

        if len(canonical) > MAX_ATOMS:
            raise ConsistencyError("Distribution has {} atoms, the maximum is {}"
                                   .format(len(canonical), MAX_ATOMS))
        self._atoms = tuple(canonical)


    def _checkPointMass(self, atom: PointMass) -> None:
        """ Validates node and order of a point mass.
        """
        if not 0 <= atom.node < self._base.nNodes:
            raise InvalidInputError("Point mass node {} out of range for {}"
                                    .format(atom.node, self._base.label))
        if not 0 <= atom.order <= MAX_DERIV_ORDER:
            raise InvalidInputError("Point mass order must be in 0..{}, got: {}"
                                    .format(MAX_DERIV_ORDER, atom.order))
        if atom.order >= 1:
            if self._base.dim != 1:
                raise InvalidInputError("Derivatives of point masses need a 1-D base, got: {}"
                                        .format(self._base.label))
            if self._base.inBoundaryLayer(atom.node):
                raise BoundaryLayerError("Point mass of order {} at node {} lies in the "
                                         "boundary layer of {}"
                                         .format(atom.order, atom.node, self._base.label))


    def __repr__(self) -> str:
        return "<ScalarDistribution on {}: {} atoms>".format(self._base.label, len(self._atoms))

    @property
    def base(self) -> DiscreteManifold:
        """ The manifold the distribution lives on. """
        return self._base

    @property
    def atoms(self) -> Tuple[Atom, ...]:
        """ The atoms in canonical order: the Regular atom (if any) first. """
        return self._atoms

    @property
    def regular(self) -> Optional[GridFunction]:
        """ The function of the Regular atom, or None. """
        if self._atoms and isinstance(self._atoms[0], Regular):
            return self._atoms[0].function
        return None

    @property
    def pointMasses(self) -> Tuple[PointMass, ...]:
        """ The point mass atoms. """
        return tuple(atom for atom in self._atoms if isinstance(atom, PointMass))

    @property
    def isZero(self) -> bool:
        """ True if the distribution has no atoms. """
        return not self._atoms


    def __add__(self, other: ScalarDistribution) -> ScalarDistribution:
        checkType(other, ScalarDistribution)
        checkSameBase(self._base, other.base)
        return ScalarDistribution(self._base, self._atoms + other.atoms)

    def __neg__(self) -> ScalarDistribution:
        return self * -1

    def __sub__(self, other: ScalarDistribution) -> ScalarDistribution:
        return self + (-other)

    def __mul__(self, scalar: complex) -> ScalarDistribution:
        """ Multiplication by a number, or by a function through modMul.
        """
        if isinstance(scalar, GridFunction):
            return modMul(scalar, self)
        atoms: List[Atom] = []
        for atom in self._atoms:
            if isinstance(atom, Regular):
                atoms.append(Regular(atom.function * scalar))
            else:
                atoms.append(PointMass(atom.node, atom.order, atom.weight * scalar))
        return ScalarDistribution(self._base, atoms)

    __rmul__ = __mul__



def _simplify(weight: Any) -> complex:
    """ Converts numpy scalars to Python numbers. Complex numbers stay complex. """
    weight = complex(weight) if np.iscomplexobj(weight) else float(weight)
    return weight


def zeroDistribution(m: DiscreteManifold) -> ScalarDistribution:
    """ The zero distribution. """
    return ScalarDistribution(m)


def delta(m: DiscreteManifold, node: int, order: int = 0, weight: complex = 1.0) -> ScalarDistribution:
    """ The distribution weight·δ^(order) at the node. """
    return ScalarDistribution(m, [PointMass(node, order, weight)])


def embedFunction(f: GridFunction) -> ScalarDistribution:
    """ Smooth functions as distributions: a single Regular atom. """
    checkType(f, GridFunction)
    return ScalarDistribution(f.base, [Regular(f)])


###########
# Pairing #
###########


def pair(u: ScalarDistribution, w: TestDensity) -> complex:
    """ The duality pairing ⟨u, w⟩.

        Regular f contributes quad(f·w); PointMass(p, k, c) contributes c·(−1)^k·D^k w(p).
    """
    checkType(u, ScalarDistribution)
    checkType(w, TestDensity)
    checkSameBase(u.base, w.base)
    total: Any = 0.0
    for atom in u.atoms:
        if isinstance(atom, Regular):
            total = total + quad(u.base, atom.function.values * w.values)
        else:
            total = total + atom.weight * (-1) ** atom.order * deriv(u.base, w, atom.node, atom.order)
    return total


def dualVector(u: ScalarDistribution) -> np.ndarray:
    """ The grid functional a of u, with ⟨u, w⟩ = Σ_x a(x)·w(x) for every test density w.
    """
    m = u.base
    dtype = np.result_type(np.float64, *[np.asarray(_atomWeight(a)) for a in u.atoms])
    result = np.zeros(m.nNodes, dtype=dtype)
    for atom in u.atoms:
        if isinstance(atom, Regular):
            result += m.weights * atom.function.values
        else:
            indices, coeffs = stencil(m, atom.node, atom.order)
            np.add.at(result, indices, atom.weight * (-1) ** atom.order * coeffs)
    return result


def _atomWeight(atom: Atom) -> Any:
    """ Returns a representative value for the dtype of the atom. """
    return atom.function.values if isinstance(atom, Regular) else atom.weight


##################
# Multiplication #
##################


def leibnizTerms(m: DiscreteManifold, node: int, order: int, weight: Any,
                 gValues: np.ndarray) -> List[Tuple[int, int, Any]]:
    """ Expands g·(weight·δ^(order)_node) into (node, order, weight) terms.

        The expansion pairs exactly like weight·δ^(order)_node paired with g·w. The values of g
        may have trailing dimensions, in which case the weights are arrays of those dimensions.
        This computes the expansion for a whole family of functions g at once.
    """
    gValues = np.asarray(gValues)
    if order == 0:
        return [(node, 0, weight * gValues[node])]

    terms: Dict[Tuple[int, int], Any] = {}

    def addTerm(key: Tuple[int, int], value: Any) -> None:
        terms[key] = terms[key] + value if key in terms else value

    sign = (-1) ** order
    derivatives = [deriv(m, gValues, node, j) for j in range(order + 1)]
    for j, dg in enumerate(derivatives):
        addTerm((node, order - j), (comb(order, j) * (-1) ** j * weight) * dg)

    # Order 0 corrections: the exact stencil of the product minus the pairing of the terms above.
    indices, coeffs = stencil(m, node, order)
    for q, a in zip(indices, coeffs):
        addTerm((int(q), 0), (weight * sign * a) * gValues[q])
    for j, dg in enumerate(derivatives):
        indices, coeffs = stencil(m, node, order - j)
        for q, a in zip(indices, coeffs):
            addTerm((int(q), 0), -(comb(order, j) * weight * sign * a) * dg)

    return [(key[0], key[1], value) for key, value in sorted(terms.items())]


def modMul(g: GridFunction, u: ScalarDistribution) -> ScalarDistribution:
    """ Multiplication of a distribution by a smooth function: ⟨g·u, w⟩ = ⟨u, g·w⟩.

        Regular(f) becomes Regular(g·f). Point masses are expanded with the discrete Leibniz rule.
    """
    checkType(g, GridFunction)
    checkType(u, ScalarDistribution)
    checkSameBase(g.base, u.base)
    atoms: List[Atom] = []
    for atom in u.atoms:
        if isinstance(atom, Regular):
            atoms.append(Regular(g * atom.function))
        else:
            for node, order, weight in leibnizTerms(u.base, atom.node, atom.order, atom.weight,
                                                     g.values):
                atoms.append(PointMass(node, order, weight))
    return ScalarDistribution(u.base, atoms)


############
# Equality #
############


def hatNodes(m: DiscreteManifold) -> np.ndarray:
    """ The nodes that may carry a hat test density: all nodes outside the boundary layers.
    """
    return np.flatnonzero(~m.boundaryMask())


def pairingDeviation(u: ScalarDistribution, v: ScalarDistribution,
                     batterySize: int = 20, seed: Optional[int] = None) -> float:
    """ Largest |⟨u, w⟩ − ⟨v, w⟩| over the test battery.

        The battery consists of the hat densities at all admissible nodes plus batterySize
        seeded random smooth test densities.
    """
    from vbdist.testdata import makeGenerator, randomTestDensity

    checkType(u, ScalarDistribution)
    checkType(v, ScalarDistribution)
    checkSameBase(u.base, v.base)

    difference = dualVector(u) - dualVector(v)
    hats = hatNodes(u.base)
    deviation = float(np.max(np.abs(difference[hats]))) if hats.size else 0.0

    rng = makeGenerator(seed)
    for _ in range(batterySize):
        w = randomTestDensity(u.base, rng)
        deviation = max(deviation, float(abs(pair(u, w) - pair(v, w))))
    return deviation


def equal(u: ScalarDistribution, v: ScalarDistribution,
          batterySize: int = 20, tol: float = 1e-10, seed: Optional[int] = None) -> bool:
    """ Finite resolution equality: True if the pairings differ by at most tol on the battery.
    """
    return pairingDeviation(u, v, batterySize=batterySize, seed=seed) <= tol


def sumDistributions(distributions: Sequence[ScalarDistribution],
                     base: DiscreteManifold) -> ScalarDistribution:
    """ Sum of a sequence of distributions on the base. The empty sum is zero.
    """
    atoms: List[Atom] = []
    for dist in distributions:
        checkSameBase(base, dist.base)
        atoms.extend(dist.atoms)
    return ScalarDistribution(base, atoms)
