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

""" Distributional sections of a vector bundle E in three interchangeable representations.

    TensorRep
        A finite sum Σ_j s_j ⊗ v_j of smooth sections with distributional coefficients.
    CoordRep
        One scalar distribution u_i per ambient dimension: the coefficient of the frame
        generator e_i. Canonical coordinates satisfy u_i = Σ_k P_ik·u_k.
    HomRep
        A C∞(M)-linear map ℓ from sections of E* to distributions, stored by its coordinates and
        evaluated as ℓ(t) = Σ_i t_i·u_i with t_i the ambient components of t.

    The conversions nuTensorToHom, homToCoord and coordToTensor go around the triangle. The
    canonical coordinates (the values of ℓ on the dual generators) are the normal form in which
    representations are compared.
"""
from __future__ import annotations

import logging

from typing import Any, Callable, List, Optional, Sequence, Tuple, Union

import numpy as np

from vbdist.bundles import (BundleMorphism, ProjectorBundle, checkIsDualPair, checkSameBundle,
                            dual, dualGenerators, frameGenerators, inclusion, projection,
                            summandInclusion)
from vbdist.distributions import (ScalarDistribution, embedFunction, hatNodes, modMul, pair,
                                  pairingDeviation, sumDistributions, dualVector)
from vbdist.geometry import GridFunction, TestDensity, checkSameBase
from vbdist.sections import Section, contract, pushforward
from vbdist.sections import modMul as modMulSection
from vbdist.utils.cls import checkType
from vbdist.utils.defs import MAX_TERMS, BundleMismatchError, ConsistencyError

logger = logging.getLogger(__name__)

Term = Tuple[Section, ScalarDistribution]


class TensorRep():
    """ Σ_j s_j ⊗ v_j: sections of E with distributional coefficients.
    """
    def __init__(self, bundle: ProjectorBundle, terms: Sequence[Term] = ()):
        checkType(bundle, ProjectorBundle)
        terms = tuple(terms)
        if len(terms) > MAX_TERMS:
            raise ConsistencyError("TensorRep has {} terms, the maximum is {}"
                                   .format(len(terms), MAX_TERMS))
        for section, dist in terms:
            checkType(section, Section)
            checkType(dist, ScalarDistribution)
            checkSameBundle(bundle, section.bundle)
            checkSameBase(bundle.base, dist.base)
        self._bundle = bundle
        self._terms = terms

    def __repr__(self) -> str:
        return "<TensorRep of {}: {} terms>".format(self._bundle.label, len(self._terms))

    @property
    def bundle(self) -> ProjectorBundle:
        """ The bundle E. """
        return self._bundle

    @property
    def terms(self) -> Tuple[Term, ...]:
        """ The (section, distribution) pairs. """
        return self._terms



class CoordRep():
    """ Coordinates u_i: the distributional coefficients of the frame generators e_i.
    """
    def __init__(self, bundle: ProjectorBundle, coords: Sequence[ScalarDistribution]):
        checkType(bundle, ProjectorBundle)
        coords = tuple(coords)
        if len(coords) != bundle.ambientDim:
            raise BundleMismatchError("Expected {} coordinates, got {}"
                                      .format(bundle.ambientDim, len(coords)))
        for coord in coords:
            checkType(coord, ScalarDistribution)
            checkSameBase(bundle.base, coord.base)
        self._bundle = bundle
        self._coords = coords

    def __repr__(self) -> str:
        return "<{} of {}>".format(type(self).__name__, self._bundle.label)

    @property
    def bundle(self) -> ProjectorBundle:
        """ The bundle E. """
        return self._bundle

    @property
    def coords(self) -> Tuple[ScalarDistribution, ...]:
        """ One scalar distribution per ambient dimension. """
        return self._coords



class HomRep(CoordRep):
    """ The C∞(M)-linear map ℓ: Γ(M, E*) → D′(M), t ↦ Σ_i t_i·u_i.
    """
    @classmethod
    def fromFunction(cls, bundle: ProjectorBundle,
                     func: Callable[[Section], ScalarDistribution]) -> HomRep:
        """ Creates the HomRep of a C∞(M)-linear callable by evaluating it on the dual generators.

            The result agrees with func on all sections of E* if func is C∞(M)-linear.
        """
        return cls(bundle, [func(gen) for gen in dualGenerators(bundle)])


    def evaluate(self, t: Section) -> ScalarDistribution:
        """ Returns ℓ(t) = Σ_i mod_mul(t_i, u_i) for a section t of E*.
        """
        checkType(t, Section)
        checkIsDualPair(self.bundle, t.bundle)
        return sumDistributions([modMul(t.component(i), coord)
                                 for i, coord in enumerate(self.coords)], self.bundle.base)


AnyRep = Union[TensorRep, CoordRep, HomRep]


###############
# Conversions #
###############


def _matrixAction(matrices: np.ndarray, coords: Sequence[ScalarDistribution],
                  base: Any) -> List[ScalarDistribution]:
    """ Applies a matrix of functions to a vector of distributions: u′_i = Σ_k mod_mul(A_ik, u_k).
    """
    result = []
    for i in range(matrices.shape[1]):
        parts = [modMul(GridFunction(base, matrices[:, i, k]), coord)
                 for k, coord in enumerate(coords) if not coord.isZero]
        result.append(sumDistributions(parts, base))
    return result


def nuTensorToHom(u: TensorRep) -> HomRep:
    """ The map ν_E: Γ(M,E) ⊗ D′(M) → L(Γ(M,E*), D′(M)).

        ν(Σ_j s_j ⊗ v_j)(t) = Σ_j mod_mul(contract(s_j, t), v_j). Stored by the coordinates
        Σ_j mod_mul((s_j)_i, v_j).
    """
    checkType(u, TensorRep)
    base = u.bundle.base
    coords = []
    for i in range(u.bundle.ambientDim):
        parts = [modMul(section.component(i), dist) for section, dist in u.terms]
        coords.append(sumDistributions(parts, base))
    logger.debug("nuTensorToHom: {} terms -> atoms per coordinate {}"
                 .format(len(u.terms), [len(c.atoms) for c in coords]))
    return HomRep(u.bundle, coords)


def canonicalizeCoords(c: CoordRep) -> CoordRep:
    """ Applies the projector to the coordinate vector: u′_i = Σ_k mod_mul(P_ik, u_k).

        Idempotent up to pairing equality. Coordinates in the directions of the complement are
        mapped to zero.
    """
    checkType(c, CoordRep)
    return CoordRep(c.bundle, _matrixAction(c.bundle.proj, c.coords, c.bundle.base))


def homToCoord(l: HomRep) -> CoordRep:
    """ The coordinates of ℓ: its values on the dual generators, canonicalized.

        For the trivial line bundle this is ℓ ↦ ℓ(1).
    """
    checkType(l, HomRep)
    coords = [l.evaluate(gen) for gen in dualGenerators(l.bundle)]
    return canonicalizeCoords(CoordRep(l.bundle, coords))


def coordToTensor(c: CoordRep) -> TensorRep:
    """ The reconstruction u = Σ_i e_i ⊗ u_i, skipping empty coordinates.
    """
    checkType(c, CoordRep)
    generators = frameGenerators(c.bundle)
    return TensorRep(c.bundle, [(gen, coord) for gen, coord in zip(generators, c.coords)
                                if not coord.isZero])


def toCoords(u: AnyRep) -> CoordRep:
    """ Canonical coordinates of any representation.
    """
    if isinstance(u, TensorRep):
        return homToCoord(nuTensorToHom(u))
    elif isinstance(u, HomRep):
        return homToCoord(u)
    else:
        checkType(u, CoordRep)
        return canonicalizeCoords(u)


def toTensor(u: AnyRep) -> TensorRep:
    """ Any representation as a TensorRep. Coordinates are used as they are.
    """
    if isinstance(u, TensorRep):
        return u
    return coordToTensor(u)


def reduceViaTrivialization(l: HomRep) -> TensorRep:
    """ Inverts ν_E by going through the trivial ambient bundle: T(π_E) ∘ ν⁻¹ ∘ T′(ι_E).

        T′(ι_E) restricts ℓ to a map on the ambient trivial bundle. On a trivial bundle ν is
        inverted by taking values on the standard basis. T(π_E) projects the sections back into E.
    """
    checkType(l, HomRep)
    onAmbient = pushforwardVdist(inclusion(l.bundle), l)
    trivialTensor = coordToTensor(homToCoord(onAmbient))
    return pushforwardVdist(projection(l.bundle), trivialTensor)


###########################
# Pairing and the module  #
###########################


def pairVdist(u: AnyRep, t: Section, w: TestDensity) -> Any:
    """ Pairs u with the compactly supported density valued section t ⊗ w of E* ⊗ Vol(M).

        Returns Σ_j pair(v_j, contract(s_j, t)·w).
    """
    checkType(t, Section)
    checkType(w, TestDensity)
    tensorRep = toTensor(u)
    checkIsDualPair(tensorRep.bundle, t.bundle)
    total: Any = 0.0
    for section, dist in tensorRep.terms:
        total = total + pair(dist, w * contract(section, t))
    return total


def modMulVdist(f: GridFunction, u: AnyRep, scaleSections: bool = False) -> AnyRep:
    """ The C∞(M)-module action on distributional sections, in the representation of u.

        A TensorRep gets its distributions multiplied, or its sections if scaleSections is True.
        Both give pairing equal results.
    """
    checkType(f, GridFunction)
    if isinstance(u, TensorRep):
        if scaleSections:
            terms = [(modMulSection(f, section), dist) for section, dist in u.terms]
        else:
            terms = [(section, modMul(f, dist)) for section, dist in u.terms]
        return TensorRep(u.bundle, terms)
    checkType(u, CoordRep)
    return type(u)(u.bundle, [modMul(f, coord) for coord in u.coords])


def addVdist(u: AnyRep, v: AnyRep) -> AnyRep:
    """ Sum of two distributional sections of the same bundle.

        Two TensorReps concatenate their terms; otherwise coordinates are added.
    """
    checkSameBundle(u.bundle, v.bundle)
    if isinstance(u, TensorRep) and isinstance(v, TensorRep):
        return TensorRep(u.bundle, u.terms + v.terms)
    uc = u if isinstance(u, CoordRep) else nuTensorToHom(u)
    vc = v if isinstance(v, CoordRep) else nuTensorToHom(v)
    resultType = HomRep if isinstance(uc, HomRep) and isinstance(vc, HomRep) else CoordRep
    return resultType(u.bundle, [a + b for a, b in zip(uc.coords, vc.coords)])


def scaleVdist(u: AnyRep, c: complex) -> AnyRep:
    """ Multiplies a distributional section by a number. """
    if isinstance(u, TensorRep):
        return TensorRep(u.bundle, [(section, dist * c) for section, dist in u.terms])
    checkType(u, CoordRep)
    return type(u)(u.bundle, [coord * c for coord in u.coords])


def embedSection(s: Section) -> TensorRep:
    """ A smooth section as a distributional section: s ⊗ 1. """
    checkType(s, Section)
    return TensorRep(s.bundle, [(s, embedFunction(GridFunction.constant(s.base)))])


######################
# Functoriality      #
######################


def pushforwardVdist(mu: BundleMorphism, u: AnyRep) -> AnyRep:
    """ The pushforward T(μ) of a TensorRep or T′(μ) of a HomRep, in the representation of u.

        TensorRep: (s_j, v_j) ↦ (μ_* s_j, v_j).
        HomRep and CoordRep: ℓ ↦ ℓ ∘ μ^*, i.e. the coordinates become u′_i = Σ_k A_ik·u_k.
    """
    checkType(mu, BundleMorphism)
    checkSameBundle(mu.source, u.bundle)
    if isinstance(u, TensorRep):
        return TensorRep(mu.target, [(pushforward(mu, section), dist) for section, dist in u.terms])
    checkType(u, CoordRep)
    return type(u)(mu.target, _matrixAction(mu.maps, u.coords, mu.source.base))


def directSum(u: AnyRep, v: AnyRep) -> AnyRep:
    """ The distributional section (u, v) of E ⊕ F.
    """
    incl0 = summandInclusion(u.bundle, v.bundle, 0)
    incl1 = summandInclusion(u.bundle, v.bundle, 1)
    return addVdist(pushforwardVdist(incl0, u), pushforwardVdist(incl1, v))


############
# Equality #
############


def vdistDeviation(u: AnyRep, v: AnyRep, batterySize: int = 20, seed: Optional[int] = None,
                   isComplex: bool = False) -> float:
    """ Largest |⟨u, t ⊗ w⟩ − ⟨v, t ⊗ w⟩| over a battery of random dual sections t and
        random test densities w.
    """
    from vbdist.testdata import makeGenerator, randomSection, randomTestDensity

    checkSameBundle(u.bundle, v.bundle)
    dualBundle = dual(u.bundle)
    rng = makeGenerator(seed, label='vdistDeviation')
    deviation = 0.0
    for _ in range(batterySize):
        t = randomSection(dualBundle, rng, isComplex=isComplex)
        w = randomTestDensity(u.bundle.base, rng, isComplex=isComplex)
        deviation = max(deviation, float(abs(pairVdist(u, t, w) - pairVdist(v, t, w))))
    return deviation


def vdistEqual(u: AnyRep, v: AnyRep, batterySize: int = 20, tol: float = 1e-8,
               seed: Optional[int] = None) -> bool:
    """ Finite resolution equality of two distributional sections in any representation.
    """
    return vdistDeviation(u, v, batterySize=batterySize, seed=seed) <= tol


def coordDeviation(c1: CoordRep, c2: CoordRep, batterySize: int = 20,
                   seed: Optional[int] = None) -> float:
    """ Largest pairing deviation between corresponding coordinates, after canonicalization.
    """
    checkSameBundle(c1.bundle, c2.bundle)
    deviation = 0.0
    for a, b in zip(canonicalizeCoords(c1).coords, canonicalizeCoords(c2).coords):
        deviation = max(deviation, pairingDeviation(a, b, batterySize=batterySize, seed=seed))
    return deviation


def naturalityDeviation(mu: BundleMorphism, u: TensorRep, batterySize: int = 20,
                        seed: Optional[int] = None) -> float:
    """ Deviation of the square T′(μ) ∘ ν_E = ν_E′ ∘ T(μ) on u.

        Both paths are evaluated on the dual generators of the target and compared with the
        distribution battery.
    """
    checkType(u, TensorRep)
    viaHom = pushforwardVdist(mu, nuTensorToHom(u))
    viaTensor = nuTensorToHom(pushforwardVdist(mu, u))
    deviation = 0.0
    for gen in dualGenerators(mu.target):
        deviation = max(deviation, pairingDeviation(viaHom.evaluate(gen), viaTensor.evaluate(gen),
                                                    batterySize=batterySize, seed=seed))
    return deviation


def naturalityCheck(mu: BundleMorphism, u: TensorRep, batterySize: int = 20, tol: float = 1e-8,
                    seed: Optional[int] = None) -> bool:
    """ True if the naturality square of ν commutes on u within tol.
    """
    return naturalityDeviation(mu, u, batterySize=batterySize, seed=seed) <= tol


def coordPairings(c: CoordRep) -> np.ndarray:
    """ Pairings of every coordinate with the hat density of every admissible node.

        Returns an array of shape (nHatNodes, ambientDim).
    """
    nodes = hatNodes(c.bundle.base)
    if not c.coords:
        return np.zeros((len(nodes), 0))
    return np.stack([dualVector(coord)[nodes] for coord in c.coords], axis=-1)


def asSmoothSection(u: AnyRep) -> Optional[Section]:
    """ The smooth section Σ_j f_j·s_j if every distribution of u is regular, else None.

        Used as the reference of a convergence study.
    """
    tensorRep = toTensor(u)
    total = Section.zero(tensorRep.bundle)
    for section, dist in tensorRep.terms:
        if dist.pointMasses:
            return None
        if dist.regular is not None:
            total = total + modMulSection(dist.regular, section)
    return total
