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

""" Scene files: JSON descriptions of a manifold, a bundle and a distributional section.

    A scene looks like this::

        {
            "config": {"seed": 7, "tolerances": {"stencil": 1e-7}},
            "manifold": {"kind": "circle", "n": 128},
            "bundle": {"kind": "mobius"},
            "vdist": {
                "terms": [
                    {"section": {"kind": "frame", "index": 0},
                     "distribution": {"atoms": [{"kind": "delta", "x": 1.0}]}},
                    {"section": {"kind": "random"},
                     "distribution": {"atoms": [{"kind": "regular", "f": {"kind": "cos"}}]}}
                ]
            }
        }

    Manifolds: circle and interval (with "n", default the configured resolution) and product
    (with a list of "factors").

    Bundles: trivial (with "rank"), mobius, sum and tensor (with "left" and "right"), external
    (with "left" and "right", each of which may have its own "manifold"), complement and dual
    (with "of").

    Functions: a number, {"kind": "constant", "value": ...}, {"kind": "sin" | "cos",
    "frequency": ..., "axis": ..., "amplitude": ...}, {"kind": "random"}, or a list of
    functions that are added.

    Weights and constant values are a number or a [real, imag] pair.
"""
from __future__ import annotations

import copy
import json
import logging

from dataclasses import dataclass
from typing import Any, Dict, List

import numpy as np

from vbdist.bundles import (ProjectorBundle, complement, dual, externalTensor, frameGenerators,
                            mobius, tensor, trivialBundle, whitneySum)
from vbdist.config.runconfig import RunConfig
from vbdist.distributions import ScalarDistribution, delta, embedFunction, sumDistributions
from vbdist.geometry import DiscreteManifold, GridFunction, makeCircle, makeInterval, product
from vbdist.sections import Section
from vbdist.sections import modMul as modMulSection
from vbdist.testdata import makeGenerator, randomFunction, randomSection
from vbdist.utils.cls import isAMapping, isASequence
from vbdist.utils.defs import InvalidInputError, VbDistError
from vbdist.vdist import TensorRep

logger = logging.getLogger(__name__)

# Used by the coords command if no scene file is given.
DEFAULT_COORDS_SCENE: Dict[str, Any] = {
    "manifold": {"kind": "circle"},
    "bundle": {"kind": "mobius"},
    "vdist": {
        "terms": [
            {"section": {"kind": "frame", "index": 0},
             "distribution": {"atoms": [{"kind": "delta", "x": 1.0}]}},
            {"section": {"kind": "frame", "index": 1, "f": {"kind": "sin"}},
             "distribution": {"atoms": [{"kind": "regular", "f": 1.0}]}},
        ]
    }
}

# Used by the regularize command if no scene file is given. A smooth section, so that the
# convergence study has a reference.
DEFAULT_REGULARIZE_SCENE: Dict[str, Any] = {
    "manifold": {"kind": "circle", "n": 256},
    "bundle": {"kind": "trivial", "rank": 1},
    "vdist": {
        "terms": [
            {"section": {"kind": "frame", "index": 0, "f": {"kind": "sin"}},
             "distribution": {"atoms": [{"kind": "regular", "f": 1.0}]}},
        ]
    }
}


@dataclass(frozen=True)
class Scene:
    """ A distributional section together with its bundle and base manifold. """
    manifold: DiscreteManifold
    bundle: ProjectorBundle
    vdist: TensorRep



def loadSceneFile(fileName: str) -> Dict[str, Any]:
    """ Reads a scene file. Raises InvalidInputError if the file is not valid JSON.
    """
    logger.info("Reading scene: {}".format(fileName))
    try:
        with open(fileName, 'r', encoding='utf-8') as stream:
            spec = json.load(stream)
    except json.JSONDecodeError as ex:
        raise InvalidInputError("Malformed scene file {!r}: {}".format(fileName, ex)) from ex
    except OSError as ex:
        raise InvalidInputError("Unable to read scene file {!r}: {}".format(fileName, ex)) from ex

    if not isAMapping(spec):
        raise InvalidInputError("Scene file {!r} must contain a JSON object".format(fileName))
    return spec


def applySceneConfig(spec: Dict[str, Any], config: RunConfig) -> None:
    """ Applies the 'config' entry of the scene, if any, to the run configuration.
    """
    if 'config' in spec:
        config.setValuesFromDict(copy.deepcopy(_mapping(spec['config'], 'config')))


def buildScene(spec: Dict[str, Any], config: RunConfig) -> Scene:
    """ Builds the scene. The 'config' entry is ignored here, see applySceneConfig.

        Raises InvalidInputError for malformed specs.
    """
    try:
        builder = _SceneBuilder(config)
        manifold = builder.manifold(spec.get('manifold', {"kind": "circle"}))
        bundle = builder.bundle(_mapping(spec.get('bundle', {"kind": "trivial"}), 'bundle'),
                                manifold)
        vdist = builder.vdist(_mapping(spec.get('vdist', {}), 'vdist'), bundle)
    except VbDistError:
        raise
    except (KeyError, TypeError, IndexError, ValueError) as ex:
        raise InvalidInputError("Malformed scene: {}: {}".format(type(ex).__name__, ex)) from ex

    logger.debug("Scene: {} on {}, {} terms".format(bundle.label, bundle.base.label,
                                                   len(vdist.terms)))
    return Scene(bundle.base, bundle, vdist)


def _mapping(value: Any, what: str) -> Dict[str, Any]:
    if not isAMapping(value):
        raise InvalidInputError("Scene entry {!r} must be an object, got: {!r}".format(what, value))
    return value


def _kind(spec: Dict[str, Any], what: str) -> str:
    kind = _mapping(spec, what).get('kind')
    if kind is None:
        raise InvalidInputError("Scene entry {!r} has no 'kind': {!r}".format(what, spec))
    return str(kind).lower()


def parseWeight(value: Any) -> complex:
    """ A number, or a [real, imag] pair. """
    if isASequence(value):
        if len(value) != 2:
            raise InvalidInputError("Complex weights must be [real, imag] pairs, got: {!r}"
                                    .format(value))
        return complex(float(value[0]), float(value[1]))
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise InvalidInputError("Weight must be a number, got: {!r}".format(value))
    return float(value)



class _SceneBuilder():
    """ Builds the objects of a scene. Random entries use a generator derived from the seed.
    """
    def __init__(self, config: RunConfig):
        self._config = config
        self._rng = makeGenerator(config.seed, label='scene')


    def manifold(self, spec: Dict[str, Any]) -> DiscreteManifold:
        kind = _kind(spec, 'manifold')
        if kind in ('circle', 'interval'):
            nNodes = spec.get('n', self._config.resolution)
            if isinstance(nNodes, bool) or not isinstance(nNodes, int):
                raise InvalidInputError("Node count must be an integer, got: {!r}".format(nNodes))
            return makeCircle(nNodes) if kind == 'circle' else makeInterval(nNodes)
        elif kind == 'product':
            factors = [self.manifold(factor) for factor in spec['factors']]
            if not factors:
                raise InvalidInputError("A product manifold needs at least one factor")
            result = factors[0]
            for factor in factors[1:]:
                result = product(result, factor)
            return result
        else:
            raise InvalidInputError("Unknown manifold kind: {!r}".format(kind))


    def bundle(self, spec: Dict[str, Any], m: DiscreteManifold) -> ProjectorBundle:
        kind = _kind(spec, 'bundle')
        if kind == 'trivial':
            return trivialBundle(m, int(spec.get('rank', 1)))
        elif kind == 'mobius':
            return mobius(m)
        elif kind in ('sum', 'tensor'):
            left = self.bundle(_mapping(spec['left'], 'left'), m)
            right = self.bundle(_mapping(spec['right'], 'right'), m)
            return whitneySum(left, right) if kind == 'sum' else tensor(left, right)
        elif kind == 'external':
            parts = []
            for key in ('left', 'right'):
                part = _mapping(spec[key], key)
                base = self.manifold(part['manifold']) if 'manifold' in part else m
                parts.append(self.bundle(part, base))
            return externalTensor(parts[0], parts[1])
        elif kind in ('complement', 'dual'):
            inner = self.bundle(_mapping(spec['of'], 'of'), m)
            return complement(inner) if kind == 'complement' else dual(inner)
        else:
            raise InvalidInputError("Unknown bundle kind: {!r}".format(kind))


    def function(self, spec: Any, m: DiscreteManifold) -> GridFunction:
        if isASequence(spec):
            if not spec:
                return GridFunction.constant(m, 0.0)
            parts = [self.function(part, m) for part in spec]
            total = parts[0]
            for part in parts[1:]:
                total = total + part
            return total

        if isinstance(spec, (int, float)) and not isinstance(spec, bool):
            return GridFunction.constant(m, float(spec))

        kind = _kind(spec, 'function')
        if kind == 'constant':
            return GridFunction.constant(m, parseWeight(spec.get('value', 1.0)))
        elif kind in ('sin', 'cos'):
            axis = int(spec.get('axis', 0))
            if not 0 <= axis < m.dim:
                raise InvalidInputError("Axis {} out of range for {}".format(axis, m.label))
            frequency = float(spec.get('frequency', 1.0))
            amplitude = parseWeight(spec.get('amplitude', 1.0))
            trig = np.sin if kind == 'sin' else np.cos
            return GridFunction(m, amplitude * trig(frequency * m.coordinate(axis)))
        elif kind == 'random':
            return randomFunction(m, self._rng, isComplex=self._config.isComplex)
        else:
            raise InvalidInputError("Unknown function kind: {!r}".format(kind))


    def section(self, spec: Dict[str, Any], bundle: ProjectorBundle) -> Section:
        kind = _kind(spec, 'section')
        if kind == 'frame':
            generators = frameGenerators(bundle)
            index = int(spec.get('index', 0))
            if not 0 <= index < len(generators):
                raise InvalidInputError("Frame index {} out of range, {} has {} generators"
                                        .format(index, bundle.label, len(generators)))
            return modMulSection(self.function(spec.get('f', 1.0), bundle.base),
                                 generators[index])
        elif kind == 'random':
            return randomSection(bundle, self._rng, isComplex=self._config.isComplex)
        else:
            raise InvalidInputError("Unknown section kind: {!r}".format(kind))


    def _node(self, spec: Dict[str, Any], m: DiscreteManifold) -> int:
        """ The 'node' entry, or the node nearest to the coordinates in the 'x' entry. """
        if 'node' in spec:
            node = spec['node']
            if isinstance(node, bool) or not isinstance(node, int) or not 0 <= node < m.nNodes:
                raise InvalidInputError("Invalid node {!r} for {}".format(node, m.label))
            return node

        xs = spec['x']
        xs = list(xs) if isASequence(xs) else [xs]
        if len(xs) != m.dim:
            raise InvalidInputError("Expected {} coordinates, got: {!r}".format(m.dim, xs))
        distance = np.zeros(m.nNodes)
        for axis, x in enumerate(xs):
            distance += (m.coordinate(axis) - float(x)) ** 2
        return int(np.argmin(distance))


    def distribution(self, spec: Dict[str, Any], m: DiscreteManifold) -> ScalarDistribution:
        parts: List[ScalarDistribution] = []
        for atomSpec in _mapping(spec, 'distribution').get('atoms', []):
            kind = _kind(atomSpec, 'atom')
            if kind == 'regular':
                parts.append(embedFunction(self.function(atomSpec.get('f', 1.0), m)))
            elif kind == 'delta':
                parts.append(delta(m, self._node(atomSpec, m), order=int(atomSpec.get('order', 0)),
                                   weight=parseWeight(atomSpec.get('weight', 1.0))))
            else:
                raise InvalidInputError("Unknown atom kind: {!r}".format(kind))
        return sumDistributions(parts, m)


    def vdist(self, spec: Dict[str, Any], bundle: ProjectorBundle) -> TensorRep:
        terms = []
        for termSpec in spec.get('terms', []):
            termSpec = _mapping(termSpec, 'term')
            section = self.section(_mapping(termSpec['section'], 'section'), bundle)
            dist = self.distribution(termSpec.get('distribution', {}), bundle.base)
            terms.append((section, dist))
        return TensorRep(bundle, terms)

