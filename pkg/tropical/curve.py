"""
Fan tropical curves (weighted primitive rays at the origin) and fan
tropical morphisms (abstract edges with image directions).
"""
import logging
from functools import reduce

import attrs
import sympy
from django.conf import settings

from .exceptions import (CurveNotInFan, DimensionMismatch, NonIntegralDegree, TooManyRays,
                         UnbalancedCurve, WeightTooLarge)
from .lattice import LatticeVec, primitive, vector_sum
from .planefan import contains

logger = logging.getLogger(__name__)

DEFAULT_MAX_IRREDUCIBILITY_RAYS = 24
DEFAULT_MAX_TOTAL_WEIGHT = 64


@attrs.frozen
class WeightedRay:
    weight: int
    direction: LatticeVec

    def vector(self):
        return self.direction.scaled(self.weight)

    def __str__(self):
        return f"{self.weight}*{self.direction}"


def _weighted_rays(pairs):
    """Primitivize each direction and fold its content into the weight."""
    rays = []
    for weight, direction in pairs:
        direction, content = primitive(direction)
        if int(weight) <= 0:
            raise UnbalancedCurve(f"Weight {weight} of ray {direction} is not positive.")
        rays.append(WeightedRay(int(weight) * content, direction))
    return rays


def _check_balanced(rays, dimension):
    if any(len(ray.direction) != dimension for ray in rays):
        raise DimensionMismatch(f"Rays do not all live in dimension {dimension}.")
    total = vector_sum((ray.vector() for ray in rays), dimension)
    if not total.is_zero():
        raise UnbalancedCurve(f"Weighted rays sum to {total}.")


@attrs.frozen
class FanCurve:
    rays: tuple
    dimension: int

    @classmethod
    def from_rays(cls, pairs):
        """
        Build an embedded curve from ``(weight, direction)`` pairs; rays with
        a common primitive direction are merged.
        """
        rays = _weighted_rays(pairs)
        if not rays:
            raise UnbalancedCurve("A curve needs at least two rays.")
        dimension = len(rays[0].direction)
        _check_balanced(rays, dimension)
        merged = {}
        for ray in rays:
            merged[ray.direction] = merged.get(ray.direction, 0) + ray.weight
        ordered = sorted(merged.items(), key=lambda item: item[0].coords)
        return cls(tuple(WeightedRay(w, v) for v, w in ordered), dimension)

    @property
    def valence(self):
        return len(self.rays)

    @property
    def weights(self):
        return [ray.weight for ray in self.rays]

    def total_weight(self):
        return sum(self.weights)

    def affine_rank(self):
        return sympy.Matrix([list(ray.direction) for ray in self.rays]).rank()

    def __str__(self):
        return "{" + ", ".join(map(str, self.rays)) + "}"


@attrs.frozen
class FanMorphism:
    """Image data of a star-shaped abstract curve; parallel edges stay separate."""
    edges: tuple
    dimension: int

    @classmethod
    def from_edges(cls, pairs):
        edges = _weighted_rays(pairs)
        if not edges:
            raise UnbalancedCurve("A morphism needs at least two edges.")
        dimension = len(edges[0].direction)
        _check_balanced(edges, dimension)
        return cls(tuple(edges), dimension)

    @classmethod
    def of_curve(cls, curve):
        return cls(curve.rays, curve.dimension)


def image(morphism):
    return FanCurve.from_rays((edge.weight, edge.direction) for edge in morphism.edges)


def degree_vector(curve, fan):
    """Σ w_e·c(v_e): every entry is the degree, one per reference index."""
    if not contains(fan, curve):
        raise CurveNotInFan(f"Curve {curve} is not contained in the plane fan.")
    totals = [sympy.Integer(0)] * (fan.N + 1)
    for ray in curve.rays:
        c = fan.coefficients(ray.direction)
        totals = [t + ray.weight * ci for t, ci in zip(totals, c)]
    return totals


def degree(curve, fan, i=0):
    value = degree_vector(curve, fan)[i]
    if not value.is_integer:
        raise NonIntegralDegree(f"Degree of {curve} evaluates to {value}.")
    return int(value)


def _tropical_limit(name, default):
    configured = getattr(settings, "TROPICAL", {}) if settings.configured else {}
    return configured.get(name, default)


def is_irreducible(curve, max_rays=None, max_weight=None):
    """
    True when no proper part of the curve, weights split as w' ≤ w per
    ray, is balanced. The search runs over partial sums ray by ray, so
    both the ray count and the total weight are bounded.
    """
    if max_rays is None:
        max_rays = _tropical_limit("MAX_IRREDUCIBILITY_RAYS", DEFAULT_MAX_IRREDUCIBILITY_RAYS)
    if max_weight is None:
        max_weight = _tropical_limit("MAX_TOTAL_WEIGHT", DEFAULT_MAX_TOTAL_WEIGHT)
    if curve.valence > max_rays:
        raise TooManyRays(f"Curve has {curve.valence} rays, the search handles {max_rays}.")
    if not is_reduced(curve):
        # C/g is a balanced proper part
        return False
    if curve.total_weight() > max_weight:
        raise WeightTooLarge(
            f"Curve has total weight {curve.total_weight()}, the search handles {max_weight}."
        )
    states = {((0,) * curve.dimension, True, True)}
    for ray in curve.rays:
        following = set()
        for partial, empty, full in states:
            for share in range(ray.weight + 1):
                step = tuple(p + share * x for p, x in zip(partial, ray.direction))
                following.add((step, empty and share == 0, full and share == ray.weight))
        states = following
    zero = (0,) * curve.dimension
    proper = [s for s in states if s[0] == zero and not s[1] and not s[2]]
    logger.debug("Irreducibility search on %s explored %d states", curve, len(states))
    return not proper


def is_reduced(curve):
    return reduce(sympy.igcd, curve.weights, 0) == 1
