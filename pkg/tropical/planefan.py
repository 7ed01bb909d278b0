"""
Bergman fan Trop(P) of a plane, built from a line arrangement and a
degree-1 frame.

Every vector of the ambient lattice has a unique coefficient vector
c = (c_0, ..., c_N) with v = Σ c_k·u_k, all c_k ≥ 0 and min c = 0, since
the normals of a primitive simplex satisfy the single relation Σ u_k = 0.
Cone membership, degrees and corner data are all read from it.
"""
import logging
from itertools import chain

import attrs
import sympy

from .exceptions import DegenerateSimplex, DimensionMismatch, ZeroVector
from .lattice import (LatticeSimplexN, LatticeVec, is_primitive_simplex, simplex_normals,
                      vector_sum)

logger = logging.getLogger(__name__)


@attrs.frozen
class DegreeOneFrame:
    """
    A primitive simplex Δ and its outward normals. ``binding[i]`` is the
    normal index attached to line L_i; ``normals`` is already listed in
    line order.
    """
    simplex: LatticeSimplexN
    normals: tuple
    binding: tuple

    @classmethod
    def build(cls, simplex, binding=None):
        if not isinstance(simplex, LatticeSimplexN):
            simplex = LatticeSimplexN(simplex)
        if not is_primitive_simplex(simplex):
            raise DegenerateSimplex(
                f"Frame simplex {simplex} has volume {simplex.volume()}, expected 1."
            )
        size = simplex.dimension + 1
        binding = tuple(range(size)) if binding is None else tuple(int(b) for b in binding)
        if sorted(binding) != list(range(size)):
            raise DimensionMismatch(f"Binding {list(binding)} is not a permutation of 0..{size - 1}.")
        by_vertex = simplex_normals(simplex)
        return cls(simplex, tuple(by_vertex[b] for b in binding), binding)

    @classmethod
    def standard(cls, dim):
        return cls.build(LatticeSimplexN.standard(dim))

    @property
    def dimension(self):
        return self.simplex.dimension

    def u(self, i):
        return self.normals[i]


@attrs.frozen
class RayDecomposition:
    cone: tuple
    rho_k: sympy.Rational
    rho_I: sympy.Rational

    @property
    def k(self):
        return self.cone[0]

    @property
    def indices(self):
        return self.cone[1]


@attrs.frozen
class PlaneFan:
    arrangement: object
    frame: DegreeOneFrame
    cones: tuple
    point_vectors: tuple
    basis_inverse: sympy.ImmutableMatrix

    @property
    def N(self):
        return self.frame.dimension

    @property
    def points(self):
        return self.arrangement.points

    def u(self, i):
        return self.frame.u(i)

    def u_point(self, indices):
        key = tuple(sorted(indices))
        for point_indices, vector in self.point_vectors:
            if point_indices == key:
                return vector
        raise KeyError(key)

    def rays(self):
        """Rays of the fine structure: every u_i and every u_I."""
        return list(chain(self.frame.normals, (vector for _, vector in self.point_vectors)))

    def coarse_cones(self):
        """
        Cones of the coarse structure as pairs of ray keys, a key being the
        index tuple J of the ray u_J. A double point p_{ij} contributes the
        single cone spanned by u_i and u_j; a multiple point p_I keeps its
        cones (k, I) around the ray u_I.
        """
        coarse = []
        for point in self.points:
            if point.size == 2:
                i, j = point.indices
                coarse.append(((i,), (j,)))
            else:
                coarse.extend(((k,), point.indices) for k in point.indices)
        return coarse

    def coefficients(self, v):
        vector = sympy.Matrix(list(v))
        if vector.rows != self.N:
            raise DimensionMismatch(f"Vector {tuple(v)} does not live in dimension {self.N}.")
        tail = list(self.basis_inverse * vector)
        shift = max(0, -min(tail))
        coefficients = (sympy.Integer(shift),) + tuple(x + shift for x in tail)
        if any(not c.is_integer for c in coefficients):
            logger.warning("Non-integral coefficients %s for ray %s", coefficients, tuple(v))
        return coefficients


def build(arrangement, frame):
    if frame.dimension != arrangement.n_lines - 1:
        raise DimensionMismatch(
            f"Frame lives in dimension {frame.dimension} but the arrangement has "
            f"{arrangement.n_lines} lines."
        )
    cones = tuple((k, point.indices) for point in arrangement.points for k in point.indices)
    point_vectors = tuple(
        (point.indices, vector_sum((frame.u(i) for i in point.indices), frame.dimension))
        for point in arrangement.points
    )
    basis = sympy.Matrix([list(frame.u(i)) for i in range(1, frame.dimension + 1)]).T
    fan = PlaneFan(arrangement, frame, cones, point_vectors, sympy.ImmutableMatrix(basis.inv()))
    logger.debug("Plane fan in R^%d with %d cones and %d corner rays",
                 fan.N, len(cones), len(point_vectors))
    return fan


def decompose_ray(fan, v):
    """
    All cones (k, I) containing v, with v = ρ_k·u_k + ρ_I·u_I. A vector
    equal to u_I (or a multiple) is reported in every cone at p_I, a
    multiple of u_k in every cone (k, I) with k ∈ I.
    """
    v = v if isinstance(v, LatticeVec) else LatticeVec(v)
    if v.is_zero():
        raise ZeroVector("Cannot decompose the zero vector.")
    c = fan.coefficients(v)
    support = tuple(k for k, ck in enumerate(c) if ck)
    if len(support) == 1:
        k = support[0]
        return [RayDecomposition((k, p.indices), c[k], sympy.Integer(0))
                for p in fan.points if k in p]
    if support not in {p.indices for p in fan.points}:
        return []
    low = min(c[k] for k in support)
    higher = [k for k in support if c[k] != low]
    if not higher:
        return [RayDecomposition((k, support), sympy.Integer(0), low) for k in support]
    if len(higher) == 1:
        k = higher[0]
        return [RayDecomposition((k, support), c[k] - low, low)]
    return []


def contains(fan, curve):
    if curve.dimension != fan.N:
        raise DimensionMismatch(f"Curve lives in dimension {curve.dimension}, fan in {fan.N}.")
    return all(decompose_ray(fan, ray.direction) for ray in curve.rays)
