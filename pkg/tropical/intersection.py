"""
Intersection numbers of fan curves inside a plane fan.

Near a corner p_I of the compactified plane a ray v = a·u_k + b·u_I
(b > 0) has the local primitive pair (b, a+b) in the chart (k, j) and
(a+b, b) in the chart (j, k). Two rays at p_I meet with multiplicity
w_r·w_s·min{p_r·q_s, q_r·p_s}; the global number subtracts all corner
contributions from the product of the degrees.
"""
import logging
from itertools import product

import attrs
import sympy

from .curve import degree
from .exceptions import CurveNotInFan, NotAtCorner, OrderingDoesNotCover
from .lattice import LatticePolygon, mixed_area, normalized_area
from .planefan import decompose_ray

logger = logging.getLogger(__name__)


@attrs.frozen
class CornerRay:
    weight: int
    p: int
    q: int

    @classmethod
    def reduced(cls, weight, p, q):
        content = sympy.igcd(p, q)
        return cls(weight * content, p // content, q // content)


@attrs.frozen
class CornerData:
    point: object
    ordering: tuple
    rays_by_curve: tuple


@attrs.frozen
class _Converging:
    """A ray ending at a corner: v = a·u_k + b·u_I with b > 0, k None when a = 0."""
    weight: int
    k: int | None
    a: int
    b: int


def _point_key(point):
    return tuple(point.indices) if hasattr(point, "indices") else tuple(sorted(point))


def converging_rays(curve, fan):
    """Map point index set -> rays of ``curve`` converging to that corner."""
    by_point = {}
    for ray in curve.rays:
        decompositions = decompose_ray(fan, ray.direction)
        if not decompositions:
            raise CurveNotInFan(f"Ray {ray.direction} is not contained in the plane fan.")
        first = decompositions[0]
        if first.rho_I == 0:
            continue
        k = None if len(decompositions) > 1 else first.k
        by_point.setdefault(first.indices, []).append(
            _Converging(ray.weight, k, int(first.rho_k), int(first.rho_I))
        )
    return by_point


def corner_rays(curve, fan, point, ordering):
    key = _point_key(point)
    i, j = ordering
    if i == j or i not in key or j not in key:
        raise NotAtCorner(f"Ordering {ordering} does not name two lines through p_{key}.")
    rays = []
    for ray in converging_rays(curve, fan).get(key, []):
        if ray.k is None:
            pair = (ray.b, ray.b)
        elif ray.k == i:
            pair = (ray.b, ray.a + ray.b)
        elif ray.k == j:
            pair = (ray.a + ray.b, ray.b)
        else:
            raise OrderingDoesNotCover(
                f"A ray of {curve} converges to p_{key} in the face of u_{ray.k}."
            )
        rays.append(CornerRay.reduced(ray.weight, *pair))
    return rays


def corner_ordering(fan, point, *curves):
    """
    A chart (i, j) covering every ray of ``curves`` at the corner; when the
    rays leave a choice the smallest remaining index of I is used.
    """
    key = _point_key(point)
    faces = sorted({
        ray.k for curve in curves
        for ray in converging_rays(curve, fan).get(key, []) if ray.k is not None
    })
    if len(faces) > 2:
        raise OrderingDoesNotCover(f"Rays reach p_{key} through the faces {faces}.")
    for index in key:
        if len(faces) == 2:
            break
        if index not in faces:
            faces.append(index)
    return tuple(faces)


def corner_data(fan, point, *curves):
    ordering = corner_ordering(fan, point, *curves)
    return CornerData(
        point, ordering, tuple(tuple(corner_rays(c, fan, point, ordering)) for c in curves)
    )


def _pair_multiplicity(r, s):
    if r.k is not None and r.k == s.k:
        local = min(r.b * (s.a + s.b), (r.a + r.b) * s.b)
    else:
        local = r.b * s.b
    return r.weight * s.weight * local


def _corner_sum(key, rays_first, rays_second, per_pair):
    if not rays_first or not rays_second:
        return 0
    if not per_pair:
        faces = {ray.k for ray in rays_first + rays_second if ray.k is not None}
        if len(faces) > 2:
            raise OrderingDoesNotCover(f"Rays reach p_{key} through the faces {sorted(faces)}.")
    return sum(_pair_multiplicity(r, s) for r, s in product(rays_first, rays_second))


def corner_multiplicity(first, second, fan, point, per_pair=False):
    """
    Distributive sum over ordered ray pairs at p_I in one chart (i, j)
    covering both curves. With ``per_pair`` each pair is evaluated in its
    own chart instead, so rays in three or more faces of a multiple point
    are summed rather than rejected.
    """
    key = _point_key(point)
    rays_first = converging_rays(first, fan).get(key, [])
    rays_second = converging_rays(second, fan).get(key, [])
    return _corner_sum(key, rays_first, rays_second, per_pair)


def corner_contributions(first, second, fan, per_pair=False):
    """Nonzero corner multiplicities keyed by point index set."""
    at_first = converging_rays(first, fan)
    at_second = converging_rays(second, fan)
    contributions = {}
    for key in sorted(set(at_first) & set(at_second)):
        total = _corner_sum(key, at_first[key], at_second[key], per_pair)
        if total:
            contributions[key] = total
    return contributions


def intersection_number(first, second, fan, per_pair=False):
    corners = corner_contributions(first, second, fan, per_pair)
    value = degree(first, fan) * degree(second, fan) - sum(corners.values())
    logger.debug("Intersection %s . %s = %d (corners %s)", first, second, value, corners)
    return value


def self_intersection(curve, fan, per_pair=False):
    return intersection_number(curve, curve, fan, per_pair)


def newton_polygons(rays):
    """
    Γ and Δ of a corner: Δ is the hull of the lattice path from
    (0, Σ w·p) to (Σ w·q, 0) with edges w·(q, −p) in order of decreasing
    slope steepness, Γ the hull of Δ and the origin.
    """
    ordered = sorted(rays, key=lambda r: sympy.Rational(r.p, r.q), reverse=True)
    x, y = 0, sum(r.weight * r.p for r in rays)
    path = [(x, y)]
    for ray in ordered:
        x, y = x + ray.weight * ray.q, y - ray.weight * ray.p
        path.append((x, y))
    delta = LatticePolygon.hull(path)
    gamma = LatticePolygon.hull(path + [(0, 0)])
    return gamma, delta


def local_multiplicity(rays_first, rays_second):
    """Σ w_r·w_s·min{p_r·q_s, q_r·p_s} over corner rays in one chart."""
    return sum(
        r.weight * s.weight * min(r.p * s.q, r.q * s.p)
        for r, s in product(rays_first, rays_second)
    )


def corner_mult_via_newton(rays_first, rays_second):
    gamma_1, delta_1 = newton_polygons(rays_first)
    gamma_2, delta_2 = newton_polygons(rays_second)
    return mixed_area(gamma_1, gamma_2) - mixed_area(delta_1, delta_2)


def corner_region_area(rays):
    """Normalized area of Γ minus Δ, the self-multiplicity of the corner."""
    gamma, delta = newton_polygons(rays)
    return normalized_area(gamma) - normalized_area(delta)
