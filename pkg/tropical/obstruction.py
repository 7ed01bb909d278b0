"""
Obstructions to fine approximability: the adjunction bound, the Hessian
bound, the Riemann-Hurwitz genus bound and the local Hessian count at a
single corner.
"""
import enum
import logging

import attrs

from . import arrangement as arr
from .curve import FanMorphism, degree, image, is_irreducible, is_reduced
from .exceptions import (AccountingMismatch, CurveNotInFan, DegreeTooSmall, MalformedRegion,
                         NotRHShape, ReducibleCurve, ReducibleImage)
from .intersection import self_intersection
from .lattice import LatticePolygon, lattice_length, normalized_area
from .planefan import decompose_ray

logger = logging.getLogger(__name__)


class Kind(str, enum.Enum):
    ADJUNCTION = "Adjunction"
    HESSIAN = "Hessian"
    RIEMANN_HURWITZ = "RiemannHurwitz"


class Verdict(str, enum.Enum):
    OBSTRUCTED = "Obstructed"
    NOT_OBSTRUCTED = "NotObstructed"


@attrs.frozen
class ObstructionReport:
    kind: Kind
    lhs_value: int
    genus_bound: int | None
    verdict: Verdict
    inputs_echo: dict = attrs.field(factory=dict, hash=False)
    notes: tuple = ()

    @property
    def obstructed(self):
        return self.verdict is Verdict.OBSTRUCTED


def _verdict(obstructed):
    return Verdict.OBSTRUCTED if obstructed else Verdict.NOT_OBSTRUCTED


@attrs.frozen
class HessianEdgeSets:
    bis: tuple
    k_w: tuple
    k_1: tuple
    generic: tuple
    m_I: dict = attrs.field(hash=False)


def adjunction_bound(curve, fan):
    """
    B = C² + (N−2)·deg − Σ w_e − Σ (|I|−2)·w_I + 2, with w_I the weight of
    the ray along u_I. A negative B rules out every approximation.
    """
    if not is_reduced(curve):
        raise ReducibleCurve(f"Curve {curve} is not reduced.")
    d = degree(curve, fan)
    square = self_intersection(curve, fan)
    weights = {ray.direction: ray.weight for ray in curve.rays}
    point_term = sum(
        (point.size - 2) * weights.get(fan.u_point(point.indices), 0) for point in fan.points
    )
    value = square + (fan.N - 2) * d - curve.total_weight() - point_term + 2
    notes = []
    if value % 2:
        notes.append("odd bound: equality with a non-singular approximation is impossible")
    if square < 0:
        notes.append("negative self-intersection: an approximation would be unique")
    report = ObstructionReport(
        Kind.ADJUNCTION,
        value,
        value // 2,
        _verdict(value < 0),
        {
            "N": fan.N,
            "degree": d,
            "self_intersection": square,
            "total_weight": curve.total_weight(),
            "point_term": point_term,
            "nonsingular_equality_possible": value % 2 == 0,
            "unique_if_approximable": square < 0,
        },
        tuple(notes),
    )
    logger.debug("Adjunction bound for %s: %s", curve, value)
    return report


def hessian_edge_sets(morphism, fan):
    normals = {fan.u(i): i for i in range(fan.N + 1)}
    point_rays = {vector: indices for indices, vector in fan.point_vectors}
    bis, k_w, k_1, generic = [], [], [], []
    m_I = {point.indices: 0 for point in fan.points}
    for edge in morphism.edges:
        decompositions = decompose_ray(fan, edge.direction)
        if not decompositions:
            raise CurveNotInFan(f"Edge direction {edge.direction} is not in the plane fan.")
        if edge.direction in point_rays:
            bis.append(edge)
        elif edge.direction in normals:
            (k_1 if edge.weight == 1 else k_w).append(edge)
        else:
            generic.append(edge)
        first = decompositions[0]
        if first.rho_I:
            m_I[first.indices] += edge.weight * int(first.rho_I)
    return HessianEdgeSets(tuple(bis), tuple(k_w), tuple(k_1), tuple(generic), m_I)


def boundary_accounting(morphism, fan):
    """
    Both sides of (N+1)·deg = Σ_I (C̄·∂P̄)_{p_I} + Σ_{K_w} w + |K_1|, the
    corner term of an edge a·u_k + b·u_I being w·(a + |I|·b).
    """
    sets = hessian_edge_sets(morphism, fan)
    curve = image(morphism)
    corner_term = 0
    for edge in morphism.edges:
        first = decompose_ray(fan, edge.direction)[0]
        if first.rho_I:
            corner_term += edge.weight * int(first.rho_k + len(first.indices) * first.rho_I)
    right = corner_term + sum(e.weight for e in sets.k_w) + len(sets.k_1)
    return (fan.N + 1) * degree(curve, fan), right


def hessian_bound(morphism, fan):
    """
    H = 3C² + 2(N−2)·deg − Σ 2(|I|−2)·m_I − Σ (3w − 2) − |K_1|, the edge sum
    running over Bis ∪ K_w ∪ K_1 only.
    """
    if not isinstance(morphism, FanMorphism):
        morphism = FanMorphism.of_curve(morphism)
    curve = image(morphism)
    if not is_irreducible(curve):
        raise ReducibleImage(f"Image {curve} of the morphism is reducible.")
    d = degree(curve, fan)
    if d <= 1:
        raise DegreeTooSmall(f"Image has degree {d}.")
    left, right = boundary_accounting(morphism, fan)
    if left != right:
        raise AccountingMismatch(f"Boundary intersections {right} differ from (N+1)·deg = {left}.")
    sets = hessian_edge_sets(morphism, fan)
    square = self_intersection(curve, fan)
    multiplicity_term = sum(
        2 * (point.size - 2) * sets.m_I[point.indices] for point in fan.points
    )
    edge_term = sum(3 * e.weight - 2 for e in sets.bis + sets.k_w + sets.k_1)
    value = 3 * square + 2 * (fan.N - 2) * d - multiplicity_term - edge_term - len(sets.k_1)
    logger.debug("Hessian bound for %s: %s", curve, value)
    return ObstructionReport(
        Kind.HESSIAN,
        value,
        None,
        _verdict(value < 0),
        {
            "N": fan.N,
            "degree": d,
            "self_intersection": square,
            "multiplicity_term": multiplicity_term,
            "edge_term": edge_term,
            "bis": len(sets.bis),
            "k_w": len(sets.k_w),
            "k_1": len(sets.k_1),
            "unique_if_approximable": square < 0,
        },
    )


def rh_bound(d, k, l, genus=0):
    """Lower bound ceil((d(k−2) − l + 2) / 2) on the genus of an approximation."""
    value = d * (k - 2) - l + 2
    bound = -(-value // 2)
    return ObstructionReport(
        Kind.RIEMANN_HURWITZ,
        value,
        bound,
        _verdict(bound > genus),
        {"d": d, "k": k, "l": l, "genus": genus},
    )


def rh_parameters(fan, morphism):
    """
    (k, l) for a plane made of k half-planes glued along the line ℝ·u_odd:
    k is the size of the pencil, l the number of edges off that line.
    """
    structure = arr.pencil_structure(fan.arrangement)
    if not isinstance(structure, arr.AllButOneInPencil):
        raise NotRHShape(f"Arrangement has the uniform quadruple {structure.lines}.")
    ridge = fan.u(structure.odd_line)
    l = sum(1 for edge in morphism.edges if edge.direction not in (ridge, -ridge))
    return structure.point.size, l


@attrs.frozen
class LocalHessianCounts:
    r_0: int
    v_0: int
    h_0: int
    area: int
    bound: int


def _axis_points(polygon, axis):
    """Lattice points of ``polygon`` on a coordinate axis (axis 0: the x-axis)."""
    extent = max(v[axis] for v in polygon.vertices)
    candidates = ((t, 0) if axis == 0 else (0, t) for t in range(extent + 1))
    return [point for point in candidates if polygon.contains(point)]


def local_hessian_bound(gamma, delta, area_scale=1):
    """
    Counts of the region between Δ and the corner: r_0 is the lattice length
    of a slope −1 edge of Δ, v_0 and h_0 count the axis lattice points of Γ
    outside Δ minus one, and the bound is 3·scale·area + r_0 − 2v_0 − 2h_0.
    """
    expected = LatticePolygon.hull(list(delta.vertices) + [(0, 0)])
    if expected != gamma:
        raise MalformedRegion(f"{gamma} is not the hull of {delta} and the origin.")
    if gamma == delta:
        return LocalHessianCounts(0, 0, 0, 0, 0)
    r_0 = max(
        (lattice_length(a, b) for a, b in delta.edges() if b[0] - a[0] == -(b[1] - a[1])),
        default=0,
    )
    v_0 = len([p for p in _axis_points(gamma, 1) if not delta.contains(p)]) - 1
    h_0 = len([p for p in _axis_points(gamma, 0) if not delta.contains(p)]) - 1
    area = normalized_area(gamma) - normalized_area(delta)
    bound = 3 * area_scale * area + r_0 - 2 * v_0 - 2 * h_0
    return LocalHessianCounts(r_0, v_0, h_0, area, bound)
