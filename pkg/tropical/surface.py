"""
Tropical surfaces of degree d read through the dual triangulation of Δ_d.

A cell of the triangulation is d-pathological when, after permuting the
barycentric coordinates (x, y, z, w = d − x − y − z), it has the normal form
conv{(0,0,0), (1,0,0), (0,d−α,α), (d−β−γ,β,γ)}. The dual vertex of such a
cell carries a one-parameter family of tropical lines L_l, whose stars are
built here inside the plane fan of the cell. Adjacent cells sharing an edge
with the right facet incidences carry an isolated line instead.
"""
import enum
import logging
from functools import reduce
from itertools import combinations, permutations

import attrs
import sympy

from . import arrangement as arr
from .classify import classify_trivalent
from .curve import FanCurve
from .exceptions import (AccountingMismatch, BadParameters, CurveNotInFan, EmptySupport,
                         NonGenericLifts, SchemaError)
from .intersection import self_intersection
from .lattice import LatticeSimplexN, LatticeVec, integer_det, is_primitive_simplex
from .obstruction import adjunction_bound, hessian_bound
from .planefan import DegreeOneFrame, build, contains

logger = logging.getLogger(__name__)

FACETS = ("F_x", "F_y", "F_z", "F_w")


def barycentric(point, d):
    x, y, z = point
    return (x, y, z, d - x - y - z)


def in_dilated_simplex(point, d):
    return all(c >= 0 for c in barycentric(point, d))


def lattice_points(d):
    return [
        (x, y, z)
        for x in range(d + 1) for y in range(d + 1 - x) for z in range(d + 1 - x - y)
    ]


def facets_of(points, d):
    """Facets of Δ_d containing every point of ``points``."""
    coordinates = [barycentric(p, d) for p in points]
    return {FACETS[t] for t in range(4) if all(b[t] == 0 for b in coordinates)}


@attrs.frozen
class Triangulation3:
    """
    Cells of a lattice subdivision of Δ_d. A bare instance may hold a
    partial complex; ``from_cells`` checks that the cells tile Δ_d.
    """
    d: int
    cells: tuple = attrs.field(converter=tuple)

    @classmethod
    def from_cells(cls, d, cells):
        simplices = [c if isinstance(c, LatticeSimplexN) else LatticeSimplexN(c) for c in cells]
        for simplex in simplices:
            if simplex.dimension != 3:
                raise SchemaError(f"Cell {simplex} is not a tetrahedron in R^3.")
            outside = [v for v in simplex.vertices if not in_dilated_simplex(v, d)]
            if outside:
                raise SchemaError(f"Cell {simplex} has vertices {outside} outside Δ_{d}.")
        total = sum(s.volume() for s in simplices)
        if total != d ** 3:
            raise SchemaError(f"Cells have total volume {total}, Δ_{d} has {d ** 3}.")
        return cls(d, simplices)

    @property
    def is_unimodular(self):
        return all(is_primitive_simplex(cell) for cell in self.cells)

    def volume_sum(self):
        return sum(cell.volume() for cell in self.cells)


def _integer_lifts(lifts):
    rationals = {tuple(int(c) for c in point): sympy.Rational(value) for point, value in lifts.items()}
    denominator = reduce(sympy.ilcm, (r.q for r in rationals.values()), 1)
    return {point: int(r * denominator) for point, r in rationals.items()}


def _height_above(cell, point):
    """
    Sign of (lift of ``point``) minus the affine interpolant of the cell's
    lifts at ``point``, as the product of two integer determinants.
    """
    (v0, h0), rest = cell[0], cell[1:]
    rows = [[a - b for a, b in zip(v, v0)] + [h - h0] for v, h in rest]
    p, hp = point
    lifted = integer_det(rows + [[a - b for a, b in zip(p, v0)] + [hp - h0]])
    base = integer_det([row[:3] for row in rows])
    return lifted * base


def regular_subdivision(d, lifts):
    """
    Lower-hull subdivision of the lifted lattice points of Δ_d. Points
    absent from ``lifts`` are not in the support. Every lower facet must
    be a simplex, else the cells fail to tile Δ_d and NonGenericLifts is
    raised.
    """
    if not lifts:
        raise EmptySupport(f"No lattice point of Δ_{d} carries a lift.")
    heights = _integer_lifts(lifts)
    outside = [p for p in heights if len(p) != 3 or not in_dilated_simplex(p, d)]
    if outside:
        raise SchemaError(f"Lifted points {outside} are not lattice points of Δ_{d}.")
    corners = [(0, 0, 0), (d, 0, 0), (0, d, 0), (0, 0, d)]
    missing = [c for c in corners if c not in heights]
    if missing:
        raise SchemaError(f"Lifts must include the vertices of Δ_{d}, missing {missing}.")
    lifted = sorted(heights.items())
    cells = []
    for quadruple in combinations(range(len(lifted)), 4):
        cell = [lifted[i] for i in quadruple]
        v0 = cell[0][0]
        base = integer_det([[a - b for a, b in zip(v, v0)] for v, _ in cell[1:]])
        if base == 0:
            continue
        others = (lifted[i] for i in range(len(lifted)) if i not in quadruple)
        if all(_height_above(cell, point) > 0 for point in others):
            cells.append(LatticeSimplexN([v for v, _ in cell]))
    total = sum(cell.volume() for cell in cells)
    logger.debug("Lower hull of %d lifted points in Δ_%d: %d cells of total volume %d",
                 len(lifted), d, len(cells), total)
    if total != d ** 3:
        raise NonGenericLifts(
            f"Lower simplices cover volume {total} of {d ** 3}; some lower facet is not a simplex."
        )
    return Triangulation3(d, cells)


@attrs.frozen
class PathologicalSimplex:
    cell: LatticeSimplexN
    params: tuple
    face_assignment: dict = attrs.field(hash=False)
    coordinate_permutation: tuple

    @property
    def d(self):
        return self.params[0]


def valid_parameters(d, alpha, beta, gamma):
    return (
        d >= 3 and 0 < alpha < d and beta >= 0 and gamma >= 0 and 0 < beta + gamma < d
        and gamma * (d - alpha) - alpha * beta == 1
    )


def _normal_form_matches(cell, d):
    """(params, permutation) for every way the cell reads in normal form."""
    coordinates = [barycentric(v, d) for v in cell.vertices]
    matches = []
    for pi in permutations(range(4)):
        local = sorted(tuple(b[pi[t]] for t in range(3)) for b in coordinates)
        if local[0] != (0, 0, 0) or (1, 0, 0) not in local:
            continue
        rest = [v for v in local if v not in ((0, 0, 0), (1, 0, 0))]
        if len(rest) != 2:
            continue
        for c, e in (rest, rest[::-1]):
            alpha = c[2]
            beta, gamma = e[1], e[2]
            if c[0] != 0 or c[1] != d - alpha or e[0] != d - beta - gamma:
                continue
            if valid_parameters(d, alpha, beta, gamma):
                matches.append(((d, alpha, beta, gamma), pi))
    return matches


def find_pathological_simplices(triangulation):
    d = triangulation.d
    found = []
    for cell in triangulation.cells:
        if not is_primitive_simplex(cell):
            continue
        matches = _normal_form_matches(cell, d)
        if not matches:
            continue
        params, pi = min(matches)
        assignment = {
            "F_i∩F_j": (FACETS[pi[1]], FACETS[pi[2]]),
            "F_k": FACETS[pi[0]],
            "F_l": FACETS[pi[3]],
        }
        found.append(PathologicalSimplex(cell, params, assignment, pi))
    logger.debug("%d of %d cells are %d-pathological", len(found), len(triangulation.cells), d)
    return found


class PairKind(str, enum.Enum):
    TYPE_I = "TypeI"
    TYPE_II = "TypeII"


@attrs.frozen
class PathologicalPair:
    kind: PairKind
    cells: tuple
    shared_edge: tuple
    extra: tuple | None = None
    facets: dict = attrs.field(factory=dict, hash=False)


def _edge_facet_pairs(cell, shared, d):
    """Ordered pairs (i, j) of facets hosting two distinct edges of ``cell`` other than ``shared``."""
    edges = [e for e in combinations(cell.vertices, 2) if set(e) != set(shared)]
    pairs = set()
    for first, second in permutations(edges, 2):
        for i in facets_of(first, d):
            for j in facets_of(second, d):
                if i != j:
                    pairs.add((i, j))
    return pairs


def _complement(i, j):
    return sorted(set(FACETS) - {i, j})


def _classify_pair(first, second, d):
    shared = tuple(sorted(set(first.vertices) & set(second.vertices)))
    if len(shared) != 2:
        return None
    ij_pairs = _edge_facet_pairs(first, shared, d)
    opposite = tuple(v for v in second.vertices if v not in shared)
    on_edge = facets_of(shared, d)
    on_opposite = facets_of(opposite, d)
    for i, j in sorted(ij_pairs):
        for k, l in permutations(_complement(i, j)):
            if k in on_edge and l in on_opposite:
                return PathologicalPair(
                    PairKind.TYPE_I, (first, second), shared, None,
                    {"F_i": i, "F_j": j, "F_k": k, "F_l": l},
                )
    for apex in opposite:
        face = shared + (apex,)
        touched = set().union(*(facets_of([v], d) for v in face))
        for i, j in sorted(ij_pairs):
            k, l = _complement(i, j)
            if k in touched and l in touched:
                return PathologicalPair(
                    PairKind.TYPE_II, (first, second), shared, face,
                    {"F_i": i, "F_j": j, "F_k": k, "F_l": l},
                )
    return None


def classify_cell_pair(first, second, d):
    """The pair (Δ, Δ′) read in this order, or None when it is not pathological."""
    if not (is_primitive_simplex(first) and is_primitive_simplex(second)):
        return None
    return _classify_pair(first, second, d)


def find_pathological_pairs(triangulation):
    pairs = []
    for first, second in permutations(triangulation.cells, 2):
        pair = classify_cell_pair(first, second, triangulation.d)
        if pair is not None:
            pairs.append(pair)
    logger.debug("%d pathological pairs among %d cells", len(pairs), len(triangulation.cells))
    return pairs


@attrs.frozen
class VigelandStar:
    """
    Star fan of the vertex dual to a pathological cell, with the lines of
    its family. ``family`` maps U1..U5 to their vectors.
    """
    params: tuple
    rays: tuple
    fan: object
    family: dict = attrs.field(hash=False)

    def line(self, l=0):
        """Star of L_l at the origin: 4-valent for l = 0, {U1, U2, U3} otherwise."""
        U = self.family
        if l == 0:
            return FanCurve.from_rays((1, U[name]) for name in ("U2", "U3", "U4", "U5"))
        return FanCurve.from_rays((1, U[name]) for name in ("U1", "U2", "U3"))

    def second_vertex(self, l):
        """Vertex (0, −l, −l) of L_l with its outgoing rays."""
        U = self.family
        position = (0, -sympy.Rational(l), -sympy.Rational(l))
        return position, (-U["U1"], U["U4"], U["U5"])


def vigeland_star(params):
    d, alpha, beta, gamma = (int(p) for p in params)
    if not valid_parameters(d, alpha, beta, gamma):
        raise BadParameters(
            f"({d}, {alpha}, {beta}, {gamma}) violates 0<α<d, 0<β+γ<d, "
            f"γ(d−α)−αβ = 1 or d ≥ 3."
        )
    e = d - beta - gamma
    u = (
        LatticeVec.of(0, alpha, alpha - d),
        LatticeVec.of(0, -gamma, beta),
        LatticeVec.of(-1, -alpha * e, (d - alpha) * e),
        LatticeVec.of(1, gamma + alpha * (e - 1), -beta - (d - alpha) * (e - 1)),
    )
    family = {
        "U1": LatticeVec.of(0, -1, -1),
        "U2": LatticeVec.of(-1, 0, 0),
        "U3": LatticeVec.of(1, 1, 1),
        "U4": LatticeVec.of(0, -1, 0),
        "U5": LatticeVec.of(0, 0, -1),
    }
    relations = {
        "U1": u[0].scaled(beta + gamma) + u[1].scaled(d),
        "U2": u[0].scaled(e) + u[2],
        "U3": u[2].scaled(d - 1) + u[3].scaled(d),
        "U4": u[0].scaled(beta) + u[1].scaled(d - alpha),
        "U5": u[0].scaled(gamma) + u[1].scaled(alpha),
    }
    broken = [name for name, vector in relations.items() if vector != family[name]]
    if broken or not (u[0] + u[1] + u[2] + u[3]).is_zero():
        raise AccountingMismatch(f"Star of {tuple(params)} fails the relations {broken}.")
    simplex = LatticeSimplexN([(e, beta, gamma), (0, d - alpha, alpha), (1, 0, 0), (0, 0, 0)])
    frame = DegreeOneFrame.build(simplex)
    if tuple(frame.normals) != u:
        raise AccountingMismatch(f"Cell normals {frame.normals} differ from the star rays {u}.")
    fan = build(arr.from_incidence(4, []), frame)
    return VigelandStar((d, alpha, beta, gamma), u, fan, family)


class LineKind(str, enum.Enum):
    FAMILY_MEMBER = "FamilyMember"
    ISOLATED = "Isolated"


class LineStatus(str, enum.Enum):
    APPROXIMABLE = "Approximable"
    NOT_APPROXIMABLE = "NotApproximable"


APPROXIMABLE_PARAMS = (3, 2, 0, 1)


@attrs.frozen
class LineVerdict:
    line_kind: LineKind
    l: int | None
    status: LineStatus
    anchor: object
    reasons: tuple = ()
    evidence: dict = attrs.field(factory=dict, hash=False)
    applicable: bool = True


def _family_root(simplex, star, applicable):
    """Verdict for L_0, with adjunction, self-intersection and Hessian values."""
    d, _, beta, gamma = simplex.params
    line = star.line(0)
    adjunction = adjunction_bound(line, star.fan)
    evidence = {
        "adjunction": adjunction.lhs_value,
        "self_intersection": adjunction.inputs_echo["self_intersection"],
        "hessian": None,
    }
    reasons = []
    if adjunction.obstructed:
        reasons.append(f"adjunction bound B = {adjunction.lhs_value} is negative")
    if beta + gamma == 1:
        hessian = hessian_bound(line, star.fan)
        evidence["hessian"] = hessian.lhs_value
        if hessian.obstructed:
            reasons.append(f"Hessian bound H = {hessian.lhs_value} is negative")
    approximable = simplex.params == APPROXIMABLE_PARAMS
    if not approximable and not reasons:
        reasons.append(f"obstructions vanish at d = {d}; excluded by the family's combinatorial type")
    return LineVerdict(
        LineKind.FAMILY_MEMBER, 0,
        LineStatus.APPROXIMABLE if approximable else LineStatus.NOT_APPROXIMABLE,
        simplex, tuple(reasons), evidence, applicable,
    )


def _family_member(simplex, star, applicable):
    """Verdict for L_l with l > 0, read off the trivalent star at the origin."""
    verdict = classify_trivalent(star.line(1), star.fan)
    evidence = {
        "classification": verdict.status.value,
        "case": verdict.case_tag.value if verdict.case_tag else None,
        "self_intersection": verdict.details.get("self_intersection"),
    }
    return LineVerdict(
        LineKind.FAMILY_MEMBER, 1, LineStatus.NOT_APPROXIMABLE, simplex,
        ("the trivalent star of L_l at the origin is not finely approximable",) + verdict.reasons,
        evidence, applicable,
    )


def line_verdicts(triangulation):
    """
    One verdict for L_0 and one for the members l > 0 of each pathological
    family, plus one per pathological pair when d ≥ 4. Verdicts on a
    non-unimodular triangulation are marked as not applicable.
    """
    applicable = triangulation.is_unimodular
    verdicts = []
    for simplex in find_pathological_simplices(triangulation):
        star = vigeland_star(simplex.params)
        verdicts.append(_family_root(simplex, star, applicable))
        verdicts.append(_family_member(simplex, star, applicable))
    if triangulation.d >= 4:
        for pair in find_pathological_pairs(triangulation):
            verdicts.append(LineVerdict(
                LineKind.ISOLATED, None, LineStatus.NOT_APPROXIMABLE, pair,
                (f"isolated line at a pathological pair of {pair.kind.value}",),
                {"pair": pair.kind.value, **pair.facets}, applicable,
            ))
    logger.debug("Issued %d line verdicts for Δ_%d", len(verdicts), triangulation.d)
    return verdicts


def singularity_flag(line, fan, d):
    """True when C² of the line differs from 2 − d, the value for a complex line."""
    if not contains(fan, line):
        raise CurveNotInFan(f"Line {line} is not contained in the star fan.")
    return self_intersection(line, fan) != 2 - d


@attrs.frozen
class ScanSummary:
    d: int
    cells: int
    unimodular: bool
    pathological_simplices: int
    pathological_pairs: int
    approximable_lines: int


def scan_summary(triangulation, verdicts=None):
    if verdicts is None:
        verdicts = line_verdicts(triangulation)
    simplices = {id(v.anchor) for v in verdicts if v.line_kind is LineKind.FAMILY_MEMBER}
    pairs = [v for v in verdicts if v.line_kind is LineKind.ISOLATED]
    return ScanSummary(
        triangulation.d,
        len(triangulation.cells),
        triangulation.is_unimodular,
        len(simplices),
        len(pairs),
        sum(1 for v in verdicts if v.status is LineStatus.APPROXIMABLE),
    )
