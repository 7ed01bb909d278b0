"""
Classification of 2- and 3-valent fan curves that are finely
approximable in a plane, with the rule that fired attached to each
verdict.

Curves are compared through their weighted coefficient vectors w·c(v)
(see ``PlaneFan.coefficients``), which turns the ray templates of every
case into plain integer tuples.
"""
import enum
import logging
from itertools import permutations

import attrs
import sympy

from . import arrangement as arr
from .curve import degree, is_irreducible, is_reduced
from .exceptions import (AccountingMismatch, CombinatorialModeOnly, DegreeNotOne, NotTrivalent,
                         ReducibleCurve)
from .intersection import self_intersection
from .planefan import build

logger = logging.getLogger(__name__)


class Status(str, enum.Enum):
    FINELY_APPROXIMABLE = "FinelyApproximable"
    NOT_APPROXIMABLE = "NotApproximable"
    CONDITIONALLY_APPROXIMABLE = "ConditionallyApproximable"
    OUT_OF_CLASSIFICATION = "OutOfClassification"


class CaseTag(str, enum.Enum):
    DEGREE_ONE_LINE = "DegreeOneLine"
    EXCEPTIONAL_CONIC_1 = "ExceptionalConic1"
    EXCEPTIONAL_CONIC_2 = "ExceptionalConic2"
    EXCEPTIONAL_CONIC_3 = "ExceptionalConic3"
    NON_UNIFORM_R3 = "NonUniformR3"
    STABLE_INTERSECTION = "StableIntersection"
    CONIC_CHAIN = "ConicChain"
    PLANE_CYCLES_RULE = "PlaneCyclesRule"


@attrs.frozen
class ClassificationVerdict:
    status: Status
    case_tag: CaseTag | None
    witness: str | None = None
    reasons: tuple = ()
    details: dict = attrs.field(factory=dict, hash=False)

    @property
    def approximable(self):
        return self.status is Status.FINELY_APPROXIMABLE


def weighted_coefficients(curve, fan):
    """Sorted multiset of the vectors w·c(v) over the rays of ``curve``."""
    vectors = []
    for ray in curve.rays:
        vectors.append(tuple(int(ray.weight * c) for c in fan.coefficients(ray.direction)))
    return sorted(vectors)


def _label(indices):
    return "p_{" + ",".join(map(str, indices)) + "}"


# degree one lines

def classify_line(curve, fan):
    """
    A degree-1 curve is a line exactly when its rays are u_{I_1}, ..., u_{I_m}
    and u_i (i ∈ J) for disjoint point sets I_1..I_m covering {0..N} minus
    J, and the m points are collinear.
    """
    d = degree(curve, fan)
    if d != 1:
        raise DegreeNotOne(f"Curve {curve} has degree {d}.")
    point_sets = {p.indices for p in fan.points}
    parts, singles = [], []
    for vector in weighted_coefficients(curve, fan):
        support = tuple(k for k, c in enumerate(vector) if c)
        if any(vector[k] != 1 for k in support):
            return ClassificationVerdict(
                Status.NOT_APPROXIMABLE, CaseTag.DEGREE_ONE_LINE,
                reasons=(f"ray with coefficients {vector} is not of the form u_J",),
            )
        if len(support) == 1:
            singles.append(support[0])
        elif support in point_sets:
            parts.append(support)
        else:
            return ClassificationVerdict(
                Status.NOT_APPROXIMABLE, CaseTag.DEGREE_ONE_LINE,
                reasons=(f"{_label(support)} is not a point of the arrangement",),
            )
    covered = sorted(singles + [i for part in parts for i in part])
    if covered != list(range(fan.N + 1)):
        raise AccountingMismatch(f"Degree one rays cover the lines {covered}.")
    details = {"points": [list(p) for p in parts], "singles": sorted(singles)}
    if len(parts) <= 2:
        names = " and ".join(_label(p) for p in parts)
        witness = f"line through {names}" if parts else "generic line"
        if fan.arrangement.has_coordinates and len(parts) == 2:
            details["line"] = list(arr.line_through_points(fan.arrangement, parts).coefficients)
        return ClassificationVerdict(
            Status.FINELY_APPROXIMABLE, CaseTag.DEGREE_ONE_LINE, witness, details=details
        )
    names = ", ".join(_label(p) for p in parts)
    try:
        collinear = arr.collinear_point_sets(fan.arrangement, parts)
    except CombinatorialModeOnly:
        return ClassificationVerdict(
            Status.CONDITIONALLY_APPROXIMABLE, CaseTag.DEGREE_ONE_LINE,
            f"line through {names}, if these points are collinear",
            details=details,
        )
    if not collinear:
        return ClassificationVerdict(
            Status.NOT_APPROXIMABLE, CaseTag.DEGREE_ONE_LINE,
            reasons=(f"points {names} are not collinear",), details=details,
        )
    details["line"] = list(arr.line_through_points(fan.arrangement, parts).coefficients)
    return ClassificationVerdict(
        Status.FINELY_APPROXIMABLE, CaseTag.DEGREE_ONE_LINE, f"line through {names}",
        details=details,
    )


# uniform planes in R^3

def _vector(**entries):
    vector = [0] * 4
    for label, value in entries.items():
        vector[int(label[1])] += value
    return vector


def _type_one(d, a, b):
    return [_vector(u1=d, u2=a), _vector(u2=b, u3=d), _vector(u2=d - a - b, u0=d)]


def _type_two(d, a, b):
    return [_vector(u1=d, u2=a), _vector(u2=d - a, u3=d - b), _vector(u3=b, u0=d)]


def _type_three(d, a, b):
    return [_vector(u1=a, u2=b), _vector(u1=d - a, u2=d - b), _vector(u3=d, u0=d)]


def _valid_type(kind, d, a, b):
    if d < 1 or sympy.igcd(sympy.igcd(d, a), b) != 1:
        return False
    if kind == 1:
        return a >= 0 and b >= 0 and a + b <= d
    if kind == 2:
        return 0 <= a <= d and 0 <= b <= d
    return 0 <= a < b <= d


def _normalized(vector):
    low = min(vector)
    return tuple(x - low for x in vector)


_TEMPLATES = {
    1: (_type_one, lambda t: (t[0][1], t[0][2], t[1][2])),
    2: (_type_two, lambda t: (t[0][1], t[0][2], t[2][3])),
    3: (_type_three, lambda t: (t[2][3], t[0][1], t[0][2])),
}


def plane_curve_types(curve, fan):
    """
    Every (type, d, α, β) such that the curve matches that list type after
    relabeling the four rays of the plane and reordering the edges.
    """
    vectors = weighted_coefficients(curve, fan)
    if len(vectors) != 3:
        return []
    matches = set()
    for sigma in permutations(range(4)):
        relabeled = [tuple(v[sigma[t]] for t in range(4)) for v in vectors]
        for ordering in permutations(relabeled):
            for kind, (template, extract) in _TEMPLATES.items():
                d, a, b = extract(ordering)
                if not _valid_type(kind, d, a, b):
                    continue
                expected = [_normalized(v) for v in template(d, a, b)]
                if expected == list(ordering):
                    matches.add((kind, d, a, b))
    return sorted(matches)


def _classify_uniform_r3(curve, fan):
    square = self_intersection(curve, fan)
    types = plane_curve_types(curve, fan)
    details = {"self_intersection": square, "types": [list(t) for t in types]}
    logger.debug("Curve %s matches list types %s", curve, types)
    stable = [t for t in types if t[0] == 1]
    if stable:
        details["params"] = list(stable[0][1:])
        return ClassificationVerdict(
            Status.FINELY_APPROXIMABLE, CaseTag.STABLE_INTERSECTION,
            "stable intersection of Trop(P) with the span of C", details=details,
        )
    chain = [t for t in types if t[0] == 2 and t[2] == t[3] == 1]
    if chain:
        d = chain[0][1]
        details["params"] = list(chain[0][1:])
        return ClassificationVerdict(
            Status.FINELY_APPROXIMABLE, CaseTag.CONIC_CHAIN,
            f"rational curve with {d + 1} punctures", details=details,
        )
    if types:
        details["params"] = list(types[0][1:])
        return ClassificationVerdict(
            Status.NOT_APPROXIMABLE, CaseTag.PLANE_CYCLES_RULE,
            reasons=(f"C² = {square} is neither 0 nor -1",), details=details,
        )
    return ClassificationVerdict(
        Status.OUT_OF_CLASSIFICATION, None,
        reasons=("curve matches none of the plane curve types",), details=details,
    )


# exceptional conics

def _unit(n, **entries):
    vector = [0] * n
    for index, value in entries.items():
        vector[index] += value
    return tuple(vector)


def _exceptional_templates(n_lines):
    """(case, roles, expected rays, triple points) for every role assignment."""
    if n_lines == 5:
        for i, j, k, l, m in permutations(range(5)):
            yield (
                CaseTag.EXCEPTIONAL_CONIC_1, dict(i=i, j=j, k=k, l=l, m=m),
                [{i: 1, j: 1}, {i: 1, k: 2, m: 1}, {j: 1, l: 2, m: 1}],
                {tuple(sorted((i, k, m))), tuple(sorted((j, l, m)))},
            )
            n = m
            yield (
                CaseTag.EXCEPTIONAL_CONIC_2, dict(i=i, j=j, k=k, l=l, n=n),
                [{i: 1, j: 1, n: 2}, {i: 1, k: 2}, {j: 1, l: 2}],
                {tuple(sorted((i, j, n)))},
            )
    elif n_lines == 6:
        for i, j, k, l, m, n in permutations(range(6)):
            yield (
                CaseTag.EXCEPTIONAL_CONIC_3, dict(i=i, j=j, k=k, l=l, m=m, n=n),
                [{i: 1, j: 1, n: 2}, {i: 1, k: 2, m: 1}, {j: 1, l: 2, m: 1}],
                {tuple(sorted((i, k, m))), tuple(sorted((j, l, m))), tuple(sorted((i, j, n)))},
            )


def _as_vector(entries, size):
    vector = [0] * size
    for index, value in entries.items():
        vector[index] = value
    return tuple(vector)


def tangent_conic(arrangement, i, j, k, l):
    """
    The conic through p_ij tangent to L_k at p_ik and to L_l at p_jl, as a
    symmetric 3×3 matrix, or None when the conditions do not fix one conic.
    """
    def location(a, b):
        return sympy.Matrix(arrangement.point_of_pair(a, b).location)

    p_ij, p_ik, p_jl = location(i, j), location(i, k), location(j, l)
    on_k, on_l = location(j, k), location(k, l)
    a, b, c, d, e, f = sympy.symbols("a b c d e f")
    form = sympy.Matrix([[a, b, c], [b, d, e], [c, e, f]])
    conditions = [
        (p_ij.T * form * p_ij)[0],
        (p_ik.T * form * p_ik)[0],
        (p_ik.T * form * on_k)[0],
        (p_jl.T * form * p_jl)[0],
        (p_jl.T * form * on_l)[0],
    ]
    system, _ = sympy.linear_eq_to_matrix(conditions, [a, b, c, d, e, f])
    kernel = system.nullspace()
    if len(kernel) != 1:
        return None
    return form.subs(dict(zip((a, b, c, d, e, f), kernel[0])))


def tangent_line_at(conic, point):
    return arr.ProjLine(list(conic * sympy.Matrix(point)))


def _classify_exceptional(curve, fan):
    arrangement = fan.arrangement
    size = arrangement.n_lines
    vectors = weighted_coefficients(curve, fan)
    triples = {p.indices for p in arrangement.points if p.size > 2}
    for case, roles, expected, points in _exceptional_templates(size):
        if sorted(_as_vector(e, size) for e in expected) != vectors:
            continue
        if triples != points or any(p.size > 3 for p in arrangement.points):
            continue
        details = {"roles": roles}
        if case is CaseTag.EXCEPTIONAL_CONIC_1:
            return ClassificationVerdict(
                Status.FINELY_APPROXIMABLE, case,
                f"conic through p_{{{roles['i']},{roles['j']}}} restricted to the plane",
                details=details,
            )
        i, j, k, l, n = (roles[key] for key in "ijkln")
        if not arrangement.has_coordinates:
            return ClassificationVerdict(
                Status.CONDITIONALLY_APPROXIMABLE, case,
                f"conic through p_{{{i},{j}}}, if L_{n} is tangent to it there",
                details=details,
            )
        conic = tangent_conic(arrangement, i, j, k, l)
        tangent = tangent_line_at(conic, arrangement.point_of_pair(i, j).location) if conic else None
        details["tangent"] = list(tangent.coefficients) if tangent else None
        if tangent == arrangement.lines[n]:
            return ClassificationVerdict(
                Status.FINELY_APPROXIMABLE, case,
                f"conic through p_{{{i},{j}}} tangent to L_{n}", details=details,
            )
        return ClassificationVerdict(
            Status.NOT_APPROXIMABLE, case,
            reasons=(f"L_{n} is not tangent to the conic at p_{{{i},{j}}}",), details=details,
        )
    return ClassificationVerdict(
        Status.NOT_APPROXIMABLE, None,
        reasons=("degree at least 2 and no exceptional conic pattern matches",),
    )


def _check_trivalent(curve):
    if curve.valence not in (2, 3):
        raise NotTrivalent(f"Curve {curve} has {curve.valence} rays.")


def classify_trivalent(curve, fan, alternative_frames=()):
    _check_trivalent(curve)
    if not is_reduced(curve):
        raise ReducibleCurve(f"Curve {curve} is not reduced.")
    if not is_irreducible(curve):
        raise ReducibleCurve(f"Curve {curve} is reducible.")
    if degree(curve, fan) == 1:
        return classify_line(curve, fan)
    for index, frame in enumerate(alternative_frames):
        other = build(fan.arrangement, frame)
        if degree(curve, other) == 1:
            verdict = classify_line(curve, other)
            return attrs.evolve(verdict, details={**verdict.details, "frame": index})
    N = fan.N
    if curve.affine_rank() > 2:
        return ClassificationVerdict(
            Status.OUT_OF_CLASSIFICATION, None, reasons=("rays span more than a plane",)
        )
    if N == 3 and not arr.is_uniform(fan.arrangement):
        if curve.valence == 3:
            return ClassificationVerdict(
                Status.FINELY_APPROXIMABLE, CaseTag.NON_UNIFORM_R3,
                "any irreducible trivalent curve of a non-uniform plane",
            )
        return ClassificationVerdict(
            Status.NOT_APPROXIMABLE, None, reasons=("2-valent curve of degree at least 2",)
        )
    if N == 3:
        return _classify_uniform_r3(curve, fan)
    if N in (4, 5):
        return _classify_exceptional(curve, fan)
    if N >= 6:
        return ClassificationVerdict(
            Status.NOT_APPROXIMABLE, CaseTag.PLANE_CYCLES_RULE,
            reasons=("N ≥ 6 and degree at least 2",),
        )
    return ClassificationVerdict(
        Status.OUT_OF_CLASSIFICATION, None, reasons=(f"no classification for N = {N}",)
    )


def plane_cycles_check(curve, fan):
    _check_trivalent(curve)
    if not is_reduced(curve):
        raise ReducibleCurve(f"Curve {curve} is not reduced.")
    if fan.N == 3:
        square = self_intersection(curve, fan)
        if square not in (0, -1):
            return ClassificationVerdict(
                Status.NOT_APPROXIMABLE, CaseTag.PLANE_CYCLES_RULE,
                reasons=(f"C² = {square} is neither 0 nor -1",),
                details={"self_intersection": square},
            )
        return classify_trivalent(curve, fan)
    if fan.N >= 6 and degree(curve, fan) >= 2:
        return ClassificationVerdict(
            Status.NOT_APPROXIMABLE, CaseTag.PLANE_CYCLES_RULE,
            reasons=("N ≥ 6 and degree at least 2",),
        )
    return ClassificationVerdict(
        Status.OUT_OF_CLASSIFICATION, None, reasons=(f"screen is silent for N = {fan.N}",)
    )
