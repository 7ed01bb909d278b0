"""
Line arrangements in the projective plane and their points p_I.

An arrangement is built either from explicit rational lines (coordinate
mode) or from its intersection lattice alone (combinatorial mode). In
combinatorial mode every geometric question (collinearity, tangency)
is unanswerable and callers must degrade their verdicts.
"""
import logging
from itertools import combinations

import attrs
import sympy

from .exceptions import (AllConcurrent, CombinatorialModeOnly, DuplicateLine,
                         InconsistentIncidence)
from .lattice import integer_vector

logger = logging.getLogger(__name__)


def _canonical_triple(values):
    vector = integer_vector(values).coords
    for entry in vector:
        if entry:
            return vector if entry > 0 else tuple(-x for x in vector)
    return vector


@attrs.frozen
class ProjLine:
    """Line a·x + b·y + c·z = 0, stored with gcd 1 and leading entry positive."""
    coefficients: tuple = attrs.field(converter=_canonical_triple)

    @classmethod
    def of(cls, a, b, c):
        return cls((a, b, c))

    def evaluate(self, point):
        return sum(a * x for a, x in zip(self.coefficients, point, strict=True))

    def passes_through(self, point):
        return self.evaluate(point) == 0

    def __str__(self):
        return "[" + ":".join(map(str, self.coefficients)) + "]"


def _meet(u, v):
    """Projective point (or line) dual to two lines (or points)."""
    product = sympy.Matrix(u).cross(sympy.Matrix(v))
    return _canonical_triple(list(product))


@attrs.frozen
class ArrangementPoint:
    indices: tuple = attrs.field(converter=lambda ix: tuple(sorted(ix)))
    location: tuple | None = None

    @property
    def size(self):
        return len(self.indices)

    def __contains__(self, index):
        return index in self.indices

    def label(self):
        return "p_{" + ",".join(map(str, self.indices)) + "}"


@attrs.frozen
class HasUniformQuadruple:
    lines: tuple


@attrs.frozen
class AllButOneInPencil:
    point: ArrangementPoint
    odd_line: int


@attrs.frozen
class LineArrangement:
    n_lines: int
    points: tuple
    lines: tuple | None = None

    @property
    def N(self):
        return self.n_lines - 1

    @property
    def has_coordinates(self):
        return self.lines is not None

    def point(self, indices):
        """The point whose index set is exactly ``indices``."""
        key = tuple(sorted(indices))
        for point in self.points:
            if point.indices == key:
                return point
        raise InconsistentIncidence(f"No arrangement point with indices {key}.")

    def point_of_pair(self, i, j):
        for point in self.points:
            if i in point and j in point:
                return point
        raise InconsistentIncidence(f"Lines {i} and {j} do not meet in a listed point.")

    def incidence(self):
        return [list(p.indices) for p in self.points if p.size > 2]


def _check_lattice(n_lines, point_sets):
    if n_lines < 3:
        raise InconsistentIncidence("An arrangement needs at least three lines.")
    for indices in point_sets:
        if len(indices) < 2 or any(not 0 <= i < n_lines for i in indices):
            raise InconsistentIncidence(f"Invalid point index set {sorted(indices)}.")
        if len(indices) == n_lines:
            raise AllConcurrent()
    for first, second in combinations(point_sets, 2):
        if len(first & second) > 1:
            raise InconsistentIncidence(
                f"Points {sorted(first)} and {sorted(second)} share more than one line."
            )


def from_lines(lines):
    """
    Build an arrangement from explicit lines; points are found by exact
    pairwise intersection and grouped by location.
    """
    lines = tuple(line if isinstance(line, ProjLine) else ProjLine(line) for line in lines)
    if len(set(lines)) != len(lines):
        raise DuplicateLine()
    by_location = {}
    for i, j in combinations(range(len(lines)), 2):
        location = _meet(lines[i].coefficients, lines[j].coefficients)
        by_location.setdefault(location, set()).update((i, j))
    points = []
    for location, indices in sorted(by_location.items(), key=lambda item: sorted(item[1])):
        through = {k for k, line in enumerate(lines) if line.passes_through(location)}
        points.append(ArrangementPoint(through | indices, location))
    _check_lattice(len(lines), [set(p.indices) for p in points])
    logger.debug("Arrangement of %d lines with points %s", len(lines),
                 ", ".join(p.label() for p in points))
    return LineArrangement(len(lines), tuple(points), lines)


def from_incidence(n_lines, point_sets):
    """
    Combinatorial arrangement: the given multiple points, completed by a
    double point for every pair of lines not already covered.
    """
    given = [frozenset(s) for s in point_sets]
    _check_lattice(n_lines, given)
    covered = {pair for s in given for pair in combinations(sorted(s), 2)}
    points = [ArrangementPoint(s) for s in given]
    points += [
        ArrangementPoint(pair) for pair in combinations(range(n_lines), 2) if pair not in covered
    ]
    points.sort(key=lambda p: p.indices)
    return LineArrangement(n_lines, tuple(points))


def is_uniform(arrangement):
    return all(point.size == 2 for point in arrangement.points)


def _is_uniform_subset(arrangement, subset):
    return all(len(set(point.indices) & set(subset)) < 3 for point in arrangement.points)


def pencil_structure(arrangement):
    for subset in combinations(range(arrangement.n_lines), 4):
        if _is_uniform_subset(arrangement, subset):
            return HasUniformQuadruple(subset)
    pencil = max(arrangement.points, key=lambda p: p.size)
    odd = [i for i in range(arrangement.n_lines) if i not in pencil]
    if len(odd) != 1:
        raise InconsistentIncidence("Arrangement has neither a uniform quadruple nor a pencil.")
    return AllButOneInPencil(pencil, odd[0])


def _locations(arrangement, sets):
    if not arrangement.has_coordinates:
        raise CombinatorialModeOnly()
    return [arrangement.point(indices).location for indices in sets]


def collinear_point_sets(arrangement, sets):
    locations = _locations(arrangement, sets)
    if len(locations) <= 2:
        return True
    return sympy.Matrix(locations).rank() <= 2


def line_through_points(arrangement, sets):
    """The line through the named points, or None when they are not collinear."""
    locations = list(dict.fromkeys(_locations(arrangement, sets)))
    if len(locations) < 2 or not collinear_point_sets(arrangement, sets):
        return None
    return ProjLine(_meet(locations[0], locations[1]))
