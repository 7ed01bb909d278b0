"""
Exact integer lattice primitives: vectors, 2D lattice polygons and
lattice simplices.

All arithmetic is done on Python integers or sympy rationals, never on
floats. Polygon areas use the normalized convention (twice the Euclidean
area) so that the primitive triangle has area 1.
"""
import logging
from functools import reduce
from itertools import combinations

import attrs
import sympy

from .exceptions import DegenerateSimplex, DimensionMismatch, ZeroVector

logger = logging.getLogger(__name__)


def _as_int_tuple(values):
    return tuple(int(x) for x in values)


@attrs.frozen
class LatticeVec:
    coords: tuple = attrs.field(converter=_as_int_tuple)

    @coords.validator
    def _at_least_two(self, attribute, value):
        if len(value) < 2:
            raise DimensionMismatch(f"Lattice vectors live in dimension 2 or more, got {value}.")

    @classmethod
    def of(cls, *coords):
        return cls(coords)

    @classmethod
    def zero(cls, dim):
        return cls((0,) * dim)

    @classmethod
    def basis(cls, dim, index):
        return cls(1 if i == index else 0 for i in range(dim))

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, index):
        return self.coords[index]

    def __add__(self, other):
        return LatticeVec(a + b for a, b in zip(self.coords, other.coords, strict=True))

    def __sub__(self, other):
        return LatticeVec(a - b for a, b in zip(self.coords, other.coords, strict=True))

    def __neg__(self):
        return LatticeVec(-a for a in self.coords)

    def scaled(self, k):
        return LatticeVec(k * a for a in self.coords)

    def dot(self, other):
        return sum(a * b for a, b in zip(self.coords, other, strict=True))

    def is_zero(self):
        return not any(self.coords)

    def content(self):
        return reduce(sympy.igcd, self.coords, 0)

    def __str__(self):
        return "(" + ",".join(str(a) for a in self.coords) + ")"


def vector_sum(vectors, dim):
    return reduce(lambda acc, v: acc + v, vectors, LatticeVec.zero(dim))


def primitive(v):
    """
    Split a nonzero lattice vector into its primitive direction and the
    positive multiplier (the gcd of its entries).
    """
    v = v if isinstance(v, LatticeVec) else LatticeVec(v)
    if v.is_zero():
        raise ZeroVector(f"Cannot take the primitive direction of {v}.")
    multiplier = v.content()
    return LatticeVec(a // multiplier for a in v.coords), multiplier


def integer_vector(values):
    """
    Scale a vector of rationals to the primitive integer vector with the
    same direction (clears denominators, then divides by the content).
    """
    rationals = [sympy.Rational(x) for x in values]
    denominator = reduce(sympy.ilcm, (r.q for r in rationals), 1)
    scaled = [int(r * denominator) for r in rationals]
    return primitive(LatticeVec(scaled))[0]


def determinant(rows):
    return int(sympy.Matrix(rows).det())


def integer_det(rows):
    """Cofactor expansion on plain integers, for the many small determinants of a lift scan."""
    if len(rows) == 1:
        return rows[0][0]
    return sum(
        (-1) ** c * entry * integer_det([row[:c] + row[c + 1:] for row in rows[1:]])
        for c, entry in enumerate(rows[0]) if entry
    )


def cross2(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def lattice_length(a, b):
    """Number of lattice segments on [a, b], i.e. gcd of the coordinate differences."""
    return reduce(sympy.igcd, (abs(y - x) for x, y in zip(a, b, strict=True)), 0)


def _convex_hull(points):
    points = sorted(set(points))
    if len(points) <= 2:
        return tuple(points)

    def half(seq):
        chain = []
        for p in seq:
            while len(chain) >= 2 and cross2(chain[-2], chain[-1], p) <= 0:
                chain.pop()
            chain.append(p)
        return chain

    lower = half(points)
    upper = half(reversed(points))
    return tuple(lower[:-1] + upper[:-1])


@attrs.frozen
class LatticePolygon:
    """
    Convex lattice polygon stored as its counterclockwise extreme points.
    Points and segments are valid degenerate polygons.
    """
    vertices: tuple

    @classmethod
    def hull(cls, points):
        return cls(_convex_hull(tuple(int(c) for c in p) for p in points))

    @classmethod
    def point(cls, x=0, y=0):
        return cls(((x, y),))

    @classmethod
    def segment(cls, a, b):
        return cls.hull([a, b])

    def edges(self):
        if len(self.vertices) < 2:
            return []
        if len(self.vertices) == 2:
            return [(self.vertices[0], self.vertices[1])]
        return list(zip(self.vertices, self.vertices[1:] + self.vertices[:1]))

    def translate(self, dx, dy):
        return LatticePolygon(tuple((x + dx, y + dy) for x, y in self.vertices))

    def contains(self, point):
        if len(self.vertices) == 1:
            return tuple(point) == self.vertices[0]
        if len(self.vertices) == 2:
            a, b = self.vertices
            return cross2(a, b, point) == 0 and all(
                min(a[i], b[i]) <= point[i] <= max(a[i], b[i]) for i in range(2)
            )
        return all(cross2(a, b, point) >= 0 for a, b in self.edges())

    def __str__(self):
        return "conv{" + ",".join(f"({x},{y})" for x, y in self.vertices) + "}"


def normalized_area(polygon):
    """Twice the Euclidean area (shoelace); the primitive triangle has area 1."""
    vertices = polygon.vertices
    if len(vertices) < 3:
        return 0
    twice = sum(x0 * y1 - x1 * y0 for (x0, y0), (x1, y1) in polygon.edges())
    return abs(twice)


def minkowski_sum(p, q):
    return LatticePolygon.hull(
        (a[0] + b[0], a[1] + b[1]) for a in p.vertices for b in q.vertices
    )


def mixed_area(p, q):
    """
    Mixed area normalized so that two primitive triangles have mixed area 1,
    which equals the number of common roots of two generic polynomials with
    these Newton polygons.
    """
    defect = normalized_area(minkowski_sum(p, q)) - normalized_area(p) - normalized_area(q)
    return defect // 2


@attrs.frozen
class LatticeSimplexN:
    vertices: tuple = attrs.field(converter=lambda vs: tuple(_as_int_tuple(v) for v in vs))

    def __attrs_post_init__(self):
        dim = len(self.vertices[0])
        if len(self.vertices) != dim + 1 or any(len(v) != dim for v in self.vertices):
            raise DegenerateSimplex(f"A simplex in dimension {dim} needs {dim + 1} vertices.")
        if self.signed_volume() == 0:
            raise DegenerateSimplex(f"Vertices {self.vertices} are affinely dependent.")

    @classmethod
    def standard(cls, dim):
        origin = (0,) * dim
        return cls([origin] + [LatticeVec.basis(dim, i).coords for i in range(dim)])

    @classmethod
    def dilated(cls, dim, d):
        origin = (0,) * dim
        return cls([origin] + [LatticeVec.basis(dim, i).scaled(d).coords for i in range(dim)])

    @property
    def dimension(self):
        return len(self.vertices[0])

    def edge_rows(self):
        v0 = self.vertices[0]
        return [[a - b for a, b in zip(v, v0)] for v in self.vertices[1:]]

    def signed_volume(self):
        return determinant(self.edge_rows())

    def volume(self):
        """Normalized volume: |det|, so a primitive simplex has volume 1."""
        return abs(self.signed_volume())

    def edges(self):
        return list(combinations(self.vertices, 2))

    def facet(self, k):
        return tuple(v for i, v in enumerate(self.vertices) if i != k)

    def __str__(self):
        return "conv{" + ",".join("(" + ",".join(map(str, v)) + ")" for v in self.vertices) + "}"


def simplex_normals(simplex):
    """
    Outward primitive normals u_0..u_N; u_k is normal to the facet
    opposite vertex k.
    """
    normals = []
    for k, opposite in enumerate(simplex.vertices):
        facet = simplex.facet(k)
        base = facet[0]
        rows = [[a - b for a, b in zip(v, base)] for v in facet[1:]]
        kernel = sympy.Matrix(rows).nullspace()
        if len(kernel) != 1:
            raise DegenerateSimplex(f"Facet opposite vertex {k} is degenerate.")
        normal = integer_vector(list(kernel[0]))
        if normal.dot([a - b for a, b in zip(opposite, base)]) > 0:
            normal = -normal
        normals.append(normal)
    logger.debug("Normals of %s: %s", simplex, ", ".join(map(str, normals)))
    return normals


def is_primitive_simplex(simplex):
    return simplex.volume() == 1
