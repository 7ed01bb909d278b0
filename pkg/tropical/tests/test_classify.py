import sympy
from django.test import SimpleTestCase

from tropical import arrangement as arr
from tropical.classify import (CaseTag, Status, classify_line, classify_trivalent,
                               plane_curve_types, plane_cycles_check, tangent_conic,
                               tangent_line_at, weighted_coefficients)
from tropical.curve import FanCurve, is_irreducible, is_reduced
from tropical.exceptions import DegreeNotOne, NotTrivalent, ReducibleCurve
from tropical.intersection import self_intersection
from tropical.lattice import LatticeSimplexN, vector_sum
from tropical.planefan import DegreeOneFrame, build

UNIFORM = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)]
BRAID_LINES = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, -1, 0), (1, 0, -1), (0, 1, -1)]
BRAID_POINTS = [{0, 1, 3}, {0, 2, 4}, {1, 2, 5}, {3, 4, 5}]
# p01, p23 and p45 all lie on z = 0
COLLINEAR_LINES = [(1, 0, 1), (1, 0, 2), (0, 1, 1), (0, 1, 3), (1, 1, 1), (1, 1, 5)]


def plane(lines=None, incidence=None):
    arrangement = arr.from_lines(lines) if lines is not None else arr.from_incidence(*incidence)
    return build(arrangement, DegreeOneFrame.standard(arrangement.N))


def curve_from_coefficients(fan, weighted):
    """Curve with one ray Σ c_k·u_k per nonzero coefficient vector c."""
    rays = [
        (1, vector_sum((fan.u(k).scaled(c) for k, c in enumerate(vector)), fan.N))
        for vector in weighted if any(vector)
    ]
    return FanCurve.from_rays(rays)


def plane_curve(kind, d, a, b):
    if kind == 1:
        return [(0, d, a, 0), (0, 0, b, d), (d, 0, d - a - b, 0)]
    if kind == 2:
        return [(0, d, a, 0), (0, 0, d - a, d - b), (d, 0, 0, b)]
    return [(0, a, b, 0), (0, d - a, d - b, 0), (d, 0, 0, d)]


def parameter_range(kind, d):
    for a in range(d + 1):
        for b in range(d + 1):
            if kind == 1 and a + b > d or kind == 3 and a >= b:
                continue
            yield a, b


class DegreeOneLineTestCase(SimpleTestCase):
    def test_line_through_two_points(self):
        fan = plane(UNIFORM)
        line = FanCurve.from_rays([(1, (1, 1, 0)), (1, (-1, -1, 0))])
        verdict = classify_trivalent(line, fan)
        self.assertEqual(verdict.status, Status.FINELY_APPROXIMABLE)
        self.assertEqual(verdict.case_tag, CaseTag.DEGREE_ONE_LINE)
        self.assertEqual(verdict.witness, "line through p_{1,2} and p_{0,3}")
        self.assertEqual(verdict.details["line"], [0, 1, 1])

    def test_generic_line(self):
        fan = plane(UNIFORM)
        line = FanCurve.from_rays([(1, (1, 1, 1)), (1, (-1, 0, 0)), (1, (0, -1, 0)),
                                   (1, (0, 0, -1))])
        verdict = classify_line(line, fan)
        self.assertEqual(verdict.status, Status.FINELY_APPROXIMABLE)
        self.assertEqual(verdict.witness, "generic line")

    def test_braid_double_points_are_not_on_a_line(self):
        """ u05 + u14 + u23 would need p05, p14 and p23 on one line """
        fan = plane(BRAID_LINES)
        curve = curve_from_coefficients(fan, [(1, 0, 0, 0, 0, 1), (0, 1, 0, 0, 1, 0),
                                              (0, 0, 1, 1, 0, 0)])
        verdict = classify_trivalent(curve, fan)
        self.assertEqual(verdict.status, Status.NOT_APPROXIMABLE)
        self.assertEqual(verdict.case_tag, CaseTag.DEGREE_ONE_LINE)
        self.assertIn("not collinear", verdict.reasons[0])

    def test_combinatorial_braid_is_conditional(self):
        fan = plane(incidence=(6, BRAID_POINTS))
        curve = curve_from_coefficients(fan, [(1, 0, 0, 0, 0, 1), (0, 1, 0, 0, 1, 0),
                                              (0, 0, 1, 1, 0, 0)])
        verdict = classify_trivalent(curve, fan)
        self.assertEqual(verdict.status, Status.CONDITIONALLY_APPROXIMABLE)
        self.assertIn("if these points are collinear", verdict.witness)

    def test_collinear_double_points(self):
        fan = plane(COLLINEAR_LINES)
        curve = curve_from_coefficients(fan, [(1, 1, 0, 0, 0, 0), (0, 0, 1, 1, 0, 0),
                                              (0, 0, 0, 0, 1, 1)])
        verdict = classify_trivalent(curve, fan)
        self.assertEqual(verdict.status, Status.FINELY_APPROXIMABLE)
        self.assertEqual(verdict.details["line"], [0, 0, 1])

    def test_degree_must_be_one(self):
        fan = plane(UNIFORM)
        with self.assertRaises(DegreeNotOne):
            classify_line(curve_from_coefficients(fan, plane_curve(2, 2, 1, 1)), fan)


class UniformPlaneTestCase(SimpleTestCase):
    def setUp(self):
        self.fan = plane(UNIFORM)

    def test_stable_intersection(self):
        curve = curve_from_coefficients(self.fan, plane_curve(1, 3, 1, 1))
        verdict = classify_trivalent(curve, self.fan)
        self.assertEqual(verdict.status, Status.FINELY_APPROXIMABLE)
        self.assertEqual(verdict.case_tag, CaseTag.STABLE_INTERSECTION)
        self.assertEqual(verdict.details["self_intersection"], 0)

    def test_conic_chain(self):
        curve = curve_from_coefficients(self.fan, plane_curve(2, 4, 1, 1))
        verdict = classify_trivalent(curve, self.fan)
        self.assertEqual(verdict.status, Status.FINELY_APPROXIMABLE)
        self.assertEqual(verdict.case_tag, CaseTag.CONIC_CHAIN)
        self.assertEqual(verdict.witness, "rational curve with 5 punctures")

    def test_plane_cycles_rule(self):
        curve = curve_from_coefficients(self.fan, plane_curve(2, 3, 2, 1))
        verdict = classify_trivalent(curve, self.fan)
        self.assertEqual(verdict.status, Status.NOT_APPROXIMABLE)
        self.assertEqual(verdict.case_tag, CaseTag.PLANE_CYCLES_RULE)
        self.assertEqual(verdict.details["self_intersection"], -2)

    def test_plane_curve_types_are_found_after_relabeling(self):
        vectors = [tuple(v[t] for t in (2, 0, 3, 1)) for v in plane_curve(3, 3, 1, 2)]
        curve = curve_from_coefficients(self.fan, vectors)
        self.assertIn((3, 3, 1, 2), plane_curve_types(curve, self.fan))

    def test_self_intersection_of_the_types(self):
        formulas = {
            1: lambda d, a, b: 0,
            2: lambda d, a, b: -a * b,
            3: lambda d, a, b: -d * d + b * d - a * d,
        }
        for kind, formula in formulas.items():
            for d in range(2, 9):
                for a, b in parameter_range(kind, d):
                    curve = curve_from_coefficients(self.fan, plane_curve(kind, d, a, b))
                    if curve.valence != 3 or not is_reduced(curve):
                        continue
                    with self.subTest(kind=kind, d=d, a=a, b=b):
                        self.assertEqual(self_intersection(curve, self.fan), formula(d, a, b))

    def test_approximable_exactly_when_self_intersection_is_zero_or_minus_one(self):
        for kind in (1, 2, 3):
            for d in range(2, 9):
                for a, b in parameter_range(kind, d):
                    curve = curve_from_coefficients(self.fan, plane_curve(kind, d, a, b))
                    if curve.valence not in (2, 3) or not is_reduced(curve):
                        continue
                    if not is_irreducible(curve):
                        continue
                    verdict = classify_trivalent(curve, self.fan)
                    square = self_intersection(curve, self.fan)
                    with self.subTest(kind=kind, d=d, a=a, b=b):
                        self.assertNotEqual(verdict.status, Status.OUT_OF_CLASSIFICATION)
                        self.assertEqual(verdict.approximable, square in (0, -1))

    def test_plane_cycles_check(self):
        verdict = plane_cycles_check(curve_from_coefficients(self.fan, plane_curve(2, 3, 2, 2)),
                                     self.fan)
        self.assertEqual(verdict.status, Status.NOT_APPROXIMABLE)
        self.assertEqual(verdict.details["self_intersection"], -4)
        verdict = plane_cycles_check(curve_from_coefficients(self.fan, plane_curve(2, 2, 1, 1)),
                                     self.fan)
        self.assertEqual(verdict.case_tag, CaseTag.CONIC_CHAIN)

    def test_four_rays(self):
        curve = FanCurve.from_rays([(1, (1, 1, 1)), (1, (-1, 0, 0)), (1, (0, -1, 0)),
                                    (1, (0, 0, -1))])
        with self.assertRaises(NotTrivalent):
            classify_trivalent(curve, self.fan)

    def test_reducible_curve(self):
        doubled = FanCurve.from_rays([(2, (1, 1, 0)), (2, (-1, -1, 0))])
        with self.assertRaises(ReducibleCurve):
            classify_trivalent(doubled, self.fan)
        with self.assertRaises(ReducibleCurve):
            plane_cycles_check(doubled, self.fan)


class NonUniformPlaneTestCase(SimpleTestCase):
    def test_trivalent_curves_are_approximable(self):
        fan = plane(incidence=(4, [{0, 1, 2}]))
        curve = curve_from_coefficients(fan, [(2, 1, 1, 0), (0, 1, 0, 2), (0, 0, 1, 0)])
        verdict = classify_trivalent(curve, fan)
        self.assertEqual(verdict.status, Status.FINELY_APPROXIMABLE)
        self.assertEqual(verdict.case_tag, CaseTag.NON_UNIFORM_R3)

    def test_alternative_frame_of_degree_one(self):
        """ Degree 2 in a sheared frame, a line through p_{12} in the standard one """
        arrangement = arr.from_incidence(4, [{0, 2, 3}])
        sheared = build(arrangement, DegreeOneFrame.build(
            LatticeSimplexN([(0, 0, 0), (-1, 0, 0), (0, 1, 0), (0, 0, 1)])
        ))
        curve = FanCurve.from_rays([(1, (1, 1, 1)), (1, (-1, -1, 0)), (1, (0, 0, -1))])
        plain = classify_trivalent(curve, sheared)
        self.assertEqual(plain.case_tag, CaseTag.NON_UNIFORM_R3)
        verdict = classify_trivalent(curve, sheared, [DegreeOneFrame.standard(3)])
        self.assertEqual(verdict.status, Status.FINELY_APPROXIMABLE)
        self.assertEqual(verdict.case_tag, CaseTag.DEGREE_ONE_LINE)
        self.assertEqual(verdict.details["frame"], 0)
        self.assertEqual(verdict.details["points"], [[1, 2]])


class ExceptionalConicTestCase(SimpleTestCase):
    def test_first_conic(self):
        fan = plane(UNIFORM + [(1, 0, 1)])
        curve = curve_from_coefficients(fan, [(1, 1, 0, 0, 0), (1, 0, 2, 0, 1), (0, 1, 0, 2, 1)])
        verdict = classify_trivalent(curve, fan)
        self.assertEqual(verdict.status, Status.FINELY_APPROXIMABLE)
        self.assertEqual(verdict.case_tag, CaseTag.EXCEPTIONAL_CONIC_1)

    def test_second_conic_with_tangent_line(self):
        fan = plane(UNIFORM + [(1, -1, 0)])
        curve = curve_from_coefficients(fan, [(1, 1, 0, 0, 2), (1, 0, 2, 0, 0), (0, 1, 0, 2, 0)])
        verdict = classify_trivalent(curve, fan)
        self.assertEqual(verdict.status, Status.FINELY_APPROXIMABLE)
        self.assertEqual(verdict.case_tag, CaseTag.EXCEPTIONAL_CONIC_2)
        self.assertEqual(verdict.details["tangent"], [1, -1, 0])

    def test_second_conic_without_tangent_line(self):
        fan = plane(UNIFORM + [(1, -2, 0)])
        curve = curve_from_coefficients(fan, [(1, 1, 0, 0, 2), (1, 0, 2, 0, 0), (0, 1, 0, 2, 0)])
        verdict = classify_trivalent(curve, fan)
        self.assertEqual(verdict.status, Status.NOT_APPROXIMABLE)
        self.assertEqual(verdict.case_tag, CaseTag.EXCEPTIONAL_CONIC_2)

    def test_second_conic_in_a_combinatorial_plane(self):
        fan = plane(incidence=(5, [{0, 1, 4}]))
        curve = curve_from_coefficients(fan, [(1, 1, 0, 0, 2), (1, 0, 2, 0, 0), (0, 1, 0, 2, 0)])
        verdict = classify_trivalent(curve, fan)
        self.assertEqual(verdict.status, Status.CONDITIONALLY_APPROXIMABLE)

    def test_third_conic(self):
        fan = plane(UNIFORM + [(1, 0, 1), (1, -1, 0)])
        curve = curve_from_coefficients(fan, [(1, 1, 0, 0, 0, 2), (1, 0, 2, 0, 1, 0),
                                              (0, 1, 0, 2, 1, 0)])
        verdict = classify_trivalent(curve, fan)
        self.assertEqual(verdict.status, Status.FINELY_APPROXIMABLE)
        self.assertEqual(verdict.case_tag, CaseTag.EXCEPTIONAL_CONIC_3)

    def test_tangent_conic(self):
        """ x² + xz − yz passes through p01 and touches L2, L3 at p02, p13 """
        conic = tangent_conic(arr.from_lines(UNIFORM + [(1, -1, 0)]), 0, 1, 2, 3)
        half = sympy.Rational(1, 2)
        expected = sympy.Matrix([[1, 0, half], [0, 0, -half], [half, -half, 0]])
        self.assertEqual(sympy.simplify(conic / conic[0, 0] - expected), sympy.zeros(3, 3))
        self.assertEqual(tangent_line_at(conic, (0, 0, 1)), arr.ProjLine([1, -1, 0]))

    def test_weighted_coefficients_are_sorted(self):
        fan = plane(UNIFORM + [(1, 0, 1)])
        curve = curve_from_coefficients(fan, [(1, 0, 2, 0, 1), (1, 1, 0, 0, 0), (0, 1, 0, 2, 1)])
        self.assertEqual(weighted_coefficients(curve, fan),
                         [(0, 1, 0, 2, 1), (1, 0, 2, 0, 1), (1, 1, 0, 0, 0)])


class ManyLinesTestCase(SimpleTestCase):
    def test_degree_two_with_seven_lines(self):
        fan = plane(incidence=(7, [{0, 1, 2, 3}]))
        rays = [
            (2, vector_sum((fan.u(k) for k in range(4)), 6)),
            (1, vector_sum((fan.u(4).scaled(2), fan.u(6)), 6)),
            (1, vector_sum((fan.u(5).scaled(2), fan.u(6)), 6)),
        ]
        curve = FanCurve.from_rays(rays)
        verdict = classify_trivalent(curve, fan)
        self.assertEqual(verdict.status, Status.NOT_APPROXIMABLE)
        self.assertEqual(verdict.case_tag, CaseTag.PLANE_CYCLES_RULE)
        self.assertEqual(plane_cycles_check(curve, fan).status, Status.NOT_APPROXIMABLE)
