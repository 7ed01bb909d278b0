import random
from itertools import permutations

import sympy
from django.test import SimpleTestCase

from tropical import arrangement as arr
from tropical.curve import FanCurve
from tropical.exceptions import (BadParameters, CurveNotInFan, EmptySupport, NonGenericLifts,
                                 SchemaError)
from tropical.lattice import LatticeSimplexN, LatticeVec, integer_det
from tropical.planefan import DegreeOneFrame, build
from tropical.surface import (LineKind, LineStatus, PairKind, Triangulation3, barycentric,
                              classify_cell_pair, find_pathological_pairs,
                              find_pathological_simplices, lattice_points, line_verdicts,
                              regular_subdivision, scan_summary, singularity_flag,
                              valid_parameters, vigeland_star)

TYPE_I = (
    [(3, 1, 0), (2, 1, 0), (3, 0, 1), (4, 0, 0)],
    [(0, 0, 1), (0, 1, 1), (3, 1, 0), (2, 1, 0)],
)
TYPE_II = (
    [(0, 0, 1), (0, 1, 2), (2, 1, 1), (3, 1, 0)],
    [(0, 0, 1), (3, 1, 0), (3, 0, 0), (1, 0, 1)],
)


def kuhn_lifts(d):
    """A strictly convex quadratic whose lower hull is the Kuhn triangulation of Δ_d."""
    def height(x, y, z):
        return x * x + y * y + z * z + (x + y) ** 2 + (y + z) ** 2 + (x + y + z) ** 2

    return {p: height(*p) for p in lattice_points(d)}


def pathological_cell(d, alpha, beta, gamma):
    return LatticeSimplexN([(0, 0, 0), (1, 0, 0), (0, d - alpha, alpha),
                            (d - beta - gamma, beta, gamma)])


def parameter_sweep(degrees):
    for d in degrees:
        for alpha in range(1, d):
            for beta in range(d):
                for gamma in range(d - beta):
                    if valid_parameters(d, alpha, beta, gamma):
                        yield d, alpha, beta, gamma


def single_cell(params):
    return Triangulation3(params[0], [pathological_cell(*params)])


class RegularSubdivisionTestCase(SimpleTestCase):
    def test_kuhn_triangulation(self):
        for d in (2, 3):
            with self.subTest(d=d):
                triangulation = regular_subdivision(d, kuhn_lifts(d))
                self.assertEqual(len(triangulation.cells), d ** 3)
                self.assertTrue(triangulation.is_unimodular)
                self.assertEqual(triangulation.volume_sum(), d ** 3)
                self.assertEqual(
                    sum(abs(integer_det(cell.edge_rows())) for cell in triangulation.cells), d ** 3
                )

    def test_constant_lifts(self):
        with self.assertRaises(NonGenericLifts):
            regular_subdivision(2, {p: 0 for p in lattice_points(2)})

    def test_empty_support(self):
        with self.assertRaises(EmptySupport):
            regular_subdivision(2, {})

    def test_missing_corner(self):
        lifts = kuhn_lifts(2)
        del lifts[(0, 0, 0)]
        with self.assertRaises(SchemaError):
            regular_subdivision(2, lifts)

    def test_point_outside_the_simplex(self):
        lifts = kuhn_lifts(2)
        lifts[(3, 0, 0)] = 1
        with self.assertRaises(SchemaError):
            regular_subdivision(2, lifts)

    def test_random_rational_lifts_tile_the_simplex(self):
        rng = random.Random(314159)
        for d in (2, 3):
            for _ in range(3):
                lifts = {
                    p: sympy.Rational(rng.randint(-10 ** 6, 10 ** 6), rng.randint(1, 10 ** 3))
                    for p in lattice_points(d)
                }
                triangulation = regular_subdivision(d, lifts)
                self.assertEqual(triangulation.volume_sum(), d ** 3)
                self.assertEqual(
                    triangulation.is_unimodular,
                    all(abs(integer_det(cell.edge_rows())) == 1 for cell in triangulation.cells),
                )

    def test_from_cells_checks_the_volume(self):
        with self.assertRaises(SchemaError):
            Triangulation3.from_cells(2, [pathological_cell(3, 2, 0, 1).vertices])
        cells = regular_subdivision(2, kuhn_lifts(2)).cells
        self.assertEqual(len(Triangulation3.from_cells(2, [c.vertices for c in cells]).cells), 8)


class PathologicalSimplexTestCase(SimpleTestCase):
    def test_parameters_are_recovered(self):
        for params in parameter_sweep(range(3, 9)):
            with self.subTest(params=params):
                found = find_pathological_simplices(single_cell(params))
                self.assertEqual(len(found), 1)
                self.assertEqual(found[0].params, params)

    def test_parameters_do_not_depend_on_the_coordinate_order(self):
        params = (5, 2, 1, 1)
        self.assertTrue(valid_parameters(*params))
        d = params[0]
        cell = pathological_cell(*params)
        for sigma in permutations(range(4)):
            vertices = []
            for vertex in cell.vertices:
                coordinates = barycentric(vertex, d)
                vertices.append(tuple(coordinates[sigma[t]] for t in range(3)))
            found = find_pathological_simplices(Triangulation3(d, [LatticeSimplexN(vertices)]))
            self.assertEqual([s.params for s in found], [params], msg=f"{sigma}")

    def test_interior_cell(self):
        cell = LatticeSimplexN([(1, 1, 1), (2, 1, 1), (1, 2, 1), (1, 1, 2)])
        self.assertEqual(find_pathological_simplices(Triangulation3(4, [cell])), [])

    def test_face_assignment(self):
        found = find_pathological_simplices(single_cell((3, 2, 0, 1)))[0]
        assignment = found.face_assignment
        self.assertEqual(set(assignment), {"F_i∩F_j", "F_k", "F_l"})
        named = {assignment["F_k"], assignment["F_l"], *assignment["F_i∩F_j"]}
        self.assertEqual(named, {"F_x", "F_y", "F_z", "F_w"})


class VigelandStarTestCase(SimpleTestCase):
    def test_star_rays(self):
        star = vigeland_star((3, 2, 0, 1))
        self.assertEqual(star.rays, (
            LatticeVec.of(0, 2, -1), LatticeVec.of(0, -1, 0),
            LatticeVec.of(-1, -4, 2), LatticeVec.of(1, 3, -1),
        ))

    def test_lines_of_the_family(self):
        star = vigeland_star((4, 3, 0, 1))
        self.assertEqual(star.line(0).valence, 4)
        self.assertEqual(star.line(2).valence, 3)
        position, rays = star.second_vertex(2)
        self.assertEqual(position, (0, -2, -2))
        self.assertTrue(sum(rays, LatticeVec.zero(3)).is_zero())

    def test_bad_parameters(self):
        for params in ((3, 1, 0, 1), (2, 1, 1, 1), (3, 2, 0, 0)):
            with self.assertRaises(BadParameters):
                vigeland_star(params)

    def test_every_valid_star_satisfies_the_relations(self):
        for params in parameter_sweep(range(3, 9)):
            self.assertEqual(vigeland_star(params).params, params)


class LineVerdictTestCase(SimpleTestCase):
    def test_the_approximable_family(self):
        root, member = line_verdicts(single_cell((3, 2, 0, 1)))
        self.assertEqual((root.line_kind, root.l, root.status),
                         (LineKind.FAMILY_MEMBER, 0, LineStatus.APPROXIMABLE))
        self.assertEqual(root.evidence["adjunction"], 0)
        self.assertEqual(root.evidence["self_intersection"], -1)
        self.assertTrue(root.applicable)
        self.assertEqual((member.l, member.status), (1, LineStatus.NOT_APPROXIMABLE))

    def test_obstructions_vanish_in_degree_four(self):
        root, _ = line_verdicts(single_cell((4, 3, 0, 1)))
        self.assertEqual(root.evidence["adjunction"], 0)
        self.assertEqual(root.evidence["hessian"], 0)
        self.assertEqual(root.status, LineStatus.NOT_APPROXIMABLE)
        self.assertIn("d = 4", root.reasons[0])

    def test_hessian_obstructs_in_degree_five(self):
        root, _ = line_verdicts(single_cell((5, 4, 0, 1)))
        self.assertEqual(root.evidence["hessian"], -1)
        self.assertIn("Hessian bound H = -1 is negative", root.reasons)

    def test_family_sweep(self):
        for params in parameter_sweep(range(3, 9)):
            d, _, beta, gamma = params
            with self.subTest(params=params):
                root, member = line_verdicts(single_cell(params))
                self.assertEqual(root.evidence["adjunction"], -(d - 1) * (beta + gamma - 1))
                self.assertEqual(root.evidence["self_intersection"], -(beta + gamma) * (d - 1) + 1)
                self.assertEqual(root.status is LineStatus.APPROXIMABLE, params == (3, 2, 0, 1))
                self.assertEqual(member.status, LineStatus.NOT_APPROXIMABLE)
                if beta + gamma > 1:
                    self.assertIsNone(root.evidence["hessian"])


class PathologicalPairTestCase(SimpleTestCase):
    def test_type_one(self):
        first, second = (LatticeSimplexN(c) for c in TYPE_I)
        pair = classify_cell_pair(first, second, 4)
        self.assertEqual(pair.kind, PairKind.TYPE_I)
        self.assertEqual(pair.shared_edge, ((2, 1, 0), (3, 1, 0)))

    def test_type_two(self):
        first, second = (LatticeSimplexN(c) for c in TYPE_II)
        pair = classify_cell_pair(first, second, 4)
        self.assertEqual(pair.kind, PairKind.TYPE_II)
        self.assertEqual(len(pair.extra), 3)

    def test_cells_sharing_a_vertex(self):
        first = LatticeSimplexN(TYPE_I[0])
        other = LatticeSimplexN([(3, 0, 0), (4, 0, 0), (1, 1, 0), (2, 0, 1)])
        self.assertIsNone(classify_cell_pair(first, other, 4))

    def test_pairs_give_isolated_lines(self):
        triangulation = Triangulation3(4, [LatticeSimplexN(c) for c in TYPE_I])
        self.assertEqual(find_pathological_simplices(triangulation), [])
        self.assertTrue(find_pathological_pairs(triangulation))
        verdicts = line_verdicts(triangulation)
        self.assertTrue(verdicts)
        for verdict in verdicts:
            self.assertEqual(verdict.line_kind, LineKind.ISOLATED)
            self.assertEqual(verdict.status, LineStatus.NOT_APPROXIMABLE)
        self.assertEqual(scan_summary(triangulation, verdicts).pathological_pairs, len(verdicts))


class SingularityFlagTestCase(SimpleTestCase):
    def test_flag_on_family_roots(self):
        star = vigeland_star((3, 2, 0, 1))
        self.assertFalse(singularity_flag(star.line(0), star.fan, 3))
        star = vigeland_star((3, 1, 1, 1))
        self.assertTrue(singularity_flag(star.line(0), star.fan, 3))

    def test_generic_line_in_a_uniform_plane(self):
        fan = build(arr.from_incidence(4, []), DegreeOneFrame.standard(3))
        line = FanCurve.from_rays([(1, (1, 1, 1)), (1, (-1, 0, 0)), (1, (0, -1, 0)),
                                   (1, (0, 0, -1))])
        self.assertFalse(singularity_flag(line, fan, 1))

    def test_line_outside_the_star(self):
        star = vigeland_star((3, 2, 0, 1))
        line = FanCurve.from_rays([(1, (1, 0, 0)), (1, (-1, 0, 0))])
        with self.assertRaises(CurveNotInFan):
            singularity_flag(line, star.fan, 3)


class ScanSummaryTestCase(SimpleTestCase):
    def test_single_approximable_cell(self):
        summary = scan_summary(single_cell((3, 2, 0, 1)))
        self.assertEqual(summary.cells, 1)
        self.assertEqual(summary.pathological_simplices, 1)
        self.assertEqual(summary.pathological_pairs, 0)
        self.assertEqual(summary.approximable_lines, 1)

    def test_kuhn_triangulation(self):
        summary = scan_summary(regular_subdivision(2, kuhn_lifts(2)))
        self.assertEqual((summary.cells, summary.unimodular), (8, True))
        self.assertEqual(summary.approximable_lines, 0)
