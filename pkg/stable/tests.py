from django.test import SimpleTestCase
from hypothesis import given, settings
from hypothesis import strategies as st

from bundles.extension import ExtensionBundle, interiors, iso_test_general
from lgroup.exceptions import UnsupportedTiltingError, UnsupportedWeightsError
from lgroup.grading import WeightTriple, all_weight_triples
from lgroup.testing import elements, weight_triples

from .quiver import COMMUTATIVITY, ZERO_X, ZERO_Y, build_quiver, quiver_shape_check, shape, to_dot
from .serializers import TiltingReportSerializer
from .suspension import (
    auslander_hom_dim,
    axis_independence_check,
    boundary_suspension,
    boundary_suspension_check,
    desuspend,
    double_suspension_check,
    hom_degrees,
    shift,
    suspend,
    suspension_is_x1_twist_check,
    t1_shift_decomposition,
    t1_shift_decomposition_check,
)
from .tilting import (
    TiltingKind,
    build_tilting,
    check_extension_free,
    end_dimension,
    summands_pairwise_distinct,
)


def two_p_q(max_weight):
    return [WeightTriple(2, p, q) for p in range(2, max_weight + 1) for q in range(2, max_weight + 1)]


class SuspensionTests(SimpleTestCase):
    def setUp(self):
        self.w = WeightTriple(2, 3, 7)

    def test_first_axis_for_weight_two(self):
        e = ExtensionBundle.of(self.w.x(2))
        self.assertEqual(suspend(e, 1), ExtensionBundle(self.w.x(1), self.w.x(2)))

    def test_boundary(self):
        for w in all_weight_triples(6):
            self.assertTrue(boundary_suspension_check(w), str(w))
        self.assertEqual(boundary_suspension(self.w, 3), ExtensionBundle(6 * self.w.x(3), self.w.zero))

    def test_desuspend_inverts(self):
        for x in interiors(self.w):
            e = ExtensionBundle.of(x, self.w.x(3))
            for i in (1, 2, 3):
                self.assertEqual(desuspend(suspend(e, i), i), e)
                self.assertEqual(shift(shift(e, 3, i), -3, i), e)

    def test_laws(self):
        for w in all_weight_triples(5):
            self.assertTrue(axis_independence_check(w), str(w))
            self.assertTrue(double_suspension_check(w), str(w))

    def test_twist_by_x1(self):
        self.assertTrue(suspension_is_x1_twist_check(self.w))
        self.assertTrue(suspension_is_x1_twist_check(WeightTriple(2, 2, 2)))
        with self.assertRaises(UnsupportedWeightsError):
            suspension_is_x1_twist_check(WeightTriple(3, 3, 3))

    @given(weight_triples(6).flatmap(lambda w: st.tuples(st.sampled_from(interiors(w)), elements(w), st.integers(1, 3))))
    @settings(max_examples=100, deadline=None)
    def test_suspension_commutes_with_twist(self, case):
        x, t, i = case
        e = ExtensionBundle.of(x)
        self.assertEqual(suspend(e.twisted(t), i), suspend(e, i).twisted(t))
        self.assertTrue(iso_test_general(suspend(e, i), suspend(e, 1)))


class StableHomTests(SimpleTestCase):
    def setUp(self):
        self.w = WeightTriple(2, 3, 7)

    def test_auslander_hom(self):
        w = self.w
        self.assertEqual(auslander_hom_dim(w.zero), 1)
        self.assertEqual(auslander_hom_dim(w.xbar(2)), 1)
        self.assertEqual(auslander_hom_dim(w.c), 0)

    def test_hom_degrees(self):
        w = self.w
        self.assertEqual(hom_degrees(w.xbar(1), w.xbar(1)), {0})
        self.assertEqual(hom_degrees(w.zero, w.xbar(3)), {0})
        self.assertEqual(hom_degrees(w.zero, 2 * w.xbar(3)), set())
        self.assertEqual(hom_degrees(w.zero, -w.x(1)), {1})
        with self.assertRaises(UnsupportedWeightsError):
            hom_degrees(WeightTriple(3, 3, 4).zero, WeightTriple(3, 3, 4).zero)

    def test_hom_degrees_agree_with_scan(self):
        w = WeightTriple(2, 4, 5)
        x1 = w.x(1)
        for d in (w.zero, w.xbar(2), w.c, w.normalize(1, 3, 2, -4), -w.xbar(1)):
            scanned = {n for n in range(-30, 31) if auslander_hom_dim(d + n * x1)}
            self.assertEqual(hom_degrees(w.zero, d), scanned, str(d))

    @given(elements(WeightTriple(2, 5, 6)))
    @settings(max_examples=60, deadline=None)
    def test_shift_decomposition(self, x):
        base, n = t1_shift_decomposition(x)
        self.assertEqual(base.l1, 0)
        self.assertEqual(base.l, 0)
        self.assertTrue(t1_shift_decomposition_check(x))


class TiltingTests(SimpleTestCase):
    def test_sizes(self):
        self.assertEqual(len(build_tilting(WeightTriple(2, 3, 3), 't1')), 4)
        self.assertEqual(len(build_tilting(WeightTriple(2, 3, 7), 'cub')), 12)
        self.assertEqual(len(build_tilting(WeightTriple(2, 3, 7), 't1')), 12)
        self.assertEqual(len(build_tilting(WeightTriple(2, 8, 8), TiltingKind.T1)), 49)

    def test_preconditions(self):
        with self.assertRaises(UnsupportedWeightsError):
            build_tilting(WeightTriple(3, 3, 3), 't1')
        with self.assertRaises(UnsupportedTiltingError):
            build_tilting(WeightTriple(2, 3, 3), 't3')
        cub = build_tilting(WeightTriple(2, 3, 7), 'cub')
        with self.assertRaisesMessage(UnsupportedTiltingError, 'unsupported: requires general Hom formula'):
            check_extension_free(cub)
        with self.assertRaises(UnsupportedTiltingError):
            build_quiver(cub)

    def test_extension_free_grids(self):
        for w in two_p_q(8):
            for kind in ('t1', 't2'):
                tilting = build_tilting(w, kind)
                certificate = check_extension_free(tilting)
                self.assertTrue(certificate.extension_free, (str(w), kind, certificate.violations[:3]))
                self.assertEqual(certificate.pairs_checked, len(tilting) ** 2)
                self.assertTrue(summands_pairwise_distinct(tilting), (str(w), kind))

    def test_cuboid_summands_distinct(self):
        self.assertTrue(summands_pairwise_distinct(build_tilting(WeightTriple(3, 4, 5), 'cub')))

    def test_end_dimension(self):
        self.assertEqual(end_dimension(build_tilting(WeightTriple(2, 3, 3), 't1')), 9)
        self.assertEqual(end_dimension(build_tilting(WeightTriple(2, 3, 3), 't2')), 9)
        self.assertEqual(end_dimension(build_tilting(WeightTriple(2, 3, 7), 't1')), 33)
        self.assertEqual(end_dimension(build_tilting(WeightTriple(2, 2, 2), 't1')), 1)
        for w in two_p_q(7):
            self.assertEqual(end_dimension(build_tilting(w, 't1')), end_dimension(build_tilting(w, 't2')), str(w))


class QuiverTests(SimpleTestCase):
    def test_small_grid(self):
        quiver = build_quiver(build_tilting(WeightTriple(2, 3, 3), 't1'))
        self.assertEqual(shape(quiver), (4, 2, 2, 1))
        self.assertEqual(quiver.relation_count(ZERO_X), 0)

    def test_grid_237(self):
        quiver = build_quiver(build_tilting(WeightTriple(2, 3, 7), 't1'))
        self.assertEqual(shape(quiver), (12, 10, 6, 5))
        self.assertEqual(quiver.relation_count(ZERO_X), 8)
        self.assertEqual(quiver.relation_count(ZERO_Y), 0)

    def test_sheared_grid(self):
        w = WeightTriple(2, 3, 3)
        quiver = build_quiver(build_tilting(w, 't2'))
        arrows = {(a.source, a.target, a.label) for a in quiver.arrows}
        self.assertEqual(arrows, {
            ((0, 0), (0, 1), 'y'),
            ((1, 0), (1, 1), 'y'),
            ((0, 1), (1, 0), 'x'),
        })
        self.assertEqual(w.xbar(1), w.xbar(2) + w.xbar(3))

    def test_shapes(self):
        for w in two_p_q(8):
            for kind in ('t1', 't2'):
                quiver = build_quiver(build_tilting(w, kind))
                self.assertTrue(quiver_shape_check(quiver), (str(w), kind, shape(quiver)))

    def test_zero_relations_are_witnessed(self):
        w = WeightTriple(2, 5, 6)
        quiver = build_quiver(build_tilting(w, 't1'))
        p, q = w.p2, w.p3
        self.assertEqual(quiver.relation_count(ZERO_X), (q - 3) * (p - 1))
        self.assertEqual(quiver.relation_count(ZERO_Y), (q - 1) * (p - 3))
        self.assertEqual(quiver.relation_count(COMMUTATIVITY), (q - 2) * (p - 2))

    def test_dot(self):
        quiver = build_quiver(build_tilting(WeightTriple(2, 3, 3), 't1'))
        dot = to_dot(quiver)
        self.assertTrue(dot.startswith('digraph "t1(2,3,3)" {'))
        self.assertIn('"v_0_0" -> "v_1_0" [label="x"];', dot)
        self.assertIn('"v_0_0" -> "v_0_1" [label="y"];', dot)
        self.assertIn('// xy-yx at v_0_0', dot)
        self.assertEqual(dot.count(' -> '), 4)
        self.assertEqual(dot, to_dot(build_quiver(build_tilting(WeightTriple(2, 3, 3), 't1'))))


class SerializerTests(SimpleTestCase):
    def test_grid_report(self):
        report = TiltingReportSerializer.collect(build_tilting(WeightTriple(2, 3, 3), 't1'))
        data = TiltingReportSerializer(report).data
        self.assertTrue(data['extension_free'])
        self.assertEqual(data['end_dim'], 9)
        self.assertEqual(len(data['vertices']), 4)
        self.assertEqual(len(data['arrows']), 4)
        self.assertEqual(data['relations'], ['xy-yx at v_0_0'])
        self.assertEqual(data['derived_equivalent'], ['cub', 't1', 't2'])

    def test_cuboid_report(self):
        report = TiltingReportSerializer.collect(build_tilting(WeightTriple(2, 3, 7), 'cub'))
        data = TiltingReportSerializer(report).data
        self.assertIsNone(data['extension_free'])
        self.assertEqual(len(data['summands']), 12)
        self.assertEqual(data['note'], 'unsupported: requires general Hom formula')
