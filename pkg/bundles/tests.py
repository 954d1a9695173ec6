from fractions import Fraction

from django.test import SimpleTestCase, override_settings
from hypothesis import given, settings
from hypothesis import strategies as st

from k0.grothendieck import extension_bundle_class, line_bundle_class, rank
from lgroup.exceptions import InvalidInteriorError, UnsupportedWeightsError
from lgroup.grading import WeightTriple, WeightType, all_weight_triples
from lgroup.testing import elements, interiors as interior_strategy, weight_triples

from .extension import (
    ExtensionBundle,
    Stability,
    canonical_rep,
    injective_hull,
    interiors,
    is_auslander,
    iso_test,
    iso_test_general,
    klein_image,
    projective_cover,
    slope,
    stability,
    stable_iff_not_auslander,
)
from .serializers import ExtensionBundleInputSerializer, ExtensionBundleSerializer


def z_grid(w):
    """Twists sum a_i x_i + a c with 0 <= a_i <= p_i - 1 and -2 <= a <= 2."""
    return [
        w.normalize(a1, a2, a3, a)
        for a1 in range(w.p1)
        for a2 in range(w.p2)
        for a3 in range(w.p3)
        for a in range(-2, 3)
    ]


class ExtensionBundleTests(SimpleTestCase):
    def setUp(self):
        self.w = WeightTriple(2, 3, 7)

    def test_interior_bounds(self):
        with self.assertRaises(InvalidInteriorError):
            ExtensionBundle.of(self.w.x(1))
        with self.assertRaises(InvalidInteriorError):
            ExtensionBundle.of(self.w.c)
        ExtensionBundle.of(self.w.normalize(0, 1, 5))

    def test_interior_count(self):
        self.assertEqual(len(interiors(self.w)), 12)
        self.assertEqual(len(interiors(WeightTriple(2, 2, 2))), 1)

    def test_class_rank_and_degree(self):
        e = ExtensionBundle.of(self.w.zero)
        k = extension_bundle_class(e)
        self.assertEqual(rank(k), 2)
        self.assertEqual(e.rank, rank(k))
        self.assertEqual(k, line_bundle_class(self.w.omega()) + line_bundle_class(self.w.zero))
        self.assertEqual(e.degree, 1)
        self.assertEqual(slope(e), Fraction(1, 2))

    @given(weight_triples(7).flatmap(lambda w: st.tuples(interior_strategy(w), elements(w))))
    @settings(max_examples=100, deadline=None)
    def test_determinant_and_slope_twist(self, case):
        x, t = case
        e = ExtensionBundle.of(x)
        self.assertEqual(e.twisted(t).determinant, 2 * t + e.determinant)
        self.assertEqual(slope(e.twisted(t)), slope(e) + t.delta())
        self.assertEqual(e.degree, 2 * slope(e))


class IsoTestTests(SimpleTestCase):
    def setUp(self):
        self.w = WeightTriple(2, 3, 7)
        self.y0 = self.w.normalize(0, 1, 5)
        self.z0 = self.w.normalize(0, 1, 1, -1)

    def test_examples(self):
        w = self.w
        self.assertTrue(iso_test(w.zero, w.zero, w.zero))
        self.assertTrue(iso_test(w.zero, self.y0, self.z0))
        self.assertFalse(iso_test(w.zero, w.x(2), w.zero))

    def test_general(self):
        w = self.w
        e = ExtensionBundle.of(w.zero)
        self.assertTrue(iso_test_general(e, e))
        self.assertFalse(iso_test_general(e, ExtensionBundle.of(w.x(2))))

    @given(elements(WeightTriple(2, 3, 7)))
    @settings(max_examples=50, deadline=None)
    def test_witness_is_twist_equivariant(self, t):
        e = ExtensionBundle.of(self.w.zero, t)
        f = ExtensionBundle.of(self.y0, t + self.z0)
        self.assertTrue(iso_test_general(e, f))

    def test_closed_criterion_matches_classes(self):
        classes = {}

        def cls(x):
            if x not in classes:
                classes[x] = line_bundle_class(x)
            return classes[x]

        for w in all_weight_triples(4):
            grid = z_grid(w)
            for x in interiors(w):
                left = cls(w.omega()) + cls(x)
                for y in interiors(w):
                    for z in grid:
                        expected = left == cls(w.omega() + z) + cls(y + z)
                        self.assertEqual(iso_test(x, y, z), expected, (str(w), str(x), str(y), str(z)))

    @override_settings(ORACLE_CROSSCHECK=True)
    def test_crosscheck_mode(self):
        w = WeightTriple(2, 4, 6)
        bundles = [ExtensionBundle.of(x, t) for x in interiors(w) for t in (w.zero, w.x(2), -w.c)]
        for e in bundles[:12]:
            for f in bundles:
                iso_test_general(e, f)


class AuslanderTests(SimpleTestCase):
    def test_examples(self):
        w = WeightTriple(2, 3, 7)
        self.assertTrue(is_auslander(ExtensionBundle.of(w.zero)))
        self.assertTrue(is_auslander(ExtensionBundle.of(w.normalize(0, 1, 5))))
        self.assertFalse(is_auslander(ExtensionBundle.of(w.x(3))))

    def test_canonical_rep(self):
        w = WeightTriple(2, 3, 7)
        self.assertEqual(canonical_rep(ExtensionBundle.of(w.normalize(0, 1, 5))), w.zero)
        x = WeightTriple(2, 4, 6).normalize(0, 1, 2)
        self.assertEqual(klein_image(x, 1), x)

    def test_auslander_is_orbit_of_zero(self):
        for w in all_weight_triples(6):
            for x in interiors(w):
                e = ExtensionBundle.of(x)
                self.assertEqual(is_auslander(e), canonical_rep(e).is_zero())
                self.assertEqual(canonical_rep(ExtensionBundle.of(canonical_rep(e))), canonical_rep(e))


class CoverHullTests(SimpleTestCase):
    def setUp(self):
        self.w = WeightTriple(2, 3, 7)

    def test_auslander_cover_and_hull(self):
        w = self.w
        e = ExtensionBundle.of(w.zero)
        self.assertEqual(projective_cover(e), tuple(sorted([w.omega(), -w.x(1), -w.x(2), -w.x(3)], key=lambda x: x.key())))
        self.assertEqual(set(injective_hull(e)), {w.zero, w.xbar(1), w.xbar(2), w.xbar(3)})

    def test_isomorphic_bundles_share_cover(self):
        w = self.w
        e = ExtensionBundle.of(w.zero)
        f = ExtensionBundle.of(w.normalize(0, 1, 5), w.normalize(0, 1, 1, -1))
        self.assertEqual(projective_cover(e), projective_cover(f))
        self.assertEqual(injective_hull(e), injective_hull(f))

    def test_twist_equivariance(self):
        w = self.w
        e = ExtensionBundle.of(w.x(3))
        t = w.normalize(1, 2, 3, -1)
        self.assertEqual(projective_cover(e.twisted(t)), projective_cover(e).shifted(t))
        self.assertEqual(injective_hull(e.twisted(t)), injective_hull(e).shifted(t))

    def test_partitions_coincide(self):
        for w in all_weight_triples(4):
            twists = [w.normalize(a1, a2, a3, a) for a1 in range(w.p1) for a2 in range(w.p2) for a3 in range(w.p3) for a in (-1, 0)]
            bundles = [ExtensionBundle.of(x, t) for x in interiors(w) for t in twists]
            classes = [extension_bundle_class(e) for e in bundles]
            covers = [projective_cover(e) for e in bundles]
            hulls = [injective_hull(e) for e in bundles]
            # same number of blocks for each key and for each paired key means the partitions coincide
            blocks = len(set(classes))
            self.assertEqual(len(set(covers)), blocks, str(w))
            self.assertEqual(len(set(zip(classes, covers))), blocks, str(w))
            self.assertEqual(len(set(hulls)), blocks, str(w))
            self.assertEqual(len(set(zip(classes, hulls))), blocks, str(w))


class StabilityTests(SimpleTestCase):
    def test_examples(self):
        self.assertEqual(stability(ExtensionBundle.of(WeightTriple(3, 3, 3).x(1))), Stability.STABLE)
        self.assertEqual(stability(ExtensionBundle.of(WeightTriple(2, 3, 6).zero)), Stability.SEMISTABLE_NOT_STABLE)
        self.assertEqual(stability(ExtensionBundle.of(WeightTriple(2, 3, 7).zero)), Stability.NOT_SEMISTABLE)
        self.assertEqual(slope(ExtensionBundle.of(WeightTriple(3, 3, 3).x(1))), Fraction(1, 2))

    def test_tubular_tables(self):
        rules = {
            (3, 3, 3): lambda x: sum(x.coords) in (1, 3),
            (2, 3, 6): lambda x: x.l3 not in (0, 4),
            (2, 4, 4): lambda x: x.l2 == 1 or x.l3 == 1,
        }
        for weights, rule in rules.items():
            w = WeightTriple(*weights)
            for x in interiors(w):
                verdict = stability(ExtensionBundle.of(x))
                self.assertNotEqual(verdict, Stability.NOT_SEMISTABLE)
                self.assertEqual(verdict == Stability.STABLE, rule(x), (weights, x.coords))
            self.assertTrue(stable_iff_not_auslander(w))

    def test_trichotomy(self):
        for w in all_weight_triples(8):
            verdicts = {stability(ExtensionBundle.of(x)) for x in interiors(w)}
            kind = w.classify()
            if kind == WeightType.DOMESTIC:
                self.assertEqual(verdicts, {Stability.STABLE}, str(w))
            elif kind == WeightType.TUBULAR:
                self.assertNotIn(Stability.NOT_SEMISTABLE, verdicts, str(w))
            else:
                self.assertIn(Stability.NOT_SEMISTABLE, verdicts, str(w))

    def test_twist_invariance(self):
        w = WeightTriple(2, 4, 5)
        for x in interiors(w):
            e = ExtensionBundle.of(x)
            self.assertEqual(stability(e), stability(e.twisted(w.normalize(1, 3, 2, 5))))

    def test_non_tubular_rejected(self):
        with self.assertRaises(UnsupportedWeightsError):
            stable_iff_not_auslander(WeightTriple(2, 3, 7))


class SerializerTests(SimpleTestCase):
    def test_input(self):
        serializer = ExtensionBundleInputSerializer(data={'weights': '2,3,7', 'interior': 'x2+5x3', 'twist': 'x2+x3-c'})
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertEqual(serializer.validated_data['bundle'].interior.coords, (0, 1, 5))

    def test_invalid_input(self):
        serializer = ExtensionBundleInputSerializer(data={'weights': '2,3,7', 'interior': 'x1'})
        self.assertFalse(serializer.is_valid())
        self.assertIn('interior', serializer.errors)
        serializer = ExtensionBundleInputSerializer(data={'weights': '2,3', 'interior': '0'})
        self.assertFalse(serializer.is_valid())
        self.assertIn('weights', serializer.errors)

    def test_report(self):
        w = WeightTriple(2, 3, 7)
        data = ExtensionBundleSerializer(ExtensionBundle.of(w.zero)).data
        self.assertEqual(data['slope'], '1/2')
        self.assertEqual(data['stability'], 'not_semistable')
        self.assertTrue(data['auslander'])
        self.assertEqual(data['canonical_rep'], '0')
        self.assertEqual(data['rank'], 2)
        self.assertEqual(len(data['cover']), 4)
