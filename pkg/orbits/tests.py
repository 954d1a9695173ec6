from unittest import mock

from django.test import SimpleTestCase
from hypothesis import given, settings
from hypothesis import strategies as st

from bundles.extension import ExtensionBundle, iso_test_general
from lgroup.exceptions import CrossCheckError, TubularWeightError
from lgroup.grading import WeightTriple, all_weight_triples
from lgroup.quotient import omega_index
from lgroup.testing import elements, interiors, weight_triples

from .counting import (
    fixed_point_rule,
    fixed_point_scan,
    is_transitive,
    lifted_action_is_free,
    lifted_compose_check,
    partition_matches_iso,
    pic_orbit_count_burnside,
    pic_orbit_count_formula,
    pic_orbit_partition,
    raw_klein_relations_check,
    sigma_compatibility_check,
    sigma_compatibility_sample,
    tau_orbit_count_brute,
    tau_orbit_count_formula,
    tau_orbit_partition,
)
from .klein import ELEMENTS, InteriorSet, KleinAction
from .serializers import OrbitCountSerializer
from .unionfind import UnionFind, find_orbits


class UnionFindTests(SimpleTestCase):
    def test_blocks_are_ordered(self):
        uf = UnionFind(6)
        uf.union(4, 1)
        uf.union(5, 0)
        uf.union(1, 3)
        self.assertEqual(uf.blocks(), [(0, 5), (1, 3, 4), (2,)])
        self.assertEqual(len(uf), 3)

    def test_find_orbits(self):
        # rotation of a 6-cycle by 2 has two orbits
        self.assertEqual(find_orbits([None], 6, lambda g, i: (i + 2) % 6), [(0, 2, 4), (1, 3, 5)])


class KleinActionTests(SimpleTestCase):
    def test_interior_set_size(self):
        for w in all_weight_triples(6):
            self.assertEqual(len(InteriorSet(w)), w.interior_count())

    def test_compose_table(self):
        for i in ELEMENTS:
            self.assertEqual(KleinAction.compose(i, i), 0)
            self.assertEqual(KleinAction.compose(0, i), i)
            for j in ELEMENTS:
                self.assertEqual(KleinAction.compose(i, j), KleinAction.compose(j, i))
        self.assertEqual(KleinAction.compose(1, 2), 3)

    def test_raw_relations(self):
        for w in all_weight_triples(6):
            self.assertTrue(raw_klein_relations_check(w), str(w))

    def test_raw_compose_matches_table(self):
        w = WeightTriple(3, 4, 6)
        action = KleinAction(w)
        for x in InteriorSet(w):
            for i in ELEMENTS:
                for j in ELEMENTS:
                    self.assertEqual(action.sigma(i, action.sigma(j, x)), action.sigma(KleinAction.compose(i, j), x))

    def test_lifted_relations_hold_modulo_omega(self):
        for w in (WeightTriple(2, 3, 7), WeightTriple(2, 4, 6), WeightTriple(3, 3, 4), WeightTriple(2, 2, 5)):
            self.assertTrue(lifted_compose_check(w), str(w))


class PicOrbitTests(SimpleTestCase):
    def test_formula_examples(self):
        expected = {(2, 2, 2): 1, (2, 2, 3): 1, (2, 3, 3): 1, (2, 3, 7): 3, (2, 4, 6): 6, (2, 4, 7): 6, (3, 3, 3): 2}
        for weights, count in expected.items():
            self.assertEqual(pic_orbit_count_formula(WeightTriple(*weights)), count, weights)

    def test_fixed_points(self):
        self.assertEqual(fixed_point_scan(WeightTriple(2, 4, 6)), (1, 3, 5))
        self.assertEqual(fixed_point_scan(WeightTriple(2, 3, 7)), (0, 0, 0))
        self.assertEqual(fixed_point_scan(WeightTriple(3, 3, 3)), (0, 0, 0))
        self.assertEqual(pic_orbit_count_burnside(WeightTriple(3, 3, 3)), 2)

    def test_fixed_point_law(self):
        for w in all_weight_triples(8):
            self.assertEqual(fixed_point_scan(w), fixed_point_rule(w), str(w))

    def test_three_way_agreement(self):
        for w in all_weight_triples(8):
            partition = pic_orbit_partition(w)
            formula = pic_orbit_count_formula(w)
            self.assertEqual(pic_orbit_count_burnside(w), formula, str(w))
            self.assertEqual(partition.count, formula, str(w))
            self.assertEqual(sum(partition.sizes), w.interior_count())
            self.assertLessEqual(formula, w.interior_count())

    def test_partitions(self):
        p = pic_orbit_partition(WeightTriple(2, 3, 7))
        self.assertEqual(p.sizes, [4, 4, 4])
        p = pic_orbit_partition(WeightTriple(2, 2, 2))
        self.assertEqual(p.blocks, ((0,),))
        p = pic_orbit_partition(WeightTriple(2, 4, 6))
        self.assertEqual(p.count, 6)
        self.assertEqual(sum(p.sizes), 15)

    def test_partition_matches_iso(self):
        for w in all_weight_triples(5):
            self.assertTrue(partition_matches_iso(pic_orbit_partition(w)), str(w))

    def test_transitivity(self):
        transitive = [w for w in all_weight_triples(8) if is_transitive(w)]
        self.assertEqual([w.weights for w in transitive], [(2, 2, 2), (2, 2, 3), (2, 3, 3)])
        self.assertFalse(is_transitive(WeightTriple(3, 3, 3)))


class TauOrbitTests(SimpleTestCase):
    def test_formula_examples(self):
        self.assertEqual(tau_orbit_count_formula(WeightTriple(2, 3, 7)), 3)
        self.assertEqual(tau_orbit_count_formula(WeightTriple(2, 3, 5)), 2)
        self.assertEqual(tau_orbit_count_formula(WeightTriple(2, 4, 6)), 15)
        with self.assertRaisesMessage(TubularWeightError, 'tubular weight type'):
            tau_orbit_count_formula(WeightTriple(3, 3, 3))

    def test_brute_force(self):
        self.assertEqual(tau_orbit_count_brute(WeightTriple(2, 3, 7)), 3)
        self.assertEqual(tau_orbit_count_brute(WeightTriple(2, 4, 6)), 15)
        with self.assertRaises(TubularWeightError):
            tau_orbit_count_brute(WeightTriple(2, 4, 4))

    def test_agreement_and_freeness(self):
        for w in all_weight_triples(6):
            if w.is_tubular:
                continue
            partition = tau_orbit_partition(w)
            self.assertTrue(lifted_action_is_free(partition), str(w))
            self.assertEqual(partition.count, tau_orbit_count_formula(w), str(w))
            self.assertEqual(4 * partition.count, omega_index(w) * w.interior_count())

    def test_sigma_lifts_translate(self):
        w = WeightTriple(2, 3, 7)
        self.assertTrue(sigma_compatibility_check(w, w.zero, w.zero))
        # sigma_1 moves E<0> to E<x2+5x3>(-x1), which is E<0>(omega)
        self.assertTrue(iso_test_general(
            ExtensionBundle(-w.x(1), w.normalize(0, 1, 5)),
            ExtensionBundle(w.omega(), w.zero),
        ))

    @given(weight_triples(7).flatmap(lambda w: st.tuples(st.just(w), elements(w), interiors(w))))
    @settings(max_examples=100, deadline=None)
    def test_sigma_compatibility(self, case):
        w, t, x = case
        self.assertTrue(sigma_compatibility_check(w, t, x))

    def test_sampled_compatibility(self):
        self.assertEqual(sigma_compatibility_sample(WeightTriple(2, 4, 5), samples=30, seed=3), 0)

    def test_identity_action_is_caught(self):
        w = WeightTriple(2, 3, 7)
        with mock.patch.object(KleinAction, 'sigma', lambda self, j, x: x), \
                self.assertLogs('orbits', 'WARNING') as cm:
            self.assertFalse(sigma_compatibility_check(w, w.zero, w.zero))
            with self.assertRaises(CrossCheckError):
                pic_orbit_count_burnside(WeightTriple(2, 3, 3))
        self.assertIn('does not lift the translate', cm.output[0])
        self.assertIn('fixed points of 2,3,3', cm.output[-1])


class SerializerTests(SimpleTestCase):
    def test_pic_report(self):
        w = WeightTriple(2, 3, 7)
        report = {
            'weights': w,
            'formula': pic_orbit_count_formula(w),
            'burnside': pic_orbit_count_burnside(w),
            'partition': pic_orbit_partition(w),
        }
        data = OrbitCountSerializer(report).data
        self.assertEqual(data['count'], 3)
        self.assertEqual(data['method'], {'formula': 3, 'burnside': 3, 'brute': 3})
        self.assertNotIn('blocks', data)
        data = OrbitCountSerializer(report, context={'list': True}).data
        self.assertEqual(data['blocks'][0][0], '0')

    def test_tau_report(self):
        w = WeightTriple(2, 4, 6)
        report = {'weights': w, 'formula': tau_orbit_count_formula(w), 'partition': tau_orbit_partition(w)}
        data = OrbitCountSerializer(report, context={'list': True}).data
        self.assertEqual(data['method'], {'formula': 15, 'brute': 15})
        self.assertTrue(data['agree'])
        self.assertEqual(len(data['blocks']), 15)
        self.assertEqual(len(data['blocks'][0][0]), 2)
