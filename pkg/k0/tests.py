from unittest import mock

from django.test import SimpleTestCase, override_settings
from hypothesis import given, settings
from hypothesis import strategies as st

from lgroup.exceptions import CrossCheckError
from lgroup.grading import WeightTriple, all_weight_triples
from lgroup.testing import weight_triples, weights_with_elements

from . import grothendieck
from .grothendieck import (
    K0Basis,
    K0Class,
    degree,
    determinant,
    line_bundle_class,
    pair_sum_equal,
    rank,
)
from .serializers import K0ClassSerializer, K0ReportSerializer


def _bounded(w):
    """Elements 0 <= x <= 2c."""
    coords = st.tuples(*(st.integers(0, p_i - 1) for p_i in w.weights), st.integers(0, 1))
    return coords.map(lambda t: w.normalize(*t)).filter(lambda x: (2 * w.c - x).is_nonneg())


class BasisTests(SimpleTestCase):
    def test_dimension(self):
        self.assertEqual(len(K0Basis.for_weights(WeightTriple(2, 3, 7))), 11)
        for w in all_weight_triples(6):
            self.assertEqual(len(K0Basis.for_weights(w)), sum(w.weights) - 1)

    def test_labels(self):
        labels = K0Basis.for_weights(WeightTriple(2, 3, 7)).labels
        self.assertEqual(labels[:4], ['O', 'O(x1)', 'O(x2)', 'O(2x2)'])
        self.assertEqual(labels[-1], 'O(c)')

    def test_basis_elements_between_zero_and_c(self):
        w = WeightTriple(2, 4, 6)
        for x in K0Basis.for_weights(w).elements:
            self.assertTrue(x.is_nonneg())
            self.assertTrue(x.leq(w.c))


class LineBundleClassTests(SimpleTestCase):
    def setUp(self):
        self.w = WeightTriple(2, 3, 7)
        self.basis = K0Basis.for_weights(self.w)

    def test_structure_sheaf(self):
        k = line_bundle_class(self.w.zero)
        self.assertEqual(k.coeffs, (1,) + (0,) * 10)

    def test_c(self):
        k = line_bundle_class(self.w.c)
        self.assertEqual(k.coeffs, (0,) * 10 + (1,))

    def test_omega(self):
        k = line_bundle_class(self.w.omega())
        expected = [0] * 11
        expected[self.basis.index_of(1, 1)] = 1
        expected[self.basis.index_of(2, 2)] = 1
        expected[self.basis.index_of(3, 6)] = 1
        expected[self.basis.c_index] = -2
        self.assertEqual(k.coeffs, tuple(expected))

    def test_linear_forms(self):
        self.assertEqual(degree(line_bundle_class(self.w.c)), 42)
        self.assertEqual(determinant(line_bundle_class(self.w.omega())), self.w.omega())

    @given(weights_with_elements(1))
    @settings(max_examples=100, deadline=None)
    def test_rank_degree_determinant_of_line_bundles(self, case):
        w, x = case
        k = line_bundle_class(x)
        self.assertEqual(rank(k), 1)
        self.assertEqual(degree(k), x.delta())
        self.assertEqual(determinant(k), x)

    @given(weights_with_elements(1))
    @settings(max_examples=50, deadline=None)
    def test_twist_by_c(self, case):
        w, x = case
        k = line_bundle_class(x + w.c)
        self.assertEqual(k - line_bundle_class(x), line_bundle_class(w.c) - line_bundle_class(w.zero))

    @given(weight_triples(7).flatmap(lambda w: st.lists(st.integers(-3, 3), min_size=len(K0Basis.for_weights(w)), max_size=len(K0Basis.for_weights(w))).map(lambda cs: K0Class(w, tuple(cs)))))
    @settings(max_examples=100, deadline=None)
    def test_degree_is_degree_of_determinant(self, k):
        self.assertEqual(degree(k), determinant(k).delta())


class PairSumTests(SimpleTestCase):
    def setUp(self):
        self.w = WeightTriple(2, 3, 7)

    def test_symmetry(self):
        a, b = self.w.x(2), self.w.omega()
        self.assertTrue(pair_sum_equal(a, b, b, a))

    def test_isomorphism_witness(self):
        w = self.w
        y0 = w.normalize(0, 1, 5)
        z0 = w.normalize(0, 1, 1, -1)
        self.assertTrue(pair_sum_equal(w.omega(), w.zero, w.omega() + z0, y0 + z0))

    def test_different_multisets(self):
        self.assertFalse(pair_sum_equal(self.w.x(1), self.w.zero, self.w.x(2), self.w.zero))

    @given(weight_triples(6).flatmap(lambda w: st.tuples(*[_bounded(w)] * 4)))
    @settings(max_examples=300, deadline=None)
    def test_closed_criterion_matches_classes(self, quad):
        x, y, z, u = quad
        oracle = line_bundle_class(x) + line_bundle_class(y) == line_bundle_class(z) + line_bundle_class(u)
        self.assertEqual(pair_sum_equal(x, y, z, u), oracle)

    @override_settings(ORACLE_CROSSCHECK=True)
    def test_crosscheck_detects_broken_criterion(self):
        w = self.w
        with mock.patch.object(grothendieck, '_pair_multisets_agree', return_value=False):
            with self.assertRaises(CrossCheckError):
                pair_sum_equal(w.x(1), w.zero, w.x(1), w.zero)


class SerializerTests(SimpleTestCase):
    def test_class_payload(self):
        w = WeightTriple(2, 3, 7)
        data = K0ClassSerializer(line_bundle_class(w.zero)).data
        self.assertEqual(len(data['basis']), 11)
        self.assertEqual(data['coeffs'][0], 1)

    def test_report_payload(self):
        w = WeightTriple(2, 3, 7)
        data = K0ReportSerializer(line_bundle_class(w.omega())).data
        self.assertEqual(data['rank'], 1)
        self.assertEqual(data['degree'], 1)
        self.assertEqual(data['determinant'], 'x1+2x2+6x3-2c')
