from django.test import SimpleTestCase
from hypothesis import given, settings
from hypothesis import strategies as st

from .exceptions import (
    ElementSyntaxError,
    InfiniteQuotientError,
    InvalidWeightsError,
    TubularWeightError,
    WeightMismatchError,
)
from .grading import WeightTriple, WeightType, all_weight_triples
from .parsing import parse_element, parse_weights
from .quotient import (
    coset_reps_mod_omega,
    in_z_omega,
    omega_index,
    omega_presentation,
    reduce_mod_omega,
    snf_quotient_order,
)
from .serializers import LElementSerializer, WeightTripleField, WeightTripleSerializer
from .testing import elements, non_tubular_weight_triples, weights_with_elements


class WeightTripleTests(SimpleTestCase):
    def test_rejects_small_weights(self):
        with self.assertRaises(InvalidWeightsError):
            WeightTriple(1, 3, 7)

    def test_lcm(self):
        self.assertEqual(WeightTriple(2, 3, 7).p, 42)
        self.assertEqual(WeightTriple(2, 4, 6).p, 12)

    def test_classify(self):
        self.assertEqual(WeightTriple(2, 3, 5).classify(), WeightType.DOMESTIC)
        self.assertEqual(WeightTriple(2, 3, 6).classify(), WeightType.TUBULAR)
        self.assertEqual(WeightTriple(3, 3, 3).classify(), WeightType.TUBULAR)
        self.assertEqual(WeightTriple(2, 3, 7).classify(), WeightType.WILD)

    def test_delta_omega(self):
        self.assertEqual(WeightTriple(2, 3, 7).delta_omega(), 1)
        self.assertEqual(WeightTriple(2, 3, 6).delta_omega(), 0)
        self.assertEqual(WeightTriple(2, 2, 2).delta_omega(), -1)


class LElementTests(SimpleTestCase):
    def setUp(self):
        self.w = WeightTriple(2, 3, 7)

    def test_normalize_carries(self):
        self.assertEqual(self.w.normalize(2, 0, 0, 0).key(), (0, 0, 0, 1))
        self.assertEqual(self.w.normalize(-1, 0, 0).key(), (1, 0, 0, -1))

    def test_omega(self):
        self.assertEqual(self.w.omega().key(), (1, 2, 6, -2))
        self.assertEqual(WeightTriple(2, 2, 2).omega().key(), (1, 1, 1, -2))
        self.assertEqual(WeightTriple(2, 2, 2).omega().delta(), -1)

    def test_negation(self):
        self.assertEqual((-self.w.x(3)).key(), (0, 0, 6, -1))

    def test_xbar(self):
        self.assertEqual(self.w.xbar(2).key(), (1, 0, 6, -1))

    def test_degrees(self):
        self.assertEqual(self.w.x(1).delta(), 21)
        self.assertEqual(self.w.x(2).delta(), 14)
        self.assertEqual(self.w.x(3).delta(), 6)
        self.assertEqual(self.w.c.delta(), 42)

    def test_order(self):
        self.assertFalse(self.w.omega().is_nonneg())
        self.assertTrue(self.w.x(2).leq(self.w.x(2) + self.w.x(3)))
        self.assertFalse(self.w.x(2).leq(self.w.x(3)))

    def test_text_form(self):
        self.assertEqual(str(self.w.zero), '0')
        self.assertEqual(str(-self.w.c), '-c')
        self.assertEqual(str(self.w.normalize(1, 2, 6, -2)), 'x1+2x2+6x3-2c')

    def test_mixed_weights(self):
        with self.assertRaises(WeightMismatchError):
            self.w.x(1) + WeightTriple(2, 3, 8).x(1)

    @given(weights_with_elements(3))
    @settings(max_examples=150, deadline=None)
    def test_group_laws(self, case):
        w, a, b, e = case
        self.assertEqual(a + b, b + a)
        self.assertEqual((a + b) + e, a + (b + e))
        self.assertEqual(a + w.zero, a)
        self.assertTrue((a - a).is_zero())
        self.assertEqual((a + b).delta(), a.delta() + b.delta())

    @given(weights_with_elements(1))
    @settings(max_examples=100, deadline=None)
    def test_normalize_idempotent(self, case):
        w, a = case
        self.assertEqual(w.normalize(*a.key()), a)

    @given(weights_with_elements(1))
    @settings(max_examples=100, deadline=None)
    def test_nonnegative_elements_have_nonnegative_witness(self, case):
        w, a = case
        if a.is_nonneg():
            self.assertEqual(w.normalize(a.l1 + a.l * w.p1, a.l2, a.l3), a)
            self.assertGreaterEqual(a.delta(), 0)


class ParsingTests(SimpleTestCase):
    def setUp(self):
        self.w = WeightTriple(2, 3, 7)

    def test_weights(self):
        self.assertEqual(parse_weights('2,3,7'), self.w)
        self.assertEqual(parse_weights(' 2, 3 ,7 '), self.w)
        for bad in ('2,3', 'a,b,c', '1,3,7', '2,3,7,8'):
            with self.assertRaises(InvalidWeightsError):
                parse_weights(bad)

    def test_elements(self):
        self.assertEqual(parse_element(self.w, 'w'), self.w.omega())
        self.assertEqual(parse_element(self.w, '2x2 + 4x3 - c'), self.w.normalize(0, 2, 4, -1))
        self.assertEqual(parse_element(self.w, '-3*w+x1'), self.w.x(1) - 3 * self.w.omega())
        self.assertEqual(parse_element(self.w, '(2,0,0,0)'), self.w.c)
        self.assertEqual(parse_element(self.w, '0'), self.w.zero)

    def test_bad_elements(self):
        for bad in ('', 'x4', '2x2 3x3', 'x1+', 'y'):
            with self.assertRaises(ElementSyntaxError):
                parse_element(self.w, bad)

    @given(weights_with_elements(1))
    @settings(max_examples=100, deadline=None)
    def test_text_form_parses_back(self, case):
        w, a = case
        self.assertEqual(parse_element(w, str(a)), a)
        self.assertEqual(parse_element(w, a.quadruple()), a)


class QuotientTests(SimpleTestCase):
    def test_omega_multiples(self):
        w = WeightTriple(2, 3, 7)
        self.assertEqual(in_z_omega(w.xbar(1)), 22)
        # [L : Z*omega] = 1 here, so x1 is itself a multiple of omega
        self.assertEqual(in_z_omega(w.x(1)), 21)
        self.assertIsNone(in_z_omega(WeightTriple(2, 4, 6).x(1)))

    def test_tubular_rejected(self):
        with self.assertRaises(TubularWeightError):
            in_z_omega(WeightTriple(2, 3, 6).x(1))
        with self.assertRaises(TubularWeightError):
            coset_reps_mod_omega(WeightTriple(2, 4, 4))

    def test_snf(self):
        self.assertEqual(snf_quotient_order([[1, 0], [0, 1]]), 1)
        self.assertEqual(snf_quotient_order([[2, 0], [0, 3]]), 6)
        self.assertEqual(snf_quotient_order(omega_presentation(WeightTriple(2, 3, 7))), 1)
        with self.assertRaises(InfiniteQuotientError):
            snf_quotient_order([[1, 2], [2, 4]])

    def test_coset_counts(self):
        self.assertEqual(len(coset_reps_mod_omega(WeightTriple(2, 3, 7))), 1)
        self.assertEqual(len(coset_reps_mod_omega(WeightTriple(2, 4, 6))), 4)
        self.assertEqual(len(coset_reps_mod_omega(WeightTriple(2, 3, 5))), 1)

    def test_coset_count_matches_index_formula(self):
        for w in all_weight_triples(8):
            if w.is_tubular:
                continue
            with self.subTest(weights=str(w)):
                reps = coset_reps_mod_omega(w)
                self.assertEqual(len(reps), omega_index(w))
                self.assertEqual(len(set(reps)), len(reps))

    def test_coset_reps_are_pairwise_inequivalent(self):
        w = WeightTriple(2, 4, 6)
        reps = coset_reps_mod_omega(w)
        self.assertEqual(len(reps), 4)
        for r in reps:
            for s in reps:
                if r != s:
                    self.assertIsNone(in_z_omega(r - s), (str(r), str(s)))

    @given(non_tubular_weight_triples(7).flatmap(lambda w: st.tuples(st.just(w), elements(w))))
    @settings(max_examples=100, deadline=None)
    def test_reduction_is_canonical(self, case):
        w, a = case
        reduced = reduce_mod_omega(a)
        self.assertIsNotNone(in_z_omega(a - reduced))
        self.assertEqual(reduce_mod_omega(a + w.omega()), reduced)
        self.assertIn(reduced, coset_reps_mod_omega(w))


class SerializerTests(SimpleTestCase):
    def test_weight_report(self):
        data = WeightTripleSerializer(WeightTriple(2, 3, 7)).data
        self.assertEqual(data['weights'], '2,3,7')
        self.assertEqual(data['weight_type'], 'wild')
        self.assertEqual(data['omega_index'], 1)
        self.assertEqual(data['xbar'][1], 'x1+6x3-c')

    def test_tubular_report(self):
        data = WeightTripleSerializer(WeightTriple(2, 3, 6)).data
        self.assertEqual(data['delta_omega'], 0)
        self.assertIsNone(data['omega_index'])

    def test_element_report(self):
        w = WeightTriple(2, 3, 7)
        data = LElementSerializer(w.omega()).data
        self.assertEqual(data['normal_form'], '(1,2,6,-2)')
        self.assertEqual(data['omega_multiple'], 1)
        self.assertFalse(data['nonnegative'])

    def test_weight_field(self):
        field = WeightTripleField()
        self.assertEqual(field.to_internal_value([2, 3, 7]), WeightTriple(2, 3, 7))
