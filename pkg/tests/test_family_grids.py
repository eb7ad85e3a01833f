# Native libraries
import unittest
from fractions import Fraction
from math import gcd
# Project libraries
from brieskorn.classes.core.brieskorn_testcase import BrieskornTestCase, tag
from brieskorn.classes.topology.arith import eval_cont_frac, mod_inverse_pair, neg_cont_frac
from brieskorn.classes.topology.floer import (alpha, alpha_closed_form, d_invariant_plumbing, d_torus_surgery_minus,
                                              reduced_kernel_degrees, semigroup_profile, stein_grading_from_plumbing)
from brieskorn.classes.topology.lattice import characteristic_search, diagonalize, max_char_square
from brieskorn.classes.topology.plumbing import build_plumbing, form_properties, intersection_matrix
from brieskorn.classes.topology.seifert import BrieskornData, brieskorn_family, seifert_invariants
from brieskorn.classes.topology.stein import rot_profile, torus_legendrian_count


def _graph(b):
    return build_plumbing(seifert_invariants(b))


@tag('slow', 'grid')
class TestFamilyGrids(BrieskornTestCase):

    def test_plus_family_has_zero_d(self):
        for p, q in self.coprime_pairs(2, 20):
            if p * q > 40:
                continue
            for n in (1, 2, 3):
                b = brieskorn_family(p, q, n, 1)
                self.assertEqual(d_invariant_plumbing(_graph(b)).value, 0, b.label)

    def test_minus_family_methods_agree(self):
        for p, q in self.coprime_pairs(2, 30):
            if p * q > 60:
                continue
            b = brieskorn_family(p, q, 1, -1)
            self.assertEqual(d_invariant_plumbing(_graph(b)).value, d_torus_surgery_minus(p, q), b.label)

    def test_long_leg_expansion(self):
        for p, q in self.coprime_pairs(2, 12):
            for n in range(1, 6):
                long_leg = _graph(brieskorn_family(p, q, n, -1)).legs[-1]
                expected = (-2,) * (p * q - 2)
                if n > 1:
                    expected += (-3,) + (-2,) * (n - 2)
                self.assertEqual(long_leg, expected, (p, q, n))

    def test_closed_form_expansion(self):
        for p in range(2, 13):
            for k in range(1, 8):
                expansion = neg_cont_frac(-Fraction(p * k + 1, (p - 1) * k + 1))
                self.assertEqual(expansion.coefficients, (2,) * (p - 1) + (k + 1,), (p, k))

    def test_closed_form_alpha_and_degrees(self):
        for p in (2, 4, 6, 8):
            for k in (1, 3, 5, 7):
                q = p * k + 1
                profile = semigroup_profile(p, q)
                top = alpha(profile, profile.genus - 1)
                self.assertEqual(top, alpha_closed_form(p, k), (p, k))
                for degree in reduced_kernel_degrees(p, q):
                    self.assertGreater(degree, -2 * top, (p, k))

    def test_zero_rotation_grading(self):
        for p in (2, 4):
            for k in (1, 3):
                graph = _graph(brieskorn_family(p, p * k + 1, 1, -1))
                form = intersection_matrix(graph)
                self.assertEqual(form.b2, p * (p * k + 2))
                self.assertTrue(rot_profile(graph).zero_exists)
                grading = stein_grading_from_plumbing(form, [0] * form.b2)
                self.assertExactlyEqual(grading.h, Fraction(-p * (p * k + 2), 4))

    def test_no_zero_rotation_for_larger_n(self):
        for p, q in self.coprime_pairs(2, 8):
            for n in (2, 3, 4):
                graph = _graph(brieskorn_family(p, q, n, -1))
                self.assertIn(-3, graph.legs[-1])
                self.assertFalse(rot_profile(graph).zero_exists)

    def test_legendrian_counts(self):
        self.assertEqual(torus_legendrian_count(2, 3).count, 2)
        for p, q in self.coprime_pairs(2, 11):
            self.assertEqual(torus_legendrian_count(p, q).tb_max, p * q - p - q)


@tag('slow', 'grid')
class TestFormGrids(BrieskornTestCase):

    def test_diagonalizability_coherence(self):
        for triple in self.pairwise_coprime_triples(2, 13):
            graph = _graph(BrieskornData(triple))
            form = intersection_matrix(graph)
            maximum = max_char_square(form)
            diagonal = diagonalize(form).diagonalizable
            self.assertEqual(diagonal, maximum == -form.b2, triple)
            if (maximum + form.b2) // 4 == 0:
                self.assertTrue(diagonal, triple)

    def test_zero_rotation_iff_even(self):
        for triple in self.pairwise_coprime_triples(2, 17):
            graph = _graph(BrieskornData(triple))
            if graph.center_weight >= -1:
                continue
            form = intersection_matrix(graph)
            profile = rot_profile(graph)
            self.assertEqual(profile.zero_exists, form_properties(form).even, triple)
            if profile.zero_exists:
                grading = stein_grading_from_plumbing(form, [0] * form.b2)
                self.assertExactlyEqual(grading.h, Fraction(-form.b2, 4), triple)


def _round_trip_denominators(r):
    """
    Every s below r for small r; for larger r the ends of the range plus an evenly spaced sample
    """
    if r <= 300:
        candidates = range(1, r)
    else:
        candidates = set(range(1, r, max(1, r // 20))) | {1, r // 2 + 1}
        if r <= 2000:
            candidates.add(r - 1)
    return sorted(s for s in candidates if gcd(r, s) == 1)


@tag('slow', 'grid')
class TestBoundedProductGrids(BrieskornTestCase):

    def test_forms_are_unimodular_and_definite(self):
        for triple in self.coprime_triples_by_product(5000):
            properties = form_properties(intersection_matrix(_graph(BrieskornData(triple))))
            self.assertTrue(properties.negative_definite, triple)
            self.assertEqual(abs(properties.determinant), 1, triple)

    def test_diagonalizable_exactly_when_maximum_is_minus_rank(self):
        for triple in self.coprime_triples_by_product(2000):
            form = intersection_matrix(_graph(BrieskornData(triple)))
            self.assertEqual(diagonalize(form).diagonalizable, max_char_square(form) == -form.b2, triple)

    def test_wider_box_keeps_maximum(self):
        for triple in self.coprime_triples_by_product(2000):
            form = intersection_matrix(_graph(BrieskornData(triple)))
            narrow = characteristic_search(form, margin=0)
            wide = characteristic_search(form, margin=2)
            self.assertEqual(wide.maximum, narrow.maximum, triple)
            self.assertEqual(wide.margin, 2)

    def test_d_is_nonnegative_and_even(self):
        for triple in self.coprime_triples_by_product(2000):
            value = d_invariant_plumbing(_graph(BrieskornData(triple))).value
            self.assertIsInstance(value, int)
            self.assertGreaterEqual(value, 0, triple)
            self.assertEqual(value % 2, 0, triple)

    def test_mod_inverse_against_brute_force(self):
        for p, q in self.coprime_pairs(2, 200):
            p_star = next(x for x in range(1, q) if p * x % q == 1)
            q_star = next(x for x in range(1, p) if q * x % p == 1)
            self.assertEqual(mod_inverse_pair(p, q), (p_star, q_star), (p, q))
            self.assertEqual(mod_inverse_pair(q, p), (q_star, p_star), (q, p))

    def test_continued_fraction_round_trip(self):
        for r in range(2, 10 ** 4 + 1):
            for s in _round_trip_denominators(r):
                value = Fraction(-r, s)
                expansion = neg_cont_frac(value)
                self.assertTrue(all(a >= 2 for a in expansion.coefficients), value)
                self.assertEqual(eval_cont_frac(expansion), value)


if __name__ == '__main__':
    unittest.main()
