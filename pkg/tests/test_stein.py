# Native libraries
import unittest
# Project libraries
from brieskorn.classes.core.brieskorn_testcase import BrieskornTestCase, tag
from brieskorn.classes.topology.errors import CoprimalityError, UnsupportedFramingError
from brieskorn.classes.topology.plumbing import PlumbingGraph, build_plumbing
from brieskorn.classes.topology.seifert import BrieskornData, brieskorn_family, seifert_invariants
from brieskorn.classes.topology.stein import (LegendrianCount, RotEnumeration, RotProfile, enumerate_rot_vectors,
                                              rot_profile, torus_legendrian_count)


def _graph(b):
    return build_plumbing(seifert_invariants(b))


@tag('fast', 'stein')
class TestRotationVectors(BrieskornTestCase):

    def test_e8_has_only_the_zero_vector(self):
        profile = rot_profile(_graph(BrieskornData((2, 3, 5))))
        self.assertEqual(profile.ranges, ((0,),) * 8)
        self.assertEqual(profile.total_count, 1)
        self.assertTrue(profile.zero_exists)

    def test_ranges_by_weight(self):
        profile = rot_profile(PlumbingGraph(-2, ((-3,), (-4,), (-5,))))
        self.assertEqual(profile.ranges, ((0,), (-1, 1), (-2, 0, 2), (-3, -1, 1, 3)))
        self.assertEqual(profile.total_count, 24)
        self.assertFalse(profile.zero_exists)
        self.assertEqual(RotProfile.from_dict(profile.to_dict()), profile)

    def test_minus_one_center_is_unsupported(self):
        with self.assertRaises(UnsupportedFramingError):
            rot_profile(_graph(BrieskornData((2, 3, 7))))

    def test_no_zero_vector_for_larger_n(self):
        for p, q in self.coprime_pairs(2, 7):
            for n in (2, 3):
                self.assertFalse(rot_profile(_graph(brieskorn_family(p, q, n, -1))).zero_exists)

    def test_enumeration_is_lexicographic(self):
        graph = PlumbingGraph(-2, ((-3,), (-4,)))
        enumeration = enumerate_rot_vectors(graph, limit=10)
        self.assertFalse(enumeration.truncated)
        self.assertEqual(enumeration.vectors, ((0, -1, -2), (0, -1, 0), (0, -1, 2), (0, 1, -2), (0, 1, 0),
                                               (0, 1, 2)))
        self.assertEqual(RotEnumeration.from_dict(enumeration.to_dict()), enumeration)

    def test_enumeration_truncates(self):
        graph = PlumbingGraph(-2, ((-3,), (-4,)))
        enumeration = enumerate_rot_vectors(graph, limit=4)
        self.assertTrue(enumeration.truncated)
        self.assertEqual(len(enumeration.vectors), 4)
        self.assertEqual(enumeration.total_count, 6)


@tag('fast', 'stein')
class TestLegendrianCount(BrieskornTestCase):

    def test_trefoil(self):
        count = torus_legendrian_count(2, 3)
        self.assertEqual(count, LegendrianCount(1, 2, (-1, 1)))
        self.assertEqual(LegendrianCount.from_dict(count.to_dict()), count)

    def test_counts_over_grid(self):
        for p, q in self.coprime_pairs(2, 9):
            count = torus_legendrian_count(p, q)
            self.assertEqual(count.tb_max, p * q - p - q)
            self.assertEqual(len(count.rot_values), count.count)

    def test_rejects_common_factor(self):
        with self.assertRaises(CoprimalityError):
            torus_legendrian_count(2, 4)


if __name__ == '__main__':
    unittest.main()
