# Native libraries
import unittest
# Project libraries
from brieskorn.classes.core.brieskorn_testcase import BrieskornTestCase, tag
from brieskorn.classes.topology.elimination import dense_determinant, factorize
from brieskorn.classes.topology.errors import InputValidationError
from brieskorn.classes.topology.plumbing import (IntersectionForm, PlumbingGraph, bad_vertices, build_plumbing,
                                                 form_properties, intersection_matrix, to_dot)
from brieskorn.classes.topology.seifert import BrieskornData, brieskorn_family, seifert_invariants


def _graph(*multiplicities):
    return build_plumbing(seifert_invariants(BrieskornData.from_values(multiplicities)))


@tag('fast', 'plumbing')
class TestPlumbingGraph(BrieskornTestCase):

    def test_e8_plumbing(self):
        graph = _graph(2, 3, 5)
        self.assertEqual(graph.center_weight, -2)
        self.assertEqual(graph.legs, ((-2,), (-2, -2), (-2, -2, -2, -2)))
        self.assertEqual(graph.vertex_count, 8)
        self.assertEqual(bad_vertices(graph), [0])

    def test_no_bad_vertices(self):
        self.assertEqual(bad_vertices(PlumbingGraph(-3, ((-2,), (-2,), (-2,)))), [])
        self.assertEqual(bad_vertices(PlumbingGraph(-2, ((-2,), (-2, -2)))), [])

    def test_sigma_2_3_7_plumbing(self):
        graph = _graph(2, 3, 7)
        self.assertEqual(graph.center_weight, -1)
        self.assertEqual(graph.legs, ((-2,), (-3,), (-7,)))
        self.assertEqual(bad_vertices(graph), [0])

    def test_vertex_ids_and_edges(self):
        graph = PlumbingGraph(-2, ((-2,), (-3, -2)))
        self.assertEqual(graph.vertex_ids(), ['v0', 'L0_0', 'L1_0', 'L1_1'])
        self.assertEqual(graph.edges(), [(0, 1), (0, 2), (2, 3)])
        self.assertEqual(graph.valences(), [2, 1, 2, 1])
        self.assertEqual(PlumbingGraph.from_dict(graph.to_dict()), graph)

    def test_graph_validation(self):
        with self.assertRaises(InputValidationError):
            PlumbingGraph(0, ((-2,),))
        with self.assertRaises(InputValidationError):
            PlumbingGraph(-2, ((-1,),))
        with self.assertRaises(InputValidationError):
            PlumbingGraph(-2, ((),))

    def test_to_dot(self):
        dot = to_dot(_graph(2, 3, 5))
        self.assertTrue(dot.startswith('graph plumbing {\n'))
        self.assertTrue(dot.endswith('}\n'))
        self.assertEqual(dot.count('[label='), 8)
        self.assertEqual(dot.count(' -- '), 7)
        self.assertIn('  v0 [label="-2"];', dot)
        self.assertIn('  L2_2 -- L2_3;', dot)


@tag('fast', 'plumbing')
class TestIntersectionForm(BrieskornTestCase):

    def test_e8_properties(self):
        form = intersection_matrix(_graph(2, 3, 5))
        self.assertSymmetric(form.matrix)
        properties = form_properties(form)
        self.assertTrue(properties.negative_definite)
        self.assertTrue(properties.even)
        self.assertEqual(properties.determinant, 1)
        self.assertEqual(properties.b2, 8)

    def test_every_brieskorn_plumbing_is_negative_definite_unimodular(self):
        for triple in self.pairwise_coprime_triples(2, 11):
            properties = form_properties(intersection_matrix(_graph(*triple)))
            self.assertTrue(properties.negative_definite, triple)
            self.assertEqual(abs(properties.determinant), 1, triple)

    def test_family_plumbings(self):
        for p, q in self.coprime_pairs(2, 7):
            for sign in (-1, 1):
                b = brieskorn_family(p, q, 2, sign)
                properties = form_properties(intersection_matrix(build_plumbing(seifert_invariants(b))))
                self.assertTrue(properties.negative_definite, b.label)
                self.assertEqual(abs(properties.determinant), 1, b.label)

    def test_indefinite_and_degenerate_forms(self):
        hyperbolic = IntersectionForm(((0, 1), (1, 0)))
        properties = form_properties(hyperbolic)
        self.assertFalse(properties.negative_definite)
        self.assertEqual(properties.determinant, -1)
        self.assertTrue(properties.even)
        self.assertFalse(form_properties(IntersectionForm(((-1, 0), (0, 1)))).negative_definite)

    def test_empty_form(self):
        properties = form_properties(IntersectionForm(()))
        self.assertTrue(properties.negative_definite)
        self.assertEqual(properties.determinant, 1)
        self.assertEqual(properties.b2, 0)

    def test_form_validation(self):
        with self.assertRaises(InputValidationError):
            IntersectionForm(((-2, 1), (0, -2)))
        with self.assertRaises(InputValidationError):
            IntersectionForm(((-2, 1),))

    def test_factorization_agrees_with_dense_determinant(self):
        for triple in [(2, 3, 5), (2, 3, 7), (2, 5, 9), (3, 4, 11), (2, 3, 5, 7)]:
            form = intersection_matrix(_graph(*triple))
            factorization = factorize(form.matrix)
            self.assertEqual(factorization.determinant(), dense_determinant(form.matrix))
            self.assertEqual(factorization.rank, form.b2)

    def test_pairing(self):
        form = IntersectionForm.diagonal_form([-1, -2])
        self.assertEqual(form.pairing((1, 1), (1, 0)), -1)
        self.assertEqual(form.square((1, 1)), -3)
        self.assertEqual(IntersectionForm.from_dict(form.to_dict()), form)


if __name__ == '__main__':
    unittest.main()
