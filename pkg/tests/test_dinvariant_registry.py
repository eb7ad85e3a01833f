# Native libraries
import unittest
# Project libraries
from brieskorn.classes.core.brieskorn_testcase import BrieskornTestCase, tag
from brieskorn.classes.dinvariant import registry
from brieskorn.classes.dinvariant.base_method import DInvariantMethod
from brieskorn.classes.topology.errors import BrieskornError, ConsistencyError
from brieskorn.classes.topology.floer import FAMILY_CLOSED_FORM, PLUMBING, SEMIGROUP
from brieskorn.classes.topology.seifert import BrieskornData


class FixedMethod(DInvariantMethod):

    def __init__(self, name, value, required=False):
        self.name = name
        self.value = value
        self.required = required

    def compute(self, context):
        return self.value


class NeverApplies(FixedMethod):

    def applies(self, context):
        return False


class FailingMethod(DInvariantMethod):
    name = 'failing'

    def compute(self, context):
        raise ConsistencyError('always fails')


@tag('fast', 'registry')
class TestRegistry(BrieskornTestCase):

    def test_defaults_in_reporting_order(self):
        names = [method.name for method in registry.get_methods()]
        self.assertEqual(names, [SEMIGROUP, FAMILY_CLOSED_FORM, PLUMBING])

    def test_clear_and_lazy_defaults(self):
        registry.clear()
        self.assertEqual(registry.get_methods(), [])
        result = registry.compute_all(BrieskornData((2, 3, 5)))
        self.assertEqual(result.methods, (PLUMBING, SEMIGROUP))
        self.assertEqual(len(registry.get_methods()), 3)

    def test_get_methods_returns_a_copy(self):
        registry.get_methods().clear()
        self.assertEqual(len(registry.get_methods()), 3)

    def test_applicable_methods_only(self):
        self.assertEqual(registry.compute_all(BrieskornData((2, 3, 7))).methods, (FAMILY_CLOSED_FORM, PLUMBING))
        self.assertEqual(registry.compute_all(BrieskornData((2, 3, 11))).methods, (PLUMBING,))

    def test_failing_optional_method_is_dropped(self):
        registry.register(FailingMethod())
        with self.assertLogs('brieskorn.classes.dinvariant.registry', level='WARNING'):
            result = registry.compute_all(BrieskornData((2, 3, 5)))
        self.assertNotIn('failing', result.by_method)
        self.assertTrue(result.agree)

    def test_failing_required_method_aborts(self):
        failing = FailingMethod()
        failing.required = True
        registry.register(failing)
        with self.assertRaises(ConsistencyError):
            registry.compute_all(BrieskornData((2, 3, 5)))

    def test_disagreement_prefers_plumbing(self):
        registry.register(FixedMethod('custom', 7))
        with self.assertLogs('brieskorn.classes.dinvariant.registry', level='ERROR'):
            result = registry.compute_all(BrieskornData((2, 3, 5)))
        self.assertFalse(result.agree)
        self.assertEqual(result.value, 2)
        self.assertEqual(result.by_method['custom'], 7)

    def test_custom_method_agreeing(self):
        registry.register(FixedMethod('custom', 2))
        result = registry.compute_all(BrieskornData((2, 3, 5)))
        self.assertTrue(result.agree)
        self.assertEqual(result.methods, ('custom', PLUMBING, SEMIGROUP))

    def test_no_applicable_method(self):
        registry.clear()
        registry.register(NeverApplies(PLUMBING, 0))
        with self.assertRaises(BrieskornError):
            registry.compute_all(BrieskornData((2, 3, 5)))

    def test_context_is_shared(self):
        b = BrieskornData((2, 3, 5))
        context = registry.build_context(b, margin=1, budget=10 ** 6)
        self.assertEqual(context['graph'].vertex_count, 8)
        self.assertEqual(context['family'].n, 1)
        self.assertEqual(registry.compute_all(b, context=context).value, 2)


if __name__ == '__main__':
    unittest.main()
