# Native libraries
import unittest
# Project libraries
from brieskorn import brieskorn_tests
from brieskorn.classes.core.brieskorn_testcase import BrieskornTestCase, tag
from brieskorn.classes.core.test_runner_utils import TestRunnerUtils
from brieskorn.utilities.report_writer import flatten, output_document, render_csv, render_json, render_text
import brieskorn.config as config


def _sample_suite():
    """
    Builds a throwaway suite with one slow and two fast tests.
    The classes live inside the function so discovery never collects them.
    """
    @tag('slow')
    class SlowSample(unittest.TestCase):

        def test_sample(self):
            pass

    @tag('fast')
    class FastSample(unittest.TestCase):

        def test_sample(self):
            pass

        def test_other(self):
            pass

    loader = unittest.TestLoader()
    return unittest.TestSuite([loader.loadTestsFromTestCase(SlowSample), loader.loadTestsFromTestCase(FastSample)])


@tag('fast', 'runner')
class TestRunnerHelpers(BrieskornTestCase):

    def setUp(self):
        super().setUp()
        self._saved = (config.INCLUDE_TAG, config.EXCLUDE_TAG)

    def tearDown(self):
        config.INCLUDE_TAG, config.EXCLUDE_TAG = self._saved
        super().tearDown()

    def _suite(self):
        return _sample_suite()

    def test_default_exclusion_drops_slow(self):
        config.INCLUDE_TAG, config.EXCLUDE_TAG = None, None
        self.assertEqual(brieskorn_tests._filter_by_tags(self._suite()).countTestCases(), 2)

    def test_include_tag(self):
        config.INCLUDE_TAG, config.EXCLUDE_TAG = 'slow', None
        self.assertEqual(brieskorn_tests._filter_by_tags(self._suite()).countTestCases(), 1)

    def test_exclude_tag(self):
        config.INCLUDE_TAG, config.EXCLUDE_TAG = None, 'fast'
        self.assertEqual(brieskorn_tests._filter_by_tags(self._suite()).countTestCases(), 1)

    def test_single_test_name(self):
        self.assertEqual(brieskorn_tests._format_single_test_name('TestArith.test_gcd'),
                         'tests.test_arith.TestArith.test_gcd')
        self.assertEqual(brieskorn_tests._format_single_test_name('tests.test_cli.TestRun'),
                         'tests.test_cli.TestRun')

    def test_triples_by_product(self):
        self.assertEqual(self.coprime_triples_by_product(29), [])
        self.assertEqual(self.coprime_triples_by_product(42), [(2, 3, 5), (2, 3, 7)])
        for a, b, c in self.coprime_triples_by_product(500):
            self.assertLessEqual(a * b * c, 500)
        self.assertIn((5, 7, 11), self.coprime_triples_by_product(385))

    def test_totals(self):
        result = unittest.TestResult()
        self._suite().run(result)
        totals = TestRunnerUtils.get_testrun_totals(result)
        self.assertEqual(totals['total_testcases'], 3)
        self.assertEqual(totals['failed_testcases'], 0)
        self.assertEqual(totals['passed_percentage'], '100.0%')

    def test_empty_totals(self):
        with self.assertLogs('brieskorn.classes.core.test_runner_utils', level='WARNING'):
            totals = TestRunnerUtils.get_testrun_totals(unittest.TestResult())
        self.assertEqual(totals['passed_percentage'], '0.0%')

    def test_readable_run_time(self):
        self.assertEqual(TestRunnerUtils.get_readable_run_time(4354.2), '1h 12m 34s')
        self.assertEqual(TestRunnerUtils.get_readable_run_time(59), '59s')


@tag('fast', 'runner')
class TestReportWriter(BrieskornTestCase):

    def test_document_envelope(self):
        document = output_document(('analyze', '2', '3', '5'), {'d': 2})
        self.assertEqual(document, {'schema_version': config.SCHEMA_VERSION,
                                    'command': ['analyze', '2', '3', '5'], 'payload': {'d': 2}})
        self.assertTrue(render_json(document).endswith('}\n'))

    def test_flatten(self):
        payload = {'b': {'y': [1, 2], 'x': None}, 'a': True, 'rows': [{'k': 'v'}], 'empty': {}}
        self.assertEqual(flatten(payload), [('a', 'true'), ('b.x', 'null'), ('b.y', '[1, 2]'),
                                            ('empty', '{}'), ('rows.0.k', 'v')])
        self.assertEqual(render_text({'name': 'Σ(2,3,5)'}), 'name: Σ(2,3,5)\n')

    def test_csv_cells(self):
        text = render_csv(('a', 'b', 'c'), [{'a': True, 'b': None, 'c': 3, 'extra': 1}])
        self.assertEqual(text, 'a,b,c\ntrue,,3\n')


if __name__ == '__main__':
    unittest.main()
