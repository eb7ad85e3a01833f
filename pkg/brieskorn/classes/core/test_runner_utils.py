# Project libraries
from brieskorn.utilities.utils import setup_logger
import brieskorn.config as config

logger = setup_logger(__name__, config.DEBUG_LEVEL)


class TestRunnerUtils:
    """
    Helpers for summarizing test runs and timing long batch jobs
    """

    @staticmethod
    def get_testrun_totals(results):
        """
        Generates consolidated test case execution statistics from a unittest result

        Example output:

            .. code-block:: python

                totals = {
                    'total_testcases': 12,
                    'passed_testcases': 11,
                    'failed_testcases': 1,
                    'skipped_testcases': 0,
                    'passed_percentage': '91.7%',
                    'failed_percentage': '8.3%'
                }

        :param results: Result object returned by a unittest runner
        :type results: unittest.TestResult
        :return: Consolidated statistics dictionary
        :rtype: dict
        """
        skipped = len(results.skipped)
        failed = len(results.failures) + len(results.errors) + len(getattr(results, 'unexpectedSuccesses', []))
        total = results.testsRun - skipped
        passed = total - failed

        totals = {
            'total_testcases': total,
            'passed_testcases': passed,
            'failed_testcases': failed,
            'skipped_testcases': skipped,
            'passed_percentage': '0.0%',
            'failed_percentage': '0.0%',
        }
        if total:
            totals['passed_percentage'] = '{:.1f}%'.format(passed / total * 100)
            totals['failed_percentage'] = '{:.1f}%'.format(failed / total * 100)
        else:
            logger.warning('No test cases were run')
        return totals

    @staticmethod
    def get_readable_run_time(run_time):
        """
        Converts a duration to human-readable format (e.g., 1h 12m 34s)

        :param run_time: Duration in seconds
        :return: Formatted duration string
        :rtype: str
        """
        result = ''
        # Extract hours component (floor division)
        if run_time // 3600 > 0:
            result += '{}h '.format(int(run_time // 3600))
        run_time %= 3600
        if run_time // 60 > 0:
            result += '{}m '.format(int(run_time // 60))
        run_time %= 60
        result += '{}s'.format(int(run_time))
        return result
