"""
Batch evaluation of obstruction reports over the families the command line can scan
"""
# Native libraries
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
from math import gcd
from typing import Tuple
# Project libraries
from brieskorn.classes.core.test_runner_utils import TestRunnerUtils
from brieskorn.classes.topology.errors import InputValidationError
from brieskorn.classes.topology.floer import FAMILY_CLOSED_FORM, PLUMBING, SEMIGROUP
from brieskorn.classes.topology.obstruct import analyze
from brieskorn.classes.topology.seifert import BrieskornData, brieskorn_family
from brieskorn.utilities.utils import ascii_label, setting, setup_logger
import brieskorn.config as config

logger = setup_logger(__name__, config.DEBUG_LEVEL)

#: Scan families and the ranges each one reads
FAMILY_RANGES = {
    'pq-minus': ('p', 'q', 'n'),
    'pq-plus': ('p', 'q', 'n'),
    'prop31-3': ('p', 'k'),
    'flmn': ('d',),
}

#: Fixed CSV header of a scan
SCAN_HEADER = ('multiplicities', 'd_semigroup', 'd_plumbing', 'd_family_closed_form', 'agree', 'diagonalizable',
               'strongly_suitable', 'reason', 'min_b2', 'alpha_g_minus_1', 'alpha_closed_form')


@dataclass(frozen=True)
class ScanSpec:
    family: str
    p: Tuple[int, ...] = ()
    q: Tuple[int, ...] = ()
    n: Tuple[int, ...] = (1,)
    k: Tuple[int, ...] = ()
    d: Tuple[int, ...] = ()


def parse_range(text, name):
    """
    Parses an inclusive range ``a:b`` or a list ``a,b,c``. An empty string or a reversed range is empty.

    :param text: Range text
    :type text: str
    :param name: Parameter name used in error messages
    :type name: str
    :rtype: tuple[int, ...]
    :raises InputValidationError: If the text is not a range or a list of integers
    """
    text = text.strip()
    if not text:
        return ()
    try:
        if ':' in text:
            low, high = (int(part) for part in text.split(':'))
            return tuple(range(low, high + 1))
        return tuple(int(part) for part in text.split(','))
    except ValueError:
        raise InputValidationError('Range for {} must look like a:b or a,b,c, got {!r}'.format(name, text))


def instances(spec):
    """
    Expands a scan specification into Brieskorn data in a fixed order.
    Pairs with p >= q or gcd(p, q) != 1, and prop31-3 entries with p odd or k even, are skipped.

    :param spec: Scan specification
    :type spec: ScanSpec
    :rtype: list[BrieskornData]
    """
    if spec.family not in FAMILY_RANGES:
        raise InputValidationError('Unknown scan family {!r}'.format(spec.family))
    found = []
    if spec.family in ('pq-minus', 'pq-plus'):
        sign = -1 if spec.family == 'pq-minus' else 1
        for p in spec.p:
            for q in spec.q:
                if p < 2 or q <= p or gcd(p, q) != 1:
                    continue
                for n in spec.n:
                    if n >= 1:
                        found.append(brieskorn_family(p, q, n, sign))
    elif spec.family == 'prop31-3':
        for p in spec.p:
            for k in spec.k:
                if p >= 2 and p % 2 == 0 and k >= 1 and k % 2 == 1:
                    found.append(brieskorn_family(p, p * k + 1, 1, -1))
    else:
        for degree in spec.d:
            if degree >= 3:
                found.append(BrieskornData.from_values((degree - 1, degree, degree * degree - degree + 1)))
    logger.debug('Scan {} expands to {} instances'.format(spec.family, len(found)))
    return found


def scan_row(b, margin=None, budget=None):
    """
    :return: One CSV row for the sphere keyed by :data:`SCAN_HEADER`
    :rtype: dict
    """
    report = analyze(b, margin=margin, budget=budget)
    by_method = report.d.by_method
    family = report.family
    return {
        'multiplicities': ascii_label(b.multiplicities),
        'd_semigroup': by_method.get(SEMIGROUP),
        'd_plumbing': by_method.get(PLUMBING),
        'd_family_closed_form': by_method.get(FAMILY_CLOSED_FORM),
        'agree': report.d.agree,
        'diagonalizable': report.diagonalizable,
        'strongly_suitable': report.strongly_suitable,
        'reason': report.reason,
        'min_b2': report.min_b2,
        'alpha_g_minus_1': None if family is None else family.alpha_g_minus_1,
        'alpha_closed_form': None if family is None else family.alpha_closed_form,
    }


def run_scan(spec, workers=None, margin=None, budget=None):
    """
    Evaluates every instance of a scan. With more than one worker the instances run in a process pool;
    rows always come back in instance order.

    :param spec: Scan specification
    :type spec: ScanSpec
    :param workers: Worker processes; defaults to ``config.SCAN_WORKERS``
    :type workers: int
    :return: Rows keyed by :data:`SCAN_HEADER`
    :rtype: list[dict]
    """
    workers = setting(workers, 'SCAN_WORKERS')
    # Resolve here so worker processes do not depend on inherited configuration
    margin = setting(margin, 'CHAR_BOX_MARGIN')
    budget = setting(budget, 'SEARCH_BUDGET')
    spheres = instances(spec)
    evaluate = partial(scan_row, margin=margin, budget=budget)

    start_time = time.time()
    if workers > 1 and len(spheres) > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            rows = list(executor.map(evaluate, spheres))
    else:
        rows = [evaluate(sphere) for sphere in spheres]
    logger.info('Scanned {} instances of {} in {}'.format(
        len(rows), spec.family, TestRunnerUtils.get_readable_run_time(time.time() - start_time)))
    return rows
