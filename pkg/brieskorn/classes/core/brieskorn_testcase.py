# Native libraries
import itertools
import unittest
from fractions import Fraction
from math import gcd
# Project libraries
from brieskorn.classes.dinvariant import registry
from brieskorn.utilities.utils import setup_logger
import brieskorn.config as config

# Configure logging instance
logger = setup_logger(__name__, config.DEBUG_LEVEL)


def tag(*tags):
    """
    Decorator that tags a test class for filtering.
    Tagged classes can be included or excluded via the --tag and --exclude-tag runner flags.
    Tags listed in ``DEFAULT_EXCLUDE_TAGS`` of the runner are skipped unless requested with --tag.

    Usage::

        @tag('slow')
        class TestFamilyGrid(BrieskornTestCase):
            ...

    :param tags: One or more tag strings
    :type tags: str
    """
    def decorator(cls):
        cls._tags = set(tags)
        return cls
    return decorator


class BrieskornTestCase(unittest.TestCase):
    """
    Base test case for the invariants library.
    Resets the d-invariant method registry around each test so plug-in tests cannot leak methods.
    """

    def setUp(self):
        registry.clear()
        registry.register_defaults()

    def tearDown(self):
        registry.clear()

    @staticmethod
    def coprime_pairs(low, high):
        """
        :return: Pairs (p, q) with low <= p < q <= high and gcd(p, q) = 1
        :rtype: list[tuple[int, int]]
        """
        return [(p, q) for p, q in itertools.combinations(range(low, high + 1), 2) if gcd(p, q) == 1]

    @staticmethod
    def coprime_triples_by_product(bound):
        """
        :return: Increasing pairwise coprime triples of integers >= 2 whose product is at most bound
        :rtype: list[tuple[int, int, int]]
        """
        triples = []
        for a in range(2, bound + 1):
            if a ** 3 > bound:
                break
            for b in range(a + 1, bound // a + 1):
                if a * b * (b + 1) > bound:
                    break
                if gcd(a, b) != 1:
                    continue
                triples.extend((a, b, c) for c in range(b + 1, bound // (a * b) + 1)
                               if gcd(a, c) == 1 and gcd(b, c) == 1)
        return triples

    @staticmethod
    def pairwise_coprime_triples(low, high):
        """
        :return: Increasing triples in [low, high] whose entries are pairwise coprime
        :rtype: list[tuple[int, int, int]]
        """
        return [triple for triple in itertools.combinations(range(low, high + 1), 3)
                if all(gcd(a, b) == 1 for a, b in itertools.combinations(triple, 2))]

    def assertExactlyEqual(self, first, second, msg=None):
        """
        Equality that also requires exact rational types, so 0.5 never passes for Fraction(1, 2)
        """
        for value in (first, second):
            if isinstance(value, float):
                self.fail(self._formatMessage(msg, '{!r} is a float'.format(value)))
        self.assertEqual(Fraction(first), Fraction(second), msg)

    def assertSymmetric(self, matrix, msg=None):
        size = len(matrix)
        for i in range(size):
            for j in range(size):
                if matrix[i][j] != matrix[j][i]:
                    self.fail(self._formatMessage(msg, 'entry ({}, {}) differs from ({}, {})'.format(i, j, j, i)))
