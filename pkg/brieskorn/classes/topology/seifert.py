"""
Canonical Brieskorn input type, its Seifert invariants, and surgery descriptions of the torus-knot families
"""
# Native libraries
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd, prod
from typing import Tuple
# Project libraries
from brieskorn.classes.topology.arith import (fraction_text, mod_inverse_pair, require_coprime_pair,
                                              require_integer)
from brieskorn.classes.topology.errors import ConsistencyError, CoprimalityError, InputValidationError
from brieskorn.utilities.utils import setup_logger
import brieskorn.config as config

logger = setup_logger(__name__, config.DEBUG_LEVEL)

#: Family tag for Sigma(p, q, npq - 1)
PQ_MINUS = 'pq-minus'
#: Family tag for Sigma(p, q, npq + 1)
PQ_PLUS = 'pq-plus'


@dataclass(frozen=True)
class BrieskornData:
    """
    Pairwise-coprime multiplicities p_1 < ... < p_n (n >= 3), each at least 2.
    The sphere carries its orientation as the boundary of the negative-definite plumbing.
    """
    multiplicities: Tuple[int, ...]

    def __post_init__(self):
        values = tuple(self.multiplicities)
        object.__setattr__(self, 'multiplicities', values)
        if len(values) < 3:
            raise InputValidationError('A Brieskorn sphere needs at least 3 multiplicities, got {}'.format(
                list(values)))
        for value in values:
            require_integer(value, 'multiplicity', 2)
        if any(left >= right for left, right in zip(values, values[1:])):
            raise InputValidationError('Multiplicities must be strictly increasing, got {}'.format(list(values)))
        for left, right in combinations(values, 2):
            if gcd(left, right) != 1:
                raise CoprimalityError('Multiplicities must be pairwise coprime: gcd({}, {}) = {}'.format(
                    left, right, gcd(left, right)))

    @classmethod
    def from_values(cls, values):
        """
        Builds validated data from multiplicities given in any order

        :param values: Multiplicities
        :type values: Iterable[int]
        :rtype: BrieskornData
        """
        values = list(values)
        for value in values:
            require_integer(value, 'multiplicity')
        return cls(tuple(sorted(values)))

    @property
    def label(self):
        return 'Σ({})'.format(','.join(str(value) for value in self.multiplicities))

    @property
    def product(self):
        return prod(self.multiplicities)

    def to_dict(self):
        return {'multiplicities': list(self.multiplicities)}

    @classmethod
    def from_dict(cls, data):
        return cls(tuple(data['multiplicities']))


@dataclass(frozen=True)
class SeifertData:
    """
    Seifert invariants M(e0; b_1/a_1, ..., b_n/a_n) with 0 < b_i/a_i < 1
    and Euler number e0 + sum(b_i/a_i) = -1/(a_1 ... a_n)
    """
    e0: int
    fractions: Tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, 'fractions', tuple(Fraction(value) for value in self.fractions))
        require_integer(self.e0, 'e0')
        for value in self.fractions:
            if not 0 < value < 1:
                raise InputValidationError('Seifert fractions must lie strictly between 0 and 1, got {}'.format(
                    fraction_text(value)))
        expected = Fraction(-1, prod(self.alphas))
        if self.euler_number != expected:
            raise InputValidationError('Euler number {} does not equal {} for a homology sphere'.format(
                fraction_text(self.euler_number), fraction_text(expected)))

    @property
    def alphas(self):
        return tuple(value.denominator for value in self.fractions)

    @property
    def betas(self):
        return tuple(value.numerator for value in self.fractions)

    @property
    def euler_number(self):
        return self.e0 + sum(self.fractions, Fraction(0))

    def render(self):
        """
        :return: The presentation printed as ``M(-2; 1/2, 2/3, 4/5)``
        :rtype: str
        """
        return 'M({}; {})'.format(self.e0, ', '.join(fraction_text(value) for value in self.fractions))

    def to_dict(self):
        return {'e0': self.e0, 'fractions': [fraction_text(value) for value in self.fractions]}

    @classmethod
    def from_dict(cls, data):
        return cls(data['e0'], tuple(Fraction(value) for value in data['fractions']))


@dataclass(frozen=True)
class SurgeryPresentation:
    """
    Rational surgery on a signed torus knot T(p, sign*q) producing a Brieskorn sphere
    """
    p: int
    q: int
    knot_sign: int
    coefficient: Fraction
    manifold: BrieskornData

    @property
    def knot_label(self):
        return 'T({},{})'.format(self.p, self.knot_sign * self.q)

    def render(self):
        return '{} surgery on {} = {}'.format(fraction_text(self.coefficient), self.knot_label, self.manifold.label)

    def to_dict(self):
        return {'p': self.p, 'q': self.q, 'knot_sign': self.knot_sign,
                'coefficient': fraction_text(self.coefficient), 'manifold': self.manifold.to_dict()}

    @classmethod
    def from_dict(cls, data):
        return cls(data['p'], data['q'], data['knot_sign'], Fraction(data['coefficient']),
                   BrieskornData.from_dict(data['manifold']))


@dataclass(frozen=True)
class NotClaimed:
    """
    Marker returned when a surgery presentation is not asserted for the requested family member
    """
    reason: str


@dataclass(frozen=True)
class FamilyMatch:
    """
    Recognized membership of Sigma(p, q, npq + sign) in one of the torus-knot families
    """
    family: str
    p: int
    q: int
    n: int

    @property
    def sign(self):
        return -1 if self.family == PQ_MINUS else 1

    def to_dict(self):
        return {'family': self.family, 'p': self.p, 'q': self.q, 'n': self.n}

    @classmethod
    def from_dict(cls, data):
        return cls(data['family'], data['p'], data['q'], data['n'])


def _require_sign(sign):
    if sign not in (1, -1):
        raise InputValidationError('sign must be +1 or -1, got {!r}'.format(sign))


def seifert_invariants(b):
    """
    Computes the Seifert invariants of a Brieskorn sphere in the normalization 0 < b_i < a_i,
    e0 + sum(b_i/a_i) = -1/A with A = a_1 ... a_n.
    Each b_i solves b_i * (A/a_i) = -1 (mod a_i); e0 then follows from the Euler number.

    :param b: Brieskorn data
    :type b: BrieskornData
    :return: The Seifert invariants, fractions ordered like the multiplicities
    :rtype: SeifertData
    """
    total = b.product
    fractions = []
    for alpha in b.multiplicities:
        beta = (-pow(total // alpha, -1, alpha)) % alpha
        fractions.append(Fraction(beta, alpha))
    e0 = Fraction(-1, total) - sum(fractions, Fraction(0))
    if e0.denominator != 1:
        raise ConsistencyError('Central framing for {} is not an integer: {}'.format(b.label, e0))
    e0 = e0.numerator
    # Needed downstream for negative-definiteness
    if e0 > -1:
        raise ConsistencyError('Central framing for {} must be at most -1, got {}'.format(b.label, e0))
    data = SeifertData(e0, tuple(fractions))
    logger.debug('Seifert invariants of {}: {}'.format(b.label, data.render()))
    return data


def figure_seifert_invariants(p, q, n):
    """
    Closed form M(-2; q*/p, p*/q, ((pq-1)n-1)/(pqn-1)) for Sigma(p, q, npq - 1), p < q

    :rtype: SeifertData
    """
    require_coprime_pair(p, q)
    require_integer(n, 'n', 1)
    if p > q:
        p, q = q, p
    p_star, q_star = mod_inverse_pair(p, q)
    third = Fraction((p * q - 1) * n - 1, p * q * n - 1)
    return SeifertData(-2, (Fraction(q_star, p), Fraction(p_star, q), third))


def brieskorn_family(p, q, n, sign):
    """
    :return: Sigma(p, q, npq + sign)
    :rtype: BrieskornData
    :raises CoprimalityError: If p and q share a factor
    """
    require_coprime_pair(p, q)
    require_integer(n, 'n', 1)
    _require_sign(sign)
    return BrieskornData.from_values((p, q, n * p * q + sign))


def recognize_family(b):
    """
    Detects whether three multiplicities (p, q, r) satisfy r = npq - 1 or r = npq + 1

    :param b: Brieskorn data
    :type b: BrieskornData
    :return: The match, or None for other data
    :rtype: FamilyMatch or None
    """
    if len(b.multiplicities) != 3:
        return None
    p, q, r = b.multiplicities
    base = p * q
    if (r + 1) % base == 0:
        return FamilyMatch(PQ_MINUS, p, q, (r + 1) // base)
    if (r - 1) % base == 0:
        return FamilyMatch(PQ_PLUS, p, q, (r - 1) // base)
    return None


def surgery_presentation(p, q, n, sign):
    """
    Surgery description of Sigma(p, q, npq + sign).
    sign = -1 gives -1/n surgery on the negative torus knot T(p, -q);
    sign = +1 with n = 1 gives -1 surgery on T(p, q); sign = +1 with n > 1 is not claimed.

    :param p: Torus knot parameter, at least 2
    :type p: int
    :param q: Torus knot parameter, at least 2 and coprime to p
    :type q: int
    :param n: Family index, at least 1
    :type n: int
    :param sign: +1 or -1
    :type sign: int
    :rtype: SurgeryPresentation or NotClaimed
    """
    manifold = brieskorn_family(p, q, n, sign)
    if sign == -1:
        return SurgeryPresentation(p, q, -1, Fraction(-1, n), manifold)
    if n == 1:
        return SurgeryPresentation(p, q, 1, Fraction(-1), manifold)
    return NotClaimed('No surgery presentation is asserted for {} with n = {} > 1'.format(manifold.label, n))
