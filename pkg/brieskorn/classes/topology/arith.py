"""
Exact rational arithmetic helpers: modular inverses and negative continued fractions.
No floating point is used anywhere in the package; every value is an ``int`` or a ``Fraction``.
"""
# Native libraries
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence, Tuple, Union
# Project libraries
from brieskorn.classes.topology.errors import CoprimalityError, DomainError, InputValidationError
from brieskorn.utilities.utils import setup_logger
import brieskorn.config as config

logger = setup_logger(__name__, config.DEBUG_LEVEL)

#: Exact rationals are stored as reduced fractions with a positive denominator
Rational = Fraction


def require_integer(value, name, minimum=None):
    """
    Validates that a value is a Python integer, optionally bounded below

    :param value: Value to check
    :param name: Parameter name used in the error message
    :type name: str
    :param minimum: Smallest accepted value, if any
    :type minimum: int
    :return: The validated value
    :rtype: int
    :raises InputValidationError: If the value is not an integer or is below the minimum
    """
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputValidationError('{} must be an integer, got {!r}'.format(name, value))
    if minimum is not None and value < minimum:
        raise InputValidationError('{} must be at least {}, got {}'.format(name, minimum, value))
    return value


def require_coprime_pair(p, q):
    """
    Validates a pair of integers p, q >= 2 with gcd(p, q) = 1

    :raises CoprimalityError: If the pair shares a factor
    """
    require_integer(p, 'p', 2)
    require_integer(q, 'q', 2)
    if gcd(p, q) != 1:
        raise CoprimalityError('p={} and q={} must be relatively prime (gcd={})'.format(p, q, gcd(p, q)))


@dataclass(frozen=True)
class NegContFrac:
    """
    Negative continued fraction [-a_1, ..., -a_m]^- stored as the positive magnitudes a_j
    """
    coefficients: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'coefficients', tuple(self.coefficients))
        if not self.coefficients:
            raise DomainError('A negative continued fraction needs at least one coefficient')
        for coefficient in self.coefficients:
            require_integer(coefficient, 'coefficient')
            if coefficient < 2:
                raise DomainError('Continued fraction coefficients must be >= 2, got {}'.format(
                    list(self.coefficients)))

    @property
    def weights(self):
        """
        Plumbing weights -a_1, ..., -a_m

        :rtype: tuple[int]
        """
        return tuple(-coefficient for coefficient in self.coefficients)

    def render(self):
        """
        :return: The expansion printed as ``[-2, -2, -3]^-``
        :rtype: str
        """
        return '[{}]^-'.format(', '.join(str(weight) for weight in self.weights))

    def to_dict(self):
        return {'coefficients': list(self.coefficients)}

    @classmethod
    def from_dict(cls, data):
        return cls(tuple(data['coefficients']))


def mod_inverse_pair(p, q):
    """
    Computes the multiplicative inverses p* of p modulo q and q* of q modulo p,
    normalized to 0 < p* < q and 0 < q* < p

    :param p: First integer, at least 2
    :type p: int
    :param q: Second integer, at least 2 and coprime to p
    :type q: int
    :return: The pair (p_star, q_star)
    :rtype: tuple[int, int]
    :raises CoprimalityError: If gcd(p, q) != 1
    """
    require_coprime_pair(p, q)
    return pow(p, -1, q), pow(q, -1, p)


def neg_cont_frac(x):
    """
    Expands a rational x = -r/s < -1 as the unique negative continued fraction with every a_j >= 2.
    Uses ceiling-division recursion: a_1 = ceil(r/s), then continue with s / (a_1 s - r).

    :param x: Rational number below -1
    :type x: Fraction or int
    :return: The expansion
    :rtype: NegContFrac
    :raises InputValidationError: If x is not an int or a Fraction
    :raises DomainError: If x >= -1 (x = -1 would need the coefficient 1)
    """
    if not isinstance(x, (int, Fraction)) or isinstance(x, bool):
        raise InputValidationError('Continued fractions take an int or Fraction, got {!r}'.format(x))
    x = Fraction(x)
    if x >= -1:
        raise DomainError('Negative continued fractions are defined here for x < -1, got {}'.format(x))
    r, s = -x.numerator, x.denominator
    coefficients = []
    while s != 0:
        # Ceiling division
        a = -(-r // s)
        coefficients.append(a)
        r, s = s, a * s - r
    return NegContFrac(tuple(coefficients))


def eval_cont_frac(cf: Union[NegContFrac, Sequence[int]]):
    """
    Evaluates [-a_1, ..., -a_m]^- = -a_1 - 1/(-a_2 - 1/(... - 1/(-a_m))) exactly, right to left

    :param cf: Expansion, or a plain sequence of the magnitudes a_j
    :type cf: NegContFrac or Sequence[int]
    :return: The exact value
    :rtype: Fraction
    :raises DomainError: If the coefficient list is empty or contains an entry below 2
    """
    if not isinstance(cf, NegContFrac):
        cf = NegContFrac(tuple(cf))
    value = Fraction(-cf.coefficients[-1])
    for coefficient in reversed(cf.coefficients[:-1]):
        value = -coefficient - 1 / value
    return value


def fraction_text(value):
    """
    :param value: Exact rational
    :type value: Fraction
    :return: ``'p/q'``, or ``'p'`` for integers
    :rtype: str
    """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return '{}/{}'.format(value.numerator, value.denominator)
