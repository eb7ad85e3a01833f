"""
d-invariants and contact-invariant gradings.
Two independent routes to d: torus-knot semigroup counts for the surgery families, and the
characteristic-vector maximum on the negative-definite plumbing.
"""
# Native libraries
from bisect import bisect_right
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Tuple
# Project libraries
from brieskorn.classes.topology.arith import fraction_text, require_coprime_pair, require_integer
from brieskorn.classes.topology.errors import (BadVertexError, ConsistencyError, DefinitenessError, DomainError,
                                               UnimodularityError)
from brieskorn.classes.topology.lattice import check_characteristic, max_char_square
from brieskorn.classes.topology.plumbing import bad_vertices, form_properties, intersection_matrix
from brieskorn.utilities.utils import setup_logger
import brieskorn.config as config

logger = setup_logger(__name__, config.DEBUG_LEVEL)

#: Method tags carried by DInvariantResult
SEMIGROUP = 'semigroup'
PLUMBING = 'plumbing'
FAMILY_CLOSED_FORM = 'family-closed-form'


@dataclass(frozen=True)
class SemigroupProfile:
    """
    Gaps of the numerical semigroup generated by p and q
    """
    p: int
    q: int
    gaps: Tuple[int, ...]
    genus: int

    @property
    def frobenius(self):
        return self.p * self.q - self.p - self.q

    def to_dict(self):
        return {'p': self.p, 'q': self.q, 'gaps': list(self.gaps), 'genus': self.genus,
                'frobenius': self.frobenius}

    @classmethod
    def from_dict(cls, data):
        return cls(data['p'], data['q'], tuple(data['gaps']), data['genus'])


@dataclass(frozen=True)
class DInvariantResult:
    value: int
    methods: Tuple[str, ...]
    agree: bool
    #: Value produced by each method that ran
    by_method: Dict[str, int] = field(default_factory=dict)

    def to_dict(self):
        return {'value': self.value, 'methods': list(self.methods), 'agree': self.agree,
                'by_method': dict(self.by_method)}

    @classmethod
    def from_dict(cls, data):
        return cls(data['value'], tuple(data['methods']), data['agree'], dict(data.get('by_method', {})))


@dataclass(frozen=True)
class GradingResult:
    """
    Absolute grading h of a contact invariant together with the 4-manifold data it came from
    """
    h: Fraction
    c1_squared: Fraction
    sigma: int
    euler: int

    def to_dict(self):
        return {'h': fraction_text(self.h), 'c1_squared': fraction_text(self.c1_squared),
                'sigma': self.sigma, 'euler': self.euler}

    @classmethod
    def from_dict(cls, data):
        return cls(Fraction(data['h']), Fraction(data['c1_squared']), data['sigma'], data['euler'])


def semigroup_profile(p, q):
    """
    Sieves the semigroup {ap + bq} up to the Frobenius number pq - p - q

    :param p: Generator, at least 2
    :type p: int
    :param q: Generator, at least 2 and coprime to p
    :type q: int
    :rtype: SemigroupProfile
    :raises CoprimalityError: If gcd(p, q) != 1
    """
    require_coprime_pair(p, q)
    frobenius = p * q - p - q
    member = bytearray(frobenius + 1)
    for multiple_of_q in range(0, frobenius + 1, q):
        for value in range(multiple_of_q, frobenius + 1, p):
            member[value] = 1
    gaps = tuple(value for value in range(1, frobenius + 1) if not member[value])
    genus = (p - 1) * (q - 1) // 2
    if len(gaps) != genus:
        raise ConsistencyError('Semigroup <{}, {}> has {} gaps, expected genus {}'.format(p, q, len(gaps), genus))
    return SemigroupProfile(p, q, gaps, genus)


def alpha(profile, j):
    """
    :return: Number of gaps strictly greater than j
    :rtype: int
    """
    require_integer(j, 'j', 0)
    return len(profile.gaps) - bisect_right(profile.gaps, j)


def d_torus_surgery_minus(p, q):
    """
    d(Sigma(p, q, pq - 1)) = 2 alpha_{g-1}.
    The torus-knot formula gives d = -2 alpha_{g-1} for +1 surgery on T(p, q), which is Sigma(p, q, pq - 1)
    with the opposite orientation; d changes sign with orientation.

    :rtype: int
    """
    profile = semigroup_profile(p, q)
    return 2 * alpha(profile, profile.genus - 1)


def d_family_plus(p, q, n):
    """
    d(Sigma(p, q, npq + 1)) = 0 for every n >= 1

    :rtype: int
    """
    require_coprime_pair(p, q)
    require_integer(n, 'n', 1)
    return 0


def d_invariant_plumbing(g, margin=None, budget=None):
    """
    d = (K^2_max + b2) / 4 on a negative-definite unimodular plumbing with at most one bad vertex

    :param g: Plumbing graph
    :type g: PlumbingGraph
    :param margin: Characteristic box widening
    :type margin: int
    :param budget: Search node budget
    :type budget: int
    :rtype: DInvariantResult
    :raises BadVertexError: If more than one vertex is bad
    :raises DefinitenessError: If the form is not negative definite
    """
    bad = bad_vertices(g)
    if len(bad) > 1:
        raise BadVertexError('Plumbing has {} bad vertices {}; the formula allows at most one'.format(
            len(bad), bad))
    form = intersection_matrix(g)
    properties = form_properties(form)
    if not properties.negative_definite:
        raise DefinitenessError('Plumbing form of rank {} is not negative definite'.format(form.b2))
    if abs(properties.determinant) != 1:
        raise UnimodularityError('Plumbing form has determinant {}'.format(properties.determinant))
    numerator = max_char_square(form, margin=margin, budget=budget) + form.b2
    if numerator % 4 or numerator < 0:
        raise ConsistencyError('Plumbing d-invariant ({})/4 is not a nonnegative integer'.format(numerator))
    value = numerator // 4
    return DInvariantResult(value, (PLUMBING,), True, {PLUMBING: value})


def reduced_kernel_degrees(p, q):
    """
    Degrees -2 alpha_{g-1+i} + 2i(i-1) for i = 1, ..., g-1; empty when g < 2

    :rtype: list[int]
    """
    profile = semigroup_profile(p, q)
    return [-2 * alpha(profile, profile.genus - 1 + i) + 2 * i * (i - 1) for i in range(1, profile.genus)]


def contact_grading(c1_squared, sigma, euler):
    """
    h = -(c1^2 - 3 sigma - 2 e) / 4 - 1/2

    :param c1_squared: Square of the first Chern class of the filling
    :type c1_squared: int or Fraction
    :param sigma: Signature
    :type sigma: int
    :param euler: Euler characteristic
    :type euler: int
    :rtype: GradingResult
    """
    require_integer(sigma, 'sigma')
    require_integer(euler, 'euler')
    c1_squared = Fraction(c1_squared)
    h = -(c1_squared - 3 * sigma - 2 * euler) / 4 - Fraction(1, 2)
    return GradingResult(h, c1_squared, sigma, euler)


def stein_grading_from_plumbing(f, rot):
    """
    Grading of the Stein filling built from Legendrian unknots with rotation numbers rot.
    c1^2 = rot^T Q^-1 rot, sigma = -b2 and e = 1 + b2 (one 0-handle, b2 2-handles).

    :param f: Negative-definite unimodular form
    :type f: IntersectionForm
    :param rot: Rotation numbers in the vertex basis
    :type rot: Sequence[int]
    :rtype: GradingResult
    :raises CharacteristicParityError: If rot_i and Q_ii differ mod 2
    """
    rot = [require_integer(value, 'rotation number') for value in rot]
    check_characteristic(f, rot)
    properties = form_properties(f)
    if not properties.negative_definite:
        raise DefinitenessError('Handle diagram form of rank {} is not negative definite'.format(f.b2))
    c1_squared = f.factorization().inverse_quadratic(rot) if f.b2 else Fraction(0)
    return contact_grading(c1_squared, -f.b2, 1 + f.b2)


def alpha_closed_form(p, k):
    """
    Closed form alpha_{g-1} = p(pk + 2) / 8 for the semigroup <p, pk + 1> with p even and k odd

    :rtype: int
    """
    require_integer(p, 'p', 2)
    require_integer(k, 'k', 1)
    if p % 2 or k % 2 == 0:
        raise DomainError('Closed form needs p even and k odd, got p={} k={}'.format(p, k))
    return p * (p * k + 2) // 8
