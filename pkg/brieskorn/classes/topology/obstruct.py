"""
Verdict reports: combines d-invariants, diagonalizability and rotation-vector facts into the
Weinstein-domain obstructions for Brieskorn spheres, plus the Markov and cuspidal-curve side checks.
"""
# Native libraries
from collections import deque
from dataclasses import dataclass, field, replace
from fractions import Fraction
from math import gcd
from typing import Optional, Tuple
# Project libraries
from brieskorn.classes.dinvariant import registry
from brieskorn.classes.topology.arith import fraction_text, require_coprime_pair, require_integer
from brieskorn.classes.topology.errors import ConsistencyError, DomainError, InputValidationError
from brieskorn.classes.topology.floer import (DInvariantResult, alpha, alpha_closed_form, reduced_kernel_degrees,
                                              semigroup_profile, stein_grading_from_plumbing)
from brieskorn.classes.topology.lattice import diagonalize
from brieskorn.classes.topology.plumbing import FormProperties, PlumbingGraph, form_properties, intersection_matrix
from brieskorn.classes.topology.seifert import (PQ_MINUS, BrieskornData, SeifertData, SurgeryPresentation,
                                                brieskorn_family, seifert_invariants, surgery_presentation)
from brieskorn.classes.topology.stein import rot_profile
from brieskorn.utilities.utils import ascii_label, setup_logger
import brieskorn.config as config

logger = setup_logger(__name__, config.DEBUG_LEVEL)

#: Reason tags, strongest first
REASON_D_ZERO = 'd-zero'
REASON_DIAGONALIZABLE = 'diagonalizable'
REASON_FAMILY = 'family'
REASON_NONE = 'none'

#: Constraint on the intersection form of a Weinstein domain in a positive symplectic 4-manifold
FORM_MUST_BE = 'negative definite, even, nontrivial'
#: Every Brieskorn sphere is excluded from CP^2 # k CPbar^2 for k up to this value
EXCLUDED_SMALL_K_MAX = 7

#: Degree test outcomes for the single rot = 0 candidate
DEGREE_TEST_CONFIRMED = 'confirmed'
DEGREE_TEST_UNDETERMINED = 'undetermined'


@dataclass(frozen=True)
class FamilyFacts:
    """
    Facts specific to Sigma(p, q, npq + sign) recognized from the multiplicities
    """
    family: str
    p: int
    q: int
    n: int
    surgery: Optional[str] = None
    #: Whether some Stein structure on the plumbing has rotation vector 0; None when the question does not apply
    zero_rot_exists: Optional[bool] = None
    alpha_g_minus_1: Optional[int] = None
    #: Grading of the rot = 0 candidate xi_0
    h_xi0: Optional[Fraction] = None
    reduced_degrees: Optional[Tuple[int, ...]] = None
    #: Outcome of checking that c_red(xi_0) vanishes
    degree_test: Optional[str] = None
    #: p even, q = pk + 1 with k odd
    closed_form_family: bool = False
    alpha_closed_form: Optional[int] = None

    @property
    def strongly_suitable_by_rotation(self):
        return self.family == PQ_MINUS and self.zero_rot_exists is False

    def to_dict(self):
        return {
            'family': self.family, 'p': self.p, 'q': self.q, 'n': self.n, 'surgery': self.surgery,
            'zero_rot_exists': self.zero_rot_exists, 'alpha_g_minus_1': self.alpha_g_minus_1,
            'h_xi0': None if self.h_xi0 is None else fraction_text(self.h_xi0),
            'reduced_degrees': None if self.reduced_degrees is None else list(self.reduced_degrees),
            'degree_test': self.degree_test, 'closed_form_family': self.closed_form_family,
            'alpha_closed_form': self.alpha_closed_form,
        }

    @classmethod
    def from_dict(cls, data):
        return cls(data['family'], data['p'], data['q'], data['n'], data.get('surgery'),
                   data.get('zero_rot_exists'), data.get('alpha_g_minus_1'),
                   None if data.get('h_xi0') is None else Fraction(data['h_xi0']),
                   None if data.get('reduced_degrees') is None else tuple(data['reduced_degrees']),
                   data.get('degree_test'), data.get('closed_form_family', False), data.get('alpha_closed_form'))


@dataclass(frozen=True)
class ObstructionReport:
    """
    Everything known about a Brieskorn sphere as the boundary of a Weinstein domain in a closed
    symplectic 4-manifold. Constraints are conditional: any such domain would have to satisfy them.
    """
    manifold: BrieskornData
    seifert: SeifertData
    plumbing: PlumbingGraph
    properties: FormProperties
    d: DInvariantResult
    diagonalizable: bool
    strongly_suitable: bool
    reason: str
    min_b2: int
    min_k_positive: int
    excluded_s2xs2: bool
    excluded_all_positive: bool
    form_must_be: str = FORM_MUST_BE
    excluded_small_k_max: int = EXCLUDED_SMALL_K_MAX
    family: Optional[FamilyFacts] = None
    notes: Tuple[str, ...] = field(default_factory=tuple)

    def to_dict(self):
        return {
            'manifold': ascii_label(self.manifold.multiplicities),
            'multiplicities': list(self.manifold.multiplicities),
            'seifert': self.seifert.to_dict(),
            'plumbing': dict(self.plumbing.to_dict(), b2=self.properties.b2,
                             determinant=self.properties.determinant,
                             negative_definite=self.properties.negative_definite, even=self.properties.even),
            'd': self.d.value,
            'd_methods': dict(self.d.by_method),
            'd_agree': self.d.agree,
            'diagonalizable': self.diagonalizable,
            'strongly_suitable': self.strongly_suitable,
            'reason': self.reason,
            'min_b2': self.min_b2,
            'form_must_be': self.form_must_be,
            'min_k_positive': self.min_k_positive,
            'excluded_small_k_max': self.excluded_small_k_max,
            'excluded_s2xs2': self.excluded_s2xs2,
            'excluded_all_positive': self.excluded_all_positive,
            'family': None if self.family is None else self.family.to_dict(),
            'notes': list(self.notes),
        }

    @classmethod
    def from_dict(cls, data):
        plumbing = data['plumbing']
        return cls(
            manifold=BrieskornData(tuple(data['multiplicities'])),
            seifert=SeifertData.from_dict(data['seifert']),
            plumbing=PlumbingGraph.from_dict(plumbing),
            properties=FormProperties(plumbing['negative_definite'], plumbing['determinant'], plumbing['even'],
                                      plumbing['b2']),
            d=DInvariantResult(data['d'], tuple(sorted(data['d_methods'])), data['d_agree'], dict(data['d_methods'])),
            diagonalizable=data['diagonalizable'],
            strongly_suitable=data['strongly_suitable'],
            reason=data['reason'],
            min_b2=data['min_b2'],
            min_k_positive=data['min_k_positive'],
            excluded_s2xs2=data['excluded_s2xs2'],
            excluded_all_positive=data['excluded_all_positive'],
            form_must_be=data['form_must_be'],
            excluded_small_k_max=data['excluded_small_k_max'],
            family=None if data['family'] is None else FamilyFacts.from_dict(data['family']),
            notes=tuple(data['notes']),
        )


@dataclass(frozen=True)
class CuspidalReport:
    degree: int
    singularities: Tuple[Tuple[int, int], ...]
    genus_sum_ok: bool
    g: int
    spinc_index: int
    surgery_framing: int
    adjunction_slack_ok: bool

    def to_dict(self):
        return {'degree': self.degree, 'singularities': [list(pair) for pair in self.singularities],
                'genus_sum_ok': self.genus_sum_ok, 'g': self.g, 'spinc_index': self.spinc_index,
                'surgery_framing': self.surgery_framing, 'adjunction_slack_ok': self.adjunction_slack_ok}

    @classmethod
    def from_dict(cls, data):
        return cls(data['degree'], tuple(tuple(pair) for pair in data['singularities']), data['genus_sum_ok'],
                   data['g'], data['spinc_index'], data['surgery_framing'], data['adjunction_slack_ok'])


def _closed_form_k(p, q):
    """
    :return: k when p is even and q = pk + 1 with k odd, else None
    """
    if p % 2 == 0 and (q - 1) % p == 0 and ((q - 1) // p) % 2 == 1:
        return (q - 1) // p
    return None


def family_facts(match, graph):
    """
    Collects the torus-knot family facts for a recognized sphere

    :param match: Recognized family membership
    :type match: FamilyMatch
    :param graph: Plumbing of the sphere
    :type graph: PlumbingGraph
    :rtype: FamilyFacts
    """
    presentation = surgery_presentation(match.p, match.q, match.n, match.sign)
    surgery = presentation.render() if isinstance(presentation, SurgeryPresentation) else None
    if match.family != PQ_MINUS:
        return FamilyFacts(match.family, match.p, match.q, match.n, surgery)

    zero_exists = rot_profile(graph).zero_exists
    k = _closed_form_k(match.p, match.q)
    facts = FamilyFacts(match.family, match.p, match.q, match.n, surgery, zero_exists,
                        closed_form_family=k is not None and match.n == 1,
                        alpha_closed_form=alpha_closed_form(match.p, k) if k is not None and match.n == 1 else None)
    if match.n > 1:
        if zero_exists:
            raise ConsistencyError('{} has a zero rotation vector despite n > 1'.format(
                ascii_label((match.p, match.q, match.n * match.p * match.q - 1))))
        return facts

    profile = semigroup_profile(match.p, match.q)
    alpha_top = alpha(profile, profile.genus - 1)
    facts = replace(facts, alpha_g_minus_1=alpha_top)
    if facts.alpha_closed_form is not None and facts.alpha_closed_form != alpha_top:
        raise ConsistencyError('alpha_(g-1) = {} differs from the closed form {} for p={} q={}'.format(
            alpha_top, facts.alpha_closed_form, match.p, match.q))
    if not zero_exists:
        return facts

    form = intersection_matrix(graph)
    h = stein_grading_from_plumbing(form, [0] * form.b2).h
    degrees = tuple(reduced_kernel_degrees(match.p, match.q))
    threshold = -2 * alpha_top
    confirmed = h == threshold and all(degree > threshold for degree in degrees)
    return replace(facts, h_xi0=h, reduced_degrees=degrees,
                   degree_test=DEGREE_TEST_CONFIRMED if confirmed else DEGREE_TEST_UNDETERMINED)


def _notes(b, d_value, reason, strongly_suitable, facts):
    label = ascii_label(b.multiplicities)
    notes = []
    if strongly_suitable:
        notes.append('{} is strongly suitable ({}): it bounds no Weinstein domain in any positive symplectic '
                     '4-manifold'.format(label, reason))
    else:
        notes.append('any Weinstein domain bounded by {} in a positive symplectic 4-manifold would have a {} '
                     'intersection form with b2 = 4d = {}'.format(label, FORM_MUST_BE, 4 * d_value))
        notes.append('no obstruction found in CP^2 # k CPbar^2 for k >= {}'.format(4 * d_value))
    notes.append('excluded from CP^2 # k CPbar^2 for k <= {} and from S^2 x S^2'.format(EXCLUDED_SMALL_K_MAX))
    if b.multiplicities == (2, 3, 5):
        notes.append('realized at k = 8: Sigma(2,3,5) bounds the E8 plumbing as a Weinstein domain in '
                     'CP^2 # 8 CPbar^2')
        notes.append('not suitable: HF_red(-Sigma(2,3,5)) = 0')
    if facts is not None:
        if facts.surgery:
            notes.append('surgery description: {}'.format(facts.surgery.replace('Σ', 'Sigma')))
        if facts.family == PQ_MINUS and facts.n > 1:
            notes.append('n > 1: the -3 entry forces every rotation vector to be nonzero')
        elif facts.family == PQ_MINUS and facts.zero_rot_exists is False:
            notes.append('no Stein structure on the plumbing has rotation vector 0')
        elif facts.degree_test is not None:
            notes.append('single fillable candidate xi_0 with rot = 0: h(xi_0) = {}, c_red(xi_0) = 0 {}'.format(
                fraction_text(facts.h_xi0), facts.degree_test))
        if facts.closed_form_family:
            notes.append('p even, q = pk + 1, k odd: alpha_(g-1) = p(pk+2)/8 = {}'.format(facts.alpha_closed_form))
    return tuple(notes)


def analyze(b, margin=None, budget=None):
    """
    Builds the full obstruction report for a Brieskorn sphere.
    The reason tag is the strongest available, in the order d-zero, diagonalizable, family, none.

    :param b: Brieskorn data
    :type b: BrieskornData
    :param margin: Characteristic box widening
    :type margin: int
    :param budget: Search node budget
    :type budget: int
    :rtype: ObstructionReport
    """
    context = registry.build_context(b, margin, budget)
    d = registry.compute_all(b, context=context)
    graph = context['graph']
    form = intersection_matrix(graph)
    properties = form_properties(form)
    diagonalizable = diagonalize(form, budget=budget).diagonalizable
    if (d.value == 0) != diagonalizable:
        raise ConsistencyError('{}: d = {} but diagonalizable = {}'.format(b.label, d.value, diagonalizable))

    facts = family_facts(context['family'], graph) if context['family'] is not None else None
    if d.value == 0:
        reason = REASON_D_ZERO
    elif diagonalizable:
        reason = REASON_DIAGONALIZABLE
    elif facts is not None and facts.strongly_suitable_by_rotation:
        reason = REASON_FAMILY
    else:
        reason = REASON_NONE
    strongly_suitable = reason != REASON_NONE

    report = ObstructionReport(
        manifold=b,
        seifert=seifert_invariants(b),
        plumbing=graph,
        properties=properties,
        d=d,
        diagonalizable=diagonalizable,
        strongly_suitable=strongly_suitable,
        reason=reason,
        min_b2=4 * d.value,
        min_k_positive=4 * d.value,
        excluded_s2xs2=True,
        excluded_all_positive=strongly_suitable,
        family=facts,
        notes=_notes(b, d.value, reason, strongly_suitable, facts),
    )
    logger.debug('{}: d={} reason={}'.format(b.label, d.value, reason))
    return report


def family_verdict(p, q, n, sign, margin=None, budget=None):
    """
    Report for Sigma(p, q, npq + sign)

    :rtype: ObstructionReport
    """
    return analyze(brieskorn_family(p, q, n, sign), margin=margin, budget=budget)


def markov_numbers(bound):
    """
    All Markov numbers up to bound, collected by a breadth-first walk over the Vieta moves z -> 3xy - z
    starting from (1, 1, 1)

    :param bound: Largest entry allowed in visited triples
    :type bound: int
    :rtype: list[int]
    """
    require_integer(bound, 'bound', 1)
    start = (1, 1, 1)
    seen = {start}
    queue = deque([start])
    numbers = set()
    while queue:
        triple = queue.popleft()
        numbers.update(triple)
        for index in range(3):
            others = [value for position, value in enumerate(triple) if position != index]
            moved = 3 * others[0] * others[1] - triple[index]
            if moved < 1 or moved > bound:
                continue
            neighbour = tuple(sorted(others + [moved]))
            if neighbour not in seen:
                seen.add(neighbour)
                queue.append(neighbour)
    return sorted(numbers)


def markov_member(x, bound):
    """
    True when x occurs in a Markov triple reachable with all entries at most bound.
    A False answer only means no such triple exists below the bound.

    :rtype: bool
    """
    require_integer(x, 'x', 1)
    require_integer(bound, 'bound', 1)
    if bound < x:
        raise InputValidationError('Markov search bound {} is below the queried number {}'.format(bound, x))
    return x in markov_numbers(bound)


def lens_space_label(p, q):
    """
    :return: ``'L(p^2,pq-1)'`` with both integers computed, e.g. ``'L(25,9)'`` for (5, 2)
    :rtype: str
    """
    require_integer(p, 'p', 2)
    require_integer(q, 'q', 1)
    if q >= p or gcd(p, q) != 1:
        raise DomainError('Lens space label needs 1 <= q < p with gcd(p, q) = 1, got p={} q={}'.format(p, q))
    return 'L({},{})'.format(p * p, p * q - 1)


def cuspidal_check(degree, singularities):
    """
    Numerical checks for a rational cuspidal curve of the given degree whose singularities are cones on
    torus knots T(p_i, q_i)

    :param degree: Curve degree, at least 3
    :type degree: int
    :param singularities: Pairs (p_i, q_i)
    :type singularities: Sequence[tuple[int, int]]
    :rtype: CuspidalReport
    """
    require_integer(degree, 'degree', 3)
    pairs = []
    for pair in singularities:
        if not isinstance(pair, (tuple, list)) or len(pair) != 2:
            raise InputValidationError('Only one-pair singularities (p, q) are supported, got {}'.format(pair))
        p, q = pair
        require_coprime_pair(p, q)
        pairs.append((p, q))
    g = sum((p - 1) * (q - 1) // 2 for p, q in pairs)
    framing = degree * degree
    return CuspidalReport(degree, tuple(pairs), g == (degree - 1) * (degree - 2) // 2, g, 1 - g, framing,
                          framing > 2 * g - 2)


def flmn_family_report(degree, margin=None, budget=None):
    """
    Report for Sigma(d - 1, d, d^2 - d + 1), which bounds a Weinstein domain in a non-positive symplectic
    structure on CP^2 # (d^2 + 1) CPbar^2

    :rtype: ObstructionReport
    """
    require_integer(degree, 'degree', 3)
    b = BrieskornData.from_values((degree - 1, degree, degree * degree - degree + 1))
    report = analyze(b, margin=margin, budget=budget)
    ambient = 'CP^2 # {} CPbar^2'.format(degree * degree + 1)
    extra = ['bounds a Weinstein domain in a non-positive symplectic structure on {}'.format(ambient)]
    if report.strongly_suitable:
        extra.append('strongly suitable, so that symplectic structure on {} cannot be positive'.format(ambient))
    return replace(report, notes=report.notes + tuple(extra))
