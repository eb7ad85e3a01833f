"""
Definite unimodular lattice engine: short-vector enumeration, diagonalizability by splitting off
(-1)-vectors, and maximization of the square of characteristic vectors.
All three work on the sparse LDL^T factorization of the form; nothing is approximated.
"""
# Native libraries
from dataclasses import dataclass, field
from fractions import Fraction
from math import floor, isqrt
from typing import Optional, Tuple
# Project libraries
from brieskorn.classes.topology.arith import require_integer
from brieskorn.classes.topology.errors import (CharacteristicParityError, ConsistencyError, DefinitenessError,
                                               DomainError, SearchBudgetError, UnimodularityError)
from brieskorn.classes.topology.plumbing import form_properties
from brieskorn.utilities.utils import setting, setup_logger
import brieskorn.config as config

logger = setup_logger(__name__, config.DEBUG_LEVEL)


@dataclass(frozen=True)
class CharVector:
    """
    Evaluations x_i = <K, v_i> of a class K on the vertex basis
    """
    evaluations: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'evaluations', tuple(self.evaluations))

    def validate(self, f):
        """
        :param f: Form the vector should be characteristic for
        :type f: IntersectionForm
        :raises CharacteristicParityError: If some x_i differs from Q_ii mod 2 or the length is wrong
        """
        check_characteristic(f, self.evaluations)
        return self

    def square(self, f):
        """
        :return: K^2 = x^T Q^-1 x
        :rtype: Fraction
        """
        return f.factorization().inverse_quadratic(self.evaluations)

    def to_dict(self):
        return {'evaluations': list(self.evaluations)}

    @classmethod
    def from_dict(cls, data):
        return cls(tuple(data['evaluations']))


@dataclass(frozen=True)
class DiagonalizationResult:
    diagonalizable: bool
    #: Pairwise orthogonal vectors of square -1, one per split summand; present only on success
    witness: Optional[Tuple[Tuple[int, ...], ...]] = None
    #: Rank of the largest diagonal summand found
    split_rank: int = 0

    def to_dict(self):
        return {'diagonalizable': self.diagonalizable,
                'witness': None if self.witness is None else [list(vector) for vector in self.witness],
                'split_rank': self.split_rank}

    @classmethod
    def from_dict(cls, data):
        witness = data.get('witness')
        return cls(data['diagonalizable'], None if witness is None else tuple(tuple(v) for v in witness),
                   data.get('split_rank', 0))


@dataclass(frozen=True)
class CharSearchResult:
    """
    Outcome of the characteristic-vector search
    """
    maximum: int
    maximizer: Tuple[int, ...]
    box_size: int
    nodes: int
    margin: int = field(default=0)

    def to_dict(self):
        return {'maximum': self.maximum, 'maximizer': list(self.maximizer), 'box_size': self.box_size,
                'nodes': self.nodes, 'margin': self.margin}

    @classmethod
    def from_dict(cls, data):
        return cls(data['maximum'], tuple(data['maximizer']), data['box_size'], data['nodes'],
                   data.get('margin', 0))


def check_characteristic(f, vector):
    """
    :raises CharacteristicParityError: Unless len(vector) = b2 and vector_i = Q_ii (mod 2) for every i
    """
    if len(vector) != f.b2:
        raise CharacteristicParityError('Vector of length {} does not match a form of rank {}'.format(
            len(vector), f.b2))
    for index, (value, weight) in enumerate(zip(vector, f.diagonal)):
        if (value - weight) % 2:
            raise CharacteristicParityError(
                'Entry {} = {} has the wrong parity for diagonal entry {}'.format(index, value, weight))


def _negative_definite_factorization(f):
    properties = form_properties(f)
    if not properties.negative_definite:
        raise DefinitenessError('Form of rank {} is not negative definite'.format(f.b2))
    return f.factorization(), properties


def _unimodular_factorization(f):
    factorization, properties = _negative_definite_factorization(f)
    if abs(properties.determinant) != 1:
        raise UnimodularityError('Form of rank {} has determinant {}'.format(f.b2, properties.determinant))
    return factorization, properties


def _candidates(center, pivot, remaining):
    """
    Integers t with pivot * (t - center)^2 <= remaining, with their contribution
    """
    radius = isqrt(floor(remaining / pivot)) + 1
    values = []
    for t in range(floor(center) - radius, floor(center) + radius + 2):
        term = pivot * (t - center) ** 2
        if term <= remaining:
            values.append((t, term))
    values.sort(key=lambda item: (item[1], item[0]))
    return values


def short_vectors(f, norm, budget=None):
    """
    Lists every v with v^T Q v = norm, one representative per pair +-v (first nonzero entry positive).
    Fincke-Pohst style backtracking on the positive-definite form -Q = L D L^T, from the last
    elimination position down to the first.

    :param f: Negative-definite form
    :type f: IntersectionForm
    :param norm: Target square, a negative integer
    :type norm: int
    :param budget: Node budget; defaults to ``config.SEARCH_BUDGET``
    :type budget: int
    :return: Sorted list of vectors in the vertex basis
    :rtype: list[tuple[int]]
    :raises DefinitenessError: If the form is not negative definite
    :raises DomainError: If norm is not negative
    """
    require_integer(norm, 'norm')
    if norm >= 0:
        raise DomainError('Short vectors are enumerated for negative squares, got {}'.format(norm))
    budget = setting(budget, 'SEARCH_BUDGET')
    if f.b2 == 0:
        return []
    factorization, _ = _negative_definite_factorization(f)
    rank = factorization.rank
    weights = [-pivot for pivot in factorization.pivots]
    target = Fraction(-norm)
    x = [0] * rank
    found = []
    nodes = 0

    def expand(position, remaining):
        center = -sum((coefficient * x[j] for j, coefficient in factorization.columns[position].items()),
                      Fraction(0))
        return iter(_candidates(center, weights[position], remaining))

    stack = [(rank - 1, expand(rank - 1, target), target)]
    while stack:
        position, values, remaining = stack[-1]
        step = next(values, None)
        if step is None:
            stack.pop()
            continue
        nodes += 1
        if nodes > budget:
            raise SearchBudgetError('Short vector search exceeded {} nodes'.format(budget), nodes=nodes)
        value, term = step
        x[position] = value
        rest = remaining - term
        if position == 0:
            if rest == 0:
                vector = [0] * rank
                for k, vertex in enumerate(factorization.order):
                    vector[vertex] = x[k]
                found.append(tuple(vector))
            continue
        stack.append((position - 1, expand(position - 1, rest), rest))

    representatives = sorted(vector for vector in found if next(entry for entry in vector if entry) > 0)
    logger.debug('Found {} vectors of square {} on a rank {} form in {} nodes'.format(
        len(representatives), norm, rank, nodes))
    return representatives


def diagonalize(f, budget=None):
    """
    Decides whether a negative-definite unimodular form is isomorphic to the standard form -I.
    A (-1)-vector v splits off an orthogonal unimodular summand <v>, and the (-1)-vectors of the complement are
    the (-1)-vectors of the whole lattice orthogonal to v, so splitting is iterated over the enumerated
    (-1)-vectors until the complement is empty or has none left.

    One enumeration is enough. A definite lattice splits uniquely as -I_k + L' with L' free of (-1)-vectors,
    and every (-1)-vector of it is one of the +-e_i of the -I_k part (a (-1)-vector with a nonzero L' component
    would have square below -1). Greedily keeping the pairwise orthogonal ones therefore always ends with exactly
    k vectors whatever the enumeration order, and the form is -I exactly when k equals the rank.

    :param f: Negative-definite unimodular form
    :type f: IntersectionForm
    :rtype: DiagonalizationResult
    :raises DefinitenessError: If the form is not negative definite
    :raises UnimodularityError: If |det Q| != 1
    """
    if f.b2 == 0:
        return DiagonalizationResult(True, (), 0)
    _unimodular_factorization(f)
    chosen = []
    for vector in short_vectors(f, -1, budget=budget):
        if len(chosen) == f.b2:
            break
        if all(f.pairing(vector, other) == 0 for other in chosen):
            chosen.append(vector)
    if len(chosen) < f.b2:
        logger.debug('Split off a diagonal summand of rank {} out of {}'.format(len(chosen), f.b2))
        return DiagonalizationResult(False, None, len(chosen))
    for i, left in enumerate(chosen):
        for j, right in enumerate(chosen):
            if f.pairing(left, right) != (-1 if i == j else 0):
                raise ConsistencyError('Diagonalizing basis does not have Gram matrix -I at ({}, {})'.format(i, j))
    return DiagonalizationResult(True, tuple(chosen), len(chosen))


def _box(f, margin):
    bounds = []
    for weight in f.diagonal:
        low, high = weight + 2 - margin, -weight + margin
        if (low - weight) % 2:
            low += 1
        if (high - weight) % 2:
            high -= 1
        bounds.append((low, high))
    return bounds


def _nearest_first(low, high, center):
    """
    Values low, low + 2, ..., high ordered by distance to center, smaller value first on ties
    """
    if low > high:
        return
    below = low + 2 * ((floor(center) - low) // 2)
    below = min(max(below, low - 2), high)
    above = below + 2
    while below >= low or above <= high:
        if above > high or (below >= low and center - below <= above - center):
            yield below
            below -= 2
        else:
            yield above
            above += 2


def _parity_range(low, high, start, stop):
    """
    Values of low's parity inside [max(low, start), min(high, stop)]
    """
    first = max(low, start)
    if (first - low) % 2:
        first += 1
    return range(first, min(high, stop) + 1, 2)


def _greedy_descent(factorization, bounds, weights):
    """
    Picks the value nearest to the running center at every position; gives the first upper bound
    """
    y, chosen = [], []
    total = Fraction(0)
    for position in range(factorization.rank):
        center = sum((coefficient * y[j] for j, coefficient in factorization.rows[position].items()),
                     Fraction(0))
        low, high = bounds[position]
        value = next(_nearest_first(low, high, center))
        residual = value - center
        y.append(residual)
        chosen.append(value)
        total += residual * residual / weights[position]
    return total, chosen


def _branch_and_bound(factorization, bounds, weights, budget, box_size):
    rank = factorization.rank
    best, best_x = _greedy_descent(factorization, bounds, weights)
    x = [0] * rank
    y = [Fraction(0)] * rank
    nodes = rank

    def expand(position):
        center = sum((coefficient * y[j] for j, coefficient in factorization.rows[position].items()),
                     Fraction(0))
        low, high = bounds[position]
        return center, _nearest_first(low, high, center)

    center, values = expand(0)
    stack = [(0, center, values, Fraction(0))]
    while stack:
        position, center, values, partial = stack[-1]
        value = next(values, None)
        if value is None:
            stack.pop()
            continue
        residual = value - center
        total = partial + residual * residual / weights[position]
        if total >= best:
            # Later values are no closer to the center
            stack.pop()
            continue
        nodes += 1
        if nodes > budget:
            raise SearchBudgetError(
                'Characteristic search over a box of {} vectors exceeded {} nodes'.format(box_size, budget),
                box_size=box_size, nodes=nodes)
        x[position] = value
        y[position] = residual
        if position == rank - 1:
            best, best_x = total, list(x)
            continue
        next_center, next_values = expand(position + 1)
        stack.append((position + 1, next_center, next_values, total))
    return best, best_x, nodes


def _flatten(trace, rank):
    values = [0] * rank
    stack = [trace]
    while stack:
        item = stack.pop()
        if item is None:
            continue
        if item[0] == 'x':
            values[item[1]] = item[2]
            stack.append(item[3])
        else:
            stack.extend(item[1:])
    return values


def _forest_search(factorization, bounds, weights, budget, box_size):
    """
    Exact minimization when the elimination has no fill-in, as for every plumbing tree.
    Each position then couples to a single later position, so the cost of a subtree depends on the rest only
    through its top residual y; equal residuals are merged keeping the cheaper subtree.
    """
    rank = factorization.rank
    bound, _ = _greedy_descent(factorization, bounds, weights)
    messages = [None] * rank
    best, trace = Fraction(0), None
    nodes = rank

    def charge(count):
        if count > budget:
            raise SearchBudgetError(
                'Characteristic search over a box of {} vectors exceeded {} nodes'.format(box_size, budget),
                box_size=box_size, nodes=count)

    for position in range(rank):
        sums = {Fraction(0): (Fraction(0), None)}
        for child, coefficient in factorization.rows[position].items():
            combined = {}
            for partial_sum, (cost, partial_trace) in sums.items():
                for residual, (child_cost, child_trace) in messages[child].items():
                    total = cost + child_cost
                    if total > bound:
                        continue
                    key = partial_sum + coefficient * residual
                    current = combined.get(key)
                    if current is None or total < current[0]:
                        combined[key] = (total, ('+', partial_trace, child_trace))
            nodes += len(sums) * len(messages[child])
            charge(nodes)
            sums = combined
            messages[child] = None

        low, high = bounds[position]
        weight = weights[position]
        message = {}
        for center, (cost, partial_trace) in sums.items():
            radius = isqrt(floor((bound - cost) * weight)) + 1
            for value in _parity_range(low, high, floor(center) - radius, floor(center) + radius + 1):
                residual = value - center
                total = cost + residual * residual / weight
                if total > bound:
                    continue
                nodes += 1
                current = message.get(residual)
                if current is None or total < current[0]:
                    message[residual] = (total, ('x', position, value, partial_trace))
        charge(nodes)

        if factorization.columns[position]:
            messages[position] = message
        else:
            root_cost, root_trace = min(message.values(), key=lambda item: item[0])
            best += root_cost
            trace = ('+', trace, root_trace)
    return best, _flatten(trace, rank), nodes


def characteristic_search(f, margin=None, budget=None):
    """
    Maximizes K^2 = x^T Q^-1 x over characteristic x in the box Q_ii + 2 - M <= x_i <= -Q_ii + M.
    With -Q = L D L^T and y = L^-1 x, the quantity -K^2 is the sum of y_k^2 / D_k and every term is
    nonnegative, so any partial assignment whose cost already exceeds a known solution is cut.
    Forms whose elimination is a forest (plumbing trees, diagonal forms) are solved by merging subtree
    states; other forms fall back to depth-first branch and bound.

    :param f: Negative-definite unimodular form
    :type f: IntersectionForm
    :param margin: Box widening M; defaults to ``config.CHAR_BOX_MARGIN``
    :type margin: int
    :param budget: Node budget; defaults to ``config.SEARCH_BUDGET``
    :type budget: int
    :rtype: CharSearchResult
    :raises SearchBudgetError: If the search explores more nodes than the budget
    :raises ConsistencyError: If the maximum is not an integer congruent to -b2 mod 8
    """
    margin = require_integer(setting(margin, 'CHAR_BOX_MARGIN'), 'margin', 0)
    budget = setting(budget, 'SEARCH_BUDGET')
    if f.b2 == 0:
        return CharSearchResult(0, (), 1, 0, margin)
    factorization, _ = _unimodular_factorization(f)
    bounds = _box(f, margin)
    box_size = 1
    for low, high in bounds:
        box_size *= (high - low) // 2 + 1
    ordered_bounds = [bounds[vertex] for vertex in factorization.order]
    weights = [-pivot for pivot in factorization.pivots]

    if all(len(column) <= 1 for column in factorization.columns):
        best, best_x, nodes = _forest_search(factorization, ordered_bounds, weights, budget, box_size)
    else:
        best, best_x, nodes = _branch_and_bound(factorization, ordered_bounds, weights, budget, box_size)

    if best.denominator != 1:
        raise ConsistencyError('Maximal characteristic square {} is not an integer'.format(-best))
    maximum = -best.numerator
    if (maximum + f.b2) % 8:
        raise ConsistencyError('Maximal characteristic square {} is not congruent to -{} mod 8'.format(
            maximum, f.b2))
    maximizer = [0] * factorization.rank
    for k, vertex in enumerate(factorization.order):
        maximizer[vertex] = best_x[k]
    logger.debug('Characteristic maximum {} on rank {} after {} nodes (box of {} vectors)'.format(
        maximum, f.b2, nodes, box_size))
    return CharSearchResult(maximum, tuple(maximizer), box_size, nodes, margin)


def max_char_square(f, margin=None, budget=None):
    """
    :return: The largest K^2 over characteristic vectors of the box, an integer for unimodular forms
    :rtype: int
    """
    return characteristic_search(f, margin=margin, budget=budget).maximum
