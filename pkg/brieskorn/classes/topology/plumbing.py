"""
Star-shaped negative-definite plumbing graphs built from Seifert invariants,
their intersection forms, and DOT export
"""
# Native libraries
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple
# Project libraries
from brieskorn.classes.topology.arith import neg_cont_frac, require_integer
from brieskorn.classes.topology.elimination import dense_determinant, factorize
from brieskorn.classes.topology.errors import InputValidationError
from brieskorn.utilities.utils import setup_logger
import brieskorn.config as config

logger = setup_logger(__name__, config.DEBUG_LEVEL)


@dataclass(frozen=True)
class PlumbingGraph:
    """
    Star-shaped plumbing tree: a central vertex joined to the first vertex of each leg, legs being chains.
    Vertices are indexed center first (0), then each leg center-outward in leg order.
    """
    center_weight: int
    legs: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, 'legs', tuple(tuple(leg) for leg in self.legs))
        require_integer(self.center_weight, 'center weight')
        if self.center_weight > -1:
            raise InputValidationError('Center weight must be at most -1, got {}'.format(self.center_weight))
        for leg in self.legs:
            if not leg:
                raise InputValidationError('Plumbing legs must not be empty')
            for weight in leg:
                require_integer(weight, 'leg weight')
                if weight > -2:
                    raise InputValidationError('Leg weights must be at most -2, got {}'.format(list(leg)))

    @property
    def weights(self):
        """
        :return: Vertex weights in vertex index order
        :rtype: list[int]
        """
        values = [self.center_weight]
        for leg in self.legs:
            values.extend(leg)
        return values

    @property
    def vertex_count(self):
        return 1 + sum(len(leg) for leg in self.legs)

    def vertex_ids(self):
        """
        Stable identifiers ``v0`` for the center and ``L{i}_{j}`` for position j of leg i, both 0-based

        :rtype: list[str]
        """
        ids = ['v0']
        for i, leg in enumerate(self.legs):
            ids.extend('L{}_{}'.format(i, j) for j in range(len(leg)))
        return ids

    def edges(self):
        """
        :return: Pairs of adjacent vertex indices, smaller index first
        :rtype: list[tuple[int, int]]
        """
        pairs = []
        index = 1
        for leg in self.legs:
            pairs.append((0, index))
            for offset in range(len(leg) - 1):
                pairs.append((index + offset, index + offset + 1))
            index += len(leg)
        return pairs

    def valences(self):
        counts = [0] * self.vertex_count
        for left, right in self.edges():
            counts[left] += 1
            counts[right] += 1
        return counts

    def to_dict(self):
        return {'center_weight': self.center_weight, 'legs': [list(leg) for leg in self.legs]}

    @classmethod
    def from_dict(cls, data):
        return cls(data['center_weight'], tuple(tuple(leg) for leg in data['legs']))


@dataclass(frozen=True)
class IntersectionForm:
    """
    Symmetric integer matrix Q of a plumbing (or any lattice fixture) on its vertex basis
    """
    matrix: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.matrix)
        object.__setattr__(self, 'matrix', rows)
        size = len(rows)
        for i, row in enumerate(rows):
            if len(row) != size:
                raise InputValidationError('Intersection matrix must be square, row {} has {} entries'.format(
                    i, len(row)))
            for j, entry in enumerate(row):
                require_integer(entry, 'matrix entry')
                if entry != rows[j][i]:
                    raise InputValidationError('Intersection matrix must be symmetric at ({}, {})'.format(i, j))

    @property
    def b2(self):
        return len(self.matrix)

    @property
    def diagonal(self):
        return [self.matrix[i][i] for i in range(self.b2)]

    @classmethod
    def diagonal_form(cls, entries):
        """
        :param entries: Diagonal entries
        :type entries: Sequence[int]
        :rtype: IntersectionForm
        """
        size = len(entries)
        return cls(tuple(tuple(entries[i] if i == j else 0 for j in range(size)) for i in range(size)))

    def pairing(self, left, right):
        """
        :return: left^T Q right
        :rtype: int
        """
        total = 0
        for i, row in enumerate(self.matrix):
            if left[i]:
                total += left[i] * sum(entry * right[j] for j, entry in enumerate(row) if entry)
        return total

    def square(self, vector):
        return self.pairing(vector, vector)

    def factorization(self):
        """
        Sparse LDL^T factorization, memoized per instance

        :rtype: SymmetricFactorization or None
        """
        cached = self.__dict__.get('_factorization', False)
        if cached is False:
            cached = factorize(self.matrix)
            object.__setattr__(self, '_factorization', cached)
        return cached

    def to_dict(self):
        return {'matrix': [list(row) for row in self.matrix], 'b2': self.b2}

    @classmethod
    def from_dict(cls, data):
        return cls(tuple(tuple(row) for row in data['matrix']))


@dataclass(frozen=True)
class FormProperties:
    negative_definite: bool
    determinant: int
    even: bool
    b2: int

    def to_dict(self):
        return {'negative_definite': self.negative_definite, 'determinant': self.determinant,
                'even': self.even, 'b2': self.b2}

    @classmethod
    def from_dict(cls, data):
        return cls(data['negative_definite'], data['determinant'], data['even'], data['b2'])


def build_plumbing(s):
    """
    Builds the star-shaped plumbing of a Seifert fibered homology sphere.
    The center carries e0; leg i carries the negative continued fraction of -a_i/b_i.

    :param s: Seifert invariants
    :type s: SeifertData
    :rtype: PlumbingGraph
    """
    legs = []
    for fraction in s.fractions:
        expansion = neg_cont_frac(-1 / Fraction(fraction))
        legs.append(expansion.weights)
    graph = PlumbingGraph(s.e0, tuple(legs))
    logger.debug('Plumbing with {} vertices, center {}, legs {}'.format(
        graph.vertex_count, graph.center_weight, [list(leg) for leg in graph.legs]))
    return graph


def intersection_matrix(g):
    """
    :param g: Plumbing graph
    :type g: PlumbingGraph
    :return: Q with the vertex weights on the diagonal and 1 for each edge
    :rtype: IntersectionForm
    """
    size = g.vertex_count
    rows = [[0] * size for _ in range(size)]
    for index, weight in enumerate(g.weights):
        rows[index][index] = weight
    for left, right in g.edges():
        rows[left][right] = 1
        rows[right][left] = 1
    return IntersectionForm(tuple(tuple(row) for row in rows))


def form_properties(f):
    """
    Exact definiteness, determinant and parity of a form.
    Q is negative definite exactly when every leading principal minor of -Q is positive; with a symmetric
    elimination this is read off the pivots, which are ratios of consecutive leading minors.

    :param f: Intersection form
    :type f: IntersectionForm
    :rtype: FormProperties
    """
    even = all(entry % 2 == 0 for entry in f.diagonal)
    if f.b2 == 0:
        return FormProperties(True, 1, True, 0)
    factorization = f.factorization()
    if factorization is None:
        return FormProperties(False, dense_determinant(f.matrix), even, f.b2)
    determinant = factorization.determinant()
    negative_definite = all(pivot < 0 for pivot in factorization.pivots)
    return FormProperties(negative_definite, int(determinant), even, f.b2)


def bad_vertices(g):
    """
    Vertices whose weight exceeds minus their valence

    :param g: Plumbing graph
    :type g: PlumbingGraph
    :rtype: list[int]
    """
    return [index for index, (weight, valence) in enumerate(zip(g.weights, g.valences())) if weight > -valence]


def to_dot(g):
    """
    Renders the graph as an undirected DOT document, nodes center first then each leg leaf-ward

    :param g: Plumbing graph
    :type g: PlumbingGraph
    :rtype: str
    """
    ids = g.vertex_ids()
    lines = ['graph plumbing {']
    for vertex_id, weight in zip(ids, g.weights):
        lines.append('  {} [label="{}"];'.format(vertex_id, weight))
    for left, right in g.edges():
        lines.append('  {} -- {};'.format(ids[left], ids[right]))
    lines.append('}')
    return '\n'.join(lines) + '\n'
