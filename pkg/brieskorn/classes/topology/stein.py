"""
Rotation vectors of Stein structures on plumbing handle diagrams and Legendrian counts for torus knots
"""
# Native libraries
from dataclasses import dataclass
from itertools import islice, product
from math import prod
from typing import Tuple
# Project libraries
from brieskorn.classes.topology.arith import require_coprime_pair, require_integer
from brieskorn.classes.topology.errors import UnsupportedFramingError
from brieskorn.utilities.utils import setting, setup_logger
import brieskorn.config as config

logger = setup_logger(__name__, config.DEBUG_LEVEL)


@dataclass(frozen=True)
class RotProfile:
    """
    Possible rotation numbers per vertex: a weight -n unknot is a tb = -1 unknot stabilized n - 2 times,
    giving the n - 1 values -(n-2), -(n-2)+2, ..., n-2
    """
    ranges: Tuple[Tuple[int, ...], ...]
    total_count: int
    zero_exists: bool

    def to_dict(self):
        return {'ranges': [list(values) for values in self.ranges], 'total_count': self.total_count,
                'zero_exists': self.zero_exists}

    @classmethod
    def from_dict(cls, data):
        return cls(tuple(tuple(values) for values in data['ranges']), data['total_count'], data['zero_exists'])


@dataclass(frozen=True)
class RotEnumeration:
    vectors: Tuple[Tuple[int, ...], ...]
    truncated: bool
    total_count: int

    def to_dict(self):
        return {'vectors': [list(vector) for vector in self.vectors], 'truncated': self.truncated,
                'total_count': self.total_count}

    @classmethod
    def from_dict(cls, data):
        return cls(tuple(tuple(vector) for vector in data['vectors']), data['truncated'], data['total_count'])


@dataclass(frozen=True)
class LegendrianCount:
    """
    Maximal Thurston-Bennequin representatives of a positive torus knot and their rotation numbers
    """
    tb_max: int
    count: int
    rot_values: Tuple[int, ...]

    def to_dict(self):
        return {'tb_max': self.tb_max, 'count': self.count, 'rot_values': list(self.rot_values)}

    @classmethod
    def from_dict(cls, data):
        return cls(data['tb_max'], data['count'], tuple(data['rot_values']))


def rot_profile(g):
    """
    :param g: Plumbing graph
    :type g: PlumbingGraph
    :rtype: RotProfile
    :raises UnsupportedFramingError: If a vertex has weight -1 or more
    """
    ranges = []
    for index, weight in enumerate(g.weights):
        if weight >= -1:
            raise UnsupportedFramingError(
                'Vertex {} has weight {}; rotation ranges need weights at most -2'.format(index, weight))
        n = -weight
        ranges.append(tuple(range(-(n - 2), n - 1, 2)))
    total = prod(len(values) for values in ranges)
    zero_exists = all(weight % 2 == 0 for weight in g.weights)
    return RotProfile(tuple(ranges), total, zero_exists)


def enumerate_rot_vectors(g, limit=None):
    """
    Lists rotation vectors in lexicographic order, stopping after ``limit`` of them

    :param g: Plumbing graph
    :type g: PlumbingGraph
    :param limit: Maximum number of vectors; defaults to ``config.ENUMERATION_LIMIT``
    :type limit: int
    :rtype: RotEnumeration
    """
    limit = require_integer(setting(limit, 'ENUMERATION_LIMIT'), 'limit', 1)
    profile = rot_profile(g)
    vectors = tuple(islice(product(*profile.ranges), limit + 1))
    truncated = len(vectors) > limit
    if truncated:
        logger.debug('Rotation enumeration truncated at {} of {} vectors'.format(limit, profile.total_count))
    return RotEnumeration(vectors[:limit], truncated, profile.total_count)


def torus_legendrian_count(p, q):
    """
    tb_max = pq - p - q, with one maximal representative per rotation number -tb_max, -tb_max + 2, ..., tb_max

    :rtype: LegendrianCount
    """
    require_coprime_pair(p, q)
    tb_max = p * q - p - q
    return LegendrianCount(tb_max, tb_max + 1, tuple(range(-tb_max, tb_max + 1, 2)))
