"""
Sparse symmetric elimination over the rationals.
Plumbing forms are trees, so eliminating leaves first produces no fill-in and keeps every step linear in the rank.
"""
# Native libraries
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Tuple
# Project libraries
from brieskorn.utilities.utils import setup_logger
import brieskorn.config as config

logger = setup_logger(__name__, config.DEBUG_LEVEL)


@dataclass(frozen=True)
class SymmetricFactorization:
    """
    Factorization P Q P^T = L D L^T of a symmetric matrix, L unit lower triangular.
    Positions refer to the elimination order; ``order[k]`` is the original index eliminated at step k.
    """
    #: Original vertex index for each elimination position
    order: Tuple[int, ...]
    #: Diagonal entries D_k, one per position
    pivots: Tuple[Fraction, ...]
    #: rows[k] = {j: L_kj} for j < k
    rows: Tuple[Dict[int, Fraction], ...]
    #: columns[k] = {i: L_ik} for i > k
    columns: Tuple[Dict[int, Fraction], ...]

    @property
    def rank(self):
        return len(self.order)

    @property
    def position(self):
        """
        :return: Inverse of ``order``: original index -> elimination position
        :rtype: dict
        """
        return {vertex: index for index, vertex in enumerate(self.order)}

    def determinant(self):
        value = Fraction(1)
        for pivot in self.pivots:
            value *= pivot
        return value

    def solve_lower(self, values):
        """
        Forward substitution L y = x for x given in elimination order

        :param values: Right-hand side in elimination order
        :type values: Sequence
        :rtype: list[Fraction]
        """
        solution = []
        for k, value in enumerate(values):
            total = Fraction(value)
            for j, coefficient in self.rows[k].items():
                total -= coefficient * solution[j]
            solution.append(total)
        return solution

    def inverse_quadratic(self, vector):
        """
        Exact x^T Q^-1 x for x given in the original vertex order

        :param vector: Integer vector
        :type vector: Sequence[int]
        :rtype: Fraction
        """
        permuted = [vector[vertex] for vertex in self.order]
        y = self.solve_lower(permuted)
        return sum((value * value / pivot for value, pivot in zip(y, self.pivots)), Fraction(0))


def _sparse_rows(matrix):
    rows = []
    for i, row in enumerate(matrix):
        rows.append({j: Fraction(entry) for j, entry in enumerate(row) if entry != 0 or i == j})
    return rows


def factorize(matrix):
    """
    Computes a symmetric LDL^T factorization with a greedy minimum-degree ordering.
    Ties are broken by the smallest original index, so the result is deterministic.

    :param matrix: Symmetric integer matrix
    :type matrix: Sequence[Sequence[int]]
    :return: The factorization, or None when a zero pivot is met
    :rtype: SymmetricFactorization or None
    """
    work = _sparse_rows(matrix)
    remaining = set(range(len(work)))
    order, pivots = [], []
    raw_columns = []
    while remaining:
        vertex = min(remaining, key=lambda index: (len(work[index]), index))
        pivot = work[vertex][vertex]
        if pivot == 0:
            logger.debug('Zero pivot at vertex {} after {} eliminations'.format(vertex, len(order)))
            return None
        neighbours = [index for index in work[vertex] if index != vertex]
        multipliers = {index: work[index][vertex] / pivot for index in neighbours}
        # Schur complement update
        for i in neighbours:
            for j in neighbours:
                update = work[i].get(j, Fraction(0)) - multipliers[i] * work[vertex][j]
                if update == 0 and i != j:
                    work[i].pop(j, None)
                else:
                    work[i][j] = update
            del work[i][vertex]
        remaining.discard(vertex)
        order.append(vertex)
        pivots.append(pivot)
        raw_columns.append(multipliers)

    position = {vertex: index for index, vertex in enumerate(order)}
    columns = tuple({position[vertex]: value for vertex, value in multipliers.items()}
                    for multipliers in raw_columns)
    rows = [dict() for _ in order]
    for k, column in enumerate(columns):
        for i, value in column.items():
            rows[i][k] = value
    return SymmetricFactorization(tuple(order), tuple(pivots), tuple(rows), columns)


def dense_determinant(matrix):
    """
    Exact determinant by Gaussian elimination with row pivoting, for matrices the sparse path cannot factor

    :param matrix: Square integer matrix
    :type matrix: Sequence[Sequence[int]]
    :rtype: int
    """
    rows = [[Fraction(entry) for entry in row] for row in matrix]
    size = len(rows)
    determinant = Fraction(1)
    for column in range(size):
        pivot_row: Optional[int] = next((row for row in range(column, size) if rows[row][column] != 0), None)
        if pivot_row is None:
            return 0
        if pivot_row != column:
            rows[column], rows[pivot_row] = rows[pivot_row], rows[column]
            determinant = -determinant
        pivot = rows[column][column]
        determinant *= pivot
        for row in range(column + 1, size):
            factor = rows[row][column] / pivot
            if factor:
                for index in range(column, size):
                    rows[row][index] -= factor * rows[column][index]
    return int(determinant)
