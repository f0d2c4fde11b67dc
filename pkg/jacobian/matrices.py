"""Exact Jacobians of power-sum products and fraction-free linear algebra."""
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from core.exceptions import DegreeMismatch, DimensionMismatch, ParameterError
from symmetric.powersums import PowerSumTerm, power_sum_value

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class JacobianSpec:
    """Generating forms of the Jacobian's columns, all of one degree."""
    generators: tuple
    n: int
    degree: int

    def __post_init__(self):
        for term in self.generators:
            if term.degree != self.degree:
                raise DegreeMismatch(
                    f'Generator {term} has degree {term.degree}, expected {self.degree}')

    @classmethod
    def for_form(cls, form):
        """Free terms of ``form`` followed by M_2^{2d}, M_{2d}^2, M_{2d} M_2^d."""
        free = tuple(term for term, _ in form.free_terms())
        return cls(free + form.anchors(), form.n, form.degree)

    @property
    def d(self):
        return self.degree // 4

    @property
    def mixed(self):
        d = self.d
        return PowerSumTerm.of((2 * d, 1), (2, d))

    def without_mixed(self):
        return JacobianSpec(
            tuple(term for term in self.generators if term != self.mixed), self.n, self.degree)


def reduced(term, j):
    """``term`` with one factor M_j removed."""
    return PowerSumTerm(tuple((i, k - (i == j)) for i, k in term.factors if k - (i == j)))


def column_parts(term):
    """d(term)/dx_i as a sum of scalar * prefactor * x_i^(j-1) parts.

    Returns (scalar, prefactor, j) triples with scalar = j * k.
    """
    return [(j * k, reduced(term, j), j) for j, k in term.factors]


def parts_entry(parts, power_sum, coordinate):
    return sum(scalar * prefactor.value(power_sum) * coordinate ** (j - 1)
               for scalar, prefactor, j in parts)


def column_entry(term, power_sum, coordinate):
    """d(term)/dx_i at a coordinate x_i, with ``power_sum(j)`` the value of M_j."""
    return parts_entry(column_parts(term), power_sum, coordinate)


def jacobian_at(spec, y):
    """Rows i, columns c: d(generator_c)/dx_i at y, exactly."""
    if len(y) != spec.n:
        raise DimensionMismatch(f'Point has {len(y)} coordinates, spec has {spec.n} variables')
    y = tuple(Fraction(x) for x in y)
    sums = {}

    def power_sum(j):
        if j not in sums:
            sums[j] = power_sum_value(j, y)
        return sums[j]

    return tuple(tuple(Fraction(column_entry(term, power_sum, x)) for term in spec.generators)
                 for x in y)


def _integer_rows(rows):
    result = []
    for row in rows:
        row = [Fraction(x) for x in row]
        scale = lcm(*(x.denominator for x in row)) if row else 1
        result.append([int(x * scale) for x in row])
    return result


def bareiss_rank(rows):
    """Rank by fraction-free elimination; every division is exact."""
    matrix = _integer_rows(rows)
    if not matrix:
        return 0
    height, width = len(matrix), len(matrix[0])
    rank, previous = 0, 1
    for column in range(width):
        pivot = next((r for r in range(rank, height) if matrix[r][column]), None)
        if pivot is None:
            continue
        matrix[rank], matrix[pivot] = matrix[pivot], matrix[rank]
        for r in range(rank + 1, height):
            for c in range(column + 1, width):
                matrix[r][c] = (matrix[r][c] * matrix[rank][column]
                                - matrix[r][column] * matrix[rank][c]) // previous
            matrix[r][column] = 0
        previous = matrix[rank][column]
        rank += 1
        if rank == height:
            break
    return rank


def determinant(rows):
    """Exact determinant of a square matrix by Gaussian elimination over Fractions."""
    matrix = [[Fraction(x) for x in row] for row in rows]
    size = len(matrix)
    if any(len(row) != size for row in matrix):
        raise DimensionMismatch('Determinant of a non-square matrix')
    value = Fraction(1)
    for column in range(size):
        pivot = next((r for r in range(column, size) if matrix[r][column]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != column:
            matrix[column], matrix[pivot] = matrix[pivot], matrix[column]
            value = -value
        value *= matrix[column][column]
        for r in range(column + 1, size):
            factor = matrix[r][column] / matrix[column][column]
            for c in range(column, size):
                matrix[r][c] -= factor * matrix[column][c]
    return value


def rank_at(spec, y, drop_mixed=False):
    """Exact rank of the Jacobian at y, optionally without the M_{2d} M_2^d column."""
    if drop_mixed:
        spec = spec.without_mixed()
    rank = bareiss_rank(jacobian_at(spec, y))
    logger.debug('rank %d at %s', rank, y)
    return rank


def fourth_column_span(spec, y):
    """Coefficients (c2, c3) with col(M_{2d} M_2^d) = c2 col(M_2^{2d}) + c3 col(M_{2d}^2)."""
    y = tuple(Fraction(x) for x in y)
    d = spec.d
    m2, m2d = power_sum_value(2, y), power_sum_value(2 * d, y)
    if not m2 or not m2d:
        raise ParameterError('The span coefficients need y != 0')
    return m2d / (2 * m2 ** d), m2 ** d / (2 * m2d)


def kernel_coefficients(spec, y):
    """Coordinates of T_y on the generators of ``spec`` (zero on the free terms)."""
    y = tuple(Fraction(x) for x in y)
    d = spec.d
    m2, m2d = power_sum_value(2, y), power_sum_value(2 * d, y)
    anchors = {
        PowerSumTerm.power(2, 2 * d): m2d ** 2,
        PowerSumTerm.power(2 * d, 2): m2 ** (2 * d),
        spec.mixed: -2 * m2 ** d * m2d,
    }
    return tuple(anchors.get(term, Fraction(0)) for term in spec.generators)


def in_kernel(spec, y, coefficients):
    """True when J(y) maps ``coefficients`` to zero."""
    return all(sum((a * c for a, c in zip(row, coefficients)), Fraction(0)) == 0
               for row in jacobian_at(spec, y))
