"""Factorization of Jacobian minors into Vandermonde times Schur polynomials.

For columns whose derivative is a sum of parts c * P * x_i^(j-1) (c a
constant, P a power-sum product), the leading m x m minor expands by
multilinearity into alternants det[x_i^(e_c)], and each alternant is
sign(sorting) * Delta_m * S_lambda with lambda = sorted(e) - (m-1, ..., 0).
"""
import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import prod

import sympy
from django.conf import settings

from core.exceptions import (
    CertificateFailure, DimensionMismatch, ParameterError, ZeroMinorError)
from jacobian.matrices import bareiss_rank, column_parts, determinant, parts_entry
from schur.polynomials import schur_by_kostka
from symmetric.powersums import Partition, PowerSumForm, PowerSumTerm, power_sum_value
from testsets.conditions import sorting_sign

logger = logging.getLogger(__name__)

SYMBOLIC_MAX_SIZE = 4
SYMBOLIC_MAX_DEGREE = 40
RANDOM_CHECKS = 5

SYMBOLIC = 'symbolic'
RANDOM_POINTS = 'random-points'

EMPTY = PowerSumTerm(())


@dataclass(frozen=True)
class MinorSummand:
    constant: int
    prefactor: PowerSumTerm
    exponents: tuple
    sign: int
    schur_index: Partition

    def __str__(self):
        sign = '-' if self.sign < 0 else '+'
        prefactor = f' * {self.prefactor}' if self.prefactor.factors else ''
        return f'{sign} {self.constant}{prefactor} * Delta * S{self.schur_index}'


@dataclass(frozen=True)
class MinorFactorization:
    """minor = constant * prefactor * sum of summands (Delta the Vandermonde of the rows)."""
    rows: tuple
    size: int
    constant: int
    prefactor: PowerSumTerm
    summands: tuple
    verified: str
    alternant_index: Partition = None

    @property
    def signs(self):
        return {summand.sign for summand in self.summands}

    @property
    def sign(self):
        signs = self.signs
        return signs.pop() if len(signs) == 1 else 0

    @property
    def schur_index(self):
        return self.summands[0].schur_index if len(self.summands) == 1 else None


def schur_index(exponents):
    """lambda with sorted(e) = lambda + (m-1, ..., 0); ``None`` if exponents repeat."""
    if len(set(exponents)) != len(exponents):
        return None
    size = len(exponents)
    ordered = sorted(exponents, reverse=True)
    return Partition.from_parts(e - (size - 1 - i) for i, e in enumerate(ordered))


def factor_columns(columns):
    """Summands of the minor of ``columns`` (lists of (scalar, prefactor, j) parts).

    Single-part columns contribute to the common constant and prefactor.
    """
    constant, prefactor = 1, EMPTY
    for parts in columns:
        if len(parts) == 1:
            constant *= parts[0][0]
            prefactor = prefactor * parts[0][1]
    summands = []
    for choice in product(*columns):
        exponents = tuple(j - 1 for _, _, j in choice)
        index = schur_index(exponents)
        if index is None:
            continue
        summand_constant, summand_prefactor = 1, EMPTY
        for parts, (scalar, factor, _) in zip(columns, choice):
            if len(parts) > 1:
                summand_constant *= scalar
                summand_prefactor = summand_prefactor * factor
        summands.append(MinorSummand(summand_constant, summand_prefactor, exponents,
                                     sorting_sign(exponents), index))
    if not summands:
        raise ZeroMinorError('Every summand has a repeated exponent: the minor is zero')
    return constant, prefactor, tuple(summands)


def vandermonde(values):
    return prod((a - b for i, a in enumerate(values) for b in values[i + 1:]), start=1)


@lru_cache(maxsize=None)
def _schur(index, size):
    return schur_by_kostka(index, size)


def _right_hand_side(constant, prefactor, summands, power_sum, rows):
    total = Fraction(0)
    for summand in summands:
        total += (summand.sign * summand.constant * summand.prefactor.value(power_sum)
                  * _schur(summand.schur_index, len(rows)).evaluate(rows))
    return constant * prefactor.value(power_sum) * vandermonde(rows) * total


def verify_symbolic(columns, constant, prefactor, summands):
    """Compare the expanded minor with the factorization, power sums kept formal."""
    size = len(columns)
    xs = sympy.symbols(f'x1:{size + 1}')
    indices = {j for parts in columns for _, factor, _ in parts for j in factor.indices}
    indices |= {j for s in summands for j in s.prefactor.indices} | set(prefactor.indices)
    power_symbols = {j: sympy.Symbol(f'M{j}') for j in indices}

    def power_sum(j):
        return power_symbols[j]

    matrix = sympy.Matrix(size, size, lambda i, c: parts_entry(columns[c], power_sum, xs[i]))
    rhs = sympy.Integer(0)
    for summand in summands:
        rhs += (summand.sign * summand.constant * summand.prefactor.value(power_sum)
                * _schur(summand.schur_index, size).as_expression(xs))
    rhs *= constant * prefactor.value(power_sum) * vandermonde(xs)
    return sympy.expand(matrix.det(method='berkowitz') - rhs) == 0


def verify_at_points(columns, constant, prefactor, summands, n, checks=RANDOM_CHECKS, seed=None):
    """Identity test of the factorization at random rational points of Q^n."""
    size = len(columns)
    rng = random.Random(settings.SYMTEST_SEED if seed is None else seed)
    for _ in range(checks):
        point = tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(n))
        sums = {}

        def power_sum(j):
            if j not in sums:
                sums[j] = power_sum_value(j, point)
            return sums[j]

        rows = point[:size]
        minor = determinant([[parts_entry(parts, power_sum, x) for parts in columns]
                             for x in rows])
        if minor != _right_hand_side(constant, prefactor, summands, power_sum, rows):
            logger.error('minor factorization fails at %s', point)
            return False
    return True


def _verified(columns, constant, prefactor, summands, n, degree):
    size = len(columns)
    if size <= SYMBOLIC_MAX_SIZE and degree <= SYMBOLIC_MAX_DEGREE:
        if not verify_symbolic(columns, constant, prefactor, summands):
            raise CertificateFailure('Expanded minor differs from its factorization')
        return SYMBOLIC
    if not verify_at_points(columns, constant, prefactor, summands, n):
        raise CertificateFailure('Minor differs from its factorization at a random point')
    return RANDOM_POINTS


def minor_factorization(spec, size=None):
    """Factor the leading minor (rows x_1..x_m, first m columns) of the Jacobian.

    The M_{2d} M_2^d column lies in the span of the M_2^{2d} and M_{2d}^2
    columns and is dropped first.
    """
    spec = spec.without_mixed()
    size = len(spec.generators) if size is None else size
    if not 1 <= size <= len(spec.generators):
        raise ParameterError(f'Minor size must be in 1..{len(spec.generators)}, got {size}')
    if size > spec.n:
        raise ParameterError(f'A {size} x {size} minor needs n >= {size}, got n={spec.n}')
    columns = [column_parts(term) for term in spec.generators[:size]]
    constant, prefactor, summands = factor_columns(columns)
    verified = _verified(columns, constant, prefactor, summands, spec.n, spec.degree)
    logger.info('minor of size %d: %d summands, verified %s', size, len(summands), verified)
    return MinorFactorization(tuple(range(1, size + 1)), size, constant, prefactor,
                              summands, verified)


@dataclass(frozen=True)
class KernelForm:
    """T_y = (M2(y)^d M_2d - M_2d(y) M2^d)^2."""
    point: tuple
    m2: Fraction
    m2d: Fraction
    form: PowerSumForm


def kernel_form(y, d, n):
    if len(y) != n:
        raise DimensionMismatch(f'Point has {len(y)} coordinates, expected {n}')
    if d < 2:
        raise ParameterError(f'The kernel form needs d >= 2, got d={d}')
    y = tuple(Fraction(x) for x in y)
    if not any(y):
        raise ParameterError('The kernel form is undefined at y = 0')
    m2, m2d = power_sum_value(2, y), power_sum_value(2 * d, y)
    a, b = m2 ** d, m2d
    form = PowerSumForm.from_dict(n, 4 * d, {
        PowerSumTerm.power(2 * d, 2): a ** 2,
        PowerSumTerm.of((2 * d, 1), (2, d)): -2 * a * b,
        PowerSumTerm.power(2, 2 * d): b ** 2,
    })
    return KernelForm(y, m2, m2d, form)


def phi_columns(d):
    """Parts of the columns of (M_2, M_{2d-2}, M_{2d})."""
    return [[(j, EMPTY, j)] for j in (2, 2 * d - 2, 2 * d)]


def phi_map_rank(y, d, n):
    """Rank of the 3 x n Jacobian of x -> (M_2, M_{2d-2}, M_{2d}) at y."""
    if d < 3:
        raise ParameterError(f'The map needs d >= 3, got d={d}')
    if len(y) != n:
        raise DimensionMismatch(f'Point has {len(y)} coordinates, expected {n}')
    columns = phi_columns(d)
    rows = [[parts_entry(parts, None, Fraction(x)) for parts in columns] for x in y]
    return bareiss_rank(rows)


def phi_minor_factorization(d):
    """Factor the leading 3 x 3 minor of the Jacobian of (M_2, M_{2d-2}, M_{2d}).

    ``alternant_index`` is the index of det[x_i^2, x_i^(2d-2), x_i^(2d)] / Delta.
    """
    if d < 3:
        raise ParameterError(f'The map needs d >= 3, got d={d}')
    columns = phi_columns(d)
    constant, prefactor, summands = factor_columns(columns)
    verified = _verified(columns, constant, prefactor, summands, 3, 2 * d)
    return MinorFactorization((1, 2, 3), 3, constant, prefactor, summands, verified,
                              alternant_index=schur_index((2, 2 * d - 2, 2 * d)))
