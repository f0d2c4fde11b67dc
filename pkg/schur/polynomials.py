"""Schur polynomials in ``l`` variables and their monomial expansions.

Two independent constructions are provided: the Kostka expansion
S_d = sum_c K(d, c) m_c, and the bialternant D_d / Delta_l expanded as a signed
sum over permutations and divided exactly by the Vandermonde determinant.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations

import sympy
from sympy.combinatorics import Permutation
from sympy.utilities.iterables import multiset_permutations

from core.exceptions import NonPositiveCoordinate, ParameterError, SchurDivisionError
from schur.tableaux import kostka
from symmetric.powersums import Partition, partitions

logger = logging.getLogger(__name__)


def _padded(index, l):
    index = Partition.from_parts(index)
    if len(index) > l:
        raise ParameterError(f'Index {index} has more than {l} nonzero parts')
    return index.parts + (0,) * (l - len(index))


@dataclass(frozen=True)
class MonomialSymmetric:
    """m_index in ``l`` variables: the sum of the distinct permutations of x^index."""
    index: Partition
    l: int

    def __post_init__(self):
        if len(self.index) > self.l:
            raise ParameterError(f'Index {self.index} has more than {self.l} parts')

    def exponents(self):
        return [tuple(e) for e in multiset_permutations(_padded(self.index, self.l))]

    def evaluate(self, point):
        total = Fraction(0)
        for exponent in self.exponents():
            term = Fraction(1)
            for x, e in zip(point, exponent):
                term *= Fraction(x) ** e
            total += term
        return total


@dataclass(frozen=True)
class SchurPoly:
    index: Partition
    l: int
    expansion: dict = field(compare=True, hash=False)

    def items(self):
        return sorted(self.expansion.items(), key=lambda item: item[0].parts, reverse=True)

    def evaluate(self, point):
        if len(point) != self.l:
            raise ParameterError(f'Point has {len(point)} coordinates, S has {self.l} variables')
        return sum((coefficient * MonomialSymmetric(partition, self.l).evaluate(point)
                    for partition, coefficient in self.expansion.items()), Fraction(0))

    def as_expression(self, symbols=None):
        """The Schur polynomial as a sympy expression in ``symbols`` (x1..xl by default)."""
        if symbols is None:
            symbols = sympy.symbols(f'x1:{self.l + 1}')
        expression = sympy.Integer(0)
        for partition, coefficient in self.expansion.items():
            for exponent in MonomialSymmetric(partition, self.l).exponents():
                expression += coefficient * sympy.Mul(
                    *(x ** e for x, e in zip(symbols, exponent)))
        return sympy.expand(expression)


def schur_by_kostka(index, l):
    """Expansion of S_index over monomial symmetric functions via Kostka numbers."""
    shape = Partition.from_parts(_padded(index, l))
    expansion = {}
    for content in partitions(shape.weight, max_length=l):
        coefficient = kostka(shape, content)
        if coefficient:
            expansion[content] = coefficient
    return SchurPoly(shape, l, expansion)


def alternant_terms(exponents):
    """det[x_i^{e_j}] as a dict monomial -> coefficient, one term per permutation."""
    size = len(exponents)
    terms = {}
    for order in permutations(range(size)):
        monomial = tuple(exponents[j] for j in order)
        terms[monomial] = terms.get(monomial, 0) + Permutation(list(order)).signature()
    return {monomial: sign for monomial, sign in terms.items() if sign}


def schur_by_determinant(index, l):
    """S_index = D_index / Delta_l with D the bialternant det[x_i^{d_j + l - j}]."""
    padded = _padded(index, l)
    symbols = sympy.symbols(f'x1:{l + 1}')
    exponents = [d + l - 1 - j for j, d in enumerate(padded)]
    quotient = sympy.Poly.from_dict(alternant_terms(exponents), *symbols, domain='ZZ')
    for i in range(l):
        for j in range(i + 1, l):
            divisor = sympy.Poly(symbols[i] - symbols[j], *symbols, domain='ZZ')
            quotient, remainder = quotient.div(divisor)
            if not remainder.is_zero:
                raise SchurDivisionError(
                    f'Alternant of {padded} is not divisible by x{i + 1} - x{j + 1}')
    expansion = {}
    for monomial, coefficient in quotient.terms():
        if all(a >= b for a, b in zip(monomial, monomial[1:])):
            expansion[Partition.from_parts(monomial)] = int(coefficient)
    logger.debug('S%s in %d variables has %d monomial orbits', padded, l, len(expansion))
    return SchurPoly(Partition.from_parts(padded), l, expansion)


def positivity_on_positive_orthant(schur, point):
    """Exact value of ``schur`` at a point of the open positive orthant."""
    if len(point) != schur.l:
        raise ParameterError(f'Point has {len(point)} coordinates, S has {schur.l} variables')
    if any(Fraction(x) <= 0 for x in point):
        raise NonPositiveCoordinate(f'Point {tuple(point)} is not in the positive orthant')
    return schur.evaluate(point)
