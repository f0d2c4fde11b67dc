"""Even symmetric forms written in the power-sum basis.

A form is a rational combination of products M_{j1}^{k1} ... M_{jr}^{kr} of
power sums M_j = x_1^j + ... + x_n^j with all j even. Every value here is an
exact ``Fraction``; floating evaluation lives in the numeric oracle.
"""
import logging
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering

from core.exceptions import DegreeMismatch, DimensionMismatch

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing vector of positive integers."""
    parts: tuple

    def __post_init__(self):
        parts = tuple(int(part) for part in self.parts)
        if any(part < 1 for part in parts):
            raise ValueError(f'Partition parts must be positive: {parts}')
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f'Partition parts must be weakly decreasing: {parts}')
        object.__setattr__(self, 'parts', parts)

    @classmethod
    def from_parts(cls, parts):
        """Sort ``parts`` and drop zero entries (zero padding is allowed)."""
        return cls(tuple(sorted((part for part in parts if part), reverse=True)))

    @property
    def weight(self):
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, index):
        return self.parts[index]

    def dominates(self, other):
        """Dominance order: every partial sum of self is >= the one of other."""
        if self.weight != other.weight:
            return False
        mine = theirs = 0
        for i in range(max(len(self), len(other))):
            mine += self.parts[i] if i < len(self) else 0
            theirs += other.parts[i] if i < len(other) else 0
            if mine < theirs:
                return False
        return True

    def __str__(self):
        return '(' + ','.join(str(part) for part in self.parts) + ')'


def partitions(weight, max_part=None, max_length=None):
    """Yield every partition of ``weight`` in reverse lexicographic order."""
    max_part = weight if max_part is None else min(max_part, weight)
    if weight == 0:
        yield Partition(())
        return
    if max_length == 0:
        return
    for first in range(max_part, 0, -1):
        rest_length = None if max_length is None else max_length - 1
        for rest in partitions(weight - first, first, rest_length):
            yield Partition((first,) + rest.parts)


@total_ordering
@dataclass(frozen=True)
class PowerSumTerm:
    """A product M_{j1}^{k1} ... M_{jr}^{kr} stored with j strictly decreasing."""
    factors: tuple

    def __post_init__(self):
        exponents = Counter()
        for j, k in self.factors:
            if j < 2 or j % 2:
                raise ValueError(f'Power sum index must be even and positive: M{j}')
            if k < 1:
                raise ValueError(f'Multiplicity of M{j} must be positive: {k}')
            exponents[int(j)] += int(k)
        object.__setattr__(
            self, 'factors', tuple(sorted(exponents.items(), reverse=True)))

    @classmethod
    def of(cls, *factors):
        """``PowerSumTerm.of((6, 1), (2, 3))`` is M_6 M_2^3."""
        return cls(tuple(factors))

    @classmethod
    def power(cls, j, k):
        return cls(((j, k),))

    @property
    def degree(self):
        return sum(j * k for j, k in self.factors)

    @property
    def indices(self):
        return tuple(j for j, _ in self.factors)

    def multiplicity(self, j):
        return dict(self.factors).get(j, 0)

    def __mul__(self, other):
        return PowerSumTerm(self.factors + other.factors)

    def __lt__(self, other):
        return self.factors < other.factors

    def value(self, power_sum):
        """Evaluate with ``power_sum(j)`` giving the value of M_j."""
        result = 1
        for j, k in self.factors:
            result *= power_sum(j) ** k
        return result

    def __str__(self):
        return ' * '.join(f'M{j}' if k == 1 else f'M{j}^{k}' for j, k in self.factors)


def power_sum_value(r, point):
    """M_r(point) = sum of x_i^r, exact."""
    if r < 2 or r % 2:
        raise ValueError(f'Power sum index must be even and positive: {r}')
    return sum((Fraction(x) ** r for x in point), Fraction(0))


@dataclass(frozen=True)
class PowerSumForm:
    """An even symmetric form in ``n`` variables of fixed ``degree``.

    ``terms`` holds (PowerSumTerm, Fraction) pairs, canonically ordered with
    the largest term first and without zero coefficients.
    """
    n: int
    degree: int
    terms: tuple = ()

    def __post_init__(self):
        if self.n < 2:
            raise DimensionMismatch(f'A form needs at least two variables, got n={self.n}')
        if self.degree < 2 or self.degree % 2:
            raise DegreeMismatch(f'Degree must be even and positive, got {self.degree}')
        collected = {}
        for term, coefficient in self.terms:
            if term.degree != self.degree:
                raise DegreeMismatch(
                    f'Term {term} has degree {term.degree}, form has degree {self.degree}')
            collected[term] = collected.get(term, Fraction(0)) + Fraction(coefficient)
        canonical = tuple(sorted(
            ((term, value) for term, value in collected.items() if value != 0),
            key=lambda item: item[0], reverse=True))
        object.__setattr__(self, 'terms', canonical)

    @classmethod
    def from_dict(cls, n, degree, coefficients):
        return cls(n, degree, tuple(coefficients.items()))

    @classmethod
    def zero(cls, n, degree):
        return cls(n, degree, ())

    def as_dict(self):
        return dict(self.terms)

    def coefficient(self, term):
        return self.as_dict().get(term, Fraction(0))

    def is_zero(self):
        return not self.terms

    @property
    def power_sum_indices(self):
        return sorted({j for term, _ in self.terms for j in term.indices}, reverse=True)

    def _check_compatible(self, other):
        if self.n != other.n:
            raise DimensionMismatch(f'Cannot combine forms in {self.n} and {other.n} variables')
        if self.degree != other.degree:
            raise DegreeMismatch(
                f'Cannot combine forms of degree {self.degree} and {other.degree}')

    def __add__(self, other):
        self._check_compatible(other)
        return PowerSumForm(self.n, self.degree, self.terms + other.terms)

    def __sub__(self, other):
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, scalar):
        scalar = Fraction(scalar)
        return PowerSumForm(
            self.n, self.degree, tuple((term, scalar * value) for term, value in self.terms))

    def __mul__(self, scalar):
        return self.scale(scalar)

    __rmul__ = __mul__

    def multiply_by_power_sum(self, factor):
        """Multiply by the power-sum product ``factor``, raising the degree."""
        return PowerSumForm(
            self.n, self.degree + factor.degree,
            tuple((term * factor, value) for term, value in self.terms))

    # Anchors of the subspaces decided at k-points

    @property
    def half_degree(self):
        """2d for a form of degree 4d."""
        return self.degree // 2

    def anchors(self):
        """M_2^{2d}, M_{2d}^2 and M_{2d} M_2^d for a form of degree 4d."""
        if self.degree % 4:
            raise DegreeMismatch(f'Anchors need a degree divisible by 4, got {self.degree}')
        d = self.degree // 4
        return (PowerSumTerm.power(2, 2 * d),
                PowerSumTerm.power(2 * d, 2),
                PowerSumTerm.of((2 * d, 1), (2, d)))

    def anchor_coefficients(self):
        coefficients = self.as_dict()
        return tuple(coefficients.get(anchor, Fraction(0)) for anchor in self.anchors())

    def free_terms(self):
        """(term, coefficient) pairs that are not anchors, in canonical order."""
        anchors = set(self.anchors())
        return tuple((term, value) for term, value in self.terms if term not in anchors)


def evaluate(form, point):
    """Exact value of ``form`` at ``point``."""
    if len(point) != form.n:
        raise DimensionMismatch(
            f'Point has {len(point)} coordinates, form has {form.n} variables')
    point = tuple(Fraction(x) for x in point)
    cache = {}

    def power_sum(j):
        if j not in cache:
            cache[j] = power_sum_value(j, point)
        return cache[j]

    return sum((value * term.value(power_sum) for term, value in form.terms), Fraction(0))


def enumerate_basis(n, degree):
    """The power-sum basis of even symmetric forms of ``degree`` in ``n`` variables.

    One product of M_j (j even, j <= 2n) per partition of degree/2 into parts
    <= n, largest term first.
    """
    if degree % 2:
        raise DegreeMismatch(f'Even symmetric forms have even degree, got {degree}')
    basis = [
        PowerSumTerm(tuple((2 * part, 1) for part in partition))
        for partition in partitions(degree // 2, max_part=min(n, degree // 2))
    ]
    return sorted(basis, reverse=True)
