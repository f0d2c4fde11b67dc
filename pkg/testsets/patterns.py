"""k-point patterns: orbits of points with at most k distinct nonzero values."""
from dataclasses import dataclass
from fractions import Fraction

from core.exceptions import PatternError
from symmetric.powersums import partitions


@dataclass(frozen=True)
class KPointPattern:
    """``multiplicities[i]`` coordinates equal to the i-th value, the rest zero."""
    multiplicities: tuple

    def __post_init__(self):
        multiplicities = tuple(int(m) for m in self.multiplicities)
        if not multiplicities:
            raise PatternError('A pattern needs at least one value')
        if any(m < 1 for m in multiplicities):
            raise PatternError(f'Multiplicities must be positive: {multiplicities}')
        if any(a < b for a, b in zip(multiplicities, multiplicities[1:])):
            raise PatternError(f'Multiplicities must be weakly decreasing: {multiplicities}')
        object.__setattr__(self, 'multiplicities', multiplicities)

    @property
    def size(self):
        """Number of distinct values."""
        return len(self.multiplicities)

    @property
    def total(self):
        return sum(self.multiplicities)

    def zeros(self, n):
        return n - self.total

    def check(self, n):
        if self.total > n:
            raise PatternError(f'Pattern {self} needs {self.total} coordinates, n = {n}')

    def lift(self, values, n):
        """The n-coordinate point carrying ``values`` with these multiplicities."""
        self.check(n)
        if len(values) != self.size:
            raise PatternError(f'Pattern {self} takes {self.size} values, got {len(values)}')
        point = []
        for value, multiplicity in zip(values, self.multiplicities):
            point.extend([value] * multiplicity)
        return tuple(point) + (Fraction(0),) * self.zeros(n)

    def __str__(self):
        return '(' + ','.join(str(m) for m in self.multiplicities) + ')'


def enumerate_patterns(n, k):
    """All patterns with at most ``k`` values in ``n`` coordinates.

    Ordered by number of values, then number of nonzero coordinates, then
    multiplicities in decreasing lexicographic order.
    """
    if not 1 <= k <= n:
        raise PatternError(f'Need 1 <= k <= n, got k={k}, n={n}')
    return [
        KPointPattern(partition.parts)
        for size in range(1, k + 1)
        for total in range(size, n + 1)
        for partition in partitions(total, max_length=size)
        if len(partition) == size
    ]
