"""Grid sampling of k-point patterns and the power-mean bounds on the sphere."""
import logging
import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np
from scipy.optimize import bisect

from core.exceptions import ParameterError, PowerMeanBoundError
from oracle.minimize import PowerSumEvaluator
from testsets.patterns import enumerate_patterns

logger = logging.getLogger(__name__)

SPHERE_TOLERANCE = 1e-12


@dataclass(frozen=True)
class GridSample:
    minimum: float
    pattern: object
    values: tuple
    samples: int


def simplex_grid(size, density):
    """All t in (1/density) Z^size with t >= 0 and sum t = 1."""
    rows = []
    for cuts in combinations(range(density + size - 1), size - 1):
        bounds = (-1,) + cuts + (density + size - 1,)
        rows.append([bounds[i + 1] - bounds[i] - 1 for i in range(size)])
    return np.asarray(rows, dtype=float) / density


def timofte_grid_check(form, k, density=24):
    """Worst sampled value over the patterns with at most ``k`` values.

    Each pattern's points on the unit sphere are a_i = sqrt(t_i / m_i) for t
    on a simplex grid. A falsification probe only: a nonnegative worst value
    proves nothing.
    """
    worst = None
    samples = 0
    for pattern in enumerate_patterns(form.n, k):
        weights = np.asarray(pattern.multiplicities, dtype=float)
        grid = simplex_grid(pattern.size, density)
        points = np.sqrt(grid / weights)
        values = PowerSumEvaluator(form, weights).value(points)
        samples += len(values)
        best = int(np.argmin(values))
        if worst is None or values[best] < worst.minimum:
            worst = GridSample(float(values[best]), pattern,
                               tuple(float(a) for a in points[best]), 0)
    logger.debug('grid check with k=%d: worst %.6g on %s', k, worst.minimum, worst.pattern)
    return GridSample(worst.minimum, worst.pattern, worst.values, samples)


def power_mean_bounds_check(point, k):
    """Check 1/n^(k-1) <= M_2k(point) <= 1 for a point on the unit sphere."""
    point = np.asarray(point, dtype=float)
    n = len(point)
    if abs((point ** 2).sum() - 1) > SPHERE_TOLERANCE:
        raise ParameterError(f'Point is not on the unit sphere: M2 = {(point ** 2).sum()!r}')
    value = (point ** (2 * k)).sum()
    lower = 1 / n ** (k - 1)
    if not lower - SPHERE_TOLERANCE <= value <= 1 + SPHERE_TOLERANCE:
        raise PowerMeanBoundError(f'M{2 * k} = {value!r} outside [{lower!r}, 1]')
    return True


@dataclass(frozen=True)
class TwoPointRealization:
    alpha: float
    point: tuple


def two_point_curve(n, k, alpha):
    """M_2k at (cos a / sqrt(n-1), ..., cos a / sqrt(n-1), sin a)."""
    return math.cos(alpha) ** (2 * k) / (n - 1) ** (k - 1) + math.sin(alpha) ** (2 * k)


def two_point_realization(n, k, r):
    """A 2-point z on the unit sphere with M_2k(z) = r, for 1/n^(k-1) <= r <= 1."""
    if n < 2 or k < 1:
        raise ParameterError(f'Need n >= 2 and k >= 1, got n={n}, k={k}')
    lo, hi = math.asin(1 / math.sqrt(n)), math.pi / 2
    if not two_point_curve(n, k, lo) - SPHERE_TOLERANCE <= r <= 1 + SPHERE_TOLERANCE:
        raise ParameterError(f'r = {r!r} is outside [1/n^(k-1), 1]')
    if r <= two_point_curve(n, k, lo):
        alpha = lo
    elif r >= 1:
        alpha = hi
    else:
        alpha = bisect(lambda a: two_point_curve(n, k, a) - r, lo, hi, xtol=1e-15)
    a = math.cos(alpha) / math.sqrt(n - 1)
    return TwoPointRealization(alpha, (a,) * (n - 1) + (math.sin(alpha),))
