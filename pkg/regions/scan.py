"""Scans of the family alpha M_4^d + beta M_2^{2d} + gamma M_2d^2 + M_2d M_2^d.

Grid points with three nonzero coefficients are decided at the 2-points.
The others fall outside the one-free-term conditions and are decided by the
floor(e/2)-point baseline, annotated as such.
"""
import logging
import random
import sys
from dataclasses import dataclass
from fractions import Fraction
from functools import partial
from itertools import product

from tqdm import tqdm

from core.exceptions import ParameterError
from core.parallel import ordered_map
from regions.constants import (
    IN_THEOREM, MIXED_METHODS, OUT_OF_THEOREM, PRESET_RANGES, SCAN_MAX_ITERATIONS, SCAN_RESTARTS)
from symmetric.powersums import PowerSumForm, PowerSumTerm
from testsets.constants import FAIL, NONNEGATIVE
from testsets.engine import decide_nonneg_2point, timofte_check

logger = logging.getLogger(__name__)


def grid_values(lo, hi, step):
    lo, hi, step = Fraction(lo), Fraction(hi), Fraction(step)
    values = []
    value = lo
    while value <= hi:
        values.append(value)
        value += step
    return tuple(values)


@dataclass(frozen=True)
class RegionScanSpec:
    n: int
    d: int
    alphas: tuple
    betas: tuple
    gammas: tuple

    def __post_init__(self):
        if self.d < 3:
            raise ParameterError(f'M4^d is an anchor for d < 3, got d={self.d}')
        if self.n < 3:
            raise ParameterError(f'The scan needs n >= 3, got n={self.n}')
        if not (self.alphas and self.betas and self.gammas):
            raise ParameterError('The scan grid is empty')

    @classmethod
    def from_ranges(cls, n, d, alpha, beta, gamma):
        return cls(n, d, grid_values(*alpha), grid_values(*beta), grid_values(*gamma))

    @classmethod
    def preset(cls, name, n=4, d=3):
        return cls.from_ranges(n, d, *PRESET_RANGES[name])

    def points(self):
        """(alpha, beta, gamma) in grid order, alpha slowest."""
        return list(product(self.alphas, self.betas, self.gammas))

    def __len__(self):
        return len(self.alphas) * len(self.betas) * len(self.gammas)


def template_form(n, d, alpha, beta, gamma):
    return PowerSumForm.from_dict(n, 4 * d, {
        PowerSumTerm.power(4, d): alpha,
        PowerSumTerm.power(2, 2 * d): beta,
        PowerSumTerm.power(2 * d, 2): gamma,
        PowerSumTerm.of((2 * d, 1), (2, d)): 1,
    })


def in_expected_region(alpha, beta, gamma):
    return beta >= 0 and alpha + beta + gamma + 1 >= 0


@dataclass(frozen=True)
class RegionPoint:
    alpha: Fraction
    beta: Fraction
    gamma: Fraction
    status: str
    witness: tuple
    pattern: object
    method: str
    annotation: str

    @property
    def coefficients(self):
        return self.alpha, self.beta, self.gamma


def verdict_method(verdict):
    """Method of the failing pattern, else the one shared by the whole trail."""
    failing = next((entry for entry in verdict.trail if entry.outcome == FAIL), None)
    if failing is not None:
        return failing.method
    methods = {entry.method for entry in verdict.trail}
    return methods.pop() if len(methods) == 1 else MIXED_METHODS


def scan_point(n, d, coefficients):
    alpha, beta, gamma = coefficients
    form = template_form(n, d, alpha, beta, gamma)
    if alpha and beta and gamma:
        verdict, annotation = decide_nonneg_2point(form), IN_THEOREM
    else:
        verdict = timofte_check(form, restarts=SCAN_RESTARTS, max_iterations=SCAN_MAX_ITERATIONS,
                                stop_at_failure=True)
        annotation = OUT_OF_THEOREM
    return RegionPoint(alpha, beta, gamma, verdict.status, verdict.witness,
                       verdict.failing_pattern, verdict_method(verdict), annotation)


@dataclass(frozen=True)
class RegionScanResult:
    spec: RegionScanSpec
    rows: tuple

    def counts(self):
        counts = {}
        for row in self.rows:
            counts[row.status] = counts.get(row.status, 0) + 1
        return counts

    def out_of_theorem(self):
        return [row for row in self.rows if row.annotation == OUT_OF_THEOREM]

    def mismatches(self):
        """In-theorem rows whose verdict disagrees with beta >= 0, alpha + beta + gamma + 1 >= 0."""
        return [row for row in self.rows if row.annotation == IN_THEOREM
                and (row.status == NONNEGATIVE) != in_expected_region(*row.coefficients)]


def scan_region(spec, jobs=1, progress=False, shuffle_seed=None):
    """Decide every grid point; rows always come back in grid order."""
    points = spec.points()
    order = list(range(len(points)))
    if shuffle_seed is not None:
        random.Random(shuffle_seed).shuffle(order)
    # 8 points per worker between progress updates
    chunk = max(1, jobs) * 8
    decided = {}
    worker = partial(scan_point, spec.n, spec.d)
    with tqdm(total=len(points), disable=not progress, file=sys.stderr, desc='grid') as bar:
        for start in range(0, len(order), chunk):
            batch = order[start:start + chunk]
            for index, row in zip(batch, ordered_map(worker, [points[i] for i in batch], jobs)):
                decided[index] = row
            bar.update(len(batch))
    result = RegionScanResult(spec, tuple(decided[i] for i in range(len(points))))
    logger.info('scanned %d points: %s, %d out of theorem, %d mismatches', len(points),
                result.counts(), len(result.out_of_theorem()), len(result.mismatches()))
    return result
