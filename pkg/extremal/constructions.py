"""Forms that are nonnegative at every 2-point without being nonnegative.

For a base point v that is not a 2-point, p_v is a sum of two squares
vanishing exactly where (M_2^d M_2d, M_2^d M_2d-2 M_2) is proportional to
its value at v. Subtracting a small multiple of M_2^{2d} keeps p_v positive
at the 2-points and makes it negative at v.
"""
import logging
import sys
from dataclasses import dataclass
from fractions import Fraction
from functools import partial
from itertools import combinations_with_replacement, count, islice
from math import gcd

from django.conf import settings
from tqdm import tqdm

from core.exceptions import BaseSearchExhausted, CertificateFailure, ParameterError
from core.parallel import ordered_map
from jacobian.analysis import phi_map_rank
from symmetric.powersums import PowerSumForm, PowerSumTerm, evaluate, power_sum_value
from testsets.conditions import check_conditions_thm_main
from testsets.constants import PASS
from testsets.engine import check_pattern_exact
from testsets.patterns import enumerate_patterns
from testsets.restriction import constant_value, dehomogenize, restrict
from testsets.univariate import certified_lower_bound

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ExtremalWitness:
    n: int
    d: int
    point: tuple
    theta: Fraction
    kappa: Fraction
    lam: Fraction
    pv: PowerSumForm
    form: PowerSumForm
    value: Fraction
    trail: tuple
    report: object


def extra_terms(d):
    """f1 = M_{2d-2}^2 M_2^2 and f2 = M_{2d-2} M_2^{d+1}."""
    return (PowerSumTerm.of((2 * d - 2, 2), (2, 2)),
            PowerSumTerm.of((2 * d - 2, 1), (2, d + 1)))


def anchor_terms(d):
    return (PowerSumTerm.power(2, 2 * d),
            PowerSumTerm.power(2 * d, 2),
            PowerSumTerm.of((2 * d, 1), (2, d)))


def _check_parameters(n, d):
    if d < 3:
        raise ParameterError(f'The construction needs d >= 3, got d={d}')
    if n < 3:
        raise ParameterError(f'The construction needs n >= 3, got n={n}')
    if n not in (d - 1, d):
        logger.warning('n=%d is not in {d-1, d} = {%d, %d}: M%d is not a basis term',
                       n, d - 1, d, 2 * d - 2)


def _pv(v, d, n):
    """(A M_2d - B M_2^d)^2 + (A M_{2d-2} M_2 - C M_2^d)^2 at the base point v.

    A = M_2(v)^d, B = M_2d(v) and C = M_{2d-2}(v) M_2(v).
    """
    if len(v) != n:
        raise ParameterError(f'Base point has {len(v)} coordinates, expected {n}')
    if d < 3:
        raise ParameterError(f'The construction needs d >= 3, got d={d}')
    if not any(v):
        raise ParameterError('The base point must be nonzero')
    if any(Fraction(x) < 0 for x in v):
        raise ParameterError(f'Coordinates of the base point must be nonnegative: {v}')
    m2 = power_sum_value(2, v)
    a = m2 ** d
    b = power_sum_value(2 * d, v)
    c = power_sum_value(2 * d - 2, v) * m2
    m2_power, m2d_square, mixed = anchor_terms(d)
    f1, f2 = extra_terms(d)
    return PowerSumForm.from_dict(n, 4 * d, {
        m2_power: b ** 2 + c ** 2,
        m2d_square: a ** 2,
        mixed: -2 * a * b,
        f1: a ** 2,
        f2: -2 * a * c,
    })


def build_pv(v, d, n):
    if n not in (d - 1, d):
        logger.warning('n=%d is not in {d-1, d}: M%d is not a basis term', n, 2 * d - 2)
    return _pv(v, d, n)


def normalized_pv(v, d, n):
    """p_v scaled so the M_2d^2 coefficient is 1."""
    pv = _pv(v, d, n)
    return pv.scale(1 / pv.coefficient(PowerSumTerm.power(2 * d, 2)))


def two_point_lower_bound(form):
    """A rational kappa <= form / M_2^{2d} at every 2-point, exact per pattern."""
    d = form.degree // 4
    norm = PowerSumForm.from_dict(form.n, form.degree, {PowerSumTerm.power(2, 2 * d): 1})
    bounds = []
    for pattern in enumerate_patterns(form.n, 2):
        if pattern.size == 1:
            bounds.append(constant_value(form, pattern) / constant_value(norm, pattern))
        else:
            bounds.append(certified_lower_bound(dehomogenize(restrict(form, pattern)),
                                                dehomogenize(restrict(norm, pattern))))
        logger.debug('pattern %s: lower bound %s', pattern, bounds[-1])
    return min(bounds)


def candidate_points(n):
    """Integer points with at least three distinct positive coordinates, small ones first."""
    for top in count(3):
        for rest in combinations_with_replacement(range(top, -1, -1), n - 1):
            point = (top,) + rest
            if len({x for x in point if x}) >= 3 and gcd(*point) == 1:
                yield tuple(reversed(point))


def theta(v, d):
    return power_sum_value(2 * d - 2, v) / power_sum_value(2, v) ** (d - 1)


def evaluate_base_point(n, d, v):
    """(v, theta, kappa) when v is usable, ``None`` otherwise."""
    if phi_map_rank(v, d, n) < 3:
        return None
    try:
        kappa = two_point_lower_bound(normalized_pv(v, d, n))
    except CertificateFailure as exc:
        logger.debug('no lower bound at %s: %s', v, exc)
        return None
    if kappa <= 0:
        return None
    return v, theta(v, d), kappa


def iter_base_points(n, d, jobs=1, budget=None, progress=False):
    """Yield usable base points (v, theta, kappa) among the first ``budget`` candidates."""
    _check_parameters(n, d)
    budget = settings.SYMTEST_BASE_POINT_BUDGET if budget is None else budget
    candidates = list(islice(candidate_points(n), budget))
    chunk = max(1, jobs)
    with tqdm(total=len(candidates), disable=not progress, file=sys.stderr,
              desc='base points') as bar:
        for start in range(0, len(candidates), chunk):
            batch = candidates[start:start + chunk]
            for found in ordered_map(partial(evaluate_base_point, n, d), batch, jobs):
                if found is not None:
                    yield found
            bar.update(len(batch))


def select_base_point(n, d, jobs=1, budget=None, progress=False):
    found = next(iter_base_points(n, d, jobs, budget, progress), None)
    if found is None:
        raise BaseSearchExhausted(
            f'No base point with a positive 2-point bound for n={n}, d={d}; '
            'raise SYMTEST_BASE_POINT_BUDGET')
    return found


def certify(n, d, v, theta_value, kappa):
    lam = kappa / 2
    pv = normalized_pv(v, d, n)
    form = pv - PowerSumForm.from_dict(n, 4 * d, {PowerSumTerm.power(2, 2 * d): lam})
    # Negative at v
    value = evaluate(form, v)
    if value >= 0:
        raise CertificateFailure(f'p is not negative at the base point {v}: {value}')
    # Nonnegative at every 2-point
    trail = tuple(check_pattern_exact(form, pattern) for pattern in enumerate_patterns(n, 2))
    failed = [entry.pattern for entry in trail if entry.outcome != PASS]
    if failed:
        raise CertificateFailure(f'p is negative on the 2-point patterns {failed}')
    # Outside the one-free-term class
    report = check_conditions_thm_main(form)
    if report.satisfied:
        raise CertificateFailure('p satisfies the one-free-term conditions')
    return ExtremalWitness(n, d, tuple(Fraction(x) for x in v), theta_value, kappa, lam,
                           pv, form, value, trail, report)


def build_counterexample(n, d, jobs=1, budget=None, progress=False):
    """A form nonnegative at all 2-points and negative at a base point."""
    for v, theta_value, kappa in iter_base_points(n, d, jobs, budget, progress):
        try:
            witness = certify(n, d, v, theta_value, kappa)
        except CertificateFailure as exc:
            logger.warning('base point %s rejected: %s', v, exc)
            continue
        logger.info('counterexample for n=%d, degree %d at %s with lambda %s',
                    n, 4 * d, v, witness.lam)
        return witness
    raise BaseSearchExhausted(f'No certified counterexample for n={n}, d={d}')


def nonconvexity_triple(n, d, witness=None):
    """(p, p1, p2) with p = (p1 + p2) / 2, p1 and p2 each with one free term."""
    witness = build_counterexample(n, d) if witness is None else witness
    p = witness.form
    f1, f2 = extra_terms(d)
    anchors = PowerSumForm.from_dict(
        n, 4 * d, {term: p.coefficient(term) for term in anchor_terms(d)})
    p1 = anchors + PowerSumForm.from_dict(n, 4 * d, {f1: 2 * p.coefficient(f1)})
    p2 = anchors + PowerSumForm.from_dict(n, 4 * d, {f2: 2 * p.coefficient(f2)})
    if (p1 + p2).scale(Fraction(1, 2)) != p:
        raise CertificateFailure('p is not the midpoint of p1 and p2')
    for part in (p1, p2):
        report = check_conditions_thm_main(part)
        if not report.satisfied:
            raise CertificateFailure(f'{part} violates {report.violations}')
    return p, p1, p2


def raise_degree(witness, factor):
    """Multiply the counterexample by a power-sum product.

    The product stays nonnegative at the 2-points and negative at the base point.
    """
    if not factor.factors:
        raise ParameterError('The factor must be a nonconstant power-sum product')
    return witness.form.multiply_by_power_sum(factor)
