"""Nonnegativity verdicts through k-point test sets.

Patterns with at most two values are decided exactly (a constant for one
value, Sturm sequences on the dehomogenized restriction for two). Patterns
with three or more values are minimized numerically and can only refute or
leave the verdict undecided.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import partial

from django.conf import settings

from core.exceptions import CertificateFailure, ConditionsNotSatisfied
from core.parallel import ordered_map
from oracle.minimize import minimize_restriction
from symmetric.powersums import evaluate
from testsets.conditions import check_conditions_thm_main, check_conditions_thm_main2
from testsets.constants import (
    EXACT, FAIL, LOWER_STRATUM, NONNEGATIVE, NOT_NONNEGATIVE, NUMERIC, PASS, STRATUM_TOLERANCE,
    THEOREM_MAIN, THEOREM_MAIN2, THEOREM_TIMOFTE, UNDECIDED, UNDECIDED_OUTCOME,
    WITNESS_DENOMINATOR)
from testsets.patterns import enumerate_patterns
from testsets.restriction import constant_value, dehomogenize, restrict
from testsets.univariate import univariate_nonneg

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TrailEntry:
    pattern: object
    outcome: str
    method: str
    polynomial: object = None
    value: Fraction = None
    minimum: float = None
    witness: tuple = None


@dataclass(frozen=True)
class Verdict:
    status: str
    theorem: str
    witness: tuple = None
    trail: tuple = ()
    report: object = None
    notes: tuple = field(default_factory=tuple)

    @property
    def failing_pattern(self):
        return next((entry.pattern for entry in self.trail if entry.outcome == FAIL), None)


def _checked_witness(form, point):
    if evaluate(form, point) >= 0:
        raise CertificateFailure(f'Witness {point} does not make the form negative')
    return tuple(Fraction(x) for x in point)


def check_pattern_exact(form, pattern):
    """Decide a one- or two-value pattern exactly."""
    if pattern.size == 1:
        value = constant_value(form, pattern)
        if value >= 0:
            return TrailEntry(pattern, PASS, EXACT, value=value)
        return TrailEntry(pattern, FAIL, EXACT, value=value,
                          witness=_checked_witness(form, pattern.lift((Fraction(1),), form.n)))
    polynomial = dehomogenize(restrict(form, pattern))
    result = univariate_nonneg(polynomial)
    if result.nonnegative:
        return TrailEntry(pattern, PASS, EXACT, polynomial=polynomial)
    point = pattern.lift((result.witness, Fraction(1)), form.n)
    return TrailEntry(pattern, FAIL, EXACT, polynomial=polynomial,
                      witness=_checked_witness(form, point))


def on_lower_stratum(values):
    """True when a value is ~0 or two values agree up to sign."""
    magnitudes = sorted(abs(a) for a in values)
    if magnitudes[0] < STRATUM_TOLERANCE:
        return True
    return any(b - a < STRATUM_TOLERANCE for a, b in zip(magnitudes, magnitudes[1:]))


def check_pattern_numeric(form, pattern, tolerance, restarts, seed, max_iterations=None):
    """Minimize a pattern with three or more values on the weighted sphere."""
    result = minimize_restriction(form, pattern, restarts, seed, max_iterations)
    if result.minimum > 0:
        return TrailEntry(pattern, PASS, NUMERIC, minimum=result.minimum)
    if result.minimum <= -tolerance:
        values = tuple(Fraction(a).limit_denominator(WITNESS_DENOMINATOR) for a in result.argmin)
        point = pattern.lift(values, form.n)
        if evaluate(form, point) < 0:
            return TrailEntry(pattern, FAIL, NUMERIC, minimum=result.minimum, witness=point)
        return TrailEntry(pattern, UNDECIDED_OUTCOME, NUMERIC, minimum=result.minimum)
    if pattern.size <= 3 and on_lower_stratum(result.argmin):
        # the lower pattern has at most two values and is decided exactly
        return TrailEntry(pattern, PASS, LOWER_STRATUM, minimum=result.minimum)
    return TrailEntry(pattern, UNDECIDED_OUTCOME, NUMERIC, minimum=result.minimum)


def _numeric_options(tolerance, seed):
    tolerance = settings.SYMTEST_NUMERIC_TOLERANCE if tolerance is None else tolerance
    seed = settings.SYMTEST_SEED if seed is None else seed
    return tolerance, seed


def run_patterns(form, patterns, jobs=1, tolerance=None, restarts=None, seed=None,
                 max_iterations=None, stop_at_failure=False):
    """Trail over ``patterns``: exact ones first, in enumeration order.

    With ``stop_at_failure`` the numeric patterns are skipped once an exact
    pattern has refuted the form.
    """
    exact = [pattern for pattern in patterns if pattern.size <= 2]
    numeric = [pattern for pattern in patterns if pattern.size > 2]
    trail = ordered_map(partial(check_pattern_exact, form), exact, jobs)
    if stop_at_failure and any(entry.outcome == FAIL for entry in trail):
        numeric = []
    if numeric:
        tolerance, seed = _numeric_options(tolerance, seed)
        trail += ordered_map(
            partial(check_pattern_numeric, form, tolerance=tolerance, restarts=restarts,
                    seed=seed, max_iterations=max_iterations),
            numeric, jobs)
    for entry in trail:
        logger.debug('pattern %s: %s (%s)', entry.pattern, entry.outcome, entry.method)
    return tuple(trail)


def summarize(form, theorem, trail, report=None, override=False):
    notes = []
    failures = [entry for entry in trail if entry.outcome == FAIL]
    if failures:
        status, witness = NOT_NONNEGATIVE, failures[0].witness
    elif any(entry.outcome == UNDECIDED_OUTCOME for entry in trail):
        status, witness = UNDECIDED, None
    else:
        status, witness = NONNEGATIVE, None
    if status == NONNEGATIVE and override and report is not None and not report.satisfied:
        logger.warning('conditions of %s not satisfied, nonnegative verdict downgraded',
                       theorem)
        notes.append('conditions not satisfied: nonnegative on the test points only')
        status = UNDECIDED
    logger.info('%s verdict for n=%d, degree %d: %s', theorem, form.n, form.degree, status)
    return Verdict(status, theorem, witness, trail, report, tuple(notes))


def decide_nonneg_2point(form, override=False, jobs=1):
    """Decide nonnegativity of a one-free-term form at its 2-points."""
    report = check_conditions_thm_main(form)
    if not report.satisfied and not override:
        raise ConditionsNotSatisfied(report)
    trail = run_patterns(form, enumerate_patterns(form.n, min(2, form.n)), jobs)
    return summarize(form, THEOREM_MAIN, trail, report, override)


def decide_nonneg_mpoint(form, override=False, jobs=1, tolerance=None, restarts=None,
                         seed=None):
    """Decide nonnegativity of an (m-2)-free-term form at its (m-1)-points."""
    report = check_conditions_thm_main2(form)
    if not report.satisfied and not override:
        raise ConditionsNotSatisfied(report)
    m = len(form.free_terms()) + 2 if form.degree % 4 == 0 else form.n + 1
    k = max(1, min(form.n, m - 1))
    trail = run_patterns(form, enumerate_patterns(form.n, k), jobs, tolerance, restarts, seed)
    return summarize(form, THEOREM_MAIN2, trail, report, override)


def timofte_check(form, jobs=1, tolerance=None, restarts=None, seed=None, max_iterations=None,
                  stop_at_failure=False):
    """Baseline for any even symmetric form of degree 2e: test at floor(e/2)-points."""
    k = max(1, min(form.n, form.degree // 4))
    trail = run_patterns(form, enumerate_patterns(form.n, k), jobs, tolerance, restarts, seed,
                         max_iterations, stop_at_failure)
    return summarize(form, THEOREM_TIMOFTE, trail)
