"""Structural conditions under which k-points form a test set.

A degree-4d form is split into the three anchors M_2^{2d}, M_{2d}^2 and
M_{2d} M_2^d plus its free terms. The checkers never raise on a violated
condition; they report every violation found.
"""
import logging
from dataclasses import dataclass, field
from itertools import product

from sympy.combinatorics import Permutation

from testsets.constants import THEOREM_MAIN, THEOREM_MAIN2

logger = logging.getLogger(__name__)


@dataclass
class ConditionReport:
    theorem: str
    satisfied: bool = True
    violations: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def violate(self, message):
        self.satisfied = False
        self.violations.append(message)


def sorting_sign(values):
    """Sign of the permutation sorting ``values`` into strictly decreasing order.

    Returns 0 when two entries coincide.
    """
    values = tuple(values)
    if len(set(values)) != len(values):
        return 0
    order = sorted(range(len(values)), key=lambda i: values[i], reverse=True)
    return Permutation(order).signature()


def is_identically_oriented(tuples):
    """True when every tuple with pairwise distinct entries has the same sorting sign."""
    signs = {sorting_sign(v) for v in tuples} - {0}
    return len(signs) <= 1


def _check_shape(form, report):
    if form.degree % 4 or form.degree < 8:
        report.violate(f'degree {form.degree} is not 4d with d >= 2')
        return False
    for anchor, value in zip(form.anchors(), form.anchor_coefficients()):
        if not value:
            report.violate(f'anchor coefficient zero: {anchor}')
    large = [j for j in form.power_sum_indices if j > 2 * form.n]
    if large:
        report.notes.append(
            f'M{large[0]} is not a basis element in {form.n} variables')
    return True


def check_free_term(term, d):
    """Violations of a single free term against the one-free-term conditions."""
    half = 2 * d
    if term.degree != 4 * d:
        return [f'free term {term} has degree {term.degree}, expected {4 * d}']
    outside = [j for j in term.indices if j not in (2, half)]
    if not outside:
        return [f'j₁ ∈ {{2, {half}}} for the free term {term}']
    if any(j > half for j in term.indices) and len(outside) > 1:
        return [f'free term {term} has j > {half} together with other factors '
                f'outside {{2, {half}}}']
    return []


def check_conditions_thm_main(form):
    """Conditions for the 2-points to be a test set of a one-free-term form."""
    report = ConditionReport(THEOREM_MAIN)
    if form.n < 3:
        report.violate(f'n = {form.n} < 3')
    if not _check_shape(form, report):
        return report
    d = form.degree // 4
    free = form.free_terms()
    if not free:
        report.violate(f'j₁ ∈ {{2, {2 * d}}}: no free term outside the anchors')
    elif len(free) > 1:
        report.violate(f'expected exactly one free term, found {len(free)}')
    else:
        for message in check_free_term(free[0][0], d):
            report.violate(message)
    logger.debug('one-free-term conditions: %s', report)
    return report


def distinguished_order(terms, d):
    """An order of ``terms`` and a distinguished index per term.

    Each term's distinguished index lies outside {2, 2d} and outside every
    index used by the terms before it. Returns a list of (term, j) pairs, or
    None when no order exists.
    """

    def search(chosen, used):
        if len(chosen) == len(terms):
            return chosen
        for term in terms:
            if any(term is previous for previous, _ in chosen):
                continue
            for j in term.indices:
                if j in (2, 2 * d) or j in used:
                    continue
                found = search(chosen + [(term, j)], used | set(term.indices))
                if found is not None:
                    return found
        return None

    return search([], set())


def psi_tuples(terms, d):
    """Every choice of one index per term, followed by 2 and 2d."""
    return [choice + (2, 2 * d) for choice in product(*(term.indices for term in terms))]


def check_conditions_thm_main2(form):
    """Conditions for the (m-1)-points to be a test set of an m-2 free-term form."""
    report = ConditionReport(THEOREM_MAIN2)
    if not _check_shape(form, report):
        return report
    d = form.degree // 4
    terms = [term for term, _ in form.free_terms()]
    if not terms:
        report.violate(f'j₁ ∈ {{2, {2 * d}}}: no free term outside the anchors')
        return report
    m = len(terms) + 2
    if m > form.n:
        report.violate(f'm = {m} > n = {form.n}')
    elif m + 2 > form.n:
        report.notes.append(
            f'm + 2 = {m + 2} > n = {form.n}: checked against the weaker m <= n')
    order = distinguished_order(terms, d)
    if order is None:
        report.violate('no order of the free terms gives each a new index outside '
                       f'{{2, {2 * d}}}')
    else:
        terms = [term for term, _ in order]
    tuples = psi_tuples(terms, d)
    if not is_identically_oriented(tuples):
        positive = next(v for v in tuples if sorting_sign(v) == 1)
        negative = next(v for v in tuples if sorting_sign(v) == -1)
        report.violate(f'Ψ not identically oriented ordered: {positive} and {negative} '
                       'have opposite sorting signs')
    logger.debug('(m-1)-point conditions with m=%d: %s', m, report)
    return report
