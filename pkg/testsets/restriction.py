"""Restriction of a power-sum form to a k-point pattern.

On a point with values a_1, ..., a_s repeated m_1, ..., m_s times (zeros
elsewhere) every power sum becomes M_r = m_1 a_1^r + ... + m_s a_s^r.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import sympy

from core.exceptions import PatternError
from testsets.univariate import UnivariatePoly, to_fraction, to_rational

logger = logging.getLogger(__name__)


def value_symbols(size):
    return sympy.symbols(f'a1:{size + 1}')


@lru_cache(maxsize=None)
def restricted_power_sum(r, multiplicities):
    symbols = value_symbols(len(multiplicities))
    return sympy.Poly(sum(m * a ** r for m, a in zip(multiplicities, symbols)),
                      *symbols, domain='QQ')


@lru_cache(maxsize=4096)
def restricted_term(term, multiplicities):
    symbols = value_symbols(len(multiplicities))
    result = sympy.Poly(1, *symbols, domain='QQ')
    for j, k in term.factors:
        result *= restricted_power_sum(j, multiplicities) ** k
    return result


@dataclass(frozen=True)
class RestrictedForm:
    """``poly`` is a form in the pattern's values a1, ..., as."""
    pattern: object
    poly: sympy.Poly
    do_not_call_in_templates = True

    @property
    def symbols(self):
        return self.poly.gens

    def __call__(self, *values):
        return to_fraction(self.poly.eval(tuple(to_rational(v) for v in values)))

    def terms(self):
        """(exponents, coefficient) pairs, largest monomial first."""
        return [(monomial, to_fraction(coefficient)) for monomial, coefficient in self.poly.terms()]


def restrict(form, pattern):
    pattern.check(form.n)
    multiplicities = pattern.multiplicities
    symbols = value_symbols(len(multiplicities))
    poly = sympy.Poly(0, *symbols, domain='QQ')
    for term, coefficient in form.terms:
        poly += restricted_term(term, multiplicities) * to_rational(coefficient)
    logger.debug('restricted %d terms to pattern %s', len(form.terms), pattern)
    return RestrictedForm(pattern, poly)


def dehomogenize(restricted):
    """Set a2 = 1 in a restriction to a two-value pattern."""
    if restricted.pattern.size != 2:
        raise PatternError(
            f'Only two-value patterns dehomogenize to one variable, got {restricted.pattern}')
    a1, a2 = restricted.symbols
    univariate = restricted.poly.eval(a2, 1)
    if not isinstance(univariate, sympy.Poly):
        return UnivariatePoly((to_fraction(univariate),))
    return UnivariatePoly(tuple(
        reversed([to_fraction(c) for c in sympy.Poly(univariate.as_expr(), a1).all_coeffs()])))


def constant_value(form, pattern):
    """Value of ``form`` on a one-value pattern with the value 1."""
    if pattern.size != 1:
        raise PatternError(f'Expected a one-value pattern, got {pattern}')
    total = Fraction(pattern.total)
    return sum((coefficient * total ** sum(k for _, k in term.factors)
                for term, coefficient in form.terms), Fraction(0))
