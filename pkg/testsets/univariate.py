"""Exact real-root analysis of univariate rational polynomials.

Nonnegativity on the real line is decided by Sturm sequences on square-free
parts; failing polynomials come with a rational point where they are
strictly negative.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction

import sympy

from core.exceptions import CertificateFailure

logger = logging.getLogger(__name__)

X = sympy.Symbol('x')


def to_fraction(value):
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


def to_rational(value):
    value = Fraction(value)
    return sympy.Rational(value.numerator, value.denominator)


@dataclass(frozen=True)
class UnivariatePoly:
    """Rational coefficients in ascending degree, without trailing zeros."""
    coefficients: tuple = ()
    do_not_call_in_templates = True

    def __post_init__(self):
        coefficients = [Fraction(c) for c in self.coefficients]
        while coefficients and coefficients[-1] == 0:
            coefficients.pop()
        object.__setattr__(self, 'coefficients', tuple(coefficients))

    @classmethod
    def from_poly(cls, poly):
        return cls(tuple(reversed([to_fraction(c) for c in poly.all_coeffs()])))

    @property
    def poly(self):
        if self.is_zero():
            return sympy.Poly(0, X, domain='QQ')
        return sympy.Poly([to_rational(c) for c in reversed(self.coefficients)], X, domain='QQ')

    def is_zero(self):
        return not self.coefficients

    @property
    def degree(self):
        return len(self.coefficients) - 1

    @property
    def leading_coefficient(self):
        return self.coefficients[-1] if self.coefficients else Fraction(0)

    def __call__(self, x):
        value = Fraction(0)
        for coefficient in reversed(self.coefficients):
            value = value * x + coefficient
        return value

    def __sub__(self, other):
        size = max(len(self.coefficients), len(other.coefficients))
        mine = self.coefficients + (Fraction(0),) * (size - len(self.coefficients))
        theirs = other.coefficients + (Fraction(0),) * (size - len(other.coefficients))
        return UnivariatePoly(tuple(a - b for a, b in zip(mine, theirs)))

    def scale(self, scalar):
        return UnivariatePoly(tuple(Fraction(scalar) * c for c in self.coefficients))

    def derivative(self):
        return UnivariatePoly(tuple(i * c for i, c in enumerate(self.coefficients) if i))

    def deflate(self, root):
        """Quotient by (x - root); ``root`` must be a root."""
        quotient = []
        carry = Fraction(0)
        for coefficient in reversed(self.coefficients):
            carry = carry * root + coefficient
            quotient.append(carry)
        if quotient.pop() != 0:
            raise ArithmeticError(f'{root} is not a root of {self}')
        return UnivariatePoly(tuple(reversed(quotient)))

    def even_part_coefficients(self):
        """Coefficients of x^{2i}, highest power first (for even polynomials)."""
        return tuple(reversed(self.coefficients[::2]))

    def __str__(self):
        if self.is_zero():
            return '0'
        pieces = []
        for power in range(self.degree, -1, -1):
            coefficient = self.coefficients[power]
            if not coefficient:
                continue
            sign = '-' if coefficient < 0 else '+'
            magnitude = abs(coefficient)
            text = '' if magnitude == 1 and power else str(magnitude)
            if power:
                monomial = 'x' if power == 1 else f'x^{power}'
                text = f'{text} {monomial}' if text else monomial
            pieces.append((sign, text))
        first_sign, first = pieces[0]
        rendered = ('-' if first_sign == '-' else '') + first
        return rendered + ''.join(f' {sign} {text}' for sign, text in pieces[1:])


@dataclass(frozen=True)
class NonnegResult:
    nonnegative: bool
    interval: tuple = None
    witness: Fraction = None


def square_free_part(f):
    return UnivariatePoly.from_poly(f.poly.sqf_part())


def sturm_sequence(f):
    return [UnivariatePoly.from_poly(p) for p in f.poly.sturm()]


def _sign_at_infinity(f, negative):
    sign = 1 if f.leading_coefficient > 0 else -1
    if negative and f.degree % 2:
        sign = -sign
    return sign


def sign_variations(sequence, x):
    """Sign changes of the sequence at x (x may be +/-inf)."""
    signs = []
    for p in sequence:
        if p.is_zero():
            continue
        if x in (float('inf'), float('-inf')):
            signs.append(_sign_at_infinity(p, x < 0))
            continue
        value = p(x)
        if value:
            signs.append(1 if value > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots(sequence, lo=float('-inf'), hi=float('inf')):
    """Number of distinct real roots in (lo, hi] of the first sequence member."""
    return sign_variations(sequence, lo) - sign_variations(sequence, hi)


def cauchy_bound(f):
    """Every real root x of f satisfies |x| < cauchy_bound(f)."""
    leading = f.leading_coefficient
    return 1 + max((abs(c / leading) for c in f.coefficients[:-1]), default=Fraction(0))


def _bisect_roots(p, sequence, lo, hi):
    """Isolating intervals of p in (lo, hi], or the first rational root met."""
    intervals = []
    stack = [(lo, hi)]
    while stack:
        lo, hi = stack.pop()
        count = count_real_roots(sequence, lo, hi)
        if count == 0:
            continue
        if count == 1:
            intervals.append((lo, hi))
            continue
        middle = (lo + hi) / 2
        if p(middle) == 0:
            return intervals, middle
        stack.append((middle, hi))
        stack.append((lo, middle))
    return intervals, None


def isolate_real_roots(f):
    """Disjoint rational intervals, one per distinct real root of f.

    An interval (lo, hi) with lo < hi holds exactly one root in (lo, hi) and
    none at its endpoints; a rational root r met during bisection is reported
    as (r, r).
    """
    if f.is_zero():
        raise ValueError('The zero polynomial has no isolated roots')
    p = square_free_part(f)
    exact = []
    while p.degree > 0:
        bound = cauchy_bound(p)
        intervals, root = _bisect_roots(p, sturm_sequence(p), -bound, bound)
        if root is None:
            break
        exact.append(root)
        p = p.deflate(root)
    else:
        intervals = []
    if exact and intervals:
        sequence = sturm_sequence(p)
        separated = []
        for lo, hi in intervals:
            while any(lo <= root <= hi for root in exact):
                middle = (lo + hi) / 2
                if p(middle) == 0:
                    lo = hi = middle
                    break
                if count_real_roots(sequence, lo, middle):
                    hi = middle
                else:
                    lo = middle
            separated.append((lo, hi))
        intervals = separated
    roots = [(root, root) for root in exact] + intervals
    return sorted(roots)


def refine_root(f, interval, width):
    """Shrink an isolating interval of a square-free f below ``width``."""
    lo, hi = interval
    sequence = sturm_sequence(f)
    while hi - lo >= width:
        middle = (lo + hi) / 2
        if f(middle) == 0:
            return middle, middle
        if count_real_roots(sequence, lo, middle):
            hi = middle
        else:
            lo = middle
    return lo, hi


def _negative_near(f, sequence, interval):
    """A point next to a sign-changing root of f in ``interval`` where f < 0."""
    lo, hi = interval
    if lo == hi:
        epsilon = Fraction(1)
        while True:
            lo, hi = interval[0] - epsilon, interval[1] + epsilon
            if f(lo) and f(hi) and count_real_roots(sequence, lo, hi) == 1:
                break
            epsilon /= 2
    for x in (lo, hi):
        if f(x) < 0:
            return x
    raise CertificateFailure(f'No sign change of {f} on ({lo}, {hi})')


def univariate_nonneg(f):
    """Decide f(x) >= 0 for every real x."""
    if f.is_zero():
        return NonnegResult(True)
    if f.degree == 0:
        if f.leading_coefficient > 0:
            return NonnegResult(True)
        return NonnegResult(False, (Fraction(0), Fraction(0)), Fraction(0))
    bound = cauchy_bound(f)
    if f.leading_coefficient < 0:
        return NonnegResult(False, (bound, bound + 1), bound)
    if f.degree % 2:
        return NonnegResult(False, (-bound - 1, -bound), -bound)
    _, factors = f.poly.sqf_list()
    square_free = sympy.Poly(1, X, domain='QQ')
    even = sympy.Poly(1, X, domain='QQ')
    odd = sympy.Poly(1, X, domain='QQ')
    for factor, multiplicity in factors:
        square_free *= factor
        if multiplicity % 2:
            odd *= factor
        else:
            even *= factor
    square_free = UnivariatePoly.from_poly(square_free)
    even = UnivariatePoly.from_poly(even)
    if count_real_roots(sturm_sequence(square_free)) == count_real_roots(sturm_sequence(even)):
        return NonnegResult(True)
    odd = UnivariatePoly.from_poly(odd)
    odd_sequence = sturm_sequence(odd)
    sequence = sturm_sequence(square_free)
    for interval in isolate_real_roots(square_free):
        lo, hi = interval
        if lo == hi:
            if odd(lo):
                continue
        elif not count_real_roots(odd_sequence, lo, hi):
            continue
        witness = _negative_near(f, sequence, interval)
        logger.debug('%s is negative at %s', f, witness)
        return NonnegResult(False, interval, witness)
    raise CertificateFailure(f'Odd-multiplicity root of {f} not located')


def certified_lower_bound(numerator, denominator, attempts=40):
    """A rational t with numerator - t * denominator >= 0 on the real line.

    ``denominator`` must be positive everywhere. t is within a small relative
    margin of the infimum of numerator / denominator.
    """
    if numerator.degree > denominator.degree:
        raise CertificateFailure(f'{numerator} / {denominator} is unbounded')
    if numerator.degree < denominator.degree:
        at_infinity = Fraction(0)
    else:
        at_infinity = numerator.leading_coefficient / denominator.leading_coefficient
    candidates = [at_infinity, numerator(0) / denominator(0)]
    critical = (UnivariatePoly.from_poly(
        numerator.derivative().poly * denominator.poly
        - numerator.poly * denominator.derivative().poly))
    if not critical.is_zero() and critical.degree > 0:
        for interval in isolate_real_roots(critical):
            lo, hi = refine_root(square_free_part(critical), interval, Fraction(1, 10 ** 12))
            x = (lo + hi) / 2
            candidates.append(numerator(x) / denominator(x))
    estimate = min(candidates)
    if univariate_nonneg(numerator - denominator.scale(estimate)).nonnegative:
        return estimate
    margin = max(abs(estimate), Fraction(1)) * Fraction(1, 10 ** 9)
    for _ in range(attempts):
        bound = estimate - margin
        if univariate_nonneg(numerator - denominator.scale(bound)).nonnegative:
            return bound
        margin *= 4
    raise CertificateFailure(f'No certified lower bound for {numerator} / {denominator}')
